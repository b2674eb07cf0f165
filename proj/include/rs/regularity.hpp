#ifndef RS_REGULARITY_HPP
#define RS_REGULARITY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace rs {

/// Deterministic finite automaton with output, reading base-k digits
/// most-significant-first.  n = 0 feeds the single digit 0.
struct Dfao {
  int base = 2;
  std::size_t initial = 0;
  std::vector<std::vector<std::size_t>> next;  // [state][digit]
  std::vector<long long> output;               // [state]

  std::size_t state_count() const { return next.size(); }
  long long eval(std::uint64_t n) const;
};

/// The three-state base-4 automaton generating (dM(n)): q0/1, q1/1, q2/-1.
Dfao fig2_automaton();

/// Moore partition refinement; preserves eval on every input.
Dfao minimize(const Dfao& d);

using SeqAccessor = std::function<long long(std::uint64_t)>;

struct KernelNode {
  std::uint32_t e = 0;
  std::uint64_t c = 0;  // subsequence n -> f(k^e n + c)
};

/// Breadth-first closure of the k-kernel under fingerprint identification.
struct KernelClosure {
  int base = 2;
  std::uint32_t fingerprint_len = 0;
  bool closed = false;
  std::vector<KernelNode> nodes;
  std::vector<std::vector<std::size_t>> edges;        // node x digit -> node
  std::vector<std::vector<long long>> fingerprints;   // per node, length P
};

/// Nodes are identified when their first P values coincide; stops when no
/// new fingerprint appears, or reports closed=false once cap is reached.
KernelClosure kernel_closure(const SeqAccessor& f, int base, std::uint32_t P,
                             std::size_t cap);

/// Kernel-to-DFAO construction.  The closure's edges evaluate naturally
/// least-significant-digit-first; the result is reversed into the msd-first
/// convention of Dfao::eval and then minimized.  Throws on non-closed input.
Dfao synthesize_dfao(const KernelClosure& c);

/// A guessed linear representation: basis kernel nodes plus one rational row
/// per basis child expressing it in the basis on the fingerprint window.
struct LinRep {
  int base = 2;
  std::uint32_t fingerprint_len = 0;
  bool finitely_generated = false;
  std::vector<KernelNode> basis;
  struct Relation {
    KernelNode child;
    std::vector<mpq_class> coeffs;  // child = sum coeffs[i] * basis[i]
  };
  std::vector<Relation> relations;
  std::uint64_t verified_to = 0;

  std::size_t rank() const { return basis.size(); }
};

/// Greedy basis construction with exact rational row reduction over the
/// length-P fingerprints.  Requires P >= 2*cap.
LinRep guess_linear_representation(const SeqAccessor& f, int base,
                                   std::uint32_t P, std::size_t cap);

/// Checks every recorded relation exactly for all n <= N.
bool verify_linear_representation(const LinRep& rep, const SeqAccessor& f,
                                  std::uint64_t N);

}  // namespace rs

#endif
