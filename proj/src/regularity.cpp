#include "rs/regularity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rs {

long long Dfao::eval(std::uint64_t n) const {
  int digits[66];
  int count = 0;
  if (n == 0) {
    digits[count++] = 0;
  } else {
    while (n > 0) {
      digits[count++] = int(n % std::uint64_t(base));
      n /= std::uint64_t(base);
    }
  }
  std::size_t st = initial;
  for (int i = count - 1; i >= 0; --i) st = next[st][digits[i]];
  return output[st];
}

Dfao fig2_automaton() {
  Dfao d;
  d.base = 4;
  d.initial = 0;
  d.next = {{0, 1, 1, 1},   // q0: loops on 0
            {2, 1, 1, 1},   // q1: loops on 1,2,3; 0 -> q2
            {2, 2, 2, 1}};  // q2: loops on 0,1,2; 3 -> q1
  d.output = {1, 1, -1};
  return d;
}

Dfao minimize(const Dfao& d) {
  const std::size_t n = d.state_count();
  const int b = d.base;
  // reachable states only
  std::vector<std::size_t> order;
  std::vector<long long> idx(n, -1);
  order.push_back(d.initial);
  idx[d.initial] = 0;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    for (int dg = 0; dg < b; ++dg) {
      std::size_t t = d.next[order[qi]][dg];
      if (idx[t] < 0) {
        idx[t] = (long long)order.size();
        order.push_back(t);
      }
    }
  }
  const std::size_t m = order.size();
  std::vector<std::size_t> cls(m);
  {
    std::map<long long, std::size_t> by_out;
    for (std::size_t i = 0; i < m; ++i) {
      auto [it, _] = by_out.try_emplace(d.output[order[i]], by_out.size());
      cls[i] = it->second;
    }
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> ncls(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> key;
      key.reserve(b + 1);
      key.push_back(cls[i]);
      for (int dg = 0; dg < b; ++dg)
        key.push_back(cls[idx[d.next[order[i]][dg]]]);
      auto [it, _] = sig.try_emplace(std::move(key), sig.size());
      ncls[i] = it->second;
    }
    if (ncls == cls) break;
    cls = ncls;
  }
  std::size_t k = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfao out;
  out.base = b;
  out.initial = cls[0];
  out.next.assign(k, std::vector<std::size_t>(b, 0));
  out.output.assign(k, 0);
  for (std::size_t i = 0; i < m; ++i) {
    out.output[cls[i]] = d.output[order[i]];
    for (int dg = 0; dg < b; ++dg)
      out.next[cls[i]][dg] = cls[idx[d.next[order[i]][dg]]];
  }
  return out;
}

KernelClosure kernel_closure(const SeqAccessor& f, int base, std::uint32_t P,
                             std::size_t cap) {
  if (P < 1 || cap < 1)
    throw std::invalid_argument("kernel_closure: P and cap must be >= 1");
  KernelClosure c;
  c.base = base;
  c.fingerprint_len = P;

  auto fingerprint = [&](std::uint32_t e, std::uint64_t cc) {
    std::vector<long long> fp(P);
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < e; ++i) pw *= std::uint64_t(base);
    for (std::uint32_t i = 0; i < P; ++i) fp[i] = f(pw * i + cc);
    return fp;
  };

  std::map<std::vector<long long>, std::size_t> seen;
  c.nodes.push_back({0, 0});
  c.fingerprints.push_back(fingerprint(0, 0));
  seen.emplace(c.fingerprints[0], 0);

  const std::uint32_t bits_per_digit = base <= 2 ? 1 : (base <= 4 ? 2 : 6);
  std::uint32_t p_bits = 1;
  while ((std::uint64_t(1) << p_bits) < P) ++p_bits;

  for (std::size_t qi = 0; qi < c.nodes.size(); ++qi) {
    KernelNode u = c.nodes[qi];
    // fingerprint arguments base^(e+1) * (P-1) + c must stay inside 64 bits
    if ((u.e + 2) * bits_per_digit + p_bits > 62)
      throw std::overflow_error("kernel_closure: depth exceeds index range");
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < u.e; ++i) pw *= std::uint64_t(base);
    std::vector<std::size_t> row(base);
    for (int d = 0; d < base; ++d) {
      std::uint64_t cc = u.c + std::uint64_t(d) * pw;
      auto fp = fingerprint(u.e + 1, cc);
      auto it = seen.find(fp);
      if (it != seen.end()) {
        row[d] = it->second;
      } else {
        if (c.nodes.size() >= cap) {
          c.closed = false;
          c.edges.clear();
          return c;
        }
        row[d] = c.nodes.size();
        seen.emplace(fp, c.nodes.size());
        c.nodes.push_back({u.e + 1, cc});
        c.fingerprints.push_back(std::move(fp));
      }
    }
    c.edges.push_back(std::move(row));
  }
  c.closed = true;
  return c;
}

Dfao synthesize_dfao(const KernelClosure& c) {
  if (!c.closed)
    throw std::invalid_argument("synthesize_dfao: closure is not closed");
  const std::size_t q = c.nodes.size();
  const int b = c.base;
  // The closure is an lsd-first automaton: state (e,c) outputs f(c), and
  // digit d leads to (e+1, c + d k^e).  Reading msd-first instead, track the
  // map state -> final output of the lsd run over the digits read so far.
  std::vector<long long> phi0(q);
  for (std::size_t i = 0; i < q; ++i) phi0[i] = c.fingerprints[i][0];

  std::map<std::vector<long long>, std::size_t> ids;
  std::vector<std::vector<long long>> states{phi0};
  ids.emplace(phi0, 0);
  Dfao d;
  d.base = b;
  d.initial = 0;
  for (std::size_t qi = 0; qi < states.size(); ++qi) {
    if (states.size() > (std::size_t(1) << 16))
      throw std::overflow_error("synthesize_dfao: state blowup");
    std::vector<std::size_t> row(b);
    for (int dg = 0; dg < b; ++dg) {
      std::vector<long long> nphi(q);
      for (std::size_t i = 0; i < q; ++i)
        nphi[i] = states[qi][c.edges[i][dg]];
      auto it = ids.find(nphi);
      if (it == ids.end()) {
        it = ids.emplace(std::move(nphi), states.size()).first;
        states.push_back(it->first);
      }
      row[dg] = it->second;
    }
    d.next.push_back(std::move(row));
  }
  d.output.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) d.output[i] = states[i][0];
  return minimize(d);
}

namespace {

struct EchelonRow {
  std::vector<mpq_class> row;
  std::vector<mpq_class> expr;  // row as combination of basis fingerprints
  std::size_t pivot;
};

// Reduces v against the echelon rows; returns the residual and the
// combination of basis vectors that was subtracted.
std::pair<std::vector<mpq_class>, std::vector<mpq_class>> reduce(
    const std::vector<EchelonRow>& ech, std::vector<mpq_class> v,
    std::size_t basis_size) {
  std::vector<mpq_class> comb(basis_size, mpq_class(0));
  for (const auto& er : ech) {
    if (v[er.pivot] == 0) continue;
    mpq_class cf = v[er.pivot] / er.row[er.pivot];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= cf * er.row[i];
    for (std::size_t i = 0; i < er.expr.size(); ++i) comb[i] += cf * er.expr[i];
  }
  return {std::move(v), std::move(comb)};
}

std::size_t first_nonzero(const std::vector<mpq_class>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

LinRep guess_linear_representation(const SeqAccessor& f, int base,
                                   std::uint32_t P, std::size_t cap) {
  if (P < 2 * cap)
    throw std::invalid_argument(
        "guess_linear_representation: need P >= 2*cap");
  LinRep rep;
  rep.base = base;
  rep.fingerprint_len = P;

  auto fingerprint = [&](std::uint32_t e, std::uint64_t cc) {
    std::vector<mpq_class> fp(P);
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < e; ++i) pw *= std::uint64_t(base);
    for (std::uint32_t i = 0; i < P; ++i) fp[i] = mpq_class(f(pw * i + cc));
    return fp;
  };

  std::vector<EchelonRow> ech;
  auto root = fingerprint(0, 0);
  std::size_t piv = first_nonzero(root);
  if (piv == root.size()) {
    rep.finitely_generated = true;  // zero sequence: empty basis
    return rep;
  }
  rep.basis.push_back({0, 0});
  ech.push_back({std::move(root), {mpq_class(1)}, piv});

  std::vector<KernelNode> queue{{0, 0}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    KernelNode u = queue[qi];
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < u.e; ++i) pw *= std::uint64_t(base);
    for (int d = 0; d < base; ++d) {
      KernelNode child{u.e + 1, u.c + std::uint64_t(d) * pw};
      auto v = fingerprint(child.e, child.c);
      auto [residual, comb] = reduce(ech, std::move(v), rep.basis.size());
      std::size_t pc = first_nonzero(residual);
      if (pc == residual.size()) {
        rep.relations.push_back({child, std::move(comb)});
      } else {
        if (rep.basis.size() >= cap) {
          rep.finitely_generated = false;
          return rep;
        }
        rep.basis.push_back(child);
        for (auto& er : ech) er.expr.push_back(mpq_class(0));
        std::vector<mpq_class> expr;
        expr.reserve(rep.basis.size());
        for (auto& cfe : comb) expr.push_back(-cfe);
        expr.push_back(mpq_class(1));
        ech.push_back({std::move(residual), std::move(expr), pc});
        std::vector<mpq_class> unit(rep.basis.size(), mpq_class(0));
        unit.back() = 1;
        rep.relations.push_back({child, std::move(unit)});
        queue.push_back(child);
      }
    }
  }
  // pad earlier relation rows to the final basis size
  for (auto& rel : rep.relations) rel.coeffs.resize(rep.basis.size());
  rep.finitely_generated = true;
  rep.verified_to = P;
  return rep;
}

bool verify_linear_representation(const LinRep& rep, const SeqAccessor& f,
                                  std::uint64_t N) {
  if (!rep.finitely_generated) return false;
  std::vector<std::uint64_t> basis_pow(rep.basis.size());
  for (std::size_t i = 0; i < rep.basis.size(); ++i) {
    std::uint64_t pw = 1;
    for (std::uint32_t e = 0; e < rep.basis[i].e; ++e)
      pw *= std::uint64_t(rep.base);
    basis_pow[i] = pw;
  }
  for (const auto& rel : rep.relations) {
    // clear denominators once per relation; the weights are tiny
    mpz_class den(1);
    for (const auto& cf : rel.coeffs) den = lcm(den, cf.get_den());
    std::vector<long long> w(rel.coeffs.size());
    for (std::size_t i = 0; i < rel.coeffs.size(); ++i) {
      mpz_class wi = rel.coeffs[i].get_num() * (den / rel.coeffs[i].get_den());
      if (!wi.fits_slong_p()) return false;  // would need the mpq path
      w[i] = wi.get_si();
    }
    if (!den.fits_slong_p()) return false;
    const long long D = den.get_si();
    std::uint64_t child_pow = 1;
    for (std::uint32_t e = 0; e < rel.child.e; ++e)
      child_pow *= std::uint64_t(rep.base);
    for (std::uint64_t n = 0; n <= N; ++n) {
      __int128 rhs = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        rhs += (__int128)w[i] * f(basis_pow[i] * n + rep.basis[i].c);
      }
      __int128 lhs = (__int128)D * f(child_pow * n + rel.child.c);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace rs
