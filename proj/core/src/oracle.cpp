#include "zel/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "zel/error.hpp"
#include "zel/involution.hpp"

namespace zel {

std::vector<Multisegment> segment_product(const Segment& s1, const Segment& s2) {
  if (s1.line() != s2.line()) {
    throw Error(Errc::LineMismatch, "segment_product of " + s1.to_string() + " and " +
                                        s2.to_string() + " on different lines");
  }
  std::vector<Multisegment> out{Multisegment(s1.line(), {s1, s2})};
  if (linked(s1, s2)) {
    std::vector<Segment> merged{seg_union(s1, s2)};
    if (auto cap = seg_intersection(s1, s2)) merged.push_back(*cap);
    out.emplace_back(s1.line(), std::move(merged));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CuspSupport end_multiset_constraint(const SpehPairParams& p, int cb) {
  if (cb < p.n || cb > 2 * p.n) {
    throw Error(Errc::OutOfRange, "end constraint needs n <= cb <= 2n, got cb=" + std::to_string(cb) +
                                      " with n=" + std::to_string(p.n));
  }
  std::vector<HalfExp> exps;
  for (const auto& s : p.upper) exps.push_back(s.end());
  for (int i = 0; i < cb - p.n; ++i) exps.push_back(p.lower[i].end());
  return make_support(p.line, std::move(exps));
}

bool symmetry_constraint(const Multisegment& b) {
  std::vector<HalfExp> negated;
  for (const auto& s : b) negated.push_back(-s.end());
  std::sort(negated.begin(), negated.end());
  return negated == beginnings(b).exps;
}

std::optional<Multisegment> short_factor(const SpehPairParams& p) {
  if (p.k < p.d || p.k > p.n + p.d - 1) return std::nullopt;
  return mw_dual(mw_dual(p.lower_ms()) + mw_dual(p.upper_ms()));
}

OracleResult Oracle::compose(int n, int d, int k, Line line) {
  const Key key{n, d, k, line.name()};
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  OracleResult result = compute(n, d, k, line);
  std::lock_guard lock(mu_);
  return cache_.try_emplace(key, std::move(result)).first->second;
}

OracleResult Oracle::compute(int n, int d, int k, const Line& line) {
  const SpehPairParams p = make_params(n, d, k, line);
  const Multisegment top = p.lower_ms() + p.upper_ms();

  OracleResult r;
  r.n = n;
  r.d = d;
  r.k = k;
  r.line = line;
  auto admit = [&](Multisegment f, FactorCertificate cert) {
    cert.factor = f;
    r.factors.push_back(std::move(f));
    r.certificates.push_back(std::move(cert));
  };

  if (k == 0 || k >= n + d) {
    // Supports too far apart (or identical): the product is irreducible.
    admit(top, {top, "irreducible", {}, std::nullopt});
  } else if (n == 1 && d == 1) {
    for (auto& f : segment_product(p.lower[0], p.upper[0])) {
      admit(f, {f, "segment_product", {}, std::nullopt});
    }
  } else if (d == 1) {
    // Transpose: the involution carries the (1,n,k) series onto this one,
    // and (1,n,k) recurses on its d = n down to the segment product.
    const OracleResult transposed = compose(1, n, k, line);
    for (const auto& f : transposed.factors) {
      Multisegment g = mw_dual(f);
      admit(g, {g, "transpose", {"mw_dual"}, f});
    }
  } else {
    const OracleResult lower_rank = compose(n, d - 1, k, line);
    std::map<Multisegment, Multisegment> derivative_targets;
    for (const auto& f : lower_rank.factors) derivative_targets.emplace(twist_ms(f, half(-1)), f);

    const std::vector<Multisegment> candidates = down_closure(top, opts_.closure);
    std::map<Multisegment, Multisegment> preimage;  // h.d. -> candidate
    for (const auto& b : candidates) {
      const int cb = static_cast<int>(card(b));
      if (cb != 2 * n) continue;
      if (ends(b) != end_multiset_constraint(p, cb)) continue;
      if (!symmetry_constraint(b)) continue;
      const Multisegment hd = minus_ends(b);
      auto hit = derivative_targets.find(hd);
      if (hit == derivative_targets.end()) continue;
      if (auto [it, fresh] = preimage.emplace(hd, b); !fresh) {
        throw Error(Errc::InternalInconsistency,
                    "highest derivative " + hd.to_string() + " reached by both " +
                        it->second.to_string() + " and " + b.to_string());
      }
      admit(b, {b, "derivative", {"closure", "card", "ends", "symmetry", "derivative"}, hit->first});
    }

    if (auto s = short_factor(p)) {
      if (!std::binary_search(candidates.begin(), candidates.end(), *s)) {
        throw Error(Errc::InternalInconsistency,
                    "short factor " + s->to_string() + " is not below " + top.to_string());
      }
      std::vector<std::string> filters{"closure"};
      const int cb = static_cast<int>(card(*s));
      if (cb >= n && cb <= 2 * n) {
        filters.push_back("card");
        if (ends(*s) == end_multiset_constraint(p, cb)) filters.push_back("ends");
      }
      if (symmetry_constraint(*s)) filters.push_back("symmetry");
      admit(*s, {*s, "short_factor", std::move(filters), std::nullopt});
    }
  }

  std::vector<std::size_t> order(r.factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return r.factors[a] < r.factors[b]; });
  OracleResult sorted = r;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.factors[i] = r.factors[order[i]];
    sorted.certificates[i] = r.certificates[order[i]];
  }
  if (std::adjacent_find(sorted.factors.begin(), sorted.factors.end()) != sorted.factors.end()) {
    throw Error(Errc::InternalInconsistency, "oracle produced a repeated factor");
  }
  return sorted;
}

OracleResult oracle_composition(int n, int d, int k, const OracleOptions& opts, Line line) {
  Oracle oracle(opts);
  return oracle.compose(n, d, k, line);
}

}  // namespace zel
