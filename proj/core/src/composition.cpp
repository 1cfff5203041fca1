#include "zel/composition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "zel/error.hpp"
#include "zel/involution.hpp"

namespace zel {

std::string_view to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string_view to_string(Parametrization p) {
  return p == Parametrization::Zelevinsky ? "Z" : "L";
}

namespace {

std::string triple(int n, int d, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) + ")";
}

std::vector<std::vector<int>> prefix_chain(const std::vector<Factor>& factors) {
  std::vector<std::vector<int>> chain;
  std::vector<int> acc;
  for (const auto& f : factors) {
    acc.push_back(f.index);
    auto level = acc;
    std::sort(level.begin(), level.end());
    chain.push_back(std::move(level));
  }
  return chain;
}

}  // namespace

CompositionReport compose_zelevinsky(int n, int d, int k, Sign sign, Line line) {
  CompositionReport report;
  report.params = make_params(n, d, k, line);
  report.basis = Parametrization::Zelevinsky;
  report.sign = sign;

  // defined_indices is 0, then the valid j range ascending. With Plus the
  // socle is the largest index, so the submodule order is descending.
  auto indices = defined_indices(report.params);
  if (sign == Sign::Plus) std::reverse(indices.begin(), indices.end());
  for (int j : indices) report.factors.push_back({j, r_multisegment(report.params, j)});

  report.socle = report.factors.front().ms;
  report.cosocle = report.factors.back().ms;
  report.lattice = prefix_chain(report.factors);
  return report;
}

CompositionReport compose_langlands(int n, int d, int k, Sign sign, Line line) {
  const CompositionReport transposed = compose_zelevinsky(d, n, k, sign, line);

  CompositionReport report;
  report.params = make_params(n, d, k, line);
  report.basis = Parametrization::Langlands;
  report.sign = sign;

  std::map<Multisegment, int> direct;
  for (int j : defined_indices(report.params)) direct.emplace(r_multisegment(report.params, j), j);

  for (const auto& f : transposed.factors) {
    Multisegment image = mw_dual(f.ms);
    auto it = direct.find(image);
    if (it == direct.end()) {
      throw Error(Errc::InternalInconsistency,
                  "involution of factor " + f.ms.to_string() + " of " + triple(d, n, k) +
                      " is " + image.to_string() + ", not an r_j of " + triple(n, d, k));
    }
    report.factors.push_back({it->second, std::move(image)});
  }
  if (report.factors.size() != direct.size()) {
    throw Error(Errc::InternalInconsistency,
                "factor counts differ between " + triple(d, n, k) + " and " + triple(n, d, k));
  }

  report.socle = report.factors.front().ms;
  report.cosocle = report.factors.back().ms;
  const auto indices = defined_indices(report.params);
  const int expected_socle = sign == Sign::Plus ? 0 : indices.back();
  if (report.factors.front().index != expected_socle) {
    throw Error(Errc::InternalInconsistency,
                "Langlands socle of " + triple(n, d, k) + " is r_" +
                    std::to_string(report.factors.front().index) + ", expected r_" +
                    std::to_string(expected_socle));
  }
  report.lattice = prefix_chain(report.factors);
  return report;
}

std::pair<Multisegment, Multisegment> socle_cosocle(int n, int d, int k, Sign sign, Line line) {
  if (n < 1 || d < 1 || k < 1 || k > n + d - 1) {
    throw Error(Errc::OutOfRange, "socle_cosocle needs 1 <= k <= n+d-1, got " + triple(n, d, k));
  }
  const Multisegment concatenated = speh(n, d, half(-k), line) + speh(n, d, half(k), line);
  const Multisegment involuted = mw_dual(speh(d, n, half(-k), line) + speh(d, n, half(k), line));
  if (sign == Sign::Minus) return {concatenated, involuted};
  return {involuted, concatenated};
}

std::vector<LatticeLevel> lattice_chain(int n, int d, int k, Sign sign, Line line) {
  if (n < 1 || d < 1 || k < 1 || k > n + d - 1) {
    throw Error(Errc::OutOfRange, "lattice_chain needs 1 <= k <= n+d-1, got " + triple(n, d, k));
  }
  const CompositionReport report = compose_zelevinsky(n, d, k, sign, line);
  std::map<int, Multisegment> by_index;
  for (const auto& f : report.factors) by_index.emplace(f.index, f.ms);

  std::vector<LatticeLevel> out;
  for (const auto& level : report.lattice) {
    LatticeLevel l{level, {}};
    for (int j : level) l.members.push_back(by_index.at(j));
    out.push_back(std::move(l));
  }
  return out;
}

bool is_essentially_speh(const Multisegment& a) {
  if (a.empty()) return false;
  const auto segs = a.segments();
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].card() != segs[0].card()) return false;
    if (segs[i].begin() != segs[i - 1].begin() + 1) return false;
  }
  return true;
}

ConjectureResult conjecture_jh(const Multisegment& pi1, const Multisegment& pi2, SideCondition side) {
  if (!is_essentially_speh(pi1) || !is_essentially_speh(pi2)) {
    throw Error(Errc::NotSpeh, "conjecture_jh needs two essentially Speh multisegments, got " +
                                   pi1.to_string() + " and " + pi2.to_string());
  }
  if (pi1.line() != pi2.line()) {
    throw Error(Errc::LineMismatch, "conjecture_jh inputs are on different lines");
  }
  // Number so that the second ladder starts no earlier than the first.
  const bool swap = pi2[0].begin() < pi1[0].begin();
  const auto lower = (swap ? pi2 : pi1).segments();
  const auto upper = (swap ? pi1 : pi2).segments();
  const int n = static_cast<int>(lower.size());
  const int m = static_cast<int>(upper.size());

  ConjectureResult result;
  result.factors.push_back({0, pi1 + pi2});
  for (int j = 1; j <= std::min(n, m); ++j) {
    if (!precedes(lower[n - 1], upper[j - 1])) continue;
    if (side == SideCondition::Verbatim && !(1 <= n - j - 1)) continue;
    std::vector<Segment> segs;
    for (int i = 0; i < n - j; ++i) segs.push_back(lower[i]);
    for (int i = j; i < m; ++i) segs.push_back(upper[i]);
    for (int i = 0; i < j; ++i) {
      segs.push_back(seg_union(lower[n - j + i], upper[i]));
      if (auto cap = seg_intersection(lower[n - j + i], upper[i])) segs.push_back(*cap);
    }
    result.index_set.push_back(j);
    result.factors.push_back({j, Multisegment(pi1.line(), std::move(segs))});
  }
  return result;
}

}  // namespace zel
