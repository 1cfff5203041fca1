#include "zel/involution.hpp"

#include <algorithm>
#include <optional>

namespace zel {

namespace {

// Index of a shortest segment in `segs` ending at `x` and accepted by `ok`.
template <typename Pred>
std::optional<std::size_t> shortest_ending_at(const std::vector<Segment>& segs, HalfExp x, Pred ok) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].end() != x || !ok(segs[i])) continue;
    if (!best || segs[i].card() < segs[*best].card()) best = i;
  }
  return best;
}

}  // namespace

Multisegment mw_dual(const Multisegment& a, DualTrace* trace) {
  std::vector<Segment> state(a.begin(), a.end());
  std::vector<Segment> emitted;

  while (!state.empty()) {
    HalfExp x = state.front().end();
    for (const auto& s : state) x = std::max(x, s.end());

    std::vector<std::size_t> picked;
    auto first = shortest_ending_at(state, x, [](const Segment&) { return true; });
    picked.push_back(*first);
    for (HalfExp y = x - 1;; y = y - 1) {
      const Segment& prev = state[picked.back()];
      auto next = shortest_ending_at(state, y, [&](const Segment& s) { return linked(s, prev); });
      if (!next) break;
      picked.push_back(*next);
    }

    const auto k = static_cast<std::int64_t>(picked.size());
    emitted.emplace_back(a.line(), x - (k - 1), x);

    std::vector<Segment> chain;
    std::vector<Segment> next_state;
    next_state.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (std::find(picked.begin(), picked.end(), i) == picked.end()) {
        next_state.push_back(state[i]);
        continue;
      }
      chain.push_back(state[i]);
      if (auto shorter = minus_end(state[i])) next_state.push_back(*shorter);
    }
    state = std::move(next_state);

    if (trace) {
      std::sort(chain.begin(), chain.end(),
                [](const Segment& l, const Segment& r) { return l.end() > r.end(); });
      trace->steps.push_back({emitted.back(), std::move(chain), Multisegment(a.line(), state)});
    }
  }
  return Multisegment(a.line(), std::move(emitted));
}

Multisegment mw_dual_left(const Multisegment& a, DualTrace* trace) {
  DualTrace mirrored;
  Multisegment result = hermitian_dual(mw_dual(hermitian_dual(a), trace ? &mirrored : nullptr));
  if (trace) {
    for (auto& step : mirrored.steps) {
      std::vector<Segment> chain;
      for (const auto& s : step.chain) chain.push_back(hermitian_dual(s));
      trace->steps.push_back(
          {hermitian_dual(step.emitted), std::move(chain), hermitian_dual(step.remaining)});
    }
  }
  return result;
}

}  // namespace zel
