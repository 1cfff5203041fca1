#include "zel/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <thread>

#include "zel/composition.hpp"
#include "zel/error.hpp"

namespace zel {

bool SweepReport::all_agree() const {
  return std::all_of(cells.begin(), cells.end(), [](const SweepCell& c) { return c.agree; });
}

std::size_t SweepReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const SweepCell& c) { return !c.agree; }));
}

namespace {

void run_cell(Oracle& oracle, SweepCell& cell) {
  try {
    std::vector<Multisegment> expected;
    for (const auto& f : compose_zelevinsky(cell.n, cell.d, cell.k).factors) expected.push_back(f.ms);
    std::sort(expected.begin(), expected.end());
    const std::vector<Multisegment> got = oracle.compose(cell.n, cell.d, cell.k).factors;

    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                        std::back_inserter(cell.oracle_only));
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                        std::back_inserter(cell.theorem_only));
    cell.agree = cell.oracle_only.empty() && cell.theorem_only.empty();
  } catch (const Error& e) {
    cell.error = e.what();
    cell.agree = false;
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts) {
  SweepReport report;
  for (int n = 1; n <= opts.nmax; ++n) {
    for (int d = 1; d <= opts.dmax; ++d) {
      const int kmax = opts.kmax.value_or(n + d + 1);
      for (int k = 0; k <= kmax; ++k) report.cells.push_back({n, d, k, false, {}, {}, {}});
    }
  }

  Oracle oracle(opts.oracle);
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (auto& cell : report.cells) run_cell(oracle, cell);
    return report;
  }

  // Cells are ordered by (n, d, k), so workers pulling from the front tend to
  // find the lower-rank cells they recurse into already cached.
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < report.cells.size(); i = next++) run_cell(oracle, report.cells[i]);
    });
  }
  for (auto& w : workers) w.join();
  return report;
}

}  // namespace zel
