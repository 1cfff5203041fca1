#ifndef ZEL_SWEEP_HPP
#define ZEL_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "zel/multisegment.hpp"
#include "zel/oracle.hpp"

namespace zel {

struct SweepOptions {
  int nmax = 4;
  int dmax = 4;
  std::optional<int> kmax;  // per cell default n + d + 1
  int jobs = 1;
  OracleOptions oracle;
};

struct SweepCell {
  int n = 0;
  int d = 0;
  int k = 0;
  bool agree = false;
  std::vector<Multisegment> oracle_only;
  std::vector<Multisegment> theorem_only;
  std::string error;  // set when the oracle (or the theorem side) threw
};

struct SweepReport {
  std::vector<SweepCell> cells;  // sorted by (n, d, k)

  bool all_agree() const;
  std::size_t disagreements() const;
};

/// Oracle against compose_zelevinsky on every 1 <= n <= nmax, 1 <= d <= dmax,
/// 0 <= k <= kmax. Cells are independent; with jobs > 1 they are spread over
/// worker threads sharing one oracle cache. The report does not depend on
/// the job count.
SweepReport run_sweep(const SweepOptions& opts);

}  // namespace zel

#endif  // ZEL_SWEEP_HPP
