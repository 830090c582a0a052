#include "skinnyqr/plan.hpp"

#include <algorithm>

#include "skinnyqr/parallel.hpp"

namespace skinnyqr {

PanelPlan default_gram_plan(std::size_t m, std::size_t n) {
  (void)m;
  PanelPlan plan;
  plan.num_blocks = max_threads();
  constexpr std::size_t kPanelBytes = 32 * 1024;
  plan.panel_rows = std::max<std::size_t>(n, kPanelBytes / (8 * std::max<std::size_t>(n, 1)));
  plan.deterministic = true;
  return plan;
}

PanelPlan default_tsqr_plan(std::size_t m, std::size_t n) {
  (void)m;
  if (n > 64) throw ArgumentError("tsqr: supports up to 64 columns");
  if (n == 0) throw ArgumentError("tsqr: need at least one column");
  PanelPlan plan;
  plan.num_blocks = max_threads();
  // Largest b with (b+n)*n doubles <= 192 KiB, mirroring a fast-local-memory
  // budget; clamped to b >= 2n.
  constexpr std::size_t kWorkspaceDoubles = 192 * 1024 / 8;
  const std::size_t fit = kWorkspaceDoubles / n > n ? kWorkspaceDoubles / n - n : 0;
  plan.panel_rows = std::max<std::size_t>(2 * n, fit);
  plan.deterministic = true;
  return plan;
}

}  // namespace skinnyqr
