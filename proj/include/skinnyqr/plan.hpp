#pragma once

#include <cstddef>

#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! Blocked-reduction plan for the tall-skinny kernels: k contiguous row
//! blocks, each streamed in panels of b rows. Blocks are b-aligned, so
//! k * ceil(m/(k*b)) * b covers all m rows exactly once (trailing panels and
//! blocks may be short or empty).
struct PanelPlan {
  std::size_t num_blocks = 1;  // k
  std::size_t panel_rows = 1;  // b
  bool deterministic = true;

  void validate() const {
    if (num_blocks < 1 || panel_rows < 1)
      throw ArgumentError("PanelPlan: num_blocks and panel_rows must be >= 1");
  }

  //! Rows per full block (a multiple of panel_rows).
  std::size_t rows_per_block(std::size_t m) const {
    const std::size_t kb = num_blocks * panel_rows;
    return ((m + kb - 1) / kb) * panel_rows;
  }

  std::size_t block_begin(std::size_t m, std::size_t block) const {
    const std::size_t b = block * rows_per_block(m);
    return b < m ? b : m;
  }

  std::size_t block_end(std::size_t m, std::size_t block) const {
    const std::size_t e = (block + 1) * rows_per_block(m);
    return e < m ? e : m;
  }
};

//! Default Gram-kernel plan: k = worker count, b sized so the b x n panel
//! workspace is about 32 KiB (cache resident), clamped to b >= n.
PanelPlan default_gram_plan(std::size_t m, std::size_t n);

//! Default TSQR plan: b is the largest value with (b+n)*n FP64 workspace
//! <= 192 KiB, clamped to b >= 2n. Rejects n > 64.
PanelPlan default_tsqr_plan(std::size_t m, std::size_t n);

}  // namespace skinnyqr
