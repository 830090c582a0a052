#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! Machine parameters for the Roofline estimate. Bandwidths and rates in SI
//! units (bytes/s, flops/s). mem_bandwidth is the measured value predictions
//! use; the theoretical number and the tensor rate are stored but unused.
struct HardwareSpec {
  std::string name;
  double mem_bandwidth = 0;              // measured
  double mem_bandwidth_theoretical = 0;
  double peak_fp64 = 0;                  // vector FMA
  double peak_fp64_tensor = 0;
  double sm_count = 0;
  double shared_mem_per_unit = 0;        // bytes
  double hbm_capacity = 0;               // bytes

  void validate() const;
};

//! The five modeled kernels. Traffic and flop closed forms drop all terms
//! that do not involve m.
enum class Kernel { tsmttsm, tsmRttsmR, tsmmttsmm, tsqr, hhqr_readwrite };

enum class ModelMethod { cholqr2, svqb2, svqb2_naive, tsqr };

//! bytes(m,n): 8*m*n for the single-read kernels, 16*m*n for hhqr_readwrite
//! (X read once, Q written back).
double kernel_bytes(Kernel k, std::uint64_t m, std::uint64_t n);

//! flops(m,n): 2/3/4 * m*n^2 for the Gram kernels, 2*m*n^2 for tsqr (the
//! lower bound) and hhqr_readwrite.
double kernel_flops(Kernel k, std::uint64_t m, std::uint64_t n);

//! Arithmetic intensity in flops/byte: n/4, 3n/8, n/2, n/4, n/8. Exact in
//! FP64 (power-of-two denominators) and independent of m.
double intensity(Kernel k, std::uint64_t n);

//! M = peak_fp64 / mem_bandwidth.
double machine_balance(const HardwareSpec& hw);

//! min(peak_fp64, I * mem_bandwidth).
double roofline_rate(const HardwareSpec& hw, double i);

//! Roofline time estimate. Memory-bound cases (I < M) are computed as
//! bytes/bandwidth exactly, compute-bound ones as flops/peak.
double predict_time(const HardwareSpec& hw, Kernel k, std::uint64_t m, std::uint64_t n);

//! Sum of predict_time over the method's kernel sequence:
//!   cholqr2     = tsmttsm + tsmRttsmR
//!   svqb2       = tsmttsm + tsmmttsmm
//!   svqb2_naive = tsmttsm + explicit X*B pass (16*m*n bytes, 2*m*n^2 flops)
//!                 + tsmttsm
//!   tsqr        = single tsqr kernel
double composite_time(const HardwareSpec& hw, ModelMethod method, std::uint64_t m,
                      std::uint64_t n);

//! Built-in database: H100, B100, MI300X, MI350X. H100 uses the measured
//! 2.15e12 bytes/s bandwidth for predictions; the others ship theoretical
//! values in both bandwidth fields.
const std::vector<HardwareSpec>& hardware_database();
std::optional<HardwareSpec> find_hardware(const std::string& name);

//! Plain-text spec file: UTF-8 "key = value" lines, keys exactly the
//! HardwareSpec field names, '#' comments and blank lines allowed.
HardwareSpec load_hardware_spec(const std::string& path);
std::string format_hardware_spec(const HardwareSpec& hw);

}  // namespace skinnyqr
