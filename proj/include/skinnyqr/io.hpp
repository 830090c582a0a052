#pragma once

#include <string>

#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! Binary matrix file format "TSKM", version 1 (little endian):
//!   offset 0   magic "TSKM" (4 bytes)
//!   offset 4   version, u8 (= 1)
//!   offset 5   element size in bytes, u32 (= 8, FP64)
//!   offset 9   rows m, u64
//!   offset 17  cols n, u64
//!   offset 25  payload: m*n FP64 values in column order
//! The payload matches the in-memory layout, so I/O is a flat copy and
//! write/read round-trips bit-exactly.
void matrix_write(const std::string& path, const DenseMatrix& x);
DenseMatrix matrix_read(const std::string& path);

inline constexpr std::size_t kMatrixHeaderBytes = 25;

}  // namespace skinnyqr
