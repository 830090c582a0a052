#include "skinnyqr/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>

namespace skinnyqr {
namespace {

constexpr char kMagic[4] = {'T', 'S', 'K', 'M'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint32_t kElemSize = 8;

void put_u32(std::ofstream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ofstream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(const unsigned char* b) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t get_u64(const unsigned char* b) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void matrix_write(const std::string& path, const DenseMatrix& x) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("matrix_write: cannot open '" + path + "'");
  out.write(kMagic, 4);
  out.put(static_cast<char>(kVersion));
  put_u32(out, kElemSize);
  put_u64(out, x.rows());
  put_u64(out, x.cols());
  // FP64 payload is stored little endian; on little-endian hosts this is the
  // in-memory representation verbatim.
  static_assert(sizeof(double) == 8);
  const std::size_t total = x.rows() * x.cols();
  out.write(reinterpret_cast<const char*>(x.data()),
            static_cast<std::streamsize>(total * sizeof(double)));
  if (!out) throw IoError("matrix_write: write failed for '" + path + "'");
}

DenseMatrix matrix_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("matrix_read: cannot open '" + path + "'");

  unsigned char header[kMatrixHeaderBytes];
  in.read(reinterpret_cast<char*>(header), kMatrixHeaderBytes);
  if (in.gcount() != static_cast<std::streamsize>(kMatrixHeaderBytes))
    throw TruncationError("matrix_read: '" + path + "' shorter than header");
  if (std::memcmp(header, kMagic, 4) != 0)
    throw FormatError("matrix_read: bad magic in '" + path + "'");
  if (header[4] != kVersion)
    throw FormatError("matrix_read: unsupported version in '" + path + "'");
  if (get_u32(header + 5) != kElemSize)
    throw FormatError("matrix_read: unsupported element size in '" + path + "'");

  const std::uint64_t m = get_u64(header + 9);
  const std::uint64_t n = get_u64(header + 17);
  if (m == 0 || n == 0)
    throw DimensionError("matrix_read: zero dimension in '" + path + "'");
  if (n != 0 && m > std::numeric_limits<std::size_t>::max() / sizeof(double) / n)
    throw SizeOverflowError("matrix_read: m*n overflows addressable size in '" + path + "'");

  DenseMatrix x(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const std::streamsize payload = static_cast<std::streamsize>(m * n * sizeof(double));
  in.read(reinterpret_cast<char*>(x.data()), payload);
  if (in.gcount() != payload)
    throw TruncationError("matrix_read: truncated payload in '" + path + "'");
  return x;
}

}  // namespace skinnyqr
