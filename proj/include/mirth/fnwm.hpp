#ifndef MIRTH_FNWM_HPP
#define MIRTH_FNWM_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "mirth/common.hpp"

namespace mirth {

/// Dense row-major float32 matrix. The single numeric container shared by
/// feature files, mel spectrograms and checkpoints.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> v;  // rows*cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, float fill = 0.0f)
      : rows(r), cols(c), v(r * c, fill) {}

  float& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  float at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  const float* row(std::size_t r) const { return v.data() + r * cols; }
  float* row(std::size_t r) { return v.data() + r * cols; }
  bool empty() const { return rows == 0 || cols == 0; }
};

// "FNWM" matrix file: magic, u32 version=1, u32 rows, u32 cols, then
// rows*cols float32, little-endian, row-major.
namespace fnwm {

constexpr char kMagic[4] = {'F', 'N', 'W', 'M'};
constexpr std::uint32_t kVersion = 1;

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t x) {
  unsigned char b[4] = {static_cast<unsigned char>(x & 0xff),
                        static_cast<unsigned char>((x >> 8) & 0xff),
                        static_cast<unsigned char>((x >> 16) & 0xff),
                        static_cast<unsigned char>((x >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

inline std::uint32_t get_u32(std::istream& in, const std::string& what) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw FormatError("FNWM: truncated while reading " + what);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void put_f32(std::ostream& out, float f) {
  std::uint32_t x;
  std::memcpy(&x, &f, 4);
  put_u32(out, x);
}

}  // namespace detail

inline void write(std::ostream& out, const Matrix& m) {
  out.write(kMagic, 4);
  detail::put_u32(out, kVersion);
  detail::put_u32(out, static_cast<std::uint32_t>(m.rows));
  detail::put_u32(out, static_cast<std::uint32_t>(m.cols));
  for (float f : m.v) detail::put_f32(out, f);
  if (!out) throw DataError("FNWM: write failed");
}

inline void write_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("FNWM: cannot open for writing: " + path);
  write(out, m);
}

inline Matrix read(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4)) throw FormatError("FNWM: truncated header");
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError("FNWM: bad magic");
  std::uint32_t version = detail::get_u32(in, "version");
  if (version != kVersion)
    throw FormatError("FNWM: unsupported version " + std::to_string(version));
  std::uint32_t rows = detail::get_u32(in, "rows");
  std::uint32_t cols = detail::get_u32(in, "cols");
  Matrix m(rows, cols);
  std::vector<char> bytes(static_cast<std::size_t>(rows) * cols * 4);
  if (!in.read(bytes.data(), static_cast<std::streamsize>(bytes.size())))
    throw FormatError("FNWM: truncated payload");
  for (std::size_t i = 0; i < m.v.size(); ++i) {
    std::uint32_t x = static_cast<std::uint8_t>(bytes[i * 4]) |
                      (static_cast<std::uint32_t>(
                           static_cast<std::uint8_t>(bytes[i * 4 + 1]))
                       << 8) |
                      (static_cast<std::uint32_t>(
                           static_cast<std::uint8_t>(bytes[i * 4 + 2]))
                       << 16) |
                      (static_cast<std::uint32_t>(
                           static_cast<std::uint8_t>(bytes[i * 4 + 3]))
                       << 24);
    std::memcpy(&m.v[i], &x, 4);
  }
  return m;
}

inline Matrix read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("FNWM: cannot open: " + path);
  return read(in);
}

}  // namespace fnwm
}  // namespace mirth

#endif  // MIRTH_FNWM_HPP
