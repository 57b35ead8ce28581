#include "hetoda/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace hetoda {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  os.write(b, 4);
}

std::uint32_t get_u32(std::istream& is, const std::string& path) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4))
    throw IoError(path + ": truncated HEF1 header");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void write_hef1(const std::string& path, const std::vector<ScalarField>& planes) {
  if (planes.empty()) throw IoError("write_hef1: no planes");
  const int n = planes[0].n();
  for (const auto& p : planes)
    if (p.n() != n) throw ShapeError("write_hef1: mixed plane sizes");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os.write("HEF1", 4);
  put_u32(os, 1);
  put_u32(os, static_cast<std::uint32_t>(planes.size()));
  put_u32(os, static_cast<std::uint32_t>(n));
  static_assert(sizeof(double) == 8);
  for (const auto& p : planes) {
    auto v = p.values();
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(double)));
  }
  if (!os) throw IoError("write failed: " + path);
}

std::vector<ScalarField> read_hef1(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "HEF1", 4) != 0)
    throw IoError(path + ": not a HEF1 file");
  const std::uint32_t version = get_u32(is, path);
  if (version != 1)
    throw IoError(path + ": unsupported HEF1 version " + std::to_string(version));
  const std::uint32_t count = get_u32(is, path);
  const std::uint32_t n = get_u32(is, path);
  if (count == 0 || count > 4096) throw IoError(path + ": implausible plane count");
  PeriodicGrid grid(static_cast<int>(n));
  std::vector<ScalarField> planes;
  planes.reserve(count);
  for (std::uint32_t p = 0; p < count; ++p) {
    std::vector<double> vals(static_cast<std::size_t>(n) * n);
    if (!is.read(reinterpret_cast<char*>(vals.data()),
                 static_cast<std::streamsize>(vals.size() * sizeof(double))))
      throw IoError(path + ": truncated plane data");
    planes.emplace_back(grid, std::move(vals));
  }
  return planes;
}

void write_csv_plane(const std::string& path, const ScalarField& f) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  const int n = f.n();
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (col) os << ',';
      os << format_double(f.at(row, col));
    }
    os << '\n';
  }
}

std::string format_double(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace hetoda
