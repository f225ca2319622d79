#include "eee/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace eee {

namespace {

constexpr char kMagic[8] = {'E', 'E', 'E', 'S', 'N', 'A', 'P', '1'};

template <class T>
void put(std::ofstream& f, T v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::ifstream& f, const std::string& path) {
  T v;
  if (!f.read(reinterpret_cast<char*>(&v), sizeof v)) throw std::runtime_error("truncated snapshot: " + path);
  return v;
}

}  // namespace

void write_snapshot(const std::string& path, const FieldSet& fs) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write snapshot: " + path);
  const Grid& g = fs.grid();
  f.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(f, static_cast<std::uint32_t>(g.n));
  put<std::uint32_t>(f, static_cast<std::uint32_t>(g.fd_order));
  put<double>(f, g.h());
  put<double>(f, fs.t);
  put<std::uint32_t>(f, kStateSize);
  for (int c = 0; c < kStateSize; ++c) {
    const std::string name = layout::component_name(c);
    put<std::uint32_t>(f, static_cast<std::uint32_t>(name.size()));
    f.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
  std::vector<double> row(kStateSize);
  for (std::size_t p = 0; p < fs.points(); ++p) {
    for (int c = 0; c < kStateSize; ++c) row[c] = fs.at(c, p);
    f.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
  if (!f) throw std::runtime_error("failed writing snapshot: " + path);
}

FieldSet read_snapshot(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read snapshot: " + path);
  char magic[8];
  if (!f.read(magic, sizeof magic) || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error("not a snapshot file: " + path);
  const auto n = get<std::uint32_t>(f, path);
  const auto order = get<std::uint32_t>(f, path);
  const double h = get<double>(f, path);
  const double t = get<double>(f, path);
  const auto nf = get<std::uint32_t>(f, path);
  if (nf != kStateSize) throw std::runtime_error("unexpected field count in snapshot: " + path);
  std::vector<int> map(nf);
  for (std::uint32_t c = 0; c < nf; ++c) {
    const auto len = get<std::uint32_t>(f, path);
    std::string name(len, '\0');
    if (!f.read(name.data(), len)) throw std::runtime_error("truncated snapshot: " + path);
    map[c] = layout::component_index(name);
    if (map[c] < 0) throw std::runtime_error("unknown field '" + name + "' in snapshot: " + path);
  }
  FieldSet fs(Grid(static_cast<int>(n), h * n, static_cast<int>(order)));
  fs.t = t;
  std::vector<double> row(nf);
  for (std::size_t p = 0; p < fs.points(); ++p) {
    if (!f.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(nf * sizeof(double))))
      throw std::runtime_error("truncated snapshot: " + path);
    for (std::uint32_t c = 0; c < nf; ++c) fs.at(map[c], p) = row[c];
  }
  return fs;
}

void write_snapshot_csv(const std::string& path, const FieldSet& fs) {
  std::string out = "i,j,k";
  for (int c = 0; c < kStateSize; ++c) out += "," + layout::component_name(c);
  out += '\n';
  char buf[32];
  for (std::size_t p = 0; p < fs.points(); ++p) {
    int i, j, k;
    fs.grid().coords(p, i, j, k);
    out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
    for (int c = 0; c < kStateSize; ++c) {
      std::snprintf(buf, sizeof buf, ",%.17g", fs.at(c, p));
      out += buf;
    }
    out += '\n';
  }
  write_file_atomic(path, out);
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << contents;
    if (!f) throw std::runtime_error("failed writing " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

}  // namespace eee
