#pragma once

// Little-endian framed binary helpers shared by the checkpoint and dataset
// containers.

#include <bit>
#include <filesystem>
#include <fstream>
#include <functional>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "breakaway/core.hpp"

namespace breakaway::io {

static_assert(std::endian::native == std::endian::little,
              "binary containers assume a little-endian host");

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void magic(std::string_view m) { raw(m.data(), m.size()); }
  void u16(std::uint16_t v) { raw(&v, sizeof v); }
  void u32(std::uint32_t v) { raw(&v, sizeof v); }
  void u64(std::uint64_t v) { raw(&v, sizeof v); }
  void f32(float v) { raw(&v, sizeof v); }
  void f32s(std::span<const float> v) { raw(v.data(), v.size_bytes()); }
  void string(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    raw(s.data(), s.size());
  }
  void raw(const void* p, std::size_t n) {
    out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!out_) throw Error("write failed");
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void expect_magic(std::string_view m) {
    std::string got(m.size(), '\0');
    raw(got.data(), got.size());
    if (got != m) throw Error("bad magic: expected " + std::string(m) + ", got " + got);
  }
  std::uint16_t u16() { return pod<std::uint16_t>(); }
  std::uint32_t u32() { return pod<std::uint32_t>(); }
  std::uint64_t u64() { return pod<std::uint64_t>(); }
  float f32() { return pod<float>(); }
  void f32s(std::span<float> v) { raw(v.data(), v.size_bytes()); }
  std::string string() {
    const auto n = u32();
    if (n > (1u << 28)) throw Error("string length out of range");
    std::string s(n, '\0');
    raw(s.data(), n);
    return s;
  }
  void raw(void* p, std::size_t n) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (in_.gcount() != static_cast<std::streamsize>(n)) throw Error("unexpected end of file");
  }
  bool at_eof() { return in_.peek() == std::char_traits<char>::eof(); }

 private:
  template <class T>
  T pod() {
    T v;
    raw(&v, sizeof v);
    return v;
  }
  std::istream& in_;
};

/// Writes through a temporary sibling and renames on success; a failure
/// removes the partial file and rethrows.
inline void write_file_atomic(const std::string& path, const std::function<void(Writer&)>& body) {
  const std::string tmp = path + ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot open " + tmp + " for writing");
      Writer w(out);
      body(w);
      out.flush();
      if (!out) throw Error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

inline std::ifstream open_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace breakaway::io
