#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relm/errors.hpp"

namespace relm::serialize {

// Little-endian binary encoding used by the model file. All multi-byte
// values are written byte-by-byte so the format does not depend on host
// endianness.

class Writer {
public:
  void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }

  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }

  void u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }

  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }

  void f64(double v) { u64(std::bit_cast<uint64_t>(v)); }

  void str(std::string_view s) {
    u32(static_cast<uint32_t>(s.size()));
    buf_.append(s.data(), s.size());
  }

  void vec_f64(std::span<const double> v) {
    u64(v.size());
    for (double x : v) f64(x);
  }

  void vec_u64(std::span<const uint64_t> v) {
    u64(v.size());
    for (uint64_t x : v) u64(x);
  }

  void vec_u32(std::span<const uint32_t> v) {
    u64(v.size());
    for (uint32_t x : v) u32(x);
  }

  const std::string& buffer() const { return buf_; }
  std::string take() { return std::move(buf_); }

private:
  std::string buf_;
};

class Reader {
public:
  explicit Reader(std::string_view data) : data_(data) {}

  uint8_t u8() {
    need(1);
    return static_cast<uint8_t>(data_[pos_++]);
  }

  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<uint8_t>(data_[pos_++])) << (8 * i);
    return v;
  }

  uint64_t u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<uint8_t>(data_[pos_++])) << (8 * i);
    return v;
  }

  int64_t i64() { return static_cast<int64_t>(u64()); }

  double f64() { return std::bit_cast<double>(u64()); }

  std::string str() {
    uint32_t n = u32();
    need(n);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    return s;
  }

  std::vector<double> vec_f64() {
    uint64_t n = u64();
    need(n * 8);
    std::vector<double> v(n);
    for (auto& x : v) x = f64();
    return v;
  }

  std::vector<uint64_t> vec_u64() {
    uint64_t n = u64();
    need(n * 8);
    std::vector<uint64_t> v(n);
    for (auto& x : v) x = u64();
    return v;
  }

  std::vector<uint32_t> vec_u32() {
    uint64_t n = u64();
    need(n * 4);
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = u32();
    return v;
  }

  size_t remaining() const { return data_.size() - pos_; }
  size_t position() const { return pos_; }
  void skip(size_t n) {
    need(n);
    pos_ += n;
  }

private:
  void need(size_t n) const {
    if (data_.size() - pos_ < n) throw ModelError("model file truncated");
  }

  std::string_view data_;
  size_t pos_ = 0;
};

}  // namespace relm::serialize
