#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace piratte {

using Bytes = std::vector<std::uint8_t>;

// Big-endian integer append/read helpers used by the wire codec.
void append_u8(Bytes& out, std::uint8_t v);
void append_u16(Bytes& out, std::uint16_t v);
void append_u32(Bytes& out, std::uint32_t v);
void append_u64(Bytes& out, std::uint64_t v);

// Cursor-style reader; every read checks bounds and throws MalformedInput.
class ByteReader {
 public:
  ByteReader(const std::uint8_t* data, std::size_t size)
      : data_(data), size_(size) {}
  explicit ByteReader(const Bytes& b) : ByteReader(b.data(), b.size()) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  Bytes take(std::size_t n);
  std::size_t remaining() const { return size_ - pos_; }
  std::size_t position() const { return pos_; }
  bool done() const { return pos_ == size_; }

 private:
  void need(std::size_t n) const;
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

std::string to_hex(const Bytes& b);
Bytes from_hex(const std::string& hex);

// base64url without padding; used by the proxy wire protocol.
std::string base64url_encode(const Bytes& b);
Bytes base64url_decode(const std::string& s);

Bytes bytes_from_string(const std::string& s);
std::string string_from_bytes(const Bytes& b);

// SHA-256 of `data`, 32 bytes.
Bytes sha256(const Bytes& data);

bool constant_time_equal(const Bytes& a, const Bytes& b);

}  // namespace piratte
