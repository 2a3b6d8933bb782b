#include "piratte/rng.hpp"

#include <openssl/rand.h>

#include <cstring>
#include <stdexcept>

namespace piratte {

void SystemRng::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
    throw std::runtime_error("system randomness unavailable");
}

DrbgRng::DrbgRng(const std::string& seed) : seed_(seed.begin(), seed.end()) {}
DrbgRng::DrbgRng(const Bytes& seed) : seed_(seed) {}

void DrbgRng::fill(std::span<std::uint8_t> out) {
  std::size_t written = 0;
  while (written < out.size()) {
    if (buffer_pos_ == buffer_.size()) {
      Bytes block = seed_;
      append_u64(block, counter_++);
      buffer_ = sha256(block);
      buffer_pos_ = 0;
    }
    std::size_t n = std::min(out.size() - written, buffer_.size() - buffer_pos_);
    std::memcpy(out.data() + written, buffer_.data() + buffer_pos_, n);
    written += n;
    buffer_pos_ += n;
  }
}

}  // namespace piratte
