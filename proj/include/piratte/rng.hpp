#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "piratte/bytes.hpp"

namespace piratte {

// Source of random bytes. Key generation, encryption and rekeying take an
// Rng& so tests can substitute a deterministic stream.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes b(n);
    fill(b);
    return b;
  }
};

// Operating-system randomness (OpenSSL RAND_bytes).
class SystemRng final : public Rng {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic stream: SHA-256 over (seed || counter). Test use only; the
// stream is stable across platforms so fixtures can be pinned.
class DrbgRng final : public Rng {
 public:
  explicit DrbgRng(const std::string& seed);
  explicit DrbgRng(const Bytes& seed);
  void fill(std::span<std::uint8_t> out) override;

 private:
  Bytes seed_;
  std::uint64_t counter_ = 0;
  Bytes buffer_;
  std::size_t buffer_pos_ = 0;
};

}  // namespace piratte
