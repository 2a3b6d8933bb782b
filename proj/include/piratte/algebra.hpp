#pragma once

// Scalar field arithmetic, polynomial secret sharing, Lagrange
// interpolation, and the bilinear group context used by every scheme layer.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "piratte/bn254.hpp"
#include "piratte/bytes.hpp"
#include "piratte/rng.hpp"

namespace piratte {

// A field element as a plain value; all arithmetic goes through ScalarField
// so the same code runs over the curve order and over small test fields.
struct Scalar {
  bn::Int value;

  Scalar() : value(0) {}
  explicit Scalar(bn::Int v) : value(std::move(v)) {}
  explicit Scalar(unsigned long v) : value(v) {}

  bool operator==(const Scalar&) const = default;
  auto operator<=>(const Scalar& o) const { return cmp(value, o.value) <=> 0; }

  bool is_zero() const { return value == 0; }
};

// Prime field Z_m with a runtime modulus. Elements are canonical in [0, m).
class ScalarField {
 public:
  explicit ScalarField(bn::Int modulus);

  const bn::Int& modulus() const { return modulus_; }
  std::size_t byte_size() const { return byte_size_; }

  Scalar make(const bn::Int& v) const;
  Scalar make(long v) const { return make(bn::Int(v)); }
  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(bn::Int(1)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws DegenerateTarget-free std::logic_error on zero; callers guard.
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, const bn::Int& e) const;

  Scalar random(Rng& rng) const;          // uniform in [0, m)
  Scalar random_nonzero(Rng& rng) const;  // uniform in [1, m)

  // Fixed-width big-endian encoding, width = byte_size().
  Bytes encode(const Scalar& s) const;
  Scalar decode(const Bytes& b) const;  // MalformedInput / InvalidComponent

 private:
  bn::Int modulus_;
  std::size_t byte_size_;
};

// The scalar field of the curve's group order; shared by every context.
const ScalarField& curve_scalar_field();

struct Polynomial {
  std::vector<Scalar> coefficients;  // a_0 .. a_t, ascending

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct Share {
  Scalar x;  // nonzero; zero indexes the secret itself
  Scalar y;
};

// Degree >= 1 with uniform coefficients; a_0 pinned when fixed_constant is
// given. Degree < 1 is rejected (a degree-0 polynomial leaks its secret in
// every share).
Polynomial random_polynomial(const ScalarField& field, int degree, Rng& rng,
                             std::optional<Scalar> fixed_constant = std::nullopt);

// Horner evaluation.
Scalar eval_poly(const ScalarField& field, const Polynomial& p, const Scalar& x);

// Lagrange coefficients over basis points xs, evaluated at target:
// lambda_i = prod_{j != i} (target - x_j) / (x_i - x_j).
std::vector<Scalar> lagrange_at(const ScalarField& field,
                                const std::vector<Scalar>& xs,
                                const Scalar& target);

// Interpolates through all shares and returns the value at zero.
Scalar reconstruct_secret(const ScalarField& field, const std::vector<Share>& shares);

// ---------------------------------------------------------------------------
// Bilinear group context and elements.

class BilinearContext;
using ContextPtr = std::shared_ptr<const BilinearContext>;

class G1Element {
 public:
  G1Element() : pt_(bn::G1Point::infinity()), ctx_(0) {}
  G1Element(bn::G1Point pt, std::uint32_t ctx) : pt_(std::move(pt)), ctx_(ctx) {}

  G1Element pow(const Scalar& k) const;
  G1Element mul(const G1Element& o) const;
  G1Element inverse() const;
  bool is_identity() const { return pt_.is_infinity(); }
  bool operator==(const G1Element& o) const;
  bool operator!=(const G1Element& o) const { return !(*this == o); }

  Bytes to_bytes() const { return bn::encode_g1(pt_); }
  std::uint32_t context_id() const { return ctx_; }
  const bn::G1Point& point() const { return pt_; }

 private:
  bn::G1Point pt_;
  std::uint32_t ctx_;
};

class G2Element {
 public:
  G2Element() : pt_(bn::G2Point::infinity()), ctx_(0) {}
  G2Element(bn::G2Point pt, std::uint32_t ctx) : pt_(std::move(pt)), ctx_(ctx) {}

  G2Element pow(const Scalar& k) const;
  G2Element mul(const G2Element& o) const;
  G2Element inverse() const;
  bool is_identity() const { return pt_.is_infinity(); }
  bool operator==(const G2Element& o) const;
  bool operator!=(const G2Element& o) const { return !(*this == o); }

  Bytes to_bytes() const { return bn::encode_g2(pt_); }
  std::uint32_t context_id() const { return ctx_; }
  const bn::G2Point& point() const { return pt_; }

 private:
  bn::G2Point pt_;
  std::uint32_t ctx_;
};

class GTElement {
 public:
  GTElement() : v_(bn::Fq12::one()), ctx_(0) {}
  GTElement(bn::Fq12 v, std::uint32_t ctx) : v_(std::move(v)), ctx_(ctx) {}

  GTElement pow(const Scalar& k) const;
  GTElement mul(const GTElement& o) const;
  GTElement div(const GTElement& o) const;
  GTElement inverse() const;
  bool is_identity() const { return v_.is_one(); }
  bool operator==(const GTElement& o) const;
  bool operator!=(const GTElement& o) const { return !(*this == o); }

  Bytes to_bytes() const { return bn::encode_gt(v_); }
  std::uint32_t context_id() const { return ctx_; }
  const bn::Fq12& raw() const { return v_; }

 private:
  bn::Fq12 v_;
  std::uint32_t ctx_;
};

// One instance of the bilinear group. All instances use the same curve; the
// id exists so elements from independently created contexts do not mix.
class BilinearContext {
 public:
  static ContextPtr create();

  const ScalarField& scalar_field() const { return curve_scalar_field(); }
  const bn::Int& field_order() const { return bn::group_order(); }

  G1Element g1() const { return {bn::params().g1, id_}; }
  G2Element g2() const { return {bn::params().g2, id_}; }
  GTElement gt_generator() const { return {egg_, id_}; }
  GTElement gt_identity() const { return {bn::Fq12::one(), id_}; }

  int security_bits() const { return 100; }
  std::size_t g1_bytes() const { return bn::kG1Bytes; }
  std::size_t g2_bytes() const { return bn::kG2Bytes; }
  std::size_t gt_bytes() const { return bn::kGTBytes; }
  std::size_t scalar_bytes() const { return curve_scalar_field().byte_size(); }

  std::uint32_t id() const { return id_; }

  G1Element decode_g1(const Bytes& b) const { return {bn::decode_g1(b), id_}; }
  G2Element decode_g2(const Bytes& b) const { return {bn::decode_g2(b), id_}; }
  GTElement decode_gt(const Bytes& b) const { return {bn::decode_gt(b), id_}; }

 private:
  BilinearContext();
  std::uint32_t id_;
  bn::Fq12 egg_;  // e(g1, g2)
};

// e(a, b); ContextMismatch when the operands come from different contexts.
GTElement pairing(const G1Element& a, const G2Element& b);

// prod_i e(a_i, b_i) with a single shared final exponentiation.
GTElement pairing_product(const std::vector<std::pair<G1Element, G2Element>>& pairs);

// Uniform element of GT (the order-r pairing subgroup).
GTElement random_gt(const BilinearContext& ctx, Rng& rng);

// Deterministic map from a (raw) attribute name to G2. The input is
// normalized first; empty or unnormalizable names raise InvalidAttribute.
G2Element hash_to_g2(const BilinearContext& ctx, std::string_view attribute);

}  // namespace piratte
