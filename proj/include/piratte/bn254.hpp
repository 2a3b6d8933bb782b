#pragma once

// Type-3 bilinear group: the 254-bit Barreto-Naehrig curve (alt_bn128 /
// BN254) with an optimal ate pairing, implemented over GMP integers.
//
//   G1 = E(Fq),  E:  y^2 = x^3 + 3,          generator (1, 2), cofactor 1
//   G2 < E'(Fq2), E': y^2 = x^3 + 3/(9+i),   D-type sextic twist
//   GT < Fq12*,  order r
//
// Field tower: Fq -> Fq2 = Fq[i]/(i^2+1) -> Fq6 = Fq2[v]/(v^3-(9+i))
//           -> Fq12 = Fq6[w]/(w^2-v).
//
// All curve constants except the BN parameter u and the published G2
// generator are derived at startup and cross-checked; startup aborts if a
// structural identity fails.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>

#include "piratte/bytes.hpp"

namespace piratte::bn {

using Int = mpz_class;

// Base field modulus q and the (prime) order r of G1/G2/GT.
const Int& base_modulus();
const Int& group_order();

// ---------------------------------------------------------------------------
// Fq

class Fq {
 public:
  Fq() : v_(0) {}
  explicit Fq(unsigned long n) : v_(n) { reduce(); }
  explicit Fq(const Int& n) : v_(n) { reduce(); }

  static Fq zero() { return Fq(); }
  static Fq one() { return Fq(1ul); }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator-() const;
  Fq operator*(const Fq& o) const;
  Fq square() const { return *this * *this; }
  Fq inverse() const;  // throws DecryptionError-unrelated logic error on zero
  Fq pow(const Int& e) const;
  Fq dbl() const { return *this + *this; }

  // Square root for q = 3 mod 4; std::nullopt when none exists.
  std::optional<Fq> sqrt() const;

  bool is_zero() const { return v_ == 0; }
  bool operator==(const Fq& o) const { return v_ == o.v_; }
  bool operator!=(const Fq& o) const { return v_ != o.v_; }

  const Int& raw() const { return v_; }

 private:
  void reduce();
  Int v_;  // canonical representative in [0, q)
};

// ---------------------------------------------------------------------------
// Fq2 = Fq[i] / (i^2 + 1)

class Fq2 {
 public:
  Fq c0, c1;  // c0 + c1 * i

  Fq2() = default;
  Fq2(Fq a, Fq b) : c0(std::move(a)), c1(std::move(b)) {}

  static Fq2 zero() { return Fq2(); }
  static Fq2 one() { return Fq2(Fq::one(), Fq::zero()); }

  Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fq2 operator-() const { return {-c0, -c1}; }
  Fq2 operator*(const Fq2& o) const;
  Fq2 square() const;
  Fq2 inverse() const;
  Fq2 conjugate() const { return {c0, -c1}; }
  Fq2 scale(const Fq& s) const { return {c0 * s, c1 * s}; }
  Fq2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  Fq2 pow(const Int& e) const;

  // Multiplication by the sextic nonresidue xi = 9 + i.
  Fq2 mul_by_xi() const;

  std::optional<Fq2> sqrt() const;

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fq2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fq2& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Fq6 = Fq2[v] / (v^3 - xi)

class Fq6 {
 public:
  Fq2 c0, c1, c2;  // c0 + c1 v + c2 v^2

  Fq6() = default;
  Fq6(Fq2 a, Fq2 b, Fq2 c) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

  static Fq6 zero() { return Fq6(); }
  static Fq6 one() { return Fq6(Fq2::one(), Fq2::zero(), Fq2::zero()); }

  Fq6 operator+(const Fq6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fq6 operator-(const Fq6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fq6 operator-() const { return {-c0, -c1, -c2}; }
  Fq6 operator*(const Fq6& o) const;
  Fq6 square() const;
  Fq6 inverse() const;
  // Multiplication by v: (c0, c1, c2) -> (xi*c2, c0, c1).
  Fq6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fq6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
  bool operator!=(const Fq6& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Fq12 = Fq6[w] / (w^2 - v)

class Fq12 {
 public:
  Fq6 c0, c1;  // c0 + c1 w

  Fq12() = default;
  Fq12(Fq6 a, Fq6 b) : c0(std::move(a)), c1(std::move(b)) {}

  static Fq12 zero() { return Fq12(); }
  static Fq12 one() { return Fq12(Fq6::one(), Fq6::zero()); }

  Fq12 operator*(const Fq12& o) const;
  Fq12 square() const;
  Fq12 inverse() const;
  // Galois conjugate over Fq6; equals the inverse on the unit-norm
  // (cyclotomic) subgroup that pairing values live in.
  Fq12 conjugate() const { return {c0, -c1}; }
  Fq12 frobenius(int power) const;  // power in {1, 2, 3}
  Fq12 pow(const Int& e) const;     // e >= 0

  bool is_one() const { return *this == one(); }
  bool operator==(const Fq12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fq12& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Curve points (Jacobian coordinates, infinity encoded as Z = 0).
// Both curves have a = 0 so the same formulas serve E and E'.

template <typename F>
struct CurvePoint {
  F x, y, z;

  static CurvePoint infinity() { return {F::zero(), F::zero(), F::zero()}; }
  bool is_infinity() const { return z.is_zero(); }
};

using G1Point = CurvePoint<Fq>;
using G2Point = CurvePoint<Fq2>;

template <typename F>
CurvePoint<F> curve_dbl(const CurvePoint<F>& p);
template <typename F>
CurvePoint<F> curve_add(const CurvePoint<F>& p, const CurvePoint<F>& q);
template <typename F>
CurvePoint<F> curve_neg(const CurvePoint<F>& p);
template <typename F>
CurvePoint<F> curve_mul(const CurvePoint<F>& p, const Int& k);
template <typename F>
bool curve_eq(const CurvePoint<F>& p, const CurvePoint<F>& q);
template <typename F>
void curve_normalize(CurvePoint<F>& p);  // to affine (z = 1), no-op at infinity
template <typename F>
bool on_curve(const CurvePoint<F>& p, const F& b);

CurvePoint<Fq> g1_from_affine(const Fq& x, const Fq& y);
CurvePoint<Fq2> g2_from_affine(const Fq2& x, const Fq2& y);

// ---------------------------------------------------------------------------
// Curve parameters and generators.

struct Params {
  Int u;           // BN parameter
  Int q, r, trace; // q(u), r(u), t(u) = 6u^2 + 1
  Int ate_loop;    // 6u + 2
  Fq b;            // 3
  Fq2 xi;          // 9 + i
  Fq2 b_twist;     // 3 / xi
  G1Point g1;
  G2Point g2;
  Int g2_cofactor;              // #E'(Fq2) / r = q - 1 + t
  std::array<std::array<Fq2, 6>, 3> frob_gamma;  // gamma[k-1][j] = xi^(j (q^k - 1) / 6)
  Fq2 psi_x, psi_y;             // twist endomorphism constants
  Int naive_final_exp;          // (q^12 - 1) / r, test oracle exponent
};

const Params& params();

// Untwist-Frobenius-twist endomorphism on E'(Fq2) (affine in, affine out).
G2Point g2_endomorphism(const G2Point& q_affine);

// ---------------------------------------------------------------------------
// Pairing.

// Optimal ate Miller loop, no final exponentiation.
Fq12 miller_loop(const G1Point& p, const G2Point& q);
Fq12 final_exponentiation(const Fq12& f);
// e(P, Q). Accepts any Jacobian representatives; infinity maps to 1.
Fq12 pairing(const G1Point& p, const G2Point& q);

// ---------------------------------------------------------------------------
// Canonical encodings. Sizes: G1 = 32, G2 = 64, GT = 384 bytes.
// G1/G2 are x-compressed with flag bits in the leading byte:
//   0x80 = y is the lexicographically larger of the two roots
//   0x40 = point at infinity (all remaining bits zero)

inline constexpr std::size_t kG1Bytes = 32;
inline constexpr std::size_t kG2Bytes = 64;
inline constexpr std::size_t kGTBytes = 384;
inline constexpr std::size_t kScalarBytes = 32;

Bytes encode_g1(const G1Point& p);
Bytes encode_g2(const G2Point& p);
Bytes encode_gt(const Fq12& z);

// Decoders validate on-curve / subgroup / order membership and throw
// InvalidComponent on failure, MalformedInput on size errors.
G1Point decode_g1(const Bytes& in);
G2Point decode_g2(const Bytes& in);
Fq12 decode_gt(const Bytes& in);

// Fixed-width big-endian integer helpers shared with the scalar codec.
void int_to_be(const Int& v, std::uint8_t* out, std::size_t width);
Int be_to_int(const std::uint8_t* in, std::size_t width);

}  // namespace piratte::bn
