#include "piratte/bn254.hpp"

#include <cassert>
#include <cstring>
#include <stdexcept>

#include "piratte/errors.hpp"

namespace piratte::bn {

namespace {

struct CoreConsts {
  Int u, q, r, trace;
  CoreConsts() {
    u = Int("4965661367192848881");
    Int u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    q = 36 * u4 + 36 * u3 + 24 * u2 + 6 * u + 1;
    r = 36 * u4 + 36 * u3 + 18 * u2 + 6 * u + 1;
    trace = 6 * u2 + 1;
    if (mpz_probab_prime_p(q.get_mpz_t(), 32) == 0)
      throw std::logic_error("bn254: q not prime");
    if (mpz_probab_prime_p(r.get_mpz_t(), 32) == 0)
      throw std::logic_error("bn254: r not prime");
  }
};

const CoreConsts& core() {
  static const CoreConsts c;
  return c;
}

const Int& half_q() {  // (q - 1) / 2
  static const Int h = (core().q - 1) / 2;
  return h;
}

const Int& sqrt_exp() {  // (q + 1) / 4, valid since q = 3 mod 4
  static const Int e = (core().q + 1) / 4;
  return e;
}

}  // namespace

const Int& base_modulus() { return core().q; }
const Int& group_order() { return core().r; }

// ---------------------------------------------------------------------------
// Fq

void Fq::reduce() {
  mpz_mod(v_.get_mpz_t(), v_.get_mpz_t(), core().q.get_mpz_t());
}

Fq Fq::operator+(const Fq& o) const {
  Fq out;
  out.v_ = v_ + o.v_;
  if (out.v_ >= core().q) out.v_ -= core().q;
  return out;
}

Fq Fq::operator-(const Fq& o) const {
  Fq out;
  out.v_ = v_ - o.v_;
  if (out.v_ < 0) out.v_ += core().q;
  return out;
}

Fq Fq::operator-() const {
  Fq out;
  if (v_ != 0) out.v_ = core().q - v_;
  return out;
}

Fq Fq::operator*(const Fq& o) const {
  Fq out;
  out.v_ = v_ * o.v_;
  mpz_mod(out.v_.get_mpz_t(), out.v_.get_mpz_t(), core().q.get_mpz_t());
  return out;
}

Fq Fq::inverse() const {
  Fq out;
  if (mpz_invert(out.v_.get_mpz_t(), v_.get_mpz_t(), core().q.get_mpz_t()) == 0)
    throw std::logic_error("bn254: inverse of zero in Fq");
  return out;
}

Fq Fq::pow(const Int& e) const {
  Fq out;
  mpz_powm(out.v_.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), core().q.get_mpz_t());
  return out;
}

std::optional<Fq> Fq::sqrt() const {
  if (is_zero()) return Fq::zero();
  Fq cand = pow(sqrt_exp());
  if (cand * cand == *this) return cand;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fq2

Fq2 Fq2::operator*(const Fq2& o) const {
  Fq v0 = c0 * o.c0;
  Fq v1 = c1 * o.c1;
  Fq mixed = (c0 + c1) * (o.c0 + o.c1);
  return {v0 - v1, mixed - v0 - v1};
}

Fq2 Fq2::square() const {
  Fq t = c0 * c1;
  return {(c0 + c1) * (c0 - c1), t + t};
}

Fq2 Fq2::inverse() const {
  Fq norm = c0 * c0 + c1 * c1;
  Fq inv = norm.inverse();
  return {c0 * inv, -(c1 * inv)};
}

Fq2 Fq2::mul_by_xi() const {
  // (c0 + c1 i)(9 + i) = (9 c0 - c1) + (c0 + 9 c1) i
  Fq nine_c0 = c0.dbl().dbl().dbl() + c0;
  Fq nine_c1 = c1.dbl().dbl().dbl() + c1;
  return {nine_c0 - c1, c0 + nine_c1};
}

Fq2 Fq2::pow(const Int& e) const {
  if (e == 0) return Fq2::one();
  Fq2 acc = *this;
  long n = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = n - 2; i >= 0; --i) {
    acc = acc.square();
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * *this;
  }
  return acc;
}

std::optional<Fq2> Fq2::sqrt() const {
  if (is_zero()) return Fq2::zero();
  if (c1.is_zero()) {
    if (auto root = c0.sqrt()) return Fq2(*root, Fq::zero());
    // -1 is a nonresidue (q = 3 mod 4), so -c0 must then be a residue.
    auto root = (-c0).sqrt();
    if (!root) return std::nullopt;
    return Fq2(Fq::zero(), *root);
  }
  // Want (x + yi)^2 = c0 + c1 i. With s = sqrt(c0^2 + c1^2):
  // x^2 = (c0 +- s)/2 for whichever sign is a residue, y = c1 / (2x).
  Fq alpha = c0 * c0 + c1 * c1;
  auto s = alpha.sqrt();
  if (!s) return std::nullopt;
  Fq two_inv = Fq(2ul).inverse();
  Fq delta = (c0 + *s) * two_inv;
  auto x = delta.sqrt();
  if (!x) {
    delta = (c0 - *s) * two_inv;
    x = delta.sqrt();
    if (!x) return std::nullopt;
  }
  Fq y = c1 * (x->dbl()).inverse();
  Fq2 cand(*x, y);
  if (cand.square() == *this) return cand;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fq6

Fq6 Fq6::operator*(const Fq6& o) const {
  Fq2 v0 = c0 * o.c0;
  Fq2 v1 = c1 * o.c1;
  Fq2 v2 = c2 * o.c2;
  Fq2 t0 = (c1 + c2) * (o.c1 + o.c2) - v1 - v2;
  Fq2 t1 = (c0 + c1) * (o.c0 + o.c1) - v0 - v1;
  Fq2 t2 = (c0 + c2) * (o.c0 + o.c2) - v0 - v2;
  return {v0 + t0.mul_by_xi(), t1 + v2.mul_by_xi(), t2 + v1};
}

Fq6 Fq6::square() const {
  Fq2 s0 = c0.square();
  Fq2 ab = c0 * c1;
  Fq2 s1 = ab.dbl();
  Fq2 s2 = (c0 - c1 + c2).square();
  Fq2 bc = c1 * c2;
  Fq2 s3 = bc.dbl();
  Fq2 s4 = c2.square();
  return {s0 + s3.mul_by_xi(), s1 + s4.mul_by_xi(), s1 + s2 + s3 - s0 - s4};
}

Fq6 Fq6::inverse() const {
  Fq2 t0 = c0.square() - (c1 * c2).mul_by_xi();
  Fq2 t1 = c2.square().mul_by_xi() - c0 * c1;
  Fq2 t2 = c1.square() - c0 * c2;
  Fq2 denom = c0 * t0 + (c2 * t1).mul_by_xi() + (c1 * t2).mul_by_xi();
  Fq2 inv = denom.inverse();
  return {t0 * inv, t1 * inv, t2 * inv};
}

// ---------------------------------------------------------------------------
// Fq12

Fq12 Fq12::operator*(const Fq12& o) const {
  Fq6 t0 = c0 * o.c0;
  Fq6 t1 = c1 * o.c1;
  Fq6 mixed = (c0 + c1) * (o.c0 + o.c1);
  return {t0 + t1.mul_by_v(), mixed - t0 - t1};
}

Fq12 Fq12::square() const {
  Fq6 t0 = c0.square();
  Fq6 t1 = c1.square();
  Fq6 mixed = (c0 + c1).square();
  return {t0 + t1.mul_by_v(), mixed - t0 - t1};
}

Fq12 Fq12::inverse() const {
  Fq6 denom = c0.square() - c1.square().mul_by_v();
  Fq6 inv = denom.inverse();
  return {c0 * inv, -(c1 * inv)};
}

Fq12 Fq12::frobenius(int power) const {
  if (power < 1 || power > 3) throw std::logic_error("bn254: frobenius power");
  const auto& gamma = params().frob_gamma[power - 1];
  std::array<Fq2, 6> w = {c0.c0, c1.c0, c0.c1, c1.c1, c0.c2, c1.c2};
  for (int j = 0; j < 6; ++j) {
    if (power % 2 == 1) w[j] = w[j].conjugate();
    if (j != 0) w[j] = w[j] * gamma[j];
  }
  return {Fq6(w[0], w[2], w[4]), Fq6(w[1], w[3], w[5])};
}

Fq12 Fq12::pow(const Int& e) const {
  if (e == 0) return Fq12::one();
  if (e < 0) throw std::logic_error("bn254: negative Fq12 exponent");
  Fq12 acc = *this;
  long n = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = n - 2; i >= 0; --i) {
    acc = acc.square();
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * *this;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Curves

template <typename F>
CurvePoint<F> curve_dbl(const CurvePoint<F>& p) {
  if (p.is_infinity() || p.y.is_zero()) return CurvePoint<F>::infinity();
  F a = p.x.square();
  F b = p.y.square();
  F c = b.square();
  F d = ((p.x + b).square() - a - c).dbl();
  F e = a + a + a;
  F f = e.square();
  F x3 = f - d.dbl();
  F y3 = e * (d - x3) - c.dbl().dbl().dbl();
  F z3 = (p.y * p.z).dbl();
  return {x3, y3, z3};
}

template <typename F>
CurvePoint<F> curve_add(const CurvePoint<F>& p, const CurvePoint<F>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  F z1z1 = p.z.square();
  F z2z2 = q.z.square();
  F u1 = p.x * z2z2;
  F u2 = q.x * z1z1;
  F s1 = p.y * q.z * z2z2;
  F s2 = q.y * p.z * z1z1;
  if (u1 == u2) {
    if (s1 == s2) return curve_dbl(p);
    return CurvePoint<F>::infinity();
  }
  F h = u2 - u1;
  F i = h.dbl().square();
  F j = h * i;
  F rr = (s2 - s1).dbl();
  F v = u1 * i;
  F x3 = rr.square() - j - v.dbl();
  F y3 = rr * (v - x3) - (s1 * j).dbl();
  F z3 = ((p.z + q.z).square() - z1z1 - z2z2) * h;
  return {x3, y3, z3};
}

template <typename F>
CurvePoint<F> curve_neg(const CurvePoint<F>& p) {
  return {p.x, -p.y, p.z};
}

template <typename F>
CurvePoint<F> curve_mul(const CurvePoint<F>& p, const Int& k) {
  if (k == 0 || p.is_infinity()) return CurvePoint<F>::infinity();
  Int e = k < 0 ? Int(-k) : k;
  CurvePoint<F> acc = p;
  long n = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = n - 2; i >= 0; --i) {
    acc = curve_dbl(acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = curve_add(acc, p);
  }
  return k < 0 ? curve_neg(acc) : acc;
}

template <typename F>
bool curve_eq(const CurvePoint<F>& p, const CurvePoint<F>& q) {
  bool pi = p.is_infinity(), qi = q.is_infinity();
  if (pi || qi) return pi == qi;
  F z1z1 = p.z.square();
  F z2z2 = q.z.square();
  if (!(p.x * z2z2 == q.x * z1z1)) return false;
  return p.y * z2z2 * q.z == q.y * z1z1 * p.z;
}

template <typename F>
void curve_normalize(CurvePoint<F>& p) {
  if (p.is_infinity()) return;
  F zinv = p.z.inverse();
  F zinv2 = zinv.square();
  p.x = p.x * zinv2;
  p.y = p.y * zinv2 * zinv;
  p.z = F::one();
}

template <typename F>
bool on_curve(const CurvePoint<F>& p, const F& b) {
  if (p.is_infinity()) return true;
  CurvePoint<F> a = p;
  curve_normalize(a);
  return a.y.square() == a.x.square() * a.x + b;
}

template CurvePoint<Fq> curve_dbl(const CurvePoint<Fq>&);
template CurvePoint<Fq2> curve_dbl(const CurvePoint<Fq2>&);
template CurvePoint<Fq> curve_add(const CurvePoint<Fq>&, const CurvePoint<Fq>&);
template CurvePoint<Fq2> curve_add(const CurvePoint<Fq2>&, const CurvePoint<Fq2>&);
template CurvePoint<Fq> curve_neg(const CurvePoint<Fq>&);
template CurvePoint<Fq2> curve_neg(const CurvePoint<Fq2>&);
template CurvePoint<Fq> curve_mul(const CurvePoint<Fq>&, const Int&);
template CurvePoint<Fq2> curve_mul(const CurvePoint<Fq2>&, const Int&);
template bool curve_eq(const CurvePoint<Fq>&, const CurvePoint<Fq>&);
template bool curve_eq(const CurvePoint<Fq2>&, const CurvePoint<Fq2>&);
template void curve_normalize(CurvePoint<Fq>&);
template void curve_normalize(CurvePoint<Fq2>&);
template bool on_curve(const CurvePoint<Fq>&, const Fq&);
template bool on_curve(const CurvePoint<Fq2>&, const Fq2&);

CurvePoint<Fq> g1_from_affine(const Fq& x, const Fq& y) { return {x, y, Fq::one()}; }
CurvePoint<Fq2> g2_from_affine(const Fq2& x, const Fq2& y) { return {x, y, Fq2::one()}; }

// ---------------------------------------------------------------------------
// Parameters

namespace {

Params build_params() {
  const CoreConsts& c = core();
  Params p;
  p.u = c.u;
  p.q = c.q;
  p.r = c.r;
  p.trace = c.trace;
  p.ate_loop = 6 * c.u + 2;
  p.b = Fq(3ul);
  p.xi = Fq2(Fq(9ul), Fq(1ul));
  p.b_twist = Fq2(Fq(3ul), Fq::zero()) * p.xi.inverse();
  p.g1 = g1_from_affine(Fq(1ul), Fq(2ul));
  p.g2 = g2_from_affine(
      Fq2(Fq(Int("1085704699902305713594457076223282948137075635957851808699"
                 "0519993285655852781")),
          Fq(Int("1155973203298638710799100402139228578392581286182119253091"
                 "7403151452391805634"))),
      Fq2(Fq(Int("8495653923123431417604973247489272438418190587263600148770"
                 "280649306958101930")),
          Fq(Int("4082367875863433681332203403145435568316851327593401208105"
                 "741076214120093531"))));
  p.g2_cofactor = c.q - 1 + c.trace;

  Int qk(1);
  for (int k = 1; k <= 3; ++k) {
    qk *= c.q;
    Int base_exp = (qk - 1) / 6;
    if ((qk - 1) % 6 != 0) throw std::logic_error("bn254: gamma exponent");
    for (int j = 0; j < 6; ++j) p.frob_gamma[k - 1][j] = p.xi.pow(base_exp * j);
  }
  p.psi_x = p.xi.pow((c.q - 1) / 3);
  p.psi_y = p.xi.pow((c.q - 1) / 2);

  Int q12(1);
  for (int k = 0; k < 12; ++k) q12 *= c.q;
  Int rem;
  mpz_fdiv_qr(p.naive_final_exp.get_mpz_t(), rem.get_mpz_t(),
              Int(q12 - 1).get_mpz_t(), c.r.get_mpz_t());
  if (rem != 0) throw std::logic_error("bn254: r does not divide q^12 - 1");

  // Structural self-checks; any transcription error in the constants above
  // trips one of these at first use.
  if (!on_curve(p.g1, p.b)) throw std::logic_error("bn254: g1 off curve");
  if (!on_curve(p.g2, p.b_twist)) throw std::logic_error("bn254: g2 off twist");
  if (!curve_mul(p.g1, c.r).is_infinity())
    throw std::logic_error("bn254: g1 order");
  if (!curve_mul(p.g2, c.r).is_infinity())
    throw std::logic_error("bn254: g2 order");
  return p;
}

}  // namespace

const Params& params() {
  static const Params p = build_params();
  return p;
}

G2Point g2_endomorphism(const G2Point& q_affine) {
  if (q_affine.is_infinity()) return q_affine;
  G2Point a = q_affine;
  curve_normalize(a);
  const Params& p = params();
  return g2_from_affine(a.x.conjugate() * p.psi_x, a.y.conjugate() * p.psi_y);
}

// ---------------------------------------------------------------------------
// Pairing

namespace {

Fq6 scale_fq6(const Fq6& a, const Fq2& s) {
  return {a.c0 * s, a.c1 * s, a.c2 * s};
}

// Multiply a by the sparse Fq6 element l0 + l1 v.
Fq6 mul_sparse_fq6(const Fq6& a, const Fq2& l0, const Fq2& l1) {
  return {a.c0 * l0 + (a.c2 * l1).mul_by_xi(), a.c1 * l0 + a.c0 * l1,
          a.c2 * l0 + a.c1 * l1};
}

// Multiply f by the line value  yp + (-m xp) w + (m x0 - y0) v w,  where m is
// the line slope on the twist and (x0, y0) a twist point on the line. The
// value is the line through the untwisted points evaluated at (xp, yp).
Fq12 mul_by_line(const Fq12& f, const Fq& yp, const Fq& xp, const Fq2& m,
                 const Fq2& x0, const Fq2& y0) {
  Fq2 l10 = -m.scale(xp);
  Fq2 l11 = m * x0 - y0;
  Fq6 a_l0 = scale_fq6(f.c0, Fq2(yp, Fq::zero()));
  Fq6 b_l0 = scale_fq6(f.c1, Fq2(yp, Fq::zero()));
  Fq6 a_l1 = mul_sparse_fq6(f.c0, l10, l11);
  Fq6 b_l1 = mul_sparse_fq6(f.c1, l10, l11);
  return {a_l0 + b_l1.mul_by_v(), a_l1 + b_l0};
}

Fq2 chord_slope(const Fq2& xt, const Fq2& yt, const Fq2& xq, const Fq2& yq) {
  Fq2 dx = xt - xq;
  if (dx.is_zero()) throw std::logic_error("bn254: degenerate miller chord");
  return (yt - yq) * dx.inverse();
}

}  // namespace

Fq12 miller_loop(const G1Point& p_in, const G2Point& q_in) {
  if (p_in.is_infinity() || q_in.is_infinity()) return Fq12::one();
  G1Point pa = p_in;
  curve_normalize(pa);
  G2Point qa = q_in;
  curve_normalize(qa);
  const Fq xp = pa.x, yp = pa.y;
  const Fq2 xq = qa.x, yq = qa.y;

  Fq2 xt = xq, yt = yq;
  Fq12 f = Fq12::one();
  const Int& m = params().ate_loop;
  long nbits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  for (long i = nbits - 2; i >= 0; --i) {
    Fq2 x2 = xt.square();
    Fq2 slope = (x2 + x2 + x2) * yt.dbl().inverse();
    f = f.square();
    f = mul_by_line(f, yp, xp, slope, xt, yt);
    Fq2 x3 = slope.square() - xt.dbl();
    yt = slope * (xt - x3) - yt;
    xt = x3;
    if (mpz_tstbit(m.get_mpz_t(), i)) {
      Fq2 s = chord_slope(xt, yt, xq, yq);
      f = mul_by_line(f, yp, xp, s, xq, yq);
      Fq2 xs = s.square() - xt - xq;
      yt = s * (xt - xs) - yt;
      xt = xs;
    }
  }

  // Two extra line steps with the Frobenius images of Q.
  G2Point q1 = g2_endomorphism(g2_from_affine(xq, yq));
  Fq2 s1 = chord_slope(xt, yt, q1.x, q1.y);
  f = mul_by_line(f, yp, xp, s1, q1.x, q1.y);
  Fq2 xs = s1.square() - xt - q1.x;
  yt = s1 * (xt - xs) - yt;
  xt = xs;

  G2Point q2 = g2_endomorphism(q1);
  q2.y = -q2.y;
  Fq2 s2 = chord_slope(xt, yt, q2.x, q2.y);
  f = mul_by_line(f, yp, xp, s2, q2.x, q2.y);
  return f;
}

Fq12 final_exponentiation(const Fq12& f) {
  // Easy part: f^((q^6 - 1)(q^2 + 1)).
  Fq12 t1 = f.conjugate() * f.inverse();
  t1 = t1.frobenius(2) * t1;

  // Hard part: fixed addition chain in the cyclotomic subgroup, where the
  // conjugate is the inverse.
  const Int& u = params().u;
  Fq12 fp = t1.frobenius(1);
  Fq12 fp2 = t1.frobenius(2);
  Fq12 fp3 = fp2.frobenius(1);
  Fq12 fu = t1.pow(u);
  Fq12 fu2 = fu.pow(u);
  Fq12 fu3 = fu2.pow(u);
  Fq12 fu2p = fu2.frobenius(1);
  Fq12 fu3p = fu3.frobenius(1);
  Fq12 y0 = fp * fp2 * fp3;
  Fq12 y1 = t1.conjugate();
  Fq12 y2 = fu2.frobenius(2);
  Fq12 y3 = fu.frobenius(1).conjugate();
  Fq12 y4 = (fu * fu2p).conjugate();
  Fq12 y5 = fu2.conjugate();
  Fq12 y6 = (fu3 * fu3p).conjugate();
  Fq12 t0 = y6.square() * y4 * y5;
  Fq12 t2 = y3 * y5 * t0;
  t0 = t0 * y2;
  t2 = (t2.square() * t0).square();
  Fq12 t3 = t2 * y1;
  t2 = t2 * y0;
  t3 = t3.square();
  return t3 * t2;
}

Fq12 pairing(const G1Point& p, const G2Point& q) {
  return final_exponentiation(miller_loop(p, q));
}

// ---------------------------------------------------------------------------
// Encodings

void int_to_be(const Int& v, std::uint8_t* out, std::size_t width) {
  if (v < 0) throw std::logic_error("bn254: negative integer encode");
  std::memset(out, 0, width);
  if (v == 0) return;
  std::size_t bytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (bytes > width) throw std::logic_error("bn254: integer too wide");
  std::size_t written = 0;
  mpz_export(out + (width - bytes), &written, 1, 1, 1, 0, v.get_mpz_t());
}

Int be_to_int(const std::uint8_t* in, std::size_t width) {
  Int v;
  mpz_import(v.get_mpz_t(), width, 1, 1, 1, 0, in);
  return v;
}

namespace {

constexpr std::uint8_t kFlagSign = 0x80;
constexpr std::uint8_t kFlagInfinity = 0x40;

bool fq_is_high(const Fq& y) { return y.raw() > half_q(); }

// Lexicographic "high half" test on (c1, c0); y = 0 cannot occur for points
// on either curve (both groups have odd order).
bool fq2_is_high(const Fq2& y) {
  Fq2 n = -y;
  if (y.c1 != n.c1) return y.c1.raw() > n.c1.raw();
  return y.c0.raw() > n.c0.raw();
}

}  // namespace

Bytes encode_g1(const G1Point& p_in) {
  Bytes out(kG1Bytes, 0);
  if (p_in.is_infinity()) {
    out[0] = kFlagInfinity;
    return out;
  }
  G1Point p = p_in;
  curve_normalize(p);
  int_to_be(p.x.raw(), out.data(), kG1Bytes);
  if (out[0] & 0xc0) throw std::logic_error("bn254: x overflows flag bits");
  if (fq_is_high(p.y)) out[0] |= kFlagSign;
  return out;
}

G1Point decode_g1(const Bytes& in) {
  if (in.size() != kG1Bytes) throw MalformedInput("bad G1 encoding size");
  std::uint8_t flags = in[0] & 0xc0;
  Bytes body = in;
  body[0] &= 0x3f;
  if (flags & kFlagInfinity) {
    if ((flags & kFlagSign) != 0) throw InvalidComponent("bad G1 infinity flags");
    for (std::uint8_t b : body)
      if (b != 0) throw InvalidComponent("nonzero G1 infinity body");
    return G1Point::infinity();
  }
  Int xv = be_to_int(body.data(), kG1Bytes);
  if (xv >= base_modulus()) throw InvalidComponent("G1 x out of range");
  Fq x(xv);
  auto y = (x.square() * x + params().b).sqrt();
  if (!y) throw InvalidComponent("G1 x not on curve");
  Fq yy = *y;
  if (fq_is_high(yy) != ((flags & kFlagSign) != 0)) yy = -yy;
  return g1_from_affine(x, yy);
}

Bytes encode_g2(const G2Point& p_in) {
  Bytes out(kG2Bytes, 0);
  if (p_in.is_infinity()) {
    out[0] = kFlagInfinity;
    return out;
  }
  G2Point p = p_in;
  curve_normalize(p);
  int_to_be(p.x.c1.raw(), out.data(), 32);
  int_to_be(p.x.c0.raw(), out.data() + 32, 32);
  if (out[0] & 0xc0) throw std::logic_error("bn254: x overflows flag bits");
  if (fq2_is_high(p.y)) out[0] |= kFlagSign;
  return out;
}

G2Point decode_g2(const Bytes& in) {
  if (in.size() != kG2Bytes) throw MalformedInput("bad G2 encoding size");
  std::uint8_t flags = in[0] & 0xc0;
  Bytes body = in;
  body[0] &= 0x3f;
  if (flags & kFlagInfinity) {
    if ((flags & kFlagSign) != 0) throw InvalidComponent("bad G2 infinity flags");
    for (std::uint8_t b : body)
      if (b != 0) throw InvalidComponent("nonzero G2 infinity body");
    return G2Point::infinity();
  }
  Int x1 = be_to_int(body.data(), 32);
  Int x0 = be_to_int(body.data() + 32, 32);
  if (x0 >= base_modulus() || x1 >= base_modulus())
    throw InvalidComponent("G2 x out of range");
  Fq2 x{Fq(x0), Fq(x1)};
  auto y = (x.square() * x + params().b_twist).sqrt();
  if (!y) throw InvalidComponent("G2 x not on twist");
  Fq2 yy = *y;
  if (fq2_is_high(yy) != ((flags & kFlagSign) != 0)) yy = -yy;
  G2Point p = g2_from_affine(x, yy);
  if (!curve_mul(p, group_order()).is_infinity())
    throw InvalidComponent("G2 point outside order-r subgroup");
  return p;
}

Bytes encode_gt(const Fq12& z) {
  Bytes out(kGTBytes, 0);
  const Fq* coeffs[12] = {
      &z.c0.c0.c0, &z.c0.c0.c1, &z.c0.c1.c0, &z.c0.c1.c1,
      &z.c0.c2.c0, &z.c0.c2.c1, &z.c1.c0.c0, &z.c1.c0.c1,
      &z.c1.c1.c0, &z.c1.c1.c1, &z.c1.c2.c0, &z.c1.c2.c1};
  for (int i = 0; i < 12; ++i)
    int_to_be(coeffs[i]->raw(), out.data() + 32 * static_cast<std::size_t>(i), 32);
  return out;
}

Fq12 decode_gt(const Bytes& in) {
  if (in.size() != kGTBytes) throw MalformedInput("bad GT encoding size");
  Fq c[12];
  for (int i = 0; i < 12; ++i) {
    Int v = be_to_int(in.data() + 32 * static_cast<std::size_t>(i), 32);
    if (v >= base_modulus()) throw InvalidComponent("GT coefficient out of range");
    c[i] = Fq(v);
  }
  Fq12 z(Fq6(Fq2(c[0], c[1]), Fq2(c[2], c[3]), Fq2(c[4], c[5])),
         Fq6(Fq2(c[6], c[7]), Fq2(c[8], c[9]), Fq2(c[10], c[11])));
  if (!z.pow(group_order()).is_one())
    throw InvalidComponent("GT element outside order-r subgroup");
  return z;
}

}  // namespace piratte::bn
