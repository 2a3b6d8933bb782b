#include "piratte/algebra.hpp"

#include <atomic>
#include <set>
#include <stdexcept>

#include "piratte/attribute.hpp"
#include "piratte/errors.hpp"

namespace piratte {

// ---------------------------------------------------------------------------
// ScalarField

ScalarField::ScalarField(bn::Int modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 2) throw std::invalid_argument("field modulus must be >= 2");
  if (mpz_probab_prime_p(modulus_.get_mpz_t(), 32) == 0)
    throw std::invalid_argument("field modulus must be prime");
  byte_size_ = (mpz_sizeinbase(modulus_.get_mpz_t(), 2) + 7) / 8;
}

Scalar ScalarField::make(const bn::Int& v) const {
  Scalar s;
  mpz_mod(s.value.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return s;
}

Scalar ScalarField::add(const Scalar& a, const Scalar& b) const {
  Scalar s;
  s.value = a.value + b.value;
  if (s.value >= modulus_) s.value -= modulus_;
  return s;
}

Scalar ScalarField::sub(const Scalar& a, const Scalar& b) const {
  Scalar s;
  s.value = a.value - b.value;
  if (s.value < 0) s.value += modulus_;
  return s;
}

Scalar ScalarField::mul(const Scalar& a, const Scalar& b) const {
  Scalar s;
  s.value = a.value * b.value;
  mpz_mod(s.value.get_mpz_t(), s.value.get_mpz_t(), modulus_.get_mpz_t());
  return s;
}

Scalar ScalarField::neg(const Scalar& a) const {
  Scalar s;
  if (a.value != 0) s.value = modulus_ - a.value;
  return s;
}

Scalar ScalarField::inv(const Scalar& a) const {
  Scalar s;
  if (mpz_invert(s.value.get_mpz_t(), a.value.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw std::logic_error("inverse of zero field element");
  return s;
}

Scalar ScalarField::pow(const Scalar& a, const bn::Int& e) const {
  Scalar s;
  mpz_powm(s.value.get_mpz_t(), a.value.get_mpz_t(), e.get_mpz_t(),
           modulus_.get_mpz_t());
  return s;
}

Scalar ScalarField::random(Rng& rng) const {
  // Rejection sampling over byte_size()+8 bytes would also work; an extra
  // 128 bits of width makes the mod bias negligible at any modulus size.
  std::size_t width = byte_size_ + 16;
  Bytes buf = rng.bytes(width);
  return make(bn::be_to_int(buf.data(), buf.size()));
}

Scalar ScalarField::random_nonzero(Rng& rng) const {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

Bytes ScalarField::encode(const Scalar& s) const {
  Bytes out(byte_size_);
  bn::int_to_be(s.value, out.data(), byte_size_);
  return out;
}

Scalar ScalarField::decode(const Bytes& b) const {
  if (b.size() != byte_size_) throw MalformedInput("bad scalar encoding size");
  bn::Int v = bn::be_to_int(b.data(), b.size());
  if (v >= modulus_) throw InvalidComponent("scalar out of field range");
  return Scalar(v);
}

const ScalarField& curve_scalar_field() {
  static const ScalarField field(bn::group_order());
  return field;
}

// ---------------------------------------------------------------------------
// Polynomials and interpolation

Polynomial random_polynomial(const ScalarField& field, int degree, Rng& rng,
                             std::optional<Scalar> fixed_constant) {
  if (degree < 1) throw InvalidDegree("polynomial degree must be >= 1");
  Polynomial p;
  p.coefficients.reserve(static_cast<std::size_t>(degree) + 1);
  p.coefficients.push_back(fixed_constant ? *fixed_constant : field.random(rng));
  for (int i = 1; i <= degree; ++i) p.coefficients.push_back(field.random(rng));
  return p;
}

Scalar eval_poly(const ScalarField& field, const Polynomial& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
    acc = field.add(field.mul(acc, x), *it);
  return acc;
}

std::vector<Scalar> lagrange_at(const ScalarField& field,
                                const std::vector<Scalar>& xs,
                                const Scalar& target) {
  std::set<Scalar> seen;
  for (const Scalar& x : xs) {
    if (!seen.insert(x).second) throw DuplicatePoint("repeated interpolation point");
    if (x == target) throw DegenerateTarget("target coincides with a point");
  }
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Scalar num = field.one(), den = field.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = field.mul(num, field.sub(target, xs[j]));
      den = field.mul(den, field.sub(xs[i], xs[j]));
    }
    out.push_back(field.mul(num, field.inv(den)));
  }
  return out;
}

Scalar reconstruct_secret(const ScalarField& field, const std::vector<Share>& shares) {
  if (shares.empty()) throw ReconstructionFailure("no shares");
  std::vector<Scalar> xs;
  xs.reserve(shares.size());
  for (const Share& s : shares) {
    if (s.x.is_zero()) throw ReconstructionFailure("share at x = 0");
    xs.push_back(s.x);
  }
  std::vector<Scalar> lambda;
  try {
    lambda = lagrange_at(field, xs, field.zero());
  } catch (const DuplicatePoint&) {
    throw ReconstructionFailure("duplicate share x-coordinates");
  }
  Scalar acc;
  for (std::size_t i = 0; i < shares.size(); ++i)
    acc = field.add(acc, field.mul(lambda[i], shares[i].y));
  return acc;
}

// ---------------------------------------------------------------------------
// Group elements

namespace {

void require_same_context(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw ContextMismatch("elements from different bilinear contexts");
}

}  // namespace

G1Element G1Element::pow(const Scalar& k) const {
  return {bn::curve_mul(pt_, k.value), ctx_};
}
G1Element G1Element::mul(const G1Element& o) const {
  require_same_context(ctx_, o.ctx_);
  return {bn::curve_add(pt_, o.pt_), ctx_};
}
G1Element G1Element::inverse() const { return {bn::curve_neg(pt_), ctx_}; }
bool G1Element::operator==(const G1Element& o) const {
  return ctx_ == o.ctx_ && bn::curve_eq(pt_, o.pt_);
}

G2Element G2Element::pow(const Scalar& k) const {
  return {bn::curve_mul(pt_, k.value), ctx_};
}
G2Element G2Element::mul(const G2Element& o) const {
  require_same_context(ctx_, o.ctx_);
  return {bn::curve_add(pt_, o.pt_), ctx_};
}
G2Element G2Element::inverse() const { return {bn::curve_neg(pt_), ctx_}; }
bool G2Element::operator==(const G2Element& o) const {
  return ctx_ == o.ctx_ && bn::curve_eq(pt_, o.pt_);
}

GTElement GTElement::pow(const Scalar& k) const { return {v_.pow(k.value), ctx_}; }
GTElement GTElement::mul(const GTElement& o) const {
  require_same_context(ctx_, o.ctx_);
  return {v_ * o.v_, ctx_};
}
GTElement GTElement::div(const GTElement& o) const {
  require_same_context(ctx_, o.ctx_);
  return {v_ * o.v_.inverse(), ctx_};
}
GTElement GTElement::inverse() const { return {v_.inverse(), ctx_}; }
bool GTElement::operator==(const GTElement& o) const {
  return ctx_ == o.ctx_ && v_ == o.v_;
}

// ---------------------------------------------------------------------------
// Context

namespace {
std::atomic<std::uint32_t> g_next_context_id{1};
}

BilinearContext::BilinearContext()
    : id_(g_next_context_id.fetch_add(1)),
      egg_(bn::pairing(bn::params().g1, bn::params().g2)) {}

ContextPtr BilinearContext::create() {
  return ContextPtr(new BilinearContext());
}

GTElement pairing(const G1Element& a, const G2Element& b) {
  require_same_context(a.context_id(), b.context_id());
  return {bn::pairing(a.point(), b.point()), a.context_id()};
}

GTElement pairing_product(const std::vector<std::pair<G1Element, G2Element>>& pairs) {
  if (pairs.empty()) throw std::logic_error("empty pairing product");
  std::uint32_t ctx = pairs.front().first.context_id();
  bn::Fq12 acc = bn::Fq12::one();
  for (const auto& [a, b] : pairs) {
    require_same_context(a.context_id(), ctx);
    require_same_context(b.context_id(), ctx);
    acc = acc * bn::miller_loop(a.point(), b.point());
  }
  return {bn::final_exponentiation(acc), ctx};
}

GTElement random_gt(const BilinearContext& ctx, Rng& rng) {
  return ctx.gt_generator().pow(ctx.scalar_field().random_nonzero(rng));
}

// ---------------------------------------------------------------------------
// Hash to G2

namespace {

constexpr char kHashDomain[] = "piratte/hash-to-g2/v1";

bn::Fq hash_coordinate(const std::string& attr, std::uint8_t counter,
                       std::uint8_t index) {
  Bytes data(kHashDomain, kHashDomain + sizeof(kHashDomain) - 1);
  append_u8(data, counter);
  append_u8(data, index);
  append_u32(data, static_cast<std::uint32_t>(attr.size()));
  data.insert(data.end(), attr.begin(), attr.end());
  Bytes digest = sha256(data);
  return bn::Fq(bn::be_to_int(digest.data(), digest.size()));
}

}  // namespace

G2Element hash_to_g2(const BilinearContext& ctx, std::string_view attribute) {
  std::string attr = normalize_attribute(attribute);
  const bn::Params& pp = bn::params();
  for (int counter = 0; counter < 256; ++counter) {
    bn::Fq2 x{hash_coordinate(attr, static_cast<std::uint8_t>(counter), 0),
              hash_coordinate(attr, static_cast<std::uint8_t>(counter), 1)};
    auto y = (x.square() * x + pp.b_twist).sqrt();
    if (!y) continue;
    // Canonical root: pick the lexicographically smaller of {y, -y} so the
    // map is independent of sqrt internals.
    bn::Fq2 yy = *y;
    bn::Fq2 ny = -yy;
    bool high = (yy.c1 != ny.c1) ? yy.c1.raw() > ny.c1.raw()
                                 : yy.c0.raw() > ny.c0.raw();
    if (high) yy = ny;
    bn::G2Point p = bn::g2_from_affine(x, yy);
    bn::G2Point cleared = bn::curve_mul(p, pp.g2_cofactor);
    if (cleared.is_infinity()) continue;
    return {cleared, ctx.id()};
  }
  throw std::logic_error("hash_to_g2 exhausted counters");  // ~2^-256 paths
}

}  // namespace piratte
