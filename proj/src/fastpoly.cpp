#include "piratte/fastpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "piratte/errors.hpp"

namespace piratte {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Result size must stay comfortably under the field's 2-adic capacity and
// large enough that the O(n log n) constant beats schoolbook.
constexpr std::size_t kNttCutoff = 64;

}  // namespace

PolyOps::PolyOps(const ScalarField& field) : field_(&field), two_adicity_(0) {
  bn::Int m1 = field.modulus() - 1;
  while (mpz_even_p(m1.get_mpz_t())) {
    m1 >>= 1;
    ++two_adicity_;
  }
  // x^((p-1)/2^s) has order exactly 2^s iff x is a nonresidue.
  bn::Int exp = (field.modulus() - 1) >> two_adicity_;
  bn::Int half = (field.modulus() - 1) >> 1;
  for (unsigned long cand = 2;; ++cand) {
    Scalar c = field.make(bn::Int(cand));
    if (field.pow(c, half) != field.one()) {
      root_ = field.pow(c, exp);
      break;
    }
  }
}

std::size_t PolyOps::ntt_limit() const {
  if (two_adicity_ >= 63) return std::size_t(1) << 62;
  return std::size_t(1) << two_adicity_;
}

void PolyOps::ntt(std::vector<Scalar>& a, bool inverse) const {
  const ScalarField& f = *field_;
  std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    Scalar w = root_;
    for (std::size_t big = std::size_t(1) << two_adicity_; big > len; big >>= 1)
      w = f.mul(w, w);
    if (inverse) w = f.inv(w);
    for (std::size_t i = 0; i < n; i += len) {
      Scalar wn = f.one();
      for (std::size_t j = 0; j < len / 2; ++j) {
        Scalar u = a[i + j];
        Scalar v = f.mul(a[i + j + len / 2], wn);
        a[i + j] = f.add(u, v);
        a[i + j + len / 2] = f.sub(u, v);
        wn = f.mul(wn, w);
      }
    }
  }
  if (inverse) {
    Scalar ninv = f.inv(f.make(bn::Int(static_cast<unsigned long>(n))));
    for (Scalar& x : a) x = f.mul(x, ninv);
  }
}

Poly PolyOps::mul_school(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  const ScalarField& f = *field_;
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  trim(out);
  return out;
}

Poly PolyOps::mul_ntt(const Poly& a, const Poly& b) const {
  std::size_t need = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < need) n <<= 1;
  std::vector<Scalar> fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fa.resize(n);
  fb.resize(n);
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = field_->mul(fa[i], fb[i]);
  ntt(fa, true);
  fa.resize(need);
  trim(fa);
  return fa;
}

Poly PolyOps::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  std::size_t need = a.size() + b.size() - 1;
  if (need < kNttCutoff || need > ntt_limit()) return mul_school(a, b);
  return mul_ntt(a, b);
}

Poly PolyOps::from_roots(const std::vector<Scalar>& roots) const {
  // Pairwise product tree keeps factor degrees balanced so mul() stays fast.
  std::vector<Poly> level;
  level.reserve(roots.size());
  for (const Scalar& r : roots) level.push_back(Poly{field_->neg(r), field_->one()});
  if (level.empty()) return Poly{field_->one()};
  while (level.size() > 1) {
    std::vector<Poly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(mul(level[i], level[i + 1]));
    if (level.size() & 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

Poly PolyOps::derivative(const Poly& a) const {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = field_->mul(a[i], field_->make(bn::Int(static_cast<unsigned long>(i))));
  trim(out);
  return out;
}

Poly PolyOps::inv_series(const Poly& f, std::size_t k) const {
  Poly g{field_->inv(f[0])};
  std::size_t cur = 1;
  while (cur < k) {
    cur = std::min(cur * 2, k);
    Poly fg = mul(Poly(f.begin(), f.begin() + std::min(f.size(), cur)), g);
    fg.resize(cur);
    // g <- g*(2 - f*g) mod X^cur
    Poly two_minus(cur);
    two_minus[0] = field_->sub(field_->make(2), fg.empty() ? Scalar() : fg[0]);
    for (std::size_t i = 1; i < cur; ++i) two_minus[i] = field_->neg(fg[i]);
    g = mul(g, two_minus);
    g.resize(cur);
  }
  trim(g);
  if (g.empty()) g.push_back(Scalar());
  return g;
}

Poly PolyOps::rem(const Poly& a, const Poly& b) const {
  Poly A = a, B = b;
  trim(A);
  trim(B);
  if (B.empty()) throw std::logic_error("polynomial division by zero");
  if (A.size() < B.size()) return A;
  if (B.size() == 1) return {};
  std::size_t qlen = A.size() - B.size() + 1;
  if (qlen * 2 < kNttCutoff) {
    // Schoolbook long division for small quotients.
    const ScalarField& f = *field_;
    Scalar lead_inv = f.inv(B.back());
    Poly R = A;
    for (std::size_t i = qlen; i-- > 0;) {
      Scalar q = f.mul(R[i + B.size() - 1], lead_inv);
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j < B.size(); ++j)
        R[i + j] = f.sub(R[i + j], f.mul(q, B[j]));
    }
    R.resize(B.size() - 1);
    trim(R);
    return R;
  }
  // rev(A) = rev(B)*rev(Q) mod X^qlen, so Q falls out of a series inverse.
  Poly ra(A.rbegin(), A.rend()), rb(B.rbegin(), B.rend());
  Poly rbinv = inv_series(rb, qlen);
  Poly rq = mul(ra, rbinv);
  rq.resize(qlen);
  Poly Q(rq.rbegin(), rq.rend());
  Poly R = A;
  Poly bq = mul(B, Q);
  R.resize(B.size() - 1);
  for (std::size_t i = 0; i < R.size() && i < bq.size(); ++i)
    R[i] = field_->sub(R[i], bq[i]);
  trim(R);
  return R;
}

std::vector<Scalar> PolyOps::eval_many(const Poly& p,
                                       const std::vector<Scalar>& xs) const {
  if (xs.empty()) return {};
  if (xs.size() < kNttCutoff) {
    Polynomial wrapped;
    wrapped.coefficients = p.empty() ? Poly{Scalar()} : p;
    std::vector<Scalar> out;
    out.reserve(xs.size());
    for (const Scalar& x : xs) out.push_back(eval_poly(*field_, wrapped, x));
    return out;
  }
  // Subproduct tree of the points, then remainders pushed root to leaves.
  std::vector<std::vector<Poly>> tree;
  tree.emplace_back();
  tree.back().reserve(xs.size());
  for (const Scalar& x : xs) tree.back().push_back(Poly{field_->neg(x), field_->one()});
  while (tree.back().size() > 1) {
    const std::vector<Poly>& prev = tree.back();
    std::vector<Poly> next;
    next.reserve((prev.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < prev.size(); i += 2)
      next.push_back(mul(prev[i], prev[i + 1]));
    if (prev.size() & 1) next.push_back(prev.back());
    tree.push_back(std::move(next));
  }
  std::vector<Poly> rems{rem(p, tree.back().front())};
  for (std::size_t lvl = tree.size() - 1; lvl-- > 0;) {
    const std::vector<Poly>& nodes = tree[lvl];
    std::vector<Poly> next;
    next.reserve(nodes.size());
    // An odd tail node equals its parent; rem() then degrades to a copy.
    for (std::size_t i = 0; i < nodes.size(); ++i)
      next.push_back(rem(rems[i / 2], nodes[i]));
    rems = std::move(next);
  }
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (const Poly& r : rems) out.push_back(r.empty() ? Scalar() : r[0]);
  return out;
}

std::vector<Scalar> batch_inverse(const ScalarField& field,
                                  const std::vector<Scalar>& xs) {
  std::vector<Scalar> prefix(xs.size());
  Scalar acc = field.one();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw std::logic_error("batch_inverse of zero");
    prefix[i] = acc;
    acc = field.mul(acc, xs[i]);
  }
  Scalar inv = field.inv(acc);
  std::vector<Scalar> out(xs.size());
  for (std::size_t i = xs.size(); i-- > 0;) {
    out[i] = field.mul(inv, prefix[i]);
    inv = field.mul(inv, xs[i]);
  }
  return out;
}

std::vector<Scalar> vandermonde_derivative(const PolyOps& ops,
                                           const std::vector<Scalar>& xs) {
  Poly v = ops.from_roots(xs);
  return ops.eval_many(ops.derivative(v), xs);
}

}  // namespace piratte
