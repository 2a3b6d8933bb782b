#pragma once

// Dense polynomial arithmetic over a runtime prime field. Multiplication,
// building a polynomial from its roots, and multipoint evaluation switch to
// an NTT-based fast path when the field's multiplicative group has enough
// 2-adic structure (the curve order does; tiny test fields fall back to
// schoolbook). The proxy precomputation depends on this to stay subquadratic.

#include <vector>

#include "piratte/algebra.hpp"

namespace piratte {

// Coefficients ascending a_0..a_n; trailing zeros trimmed; empty = zero.
using Poly = std::vector<Scalar>;

class PolyOps {
 public:
  explicit PolyOps(const ScalarField& field);

  const ScalarField& field() const { return *field_; }

  Poly mul(const Poly& a, const Poly& b) const;
  // prod_i (X - roots[i]); degree = roots.size().
  Poly from_roots(const std::vector<Scalar>& roots) const;
  Poly derivative(const Poly& a) const;
  // Remainder of a by b; b must be nonzero.
  Poly rem(const Poly& a, const Poly& b) const;
  // p(xs[0]), ..., p(xs[n-1]) via a subproduct/remainder tree.
  std::vector<Scalar> eval_many(const Poly& p, const std::vector<Scalar>& xs) const;

 private:
  std::size_t ntt_limit() const;  // largest supported transform size
  void ntt(std::vector<Scalar>& a, bool inverse) const;
  Poly mul_ntt(const Poly& a, const Poly& b) const;
  Poly mul_school(const Poly& a, const Poly& b) const;
  // Inverse of f modulo X^k (f[0] != 0), by Newton iteration.
  Poly inv_series(const Poly& f, std::size_t k) const;

  const ScalarField* field_;
  int two_adicity_;
  Scalar root_;  // primitive 2^two_adicity_-th root of unity (unused if tiny)
};

// Inverses of all inputs with one field inversion; zero input is a caller bug.
std::vector<Scalar> batch_inverse(const ScalarField& field,
                                  const std::vector<Scalar>& xs);

// V'(x_i) for V = prod (X - x_i): the denominators of Lagrange interpolation,
// all at once. xs must be pairwise distinct.
std::vector<Scalar> vandermonde_derivative(const PolyOps& ops,
                                           const std::vector<Scalar>& xs);

}  // namespace piratte
