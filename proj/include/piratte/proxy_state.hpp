// Requester-independent precomputation over a proxy key's share set. The
// direct conversion path redoes O(t^2) field work per request; this one
// spends O(t log^2 t) once per rekey and O(t) per request, and produces
// byte-identical bundles.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "piratte/algebra.hpp"
#include "piratte/errors.hpp"
#include "piratte/piratte.hpp"
#include "piratte/piratte_attr.hpp"

namespace piratte {

struct ConversionCoefficients {
  Scalar x_sum;     // X = sum_i lambda_i P(x_i)
  Scalar lambda_k;  // prod_i x_i / (x_i - u_k)
};

// Holds l'_i = P(x_i) * prod_{j != i} x_j / (x_j - x_i) for each share, the
// part of the requester's Lagrange coefficient that does not depend on the
// requester.
class PrecomputedShareSet {
 public:
  PrecomputedShareSet() = default;
  explicit PrecomputedShareSet(const std::vector<Share>& shares);

  bool contains(const Scalar& u_k) const { return x_lookup_.count(u_k) != 0; }
  // Throws RequesterRevoked when u_k is one of the share points.
  ConversionCoefficients coefficients(const Scalar& u_k) const;
  // l'_i values in share order; with unit y's these are the bare lambda'_i.
  const std::vector<Scalar>& weighted_coefficients() const { return l_prime_; }

 private:
  std::vector<Scalar> xs_;
  std::vector<Scalar> l_prime_;
  std::set<Scalar> x_lookup_;
};

struct PrecomputedProxy {
  std::uint64_t version = 0;
  PrecomputedShareSet shares;
};

struct PrecomputedAttrProxy {
  std::uint64_t version = 0;
  std::map<std::string, PrecomputedShareSet> shares;
};

PrecomputedProxy precompute_proxy(const ProxyKey& pxk);
PrecomputedAttrProxy precompute_proxy(const AttrProxyKey& pxk);

// Same contracts and outputs as convert / attr_convert, faster per request.
ConversionBundle convert_fast(const PrecomputedProxy& proxy,
                              const std::vector<std::pair<int, G2Element>>& leaf_components,
                              const Scalar& u_k);
AttrConversionBundle attr_convert_fast(const PrecomputedAttrProxy& proxy,
                                       const std::vector<AttrConversionLeaf>& leaves,
                                       const Scalar& u_k);

}  // namespace piratte
