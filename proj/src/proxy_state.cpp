#include "piratte/proxy_state.hpp"

#include "piratte/fastpoly.hpp"

namespace piratte {

PrecomputedShareSet::PrecomputedShareSet(const std::vector<Share>& shares) {
  const ScalarField& F = curve_scalar_field();
  const std::size_t t = shares.size();
  xs_.reserve(t);
  for (const Share& s : shares) {
    xs_.push_back(s.x);
    if (!x_lookup_.insert(s.x).second)
      throw DuplicatePoint("proxy key shares collide");
  }
  // prod_{j != i} (x_j - x_i) = (-1)^{t-1} V'(x_i) with V = prod (X - x_j);
  // prod_{j != i} x_j = (prod_j x_j) / x_i. Share x's are nonzero.
  PolyOps ops(F);
  std::vector<Scalar> vprime = vandermonde_derivative(ops, xs_);
  const bool negate = ((t - 1) % 2) == 1;
  std::vector<Scalar> dens(t);
  for (std::size_t i = 0; i < t; ++i) {
    dens[i] = F.mul(xs_[i], vprime[i]);
    if (negate) dens[i] = F.neg(dens[i]);
  }
  std::vector<Scalar> inv = batch_inverse(F, dens);
  Scalar prod_x = F.one();
  for (const Scalar& x : xs_) prod_x = F.mul(prod_x, x);
  l_prime_.reserve(t);
  for (std::size_t i = 0; i < t; ++i)
    l_prime_.push_back(F.mul(shares[i].y, F.mul(prod_x, inv[i])));
}

ConversionCoefficients PrecomputedShareSet::coefficients(const Scalar& u_k) const {
  if (contains(u_k)) throw RequesterRevoked("requester identity is in the proxy key");
  const ScalarField& F = curve_scalar_field();
  std::vector<Scalar> diffs;
  diffs.reserve(xs_.size());
  for (const Scalar& x : xs_) diffs.push_back(F.sub(u_k, x));
  std::vector<Scalar> inv = batch_inverse(F, diffs);
  ConversionCoefficients out;
  out.x_sum = F.zero();
  out.lambda_k = F.one();
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    out.x_sum = F.add(out.x_sum, F.mul(l_prime_[i], inv[i]));
    out.lambda_k = F.mul(out.lambda_k, F.mul(xs_[i], F.neg(inv[i])));
  }
  out.x_sum = F.mul(u_k, out.x_sum);
  return out;
}

PrecomputedProxy precompute_proxy(const ProxyKey& pxk) {
  PrecomputedProxy out;
  out.version = pxk.version;
  out.shares = PrecomputedShareSet(pxk.shares);
  return out;
}

PrecomputedAttrProxy precompute_proxy(const AttrProxyKey& pxk) {
  PrecomputedAttrProxy out;
  out.version = pxk.version;
  for (const auto& [attr, shares] : pxk.shares)
    out.shares.emplace(attr, PrecomputedShareSet(shares));
  return out;
}

ConversionBundle convert_fast(const PrecomputedProxy& proxy,
                              const std::vector<std::pair<int, G2Element>>& leaf_components,
                              const Scalar& u_k) {
  if (leaf_components.empty()) throw EmptyRequest("no leaf components to convert");
  ConversionCoefficients c = proxy.shares.coefficients(u_k);
  ConversionBundle out;
  out.version = proxy.version;
  out.lambda_k = c.lambda_k;
  for (const auto& [id, c_prime] : leaf_components)
    out.converted.emplace(id, c_prime.pow(c.x_sum));
  return out;
}

AttrConversionBundle attr_convert_fast(const PrecomputedAttrProxy& proxy,
                                       const std::vector<AttrConversionLeaf>& leaves,
                                       const Scalar& u_k) {
  if (leaves.empty()) throw EmptyRequest("no leaf components to convert");
  AttrConversionBundle out;
  out.version = proxy.version;
  struct PerAttr { bool revoked; ConversionCoefficients c; };
  std::map<std::string, PerAttr> cache;
  for (const AttrConversionLeaf& leaf : leaves) {
    auto cached = cache.find(leaf.attribute);
    if (cached == cache.end()) {
      PerAttr entry{true, {}};
      auto it = proxy.shares.find(leaf.attribute);
      if (it != proxy.shares.end() && !it->second.contains(u_k)) {
        entry.revoked = false;
        entry.c = it->second.coefficients(u_k);
      }
      cached = cache.emplace(leaf.attribute, std::move(entry)).first;
    }
    const PerAttr& entry = cached->second;
    if (entry.revoked) {
      out.revoked_leaves.insert(leaf.leaf_id);
    } else {
      out.lambda_k.emplace(leaf.leaf_id, entry.c.lambda_k);
      out.converted.emplace(leaf.leaf_id, leaf.c_prime.pow(entry.c.x_sum));
    }
  }
  return out;
}

}  // namespace piratte
