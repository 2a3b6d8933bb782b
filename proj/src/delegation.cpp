#include "piratte/delegation.hpp"

#include <map>

#include "piratte/policy.hpp"

namespace piratte {

namespace {

// Leaf lookup shared by both decrypt paths.
template <typename Component>
const Component* find_component(const std::vector<Component>& comps, const std::string& attr) {
  for (const auto& c : comps)
    if (c.attr == attr) return &c;
  return nullptr;
}

}  // namespace

std::set<std::string> DelegatedKeySingle::attribute_set() const {
  std::set<std::string> out;
  for (const auto& c : components) out.insert(c.attr);
  return out;
}

std::set<std::string> DelegatedKeyMulti::attribute_set() const {
  std::set<std::string> out;
  for (const auto& c : components) out.insert(c.attr);
  return out;
}

DelegatedKeySingle delegate_single(const PiratteSecretKey& sk,
                                   const std::set<std::string>& subset,
                                   const PublicKey& pk, const Scalar& lambda_k,
                                   Rng& rng) {
  if (subset.empty()) throw NotASubset("delegated attribute set is empty");
  if (lambda_k.is_zero()) throw InvalidCoefficient("conversion coefficient is zero");
  std::set<std::string> have = sk.attribute_set();
  for (const std::string& attr : subset)
    if (!have.count(attr)) throw NotASubset("attribute not in the source key");

  const BilinearContext& ctx = *pk.ctx;
  const ScalarField& F = ctx.scalar_field();
  Scalar r_t = F.random_nonzero(rng);
  G2Element g2rt = ctx.g2().pow(r_t);
  Scalar inv_lk = F.inv(lambda_k);

  DelegatedKeySingle dk;
  dk.delegator_id = sk.user_id;
  dk.d = sk.d.mul(pk.f.pow(r_t));
  for (const auto& c : sk.components) {
    if (!subset.count(c.attr)) continue;
    Scalar rj_t = F.random_nonzero(rng);
    DelegatedSingleComponent out;
    out.attr = c.attr;
    out.d_j = c.d_j.mul(g2rt).mul(hash_to_g2(ctx, c.attr).pow(rj_t));
    out.d_prime = c.d_prime;
    out.d_dprime = c.d_dprime.mul(ctx.g1().pow(F.mul(rj_t, inv_lk)));
    dk.components.push_back(std::move(out));
  }
  return dk;
}

std::optional<GTElement> decrypt_delegated_single(const Ciphertext& ct,
                                                  const DelegatedKeySingle& dk,
                                                  const ConversionBundle& bundle,
                                                  const Scalar& delegator_lambda_k) {
  const ScalarField& F = curve_scalar_field();
  auto selection = select_satisfying_leaves(F, ct.tree, dk.attribute_set());
  if (!selection) return std::nullopt;

  std::vector<LeafInfo> leaves = tree_leaves(ct.tree);
  std::map<int, GTElement> leaf_values;
  for (int id : selection->leaves) {
    auto conv = bundle.converted.find(id);
    if (conv == bundle.converted.end())
      throw BundleMismatch("conversion bundle lacks a selected leaf");
    const auto* comp =
        find_component(dk.components, leaves[static_cast<std::size_t>(id)].attribute);
    if (!comp) throw DecryptionError("component missing for selected leaf");
    leaf_values.emplace(id, pairing_product({
        {ct.c_y[static_cast<std::size_t>(id)], comp->d_j},
        {comp->d_dprime.pow(delegator_lambda_k).inverse(),
         ct.c_prime[static_cast<std::size_t>(id)]},
        {comp->d_prime.inverse(), conv->second},
    }));
  }
  GTElement a = combine_leaf_values(*selection, leaf_values);
  return ct.c_tilde.mul(a).div(pairing(ct.c, dk.d));
}

DelegatedKeyMulti delegate_multi(const PiratteSecretKey& sk_from_a,
                                 const std::set<std::string>& subset,
                                 const PiratteMasterKey& mk_b,
                                 const Scalar& c_identity) {
  if (subset.empty()) throw NotASubset("delegated attribute set is empty");
  std::set<std::string> have = sk_from_a.attribute_set();
  for (const std::string& attr : subset)
    if (!have.count(attr)) throw NotASubset("attribute not in the source key");
  auto share = mk_b.identity_shares.find(c_identity);
  if (share == mk_b.identity_shares.end())
    throw UnknownUser("delegatee is not registered with this authority");

  const ScalarField& F = mk_b.ctx->scalar_field();
  Scalar inv_pb0 = F.inv(mk_b.poly.coefficients.front());
  Scalar pb_at_c = share->second;

  DelegatedKeyMulti dk;
  dk.b_identity = sk_from_a.user_id;
  dk.d = sk_from_a.d;
  for (const auto& c : sk_from_a.components) {
    if (!subset.count(c.attr)) continue;
    DelegatedMultiComponent out;
    out.attr = c.attr;
    out.d_j = c.d_j;
    out.d_prime = c.d_prime;
    out.d_dprime2 = c.d_dprime.pow(inv_pb0);
    out.d_dprime3 = c.d_dprime.pow(F.mul(pb_at_c, inv_pb0));
    dk.components.push_back(std::move(out));
  }
  return dk;
}

std::optional<GTElement> decrypt_delegated_multi(const Ciphertext& ct,
                                                 const DelegatedKeyMulti& dk,
                                                 const ConversionBundle& bundle_a,
                                                 const ConversionBundle& bundle_b) {
  const ScalarField& F = curve_scalar_field();
  auto selection = select_satisfying_leaves(F, ct.tree, dk.attribute_set());
  if (!selection) return std::nullopt;

  const Scalar& lambda_b = bundle_a.lambda_k;
  const Scalar& lambda_c = bundle_b.lambda_k;
  std::vector<LeafInfo> leaves = tree_leaves(ct.tree);
  std::map<int, GTElement> leaf_values;
  for (int id : selection->leaves) {
    auto conv_a = bundle_a.converted.find(id);
    auto conv_b = bundle_b.converted.find(id);
    if (conv_a == bundle_a.converted.end() || conv_b == bundle_b.converted.end())
      throw BundleMismatch("a conversion bundle lacks a selected leaf");
    const auto* comp =
        find_component(dk.components, leaves[static_cast<std::size_t>(id)].attribute);
    if (!comp) throw DecryptionError("component missing for selected leaf");
    // e(C_x, D_i) / (e(D~''_i, C''_{xB})^{lambda_B} e(D~'''_i, C'_x)^{lambda_B
    // lambda_C} e(D'_i, C''_{xA})); the exponents ride on the G1 side.
    leaf_values.emplace(id, pairing_product({
        {ct.c_y[static_cast<std::size_t>(id)], comp->d_j},
        {comp->d_dprime2.pow(lambda_b).inverse(), conv_b->second},
        {comp->d_dprime3.pow(F.mul(lambda_b, lambda_c)).inverse(),
         ct.c_prime[static_cast<std::size_t>(id)]},
        {comp->d_prime.inverse(), conv_a->second},
    }));
  }
  GTElement a = combine_leaf_values(*selection, leaf_values);
  return ct.c_tilde.mul(a).div(pairing(ct.c, dk.d));
}

}  // namespace piratte
