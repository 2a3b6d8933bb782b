#include "piratte/bsw.hpp"

#include "piratte/errors.hpp"

namespace piratte {

std::set<std::string> BswSecretKey::attribute_set() const {
  std::set<std::string> out;
  for (const auto& c : components) out.insert(c.attr);
  return out;
}

std::pair<PublicKey, BswMasterKey> bsw_setup(ContextPtr ctx, Rng& rng) {
  const ScalarField& F = ctx->scalar_field();
  Scalar alpha = F.random_nonzero(rng);
  Scalar beta = F.random_nonzero(rng);
  PublicKey pk;
  pk.ctx = ctx;
  pk.h = ctx->g1().pow(beta);
  pk.f = ctx->g2().pow(F.inv(beta));
  pk.egg_alpha = ctx->gt_generator().pow(alpha);
  BswMasterKey mk;
  mk.ctx = ctx;
  mk.beta = beta;
  mk.g2_alpha = ctx->g2().pow(alpha);
  return {std::move(pk), std::move(mk)};
}

BswSecretKey bsw_keygen(const BswMasterKey& mk, const std::set<std::string>& attrs,
                        Rng& rng) {
  if (attrs.empty()) throw InvalidAttributeSet("key needs at least one attribute");
  const BilinearContext& ctx = *mk.ctx;
  const ScalarField& F = ctx.scalar_field();
  Scalar r = F.random_nonzero(rng);
  G2Element g2r = ctx.g2().pow(r);
  BswSecretKey sk;
  sk.d = mk.g2_alpha.mul(g2r).pow(F.inv(mk.beta));
  for (const std::string& attr : attrs) {
    Scalar rj = F.random_nonzero(rng);
    BswSecretKeyComponent c;
    c.attr = attr;
    c.d_j = g2r.mul(hash_to_g2(ctx, attr).pow(rj));
    c.d_prime = ctx.g1().pow(rj);
    sk.components.push_back(std::move(c));
  }
  return sk;
}

namespace detail {

Ciphertext encrypt_traced(const PublicKey& pk, const GTElement& m,
                          const AccessTree& tree, Rng& rng, EncryptTrace* trace) {
  validate_tree(tree);
  const BilinearContext& ctx = *pk.ctx;
  const ScalarField& F = ctx.scalar_field();
  Scalar s = F.random_nonzero(rng);
  Ciphertext ct;
  ct.tree = tree;
  ct.c_tilde = m.mul(pk.egg_alpha.pow(s));
  ct.c = pk.h.pow(s);
  LeafShareAssignment shares = share_over_tree(F, tree, s, rng);
  std::vector<LeafInfo> leaves = tree_leaves(tree);
  ct.c_y.reserve(leaves.size());
  ct.c_prime.reserve(leaves.size());
  for (const LeafInfo& leaf : leaves) {
    const Scalar& q0 = shares.at(leaf.id);
    ct.c_y.push_back(ctx.g1().pow(q0));
    ct.c_prime.push_back(hash_to_g2(ctx, leaf.attribute).pow(q0));
  }
  if (trace) {
    trace->s = s;
    trace->shares = std::move(shares);
  }
  return ct;
}

}  // namespace detail

Ciphertext bsw_encrypt(const PublicKey& pk, const GTElement& m,
                       const AccessTree& tree, Rng& rng) {
  return detail::encrypt_traced(pk, m, tree, rng, nullptr);
}

std::optional<GTElement> bsw_decrypt(const Ciphertext& ct, const BswSecretKey& sk) {
  const ScalarField& F = curve_scalar_field();
  auto selection = select_satisfying_leaves(F, ct.tree, sk.attribute_set());
  if (!selection) return std::nullopt;

  std::vector<LeafInfo> leaves = tree_leaves(ct.tree);
  std::map<int, GTElement> leaf_values;
  for (int id : selection->leaves) {
    const std::string& attr = leaves[static_cast<std::size_t>(id)].attribute;
    const BswSecretKeyComponent* comp = nullptr;
    for (const auto& c : sk.components)
      if (c.attr == attr) { comp = &c; break; }
    // Selection only picks attributes the key holds.
    if (!comp) throw DecryptionError("component missing for selected leaf");
    // e(C_x, D_i) / e(D'_i, C'_x), one shared final exponentiation.
    leaf_values.emplace(id, pairing_product({
        {ct.c_y[static_cast<std::size_t>(id)], comp->d_j},
        {comp->d_prime.inverse(), ct.c_prime[static_cast<std::size_t>(id)]},
    }));
  }
  GTElement a = combine_leaf_values(*selection, leaf_values);
  // C~ * A / e(C, D) = m
  return ct.c_tilde.mul(a).div(pairing(ct.c, sk.d));
}

BswSecretKey bsw_delegate(const BswSecretKey& sk, const std::set<std::string>& subset,
                          const PublicKey& pk, Rng& rng) {
  if (subset.empty()) throw NotASubset("delegated attribute set is empty");
  std::set<std::string> have = sk.attribute_set();
  for (const std::string& a : subset)
    if (!have.count(a)) throw NotASubset("attribute not in source key: " + a);
  const BilinearContext& ctx = *pk.ctx;
  const ScalarField& F = ctx.scalar_field();
  Scalar rt = F.random_nonzero(rng);
  G2Element g2rt = ctx.g2().pow(rt);
  BswSecretKey out;
  out.d = sk.d.mul(pk.f.pow(rt));
  for (const auto& c : sk.components) {
    if (!subset.count(c.attr)) continue;
    Scalar rtj = F.random_nonzero(rng);
    BswSecretKeyComponent nc;
    nc.attr = c.attr;
    nc.d_j = c.d_j.mul(g2rt).mul(hash_to_g2(ctx, c.attr).pow(rtj));
    nc.d_prime = c.d_prime.mul(ctx.g1().pow(rtj));
    out.components.push_back(std::move(nc));
  }
  return out;
}

}  // namespace piratte
