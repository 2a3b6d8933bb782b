#include "piratte/piratte_attr.hpp"

#include <algorithm>

#include "piratte/errors.hpp"

namespace piratte {

namespace {

Bytes identity_hash(const ScalarField& field, const Scalar& x) {
  return sha256(field.encode(x));
}

Scalar fresh_point(const AttrMasterKey& mk, Rng& rng) {
  const ScalarField& F = mk.ctx->scalar_field();
  for (;;) {
    Scalar x = F.random_nonzero(rng);
    Bytes h = identity_hash(F, x);
    if (mk.identity_index.count(h)) continue;
    if (mk.dummy_hashes.count(h)) continue;
    return x;
  }
}

const Polynomial& ensure_polynomial(AttrMasterKey& mk, const std::string& attr, Rng& rng) {
  auto it = mk.polynomials.find(attr);
  if (it == mk.polynomials.end()) {
    it = mk.polynomials
             .emplace(attr, random_polynomial(mk.ctx->scalar_field(), mk.t, rng))
             .first;
  }
  return it->second;
}

// Exactly t shares for one attribute: the revoked identities' true shares
// padded with fresh dummy points. Dummy x-values never collide with any
// identity, so an honest requester is never accidentally inside the set.
std::vector<Share> provision_attribute(AttrMasterKey& mk, const Polynomial& poly,
                                       const std::vector<Scalar>& revoked, Rng& rng) {
  const ScalarField& F = mk.ctx->scalar_field();
  std::vector<Share> shares;
  shares.reserve(static_cast<std::size_t>(mk.t));
  for (const Scalar& u : revoked) shares.push_back({u, eval_poly(F, poly, u)});
  while (static_cast<int>(shares.size()) < mk.t) {
    Scalar x = fresh_point(mk, rng);
    mk.dummy_hashes.insert(identity_hash(F, x));
    shares.push_back({x, eval_poly(F, poly, x)});
  }
  return shares;
}

AttrProxyKey build_proxy_key(AttrMasterKey& mk, Rng& rng) {
  AttrProxyKey pxk;
  for (const auto& [attr, poly] : mk.polynomials) {
    auto rev = mk.revocation_state.find(attr);
    static const std::vector<Scalar> kNone;
    pxk.shares.emplace(attr,
                       provision_attribute(mk, poly, rev == mk.revocation_state.end() ? kNone : rev->second, rng));
  }
  pxk.version = ++mk.version;
  return pxk;
}

}  // namespace

std::pair<PublicKey, AttrMasterKey> attr_setup(ContextPtr ctx, int max_revoked,
                                               const std::vector<std::string>& initial_attributes,
                                               Rng& rng) {
  if (max_revoked < 1) throw InvalidDegree("revocation capacity must be >= 1");
  const ScalarField& F = ctx->scalar_field();
  Scalar alpha = F.random_nonzero(rng);
  Scalar beta = F.random_nonzero(rng);
  PublicKey pk;
  pk.ctx = ctx;
  pk.h = ctx->g1().pow(beta);
  pk.f = ctx->g2().pow(F.inv(beta));
  pk.egg_alpha = ctx->gt_generator().pow(alpha);
  AttrMasterKey mk;
  mk.ctx = ctx;
  mk.beta = beta;
  mk.g2_alpha = ctx->g2().pow(alpha);
  mk.t = max_revoked;
  for (const std::string& attr : initial_attributes) ensure_polynomial(mk, attr, rng);
  return {std::move(pk), std::move(mk)};
}

PiratteSecretKey attr_keygen(AttrMasterKey& mk, const std::string& user_name,
                             const std::set<std::string>& attributes, Rng& rng) {
  if (attributes.empty()) throw InvalidAttributeSet("key needs at least one attribute");
  const BilinearContext& ctx = *mk.ctx;
  const ScalarField& F = ctx.scalar_field();

  auto reg = mk.registry.find(user_name);
  if (reg == mk.registry.end()) {
    Scalar identity = fresh_point(mk, rng);
    mk.identity_index.emplace(identity_hash(F, identity), user_name);
    reg = mk.registry.emplace(user_name, std::move(identity)).first;
  }
  const Scalar& identity = reg->second;

  Scalar r = F.random_nonzero(rng);
  G2Element g2r = ctx.g2().pow(r);
  PiratteSecretKey sk;
  sk.user_id = identity;
  sk.d = mk.g2_alpha.mul(g2r).pow(F.inv(mk.beta));
  for (const std::string& attr : attributes) {
    const Polynomial& poly = ensure_polynomial(mk, attr, rng);
    Scalar rj = F.random_nonzero(rng);
    PiratteSecretKeyComponent c;
    c.attr = attr;
    c.d_j = g2r.mul(hash_to_g2(ctx, attr).pow(F.mul(rj, poly.coefficients.front())));
    c.d_prime = ctx.g1().pow(rj);
    c.d_dprime = c.d_prime.pow(eval_poly(F, poly, identity));
    sk.components.push_back(std::move(c));
  }
  return sk;
}

GTElement attr_random_message(const PublicKey& pk, Rng& rng) {
  return random_gt(*pk.ctx, rng);
}

Ciphertext attr_encrypt(const PublicKey& pk, const GTElement& message,
                        const AccessTree& tree, Rng& rng) {
  return detail::encrypt_traced(pk, message, tree, rng, nullptr);
}

AttrProxyKey attr_proxy_rekey(const PublicKey& pk, AttrMasterKey& mk,
                              const std::map<std::string, std::vector<std::string>>& revocations,
                              Rng& rng) {
  (void)pk;
  std::map<std::string, std::vector<Scalar>> state;
  for (const auto& [attr, names] : revocations) {
    ensure_polynomial(mk, attr, rng);
    std::vector<Scalar> ids;
    for (const std::string& name : names) {
      auto it = mk.registry.find(name);
      if (it == mk.registry.end()) throw UnknownUser("revoked user was never registered");
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (static_cast<int>(ids.size()) > mk.t)
      throw RevocationCapacityExceeded("revocation list exceeds capacity t");
    state.emplace(attr, std::move(ids));
  }
  mk.revocation_state = std::move(state);
  return build_proxy_key(mk, rng);
}

AttrProxyKey attr_extend_rekey(const PublicKey& pk, AttrMasterKey& mk, Rng& rng) {
  (void)pk;
  return build_proxy_key(mk, rng);
}

AttrConversionBundle attr_convert(const AttrProxyKey& pxk,
                                  const std::vector<AttrConversionLeaf>& leaves,
                                  const Scalar& user_id) {
  if (leaves.empty()) throw EmptyRequest("no leaf components to convert");
  const ScalarField& F = curve_scalar_field();

  AttrConversionBundle out;
  out.version = pxk.version;
  // X and lambda_k depend only on the attribute's share set, so compute them
  // once per distinct attribute in the request.
  struct PerAttr { bool revoked; Scalar x_sum; Scalar lambda_k; };
  std::map<std::string, PerAttr> cache;
  for (const AttrConversionLeaf& leaf : leaves) {
    auto cached = cache.find(leaf.attribute);
    if (cached == cache.end()) {
      PerAttr entry{true, F.zero(), F.zero()};
      auto it = pxk.shares.find(leaf.attribute);
      if (it != pxk.shares.end() &&
          std::none_of(it->second.begin(), it->second.end(),
                       [&](const Share& s) { return s.x == user_id; })) {
        const std::vector<Share>& sh = it->second;
        entry.revoked = false;
        for (std::size_t i = 0; i < sh.size(); ++i) {
          Scalar num = user_id, den = F.sub(user_id, sh[i].x);
          for (std::size_t j = 0; j < sh.size(); ++j) {
            if (j == i) continue;
            num = F.mul(num, sh[j].x);
            den = F.mul(den, F.sub(sh[j].x, sh[i].x));
          }
          entry.x_sum = F.add(entry.x_sum, F.mul(sh[i].y, F.mul(num, F.inv(den))));
        }
        entry.lambda_k = F.one();
        for (const Share& s : sh)
          entry.lambda_k = F.mul(entry.lambda_k, F.mul(s.x, F.inv(F.sub(s.x, user_id))));
      }
      cached = cache.emplace(leaf.attribute, std::move(entry)).first;
    }
    const PerAttr& entry = cached->second;
    if (entry.revoked) {
      out.revoked_leaves.insert(leaf.leaf_id);
    } else {
      out.lambda_k.emplace(leaf.leaf_id, entry.lambda_k);
      out.converted.emplace(leaf.leaf_id, leaf.c_prime.pow(entry.x_sum));
    }
  }
  return out;
}

std::optional<GTElement> attr_decrypt(const Ciphertext& ct, const PiratteSecretKey& sk,
                                      const AttrConversionBundle& bundle) {
  const ScalarField& F = curve_scalar_field();
  auto usable = [&](int id) { return bundle.converted.count(id) != 0; };
  auto selection = select_satisfying_leaves(F, ct.tree, sk.attribute_set(), usable);
  if (!selection) return std::nullopt;

  std::vector<LeafInfo> leaves = tree_leaves(ct.tree);
  std::map<int, GTElement> leaf_values;
  for (int id : selection->leaves) {
    auto conv = bundle.converted.find(id);
    auto lam = bundle.lambda_k.find(id);
    if (conv == bundle.converted.end() || lam == bundle.lambda_k.end())
      throw BundleMismatch("conversion bundle lacks a selected leaf");
    const std::string& attr = leaves[static_cast<std::size_t>(id)].attribute;
    const PiratteSecretKeyComponent* comp = nullptr;
    for (const auto& c : sk.components)
      if (c.attr == attr) { comp = &c; break; }
    if (!comp) throw DecryptionError("component missing for selected leaf");
    leaf_values.emplace(id, pairing_product({
        {ct.c_y[static_cast<std::size_t>(id)], comp->d_j},
        {comp->d_dprime.pow(lam->second).inverse(),
         ct.c_prime[static_cast<std::size_t>(id)]},
        {comp->d_prime.inverse(), conv->second},
    }));
  }
  GTElement a = combine_leaf_values(*selection, leaf_values);
  return ct.c_tilde.mul(a).div(pairing(ct.c, sk.d));
}

}  // namespace piratte
