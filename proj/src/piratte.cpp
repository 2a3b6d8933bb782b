#include "piratte/piratte.hpp"

#include <algorithm>

#include "piratte/errors.hpp"

namespace piratte {

namespace {

Bytes identity_hash(const ScalarField& field, const Scalar& x) {
  return sha256(field.encode(x));
}

// Fresh nonzero x distinct from every registered identity and every dummy
// ever issued. Collisions are a 2^-250 event but the check costs nothing.
Scalar fresh_point(const PiratteMasterKey& mk, Rng& rng) {
  const ScalarField& F = mk.ctx->scalar_field();
  for (;;) {
    Scalar x = F.random_nonzero(rng);
    if (mk.identity_shares.count(x)) continue;
    if (mk.dummy_hashes.count(identity_hash(F, x))) continue;
    return x;
  }
}

}  // namespace

std::set<std::string> PiratteSecretKey::attribute_set() const {
  std::set<std::string> out;
  for (const auto& c : components) out.insert(c.attr);
  return out;
}

std::pair<PublicKey, PiratteMasterKey> piratte_setup(ContextPtr ctx, int t, Rng& rng) {
  if (t < 1) throw InvalidDegree("revocation capacity must be >= 1");
  const ScalarField& F = ctx->scalar_field();
  Scalar alpha = F.random_nonzero(rng);
  Scalar beta = F.random_nonzero(rng);
  PublicKey pk;
  pk.ctx = ctx;
  pk.h = ctx->g1().pow(beta);
  pk.f = ctx->g2().pow(F.inv(beta));
  pk.egg_alpha = ctx->gt_generator().pow(alpha);
  PiratteMasterKey mk;
  mk.ctx = ctx;
  mk.beta = beta;
  mk.g2_alpha = ctx->g2().pow(alpha);
  mk.poly = random_polynomial(F, t, rng);
  return {std::move(pk), std::move(mk)};
}

PiratteSecretKey piratte_keygen(PiratteMasterKey& mk, const std::string& user_name,
                                const std::set<std::string>& attrs, Rng& rng) {
  if (attrs.empty()) throw InvalidAttributeSet("key needs at least one attribute");
  const BilinearContext& ctx = *mk.ctx;
  const ScalarField& F = ctx.scalar_field();

  auto reg = mk.registry.find(user_name);
  if (reg == mk.registry.end()) {
    UserRecord rec;
    rec.identity = fresh_point(mk, rng);
    rec.p_at_identity = eval_poly(F, mk.poly, rec.identity);
    mk.identity_shares.emplace(rec.identity, rec.p_at_identity);
    reg = mk.registry.emplace(user_name, std::move(rec)).first;
  }
  const UserRecord& rec = reg->second;
  const Scalar& p0 = mk.poly.coefficients.front();

  Scalar r = F.random_nonzero(rng);
  G2Element g2r = ctx.g2().pow(r);
  PiratteSecretKey sk;
  sk.user_id = rec.identity;
  sk.d = mk.g2_alpha.mul(g2r).pow(F.inv(mk.beta));
  for (const std::string& attr : attrs) {
    Scalar rj = F.random_nonzero(rng);
    PiratteSecretKeyComponent c;
    c.attr = attr;
    c.d_j = g2r.mul(hash_to_g2(ctx, attr).pow(F.mul(rj, p0)));
    c.d_prime = ctx.g1().pow(rj);
    c.d_dprime = c.d_prime.pow(rec.p_at_identity);
    sk.components.push_back(std::move(c));
  }
  return sk;
}

Ciphertext piratte_encrypt(const PublicKey& pk, const GTElement& m,
                           const AccessTree& tree, Rng& rng) {
  return detail::encrypt_traced(pk, m, tree, rng, nullptr);
}

ProxyKey proxy_rekey(const PublicKey& pk, PiratteMasterKey& mk,
                     const std::vector<Scalar>& revoked, Rng& rng) {
  (void)pk;
  const ScalarField& F = mk.ctx->scalar_field();
  std::vector<Scalar> unique = revoked;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  int t = mk.capacity();
  if (static_cast<int>(unique.size()) > t)
    throw RevocationCapacityExceeded("revocation list exceeds capacity t");

  ProxyKey pxk;
  pxk.shares.reserve(static_cast<std::size_t>(t));
  for (const Scalar& u : unique) {
    auto it = mk.identity_shares.find(u);
    if (it == mk.identity_shares.end())
      throw UnknownUser("revoked identity was never registered");
    pxk.shares.push_back({u, it->second});
  }
  while (static_cast<int>(pxk.shares.size()) < t) {
    Scalar x = fresh_point(mk, rng);
    mk.dummy_hashes.insert(identity_hash(F, x));
    pxk.shares.push_back({x, eval_poly(F, mk.poly, x)});
  }
  mk.revocation_state = std::move(unique);
  pxk.version = ++mk.version;
  return pxk;
}

ConversionBundle convert(const ProxyKey& pxk,
                         const std::vector<std::pair<int, G2Element>>& leaf_components,
                         const Scalar& u_k) {
  if (leaf_components.empty()) throw EmptyRequest("no leaf components to convert");
  const ScalarField& F = curve_scalar_field();
  const std::vector<Share>& sh = pxk.shares;
  for (const Share& s : sh)
    if (s.x == u_k) throw RequesterRevoked("requester identity is in the proxy key");

  // X = sum_i lambda_i P(u_i), lambda over the point set {x_1..x_t, u_k} at 0.
  Scalar X;
  for (std::size_t i = 0; i < sh.size(); ++i) {
    Scalar num = u_k, den = F.sub(u_k, sh[i].x);
    for (std::size_t j = 0; j < sh.size(); ++j) {
      if (j == i) continue;
      num = F.mul(num, sh[j].x);
      den = F.mul(den, F.sub(sh[j].x, sh[i].x));
    }
    X = F.add(X, F.mul(sh[i].y, F.mul(num, F.inv(den))));
  }
  ConversionBundle out;
  out.version = pxk.version;
  Scalar lk = F.one();
  for (const Share& s : sh) lk = F.mul(lk, F.mul(s.x, F.inv(F.sub(s.x, u_k))));
  out.lambda_k = lk;
  for (const auto& [id, c_prime] : leaf_components)
    out.converted.emplace(id, c_prime.pow(X));
  return out;
}

std::optional<GTElement> piratte_decrypt(const Ciphertext& ct,
                                         const PiratteSecretKey& sk,
                                         const ConversionBundle& bundle) {
  const ScalarField& F = curve_scalar_field();
  auto selection = select_satisfying_leaves(F, ct.tree, sk.attribute_set());
  if (!selection) return std::nullopt;

  std::vector<LeafInfo> leaves = tree_leaves(ct.tree);
  std::map<int, GTElement> leaf_values;
  for (int id : selection->leaves) {
    auto conv = bundle.converted.find(id);
    if (conv == bundle.converted.end())
      throw BundleMismatch("conversion bundle lacks a selected leaf");
    const std::string& attr = leaves[static_cast<std::size_t>(id)].attribute;
    const PiratteSecretKeyComponent* comp = nullptr;
    for (const auto& c : sk.components)
      if (c.attr == attr) { comp = &c; break; }
    if (!comp) throw DecryptionError("component missing for selected leaf");
    // e(C_x, D_i) / (e(D''_i, C'_x)^{lambda_k} e(D'_i, C''_x)); the lambda_k
    // power rides on the G1 side so one product/final-exp covers the leaf.
    leaf_values.emplace(id, pairing_product({
        {ct.c_y[static_cast<std::size_t>(id)], comp->d_j},
        {comp->d_dprime.pow(bundle.lambda_k).inverse(),
         ct.c_prime[static_cast<std::size_t>(id)]},
        {comp->d_prime.inverse(), conv->second},
    }));
  }
  GTElement a = combine_leaf_values(*selection, leaf_values);
  return ct.c_tilde.mul(a).div(pairing(ct.c, sk.d));
}

}  // namespace piratte
