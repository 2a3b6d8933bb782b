#pragma once

// Complete-key revocation: a degree-t master polynomial blinds every secret
// key with P(0); each user key carries the user's share point. The proxy
// holds t shares (revoked users padded with dummies) and converts ciphertext
// leaf components per request. A revoked requester's own point duplicates
// one the proxy already uses, leaving t points total, so interpolation at 0
// is out of reach.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "piratte/bsw.hpp"
#include "piratte/errors.hpp"

namespace piratte {

struct PiratteSecretKeyComponent {
  std::string attr;
  G2Element d_j;       // g2^{r + h_j r_j P(0)}
  G1Element d_prime;   // g1^{r_j}
  G1Element d_dprime;  // g1^{r_j P(u_k)}
};

struct PiratteSecretKey {
  Scalar user_id;  // u_k
  G2Element d;     // g2^{(alpha+r)/beta}
  std::vector<PiratteSecretKeyComponent> components;

  std::set<std::string> attribute_set() const;
};

struct UserRecord {
  Scalar identity;       // u_k, nonzero, unique
  Scalar p_at_identity;  // P(u_k), cached at registration
};

struct PiratteMasterKey {
  ContextPtr ctx;
  Scalar beta;
  G2Element g2_alpha;
  Polynomial poly;  // degree t

  // Registration state. Identities, dummy x values, and zero never collide;
  // dummies are remembered hashed so later registrations cannot land on one.
  std::map<std::string, UserRecord> registry;
  std::map<Scalar, Scalar> identity_shares;  // u_k -> P(u_k)
  std::set<Bytes> dummy_hashes;
  std::vector<Scalar> revocation_state;  // current complete revoked set
  std::uint64_t version = 0;             // last proxy key issued

  int capacity() const { return poly.degree(); }  // t
};

struct ProxyKey {
  std::uint64_t version = 0;
  std::vector<Share> shares;  // exactly t; revoked users first, dummies after
};

struct ConversionBundle {
  std::uint64_t version = 0;
  Scalar lambda_k;
  std::map<int, G2Element> converted;  // leaf id -> (C'_y)^{sum lambda_i P(u_i)}
};

// t >= 1 (InvalidDegree otherwise).
std::pair<PublicKey, PiratteMasterKey> piratte_setup(ContextPtr ctx, int t, Rng& rng);

// Registers user_name on first issue (fresh nonzero identity); re-issue
// reuses the identity with fresh blinding. Empty attrs -> InvalidAttributeSet.
PiratteSecretKey piratte_keygen(PiratteMasterKey& mk, const std::string& user_name,
                                const std::set<std::string>& attrs, Rng& rng);

// Identical to the baseline encryption; the scheme changes nothing here.
Ciphertext piratte_encrypt(const PublicKey& pk, const GTElement& m,
                           const AccessTree& tree, Rng& rng);

// revoked is the COMPLETE current revoked set (un-revoke by omission).
// |revoked| <= t (RevocationCapacityExceeded), all registered (UnknownUser).
// Pads with fresh dummy shares to exactly t and bumps the version.
ProxyKey proxy_rekey(const PublicKey& pk, PiratteMasterKey& mk,
                     const std::vector<Scalar>& revoked, Rng& rng);

// The proxy-side conversion. u_k matching a share x -> RequesterRevoked;
// empty request -> EmptyRequest. Direct quadratic formula; the service layer
// has an equivalent precomputed fast path.
ConversionBundle convert(const ProxyKey& pxk,
                         const std::vector<std::pair<int, G2Element>>& leaf_components,
                         const Scalar& u_k);

// Empty optional = attributes do not satisfy the tree. A revoked user gets
// a wrong group element back, not an error; the hybrid container's
// authenticity check is what surfaces DecryptionFailed. Bundle missing a
// selected leaf -> BundleMismatch.
std::optional<GTElement> piratte_decrypt(const Ciphertext& ct,
                                         const PiratteSecretKey& sk,
                                         const ConversionBundle& bundle);

}  // namespace piratte
