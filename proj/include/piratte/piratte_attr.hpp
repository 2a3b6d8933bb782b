// Attribute-level revocation variant: one sharing polynomial per attribute,
// so the authority can cut a single attribute out of a user's key without
// touching the rest of it.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "piratte/algebra.hpp"
#include "piratte/errors.hpp"
#include "piratte/bsw.hpp"
#include "piratte/piratte.hpp"
#include "piratte/policy.hpp"

namespace piratte {

// Master key for the per-attribute variant. Each attribute name maps to its
// own degree-t polynomial; polynomials appear lazily the first time an
// attribute is issued or revoked. The registry only stores identities here:
// shares are per (attribute, user) and are recomputed on demand.
struct AttrMasterKey {
  ContextPtr ctx;
  Scalar beta;
  G2Element g2_alpha;
  int t = 0;
  std::map<std::string, Polynomial> polynomials;
  std::map<std::string, Scalar> registry;         // user name -> identity
  std::map<Bytes, std::string> identity_index;    // H(identity) -> user name
  std::set<Bytes> dummy_hashes;
  // Current revocation intent: attribute -> identities cut off from it.
  std::map<std::string, std::vector<Scalar>> revocation_state;
  std::uint64_t version = 0;

  int capacity() const { return t; }
};

// Proxy key: exactly t shares per provisioned attribute, revoked users'
// shares first. Attributes absent from the map cannot be converted.
struct AttrProxyKey {
  std::uint64_t version = 0;
  std::map<std::string, std::vector<Share>> shares;
};

// Conversion output. Leaves whose attribute is provisioned and not revoked
// for the requester land in `converted` with their own lambda_k; leaves the
// proxy refuses to serve (attribute revoked for this user, or not yet
// provisioned) are listed in `revoked_leaves` so the caller can route the
// policy around them.
struct AttrConversionBundle {
  std::uint64_t version = 0;
  std::map<int, Scalar> lambda_k;
  std::map<int, G2Element> converted;
  std::set<int> revoked_leaves;
};

// One leaf of a conversion request: ciphertext leaf id, its attribute name,
// and the C'_y component to be blinded.
struct AttrConversionLeaf {
  int leaf_id = 0;
  std::string attribute;
  G2Element c_prime;
};

// max_revoked bounds, per attribute, how many users can lose it between key
// refreshes. initial_attributes get their polynomials up front; others are
// created lazily by keygen or rekey.
std::pair<PublicKey, AttrMasterKey> attr_setup(ContextPtr ctx, int max_revoked,
                                               const std::vector<std::string>& initial_attributes,
                                               Rng& rng);

// Same key shape as the whole-key variant, but d_j folds in P_j(0) and
// d_dprime folds in P_j(identity) for the component's own polynomial.
PiratteSecretKey attr_keygen(AttrMasterKey& mk, const std::string& user_name,
                             const std::set<std::string>& attributes, Rng& rng);

GTElement attr_random_message(const PublicKey& pk, Rng& rng);

Ciphertext attr_encrypt(const PublicKey& pk, const GTElement& message,
                        const AccessTree& tree, Rng& rng);

// revocations: attribute -> user names losing that attribute. Every
// attribute the authority has ever seen is provisioned in the result, so
// unrelated attributes keep converting after the push. Unknown attribute
// names in `revocations` are provisioned on the spot.
AttrProxyKey attr_proxy_rekey(const PublicKey& pk, AttrMasterKey& mk,
                              const std::map<std::string, std::vector<std::string>>& revocations,
                              Rng& rng);

// Re-issues the proxy key under the stored revocation intent, picking up
// attributes introduced by keygen since the last push. Bumps the version.
AttrProxyKey attr_extend_rekey(const PublicKey& pk, AttrMasterKey& mk, Rng& rng);

AttrConversionBundle attr_convert(const AttrProxyKey& pxk,
                                  const std::vector<AttrConversionLeaf>& leaves,
                                  const Scalar& user_id);

// Picks a satisfying selection that avoids leaves the proxy refused; empty
// optional when no such selection exists.
std::optional<GTElement> attr_decrypt(const Ciphertext& ct, const PiratteSecretKey& sk,
                                      const AttrConversionBundle& bundle);

}  // namespace piratte
