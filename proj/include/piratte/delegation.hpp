// Access delegation on top of proxy-mediated revocation. Single-authority
// delegation re-randomizes a key for a subset of its attributes; the
// delegatee decrypts by presenting the DELEGATOR's identity to the proxy.
// Multi-authority delegation (A issued B's key, B re-keys it for C) needs
// both A's and B's proxies to cooperate at decryption time.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "piratte/algebra.hpp"
#include "piratte/errors.hpp"
#include "piratte/piratte.hpp"

namespace piratte {

struct DelegatedSingleComponent {
  std::string attr;
  G2Element d_j;      // D~_j = D_j g2^{r~} H(j)^{r~_j}
  G1Element d_prime;  // D'_j unchanged
  G1Element d_dprime; // D~''_j = D''_j g1^{r~_j / lambda_k}
};

// lambda_k is baked into d_dprime, so the key only works while the proxy
// still serves the version it was created against; a rekey invalidates it.
struct DelegatedKeySingle {
  Scalar delegator_id;  // identity the delegatee presents to the proxy
  G2Element d;          // D~ = D f^{r~}
  std::vector<DelegatedSingleComponent> components;

  std::set<std::string> attribute_set() const;
};

struct DelegatedMultiComponent {
  std::string attr;
  G2Element d_j;
  G1Element d_prime;
  G1Element d_dprime2;  // (D''_j)^{1/P_B(0)}
  G1Element d_dprime3;  // (D''_j)^{P_B(C)/P_B(0)}
};

struct DelegatedKeyMulti {
  Scalar b_identity;  // B's identity under A, presented to A's proxy
  G2Element d;
  std::vector<DelegatedMultiComponent> components;

  std::set<std::string> attribute_set() const;
};

// lambda_k: the delegator's current conversion coefficient, fetched from the
// proxy at delegation time (any convert call for the delegator returns it).
DelegatedKeySingle delegate_single(const PiratteSecretKey& sk,
                                   const std::set<std::string>& subset,
                                   const PublicKey& pk, const Scalar& lambda_k,
                                   Rng& rng);

// bundle must be converted for the delegator's identity; delegator_lambda_k
// is that conversion's coefficient and must match the one used at delegation.
std::optional<GTElement> decrypt_delegated_single(const Ciphertext& ct,
                                                  const DelegatedKeySingle& dk,
                                                  const ConversionBundle& bundle,
                                                  const Scalar& delegator_lambda_k);

// sk_from_a: the key A issued to B. mk_b: B's own master key, under which the
// final delegatee C must already be registered (identified by C_identity).
DelegatedKeyMulti delegate_multi(const PiratteSecretKey& sk_from_a,
                                 const std::set<std::string>& subset,
                                 const PiratteMasterKey& mk_b,
                                 const Scalar& c_identity);

// bundle_a: from A's proxy, converted for B's identity. bundle_b: from B's
// proxy, converted for C's identity. Both must cover the selected leaves.
std::optional<GTElement> decrypt_delegated_multi(const Ciphertext& ct,
                                                 const DelegatedKeyMulti& dk,
                                                 const ConversionBundle& bundle_a,
                                                 const ConversionBundle& bundle_b);

}  // namespace piratte
