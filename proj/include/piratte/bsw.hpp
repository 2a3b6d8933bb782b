#pragma once

// BSW ciphertext-policy ABE over the asymmetric pairing layout, the baseline
// the proxy-revocation scheme extends. Group placement matches the revocable
// scheme (C, C_y in G1; C', D, D_j in G2; D'_j in G1) so both share the
// ciphertext type, wire formats, and benchmarks.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "piratte/algebra.hpp"
#include "piratte/errors.hpp"
#include "piratte/policy.hpp"

namespace piratte {

// Shared by the baseline and both revocation schemes.
struct PublicKey {
  ContextPtr ctx;
  G1Element h;          // g1^beta
  G2Element f;          // g2^(1/beta), delegation support
  GTElement egg_alpha;  // e(g1,g2)^alpha
};

struct BswMasterKey {
  ContextPtr ctx;
  Scalar beta;
  G2Element g2_alpha;
};

struct BswSecretKeyComponent {
  std::string attr;    // normalized
  G2Element d_j;       // g2^r H(j)^{r_j}
  G1Element d_prime;   // g1^{r_j}
};

struct BswSecretKey {
  G2Element d;  // g2^{(alpha+r)/beta}
  std::vector<BswSecretKeyComponent> components;

  std::set<std::string> attribute_set() const;
};

// Component order follows leaf ids (preorder over the tree's leaves).
struct Ciphertext {
  AccessTree tree;
  GTElement c_tilde;              // m * e(g1,g2)^{alpha s}
  G1Element c;                    // h^s
  std::vector<G1Element> c_y;     // g1^{q_y(0)}
  std::vector<G2Element> c_prime; // H(att(y))^{q_y(0)}
};

std::pair<PublicKey, BswMasterKey> bsw_setup(ContextPtr ctx, Rng& rng);

// Empty attrs -> InvalidAttributeSet.
BswSecretKey bsw_keygen(const BswMasterKey& mk, const std::set<std::string>& attrs,
                        Rng& rng);

Ciphertext bsw_encrypt(const PublicKey& pk, const GTElement& m,
                       const AccessTree& tree, Rng& rng);

// Empty optional = sk's attributes do not satisfy the tree.
std::optional<GTElement> bsw_decrypt(const Ciphertext& ct, const BswSecretKey& sk);

// Re-randomized key for subset of sk's attributes; NotASubset otherwise.
BswSecretKey bsw_delegate(const BswSecretKey& sk, const std::set<std::string>& subset,
                          const PublicKey& pk, Rng& rng);

namespace detail {

// Instrumented encryption: surfaces the blinding exponent and per-leaf
// shares so tests can verify component structure against the formulas.
struct EncryptTrace {
  Scalar s;
  LeafShareAssignment shares;
};

Ciphertext encrypt_traced(const PublicKey& pk, const GTElement& m,
                          const AccessTree& tree, Rng& rng, EncryptTrace* trace);

}  // namespace detail

}  // namespace piratte
