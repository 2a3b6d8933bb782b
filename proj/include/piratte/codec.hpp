// Wire format for every persisted or transmitted component. Envelope:
// magic "PIR1", component tag (1 byte), format version (1 byte, currently 1),
// then a tag-defined body. Group elements, scalars and strings carry 2-byte
// big-endian length prefixes; collection counts are 2 or 4 bytes as noted;
// versions are 8 bytes. Access trees serialize preorder: node type byte
// (0 internal, 1 leaf), internal nodes carry threshold and child count,
// leaves carry the attribute name.
//
// Decoders reject bad magic/tag/version, truncated or oversized bodies, and
// group elements outside their subgroup (MalformedInput / InvalidComponent).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piratte/algebra.hpp"
#include "piratte/bsw.hpp"
#include "piratte/bytes.hpp"
#include "piratte/delegation.hpp"
#include "piratte/errors.hpp"
#include "piratte/piratte.hpp"
#include "piratte/piratte_attr.hpp"

namespace piratte {

enum class WireTag : std::uint8_t {
  public_key = 1,
  master_key = 2,
  secret_key = 3,
  ciphertext = 4,
  proxy_key = 5,
  bundle_request = 6,
  bundle_response = 7,
  delegated_single = 8,
  delegated_multi = 9,
  hybrid = 10,
};

// Scheme discriminator inside master/secret/proxy keys and bundles.
enum class KeyScheme : std::uint8_t {
  bsw = 0,              // baseline, no revocation
  key_revocation = 1,   // whole-key revocation, one polynomial
  attr_revocation = 2,  // per-attribute polynomials
};

Bytes encode_public_key(const PublicKey& pk);
PublicKey decode_public_key(ContextPtr ctx, const Bytes& in);

Bytes encode_master_key(const BswMasterKey& mk);
Bytes encode_master_key(const PiratteMasterKey& mk);
Bytes encode_master_key(const AttrMasterKey& mk);
KeyScheme master_key_scheme(const Bytes& in);
BswMasterKey decode_bsw_master_key(ContextPtr ctx, const Bytes& in);
PiratteMasterKey decode_piratte_master_key(ContextPtr ctx, const Bytes& in);
AttrMasterKey decode_attr_master_key(ContextPtr ctx, const Bytes& in);

Bytes encode_secret_key(const BswSecretKey& sk);
// scheme records which flow the key belongs to (key_revocation or
// attr_revocation); the body layout is identical.
Bytes encode_secret_key(const PiratteSecretKey& sk, KeyScheme scheme);
KeyScheme secret_key_scheme(const Bytes& in);
BswSecretKey decode_bsw_secret_key(ContextPtr ctx, const Bytes& in);
PiratteSecretKey decode_piratte_secret_key(ContextPtr ctx, const Bytes& in);

Bytes encode_ciphertext(const Ciphertext& ct);
Ciphertext decode_ciphertext(ContextPtr ctx, const Bytes& in);

Bytes encode_proxy_key(const ProxyKey& pxk);
Bytes encode_proxy_key(const AttrProxyKey& pxk);
KeyScheme proxy_key_scheme(const Bytes& in);
ProxyKey decode_key_proxy_key(const Bytes& in);
AttrProxyKey decode_attr_proxy_key(const Bytes& in);

// One conversion request leaf; the attribute is blank in key mode.
struct BundleRequestLeaf {
  int id = 0;
  std::string attribute;
  G2Element c_prime;
};

struct BundleRequest {
  KeyScheme scheme = KeyScheme::key_revocation;
  Scalar user_id;
  std::vector<BundleRequestLeaf> leaves;
};

Bytes encode_bundle_request(const BundleRequest& req);
BundleRequest decode_bundle_request(ContextPtr ctx, const Bytes& in);

Bytes encode_conversion_bundle(const ConversionBundle& b);
ConversionBundle decode_conversion_bundle(ContextPtr ctx, const Bytes& in);
Bytes encode_attr_conversion_bundle(const AttrConversionBundle& b);
AttrConversionBundle decode_attr_conversion_bundle(ContextPtr ctx, const Bytes& in);
KeyScheme bundle_scheme(const Bytes& in);

Bytes encode_delegated_single(const DelegatedKeySingle& dk);
DelegatedKeySingle decode_delegated_single(ContextPtr ctx, const Bytes& in);
Bytes encode_delegated_multi(const DelegatedKeyMulti& dk);
DelegatedKeyMulti decode_delegated_multi(ContextPtr ctx, const Bytes& in);

// Hybrid payload: the ABE ciphertext that wraps the data key, the AEAD
// nonce, and the sealed data (ciphertext || auth tag).
struct HybridContainer {
  Bytes abe_ciphertext;
  Bytes nonce;
  Bytes sealed;
};

Bytes encode_hybrid(const HybridContainer& h);
HybridContainer decode_hybrid(const Bytes& in);

// Closed-form sizes of the wire encodings above, parameterized the way the
// scheme scales: attribute count, leaf count, revocation capacity. Every
// formula mirrors its encoder field by field, so predicted == measured
// exactly; tests assert that.
struct SizeModel {
  std::size_t g1 = 0, g2 = 0, gt = 0, zp = 0;

  static SizeModel from_context(const BilinearContext& ctx);

  std::size_t header() const { return 6; }           // magic + tag + version
  std::size_t block(std::size_t raw) const { return 2 + raw; }

  std::size_t public_key() const;
  // name_len: attribute name length, fixed across the sweep.
  std::size_t bsw_secret_key(std::size_t attrs, std::size_t name_len) const;
  std::size_t piratte_secret_key(std::size_t attrs, std::size_t name_len) const;
  // internal_nodes/leaves describe the access tree.
  std::size_t ciphertext(std::size_t internal_nodes, std::size_t leaves,
                         std::size_t name_len) const;
  std::size_t proxy_key(std::size_t t) const;
  std::size_t conversion_bundle(std::size_t leaves) const;
};

}  // namespace piratte
