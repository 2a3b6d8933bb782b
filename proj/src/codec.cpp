#include "piratte/codec.hpp"

#include <limits>

#include "piratte/policy.hpp"

namespace piratte {

namespace {

constexpr std::uint8_t kFormatVersion = 1;
constexpr int kMaxTreeDepth = 64;

void put_header(Bytes& out, WireTag tag) {
  out.push_back('P');
  out.push_back('I');
  out.push_back('R');
  out.push_back('1');
  append_u8(out, static_cast<std::uint8_t>(tag));
  append_u8(out, kFormatVersion);
}

ByteReader open_envelope(const Bytes& in, WireTag want) {
  ByteReader r(in);
  Bytes magic = r.take(4);
  if (magic != Bytes{'P', 'I', 'R', '1'}) throw MalformedInput("bad magic");
  std::uint8_t tag = r.u8();
  if (tag != static_cast<std::uint8_t>(want))
    throw MalformedInput("unexpected component tag");
  std::uint8_t ver = r.u8();
  if (ver != kFormatVersion) throw MalformedInput("unsupported format version");
  return r;
}

void finish(const ByteReader& r) {
  if (!r.done()) throw MalformedInput("trailing bytes after component body");
}

void put_block(Bytes& out, const Bytes& b) {
  if (b.size() > std::numeric_limits<std::uint16_t>::max())
    throw MalformedInput("block exceeds length prefix");
  append_u16(out, static_cast<std::uint16_t>(b.size()));
  out.insert(out.end(), b.begin(), b.end());
}

Bytes get_block(ByteReader& r) { return r.take(r.u16()); }

void put_str(Bytes& out, const std::string& s) {
  put_block(out, Bytes(s.begin(), s.end()));
}

std::string get_str(ByteReader& r) {
  Bytes b = get_block(r);
  return std::string(b.begin(), b.end());
}

void put_count16(Bytes& out, std::size_t n) {
  if (n > std::numeric_limits<std::uint16_t>::max())
    throw MalformedInput("collection exceeds count prefix");
  append_u16(out, static_cast<std::uint16_t>(n));
}

void put_count32(Bytes& out, std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw MalformedInput("collection exceeds count prefix");
  append_u32(out, static_cast<std::uint32_t>(n));
}

void put_scalar(Bytes& out, const Scalar& s) {
  put_block(out, curve_scalar_field().encode(s));
}

Scalar get_scalar(ByteReader& r) {
  return curve_scalar_field().decode(get_block(r));
}

void put_g1(Bytes& out, const G1Element& e) { put_block(out, e.to_bytes()); }
void put_g2(Bytes& out, const G2Element& e) { put_block(out, e.to_bytes()); }
void put_gt(Bytes& out, const GTElement& e) { put_block(out, e.to_bytes()); }

G1Element get_g1(ByteReader& r, const BilinearContext& ctx) {
  return ctx.decode_g1(get_block(r));
}
G2Element get_g2(ByteReader& r, const BilinearContext& ctx) {
  return ctx.decode_g2(get_block(r));
}
GTElement get_gt(ByteReader& r, const BilinearContext& ctx) {
  return ctx.decode_gt(get_block(r));
}

void put_hash(Bytes& out, const Bytes& h) {
  if (h.size() != 32) throw MalformedInput("hash is not 32 bytes");
  out.insert(out.end(), h.begin(), h.end());
}

void put_tree_node(Bytes& out, const PolicyNode& n) {
  if (n.is_leaf()) {
    append_u8(out, 1);
    put_str(out, n.attribute);
  } else {
    append_u8(out, 0);
    put_count16(out, static_cast<std::size_t>(n.threshold));
    put_count16(out, n.children.size());
    for (const PolicyNode& c : n.children) put_tree_node(out, c);
  }
}

PolicyNode get_tree_node(ByteReader& r, int depth) {
  if (depth > kMaxTreeDepth) throw MalformedInput("access tree too deep");
  PolicyNode n;
  std::uint8_t type = r.u8();
  if (type == 1) {
    n.attribute = get_str(r);
  } else if (type == 0) {
    n.threshold = r.u16();
    std::uint16_t count = r.u16();
    n.children.reserve(count);
    for (std::uint16_t i = 0; i < count; ++i)
      n.children.push_back(get_tree_node(r, depth + 1));
  } else {
    throw MalformedInput("unknown tree node type");
  }
  return n;
}

void put_tree(Bytes& out, const AccessTree& t) { put_tree_node(out, t.root); }

AccessTree get_tree(ByteReader& r) {
  AccessTree t{get_tree_node(r, 0)};
  validate_tree(t);  // thresholds, arity, attribute form
  return t;
}

KeyScheme get_scheme(ByteReader& r) {
  std::uint8_t s = r.u8();
  if (s > 2) throw MalformedInput("unknown key scheme");
  return static_cast<KeyScheme>(s);
}

// Scheme byte immediately follows the envelope in every keyed component.
KeyScheme peek_scheme(const Bytes& in, WireTag tag) {
  ByteReader r = open_envelope(in, tag);
  return get_scheme(r);
}

Bytes identity_hash(const Scalar& x) {
  return sha256(curve_scalar_field().encode(x));
}

}  // namespace

Bytes encode_public_key(const PublicKey& pk) {
  Bytes out;
  put_header(out, WireTag::public_key);
  put_g1(out, pk.h);
  put_g2(out, pk.f);
  put_gt(out, pk.egg_alpha);
  return out;
}

PublicKey decode_public_key(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::public_key);
  PublicKey pk;
  pk.ctx = ctx;
  pk.h = get_g1(r, *ctx);
  pk.f = get_g2(r, *ctx);
  pk.egg_alpha = get_gt(r, *ctx);
  finish(r);
  return pk;
}

Bytes encode_master_key(const BswMasterKey& mk) {
  Bytes out;
  put_header(out, WireTag::master_key);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::bsw));
  put_scalar(out, mk.beta);
  put_g2(out, mk.g2_alpha);
  return out;
}

Bytes encode_master_key(const PiratteMasterKey& mk) {
  Bytes out;
  put_header(out, WireTag::master_key);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::key_revocation));
  put_scalar(out, mk.beta);
  put_g2(out, mk.g2_alpha);
  put_count16(out, mk.poly.coefficients.size());
  for (const Scalar& c : mk.poly.coefficients) put_scalar(out, c);
  put_count32(out, mk.registry.size());
  for (const auto& [name, rec] : mk.registry) {
    put_str(out, name);
    put_scalar(out, rec.identity);
    put_scalar(out, rec.p_at_identity);
  }
  put_count32(out, mk.dummy_hashes.size());
  for (const Bytes& h : mk.dummy_hashes) put_hash(out, h);
  put_count16(out, mk.revocation_state.size());
  for (const Scalar& u : mk.revocation_state) put_scalar(out, u);
  append_u64(out, mk.version);
  return out;
}

Bytes encode_master_key(const AttrMasterKey& mk) {
  Bytes out;
  put_header(out, WireTag::master_key);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::attr_revocation));
  put_scalar(out, mk.beta);
  put_g2(out, mk.g2_alpha);
  put_count16(out, static_cast<std::size_t>(mk.t));
  put_count32(out, mk.polynomials.size());
  for (const auto& [attr, poly] : mk.polynomials) {
    put_str(out, attr);
    put_count16(out, poly.coefficients.size());
    for (const Scalar& c : poly.coefficients) put_scalar(out, c);
  }
  put_count32(out, mk.registry.size());
  for (const auto& [name, identity] : mk.registry) {
    put_str(out, name);
    put_scalar(out, identity);
  }
  put_count32(out, mk.dummy_hashes.size());
  for (const Bytes& h : mk.dummy_hashes) put_hash(out, h);
  put_count32(out, mk.revocation_state.size());
  for (const auto& [attr, ids] : mk.revocation_state) {
    put_str(out, attr);
    put_count16(out, ids.size());
    for (const Scalar& u : ids) put_scalar(out, u);
  }
  append_u64(out, mk.version);
  return out;
}

KeyScheme master_key_scheme(const Bytes& in) {
  return peek_scheme(in, WireTag::master_key);
}

BswMasterKey decode_bsw_master_key(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::master_key);
  if (get_scheme(r) != KeyScheme::bsw) throw MalformedInput("not a baseline master key");
  BswMasterKey mk;
  mk.ctx = ctx;
  mk.beta = get_scalar(r);
  mk.g2_alpha = get_g2(r, *ctx);
  finish(r);
  return mk;
}

PiratteMasterKey decode_piratte_master_key(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::master_key);
  if (get_scheme(r) != KeyScheme::key_revocation)
    throw MalformedInput("not a key-revocation master key");
  PiratteMasterKey mk;
  mk.ctx = ctx;
  mk.beta = get_scalar(r);
  mk.g2_alpha = get_g2(r, *ctx);
  std::uint16_t coeffs = r.u16();
  if (coeffs < 2) throw MalformedInput("sharing polynomial below degree 1");
  mk.poly.coefficients.reserve(coeffs);
  for (std::uint16_t i = 0; i < coeffs; ++i)
    mk.poly.coefficients.push_back(get_scalar(r));
  std::uint32_t users = r.u32();
  for (std::uint32_t i = 0; i < users; ++i) {
    std::string name = get_str(r);
    UserRecord rec;
    rec.identity = get_scalar(r);
    rec.p_at_identity = get_scalar(r);
    mk.identity_shares.emplace(rec.identity, rec.p_at_identity);
    if (!mk.registry.emplace(std::move(name), std::move(rec)).second)
      throw MalformedInput("duplicate user in registry");
  }
  std::uint32_t dummies = r.u32();
  for (std::uint32_t i = 0; i < dummies; ++i) {
    Bytes h = r.take(32);
    mk.dummy_hashes.insert(std::move(h));
  }
  std::uint16_t revoked = r.u16();
  for (std::uint16_t i = 0; i < revoked; ++i)
    mk.revocation_state.push_back(get_scalar(r));
  mk.version = r.u64();
  finish(r);
  return mk;
}

AttrMasterKey decode_attr_master_key(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::master_key);
  if (get_scheme(r) != KeyScheme::attr_revocation)
    throw MalformedInput("not an attribute-revocation master key");
  AttrMasterKey mk;
  mk.ctx = ctx;
  mk.beta = get_scalar(r);
  mk.g2_alpha = get_g2(r, *ctx);
  mk.t = r.u16();
  if (mk.t < 1) throw MalformedInput("revocation capacity below 1");
  std::uint32_t polys = r.u32();
  for (std::uint32_t i = 0; i < polys; ++i) {
    std::string attr = get_str(r);
    std::uint16_t coeffs = r.u16();
    if (coeffs != static_cast<std::uint16_t>(mk.t + 1))
      throw MalformedInput("polynomial degree disagrees with capacity");
    Polynomial p;
    p.coefficients.reserve(coeffs);
    for (std::uint16_t j = 0; j < coeffs; ++j) p.coefficients.push_back(get_scalar(r));
    if (!mk.polynomials.emplace(std::move(attr), std::move(p)).second)
      throw MalformedInput("duplicate attribute polynomial");
  }
  std::uint32_t users = r.u32();
  for (std::uint32_t i = 0; i < users; ++i) {
    std::string name = get_str(r);
    Scalar identity = get_scalar(r);
    mk.identity_index.emplace(identity_hash(identity), name);
    if (!mk.registry.emplace(std::move(name), std::move(identity)).second)
      throw MalformedInput("duplicate user in registry");
  }
  std::uint32_t dummies = r.u32();
  for (std::uint32_t i = 0; i < dummies; ++i) mk.dummy_hashes.insert(r.take(32));
  std::uint32_t revocations = r.u32();
  for (std::uint32_t i = 0; i < revocations; ++i) {
    std::string attr = get_str(r);
    std::uint16_t n = r.u16();
    std::vector<Scalar> ids;
    ids.reserve(n);
    for (std::uint16_t j = 0; j < n; ++j) ids.push_back(get_scalar(r));
    if (!mk.revocation_state.emplace(std::move(attr), std::move(ids)).second)
      throw MalformedInput("duplicate attribute in revocation state");
  }
  mk.version = r.u64();
  finish(r);
  return mk;
}

Bytes encode_secret_key(const BswSecretKey& sk) {
  Bytes out;
  put_header(out, WireTag::secret_key);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::bsw));
  put_g2(out, sk.d);
  put_count16(out, sk.components.size());
  for (const auto& c : sk.components) {
    put_str(out, c.attr);
    put_g2(out, c.d_j);
    put_g1(out, c.d_prime);
  }
  return out;
}

Bytes encode_secret_key(const PiratteSecretKey& sk, KeyScheme scheme) {
  if (scheme != KeyScheme::key_revocation && scheme != KeyScheme::attr_revocation)
    throw MalformedInput("secret key scheme must be a revocation scheme");
  Bytes out;
  put_header(out, WireTag::secret_key);
  append_u8(out, static_cast<std::uint8_t>(scheme));
  put_scalar(out, sk.user_id);
  put_g2(out, sk.d);
  put_count16(out, sk.components.size());
  for (const auto& c : sk.components) {
    put_str(out, c.attr);
    put_g2(out, c.d_j);
    put_g1(out, c.d_prime);
    put_g1(out, c.d_dprime);
  }
  return out;
}

KeyScheme secret_key_scheme(const Bytes& in) {
  return peek_scheme(in, WireTag::secret_key);
}

BswSecretKey decode_bsw_secret_key(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::secret_key);
  if (get_scheme(r) != KeyScheme::bsw) throw MalformedInput("not a baseline secret key");
  BswSecretKey sk;
  sk.d = get_g2(r, *ctx);
  std::uint16_t n = r.u16();
  if (n == 0) throw MalformedInput("secret key with no components");
  for (std::uint16_t i = 0; i < n; ++i) {
    BswSecretKeyComponent c;
    c.attr = get_str(r);
    c.d_j = get_g2(r, *ctx);
    c.d_prime = get_g1(r, *ctx);
    sk.components.push_back(std::move(c));
  }
  finish(r);
  return sk;
}

PiratteSecretKey decode_piratte_secret_key(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::secret_key);
  KeyScheme s = get_scheme(r);
  if (s == KeyScheme::bsw) throw MalformedInput("baseline key lacks proxy components");
  PiratteSecretKey sk;
  sk.user_id = get_scalar(r);
  sk.d = get_g2(r, *ctx);
  std::uint16_t n = r.u16();
  if (n == 0) throw MalformedInput("secret key with no components");
  for (std::uint16_t i = 0; i < n; ++i) {
    PiratteSecretKeyComponent c;
    c.attr = get_str(r);
    c.d_j = get_g2(r, *ctx);
    c.d_prime = get_g1(r, *ctx);
    c.d_dprime = get_g1(r, *ctx);
    sk.components.push_back(std::move(c));
  }
  finish(r);
  return sk;
}

Bytes encode_ciphertext(const Ciphertext& ct) {
  Bytes out;
  put_header(out, WireTag::ciphertext);
  put_tree(out, ct.tree);
  put_gt(out, ct.c_tilde);
  put_g1(out, ct.c);
  put_count16(out, ct.c_y.size());
  for (std::size_t i = 0; i < ct.c_y.size(); ++i) {
    put_g1(out, ct.c_y[i]);
    put_g2(out, ct.c_prime[i]);
  }
  return out;
}

Ciphertext decode_ciphertext(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::ciphertext);
  Ciphertext ct;
  ct.tree = get_tree(r);
  ct.c_tilde = get_gt(r, *ctx);
  ct.c = get_g1(r, *ctx);
  std::uint16_t n = r.u16();
  if (n != tree_leaves(ct.tree).size())
    throw MalformedInput("leaf component count disagrees with the tree");
  ct.c_y.reserve(n);
  ct.c_prime.reserve(n);
  for (std::uint16_t i = 0; i < n; ++i) {
    ct.c_y.push_back(get_g1(r, *ctx));
    ct.c_prime.push_back(get_g2(r, *ctx));
  }
  finish(r);
  return ct;
}

Bytes encode_proxy_key(const ProxyKey& pxk) {
  Bytes out;
  put_header(out, WireTag::proxy_key);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::key_revocation));
  append_u64(out, pxk.version);
  put_count16(out, pxk.shares.size());
  for (const Share& s : pxk.shares) {
    put_scalar(out, s.x);
    put_scalar(out, s.y);
  }
  return out;
}

Bytes encode_proxy_key(const AttrProxyKey& pxk) {
  Bytes out;
  put_header(out, WireTag::proxy_key);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::attr_revocation));
  append_u64(out, pxk.version);
  put_count32(out, pxk.shares.size());
  for (const auto& [attr, shares] : pxk.shares) {
    put_str(out, attr);
    put_count16(out, shares.size());
    for (const Share& s : shares) {
      put_scalar(out, s.x);
      put_scalar(out, s.y);
    }
  }
  return out;
}

KeyScheme proxy_key_scheme(const Bytes& in) {
  return peek_scheme(in, WireTag::proxy_key);
}

ProxyKey decode_key_proxy_key(const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::proxy_key);
  if (get_scheme(r) != KeyScheme::key_revocation)
    throw MalformedInput("not a key-revocation proxy key");
  ProxyKey pxk;
  pxk.version = r.u64();
  std::uint16_t n = r.u16();
  if (n == 0) throw MalformedInput("proxy key with no shares");
  pxk.shares.reserve(n);
  for (std::uint16_t i = 0; i < n; ++i) {
    Share s;
    s.x = get_scalar(r);
    s.y = get_scalar(r);
    pxk.shares.push_back(std::move(s));
  }
  finish(r);
  return pxk;
}

AttrProxyKey decode_attr_proxy_key(const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::proxy_key);
  if (get_scheme(r) != KeyScheme::attr_revocation)
    throw MalformedInput("not an attribute-revocation proxy key");
  AttrProxyKey pxk;
  pxk.version = r.u64();
  std::uint32_t attrs = r.u32();
  for (std::uint32_t i = 0; i < attrs; ++i) {
    std::string attr = get_str(r);
    std::uint16_t n = r.u16();
    if (n == 0) throw MalformedInput("attribute with no shares");
    std::vector<Share> shares;
    shares.reserve(n);
    for (std::uint16_t j = 0; j < n; ++j) {
      Share s;
      s.x = get_scalar(r);
      s.y = get_scalar(r);
      shares.push_back(std::move(s));
    }
    if (!pxk.shares.emplace(std::move(attr), std::move(shares)).second)
      throw MalformedInput("duplicate attribute in proxy key");
  }
  finish(r);
  return pxk;
}

Bytes encode_bundle_request(const BundleRequest& req) {
  if (req.scheme == KeyScheme::bsw)
    throw MalformedInput("baseline scheme has no conversion step");
  Bytes out;
  put_header(out, WireTag::bundle_request);
  append_u8(out, static_cast<std::uint8_t>(req.scheme));
  put_scalar(out, req.user_id);
  put_count16(out, req.leaves.size());
  for (const auto& leaf : req.leaves) {
    if (leaf.id < 0) throw MalformedInput("negative leaf id");
    append_u32(out, static_cast<std::uint32_t>(leaf.id));
    put_str(out, leaf.attribute);
    put_g2(out, leaf.c_prime);
  }
  return out;
}

BundleRequest decode_bundle_request(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::bundle_request);
  BundleRequest req;
  req.scheme = get_scheme(r);
  if (req.scheme == KeyScheme::bsw)
    throw MalformedInput("baseline scheme has no conversion step");
  req.user_id = get_scalar(r);
  std::uint16_t n = r.u16();
  req.leaves.reserve(n);
  for (std::uint16_t i = 0; i < n; ++i) {
    BundleRequestLeaf leaf;
    leaf.id = static_cast<int>(r.u32());
    leaf.attribute = get_str(r);
    leaf.c_prime = get_g2(r, *ctx);
    req.leaves.push_back(std::move(leaf));
  }
  finish(r);
  return req;
}

Bytes encode_conversion_bundle(const ConversionBundle& b) {
  Bytes out;
  put_header(out, WireTag::bundle_response);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::key_revocation));
  append_u64(out, b.version);
  put_scalar(out, b.lambda_k);
  put_count16(out, b.converted.size());
  for (const auto& [id, e] : b.converted) {
    if (id < 0) throw MalformedInput("negative leaf id");
    append_u32(out, static_cast<std::uint32_t>(id));
    put_g2(out, e);
  }
  return out;
}

ConversionBundle decode_conversion_bundle(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::bundle_response);
  if (get_scheme(r) != KeyScheme::key_revocation)
    throw MalformedInput("not a key-revocation bundle");
  ConversionBundle b;
  b.version = r.u64();
  b.lambda_k = get_scalar(r);
  std::uint16_t n = r.u16();
  for (std::uint16_t i = 0; i < n; ++i) {
    int id = static_cast<int>(r.u32());
    G2Element e = get_g2(r, *ctx);
    if (!b.converted.emplace(id, std::move(e)).second)
      throw MalformedInput("duplicate leaf in bundle");
  }
  finish(r);
  return b;
}

Bytes encode_attr_conversion_bundle(const AttrConversionBundle& b) {
  Bytes out;
  put_header(out, WireTag::bundle_response);
  append_u8(out, static_cast<std::uint8_t>(KeyScheme::attr_revocation));
  append_u64(out, b.version);
  put_count16(out, b.converted.size());
  for (const auto& [id, e] : b.converted) {
    if (id < 0) throw MalformedInput("negative leaf id");
    append_u32(out, static_cast<std::uint32_t>(id));
    put_scalar(out, b.lambda_k.at(id));
    put_g2(out, e);
  }
  put_count16(out, b.revoked_leaves.size());
  for (int id : b.revoked_leaves) {
    if (id < 0) throw MalformedInput("negative leaf id");
    append_u32(out, static_cast<std::uint32_t>(id));
  }
  return out;
}

AttrConversionBundle decode_attr_conversion_bundle(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::bundle_response);
  if (get_scheme(r) != KeyScheme::attr_revocation)
    throw MalformedInput("not an attribute-revocation bundle");
  AttrConversionBundle b;
  b.version = r.u64();
  std::uint16_t n = r.u16();
  for (std::uint16_t i = 0; i < n; ++i) {
    int id = static_cast<int>(r.u32());
    Scalar lambda = get_scalar(r);
    G2Element e = get_g2(r, *ctx);
    if (!b.converted.emplace(id, std::move(e)).second)
      throw MalformedInput("duplicate leaf in bundle");
    b.lambda_k.emplace(id, std::move(lambda));
  }
  std::uint16_t revoked = r.u16();
  for (std::uint16_t i = 0; i < revoked; ++i) {
    int id = static_cast<int>(r.u32());
    if (b.converted.count(id))
      throw MalformedInput("leaf both converted and revoked");
    b.revoked_leaves.insert(id);
  }
  finish(r);
  return b;
}

KeyScheme bundle_scheme(const Bytes& in) {
  return peek_scheme(in, WireTag::bundle_response);
}

Bytes encode_delegated_single(const DelegatedKeySingle& dk) {
  Bytes out;
  put_header(out, WireTag::delegated_single);
  put_scalar(out, dk.delegator_id);
  put_g2(out, dk.d);
  put_count16(out, dk.components.size());
  for (const auto& c : dk.components) {
    put_str(out, c.attr);
    put_g2(out, c.d_j);
    put_g1(out, c.d_prime);
    put_g1(out, c.d_dprime);
  }
  return out;
}

DelegatedKeySingle decode_delegated_single(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::delegated_single);
  DelegatedKeySingle dk;
  dk.delegator_id = get_scalar(r);
  dk.d = get_g2(r, *ctx);
  std::uint16_t n = r.u16();
  if (n == 0) throw MalformedInput("delegated key with no components");
  for (std::uint16_t i = 0; i < n; ++i) {
    DelegatedSingleComponent c;
    c.attr = get_str(r);
    c.d_j = get_g2(r, *ctx);
    c.d_prime = get_g1(r, *ctx);
    c.d_dprime = get_g1(r, *ctx);
    dk.components.push_back(std::move(c));
  }
  finish(r);
  return dk;
}

Bytes encode_delegated_multi(const DelegatedKeyMulti& dk) {
  Bytes out;
  put_header(out, WireTag::delegated_multi);
  put_scalar(out, dk.b_identity);
  put_g2(out, dk.d);
  put_count16(out, dk.components.size());
  for (const auto& c : dk.components) {
    put_str(out, c.attr);
    put_g2(out, c.d_j);
    put_g1(out, c.d_prime);
    put_g1(out, c.d_dprime2);
    put_g1(out, c.d_dprime3);
  }
  return out;
}

DelegatedKeyMulti decode_delegated_multi(ContextPtr ctx, const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::delegated_multi);
  DelegatedKeyMulti dk;
  dk.b_identity = get_scalar(r);
  dk.d = get_g2(r, *ctx);
  std::uint16_t n = r.u16();
  if (n == 0) throw MalformedInput("delegated key with no components");
  for (std::uint16_t i = 0; i < n; ++i) {
    DelegatedMultiComponent c;
    c.attr = get_str(r);
    c.d_j = get_g2(r, *ctx);
    c.d_prime = get_g1(r, *ctx);
    c.d_dprime2 = get_g1(r, *ctx);
    c.d_dprime3 = get_g1(r, *ctx);
    dk.components.push_back(std::move(c));
  }
  finish(r);
  return dk;
}

Bytes encode_hybrid(const HybridContainer& h) {
  Bytes out;
  put_header(out, WireTag::hybrid);
  put_count32(out, h.abe_ciphertext.size());
  out.insert(out.end(), h.abe_ciphertext.begin(), h.abe_ciphertext.end());
  put_block(out, h.nonce);
  put_count32(out, h.sealed.size());
  out.insert(out.end(), h.sealed.begin(), h.sealed.end());
  return out;
}

HybridContainer decode_hybrid(const Bytes& in) {
  ByteReader r = open_envelope(in, WireTag::hybrid);
  HybridContainer h;
  h.abe_ciphertext = r.take(r.u32());
  h.nonce = get_block(r);
  h.sealed = r.take(r.u32());
  finish(r);
  return h;
}

SizeModel SizeModel::from_context(const BilinearContext& ctx) {
  SizeModel m;
  m.g1 = ctx.g1().to_bytes().size();
  m.g2 = ctx.g2().to_bytes().size();
  m.gt = ctx.gt_generator().to_bytes().size();
  m.zp = ctx.scalar_field().encode(ctx.scalar_field().one()).size();
  return m;
}

std::size_t SizeModel::public_key() const {
  return header() + block(g1) + block(g2) + block(gt);
}

std::size_t SizeModel::bsw_secret_key(std::size_t attrs, std::size_t name_len) const {
  return header() + 1 + block(g2) + 2 +
         attrs * (block(name_len) + block(g2) + block(g1));
}

std::size_t SizeModel::piratte_secret_key(std::size_t attrs, std::size_t name_len) const {
  return header() + 1 + block(zp) + block(g2) + 2 +
         attrs * (block(name_len) + block(g2) + block(g1) + block(g1));
}

std::size_t SizeModel::ciphertext(std::size_t internal_nodes, std::size_t leaves,
                                  std::size_t name_len) const {
  std::size_t tree = internal_nodes * 5 + leaves * (1 + block(name_len));
  return header() + tree + block(gt) + block(g1) + 2 +
         leaves * (block(g1) + block(g2));
}

std::size_t SizeModel::proxy_key(std::size_t t) const {
  return header() + 1 + 8 + 2 + t * (2 * block(zp));
}

std::size_t SizeModel::conversion_bundle(std::size_t leaves) const {
  return header() + 1 + 8 + block(zp) + 2 + leaves * (4 + block(g2));
}

}  // namespace piratte
