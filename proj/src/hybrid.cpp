#include "piratte/hybrid.hpp"

#include <openssl/evp.h>
#include <openssl/kdf.h>

#include <memory>
#include <stdexcept>

namespace piratte {

namespace {

constexpr std::size_t kKeyLen = 32;
constexpr std::size_t kNonceLen = 12;
constexpr std::size_t kTagLen = 16;
constexpr char kKdfLabel[] = "piratte-hybrid-v1";

struct CipherCtxFree {
  void operator()(EVP_CIPHER_CTX* p) const { EVP_CIPHER_CTX_free(p); }
};
struct PkeyCtxFree {
  void operator()(EVP_PKEY_CTX* p) const { EVP_PKEY_CTX_free(p); }
};

Bytes hkdf_sha256(const Bytes& ikm, std::size_t out_len) {
  std::unique_ptr<EVP_PKEY_CTX, PkeyCtxFree> ctx(
      EVP_PKEY_CTX_new_id(EVP_PKEY_HKDF, nullptr));
  if (!ctx || EVP_PKEY_derive_init(ctx.get()) <= 0 ||
      EVP_PKEY_CTX_set_hkdf_md(ctx.get(), EVP_sha256()) <= 0 ||
      EVP_PKEY_CTX_set1_hkdf_key(ctx.get(), ikm.data(),
                                 static_cast<int>(ikm.size())) <= 0 ||
      EVP_PKEY_CTX_add1_hkdf_info(
          ctx.get(), reinterpret_cast<const unsigned char*>(kKdfLabel),
          static_cast<int>(sizeof(kKdfLabel) - 1)) <= 0)
    throw std::runtime_error("hkdf setup failed");
  Bytes out(out_len);
  std::size_t n = out_len;
  if (EVP_PKEY_derive(ctx.get(), out.data(), &n) <= 0 || n != out_len)
    throw std::runtime_error("hkdf derive failed");
  return out;
}

Bytes aead_seal(const Bytes& key, const Bytes& nonce, const Bytes& aad,
                const Bytes& plaintext) {
  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree> c(EVP_CIPHER_CTX_new());
  if (!c || EVP_EncryptInit_ex(c.get(), EVP_aes_256_gcm(), nullptr, nullptr, nullptr) != 1 ||
      EVP_CIPHER_CTX_ctrl(c.get(), EVP_CTRL_GCM_SET_IVLEN, kNonceLen, nullptr) != 1 ||
      EVP_EncryptInit_ex(c.get(), nullptr, nullptr, key.data(), nonce.data()) != 1)
    throw std::runtime_error("aead init failed");
  int len = 0;
  if (!aad.empty() &&
      EVP_EncryptUpdate(c.get(), nullptr, &len, aad.data(),
                        static_cast<int>(aad.size())) != 1)
    throw std::runtime_error("aead aad failed");
  Bytes out(plaintext.size() + kTagLen);
  int total = 0;
  if (!plaintext.empty()) {
    if (EVP_EncryptUpdate(c.get(), out.data(), &len, plaintext.data(),
                          static_cast<int>(plaintext.size())) != 1)
      throw std::runtime_error("aead encrypt failed");
    total = len;
  }
  if (EVP_EncryptFinal_ex(c.get(), out.data() + total, &len) != 1)
    throw std::runtime_error("aead finalize failed");
  total += len;
  if (EVP_CIPHER_CTX_ctrl(c.get(), EVP_CTRL_GCM_GET_TAG, kTagLen,
                          out.data() + total) != 1)
    throw std::runtime_error("aead tag failed");
  out.resize(static_cast<std::size_t>(total) + kTagLen);
  return out;
}

Bytes aead_open(const Bytes& key, const Bytes& nonce, const Bytes& aad,
                const Bytes& sealed) {
  if (sealed.size() < kTagLen) throw DecryptionFailed("sealed payload too short");
  std::size_t ct_len = sealed.size() - kTagLen;
  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree> c(EVP_CIPHER_CTX_new());
  if (!c || EVP_DecryptInit_ex(c.get(), EVP_aes_256_gcm(), nullptr, nullptr, nullptr) != 1 ||
      EVP_CIPHER_CTX_ctrl(c.get(), EVP_CTRL_GCM_SET_IVLEN, kNonceLen, nullptr) != 1 ||
      EVP_DecryptInit_ex(c.get(), nullptr, nullptr, key.data(), nonce.data()) != 1)
    throw std::runtime_error("aead init failed");
  int len = 0;
  if (!aad.empty() &&
      EVP_DecryptUpdate(c.get(), nullptr, &len, aad.data(),
                        static_cast<int>(aad.size())) != 1)
    throw std::runtime_error("aead aad failed");
  Bytes out(ct_len);
  int total = 0;
  if (ct_len > 0) {
    if (EVP_DecryptUpdate(c.get(), out.data(), &len, sealed.data(),
                          static_cast<int>(ct_len)) != 1)
      throw DecryptionFailed("payload authentication failed");
    total = len;
  }
  Bytes tag(sealed.end() - kTagLen, sealed.end());
  if (EVP_CIPHER_CTX_ctrl(c.get(), EVP_CTRL_GCM_SET_TAG, kTagLen, tag.data()) != 1)
    throw std::runtime_error("aead tag set failed");
  if (EVP_DecryptFinal_ex(c.get(), out.data() + total, &len) != 1)
    throw DecryptionFailed("payload authentication failed");
  out.resize(static_cast<std::size_t>(total) + static_cast<std::size_t>(len));
  return out;
}

}  // namespace

HybridContainer hybrid_seal(const PublicKey& pk, const AccessTree& tree,
                            const Bytes& payload, Rng& rng) {
  GTElement data_key = random_gt(*pk.ctx, rng);
  Ciphertext ct = detail::encrypt_traced(pk, data_key, tree, rng, nullptr);
  HybridContainer h;
  h.abe_ciphertext = encode_ciphertext(ct);
  h.nonce = rng.bytes(kNonceLen);
  Bytes key = hkdf_sha256(data_key.to_bytes(), kKeyLen);
  h.sealed = aead_seal(key, h.nonce, h.abe_ciphertext, payload);
  return h;
}

Bytes hybrid_open(const HybridContainer& h, const GTElement& data_key) {
  if (h.nonce.size() != kNonceLen) throw MalformedInput("bad nonce length");
  Bytes key = hkdf_sha256(data_key.to_bytes(), kKeyLen);
  return aead_open(key, h.nonce, h.abe_ciphertext, h.sealed);
}

Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const BswSecretKey& sk) {
  Ciphertext ct = decode_ciphertext(ctx, h.abe_ciphertext);
  auto key = bsw_decrypt(ct, sk);
  if (!key) throw PolicyNotSatisfied("key does not satisfy the policy");
  return hybrid_open(h, *key);
}

Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const PiratteSecretKey& sk,
                  const ConversionBundle& bundle) {
  Ciphertext ct = decode_ciphertext(ctx, h.abe_ciphertext);
  auto key = piratte_decrypt(ct, sk, bundle);
  if (!key) throw PolicyNotSatisfied("key does not satisfy the policy");
  return hybrid_open(h, *key);
}

Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const PiratteSecretKey& sk,
                  const AttrConversionBundle& bundle) {
  Ciphertext ct = decode_ciphertext(ctx, h.abe_ciphertext);
  auto key = attr_decrypt(ct, sk, bundle);
  if (!key) throw PolicyNotSatisfied("key does not satisfy the policy");
  return hybrid_open(h, *key);
}

Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const DelegatedKeySingle& dk,
                  const ConversionBundle& bundle) {
  Ciphertext ct = decode_ciphertext(ctx, h.abe_ciphertext);
  auto key = decrypt_delegated_single(ct, dk, bundle, bundle.lambda_k);
  if (!key) throw PolicyNotSatisfied("key does not satisfy the policy");
  return hybrid_open(h, *key);
}

}  // namespace piratte
