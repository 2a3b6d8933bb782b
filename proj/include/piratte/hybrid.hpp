// Hybrid encryption: arbitrary payloads sealed under an access policy. A
// fresh GT element acts as the data key; it is ABE-encrypted and its
// canonical encoding is stretched through HKDF-SHA256 into an AES-256-GCM
// key. The serialized ABE ciphertext rides as associated data, so tampering
// with the policy side breaks the seal too.
#pragma once

#include "piratte/bytes.hpp"
#include "piratte/codec.hpp"
#include "piratte/errors.hpp"

namespace piratte {

HybridContainer hybrid_seal(const PublicKey& pk, const AccessTree& tree,
                            const Bytes& payload, Rng& rng);

// Opens with a data key already recovered through one of the decrypt paths.
// Throws DecryptionFailed when authentication fails.
Bytes hybrid_open(const HybridContainer& h, const GTElement& data_key);

// Decrypt-and-open conveniences. PolicyNotSatisfied when the key (or what
// the proxy left usable of it) cannot satisfy the policy; DecryptionFailed
// when the recovered data key does not authenticate.
Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const BswSecretKey& sk);
Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const PiratteSecretKey& sk,
                  const ConversionBundle& bundle);
Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const PiratteSecretKey& sk,
                  const AttrConversionBundle& bundle);
Bytes hybrid_open(ContextPtr ctx, const HybridContainer& h, const DelegatedKeySingle& dk,
                  const ConversionBundle& bundle);

}  // namespace piratte
