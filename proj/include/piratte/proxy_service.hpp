// HTTP conversion service. Decryptors POST ciphertext components to
// /v1/convert; the key authority pushes fresh proxy keys to /v1/rekey behind
// a bearer token; /v1/info reports version, capacity and mode. The service
// holds exactly one mutable slot: the current proxy key plus its
// precomputation, swapped atomically so every request runs against one
// consistent key version. It never sees master or user secret key material.
#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "piratte/bytes.hpp"
#include "piratte/codec.hpp"

namespace piratte {

struct ProxyConfig {
  std::string listen = "127.0.0.1";
  int port = 0;  // 0 picks an ephemeral port; see ProxyService::port()
  std::string mode = "key";  // "key" or "attr"
  std::string admin_token;
  std::string key_file;  // optional initial proxy key (codec bytes)
};

// JSON file with keys listen/port/mode/admin_token/key_file, all optional.
ProxyConfig load_proxy_config(const std::string& path);
// PIRATTE_PROXY_{LISTEN,PORT,MODE,TOKEN,KEY_FILE} override the base config.
ProxyConfig apply_proxy_env(ProxyConfig base);

// JSON bodies of the wire protocol, shared by the service, the CLI client
// and the tests. Group elements and scalars travel base64url, no padding.
std::string convert_request_to_json(const BundleRequest& req);
BundleRequest bundle_request_from_json(ContextPtr ctx, const std::string& body);
std::string conversion_bundle_to_json(const ConversionBundle& b);
ConversionBundle conversion_bundle_from_json(ContextPtr ctx, const std::string& body);
std::string attr_conversion_bundle_to_json(const AttrConversionBundle& b);
AttrConversionBundle attr_conversion_bundle_from_json(ContextPtr ctx, const std::string& body);

class ProxyService {
 public:
  explicit ProxyService(ProxyConfig cfg);
  ~ProxyService();
  ProxyService(const ProxyService&) = delete;
  ProxyService& operator=(const ProxyService&) = delete;

  enum class InstallResult { installed, stale_key };

  // Decodes, checks mode and version monotonicity, precomputes, swaps.
  // MalformedInput on a key that does not decode or does not match the mode.
  InstallResult install_key(const Bytes& encoded_pxk);

  void start();  // binds and serves on a background thread
  void stop();
  bool running() const;
  int port() const;          // resolved port after start()
  std::uint64_t version() const;  // 0 until a key is installed
  const std::string& mode() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace piratte
