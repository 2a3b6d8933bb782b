#include "piratte/proxy_service.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "piratte/fileio.hpp"
#include "piratte/proxy_state.hpp"

namespace piratte {

namespace {

using nlohmann::json;

std::string b64(const Bytes& b) { return base64url_encode(b); }

Bytes unb64(const std::string& s) { return base64url_decode(s); }

Scalar scalar_from_b64(const std::string& s) {
  return curve_scalar_field().decode(unb64(s));
}

std::string scalar_to_b64(const Scalar& s) {
  return b64(curve_scalar_field().encode(s));
}

std::string trim_ws(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProxyConfig load_proxy_config(const std::string& path) {
  ProxyConfig cfg;
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw std::runtime_error("config parse error in " + path + ": " + e.what());
  }
  cfg.listen = j.value("listen", cfg.listen);
  cfg.port = j.value("port", cfg.port);
  cfg.mode = j.value("mode", cfg.mode);
  cfg.admin_token = j.value("admin_token", cfg.admin_token);
  cfg.key_file = j.value("key_file", cfg.key_file);
  return cfg;
}

ProxyConfig apply_proxy_env(ProxyConfig base) {
  if (const char* v = std::getenv("PIRATTE_PROXY_LISTEN")) base.listen = v;
  if (const char* v = std::getenv("PIRATTE_PROXY_PORT")) {
    try {
      base.port = std::stoi(v);
    } catch (const std::exception&) {
      throw std::runtime_error("PIRATTE_PROXY_PORT is not a number");
    }
  }
  if (const char* v = std::getenv("PIRATTE_PROXY_MODE")) base.mode = v;
  if (const char* v = std::getenv("PIRATTE_PROXY_TOKEN")) base.admin_token = v;
  if (const char* v = std::getenv("PIRATTE_PROXY_KEY_FILE")) base.key_file = v;
  return base;
}

std::string convert_request_to_json(const BundleRequest& req) {
  json j;
  j["user_id"] = scalar_to_b64(req.user_id);
  j["leaves"] = json::array();
  for (const auto& leaf : req.leaves) {
    json l;
    l["id"] = leaf.id;
    if (!leaf.attribute.empty()) l["attr"] = leaf.attribute;
    l["c_prime"] = b64(leaf.c_prime.to_bytes());
    j["leaves"].push_back(std::move(l));
  }
  return j.dump();
}

BundleRequest bundle_request_from_json(ContextPtr ctx, const std::string& body) {
  json j = json::parse(body);
  BundleRequest req;
  req.user_id = scalar_from_b64(j.at("user_id").get<std::string>());
  bool any_attr = false;
  for (const auto& l : j.at("leaves")) {
    BundleRequestLeaf leaf;
    leaf.id = l.at("id").get<int>();
    if (leaf.id < 0) throw MalformedInput("negative leaf id");
    leaf.attribute = l.value("attr", std::string());
    any_attr = any_attr || !leaf.attribute.empty();
    leaf.c_prime = ctx->decode_g2(unb64(l.at("c_prime").get<std::string>()));
    req.leaves.push_back(std::move(leaf));
  }
  req.scheme = any_attr ? KeyScheme::attr_revocation : KeyScheme::key_revocation;
  return req;
}

std::string conversion_bundle_to_json(const ConversionBundle& b) {
  json j;
  j["version"] = b.version;
  j["lambda_k"] = scalar_to_b64(b.lambda_k);
  j["converted"] = json::array();
  for (const auto& [id, e] : b.converted)
    j["converted"].push_back({{"id", id}, {"c_dprime", b64(e.to_bytes())}});
  return j.dump();
}

ConversionBundle conversion_bundle_from_json(ContextPtr ctx, const std::string& body) {
  json j = json::parse(body);
  ConversionBundle b;
  b.version = j.at("version").get<std::uint64_t>();
  b.lambda_k = scalar_from_b64(j.at("lambda_k").get<std::string>());
  for (const auto& item : j.at("converted")) {
    int id = item.at("id").get<int>();
    b.converted.emplace(id, ctx->decode_g2(unb64(item.at("c_dprime").get<std::string>())));
  }
  return b;
}

std::string attr_conversion_bundle_to_json(const AttrConversionBundle& b) {
  json j;
  j["version"] = b.version;
  j["lambda_k"] = json::array();
  for (const auto& [id, v] : b.lambda_k)
    j["lambda_k"].push_back({{"id", id}, {"value", scalar_to_b64(v)}});
  j["converted"] = json::array();
  for (const auto& [id, e] : b.converted)
    j["converted"].push_back({{"id", id}, {"c_dprime", b64(e.to_bytes())}});
  j["revoked_leaves"] = json::array();
  for (int id : b.revoked_leaves) j["revoked_leaves"].push_back(id);
  return j.dump();
}

AttrConversionBundle attr_conversion_bundle_from_json(ContextPtr ctx,
                                                      const std::string& body) {
  json j = json::parse(body);
  AttrConversionBundle b;
  b.version = j.at("version").get<std::uint64_t>();
  for (const auto& item : j.at("lambda_k"))
    b.lambda_k.emplace(item.at("id").get<int>(),
                       scalar_from_b64(item.at("value").get<std::string>()));
  for (const auto& item : j.at("converted")) {
    int id = item.at("id").get<int>();
    b.converted.emplace(id, ctx->decode_g2(unb64(item.at("c_dprime").get<std::string>())));
  }
  for (const auto& id : j.at("revoked_leaves")) b.revoked_leaves.insert(id.get<int>());
  return b;
}

struct ProxyService::Impl {
  // One immutable snapshot per installed key; requests copy the pointer once
  // and never look back, so a rekey cannot tear a response.
  struct Snapshot {
    std::uint64_t version = 0;
    KeyScheme scheme = KeyScheme::key_revocation;
    PrecomputedProxy fast;
    PrecomputedAttrProxy attr_fast;
    int t = 0;
  };

  ProxyConfig cfg;
  ContextPtr ctx = BilinearContext::create();
  mutable std::mutex slot_mutex;
  std::shared_ptr<const Snapshot> slot;
  httplib::Server server;
  std::thread serve_thread;
  int bound_port = -1;
  std::atomic<bool> running{false};

  std::shared_ptr<const Snapshot> load() const {
    std::lock_guard<std::mutex> g(slot_mutex);
    return slot;
  }

  InstallResult install(const Bytes& encoded) {
    KeyScheme scheme = proxy_key_scheme(encoded);
    if ((cfg.mode == "key") != (scheme == KeyScheme::key_revocation))
      throw MalformedInput("proxy key scheme disagrees with service mode");
    auto snap = std::make_shared<Snapshot>();
    snap->scheme = scheme;
    if (scheme == KeyScheme::key_revocation) {
      ProxyKey pxk = decode_key_proxy_key(encoded);
      snap->version = pxk.version;
      snap->t = static_cast<int>(pxk.shares.size());
      snap->fast = precompute_proxy(pxk);
    } else {
      AttrProxyKey pxk = decode_attr_proxy_key(encoded);
      snap->version = pxk.version;
      snap->t = pxk.shares.empty()
                    ? 0
                    : static_cast<int>(pxk.shares.begin()->second.size());
      snap->attr_fast = precompute_proxy(pxk);
    }
    std::lock_guard<std::mutex> g(slot_mutex);
    if (slot && snap->version <= slot->version) return InstallResult::stale_key;
    slot = std::move(snap);
    return InstallResult::installed;
  }

  bool authorized(const httplib::Request& req) const {
    std::string want = "Bearer " + cfg.admin_token;
    std::string got = req.get_header_value("Authorization");
    return !cfg.admin_token.empty() &&
           constant_time_equal(Bytes(want.begin(), want.end()),
                               Bytes(got.begin(), got.end()));
  }

  void wire_routes() {
    server.Post("/v1/convert", [this](const httplib::Request& req, httplib::Response& res) {
      auto snap = load();
      if (!snap) {
        res.status = 503;
        res.set_content(R"({"error":"no_key"})", "application/json");
        return;
      }
      try {
        BundleRequest breq = bundle_request_from_json(ctx, req.body);
        if (snap->scheme == KeyScheme::key_revocation) {
          std::vector<std::pair<int, G2Element>> comps;
          comps.reserve(breq.leaves.size());
          for (auto& leaf : breq.leaves) comps.emplace_back(leaf.id, leaf.c_prime);
          ConversionBundle b = convert_fast(snap->fast, comps, breq.user_id);
          res.set_content(conversion_bundle_to_json(b), "application/json");
        } else {
          std::vector<AttrConversionLeaf> leaves;
          leaves.reserve(breq.leaves.size());
          for (auto& leaf : breq.leaves)
            leaves.push_back({leaf.id, leaf.attribute, leaf.c_prime});
          AttrConversionBundle b = attr_convert_fast(snap->attr_fast, leaves, breq.user_id);
          res.set_content(attr_conversion_bundle_to_json(b), "application/json");
        }
      } catch (const RequesterRevoked&) {
        res.status = 403;
        res.set_content(R"({"error":"revoked"})", "application/json");
      } catch (const std::exception&) {
        res.status = 400;
        res.set_content(R"({"error":"bad_request"})", "application/json");
      }
    });

    server.Post("/v1/rekey", [this](const httplib::Request& req, httplib::Response& res) {
      if (!authorized(req)) {
        res.status = 401;
        res.set_content(R"({"error":"unauthorized"})", "application/json");
        return;
      }
      try {
        Bytes encoded = unb64(trim_ws(req.body));
        if (install(encoded) == InstallResult::stale_key) {
          res.status = 409;
          res.set_content(R"({"error":"stale_key"})", "application/json");
          return;
        }
        json j;
        j["version"] = load()->version;
        res.set_content(j.dump(), "application/json");
      } catch (const std::exception&) {
        res.status = 400;
        res.set_content(R"({"error":"bad_request"})", "application/json");
      }
    });

    server.Get("/v1/info", [this](const httplib::Request&, httplib::Response& res) {
      auto snap = load();
      json j;
      j["version"] = snap ? snap->version : 0;
      j["t"] = snap ? snap->t : 0;
      j["mode"] = cfg.mode;
      res.set_content(j.dump(), "application/json");
    });
  }
};

ProxyService::ProxyService(ProxyConfig cfg) : impl_(std::make_unique<Impl>()) {
  if (cfg.mode != "key" && cfg.mode != "attr")
    throw std::runtime_error("proxy mode must be \"key\" or \"attr\"");
  impl_->cfg = std::move(cfg);
  impl_->wire_routes();
  if (!impl_->cfg.key_file.empty()) {
    if (impl_->install(read_file(impl_->cfg.key_file)) != InstallResult::installed)
      throw std::runtime_error("initial proxy key rejected");
  }
}

ProxyService::~ProxyService() { stop(); }

ProxyService::InstallResult ProxyService::install_key(const Bytes& encoded_pxk) {
  return impl_->install(encoded_pxk);
}

void ProxyService::start() {
  if (impl_->running) return;
  if (impl_->cfg.port == 0) {
    impl_->bound_port = impl_->server.bind_to_any_port(impl_->cfg.listen);
    if (impl_->bound_port < 0) throw std::runtime_error("cannot bind listen socket");
  } else {
    if (!impl_->server.bind_to_port(impl_->cfg.listen, impl_->cfg.port))
      throw std::runtime_error("cannot bind listen socket");
    impl_->bound_port = impl_->cfg.port;
  }
  impl_->serve_thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  impl_->running = true;
}

void ProxyService::stop() {
  if (!impl_->running) return;
  impl_->server.stop();
  impl_->serve_thread.join();
  impl_->running = false;
}

bool ProxyService::running() const { return impl_->running; }

int ProxyService::port() const { return impl_->bound_port; }

std::uint64_t ProxyService::version() const {
  auto snap = impl_->load();
  return snap ? snap->version : 0;
}

const std::string& ProxyService::mode() const { return impl_->cfg.mode; }

}  // namespace piratte
