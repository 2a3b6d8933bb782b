#include "piratte/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "piratte/bsw.hpp"
#include "piratte/delegation.hpp"
#include "piratte/piratte.hpp"
#include "piratte/proxy_state.hpp"

namespace piratte {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Two-sided 95% Student t quantiles for df = 1..30; 1.96 beyond.
double t_quantile(int df) {
  static const double kT[30] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (df < 1) return kT[0];
  if (df <= 30) return kT[df - 1];
  return 1.96;
}

std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  for (;;) {
    std::uint8_t raw[8];
    rng.fill(raw);
    std::uint64_t v = 0;
    for (std::uint8_t b : raw) v = (v << 8) | b;
    if (v < limit) return v % n;
  }
}

const std::vector<int>& leaf_sweep() {
  static const std::vector<int> kSweep = {1,  5,  10, 20, 30, 40,
                                          50, 60, 70, 80, 90, 100};
  return kSweep;
}

const std::vector<int>& capacity_sweep() {
  static const std::vector<int> kSweep = {100, 200, 300, 400, 500,
                                          600, 700, 800, 900, 1000};
  return kSweep;
}

// Flat n-of-n gate: every leaf participates in decryption, so cost scales
// with the leaf count instead of the cheapest selection.
AccessTree all_of_policy(int leaves, const std::string& prefix) {
  if (leaves == 1) return AccessTree{PolicyNode{1, {}, prefix + "0"}};
  PolicyNode root;
  root.threshold = leaves;
  for (int i = 0; i < leaves; ++i)
    root.children.push_back(PolicyNode{1, {}, prefix + std::to_string(i)});
  return AccessTree{std::move(root)};
}

// 1-of-n gate ending in the delegated attribute.
AccessTree any_of_with(int leaves, const std::string& prefix, const std::string& last) {
  if (leaves == 1) return AccessTree{PolicyNode{1, {}, last}};
  PolicyNode root;
  root.threshold = 1;
  for (int i = 0; i < leaves - 1; ++i)
    root.children.push_back(PolicyNode{1, {}, prefix + std::to_string(i)});
  root.children.push_back(PolicyNode{1, {}, last});
  return AccessTree{std::move(root)};
}

std::set<std::string> attr_range(const std::string& prefix, int n) {
  std::set<std::string> out;
  for (int i = 0; i < n; ++i) out.insert(prefix + std::to_string(i));
  return out;
}

std::vector<std::pair<int, G2Element>> g2_components(const BilinearContext& ctx,
                                                     int n, Rng& rng) {
  std::vector<std::pair<int, G2Element>> out;
  out.reserve(static_cast<std::size_t>(n));
  const ScalarField& F = ctx.scalar_field();
  for (int i = 0; i < n; ++i)
    out.emplace_back(i, ctx.g2().pow(F.random_nonzero(rng)));
  return out;
}

std::vector<BenchRow> suite_keygen(ContextPtr ctx, Rng& rng, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  auto [pk_p, mk_p] = piratte_setup(ctx, 5, rng);
  auto [pk_b, mk_b] = bsw_setup(ctx, rng);
  (void)pk_p;
  (void)pk_b;
  for (int n : leaf_sweep()) {
    std::set<std::string> attrs = attr_range("a", n);
    BenchStats sp = measure([&] { piratte_keygen(mk_p, "bench", attrs, rng); },
                            opt.warmup, opt.iterations);
    rows.push_back({"keygen", "attributes", double(n), "piratte", sp.mean_s, sp.ci95_s});
    BenchStats sb = measure([&] { bsw_keygen(mk_b, attrs, rng); },
                            opt.warmup, opt.iterations);
    rows.push_back({"keygen", "attributes", double(n), "bsw", sb.mean_s, sb.ci95_s});
  }
  return rows;
}

std::vector<BenchRow> suite_encrypt(ContextPtr ctx, Rng& rng, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  auto [pk_p, mk_p] = piratte_setup(ctx, 5, rng);
  auto [pk_b, mk_b] = bsw_setup(ctx, rng);
  (void)mk_p;
  (void)mk_b;
  GTElement m = random_gt(*ctx, rng);
  for (int l : leaf_sweep()) {
    AccessTree tree = random_policy(l, "a", rng);
    BenchStats sp = measure([&] { piratte_encrypt(pk_p, m, tree, rng); },
                            opt.warmup, opt.iterations);
    rows.push_back({"encrypt", "leaves", double(l), "piratte", sp.mean_s, sp.ci95_s});
    BenchStats sb = measure([&] { bsw_encrypt(pk_b, m, tree, rng); },
                            opt.warmup, opt.iterations);
    rows.push_back({"encrypt", "leaves", double(l), "bsw", sb.mean_s, sb.ci95_s});
  }
  return rows;
}

std::vector<BenchRow> suite_decrypt(ContextPtr ctx, Rng& rng, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  GTElement m = random_gt(*ctx, rng);
  auto [pk_p, mk_p] = piratte_setup(ctx, 5, rng);
  PiratteSecretKey sk_p = piratte_keygen(mk_p, "bench", attr_range("a", 100), rng);
  ProxyKey pxk = proxy_rekey(pk_p, mk_p, {}, rng);
  PrecomputedProxy fast = precompute_proxy(pxk);
  auto [pk_b, mk_b] = bsw_setup(ctx, rng);
  BswSecretKey sk_b = bsw_keygen(mk_b, attr_range("a", 100), rng);
  for (int l : leaf_sweep()) {
    AccessTree tree = all_of_policy(l, "a");
    Ciphertext ct_p = piratte_encrypt(pk_p, m, tree, rng);
    std::vector<std::pair<int, G2Element>> comps;
    for (const auto& leaf : tree_leaves(ct_p.tree))
      comps.emplace_back(leaf.id, ct_p.c_prime[static_cast<std::size_t>(leaf.id)]);
    ConversionBundle bundle = convert_fast(fast, comps, sk_p.user_id);
    BenchStats sp = measure([&] { piratte_decrypt(ct_p, sk_p, bundle); },
                            opt.warmup, opt.iterations);
    rows.push_back({"decrypt", "leaves", double(l), "piratte", sp.mean_s, sp.ci95_s});
    Ciphertext ct_b = bsw_encrypt(pk_b, m, tree, rng);
    BenchStats sb = measure([&] { bsw_decrypt(ct_b, sk_b); },
                            opt.warmup, opt.iterations);
    rows.push_back({"decrypt", "leaves", double(l), "bsw", sb.mean_s, sb.ci95_s});
  }
  return rows;
}

std::vector<BenchRow> suite_rekey(ContextPtr ctx, Rng& rng, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  for (int t : capacity_sweep()) {
    auto [pk, mk] = piratte_setup(ctx, t, rng);
    std::vector<Scalar> users;
    users.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
      PiratteSecretKey sk =
          piratte_keygen(mk, "u" + std::to_string(i), {"a"}, rng);
      users.push_back(sk.user_id);
    }
    BenchStats s = measure([&] { proxy_rekey(pk, mk, users, rng); },
                           opt.warmup, opt.iterations);
    rows.push_back({"rekey", "t", double(t), "piratte", s.mean_s, s.ci95_s});
  }
  return rows;
}

std::vector<BenchRow> suite_convert(ContextPtr ctx, Rng& rng, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  const int t = 500;
  auto [pk, mk] = piratte_setup(ctx, t, rng);
  PiratteSecretKey sk = piratte_keygen(mk, "bench", {"a"}, rng);
  ProxyKey pxk = proxy_rekey(pk, mk, {}, rng);
  PrecomputedProxy fast = precompute_proxy(pxk);
  for (int l : leaf_sweep()) {
    auto comps = g2_components(*ctx, l, rng);
    BenchStats s = measure([&] { convert_fast(fast, comps, sk.user_id); },
                           opt.warmup, opt.iterations);
    rows.push_back({"convert", "leaves", double(l), "piratte", s.mean_s, s.ci95_s});
  }
  return rows;
}

std::vector<BenchRow> suite_precalc(ContextPtr ctx, Rng& rng, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  const ScalarField& F = ctx->scalar_field();
  for (int t : capacity_sweep()) {
    ProxyKey pxk;
    pxk.version = 1;
    pxk.shares.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      pxk.shares.push_back({F.random_nonzero(rng), F.random(rng)});
    BenchStats s = measure([&] { precompute_proxy(pxk); },
                           opt.warmup, opt.iterations);
    rows.push_back({"precalc", "t", double(t), "piratte", s.mean_s, s.ci95_s});
  }
  return rows;
}

std::vector<BenchRow> suite_delegated_decrypt(ContextPtr ctx, Rng& rng,
                                              const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  GTElement m = random_gt(*ctx, rng);
  auto [pk, mk] = piratte_setup(ctx, 5, rng);
  PiratteSecretKey sk = piratte_keygen(mk, "delegator", {"fof"}, rng);
  ProxyKey pxk = proxy_rekey(pk, mk, {}, rng);
  PrecomputedProxy fast = precompute_proxy(pxk);
  ConversionBundle probe =
      convert_fast(fast, {{0, ctx->g2()}}, sk.user_id);
  DelegatedKeySingle dk = delegate_single(sk, {"fof"}, pk, probe.lambda_k, rng);
  for (int l : leaf_sweep()) {
    AccessTree tree = any_of_with(l, "a", "fof");
    Ciphertext ct = piratte_encrypt(pk, m, tree, rng);
    std::vector<std::pair<int, G2Element>> comps;
    for (const auto& leaf : tree_leaves(ct.tree))
      comps.emplace_back(leaf.id, ct.c_prime[static_cast<std::size_t>(leaf.id)]);
    ConversionBundle bundle = convert_fast(fast, comps, dk.delegator_id);
    BenchStats s = measure(
        [&] { decrypt_delegated_single(ct, dk, bundle, bundle.lambda_k); },
        opt.warmup, opt.iterations);
    rows.push_back(
        {"delegated-decrypt", "leaves", double(l), "piratte", s.mean_s, s.ci95_s});
  }
  return rows;
}

}  // namespace

BenchStats measure(const std::function<void()>& fn, int warmup, int iterations) {
  if (iterations < 2) throw std::invalid_argument("need at least 2 iterations");
  for (int i = 0; i < warmup; ++i) fn();
  auto t0 = Clock::now();
  fn();
  double probe = seconds_since(t0);
  int batch = 1;
  if (probe < 2e-3)
    batch = static_cast<int>(
        std::min(100000.0, std::ceil(2e-3 / std::max(probe, 1e-9))));
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(iterations));
  for (int it = 0; it < iterations; ++it) {
    auto start = Clock::now();
    for (int b = 0; b < batch; ++b) fn();
    samples.push_back(seconds_since(start) / batch);
  }
  double mean = 0;
  for (double s : samples) mean += s;
  mean /= iterations;
  double var = 0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= (iterations - 1);
  BenchStats out;
  out.mean_s = mean;
  out.ci95_s = t_quantile(iterations - 1) * std::sqrt(var / iterations);
  return out;
}

AffineFit affine_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit needs matched series of >= 2 points");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate x values");
  AffineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double pred = fit.intercept + fit.slope * xs[i];
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
  }
  fit.r2 = ss_tot == 0 ? (ss_res == 0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
  return fit;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "suite,param,value,impl,mean_s,ci95_s\n";
  for (const BenchRow& r : rows) {
    out << r.suite << ',' << r.param << ',' << r.value << ',' << r.impl << ','
        << std::fixed << std::setprecision(9) << r.mean_s << ',' << r.ci95_s
        << '\n';
    out.unsetf(std::ios_base::floatfield);
  }
  return out.str();
}

AccessTree random_policy(int leaves, const std::string& attr_prefix, Rng& rng) {
  if (leaves < 1) throw std::invalid_argument("policy needs at least one leaf");
  int counter = 0;
  std::function<PolicyNode(int)> build = [&](int n) -> PolicyNode {
    if (n == 1) {
      PolicyNode leaf;
      leaf.attribute = attr_prefix + std::to_string(counter++);
      return leaf;
    }
    const int max_parts = std::min(4, n);
    const int parts = 2 + static_cast<int>(rng_below(rng, max_parts - 1));
    std::vector<int> sizes(static_cast<std::size_t>(parts), 1);
    for (int extra = n - parts; extra > 0; --extra)
      sizes[rng_below(rng, parts)] += 1;
    PolicyNode node;
    node.threshold = 1 + static_cast<int>(rng_below(rng, parts));
    for (int s : sizes) node.children.push_back(build(s));
    return node;
  };
  AccessTree tree{build(leaves)};
  validate_tree(tree);
  return tree;
}

const std::vector<std::string>& bench_suite_names() {
  static const std::vector<std::string> kNames = {
      "keygen",  "encrypt", "decrypt",           "rekey",
      "convert", "precalc", "delegated-decrypt"};
  return kNames;
}

std::vector<BenchRow> run_bench_suite(const std::string& suite, Rng& rng,
                                      const BenchOptions& opt) {
  ContextPtr ctx = BilinearContext::create();
  if (suite == "keygen") return suite_keygen(ctx, rng, opt);
  if (suite == "encrypt") return suite_encrypt(ctx, rng, opt);
  if (suite == "decrypt") return suite_decrypt(ctx, rng, opt);
  if (suite == "rekey") return suite_rekey(ctx, rng, opt);
  if (suite == "convert") return suite_convert(ctx, rng, opt);
  if (suite == "precalc") return suite_precalc(ctx, rng, opt);
  if (suite == "delegated-decrypt") return suite_delegated_decrypt(ctx, rng, opt);
  throw std::invalid_argument("unknown bench suite: " + suite);
}

}  // namespace piratte
