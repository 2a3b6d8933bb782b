// Timing harness behind the `bench` CLI subcommand: per-operation sweeps
// over attribute count, leaf count or revocation capacity, reported as CSV
// with mean and 95% confidence interval per point.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "piratte/policy.hpp"
#include "piratte/rng.hpp"

namespace piratte {

struct BenchStats {
  double mean_s = 0;
  double ci95_s = 0;
};

// Warmup runs, then `iterations` (>= 2) timed samples; sub-millisecond
// functions are batched so each sample spans at least ~2 ms. The interval
// uses Student's t on the sample standard deviation.
BenchStats measure(const std::function<void()>& fn, int warmup = 2,
                   int iterations = 10);

struct AffineFit {
  double intercept = 0;
  double slope = 0;
  double r2 = 0;
};

AffineFit affine_fit(const std::vector<double>& xs, const std::vector<double>& ys);

struct BenchRow {
  std::string suite;
  std::string param;  // swept parameter name: "attributes", "leaves", "t"
  double value = 0;
  std::string impl;  // "piratte" or "bsw"
  double mean_s = 0;
  double ci95_s = 0;
};

// Header + one line per row: suite,param,value,impl,mean_s,ci95_s
std::string bench_csv(const std::vector<BenchRow>& rows);

// Random access tree with exactly `leaves` leaves named prefix0, prefix1, ...
// in leaf order; gates have 2..4 children with a uniform threshold.
AccessTree random_policy(int leaves, const std::string& attr_prefix, Rng& rng);

const std::vector<std::string>& bench_suite_names();

// Knobs for faster exploratory runs; defaults match the reported methodology.
struct BenchOptions {
  int warmup = 2;
  int iterations = 10;
};

std::vector<BenchRow> run_bench_suite(const std::string& suite, Rng& rng,
                                      const BenchOptions& opt = {});

}  // namespace piratte
