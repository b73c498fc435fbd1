#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detcount/enumeration.hpp"
#include "detcount/poly.hpp"

namespace detcount {

enum class CountFunction { N, M, Naff, Detmethod };

std::string to_string(CountFunction f);
CountFunction parse_function(const std::string& name);

struct VarietySpec {
  std::string polynomial;
  std::optional<std::size_t> num_vars;
  std::optional<int> degree;
  std::optional<int> dimension;
  std::optional<bool> integral;
};

struct ExperimentConfig {
  std::string name = "experiment";
  VarietySpec variety;
  std::vector<Integer> grid;
  CountFunction function = CountFunction::N;
  std::vector<ResidueFilter> filters;
  double epsilon = 0.05;        // detmethod prime window
  std::size_t min_primes = 1;
  std::string out_dir;          // empty: no files written
  std::optional<double> target;
  double tolerance = 0.1;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Parses a JSON experiment config (schema in docs/report-schema.md).
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// Checks grid monotonicity and the declared degree; throws on violation.
IntPoly validate_config(const ExperimentConfig& cfg);

/// bmax, bmax/k, bmax/k^2, ... down to bmin, returned in increasing order.
std::vector<Integer> geometric_grid(const Integer& bmax, unsigned long ratio,
                                    const Integer& bmin = 1);
/// "geometric:k" or a comma separated list of bounds.
std::vector<Integer> parse_grid(const std::string& spec, const Integer& bmax);

/// "p:r1,r2,r3".
ResidueFilter parse_filter(const std::string& text);

/// DETCOUNT_SEED if set, else `configured`.
std::uint64_t resolve_seed(std::uint64_t configured);

struct FitReport {
  CountSeries series;
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // sum of squared log residuals
  std::size_t used = 0;
  std::optional<double> target;
  double tolerance = 0;
  std::optional<double> margin;  // |slope - target|
  std::optional<bool> pass;
};

/// Least-squares slope of log(count) against log(B) over positive counts.
FitReport fit_exponent(const CountSeries& series, std::optional<double> target = std::nullopt,
                       double tolerance = 0.1);

Integer count_at(const ExperimentConfig& cfg, const IntPoly& f, const Integer& B);

struct ExperimentResult {
  CountSeries series;
  std::optional<FitReport> fit;
  std::string fit_error;
  std::string integrality;  // verdict when the config declares integrality
  std::string csv;
  std::string json;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string series_csv(const CountSeries& s);
std::string fit_json(const FitReport& r);

}  // namespace detcount
