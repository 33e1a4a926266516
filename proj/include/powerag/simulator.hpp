#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "powerag/power_decoder.hpp"

namespace powerag {

// counter-based generator (splitmix64 step); fully specified here so reports
// are reproducible across platforms and runs
struct SplitMix {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // unbiased uniform draw from [0, n)
  std::uint64_t below(std::uint64_t n);
};

// independent substream for one trial; decoupled from the trial count so
// aggregation order cannot matter
SplitMix trial_stream(std::uint64_t seed, std::uint64_t trial);

struct TrialPlan {
  std::shared_ptr<const CodeSpec> code;
  DecoderParams params;
  int tau = 0;
  int trials = 1;
  std::uint64_t seed = 0;
};

struct SimReport {
  int ell = 1;
  int s = 1;
  int tau = 0;
  int tau_max_exact = -1;
  int trials = 0;
  int lambda_used = -1;
  std::uint64_t seed = 0;
  int successes = 0;
  int failures = 0;        // decoder declared failure
  int miscorrections = 0;  // decoder returned a message != the sent one
  double wall_seconds = 0.0;

  // observed failure rate: everything that is not a success, as an exact
  // rational and as a fixed-point decimal rendering
  long long ofr_numerator() const { return failures + miscorrections; }
  long long ofr_denominator() const { return trials; }
  std::string ofr_decimal(int places = 6) const;
};

// weight-tau vector with uniformly random support (partial Fisher-Yates) and
// uniformly random nonzero values
std::vector<std::uint16_t> sample_error(const Field& field, int n, int tau, SplitMix& rng);

SimReport run_trials(const TrialPlan& plan);

// one CSV row per report (shared header); deterministic byte-for-byte
std::string report_csv(const CodeSpec& code, std::span<const SimReport> reports);
// failure-rate table in the style of the published benchmarks; a "+" marks
// rows running at the exact decoding radius
std::string report_markdown(const CodeSpec& code, std::span<const SimReport> reports);

}  // namespace powerag
