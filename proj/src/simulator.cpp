#include "powerag/simulator.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "powerag/error.hpp"

namespace powerag {

std::uint64_t SplitMix::below(std::uint64_t n) {
  if (n == 0) throw Error("simulator: empty draw range");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

SplitMix trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix scramble{seed};
  std::uint64_t a = scramble.next();
  std::uint64_t b = scramble.next();
  return SplitMix{a ^ (trial * 0xD1B54A32D192ED03ull) ^ (b << 1)};
}

std::vector<std::uint16_t> sample_error(const Field& field, int n, int tau, SplitMix& rng) {
  if (n < 0 || tau < 0 || tau > n) throw Error("simulator: error weight out of range");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint16_t> e(n, 0);
  const std::uint64_t nonzero = static_cast<std::uint64_t>(field.size()) - 1;
  for (int i = 0; i < tau; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
    e[idx[i]] = static_cast<std::uint16_t>(1 + rng.below(nonzero));
  }
  return e;
}

std::string SimReport::ofr_decimal(int places) const {
  if (places < 0 || trials <= 0) throw Error("simulator: bad rendering request");
  long long num = ofr_numerator(), den = ofr_denominator();
  std::string out = std::to_string(num / den);
  long long rem = num % den;
  if (places == 0) return out;
  out.push_back('.');
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + rem / den));
    rem %= den;
  }
  return out;
}

SimReport run_trials(const TrialPlan& plan) {
  if (!plan.code) throw Error("simulator: plan has no code");
  const CodeSpec& code = *plan.code;
  if (plan.tau < 0 || plan.tau > code.n) throw Error("simulator: error weight out of range");
  if (plan.trials < 1) throw Error("simulator: need at least one trial");

  SimReport rep;
  rep.ell = plan.params.ell;
  rep.s = plan.params.s;
  rep.tau = plan.tau;
  rep.trials = plan.trials;
  rep.seed = plan.seed;
  rep.tau_max_exact = radius_exact(code, plan.params);

  const int qsize = code.field().size();
  const auto t0 = std::chrono::steady_clock::now();

  // fixed-lambda runs share one context: the expansion tables and the
  // interpolation factorization depend only on (code, params, lambda)
  std::unique_ptr<DecodeContext> ctx;
  if (plan.params.mode == DecodeMode::fixed_lambda) {
    int lambda = plan.params.lambda
                     ? *plan.params.lambda
                     : plan.params.s * std::max(rep.tau_max_exact, 0) + code.backend->genus();
    ctx = std::make_unique<DecodeContext>(plan.code, plan.params, lambda);
    rep.lambda_used = lambda;
  }

  std::vector<std::uint16_t> msg(code.k), r(code.n);
  for (int trial = 0; trial < plan.trials; ++trial) {
    SplitMix rng = trial_stream(plan.seed, static_cast<std::uint64_t>(trial));
    for (auto& m : msg) m = static_cast<std::uint16_t>(rng.below(qsize));
    auto c = encode(code, msg);
    auto e = sample_error(code.field(), code.n, plan.tau, rng);
    for (int i = 0; i < code.n; ++i) r[i] = code.field().add(c[i], e[i]);

    DecodeOutcome out = ctx ? decode_with_context(*ctx, r) : decode(code, r, plan.params);
    if (out.success && out.message == msg)
      ++rep.successes;
    else if (out.success)
      ++rep.miscorrections;
    else
      ++rep.failures;
  }

  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

const char* curve_name(const Backend& b) {
  return b.kind() == CurveKind::hermitian ? "hermitian" : "rational";
}

}  // namespace

std::string report_csv(const CodeSpec& code, std::span<const SimReport> reports) {
  std::ostringstream out;
  out << "curve,q,gamma,n,k,dstar,ell,s,tau,tau_max_exact,trials,successes,failures,"
         "miscorrections,ofr\n";
  for (const SimReport& rep : reports) {
    out << curve_name(*code.backend) << ',' << code.backend->q() << ',' << code.gamma << ','
        << code.n << ',' << code.k << ',' << code.dstar << ',' << rep.ell << ',' << rep.s << ','
        << rep.tau << ',' << rep.tau_max_exact << ',' << rep.trials << ',' << rep.successes
        << ',' << rep.failures << ',' << rep.miscorrections << ',' << rep.ofr_decimal(6) << '\n';
  }
  return out.str();
}

std::string report_markdown(const CodeSpec& code, std::span<const SimReport> reports) {
  std::ostringstream out;
  out << "| code | [n, k, d*] | (l, s) | tau | OFR | N |\n";
  out << "| --- | --- | --- | --- | --- | --- |\n";
  for (const SimReport& rep : reports) {
    out << "| " << curve_name(*code.backend) << " q=" << code.backend->q() << " | [" << code.n
        << ", " << code.k << ", " << code.dstar << "] | (" << rep.ell << ", " << rep.s << ") | "
        << rep.tau << (rep.tau == rep.tau_max_exact ? "+" : "") << " | " << rep.ofr_decimal(2)
        << " | " << rep.trials << " |\n";
  }
  return out.str();
}

}  // namespace powerag
