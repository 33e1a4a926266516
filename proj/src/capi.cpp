#include "powerag.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "powerag/config.hpp"
#include "powerag/error.hpp"
#include "powerag/simulator.hpp"

using namespace powerag;

struct powerag_code {
  std::shared_ptr<const CodeSpec> spec;
};

namespace {

thread_local std::string g_last_error = "no error";

powerag_status fail(powerag_status st, const char* what) {
  g_last_error = what;
  return st;
}

// translates exceptions escaping the C++ core into status codes
template <typename Fn>
powerag_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const MembershipError& e) {
    return fail(POWERAG_ERR_MEMBERSHIP, e.what());
  } catch (const Error& e) {
    return fail(POWERAG_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(POWERAG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(POWERAG_ERR_INTERNAL, "unknown error");
  }
}

powerag_status require(bool ok, const char* what) {
  return ok ? POWERAG_OK : fail(POWERAG_ERR_INVALID, what);
}

DecoderParams to_params(const powerag_decoder_params& p) {
  DecoderParams out;
  out.ell = p.ell;
  out.s = p.s;
  out.mode = p.iterative ? DecodeMode::iterative : DecodeMode::fixed_lambda;
  if (!p.iterative && p.lambda >= 0) out.lambda = p.lambda;
  return out;
}

}  // namespace

extern "C" {

const char* powerag_last_error(void) { return g_last_error.c_str(); }

powerag_status powerag_code_from_config(const char* json_text, powerag_code** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new powerag_code{code_from_config(json_text)};
    return POWERAG_OK;
  });
}

powerag_status powerag_code_from_file(const char* path, powerag_code** out) {
  if (auto st = require(path && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new powerag_code{code_from_file(path)};
    return POWERAG_OK;
  });
}

void powerag_code_free(powerag_code* code) { delete code; }

int powerag_code_length(const powerag_code* code) { return code ? code->spec->n : -1; }
int powerag_code_dimension(const powerag_code* code) { return code ? code->spec->k : -1; }
int powerag_code_distance(const powerag_code* code) { return code ? code->spec->dstar : -1; }
int powerag_code_gamma(const powerag_code* code) { return code ? code->spec->gamma : -1; }
int powerag_code_genus(const powerag_code* code) {
  return code ? code->spec->backend->genus() : -1;
}
int powerag_code_field_size(const powerag_code* code) {
  return code ? static_cast<int>(code->spec->field().size()) : -1;
}

powerag_status powerag_encode(const powerag_code* code, const uint16_t* message,
                              size_t message_len, uint16_t* codeword) {
  if (auto st = require(code && message && codeword, "null argument")) return st;
  return guarded([&] {
    auto word = encode(*code->spec, std::span<const std::uint16_t>(message, message_len));
    std::memcpy(codeword, word.data(), word.size() * sizeof(uint16_t));
    return POWERAG_OK;
  });
}

powerag_status powerag_decode(const powerag_code* code, const uint16_t* received,
                              size_t received_len, const powerag_decoder_params* params,
                              uint16_t* message, powerag_decode_info* info) {
  if (auto st = require(code && received && params && message, "null argument")) return st;
  if (info) *info = powerag_decode_info{0, -1, -1, 0};
  return guarded([&] {
    DecodeOutcome out = decode(*code->spec,
                               std::span<const std::uint16_t>(received, received_len),
                               to_params(*params));
    if (info) {
      info->success = out.success ? 1 : 0;
      info->error_weight = out.error_weight;
      info->lambda_used = out.lambda_used;
      info->reason = static_cast<int>(out.reason);
    }
    if (!out.success) return fail(POWERAG_ERR_DECODE, "decoding failure");
    std::memcpy(message, out.message.data(), out.message.size() * sizeof(uint16_t));
    return POWERAG_OK;
  });
}

powerag_status powerag_radius_exact(const powerag_code* code,
                                    const powerag_decoder_params* params, int* out) {
  if (auto st = require(code && params && out, "null argument")) return st;
  return guarded([&] {
    *out = radius_exact(*code->spec, to_params(*params));
    return POWERAG_OK;
  });
}

powerag_status powerag_radius_closed_form(const powerag_code* code,
                                          const powerag_decoder_params* params, int* out) {
  if (auto st = require(code && params && out, "null argument")) return st;
  return guarded([&] {
    *out = radius_closed_form(code->spec->n, code->spec->gamma, to_params(*params));
    return POWERAG_OK;
  });
}

powerag_status powerag_suggest_multiplicity(const powerag_code* code, int ell, int* out) {
  if (auto st = require(code && out, "null argument")) return st;
  return guarded([&] {
    *out = suggest_multiplicity(*code->spec, ell);
    return POWERAG_OK;
  });
}

powerag_status powerag_simulate(const powerag_code* code, const powerag_decoder_params* params,
                                int tau, int trials, uint64_t seed, powerag_sim_counts* out) {
  if (auto st = require(code && params && out, "null argument")) return st;
  return guarded([&] {
    TrialPlan plan{code->spec, to_params(*params), tau, trials, seed};
    SimReport rep = run_trials(plan);
    *out = powerag_sim_counts{rep.successes, rep.failures, rep.miscorrections,
                              rep.tau_max_exact, rep.lambda_used, rep.wall_seconds};
    return POWERAG_OK;
  });
}

powerag_status powerag_simulate_report(const powerag_code* code,
                                       const powerag_decoder_params* params, const int* taus,
                                       size_t tau_count, int trials, uint64_t seed, int markdown,
                                       char** out) {
  if (auto st = require(code && params && taus && out && tau_count > 0, "null argument"))
    return st;
  *out = nullptr;
  return guarded([&] {
    std::vector<SimReport> reports;
    reports.reserve(tau_count);
    for (size_t i = 0; i < tau_count; ++i) {
      TrialPlan plan{code->spec, to_params(*params), taus[i], trials, seed};
      reports.push_back(run_trials(plan));
    }
    std::string text = markdown ? report_markdown(*code->spec, reports)
                                : report_csv(*code->spec, reports);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) return fail(POWERAG_ERR_INTERNAL, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return POWERAG_OK;
  });
}

void powerag_string_free(char* s) { std::free(s); }

}  // extern "C"
