#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "powerag/ag_code.hpp"

namespace powerag {

enum class DecodeMode { iterative, fixed_lambda };

struct DecoderParams {
  int ell = 1;             // number of powers, >= 1
  int s = 1;               // multiplicity, 1 <= s <= ell
  DecodeMode mode = DecodeMode::fixed_lambda;
  std::optional<int> lambda;  // fixed_lambda pole bound; default s*radius_exact + g
};

// The key-equation system: an element of ker(matrix), split along col_offsets
// into coordinates of (phi_1..phi_ell, psi_0..psi_{s-1}) in the canonical
// bases of V_t = (lambda + t*gamma)Pinf and W_j = (lambda + j*(gamma+rho))Pinf
// - jD, solves the shifted key equations.
struct KeyMatrix {
  Matrix matrix;
  std::vector<int> col_offsets;  // ell + s + 1 entries
  std::vector<int> row_offsets;  // ell + 1 entries, one block per t
  int lambda = 0;
  int ell = 0;
  int s = 0;
};

struct Candidate {
  FunctionElement f;        // in L(gamma Pinf)
  FunctionElement psi0;     // candidate error locator, in L(lambda Pinf)
  std::vector<std::uint16_t> message;  // coords of f in the message basis
};

struct DecodeOutcome {
  enum class Reason { none, no_unique_kernel, extraction_failed, validation_failed };
  bool success = false;
  Reason reason = Reason::none;
  FunctionElement f;
  std::vector<std::uint16_t> message;
  std::vector<std::uint16_t> codeword;
  int error_weight = -1;
  int lambda_used = -1;
};

// Received-word independent data for decoding a fixed (code, ell, s, lambda):
// space dimensions, block offsets, the W_j bases with their monomial
// coordinates, the local-expansion table of the ambient monomials, and a
// pre-factored interpolation solver.
class DecodeContext {
 public:
  DecodeContext(std::shared_ptr<const CodeSpec> code, const DecoderParams& params, int lambda);

  const CodeSpec& code() const { return *code_; }
  const std::shared_ptr<const CodeSpec>& code_ptr() const { return code_; }
  int ell() const { return ell_; }
  int s() const { return s_; }
  int lambda() const { return lambda_; }

  FunctionElement interpolate(std::span<const std::uint16_t> r) const;
  KeyMatrix build(const FunctionElement& interpolant) const;
  std::optional<Candidate> extract(const KeyMatrix& km, std::span<const std::uint16_t> u) const;

 private:
  std::shared_ptr<const CodeSpec> code_;
  int ell_, s_, lambda_, gp_;  // gp = gamma + rho

  std::vector<int> adim_;      // l((lambda + j*gp)Pinf), j = 0..ell
  std::vector<int> vdim_;      // l(V_t), t = 1..ell (index t-1)
  std::vector<int> wdim_;      // l(W_j), j = 0..s-1
  std::vector<int> col_off_, row_off_;
  int nu_ = 0, rows_ = 0;

  std::vector<int> mono_orders_;           // semigroup orders <= lambda + ell*gp
  std::vector<int> idx_of_order_;          // inverse of mono_orders_, -1 on gaps
  std::vector<RRBasis> wbasis_;            // j = 0..s-1
  std::vector<Matrix> wcoef_;              // monomial coords of wbasis_[j], adim_[j] x wdim_[j]
  Matrix emono_;                           // (s*n) x #monomials expansion table
  std::vector<Matrix> ew_;                 // emono prefix * wcoef_[j]
  std::vector<std::vector<std::uint16_t>> binom_;  // binomials in the field
  Matrix interp_t_;                        // row-reduction transform of interp_matrix
  std::vector<int> interp_pivots_;

  friend DecodeOutcome decode_with_context(const DecodeContext&, std::span<const std::uint16_t>);
};

// R in L((gamma+rho)Pinf) with R(P_i) = r_i, the deterministic least solution
// of the evaluation system (free variables zeroed).
FunctionElement interpolator(const CodeSpec& code, std::span<const std::uint16_t> r);

KeyMatrix build_key_matrix(const CodeSpec& code, const FunctionElement& interpolant,
                           const DecoderParams& params, int lambda);

// psi0 = 0 or phi_1 not divisible by psi0 within L(gamma Pinf) -> nullopt.
std::optional<Candidate> extract_candidate(const CodeSpec& code, const KeyMatrix& km,
                                           std::span<const std::uint16_t> u);

// Accept iff pole_order(psi0) <= lambda and psi0 vanishes to order >= s at
// every place where the re-encoding differs from r.
bool validate_candidate(const CodeSpec& code, std::span<const std::uint16_t> r,
                        const Candidate& cand, int s, int lambda);

DecodeOutcome decode(const CodeSpec& code, std::span<const std::uint16_t> r,
                     const DecoderParams& params);
DecodeOutcome decode_with_context(const DecodeContext& ctx, std::span<const std::uint16_t> r);

// floor((s(2l-s+1)n - l(l+1)gamma + 2l) / (2s(l+1))), exact integer arithmetic.
int radius_closed_form(int n, int gamma, const DecoderParams& params);

// Largest tau >= 0 such that at lambda = s*tau + g the solution-space
// dimension bound nu <= eps + 1 holds with exact space dimensions (-1 if no
// tau qualifies).
int radius_exact(const CodeSpec& code, const DecoderParams& params);

// floor(sqrt(gamma*ell^2 / n)) + 1 clamped to [1, ell].
int suggest_multiplicity(const CodeSpec& code, int ell);

}  // namespace powerag
