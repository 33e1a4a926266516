#include "powerag/power_decoder.hpp"

#include <cassert>
#include <cmath>
#include <cstring>

#include "powerag/error.hpp"

namespace powerag {

namespace {

void check_params(const DecoderParams& p) {
  if (p.ell < 1) throw Error("decoder: ell must be >= 1");
  if (p.s < 1 || p.s > p.ell) throw Error("decoder: s must satisfy 1 <= s <= ell");
}

void check_received(const CodeSpec& code, std::span<const std::uint16_t> r) {
  if (static_cast<int>(r.size()) != code.n) throw Error("decoder: received length mismatch");
  for (auto v : r)
    if (v >= code.field().size()) throw Error("decoder: received symbol outside field");
}

// non-owning view of a caller-held code, for the standalone entry points
std::shared_ptr<const CodeSpec> borrow(const CodeSpec& code) {
  return std::shared_ptr<const CodeSpec>(std::shared_ptr<const CodeSpec>(), &code);
}

long long floordiv(long long a, long long b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

long long isqrt_ll(long long v) {
  if (v <= 0) return 0;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint16_t weight_of_difference(const Field& f, std::span<const std::uint16_t> a,
                                   std::span<const std::uint16_t> b, std::vector<int>* where) {
  std::uint16_t w = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (f.sub(a[i], b[i])) {
      ++w;
      if (where) where->push_back(static_cast<int>(i));
    }
  return w;
}

}  // namespace

DecodeContext::DecodeContext(std::shared_ptr<const CodeSpec> code, const DecoderParams& params,
                             int lambda)
    : code_(std::move(code)), ell_(params.ell), s_(params.s), lambda_(lambda) {
  if (!code_) throw Error("decoder: null code");
  check_params(params);
  if (lambda_ < 0) throw Error("decoder: lambda must be >= 0");
  const Backend& b = *code_->backend;
  const Field& F = b.field();
  const int n = code_->n;
  gp_ = code_->gamma + code_->rho;

  adim_.resize(ell_ + 1);
  for (int j = 0; j <= ell_; ++j) adim_[j] = b.semigroup_size_up_to(lambda_ + j * gp_);
  vdim_.resize(ell_);
  for (int t = 1; t <= ell_; ++t)
    vdim_[t - 1] = b.semigroup_size_up_to(lambda_ + t * code_->gamma);

  const int top = lambda_ + ell_ * gp_;
  idx_of_order_.assign(top + 1, -1);
  for (int w = 0; w <= top; ++w)
    if (b.pole_order_exists(w)) {
      idx_of_order_[w] = static_cast<int>(mono_orders_.size());
      mono_orders_.push_back(w);
    }

  wbasis_.resize(s_);
  wdim_.resize(s_);
  wcoef_.resize(s_);
  for (int j = 0; j < s_; ++j) {
    SpaceDescriptor sp;
    sp.pole_bound = lambda_ + j * gp_;
    if (j > 0)
      for (const auto& p : code_->eval_places) sp.constraints.push_back({p, j});
    wbasis_[j] = rr_basis(b, sp);
    wdim_[j] = wbasis_[j].dim();
    if (j > 0) {
      wcoef_[j] = Matrix(b.field_ptr(), adim_[j], wdim_[j]);
      for (int c = 0; c < wdim_[j]; ++c)
        for (const auto& [w, cc] : wbasis_[j].elements[c].terms())
          wcoef_[j](idx_of_order_[w], c) = cc;
    }
  }

  col_off_.assign(ell_ + s_ + 1, 0);
  for (int t = 1; t <= ell_; ++t) col_off_[t] = col_off_[t - 1] + vdim_[t - 1];
  for (int j = 0; j < s_; ++j) col_off_[ell_ + j + 1] = col_off_[ell_ + j] + wdim_[j];
  nu_ = col_off_[ell_ + s_];
  row_off_.assign(ell_ + 1, 0);
  for (int t = 1; t <= ell_; ++t)
    row_off_[t] = row_off_[t - 1] + (t < s_ ? adim_[t] : s_ * n);
  rows_ = row_off_[ell_];

  // expansion table of the ambient monomials: row i*s + k holds coefficient k
  // of the expansion at P_i
  emono_ = Matrix(b.field_ptr(), s_ * n, static_cast<int>(mono_orders_.size()));
  for (int c = 0; c < static_cast<int>(mono_orders_.size()); ++c) {
    auto [mi, mj] = b.monomial_exponents(mono_orders_[c]);
    FunctionElement m = b.monomial(mi, mj);
    for (int i = 0; i < n; ++i) {
      auto exp = b.local_expansion(m, code_->eval_places[i], s_);
      for (int k = 0; k < s_; ++k) emono_(i * s_ + k, c) = exp[k];
    }
  }

  ew_.resize(s_);
  for (int j = 1; j < s_; ++j) {
    ew_[j] = Matrix(b.field_ptr(), s_ * n, wdim_[j]);
    for (int r = 0; r < s_ * n; ++r) {
      const std::uint16_t* erow = emono_.row(r);
      std::uint16_t* dst = ew_[j].row(r);
      for (int m = 0; m < adim_[j]; ++m)
        if (erow[m]) row_addmul(F, dst, wcoef_[j].row(m), erow[m], wdim_[j]);
    }
  }

  binom_.assign(ell_ + 1, std::vector<std::uint16_t>(ell_ + 1, 0));
  std::vector<std::vector<long long>> pascal(ell_ + 1, std::vector<long long>(ell_ + 1, 0));
  for (int t = 0; t <= ell_; ++t) {
    pascal[t][0] = 1;
    for (int j = 1; j <= t; ++j)
      pascal[t][j] = pascal[t - 1][j - 1] + (j <= t - 1 ? pascal[t - 1][j] : 0);
    for (int j = 0; j <= t; ++j)
      binom_[t][j] = F.from_int(pascal[t][j] % F.p());
  }

  // factor the interpolation system once: rref of [M | I] records the row
  // transform, giving R's coordinates by one multiplication per received word
  const Matrix& M = code_->interp_matrix;
  Matrix aug(b.field_ptr(), n, M.cols() + n);
  for (int i = 0; i < n; ++i) {
    std::memcpy(aug.row(i), M.row(i), sizeof(std::uint16_t) * M.cols());
    aug(i, M.cols() + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank != n) throw Error("decoder: interpolation matrix lost rank");
  interp_pivots_.clear();
  for (int i = 0; i < n; ++i) {
    if (rr.pivot_cols[i] >= M.cols()) throw Error("decoder: interpolation matrix lost rank");
    interp_pivots_.push_back(rr.pivot_cols[i]);
  }
  interp_t_ = Matrix(b.field_ptr(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) interp_t_(i, j) = rr.reduced(i, M.cols() + j);
}

FunctionElement DecodeContext::interpolate(std::span<const std::uint16_t> r) const {
  check_received(*code_, r);
  const Backend& b = *code_->backend;
  std::vector<std::uint16_t> y = matvec(interp_t_, r);
  FunctionElement out = b.zero();
  for (int i = 0; i < code_->n; ++i)
    if (y[i])
      out = b.add(out, b.scale(code_->interp_basis.elements[interp_pivots_[i]], y[i]));
  return out;
}

KeyMatrix DecodeContext::build(const FunctionElement& interpolant) const {
  const Backend& b = *code_->backend;
  const Field& F = b.field();
  const int n = code_->n;

  KeyMatrix km;
  km.lambda = lambda_;
  km.ell = ell_;
  km.s = s_;
  km.col_offsets = col_off_;
  km.row_offsets = row_off_;
  km.matrix = Matrix(b.field_ptr(), rows_, nu_);
  Matrix& U = km.matrix;

  // R^m as functions (for the coordinate row blocks, exponents < s)
  std::vector<FunctionElement> rfn(s_);
  rfn[0] = b.constant(1);
  for (int m = 1; m < s_; ++m) rfn[m] = b.multiply(rfn[m - 1], interpolant);

  // expansions of R^m at every place, precision s (for the functional rows)
  std::vector<std::vector<std::vector<std::uint16_t>>> rexp(ell_ + 1);
  rexp[1].resize(n);
  for (int i = 0; i < n; ++i)
    rexp[1][i] = b.local_expansion(interpolant, code_->eval_places[i], s_);
  for (int m = 2; m <= ell_; ++m) {
    rexp[m].resize(n);
    for (int i = 0; i < n; ++i) rexp[m][i] = series_mul(F, rexp[m - 1][i], rexp[1][i]);
  }

  for (int t = 1; t <= ell_; ++t) {
    const int r0 = row_off_[t - 1];
    if (t < s_) {
      // coordinate rows over the monomial basis of Q_t
      for (int c = 0; c < vdim_[t - 1]; ++c) U(r0 + c, col_off_[t - 1] + c) = 1;
      for (int j = 0; j <= t; ++j) {
        std::uint16_t coef = F.neg(binom_[t][j]);
        if (!coef) continue;
        const std::uint16_t* crow = F.mul_row(coef);
        const int colj = col_off_[ell_ + j];
        for (int c = 0; c < wdim_[j]; ++c) {
          FunctionElement h = t == j
                                  ? wbasis_[j].elements[c]
                                  : b.multiply(rfn[t - j], wbasis_[j].elements[c]);
          for (const auto& [w, cc] : h.terms()) {
            assert(idx_of_order_[w] < adim_[t]);
            U(r0 + idx_of_order_[w], colj + c) = crow ? crow[cc] : F.mul(coef, cc);
          }
        }
      }
    } else {
      // s*n vanishing-order functional rows, place-major
      for (int row = 0; row < s_ * n; ++row)
        std::memcpy(U.row(r0 + row) + col_off_[t - 1], emono_.row(row),
                    sizeof(std::uint16_t) * vdim_[t - 1]);
      for (int j = 0; j < s_; ++j) {
        std::uint16_t coef = F.neg(binom_[t][j]);
        if (!coef) continue;
        const int m = t - j;
        const int colj = col_off_[ell_ + j];
        const Matrix& ewj = j == 0 ? emono_ : ew_[j];
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < s_; ++k) {
            std::uint16_t* dst = U.row(r0 + i * s_ + k) + colj;
            for (int a = 0; a <= k; ++a) {
              std::uint16_t c = F.mul(coef, rexp[m][i][a]);
              if (c) row_addmul(F, dst, ewj.row(i * s_ + (k - a)), c, wdim_[j]);
            }
          }
      }
    }
  }
  return km;
}

std::optional<Candidate> DecodeContext::extract(const KeyMatrix& km,
                                                std::span<const std::uint16_t> u) const {
  const Backend& b = *code_->backend;
  if (static_cast<int>(u.size()) != nu_) throw Error("decoder: kernel vector length mismatch");

  const int off0 = km.col_offsets[ell_];
  FunctionElement psi0 = b.zero();
  for (int c = 0; c < wdim_[0]; ++c)
    if (u[off0 + c]) psi0 = b.add(psi0, b.scale(wbasis_[0].elements[c], u[off0 + c]));
  if (psi0.is_zero()) return std::nullopt;

  // divide phi_1 by psi0 inside L(gamma Pinf): solve the multiplication
  // system; the phi_1 block of u is already the right-hand side in the
  // monomial coordinates of V_1
  const int v1 = vdim_[0];
  Matrix a(b.field_ptr(), v1, code_->k);
  for (int i = 0; i < code_->k; ++i) {
    FunctionElement h = b.multiply(psi0, code_->message_basis.elements[i]);
    for (const auto& [w, cc] : h.terms()) a(idx_of_order_[w], i) = cc;
  }
  auto sol = solve_any(a, u.subspan(0, v1));
  if (!sol) return std::nullopt;

  Candidate cand;
  cand.message = *sol;
  cand.psi0 = std::move(psi0);
  cand.f = b.zero();
  for (int i = 0; i < code_->k; ++i)
    if ((*sol)[i]) cand.f = b.add(cand.f, b.scale(code_->message_basis.elements[i], (*sol)[i]));
  return cand;
}

bool validate_candidate(const CodeSpec& code, std::span<const std::uint16_t> r,
                        const Candidate& cand, int s, int lambda) {
  const Backend& b = *code.backend;
  if (cand.psi0.is_zero()) return false;
  if (*b.pole_order(cand.psi0) > lambda) return false;
  std::vector<std::uint16_t> chat = encode(code, cand.message);
  for (int i = 0; i < code.n; ++i) {
    if (code.field().sub(r[i], chat[i]) == 0) continue;
    auto exp = b.local_expansion(cand.psi0, code.eval_places[i], s);
    for (int k = 0; k < s; ++k)
      if (exp[k]) return false;
  }
  return true;
}

namespace {

// Try the kernel basis vectors in canonical order. With stop_after_first the
// first vector decides the outcome (Algorithm-1 unique-solution semantics);
// otherwise the first extractable, validated candidate wins.
DecodeOutcome try_vectors(const DecodeContext& ctx, const KeyMatrix& km, const Matrix& ker,
                          std::span<const std::uint16_t> r, bool stop_after_first) {
  const CodeSpec& code = ctx.code();
  DecodeOutcome out;
  out.lambda_used = km.lambda;
  if (ker.cols() == 0) {
    out.reason = DecodeOutcome::Reason::no_unique_kernel;
    return out;
  }
  out.reason = DecodeOutcome::Reason::extraction_failed;
  std::vector<std::uint16_t> u(ker.rows());
  for (int v = 0; v < ker.cols(); ++v) {
    for (int i = 0; i < ker.rows(); ++i) u[i] = ker(i, v);
    auto cand = ctx.extract(km, u);
    if (!cand) {
      if (stop_after_first) return out;
      continue;
    }
    if (!validate_candidate(code, r, *cand, km.s, km.lambda)) {
      out.reason = DecodeOutcome::Reason::validation_failed;
      if (stop_after_first) return out;
      continue;
    }
    out.success = true;
    out.reason = DecodeOutcome::Reason::none;
    out.f = cand->f;
    out.message = cand->message;
    out.codeword = encode(code, cand->message);
    out.error_weight = weight_of_difference(code.field(), r, out.codeword, nullptr);
    return out;
  }
  return out;
}

}  // namespace

DecodeOutcome decode_with_context(const DecodeContext& ctx, std::span<const std::uint16_t> r) {
  check_received(ctx.code(), r);
  FunctionElement interp = ctx.interpolate(r);
  KeyMatrix km = ctx.build(interp);
  Matrix ker = right_kernel_basis(km.matrix);
  return try_vectors(ctx, km, ker, r, false);
}

DecodeOutcome decode(const CodeSpec& code, std::span<const std::uint16_t> r,
                     const DecoderParams& params) {
  check_params(params);
  check_received(code, r);
  auto holder = borrow(code);

  if (params.mode == DecodeMode::iterative) {
    const int top = params.s * code.n + code.backend->genus();
    for (int lambda = 0; lambda <= top; ++lambda) {
      DecodeContext ctx(holder, params, lambda);
      FunctionElement interp = ctx.interpolate(r);
      KeyMatrix km = ctx.build(interp);
      Matrix ker = right_kernel_basis(km.matrix);
      if (ker.cols() != 1) continue;
      return try_vectors(ctx, km, ker, r, true);
    }
    DecodeOutcome out;
    out.reason = DecodeOutcome::Reason::no_unique_kernel;
    out.lambda_used = top;
    return out;
  }

  int lambda;
  if (params.lambda) {
    lambda = *params.lambda;
  } else {
    int tau = radius_exact(code, params);
    if (tau < 0) tau = 0;
    lambda = params.s * tau + code.backend->genus();
  }
  DecodeContext ctx(holder, params, lambda);
  return decode_with_context(ctx, r);
}

FunctionElement interpolator(const CodeSpec& code, std::span<const std::uint16_t> r) {
  check_received(code, r);
  auto sol = solve_any(code.interp_matrix, r);
  if (!sol) throw Error("decoder: interpolation system inconsistent");
  const Backend& b = *code.backend;
  FunctionElement out = b.zero();
  for (int c = 0; c < code.interp_basis.dim(); ++c)
    if ((*sol)[c]) out = b.add(out, b.scale(code.interp_basis.elements[c], (*sol)[c]));
  return out;
}

KeyMatrix build_key_matrix(const CodeSpec& code, const FunctionElement& interpolant,
                           const DecoderParams& params, int lambda) {
  return DecodeContext(borrow(code), params, lambda).build(interpolant);
}

std::optional<Candidate> extract_candidate(const CodeSpec& code, const KeyMatrix& km,
                                           std::span<const std::uint16_t> u) {
  DecoderParams params;
  params.ell = km.ell;
  params.s = km.s;
  return DecodeContext(borrow(code), params, km.lambda).extract(km, u);
}

int radius_closed_form(int n, int gamma, const DecoderParams& params) {
  check_params(params);
  const long long l = params.ell, s = params.s;
  const long long num = s * (2 * l - s + 1) * n - l * (l + 1) * gamma + 2 * l;
  const long long den = 2 * s * (l + 1);
  return static_cast<int>(floordiv(num, den));
}

int radius_exact(const CodeSpec& code, const DecoderParams& params) {
  check_params(params);
  const Backend& b = *code.backend;
  const int g = b.genus();
  const int gp = code.gamma + code.rho;
  int best = -1;
  for (int tau = 0; tau <= code.n; ++tau) {
    const int lambda = params.s * tau + g;
    long long nu = 0, eps = 0;
    for (int t = 1; t <= params.ell; ++t) {
      nu += b.semigroup_size_up_to(lambda + t * code.gamma);
      const int qt = b.semigroup_size_up_to(lambda + t * gp);
      if (t < params.s) {
        eps += qt;
      } else {
        SpaceDescriptor sp;
        sp.pole_bound = lambda + t * gp;
        for (const auto& p : code.eval_places) sp.constraints.push_back({p, params.s});
        eps += qt - rr_dimension(b, sp);
      }
    }
    for (int j = 0; j < params.s; ++j) {
      SpaceDescriptor sp;
      sp.pole_bound = lambda + j * gp;
      if (j > 0)
        for (const auto& p : code.eval_places) sp.constraints.push_back({p, j});
      nu += rr_dimension(b, sp);
    }
    if (nu <= eps + 1) best = tau;
  }
  return best;
}

int suggest_multiplicity(const CodeSpec& code, int ell) {
  if (ell < 1) throw Error("decoder: ell must be >= 1");
  long long v = static_cast<long long>(code.gamma) * ell * ell / code.n;
  long long s = isqrt_ll(v) + 1;
  if (s < 1) s = 1;
  if (s > ell) s = ell;
  return static_cast<int>(s);
}

}  // namespace powerag
