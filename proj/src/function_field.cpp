#include "powerag/function_field.hpp"

#include <algorithm>
#include <cmath>

#include "powerag/error.hpp"

namespace powerag {

namespace {

// q = p^e with p prime, or 0 if q is not a prime power.
int prime_base(int q, int* exponent) {
  if (q < 2) return 0;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int e = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) return 0;
    *exponent = e;
    return p;
  }
  *exponent = 1;
  return q;  // q itself prime
}

}  // namespace

std::vector<std::uint16_t> series_mul(const Field& f, const std::vector<std::uint16_t>& a,
                                      const std::vector<std::uint16_t>& b) {
  const std::size_t prec = a.size();
  std::vector<std::uint16_t> out(prec, 0);
  for (std::size_t i = 0; i < prec; ++i) {
    if (!a[i]) continue;
    const std::uint16_t* mrow = f.mul_row(a[i]);
    for (std::size_t j = 0; i + j < prec; ++j) {
      if (!b[j]) continue;
      std::uint16_t prod = mrow ? mrow[b[j]] : f.mul(a[i], b[j]);
      out[i + j] = f.add(out[i + j], prod);
    }
  }
  return out;
}

std::vector<std::uint16_t> series_pow(const Field& f, std::vector<std::uint16_t> base, int e) {
  std::vector<std::uint16_t> out(base.size(), 0);
  out[0] = 1;
  while (e > 0) {
    if (e & 1) out = series_mul(f, out, base);
    e >>= 1;
    if (e) base = series_mul(f, base, base);
  }
  return out;
}

std::shared_ptr<const Backend> Backend::make_rational(std::shared_ptr<const Field> field) {
  if (!field) throw Error("backend: null field");
  auto b = std::shared_ptr<Backend>(new Backend());
  b->kind_ = CurveKind::rational;
  b->q_ = field->size();
  b->field_ = std::move(field);
  b->genus_ = 0;
  b->max_y_ = 0;
  b->ypow_ = {{{0, 0, 1}}};
  return b;
}

std::shared_ptr<const Backend> Backend::make_hermitian(int q) {
  int e = 0;
  int p = prime_base(q, &e);
  if (!p) throw Error("backend: hermitian parameter must be a prime power");
  if (static_cast<long long>(q) * q > 65536)
    throw Error("backend: hermitian constant field exceeds 2^16");
  auto b = std::shared_ptr<Backend>(new Backend());
  b->kind_ = CurveKind::hermitian;
  b->q_ = q;
  b->field_ = Field::make(p, 2 * e);
  b->genus_ = q * (q - 1) / 2;
  b->max_y_ = q - 1;

  // y^J reduced below y-degree q using y^q = x^(q+1) - y.
  const Field& F = *b->field_;
  b->ypow_.resize(2 * q - 1);
  b->ypow_[0] = {{0, 0, 1}};
  for (int J = 1; J <= 2 * (q - 1); ++J) {
    std::map<std::pair<int, int>, std::uint16_t> acc;
    auto bump = [&](int i, int j, std::uint16_t c) {
      auto key = std::make_pair(i, j);
      std::uint16_t v = F.add(acc.count(key) ? acc[key] : 0, c);
      if (v)
        acc[key] = v;
      else
        acc.erase(key);
    };
    for (const auto& [i, j, c] : b->ypow_[J - 1]) {
      if (j + 1 < q) {
        bump(i, j + 1, c);
      } else {
        bump(i + q + 1, 0, c);
        bump(i, 1, F.neg(c));
      }
    }
    for (const auto& [key, c] : acc) b->ypow_[J].emplace_back(key.first, key.second, c);
  }
  return b;
}

long long Backend::affine_place_count() const {
  if (kind_ == CurveKind::rational) return q_;
  return static_cast<long long>(q_) * q_ * q_;
}

bool Backend::on_curve(std::uint16_t x0, std::uint16_t y0) const {
  if (x0 >= field_->size() || y0 >= field_->size()) throw Error("backend: point outside field");
  if (kind_ == CurveKind::rational) return y0 == 0;
  std::uint16_t lhs = field_->add(field_->pow(y0, q_), y0);
  std::uint16_t rhs = field_->pow(x0, q_ + 1);
  return lhs == rhs;
}

std::vector<Place> Backend::places() const {
  std::vector<Place> out;
  if (kind_ == CurveKind::rational) {
    out.reserve(q_);
    for (int x0 = 0; x0 < q_; ++x0) out.push_back(Place::affine(x0, 0));
    return out;
  }
  out.reserve(affine_place_count());
  const int n = field_->size();
  for (int x0 = 0; x0 < n; ++x0)
    for (int y0 = 0; y0 < n; ++y0)
      if (on_curve(x0, y0)) out.push_back(Place::affine(x0, y0));
  return out;
}

bool Backend::pole_order_exists(int w) const {
  if (w < 0) return false;
  if (kind_ == CurveKind::rational) return true;
  int j = w % q_;
  if (j > max_y_) return false;  // unreachable for j = w mod q < q, kept for clarity
  return w - (q_ + 1) * j >= 0;
}

std::pair<int, int> Backend::monomial_exponents(int w) const {
  if (!pole_order_exists(w)) throw Error("backend: not a pole order at infinity");
  if (kind_ == CurveKind::rational) return {w, 0};
  int j = w % q_;
  return {(w - (q_ + 1) * j) / q_, j};
}

int Backend::monomial_order(int i, int j) const {
  if (i < 0 || j < 0 || j > max_y_) throw Error("backend: bad monomial exponents");
  if (kind_ == CurveKind::rational) return i;
  return q_ * i + (q_ + 1) * j;
}

int Backend::semigroup_size_up_to(int a) const {
  if (a < 0) return 0;
  if (kind_ == CurveKind::rational) return a + 1;
  int count = 0;
  for (int j = 0; j <= max_y_; ++j) {
    int rem = a - (q_ + 1) * j;
    if (rem >= 0) count += rem / q_ + 1;
  }
  return count;
}

FunctionElement Backend::zero() const {
  FunctionElement f;
  f.backend_ = this;
  return f;
}

FunctionElement Backend::constant(std::uint16_t c) const { return monomial(0, 0, c); }

FunctionElement Backend::monomial(int i, int j, std::uint16_t c) const {
  if (c >= field_->size()) throw Error("backend: coefficient outside field");
  FunctionElement f;
  f.backend_ = this;
  if (c) f.terms_[monomial_order(i, j)] = c;
  return f;
}

void Backend::check_owner(const FunctionElement& f) const {
  if (!f.backend_ || !same(*f.backend_)) throw Error("backend: element from another backend");
}

FunctionElement Backend::add(const FunctionElement& f, const FunctionElement& g) const {
  check_owner(f);
  check_owner(g);
  FunctionElement out = f;
  out.backend_ = this;
  for (const auto& [w, c] : g.terms_) {
    std::uint16_t v = field_->add(out.coeff(w), c);
    if (v)
      out.terms_[w] = v;
    else
      out.terms_.erase(w);
  }
  return out;
}

FunctionElement Backend::negate(const FunctionElement& f) const {
  check_owner(f);
  FunctionElement out = f;
  out.backend_ = this;
  for (auto& [w, c] : out.terms_) c = field_->neg(c);
  return out;
}

FunctionElement Backend::sub(const FunctionElement& f, const FunctionElement& g) const {
  return add(f, negate(g));
}

FunctionElement Backend::scale(const FunctionElement& f, std::uint16_t c) const {
  check_owner(f);
  if (c >= field_->size()) throw Error("backend: coefficient outside field");
  FunctionElement out = zero();
  if (!c) return out;
  for (const auto& [w, a] : f.terms_) out.terms_[w] = field_->mul(a, c);
  return out;
}

FunctionElement Backend::multiply(const FunctionElement& f, const FunctionElement& g) const {
  check_owner(f);
  check_owner(g);
  FunctionElement out = zero();
  if (f.is_zero() || g.is_zero()) return out;
  // Dense accumulator indexed by pole order; reduced products of reduced
  // monomials stay within q*i + (q+1)*j <= w(f) + w(g).
  const int wmax = f.terms_.rbegin()->first + g.terms_.rbegin()->first;
  std::vector<std::uint16_t> acc(wmax + 1, 0);
  for (const auto& [wf, cf] : f.terms_) {
    auto [fi, fj] = monomial_exponents(wf);
    const std::uint16_t* mrow = field_->mul_row(cf);
    for (const auto& [wg, cg] : g.terms_) {
      auto [gi, gj] = monomial_exponents(wg);
      std::uint16_t c = mrow ? mrow[cg] : field_->mul(cf, cg);
      for (const auto& [di, rj, rc] : ypow_[fj + gj]) {
        int w = monomial_order(fi + gi + di, rj);
        acc[w] = field_->add(acc[w], field_->mul(c, rc));
      }
    }
  }
  for (int w = 0; w <= wmax; ++w)
    if (acc[w]) out.terms_[w] = acc[w];
  return out;
}

FunctionElement Backend::power(const FunctionElement& f, int e) const {
  check_owner(f);
  if (e < 0) throw Error("backend: negative function power");
  FunctionElement out = constant(1);
  FunctionElement base = f;
  while (e > 0) {
    if (e & 1) out = multiply(out, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return out;
}

std::uint16_t Backend::evaluate(const FunctionElement& f, const Place& p) const {
  check_owner(f);
  if (p.infinite) throw Error("backend: cannot evaluate at the pole");
  std::uint16_t acc = 0;
  for (const auto& [w, c] : f.terms_) {
    auto [i, j] = monomial_exponents(w);
    std::uint16_t v = field_->mul(c, field_->pow(p.x0, i));
    if (j) v = field_->mul(v, field_->pow(p.y0, j));
    acc = field_->add(acc, v);
  }
  return acc;
}

std::optional<int> Backend::pole_order(const FunctionElement& f) const {
  check_owner(f);
  if (f.is_zero()) return std::nullopt;
  return f.terms_.rbegin()->first;
}

std::vector<std::uint16_t> Backend::local_expansion(const FunctionElement& f, const Place& p,
                                                    int prec) const {
  check_owner(f);
  if (p.infinite) throw Error("backend: expansion at the pole is not supported");
  if (prec < 1) throw Error("backend: precision must be positive");
  if (kind_ == CurveKind::hermitian && !on_curve(p.x0, p.y0))
    throw Error("backend: place is not on the curve");
  const Field& F = *field_;
  const std::size_t n = static_cast<std::size_t>(prec);

  // x = x0 + t in the uniformizer t = x - x0.
  std::vector<std::uint16_t> sx(n, 0);
  sx[0] = p.x0;
  if (n > 1) sx[1] = 1;

  // y = y0 + d where d solves d^q + d = (x0+t)^(q+1) - x0^(q+1); since the
  // right side has no constant term the map d -> u - d^q is a contraction in
  // the t-adic metric and the fixed point is reached within prec steps.
  std::vector<std::uint16_t> sy;
  if (kind_ == CurveKind::hermitian) {
    std::vector<std::uint16_t> u = series_pow(F, sx, q_ + 1);
    u[0] = F.sub(u[0], F.pow(p.x0, q_ + 1));
    std::vector<std::uint16_t> d(n, 0);
    for (std::size_t it = 0; it < n; ++it) {
      std::vector<std::uint16_t> dq = series_pow(F, d, q_);
      std::vector<std::uint16_t> next(n);
      for (std::size_t k = 0; k < n; ++k) next[k] = F.sub(u[k], dq[k]);
      if (next == d) break;
      d = std::move(next);
    }
    sy = std::move(d);
    sy[0] = F.add(sy[0], p.y0);
  }

  std::vector<std::uint16_t> out(n, 0);
  for (const auto& [w, c] : f.terms_) {
    auto [i, j] = monomial_exponents(w);
    std::vector<std::uint16_t> term = series_pow(F, sx, i);
    if (j) term = series_mul(F, term, series_pow(F, sy, j));
    for (std::size_t k = 0; k < n; ++k)
      out[k] = F.add(out[k], F.mul(c, term[k]));
  }
  return out;
}

std::string Backend::describe() const {
  if (kind_ == CurveKind::rational) return "rational/" + field_->name();
  return "hermitian(q=" + std::to_string(q_) + ")/" + field_->name();
}

FunctionElement operator+(const FunctionElement& f, const FunctionElement& g) {
  if (!f.backend()) throw Error("backend: element without backend");
  return f.backend()->add(f, g);
}

FunctionElement operator-(const FunctionElement& f, const FunctionElement& g) {
  if (!f.backend()) throw Error("backend: element without backend");
  return f.backend()->sub(f, g);
}

FunctionElement operator*(const FunctionElement& f, const FunctionElement& g) {
  if (!f.backend()) throw Error("backend: element without backend");
  return f.backend()->multiply(f, g);
}

}  // namespace powerag
