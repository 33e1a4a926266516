#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powerag/field.hpp"

namespace powerag {

enum class CurveKind { rational, hermitian };

// A rational place of the function field: either the common pole at infinity
// or an affine point (x0, y0) of the curve.
struct Place {
  bool infinite = false;
  std::uint16_t x0 = 0;
  std::uint16_t y0 = 0;

  static Place at_infinity() { return Place{true, 0, 0}; }
  static Place affine(std::uint16_t x, std::uint16_t y) { return Place{false, x, y}; }

  friend bool operator==(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || (a.x0 == b.x0 && a.y0 == b.y0);
  }
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.x0 != b.x0) return a.x0 < b.x0;
    return a.y0 < b.y0;
  }
};

class Backend;

// Function with poles only at infinity, stored as a combination of reduced
// monomials x^i y^j (y-degree below q for Hermitian). Distinct reduced
// monomials have distinct pole orders, so terms are keyed by pole order.
class FunctionElement {
 public:
  FunctionElement() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::uint16_t>& terms() const { return terms_; }
  std::uint16_t coeff(int w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }
  const Backend* backend() const { return backend_; }

  friend bool operator==(const FunctionElement& a, const FunctionElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  friend class Backend;
  const Backend* backend_ = nullptr;
  std::map<int, std::uint16_t> terms_;
};

// Curve backend: the rational function field (Reed-Solomon codes) or the
// Hermitian function field y^q + y = x^(q+1) over GF(q^2).
class Backend {
 public:
  static std::shared_ptr<const Backend> make_rational(std::shared_ptr<const Field> field);
  // Builds GF(q^2) internally; q must be a prime power with q^2 <= 2^16.
  static std::shared_ptr<const Backend> make_hermitian(int q);

  CurveKind kind() const { return kind_; }
  int q() const { return q_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  int genus() const { return genus_; }
  int max_y_degree() const { return max_y_; }
  long long affine_place_count() const;
  bool same(const Backend& o) const {
    return kind_ == o.kind_ && q_ == o.q_ && field_->same(*o.field_);
  }

  // All affine rational places, ordered lexicographically by (x0, y0)
  // encodings. The infinite place is implicit and never listed.
  std::vector<Place> places() const;
  bool on_curve(std::uint16_t x0, std::uint16_t y0) const;

  // Weierstrass semigroup of pole orders at infinity: w = i (rational) or
  // w = q*i + (q+1)*j with 0 <= j < q (Hermitian).
  bool pole_order_exists(int w) const;
  std::pair<int, int> monomial_exponents(int w) const;
  int monomial_order(int i, int j) const;
  int semigroup_size_up_to(int a) const;

  FunctionElement zero() const;
  FunctionElement constant(std::uint16_t c) const;
  FunctionElement monomial(int i, int j, std::uint16_t c = 1) const;
  FunctionElement x() const { return monomial(1, 0); }
  FunctionElement y() const { return monomial(0, 1); }

  FunctionElement add(const FunctionElement& f, const FunctionElement& g) const;
  FunctionElement sub(const FunctionElement& f, const FunctionElement& g) const;
  FunctionElement negate(const FunctionElement& f) const;
  FunctionElement scale(const FunctionElement& f, std::uint16_t c) const;
  FunctionElement multiply(const FunctionElement& f, const FunctionElement& g) const;
  FunctionElement power(const FunctionElement& f, int e) const;

  std::uint16_t evaluate(const FunctionElement& f, const Place& p) const;
  // nullopt for the zero function.
  std::optional<int> pole_order(const FunctionElement& f) const;
  // First prec coefficients of f in the uniformizer t = x - x0 at an affine
  // place (the curve is unramified over x at every affine place).
  std::vector<std::uint16_t> local_expansion(const FunctionElement& f, const Place& p,
                                             int prec) const;

  std::string describe() const;

 private:
  Backend() = default;
  void check_owner(const FunctionElement& f) const;

  CurveKind kind_ = CurveKind::rational;
  int q_ = 0;
  std::shared_ptr<const Field> field_;
  int genus_ = 0;
  int max_y_ = 0;
  // Reduced form of y^J for J in [0, 2(q-1)]: list of (x exponent, y exponent,
  // coefficient). Row 0 is the constant 1.
  std::vector<std::vector<std::tuple<int, int, std::uint16_t>>> ypow_;
};

FunctionElement operator+(const FunctionElement& f, const FunctionElement& g);
FunctionElement operator-(const FunctionElement& f, const FunctionElement& g);
FunctionElement operator*(const FunctionElement& f, const FunctionElement& g);

// Truncated power series over a field; length of the inputs fixes the
// precision. Used for local expansions here and for the decoder's
// vanishing-order functionals.
std::vector<std::uint16_t> series_mul(const Field& f, const std::vector<std::uint16_t>& a,
                                      const std::vector<std::uint16_t>& b);
std::vector<std::uint16_t> series_pow(const Field& f, std::vector<std::uint16_t> base, int e);

}  // namespace powerag
