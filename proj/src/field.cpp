#include "powerag/field.hpp"

#include <algorithm>

namespace powerag {
namespace {

constexpr std::uint32_t kMaxSize = 1u << 16;
// Dense q*q add/mul tables up to this size (128 KiB per table at the cap).
constexpr std::uint32_t kTableLimit = 256;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a modulo a monic divisor d, both over GF(p).
Poly poly_mod(Poly a, const Poly& d, int p) {
  int dd = poly_deg(d);
  for (int i = poly_deg(a); i >= dd; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      int k = i - dd + j;
      a[k] = ((a[k] - c * d[j]) % p + p) % p;
    }
  }
  a.resize(dd);
  return a;
}

bool poly_is_zero(const Poly& a) { return poly_deg(a) < 0; }

// Trial division against every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  int n = poly_deg(f);
  if (n <= 0) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
      Poly div(d + 1, 0);
      long long v = low;
      for (int i = 0; i < d; ++i) {
        div[i] = int(v % p);
        v /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_mod(f, div, p))) return false;
    }
  }
  return true;
}

std::uint16_t encode(const Poly& a, int p, int m) {
  std::uint32_t v = 0;
  for (int i = m - 1; i >= 0; --i) v = v * p + (i < int(a.size()) ? a[i] : 0);
  return std::uint16_t(v);
}

Poly decode(std::uint32_t v, int p, int m) {
  Poly a(m, 0);
  for (int i = 0; i < m; ++i) {
    a[i] = int(v % p);
    v /= p;
  }
  return a;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int m) {
  if (!is_prime(p)) throw Error("field: p must be prime, got " + std::to_string(p));
  if (m < 1) throw Error("field: m must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= std::uint64_t(p);
    if (q > kMaxSize) throw Error("field: p^m exceeds 2^16");
  }

  auto f = std::shared_ptr<Field>(new Field);
  f->p_ = p;
  f->m_ = m;
  f->q_ = std::uint32_t(q);

  // Smallest-encoding irreducible monic of degree m. The encoding of the
  // low part runs from 0 upward, so the first hit is canonical.
  Poly mod;
  for (std::uint32_t low = 0; low < f->q_; ++low) {
    Poly cand = decode(low, p, m);
    cand.resize(m + 1, 0);
    cand[m] = 1;
    if (is_irreducible(cand, p)) {
      mod = cand;
      break;
    }
  }
  if (mod.empty()) throw Error("field: no irreducible modulus found");
  f->modulus_.assign(mod.begin(), mod.end());

  const std::uint32_t qq = f->q_;
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint16_t {
    Poly pa = decode(a, p, m), pb = decode(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
      if (pa[i] == 0) continue;
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    }
    return encode(poly_mod(prod, mod, p), p, m);
  };

  // Smallest-encoding multiplicative generator; its power run doubles as the
  // discrete log table.
  f->exp_.assign(2 * (qq - 1), 0);
  f->log_.assign(qq, 0);
  bool found = false;
  for (std::uint32_t cand = 1; cand < qq && !found; ++cand) {
    std::uint32_t pw = 1;
    std::uint32_t order = 0;
    for (std::uint32_t i = 1; i < qq; ++i) {
      pw = raw_mul(pw, cand);
      if (pw == 1) {
        order = i;
        break;
      }
    }
    if (order == qq - 1) {
      f->generator_ = std::uint16_t(cand);
      std::uint32_t v = 1;
      for (std::uint32_t i = 0; i < qq - 1; ++i) {
        f->exp_[i] = std::uint16_t(v);
        f->exp_[i + qq - 1] = std::uint16_t(v);
        f->log_[v] = std::uint16_t(i);
        v = raw_mul(v, cand);
      }
      found = true;
    }
  }
  if (!found) throw Error("field: no generator found");

  f->neg_table_.assign(qq, 0);
  for (std::uint32_t a = 0; a < qq; ++a) {
    Poly pa = decode(a, p, m);
    for (auto& c : pa) c = (p - c) % p;
    f->neg_table_[a] = encode(pa, p, m);
  }

  if (qq <= kTableLimit) {
    f->add_table_.assign(std::size_t(qq) * qq, 0);
    f->mul_table_.assign(std::size_t(qq) * qq, 0);
    for (std::uint32_t a = 0; a < qq; ++a) {
      Poly pa = decode(a, p, m);
      for (std::uint32_t b = 0; b < qq; ++b) {
        Poly pb = decode(b, p, m);
        Poly s(m, 0);
        for (int i = 0; i < m; ++i) s[i] = (pa[i] + pb[i]) % p;
        f->add_table_[std::size_t(a) * qq + b] = encode(s, p, m);
        f->mul_table_[std::size_t(a) * qq + b] = raw_mul(a, b);
      }
    }
  }
  return f;
}

std::uint16_t Field::add_slow(std::uint16_t a, std::uint16_t b) const {
  std::uint32_t res = 0, mult = 1, ua = a, ub = b;
  for (int i = 0; i < m_; ++i) {
    res += mult * ((ua + ub) % p_);
    ua /= p_;
    ub /= p_;
    mult *= p_;
  }
  return std::uint16_t(res);
}

std::uint16_t Field::inv(std::uint16_t a) const {
  if (a == 0) throw Error("field: inverse of zero");
  return exp_[(q_ - 1) - log_[a]];
}

std::uint16_t Field::pow(std::uint16_t a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error("field: inverse of zero");
    return 0;
  }
  long long ord = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % ord)) % ord;
  if (k < 0) k += ord;
  return exp_[k];
}

std::uint16_t Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return std::uint16_t(r);
}

std::string Field::modulus_string() const {
  std::string out;
  for (int i = m_; i >= 0; --i) {
    int c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += (i == 1) ? "z" : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string Field::name() const {
  return "gf(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

std::string Field::describe() const {
  return name() + ", modulus " + modulus_string() + ", generator " +
         std::to_string(generator_);
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field || !b.field || !a.field->same(*b.field))
    throw Error("field: mismatched fields");
  return *a.field;
}
}  // namespace

FieldElement element(const Field& f, std::uint16_t rep) {
  if (rep >= f.size()) throw Error("field: encoding out of range");
  return FieldElement{&f, rep};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return {a.field, f.add(a.rep, b.rep)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return {a.field, f.sub(a.rep, b.rep)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return {a.field, f.mul(a.rep, b.rep)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return {a.field, f.mul(a.rep, f.inv(b.rep))};
}

FieldElement inverse(const FieldElement& a) {
  return {a.field, a.field->inv(a.rep)};
}

}  // namespace powerag
