#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "powerag/field.hpp"

using powerag::Error;
using powerag::Field;
using powerag::FieldElement;
using powerag::element;

namespace {

// Independent irreducibility oracle: a monic polynomial of degree m is
// reducible iff it equals a product of two monic polynomials of lower degree.
// Enumerates all such products directly (no division), so it shares no code
// with the library's trial-division test.
using Poly = std::vector<int>;

Poly poly_from_encoding(std::uint32_t v, int p, int deg) {
  Poly a(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    a[i] = int(v % p);
    v /= p;
  }
  a[deg] = 1;
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

bool oracle_irreducible(const Poly& f, int p) {
  int m = int(f.size()) - 1;
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint32_t cd = 1, ce = 1;
    for (int i = 0; i < d; ++i) cd *= p;
    for (int i = 0; i < m - d; ++i) ce *= p;
    for (std::uint32_t u = 0; u < cd; ++u)
      for (std::uint32_t v = 0; v < ce; ++v)
        if (poly_mul(poly_from_encoding(u, p, d), poly_from_encoding(v, p, m - d), p) == f)
          return false;
  }
  return true;
}

Poly oracle_lowest_irreducible(int p, int m) {
  std::uint32_t q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  for (std::uint32_t low = 0; low < q; ++low) {
    Poly cand = poly_from_encoding(low, p, m);
    if (oracle_irreducible(cand, p)) return cand;
  }
  return {};
}

std::vector<int> modulus_ints(const Field& f) {
  return std::vector<int>(f.modulus().begin(), f.modulus().end());
}

}  // namespace

TEST_CASE("modulus is the lowest-encoding irreducible (oracle check)") {
  struct Case {
    int p, m;
  } cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}};
  for (auto [p, m] : cases) {
    CAPTURE(p);
    CAPTURE(m);
    auto f = Field::make(p, m);
    Poly expect = oracle_lowest_irreducible(p, m);
    CHECK(modulus_ints(*f) == expect);
  }
}

TEST_CASE("gf(16) uses z^4+z+1") {
  auto f = Field::make(2, 4);
  CHECK(modulus_ints(*f) == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(f->modulus_string() == "z^4+z+1");
  // z * z^3 = z^4 = z + 1
  CHECK(f->mul(2, 8) == 3);
}

TEST_CASE("gf(4) inversion") {
  auto f = Field::make(2, 2);
  // brute-force inverse of omega (encoding 2)
  std::uint16_t want = 0;
  for (std::uint16_t b = 1; b < 4; ++b)
    if (f->mul(2, b) == 1) want = b;
  CHECK(want == 3);
  CHECK(f->inv(2) == 3);
  CHECK(f->inv(1) == 1);
}

TEST_CASE("prime field is trivial") {
  auto f = Field::make(2, 1);
  CHECK(f->size() == 2);
  CHECK(f->add(1, 1) == 0);
  CHECK(f->mul(1, 1) == 1);
  CHECK(f->generator() == 1);
}

TEST_CASE("field axioms, exhaustive for p^m <= 256") {
  struct Case {
    int p, m;
  } cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 8}, {3, 2}, {3, 4}, {5, 2}, {5, 3}};
  for (auto [p, m] : cases) {
    CAPTURE(p);
    CAPTURE(m);
    auto fp = Field::make(p, m);
    const Field& f = *fp;
    const std::uint32_t q = f.size();
    REQUIRE(q <= 256);

    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(std::uint16_t(a), 0) == a);
      CHECK(f.mul(std::uint16_t(a), 1) == a);
      CHECK(f.add(std::uint16_t(a), f.neg(std::uint16_t(a))) == 0);
      if (a != 0) CHECK(f.mul(std::uint16_t(a), f.inv(std::uint16_t(a))) == 1);
    }
    bool comm = true, frob = true;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        auto ua = std::uint16_t(a), ub = std::uint16_t(b);
        comm = comm && f.add(ua, ub) == f.add(ub, ua) && f.mul(ua, ub) == f.mul(ub, ua);
        frob = frob && f.pow(f.add(ua, ub), p) == f.add(f.pow(ua, p), f.pow(ub, p));
      }
    CHECK(comm);
    CHECK(frob);  // (a+b)^p == a^p + b^p in characteristic p
    bool assoc = true, distr = true;
    for (std::uint32_t a = 0; a < q && assoc && distr; ++a)
      for (std::uint32_t b = 0; b < q && assoc && distr; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          auto ua = std::uint16_t(a), ub = std::uint16_t(b), uc = std::uint16_t(c);
          if (f.add(f.add(ua, ub), uc) != f.add(ua, f.add(ub, uc)) ||
              f.mul(f.mul(ua, ub), uc) != f.mul(ua, f.mul(ub, uc))) {
            assoc = false;
            break;
          }
          if (f.mul(ua, f.add(ub, uc)) != f.add(f.mul(ua, ub), f.mul(ua, uc))) {
            distr = false;
            break;
          }
        }
    CHECK(assoc);
    CHECK(distr);
  }
}

TEST_CASE("generator has full multiplicative order") {
  for (auto [p, m] : {std::pair{2, 4}, {5, 2}, {3, 3}}) {
    auto f = Field::make(p, m);
    std::uint32_t q = f->size();
    std::uint16_t g = f->generator();
    CHECK(f->pow(g, q - 1) == 1);
    for (std::uint32_t d = 1; d < q - 1; ++d)
      if ((q - 1) % d == 0) CHECK(f->pow(g, d) != 1);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4, 2), Error);
  CHECK_THROWS_AS(Field::make(1, 3), Error);
  CHECK_THROWS_AS(Field::make(2, 0), Error);
  CHECK_THROWS_AS(Field::make(2, 17), Error);
  CHECK_THROWS_AS(Field::make(5, 7), Error);
  CHECK_NOTHROW(Field::make(2, 16));
}

TEST_CASE("inverse of zero and bad encodings") {
  auto f = Field::make(2, 2);
  CHECK_THROWS_AS(f->inv(0), Error);
  CHECK_THROWS_AS(f->pow(0, -1), Error);
  CHECK_THROWS_AS(element(*f, 4), Error);
  CHECK(f->pow(0, 0) == 1);
}

TEST_CASE("bound elements detect mismatched fields") {
  auto f4 = Field::make(2, 2);
  auto f16 = Field::make(2, 4);
  FieldElement a = element(*f4, 2), b = element(*f16, 2);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(a + b, Error);
  FieldElement c = element(*f4, 3);
  CHECK((a * c).rep == 1);  // omega * omega^2 = 1
  CHECK((a / c).rep == f4->mul(2, f4->inv(3)));
  CHECK(inverse(a).rep == 3);
}

TEST_CASE("negation and subtraction in odd characteristic") {
  auto f = Field::make(5, 2);
  for (std::uint32_t a = 0; a < 25; ++a) {
    CHECK(f->add(std::uint16_t(a), f->neg(std::uint16_t(a))) == 0);
    for (std::uint32_t b = 0; b < 25; ++b)
      CHECK(f->add(f->sub(std::uint16_t(a), std::uint16_t(b)), std::uint16_t(b)) == a);
  }
  CHECK(f->from_int(-3) == 2);
  CHECK(f->from_int(7) == 2);
}
