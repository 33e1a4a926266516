#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "powerag/ag_code.hpp"
#include "powerag/error.hpp"

using namespace powerag;

namespace {

int weight(const std::vector<std::uint16_t>& v) {
  int w = 0;
  for (auto c : v) w += c ? 1 : 0;
  return w;
}

}  // namespace

TEST_CASE("hermitian q=4 benchmark code is [64,10,49]") {
  auto code = code_make(Backend::make_hermitian(4), PlaceSelection::all(), 15);
  CHECK(code->n == 64);
  CHECK(code->k == 10);
  CHECK(code->dstar == 49);
  CHECK(code->rho == 64 - 15 + 11);
  CHECK(code->eval_places_are_all());
  CHECK(rank(code->generator) == 10);
  CHECK(rank(code->interp_matrix) == 64);
}

TEST_CASE("hermitian q=5 benchmark code is [125,46,70]") {
  auto code = code_make(Backend::make_hermitian(5), PlaceSelection::all(), 55);
  CHECK(code->n == 125);
  CHECK(code->k == 46);
  CHECK(code->dstar == 70);
}

TEST_CASE("rational gf(16) code is [16,5,12]") {
  auto code = code_make(Backend::make_rational(Field::make(2, 4)), PlaceSelection::all(), 4);
  CHECK(code->n == 16);
  CHECK(code->k == 5);
  CHECK(code->dstar == 12);
}

TEST_CASE("encoding evaluates the message function") {
  auto b = Backend::make_rational(Field::make(2, 2));
  auto code = code_make(b, PlaceSelection::all(), 1);
  REQUIRE(code->k == 2);

  // message = coefficients of (1, x); f = x evaluates to the place order
  std::vector<std::uint16_t> msg = {0, 1};
  CHECK(encode(*code, msg) == std::vector<std::uint16_t>{0, 1, 2, 3});

  std::vector<std::uint16_t> zero = {0, 0};
  CHECK(encode(*code, zero) == std::vector<std::uint16_t>{0, 0, 0, 0});

  std::vector<std::uint16_t> ones = {1, 0};  // constant function 1
  CHECK(encode(*code, ones) == std::vector<std::uint16_t>{1, 1, 1, 1});

  CHECK_THROWS_AS(encode(*code, std::vector<std::uint16_t>{1}), Error);
  CHECK_THROWS_AS(encode(*code, std::vector<std::uint16_t>{1, 9}), Error);
}

TEST_CASE("every nonzero codeword meets the designed distance") {
  SUBCASE("exhaustive on the small hermitian code") {
    auto code = code_make(Backend::make_hermitian(2), PlaceSelection::all(), 3);
    REQUIRE(code->n == 8);
    REQUIRE(code->k == 3);
    REQUIRE(code->dstar == 5);
    const int q = code->field().size();
    std::vector<std::uint16_t> msg(3);
    for (int m = 1; m < q * q * q; ++m) {
      msg[0] = m % q;
      msg[1] = (m / q) % q;
      msg[2] = m / (q * q);
      CHECK(weight(encode(*code, msg)) >= code->dstar);
    }
  }
  SUBCASE("random messages on the gf(16) rational code") {
    auto code = code_make(Backend::make_rational(Field::make(2, 4)), PlaceSelection::all(), 4);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> dc(0, 15);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint16_t> msg(code->k);
      bool nonzero = false;
      for (auto& m : msg) {
        m = static_cast<std::uint16_t>(dc(rng));
        nonzero = nonzero || m;
      }
      if (!nonzero) msg[0] = 1;
      CHECK(weight(encode(*code, msg)) >= code->dstar);
    }
  }
}

TEST_CASE("codewords interpolate through the message function") {
  auto b = Backend::make_hermitian(3);
  auto code = code_make(b, PlaceSelection::all(), 9);
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> dc(0, 8);
  std::vector<std::uint16_t> msg(code->k);
  for (auto& m : msg) m = static_cast<std::uint16_t>(dc(rng));
  auto c = encode(*code, msg);
  FunctionElement f = b->zero();
  for (int i = 0; i < code->k; ++i)
    f = b->add(f, b->scale(code->message_basis.elements[i], msg[i]));
  for (int j = 0; j < code->n; ++j) CHECK(b->evaluate(f, code->eval_places[j]) == c[j]);
}

TEST_CASE("place selections") {
  auto b = Backend::make_hermitian(2);
  auto all = code_make(b, PlaceSelection::all(), 3);
  auto first6 = code_make(b, PlaceSelection::first_n(6), 3);
  CHECK(first6->n == 6);
  for (int i = 0; i < 6; ++i) CHECK(first6->eval_places[i] == all->eval_places[i]);
  CHECK_FALSE(first6->eval_places_are_all());

  auto expl = code_make(
      b, PlaceSelection::explicit_list({Place::affine(0, 0), Place::affine(1, 2),
                                        Place::affine(3, 3), Place::affine(2, 2)}),
      2);
  CHECK(expl->n == 4);
  CHECK(expl->eval_places[1] == Place::affine(1, 2));
}

TEST_CASE("construction rejects bad parameters") {
  auto b = Backend::make_hermitian(2);  // g = 1
  CHECK_THROWS_AS(code_make(b, PlaceSelection::all(), 0), Error);    // gamma <= 2g-2
  CHECK_THROWS_AS(code_make(b, PlaceSelection::all(), 8), Error);    // gamma >= n
  CHECK_THROWS_AS(code_make(b, PlaceSelection::first_n(9), 3), Error);
  CHECK_THROWS_AS(code_make(b, PlaceSelection::first_n(0), 3), Error);
  CHECK_THROWS_AS(
      code_make(b, PlaceSelection::explicit_list({Place::affine(0, 0), Place::affine(0, 0)}), 1),
      Error);
  CHECK_THROWS_AS(code_make(b, PlaceSelection::explicit_list({Place::affine(1, 1)}), 1), Error);
  CHECK_THROWS_AS(code_make(b, PlaceSelection::explicit_list({Place::at_infinity()}), 1), Error);
  CHECK_NOTHROW(code_make(b, PlaceSelection::all(), 1));  // 2g-2 = 0 < 1
}
