#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "powerag/config.hpp"
#include "powerag/error.hpp"

using namespace powerag;

TEST_CASE("hermitian code from config") {
  auto code = code_from_config(R"({"curve": "hermitian", "q": 4, "gamma": 15})");
  CHECK(code->n == 64);
  CHECK(code->k == 10);
  CHECK(code->dstar == 49);
  CHECK(code->backend->kind() == CurveKind::hermitian);
  CHECK(code->field().size() == 16);
}

TEST_CASE("rational code from config") {
  auto code =
      code_from_config(R"({"curve": "rational", "field": {"p": 2, "m": 3}, "gamma": 2})");
  CHECK(code->n == 8);
  CHECK(code->k == 3);
  CHECK(code->dstar == 6);
  CHECK(code->backend->kind() == CurveKind::rational);
}

TEST_CASE("length selection picks a place prefix") {
  auto code = code_from_config(R"({"curve": "hermitian", "q": 2, "gamma": 3, "n": 6})");
  CHECK(code->n == 6);
  auto full = code_from_config(R"({"curve": "hermitian", "q": 2, "gamma": 3})");
  for (int i = 0; i < 6; ++i) CHECK(code->eval_places[i] == full->eval_places[i]);
}

TEST_CASE("hermitian field cross-check") {
  CHECK_NOTHROW(
      code_from_config(R"({"curve": "hermitian", "q": 2, "field": {"p": 2, "m": 2}, "gamma": 3})"));
  CHECK_THROWS_AS(
      code_from_config(R"({"curve": "hermitian", "q": 2, "field": {"p": 2, "m": 3}, "gamma": 3})"),
      Error);
}

TEST_CASE("config rejections") {
  CHECK_THROWS_AS(code_from_config("not json"), Error);
  CHECK_THROWS_AS(code_from_config("[1,2]"), Error);
  CHECK_THROWS_AS(code_from_config(R"({"q": 4, "gamma": 15})"), Error);
  CHECK_THROWS_AS(code_from_config(R"({"curve": "elliptic", "gamma": 3})"), Error);
  CHECK_THROWS_AS(code_from_config(R"({"curve": "hermitian", "gamma": 15})"), Error);
  CHECK_THROWS_AS(code_from_config(R"({"curve": "hermitian", "q": 4})"), Error);
  CHECK_THROWS_AS(code_from_config(R"({"curve": "rational", "gamma": 2})"), Error);
  CHECK_THROWS_AS(
      code_from_config(R"({"curve": "rational", "field": {"p": 2}, "gamma": 2})"), Error);
  CHECK_THROWS_AS(
      code_from_config(R"({"curve": "hermitian", "q": 4, "gamma": 15, "n": 65})"), Error);
  // gamma outside (2g-2, n)
  CHECK_THROWS_AS(code_from_config(R"({"curve": "hermitian", "q": 4, "gamma": 64})"), Error);
}

TEST_CASE("config from file") {
  const char* path = "test_config_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"curve": "rational", "field": {"p": 3, "m": 2}, "gamma": 4, "n": 9})";
  }
  auto code = code_from_file(path);
  CHECK(code->n == 9);
  CHECK(code->k == 5);
  CHECK(code->field().size() == 9);
  std::remove(path);
  CHECK_THROWS_AS(code_from_file("does_not_exist.json"), Error);
}

TEST_CASE("symbol lists parse and render") {
  auto fp = Field::make(2, 2);
  const Field& f = *fp;
  CHECK(parse_symbols("0,1,2,3", f) == std::vector<std::uint16_t>{0, 1, 2, 3});
  CHECK(parse_symbols(" 3 ,2,\n1", f) == std::vector<std::uint16_t>{3, 2, 1});
  CHECK(parse_symbols("", f).empty());
  CHECK_THROWS_AS(parse_symbols("0,4", f), Error);
  CHECK_THROWS_AS(parse_symbols("0,-1", f), Error);
  CHECK_THROWS_AS(parse_symbols("a", f), Error);
  CHECK_THROWS_AS(parse_symbols("1x", f), Error);
  std::vector<std::uint16_t> v{0, 3, 1};
  CHECK(format_symbols(v) == "0,3,1");
  CHECK(parse_symbols(format_symbols(v), f) == v);
  CHECK(format_symbols({}).empty());
}
