#include "doctest.h"

#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;
using io::Json;

namespace {

std::string where_of(const std::string& text) {
  try {
    io::document_from_json(io::parse(text));
  } catch (const io::InputError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("rationals and vectors") {
  CHECK(io::to_json(Rational(-3, 6)) == Json("-1/2"));
  CHECK(io::rational_from_json(Json("4/6")) == Rational(2, 3));
  CHECK(io::rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), io::InputError);
  CHECK_THROWS_AS(io::rational_from_json(Json(1.5)), io::InputError);
  auto v = SparseVector::from_entries(5, {{1, Rational(2)}, {4, Rational(-1, 3)}});
  CHECK(io::to_json(v).dump() == R"([[1,"2"],[4,"-1/3"]])");
  auto m = SparseMatrix::from_triplets(2, 3, {{0, 2, Rational(7, 2)}, {1, 0, Rational(1)}});
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
}

TEST_CASE("algebra round trip") {
  for (const auto& name : {"sl2", "sl3", "so31", "sp2", "sl2c"}) {
    auto g = catalog_entry(name).algebra;
    auto back = io::algebra_from_json(io::to_json(g));
    CHECK_MESSAGE(back == g, name);
    CHECK(back.name() == g.name());
  }
  // a non-antisymmetric table survives the trip
  LieAlgebra g({"a", "b"});
  g.set_bracket_raw(0, 1, SparseVector::unit(2, 0));
  g.set_bracket_raw(1, 0, SparseVector::unit(2, 0));
  CHECK(io::algebra_from_json(io::to_json(g)) == g);
}

TEST_CASE("bracket mirroring") {
  auto j = io::parse(R"({"dim": 3, "basis": ["e","f","h"], "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": 1}},
      {"i": 2, "j": 0, "coeffs": {"0": "2"}},
      {"i": 2, "j": 1, "coeffs": {"1": "-2"}}]})");
  auto g = io::algebra_from_json(j);
  CHECK(g == catalog_entry("sl2").algebra);
  CHECK(g.bracket(1, 0) == SparseVector::unit(3, 2, Rational(-1)));

  auto both = io::parse(R"({"dim": 2, "basis": ["a","b"], "brackets": [
      {"i": 0, "j": 1, "coeffs": {"0": 1}},
      {"i": 1, "j": 0, "coeffs": {"0": 1}}]})");
  auto b = io::algebra_from_json(both);
  CHECK(b.bracket(1, 0) == SparseVector::unit(2, 0));

  auto twice = io::parse(R"({"dim": 2, "basis": ["a","b"], "brackets": [
      {"i": 0, "j": 1, "coeffs": {"0": 1}},
      {"i": 0, "j": 1, "coeffs": {"1": 1}}]})");
  CHECK_THROWS_AS(io::algebra_from_json(twice), io::InputError);
}

TEST_CASE("catalog entries export and read back") {
  for (const auto& name : catalog_names()) {
    auto e = catalog_entry(name);
    auto doc = io::document_from_json(io::parse(io::to_json(e).dump()));
    CHECK(doc.name == name);
    if (e.extension) {
      REQUIRE(doc.is_extension());
      CHECK_MESSAGE(*doc.base == e.extension->g, name);
      CHECK_MESSAGE(doc.module->action() == e.extension->rep.action(), name);
      CHECK_MESSAGE(semidirect(*doc.base, *doc.module).h == e.algebra, name);
    } else {
      REQUIRE(doc.algebra);
      CHECK_MESSAGE(*doc.algebra == e.algebra, name);
      REQUIRE(doc.representations.size() == e.representations.size());
      for (std::size_t i = 0; i < e.representations.size(); ++i)
        CHECK(doc.representations[i].action() == e.representations[i].action());
    }
  }
}

TEST_CASE("syntax errors report line and column") {
  try {
    io::parse("{\n  \"dim\": 3,\n  \"basis\": [\"e\" \"f\"]\n}");
    FAIL("expected a parse error");
  } catch (const io::InputError& e) {
    CHECK(e.where().find("line 3") == 0);
    CHECK(e.where().find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse("{"), io::InputError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), io::InputError);
}

TEST_CASE("schema errors report a path") {
  CHECK(where_of(R"({"dim": 2, "basis": ["a"], "brackets": []})") == "$.basis");
  CHECK(where_of(R"({"dim": 2, "basis": ["a","b"]})") == "$");
  CHECK(where_of(R"({"dim": 2, "basis": ["a","b"], "brackets": [{"i": 0, "j": 5, "coeffs": {}}]})") ==
        "$.brackets[0].j");
  CHECK(where_of(R"({"dim": 2, "basis": ["a","b"], "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "x"}}]})") ==
        "$.brackets[0].coeffs.0");
  CHECK(where_of(R"({"dim": -1, "basis": [], "brackets": []})") == "$.dim");
  CHECK(where_of(R"({"g": {"dim": 1, "basis": ["x"], "brackets": []},
                     "rep": {"dim": 1, "basis": ["v"], "action": [{"generator": 3, "entries": []}]}})") ==
        "$.rep.action[0].generator");
  CHECK(where_of("[1, 2]") == "$");
}

TEST_CASE("reports serialize") {
  LieAlgebra g({"e", "f", "h"});
  g.set_bracket(0, 1, SparseVector::unit(3, 2));
  g.set_bracket(2, 0, SparseVector::unit(3, 0, Rational(3)));
  g.set_bracket(2, 1, SparseVector::unit(3, 1, Rational(-2)));
  auto j = io::to_json(check_algebra(g), g.labels());
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["kind"] == "jacobi");
  CHECK(j["violations"][0]["labels"].size() == 3);

  auto c = io::to_json(lie_complex(catalog_entry("sl2").algebra, 3));
  CHECK(c["dims"] == Json::array({1, 3, 3, 1}));
  CHECK(io::matrix_from_json(c["boundaries"][2]) == lie_boundary(catalog_entry("sl2").algebra, 2));

  auto hr = io::to_json(HRReport{0, 2, 1, 1, 1});
  CHECK(hr["predicted"] == 2);
  CHECK(hr["match"] == true);
}
