#include <doctest.h>

#include "helpers.hpp"
#include "ncsym/error.hpp"
#include "ncsym/json_io.hpp"

using namespace ncsym;
using testing::fin;
using testing::kInf;
using testing::m;
using testing::ms;

TEST_CASE("NCSym elements round-trip") {
  NCSymElement f = m("13.2") - Rational(1, 2) * m("1.2.3") + 3 * m("1234");
  Json j = to_json(f);
  CHECK(j["alphabet"] == "inf");
  CHECK(j["terms"][0]["sp"] == "1,3/2");
  CHECK(ncsym_from_json(j) == f);
  NCSymElement g = m("12.3", fin(3));
  CHECK(ncsym_from_json(to_json(g)) == g);
  CHECK(ncsym_from_json(to_json(NCSymElement::zero(fin(2)))).is_zero());
}

TEST_CASE("integer coefficients are accepted") {
  Json j = Json::parse(R"({"alphabet":"inf","terms":[{"sp":"1/2","coeff":2}]})");
  CHECK(ncsym_from_json(j) == 2 * m("1.2"));
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(ncsym_from_json(Json::parse(R"({"terms":[]})")), ParseError);
  CHECK_THROWS_AS(ncsym_from_json(Json::parse(R"({"alphabet":"x","terms":[]})")), ParseError);
  CHECK_THROWS_AS(ncsym_from_json(Json::parse(R"({"alphabet":"inf","terms":[{"sp":"1/1","coeff":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(ncsym_from_json(Json::parse(R"({"alphabet":"inf","terms":[{"sp":"1","coeff":"1/0"}]})")),
                  ParseError);
  CHECK_THROWS_AS(ncsym_from_json(Json::parse("[1,2]")), ParseError);
}

TEST_CASE("Sym elements and tensors round-trip") {
  SymElement f = ms("2,1") + Rational(-3, 4) * ms("3");
  CHECK(sym_from_json(to_json(f)) == f);
  Tensor t = coproduct(m("13.2"));
  Json j = to_json(t);
  CHECK(j["arity"] == 2);
  CHECK(tensor_from_json(j) == t);
  Tensor t3 = iterate_reduced(m("1.2.3"), 3);
  CHECK(tensor_from_json(to_json(t3)) == t3);
}

TEST_CASE("series serialize as coefficient strings") {
  CHECK(to_json(hilb_cosym(fin(3), 4)).dump() == R"(["1","0","0","2","8"])");
  ShapePoly p = shape_hilb_sym(2);
  CHECK(to_json(p).dump() == R"({"":"1","1":"1","2":"1","1,1":"1"})");
}
