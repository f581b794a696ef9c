#include <functional>

#include "doctest.h"

#include "paracyclic/homology.hpp"
#include "paracyclic/identities.hpp"
#include "paracyclic/index_category.hpp"
#include "paracyclic/serialize.hpp"

using namespace paracyclic;

namespace {

const Ring Q = Ring::rationals();

ErrorKind parse_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ShapeMismatch;  // no error: never what the tests expect
}

}  // namespace

TEST_CASE("scalars and rings") {
  CHECK(to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(scalar_from_json(Q, Json("-3/4")) == Scalar(-3, 4));
  CHECK(scalar_from_json(Q, Json(7)) == 7);
  CHECK(scalar_from_json(Ring::integers_mod(5), Json(-1)) == 4);
  CHECK(parse_kind([] { scalar_from_json(Q, Json("x")); }) == ErrorKind::ParseError);
  CHECK(parse_kind([] { scalar_from_json(Q, Json::array()); }) == ErrorKind::ParseError);
  for (Ring r : {Q, Ring::integers(), Ring::integers_mod(7)}) CHECK(ring_from_json(to_json(r)) == r);
  CHECK(parse_kind([] { ring_from_json(Json("C")); }) == ErrorKind::UnsupportedRing);
}

TEST_CASE("matrices and vectors") {
  Matrix m = Matrix::from_rows(Q, {{1, -2}, {0, 3}});
  CHECK(matrix_from_json(Q, to_json(m)) == m);
  Matrix empty = Matrix::zero(Q, 0, 3);
  CHECK(matrix_from_json(Q, to_json(empty), std::pair<std::size_t, std::size_t>{0, 3}) == empty);
  CHECK(parse_kind([] { matrix_from_json(Q, Json::parse(R"([["1"],["1","2"]])")); }) ==
        ErrorKind::ParseError);
  Vector v = parse_vector(Q, "1,0,-2/3");
  CHECK(v == Vector{Scalar(1), Scalar(0), Scalar(-2, 3)});
  CHECK(parse_vector(Q, "[1, \"1/2\"]") == Vector{Scalar(1), Scalar(1, 2)});
  CHECK(vector_from_json(Q, to_json(v)) == v);
  CHECK(parse_kind([] { parse_vector(Q, "1,,2"); }) == ErrorKind::ParseError);
}

TEST_CASE("modules round trip") {
  for (Ring ring : {Q, Ring::integers_mod(7)})
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      TruncatedDuplicialModule m = builtin_module(name, ring, 3);
      Json j = to_json(m);
      TruncatedDuplicialModule back = module_from_json(Json::parse(j.dump()));
      CHECK(back.ring == m.ring);
      CHECK(back.ranks == m.ranks);
      CHECK(back.face == m.face);
      CHECK(back.degen == m.degen);
      CHECK(back.t == m.t);
      CHECK(to_json(back) == j);
    }
}

TEST_CASE("module parse errors name the location") {
  Json j = to_json(builtin_module("ground-ring", Q, 2));
  j["face"][1][0] = Json::parse(R"([["1", "1"]])");
  try {
    module_from_json(j);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ShapeMismatch));
    CHECK(std::string(e.what()).find("face") != std::string::npos);
  }
  Json missing = to_json(builtin_module("ground-ring", Q, 2));
  missing.erase("ranks");
  CHECK(parse_kind([&] { module_from_json(missing); }) == ErrorKind::ParseError);
}

TEST_CASE("duchains and algebras round trip") {
  DuchainComplex v = scalar_twist_duchain(Q, Scalar(3), 3);
  DuchainComplex back = duchain_from_json(to_json(v));
  CHECK(back.ranks == v.ranks);
  CHECK(back.b == v.b);
  CHECK(back.d == v.d);
  AlgebraSpec a = AlgebraSpec::dual_numbers(true);
  AlgebraSpec a2 = algebra_from_json(Q, to_json(a));
  CHECK(a2.dim == a.dim);
  CHECK(a2.unit == a.unit);
  CHECK(a2.mult == a.mult);
  CHECK(a2.automorphism == a.automorphism);
}

TEST_CASE("index morphisms and words") {
  IndexMorphism f(2, 3, {0, 1, 4});
  CHECK(morphism_from_json(to_json(f)) == f);
  GeneratorWord w = factorize(IndexMorphism(3, 4, {0, 0, 2, 2}));
  CHECK(word_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(morphism_from_json(Json::parse(R"({"m":1,"n":1,"values":[1,0]})")), Error);
}

TEST_CASE("results serialize deterministically") {
  IdentityReport r = check_identity_suite(builtin_module("simplex-1", Q, 3));
  CHECK(to_json(r).dump() == to_json(check_identity_suite(builtin_module("simplex-1", Q, 3))).dump());
  Json h = to_json(HomologyGroup{2, 1, {2, 6}});
  CHECK(h["degree"] == 2);
  CHECK(h["free_rank"] == 1);
  CHECK(h["torsion"] == Json::parse(R"(["2","6"])"));
  TruncatedDuplicialModule m = builtin_module("ground-ring", Q, 3);
  Json d = to_json(dk_decompose(m, 1, {Scalar(3)}));
  CHECK(d["degree"] == 1);
  CHECK(d["components"].size() == 2);
}

TEST_CASE("reading files") {
  CHECK(parse_kind([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::ParseError);
}
