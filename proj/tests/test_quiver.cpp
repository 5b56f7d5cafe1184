#include <catch2/catch_amalgamated.hpp>

#include "stratakit/families.hpp"
#include "stratakit/quiver.hpp"

using namespace stratakit;

namespace {

QuiverPresentation two_vertex_sample() {
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  p.arrows = {{"a.1", "1", "2", 0},
              {"a.2", "1", "2", 0},
              {"b.1", "2", "1", 0}};
  p.relations = {{"b.1", "a.2"}, {"b.1", "a.1"}};
  return p;
}

}  // namespace

TEST_CASE("validate sorts relations and preserves everything else",
          "[quiver]") {
  QuiverPresentation p = validate(two_vertex_sample());
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] == Relation{"b.1", "a.1"});
  CHECK(p.relations[1] == Relation{"b.1", "a.2"});
  CHECK(p.arrows.size() == 3);
  // idempotent on canonical input
  CHECK(validate(p) == p);
}

TEST_CASE("validate rejects each malformed presentation class", "[quiver]") {
  auto erred = [](QuiverPresentation p, ErrorCode expect) {
    try {
      validate(p);
    } catch (const AlgebraError& e) {
      return e.code() == expect;
    }
    return false;
  };
  {
    QuiverPresentation p = two_vertex_sample();
    p.vertices.push_back("1");
    CHECK(erred(p, ErrorCode::DuplicateLabel));
  }
  {
    QuiverPresentation p = two_vertex_sample();
    p.arrows.push_back({"a.1", "1", "2", 0});
    CHECK(erred(p, ErrorCode::DuplicateLabel));
  }
  {
    QuiverPresentation p = two_vertex_sample();
    p.arrows.push_back({"c", "1", "3", 0});
    CHECK(erred(p, ErrorCode::DanglingVertex));
  }
  {
    QuiverPresentation p = two_vertex_sample();
    p.relations.push_back({"a.1", "a.2"});  // tgt(a.2)=2 != src(a.1)=1
    CHECK(erred(p, ErrorCode::NonComposableRelation));
  }
  {
    QuiverPresentation p = two_vertex_sample();
    p.relations.push_back({"b.1", "z"});
    CHECK(erred(p, ErrorCode::UnknownArrow));
  }
  {
    QuiverPresentation p = two_vertex_sample();
    p.relations.push_back({"b.1", "a.1"});
    CHECK(erred(p, ErrorCode::DuplicateRelation));
  }
}

TEST_CASE("path enumeration of the two-forward one-backward algebra",
          "[quiver]") {
  PathBasis A = enumerate_paths(validate(two_vertex_sample()));
  // e1, e2, a.1, a.2, b.1, a.1 b.1, a.2 b.1
  CHECK(A.dimension() == 7);
  CHECK(A.count(0, 0) == 1);
  CHECK(A.count(0, 1) == 2);
  CHECK(A.count(1, 0) == 1);
  CHECK(A.count(1, 1) == 3);
}

TEST_CASE("products respect composability and relations", "[quiver]") {
  PathBasis A = enumerate_paths(validate(two_vertex_sample()));
  const auto& qi = A.quiver_index();
  index_t a1 = A.arrow_path_index(qi.arrow_id.at("a.1"));
  index_t b1 = A.arrow_path_index(qi.arrow_id.at("b.1"));
  index_t e1 = A.trivial_path_index(0);

  // b.1 then a.1 is the surviving cycle a.1 b.1 at vertex 2
  auto cyc = A.product(a1, b1);
  REQUIRE(cyc.has_value());
  CHECK(A.path(*cyc).length() == 2);
  // a.1 then b.1 is killed by the relation (b.1, a.1)
  CHECK_FALSE(A.product(b1, a1).has_value());
  // mismatched endpoints compose to nothing
  CHECK_FALSE(A.product(a1, a1).has_value());
  // trivial paths are one-sided units
  CHECK(A.product(a1, e1) == a1);
  auto left = A.product(e1, b1);
  CHECK(left == b1);
}

TEST_CASE("infinite-dimensional quivers are detected", "[quiver]") {
  QuiverPresentation p;
  p.vertices = {"1"};
  p.arrows = {{"a", "1", "1", 0}};
  CHECK_FALSE(is_finite_dimensional(validate(p)));
  try {
    enumerate_paths(validate(p));
    FAIL("expected an error");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == ErrorCode::InfiniteDimensional);
  }
  p.relations = {{"a", "a"}};
  CHECK(is_finite_dimensional(validate(p)));
  CHECK(enumerate_paths(validate(p)).dimension() == 2);
}

TEST_CASE("Cartan matrix counts paths by endpoint pair", "[quiver]") {
  CartanMatrix c = cartan_matrix(build_B(2, 1));
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0][0] == 1);
  CHECK(c.entries[0][1] == 1);
  CHECK(c.entries[1][0] == 2);
  CHECK(c.entries[1][1] == 3);
  CHECK(c.sum() == 7);
  // the counting overload agrees with explicit enumeration
  CHECK(cartan_matrix(enumerate_paths(build_B(2, 1))) == c);
}

TEST_CASE("counting Cartan works where enumeration would explode",
          "[quiver]") {
  // large multiplicities: path count grows multiplicatively but the DP stays
  // polynomial
  IntSeq xs{50, 50, 50, 50};
  IntSeq ys{50, 50, 50, 50};
  CartanMatrix dp = cartan_matrix(build_An(8, xs, ys));
  CartanMatrix closed = an_cartan_formula(8, xs, ys);
  CHECK(dp == closed);
}

TEST_CASE("quadratic dual is an involution on the presentation", "[quiver]") {
  for (const auto& pres :
       {build_B(2, 1), build_B(0, 3), build_An(3, {1, 2}, {1}),
        build_Lambda({-1, 0, 2})}) {
    QuiverPresentation dd = quadratic_dual(quadratic_dual(pres));
    CHECK(dd == pres);
  }
}

TEST_CASE("dual top degree tracks the family index", "[quiver]") {
  CHECK(top_dual_degree(build_B(2, 1)) == 2);
  CHECK(top_dual_degree(build_An(3, {1, 1}, {1})) == 3);
  CHECK(top_dual_degree(build_An(5, {1, 2, 1}, {2, 1})) == 5);
  // a loop with square zero has duals in every degree
  QuiverPresentation p;
  p.vertices = {"1"};
  p.arrows = {{"a", "1", "1", 0}};
  p.relations = {{"a", "a"}};
  CHECK_FALSE(top_dual_degree(validate(p)).has_value());
}

TEST_CASE("dual degree components have the predicted sizes", "[quiver]") {
  // dual of the two-forward one-backward algebra keeps only the relation
  // complements: degree 2 holds the cycles through both vertices
  QuiverPresentation pres = build_B(2, 1);
  CHECK(dual_degree_component(pres, 0).size() == 2);
  CHECK(dual_degree_component(pres, 1).size() == 3);
  CHECK(dual_degree_component(pres, 2).size() == 2);
  CHECK(dual_degree_component(pres, 3).empty());
}
