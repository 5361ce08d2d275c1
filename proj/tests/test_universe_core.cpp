#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "epr/complex.hpp"
#include "epr/error.hpp"
#include "epr/json_io.hpp"

using namespace epr;

namespace {

bool fails_with(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("make_complex validates and canonicalizes") {
  EprComplex path = make_complex(3, {2, 0, 1}, {{1, 2}, {1, 0}});
  CHECK(path.objects == std::vector<ObjectId>{0, 1, 2});
  CHECK(path.edges == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(path == path_complex(3));

  EprComplex single = make_complex(1, {0}, {});
  CHECK(single.object_count() == 1);
  CHECK(single.edge_count() == 0);

  CHECK(fails_with(ErrorCode::SelfLoop,
                   [] { make_complex(2, {0, 1}, {{0, 0}}); }));
  CHECK(fails_with(ErrorCode::DuplicateEdge,
                   [] { make_complex(2, {0, 1}, {{0, 1}, {1, 0}}); }));
  CHECK(fails_with(ErrorCode::EndpointOutsideObjects,
                   [] { make_complex(3, {0, 1}, {{0, 2}}); }));
  CHECK(fails_with(ErrorCode::ObjectOutsidePhi,
                   [] { make_complex(2, {0, 2}, {}); }));
  CHECK(fails_with(ErrorCode::InvalidArgument,
                   [] { make_complex(-1, {}, {}); }));
}

TEST_CASE("leq is the induced-subgraph order") {
  // E = edge {0,1} inside the triangle on {0,1,2}.
  EprComplex triangle = make_complex(3, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  EprComplex edge01 = make_complex(3, {0, 1}, {{0, 1}});
  EprComplex bare01 = make_complex(3, {0, 1}, {});
  CHECK(leq(edge01, triangle));
  CHECK_FALSE(leq(bare01, triangle));  // triangle induces the edge
  CHECK(leq(triangle, triangle));
  CHECK_FALSE(leq(triangle, edge01));

  CHECK(fails_with(ErrorCode::PhiMismatch, [&] {
    leq(edge01, make_complex(4, {0, 1}, {{0, 1}}));
  }));
}

TEST_CASE("aspects and the extension count") {
  CHECK(is_aspect(complete_complex(4)));
  CHECK(is_aspect(edgeless_complex(4)));
  CHECK_FALSE(is_aspect(make_complex(4, {0, 1, 2}, {})));

  // N=4, triangle on three objects: 2^(6-3) aspects extend it.
  EprComplex triangle = make_complex(4, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  AspectExtension ext = aspects_extending(triangle);
  CHECK(ext.count == 8);
  CHECK(ext.enumerated);
  REQUIRE(ext.aspects.size() == 8);
  std::set<std::vector<Edge>> distinct;
  for (const auto& aspect : ext.aspects) {
    distinct.insert(aspect.edges);
    CHECK(is_aspect(aspect));
    CHECK(leq(triangle, aspect));
  }
  CHECK(distinct.size() == 8);

  // An aspect extends only itself.
  AspectExtension self = aspects_extending(complete_complex(4));
  CHECK(self.count == 1);
  REQUIRE(self.aspects.size() == 1);
  CHECK(self.aspects[0] == complete_complex(4));

  // Single object in N=4: 64 aspects.
  AspectExtension lone = aspects_extending(make_complex(4, {0}, {}));
  CHECK(lone.count == 64);
  CHECK(lone.aspects.size() == 64);

  // Over the limit: count survives, enumeration does not.
  AspectExtension big = aspects_extending(make_complex(12, {0}, {}), 20, true);
  CHECK(big.count == BigInt(1) << 66);
  CHECK(big.free_pairs == 66);
  CHECK_FALSE(big.enumerated);
  CHECK(big.aspects.empty());
  CHECK(fails_with(ErrorCode::EnumerationTooLarge, [] {
    aspects_extending(make_complex(12, {0}, {}), 20, true, true);
  }));
}

TEST_CASE("join inside an aspect") {
  EprComplex triangle = make_complex(3, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  EprComplex a = make_complex(3, {0}, {});
  EprComplex b = make_complex(3, {1}, {});
  CHECK(join_in_aspect(triangle, {a, b}) == make_complex(3, {0, 1}, {{0, 1}}));

  EprComplex path = path_complex(3);  // 0-1-2
  EprComplex c = make_complex(3, {2}, {});
  CHECK(join_in_aspect(path, {a, c}) == make_complex(3, {0, 2}, {}));

  EprComplex edge = make_complex(3, {0, 1}, {{0, 1}});
  CHECK(join_in_aspect(triangle, {edge}) == edge);

  CHECK(fails_with(ErrorCode::PartNotBelowAspect, [&] {
    join_in_aspect(triangle, {make_complex(3, {0, 1}, {})});
  }));
  CHECK(fails_with(ErrorCode::NotAnAspect, [&] {
    join_in_aspect(make_complex(3, {0, 1}, {{0, 1}}), {a});
  }));
}

TEST_CASE("meet returns all maximal lower bounds") {
  // E below A: E is its own meet.
  EprComplex triangle = make_complex(4, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  LowerBoundSet easy = meet(triangle, complete_complex(4));
  CHECK(easy.unique);
  REQUIRE(easy.bounds.size() == 1);
  CHECK(easy.bounds[0] == triangle);

  // Edge vs edgeless aspect: two maximal bounds, selected is {0}.
  EprComplex edge = make_complex(3, {0, 1}, {{0, 1}});
  LowerBoundSet split = meet(edge, edgeless_complex(3));
  CHECK_FALSE(split.unique);
  REQUIRE(split.bounds.size() == 2);
  CHECK(split.bounds[split.selected] == make_complex(3, {0}, {}));
  CHECK(split.bounds[1] == make_complex(3, {1}, {}));
}

TEST_CASE("graph distance by breadth-first search") {
  EprComplex c6 = cycle_complex(6);
  CHECK(graph_distance(c6, 0, 0) == 0);
  CHECK(graph_distance(c6, 0, 3) == 3);
  CHECK(graph_distance(c6, 1, 5) == 2);

  EprComplex two_parts = make_complex(4, {0, 1, 2, 3}, {{0, 1}, {2, 3}});
  CHECK_FALSE(graph_distance(two_parts, 0, 3).has_value());
  CHECK(fails_with(ErrorCode::ObjectNotInComplex, [&] {
    graph_distance(make_complex(4, {0, 1}, {}), 0, 3);
  }));

  CHECK(is_connected(c6));
  CHECK_FALSE(is_connected(two_parts));
  CHECK(is_connected(make_complex(2, {0}, {})));
}

TEST_CASE("named builders") {
  CHECK(cycle_complex(4).edges ==
        std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(complete_complex(3).edge_count() == 3);
  CHECK(path_complex(5).edge_count() == 4);
  CHECK(star_complex(5).edges ==
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(edgeless_complex(3).edge_count() == 0);
  CHECK(fails_with(ErrorCode::InvalidArgument, [] { cycle_complex(2); }));

  EprComplex g1 = gnp_complex(10, 0.5, 7);
  EprComplex g2 = gnp_complex(10, 0.5, 7);
  CHECK(g1 == g2);
  CHECK(gnp_complex(10, 0.0, 7).edge_count() == 0);
  CHECK(gnp_complex(10, 1.0, 7).edge_count() == 45);
  CHECK(fails_with(ErrorCode::InvalidArgument,
                   [] { gnp_complex(5, 1.5, 0); }));
}

TEST_CASE("universe enumeration sizes") {
  CHECK(enumerate_universe(0).size() == 1);  // the empty complex
  CHECK(enumerate_universe(1).size() == 2);
  CHECK(enumerate_universe(2).size() == 5);
  CHECK(enumerate_universe(3).size() == 18);
  CHECK(enumerate_universe(4).size() == 113);
  CHECK(enumerate_universe(5).size() == 1450);
  CHECK(fails_with(ErrorCode::UniverseTooLarge, [] { enumerate_universe(7); }));
}

TEST_CASE("partial-order laws at N=3") {
  auto universe = enumerate_universe(3);
  for (const auto& e : universe) CHECK(leq(e, e));
  for (const auto& e : universe) {
    for (const auto& f : universe) {
      if (leq(e, f) && leq(f, e)) CHECK(e == f);
      for (const auto& g : universe) {
        if (leq(e, f) && leq(f, g)) CHECK(leq(e, g));
      }
    }
  }
}

TEST_CASE("JSON round trip and canonical text") {
  EprComplex c = make_complex(5, {0, 2, 3}, {{0, 2}, {2, 3}});
  nlohmann::json j = complex_to_json(c);
  CHECK(complex_from_json(j) == c);
  CHECK(dump_canonical(j) ==
        "{\n  \"edges\": [\n    [\n      0,\n      2\n    ],\n    [\n      2,"
        "\n      3\n    ]\n  ],\n  \"n_phi\": 5,\n  \"objects\": [\n    0,\n  "
        "  2,\n    3\n  ]\n}\n");

  CHECK(fails_with(ErrorCode::ParseError,
                   [] { complex_from_json(nlohmann::json::array()); }));
  CHECK(fails_with(ErrorCode::ParseError, [] {
    complex_from_json(nlohmann::json{{"n_phi", 2}, {"objects", {0}}});
  }));
  CHECK(fails_with(ErrorCode::ParseError, [] { parse_json_text("{nope"); }));
}
