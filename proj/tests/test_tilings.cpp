// Copyright 2026 The spheretile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "spheretile/tilings.hpp"
#include "support.hpp"

using namespace spheretile;

namespace {

// Regular-dodecahedron realization of any fixture type: all angles 2 pi / 3,
// all edge classes the regular length.
std::array<SphericalPentagon, 12> regular_realization(
    const CombinatorialTiling& ct) {
  const double a0 = testing::regular_edge_oracle();
  EdgeWord e{};
  e.length.fill(a0);
  for (int j = 0; j < 5; ++j) e.tag[j] = ct.tiles()[0].edge[j];
  AngleWord a{};
  a.angle.fill(2 * kPi / 3);
  const auto seed = realize_pentagon(e, a);
  REQUIRE(seed.has_value());
  return propagate_tiles(ct, *seed);
}

int count_vertices_with_cycle(const CombinatorialTiling& ct,
                              const std::array<int, 5>& counts) {
  int n = 0;
  for (const auto& cyc : ct.vertex_cycles()) {
    std::array<int, 5> c{};
    for (const CornerSlot& u : cyc)
      c[static_cast<int>(ct.tiles()[u.tile].corner[u.slot])]++;
    if (c == counts) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("all five builtin fixtures pass the structural invariants") {
  for (int t = 1; t <= 5; ++t) {
    const CombinatorialTiling ct = builtin(t);
    CHECK(ct.num_vertices() == 20);
    CHECK(ct.num_edges() == 30);
    CHECK(ct.num_vertices() - ct.num_edges() + 12 == 2);  // Euler
    for (const auto& cyc : ct.vertex_cycles()) CHECK(cyc.size() == 3);
  }
  CHECK_THROWS_AS(builtin(0), std::invalid_argument);
  CHECK_THROWS_AS(builtin(6), std::invalid_argument);
}

TEST_CASE("a corrupted fixture fails loudly") {
  std::string bad = fixture::kType2;
  // Break one corner label: the boundary words stop being congruent.
  bad.replace(bad.find("epsilon delta gamma beta alpha"),
              std::string("epsilon delta gamma beta alpha").size(),
              "epsilon delta gamma alpha beta");
  CHECK_THROWS_AS(CombinatorialTiling::parse(2, bad), std::logic_error);
}

TEST_CASE("special vertex counts per type") {
  // Types 2 and 3 have exactly two triple-alpha vertices; type 5 has eight.
  const std::array<int, 5> aaa{3, 0, 0, 0, 0};
  CHECK(count_vertices_with_cycle(builtin(2), aaa) == 2);
  CHECK(count_vertices_with_cycle(builtin(3), aaa) == 2);
  CHECK(count_vertices_with_cycle(builtin(5), aaa) == 8);
}

TEST_CASE("vertex angle relations: type 5") {
  const auto rels = vertex_angle_relations(builtin(5));
  REQUIRE(rels.size() == 3);  // two vertex classes plus the excess equation
  auto has = [&](std::array<int, 5> c, double rhs) {
    for (const auto& r : rels)
      if (r.coeff == c && std::abs(r.rhs - rhs) < 1e-12) return true;
    return false;
  };
  CHECK(has({3, 0, 0, 0, 0}, 2 * kPi));           // triple alpha
  CHECK(has({0, 1, 1, 1, 0}, 2 * kPi));           // beta + gamma + delta
  CHECK(has({2, 1, 1, 1, 0}, 3 * kPi + kPi / 3));  // tile excess
}

TEST_CASE("vertex angle relations: types 2 and 4 contain the expected "
          "equations") {
  auto has = [](const std::vector<LinearRelation>& rels, std::array<int, 5> c) {
    for (const auto& r : rels)
      if (r.coeff == c && std::abs(r.rhs - 2 * kPi) < 1e-12) return true;
    return false;
  };
  const auto r2 = vertex_angle_relations(builtin(2));
  CHECK(has(r2, {3, 0, 0, 0, 0}));  // 3 alpha = 2 pi
  CHECK(has(r2, {1, 1, 1, 0, 0}));  // alpha + beta + gamma
  CHECK(has(r2, {0, 1, 0, 0, 2}));  // beta + 2 epsilon
  CHECK(has(r2, {0, 0, 1, 2, 0}));  // gamma + 2 delta
  const auto r4 = vertex_angle_relations(builtin(4));
  CHECK(has(r4, {3, 0, 0, 0, 0}));
  CHECK(has(r4, {1, 1, 1, 0, 0}));
  CHECK(has(r4, {0, 1, 0, 0, 2}));
  CHECK(has(r4, {0, 0, 1, 2, 0}));
}

TEST_CASE("the all-regular assignment satisfies every relation of every "
          "type") {
  const std::array<double, 5> regular{2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3,
                                      2 * kPi / 3, 2 * kPi / 3};
  for (int t = 1; t <= 5; ++t)
    for (const LinearRelation& r : vertex_angle_relations(builtin(t)))
      CHECK(r.satisfied_by(regular));
}

TEST_CASE("regular realization validates for every type") {
  for (int t = 1; t <= 5; ++t) {
    const CombinatorialTiling ct = builtin(t);
    const auto tiles = regular_realization(ct);
    const ValidationReport rep = validate_realization(ct, tiles);
    INFO("type " << t << "\n" << rep.to_text());
    CHECK(rep.valid());
    CHECK(rep.max_vertex_angle_residual < 1e-9);
    CHECK(rep.max_edge_mismatch < 1e-9);
    CHECK(rep.max_congruence_deviation < 1e-9);
    CHECK(rep.total_area_deviation < 1e-9);
  }
}

TEST_CASE("validation is invariant under a global isometry") {
  const CombinatorialTiling ct = builtin(5);
  auto tiles = regular_realization(ct);
  const ValidationReport before = validate_realization(ct, tiles);
  const Isometry g = rotation_about_axis(UnitVector(0.1, 0.7, -0.7), 0.8321);
  for (auto& t : tiles)
    for (Vec3& v : t.vertices) v = g(v);
  const ValidationReport after = validate_realization(ct, tiles);
  CHECK(std::abs(after.max_vertex_angle_residual -
                 before.max_vertex_angle_residual) < 1e-12);
  CHECK(std::abs(after.max_edge_mismatch - before.max_edge_mismatch) < 1e-12);
  CHECK(std::abs(after.max_congruence_deviation -
                 before.max_congruence_deviation) < 1e-10);
}

TEST_CASE("an injected defect is caught") {
  const CombinatorialTiling ct = builtin(1);
  auto tiles = regular_realization(ct);
  // Rotate one tile about its own center by 0.01 rad.
  Vec3 center = Vec3::Zero();
  for (const Vec3& v : tiles[7].vertices) center += v;
  const Isometry g = rotation_about_axis(UnitVector(center), 0.01);
  for (Vec3& v : tiles[7].vertices) v = g(v);
  const ValidationReport rep = validate_realization(ct, tiles);
  CHECK(!rep.valid());
  CHECK(rep.max_vertex_coincidence > 1e-3);
}

TEST_CASE("glued edges carry matching labels in every fixture") {
  for (int t = 1; t <= 5; ++t) {
    const CombinatorialTiling ct = builtin(t);
    for (const Gluing& g : ct.gluings())
      CHECK(ct.tiles()[g.tile_a].edge[g.slot_a] ==
            ct.tiles()[g.tile_b].edge[g.slot_b]);
  }
}

TEST_CASE("edge label census per type") {
  auto census = [](const CombinatorialTiling& ct) {
    std::array<int, 3> n{};
    for (const Gluing& g : ct.gluings())
      n[static_cast<int>(ct.tiles()[g.tile_a].edge[g.slot_a])]++;
    return n;
  };
  CHECK(census(builtin(1)) == std::array<int, 3>{30, 0, 0});
  CHECK(census(builtin(2)) == std::array<int, 3>{24, 6, 0});
  CHECK(census(builtin(3)) == std::array<int, 3>{24, 6, 0});
  CHECK(census(builtin(4)) == std::array<int, 3>{24, 6, 0});
  CHECK(census(builtin(5)) == std::array<int, 3>{12, 12, 6});
}
