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

#include "spheretile/type5.hpp"
#include "support.hpp"

using namespace spheretile;

namespace {

Eigen::Vector3d edges_of(double beta, double gamma) {
  const SphericalPentagon p = solve_pentagon_type5(Type5Params{beta, gamma});
  // edge word (a, a, c, b, b)
  return Eigen::Vector3d(p.edges.length[0], p.edges.length[3],
                         p.edges.length[2]);
}

}  // namespace

TEST_CASE("regular parameters give the regular tile") {
  const double reg = 2 * kPi / 3;
  const Eigen::Vector3d e = edges_of(reg, reg);
  const double a0 = testing::regular_edge_oracle();
  CHECK(std::abs(e(0) - a0) < 1e-9);
  CHECK(std::abs(e(1) - a0) < 1e-9);
  CHECK(std::abs(e(2) - a0) < 1e-9);
}

TEST_CASE("equal parameters force a = b (pyritohedral line)") {
  const Eigen::Vector3d e = edges_of(2.0, 2.0);
  CHECK(std::abs(e(0) - e(1)) < 1e-9);
  CHECK(std::abs(e(0) - e(2)) > 1e-3);  // genuinely off the regular point
}

TEST_CASE("swapping beta and gamma swaps a and b") {
  const Eigen::Vector3d e1 = edges_of(2.0, 2.15);
  const Eigen::Vector3d e2 = edges_of(2.15, 2.0);
  CHECK(std::abs(e1(0) - e2(1)) < 1e-9);
  CHECK(std::abs(e1(1) - e2(0)) < 1e-9);
  CHECK(std::abs(e1(2) - e2(2)) < 1e-9);
}

TEST_CASE("tile interior angles reproduce the requested word") {
  const Type5Params p{2.05, 1.98};
  const SphericalPentagon tile = solve_pentagon_type5(p);
  // angle word (delta, alpha, beta, gamma, alpha)
  CHECK(std::abs(tile.measured_angle(0) - p.delta()) < 1e-8);
  CHECK(std::abs(tile.measured_angle(1) - p.alpha()) < 1e-8);
  CHECK(std::abs(tile.measured_angle(2) - p.beta) < 1e-8);
  CHECK(std::abs(tile.measured_angle(3) - p.gamma) < 1e-8);
  CHECK(std::abs(tile.measured_angle(4) - p.alpha()) < 1e-8);
}

TEST_CASE("far-out parameters throw a descriptive error") {
  CHECK_THROWS_AS(solve_pentagon_type5(Type5Params{2.8, 2.8}), Type5Error);
}

TEST_CASE("assembled regular tiling: axes, generators, coverage") {
  const double reg = 2 * kPi / 3;
  const Type5Tiling t = assemble(solve_pentagon_type5(Type5Params{reg, reg}));
  REQUIRE(t.dotted_axes.size() == 8);
  // Four antipodal pairs.
  for (const Vec3& ax : t.dotted_axes) {
    bool has_antipode = false;
    for (const Vec3& other : t.dotted_axes)
      if ((ax + other).norm() < 1e-7) has_antipode = true;
    CHECK(has_antipode);
  }
  const auto group = symmetry_group(t);
  for (const Isometry& g : t.generators) {
    bool found = false;
    for (const Isometry& h : group)
      if (g.distance(h) < 1e-7) found = true;
    CHECK(found);
  }
}

TEST_CASE("symmetry classes along the family") {
  const double reg = 2 * kPi / 3;

  const Type5Tiling regular =
      assemble(solve_pentagon_type5(Type5Params{reg, reg}));
  CHECK(classify_symmetry(regular) == SymmetryClass::Ih);
  const auto g_reg = symmetry_group(regular);
  CHECK(g_reg.size() == 120);
  int improper = 0;
  for (const Isometry& g : g_reg)
    if (!g.proper()) ++improper;
  CHECK(improper == 60);

  const Type5Tiling pyrito =
      assemble(solve_pentagon_type5(Type5Params{2.0, 2.0}));
  CHECK(std::abs(pyrito.a - pyrito.b) < 1e-9);
  CHECK(classify_symmetry(pyrito) == SymmetryClass::Th);
  const auto g_th = symmetry_group(pyrito);
  CHECK(g_th.size() == 24);
  improper = 0;
  for (const Isometry& g : g_th)
    if (!g.proper()) ++improper;
  CHECK(improper == 12);

  const Type5Tiling generic =
      assemble(solve_pentagon_type5(Type5Params{2.0, 2.15}));
  CHECK(classify_symmetry(generic) == SymmetryClass::T);
  CHECK(symmetry_group(generic).size() == 12);
}

TEST_CASE("a = c != b also yields the chiral class T") {
  // At beta = 2.0 the difference a - c changes sign between gamma = 2.1
  // and gamma = 2.2; locate the crossing and classify there.
  const double beta = 2.0;
  const double gamma = bisect_1d(
      [&](double g) {
        const Eigen::Vector3d e = edges_of(beta, g);
        return e(0) - e(2);
      },
      2.1, 2.2, 1e-12);
  const Type5Tiling t =
      assemble(solve_pentagon_type5(Type5Params{beta, gamma}));
  CHECK(std::abs(t.a - t.c) < 1e-9);
  CHECK(std::abs(t.a - t.b) > 1e-3);
  CHECK(classify_symmetry(t) == SymmetryClass::T);
  CHECK(symmetry_group(t).size() == 12);
}

TEST_CASE("all built tilings are isohedral") {
  const double reg = 2 * kPi / 3;
  for (auto [b, g] : {std::pair{reg, reg}, {2.0, 2.0}, {2.0, 2.15}}) {
    const Type5Tiling t = assemble(solve_pentagon_type5(Type5Params{b, g}));
    CHECK(is_isohedral(t));
  }
}

TEST_CASE("tile areas sum to the whole sphere") {
  const Type5Tiling t = assemble(solve_pentagon_type5(Type5Params{2.0, 2.1}));
  double total = 0;
  for (const SphericalPentagon& tile : t.tiles) {
    const double ar = area(tile);
    CHECK(std::abs(ar - kPi / 3) < 1e-9);
    total += ar;
  }
  CHECK(std::abs(total - 4 * kPi) < 1e-8);
}
