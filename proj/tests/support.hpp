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
//
// Shared fixtures and independent oracles for the test and acceptance
// binaries. Oracles intentionally avoid the code paths they are checking.

#ifndef SPHERETILE_TESTS_SUPPORT_HPP
#define SPHERETILE_TESTS_SUPPORT_HPP

#include <optional>
#include <random>

#include "spheretile/pentagon.hpp"

namespace spheretile::testing {

// Edge of the regular pentagon tile via the dodecahedron circumradius chord.
inline double regular_edge_oracle() {
  return 2.0 * std::asin(2.0 / (std::sqrt(3.0) * (1.0 + std::sqrt(5.0))));
}

// Independent second route: the spherical law of cosines for angles applied
// to the equilateral triangle cut off by one vertex figure.
inline double regular_edge_oracle_alt() {
  return std::acos((std::cos(2 * kPi / 5) + 0.25) / 0.75);
}

// Girard area by fan triangulation from vertex 0 (convex pentagons).
inline double fan_area_oracle(const std::array<Vec3, 5>& v) {
  double total = 0;
  for (int i = 1; i < 4; ++i) {
    const Vec3 &a = v[0], &b = v[i], &c = v[i + 1];
    total += interior_angle(c, a, b) + interior_angle(a, b, c) +
             interior_angle(b, c, a) - kPi;
  }
  return total;
}

// Build a pentagon satisfying the paired-edge hypothesis: apex angle alpha
// with two equal legs p, then equal legs q leaving the base vertices at
// angles beta (left) and gamma (right); the fifth edge closes the figure.
// Vertex order (apex, left-base, left-far, right-far, right-base) is
// counterclockwise, so the angle word reads (alpha, beta, ., ., gamma).
inline std::optional<SphericalPentagon> paired_edge_pentagon(double alpha,
                                                            double p,
                                                            double q,
                                                            double beta,
                                                            double gamma) {
  const Vec3 apex(0, 0, 1);
  const Vec3 t0(1, 0, 0);
  const Vec3 u0 = apex.cross(t0);
  auto advance = [](const Vec3& from, const Vec3& dir, double s) {
    return Vec3(from * std::cos(s) + dir * std::sin(s));
  };
  auto head = [&](double phi) {
    return Vec3(t0 * std::cos(phi) + u0 * std::sin(phi));
  };
  const Vec3 vb = advance(apex, head(-alpha / 2), p);  // left base
  const Vec3 vg = advance(apex, head(+alpha / 2), p);  // right base

  auto tangent_toward = [](const Vec3& at, const Vec3& to) {
    Vec3 t = to - to.dot(at) * at;
    const double n = t.norm();
    return n < 1e-14 ? std::optional<Vec3>{} : std::optional<Vec3>{t / n};
  };
  const auto tb = tangent_toward(vb, apex);
  const auto tg = tangent_toward(vg, apex);
  if (!tb || !tg) return std::nullopt;
  const Vec3 ub = vb.cross(*tb);
  const Vec3 ug = vg.cross(*tg);
  const Vec3 vd = advance(vb, *tb * std::cos(beta) - ub * std::sin(beta), q);
  const Vec3 ve = advance(vg, *tg * std::cos(gamma) + ug * std::sin(gamma), q);

  SphericalPentagon pent;
  pent.vertices = {apex, vb, vd, ve, vg};
  for (int i = 0; i < 5; ++i) {
    pent.angles.angle[i] = pent.measured_angle(i);
    pent.edges.length[i] = pent.measured_edge(i);
    pent.edges.tag[i] = EdgeTag::Free;
  }
  const double area = pent.angles.sum() - 3 * kPi;
  if (!(area > 0.02 && area < 2 * kPi)) return std::nullopt;
  for (double a : pent.angles.angle)
    if (!(a > 0.05 && a < kPi - 0.05)) return std::nullopt;
  if (!is_simple(pent.vertices)) return std::nullopt;
  return pent;
}

// Draw admissible parameters for paired_edge_pentagon.
inline std::optional<SphericalPentagon> sample_paired_edge_pentagon(
    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(0.5, 2.6), ul(0.2, 1.1),
      ub(0.6, 2.9);
  return paired_edge_pentagon(ua(rng), ul(rng), ul(rng), ub(rng), ub(rng));
}

}  // namespace spheretile::testing

#endif  // SPHERETILE_TESTS_SUPPORT_HPP
