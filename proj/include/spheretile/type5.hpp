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

#ifndef SPHERETILE_TYPE5_HPP
#define SPHERETILE_TYPE5_HPP

#include <random>

#include "spheretile/solver.hpp"
#include "spheretile/tilings.hpp"

namespace spheretile {

// The two free angles of the deformed-dodecahedron family. The fixture's
// vertex relations fix alpha = 2 pi / 3 and beta + gamma + delta = 2 pi.
struct Type5Params {
  double beta;
  double gamma;

  double alpha() const { return 2 * kPi / 3; }
  double delta() const { return 2 * kPi - beta - gamma; }

  // The per-label assignment (alpha, beta, gamma, delta, epsilon); epsilon
  // is unused by this family and mirrors alpha for uniform label arrays.
  std::array<double, 5> labels() const {
    return {alpha(), beta, gamma, delta(), alpha()};
  }

  bool in_convex_range() const {
    return beta > 0 && beta < kPi && gamma > 0 && gamma < kPi &&
           delta() > 0 && delta() < kPi;
  }
};

struct Type5Error : std::runtime_error {
  double residual;
  explicit Type5Error(const std::string& msg, double res = 0)
      : std::runtime_error(msg), residual(res) {}
};

namespace detail {

// Boundary word of the center tile: angles (delta, alpha, beta, gamma,
// alpha), edges (a, a, c, b, b).
inline AngleWord type5_angle_word(const Type5Params& p) {
  AngleWord w{};
  w.angle = {p.delta(), p.alpha(), p.beta, p.gamma, p.alpha()};
  return w;
}

inline std::optional<Eigen::Vector3d> type5_edges_at(const Type5Params& p,
                                                     Eigen::Vector3d seed) {
  const std::array<int, 5> groups{0, 0, 2, 1, 1};  // unknowns (a, b, c)
  EdgeWord e{};
  const auto res =
      solve_edge_closure(e, type5_angle_word(p), groups, seed, 1e-12);
  if (!res.converged) return std::nullopt;
  return Eigen::Vector3d(res.x(0), res.x(1), res.x(2));
}

}  // namespace detail

// Solve the 3-unknown closure system for the tile of the family, seeded at
// the regular solution and continued in parameter space for robustness.
inline SphericalPentagon solve_pentagon_type5(const Type5Params& params) {
  const double reg = 2 * kPi / 3;
  const double a0 = regular_edge_length();
  Eigen::Vector3d x(a0, a0, a0);

  const double span = std::max(std::abs(params.beta - reg),
                               std::abs(params.gamma - reg));
  const int steps = std::max(1, static_cast<int>(std::ceil(span / 0.05)));
  for (int s = 1; s <= steps; ++s) {
    const double t = static_cast<double>(s) / steps;
    const Type5Params p{reg + t * (params.beta - reg),
                        reg + t * (params.gamma - reg)};
    const auto xs = detail::type5_edges_at(p, x);
    if (!xs)
      throw Type5Error("unrealizable parameters: closure solve diverged at "
                       "continuation step " + std::to_string(s),
                       std::numeric_limits<double>::infinity());
    x = *xs;
  }

  EdgeWord edges{};
  edges.length = {x(0), x(0), x(2), x(1), x(1)};
  edges.tag = {EdgeTag::A, EdgeTag::A, EdgeTag::C, EdgeTag::B, EdgeTag::B};
  const AngleWord angles = detail::type5_angle_word(params);
  const WalkResult w = walk_polygon(edges, angles);
  if (w.closure_residual > 1e-10)
    throw Type5Error("unrealizable parameters: closure residual " +
                     std::to_string(w.closure_residual),
                     w.closure_residual);
  if (!is_simple(w.vertices))
    throw Type5Error("unrealizable parameters: boundary not simple",
                     w.closure_residual);
  return SphericalPentagon{w.vertices, angles, edges};
}

struct Type5Tiling {
  std::array<SphericalPentagon, 12> tiles;
  double a, b, c;
  std::array<Isometry, 2> generators{Isometry::identity(),
                                     Isometry::identity()};
  std::vector<Vec3> dotted_axes;  // 8 unit vectors, 4 antipodal pairs
  std::array<Vec3, 20> global_vertices;
};

namespace detail {

// Grow the group generated by `gens` by closure under composition; matrices
// within `tol` are identified. Caps at max_order to keep failure finite.
inline std::vector<Isometry> generate_group(const std::vector<Isometry>& gens,
                                            double tol = 1e-7,
                                            int max_order = 400) {
  std::vector<Isometry> g{Isometry::identity()};
  auto find = [&](const Isometry& m) {
    for (const Isometry& e : g)
      if (e.distance(m) < tol) return true;
    return false;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < g.size(); ++i) {
      for (const Isometry& gen : gens) {
        const Isometry m = gen * g[i];
        if (!find(m)) {
          g.push_back(m);
          grew = true;
          if (static_cast<int>(g.size()) > max_order)
            throw Type5Error("group closure exceeded cap; tolerance or "
                             "generators inconsistent");
        }
      }
    }
  }
  return g;
}

// Spherical winding test: is p strictly inside the (simple, hemispheric)
// polygon? Sums the signed tangent-plane angles subtended at p.
inline bool point_in_tile(const Vec3& p, const std::array<Vec3, 5>& v) {
  // The winding sum is also +-2 pi at the antipode of an enclosed point;
  // restrict to the hemisphere of the tile (tiles are far smaller than a
  // hemisphere).
  Vec3 center = Vec3::Zero();
  for (const Vec3& q : v) center += q;
  const double cn = center.norm();
  if (cn < 1e-9 || p.dot(center / cn) <= 0) return false;
  double total = 0;
  for (int i = 0; i < 5; ++i) {
    const Vec3& q0 = v[i];
    const Vec3& q1 = v[(i + 1) % 5];
    Vec3 d0 = q0 - q0.dot(p) * p;
    Vec3 d1 = q1 - q1.dot(p) * p;
    const double n0 = d0.norm(), n1 = d1.norm();
    if (n0 < 1e-12 || n1 < 1e-12) return false;  // p is (near) a vertex
    d0 /= n0;
    d1 /= n1;
    total += std::atan2(d0.cross(d1).dot(p), d0.dot(d1));
  }
  return std::abs(total) > kPi;  // |total| = 2 pi inside, 0 outside
}

inline double distance_to_boundary(const Vec3& p,
                                   const std::array<Vec3, 5>& v) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 5; ++i) {
    const Vec3& q0 = v[i];
    const Vec3& q1 = v[(i + 1) % 5];
    Vec3 n = q0.cross(q1);
    const double nn = n.norm();
    if (nn < 1e-14) continue;
    n /= nn;
    // Closest point on the great circle; clamp to the arc by endpoints.
    const Vec3 foot = (p - p.dot(n) * n).normalized();
    const bool within = q0.cross(foot).dot(n) >= 0 && foot.cross(q1).dot(n) >= 0;
    const double d = within
                         ? std::abs(std::asin(clamp_cos(p.dot(n))))
                         : std::min(geodesic_distance(p, q0),
                                    geodesic_distance(p, q1));
    best = std::min(best, d);
  }
  return best;
}

}  // namespace detail

// Build the full 12-tile realization of the solved tile: place tile 1 as
// the center tile of the fixture and propagate every other tile across the
// fixture gluings by walking its boundary word from the shared edge. Then
// verify the realization, the generated rotation group, and coverage.
inline Type5Tiling assemble(const SphericalPentagon& p) {
  const CombinatorialTiling ct = builtin(5);
  Type5Tiling out;
  out.a = p.edges.length[0];
  out.b = p.edges.length[3];
  out.c = p.edges.length[2];

  out.tiles = propagate_tiles(ct, p);

  // Consensus global vertex positions.
  for (int v = 0; v < 20; ++v) {
    Vec3 s = Vec3::Zero();
    for (const CornerSlot& u : ct.vertex_cycles()[v])
      s += out.tiles[u.tile].vertices[u.slot];
    out.global_vertices[v] = s.normalized();
  }

  const ValidationReport rep = validate_realization(ct, out.tiles);
  if (!rep.valid())
    throw Type5Error("assembled tiling failed validation:\n" + rep.to_text(),
                     rep.max_vertex_coincidence);

  // The eight dotted vertices: cycles of three alpha corners.
  for (int v = 0; v < 20; ++v) {
    bool all_alpha = true;
    for (const CornerSlot& u : ct.vertex_cycles()[v])
      if (ct.tiles()[u.tile].corner[u.slot] != AngleLabel::Alpha)
        all_alpha = false;
    if (all_alpha) out.dotted_axes.push_back(out.global_vertices[v]);
  }
  if (out.dotted_axes.size() != 8)
    throw Type5Error("expected 8 dotted vertices, found " +
                     std::to_string(out.dotted_axes.size()));

  // Order-3 rotations about the two alpha corners of the center tile
  // (slots 1 and 4) generate a rotation group of order 12 whose orbit of
  // tile 1 is the whole tiling.
  out.generators = {rotation_about_axis(UnitVector(p.vertices[1]), 2 * kPi / 3),
                    rotation_about_axis(UnitVector(p.vertices[4]), 2 * kPi / 3)};
  const std::vector<Isometry> group =
      detail::generate_group({out.generators[0], out.generators[1]});
  if (group.size() != 12)
    throw Type5Error("generated rotation group has order " +
                     std::to_string(group.size()) + ", expected 12");
  for (const Isometry& g : group) {
    bool hit = false;
    for (int t = 0; t < 12 && !hit; ++t) {
      double worst = 0;
      for (int j = 0; j < 5; ++j) {
        double best = std::numeric_limits<double>::infinity();
        const Vec3 img = g(p.vertices[j]);
        for (int k = 0; k < 5; ++k)
          best = std::min(best, (img - out.tiles[t].vertices[k]).norm());
        worst = std::max(worst, best);
      }
      if (worst < 1e-7) hit = true;
    }
    if (!hit)
      throw Type5Error("a group element maps tile 1 outside the tiling");
  }

  // Coverage: seeded random points each land in exactly one tile interior
  // (or on a boundary).
  std::mt19937_64 rng(20260824);
  std::normal_distribution<double> nd;
  for (int s = 0; s < 10000; ++s) {
    Vec3 q(nd(rng), nd(rng), nd(rng));
    if (q.norm() < 1e-6) continue;
    q.normalize();
    int count = 0;
    for (int t = 0; t < 12; ++t)
      if (detail::point_in_tile(q, out.tiles[t].vertices)) ++count;
    if (count == 1) continue;
    double near = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 12; ++t)
      near = std::min(near, detail::distance_to_boundary(q, out.tiles[t].vertices));
    if (near > 1e-9)
      throw Type5Error("coverage failure: sample in " + std::to_string(count) +
                       " tiles away from any boundary");
  }
  return out;
}

// All isometries of the sphere mapping the tiling to itself: candidates are
// the best alignments of tile 1 onto each tile under each of the 10
// boundary correspondences (including reflections), filtered by requiring
// the global vertex set to map onto itself.
inline std::vector<Isometry> symmetry_group(const Type5Tiling& t,
                                            double tol = 1e-7) {
  std::vector<Isometry> found;
  auto maps_vertices = [&](const Isometry& g) {
    for (const Vec3& v : t.global_vertices) {
      const Vec3 img = g(v);
      double best = std::numeric_limits<double>::infinity();
      for (const Vec3& w : t.global_vertices)
        best = std::min(best, (img - w).norm());
      if (best >= tol) return false;
    }
    return true;
  };
  auto add = [&](const Isometry& g) {
    for (const Isometry& e : found)
      if (e.distance(g) < tol) return;
    found.push_back(g);
  };

  const auto& base = t.tiles[0].vertices;
  for (int tile = 0; tile < 12; ++tile) {
    for (int s = 0; s < 5; ++s) {
      for (int dir : {+1, -1}) {
        // Kabsch alignment of base onto the target correspondence.
        Mat3 h = Mat3::Zero();
        for (int j = 0; j < 5; ++j)
          h += t.tiles[tile].vertices[(s + dir * j + 10) % 5] *
               base[j].transpose();
        Eigen::JacobiSVD<Mat3> svd(h,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Mat3 r = svd.matrixU() * svd.matrixV().transpose();
        double res = 0;
        for (int j = 0; j < 5; ++j)
          res += (r * base[j] -
                  t.tiles[tile].vertices[(s + dir * j + 10) % 5])
                     .squaredNorm();
        if (std::sqrt(res) >= tol) continue;
        const Isometry g{r};
        if (maps_vertices(g)) add(g);
      }
    }
  }

  // Closure cross-check guards against tolerance-induced spurious elements.
  for (const Isometry& x : found)
    for (const Isometry& y : found) {
      const Isometry z = x * y;
      bool ok = false;
      for (const Isometry& e : found)
        if (e.distance(z) < 10 * tol) ok = true;
      if (!ok)
        throw Type5Error("symmetry candidate set not closed under "
                         "composition; tolerance misconfigured");
    }
  return found;
}

// Does the symmetry group act transitively on the 12 tiles?
inline bool is_isohedral(const Type5Tiling& t,
                         const std::vector<Isometry>& group,
                         double tol = 1e-7) {
  for (int tile = 0; tile < 12; ++tile) {
    bool reached = false;
    for (const Isometry& g : group) {
      double worst = 0;
      for (int j = 0; j < 5; ++j) {
        const Vec3 img = g(t.tiles[0].vertices[j]);
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 5; ++k)
          best = std::min(best, (img - t.tiles[tile].vertices[k]).norm());
        worst = std::max(worst, best);
      }
      if (worst < tol) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

inline bool is_isohedral(const Type5Tiling& t, double tol = 1e-7) {
  return is_isohedral(t, symmetry_group(t, tol), tol);
}

enum class SymmetryClass { T, Th, Ih };

inline const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::T: return "T";
    case SymmetryClass::Th: return "Th";
    default: return "Ih";
  }
}

inline int order_of(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::T: return 12;
    case SymmetryClass::Th: return 24;
    default: return 120;
  }
}

// Classify by edge-length coincidences and cross-check against the detected
// group order (an exact integer).
inline SymmetryClass classify_symmetry(const Type5Tiling& t,
                                       double tol = 1e-9) {
  const bool ab = std::abs(t.a - t.b) < tol;
  const bool bc = std::abs(t.b - t.c) < tol;
  const bool ac = std::abs(t.a - t.c) < tol;
  SymmetryClass cls;
  if (ab && bc && ac)
    cls = SymmetryClass::Ih;
  else if (ab)
    cls = SymmetryClass::Th;
  else
    cls = SymmetryClass::T;
  const int order = static_cast<int>(symmetry_group(t).size());
  if (order != order_of(cls))
    throw Type5Error("edge-length class " + std::string(to_string(cls)) +
                     " disagrees with detected group order " +
                     std::to_string(order));
  return cls;
}

}  // namespace spheretile

#endif  // SPHERETILE_TYPE5_HPP
