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

#ifndef SPHERETILE_PENTAGON_HPP
#define SPHERETILE_PENTAGON_HPP

#include <array>
#include <optional>

#include "spheretile/geom.hpp"

namespace spheretile {

// Length class of a pentagon edge within a tiling.
enum class EdgeTag { A, B, C, Free };

inline const char* to_string(EdgeTag t) {
  switch (t) {
    case EdgeTag::A: return "a";
    case EdgeTag::B: return "b";
    case EdgeTag::C: return "c";
    default: return "free";
  }
}

// Five interior angles in cyclic order, radians, each in (0, 2pi).
struct AngleWord {
  std::array<double, 5> angle;

  double sum() const {
    double s = 0;
    for (double a : angle) s += a;
    return s;
  }
};

// Five arc lengths in cyclic order; edge i joins vertices i and i+1.
struct EdgeWord {
  std::array<double, 5> length;
  std::array<EdgeTag, 5> tag{EdgeTag::Free, EdgeTag::Free, EdgeTag::Free,
                             EdgeTag::Free, EdgeTag::Free};
};

// Interior angle at v between the edges toward prev and next, for a polygon
// listed counterclockwise (interior on the left, viewed from outside the
// sphere). Handles reflex angles; result in [0, 2pi).
inline double interior_angle(const Vec3& prev, const Vec3& v,
                             const Vec3& next) {
  Vec3 tin = prev - prev.dot(v) * v;
  Vec3 tout = next - next.dot(v) * v;
  const double nin = tin.norm(), nout = tout.norm();
  if (nin < 1e-14 || nout < 1e-14)
    throw std::invalid_argument("degenerate corner: coincident vertices");
  tin /= nin;
  tout /= nout;
  double a = std::atan2(tout.cross(tin).dot(v), tout.dot(tin));
  if (a < 0) a += 2 * kPi;
  return a;
}

struct WalkResult {
  std::array<Vec3, 5> vertices;
  double closure_residual;
};

// Realize the boundary word as a walk from the canonical frame: alternate a
// geodesic advance by edge i with a left turn by the exterior angle
// pi - angle[i+1]. The residual compares the final frame (after the full
// cycle of turns) with the initial one; < 1e-9 means a closed pentagon.
inline WalkResult walk_polygon(const EdgeWord& edges, const AngleWord& angles) {
  Frame f = Frame::canonical();
  const Vec3 p0 = f.position(), t0 = f.heading();
  WalkResult r;
  r.vertices[0] = p0;
  for (int i = 0; i < 5; ++i) {
    f.advance(edges.length[i]);
    if (i < 4) r.vertices[i + 1] = f.position();
    f.turn_left(kPi - angles.angle[(i + 1) % 5]);
  }
  r.closure_residual =
      (f.position() - p0).norm() + (f.heading() - t0).norm();
  return r;
}

// Does the closed great-circle arc PQ intersect arc RS? Arcs are assumed
// shorter than pi. Tangential touching counts as intersection.
inline bool arcs_intersect(const Vec3& p, const Vec3& q, const Vec3& r,
                           const Vec3& s, double tol = 1e-12) {
  const Vec3 n1 = p.cross(q), n2 = r.cross(s);
  const Vec3 line = n1.cross(n2);
  const double nl = line.norm();
  auto within = [tol](const Vec3& a, const Vec3& b, const Vec3& x,
                      const Vec3& n) {
    return a.cross(x).dot(n) >= -tol && x.cross(b).dot(n) >= -tol;
  };
  if (nl < 1e-14) {
    // Same great circle: overlapping iff an endpoint of one lies on the other.
    return within(p, q, r, n1) || within(p, q, s, n1) ||
           within(r, s, p, n2) || within(r, s, q, n2);
  }
  const Vec3 x = line / nl;
  return (within(p, q, x, n1) && within(r, s, x, n2)) ||
         (within(p, q, -x, n1) && within(r, s, -x, n2));
}

// True iff no pair of non-adjacent edges intersects and adjacent edges meet
// only at their shared vertex.
inline bool is_simple(const std::array<Vec3, 5>& v, double tol = 1e-12) {
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const int gap = (j - i) % 5;
      const Vec3 &a = v[i], &b = v[(i + 1) % 5];
      const Vec3 &c = v[j], &d = v[(j + 1) % 5];
      if (gap == 1 || gap == 4) {
        // Adjacent arcs share one endpoint; any second meeting point makes
        // the boundary non-simple. Shrink both arcs away from the shared
        // vertex and retest.
        const Vec3& shared = (gap == 1) ? b : a;
        auto shrink = [&](const Vec3& from, const Vec3& to) {
          return (from + 1e-7 * (to - from)).normalized();
        };
        Vec3 a2 = a, b2 = b, c2 = c, d2 = d;
        if (gap == 1) {
          b2 = shrink(b, a);
          c2 = shrink(c, d);
        } else {
          a2 = shrink(a, b);
          d2 = shrink(d, c);
        }
        (void)shared;
        if (arcs_intersect(a2, b2, c2, d2, tol)) return false;
      } else {
        if (arcs_intersect(a, b, c, d, tol)) return false;
      }
    }
  }
  return true;
}

// A realized spherical pentagon: vertices counterclockwise (interior on the
// left) together with its angle and edge words.
struct SphericalPentagon {
  std::array<Vec3, 5> vertices;
  AngleWord angles;
  EdgeWord edges;

  double measured_angle(int i) const {
    return interior_angle(vertices[(i + 4) % 5], vertices[i],
                          vertices[(i + 1) % 5]);
  }
  double measured_edge(int i) const {
    return geodesic_distance(vertices[i], vertices[(i + 1) % 5]);
  }
};

// Sum of interior angles minus 3 pi (Girard).
inline double area(const SphericalPentagon& p) { return p.angles.sum() - 3 * kPi; }

// Build a pentagon from its words via walk_polygon. Fails (nullopt) when the
// walk does not close or the realized boundary crosses itself.
inline std::optional<SphericalPentagon> realize_pentagon(
    const EdgeWord& edges, const AngleWord& angles, double closure_tol = 1e-9,
    bool require_simple = true) {
  const WalkResult w = walk_polygon(edges, angles);
  if (w.closure_residual > closure_tol) return std::nullopt;
  if (require_simple && !is_simple(w.vertices)) return std::nullopt;
  SphericalPentagon p{w.vertices, angles, edges};
  return p;
}

enum class Lemma3Result { Consistent, Violated };

// Sign law for a pentagon carrying the two-pairs-of-equal-edges hypothesis.
// Word positions follow the constraint figure: angles (alpha, beta, delta,
// epsilon, gamma) in cyclic order, so edge 0 = alpha-beta side, edge 4 =
// alpha-gamma side (equal pair), edge 1 = beta-delta side, edge 3 =
// gamma-epsilon side (equal pair). Used as an exclusion filter, not a proof.
inline Lemma3Result lemma3_sign_check(const SphericalPentagon& p,
                                      double angle_tol = 1e-9) {
  if (std::abs(p.edges.length[0] - p.edges.length[4]) > 1e-9 ||
      std::abs(p.edges.length[1] - p.edges.length[3]) > 1e-9)
    throw std::invalid_argument(
        "lemma3_sign_check: edge-pair hypothesis not satisfied");
  const double beta = p.angles.angle[1], gamma = p.angles.angle[4];
  const double delta = p.angles.angle[2], eps = p.angles.angle[3];
  const double db = beta - gamma, dd = delta - eps;
  if (std::abs(db) <= angle_tol && std::abs(dd) <= angle_tol)
    return Lemma3Result::Consistent;
  if (db > 0 && dd < 0) return Lemma3Result::Consistent;
  if (db < 0 && dd > 0) return Lemma3Result::Consistent;
  return Lemma3Result::Violated;
}

// Exclusion bound on the normal-edge length a of a tile of area pi/3: the
// isosceles triangle with legs a and apex 2pi/3 must fit inside the tile,
// which requires cos a > 1/3.
inline bool realism_bound_check(ArcLength a) {
  return std::cos(a.value()) > 1.0 / 3.0;
}

}  // namespace spheretile

#endif  // SPHERETILE_PENTAGON_HPP
