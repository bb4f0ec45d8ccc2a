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

#ifndef SPHERETILE_SOLVER_HPP
#define SPHERETILE_SOLVER_HPP

#include <functional>
#include <vector>

#include "spheretile/pentagon.hpp"

namespace spheretile {

// Edge length of the regular spherical pentagon of area pi/3 (the
// dodecahedron tile), from the circumradius chord.
inline double regular_edge_length() {
  return 2.0 * std::asin(2.0 / (std::sqrt(3.0) * (1.0 + std::sqrt(5.0))));
}

// Deterministic bisection; requires a sign change on [lo, hi].
inline double bisect_1d(const std::function<double(double)>& f, double lo,
                        double hi, double tol = 1e-12) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::invalid_argument("bisect_1d: no sign change on bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace detail {

// The closing-edge equation on the triple (a, a, a/2), divided through by
// cos(a/2) so the a = pi degeneracy is removable, with target cos x = 0.
inline double half_edge_normalized(double a, double phi, double psi) {
  const double h = 0.5 * a;
  return std::cos(a) * std::cos(a) +
         2.0 * std::sin(h) * (std::sin(a) * std::cos(h) * std::cos(phi) +
                              std::cos(a) * std::sin(h) * std::cos(psi)) +
         2.0 * std::sin(h) * std::sin(h) *
             (std::sin(phi) * std::sin(psi) -
              std::cos(a) * std::cos(phi) * std::cos(psi));
}

// Raw-double form of the closing-edge law, tolerant of small Newton
// overshoots past the [0, pi] range of ArcLength.
inline double quad_fourth_edge_raw(double a, double b, double c, double phi,
                                   double psi) {
  return std::cos(a) * std::cos(b) * std::cos(c) +
         std::sin(b) * (std::sin(a) * std::cos(c) * std::cos(phi) +
                        std::cos(a) * std::sin(c) * std::cos(psi)) +
         std::sin(a) * std::sin(c) *
             (std::sin(phi) * std::sin(psi) -
              std::cos(b) * std::cos(phi) * std::cos(psi));
}

}  // namespace detail

// Residuals of the type-2 system in (a, beta): the half-tile path against
// the quarter arc (normalized), and the mid-latitude path against the pi/3
// arc. Both vanish exactly on the two solution curves.
inline std::pair<double, double> type2_residuals(double a, double beta) {
  const double r1 = detail::half_edge_normalized(a, beta, 4 * kPi / 3);
  const double r2 = detail::quad_fourth_edge_raw(0.5 * a, a, 0.5 * a,
                                                 4 * kPi / 3 - beta, beta) -
                    0.5;
  return {r1, r2};
}

// Residuals of the type-3 system in (a, beta): both paths run over the
// triple (a, a, a/2) with target cos x = 0, normalized by cos(a/2).
inline std::pair<double, double> type3_residuals(double a, double beta) {
  const double r1 =
      detail::half_edge_normalized(a, 4 * kPi / 3 - beta, 2 * kPi / 3 + beta);
  const double r2 = detail::half_edge_normalized(a, beta, 2 * kPi - beta);
  return {r1, r2};
}

enum class RootTag { Regular, ExcludedBoundary, ExcludedUnrealistic,
                     Unclassified };

inline const char* to_string(RootTag t) {
  switch (t) {
    case RootTag::Regular: return "REGULAR";
    case RootTag::ExcludedBoundary: return "EXCLUDED_BOUNDARY";
    case RootTag::ExcludedUnrealistic: return "EXCLUDED_UNREALISTIC";
    default: return "UNCLASSIFIED";
  }
}

// A refined root (a, beta) of a two-residual system.
struct RootBox2D {
  double a;
  double beta;
  double residual_norm;
  double jacobian_condition;
  RootTag tag = RootTag::Unclassified;
};

struct Rectangle2D {
  double a_lo, a_hi, b_lo, b_hi;
};

// Find all roots of F over the rectangle: sign-scan both residuals on a
// grid, seed a damped Newton iteration (finite-difference Jacobian) in every
// cell where both components change sign, deduplicate.
inline std::vector<RootBox2D> solve_2d(
    const std::function<std::pair<double, double>(double, double)>& F,
    const Rectangle2D& dom, int grid_n = 400, double tol = 1e-12) {
  const double da = (dom.a_hi - dom.a_lo) / grid_n;
  const double db = (dom.b_hi - dom.b_lo) / grid_n;

  // Residuals at grid nodes (interior-offset so the open-domain boundary
  // degeneracies are never evaluated exactly).
  std::vector<double> r1((grid_n + 1) * (grid_n + 1));
  std::vector<double> r2(r1.size());
  auto at = [grid_n](int i, int j) { return i * (grid_n + 1) + j; };
  for (int i = 0; i <= grid_n; ++i) {
    const double a = dom.a_lo + i * da;
    for (int j = 0; j <= grid_n; ++j) {
      const double b = dom.b_lo + j * db;
      const auto [v1, v2] = F(a, b);
      r1[at(i, j)] = v1;
      r2[at(i, j)] = v2;
    }
  }

  auto cell_mixed = [&](const std::vector<double>& r, int i, int j) {
    const double v00 = r[at(i, j)], v10 = r[at(i + 1, j)];
    const double v01 = r[at(i, j + 1)], v11 = r[at(i + 1, j + 1)];
    const double mn = std::min({v00, v10, v01, v11});
    const double mx = std::max({v00, v10, v01, v11});
    return mn <= 0.0 && mx >= 0.0;
  };

  auto newton = [&](double a, double b) -> std::optional<RootBox2D> {
    for (int it = 0; it < 50; ++it) {
      const auto [f1, f2] = F(a, b);
      const double fn = std::hypot(f1, f2);
      if (fn < tol) {
        // Condition number of the finite-difference Jacobian at the root.
        const double h = 1e-7;
        Eigen::Matrix2d jac;
        const auto fa = F(a + h, b), fb = F(a, b + h);
        jac << (fa.first - f1) / h, (fb.first - f1) / h,
               (fa.second - f2) / h, (fb.second - f2) / h;
        Eigen::JacobiSVD<Eigen::Matrix2d> svd(jac);
        const double cond = svd.singularValues()(0) /
                            std::max(svd.singularValues()(1), 1e-300);
        return RootBox2D{a, b, fn, cond};
      }
      const double h = 1e-7;
      const auto fa = F(a + h, b), fb = F(a, b + h);
      Eigen::Matrix2d jac;
      jac << (fa.first - f1) / h, (fb.first - f1) / h,
             (fa.second - f2) / h, (fb.second - f2) / h;
      Eigen::Vector2d step = jac.fullPivLu().solve(Eigen::Vector2d(-f1, -f2));
      if (!step.allFinite()) return std::nullopt;
      double scale = 1.0;
      for (int k = 0; k < 30; ++k) {
        const double an = a + scale * step(0), bn = b + scale * step(1);
        const auto [g1, g2] = F(an, bn);
        if (std::hypot(g1, g2) < fn || scale < 1e-6) {
          a = an;
          b = bn;
          break;
        }
        scale *= 0.5;  // damp on overshoot
      }
      if (!(a > dom.a_lo - 0.2 && a < dom.a_hi + 0.2 && b > dom.b_lo - 0.2 &&
            b < dom.b_hi + 0.2))
        return std::nullopt;  // diverged out of the domain
    }
    return std::nullopt;
  };

  std::vector<RootBox2D> roots;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      if (!cell_mixed(r1, i, j) || !cell_mixed(r2, i, j)) continue;
      const double a = dom.a_lo + (i + 0.5) * da;
      const double b = dom.b_lo + (j + 0.5) * db;
      const auto root = newton(a, b);
      if (!root) continue;
      bool dup = false;
      for (const RootBox2D& r : roots)
        if (std::max(std::abs(r.a - root->a), std::abs(r.beta - root->beta)) <
            1e-6)
          dup = true;
      if (!dup) roots.push_back(*root);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootBox2D& x,
                                           const RootBox2D& y) {
    return x.a != y.a ? x.a < y.a : x.beta < y.beta;
  });
  return roots;
}

// Angle assignments implied by the vertex relations of types 2 and 3, with
// beta free and alpha = 2 pi / 3. Both share gamma = 4 pi / 3 - beta; the
// half-angle pair (pi - beta/2, pi/3 + beta/2) sits on (epsilon, delta) for
// type 2 and on (delta, epsilon) for type 3.
inline std::array<double, 5> type2_angles(double beta) {
  const double alpha = 2 * kPi / 3;
  const double gamma = 4 * kPi / 3 - beta;
  const double eps = kPi - 0.5 * beta;
  const double delta = kPi / 3 + 0.5 * beta;
  return {alpha, beta, gamma, delta, eps};  // (alpha..epsilon by label)
}

inline std::array<double, 5> type3_angles(double beta) {
  const double alpha = 2 * kPi / 3;
  const double gamma = 4 * kPi / 3 - beta;
  const double delta = kPi - 0.5 * beta;
  const double eps = kPi / 3 + 0.5 * beta;
  return {alpha, beta, gamma, delta, eps};
}

namespace detail {

// Realize the tile of a type-2/3 root: the boundary word has one thick edge
// b and four normal edges a. Walk the four known edges; the gap closes the
// pentagon and determines b, then the full word must re-close.
inline std::optional<SphericalPentagon> realize_root_tile(int type_id,
                                                          double a,
                                                          double beta) {
  AngleWord angles{};
  EdgeWord edges{};
  int b_slot;
  if (type_id == 2) {
    const auto v = type2_angles(beta);
    // cyclic word (epsilon, delta, gamma, beta, alpha), thick edge first
    angles.angle = {v[4], v[3], v[2], v[1], v[0]};
    b_slot = 0;
  } else {
    const auto v = type3_angles(beta);
    // cyclic word (alpha, beta, delta, epsilon, gamma), thick edge third
    angles.angle = {v[0], v[1], v[3], v[4], v[2]};
    b_slot = 2;
  }
  for (int i = 0; i < 5; ++i) {
    edges.length[i] = a;
    edges.tag[i] = EdgeTag::A;
  }
  edges.tag[b_slot] = EdgeTag::B;

  // Partial walk over the four normal edges starting just past the b slot.
  Frame f = Frame::canonical();
  const Vec3 start = f.position();
  for (int k = 1; k <= 4; ++k) {
    const int slot = (b_slot + k) % 5;
    f.advance(edges.length[slot]);
    if (k < 4) f.turn_left(kPi - angles.angle[(slot + 1) % 5]);
  }
  const double b = geodesic_distance(start, f.position());
  if (!(b > 1e-6 && b < kPi - 1e-6)) return std::nullopt;
  edges.length[b_slot] = b;
  return realize_pentagon(edges, angles, /*closure_tol=*/1e-7,
                          /*require_simple=*/true);
}

}  // namespace detail

// Tag each refined root per the exclusion chain: a boundary beta first, then
// the realism bound (applicable for pi/3 < beta < 4 pi/3 in type 2 and
// unconditionally in type 3), and finally an explicit realization attempt.
inline void classify_roots(int type_id, std::vector<RootBox2D>& roots) {
  const double realism_a = std::acos(1.0 / 3.0);
  for (RootBox2D& r : roots) {
    if (std::abs(r.beta) < 1e-6 || std::abs(r.beta - 4 * kPi / 3) < 1e-6) {
      r.tag = RootTag::ExcludedBoundary;
      continue;
    }
    const bool realism_applies =
        type_id == 3 || (r.beta > kPi / 3 && r.beta < 4 * kPi / 3);
    if (realism_applies && r.a >= realism_a - 1e-6) {
      r.tag = RootTag::ExcludedUnrealistic;
      continue;
    }
    const auto tile = detail::realize_root_tile(type_id, r.a, r.beta);
    r.tag = tile ? RootTag::Regular : RootTag::Unclassified;
  }
}

namespace detail {

// Damped Gauss-Newton on the 6-component frame-closure residual of a
// pentagon boundary word, over a subset of edge lengths.
inline Eigen::VectorXd closure_residual_vec(const EdgeWord& edges,
                                            const AngleWord& angles) {
  Frame f = Frame::canonical();
  const Vec3 p0 = f.position(), t0 = f.heading();
  for (int i = 0; i < 5; ++i) {
    f.advance(edges.length[i]);
    f.turn_left(kPi - angles.angle[(i + 1) % 5]);
  }
  Eigen::VectorXd r(6);
  r << f.position() - p0, f.heading() - t0;
  return r;
}

struct EdgeClosureResult {
  Eigen::VectorXd x;     // best unknowns found
  double residual;       // closure residual norm at x
  bool converged;        // residual below the solve tolerance
};

// Solve for the unknown edge lengths (grouped by the `groups` map: edge slot
// -> unknown index, or -1 for a fixed length) so the word closes. Always
// returns the best point reached; a large terminal residual is evidence the
// constrained word is unrealizable (Gauss-Newton stalled at a nonzero local
// minimum).
inline EdgeClosureResult solve_edge_closure(EdgeWord edges,
                                            const AngleWord& angles,
                                            const std::array<int, 5>& groups,
                                            Eigen::VectorXd x0,
                                            double tol = 1e-11) {
  const int n = static_cast<int>(x0.size());
  auto apply = [&](const Eigen::VectorXd& x) {
    EdgeWord e = edges;
    for (int i = 0; i < 5; ++i)
      if (groups[i] >= 0) e.length[i] = x(groups[i]);
    return e;
  };
  Eigen::VectorXd x = x0;
  double rn = closure_residual_vec(apply(x), angles).norm();
  for (int it = 0; it < 80; ++it) {
    const Eigen::VectorXd r = closure_residual_vec(apply(x), angles);
    rn = r.norm();
    if (rn < tol) return {x, rn, true};
    Eigen::MatrixXd jac(6, n);
    const double h = 1e-7;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd xk = x;
      xk(k) += h;
      jac.col(k) = (closure_residual_vec(apply(xk), angles) - r) / h;
    }
    Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) return {x, rn, false};
    double scale = 1.0;
    bool moved = false;
    for (int k = 0; k < 30; ++k) {
      const Eigen::VectorXd xn = x + scale * step;
      bool in_range = true;
      for (int q = 0; q < n; ++q)
        if (!(xn(q) > 1e-6 && xn(q) < kPi - 1e-6)) in_range = false;
      if (in_range &&
          closure_residual_vec(apply(xn), angles).norm() < rn) {
        x = xn;
        moved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!moved) return {x, rn, false};
  }
  return {x, rn, rn < tol};
}

}  // namespace detail

// One sampled point of a rigidity sign scan.
struct RigiditySample {
  double eps;               // the free parameter
  bool feasible;            // constrained pentagon realizable at this eps
  double closure_residual;  // best closure residual of the edge solve
  double beta_minus_gamma;
  double delta_minus_eps;
  bool lemma3_consistent;   // meaningful only when feasible
};

// Numerical evidence (desk scale, not a proof) that a one-parameter angle
// family admits only the regular configuration: off the regular parameter
// the sign law is violated (beta - gamma and delta - epsilon agree in sign)
// and, consistently, the paired-edge closure system is unrealizable.
struct RigidityCertificate {
  int type_id;
  std::array<double, 5> forced_angles;  // all 2 pi / 3
  double edge;                          // edge length at the consistent eps
  double edge_spread;                   // max pairwise unknown difference
  std::vector<RigiditySample> evidence;
  double consistent_eps;                // refined sign-change location
  int sign_changes;                     // of beta - gamma over the scan
  bool regular_feasible;                // closure solvable at consistent_eps
  bool lemma3_at_regular;               // sign law holds there

  int feasible_samples() const {
    int n = 0;
    for (const RigiditySample& s : evidence) n += s.feasible ? 1 : 0;
    return n;
  }

  bool unique_regular(double tol = 1e-6) const {
    if (sign_changes != 1 || std::abs(consistent_eps - 2 * kPi / 3) >= tol)
      return false;
    if (!regular_feasible || !lemma3_at_regular) return false;
    // Every feasible scan sample must sit within tol of the regular value.
    for (const RigiditySample& s : evidence)
      if (s.feasible && std::abs(s.eps - 2 * kPi / 3) >= tol) return false;
    return true;
  }
};

namespace detail {

// Shared scan machinery for the two rigid types. The angle word in boundary
// order is (alpha, beta, delta, epsilon, gamma) with the paired-edge pattern
// (p, q, r, q, p) demanded by the tiling's edge labels; `angles_of` maps the
// free parameter to per-label values (alpha..epsilon).
inline RigidityCertificate rigidity_scan(
    int type_id,
    const std::function<std::array<double, 5>(double)>& angles_of,
    int samples = 200) {
  RigidityCertificate cert;
  cert.type_id = type_id;
  cert.forced_angles.fill(2 * kPi / 3);
  cert.edge = 0;
  cert.edge_spread = std::numeric_limits<double>::infinity();
  cert.sign_changes = 0;
  cert.consistent_eps = std::numeric_limits<double>::quiet_NaN();
  cert.regular_feasible = false;
  cert.lemma3_at_regular = false;

  const double lo = 2 * kPi / 3 - 0.5, hi = 2 * kPi / 3 + 0.5;
  const std::array<int, 5> groups{0, 1, 2, 1, 0};
  Eigen::VectorXd seed(3);
  const double a0 = regular_edge_length();
  seed << a0, a0, a0;
  const double feasible_tol = 1e-9;

  auto word_of = [&](double eps) {
    const auto v = angles_of(eps);
    AngleWord w{};
    w.angle = {v[0], v[1], v[3], v[4], v[2]};  // boundary order
    return w;
  };
  auto closure_at = [&](double eps) {
    EdgeWord e{};
    return solve_edge_closure(e, word_of(eps), groups, seed, 1e-11);
  };

  double prev_bg = 0;
  bool have_prev = false;
  double bracket_lo = 0, bracket_hi = 0;
  for (int s = 0; s < samples; ++s) {
    const double eps = lo + (hi - lo) * s / (samples - 1);
    const auto v = angles_of(eps);
    RigiditySample smp;
    smp.eps = eps;
    smp.beta_minus_gamma = v[1] - v[2];
    smp.delta_minus_eps = v[3] - v[4];
    const EdgeClosureResult res = closure_at(eps);
    smp.closure_residual = res.residual;
    smp.feasible = res.converged && res.residual < feasible_tol;
    smp.lemma3_consistent = false;
    if (smp.feasible) {
      const AngleWord w = word_of(eps);
      EdgeWord e{};
      e.length = {res.x(0), res.x(1), res.x(2), res.x(1), res.x(0)};
      const auto pent = realize_pentagon(e, w, 1e-8, /*require_simple=*/false);
      if (pent)
        smp.lemma3_consistent =
            lemma3_sign_check(*pent) == Lemma3Result::Consistent;
    }
    cert.evidence.push_back(smp);
    if (have_prev && prev_bg * smp.beta_minus_gamma < 0) {
      cert.sign_changes++;
      bracket_lo = lo + (hi - lo) * (s - 1) / (samples - 1);
      bracket_hi = eps;
    }
    prev_bg = smp.beta_minus_gamma;
    have_prev = true;
  }

  if (cert.sign_changes == 1) {
    cert.consistent_eps = bisect_1d(
        [&](double eps) { return angles_of(eps)[1] - angles_of(eps)[2]; },
        bracket_lo, bracket_hi, 1e-14);
    const EdgeClosureResult res = closure_at(cert.consistent_eps);
    cert.regular_feasible = res.converged && res.residual < feasible_tol;
    if (cert.regular_feasible) {
      cert.edge = res.x(0);
      cert.edge_spread =
          std::max({std::abs(res.x(0) - res.x(1)), std::abs(res.x(1) - res.x(2)),
                    std::abs(res.x(0) - res.x(2))});
      const AngleWord w = word_of(cert.consistent_eps);
      EdgeWord e{};
      e.length = {res.x(0), res.x(1), res.x(2), res.x(1), res.x(0)};
      const auto pent = realize_pentagon(e, w, 1e-8, /*require_simple=*/true);
      cert.lemma3_at_regular =
          pent && lemma3_sign_check(*pent) == Lemma3Result::Consistent;
    }
  }
  return cert;
}

}  // namespace detail

// Type-1 family: one alpha^3 vertex class plus (alpha, gamma, delta),
// (beta, beta, gamma), (delta, epsilon, epsilon) classes; epsilon free.
inline RigidityCertificate rigidity_type1() {
  return detail::rigidity_scan(1, [](double eps) {
    const double alpha = 2 * kPi / 3;
    const double beta = 4 * kPi / 3 - eps;
    const double gamma = 2 * eps - 2 * kPi / 3;
    const double delta = 2 * kPi - 2 * eps;
    return std::array<double, 5>{alpha, beta, gamma, delta, eps};
  });
}

// Type-4 family: alpha^3 plus (alpha, beta, gamma), (beta, epsilon,
// epsilon), (gamma, delta, delta) classes; epsilon free.
inline RigidityCertificate rigidity_type4() {
  return detail::rigidity_scan(4, [](double eps) {
    const double alpha = 2 * kPi / 3;
    const double beta = 2 * kPi - 2 * eps;
    const double gamma = 2 * eps - 2 * kPi / 3;
    const double delta = 4 * kPi / 3 - eps;
    return std::array<double, 5>{alpha, beta, gamma, delta, eps};
  });
}

}  // namespace spheretile

#endif  // SPHERETILE_SOLVER_HPP
