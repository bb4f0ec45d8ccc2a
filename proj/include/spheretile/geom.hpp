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

#ifndef SPHERETILE_GEOM_HPP
#define SPHERETILE_GEOM_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spheretile {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kUnitTol = 1e-12;

// Argument of an arccos that drifted past +-1 by more than this is treated
// as a logic error rather than rounding.
inline constexpr double kCosOverflowTol = 1e-9;

inline double clamp_cos(double c) {
  if (std::abs(c) > 1.0 + kCosOverflowTol)
    throw std::logic_error("cosine magnitude " + std::to_string(c) +
                           " exceeds 1 beyond rounding tolerance");
  return c < -1.0 ? -1.0 : (c > 1.0 ? 1.0 : c);
}

// A point on the unit sphere. Normalized on construction; all downstream
// lengths are arc lengths in radians.
class UnitVector {
 public:
  UnitVector(double x, double y, double z) : v_(x, y, z) { normalize(); }
  explicit UnitVector(const Vec3& v) : v_(v) { normalize(); }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

  double dot(const UnitVector& o) const { return v_.dot(o.v_); }

 private:
  void normalize() {
    const double n = v_.norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("cannot normalize zero or non-finite vector");
    v_ /= n;
  }
  Vec3 v_;
};

// An arc length in radians, restricted to [0, pi].
class ArcLength {
 public:
  explicit ArcLength(double value) : value_(value) {
    if (!(value >= 0.0 && value <= kPi))
      throw std::invalid_argument("arc length " + std::to_string(value) +
                                  " outside [0, pi]");
  }
  double value() const { return value_; }

 private:
  double value_;
};

// An orthogonal transform of the sphere, rotation (det +1) or
// roto-reflection (det -1). Stored as a matrix so improper elements need no
// special casing.
class Isometry {
 public:
  explicit Isometry(const Mat3& m) : m_(m) {
    const double ortho = (m.transpose() * m - Mat3::Identity()).norm();
    if (ortho > 1e-9)
      throw std::invalid_argument("matrix is not orthogonal (|m^T m - I| = " +
                                  std::to_string(ortho) + ")");
    det_ = m.determinant() > 0.0 ? 1.0 : -1.0;
  }

  static Isometry identity() { return Isometry(Mat3::Identity()); }

  const Mat3& matrix() const { return m_; }
  double det() const { return det_; }
  bool proper() const { return det_ > 0.0; }

  Isometry operator*(const Isometry& o) const { return Isometry(m_ * o.m_); }
  UnitVector operator()(const UnitVector& p) const {
    return UnitVector(m_ * p.vec());
  }
  Vec3 operator()(const Vec3& p) const { return m_ * p; }

  Isometry inverse() const { return Isometry(m_.transpose()); }

  double distance(const Isometry& o) const { return (m_ - o.m_).norm(); }

 private:
  Mat3 m_;
  double det_;
};

inline ArcLength geodesic_distance(const UnitVector& p, const UnitVector& q) {
  return ArcLength(std::acos(clamp_cos(p.dot(q))));
}

inline double geodesic_distance(const Vec3& p, const Vec3& q) {
  return std::acos(clamp_cos(p.dot(q) / (p.norm() * q.norm())));
}

inline Isometry rotation_about_axis(const UnitVector& axis, double angle) {
  return Isometry(
      Eigen::AngleAxisd(angle, axis.vec()).toRotationMatrix());
}

// Reflection through the plane with the given normal.
inline Isometry reflection(const UnitVector& normal) {
  const Vec3& n = normal.vec();
  return Isometry(Mat3::Identity() - 2.0 * n * n.transpose());
}

// Cosine of the closing edge x of a spherical quadrilateral with three
// consecutive edges a, b, c and interior angles phi (between a and b) and
// psi (between b and c). Reflex angle values are legal.
inline double quad_fourth_edge(ArcLength a, ArcLength b, ArcLength c,
                               double phi, double psi) {
  const double av = a.value(), bv = b.value(), cv = c.value();
  const double cx =
      std::cos(av) * std::cos(bv) * std::cos(cv) +
      std::sin(bv) * (std::sin(av) * std::cos(cv) * std::cos(phi) +
                      std::cos(av) * std::sin(cv) * std::cos(psi)) +
      std::sin(av) * std::sin(cv) *
          (std::sin(phi) * std::sin(psi) -
           std::cos(bv) * std::cos(phi) * std::cos(psi));
  return clamp_cos(cx);
}

// A position-plus-heading frame on the sphere, used for turtle-style walks.
// u() = p x t points to the left of the heading.
class Frame {
 public:
  Frame(const Vec3& position, const Vec3& heading)
      : p_(position.normalized()) {
    Vec3 t = heading - heading.dot(p_) * p_;
    const double n = t.norm();
    if (n < 1e-14)
      throw std::invalid_argument("heading parallel to position");
    t_ = t / n;
  }

  static Frame canonical() { return Frame(Vec3(0, 0, 1), Vec3(1, 0, 0)); }

  const Vec3& position() const { return p_; }
  const Vec3& heading() const { return t_; }
  Vec3 left() const { return p_.cross(t_); }

  // Advance along the current heading geodesic by arc s.
  void advance(double s) {
    const Vec3 p = p_ * std::cos(s) + t_ * std::sin(s);
    const Vec3 t = -p_ * std::sin(s) + t_ * std::cos(s);
    p_ = p;
    t_ = t;
  }

  // Turn the heading left (toward u) by tau; negative tau turns right.
  void turn_left(double tau) {
    const Vec3 u = left();
    t_ = t_ * std::cos(tau) + u * std::sin(tau);
  }

 private:
  Vec3 p_;
  Vec3 t_;
};

// Independent route to quad_fourth_edge: walk the three edges with explicit
// frame propagation, turning by the interior angles at the two middle
// vertices, and return the cosine of the end-to-end distance.
inline double quad_fourth_edge_oracle(ArcLength a, ArcLength b, ArcLength c,
                                      double phi, double psi) {
  Frame f = Frame::canonical();
  const Vec3 start = f.position();
  f.advance(a.value());
  f.turn_left(kPi - phi);
  f.advance(b.value());
  f.turn_left(kPi - psi);
  f.advance(c.value());
  return clamp_cos(start.dot(f.position()));
}

// Third side of an isosceles spherical triangle with two sides a and apex
// angle between them (spherical law of cosines).
inline ArcLength triangle_third_side(ArcLength a, double apex) {
  const double av = a.value();
  const double cs = std::cos(av) * std::cos(av) +
                    std::sin(av) * std::sin(av) * std::cos(apex);
  return ArcLength(std::acos(clamp_cos(cs)));
}

}  // namespace spheretile

#endif  // SPHERETILE_GEOM_HPP
