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

#ifndef SPHERETILE_IO_HPP
#define SPHERETILE_IO_HPP

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "spheretile/solver.hpp"
#include "spheretile/type5.hpp"

namespace spheretile {

namespace detail {

inline std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

// Versioned, line-oriented description of a realized 12-tile tiling.
// Round-trips losslessly (%.17g serialization).
struct TilingDocument {
  int format_version = 1;
  int type_id = 5;
  std::array<double, 5> angles{};   // per-label (alpha..epsilon), radians
  std::array<double, 3> edges{};    // lengths for tags (a, b, c)
  std::array<Vec3, 20> vertices{};
  std::array<std::array<int, 5>, 12> faces{};
  std::array<std::array<int, 5>, 12> corner_labels{};  // AngleLabel as int
  std::array<std::array<int, 5>, 12> edge_labels{};    // EdgeTag as int
  std::string symmetry_class = "unknown";
  int symmetry_order = 0;

  std::string serialize() const {
    std::ostringstream os;
    os << "spheretile-tiling " << format_version << "\n";
    os << "type " << type_id << "\n";
    os << "angles";
    for (double a : angles) os << " " << detail::fmt_real(a);
    os << "\nedges";
    for (double e : edges) os << " " << detail::fmt_real(e);
    os << "\nsymmetry " << symmetry_class << " " << symmetry_order << "\n";
    os << "vertices 20\n";
    for (const Vec3& v : vertices)
      os << "v " << detail::fmt_real(v.x()) << " " << detail::fmt_real(v.y())
         << " " << detail::fmt_real(v.z()) << "\n";
    os << "faces 12\n";
    for (int t = 0; t < 12; ++t) {
      os << "f";
      for (int j = 0; j < 5; ++j) os << " " << faces[t][j];
      os << "\n";
      os << "fa";
      for (int j = 0; j < 5; ++j) os << " " << corner_labels[t][j];
      os << "\n";
      os << "fe";
      for (int j = 0; j < 5; ++j) os << " " << edge_labels[t][j];
      os << "\n";
    }
    return os.str();
  }

  static TilingDocument parse(std::istream& in) {
    TilingDocument d;
    std::string tok;
    if (!(in >> tok) || tok != "spheretile-tiling")
      throw std::runtime_error("not a spheretile tiling document");
    in >> d.format_version;
    if (d.format_version != 1)
      throw std::runtime_error("unsupported tiling document version");
    int nv = 0, nf = 0, fi = 0, vi = 0;
    while (in >> tok) {
      if (tok == "type") {
        in >> d.type_id;
      } else if (tok == "angles") {
        for (double& a : d.angles) in >> a;
      } else if (tok == "edges") {
        for (double& e : d.edges) in >> e;
      } else if (tok == "symmetry") {
        in >> d.symmetry_class >> d.symmetry_order;
      } else if (tok == "vertices") {
        in >> nv;
        if (nv != 20) throw std::runtime_error("expected 20 vertices");
      } else if (tok == "v") {
        double x, y, z;
        in >> x >> y >> z;
        d.vertices[vi % 20] = Vec3(x, y, z);
        ++vi;
      } else if (tok == "faces") {
        in >> nf;
        if (nf != 12) throw std::runtime_error("expected 12 faces");
      } else if (tok == "f") {
        for (int& x : d.faces[fi]) in >> x;
      } else if (tok == "fa") {
        for (int& x : d.corner_labels[fi]) in >> x;
      } else if (tok == "fe") {
        for (int& x : d.edge_labels[fi]) in >> x;
        ++fi;
      } else {
        throw std::runtime_error("unknown token in tiling document: " + tok);
      }
    }
    for (const auto& f : d.faces)
      for (int x : f)
        if (x < 0 || x >= 20)
          throw std::runtime_error("face vertex index out of range");
    for (const Vec3& v : d.vertices)
      if (std::abs(v.norm() - 1.0) > 1e-9)
        throw std::runtime_error("document vertex not unit-norm");
    return d;
  }
};

inline TilingDocument make_document(const Type5Tiling& t,
                                    SymmetryClass cls) {
  const CombinatorialTiling ct = builtin(5);
  TilingDocument d;
  d.type_id = 5;
  for (int j = 0; j < 5; ++j)
    d.angles[static_cast<int>(ct.tiles()[0].corner[j])] =
        t.tiles[0].angles.angle[j];
  d.edges = {t.a, t.b, t.c};
  d.vertices = t.global_vertices;
  for (int f = 0; f < 12; ++f)
    for (int j = 0; j < 5; ++j) {
      d.faces[f][j] = ct.tiles()[f].vertex[j];
      d.corner_labels[f][j] = static_cast<int>(ct.tiles()[f].corner[j]);
      d.edge_labels[f][j] = static_cast<int>(ct.tiles()[f].edge[j]);
    }
  d.symmetry_class = to_string(cls);
  d.symmetry_order = order_of(cls);
  return d;
}

// Rebuild the geometric tiling held by a document (for verification).
inline Type5Tiling tiling_from_document(const TilingDocument& d) {
  Type5Tiling t;
  t.global_vertices = d.vertices;
  for (int f = 0; f < 12; ++f) {
    SphericalPentagon& p = t.tiles[f];
    for (int j = 0; j < 5; ++j) {
      p.vertices[j] = d.vertices[d.faces[f][j]];
      p.angles.angle[j] = d.angles[d.corner_labels[f][j]];
      p.edges.length[j] = d.edges[d.edge_labels[f][j]];
      p.edges.tag[j] = static_cast<EdgeTag>(d.edge_labels[f][j]);
    }
  }
  t.a = d.edges[0];
  t.b = d.edges[1];
  t.c = d.edges[2];
  return t;
}

// Zero-curve polylines of the two residual families plus labeled roots.
struct CurveDocument {
  int format_version = 1;
  int type_id = 2;
  int grid_n = 400;
  Rectangle2D domain{};
  // roots with tags and display labels (P, Q, R, S)
  std::vector<std::pair<RootBox2D, std::string>> roots;
  std::vector<std::vector<std::pair<double, double>>> curves_r1;
  std::vector<std::vector<std::pair<double, double>>> curves_r2;

  std::string serialize() const {
    std::ostringstream os;
    os << "spheretile-curves " << format_version << "\n";
    os << "type " << type_id << "\n";
    os << "grid " << grid_n << " domain " << detail::fmt_real(domain.a_lo)
       << " " << detail::fmt_real(domain.a_hi) << " "
       << detail::fmt_real(domain.b_lo) << " "
       << detail::fmt_real(domain.b_hi) << "\n";
    os << "roots " << roots.size() << "\n";
    for (const auto& [r, label] : roots)
      os << "root " << label << " " << detail::fmt_real(r.a) << " "
         << detail::fmt_real(r.beta) << " " << to_string(r.tag) << "\n";
    auto dump = [&os](const char* name, const auto& family) {
      for (const auto& poly : family) {
        os << "curve " << name << " " << poly.size() << "\n";
        for (const auto& [a, b] : poly)
          os << "pt " << detail::fmt_real(a) << " " << detail::fmt_real(b)
             << "\n";
      }
    };
    dump("r1", curves_r1);
    dump("r2", curves_r2);
    return os.str();
  }
};

namespace detail {

using Polyline = std::vector<std::pair<double, double>>;

// Marching-squares zero contour of f over the domain, chained into
// polylines.
inline std::vector<Polyline> trace_zero_curves(
    const std::function<double(double, double)>& f, const Rectangle2D& dom,
    int n) {
  const double da = (dom.a_hi - dom.a_lo) / n;
  const double db = (dom.b_hi - dom.b_lo) / n;
  std::vector<double> val((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      val[i * (n + 1) + j] = f(dom.a_lo + i * da, dom.b_lo + j * db);

  using Pt = std::pair<double, double>;
  std::vector<std::pair<Pt, Pt>> segments;
  auto lerp = [](double x0, double x1, double v0, double v1) {
    return x0 + (x1 - x0) * (v0 / (v0 - v1));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a0 = dom.a_lo + i * da, a1 = a0 + da;
      const double b0 = dom.b_lo + j * db, b1 = b0 + db;
      const double v00 = val[i * (n + 1) + j], v10 = val[(i + 1) * (n + 1) + j];
      const double v01 = val[i * (n + 1) + j + 1],
                   v11 = val[(i + 1) * (n + 1) + j + 1];
      std::vector<Pt> hits;
      if ((v00 < 0) != (v10 < 0)) hits.push_back({lerp(a0, a1, v00, v10), b0});
      if ((v01 < 0) != (v11 < 0)) hits.push_back({lerp(a0, a1, v01, v11), b1});
      if ((v00 < 0) != (v01 < 0)) hits.push_back({a0, lerp(b0, b1, v00, v01)});
      if ((v10 < 0) != (v11 < 0)) hits.push_back({a1, lerp(b0, b1, v10, v11)});
      if (hits.size() == 2) segments.push_back({hits[0], hits[1]});
      else if (hits.size() == 4) {
        segments.push_back({hits[0], hits[2]});
        segments.push_back({hits[1], hits[3]});
      }
    }
  }

  // Chain segments into polylines by shared endpoints (quantized keys).
  auto key = [&](const Pt& p) {
    return std::make_pair(static_cast<long long>(std::llround(p.first / da * 4)),
                          static_cast<long long>(std::llround(p.second / db * 4)));
  };
  std::map<std::pair<long long, long long>, std::vector<int>> by_end;
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    by_end[key(segments[s].first)].push_back(s);
    by_end[key(segments[s].second)].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> polys;
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (used[s]) continue;
    used[s] = true;
    Polyline poly{segments[s].first, segments[s].second};
    for (int pass = 0; pass < 2; ++pass) {
      bool grew = true;
      while (grew) {
        grew = false;
        const Pt& end = poly.back();
        for (int cand : by_end[key(end)]) {
          if (used[cand]) continue;
          const auto& [p, q] = segments[cand];
          const Pt next = (key(p) == key(end)) ? q : p;
          if (key(p) != key(end) && key(q) != key(end)) continue;
          poly.push_back(next);
          used[cand] = true;
          grew = true;
          break;
        }
      }
      std::reverse(poly.begin(), poly.end());
    }
    polys.push_back(std::move(poly));
  }
  return polys;
}

// Split the nearest polyline segment at the root location so the document
// invariant (root within 1e-6 of the polyline) holds exactly.
inline void insert_point(std::vector<Polyline>& family, double a, double b) {
  double best = std::numeric_limits<double>::infinity();
  size_t bp = 0, bs = 0;
  for (size_t p = 0; p < family.size(); ++p) {
    for (size_t s = 0; s + 1 < family[p].size(); ++s) {
      const auto& [x0, y0] = family[p][s];
      const auto& [x1, y1] = family[p][s + 1];
      const double dx = x1 - x0, dy = y1 - y0;
      const double len2 = dx * dx + dy * dy;
      double t = len2 > 0 ? ((a - x0) * dx + (b - y0) * dy) / len2 : 0;
      t = std::clamp(t, 0.0, 1.0);
      const double d = std::hypot(a - (x0 + t * dx), b - (y0 + t * dy));
      if (d < best) {
        best = d;
        bp = p;
        bs = s;
      }
    }
  }
  if (family.empty()) return;
  family[bp].insert(family[bp].begin() + bs + 1, {a, b});
}

}  // namespace detail

// Build the Figure-style curve document for a type-2/3 system.
inline CurveDocument make_curve_document(int type_id, int grid_n = 400) {
  if (type_id != 2 && type_id != 3)
    throw std::invalid_argument("curves defined for types 2 and 3 only");
  CurveDocument doc;
  doc.type_id = type_id;
  doc.grid_n = grid_n;
  doc.domain = {0.0, kPi, 0.0, 4 * kPi / 3};
  auto F = [type_id](double a, double b) {
    return type_id == 2 ? type2_residuals(a, b) : type3_residuals(a, b);
  };
  auto roots = solve_2d(F, doc.domain, grid_n);
  classify_roots(type_id, roots);

  doc.curves_r1 = detail::trace_zero_curves(
      [&](double a, double b) { return F(a, b).first; }, doc.domain, grid_n);
  doc.curves_r2 = detail::trace_zero_curves(
      [&](double a, double b) { return F(a, b).second; }, doc.domain, grid_n);

  // Display labels: P is the regular root, Q the boundary root if present,
  // the rest in order of increasing a.
  std::vector<RootBox2D> ordered = roots;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const RootBox2D& x, const RootBox2D& y) {
                     auto rank = [](const RootBox2D& r) {
                       if (r.tag == RootTag::Regular) return 0;
                       if (r.tag == RootTag::ExcludedBoundary) return 1;
                       return 2;
                     };
                     if (rank(x) != rank(y)) return rank(x) < rank(y);
                     return x.a < y.a;
                   });
  const char* names[] = {"P", "Q", "R", "S"};
  for (size_t i = 0; i < ordered.size(); ++i) {
    const std::string label = i < 4 ? names[i] : "X" + std::to_string(i);
    doc.roots.push_back({ordered[i], label});
    detail::insert_point(doc.curves_r1, ordered[i].a, ordered[i].beta);
    detail::insert_point(doc.curves_r2, ordered[i].a, ordered[i].beta);
  }
  return doc;
}

// Face-vertex mesh export (Wavefront OBJ). subdiv levels replace each face
// by a centroid fan subdivided 4^subdiv-fold, all vertices projected back
// onto the sphere; subdiv 0 writes the pentagon faces directly.
inline std::string to_obj(const TilingDocument& d, int subdiv = 0) {
  std::ostringstream os;
  os << "# spheretile mesh, type " << d.type_id << "\n";
  if (subdiv <= 0) {
    for (const Vec3& v : d.vertices)
      os << "v " << detail::fmt_real(v.x()) << " " << detail::fmt_real(v.y())
         << " " << detail::fmt_real(v.z()) << "\n";
    for (const auto& f : d.faces) {
      os << "f";
      for (int x : f) os << " " << (x + 1);
      os << "\n";
    }
    return os.str();
  }
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> tris;
  auto add_vert = [&](const Vec3& v) {
    const Vec3 u = v.normalized();
    for (size_t i = 0; i < verts.size(); ++i)
      if ((verts[i] - u).norm() < 1e-12) return static_cast<int>(i);
    verts.push_back(u);
    return static_cast<int>(verts.size() - 1);
  };
  std::function<void(const Vec3&, const Vec3&, const Vec3&, int)> split =
      [&](const Vec3& a, const Vec3& b, const Vec3& c, int depth) {
        if (depth == 0) {
          tris.push_back({add_vert(a), add_vert(b), add_vert(c)});
          return;
        }
        const Vec3 ab = (a + b).normalized(), bc = (b + c).normalized(),
                   ca = (c + a).normalized();
        split(a, ab, ca, depth - 1);
        split(ab, b, bc, depth - 1);
        split(ca, bc, c, depth - 1);
        split(ab, bc, ca, depth - 1);
      };
  for (const auto& f : d.faces) {
    Vec3 centroid = Vec3::Zero();
    for (int x : f) centroid += d.vertices[x];
    centroid.normalize();
    for (int j = 0; j < 5; ++j)
      split(centroid, d.vertices[f[j]], d.vertices[f[(j + 1) % 5]], subdiv);
  }
  for (const Vec3& v : verts)
    os << "v " << detail::fmt_real(v.x()) << " " << detail::fmt_real(v.y())
       << " " << detail::fmt_real(v.z()) << "\n";
  for (const auto& t : tris)
    os << "f " << (t[0] + 1) << " " << (t[1] + 1) << " " << (t[2] + 1) << "\n";
  return os.str();
}

// Minimal vector rendering of a curve document (two curve families and the
// labeled roots).
inline std::string to_svg(const CurveDocument& doc, int width = 640,
                          int height = 640) {
  std::ostringstream os;
  const double pad = 40;
  auto sx = [&](double a) {
    return pad + (a - doc.domain.a_lo) / (doc.domain.a_hi - doc.domain.a_lo) *
                     (width - 2 * pad);
  };
  auto sy = [&](double b) {
    return height - pad -
           (b - doc.domain.b_lo) / (doc.domain.b_hi - doc.domain.b_lo) *
               (height - 2 * pad);
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\""
     << width - 2 * pad << "\" height=\"" << height - 2 * pad
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  auto draw = [&](const auto& family, const char* color) {
    for (const auto& poly : family) {
      os << "<polyline fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1\" points=\"";
      for (const auto& [a, b] : poly) os << sx(a) << "," << sy(b) << " ";
      os << "\"/>\n";
    }
  };
  draw(doc.curves_r1, "#1f77b4");
  draw(doc.curves_r2, "#d62728");
  for (const auto& [r, label] : doc.roots) {
    os << "<circle cx=\"" << sx(r.a) << "\" cy=\"" << sy(r.beta)
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << sx(r.a) + 6 << "\" y=\"" << sy(r.beta) - 6
       << "\" font-size=\"14\">" << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("write failure: " + path);
}

}  // namespace spheretile

#endif  // SPHERETILE_IO_HPP
