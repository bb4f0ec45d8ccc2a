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

#ifndef SPHERETILE_TILINGS_HPP
#define SPHERETILE_TILINGS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spheretile/pentagon.hpp"

namespace spheretile {

enum class AngleLabel { Alpha = 0, Beta, Gamma, Delta, Epsilon };

inline const char* to_string(AngleLabel l) {
  switch (l) {
    case AngleLabel::Alpha: return "alpha";
    case AngleLabel::Beta: return "beta";
    case AngleLabel::Gamma: return "gamma";
    case AngleLabel::Delta: return "delta";
    default: return "epsilon";
  }
}

// One tile of the combinatorial structure: a cyclic list of 5 vertex ids with
// the angle label sitting at each corner and the length label of each edge
// (edge slot i joins vertex slots i and i+1). Cycles are listed with the tile
// interior on the left, viewed from outside the sphere.
struct TileSpec {
  std::array<int, 5> vertex;
  std::array<AngleLabel, 5> corner;
  std::array<EdgeTag, 5> edge;
};

struct Gluing {
  int tile_a, slot_a;
  int tile_b, slot_b;
};

struct CornerSlot {
  int tile, slot;
};

// The face/edge/vertex incidence data of one tiling type, parsed from a
// plain-text fixture table and checked against the structural invariants
// (so a transcription slip in the fixture fails loudly).
class CombinatorialTiling {
 public:
  static CombinatorialTiling parse(int type_id, const std::string& text);

  int type_id() const { return type_id_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::array<TileSpec, 12>& tiles() const { return tiles_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  const std::vector<std::vector<CornerSlot>>& vertex_cycles() const {
    return cycles_;
  }

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(gluings_.size()); }

  void validate() const;

 private:
  int type_id_ = 0;
  std::vector<std::string> names_;
  std::array<TileSpec, 12> tiles_{};
  std::vector<Gluing> gluings_;
  std::vector<std::vector<CornerSlot>> cycles_;
};

namespace fixture {

// Shared Schlegel-diagram topology of all five types: 20 vertices, 12
// pentagonal faces, every vertex of degree 3.
inline constexpr const char* kTopology = R"(
vertices A1 A2 A3 A4 A5 B1 B2 B3 B4 B5 C1 C2 C3 C4 C5 D1 D2 D3 D4 D5
tile 1  A1 A2 A3 A4 A5
tile 2  B1 C2 B2 A2 A1
tile 3  B2 C3 B3 A3 A2
tile 4  B3 C4 B4 A4 A3
tile 5  B4 C5 B5 A5 A4
tile 6  B5 C1 B1 A1 A5
tile 7  C1 D1 D2 C2 B1
tile 8  C2 D2 D3 C3 B2
tile 9  C3 D3 D4 C4 B3
tile 10 C4 D4 D5 C5 B4
tile 11 C5 D5 D1 C1 B5
tile 12 D1 D5 D4 D3 D2
)";

// Corner labels per tile (aligned with the topology cycles) and edge length
// labels, one block per type. "edges default <tag>" assigns every edge not
// listed explicitly.
inline constexpr const char* kType1 = R"(
corners 1  alpha beta delta epsilon gamma
corners 2  epsilon gamma alpha beta delta
corners 3  alpha beta delta epsilon gamma
corners 4  gamma alpha beta delta epsilon
corners 5  gamma alpha beta delta epsilon
corners 6  beta delta epsilon gamma alpha
corners 7  epsilon gamma alpha beta delta
corners 8  beta delta epsilon gamma alpha
corners 9  beta delta epsilon gamma alpha
corners 10 delta epsilon gamma alpha beta
corners 11 alpha beta delta epsilon gamma
corners 12 alpha beta delta epsilon gamma
edges default a
)";

inline constexpr const char* kType2 = R"(
corners 1  epsilon delta gamma beta alpha
corners 2  alpha beta gamma delta epsilon
corners 3  beta alpha epsilon delta gamma
corners 4  epsilon alpha beta gamma delta
corners 5  epsilon delta gamma beta alpha
corners 6  delta epsilon alpha beta gamma
corners 7  beta gamma delta epsilon alpha
corners 8  epsilon delta gamma beta alpha
corners 9  gamma delta epsilon alpha beta
corners 10 alpha beta gamma delta epsilon
corners 11 gamma beta alpha epsilon delta
corners 12 beta alpha epsilon delta gamma
edges default a
edge A1-A2 b
edge B5-C1 b
edge A3-B3 b
edge B4-C5 b
edge C2-D2 b
edge D3-D4 b
)";

inline constexpr const char* kType3 = R"(
corners 1  alpha beta delta epsilon gamma
corners 2  alpha gamma epsilon delta beta
corners 3  epsilon gamma alpha beta delta
corners 4  beta alpha gamma epsilon delta
corners 5  alpha beta delta epsilon gamma
corners 6  delta beta alpha gamma epsilon
corners 7  gamma epsilon delta beta alpha
corners 8  alpha beta delta epsilon gamma
corners 9  epsilon delta beta alpha gamma
corners 10 alpha gamma epsilon delta beta
corners 11 delta epsilon gamma alpha beta
corners 12 epsilon gamma alpha beta delta
edges default a
edge A3-A4 b
edge A2-B2 b
edge A5-B5 b
edge C3-D3 b
edge C5-D5 b
edge D1-D2 b
)";

inline constexpr const char* kType4 = R"(
corners 1  alpha beta delta epsilon gamma
corners 2  alpha beta delta epsilon gamma
corners 3  delta beta alpha gamma epsilon
corners 4  beta alpha gamma epsilon delta
corners 5  alpha gamma epsilon delta beta
corners 6  epsilon gamma alpha beta delta
corners 7  beta delta epsilon gamma alpha
corners 8  alpha beta delta epsilon gamma
corners 9  epsilon delta beta alpha gamma
corners 10 alpha gamma epsilon delta beta
corners 11 delta epsilon gamma alpha beta
corners 12 delta beta alpha gamma epsilon
edges default a
edge A3-A4 b
edge A2-B2 b
edge A5-B5 b
edge C3-D3 b
edge C5-D5 b
edge D1-D2 b
)";

inline constexpr const char* kType5 = R"(
corners 1  delta alpha beta gamma alpha
corners 2  gamma alpha delta alpha beta
corners 3  beta gamma alpha delta alpha
corners 4  alpha delta alpha beta gamma
corners 5  alpha beta gamma alpha delta
corners 6  delta alpha beta gamma alpha
corners 7  alpha beta gamma alpha delta
corners 8  alpha delta alpha beta gamma
corners 9  delta alpha beta gamma alpha
corners 10 beta gamma alpha delta alpha
corners 11 gamma alpha delta alpha beta
corners 12 gamma alpha delta alpha beta
edges default a
edge A1-A5 b
edge A4-A5 b
edge A5-B5 b
edge B1-C2 b
edge B2-C2 b
edge C2-D2 b
edge B3-C3 b
edge B3-C4 b
edge A3-B3 b
edge D1-D5 b
edge D4-D5 b
edge C5-D5 b
edge A3-A4 c
edge A1-B1 c
edge B2-C3 c
edge B5-C5 c
edge C4-D4 c
edge D1-D2 c
)";

}  // namespace fixture

inline CombinatorialTiling CombinatorialTiling::parse(int type_id,
                                                      const std::string& text) {
  CombinatorialTiling ct;
  ct.type_id_ = type_id;
  std::map<std::string, int> vid;

  // Topology first.
  {
    std::istringstream in(fixture::kTopology);
    std::string tok;
    while (in >> tok) {
      if (tok == "vertices") {
        std::string line;
        std::getline(in, line);
        std::istringstream ls(line);
        std::string name;
        while (ls >> name) {
          vid[name] = static_cast<int>(ct.names_.size());
          ct.names_.push_back(name);
        }
      } else if (tok == "tile") {
        int idx;
        in >> idx;
        TileSpec& t = ct.tiles_.at(idx - 1);
        for (int j = 0; j < 5; ++j) {
          std::string name;
          in >> name;
          t.vertex[j] = vid.at(name);
        }
      }
    }
  }

  auto parse_angle = [](const std::string& s) {
    if (s == "alpha") return AngleLabel::Alpha;
    if (s == "beta") return AngleLabel::Beta;
    if (s == "gamma") return AngleLabel::Gamma;
    if (s == "delta") return AngleLabel::Delta;
    if (s == "epsilon") return AngleLabel::Epsilon;
    throw std::invalid_argument("unknown angle label: " + s);
  };
  auto parse_edge_tag = [](const std::string& s) {
    if (s == "a") return EdgeTag::A;
    if (s == "b") return EdgeTag::B;
    if (s == "c") return EdgeTag::C;
    throw std::invalid_argument("unknown edge label: " + s);
  };

  // Per-type labels.
  std::map<std::pair<int, int>, EdgeTag> edge_label;  // (min vid, max vid)
  EdgeTag default_tag = EdgeTag::Free;
  bool have_default = false;
  {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok == "corners") {
        int idx;
        in >> idx;
        TileSpec& t = ct.tiles_.at(idx - 1);
        for (int j = 0; j < 5; ++j) {
          std::string s;
          in >> s;
          t.corner[j] = parse_angle(s);
        }
      } else if (tok == "edges") {
        std::string kw, s;
        in >> kw >> s;
        if (kw != "default")
          throw std::invalid_argument("expected 'edges default <tag>'");
        default_tag = parse_edge_tag(s);
        have_default = true;
      } else if (tok == "edge") {
        std::string pair, s;
        in >> pair >> s;
        const auto dash = pair.find('-');
        const int u = vid.at(pair.substr(0, dash));
        const int v = vid.at(pair.substr(dash + 1));
        edge_label[{std::min(u, v), std::max(u, v)}] = parse_edge_tag(s);
      }
    }
  }
  if (!have_default && edge_label.size() != 30)
    throw std::invalid_argument("fixture must label all 30 edges");

  // Resolve per-tile edge tags and derive gluings / vertex cycles.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_uses;
  for (int t = 0; t < 12; ++t) {
    for (int j = 0; j < 5; ++j) {
      const int u = ct.tiles_[t].vertex[j];
      const int v = ct.tiles_[t].vertex[(j + 1) % 5];
      const auto key = std::make_pair(std::min(u, v), std::max(u, v));
      const auto it = edge_label.find(key);
      ct.tiles_[t].edge[j] = (it != edge_label.end()) ? it->second : default_tag;
      edge_uses[key].push_back({t, j});
    }
  }
  for (const auto& [key, uses] : edge_uses) {
    if (uses.size() != 2)
      throw std::invalid_argument("edge used " + std::to_string(uses.size()) +
                                  " times; expected 2");
    ct.gluings_.push_back(
        {uses[0].first, uses[0].second, uses[1].first, uses[1].second});
  }
  ct.cycles_.assign(ct.names_.size(), {});
  for (int t = 0; t < 12; ++t)
    for (int j = 0; j < 5; ++j)
      ct.cycles_[ct.tiles_[t].vertex[j]].push_back({t, j});

  ct.validate();
  return ct;
}

inline void CombinatorialTiling::validate() const {
  // Euler: V - E + F = 2 with F = 12, E = 30, V = 20.
  if (num_vertices() != 20 || num_edges() != 30)
    throw std::logic_error("fixture fails Euler count (V=" +
                           std::to_string(num_vertices()) +
                           ", E=" + std::to_string(num_edges()) + ")");
  for (const auto& cyc : cycles_)
    if (cyc.size() != 3)
      throw std::logic_error("fixture has a vertex of degree != 3");

  // Glued edge slots must carry matching length labels and be traversed in
  // opposite directions (consistent global orientation).
  for (const Gluing& g : gluings_) {
    const TileSpec& ta = tiles_[g.tile_a];
    const TileSpec& tb = tiles_[g.tile_b];
    if (ta.edge[g.slot_a] != tb.edge[g.slot_b])
      throw std::logic_error("glued edges carry different length labels");
    const int a0 = ta.vertex[g.slot_a], a1 = ta.vertex[(g.slot_a + 1) % 5];
    const int b0 = tb.vertex[g.slot_b], b1 = tb.vertex[(g.slot_b + 1) % 5];
    if (!(a0 == b1 && a1 == b0))
      throw std::logic_error("glued edges are not oppositely oriented");
  }

  // All tiles must carry the same boundary word up to rotation or reversal
  // (mirror tiles are legal; the tiles are congruent, not necessarily
  // directly congruent).
  auto word_of = [](const TileSpec& t) {
    std::array<std::pair<AngleLabel, EdgeTag>, 5> w;
    for (int j = 0; j < 5; ++j) w[j] = {t.corner[j], t.edge[j]};
    return w;
  };
  const auto w0 = word_of(tiles_[0]);
  for (int t = 1; t < 12; ++t) {
    const auto w = word_of(tiles_[t]);
    bool match = false;
    for (int s = 0; s < 5 && !match; ++s) {
      bool direct = true, mirror = true;
      for (int j = 0; j < 5; ++j) {
        if (w[(s + j) % 5] != w0[j]) direct = false;
        // Reversal flips corner order; edge j in the reversed traversal is
        // the original edge preceding the corner.
        const int rj = (s - j + 10) % 5;
        if (w[rj].first != w0[j].first ||
            w[(rj + 4) % 5].second != w0[j].second)
          mirror = false;
      }
      match = direct || mirror;
    }
    if (!match)
      throw std::logic_error("tile " + std::to_string(t + 1) +
                             " boundary word is not congruent to tile 1");
  }
}

inline CombinatorialTiling builtin(int type_id) {
  switch (type_id) {
    case 1: return CombinatorialTiling::parse(1, fixture::kType1);
    case 2: return CombinatorialTiling::parse(2, fixture::kType2);
    case 3: return CombinatorialTiling::parse(3, fixture::kType3);
    case 4: return CombinatorialTiling::parse(4, fixture::kType4);
    case 5: return CombinatorialTiling::parse(5, fixture::kType5);
    default:
      throw std::invalid_argument("unknown tiling type " +
                                  std::to_string(type_id));
  }
}

// A linear vertex relation sum_l coeff[l] * angle_l = rhs over the labels
// (alpha, beta, gamma, delta, epsilon).
struct LinearRelation {
  std::array<int, 5> coeff;
  double rhs;

  bool satisfied_by(const std::array<double, 5>& angles,
                    double tol = 1e-9) const {
    double s = 0;
    for (int l = 0; l < 5; ++l) s += coeff[l] * angles[l];
    return std::abs(s - rhs) <= tol;
  }
};

// One 2-pi equation per distinct vertex cycle type, deduplicated, plus the
// global angle-excess equation for a tile of area 4 pi / 12.
inline std::vector<LinearRelation> vertex_angle_relations(
    const CombinatorialTiling& ct) {
  std::set<std::array<int, 5>> seen;
  std::vector<LinearRelation> out;
  for (const auto& cyc : ct.vertex_cycles()) {
    std::array<int, 5> c{0, 0, 0, 0, 0};
    for (const CornerSlot& u : cyc)
      c[static_cast<int>(ct.tiles()[u.tile].corner[u.slot])]++;
    if (seen.insert(c).second) out.push_back({c, 2 * kPi});
  }
  std::array<int, 5> tile_counts{0, 0, 0, 0, 0};
  for (int j = 0; j < 5; ++j)
    tile_counts[static_cast<int>(ct.tiles()[0].corner[j])]++;
  out.push_back({tile_counts, 3 * kPi + kPi / 3});
  return out;
}

namespace detail {

// Best orthogonal alignment of points x onto points y (Kabsch, optionally
// constrained to proper rotations).
inline std::pair<double, bool> best_alignment(const std::vector<Vec3>& x,
                                              const std::vector<Vec3>& y) {
  Mat3 h = Mat3::Zero();
  for (size_t i = 0; i < x.size(); ++i) h += y[i] * x[i].transpose();
  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat3 u = svd.matrixU(), v = svd.matrixV();
  const double d = (u * v.transpose()).determinant();
  auto residual = [&](const Mat3& r) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += (r * x[i] - y[i]).squaredNorm();
    return std::sqrt(s);
  };
  const Mat3 best_any = u * v.transpose();
  const bool proper = d > 0;
  return {residual(best_any), proper};
}

}  // namespace detail

// Realize all 12 tiles from a realization of tile 1 (slot-aligned with the
// fixture) by walking each remaining tile's boundary word outward across the
// gluings. Per-label angle values and per-tag edge lengths are read off the
// seed tile.
inline std::array<SphericalPentagon, 12> propagate_tiles(
    const CombinatorialTiling& ct, const SphericalPentagon& seed) {
  std::array<double, 5> angle_of{};
  std::array<double, 3> length_of{};
  for (int j = 0; j < 5; ++j) {
    angle_of[static_cast<int>(ct.tiles()[0].corner[j])] = seed.angles.angle[j];
    length_of[static_cast<int>(ct.tiles()[0].edge[j])] = seed.edges.length[j];
  }
  auto words_of = [&](int t) {
    AngleWord aw{};
    EdgeWord ew{};
    for (int j = 0; j < 5; ++j) {
      aw.angle[j] = angle_of[static_cast<int>(ct.tiles()[t].corner[j])];
      ew.length[j] = length_of[static_cast<int>(ct.tiles()[t].edge[j])];
      ew.tag[j] = ct.tiles()[t].edge[j];
    }
    return std::make_pair(aw, ew);
  };

  std::array<SphericalPentagon, 12> tiles;
  std::array<bool, 12> placed{};
  tiles[0] = seed;
  placed[0] = true;

  // Walk tile t's boundary given vertex slot j0 at v0 heading toward v1.
  auto place_tile = [&](int t, int j0, const Vec3& v0, const Vec3& v1) {
    const auto [aw, ew] = words_of(t);
    SphericalPentagon tile;
    tile.angles = aw;
    tile.edges = ew;
    Frame f(v0, v1 - v0);
    tile.vertices[j0] = f.position();
    for (int k = 0; k < 4; ++k) {
      const int slot = (j0 + k) % 5;
      f.advance(ew.length[slot]);
      tile.vertices[(slot + 1) % 5] = f.position();
      f.turn_left(kPi - aw.angle[(slot + 1) % 5]);
    }
    tiles[t] = tile;
  };

  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const Gluing& g : ct.gluings()) {
      auto propagate = [&](int src, int ssrc, int dst, int sdst) {
        if (!placed[src] || placed[dst]) return;
        // The glued edge is traversed oppositely by the two tiles.
        const Vec3 v0 = tiles[src].vertices[(ssrc + 1) % 5];
        const Vec3 v1 = tiles[src].vertices[ssrc];
        place_tile(dst, sdst, v0, v1);
        placed[dst] = true;
        progressed = true;
      };
      propagate(g.tile_a, g.slot_a, g.tile_b, g.slot_b);
      propagate(g.tile_b, g.slot_b, g.tile_a, g.slot_a);
    }
  }
  for (bool b : placed)
    if (!b) throw std::logic_error("gluing graph did not reach every tile");
  return tiles;
}

struct ValidationReport {
  double max_vertex_angle_residual = 0;
  double max_edge_mismatch = 0;
  double max_vertex_coincidence = 0;
  double max_congruence_deviation = 0;
  bool reflected_congruence_present = false;
  double total_area_deviation = 0;
  bool all_simple = true;

  bool valid(double tol = 1e-7) const {
    return all_simple && max_vertex_angle_residual < tol &&
           max_edge_mismatch < tol && max_vertex_coincidence < tol &&
           max_congruence_deviation < tol && total_area_deviation < tol;
  }

  std::string to_text() const {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific;
    os << "vertex-angle-sum residual  " << max_vertex_angle_residual << "\n"
       << "glued-edge mismatch        " << max_edge_mismatch << "\n"
       << "vertex coincidence         " << max_vertex_coincidence << "\n"
       << "tile congruence deviation  " << max_congruence_deviation
       << (reflected_congruence_present ? " (includes reflected tiles)" : "")
       << "\n"
       << "total area deviation       " << total_area_deviation << "\n"
       << "all tiles simple           " << (all_simple ? "yes" : "no") << "\n";
    return os.str();
  }
};

// Check a geometric realization (12 pentagons indexed and slot-aligned with
// the combinatorial tiling) against the tiling's incidence structure.
inline ValidationReport validate_realization(
    const CombinatorialTiling& ct,
    const std::array<SphericalPentagon, 12>& tiles) {
  ValidationReport rep;

  for (const auto& cyc : ct.vertex_cycles()) {
    double sum = 0;
    for (const CornerSlot& u : cyc)
      sum += tiles[u.tile].measured_angle(u.slot);
    rep.max_vertex_angle_residual =
        std::max(rep.max_vertex_angle_residual, std::abs(sum - 2 * kPi));
    for (size_t i = 0; i < cyc.size(); ++i)
      for (size_t j = i + 1; j < cyc.size(); ++j) {
        const Vec3& p = tiles[cyc[i].tile].vertices[cyc[i].slot];
        const Vec3& q = tiles[cyc[j].tile].vertices[cyc[j].slot];
        rep.max_vertex_coincidence =
            std::max(rep.max_vertex_coincidence, (p - q).norm());
      }
  }

  for (const Gluing& g : ct.gluings()) {
    const double la = tiles[g.tile_a].measured_edge(g.slot_a);
    const double lb = tiles[g.tile_b].measured_edge(g.slot_b);
    rep.max_edge_mismatch = std::max(rep.max_edge_mismatch, std::abs(la - lb));
  }

  double total_area = 0;
  for (int t = 0; t < 12; ++t) {
    double s = 0;
    for (int j = 0; j < 5; ++j) s += tiles[t].measured_angle(j);
    total_area += s - 3 * kPi;
    if (!is_simple(tiles[t].vertices)) rep.all_simple = false;
  }
  rep.total_area_deviation = std::abs(total_area - 4 * kPi);

  // Congruence against tile 1: best alignment over the 10 cyclic/reflected
  // vertex correspondences.
  for (int t = 1; t < 12; ++t) {
    double best = std::numeric_limits<double>::infinity();
    bool best_proper = true;
    for (int s = 0; s < 5; ++s) {
      for (int dir : {+1, -1}) {
        std::vector<Vec3> x, y;
        for (int j = 0; j < 5; ++j) {
          x.push_back(tiles[t].vertices[(s + dir * j + 10) % 5]);
          y.push_back(tiles[0].vertices[j]);
        }
        const auto [res, proper] = detail::best_alignment(x, y);
        if (res < best) {
          best = res;
          best_proper = proper;
        }
      }
    }
    rep.max_congruence_deviation = std::max(rep.max_congruence_deviation, best);
    if (!best_proper) rep.reflected_congruence_present = true;
  }
  return rep;
}

}  // namespace spheretile

#endif  // SPHERETILE_TILINGS_HPP
