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
// Command-line surface for the spherical-tiling toolkit.
//
// Exit codes: 0 = consistent result, 1 = usage or I/O failure,
// 2 = classification inconsistency, 3 = unrealizable parameters.

#include <iostream>

#include <CLI11.hpp>

#include "spheretile/io.hpp"

namespace st = spheretile;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitUnrealizable = 3;

int run_solve(int type_id, int grid_n, double tol, const std::string& out) {
  if (type_id == 2 || type_id == 3) {
    const st::Rectangle2D dom{0.0, st::kPi, 0.0, 4 * st::kPi / 3};
    auto F = [type_id](double a, double b) {
      return type_id == 2 ? st::type2_residuals(a, b)
                          : st::type3_residuals(a, b);
    };
    auto roots = st::solve_2d(F, dom, grid_n, tol);
    st::classify_roots(type_id, roots);

    std::cout << "type " << type_id << " system: " << roots.size()
              << " roots over (0,pi)x(0,4pi/3)\n";
    int regular = 0, boundary = 0, unrealistic = 0, unclassified = 0;
    for (const st::RootBox2D& r : roots) {
      std::cout << "  a = " << r.a << "  beta = " << r.beta
                << "  residual = " << r.residual_norm << "  "
                << st::to_string(r.tag) << "\n";
      switch (r.tag) {
        case st::RootTag::Regular: ++regular; break;
        case st::RootTag::ExcludedBoundary: ++boundary; break;
        case st::RootTag::ExcludedUnrealistic: ++unrealistic; break;
        default: ++unclassified;
      }
    }
    if (!out.empty()) {
      std::ostringstream os;
      os << "spheretile-roots 1\ntype " << type_id << "\n";
      for (const st::RootBox2D& r : roots)
        os << "root " << st::detail::fmt_real(r.a) << " "
           << st::detail::fmt_real(r.beta) << " " << st::to_string(r.tag)
           << "\n";
      st::write_file(out, os.str());
    }
    const bool consistent =
        roots.size() == 4 && regular == 1 && unclassified == 0 &&
        (type_id == 2 ? (boundary == 1 && unrealistic == 2)
                      : (boundary == 0 && unrealistic == 3));
    if (consistent) {
      std::cout << "only geometrically realistic solution: regular "
                   "dodecahedron\n";
      return kExitOk;
    }
    std::cout << "classification inconsistent with the expected pattern\n";
    return kExitInconsistent;
  }

  // Types 1 and 4: rigidity certificates.
  const st::RigidityCertificate cert =
      type_id == 1 ? st::rigidity_type1() : st::rigidity_type4();
  std::cout << "type " << type_id << " rigidity scan (numerical evidence at "
               "desk scale, not a proof):\n";
  int consistent_samples = 0, feasible = 0;
  for (const st::RigiditySample& s : cert.evidence) {
    if (s.feasible) ++feasible;
    if (s.lemma3_consistent) ++consistent_samples;
  }
  std::cout << "  samples: " << cert.evidence.size() << ", feasible "
            << feasible << ", sign-law consistent " << consistent_samples
            << "\n";
  std::cout << "  sign changes of beta-gamma: " << cert.sign_changes << "\n";
  std::cout << "  consistent parameter: " << cert.consistent_eps
            << " (2*pi/3 = " << 2 * st::kPi / 3 << ")\n";
  std::cout << "  edge length at the consistent parameter: " << cert.edge
            << "\n";
  if (!out.empty()) {
    std::ostringstream os;
    os << "spheretile-rigidity 1\ntype " << type_id << "\nconsistent_eps "
       << st::detail::fmt_real(cert.consistent_eps) << "\nedge "
       << st::detail::fmt_real(cert.edge) << "\n";
    for (const st::RigiditySample& s : cert.evidence)
      os << "sample " << st::detail::fmt_real(s.eps) << " "
         << (s.feasible ? 1 : 0) << " "
         << st::detail::fmt_real(s.beta_minus_gamma) << " "
         << st::detail::fmt_real(s.delta_minus_eps) << " "
         << (s.lemma3_consistent ? 1 : 0) << "\n";
    st::write_file(out, os.str());
  }
  if (cert.unique_regular()) {
    std::cout << "all five angles forced to 2*pi/3; the tiling is the "
                 "regular dodecahedron\n";
    return kExitOk;
  }
  std::cout << "rigidity scan ambiguous\n";
  return kExitInconsistent;
}

int run_build(double beta, double gamma, const std::string& out,
              const std::string& mesh, int subdiv) {
  st::SphericalPentagon pent;
  st::Type5Tiling tiling;
  try {
    pent = st::solve_pentagon_type5({beta, gamma});
    tiling = st::assemble(pent);
  } catch (const st::Type5Error& e) {
    std::cerr << "unrealizable parameters: " << e.what()
              << " (residual " << e.residual << ")\n";
    return kExitUnrealizable;
  }
  const st::SymmetryClass cls = st::classify_symmetry(tiling);
  const st::TilingDocument doc = st::make_document(tiling, cls);
  std::cout << "type-5 tiling built: edges a = " << tiling.a
            << ", b = " << tiling.b << ", c = " << tiling.c << "\n";
  std::cout << "symmetry " << st::to_string(cls) << " of order "
            << st::order_of(cls) << ", isohedral = "
            << (st::is_isohedral(tiling) ? "true" : "false") << "\n";
  if (!out.empty()) st::write_file(out, doc.serialize());
  if (!mesh.empty()) st::write_file(mesh, st::to_obj(doc, subdiv));
  return kExitOk;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  st::TilingDocument doc;
  try {
    doc = st::TilingDocument::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "parse failure: " << e.what() << "\n";
    return kExitUsage;
  }
  const st::Type5Tiling tiling = st::tiling_from_document(doc);
  const st::ValidationReport rep =
      st::validate_realization(st::builtin(doc.type_id), tiling.tiles);
  std::cout << rep.to_text();
  if (!rep.valid()) {
    std::cout << "verification FAILED\n";
    return kExitInconsistent;
  }
  const auto group = st::symmetry_group(tiling);
  const bool iso = st::is_isohedral(tiling, group);
  std::cout << "symmetry group order " << group.size() << ", isohedral = "
            << (iso ? "true" : "false") << "\n";
  if (!iso) return kExitInconsistent;
  std::cout << "verification passed\n";
  return kExitOk;
}

int run_curves(int type_id, int resolution, const std::string& out,
               const std::string& svg) {
  const st::CurveDocument doc = st::make_curve_document(type_id, resolution);
  std::cout << "type " << type_id << " curves: " << doc.curves_r1.size()
            << " + " << doc.curves_r2.size() << " polylines, "
            << doc.roots.size() << " labeled intersections\n";
  for (const auto& [r, label] : doc.roots)
    std::cout << "  " << label << ": a = " << r.a << ", beta = " << r.beta
              << "  " << st::to_string(r.tag) << "\n";
  if (!out.empty()) st::write_file(out, doc.serialize());
  if (!svg.empty()) st::write_file(svg, st::to_svg(doc));
  return doc.roots.size() == 4 ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spheretile: tilings of the sphere by 12 congruent pentagons"};
  app.require_subcommand(1);

  int type_id = 2, grid_n = 400, resolution = 400, subdiv = 0;
  double tol = 1e-12, beta = 2 * st::kPi / 3, gamma = 2 * st::kPi / 3;
  bool degrees = false;
  std::string out, mesh, svg, path;

  CLI::App* solve = app.add_subcommand(
      "solve", "solve the type-2/3 systems or certify type-1/4 rigidity");
  solve->add_option("--type", type_id, "tiling type (1-4)")
      ->check(CLI::Range(1, 4))
      ->required();
  solve->add_option("--grid", grid_n, "grid resolution")->check(CLI::Range(50, 4000));
  solve->add_option("--tol", tol, "Newton residual tolerance");
  solve->add_option("--out", out, "write roots/certificate to this path");

  CLI::App* build = app.add_subcommand("build", "build a type-5 tiling");
  build->add_option("--beta", beta, "angle beta (radians)")->required();
  build->add_option("--gamma", gamma, "angle gamma (radians)")->required();
  build->add_flag("--degrees", degrees, "interpret input angles as degrees");
  build->add_option("--out", out, "tiling document output path");
  build->add_option("--mesh", mesh, "OBJ mesh output path");
  build->add_option("--subdiv", subdiv, "geodesic subdivision level")
      ->check(CLI::Range(0, 6));

  CLI::App* verify = app.add_subcommand("verify", "verify a tiling document");
  verify->add_option("path", path, "tiling document")->required();

  CLI::App* curves =
      app.add_subcommand("curves", "trace the type-2/3 solution curves");
  curves->add_option("--type", type_id, "tiling type (2 or 3)")
      ->check(CLI::Range(2, 3))
      ->required();
  curves->add_option("--resolution", resolution, "grid resolution")
      ->check(CLI::Range(100, 4000));
  curves->add_option("--out", out, "curve document output path");
  curves->add_option("--svg", svg, "vector rendering output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(type_id, grid_n, tol, out);
    if (build->parsed()) {
      if (degrees) {
        beta *= st::kPi / 180.0;
        gamma *= st::kPi / 180.0;
      }
      return run_build(beta, gamma, out, mesh, subdiv);
    }
    if (verify->parsed()) return run_verify(path);
    if (curves->parsed()) return run_curves(type_id, resolution, out, svg);
  } catch (const st::Type5Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUnrealizable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
