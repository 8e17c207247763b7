// gt42: command line interface to the torus-orbit toolkit for the
// Grassmannian of planes in C^4 and its ambient projective 5-space.
//
// Exit codes: 0 success, 1 failed checks or internal errors, 2 malformed
// input or usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gt42/cp5.hpp"
#include "gt42/io.hpp"
#include "gt42/morse.hpp"
#include "gt42/orbits.hpp"
#include "gt42/random.hpp"
#include "gt42/strata.hpp"
#include "gt42/topo.hpp"
#include "gt42/verify.hpp"

namespace {

using nlohmann::json;
using namespace gt42;

struct GlobalOpts {
  ScalarMode mode = ScalarMode::ComplexF64;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultEps;
  bool json_output = false;
};

template <class F>
int with_scalar(ScalarMode m, F&& f) {
  switch (m) {
    case ScalarMode::RealF64: return f.template operator()<double>();
    case ScalarMode::GaussianRationalExact: return f.template operator()<GaussianRational>();
    case ScalarMode::ComplexF64: break;
  }
  return f.template operator()<Complex>();
}

template <class S>
std::string scalar_text(const S& v) {
  std::ostringstream out;
  if constexpr (std::is_same_v<S, double>) {
    out << v;
  } else if constexpr (std::is_same_v<S, Complex>) {
    out << v.real();
    if (v.imag() != 0) out << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
  } else {
    out << rational_string(v.re);
    if (v.im != 0) {
      const std::string im = rational_string(v.im);
      out << (im[0] == '-' ? "" : "+") << im << "i";
    }
  }
  return out.str();
}

template <class S>
json param_to_json(const ProjectiveParam<S>& p, double tol) {
  if (p.is_infinite(tol)) return "inf";
  return scalar_to_json<S>(p.affine());
}

template <class S>
std::string param_text(const ProjectiveParam<S>& p, double tol) {
  return p.is_infinite(tol) ? "inf" : scalar_text(p.affine());
}

std::string pattern_text(ZeroPattern p) {
  std::string s = "{";
  bool first = true;
  for (int k = 0; k < kNumPairs; ++k)
    if (p[k]) {
      s += (first ? "" : ",") + pair_name(k);
      first = false;
    }
  return s + "}";
}

template <class R>
json moment_row(const MomentPoint<R>& mu) {
  json a = json::array();
  for (int i = 0; i < 4; ++i) {
    if constexpr (std::is_same_v<R, double>)
      a.push_back(mu[i]);
    else
      a.push_back(rational_string(mu[i]));
  }
  return a;
}

// ---------------------------------------------------------------------------
int cmd_verify(const GlobalOpts& g, double sample_scale) {
  RunConfig cfg;
  cfg.mode = g.mode;
  cfg.seed = g.seed;
  cfg.eps = g.tol;
  cfg.sample_scale = sample_scale;
  const VerificationReport rep = run_verification(cfg);
  if (g.json_output)
    std::cout << report_json(rep).dump(2) << "\n";
  else
    std::cout << report_text(rep);
  return rep.failures() == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
int cmd_stratify(const GlobalOpts& g, const std::string& input) {
  return with_scalar(g.mode, [&]<class S>() {
    const Frame<S> f = frame_from_json<S>(load_json_file(input));
    const Stratum s = stratum_of(f, g.tol);
    const auto stab = stabilizer_subtorus(s.polytope.vertices);
    const auto rstab = real_stabilizer(s.polytope.vertices);
    const auto mu = moment_g42(plucker_coordinates(f, g.tol));
    if (g.json_output) {
      json basis = json::array();
      for (const auto& v : stab.basis) basis.push_back(v);
      std::cout << json{{"pattern", pattern_to_json(s.polytope.vertices)},
                        {"name", s.polytope.name()},
                        {"kind", polytope_kind_name(s.polytope.kind)},
                        {"polytope_dim", s.polytope.dim},
                        {"stratum_dim", s.dim_real},
                        {"stabilizer_dim", stab.dim},
                        {"stabilizer_basis", basis},
                        {"real_stabilizer_order", rstab.order},
                        {"moment", moment_row(mu)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "pattern: " << pattern_text(s.polytope.vertices) << "\n"
                << "name: " << s.polytope.name() << "\n"
                << "kind: " << polytope_kind_name(s.polytope.kind) << "\n"
                << "polytope-dim: " << s.polytope.dim << "\n"
                << "stratum-dim: " << s.dim_real << "\n"
                << "stabilizer-dim: " << stab.dim << "\n"
                << "real-stabilizer-order: " << rstab.order << "\n"
                << "moment: " << moment_row(mu).dump() << "\n";
    }
    return 0;
  });
}

// boundary_parameter throws on the open stratum; the CLI reports "any" there.
BoundaryParam boundary_parameter_or_any(const Stratum& s) {
  if (s.polytope.kind == PolytopeKind::Octahedron) return BoundaryParam::Any;
  return boundary_parameter(s);
}

// ---------------------------------------------------------------------------
int cmd_orbit(const GlobalOpts& g, const std::string& input, const std::string& chart_name) {
  return with_scalar(g.mode, [&]<class S>() {
    const Frame<S> f = frame_from_json<S>(load_json_file(input));
    const ZeroPattern pat = nonzero_pattern(plucker_coordinates(f, g.tol), g.tol);
    ChartId chart{0};
    if (!chart_name.empty()) {
      chart = ChartId{parse_pair(chart_name)};
    } else {
      int k = 0;
      while (k < kNumPairs && !pat[k]) ++k;
      if (k == kNumPairs) throw InputError("point lies in no affine chart");
      chart = ChartId{k};
    }
    const auto d = orbit_descriptor(to_chart(f, chart, g.tol), g.tol);
    const Stratum s = stratum_of(f, g.tol);
    const BoundaryParam bp = boundary_parameter_or_any(s);

    const char* kind = d.kind == OrbitKind::Hypersurface ? "hypersurface"
                       : d.kind == OrbitKind::CStar      ? "torus-orbit"
                                                         : "fixed-point";
    json boundary = json::array();
    for (const auto& b : closure_boundary(d)) {
      json item{{"kind", b.kind == OrbitKind::FixedPoint ? "fixed-point" : "torus-orbit"},
                {"indices", b.index_list()},
                {"dim", b.dim_real}};
      boundary.push_back(item);
    }
    json out{{"chart", chart.name()},
             {"kind", kind},
             {"indices", d.index_list()},
             {"orbit_dim", d.dim_real},
             {"stratum", s.polytope.name()},
             {"stratum_limit_parameter", boundary_param_name(bp)},
             {"closure_boundary", boundary}};
    if (d.param) out["parameter"] = param_to_json(*d.param, g.tol);
    if (g.json_output) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "chart: " << chart.name() << "\n"
                << "kind: " << kind << "\n";
      std::cout << "indices: [";
      const auto idx = d.index_list();
      for (size_t i = 0; i < idx.size(); ++i) std::cout << (i ? "," : "") << idx[i];
      std::cout << "]\n"
                << "orbit-dim: " << d.dim_real << "\n";
      if (d.param) std::cout << "parameter: " << param_text(*d.param, g.tol) << "\n";
      std::cout << "stratum: " << s.polytope.name() << "\n"
                << "stratum-limit-parameter: " << boundary_param_name(bp) << "\n"
                << "closure-boundary: " << boundary.dump() << "\n";
    }
    return 0;
  });
}

// ---------------------------------------------------------------------------
int cmd_moment(const GlobalOpts& g, const std::string& input) {
  return with_scalar(g.mode, [&]<class S>() {
    const Frame<S> f = frame_from_json<S>(load_json_file(input));
    const auto mu = moment_g42(plucker_coordinates(f, g.tol));
    MomentPoint<double> md;
    for (int i = 0; i < 4; ++i) {
      if constexpr (ScalarTraits<S>::exact)
        md[i] = mu[i].get_d();
      else
        md[i] = mu[i];
    }
    const double height = morse_value(md);
    if (g.json_output) {
      std::cout << json{{"moment", moment_row(mu)},
                        {"in_hypersimplex", mu.valid(g.tol)},
                        {"height", height}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "moment: " << moment_row(mu).dump() << "\n"
                << "in-hypersimplex: " << (mu.valid(g.tol) ? "yes" : "no") << "\n"
                << "height: " << height << "\n";
    }
    return 0;
  });
}

// ---------------------------------------------------------------------------
int cmd_cp5_stratify(const GlobalOpts& g, const std::string& input) {
  return with_scalar(g.mode, [&]<class S>() {
    const CP5Point<S> z = cp5_from_json<S>(load_json_file(input));
    const auto rep = cp5_stratum(z, g.tol);
    const auto mu = moment_cp5(z);
    json out{{"pattern", pattern_to_json(rep.vertices)},
             {"polytope_dim", rep.polytope_dim},
             {"on_quadric", is_on_plucker_quadric(z, g.tol)},
             {"moment", moment_row(mu)}};
    std::string ptext = "any";
    if (rep.param) {
      json triple = json::array();
      std::string text = "(";
      for (int i = 0; i < 3; ++i) {
        triple.push_back(scalar_to_json<S>(rep.param->c[i]));
        text += (i ? " : " : "") + scalar_text(rep.param->c[i]);
      }
      out["parameter"] = triple;
      ptext = text + ")";
    } else {
      out["parameter"] = "any";
    }
    if (g.json_output) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "pattern: " << pattern_text(rep.vertices) << "\n"
                << "polytope-dim: " << rep.polytope_dim << "\n"
                << "parameter: " << ptext << "\n"
                << "on-quadric: " << (is_on_plucker_quadric(z, g.tol) ? "yes" : "no") << "\n"
                << "moment: " << moment_row(mu).dump() << "\n";
    }
    return 0;
  });
}

// ---------------------------------------------------------------------------
json groups_json(const std::vector<AbelianGroup>& gs) {
  json a = json::array();
  for (const auto& g : gs) a.push_back(group_to_string(g));
  return a;
}

int cmd_homology(const GlobalOpts& g, const std::string& space_name) {
  const ModelSpace space = parse_model_space(space_name);
  const ChainComplex model = build_orbit_space_model(space);
  model.validate();
  const auto direct = cellular_homology(model);
  const auto oracle = orbit_space_join_oracle(space);
  bool agree = true;
  for (size_t i = 0; i < std::max(direct.size(), oracle.size()); ++i) {
    const AbelianGroup a = i < direct.size() ? direct[i] : AbelianGroup{};
    const AbelianGroup b = i < oracle.size() ? oracle[i] : AbelianGroup{};
    agree = agree && a == b;
  }
  if (g.json_output) {
    std::cout << json{{"space", model_space_name(space)},
                      {"cells", model.cells},
                      {"homology", groups_json(direct)},
                      {"join_oracle", groups_json(oracle)},
                      {"agree", agree}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "space: " << model_space_name(space) << "\n"
              << "cells: " << json(model.cells).dump() << "\n";
    for (size_t d = 0; d < direct.size(); ++d)
      std::cout << "H_" << d << ": " << group_to_string(direct[d]) << "\n";
    std::cout << "join-oracle: " << groups_json(oracle).dump() << "\n"
              << "agree: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
int cmd_morse(const GlobalOpts& g, std::vector<double> nu_in) {
  std::array<double, 4> nu = kMorseNu;
  if (!nu_in.empty()) {
    if (nu_in.size() != 4) throw InputError("--nu needs exactly four values");
    for (int i = 0; i < 4; ++i) nu[i] = nu_in[i];
  }
  const MorseReport rep = build_morse_report(nu);
  if (g.json_output) {
    json charts = json::array();
    for (int k = 0; k < kNumPairs; ++k)
      charts.push_back({{"chart", ChartId{k}.name()},
                        {"critical_value", rep.critical_values[k]},
                        {"gradient_norm", rep.origin_grad_norm[k]},
                        {"hessian_pairs", rep.origin_hessian_pairs[k]}});
    std::cout << json{{"nu", rep.nu},
                      {"values_distinct", rep.values_distinct},
                      {"nondegenerate", rep.nondegenerate},
                      {"fixed_points", charts}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "nu: " << json(rep.nu).dump() << "\n"
              << "values-distinct: " << (rep.values_distinct ? "yes" : "no") << "\n"
              << "nondegenerate: " << (rep.nondegenerate ? "yes" : "no") << "\n";
    for (int k = 0; k < kNumPairs; ++k) {
      std::cout << ChartId{k}.name() << ": value " << rep.critical_values[k] << ", |grad| "
                << rep.origin_grad_norm[k] << ", hessian pairs "
                << json(rep.origin_hessian_pairs[k]).dump() << "\n";
    }
  }
  return (rep.values_distinct && rep.nondegenerate) ? 0 : 1;
}

// ---------------------------------------------------------------------------
int cmd_lattice(const GlobalOpts& g) {
  const StrataLattice& L = strata_lattice();
  auto node_name = [&L](int i) {
    return L.nodes[i].empty ? std::string("empty") : L.nodes[i].polytope.name();
  };
  if (g.json_output) {
    json nodes = json::array();
    for (size_t i = 0; i < L.nodes.size(); ++i) {
      const auto& n = L.nodes[i];
      json covers = json::array();
      for (int up : n.covers) covers.push_back(node_name(up));
      json item{{"name", node_name(int(i))}, {"covers", covers}};
      if (!n.empty) {
        item["pattern"] = pattern_to_json(n.polytope.vertices);
        item["kind"] = polytope_kind_name(n.polytope.kind);
        item["stratum_dim"] = stratum_dimension(n.polytope);
      }
      nodes.push_back(item);
    }
    std::cout << json{{"nodes", nodes}}.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < L.nodes.size(); ++i) {
      const auto& n = L.nodes[i];
      std::cout << node_name(int(i));
      if (!n.empty) std::cout << " " << pattern_text(n.polytope.vertices);
      std::cout << " -> ";
      for (size_t j = 0; j < n.covers.size(); ++j)
        std::cout << (j ? ", " : "") << node_name(n.covers[j]);
      if (n.covers.empty()) std::cout << "(top)";
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Isometric coordinates for the moment octahedron: with u, v, w the three
// orthonormal in-plane functionals, vertices land on (0,0,±1) and
// (±1/√2, ±1/√2, 0).
std::array<double, 3> octa_xyz(int k) {
  const auto d = delta(k);
  const double u = (d[0] - d[1] + d[2] - d[3]) / 2.0;
  const double v = (d[0] - d[1] - d[2] + d[3]) / 2.0;
  const double w = (d[0] + d[1] - d[2] - d[3]) / 2.0;
  const double r = std::sqrt(0.5);
  return {(u + v) * r, (u - v) * r, w};
}

int cmd_export_polytope(const GlobalOpts& g, const std::string& format, const std::string& out_path) {
  std::ostringstream out;
  const auto facets = Hypersimplex::facets();
  const auto edges = Hypersimplex::edges();
  if (format == "off") {
    out << "OFF\n" << kNumPairs << " " << facets.size() << " " << edges.size() << "\n";
    for (int k = 0; k < kNumPairs; ++k) {
      const auto p = octa_xyz(k);
      out << p[0] << " " << p[1] << " " << p[2] << "\n";
    }
    for (const auto& f : facets) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
  } else if (format == "csv") {
    out << "pair,x,y,z,m1,m2,m3,m4\n";
    for (int k = 0; k < kNumPairs; ++k) {
      const auto p = octa_xyz(k);
      const auto d = delta(k);
      out << pair_name(k) << "," << p[0] << "," << p[1] << "," << p[2] << "," << d[0] << ","
          << d[1] << "," << d[2] << "," << d[3] << "\n";
    }
  } else if (format == "json") {
    json verts = json::array();
    for (int k = 0; k < kNumPairs; ++k) {
      const auto p = octa_xyz(k);
      verts.push_back({{"pair", pair_name(k)}, {"moment", delta(k)}, {"xyz", p}});
    }
    json ej = json::array();
    for (const auto& e : edges) ej.push_back({pair_name(e[0]), pair_name(e[1])});
    json fj = json::array();
    for (const auto& f : facets) fj.push_back({pair_name(f[0]), pair_name(f[1]), pair_name(f[2])});
    out << json{{"vertices", verts}, {"edges", ej}, {"facets", fj}}.dump(2) << "\n";
  } else {
    throw InputError("unknown export format: '" + format + "' (use off, csv, or json)");
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path);
    if (!file) throw InputError("cannot open output file: " + out_path);
    file << out.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
int cmd_complex(const GlobalOpts& g, bool with_main, const std::string& format) {
  const AdmissibleComplex cx = build_admissible_complex(with_main);
  if (format == "dot") {
    std::cout << "digraph admissible_complex {\n  rankdir=BT;\n";
    for (size_t i = 0; i < cx.cells.size(); ++i)
      std::cout << "  \"" << cx.cells[i].name() << "\" [label=\"" << cx.cells[i].name()
                << "\\ndim " << cx.cells[i].dim << " chi " << cx.chi[i].dim << "\"];\n";
    for (size_t i = 0; i < cx.cells.size(); ++i)
      for (int f : cx.facets[i])
        std::cout << "  \"" << cx.cells[f].name() << "\" -> \"" << cx.cells[i].name() << "\";\n";
    std::cout << "}\n";
    return 0;
  }
  if (format != "json") throw InputError("unknown complex format: '" + format + "' (use json or dot)");
  json cells = json::array();
  for (size_t i = 0; i < cx.cells.size(); ++i) {
    json facets = json::array();
    for (int f : cx.facets[i]) facets.push_back(cx.cells[f].name());
    cells.push_back({{"name", cx.cells[i].name()},
                     {"pattern", pattern_to_json(cx.cells[i].vertices)},
                     {"dim", cx.cells[i].dim},
                     {"stabilizer_dim", cx.chi[i].dim},
                     {"facets", facets}});
  }
  json counts = json::array();
  for (int d = 0; d < 4; ++d) counts.push_back(cx.cell_count(d));
  std::cout << json{{"with_open_cell", with_main}, {"cell_counts", counts}, {"cells", cells}}.dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torus-orbit toolkit for the Grassmannian of planes in C^4"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::string scalar_name = "complex-f64";
  app.add_option("--scalar", scalar_name, "scalar mode: complex-f64, real-f64, gaussian-rational")
      ->envname("GT_SCALAR")
      ->check(CLI::IsMember({"complex-f64", "real-f64", "gaussian-rational"}));
  app.add_option("--seed", g.seed, "random seed")->envname("GT_SEED");
  app.add_option("--tol", g.tol, "relative zero tolerance")->envname("GT_TOL");
  app.add_flag("--json", g.json_output, "machine-readable JSON output");

  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  double sample_scale = 1.0;
  verify->add_option("--sample-scale", sample_scale, "scale factor on sample counts");

  auto* stratify = app.add_subcommand("stratify", "classify the stratum of a frame");
  std::string stratify_input = "-";
  stratify->add_option("input", stratify_input, "JSON file with a 4x2 frame ('-' = stdin)");

  auto* orbit = app.add_subcommand("orbit", "describe the chart orbit of a frame");
  std::string orbit_input = "-";
  std::string orbit_chart;
  orbit->add_option("input", orbit_input, "JSON file with a 4x2 frame ('-' = stdin)");
  orbit->add_option("--chart", orbit_chart, "chart pair, e.g. 12 (default: first available)");

  auto* moment = app.add_subcommand("moment", "moment image of a frame");
  std::string moment_input = "-";
  moment->add_option("input", moment_input, "JSON file with a 4x2 frame ('-' = stdin)");

  auto* cp5 = app.add_subcommand("cp5-stratify", "classify the ambient stratum of a projective point");
  std::string cp5_input = "-";
  cp5->add_option("input", cp5_input, "JSON file with 6 homogeneous coordinates ('-' = stdin)");

  auto* homology = app.add_subcommand("homology", "orbit-space cell model and homology groups");
  std::string space = "g42";
  homology->add_option("space", space, "model space: g42, cp5, g42r, rp5")->required();

  auto* morse = app.add_subcommand("morse-check", "fixed points of the moment height function");
  std::vector<double> nu_in;
  morse->add_option("--nu", nu_in, "four weight values (default 1 2 4 8)")->expected(4);

  auto* lattice = app.add_subcommand("lattice", "closure order of the strata");

  auto* expoly = app.add_subcommand("export-polytope", "export the moment octahedron geometry");
  std::string format = "json";
  std::string out_path;
  expoly->add_option("--format", format, "off, csv, or json")->capture_default_str();
  expoly->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* complex_cmd = app.add_subcommand("complex", "cell complex of admissible strata");
  bool no_main = false;
  std::string cx_format = "json";
  complex_cmd->add_flag("--no-main", no_main, "drop the top-dimensional open cell");
  complex_cmd->add_option("--format", cx_format, "json or dot")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    g.mode = parse_scalar_mode(scalar_name);
    if (verify->parsed()) return cmd_verify(g, sample_scale);
    if (stratify->parsed()) return cmd_stratify(g, stratify_input);
    if (orbit->parsed()) return cmd_orbit(g, orbit_input, orbit_chart);
    if (moment->parsed()) return cmd_moment(g, moment_input);
    if (cp5->parsed()) return cmd_cp5_stratify(g, cp5_input);
    if (homology->parsed()) return cmd_homology(g, space);
    if (morse->parsed()) return cmd_morse(g, nu_in);
    if (lattice->parsed()) return cmd_lattice(g);
    if (expoly->parsed()) return cmd_export_polytope(g, format, out_path);
    if (complex_cmd->parsed()) return cmd_complex(g, !no_main, cx_format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
