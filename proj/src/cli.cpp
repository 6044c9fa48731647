#include "crystalproj/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "crystalproj/errors.hpp"
#include "crystalproj/scene.hpp"

namespace crystalproj {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string preset;
  std::string param;
  std::string scene_file;
  std::string y0;
  std::string frame = "hexagonal";
  std::string normal;
  std::string offset = "0";
  std::string r2;
  int dim = 0;
  std::string out_dir;
  std::string figure_id;
  int resolution = 0;  // 0: keep the scene's value
  int levels = 0;
  int samples = 1000;
  std::optional<uint64_t> seed;
};

Scene scene_from_options(const Options& o, bool need_shell) {
  Scene s;
  if (!o.scene_file.empty()) {
    std::ifstream in(o.scene_file);
    if (!in)
      throw std::invalid_argument("cannot read scene file '" + o.scene_file + "'");
    Json j = Json::parse(in);
    s = scene_from_json(j);
  }
  if (!o.preset.empty()) {
    s.preset = o.preset;
    s.basis.clear();
  }
  if (!o.param.empty()) s.param = Scalar::parse(o.param);
  if (s.preset.empty() && s.basis.empty())
    throw std::invalid_argument("no lattice given (use --preset or --scene)");
  if (!o.y0.empty()) s.y0 = Scalar::parse(o.y0);
  s.hexagonal_frame = o.frame != "standard";
  if (!o.r2.empty()) s.shell_r2 = Scalar::parse(o.r2);
  if (o.dim > 0) s.shell_dim = o.dim;
  if (need_shell && !s.shell_r2 && !s.shell_dim) s.shell_dim = 0;
  if (o.resolution > 0) s.resolution = o.resolution;
  if (o.levels > 0) s.levels = o.levels;
  if (o.seed) s.seed = *o.seed;
  if (s.resolution < 16) throw std::invalid_argument("resolution must be >= 16");
  if (s.levels < 2) throw std::invalid_argument("levels must be >= 2");
  return s;
}

LatticePtr lattice_from_options(const Options& o) {
  Scene s = scene_from_options(o, false);
  return !s.preset.empty() ? preset_lattice(s.preset, s.param)
                           : make_lattice(s.basis);
}

Json report_envelope(const std::string& query, Json inputs, Json result,
                     Json witnesses, Clock::time_point start) {
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start)
                  .count();
  return Json{{"query", query},
              {"inputs_echo", std::move(inputs)},
              {"result", std::move(result)},
              {"witnesses", std::move(witnesses)},
              {"timings", {{"total_ms", ms}}}};
}

void emit_report(const Json& report, const Options& o, std::ostream& out) {
  out << report.dump(2) << "\n";
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    std::string name = report.at("query").get<std::string>() + ".json";
    std::ofstream f(fs::path(o.out_dir) / name);
    f << report.dump(2) << "\n";
  }
}

Json holohedry_json(const LatticePtr& L) {
  auto H = holohedry(L);
  int rotations = 0;
  std::map<int, int> orders;
  Json elements = Json::array();
  for (const auto& g : H) {
    if (g.is_proper()) ++rotations;
    orders[g.order()] += 1;
    Json m = Json::array();
    for (int i = 0; i < L->dim(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < L->dim(); ++j) row.push_back(g.m(i, j));
      m.push_back(row);
    }
    elements.push_back(m);
  }
  Json hist = Json::object();
  for (auto [k, v] : orders) hist[std::to_string(k)] = v;
  return Json{{"order", H.size()},
              {"rotations", rotations},
              {"order_histogram", hist},
              {"elements", elements}};
}

Vec parse_normal(const std::string& text) {
  std::vector<Scalar> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) parts.push_back(Scalar::parse(token));
  if (parts.size() != 3)
    throw std::invalid_argument("--normal expects three comma-separated scalars");
  return Vec(parts[0], parts[1], parts[2]);
}

int cmd_holohedry(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  LatticePtr L = lattice_from_options(o);
  Json result = holohedry_json(L);
  result["lattice"] = lattice_to_json(*L);
  emit_report(report_envelope("holohedry",
                              Json{{"preset", o.preset}, {"scene", o.scene_file}},
                              result, nullptr, start),
              o, out);
  return 0;
}

int cmd_planes(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  LatticePtr L = lattice_from_options(o);
  Json planes = Json::array();
  for (const auto& p : enumerate_hexagonal_planes(L)) {
    Json gens = Json::array();
    for (const auto& v : p.sublattice) gens.push_back(vec_to_json(v));
    planes.push_back(Json{{"axis", vec_to_json(p.axis)},
                          {"normal", vec_to_json(p.plane.normal)},
                          {"offset", p.plane.offset.str()},
                          {"sublattice", gens}});
  }
  Json result{{"count", planes.size()}, {"planes", planes}};
  emit_report(report_envelope("planes",
                              Json{{"preset", o.preset}, {"scene", o.scene_file}},
                              result, nullptr, start),
              o, out);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  LatticePtr L = lattice_from_options(o);
  Json result, witnesses = Json::array();
  if (!o.normal.empty()) {
    Plane P{parse_normal(o.normal), Scalar::parse(o.offset)};
    auto cls = hexagonal_classifier(L, P);
    result = Json{{"hexagonal", cls.hexagonal}};
    witnesses.push_back(classification_to_json(cls));
  } else {
    auto planes = enumerate_hexagonal_planes(L);
    result = Json{{"projects_to_hexagonal", !planes.empty()},
                  {"plane_count", planes.size()}};
    for (const auto& p : planes)
      witnesses.push_back(classification_to_json(
          hexagonal_classifier(L, p.plane)));
  }
  emit_report(report_envelope("classify",
                              Json{{"preset", o.preset},
                                   {"scene", o.scene_file},
                                   {"normal", o.normal},
                                   {"offset", o.offset}},
                              result, witnesses, start),
              o, out);
  return 0;
}

int cmd_project_group(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scene s = scene_from_options(o, false);
  BuiltScene built = build_scene(s);
  ProjectionReport rep = analyze_projection(built.group, built.y0);
  Json result = projection_report_to_json(rep);
  result["group_lattice"] = lattice_to_json(*built.group.lattice());
  if (rep.lattice_result.rank == built.group.dim() - 1) {
    PlanarGroup P = projected_group(built.group, built.y0);
    result["projected_group"] = planar_group_to_json(P);
  } else {
    result["projected_group"] = nullptr;
  }
  Json witnesses =
      rep.witnesses ? classification_to_json(*rep.witnesses) : Json(nullptr);
  emit_report(report_envelope("project-group",
                              Json{{"preset", o.preset},
                                   {"scene", o.scene_file},
                                   {"y0", built.y0.str()},
                                   {"frame", o.frame}},
                              result, witnesses, start),
              o, out);
  return 0;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scene s = scene_from_options(o, true);
  BuiltScene built = build_scene(s);
  Json result{{"shell_r2", built.shell_r2.str()},
              {"term_count", built.pattern.terms().size()},
              {"pattern", pattern_to_json(built.pattern)}};
  if (!o.y0.empty()) {
    ProjectedPattern p = band_project(built.pattern, built.y0.to_double());
    result["projected"] = projected_pattern_to_json(p);
  }
  emit_report(report_envelope("synthesize",
                              Json{{"preset", o.preset},
                                   {"scene", o.scene_file},
                                   {"r2", o.r2},
                                   {"dim", o.dim}},
                              result, nullptr, start),
              o, out);
  return 0;
}

Json render_scene(const Scene& scene, const Options& o, std::ostream& out,
                  const std::string& query, Clock::time_point start,
                  Json extra_inputs) {
  BuiltScene built = build_scene(scene);
  ProjectedPattern p = band_project(built.pattern, built.y0.to_double());
  RasterImage img = render(p, built.window, scene.resolution, scene.levels);

  fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);
  fs::create_directories(dir);
  std::string filename =
      scene.id + "_" + std::to_string(scene.resolution) + ".pgm";
  write_pgm(img, (dir / filename).string());

  auto [mn, mx] = std::minmax_element(img.samples.begin(), img.samples.end());
  Json result{{"image", (dir / filename).string()},
              {"width", img.width},
              {"height", img.height},
              {"sample_min", *mn},
              {"sample_max", *mx},
              {"window", {{"cx", built.window.cx},
                          {"cy", built.window.cy},
                          {"width", built.window.width},
                          {"height", built.window.height}}},
              {"shell_r2", built.shell_r2.str()},
              {"term_count", built.pattern.terms().size()},
              {"y0", built.y0.str()},
              {"note",
               "window fixed at 2x2 cells of the height-zero sublattice; "
               "shell located by representation dimension"}};
  ProjectionReport rep = analyze_projection(built.group, built.y0);
  result["projection"] = projection_report_to_json(rep);
  Json report = report_envelope(query, std::move(extra_inputs), result,
                                nullptr, start);
  emit_report(report, o, out);
  return report;
}

int cmd_render(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scene s = scene_from_options(o, true);
  if (s.id == "scene") s.id = "render";
  render_scene(s, o, out, "render",
               start, Json{{"preset", o.preset}, {"scene", o.scene_file}});
  return 0;
}

int cmd_figure(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scene s = figure_scene(o.figure_id);
  if (o.resolution > 0) s.resolution = o.resolution;
  if (o.levels > 0) s.levels = o.levels;
  render_scene(s, o, out, "figure", start, Json{{"id", o.figure_id}});
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Options local = o;
  if (local.preset.empty() && local.scene_file.empty()) local.preset = "cubic";
  Scene s = scene_from_options(local, true);
  BuiltScene built = build_scene(s);
  const SpaceGroup& G = built.group;
  uint64_t seed = o.seed.value_or(2026);

  // Depth classes of the worked example: a generic width plus the three
  // classes with lattice points at heights k/sqrt6-like steps. For presets
  // other than the cubic frame the analogous widths come from the axis step.
  std::vector<Scalar> widths;
  if (!o.y0.empty()) {
    widths.push_back(Scalar::parse(o.y0));
  } else {
    Scalar step = axis_step(*G.lattice());
    widths = {step / Scalar(6), step / Scalar(3),
              Scalar(Rational(2, 3)) * step, step};
  }

  bool all_ok = true;
  Json checks = Json::array();
  auto record = [&](const std::string& name, double value, double bound,
                    bool upper) {
    bool ok = upper ? value <= bound : value >= bound;
    all_ok = all_ok && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << value
        << (upper ? " <= " : " >= ") << bound << "\n";
    checks.push_back(Json{{"name", name}, {"value", value}, {"ok", ok}});
  };

  for (const auto& y0 : widths) {
    ProjectedPattern p = band_project(built.pattern, y0.to_double());
    PlanarGroup P = projected_group(G, y0);
    double worst = 0;
    for (const auto& r : P.reps())
      worst = std::max(worst, verify_invariance(p, r, o.samples, seed));
    record("generators invariant at y0=" + y0.str(), worst, 1e-9, true);

    // Where the sixfold rotation is absent or glide-coupled, its pure form
    // must fail.
    const PlanarIsometry* six = nullptr;
    for (const auto& r : P.reps())
      if (!(r.alpha == Mat::identity(2)) &&
          (r.alpha * r.alpha * r.alpha == Scalar(-1) * Mat::identity(2)) &&
          r.alpha.det() == Scalar(1))
        six = &r;
    if (six == nullptr || !six->t.is_zero()) {
      PlanarIsometry pure{Vec::zero(2), six ? six->alpha : Mat(2)};
      if (six == nullptr) {
        // Build the 60-degree rotation explicitly.
        Mat m(2);
        m(0, 0) = Scalar(Rational(1, 2));
        m(0, 1) = Scalar::sqrt3(Rational(-1, 2));
        m(1, 0) = Scalar::sqrt3(Rational(1, 2));
        m(1, 1) = Scalar(Rational(1, 2));
        pure.alpha = m;
      }
      double amplitude = 0;
      for (const auto& t : p.terms()) amplitude += std::abs(t.z);
      if (amplitude > 1e-9)
        record("pure sixfold fails at y0=" + y0.str(),
               verify_invariance(p, pure, o.samples, seed), 1e-3, false);
    }
  }

  emit_report(report_envelope("verify",
                              Json{{"preset", local.preset},
                                   {"samples", o.samples},
                                   {"seed", seed}},
                              Json{{"all_ok", all_ok}, {"checks", checks}},
                              nullptr, start),
              o, out);
  return all_ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{
      "crystalproj: hexagonal projected symmetries of crystallographic "
      "patterns"};
  app.name("crystalproj");
  Options o;

  auto add_common = [&](CLI::App* cmd, bool with_render) {
    cmd->add_option("--preset", o.preset,
                    "lattice preset (cubic, bcc, fcc, hexagonal, "
                    "rhombohedral, tetragonal, orthorhombic, triclinic)");
    cmd->add_option("--param", o.param,
                    "preset parameter (c for hexagonal/tetragonal, a for "
                    "rhombohedral), exact scalar text");
    cmd->add_option("--scene", o.scene_file, "scene JSON file");
    cmd->add_option("--out", o.out_dir, "output directory for reports/images");
    if (with_render) {
      cmd->add_option("--resolution", o.resolution, "pixels across the window");
      cmd->add_option("--levels", o.levels, "contour levels");
    }
  };

  CLI::App* holo = app.add_subcommand("holohedry", "lattice point symmetry group");
  add_common(holo, false);

  CLI::App* classify = app.add_subcommand(
      "classify", "does the lattice project to a hexagonal plane lattice?");
  add_common(classify, false);
  classify->add_option("--normal", o.normal,
                       "plane normal as three comma-separated scalars");
  classify->add_option("--offset", o.offset, "plane offset (scalar text)");

  CLI::App* planes =
      app.add_subcommand("planes", "hexagonal projection planes of the lattice");
  add_common(planes, false);

  CLI::App* pg = app.add_subcommand(
      "project-group", "symmetry group of band projections at width y0");
  add_common(pg, false);
  pg->add_option("--y0", o.y0, "band width (exact scalar text)")->required();
  pg->add_option("--frame", o.frame, "hexagonal (default) or standard");

  CLI::App* synth = app.add_subcommand(
      "synthesize", "invariant pattern from a dual-lattice shell");
  add_common(synth, false);
  synth->add_option("--r2", o.r2, "squared wave number (scalar text)");
  synth->add_option("--dim", o.dim, "representation dimension (shell size)");
  synth->add_option("--y0", o.y0, "also project at this band width");
  synth->add_option("--frame", o.frame, "hexagonal (default) or standard");

  CLI::App* render = app.add_subcommand("render", "contour plot of a projection");
  add_common(render, true);
  render->add_option("--y0", o.y0, "band width (exact scalar text)");
  render->add_option("--r2", o.r2, "squared wave number");
  render->add_option("--dim", o.dim, "representation dimension");
  render->add_option("--frame", o.frame, "hexagonal (default) or standard");
  render->add_option("--seed", o.seed, "sampling seed");

  CLI::App* verify = app.add_subcommand(
      "verify", "check projected-symmetry certificates numerically");
  add_common(verify, false);
  verify->add_option("--y0", o.y0, "single band width to check");
  verify->add_option("--samples", o.samples, "sample count per check");
  verify->add_option("--seed", o.seed, "sampling seed");

  CLI::App* figure = app.add_subcommand("figure", "reproduce a figure panel");
  figure->add_option("--id", o.figure_id, "figure id: 1a..1d, 2a..2d, 3a..3d, 4a, 4b")
      ->required();
  figure->add_option("--out", o.out_dir, "output directory");
  figure->add_option("--resolution", o.resolution, "pixels across the window");
  figure->add_option("--levels", o.levels, "contour levels");

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    if (holo->parsed()) return cmd_holohedry(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (planes->parsed()) return cmd_planes(o, out);
    if (pg->parsed()) return cmd_project_group(o, out);
    if (synth->parsed()) return cmd_synthesize(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (figure->parsed()) return cmd_figure(o, out);
  } catch (const ComputeError& e) {
    err << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 64;
}

}  // namespace crystalproj
