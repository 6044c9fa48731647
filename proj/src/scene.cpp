#include "crystalproj/scene.hpp"

#include <stdexcept>

#include "crystalproj/errors.hpp"

namespace crystalproj {

namespace {

Vec parse_vec(const Json& arr) {
  if (!arr.is_array() || arr.empty() || arr.size() > 3)
    throw std::invalid_argument("vector must be an array of 1..3 scalars");
  Vec v(static_cast<int>(arr.size()));
  for (size_t i = 0; i < arr.size(); ++i)
    v[static_cast<int>(i)] = Scalar::parse(arr[i].get<std::string>());
  return v;
}

}  // namespace

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim; ++i) arr.push_back(v[i].str());
  return arr;
}

Vec vec_from_json(const Json& j) { return parse_vec(j); }

Json lattice_to_json(const Lattice& L) {
  Json basis = Json::array();
  for (int i = 0; i < L.dim(); ++i) basis.push_back(vec_to_json(L.basis(i)));
  return Json{{"dim", L.dim()}, {"basis", basis}};
}

LatticePtr lattice_from_json(const Json& j) {
  std::vector<Vec> basis;
  for (const auto& row : j.at("basis")) basis.push_back(parse_vec(row));
  return make_lattice(std::move(basis));
}

Json spacegroup_to_json(const SpaceGroup& G) {
  Json reps = Json::array();
  for (const auto& r : G.reps()) {
    Json m = Json::array();
    for (int i = 0; i < G.dim(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < G.dim(); ++k) row.push_back(r.p.m(i, k));
      m.push_back(row);
    }
    reps.push_back(Json{{"t", vec_to_json(r.t)}, {"m", m}});
  }
  return Json{{"lattice", lattice_to_json(*G.lattice())}, {"reps", reps}};
}

Json planar_group_to_json(const PlanarGroup& P) {
  Json reps = Json::array();
  for (const auto& r : P.reps()) {
    Json alpha = Json::array();
    for (int i = 0; i < r.alpha.dim; ++i) {
      Json row = Json::array();
      for (int k = 0; k < r.alpha.dim; ++k) row.push_back(r.alpha(i, k).str());
      alpha.push_back(row);
    }
    reps.push_back(Json{{"t", vec_to_json(r.t)}, {"alpha", alpha}});
  }
  return Json{{"lattice", lattice_to_json(*P.lattice())}, {"reps", reps}};
}

namespace {

Json terms_to_json(const Lattice& index_lattice,
                   const std::vector<WaveTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) {
    auto coords = index_lattice.member(t.k);
    Json k = Json::array();
    if (coords) {
      for (const auto& c : *coords) k.push_back(c.convert_to<long long>());
    } else {
      k = vec_to_json(t.k);  // fallback: exact Cartesian strings
    }
    arr.push_back(Json{{"k", k},
                       {"cartesian", vec_to_json(t.k)},
                       {"re", t.z.real()},
                       {"im", t.z.imag()}});
  }
  return arr;
}

}  // namespace

Json pattern_to_json(const InvariantPattern& p) {
  Lattice d = dual(*p.lattice());
  return Json{{"lattice", lattice_to_json(*p.lattice())},
              {"dual", lattice_to_json(d)},
              {"terms", terms_to_json(d, p.terms())}};
}

Json projected_pattern_to_json(const ProjectedPattern& p) {
  Lattice d = dual(*p.lattice());
  return Json{{"lattice", lattice_to_json(*p.lattice())},
              {"terms", terms_to_json(d, p.terms())}};
}

Json classification_to_json(const PlaneClassification& c) {
  Json j{{"hexagonal", c.hexagonal},
         {"has_two_points", c.has_two_points},
         {"plane",
          {{"normal", vec_to_json(c.plane.normal)},
           {"offset", c.plane.offset.str()}}}};
  if (c.threefold) {
    Json m = Json::array();
    for (int i = 0; i < 3; ++i) {
      Json row = Json::array();
      for (int k = 0; k < 3; ++k) row.push_back(c.threefold->m(i, k));
      m.push_back(row);
    }
    j["threefold"] = m;
    j["axis"] = vec_to_json(rotation_axis(*c.threefold));
  }
  if (!c.sublattice.empty()) {
    Json g = Json::array();
    for (const auto& v : c.sublattice) g.push_back(vec_to_json(v));
    j["sublattice"] = g;
  }
  return j;
}

Json projection_report_to_json(const ProjectionReport& r) {
  Json basis = Json::array();
  for (const auto& v : r.lattice_result.basis) basis.push_back(vec_to_json(v));
  Json trace = Json::array();
  for (int tag : r.lattice_result.condition_trace) trace.push_back(tag_name(tag));
  Json j{{"projected_lattice",
          {{"rank", r.lattice_result.rank}, {"basis", basis}}},
         {"condition_trace", trace},
         {"hexagonal", r.hexagonal}};
  if (r.compatibility_r)
    j["rationally_compatible_r"] = r.compatibility_r->convert_to<long long>();
  j["band_width_dichotomy"] = {
      {"axis_step_in_lattice", r.prop_rational.axis_step_in_lattice},
      {"axis_step_rational", r.prop_rational.axis_step_rational},
      {"compatible", r.prop_rational.compatible}};
  if (r.witnesses) j["witnesses"] = classification_to_json(*r.witnesses);
  if (r.hypothesis_verified) j["hypothesis_verified"] = *r.hypothesis_verified;
  return j;
}

Scene scene_from_json(const Json& j) {
  Scene s;
  const Json& lat = j.at("lattice");
  if (lat.contains("preset")) {
    s.preset = lat.at("preset").get<std::string>();
    if (lat.contains("param"))
      s.param = Scalar::parse(lat.at("param").get<std::string>());
  } else {
    for (const auto& row : lat.at("basis")) s.basis.push_back(parse_vec(row));
  }
  if (j.contains("group")) {
    const Json& g = j.at("group");
    if (g.is_string()) {
      if (g.get<std::string>() != "holohedral")
        throw std::invalid_argument("group must be 'holohedral' or explicit reps");
    } else {
      s.holohedral = false;
      for (const auto& rep : g.at("reps")) {
        Scene::RepSpec rs;
        rs.t = parse_vec(rep.at("t"));
        const Json& m = rep.at("m");
        for (size_t i = 0; i < m.size(); ++i)
          for (size_t k = 0; k < m[i].size(); ++k)
            rs.m[i][k] = m[i][k].get<int64_t>();
        s.reps.push_back(rs);
      }
    }
  }
  if (j.contains("frame"))
    s.hexagonal_frame = j.at("frame").get<std::string>() != "standard";
  if (j.contains("y0")) s.y0 = Scalar::parse(j.at("y0").get<std::string>());
  if (j.contains("shell")) {
    const Json& sh = j.at("shell");
    if (sh.contains("r2")) s.shell_r2 = Scalar::parse(sh.at("r2").get<std::string>());
    if (sh.contains("dim")) s.shell_dim = sh.at("dim").get<int>();
  }
  if (j.contains("window")) {
    const Json& w = j.at("window");
    s.window_auto = false;
    if (w.contains("center")) {
      s.window.cx = w.at("center")[0].get<double>();
      s.window.cy = w.at("center")[1].get<double>();
    }
    s.window.width = w.at("width").get<double>();
    s.window.height = w.at("height").get<double>();
  }
  if (j.contains("resolution")) s.resolution = j.at("resolution").get<int>();
  if (j.contains("levels")) s.levels = j.at("levels").get<int>();
  if (j.contains("seed")) s.seed = j.at("seed").get<uint64_t>();
  if (j.contains("id")) s.id = j.at("id").get<std::string>();
  if (s.resolution < 16) throw std::invalid_argument("resolution must be >= 16");
  if (s.levels < 2) throw std::invalid_argument("levels must be >= 2");
  return s;
}

Json scene_to_json(const Scene& s) {
  Json j;
  if (!s.preset.empty()) {
    j["lattice"] = Json{{"preset", s.preset}};
    if (s.param) j["lattice"]["param"] = s.param->str();
  } else {
    Json basis = Json::array();
    for (const auto& v : s.basis) basis.push_back(vec_to_json(v));
    j["lattice"] = Json{{"basis", basis}};
  }
  if (s.holohedral) {
    j["group"] = "holohedral";
  } else {
    Json reps = Json::array();
    for (const auto& r : s.reps) {
      Json m = Json::array();
      for (int i = 0; i < r.t.dim; ++i) {
        Json row = Json::array();
        for (int k = 0; k < r.t.dim; ++k) row.push_back(r.m[i][k]);
        m.push_back(row);
      }
      reps.push_back(Json{{"t", vec_to_json(r.t)}, {"m", m}});
    }
    j["group"] = Json{{"reps", reps}};
  }
  j["frame"] = s.hexagonal_frame ? "hexagonal" : "standard";
  j["y0"] = s.y0.str();
  if (s.shell_r2) j["shell"] = Json{{"r2", s.shell_r2->str()}};
  else if (s.shell_dim) j["shell"] = Json{{"dim", *s.shell_dim}};
  if (!s.window_auto)
    j["window"] = Json{{"center", {s.window.cx, s.window.cy}},
                       {"width", s.window.width},
                       {"height", s.window.height}};
  j["resolution"] = s.resolution;
  j["levels"] = s.levels;
  j["seed"] = s.seed;
  j["id"] = s.id;
  return j;
}

Scene figure_scene(const std::string& figure_id) {
  for (const auto& f : figure_scenes()) {
    if (f.id != figure_id) continue;
    Scene s;
    s.preset = f.preset;
    s.y0 = Scalar::parse(f.y0_text);
    s.shell_dim = f.shell_size;
    s.id = "fig" + f.id;
    return s;
  }
  throw std::invalid_argument("unknown figure id '" + figure_id +
                              "' (expected 1a..1d, 2a..2d, 3a..3d, 4a, 4b)");
}

BuiltScene build_scene(const Scene& s) {
  if (s.y0.sign() <= 0)
    throw std::invalid_argument("band width y0 must be positive");

  // Group in the requested frame.
  std::optional<SpaceGroup> group;
  if (!s.preset.empty() && s.holohedral && s.hexagonal_frame) {
    group = figure_frame(s.preset, s.param).group;
  } else {
    LatticePtr L = !s.preset.empty() ? preset_lattice(s.preset, s.param)
                                     : make_lattice(s.basis);
    if (s.holohedral) {
      group = SpaceGroup::symmorphic_holohedral(L);
    } else {
      std::vector<Isometry> reps;
      for (const auto& r : s.reps) reps.push_back({r.t, PointIsometry(L, r.m)});
      group = SpaceGroup(L, std::move(reps));
    }
    if (s.hexagonal_frame) {
      auto planes = enumerate_hexagonal_planes(group->lattice());
      if (planes.empty())
        throw HypothesisNotMet("lattice has no hexagonal projection plane");
      *group = hexagonal_frame(*group, planes.front().plane).group;
    }
  }

  Lattice d = dual(*group->lattice());
  Scalar r2 = s.shell_r2 ? *s.shell_r2
                         : locate_shell_r2(d, s.shell_dim.value_or(0));
  InvariantPattern pattern = synthesize_shell(group->lattice(), r2);

  RenderWindow window = s.window;
  if (s.window_auto) {
    auto slice0 = lattice_fixed_last(*group->lattice(), Scalar(0));
    std::vector<Vec> gens;
    for (const auto& k : slice0.kernel)
      gens.push_back(group->lattice()->from_coordinates(k).horizontal());
    if (gens.size() == 2) {
      gauss_reduce(gens[0], gens[1]);
      window.cx = window.cy = 0;
      window.width = 2 * std::sqrt(norm2(gens[0]).to_double());
      window.height = 2 * std::sqrt(norm2(gens[1]).to_double());
    }
  }
  return {*group, s.y0, r2, pattern, window};
}

}  // namespace crystalproj
