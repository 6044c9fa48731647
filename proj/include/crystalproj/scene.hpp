#pragma once
// Scene descriptions for the CLI: lattice (preset or explicit basis), group
// (holohedral or explicit representatives), band width, shell selection and
// render parameters, plus JSON encodings of every domain object that crosses
// the command-line boundary. Scalars travel as exact text.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crystalproj/pattern.hpp"
#include "crystalproj/presets.hpp"
#include "crystalproj/raster.hpp"

namespace crystalproj {

using Json = nlohmann::json;

struct Scene {
  // Lattice: a preset name, or an explicit basis.
  std::string preset;
  std::optional<Scalar> param;
  std::vector<Vec> basis;

  // Group: full holohedry by default, or explicit representatives.
  struct RepSpec {
    Vec t;
    std::array<std::array<int64_t, 3>, 3> m{};
  };
  bool holohedral = true;
  std::vector<RepSpec> reps;

  // "hexagonal": rotate/scale onto the hexagonal projection frame first;
  // "standard": project along z as given.
  bool hexagonal_frame = true;

  Scalar y0 = Scalar(1);
  std::optional<Scalar> shell_r2;
  std::optional<int> shell_dim;

  RenderWindow window;
  bool window_auto = true;
  int resolution = 512;
  int levels = 12;
  uint64_t seed = 2026;
  std::string id = "scene";
};

Scene scene_from_json(const Json& j);
Json scene_to_json(const Scene& s);
Scene figure_scene(const std::string& figure_id);

// Scene resolved into working objects.
struct BuiltScene {
  SpaceGroup group;  // in the requested frame
  Scalar y0;
  Scalar shell_r2;
  InvariantPattern pattern;
  RenderWindow window;
};
BuiltScene build_scene(const Scene& s);

// JSON encodings (bases and translations as exact scalar strings).
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json lattice_to_json(const Lattice& L);
LatticePtr lattice_from_json(const Json& j);
Json spacegroup_to_json(const SpaceGroup& G);
Json planar_group_to_json(const PlanarGroup& P);
Json pattern_to_json(const InvariantPattern& p);
Json projected_pattern_to_json(const ProjectedPattern& p);
Json classification_to_json(const PlaneClassification& c);
Json projection_report_to_json(const ProjectionReport& r);

}  // namespace crystalproj
