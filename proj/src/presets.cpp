#include "crystalproj/presets.hpp"

#include <stdexcept>

namespace crystalproj {

namespace {

Scalar rat(long long n, long long d = 1) {
  return Scalar(Rational(BigInt(n), BigInt(d)));
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"cubic",      "bcc",          "fcc",       "hexagonal",
          "rhombohedral", "tetragonal", "orthorhombic", "triclinic"};
}

LatticePtr preset_lattice(const std::string& name,
                          const std::optional<Scalar>& param) {
  if (name == "cubic")
    return make_lattice({Vec(rat(1), rat(0), rat(0)),
                         Vec(rat(0), rat(1), rat(0)),
                         Vec(rat(0), rat(0), rat(1))});
  if (name == "bcc")
    return make_lattice({Vec(rat(1), rat(0), rat(0)),
                         Vec(rat(0), rat(1), rat(0)),
                         Vec(rat(1, 2), rat(1, 2), rat(1, 2))});
  if (name == "fcc")
    return make_lattice({Vec(rat(0), rat(1, 2), rat(1, 2)),
                         Vec(rat(1, 2), rat(0), rat(1, 2)),
                         Vec(rat(1, 2), rat(1, 2), rat(0))});
  if (name == "hexagonal") {
    Scalar c = param.value_or(rat(2));
    if (c.is_zero() || c == rat(1) || c == rat(-1))
      throw std::invalid_argument("hexagonal preset needs c != 0, +-1");
    return make_lattice({Vec(rat(1), rat(0), rat(0)),
                         Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 2)), rat(0)),
                         Vec(rat(0), rat(0), c)});
  }
  if (name == "rhombohedral") {
    Scalar a = param.value_or(rat(2));
    if (a.is_zero())
      throw std::invalid_argument("rhombohedral preset needs a != 0");
    return make_lattice(
        {Vec(rat(1), rat(0), rat(0)),
         Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 2)), rat(0)),
         Vec(rat(-1, 2), Scalar::sqrt3(Rational(1, 6)), a / rat(3))});
  }
  if (name == "tetragonal") {
    Scalar c = param.value_or(rat(2));
    return make_lattice({Vec(rat(1), rat(0), rat(0)),
                         Vec(rat(0), rat(1), rat(0)),
                         Vec(rat(0), rat(0), c)});
  }
  if (name == "orthorhombic")
    return make_lattice({Vec(rat(1), rat(0), rat(0)),
                         Vec(rat(0), rat(3, 2), rat(0)),
                         Vec(rat(0), rat(0), rat(2))});
  if (name == "triclinic")
    return make_lattice({Vec(rat(1), rat(0), rat(0)),
                         Vec(rat(1, 6), rat(1), rat(0)),
                         Vec(rat(1, 7), rat(1, 5), rat(1))});
  throw std::invalid_argument("unknown preset '" + name + "'");
}

ProjectionFrame figure_frame(const std::string& name,
                             const std::optional<Scalar>& param) {
  LatticePtr L = preset_lattice(name, param);
  SpaceGroup G = SpaceGroup::symmorphic_holohedral(L);
  if (name == "hexagonal" || name == "rhombohedral") {
    // Already aligned: threefold along z, unit hexagonal sublattice in z = 0.
    return {std::move(G), Mat::identity(3), Scalar(1),
            Vec(rat(1), rat(0), rat(0))};
  }
  Plane p1{Vec(rat(1), rat(1), rat(-1)), rat(0)};  // z = x + y
  return hexagonal_frame(G, p1);
}

const std::vector<FigureScene>& figure_scenes() {
  static const std::vector<FigureScene> scenes = {
      {"1a", "cubic", "1/12*r6", 6},       {"1b", "cubic", "1/6*r6", 6},
      {"1c", "cubic", "1/3*r6", 6},        {"1d", "cubic", "1/2*r6", 6},
      {"2a", "bcc", "1/12*r6", 12},        {"2b", "bcc", "1/6*r6", 12},
      {"2c", "bcc", "1/4*r6", 12},         {"2d", "bcc", "1/3*r6", 12},
      {"3a", "rhombohedral", "1/3", 6},    {"3b", "rhombohedral", "2/3", 6},
      {"3c", "rhombohedral", "4/3", 6},    {"3d", "rhombohedral", "2", 6},
      {"4a", "hexagonal", "1", 12},        {"4b", "hexagonal", "2", 12},
  };
  return scenes;
}

}  // namespace crystalproj
