#pragma once
// Bravais lattice presets and the figure catalog. The five positive presets
// (primitive cubic, body-centred cubic, face-centred cubic, hexagonal,
// rhombohedral) project onto hexagonal plane lattices; tetragonal,
// orthorhombic and triclinic are negative controls.

#include <optional>
#include <string>
#include <vector>

#include "crystalproj/projection.hpp"

namespace crystalproj {

std::vector<std::string> preset_names();

// Conventional bases in standard orientation. `param` is the height c for
// hexagonal/tetragonal and the parameter a for rhombohedral; defaults are
// c = 2, a = 2.
LatticePtr preset_lattice(const std::string& name,
                          const std::optional<Scalar>& param = {});

// Frame in which the preset's hexagonal sublattice is the unit hexagonal
// lattice inside z = 0: cubic variants are rotated onto the plane z = x + y
// and rescaled; hexagonal/rhombohedral presets are already aligned.
ProjectionFrame figure_frame(const std::string& name,
                             const std::optional<Scalar>& param = {});

struct FigureScene {
  std::string id;       // "1a" ... "4b"
  std::string preset;   // cubic, bcc, rhombohedral, hexagonal
  std::string y0_text;  // exact band width
  int shell_size;       // representation dimension of the pattern
};
const std::vector<FigureScene>& figure_scenes();

}  // namespace crystalproj
