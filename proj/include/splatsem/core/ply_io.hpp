// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "splatsem/core/types.hpp"

namespace splatsem::core {

// Storage domain of a 3DGS PLY file. Raw follows the de-facto export
// convention: log-scale and logit-opacity; Activated stores scale/opacity
// directly (what this library keeps in memory).
enum class PlyDomain { Raw, Activated };

// Binary little-endian PLY with per-vertex float attributes
// x,y,z, scale_0..2, rot_0..3, opacity, f_dc_0..2, f_rest_0..44.
// Unknown extra attributes are skipped. Quaternions are normalized on load;
// ones already unit within tolerance keep their bits, so an
// Activated save -> load round-trip is bit-exact.
GaussianScene load_scene_ply(const std::string& path, PlyDomain domain);

void save_scene_ply(const GaussianScene& scene, const std::string& path, PlyDomain domain);

}  // namespace splatsem::core
