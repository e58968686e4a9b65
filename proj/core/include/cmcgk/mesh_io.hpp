#pragma once

#include <string>

#include "cmcgk/weierstrass.hpp"

namespace cmcgk::cli {

enum class MeshFormat { obj, ply };

MeshFormat mesh_format_from_string(const std::string& name);

// Writes the surface as a triangle mesh in model coordinates (x1,x2,x3):
// vertices in row-major node order, each grid quad split along its main
// diagonal.  OBJ vertices print with 12 significant digits, LF endings.
void export_mesh(const weier::ReconstructedSurface& surface, const std::string& path,
                 MeshFormat format);

// Per-node CSV (u,v,x1,x2,x3,re_eta,im_eta,lambda) for downstream tooling.
void export_samples(const weier::ReconstructedSurface& surface, const std::string& path);

}  // namespace cmcgk::cli
