#pragma once

#include <string>

#include "pachner/surface.hpp"

namespace pachner {

/// Disk with one n-gon face on vertices p0..p{n-1}; one out-circle based at p0.
Surface disk_polygon(int n);

/// Splits every face of size >= 4 by fan diagonals from its first corner.
Surface fan_triangulate(const Surface& s);

/// Horizontal strip of k = word.size() squares on a cylinder. In-circle
/// vertices i0..i{k-1} (base i0), out-circle vertices o0..o{k-1} (base o0).
/// Square j has corners i_j, i_{j+1}, o_{j+1}, o_j; R splits i_j--o_{j+1},
/// L splits i_{j+1}--o_j, S leaves the square.
Surface strip(const std::string& word);

/// Cylinder composition: first's out-circle glued to second's in-circle,
/// vertex o_j of first meeting i_j of second. Middle vertices are named
/// m{level}_{j}, levels counted from the bottom.
Surface stack(const Surface& first, const Surface& second);

/// T_i on a cylinder: cyclic relabeling of the out-circle.
Surface shift_T(const Surface& cylinder, int i);

/// Triangle p0 p1 p2 coned to an interior vertex x.
Surface triangle_with_center();

/// One vertex, three edges, two triangles.
Surface minimal_torus();

/// Genus 2 from two one-holed tori glued along a one-vertex circle.
Surface genus_two_glued();

/// Fan-triangulated 4h-gon with the standard side identification.
Surface closed_polygon_surface(int genus);

}  // namespace pachner
