#pragma once

#include <map>
#include <string>
#include <vector>

#include "pachner/linear_program.hpp"
#include "pachner/ring.hpp"

namespace pachner {

/// Points in R^1 or R^2 with exact coordinates; labels in input order.
struct PointConfiguration {
  int d = 2;
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> coords;

  int size() const { return static_cast<int>(labels.size()); }
};

/// Throws unless the labels are distinct, the points span R^d and no d+1 of
/// them are affinely dependent.
void check_general_position(const PointConfiguration& a);

/// Cells are sorted index sets (vertices and floating points together); cells are sorted.
struct MarkedSubdivision {
  std::vector<std::vector<int>> cells;

  bool operator==(const MarkedSubdivision&) const = default;
  bool operator<(const MarkedSubdivision& o) const { return cells < o.cells; }
};

/// Vertices of Conv(cell), counter-clockwise from the smallest index for d = 2, sorted by coordinate for d = 1.
std::vector<int> cell_vertices(const PointConfiguration& a, const std::vector<int>& cell);
std::vector<int> floating_points(const PointConfiguration& a, const std::vector<int>& cell);
int face_dimension(const PointConfiguration& a, const MarkedSubdivision& s);
bool is_triangulation(const PointConfiguration& a, const MarkedSubdivision& s);
/// Every cell of `fine` lies in some cell of `coarse`.
bool refines(const MarkedSubdivision& fine, const MarkedSubdivision& coarse);
std::string describe(const PointConfiguration& a, const MarkedSubdivision& s);

/// All marked subdivisions (|A| <= 8), sorted.
std::vector<MarkedSubdivision> enumerate_subdivisions(const PointConfiguration& a);

struct RegularityResult {
  bool regular = false;
  std::vector<Rational> heights;
  Rational margin;
};

enum class LpMethod { FourierMotzkin, Simplex };

RegularityResult is_regular(const PointConfiguration& a, const MarkedSubdivision& s,
                            LpMethod method = LpMethod::FourierMotzkin);

/// Cells of the lower hull of the lifted points (each cell = all points on one lower facet).
MarkedSubdivision subdivision_from_heights(const PointConfiguration& a, const std::vector<Rational>& heights);

/// phi(a) = total volume of the simplices having a as a vertex.
std::vector<Rational> gkz_vector(const PointConfiguration& a, const MarkedSubdivision& t);

enum class Complement { LeastSquares, AffineBasis };

/// GKZ vector reduced modulo affine functions.
std::vector<Rational> reduce_affine(const PointConfiguration& a, const std::vector<Rational>& v, Complement how);

/// Indices of points that are vertices of the convex hull of `pts`.
std::vector<int> hull_vertices(const std::vector<std::vector<Rational>>& pts);

struct SecondaryPolytope {
  PointConfiguration config;
  int dim = 0;
  std::vector<MarkedSubdivision> faces;  // regular subdivisions
  std::vector<int> face_dim;
  std::vector<std::vector<Rational>> heights;  // regularity witnesses
  std::vector<int> vertices;                   // face indices of regular triangulations
  std::vector<std::vector<Rational>> gkz;      // per vertex
  /// covers[i]: faces j with faces[j] refining faces[i] and face_dim[j] = face_dim[i] - 1.
  std::vector<std::vector<int>> covers;
  int top = -1;
  long subdivisions_total = 0;
  long triangulations_total = 0;
  bool hull_agrees = false;  // hull vertices of the GKZ vectors = regular triangulations, both complements

  std::vector<long> fvector() const;
  std::vector<int> coarse() const;
  int find(const MarkedSubdivision& s) const;
};

SecondaryPolytope build_sp(const PointConfiguration& a);

/// Incidence numbers [face : facet] from an orientation of every face by its GKZ
/// vertex differences, the outward direction first.
std::map<std::pair<int, int>, int> face_incidences(const SecondaryPolytope& sp);

/// Labels a0, a1, ... in input order.
PointConfiguration points_on_line(const std::vector<Rational>& xs);
PointConfiguration make_configuration(const std::vector<std::pair<Rational, Rational>>& xy);

}  // namespace pachner
