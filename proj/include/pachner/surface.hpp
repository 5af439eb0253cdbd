#pragma once

#include <map>
#include <string>
#include <vector>

#include "pachner/ring.hpp"

namespace pachner {

/// Ordered boundary circle. `base` is the real boundary dart that starts at
/// the circle's position-0 vertex.
struct Circle {
  bool out = false;
  int base = -1;

  bool operator==(const Circle&) const = default;
};

/// A leg of the boundary: real dart running from `from` to `to`.
struct BoundaryLeg {
  int dart = -1;
  int circle = -1;
  int position = 0;
  std::string from;
  std::string to;
};

struct SurfaceReport {
  bool ok = true;
  std::vector<std::string> errors;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int chi = 0;
  int genus = 0;
  std::vector<int> face_profile;  // sorted face sizes
};

/// Polygonal decomposition of a compact oriented surface, stored as a
/// combinatorial map. Every dart has a face successor `next` and a partner
/// `inv`. Boundary edges are paired with "hole" darts; the hole darts of a
/// circle form one face cycle that is not a polygon of the decomposition.
/// Dart d runs from label[d] to label[next[d]].
class Surface {
 public:
  std::vector<int> next;
  std::vector<int> inv;
  std::vector<int> hole;  // -1 for real darts, else the circle index
  std::vector<std::string> label;
  std::vector<Circle> circles;

  int darts() const { return static_cast<int>(next.size()); }
  bool is_hole(int d) const { return hole[d] >= 0; }
  bool is_interior(int d) const { return hole[d] < 0 && hole[inv[d]] < 0; }
  int prev(int d) const;
  const std::string& end_label(int d) const { return label[next[d]]; }

  /// Real faces, each starting at its smallest dart, ordered by that dart.
  std::vector<std::vector<int>> faces() const;
  /// face_of[d] for real darts (index into faces()), -1 for hole darts.
  std::vector<int> face_index() const;
  std::vector<int> face_profile() const;

  /// Boundary legs: in-circles first, then out-circles, each from its base.
  std::vector<BoundaryLeg> boundary_legs() const;
  std::vector<BoundaryLeg> circle_legs(int circle) const;
  std::vector<std::string> circle_labels(int circle) const;

  int vertex_count() const;
  int edge_count() const;
  int euler_characteristic() const;
  /// Sum over faces of (n - 3).
  int cell_dimension() const;
  bool is_triangulation() const;

  SurfaceReport validate() const;
};

/// Byte-string code; equal iff the surfaces are isomorphic by a map that
/// preserves labels, circles and base darts.
using CanonicalCode = std::string;

struct CanonicalForm {
  CanonicalCode code;
  std::vector<int> old_to_new;
};

CanonicalForm canonical_form(const Surface& s);
CanonicalCode canonical_code(const Surface& s);
/// Renumbers darts in canonical order.
Surface canonicalize(const Surface& s);
Surface renumbered(const Surface& s, const std::vector<int>& old_to_new);

/// Inserts a diagonal between corners i and j (start vertices of the i-th and
/// j-th dart) of the face that starts at dart `face_start`. New darts get ids
/// darts() and darts()+1; the first closes the face f_i..f_{j-1}.
Surface split_face(const Surface& s, int face_start, int i, int j);
/// Removes the interior edge {d, inv d}. Dart ids are compacted.
Surface erase_edge(const Surface& s, int d);
/// Erase then split along the other diagonal of the resulting square.
Surface flip(const Surface& s, int d);
bool erasable(const Surface& s, int d);

struct GlueSpec {
  std::vector<std::pair<int, int>> circles;  // (circle of first, circle of second)
  std::map<std::string, std::string> rename_first;
  std::map<std::string, std::string> rename_second;
};

/// Sews second onto first. After renaming, a boundary dart x->y of first is
/// identified with the boundary dart y->x of second. Remaining circles: those
/// of first, then those of second, in order.
Surface glue(const Surface& second, const Surface& first, const GlueSpec& spec);

Surface rename_labels(const Surface& s, const std::map<std::string, std::string>& rename);

/// Cyclic relabeling of one circle: the vertex at position p takes the label
/// previously at position p - shift (mod k). Positions keep their labels.
Surface relabel_T(const Surface& s, int circle, int shift);

/// Builder input: faces as cyclic lists of sides.
struct Side {
  std::string edge;
  std::string from;
};

struct CircleSpec {
  std::string base_label;
  bool out = false;
};

/// Edge names used twice become interior edges (the two uses must run in
/// opposite directions); names used once are boundary edges. Each boundary
/// circle is named by one of its vertices, which becomes position 0.
Surface build_surface(const std::vector<std::vector<Side>>& faces, const std::vector<CircleSpec>& circles);

}  // namespace pachner
