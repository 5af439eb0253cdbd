#pragma once

#include <climits>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pachner/gf2_matrix.hpp"
#include "pachner/matrix.hpp"
#include "pachner/surface.hpp"

namespace pachner {

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Orientation of a cell of dimension <= 2 relative to the canonical one.
/// `starts` holds one start dart per face of size >= 4, in the intended
/// product order. A square oriented from start c0 has boundary
/// +split(c0,c2) - split(c1,c3); a pentagon's orientation does not depend on
/// its start. Throws for cells of dimension >= 3.
int orientation_sign(const Surface& s, const CanonicalForm& cf, const std::vector<int>& starts);

struct CellFace {
  CanonicalCode code;
  Surface rep;  // canonical representative
  int sign = 1;
};

/// Faces of a cell given by its canonical representative: one term per face
/// of size >= 4 and per diagonal. Signs are meaningful when `oriented` (dims <= 2).
std::vector<CellFace> cell_boundary(const Surface& rep, bool oriented);

/// Sparse chain keyed by canonical code.
struct Chain {
  Ring ring = Ring::GF2;
  std::map<CanonicalCode, Rational> coef;
  std::map<CanonicalCode, Surface> rep;

  Chain() = default;
  explicit Chain(Ring r) : ring(r) {}

  void add_canonical(const CanonicalCode& code, const Surface& canonical_rep, const Rational& c);
  /// Adds an arbitrary surface; over Q the coefficient is corrected by the
  /// orientation given by `starts` (see orientation_sign).
  void add(const Surface& s, const Rational& c, const std::vector<int>& starts = {});
  bool is_zero() const { return coef.empty(); }
  std::size_t size() const { return coef.size(); }
  int dimension() const;
  Chain operator+(const Chain& o) const;
  bool operator==(const Chain& o) const { return ring == o.ring && coef == o.coef; }
};

Chain chain_boundary(const Chain& c);

struct BuildOptions {
  int max_dim = INT_MAX;
  std::size_t max_cells = 500000;
  Ring ring = Ring::GF2;
};

struct FlipComplex {
  Ring ring = Ring::GF2;
  int built_dim = 0;
  bool complete = false;  // no cells exist above built_dim
  int signed_upto = -1;   // boundary signs are meaningful through this dimension
  std::vector<std::vector<CanonicalCode>> codes;
  std::vector<std::vector<Surface>> reps;
  std::vector<std::unordered_map<CanonicalCode, int>> index;
  /// bd[d][i]: faces of cell i in dimension d as (index in dimension d-1, coefficient).
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bd;

  std::vector<long> fvector() const;
  std::size_t cell_count() const;
  int find(const CanonicalCode& code) const;  // -1 if absent
  SparseGf2 boundary_gf2(int d) const;
  /// Signed boundary matrix (rows: (d-1)-cells); only for d <= 2.
  Matrix boundary_q(int d) const;
};

/// 0-cells: flip closure of the seed. d-cells: single edge erasures of
/// (d-1)-cells. Throws CapExceeded when the cell count passes the cap.
FlipComplex build_flip_complex(const Surface& seed, const BuildOptions& opt);

bool boundary_squares_to_zero(const FlipComplex& fc, Ring ring);

struct Homology {
  std::vector<int> betti;  // betti[d] for every d whose value is determined
  std::vector<std::vector<std::vector<int>>> representatives;  // cycles as cell-index sets
};

Homology homology_gf2(const FlipComplex& fc, bool with_representatives = true);

/// Some (d+1)-chain b with boundary b = z over GF2, or nullopt.
std::optional<std::vector<int>> solve_boundary_gf2(const FlipComplex& fc, int d, const std::vector<int>& z);

/// (delta f)(e) = f(boundary e) for a scalar cochain on d-cells.
std::vector<Rational> coboundary(const FlipComplex& fc, int d, const std::vector<Rational>& f);

}  // namespace pachner
