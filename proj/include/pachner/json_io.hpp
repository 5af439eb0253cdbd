#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pachner/cyclic_ainfty.hpp"
#include "pachner/flip_complex.hpp"
#include "pachner/secondary_polytope.hpp"
#include "pachner/sp_algebras.hpp"
#include "pachner/surface.hpp"

namespace pachner {

using json = nlohmann::json;

/// Malformed input; `path` is a JSON pointer into the document.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what) : Error(path + ": " + what), path(path) {}
  std::string path;
};

json read_json_file(const std::string& file);

/// "p/q" string, or an integer.
Rational rational_from_json(const json& j, const std::string& path);
json rational_to_json(const Rational& q);

BasisPtr basis_from_json(const json& j, const std::string& path);
json basis_to_json(const GradedBasis& b);

/// Tensor JSON; `basis`/`ring` fields may be omitted when defaults are given.
GradedTensor tensor_from_json(const json& j, const std::string& path, BasisPtr basis = nullptr,
                              std::optional<Ring> ring = std::nullopt);
json tensor_to_json(const GradedTensor& t, bool with_basis = true);

/// Rows of "p/q" strings.
Matrix matrix_from_json(const json& j, Ring ring, const std::string& path);
json matrix_to_json(const Matrix& m);

/// Algebra JSON, or {"builtin": name, "ring": ...}. Q is a list of entries
/// {"idx":[a,b],"val":v} meaning Q(e_b) has coefficient v on e_a.
CyclicAInfty algebra_from_json(const json& j, const std::string& path = "");
json algebra_to_json(const CyclicAInfty& v);

/// Algebra JSON plus "extra_ops":[{"points":..., "tensor":...}] and an
/// optional "floating_zero" flag.
AhatAlgebra ahat_from_json(const json& j, const std::string& path = "");

/// boundary[c].darts are the hole darts of circle c in cycle order; the
/// first one is paired with the circle's base dart.
Surface surface_from_json(const json& j, const std::string& path = "");
json surface_to_json(const Surface& s);

PointConfiguration points_from_json(const json& j, const std::string& path = "");
json points_to_json(const PointConfiguration& a);

/// {"builtin":"Z2"|"Z3"|"S3"|"Zn"} or {"elements":[...], "table":[[label,...],...]}.
GroupTable group_from_json(const json& j, const std::string& path = "");

/// {"ring":..., "cells":[{"surface":..., "coef":v, "starts":[...]}]}.
Chain chain_from_json(const json& j, const std::string& path = "");
json chain_to_json(const Chain& c);

json subdivision_to_json(const PointConfiguration& a, const MarkedSubdivision& s);

}  // namespace pachner
