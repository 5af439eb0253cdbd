#include "pachner/json_io.hpp"

#include <fstream>
#include <set>

#include "pachner/tensor_ops.hpp"

namespace pachner {

namespace {

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing");
  return *it;
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

std::string string_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Ring ring_from_json(const json& j, const std::string& path) {
  try {
    return parse_ring(string_from_json(j, path));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

}  // namespace

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(file, std::string("parse error: ") + e.what());
  }
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(path, "expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

json rational_to_json(const Rational& q) { return to_string(q); }

BasisPtr basis_from_json(const json& j, const std::string& path) {
  std::vector<BasisElement> els;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    const std::string p = at(path, i);
    BasisElement e{string_from_json(field(j[i], "label", p), p + "/label"),
                   int_from_json(field(j[i], "degree", p), p + "/degree")};
    if (!seen.insert(e.label).second) throw SchemaError(p + "/label", "duplicate label " + e.label);
    els.push_back(e);
  }
  if (els.empty()) throw SchemaError(path, "empty basis");
  return make_basis(els);
}

json basis_to_json(const GradedBasis& b) {
  json out = json::array();
  for (const auto& e : b.elements()) out.push_back({{"label", e.label}, {"degree", e.degree}});
  return out;
}

GradedTensor tensor_from_json(const json& j, const std::string& path, BasisPtr basis, std::optional<Ring> ring) {
  if (!j.is_object()) throw SchemaError(path, "expected a tensor object");
  if (j.contains("basis")) basis = basis_from_json(j["basis"], path + "/basis");
  if (!basis) throw SchemaError(path + "/basis", "missing");
  if (j.contains("ring")) ring = ring_from_json(j["ring"], path + "/ring");
  if (!ring) throw SchemaError(path + "/ring", "missing");
  const int arity = int_from_json(field(j, "arity", path), path + "/arity");
  const int degree = int_from_json(field(j, "degree", path), path + "/degree");
  if (arity < 0) throw SchemaError(path + "/arity", "negative");
  GradedTensor t(basis, *ring, arity, degree);
  const json& entries = array_at(field(j, "entries", path), path + "/entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string p = at(path + "/entries", i);
    const json& idx = array_at(field(entries[i], "idx", p), p + "/idx");
    if (static_cast<int>(idx.size()) != arity) throw SchemaError(p + "/idx", "length differs from arity");
    Index ix;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      int k = basis->index_of(string_from_json(idx[s], at(p + "/idx", s)));
      if (k < 0) throw SchemaError(at(p + "/idx", s), "unknown basis label");
      ix.push_back(k);
    }
    Rational v = rational_from_json(field(entries[i], "val", p), p + "/val");
    if (!t.degree_allows(ix) && !is_zero(v)) throw SchemaError(p, "entry violates the tensor degree");
    try {
      t.accumulate(ix, v);
    } catch (const Error& e) {
      throw SchemaError(p, e.what());
    }
  }
  return t;
}

json tensor_to_json(const GradedTensor& t, bool with_basis) {
  json out;
  if (with_basis) {
    out["basis"] = basis_to_json(t.basis());
    out["ring"] = std::string(ring_name(t.ring()));
  }
  out["arity"] = t.arity();
  out["degree"] = t.degree();
  json entries = json::array();
  for (const auto& [idx, v] : t.entries()) {
    json labels = json::array();
    for (int k : idx) labels.push_back(t.basis().label(k));
    entries.push_back({{"idx", labels}, {"val", to_string(v)}});
  }
  out["entries"] = entries;
  return out;
}

Matrix matrix_from_json(const json& j, Ring ring, const std::string& path) {
  const int rows = static_cast<int>(array_at(j, path).size());
  if (rows == 0) throw SchemaError(path, "empty matrix");
  const int cols = static_cast<int>(array_at(j[0], at(path, 0)).size());
  Matrix m(ring, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) throw SchemaError(at(path, r), "ragged row");
    for (int c = 0; c < cols; ++c) m.set(r, c, rational_from_json(j[r][c], at(at(path, r), c)));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

CyclicAInfty algebra_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an algebra object");
  const Ring ring = ring_from_json(field(j, "ring", path), path + "/ring");
  if (j.contains("builtin")) {
    try {
      return builtin_algebra(string_from_json(j["builtin"], path + "/builtin"), ring);
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(path + "/builtin", e.what());
    }
  }
  BasisPtr basis = basis_from_json(field(j, "basis", path), path + "/basis");
  GradedTensor g = tensor_from_json(field(j, "g", path), path + "/g", basis, ring);
  Matrix q(ring, basis->size(), basis->size());
  if (j.contains("Q")) {
    const json& qj = j["Q"];
    const json& entries = qj.is_object() ? field(qj, "entries", path + "/Q") : qj;
    const std::string ep = qj.is_object() ? path + "/Q/entries" : path + "/Q";
    for (std::size_t i = 0; i < array_at(entries, ep).size(); ++i) {
      const std::string p = at(ep, i);
      const json& idx = array_at(field(entries[i], "idx", p), p + "/idx");
      if (idx.size() != 2) throw SchemaError(p + "/idx", "Q entries have two labels");
      int a = basis->index_of(string_from_json(idx[0], p + "/idx/0"));
      int b = basis->index_of(string_from_json(idx[1], p + "/idx/1"));
      if (a < 0 || b < 0) throw SchemaError(p + "/idx", "unknown basis label");
      q.set(a, b, rational_from_json(field(entries[i], "val", p), p + "/val"));
    }
  }
  std::map<int, GradedTensor> c;
  int n_max = 6;
  if (j.contains("n_max")) n_max = int_from_json(j["n_max"], path + "/n_max");
  const json& cj = field(j, "c", path);
  if (!cj.is_object()) throw SchemaError(path + "/c", "expected an object keyed by arity");
  for (const auto& [key, tj] : cj.items()) {
    int n = 0;
    try {
      n = std::stoi(key);
    } catch (const std::exception&) {
      throw SchemaError(path + "/c/" + key, "key is not an arity");
    }
    GradedTensor t = tensor_from_json(tj, path + "/c/" + key, basis, ring);
    if (t.arity() != n) throw SchemaError(path + "/c/" + key, "arity differs from key");
    c.emplace(n, t);
  }
  std::string name = j.contains("name") ? string_from_json(j["name"], path + "/name") : "algebra";
  try {
    return make_algebra(name, ring, basis, g, q, c, n_max);
  } catch (const Error& e) {
    throw SchemaError(path.empty() ? "/" : path, e.what());
  }
}

json algebra_to_json(const CyclicAInfty& v) {
  json out;
  out["name"] = v.name;
  out["ring"] = std::string(ring_name(v.ring));
  out["basis"] = basis_to_json(*v.basis);
  out["g"] = tensor_to_json(v.g, false);
  json q = json::array();
  for (int a = 0; a < v.Q.rows(); ++a)
    for (int b = 0; b < v.Q.cols(); ++b)
      if (!is_zero(v.Q(a, b)))
        q.push_back({{"idx", {v.basis->label(a), v.basis->label(b)}}, {"val", to_string(v.Q(a, b))}});
  out["Q"] = q;
  json c = json::object();
  for (const auto& [n, t] : v.c) c[std::to_string(n)] = tensor_to_json(t, false);
  out["c"] = c;
  out["n_max"] = v.n_max;
  return out;
}

AhatAlgebra ahat_from_json(const json& j, const std::string& path) {
  AhatAlgebra a;
  a.base = algebra_from_json(j, path);
  if (j.contains("floating_zero")) {
    if (!j["floating_zero"].is_boolean()) throw SchemaError(path + "/floating_zero", "expected a boolean");
    a.floating_zero = j["floating_zero"].get<bool>();
  }
  if (j.contains("extra_ops")) {
    const json& ops = array_at(j["extra_ops"], path + "/extra_ops");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const std::string p = at(path + "/extra_ops", i);
      PointConfiguration pts = points_from_json(field(ops[i], "points", p), p + "/points");
      GradedTensor t = tensor_from_json(field(ops[i], "tensor", p), p + "/tensor", a.base.basis, a.base.ring);
      try {
        a.add_op(pts, t);
      } catch (const Error& e) {
        throw SchemaError(p, e.what());
      }
    }
  }
  return a;
}

Surface surface_from_json(const json& j, const std::string& path) {
  Surface s;
  const int n = int_from_json(field(j, "darts", path), path + "/darts");
  if (n <= 0) throw SchemaError(path + "/darts", "must be positive");
  s.inv.assign(n, -1);
  s.hole.assign(n, -1);
  s.label.assign(n, "");
  const json& pairs = array_at(field(j, "edge_pairs", path), path + "/edge_pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string p = at(path + "/edge_pairs", i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) throw SchemaError(p, "expected a pair");
    int a = int_from_json(pairs[i][0], p + "/0"), b = int_from_json(pairs[i][1], p + "/1");
    if (a < 0 || a >= n || b < 0 || b >= n || a == b || s.inv[a] >= 0 || s.inv[b] >= 0)
      throw SchemaError(p, "invalid or repeated dart");
    s.inv[a] = b;
    s.inv[b] = a;
  }
  for (int d = 0; d < n; ++d)
    if (s.inv[d] < 0) throw SchemaError(path + "/edge_pairs", "dart " + std::to_string(d) + " is unpaired");
  const json& rot = array_at(field(j, "rotation", path), path + "/rotation");
  if (static_cast<int>(rot.size()) != n) throw SchemaError(path + "/rotation", "length differs from darts");
  for (int d = 0; d < n; ++d) s.next.push_back(int_from_json(rot[d], at(path + "/rotation", d)));
  const json& labels = field(j, "vertex_labels", path);
  if (!labels.is_object()) throw SchemaError(path + "/vertex_labels", "expected an object keyed by dart");
  for (int d = 0; d < n; ++d) {
    const std::string key = std::to_string(d);
    s.label[d] = string_from_json(field(labels, key, path + "/vertex_labels"), path + "/vertex_labels/" + key);
  }
  const json& bd = array_at(field(j, "boundary", path), path + "/boundary");
  for (std::size_t c = 0; c < bd.size(); ++c) {
    const std::string p = at(path + "/boundary", c);
    const std::string dir = string_from_json(field(bd[c], "dir", p), p + "/dir");
    if (dir != "in" && dir != "out") throw SchemaError(p + "/dir", "expected \"in\" or \"out\"");
    const json& darts = array_at(field(bd[c], "darts", p), p + "/darts");
    if (darts.empty()) throw SchemaError(p + "/darts", "empty circle");
    for (std::size_t k = 0; k < darts.size(); ++k) {
      int d = int_from_json(darts[k], at(p + "/darts", k));
      if (d < 0 || d >= n || s.hole[d] >= 0) throw SchemaError(at(p + "/darts", k), "invalid or repeated dart");
      s.hole[d] = static_cast<int>(c);
    }
    s.circles.push_back(Circle{dir == "out", s.inv[darts[0].get<int>()]});
  }
  SurfaceReport r = s.validate();
  if (!r.ok) throw SchemaError(path.empty() ? "/" : path, "invalid surface: " + r.errors.front());
  return s;
}

json surface_to_json(const Surface& s) {
  json out;
  out["darts"] = s.darts();
  json pairs = json::array();
  for (int d = 0; d < s.darts(); ++d)
    if (d < s.inv[d]) pairs.push_back({d, s.inv[d]});
  out["edge_pairs"] = pairs;
  out["rotation"] = s.next;
  json labels = json::object();
  for (int d = 0; d < s.darts(); ++d) labels[std::to_string(d)] = s.label[d];
  out["vertex_labels"] = labels;
  json bd = json::array();
  for (const auto& c : s.circles) {
    json darts = json::array();
    int start = s.inv[c.base], x = start;
    do {
      darts.push_back(x);
      x = s.next[x];
    } while (x != start);
    bd.push_back({{"dir", c.out ? "out" : "in"}, {"darts", darts}});
  }
  out["boundary"] = bd;
  return out;
}

PointConfiguration points_from_json(const json& j, const std::string& path) {
  PointConfiguration a;
  a.d = int_from_json(field(j, "d", path), path + "/d");
  if (a.d != 1 && a.d != 2) throw SchemaError(path + "/d", "must be 1 or 2");
  const json& pts = field(j, "points", path);
  const std::string pp = path + "/points";
  auto add = [&](const std::string& label, const json& xy, const std::string& p) {
    if (!xy.is_array() || static_cast<int>(xy.size()) != a.d) throw SchemaError(p, "expected d coordinates");
    std::vector<Rational> c;
    for (int k = 0; k < a.d; ++k) c.push_back(rational_from_json(xy[k], at(p, k)));
    a.labels.push_back(label);
    a.coords.push_back(c);
  };
  if (pts.is_object()) {
    for (const auto& [label, xy] : pts.items()) add(label, xy, pp + "/" + label);
  } else if (pts.is_array()) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string p = at(pp, i);
      add(string_from_json(field(pts[i], "label", p), p + "/label"), field(pts[i], "coords", p), p + "/coords");
    }
  } else {
    throw SchemaError(pp, "expected an object or array");
  }
  try {
    check_general_position(a);
  } catch (const Error& e) {
    throw SchemaError(pp, e.what());
  }
  return a;
}

json points_to_json(const PointConfiguration& a) {
  json pts = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json c = json::array();
    for (const auto& x : a.coords[i]) c.push_back(to_string(x));
    pts.push_back({{"label", a.labels[i]}, {"coords", c}});
  }
  return {{"d", a.d}, {"points", pts}};
}

GroupTable group_from_json(const json& j, const std::string& path) {
  if (j.contains("builtin")) {
    const std::string name = string_from_json(j["builtin"], path + "/builtin");
    if (name == "S3") return symmetric_group3();
    if (name.size() > 1 && name[0] == 'Z') {
      try {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 64) return cyclic_group(n);
      } catch (const std::exception&) {
      }
    }
    throw SchemaError(path + "/builtin", "unknown group " + name);
  }
  GroupTable t;
  const json& els = array_at(field(j, "elements", path), path + "/elements");
  for (std::size_t i = 0; i < els.size(); ++i) t.labels.push_back(string_from_json(els[i], at(path + "/elements", i)));
  const json& tab = array_at(field(j, "table", path), path + "/table");
  if (tab.size() != els.size()) throw SchemaError(path + "/table", "row count differs from elements");
  for (std::size_t r = 0; r < tab.size(); ++r) {
    const std::string p = at(path + "/table", r);
    if (!tab[r].is_array() || tab[r].size() != els.size()) throw SchemaError(p, "ragged row");
    std::vector<int> row;
    for (std::size_t c = 0; c < els.size(); ++c) {
      std::string l = string_from_json(tab[r][c], at(p, c));
      auto it = std::find(t.labels.begin(), t.labels.end(), l);
      if (it == t.labels.end()) throw SchemaError(at(p, c), "unknown element " + l);
      row.push_back(static_cast<int>(it - t.labels.begin()));
    }
    t.mul.push_back(row);
  }
  try {
    check_group(t);
  } catch (const Error& e) {
    throw SchemaError(path + "/table", e.what());
  }
  return t;
}

Chain chain_from_json(const json& j, const std::string& path) {
  Chain c(ring_from_json(field(j, "ring", path), path + "/ring"));
  const json& cells = array_at(field(j, "cells", path), path + "/cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string p = at(path + "/cells", i);
    Surface s = surface_from_json(field(cells[i], "surface", p), p + "/surface");
    Rational v = cells[i].contains("coef") ? rational_from_json(cells[i]["coef"], p + "/coef") : Rational(1);
    std::vector<int> starts;
    if (cells[i].contains("starts"))
      for (std::size_t k = 0; k < array_at(cells[i]["starts"], p + "/starts").size(); ++k)
        starts.push_back(int_from_json(cells[i]["starts"][k], at(p + "/starts", k)));
    try {
      c.add(s, v, starts);
    } catch (const Error& e) {
      throw SchemaError(p, e.what());
    }
  }
  return c;
}

json chain_to_json(const Chain& c) {
  json cells = json::array();
  for (const auto& [code, v] : c.coef) cells.push_back({{"surface", surface_to_json(c.rep.at(code))}, {"coef", to_string(v)}});
  return {{"ring", std::string(ring_name(c.ring))}, {"cells", cells}};
}

json subdivision_to_json(const PointConfiguration& a, const MarkedSubdivision& s) {
  json cells = json::array();
  for (const auto& cell : s.cells) {
    json verts = json::array(), fl = json::array();
    for (int p : cell_vertices(a, cell)) verts.push_back(a.labels[p]);
    for (int p : floating_points(a, cell)) fl.push_back(a.labels[p]);
    cells.push_back({{"vertices", verts}, {"floating", fl}});
  }
  return cells;
}

}  // namespace pachner
