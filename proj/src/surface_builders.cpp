#include "pachner/surface_builders.hpp"

#include <algorithm>

namespace pachner {

Surface disk_polygon(int n) {
  if (n < 3) throw Error("disk polygon needs at least 3 vertices");
  std::vector<Side> f;
  for (int i = 0; i < n; ++i) f.push_back({"e" + std::to_string(i), "p" + std::to_string(i)});
  return build_surface({f}, {{"p0", true}});
}

Surface fan_triangulate(const Surface& s) {
  Surface t = s;
  while (true) {
    bool changed = false;
    for (const auto& f : t.faces()) {
      if (f.size() >= 4) {
        t = split_face(t, f[0], 0, 2);
        changed = true;
        break;
      }
    }
    if (!changed) return t;
  }
}

Surface strip(const std::string& word) {
  const int k = static_cast<int>(word.size());
  if (k < 1) throw Error("strip needs at least one square");
  auto i = [&](int j) { return "i" + std::to_string(((j % k) + k) % k); };
  auto o = [&](int j) { return "o" + std::to_string(((j % k) + k) % k); };
  auto v = [&](int j) { return "v" + std::to_string(((j % k) + k) % k); };
  std::vector<std::vector<Side>> faces;
  for (int j = 0; j < k; ++j) {
    faces.push_back({{"b" + std::to_string(j), i(j)},
                     {v(j + 1), i(j + 1)},
                     {"t" + std::to_string(j), o(j + 1)},
                     {v(j), o(j)}});
  }
  Surface s = build_surface(faces, {{"i0", false}, {"o0", true}});
  for (int j = 0; j < k; ++j) {
    switch (word[j]) {
      case 'R': s = split_face(s, 4 * j, 0, 2); break;
      case 'L': s = split_face(s, 4 * j, 1, 3); break;
      case 'S': break;
      default: throw Error(std::string("strip letter must be R, L or S, got ") + word[j]);
    }
  }
  return s;
}

namespace {

int max_level(const Surface& s) {
  int lv = 0;
  for (const auto& l : s.label) {
    if (l.size() > 1 && l[0] == 'm') {
      auto us = l.find('_');
      if (us != std::string::npos) lv = std::max(lv, std::stoi(l.substr(1, us - 1)));
    }
  }
  return lv;
}

int circle_of(const Surface& s, bool out) {
  for (int c = 0; c < static_cast<int>(s.circles.size()); ++c)
    if (s.circles[c].out == out) return c;
  throw Error(std::string("cylinder has no ") + (out ? "out" : "in") + "-circle");
}

}  // namespace

Surface stack(const Surface& first, const Surface& second) {
  const int lf = max_level(first);
  const int level = lf + 1;
  GlueSpec spec;
  spec.circles.push_back({circle_of(first, true), circle_of(second, false)});
  for (const auto& l : first.label) {
    if (l[0] == 'o') spec.rename_first[l] = "m" + std::to_string(level) + "_" + l.substr(1);
  }
  for (const auto& l : second.label) {
    if (l[0] == 'i') {
      spec.rename_second[l] = "m" + std::to_string(level) + "_" + l.substr(1);
    } else if (l[0] == 'm') {
      auto us = l.find('_');
      int x = std::stoi(l.substr(1, us - 1));
      spec.rename_second[l] = "m" + std::to_string(x + level) + l.substr(us);
    }
  }
  return glue(second, first, spec);
}

Surface shift_T(const Surface& cylinder, int i) { return relabel_T(cylinder, circle_of(cylinder, true), i); }

Surface triangle_with_center() {
  return build_surface({{{"a", "p0"}, {"s1", "p1"}, {"s0", "x"}},
                        {{"b", "p1"}, {"s2", "p2"}, {"s1", "x"}},
                        {{"c", "p2"}, {"s0", "p0"}, {"s2", "x"}}},
                       {{"p0", true}});
}

Surface minimal_torus() { return closed_polygon_surface(1); }

Surface closed_polygon_surface(int genus) {
  if (genus < 1) throw Error("closed polygon surface needs genus >= 1");
  std::vector<Side> f;
  for (int g = 0; g < genus; ++g) {
    std::string a = "a" + std::to_string(g), b = "b" + std::to_string(g);
    for (const auto& e : {a, b, a, b}) f.push_back({e, "v"});
  }
  return fan_triangulate(build_surface({f}, {}));
}

Surface genus_two_glued() {
  auto holed = [](const std::string& tag, const std::string& vertex, bool out) {
    std::string a = "a" + tag, b = "b" + tag;
    return fan_triangulate(build_surface(
        {{{a, vertex}, {b, vertex}, {a, vertex}, {b, vertex}, {"rim" + tag, vertex}}}, {{vertex, out}}));
  };
  Surface first = holed("0", "u", true);
  Surface second = holed("1", "w", false);
  GlueSpec spec;
  spec.circles.push_back({0, 0});
  spec.rename_second["w"] = "u";
  return glue(second, first, spec);
}

}  // namespace pachner
