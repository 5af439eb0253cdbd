#include <doctest.h>

#include <functional>

#include "pachner/json_io.hpp"
#include "pachner/surface_builders.hpp"

using namespace pachner;

namespace {

std::string data(const std::string& f) { return std::string(PACHNER_TEST_DATA) + "/" + f; }

std::string schema_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.path;
  }
  return "no error";
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("rationals") {
  CHECK(rational_from_json("3/6", "") == Rational(1, 2));
  CHECK(rational_from_json(4, "") == 4);
  CHECK(rational_to_json(Rational(-2, 4)) == "-1/2");
  CHECK(schema_path([] { rational_from_json(1.5, "/x"); }) == "/x");
}

TEST_CASE("surface round trips") {
  for (const Surface& s : {disk_polygon(5), strip("RL"), minimal_torus(), triangle_with_center()}) {
    Surface t = surface_from_json(surface_to_json(s));
    CHECK(canonical_code(t) == canonical_code(s));
    CHECK(surface_to_json(t) == surface_to_json(s));
  }
  Surface f = surface_from_json(read_json_file(data("disk5.json")));
  CHECK(f.validate().ok);
  CHECK(f.is_triangulation());
  CHECK(f.circle_labels(0) == disk_polygon(5).circle_labels(0));
}

TEST_CASE("surface schema errors carry a path") {
  json j = surface_to_json(disk_polygon(4));
  json a = j;
  a["edge_pairs"][1] = {0, 1};
  CHECK(schema_path([&] { surface_from_json(a); }) == "/edge_pairs/1");
  json b = j;
  b.erase("rotation");
  CHECK(schema_path([&] { surface_from_json(b); }) == "/rotation");
  CHECK(schema_path([] { surface_from_json(read_json_file(data("bad_surface.json"))); }) == "/edge_pairs/1");
}

TEST_CASE("algebra round trips") {
  for (const char* f : {"z2_q.json", "s3_gf2.json", "trunc3_q.json", "minimal_gf2.json"}) {
    CAPTURE(f);
    CyclicAInfty v = algebra_from_json(read_json_file(data(f)));
    CyclicAInfty w = algebra_from_json(algebra_to_json(v));
    CHECK(*w.basis == *v.basis);
    CHECK(w.g == v.g);
    CHECK(w.Q == v.Q);
    CHECK(w.c.size() == v.c.size());
    for (const auto& [n, t] : v.c) CHECK(w.c.at(n) == t);
  }
  CyclicAInfty b = algebra_from_json(json{{"builtin", "S3"}, {"ring", "Q"}});
  CHECK(b.basis->size() == 6);
}

TEST_CASE("algebra schema errors") {
  json j = read_json_file(data("z2_q.json"));
  j["c"]["3"]["entries"][0]["idx"][1] = "nope";
  CHECK(schema_path([&] { algebra_from_json(j); }).rfind("/c/3/entries/0", 0) == 0);
}

TEST_CASE("points") {
  PointConfiguration a = points_from_json(read_json_file(data("triangle1.json")));
  CHECK(a.size() == 4);
  CHECK(a.labels == std::vector<std::string>{"a", "b", "c", "x"});
  PointConfiguration b = points_from_json(points_to_json(a));
  CHECK(b.labels == a.labels);
  CHECK(b.coords == a.coords);
  CHECK(points_from_json(read_json_file(data("line4.json"))).d == 1);
}

TEST_CASE("groups") {
  GroupTable z2 = group_from_json(read_json_file(data("z2_group.json")));
  CHECK(z2.order() == 2);
  CHECK(group_from_json(json{{"builtin", "Z5"}}).order() == 5);
  json bad = {{"elements", {"e", "a"}}, {"table", {{"e", "a"}, {"a", "a"}}}};
  CHECK_THROWS_AS(group_from_json(bad), Error);
}

TEST_CASE("chains") {
  Chain c(Ring::GF2);
  c.add(disk_polygon(4), 1);
  c.add(fan_triangulate(disk_polygon(4)), 1);
  Chain d = chain_from_json(chain_to_json(c));
  CHECK(d == c);
}

}
