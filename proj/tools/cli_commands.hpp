#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pachner/ring.hpp"

namespace pachner::cli {

struct Globals {
  Ring ring = Ring::GF2;
  std::string out;
  std::size_t max_cells = 500000;
  int max_dim = 3;
  bool verbose = false;
  std::string seed_surface;
};

/// One named check; status is pass, fail or skipped.
struct Check {
  std::string name;
  std::string status;
  nlohmann::json detail = nlohmann::json::object();
};

struct Outcome {
  nlohmann::json body = nlohmann::json::object();
  std::vector<Check> checks;

  void add(std::string name, bool ok, nlohmann::json detail = nlohmann::json::object());
  void skip(std::string name, nlohmann::json detail);
};

int run(int argc, char** argv);

}  // namespace pachner::cli
