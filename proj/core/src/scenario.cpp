#include "cover/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cover/errors.hpp"

namespace cover {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::weighted_d2:
      return "weighted_d2";
    case Method::uniform:
      return "uniform";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "weighted_d2") {
    return Method::weighted_d2;
  }
  if (name == "uniform") {
    return Method::uniform;
  }
  throw Error("unknown method \"" + std::string(name) +
              "\" (expected weighted_d2 or uniform)");
}

Scenario reference_scenario() {
  Scenario s;
  s.domain = unit_square();
  s.density = DensityField({
      {1.0, 0.75, 0.75, 10.0, 2.0},
      {1.0, 0.25, 0.25, 20.0, 2.0},
  });
  return s;
}

Scenario parse_scenario(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("scenario JSON parse failure: ") + e.what());
  }

  try {
    Scenario s;
    if (j.contains("domain")) {
      std::vector<Vec2> verts;
      for (const auto& v : j.at("domain")) {
        verts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
      }
      s.domain = ConvexPolygon(verts);
    } else {
      s.domain = unit_square();
    }

    std::vector<GaussianTerm> terms;
    for (const auto& t : j.at("density")) {
      GaussianTerm g;
      g.amplitude = t.value("amplitude", 1.0);
      g.cx = t.value("cx", 0.0);
      g.cy = t.value("cy", 0.0);
      g.ax = t.value("ax", 0.0);
      g.ay = t.value("ay", 0.0);
      terms.push_back(g);
    }
    if (terms.empty()) {
      throw Error("scenario density needs at least one term");
    }
    s.density = DensityField(std::move(terms));

    s.k = j.value("k", 10);
    s.epsilon = j.value("epsilon", 0.1);
    s.runs = j.value("runs", 50);
    s.master_seed = j.value("master_seed", std::uint64_t{0});
    if (j.contains("methods")) {
      s.methods.clear();
      for (const auto& m : j.at("methods")) {
        s.methods.push_back(method_from_string(m.get<std::string>()));
      }
    }
    s.descent.gain = j.value("gain", 10.0);
    s.descent.dt = j.value("dt", 0.01);
    s.descent.convergence_threshold = j.value("convergence_threshold", 1e-4);
    s.descent.max_iterations = j.value("max_iterations", 10000);

    if (s.k < 1 || s.runs < 1 || !(s.epsilon > 0.0) || s.methods.empty()) {
      throw Error("scenario needs k >= 1, runs >= 1, epsilon > 0, methods");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("scenario JSON field failure: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open scenario file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace cover
