#include "elgverify/report.hpp"

#include <stdexcept>

namespace elg::verify {

std::string report_json(const std::string& suite, const VerifyConfig& cfg,
                        const std::vector<PropertyResult>& results) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["config"] = {
      {"x0", {cfg.x0.x, cfg.x0.y}}, {"truncation", cfg.truncation},
      {"tolerance", cfg.tolerance}, {"samples", cfg.samples},
      {"trials", cfg.trials},       {"seed", cfg.seed},
  };
  j["properties"] = nlohmann::ordered_json::array();
  bool pass = true;
  for (const auto& r : results) {
    nlohmann::ordered_json p;
    p["id"] = r.id;
    p["statement"] = r.statement;
    p["exact"] = r.exact;
    p["trials"] = r.trials;
    p["max_error"] = r.max_error;
    p["threshold"] = r.threshold;
    p["pass"] = r.pass;
    j["properties"].push_back(std::move(p));
    pass = pass && r.pass;
  }
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

nlohmann::ordered_json function_vector_json(const FunctionVector& fv) {
  nlohmann::ordered_json j;
  j["family"] = nlohmann::ordered_json::array();
  for (const auto& c : fv.family) j["family"].push_back({c.p, c.q});
  j["values"] = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < fv.values.size(); ++i) j["values"].push_back(fv.values[i]);
  return j;
}

FunctionVector function_vector_from_json(const nlohmann::json& j) {
  FunctionVector fv;
  for (const auto& c : j.at("family"))
    fv.family.push_back(CurveClass{c.at(0).get<long long>(), c.at(1).get<long long>()});
  const auto& vals = j.at("values");
  if (vals.size() != fv.family.size())
    throw std::invalid_argument("function vector family/value size mismatch");
  fv.values.resize(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i)
    fv.values[static_cast<Eigen::Index>(i)] = vals[i].get<double>();
  return fv;
}

std::vector<ConePoint> parse_cone_points(const nlohmann::json& j) {
  std::vector<ConePoint> pts;
  for (const auto& e : j) {
    std::string type = e.at("type").get<std::string>();
    if (type == "zero") {
      pts.push_back(ConePoint::zero());
    } else if (type == "interior") {
      double c = e.value("c", 1.0);
      pts.push_back(ConePoint::interior(
          c, TeichPoint{e.at("x").get<double>(), e.at("y").get<double>()}));
    } else if (type == "boundary") {
      pts.push_back(ConePoint::boundary(MF{e.at("a").get<double>(), e.at("b").get<double>()}));
    } else {
      throw std::invalid_argument("unknown point type: " + type);
    }
  }
  return pts;
}

}  // namespace elg::verify
