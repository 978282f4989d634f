#include "fuzzitop/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace fuzzitop {

namespace {

Degree degree_from_json(const Json& j) {
  if (j.is_string()) return Degree::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v == 0) return Degree::zero();
    if (v == 1) return Degree::one();
  }
  throw StructuralError("degree must be a string \"p/q\"/decimal or the integer 0 or 1");
}

Carrier carrier_from_json(const Json& j) {
  if (!j.contains("points") || !j["points"].is_array())
    throw StructuralError("missing \"points\" array");
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw StructuralError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  return Carrier(std::move(labels));
}

void fill_table(FuzzyFamily& fam, const Json& table) {
  if (!table.is_array()) throw StructuralError("degree table must be an array");
  for (const auto& entry : table) {
    if (!entry.contains("set") || !entry.contains("degree"))
      throw StructuralError("table entries need \"set\" and \"degree\"");
    std::vector<std::string> labels;
    for (const auto& l : entry["set"]) labels.push_back(l.get<std::string>());
    fam.set(fam.carrier().from_labels(labels), degree_from_json(entry["degree"]));
  }
}

Json set_to_json(const Carrier& c, Subset s) {
  Json arr = Json::array();
  for (const auto& l : c.to_labels(s)) arr.push_back(l);
  return arr;
}

Json table_to_json(const FuzzyFamily& fam, bool topology_defaults) {
  const Carrier& c = fam.carrier();
  Json table = Json::array();
  for (std::uint32_t m = 0; m < c.subset_count(); ++m) {
    const Subset s{m};
    const bool unit_default =
        topology_defaults && (s.empty() || s == c.full());
    const Degree def = unit_default ? Degree::one() : Degree::zero();
    if (fam.at(s) == def) continue;
    table.push_back({{"set", set_to_json(c, s)}, {"degree", fam.at(s).str()}});
  }
  return table;
}

}  // namespace

FuzzySpace space_from_json(const Json& j) {
  const Carrier c = carrier_from_json(j);
  if (c.size() < 1) throw StructuralError("a space needs at least one point");
  FuzzyFamily tau(c);
  tau.set(Subset{}, Degree::one());
  tau.set(c.full(), Degree::one());
  if (j.contains("tau")) fill_table(tau, j["tau"]);
  return FuzzySpace(std::move(tau));
}

Json space_to_json(const FuzzySpace& s) {
  Json j;
  j["points"] = Json::array();
  for (const auto& l : s.carrier().labels()) j["points"].push_back(l);
  j["tau"] = table_to_json(s.tau(), true);
  return j;
}

FuzzyFamily family_from_json(const Json& j) {
  const Carrier c = carrier_from_json(j);
  return family_table_from_json(j.contains("family") ? j["family"] : Json::array(), c);
}

FuzzyFamily family_table_from_json(const Json& table, const Carrier& c) {
  FuzzyFamily fam(c);
  fill_table(fam, table);
  return fam;
}

Json family_to_json(const FuzzyFamily& f) {
  Json j;
  j["points"] = Json::array();
  for (const auto& l : f.carrier().labels()) j["points"].push_back(l);
  j["family"] = table_to_json(f, false);
  return j;
}

PointMap map_from_json(const Json& j, const Carrier& dom, const Carrier& cod) {
  if (!j.contains("map") || !j["map"].is_object())
    throw StructuralError("missing \"map\" object");
  PointMap m{dom, cod, std::vector<int>(static_cast<size_t>(dom.size()), -1)};
  for (const auto& [from, to] : j["map"].items()) {
    if (!to.is_string()) throw StructuralError("map values must be point labels");
    m.assign[static_cast<size_t>(dom.require(from))] = cod.require(to.get<std::string>());
  }
  for (int v : m.assign)
    if (v < 0) throw StructuralError("map is not total over the domain");
  return m;
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["level_cuts_are_topologies"] = r.level_cuts_are_topologies;
  j["issues"] = Json::array();
  for (const auto& i : r.issues)
    j["issues"].push_back({{"axiom", i.axiom}, {"detail", i.detail}});
  return j;
}

Json product_to_json(const ProductStructure& p) {
  Json j;
  j["points"] = Json::array();
  for (const auto& l : p.carrier.labels()) j["points"].push_back(l);
  j["prebase"] = table_to_json(p.prebase, false);
  j["preopen"] = table_to_json(p.preopen, false);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(std::string("bad JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_json_text(ss.str());
  }
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace fuzzitop
