#include "isoball/serialize.hpp"

#ifndef ISOBALL_VERSION
#define ISOBALL_VERSION "unknown"
#endif

namespace isoball {

const char* version_string() { return ISOBALL_VERSION; }

namespace {

Json members_to_json(const ExplicitFamily& f) {
  Json arr = Json::array();
  for (VertexSet x : f.members()) {
    Json set = Json::array();
    for (unsigned e = 1; e <= f.n(); ++e)
      if (x & (VertexSet(1) << (e - 1))) set.push_back(e);
    arr.push_back(std::move(set));
  }
  return arr;
}

Json cells_to_json(const ProfileFamily& p) {
  Json arr = Json::array();
  for (auto [a, b] : p.cells()) arr.push_back(Json::array({a, b}));
  return arr;
}

}  // namespace

Json to_json(const ExplicitFamily& f) {
  Json j;
  j["repr"] = "explicit";
  j["n"] = f.n();
  if (f.layer())
    j["layer"] = *f.layer();
  else
    j["layer"] = nullptr;
  j["members"] = members_to_json(f);
  j["size"] = f.size();
  return j;
}

Json to_json(const ProfileFamily& p) {
  Json j;
  j["repr"] = "profile";
  j["n"] = p.n();
  j["m"] = p.m();
  j["cells"] = cells_to_json(p);
  j["size"] = p.size().get_str();
  return j;
}

Json to_json(const PaddedProfileFamily& p) {
  Json j;
  j["repr"] = "padded";
  j["n"] = p.base().n();
  j["m"] = p.base().m();
  j["cells"] = cells_to_json(p.base());
  if (p.cut_cell()) {
    j["cut_cell"] = Json::array({p.cut_cell()->first, p.cut_cell()->second});
    j["taken"] = p.taken().get_str();
  }
  j["size"] = p.size().get_str();
  return j;
}

AnyFamily family_from_json(const Json& j) {
  const std::string repr = j.at("repr").get<std::string>();
  const unsigned n = j.at("n").get<unsigned>();
  if (repr == "explicit") {
    std::vector<VertexSet> members;
    for (const auto& set : j.at("members")) {
      VertexSet x = 0;
      for (const auto& e : set) x |= VertexSet(1) << (e.get<unsigned>() - 1);
      members.push_back(x);
    }
    std::optional<unsigned> layer;
    if (j.contains("layer") && !j.at("layer").is_null()) layer = j.at("layer").get<unsigned>();
    return ExplicitFamily(n, std::move(members), layer);
  }
  const unsigned m = j.at("m").get<unsigned>();
  ProfileFamily p(n, m);
  for (const auto& cell : j.at("cells"))
    p.set(cell.at(0).get<unsigned>(), cell.at(1).get<unsigned>());
  if (repr == "profile") return p;
  if (repr == "padded") {
    std::optional<ProfileFamily::Cell> cut;
    Natural taken(0);
    if (j.contains("cut_cell")) {
      cut = ProfileFamily::Cell{j.at("cut_cell").at(0).get<unsigned>(),
                                j.at("cut_cell").at(1).get<unsigned>()};
      taken = Natural(j.at("taken").get<std::string>());
    }
    return PaddedProfileFamily(std::move(p), cut, std::move(taken));
  }
  throw std::invalid_argument("family_from_json: unknown repr '" + repr + "'");
}

Json to_json(const SearchReport& rep) {
  Json j;
  j["kind"] = rep.kind;
  j["params"] = rep.params;
  j["families_examined"] = rep.families_examined.get_str();
  if (rep.min_stat) j["min_stat"] = *rep.min_stat;
  if (rep.max_stat) j["max_stat"] = *rep.max_stat;
  if (rep.witness_explicit) j["witness"] = to_json(*rep.witness_explicit);
  if (rep.witness_profile) j["witness_profile"] = to_json(*rep.witness_profile);
  Json counters;
  for (const auto& [key, value] : rep.counters) counters[key] = value.get_str();
  j["counters"] = std::move(counters);
  j["ok"] = rep.ok;
  j["wall_seconds"] = rep.wall_seconds;
  return j;
}

Json to_json(const RunReport& rep) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = rep.command;
  j["version"] = version_string();
  j["parameters"] = rep.parameters;
  if (rep.seed) j["seed"] = *rep.seed;
  j["verdicts"] = rep.verdicts;
  j["statistics"] = rep.statistics;
  j["timing_seconds"] = rep.timing_seconds;
  return j;
}

}  // namespace isoball
