#ifndef ISOBALL_SERIALIZE_HPP
#define ISOBALL_SERIALIZE_HPP

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "isoball/families.hpp"
#include "isoball/search.hpp"

namespace isoball {

using Json = nlohmann::json;  // keys are kept sorted, so output is deterministic

const char* version_string();

// Family wire shape: {"n": ..., "repr": "explicit"|"profile"|"padded", ...}
// with members as sorted 1-based integer lists and cells as [a, b] pairs.
// Counts that can exceed 64 bits travel as decimal strings.
Json to_json(const ExplicitFamily& f);
Json to_json(const ProfileFamily& f);
Json to_json(const PaddedProfileFamily& f);

using AnyFamily = std::variant<ExplicitFamily, ProfileFamily, PaddedProfileFamily>;
AnyFamily family_from_json(const Json& j);

Json to_json(const SearchReport& rep);

// Envelope every CLI command emits: verdict fields are identical across
// reruns with the same inputs; timing is informational.
struct RunReport {
  std::string command;
  Json parameters;
  std::optional<std::uint64_t> seed;
  Json verdicts;
  Json statistics;
  double timing_seconds = 0;
};

Json to_json(const RunReport& rep);

}  // namespace isoball

#endif
