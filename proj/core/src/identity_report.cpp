#include "qfl/identity_report.hpp"

#include <nlohmann/json.hpp>

namespace qfl {

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j = {
      {"identity_id", r.identity_id},
      {"equation", r.equation},
      {"range", r.range},
      {"status", r.status()},
  };
  if (r.first_failure) {
    j["first_failure"] = {
        {"parameters", r.first_failure->parameters},
        {"lhs", r.first_failure->lhs},
        {"rhs", r.first_failure->rhs},
    };
  }
  return j;
}

}  // namespace qfl
