#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ocsp {

// One verified identity or universal property instance.
struct LawResult {
  std::string law;
  std::string witness;
  bool ok = true;
};

struct Report {
  std::vector<LawResult> results;

  void pass(const std::string& law, const std::string& witness);
  void fail(const std::string& law, const std::string& witness);
  void check(bool ok, const std::string& law, const std::string& witness);
  void merge(const Report& other);

  bool all_ok() const;
  size_t failures() const;
  size_t passes() const;
  // First failing entry, for terse error messages.
  std::string first_failure() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

}  // namespace ocsp
