#include "ocsp/report.hpp"

namespace ocsp {

void Report::pass(const std::string& law, const std::string& witness) {
  results.push_back({law, witness, true});
}

void Report::fail(const std::string& law, const std::string& witness) {
  results.push_back({law, witness, false});
}

void Report::check(bool ok, const std::string& law, const std::string& witness) {
  results.push_back({law, witness, ok});
}

void Report::merge(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

bool Report::all_ok() const {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& r : results)
    if (!r.ok) ++n;
  return n;
}

size_t Report::passes() const { return results.size() - failures(); }

std::string Report::first_failure() const {
  for (const auto& r : results)
    if (!r.ok) return r.law + " @ " + r.witness;
  return "";
}

nlohmann::json Report::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results)
    out.push_back({{"law", r.law},
                   {"witness", r.witness},
                   {"status", r.ok ? "pass" : "fail"}});
  return out;
}

std::string Report::summary() const {
  return std::to_string(results.size() - failures()) + "/" +
         std::to_string(results.size()) + " checks passed";
}

}  // namespace ocsp
