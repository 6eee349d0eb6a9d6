#include "pbsq/report.hpp"

#include <charconv>
#include <cstdio>

namespace pbsq {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_k(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7f", v);
  return buf;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j{{"label", w.label}, {"n", w.n}, {"value", w.value}};
  if (!w.aux.empty()) j["aux"] = w.aux;
  return j;
}

nlohmann::json VerificationReport::to_json(bool include_meta) const {
  nlohmann::json j;
  j["claim"] = claim;
  j["range"] = {range_lo, range_hi};
  j["pass"] = pass();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) j["violations"].push_back(witness_to_json(v));
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : extremes) j["witnesses"].push_back(witness_to_json(w));
  if (include_meta) j["runtime_ms"] = runtime_ms;
  return j;
}

nlohmann::json GapPredicateReport::to_json(bool include_meta) const {
  (void)include_meta;
  nlohmann::json j;
  j["predicate"] = predicate;
  j["horizon"] = horizon;
  j["statistic_only"] = is_statistic;
  j["pass"] = pass();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) j["violations"].push_back(witness_to_json(v));
  j["extremal"] = witness_to_json(extremal);
  return j;
}

}  // namespace pbsq
