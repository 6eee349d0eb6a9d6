#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pbsq {

// One data point inside a report: a labeled n with an attached value and
// optional auxiliary integers (gap, counts, positions, ...).
struct Witness {
  std::string label;
  uint64_t n = 0;
  double value = 0.0;
  std::vector<uint64_t> aux;

  Witness() = default;
  Witness(std::string label_, uint64_t n_, double value_, std::vector<uint64_t> aux_ = {})
      : label(std::move(label_)), n(n_), value(value_), aux(std::move(aux_)) {}
};

// Uniform record for a verification driver run: which claim, over what range,
// the violations found (violations are data, not errors), and extremal
// witnesses such as minima or last occurrences.
struct VerificationReport {
  std::string claim;
  uint64_t range_lo = 0;
  uint64_t range_hi = 0;
  std::vector<Witness> violations;
  std::vector<Witness> extremes;
  double runtime_ms = 0.0;

  bool pass() const { return violations.empty(); }
  nlohmann::json to_json(bool include_meta = true) const;
};

// Per-predicate gap report for the named-conjecture checks: violations by
// index/value plus one extremal statistic.
struct GapPredicateReport {
  std::string predicate;
  uint64_t horizon = 0;
  std::vector<Witness> violations;
  Witness extremal;
  bool is_statistic = false;  // statistic-only predicates have no pass/fail

  bool pass() const { return is_statistic || violations.empty(); }
  nlohmann::json to_json(bool include_meta = true) const;
};

nlohmann::json witness_to_json(const Witness& w);

// Shortest round-trip decimal for doubles (via std::to_chars).
std::string format_double(double v);

// Fixed 7 decimals, the precision ratchet values are quoted at.
std::string format_k(double v);

}  // namespace pbsq
