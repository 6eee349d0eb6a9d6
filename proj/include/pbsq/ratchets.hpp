#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pbsq/prime_table.hpp"
#include "pbsq/report.hpp"

namespace pbsq {

// Per-prime gap record. k = sqrt(p_j) / (p_{j+1} - p_j). A candidate is a
// prime whose k is strictly below every later k within the scan horizon;
// candidacy is always horizon-relative, never asserted absolutely.
struct RatchetRecord {
  uint64_t prime = 0;
  uint64_t index = 0;  // 1-based, p_1 = 2
  uint64_t gap = 0;
  double k = 0.0;
  bool is_candidate = false;
};

// Ratchet value at prime index j (needs p_{j+1} in the table).
double andrica_k(uint64_t j, const PrimeTable& table);

// Records for every p_j <= horizon, candidates flagged by a right-to-left
// suffix-minimum pass. Requires a dense table covering horizon plus the next
// prime after it.
std::vector<RatchetRecord> ratchet_scan(uint64_t horizon, const PrimeTable& table);

// Just the candidates, ascending.
std::vector<RatchetRecord> ratchet_candidates(uint64_t horizon, const PrimeTable& table);

// p_{j+1} <= p_j + 2 sqrt(p_j) for all p_j <= horizon, checked as
// gap^2 <= 4 p_j in exact integers. The real-x form reduces to the same
// per-gap check: the next prime after x is furthest, relative to 2 sqrt(x),
// when x sits on the preceding prime.
GapPredicateReport verify_theorem1A(uint64_t horizon, const PrimeTable& table);

struct Theorem1BScan {
  std::optional<uint64_t> last_violation_index;  // largest j with gap > sqrt(p_j)/k
  std::optional<uint64_t> last_violation_prime;
  uint64_t min_k_index = 0;  // tightest point of inequality (5): argmin of k_j
  uint64_t min_k_prime = 0;
  double min_k = 0.0;
};

Theorem1BScan theorem1b_scan(double k, uint64_t horizon, const PrimeTable& table);

// The largest j with p_{j+1} > p_j + (1/k) sqrt(p_j) and p_j <= horizon.
std::optional<uint64_t> last_violation_index(double k, uint64_t horizon,
                                             const PrimeTable& table);

// All p_j <= horizon with (p_{j+1}-p_j) >= sqrt(p_j) or (p_j-p_{j-1}) >=
// sqrt(p_j); the extremal witness is the largest such prime.
GapPredicateReport corollary_violations(uint64_t horizon, const PrimeTable& table);

enum class NeighborClass { Barren, Haploid, Diploid };
const char* to_string(NeighborClass c);

// Diploid iff both open intervals (n-sqrt(n), n) and (n, n+sqrt(n)) contain a
// prime; haploid iff exactly one; barren iff neither. Comparisons are done in
// exact integers: q > n - sqrt(n) iff (n-q)^2 < n.
NeighborClass classify_haploid(uint64_t n, const PrimeTable& table);

// Scans [lo, hi], expecting every n > 127 to be diploid. Violations are
// non-diploid n > 127; extremes carry the largest haploid and counts.
VerificationReport verify_haploid(uint64_t lo, uint64_t hi, const PrimeTable& table);

// The named-conjecture predicate suite: Bertrand, Legendre, Oppermann, Brocard,
// Andrica, Cramer (statistic only), Forgues. Sub-horizons are capped by what
// the table can certify; each report states its effective horizon.
std::vector<GapPredicateReport> gap_conjecture_report(uint64_t horizon,
                                                      const PrimeTable& table);

// CSV: p,index,gap,k,candidate, one row per prime <= horizon.
void ratchet_csv(uint64_t horizon, const PrimeTable& table, std::ostream& out);

}  // namespace pbsq
