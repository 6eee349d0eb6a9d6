#include "pbsq/ratchets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace pbsq {

namespace {

// primes()[i] is 0-based; the prime index j used in reports is i + 1
size_t count_upto(const std::vector<uint64_t>& ps, uint64_t horizon) {
  return static_cast<size_t>(std::upper_bound(ps.begin(), ps.end(), horizon) - ps.begin());
}

}  // namespace

double andrica_k(uint64_t j, const PrimeTable& table) {
  uint64_t p = table.nth_prime(j);
  uint64_t next = table.nth_prime(j + 1);
  return std::sqrt(static_cast<double>(p)) / static_cast<double>(next - p);
}

std::vector<RatchetRecord> ratchet_scan(uint64_t horizon, const PrimeTable& table) {
  const auto& ps = table.primes();
  size_t n = count_upto(ps, horizon);
  if (n == 0) return {};
  if (n >= ps.size()) {
    throw std::out_of_range("ratchet_scan: table must cover horizon plus one prime");
  }
  std::vector<RatchetRecord> records(n);
  for (size_t i = 0; i < n; ++i) {
    uint64_t gap = ps[i + 1] - ps[i];
    records[i] = RatchetRecord{ps[i], i + 1, gap,
                               std::sqrt(static_cast<double>(ps[i])) / static_cast<double>(gap),
                               false};
  }
  double suffix_min = std::numeric_limits<double>::infinity();
  for (size_t i = n; i-- > 0;) {
    records[i].is_candidate = records[i].k < suffix_min;
    suffix_min = std::min(suffix_min, records[i].k);
  }
  return records;
}

std::vector<RatchetRecord> ratchet_candidates(uint64_t horizon, const PrimeTable& table) {
  auto records = ratchet_scan(horizon, table);
  std::vector<RatchetRecord> out;
  for (const auto& r : records) {
    if (r.is_candidate) out.push_back(r);
  }
  return out;
}

GapPredicateReport verify_theorem1A(uint64_t horizon, const PrimeTable& table) {
  GapPredicateReport report;
  report.predicate = "theorem1a";
  report.horizon = horizon;
  const auto& ps = table.primes();
  size_t n = count_upto(ps, horizon);
  if (n >= ps.size()) {
    throw std::out_of_range("verify_theorem1A: table must cover horizon plus one prime");
  }
  double min_k = std::numeric_limits<double>::infinity();
  uint64_t arg = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t gap = ps[i + 1] - ps[i];
    if (gap * gap > 4 * ps[i]) {
      report.violations.push_back(Witness{"gap exceeds 2 sqrt(p)", ps[i],
                                          static_cast<double>(gap), {ps[i + 1]}});
    }
    double k = std::sqrt(static_cast<double>(ps[i])) / static_cast<double>(gap);
    if (k < min_k) {  // the jump largest relative to its take-off point
      min_k = k;
      arg = ps[i];
    }
  }
  report.extremal = Witness{"min k = sqrt(p)/gap", arg, min_k};
  return report;
}

Theorem1BScan theorem1b_scan(double k, uint64_t horizon, const PrimeTable& table) {
  if (!(k > 0)) throw std::domain_error("theorem1b_scan: k > 0");
  Theorem1BScan out;
  const auto& ps = table.primes();
  size_t n = count_upto(ps, horizon);
  if (n >= ps.size()) {
    throw std::out_of_range("theorem1b_scan: table must cover horizon plus one prime");
  }
  double min_k = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) {
    uint64_t gap = ps[i + 1] - ps[i];
    double kg = k * static_cast<double>(gap);
    if (kg * kg > static_cast<double>(ps[i])) {  // gap > sqrt(p)/k
      out.last_violation_index = i + 1;
      out.last_violation_prime = ps[i];
    }
    double kj = std::sqrt(static_cast<double>(ps[i])) / static_cast<double>(gap);
    if (kj < min_k) {
      min_k = kj;
      out.min_k_index = i + 1;
      out.min_k_prime = ps[i];
    }
  }
  out.min_k = min_k;
  return out;
}

std::optional<uint64_t> last_violation_index(double k, uint64_t horizon,
                                             const PrimeTable& table) {
  return theorem1b_scan(k, horizon, table).last_violation_index;
}

GapPredicateReport corollary_violations(uint64_t horizon, const PrimeTable& table) {
  GapPredicateReport report;
  report.predicate = "corollary";
  report.horizon = horizon;
  const auto& ps = table.primes();
  size_t n = count_upto(ps, horizon);
  if (n >= ps.size()) {
    throw std::out_of_range("corollary_violations: table must cover horizon plus one prime");
  }
  uint64_t largest = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t next_gap = ps[i + 1] - ps[i];
    uint64_t prev_gap = i > 0 ? ps[i] - ps[i - 1] : 0;
    bool next_bad = next_gap * next_gap >= ps[i];
    bool prev_bad = i > 0 && prev_gap * prev_gap >= ps[i];
    if (next_bad || prev_bad) {
      report.violations.push_back(Witness{next_bad && prev_bad ? "both gaps >= sqrt(p)"
                                          : next_bad           ? "next gap >= sqrt(p)"
                                                               : "prev gap >= sqrt(p)",
                                          ps[i], static_cast<double>(next_bad ? next_gap : prev_gap),
                                          {prev_gap, next_gap}});
      largest = ps[i];
    }
  }
  report.extremal = Witness{"largest prime with a gap >= sqrt(p)", largest,
                            static_cast<double>(largest)};
  return report;
}

const char* to_string(NeighborClass c) {
  switch (c) {
    case NeighborClass::Barren: return "barren";
    case NeighborClass::Haploid: return "haploid";
    case NeighborClass::Diploid: return "diploid";
  }
  return "?";
}

NeighborClass classify_haploid(uint64_t n, const PrimeTable& table) {
  if (n < 2) throw std::domain_error("classify_haploid: n >= 2");
  if (n + isqrt(n) > table.limit()) {
    throw std::out_of_range("classify_haploid: table must cover n + sqrt(n)");
  }
  auto q = table.prev_prime(n - 1);
  bool left = q && (n - *q) * (n - *q) < n;
  auto r = table.next_prime(n + 1);
  bool right = r && (*r - n) * (*r - n) < n;
  if (left && right) return NeighborClass::Diploid;
  if (left || right) return NeighborClass::Haploid;
  return NeighborClass::Barren;
}

VerificationReport verify_haploid(uint64_t lo, uint64_t hi, const PrimeTable& table) {
  VerificationReport report;
  report.claim = "haploid";
  report.range_lo = lo;
  report.range_hi = hi;
  if (lo < 2) lo = 2;
  if (hi + isqrt(hi) > table.limit()) {
    throw std::out_of_range("verify_haploid: table must cover hi + sqrt(hi)");
  }
  const auto& ps = table.primes();
  size_t left_idx = 0;   // largest prime < n
  size_t right_idx = 0;  // smallest prime > n
  uint64_t largest_haploid = 0;
  uint64_t haploid_count = 0, barren_count = 0;
  for (uint64_t n = lo; n <= hi; ++n) {
    while (left_idx + 1 < ps.size() && ps[left_idx + 1] < n) ++left_idx;
    while (right_idx < ps.size() && ps[right_idx] <= n) ++right_idx;
    bool left = ps[left_idx] < n && (n - ps[left_idx]) * (n - ps[left_idx]) < n;
    bool right = right_idx < ps.size() && (ps[right_idx] - n) * (ps[right_idx] - n) < n;
    NeighborClass c = left && right ? NeighborClass::Diploid
                      : left || right ? NeighborClass::Haploid
                                      : NeighborClass::Barren;
    if (c == NeighborClass::Haploid) {
      ++haploid_count;
      largest_haploid = n;
    } else if (c == NeighborClass::Barren) {
      ++barren_count;
    }
    if (n > 127 && c != NeighborClass::Diploid) {
      report.violations.push_back(Witness{"non-diploid above 127", n, 0.0});
    }
  }
  report.extremes.push_back(Witness{"largest haploid", largest_haploid,
                                    static_cast<double>(largest_haploid)});
  report.extremes.push_back(Witness{"haploid count", haploid_count,
                                    static_cast<double>(haploid_count)});
  report.extremes.push_back(Witness{"barren count", barren_count,
                                    static_cast<double>(barren_count)});
  return report;
}

std::vector<GapPredicateReport> gap_conjecture_report(uint64_t horizon,
                                                      const PrimeTable& table) {
  std::vector<GapPredicateReport> reports;
  const auto& ps = table.primes();
  uint64_t limit = table.limit();

  {  // Bertrand: a prime strictly between n and 2n-2 for n > 3.
    GapPredicateReport r;
    r.predicate = "bertrand";
    r.horizon = std::min(horizon, (limit + 3) / 2);
    for (uint64_t n = 4; n <= r.horizon; ++n) {
      if (table.pi(2 * n - 3) - table.pi(n) < 1) {
        r.violations.push_back(Witness{"no prime in (n, 2n-2)", n, 0.0});
      }
    }
    r.extremal = Witness{"scanned n", r.horizon, 0.0};
    reports.push_back(std::move(r));
  }
  {  // Legendre: a prime between n^2 and (n+1)^2.
    GapPredicateReport r;
    r.predicate = "legendre";
    r.horizon = std::min(horizon, isqrt(limit + 1) - 1);
    for (uint64_t n = 1; n <= r.horizon; ++n) {
      if (table.pi((n + 1) * (n + 1) - 1) - table.pi(n * n) < 1) {
        r.violations.push_back(Witness{"no prime in seg(n)", n, 0.0});
      }
    }
    r.extremal = Witness{"scanned n", r.horizon, 0.0};
    reports.push_back(std::move(r));
  }
  {  // Oppermann: primes in (n(n-1), n^2) and (n^2, n(n+1)) for n >= 2.
    GapPredicateReport r;
    r.predicate = "oppermann";
    r.horizon = std::min(horizon, isqrt(limit) - 1);
    for (uint64_t n = 2; n <= r.horizon; ++n) {
      bool low = table.pi(n * n - 1) - table.pi(n * (n - 1)) >= 1;
      bool high = table.pi(n * (n + 1) - 1) - table.pi(n * n) >= 1;
      if (!low || !high) {
        r.violations.push_back(Witness{!low ? "no prime in (n(n-1), n^2)"
                                            : "no prime in (n^2, n(n+1))",
                                       n, 0.0});
      }
    }
    r.extremal = Witness{"scanned n", r.horizon, 0.0};
    reports.push_back(std::move(r));
  }
  {  // Brocard: at least four primes between p_n^2 and p_{n+1}^2, n >= 2.
    // The n = 1 window (4, 9) holds only {5, 7}; reported, not asserted,
    // since the stated claim fixes no start index.
    GapPredicateReport r;
    r.predicate = "brocard";
    uint64_t cap = isqrt(limit);
    uint64_t min_count = UINT64_MAX, arg_min = 0;
    size_t scanned = 0;
    for (size_t i = 0; i + 1 < ps.size() && ps[i + 1] <= cap && ps[i] <= horizon; ++i) {
      uint64_t count = table.pi(ps[i + 1] * ps[i + 1] - 1) - table.pi(ps[i] * ps[i]);
      scanned = i + 1;
      if (i == 0) {
        r.extremal = Witness{"count at n=1 (reported only)", 1, static_cast<double>(count)};
        continue;
      }
      if (count < 4) {
        r.violations.push_back(Witness{"fewer than four primes", i + 1,
                                       static_cast<double>(count), {ps[i], ps[i + 1]}});
      }
      if (count < min_count) {
        min_count = count;
        arg_min = i + 1;
      }
    }
    r.horizon = scanned;
    r.extremal.aux = {min_count, arg_min};
    reports.push_back(std::move(r));
  }
  {  // Andrica via the gap form: sqrt(p_{j+1}) - sqrt(p_j) < 1 iff
     // (gap - 1)^2 < 4 p_j.
    GapPredicateReport r;
    r.predicate = "andrica";
    size_t n = count_upto(ps, std::min(horizon, limit - 1));
    if (n >= ps.size()) n = ps.size() - 1;
    r.horizon = n > 0 ? ps[n - 1] : 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t gap = ps[i + 1] - ps[i];
      if ((gap - 1) * (gap - 1) >= 4 * ps[i]) {
        r.violations.push_back(Witness{"sqrt difference >= 1", ps[i],
                                       static_cast<double>(gap)});
      }
    }
    r.extremal = Witness{"scanned up to", r.horizon, 0.0};
    reports.push_back(std::move(r));
  }
  {  // Cramer: max of gap / (ln p)^2, a statistic with no pass/fail.
    GapPredicateReport r;
    r.predicate = "cramer";
    r.is_statistic = true;
    size_t n = count_upto(ps, std::min(horizon, limit - 1));
    if (n >= ps.size()) n = ps.size() - 1;
    r.horizon = n > 0 ? ps[n - 1] : 0;
    double best = 0, best_above7 = 0;
    uint64_t arg = 0, arg_above7 = 0;
    for (size_t i = 0; i < n; ++i) {
      double lp = std::log(static_cast<double>(ps[i]));
      double ratio = static_cast<double>(ps[i + 1] - ps[i]) / (lp * lp);
      if (ratio > best) {
        best = ratio;
        arg = ps[i];
      }
      if (ps[i] > 7 && ratio > best_above7) {
        best_above7 = ratio;
        arg_above7 = ps[i];
      }
    }
    r.extremal = Witness{"max gap/(ln p)^2", arg, best, {arg_above7}};
    r.extremal.label += best_above7 > 0 ? " (aux: argmax for p > 7)" : "";
    reports.push_back(std::move(r));
  }
  {  // Forgues: (ln p_{n+1} / ln p_n)^n < e.
    GapPredicateReport r;
    r.predicate = "forgues";
    size_t n = count_upto(ps, std::min(horizon, limit - 1));
    if (n >= ps.size()) n = ps.size() - 1;
    r.horizon = n > 0 ? ps[n - 1] : 0;
    double max_lhs = 0;
    uint64_t arg = 0;
    for (size_t i = 0; i < n; ++i) {
      double lhs = static_cast<double>(i + 1) *
                   std::log(std::log(static_cast<double>(ps[i + 1])) /
                            std::log(static_cast<double>(ps[i])));
      if (lhs >= 1.0) {
        r.violations.push_back(Witness{"(ln p'/ln p)^n >= e", ps[i], std::exp(lhs)});
      }
      if (lhs > max_lhs) {
        max_lhs = lhs;
        arg = ps[i];
      }
    }
    r.extremal = Witness{"max n ln(ln p'/ln p)", arg, max_lhs};
    reports.push_back(std::move(r));
  }
  return reports;
}

void ratchet_csv(uint64_t horizon, const PrimeTable& table, std::ostream& out) {
  out << "p,index,gap,k,candidate\n";
  for (const auto& r : ratchet_scan(horizon, table)) {
    out << r.prime << ',' << r.index << ',' << r.gap << ',' << format_k(r.k) << ','
        << (r.is_candidate ? 1 : 0) << '\n';
  }
}

}  // namespace pbsq
