#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "pbsq/prime_table.hpp"
#include "pbsq/report.hpp"
#include "pbsq/sects.hpp"

namespace pbsq {

// Integer span strictly between x^2 and (x+1)^2. Empty iff lo > hi.
struct Segment {
  uint64_t lo = 1;
  uint64_t hi = 0;

  bool empty() const { return lo > hi; }
  uint64_t size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(uint64_t m) const { return m >= lo && m <= hi; }
};

// seg(n) for a natural root: (n^2, (n+1)^2).
Segment segment_of(uint64_t n);

// seg(sqrt(m)) and seg(sqrt(m) - 1), computed exactly in integer arithmetic.
// These are the critical roots where segment membership changes.
Segment segment_of_sqrt(uint64_t m);
Segment segment_of_sqrt_minus1(uint64_t m);

// seg(x) for an arbitrary real root (CLI convenience; exact when x^2 and
// (x+1)^2 are exactly representable).
Segment segment_of_real(double x);

// Number of primes in the segment. Table range error if hi > limit.
uint64_t count_primes_in_segment(const Segment& seg, const PrimeTable& table);

// Prime counts of the two half segments of seg(n), split at n(n+1). The
// split point goes to the left half when it is itself prime, which happens
// only at n = 1 (split 2); for n >= 2 the split is composite and both halves
// are effectively open.
std::pair<uint64_t, uint64_t> half_segment_counts(uint64_t n, const PrimeTable& table);

// A = n/ln n, B = A/ln A; returns (A-(B-1), A+(B-1)). n < 2 is a domain error.
std::pair<double, double> prime_limit_bounds(uint64_t n);

// Longest run of consecutive odd composites inside seg(n), lpf-labelled;
// ties broken by smallest start. Empty sect when the segment has none.
Sect max_sect_in_segment(uint64_t n, const PrimeTable& table);

// Per-segment census: everything the verification drivers need in one pass.
struct SegmentCensus {
  Segment segment;
  uint64_t prime_count = 0;   // t(n)
  uint64_t left_count = 0;    // primes in (n^2, n(n+1)]
  uint64_t right_count = 0;   // primes in (n(n+1), (n+1)^2)
  Sect max_run;
};

SegmentCensus census_segment(uint64_t n, std::span<const uint64_t> base_primes);

enum class Theorem1Mode { Integer, Real };

// Integer mode: t(n) >= 2 for 1 <= n <= max_n and >= 3 for n >= 6.
// Real mode: at least one prime in seg(x) at every critical root
// x in {sqrt(m), sqrt(m)-1 : m <= (max_n+1)^2} with x > sqrt(2)-1; prime
// counts are piecewise constant between critical roots and minimal at them,
// so this finitely certifies the continuous claim. Real mode needs the table
// to reach (max_n+2)^2.
VerificationReport verify_theorem1(uint64_t max_n, Theorem1Mode mode, const PrimeTable& table,
                                   int threads = 1);

// Both half segments of seg(n) contain a prime for 1 <= n <= max_n.
VerificationReport verify_theorem2(uint64_t max_n, const PrimeTable& table, int threads = 1);

// A-(B-1) < t(n) < A+(B-1) for 2 <= n <= max_n.
VerificationReport verify_prime_limit_bounds(uint64_t max_n, const PrimeTable& table,
                                             int threads = 1);

// CSV: one row per n with n, t(n), left, right, lower, upper, max_run.
void segment_table_csv(uint64_t max_n, const PrimeTable& table, std::ostream& out);

}  // namespace pbsq
