#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace pbsq {

// Exact integer square root: largest r with r*r <= n.
uint64_t isqrt(uint64_t n);

// Trial-division primality: true iff h >= 2 and no i in [2, sqrt(h)] divides h.
// 0 and 1 return false.
bool is_prime_trial(uint64_t h);

// Smallest prime dividing m, by direct trial division (no table).
// Throws std::domain_error for m < 2.
uint64_t least_prime_factor(uint64_t m);

// Product of all primes <= x, empty product = 1.
// Throws std::overflow_error if the product exceeds 64 bits.
uint64_t primorial_hash(double x);

// x# as a value pair; primorial_of(sqrt(80)).value == 210.
struct Primorial {
  double x = 0.0;
  uint64_t value = 1;
};

inline Primorial primorial_of(double x) { return Primorial{x, primorial_hash(x)}; }

// Sieved prime infrastructure: primality, least prime factors, and a
// monotone pi(x) service up to a fixed limit.
//
// Below `segmented_threshold` the table is dense: an odd-only lpf array plus
// the full prime list. Above it the table holds a dense base table to
// sqrt(limit) and per-block prime counts; point queries re-sieve one block,
// so memory stays bounded for limits around 1e8 and beyond.
//
// Tables are immutable after construction and safe for concurrent reads.
class PrimeTable {
 public:
  static constexpr uint64_t kDefaultSegmentedThreshold = 100'000'000;
  static constexpr uint64_t kBlockSpan = 1u << 20;

  // Sieve of Eratosthenes up to n inclusive. n < 2 is a domain error.
  static PrimeTable sieve_upto(uint64_t n,
                               uint64_t segmented_threshold = kDefaultSegmentedThreshold);

  uint64_t limit() const { return limit_; }
  bool segmented() const { return segmented_; }

  // True iff m is prime. Requires m <= limit.
  bool is_prime(uint64_t m) const;

  // Least prime factor of m, 2 <= m <= limit. lpf(p) = p for primes.
  uint64_t lpf(uint64_t m) const;

  // Number of primes <= x. Requires x <= limit.
  uint64_t pi(uint64_t x) const;

  // Full ascending prime list. Dense tables only (CapacityError otherwise).
  const std::vector<uint64_t>& primes() const;

  // Primes up to sqrt(limit), available in both modes.
  std::span<const uint64_t> base_primes() const;

  // 1-based: nth_prime(1) = 2. Dense only. Out-of-table -> std::out_of_range.
  uint64_t nth_prime(uint64_t j) const;

  // Inverse of nth_prime. p must be a prime in the table.
  uint64_t prime_index(uint64_t p) const;

  // Largest prime <= m / smallest prime >= m within the table.
  std::optional<uint64_t> prev_prime(uint64_t m) const;
  std::optional<uint64_t> next_prime(uint64_t m) const;

  // Versioned binary prime cache (magic "PBSQ"). A loaded table behaves
  // bit-identically to a freshly sieved one. Dense tables only.
  void save_cache(const std::filesystem::path& file) const;
  static PrimeTable load_cache(const std::filesystem::path& file);

 private:
  PrimeTable() = default;

  void build_dense(uint64_t n);
  void build_segmented(uint64_t n);
  void rebuild_lpf_from_primes();
  uint64_t count_in_block(uint64_t block_lo, uint64_t x) const;

  uint64_t limit_ = 0;
  bool segmented_ = false;

  // Dense: slot m>>1 for odd m >= 3 holds the least prime factor of m, or 0
  // when m is prime (its lpf is itself). Evens are implicit (lpf 2).
  std::vector<uint16_t> odd_lpf_;
  std::vector<uint64_t> primes_;

  // Segmented: dense base table to sqrt(limit) plus pi at block boundaries.
  std::unique_ptr<PrimeTable> base_;
  std::vector<uint64_t> block_pi_;  // block_pi_[b] = pi(b*kBlockSpan - 1)
};

// Marks odd composites of [lo, hi] in `flags` (flags[(m - lo_odd) / 2] set for
// composite odd m), using the given base primes. lo_odd is the first odd >= lo.
// Requires base primes to cover sqrt(hi).
void sieve_odd_block(uint64_t lo, uint64_t hi, std::span<const uint64_t> base_primes,
                     std::vector<uint8_t>& flags);

// As sieve_odd_block, but records the least prime factor of each odd
// composite; 0 means prime (lpf is the number itself).
void sieve_odd_block_lpf(uint64_t lo, uint64_t hi, std::span<const uint64_t> base_primes,
                         std::vector<uint32_t>& labels);

// Streams every prime in [lo, hi] in order through f, using a block sieve.
// Base primes must cover sqrt(hi).
template <typename F>
void for_each_prime_in(uint64_t lo, uint64_t hi, std::span<const uint64_t> base_primes, F&& f) {
  if (hi < 2 || hi < lo) return;
  if (lo <= 2) f(uint64_t{2});
  uint64_t start = std::max<uint64_t>(lo, 3);
  if (!(start & 1)) ++start;
  std::vector<uint8_t> flags;
  for (uint64_t block_lo = start; block_lo <= hi; ) {
    uint64_t block_hi = std::min(hi, block_lo + PrimeTable::kBlockSpan - 1);
    sieve_odd_block(block_lo, block_hi, base_primes, flags);
    for (uint64_t m = block_lo; m <= block_hi; m += 2) {
      if (!flags[(m - block_lo) >> 1]) f(m);
    }
    if (block_hi == hi) break;
    block_lo = block_hi + 1;
    if (!(block_lo & 1)) ++block_lo;
  }
}

// pi(n) via the prime-generator formula pi(n) = pi(sqrt(n)) + sum over
// squarefree products d of primes <= sqrt(n) of mu(d)*floor(n/d), with the
// d = 1 term taken as n - 1. Terms with d > n vanish and are pruned, so the
// enumeration visits only the nonzero subset products.
// The table must cover sqrt(n). Node budget exceeded -> CapacityError.
uint64_t pi_legendre(uint64_t n, const PrimeTable& table,
                     uint64_t node_budget = 400'000'000);

}  // namespace pbsq
