#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <vector>

#include "pbsq/errors.hpp"
#include "pbsq/prime_table.hpp"

using namespace pbsq;

namespace {

// Independent oracle: plain bit sieve, no shared code with PrimeTable.
std::vector<bool> naive_composite_flags(uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  composite[0] = composite[1] = true;
  for (uint64_t i = 2; i * i <= n; ++i) {
    if (composite[i]) continue;
    for (uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return composite;
}

uint64_t naive_pi(const std::vector<bool>& composite, uint64_t x) {
  uint64_t count = 0;
  for (uint64_t m = 2; m <= x; ++m) count += !composite[m];
  return count;
}

}  // namespace

TEST_CASE("sieve_upto small prime lists") {
  auto t = PrimeTable::sieve_upto(20);
  CHECK(t.primes() == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});

  auto t2 = PrimeTable::sieve_upto(2);
  CHECK(t2.primes() == std::vector<uint64_t>{2});

  CHECK_THROWS_AS(PrimeTable::sieve_upto(1), std::domain_error);
}

TEST_CASE("pi against brute-force trial division") {
  auto t = PrimeTable::sieve_upto(100);
  uint64_t count = 0;
  for (uint64_t m = 2; m <= 100; ++m) {
    bool prime = true;
    for (uint64_t i = 2; i * i <= m; ++i) {
      if (m % i == 0) {
        prime = false;
        break;
      }
    }
    count += prime;
  }
  CHECK(count == 25);
  CHECK(t.pi(100) == 25);
  CHECK(t.pi(1) == 0);
  CHECK(t.pi(20) == 8);
}

TEST_CASE("pi(1e6) against an independent sieve oracle") {
  auto composite = naive_composite_flags(1000000);
  auto t = PrimeTable::sieve_upto(1000000);
  CHECK(naive_pi(composite, 1000000) == 78498);
  CHECK(t.pi(1000000) == 78498);
  CHECK_THROWS_AS(t.pi(1000001), std::out_of_range);
}

TEST_CASE("is_prime_trial") {
  CHECK(is_prime_trial(29));
  CHECK_FALSE(is_prime_trial(1));
  CHECK_FALSE(is_prime_trial(0));
  CHECK_FALSE(is_prime_trial(9409));  // 97^2
  CHECK(is_prime_trial(2));
}

TEST_CASE("least_prime_factor") {
  CHECK(least_prime_factor(33) == 3);
  CHECK(least_prime_factor(35) == 5);
  CHECK(least_prime_factor(29) == 29);
  CHECK(least_prime_factor(9447) == 3);
  CHECK_THROWS_AS(least_prime_factor(1), std::domain_error);
}

TEST_CASE("lpf table invariants up to 1e5") {
  auto t = PrimeTable::sieve_upto(100000);
  for (uint64_t m = 2; m <= 100000; ++m) {
    uint64_t p = t.lpf(m);
    CHECK(m % p == 0);
    bool prime = t.is_prime(m);
    CHECK(prime == (p == m));
    CHECK(prime == is_prime_trial(m));
    if (!prime) CHECK(p * p <= m);  // least factor of a composite is <= sqrt
  }
}

TEST_CASE("primorial_hash") {
  CHECK(primorial_hash(std::sqrt(80.0)) == 210);
  CHECK(primorial_hash(11) == 2310);
  CHECK(primorial_hash(1) == 1);
  CHECK(primorial_hash(0) == 1);
  CHECK_THROWS_AS(primorial_hash(200), std::overflow_error);

  // constant between consecutive primes, jumps by exactly p at each prime
  uint64_t prev = 1;
  for (uint64_t k = 2; k <= 50; ++k) {
    uint64_t v = primorial_hash(static_cast<double>(k));
    CHECK(primorial_hash(k - 0.5) == prev);  // unchanged since k-1
    if (is_prime_trial(k)) {
      CHECK(v == prev * k);
    } else {
      CHECK(v == prev);
    }
    prev = v;
  }
}

TEST_CASE("nth_prime and prime_index") {
  auto t = PrimeTable::sieve_upto(1000);
  CHECK(t.nth_prime(4) == 7);
  CHECK(t.nth_prime(1) == 2);
  CHECK(t.prime_index(113) == 30);
  CHECK(t.prime_index(127) == 31);
  CHECK(t.prime_index(t.nth_prime(100)) == 100);
  CHECK_THROWS_AS(t.nth_prime(0), std::out_of_range);
  CHECK_THROWS_AS(t.nth_prime(1000000), std::out_of_range);
  CHECK_THROWS_AS(t.prime_index(4), std::out_of_range);
}

TEST_CASE("pi_legendre worked examples") {
  auto t = PrimeTable::sieve_upto(1000);
  CHECK(pi_legendre(100, t) == 25);
  CHECK(pi_legendre(4, t) == 2);
  CHECK(pi_legendre(2, t) == 1);

  // d-subset sum for n = 100 over {2,3,5,7}: 99-117+45-6+0 = 21, plus pi(10)=4
  CHECK(t.pi(10) + 21 == 25);
}

TEST_CASE("pi_legendre equals pi_exact exhaustively to 2000") {
  auto t = PrimeTable::sieve_upto(2000);
  for (uint64_t n = 2; n <= 2000; ++n) {
    CAPTURE(n);
    REQUIRE(pi_legendre(n, t) == t.pi(n));
  }
}

TEST_CASE("pi_legendre node budget is a capacity error") {
  auto t = PrimeTable::sieve_upto(1000);
  CHECK_THROWS_AS(pi_legendre(100000, t, 10), CapacityError);
}

TEST_CASE("segmented table matches dense on point queries") {
  auto dense = PrimeTable::sieve_upto(3000000);
  auto seg = PrimeTable::sieve_upto(3000000, /*segmented_threshold=*/1000000);
  REQUIRE(seg.segmented());
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    uint64_t m = 2 + rng() % 2999999;
    CAPTURE(m);
    REQUIRE(seg.is_prime(m) == dense.is_prime(m));
    REQUIRE(seg.lpf(m) == dense.lpf(m));
    REQUIRE(seg.pi(m) == dense.pi(m));
  }
  CHECK(seg.pi(3000000) == dense.pi(3000000));
  CHECK(seg.prev_prime(3000000) == dense.prev_prime(3000000));
  CHECK(seg.next_prime(2999900) == dense.next_prime(2999900));
  CHECK_THROWS_AS(seg.primes(), CapacityError);
}

TEST_CASE("for_each_prime_in streams the same primes") {
  auto t = PrimeTable::sieve_upto(10000);
  std::vector<uint64_t> streamed;
  for_each_prime_in(2, 10000, t.base_primes(), [&](uint64_t p) { streamed.push_back(p); });
  CHECK(streamed == t.primes());

  std::vector<uint64_t> window;
  for_each_prime_in(9900, 9999, t.base_primes(), [&](uint64_t p) { window.push_back(p); });
  CHECK(window == std::vector<uint64_t>{9901, 9907, 9923, 9929, 9931, 9941, 9949, 9967, 9973});
}

TEST_CASE("prime cache round trip is bit-identical") {
  namespace fs = std::filesystem;
  auto t = PrimeTable::sieve_upto(100000);
  fs::path file = fs::temp_directory_path() / "pbsq_cache_test.pbsq";
  t.save_cache(file);
  auto loaded = PrimeTable::load_cache(file);
  CHECK(loaded.limit() == t.limit());
  REQUIRE(loaded.primes() == t.primes());
  for (uint64_t m : {2ull, 3ull, 4ull, 99991ull, 99989ull, 4096ull, 99999ull}) {
    CHECK(loaded.lpf(m) == t.lpf(m));
    CHECK(loaded.is_prime(m) == t.is_prime(m));
  }
  CHECK(loaded.pi(100000) == t.pi(100000));
  fs::remove(file);
}

TEST_CASE("corrupt cache is rejected") {
  namespace fs = std::filesystem;
  fs::path file = fs::temp_directory_path() / "pbsq_cache_bad.pbsq";
  {
    std::FILE* f = std::fopen(file.c_str(), "wb");
    REQUIRE(f != nullptr);
    std::fputs("NOPE garbage", f);
    std::fclose(f);
  }
  CHECK_THROWS(PrimeTable::load_cache(file));
  fs::remove(file);
}

TEST_CASE("isqrt edge cases") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(999999999999ull) == 999999);
  uint64_t big = 4000000000ull;
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
}
