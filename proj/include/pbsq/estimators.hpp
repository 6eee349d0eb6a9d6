#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbsq/prime_table.hpp"
#include "pbsq/report.hpp"

namespace pbsq {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;

// Li(x) = gamma + ln ln x + sum_k (ln x)^k / (k! k), truncated when a term
// drops below 1e-17 of the partial sum. Domain x > 1.
double li_series(double x);

// Qx = a + b - c with a = x/ln x, b = a/ln a, c = jb/ln(jb), j = adjust.
// Domain error when any log argument is <= 1.
double q_estimator(double x, double adjust = 0.5);

// False when jb is so close to 1 that c = jb/ln(jb) is in its unstable
// region (jb < e); the estimate is still computed.
bool q_estimator_reliable(double x, double adjust = 0.5);

// SB(x) = (Li(x) + Li((sqrt(x)-1)^2)) / 2 - 1.5: two Li evaluations averaged
// across x. Domain error when the inner argument (sqrt(x)-1)^2 is <= 1.
double sb_subroutine(double x);

// Streams n = 2..horizon checking: A+(B-1) >= pi(n) everywhere, and
// n/ln n < pi(n) from 17 on. Where Sylvester's upper constant 1.04423
// falls below the actual count is recorded in extremes (expected at desk
// scale), not as a violation.
VerificationReport pi_bounds_check(uint64_t horizon, const PrimeTable& table);

// The Lemma-4-equality recurrence: s1 = 3, s2 = 5, s_{k+1} = 2 s_{k-1} + 1.
std::vector<uint64_t> fake_table1_sequence(size_t count);
// Rows (s_{k-1}, s_k, s_{k+1}).
std::vector<std::array<uint64_t, 3>> fake_table1(size_t rows);

// t1 = start, t_{k+1} = largest odd number <= t_k + 2 sqrt(t_k).
std::vector<uint64_t> fake_table2(uint64_t start, size_t rows);

// Euler totient via the table's lpf factorization.
uint64_t totient_from_lpf(uint64_t n, const PrimeTable& table);

// One evaluation of the totient lower-bound inequality
// n/phi(n) <= e^gamma ln ln n + C / ln ln n for C = 5/2 and C = 2.50637.
struct RosserPoint {
  uint64_t n = 0;
  double ratio = 0.0;      // n / phi(n)
  double bound_52 = 0.0;   // C = 5/2
  double bound_alt = 0.0;  // C = 2.50637
  bool holds_52 = false;
  bool holds_alt = false;
};

RosserPoint rosser_point(uint64_t n, uint64_t phi);

// The single published exception: n = 23# = 223092870.
RosserPoint rosser_check_23_primorial();

// Asserts the 5/2 form for 3 <= n <= n_max; primorials inside the range are
// recorded as spot checks in extremes.
VerificationReport rosser_schoenfeld_check(uint64_t n_max, const PrimeTable& table);

struct EstimateReport {
  double x = 0.0;
  std::string method;
  double estimate = 0.0;
  std::optional<uint64_t> reference;  // pi(x) when the table covers x
  double abs_err = 0.0;               // present iff reference is
  double rel_err = 0.0;
  bool reliable = true;
};

// method: "li", "q", or "sb". The table may be null (no reference column).
EstimateReport make_estimate(double x, const std::string& method, const PrimeTable* table,
                             double adjust = 0.5);

// CSV: x,method,estimate,pi,abs_err,rel_err
void estimate_csv(const std::vector<double>& xs, const std::vector<std::string>& methods,
                  const PrimeTable* table, std::ostream& out, double adjust = 0.5);

}  // namespace pbsq
