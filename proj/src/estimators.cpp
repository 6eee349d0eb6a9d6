#include "pbsq/estimators.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pbsq {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

constexpr double kSylvesterUpper = 1.04423;
constexpr double kRosserAlt = 2.50637;

}  // namespace

double li_series(double x) {
  if (!(x > 1.0)) throw std::domain_error("li_series: x must be > 1");
  double logx = std::log(x);
  double sum = kEulerGamma + std::log(logx);
  double u = 1.0;  // logx^k / k!
  for (int k = 1; k < 20000; ++k) {
    u *= logx / k;
    double term = u / k;
    sum += term;
    if (term < 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

double q_estimator(double x, double adjust) {
  if (!(adjust > 0.0 && adjust < 1.0)) {
    throw std::domain_error("q_estimator: adjust must be in (0,1)");
  }
  if (!(x > 1.0)) throw std::domain_error("q_estimator: x must be > 1");
  double a = x / std::log(x);
  if (!(a > 1.0)) throw std::domain_error("q_estimator: a <= 1");
  double b = a / std::log(a);
  double jb = adjust * b;
  if (!(jb > 1.0)) throw std::domain_error("q_estimator: jb <= 1");
  double c = jb / std::log(jb);
  return a + b - c;
}

bool q_estimator_reliable(double x, double adjust) {
  double a = x / std::log(x);
  double b = a / std::log(a);
  return adjust * b >= std::exp(1.0);
}

double sb_subroutine(double x) {
  if (!(x > 0)) throw std::domain_error("sb_subroutine: x must be positive");
  double inner = (std::sqrt(x) - 1.0) * (std::sqrt(x) - 1.0);
  if (!(inner > 1.0)) throw std::domain_error("sb_subroutine: (sqrt(x)-1)^2 must be > 1");
  return (li_series(x) + li_series(inner)) / 2.0 - 1.5;
}

VerificationReport pi_bounds_check(uint64_t horizon, const PrimeTable& table) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "pi-bounds";
  report.range_lo = 2;
  report.range_hi = horizon;
  if (horizon > table.limit()) throw std::out_of_range("pi_bounds_check: beyond table");

  const auto& ps = table.primes();
  size_t idx = 0;
  uint64_t pi = 0;
  double min_upper_slack = 1e300;
  uint64_t min_upper_n = 0;
  uint64_t sylvester_failures = 0, sylvester_first = 0, sylvester_last = 0;
  for (uint64_t n = 2; n <= horizon; ++n) {
    while (idx < ps.size() && ps[idx] <= n) {
      ++idx;
      ++pi;
    }
    double ln_n = std::log(static_cast<double>(n));
    double a = static_cast<double>(n) / ln_n;
    double upper = a + (a / std::log(a) - 1.0);
    double pid = static_cast<double>(pi);
    if (!(upper >= pid)) {
      report.violations.push_back(Witness{"A+(B-1) < pi(n)", n, upper, {pi}});
    }
    if (upper - pid < min_upper_slack) {
      min_upper_slack = upper - pid;
      min_upper_n = n;
    }
    if (n >= 17 && !(a < pid)) {
      report.violations.push_back(Witness{"n/ln n >= pi(n)", n, a, {pi}});
    }
    if (kSylvesterUpper * a < pid) {
      ++sylvester_failures;
      if (sylvester_first == 0) sylvester_first = n;
      sylvester_last = n;
    }
  }
  report.extremes.push_back(
      Witness{"min slack of upper bound A+(B-1)", min_upper_n, min_upper_slack});
  report.extremes.push_back(Witness{"Sylvester upper < pi(n) count (expected small-n failure)",
                                    sylvester_failures, static_cast<double>(sylvester_failures),
                                    {sylvester_first, sylvester_last}});
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

std::vector<uint64_t> fake_table1_sequence(size_t count) {
  std::vector<uint64_t> s;
  if (count >= 1) s.push_back(3);
  if (count >= 2) s.push_back(5);
  while (s.size() < count) {
    uint64_t next;
    if (__builtin_mul_overflow(s[s.size() - 2], uint64_t{2}, &next) ||
        __builtin_add_overflow(next, uint64_t{1}, &next)) {
      throw std::overflow_error("fake_table1: sequence exceeds 64 bits");
    }
    s.push_back(next);
  }
  return s;
}

std::vector<std::array<uint64_t, 3>> fake_table1(size_t rows) {
  if (rows < 1) throw std::domain_error("fake_table1: rows >= 1");
  auto s = fake_table1_sequence(rows + 2);
  std::vector<std::array<uint64_t, 3>> out;
  out.reserve(rows);
  for (size_t k = 0; k < rows; ++k) out.push_back({s[k], s[k + 1], s[k + 2]});
  return out;
}

std::vector<uint64_t> fake_table2(uint64_t start, size_t rows) {
  if (start < 3 || start % 2 == 0) throw std::domain_error("fake_table2: start odd and >= 3");
  std::vector<uint64_t> t;
  t.reserve(rows);
  uint64_t v = start;
  while (t.size() < rows) {
    t.push_back(v);
    if (v > (UINT64_MAX >> 2)) throw std::overflow_error("fake_table2: exceeds 64 bits");
    uint64_t next = v + isqrt(4 * v);  // floor(v + 2 sqrt(v))
    if (next % 2 == 0) --next;         // largest odd below the bare limit
    v = next;
  }
  return t;
}

uint64_t totient_from_lpf(uint64_t n, const PrimeTable& table) {
  if (n == 0) throw std::domain_error("totient_from_lpf: n >= 1");
  uint64_t phi = 1;
  uint64_t m = n;
  while (m > 1) {
    uint64_t p = table.lpf(m);
    uint64_t factor = p - 1;
    m /= p;
    while (m % p == 0) {
      factor *= p;
      m /= p;
    }
    phi *= factor;
  }
  return phi;
}

RosserPoint rosser_point(uint64_t n, uint64_t phi) {
  if (n < 3) throw std::domain_error("rosser_point: n >= 3");
  RosserPoint pt;
  pt.n = n;
  pt.ratio = static_cast<double>(n) / static_cast<double>(phi);
  double ll = std::log(std::log(static_cast<double>(n)));
  double eg = std::exp(kEulerGamma);
  pt.bound_52 = eg * ll + 2.5 / ll;
  pt.bound_alt = eg * ll + kRosserAlt / ll;
  pt.holds_52 = pt.ratio <= pt.bound_52;
  pt.holds_alt = pt.ratio <= pt.bound_alt;
  return pt;
}

RosserPoint rosser_check_23_primorial() {
  uint64_t n = 1, phi = 1;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    n *= p;
    phi *= p - 1;
  }
  return rosser_point(n, phi);  // n = 223092870
}

VerificationReport rosser_schoenfeld_check(uint64_t n_max, const PrimeTable& table) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "rosser-schoenfeld";
  report.range_lo = 3;
  report.range_hi = n_max;
  if (n_max > table.limit()) throw std::out_of_range("rosser_schoenfeld_check: beyond table");

  uint64_t next_primorial = 6;
  uint64_t next_primorial_p = 5;  // primorial after 6 is 6*5
  double worst_margin = 1e300;
  uint64_t worst_n = 0;
  for (uint64_t n = 3; n <= n_max; ++n) {
    RosserPoint pt = rosser_point(n, totient_from_lpf(n, table));
    if (!pt.holds_52) {
      report.violations.push_back(Witness{"5/2 form fails", n, pt.ratio,
                                          {static_cast<uint64_t>(pt.bound_52 * 1e6)}});
    }
    if (pt.bound_52 - pt.ratio < worst_margin) {
      worst_margin = pt.bound_52 - pt.ratio;
      worst_n = n;
    }
    if (n == next_primorial) {
      report.extremes.push_back(Witness{"primorial spot check", n, pt.ratio,
                                        {pt.holds_52, pt.holds_alt}});
      next_primorial *= next_primorial_p;
      next_primorial_p += 2;
      while (!is_prime_trial(next_primorial_p)) next_primorial_p += 2;
    }
  }
  report.extremes.push_back(Witness{"min margin of 5/2 bound", worst_n, worst_margin});
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

EstimateReport make_estimate(double x, const std::string& method, const PrimeTable* table,
                             double adjust) {
  EstimateReport rep;
  rep.x = x;
  rep.method = method;
  if (method == "li") {
    rep.estimate = li_series(x);
  } else if (method == "q") {
    rep.estimate = q_estimator(x, adjust);
    rep.reliable = q_estimator_reliable(x, adjust);
  } else if (method == "sb") {
    rep.estimate = sb_subroutine(x);
  } else {
    throw std::domain_error("make_estimate: unknown method " + method);
  }
  if (table != nullptr && x >= 0 && x <= static_cast<double>(table->limit())) {
    uint64_t ref = table->pi(static_cast<uint64_t>(std::floor(x)));
    rep.reference = ref;
    rep.abs_err = rep.estimate - static_cast<double>(ref);
    rep.rel_err = ref == 0 ? 0.0 : rep.abs_err / static_cast<double>(ref);
  }
  return rep;
}

void estimate_csv(const std::vector<double>& xs, const std::vector<std::string>& methods,
                  const PrimeTable* table, std::ostream& out, double adjust) {
  out << "x,method,estimate,pi,abs_err,rel_err\n";
  for (double x : xs) {
    for (const auto& m : methods) {
      EstimateReport rep = make_estimate(x, m, table, adjust);
      out << format_double(rep.x) << ',' << rep.method << ',' << format_double(rep.estimate)
          << ',';
      if (rep.reference) {
        out << *rep.reference << ',' << format_double(rep.abs_err) << ','
            << format_double(rep.rel_err);
      } else {
        out << ",,";
      }
      out << '\n';
    }
  }
}

}  // namespace pbsq
