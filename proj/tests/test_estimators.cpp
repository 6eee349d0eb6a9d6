#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pbsq/estimators.hpp"
#include "support/li_oracle.hpp"

using namespace pbsq;

TEST_CASE("li_series against the quadrature oracle") {
  for (double x : {2.0, 10.0, 1000.0, 1000000.0}) {
    CAPTURE(x);
    double series = li_series(x);
    double quad = pbsq_test::li_quadrature(x);
    CHECK(std::fabs(series - quad) / std::fabs(quad) < 1e-10);
  }
  CHECK(li_series(2.0) == doctest::Approx(1.045164).epsilon(1e-6));
  CHECK(li_series(1000000.0) == doctest::Approx(78627.5).epsilon(1e-5));
  CHECK_THROWS_AS(li_series(1.0), std::domain_error);
  CHECK_THROWS_AS(li_series(0.5), std::domain_error);
}

TEST_CASE("q estimator") {
  auto t = PrimeTable::sieve_upto(1000000);
  double q6 = q_estimator(1e6, 0.5);
  CHECK(std::fabs(q6 - 78498.0) / 78498.0 < 0.02);

  double q3 = q_estimator(1e3, 0.5);
  CHECK(std::isfinite(q3));
  CHECK(std::fabs(q3 - 168.0) / 168.0 < 0.25);  // loose: the paper's claim is qualitative
  CHECK(t.pi(1000) == 168);

  // x = 10 stays in domain for j = 1/2 but jb sits near 1: flagged unreliable
  CHECK(std::isfinite(q_estimator(10.0, 0.5)));
  CHECK_FALSE(q_estimator_reliable(10.0, 0.5));
  CHECK(q_estimator_reliable(1e6, 0.5));

  CHECK_THROWS_AS(q_estimator(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(q_estimator(3.0, 0.35), std::domain_error);  // jb < 1
  CHECK_THROWS_AS(q_estimator(100.0, 1.5), std::domain_error);
}

TEST_CASE("sb subroutine") {
  // inner argument algebra: (sqrt(100)-1)^2 = 81
  CHECK(sb_subroutine(100.0) ==
        doctest::Approx((li_series(100.0) + li_series(81.0)) / 2.0 - 1.5).epsilon(1e-14));

  double sb6 = sb_subroutine(1e6);
  CHECK(std::fabs(sb6 - 78498.0) / 78498.0 < 0.001);

  CHECK_THROWS_AS(sb_subroutine(4.0), std::domain_error);  // inner argument 1
  CHECK_THROWS_AS(sb_subroutine(3.9), std::domain_error);
}

TEST_CASE("sb and q track each other as a statistic") {
  double max_rel = 0.0;
  for (double x : {1e3, 1e4, 1e5, 1e6, 1e7}) {
    double diff = sb_subroutine(x) - q_estimator(x, 0.5);
    CHECK(std::isfinite(diff));
    max_rel = std::max(max_rel, std::fabs(diff) / x);
  }
  INFO("max |sb - q| / x over the sweep: ", max_rel);
  CHECK(std::isfinite(max_rel));
}

TEST_CASE("pi bounds check") {
  auto t = PrimeTable::sieve_upto(10000);
  auto report = pi_bounds_check(10000, t);
  CHECK(report.pass());

  // n = 17 is where n/ln n < pi(n) starts being asserted
  CHECK(17.0 / std::log(17.0) < 7.0);
  CHECK(t.pi(17) == 7);

  // Sylvester's upper constant undershoots the true count at desk scale
  bool found = false;
  for (const auto& w : report.extremes) {
    if (w.label.find("Sylvester") != std::string::npos) {
      found = true;
      CHECK(w.value > 0);            // failures observed
      CHECK(w.aux[0] <= 100);        // including around n = 100
      CHECK(w.aux[1] >= 100);
    }
  }
  CHECK(found);
  CHECK(1.04423 * 100.0 / std::log(100.0) < 25.0);
}

TEST_CASE("fake table 1: the barely-true recurrence") {
  auto s = fake_table1_sequence(10);
  CHECK(s == std::vector<uint64_t>{3, 5, 7, 11, 15, 23, 31, 47, 63, 95});
  CHECK(s[2] == 2 * s[0] + 1);
  for (size_t k = 2; k < s.size(); ++k) CHECK(s[k] == 2 * s[k - 2] + 1);

  auto rows = fake_table1(6);
  bool has_span = false;
  for (const auto& row : rows) {
    if (row[0] == 23 && row[1] == 31 && row[2] == 47) has_span = true;
  }
  CHECK(has_span);
  CHECK_THROWS_AS(fake_table1_sequence(200), std::overflow_error);
}

TEST_CASE("fake table 2: largest odd within the bare limit") {
  CHECK(fake_table2(11, 3) == std::vector<uint64_t>{11, 17, 25});
  CHECK(fake_table2(23, 3) == std::vector<uint64_t>{23, 31, 41});
  CHECK(fake_table2(3, 2) == std::vector<uint64_t>{3, 5});

  auto t = fake_table2(101, 40);
  for (size_t i = 0; i < t.size(); ++i) {
    CHECK((t[i] & 1) == 1);
    if (i > 0) {
      double bound = static_cast<double>(t[i - 1]) + 2.0 * std::sqrt(static_cast<double>(t[i - 1]));
      CHECK(static_cast<double>(t[i]) <= bound);
      CHECK(static_cast<double>(t[i]) + 2.0 > bound);  // largest odd below the limit
    }
  }
}

TEST_CASE("totient from lpf") {
  auto t = PrimeTable::sieve_upto(1000);
  CHECK(totient_from_lpf(30, t) == 8);
  CHECK(totient_from_lpf(1, t) == 1);
  CHECK(totient_from_lpf(97, t) == 96);
  CHECK(totient_from_lpf(720, t) == 192);
}

TEST_CASE("totient inequality holds through 1e5 and at small primorials") {
  auto t = PrimeTable::sieve_upto(100000);
  auto report = rosser_schoenfeld_check(100000, t);
  CHECK(report.pass());
  int spots = 0;
  for (const auto& w : report.extremes) {
    if (w.label == "primorial spot check") {
      ++spots;
      CHECK(w.aux[0] == 1);  // 5/2 form holds
      CHECK(w.aux[1] == 1);
    }
  }
  CHECK(spots == 5);  // 6, 30, 210, 2310, 30030
}

TEST_CASE("the 23# exception") {
  RosserPoint pt = rosser_check_23_primorial();
  CHECK(pt.n == 223092870);
  CHECK_FALSE(pt.holds_52);  // the 5/2 constant fails here, and only here
  CHECK(pt.holds_alt);       // 2.50637 suffices
  CHECK(pt.ratio == doctest::Approx(6.1129105).epsilon(1e-6));

  // n = 30 example: phi(30) = 8, comfortably inside the bound
  RosserPoint p30 = rosser_point(30, 8);
  CHECK(p30.holds_52);
  // n = 3 boundary case
  RosserPoint p3 = rosser_point(3, 2);
  CHECK(p3.holds_52);
  // 19# = 9699690 is the closest call below the exception and still holds
  RosserPoint p19 = rosser_point(9699690, 1658880);
  CHECK(p19.holds_52);
  CHECK(p19.bound_52 - p19.ratio < 0.01);
}

TEST_CASE("estimate csv shape") {
  auto t = PrimeTable::sieve_upto(1000);
  std::ostringstream out;
  estimate_csv({1000.0}, {"li", "q"}, &t, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,method,estimate,pi,abs_err,rel_err");
  std::getline(in, line);
  CHECK(line.substr(0, 8) == "1000,li,");
  CHECK(line.find(",168,") != std::string::npos);

  auto rep = make_estimate(1e9, "li", &t);  // beyond the table: no reference
  CHECK_FALSE(rep.reference.has_value());
  CHECK_THROWS_AS(make_estimate(100.0, "nope", &t), std::domain_error);
}
