// Acceptance suite: every checkable claim at its stated tolerance, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pbsq/estimators.hpp"
#include "pbsq/modulator.hpp"
#include "pbsq/parallel.hpp"
#include "pbsq/prime_table.hpp"
#include "pbsq/ratchets.hpp"
#include "pbsq/sects.hpp"
#include "pbsq/segments.hpp"
#include "../support/li_oracle.hpp"

using namespace pbsq;

namespace {

int failures = 0;
int criterion_no = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void result(const std::string& name, bool pass, double seconds, const std::string& detail = "") {
  ++criterion_no;
  std::printf("%-4s %2d  %-46s %7.2fs%s%s\n", pass ? "ok" : "FAIL", criterion_no, name.c_str(),
              seconds, detail.empty() ? "" : "  ", detail.c_str());
  if (!pass) ++failures;
}

std::string via(const VerificationReport& r) {
  return std::to_string(r.violations.size()) + " violation(s)";
}

std::string via(const GapPredicateReport& r) {
  return std::to_string(r.violations.size()) + " violation(s)";
}

}  // namespace

int main() {
  int threads = default_thread_count();

  // ---- 1..3: segment censuses to n = 1e4 over a segmented sieve ----
  {
    Timer timer;
    uint64_t max_n = 10000;
    PrimeTable table = PrimeTable::sieve_upto((max_n + 1) * (max_n + 1));
    auto t1 = verify_theorem1(max_n, Theorem1Mode::Integer, table, threads);
    double elapsed = timer.seconds();
    result("Theorem 1: t(n) >= 2, and >= 3 from n = 6", t1.pass() && elapsed < 120.0, elapsed,
           via(t1) + (table.segmented() ? ", segmented sieve" : ""));

    Timer timer2;
    auto t2 = verify_theorem2(max_n, table, threads);
    result("Theorem 2: a prime in every half segment", t2.pass(), timer2.seconds(), via(t2));

    Timer timer3;
    auto t3 = verify_prime_limit_bounds(max_n, table, threads);
    result("Prime limit: A-(B-1) < t(n) < A+(B-1)", t3.pass(), timer3.seconds(), via(t3));
  }

  // ---- 4: exhaustive paradigm maxima ----
  {
    Timer timer;
    bool pass = true;
    std::string detail;
    for (size_t j = 3; j <= 8; ++j) {
      ParadigmScan scan = exhaustive_max_sect(j, true, false, threads);
      uint64_t formula = std::max(mR_length(j), mQ_length(j));
      if (scan.max_length != formula) {
        pass = false;
        detail += "j=" + std::to_string(j) + " mismatch; ";
      }
    }
    Timer timer9;
    ParadigmScan nine = exhaustive_max_sect(9, true, false, threads);
    double t9 = timer9.seconds();
    if (nine.max_length != 19 || nine.classes.size() != 6) {
      pass = false;
      detail += "j=9 max " + std::to_string(nine.max_length) + " classes " +
                std::to_string(nine.classes.size()) + "; ";
    }
    if (t9 >= 300.0) {
      pass = false;
      detail += "j=9 scan too slow; ";
    }
    result("Lemma 3: formulas exact, lone anomaly at j=9", pass, timer.seconds(),
           detail.empty() ? "j=9: max 19, 6 mirror-classes" : detail);
  }

  // ---- 5: Lemma 4 to 1e6 ----
  PrimeTable mega = PrimeTable::sieve_upto(1002000);
  {
    Timer timer;
    auto report = verify_lemma4(1000000, mega);
    std::vector<uint64_t> eq;
    for (const auto& w : report.extremes) {
      if (w.label == "equality") eq.push_back(w.n);
    }
    bool pass = report.pass() && eq == std::vector<uint64_t>{5, 7, 11};
    result("Lemma 4: p_{j+1} <= 2p_{j-1}+1, equality 5,7,11", pass, timer.seconds(), via(report));
  }

  // ---- 6: first R-sect of d~6 on the number line ----
  {
    Timer timer;
    PrimeTable table = PrimeTable::sieve_upto(30000);
    OccurrenceScan scan = find_sect_occurrences(6, SectKind::R, 2, table);
    std::vector<uint64_t> row{3, 7, 5, 3, 11, 13, 3, 5, 7, 3};
    bool pass = scan.found.size() == 2 && scan.found[0].center == 9450 &&
                scan.found[0].center_multiple == 45 && scan.found[0].labels == row &&
                scan.found[1].center == 20580 && scan.found[1].center_multiple == 98;
    result("mR(d~6) first at 45*(7#), mirror at 98*(7#)", pass, timer.seconds(),
           pass ? "centers 9450 and 20580" : "unexpected placement");
  }

  // ---- 7: pyramid chart, lines and center states ----
  {
    Timer timer;
    std::vector<std::string> want{
        "**",
        "3**3",
        "53**35",
        "3753**3573",
        "11 3753**3573 11",
        "3 13 11 3753**3573 11 13 3",
        "17 3 13 11 3753**3573 11 13 3 17",
    };
    std::vector<std::string> want_centers{
        "((5))(3)", "(5)((7))", "((11))(7)", "(11)((13))",
        "((17))(13)", "(17)((19))", "((23))(19)",
    };
    auto lines = pyramid_lines(7);
    auto states = pyramid_center_states(7);
    bool pass = lines.size() == 7 && states.size() == 7;
    for (size_t i = 0; pass && i < 7; ++i) {
      pass = render_pyramid_line(lines[i], true) == want[i] &&
             render_center_state(states[i]) == want_centers[i];
    }
    result("Pyramid: 7 stable lines and center states", pass, timer.seconds());
  }

  // ---- 8: ratchet candidates and Theorem 1A to 1e7 ----
  PrimeTable deca = PrimeTable::sieve_upto(10002000);
  {
    Timer timer;
    auto candidates = ratchet_candidates(3000, deca);
    bool pass = candidates.size() >= 5;
    const uint64_t want_p[5] = {7, 113, 1327, 1669, 2477};
    // one ulp of the last printed digit: the quoted values mix rounding
    // (0.661438 from 0.6614378..) and truncation (1.0714120 from 1.07141209..)
    const double want_k[3] = {0.661438, 0.7592961, 1.0714120};
    const double tol_k[3] = {1e-6, 1e-7, 1e-7};
    for (int i = 0; pass && i < 5; ++i) pass = candidates[i].prime == want_p[i];
    for (int i = 0; pass && i < 3; ++i) {
      pass = std::fabs(candidates[i].k - want_k[i]) < tol_k[i];
    }
    auto t1a = verify_theorem1A(10000000, deca);
    pass = pass && t1a.pass();
    result("Ratchets 7,113,1327,1669,2477; 1A to 1e7", pass, timer.seconds(), via(t1a));
  }

  // ---- 9: Theorem 1B spot check ----
  {
    Timer timer;
    auto scan = theorem1b_scan(2.61008, 10000000, deca);
    bool pass = scan.last_violation_index && *scan.last_violation_index >= 3000 &&
                *scan.last_violation_index <= 3800;
    result("Theorem 1B: last violation for k=2.61008", pass, timer.seconds(),
           scan.last_violation_index
               ? "index " + std::to_string(*scan.last_violation_index) + " (p=" +
                     std::to_string(*scan.last_violation_prime) + ")"
               : "no violation found");
  }

  // ---- 10: corollary and haploid maxima ----
  {
    Timer timer;
    auto cor = corollary_violations(10000000, deca);
    bool pass = cor.extremal.n == 127;
    auto hap = verify_haploid(2, 1000000, mega);
    pass = pass && hap.pass() && hap.extremes[0].n == 127;
    result("Corollary/haploid: both maxima at 127", pass, timer.seconds(),
           "gap witness " + std::to_string(cor.extremal.n) + ", largest haploid " +
               std::to_string(hap.extremes[0].n));
  }

  // ---- 11: estimators ----
  {
    Timer timer;
    bool legendre_ok = true;
    const auto& ps = mega.primes();
    auto chunks = chunked_run<uint64_t>(
        2, 100000, threads, [&](uint64_t lo, uint64_t hi, uint64_t& bad) {
          bad = 0;
          size_t idx = static_cast<size_t>(mega.pi(lo - 1));
          uint64_t pi_run = idx;
          for (uint64_t n = lo; n <= hi; ++n) {
            while (idx < ps.size() && ps[idx] <= n) {
              ++idx;
              ++pi_run;
            }
            if (pi_legendre(n, mega) != pi_run) {
              ++bad;
              break;
            }
          }
        });
    for (uint64_t bad : chunks) legendre_ok = legendre_ok && bad == 0;

    auto bounds = pi_bounds_check(1000000, mega);

    bool li_ok = true;
    for (double x : {2.0, 10.0, 1000.0, 1000000.0}) {
      double quad = pbsq_test::li_quadrature(x);
      li_ok = li_ok && std::fabs(li_series(x) - quad) / std::fabs(quad) < 1e-10;
    }
    bool pass = legendre_ok && bounds.pass() && li_ok;
    result("Estimators: Legendre pi, A+(B-1) bound, Li", pass, timer.seconds(),
           std::string(legendre_ok ? "legendre ok" : "legendre MISMATCH") + ", " + via(bounds) +
               (li_ok ? ", li within 1e-10" : ", li OUT OF TOLERANCE"));
  }

  // ---- 12: fake tables ----
  {
    Timer timer;
    auto s = fake_table1_sequence(10);
    bool span = false;
    for (size_t k = 0; k + 2 < s.size(); ++k) {
      if (s[k] == 23 && s[k + 1] == 31 && s[k + 2] == 47) span = true;
    }
    bool pass = span && fake_table2(11, 3) == std::vector<uint64_t>{11, 17, 25} &&
                fake_table2(23, 3) == std::vector<uint64_t>{23, 31, 41};
    result("Fake tables: span 23,31,47 and 11->17->25", pass, timer.seconds());
  }

  // ---- 13: totient inequality with the 23# exception ----
  {
    Timer timer;
    auto report = rosser_schoenfeld_check(1000000, mega);
    bool spots_ok = true;
    for (const auto& w : report.extremes) {
      if (w.label == "primorial spot check") {
        spots_ok = spots_ok && w.aux[0] == 1 && w.aux[1] == 1;
      }
    }
    RosserPoint pt = rosser_check_23_primorial();
    RosserPoint p19 = rosser_point(9699690, 1658880);  // 19#, the closest call that holds
    bool pass = report.pass() && spots_ok && p19.holds_52 && !pt.holds_52 && pt.holds_alt;
    result("Totient bound: holds to 1e6, 23# needs 2.50637", pass, timer.seconds(),
           via(report) + (pt.holds_52 ? ", 23# unexpectedly holds 5/2" : ", 23# fails 5/2 form"));
  }

  // ---- 14: modulator chart and E4 ----
  {
    Timer timer;
    auto lines = chain_run_rendered(3, 16);
    bool pass = lines.size() == 16;
    for (size_t i = 0; pass && i < 16; ++i) {
      std::string bits;
      for (char c : lines[i]) {
        if (c != 'M') bits += c;
      }
      pass = bits.size() == 4 && std::stoul(bits, nullptr, 2) == i;
    }
    pass = pass && lines.front() == "0M0M0M0" && lines.back() == "1M1M1M1";
    const int odd_markers[4] = {1, 7, 5, 3};
    const int even_markers[4] = {4, 2, 6, 8};
    for (int i = 0; pass && i < 4; ++i) {
      pass = E4Table::numeric(odd_markers[i]) == (1 << i) &&
             E4Table::numeric(even_markers[i]) == 3 * (i + 1);
    }
    auto holes = e4_sieve_holes();
    pass = pass && holes.holes == std::vector<int>{5, 7, 11} &&
           holes.space_primes == std::vector<int>{2, 3};
    result("Modulator: 16-state chart, E4 words and holes", pass, timer.seconds());
  }

  std::printf("\n%d/%d criteria passed\n", criterion_no - failures, criterion_no);
  std::puts("declared out of scope at desk scale: SB_1.32(1e11) and R(1e11) comparisons;"
            " Lemma 3 uniqueness beyond j=10; absolute ratchet-hood of any prime.");
  return failures == 0 ? 0 : 1;
}
