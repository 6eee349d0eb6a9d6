#include "pbsq/segments.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "pbsq/parallel.hpp"

namespace pbsq {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Segment segment_of(uint64_t n) {
  if (n == 0) return Segment{1, 0};
  return Segment{n * n + 1, n * n + 2 * n};
}

Segment segment_of_sqrt(uint64_t m) {
  if (m == 0) return Segment{1, 0};
  uint64_t t = isqrt(4 * m);
  uint64_t hi = (t * t == 4 * m) ? m + t : m + t + 1;
  return Segment{m + 1, hi};
}

Segment segment_of_sqrt_minus1(uint64_t m) {
  if (m < 1) throw std::domain_error("segment_of_sqrt_minus1: m >= 1");
  if (m == 1) return Segment{1, 0};  // root 0
  uint64_t t = isqrt(4 * m);
  uint64_t lo = (t * t == 4 * m) ? m - t + 2 : m - t + 1;
  return Segment{lo, m - 1};
}

Segment segment_of_real(double x) {
  if (x < 0 || std::isnan(x)) throw std::domain_error("segment_of_real: x >= 0");
  double s = x * x;
  double u = (x + 1) * (x + 1);
  uint64_t lo = static_cast<uint64_t>(std::floor(s)) + 1;
  double uf = std::floor(u);
  uint64_t hi = (uf == u) ? static_cast<uint64_t>(u) - 1 : static_cast<uint64_t>(uf);
  return Segment{lo, hi};
}

uint64_t count_primes_in_segment(const Segment& seg, const PrimeTable& table) {
  if (seg.empty()) return 0;
  if (seg.hi > table.limit()) throw std::out_of_range("count_primes_in_segment: beyond table");
  return table.pi(seg.hi) - table.pi(seg.lo - 1);
}

std::pair<uint64_t, uint64_t> half_segment_counts(uint64_t n, const PrimeTable& table) {
  if (n < 1) throw std::domain_error("half_segment_counts: n >= 1");
  uint64_t hi = (n + 1) * (n + 1) - 1;
  if (hi > table.limit()) throw std::out_of_range("half_segment_counts: beyond table");
  uint64_t split = n * (n + 1);
  uint64_t left = table.pi(split) - table.pi(n * n);
  uint64_t right = table.pi(hi) - table.pi(split);
  return {left, right};
}

std::pair<double, double> prime_limit_bounds(uint64_t n) {
  if (n < 2) throw std::domain_error("prime_limit_bounds: n >= 2");
  double a = static_cast<double>(n) / std::log(static_cast<double>(n));
  double b = a / std::log(a);
  return {a - (b - 1.0), a + (b - 1.0)};
}

SegmentCensus census_segment(uint64_t n, std::span<const uint64_t> base_primes) {
  if (n < 1) throw std::domain_error("census_segment: n >= 1");
  SegmentCensus census;
  census.segment = segment_of(n);
  uint64_t lo = census.segment.lo, hi = census.segment.hi;
  uint64_t split = n * (n + 1);

  static thread_local std::vector<uint32_t> labels;
  sieve_odd_block_lpf(lo, hi, base_primes, labels);

  if (n == 1) {  // 2 is the only even prime a segment can hold
    ++census.prime_count;
    ++census.left_count;
  }

  uint64_t run_start = 0;
  std::vector<uint64_t> run_labels;
  uint64_t first_odd = (lo & 1) ? lo : lo + 1;
  for (uint64_t m = first_odd; m <= hi; m += 2) {
    uint32_t label = labels[(m - first_odd) >> 1];
    if (label == 0) {  // prime
      ++census.prime_count;
      (m <= split ? census.left_count : census.right_count)++;
      if (run_labels.size() > census.max_run.labels.size()) {
        census.max_run = Sect{run_start, run_labels};
      }
      run_labels.clear();
    } else {
      if (run_labels.empty()) run_start = m;
      run_labels.push_back(label);
    }
  }
  if (run_labels.size() > census.max_run.labels.size()) {
    census.max_run = Sect{run_start, std::move(run_labels)};
  }
  return census;
}

Sect max_sect_in_segment(uint64_t n, const PrimeTable& table) {
  if ((n + 1) * (n + 1) > table.limit()) {
    throw std::out_of_range("max_sect_in_segment: beyond table");
  }
  return census_segment(n, table.base_primes()).max_run;
}

namespace {

struct MinWitness {
  uint64_t value = UINT64_MAX;
  uint64_t n = 0;

  void feed(uint64_t v, uint64_t at) {
    if (v < value) {
      value = v;
      n = at;
    }
  }
  void merge(const MinWitness& o) { feed(o.value, o.n); }
};

struct Theorem1Chunk {
  std::vector<Witness> violations;
  MinWitness min_all, min_from6;
};

struct Theorem2Chunk {
  std::vector<Witness> violations;
  MinWitness min_left, min_right;
};

struct BoundsChunk {
  std::vector<Witness> violations;
  double min_lower_slack = 1e300;
  uint64_t min_lower_n = 0;
  double min_upper_slack = 1e300;
  uint64_t min_upper_n = 0;
};

void require_covers(uint64_t max_n, const PrimeTable& table, const char* who) {
  if ((max_n + 1) * (max_n + 1) > table.limit()) {
    throw std::out_of_range(std::string(who) + ": table must cover (max_n+1)^2");
  }
}

}  // namespace

VerificationReport verify_theorem1(uint64_t max_n, Theorem1Mode mode, const PrimeTable& table,
                                   int threads) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.range_lo = 1;
  report.range_hi = max_n;

  if (mode == Theorem1Mode::Integer) {
    report.claim = "theorem1.integer";
    require_covers(max_n, table, "verify_theorem1");
    auto base = table.base_primes();
    auto chunks = chunked_run<Theorem1Chunk>(
        1, max_n, threads, [&](uint64_t lo, uint64_t hi, Theorem1Chunk& out) {
          for (uint64_t n = lo; n <= hi; ++n) {
            uint64_t t = census_segment(n, base).prime_count;
            out.min_all.feed(t, n);
            if (n >= 6) out.min_from6.feed(t, n);
            if (t < 2) {
              out.violations.push_back(Witness{"segment count < 2", n, static_cast<double>(t)});
            } else if (n >= 6 && t < 3) {
              out.violations.push_back(Witness{"segment count < 3", n, static_cast<double>(t)});
            }
          }
        });
    Theorem1Chunk merged;
    for (auto& c : chunks) {
      merged.min_all.merge(c.min_all);
      merged.min_from6.merge(c.min_from6);
      for (auto& v : c.violations) report.violations.push_back(std::move(v));
    }
    report.extremes.push_back(Witness{"min segment count", merged.min_all.n,
                                      static_cast<double>(merged.min_all.value)});
    if (merged.min_from6.n != 0) {
      report.extremes.push_back(Witness{"min segment count, n >= 6", merged.min_from6.n,
                                        static_cast<double>(merged.min_from6.value)});
    }
    report.runtime_ms = elapsed_ms(t0);
    return report;
  }

  // Real mode. For consecutive primes q < p the critical-root checks reduce
  // to two gap inequalities: seg(sqrt(m)) for m in [q, p-1] is nonempty of
  // primes iff (p-q-1)^2 < 4q, and seg(sqrt(m)-1) for m in (q, p] iff
  // (m+1-q)^2 < 4m at the largest admissible m.
  report.claim = "theorem1.real";
  uint64_t cap = (max_n + 1) * (max_n + 1);
  if ((max_n + 2) * (max_n + 2) > table.limit()) {
    throw std::out_of_range("verify_theorem1 (real): table must cover (max_n+2)^2");
  }
  double min_slack_a = 1e300, min_slack_b = 1e300;
  uint64_t arg_a = 0, arg_b = 0;
  uint64_t prev = 0;
  uint64_t last_seen = 0;
  for_each_prime_in(2, table.limit(), table.base_primes(), [&](uint64_t p) {
    last_seen = p;
    if (prev != 0 && prev <= cap) {
      uint64_t q = prev;
      uint64_t ga = p - q - 1;
      int64_t slack_a = static_cast<int64_t>(4 * q) - static_cast<int64_t>(ga * ga);
      if (slack_a <= 0) {
        report.violations.push_back(
            Witness{"no prime in seg(sqrt(m)) at m", q, static_cast<double>(slack_a), {p}});
      }
      if (static_cast<double>(slack_a) < min_slack_a) {
        min_slack_a = static_cast<double>(slack_a);
        arg_a = q;
      }
      uint64_t mstar = std::min(p, cap);
      if (mstar >= 3) {
        uint64_t gb = mstar + 1 - q;
        int64_t slack_b = static_cast<int64_t>(4 * mstar) - static_cast<int64_t>(gb * gb);
        if (slack_b <= 0) {
          report.violations.push_back(
              Witness{"no prime in seg(sqrt(m)-1) at m", mstar, static_cast<double>(slack_b), {q}});
        }
        if (static_cast<double>(slack_b) < min_slack_b) {
          min_slack_b = static_cast<double>(slack_b);
          arg_b = mstar;
        }
      }
    }
    prev = p;
  });
  if (last_seen <= cap) {
    report.violations.push_back(
        Witness{"tail unverified: no prime beyond m within table", cap, 0.0, {last_seen}});
  }
  report.extremes.push_back(Witness{"min slack, sqrt(m) roots", arg_a, min_slack_a});
  report.extremes.push_back(Witness{"min slack, sqrt(m)-1 roots", arg_b, min_slack_b});
  (void)threads;
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

VerificationReport verify_theorem2(uint64_t max_n, const PrimeTable& table, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "theorem2";
  report.range_lo = 1;
  report.range_hi = max_n;
  require_covers(max_n, table, "verify_theorem2");
  auto base = table.base_primes();
  auto chunks = chunked_run<Theorem2Chunk>(
      1, max_n, threads, [&](uint64_t lo, uint64_t hi, Theorem2Chunk& out) {
        for (uint64_t n = lo; n <= hi; ++n) {
          SegmentCensus c = census_segment(n, base);
          out.min_left.feed(c.left_count, n);
          out.min_right.feed(c.right_count, n);
          if (c.left_count < 1 || c.right_count < 1) {
            out.violations.push_back(Witness{"empty half segment", n,
                                             static_cast<double>(c.prime_count),
                                             {c.left_count, c.right_count}});
          }
        }
      });
  Theorem2Chunk merged;
  for (auto& c : chunks) {
    merged.min_left.merge(c.min_left);
    merged.min_right.merge(c.min_right);
    for (auto& v : c.violations) report.violations.push_back(std::move(v));
  }
  report.extremes.push_back(Witness{"min left-half count", merged.min_left.n,
                                    static_cast<double>(merged.min_left.value)});
  report.extremes.push_back(Witness{"min right-half count", merged.min_right.n,
                                    static_cast<double>(merged.min_right.value)});
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

VerificationReport verify_prime_limit_bounds(uint64_t max_n, const PrimeTable& table,
                                             int threads) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "prime-limit-bounds";
  report.range_lo = 2;
  report.range_hi = max_n;
  require_covers(max_n, table, "verify_prime_limit_bounds");
  auto base = table.base_primes();
  auto chunks = chunked_run<BoundsChunk>(
      2, max_n, threads, [&](uint64_t lo, uint64_t hi, BoundsChunk& out) {
        for (uint64_t n = lo; n <= hi; ++n) {
          uint64_t t = census_segment(n, base).prime_count;
          auto [lower, upper] = prime_limit_bounds(n);
          double td = static_cast<double>(t);
          if (!(lower < td && td < upper)) {
            out.violations.push_back(Witness{"t(n) outside prime limit bounds", n, td,
                                             {static_cast<uint64_t>(t)}});
          }
          if (td - lower < out.min_lower_slack) {
            out.min_lower_slack = td - lower;
            out.min_lower_n = n;
          }
          if (upper - td < out.min_upper_slack) {
            out.min_upper_slack = upper - td;
            out.min_upper_n = n;
          }
        }
      });
  BoundsChunk merged;
  for (auto& c : chunks) {
    if (c.min_lower_slack < merged.min_lower_slack) {
      merged.min_lower_slack = c.min_lower_slack;
      merged.min_lower_n = c.min_lower_n;
    }
    if (c.min_upper_slack < merged.min_upper_slack) {
      merged.min_upper_slack = c.min_upper_slack;
      merged.min_upper_n = c.min_upper_n;
    }
    for (auto& v : c.violations) report.violations.push_back(std::move(v));
  }
  report.extremes.push_back(
      Witness{"min slack above lower bound", merged.min_lower_n, merged.min_lower_slack});
  report.extremes.push_back(
      Witness{"min slack below upper bound", merged.min_upper_n, merged.min_upper_slack});
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

void segment_table_csv(uint64_t max_n, const PrimeTable& table, std::ostream& out) {
  require_covers(max_n, table, "segment_table_csv");
  auto base = table.base_primes();
  out << "n,t,left,right,lower,upper,max_run\n";
  for (uint64_t n = 1; n <= max_n; ++n) {
    SegmentCensus c = census_segment(n, base);
    out << n << ',' << c.prime_count << ',' << c.left_count << ',' << c.right_count << ',';
    if (n >= 2) {
      auto [lower, upper] = prime_limit_bounds(n);
      out << format_double(lower) << ',' << format_double(upper);
    } else {
      out << ',';
    }
    out << ',' << c.max_run.length() << '\n';
  }
}

}  // namespace pbsq
