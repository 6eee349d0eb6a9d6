#include "pbsq/sects.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "pbsq/errors.hpp"
#include "pbsq/parallel.hpp"

namespace pbsq {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<uint64_t> primes_upto_index(size_t j) {
  std::vector<uint64_t> ps;
  for (uint64_t m = 2; ps.size() < j; ++m) {
    if (is_prime_trial(m)) ps.push_back(m);
  }
  return ps;
}

}  // namespace

uint64_t nth_prime_small(size_t j) {
  if (j == 0) throw std::domain_error("nth_prime_small: 1-based index");
  return primes_upto_index(j).back();
}

uint64_t odd_primorial(size_t j) {
  if (j < 2) throw std::domain_error("odd_primorial: needs j >= 2");
  auto ps = primes_upto_index(j);
  uint64_t period = 1;
  for (size_t i = 1; i < ps.size(); ++i) {
    if (__builtin_mul_overflow(period, ps[i], &period)) {
      throw std::overflow_error("odd_primorial: exceeds 64 bits");
    }
  }
  return period;
}

namespace {

// Q-sect labels without the public j >= 3 guard; the R recipe needs j-2 >= 2.
std::vector<uint64_t> mq_labels(size_t j) {
  uint64_t next = nth_prime_small(j + 1);
  std::vector<uint64_t> labels;
  for (uint64_t o = 3; o + 2 <= next; o += 2) labels.push_back(least_prime_factor(o));
  return labels;
}

}  // namespace

Sect mQ_construct(size_t j) {
  if (j < 3) throw std::domain_error("mQ_construct: needs odd multisectors, j >= 3");
  return Sect{3, mq_labels(j)};
}

uint64_t mQ_length(size_t j) {
  if (j < 3) throw std::domain_error("mQ_length: j >= 3");
  return (nth_prime_small(j + 1) - 1) / 2 - 1;
}

Sect mR_construct(size_t j, bool center_swapped) {
  if (j < 4) throw std::domain_error("mR_construct: j >= 4");
  std::vector<uint64_t> inner = mq_labels(j - 2);
  uint64_t lo_center = nth_prime_small(j - 1);
  uint64_t hi_center = nth_prime_small(j);
  if (center_swapped) std::swap(lo_center, hi_center);
  std::vector<uint64_t> labels(inner.rbegin(), inner.rend());
  labels.push_back(lo_center);
  labels.push_back(hi_center);
  labels.insert(labels.end(), inner.begin(), inner.end());
  return Sect{0, std::move(labels)};
}

uint64_t mR_length(size_t j) {
  if (j < 3) throw std::domain_error("mR_length: j >= 3");
  return nth_prime_small(j - 1) - 1;
}

namespace {

struct ChunkScan {
  uint64_t max_len = 0;
  std::vector<uint64_t> starts;  // odd positions of runs of length max_len
};

// Scans i in [i_lo, i_hi) (odd number o = 2i+1), extending past i_hi until an
// open run closes. warm = true starts the scan `overlap` early and discards
// runs that begin before i_lo.
void scan_range(std::span<const uint64_t> primes, uint64_t i_lo, uint64_t i_hi,
                uint64_t overlap, bool warm, ChunkScan& out,
                const ProgressFn& progress) {
  uint64_t begin = warm && i_lo > overlap ? i_lo - overlap : 0;
  size_t np = primes.size();
  std::vector<uint64_t> residue(np);
  for (size_t k = 0; k < np; ++k) residue[k] = (2 * begin + 1) % primes[k];

  uint64_t run_len = 0;
  uint64_t run_start_i = 0;
  const uint64_t progress_step = 1 << 24;
  uint64_t next_progress = progress ? progress_step : UINT64_MAX;

  for (uint64_t i = begin;; ++i) {
    bool struck = false;
    for (size_t k = 0; k < np; ++k) {
      if (residue[k] == 0) struck = true;
      residue[k] += 2;
      if (residue[k] >= primes[k]) residue[k] -= primes[k];
    }
    if (struck) {
      if (run_len == 0) run_start_i = i;
      ++run_len;
    } else {
      if (run_len > 0 && run_start_i >= i_lo && run_start_i < i_hi) {
        if (run_len > out.max_len) {
          out.max_len = run_len;
          out.starts.assign(1, 2 * run_start_i + 1);
        } else if (run_len == out.max_len) {
          if (out.starts.size() > 100000) {
            throw CapacityError("paradigm scan: too many maximal runs");
          }
          out.starts.push_back(2 * run_start_i + 1);
        }
      }
      run_len = 0;
      if (i + 1 >= i_hi) break;
    }
    if (i >= next_progress) {
      progress(i - begin, i_hi - begin);
      next_progress += progress_step;
    }
    if (run_len > overlap) {
      throw std::logic_error("paradigm scan: run exceeded stitch overlap");
    }
  }
}

uint64_t label_in_paradigm(uint64_t o, std::span<const uint64_t> primes) {
  for (uint64_t p : primes) {
    if (o % p == 0) return p;
  }
  return 0;
}

}  // namespace

ParadigmScan exhaustive_max_sect(size_t j, bool half_scan, bool extended, int threads,
                                 const ProgressFn& progress) {
  if (j < 2) throw std::domain_error("exhaustive_max_sect: j >= 2");
  if (j > 10) throw CapacityError("exhaustive_max_sect: period beyond j = 10 is out of budget");
  if (j == 10 && !extended) {
    throw CapacityError("exhaustive_max_sect: j = 10 requires the extended-run flag");
  }
  auto all = primes_upto_index(j);
  std::vector<uint64_t> primes(all.begin() + 1, all.end());  // odd multisectors
  uint64_t period = odd_primorial(j);

  ParadigmScan result;
  result.j = j;
  result.period = period;
  result.half_scan = half_scan;

  uint64_t overlap = 4 * all.back() + 64;
  uint64_t scan_hi = half_scan ? period / 2 + 1 : period;
  if (threads < 1) threads = 1;
  uint64_t min_chunk = 4 * overlap;
  while (threads > 1 && scan_hi / static_cast<uint64_t>(threads) < min_chunk) --threads;

  auto chunks = chunked_run<ChunkScan>(
      0, scan_hi - 1, threads,
      [&](uint64_t lo, uint64_t hi, ChunkScan& out) {
        scan_range(primes, lo, hi + 1, overlap, lo != 0, out,
                   lo == 0 ? progress : ProgressFn{});
      });

  uint64_t max_len = 0;
  for (const auto& c : chunks) max_len = std::max(max_len, c.max_len);
  result.max_length = max_len;

  std::vector<uint64_t> starts;
  for (const auto& c : chunks) {
    if (c.max_len == max_len) starts.insert(starts.end(), c.starts.begin(), c.starts.end());
  }
  std::sort(starts.begin(), starts.end());

  // label each run, then deduplicate counting mirror images as identical
  std::vector<std::vector<uint64_t>> seen;
  for (uint64_t s : starts) {
    std::vector<uint64_t> labels;
    labels.reserve(max_len);
    for (uint64_t t = 0; t < max_len; ++t) labels.push_back(label_in_paradigm(s + 2 * t, primes));
    std::vector<uint64_t> rev(labels.rbegin(), labels.rend());
    const std::vector<uint64_t>& canon = rev < labels ? rev : labels;
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(canon);
    result.classes.push_back(SectClass{s, std::move(labels)});
  }
  return result;
}

VerificationReport verify_lemma3(size_t j_lo, size_t j_hi, int threads, bool extended) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "lemma3";
  report.range_lo = j_lo;
  report.range_hi = j_hi;
  for (size_t j = j_lo; j <= j_hi; ++j) {
    ParadigmScan scan = exhaustive_max_sect(j, true, extended, threads);
    uint64_t formula = std::max(mR_length(j), j >= 3 ? mQ_length(j) : 0);
    uint64_t expected = j == 9 ? formula + 1 : formula;
    if (scan.max_length != expected) {
      report.violations.push_back(Witness{"exhaustive max != expected", j,
                                          static_cast<double>(scan.max_length),
                                          {formula, expected}});
    }
    if (j == 9) {
      report.extremes.push_back(Witness{"anomaly: max exceeds formula by 1", j,
                                        static_cast<double>(scan.max_length),
                                        {formula, scan.classes.size()}});
    }
    // stronger variant: no odd sect exceeds the formula by more than 2
    if (scan.max_length > formula + 2) {
      report.violations.push_back(Witness{"stronger variant exceeded", j,
                                          static_cast<double>(scan.max_length), {formula}});
    }
  }
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

VerificationReport verify_lemma4(uint64_t max_p, const PrimeTable& table) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "lemma4";
  report.range_lo = 5;
  report.range_hi = max_p;
  if (max_p > table.limit()) throw std::out_of_range("verify_lemma4: table too small");
  const auto& ps = table.primes();
  for (size_t i = 2; i < ps.size() && ps[i] <= max_p; ++i) {
    uint64_t prev2 = ps[i - 2], next = ps[i];
    if (next > 2 * prev2 + 1) {
      report.violations.push_back(Witness{"p_{j+1} > 2 p_{j-1} + 1", next,
                                          static_cast<double>(next), {prev2}});
    } else if (next == 2 * prev2 + 1) {
      bool allowed = next == 5 || next == 7 || next == 11;
      if (!allowed) {
        report.violations.push_back(Witness{"unexpected equality", next,
                                            static_cast<double>(next), {prev2}});
      } else {
        report.extremes.push_back(Witness{"equality", next, static_cast<double>(next), {prev2}});
      }
    }
  }
  report.runtime_ms = elapsed_ms(t0);
  return report;
}

OccurrenceScan find_sect_occurrences(size_t j, SectKind kind, size_t count,
                                     const PrimeTable& table) {
  std::vector<uint64_t> pattern =
      kind == SectKind::R ? mR_construct(j).labels : mQ_construct(j).labels;
  std::vector<uint64_t> mirror(pattern.rbegin(), pattern.rend());
  bool palindrome = mirror == pattern;
  size_t len = pattern.size();
  uint64_t center_primorial = kind == SectKind::R ? primorial_hash(
      static_cast<double>(nth_prime_small(j - 2))) : 0;

  OccurrenceScan out;
  std::span<const uint64_t> base = table.base_primes();
  std::vector<uint32_t> labels;
  std::vector<uint64_t> window;  // actual lpf of the last `len` odd numbers

  uint64_t block = std::max<uint64_t>(PrimeTable::kBlockSpan, 4 * len);
  for (uint64_t lo = 3; lo <= table.limit() && out.found.size() < count; lo += block) {
    uint64_t hi = std::min(table.limit(), lo + block - 1);
    sieve_odd_block_lpf(lo, hi, base, labels);
    for (uint64_t m = lo; m <= hi; m += 2) {
      uint32_t lab = labels[(m - lo) >> 1];
      window.push_back(lab == 0 ? m : lab);
      if (window.size() > len) window.erase(window.begin());
      if (window.size() < len) continue;
      bool fwd = std::equal(window.begin(), window.end(), pattern.begin());
      bool rev = !palindrome && std::equal(window.begin(), window.end(), mirror.begin());
      if (!fwd && !rev) continue;
      AnchoredSect hit;
      hit.start = m - 2 * (len - 1);
      hit.center = hit.start + (len - 1);
      hit.reversed = rev;
      hit.labels = window;
      if (center_primorial != 0 && hit.center % center_primorial == 0) {
        hit.center_multiple = hit.center / center_primorial;
      }
      out.found.push_back(std::move(hit));
      if (out.found.size() >= count) break;
    }
  }
  out.partial = out.found.size() < count;
  return out;
}

std::vector<PyramidLine> pyramid_lines(size_t count) {
  if (count < 1) throw std::domain_error("pyramid_lines: count >= 1");
  std::vector<PyramidLine> lines;
  std::vector<uint64_t> side;
  while (lines.size() < count) {
    uint64_t width = 2 + 2 * side.size();
    uint64_t m = width + 1;  // always the next odd number
    if (is_prime_trial(m)) {
      lines.push_back(PyramidLine{lines.size() + 1, width, side});
      side.push_back(m);
    } else {
      side.push_back(least_prime_factor(m));  // mandatory strike, smallest striker
    }
  }
  return lines;
}

std::string render_pyramid_line(const PyramidLine& line, bool compact) {
  const auto& side = line.side;
  std::string out;
  if (!compact) {
    for (size_t i = side.size(); i-- > 0;) {
      out += std::to_string(side[i]);
      out += ' ';
    }
    out += "**";
    for (uint64_t v : side) {
      out += ' ';
      out += std::to_string(v);
    }
    return out;
  }
  size_t inner = std::min<size_t>(side.size(), 4);  // positions 3..9 print unspaced
  for (size_t i = side.size(); i-- > inner;) {
    out += std::to_string(side[i]);
    out += ' ';
  }
  for (size_t i = inner; i-- > 0;) out += std::to_string(side[i]);
  out += "**";
  for (size_t i = 0; i < inner; ++i) out += std::to_string(side[i]);
  for (size_t i = inner; i < side.size(); ++i) {
    out += ' ';
    out += std::to_string(side[i]);
  }
  return out;
}

std::vector<CenterState> pyramid_center_states(size_t count) {
  auto lines = pyramid_lines(count);
  std::vector<CenterState> states;
  states.reserve(lines.size());
  for (const auto& line : lines) {
    uint64_t next = line.width + 1;  // prime: that is what made the line stable
    uint64_t after = next + 2;
    while (!is_prime_trial(after)) after += 2;
    states.push_back(CenterState{line.line, next, after, (line.line & 1) != 0});
  }
  return states;
}

std::string render_center_state(const CenterState& cs) {
  std::string deep = "((" + std::to_string(cs.after) + "))";
  std::string shallow = "(" + std::to_string(cs.next) + ")";
  return cs.deep_on_left ? deep + shallow : shallow + deep;
}

}  // namespace pbsq
