#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pbsq/prime_table.hpp"
#include "pbsq/report.hpp"

namespace pbsq {

// A run of consecutive odd struck numbers. `start` is the first odd element
// (a number-line position, or a residue for paradigm-space sects); labels[i]
// is the least prime factor of start + 2i.
struct Sect {
  uint64_t start = 0;
  std::vector<uint64_t> labels;

  uint64_t length() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
};

// nth prime (1-based, p1 = 2) by trial sieve; for the small indices the sect
// constructions need.
uint64_t nth_prime_small(size_t j);

// Product of the odd primes p2..pj (the paradigm period in odd-number steps).
uint64_t odd_primorial(size_t j);

// Maximum odd Q-sect for multisectors d2..dj: lpf labels of the odd numbers
// 3 .. p_{j+1}-2. Length (p_{j+1}-1)/2 - 1. j < 3 is a domain error.
Sect mQ_construct(size_t j);
uint64_t mQ_length(size_t j);

// Maximum odd R-sect for d2..dj: mirrored mQ(d~(j-2)) halves around the
// center pair {p_{j-1}, p_j}. Length p_{j-1} - 1. j < 4 is a domain error.
// `center_swapped` puts p_j left of the mirror instead; both orders occur.
Sect mR_construct(size_t j, bool center_swapped = false);
uint64_t mR_length(size_t j);

struct SectClass {
  uint64_t start_residue = 0;  // odd position of the first struck element
  std::vector<uint64_t> labels;
};

// Result of an exhaustive scan over one paradigm period.
struct ParadigmScan {
  size_t j = 0;
  uint64_t period = 0;       // in odd-number steps
  uint64_t max_length = 0;
  std::vector<SectClass> classes;  // maximal runs, deduplicated under mirror
  bool half_scan = false;
};

using ProgressFn = std::function<void(uint64_t done, uint64_t total)>;

// Scans all odd residues over one period (or half of it, using mirror
// symmetry) of the strike of d2..dj; residue r is struck iff gcd(r, period)
// > 1. Returns the maximum run length and all maximal-run representatives up
// to mirror symmetry. j = 10 needs `extended`; j > 10 exceeds the budget.
ParadigmScan exhaustive_max_sect(size_t j, bool half_scan = true, bool extended = false,
                                 int threads = 1, const ProgressFn& progress = nullptr);

// Exhaustive max == max(mR, mQ) for j in [j_lo, j_hi] \ {9}; at j = 9 the max
// is 19 = mR + 1 (the lone anomaly), recorded explicitly, not as a violation.
VerificationReport verify_lemma3(size_t j_lo, size_t j_hi, int threads = 1,
                                 bool extended = false);

// p_{j+1} <= 2 p_{j-1} + 1 for all p_{j+1} <= max_p; equality only at
// p_{j+1} in {5, 7, 11}, strict from 13 onward.
VerificationReport verify_lemma4(uint64_t max_p, const PrimeTable& table);

enum class SectKind { R, Q };

// A sect pattern located on the number line: the actual lpf row there equals
// the constructed labels, forward or reversed.
struct AnchoredSect {
  uint64_t start = 0;               // first odd number of the window
  uint64_t center = 0;              // start + (length-1); even for R-sects
  uint64_t center_multiple = 0;     // center / p_{j-2}# for R-sects, else 0
  bool reversed = false;
  std::vector<uint64_t> labels;     // actual lpf row (= pattern or its mirror)
};

struct OccurrenceScan {
  std::vector<AnchoredSect> found;
  bool partial = false;  // table exhausted before `count` occurrences
};

OccurrenceScan find_sect_occurrences(size_t j, SectKind kind, size_t count,
                                     const PrimeTable& table);

// --- GSB sieve / sect pyramid ---------------------------------------------

// The tape after line k covers odd numbers 3..m-2 on each side of the `**`
// center; `side` holds the lpf labels going outward from the center.
struct PyramidLine {
  uint64_t line = 0;             // 1-based stable-state index
  uint64_t width = 0;            // token count including the ** center
  std::vector<uint64_t> side;    // labels of 3, 5, 7, ... on one side
};

std::vector<PyramidLine> pyramid_lines(size_t count);

// Paper-style rendering: the innermost block (positions <= 9) is unspaced,
// everything beyond is space-separated. render_pyramid_line(.., false) gives
// the fully space-separated canonical form.
std::string render_pyramid_line(const PyramidLine& line, bool compact);

// Center state of stable line k: the next two unplaced odd primes. `next` is
// about to move out to the tape (its second appearance, shallow mark) and
// `after` is the deeper, double-marked element. The deep element sits on the
// left for odd lines and on the right for even lines.
struct CenterState {
  uint64_t line = 0;
  uint64_t next = 0;
  uint64_t after = 0;
  bool deep_on_left = false;
};

std::vector<CenterState> pyramid_center_states(size_t count);

// ASCII form of the paper's marks: deep ((q)), shallow (q).
std::string render_center_state(const CenterState& cs);

}  // namespace pbsq
