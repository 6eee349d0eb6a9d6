#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pbsq {

// One black box M in state (output)M(input). A rising input edge leaves the
// output alone; a falling edge toggles it.
struct ModulatorCell {
  int output = 0;
  int input = 0;

  std::string render() const {
    return std::to_string(output) + "M" + std::to_string(input);
  }
  friend bool operator==(const ModulatorCell&, const ModulatorCell&) = default;
};

ModulatorCell mod_step(ModulatorCell cell, int new_input);

// A chain of cells; the rightmost receives the external input and each
// cell's output drives the next one leftward. Rendered left to right as
// e.g. 0M1M1M0, so the rendering reads as a binary number.
struct ChainState {
  std::vector<ModulatorCell> cells;  // cells[0] is the leftmost
  int external_input = 0;

  std::string render() const;
};

// Starts all-zero and toggles the external input `steps - 1` times; returns
// the `steps` settled states including the initial one. Cascades resolve
// fully within one step. The renderings enumerate binary counting over
// 2^(cells+1) states.
std::vector<ChainState> chain_run(size_t cells, size_t steps);
std::vector<std::string> chain_run_rendered(size_t cells, size_t steps);

// The published E4 stable-state table: four rows of (input, markers 1..8,
// output). Transitions between rows are table lookups; the gate wiring is
// figure-only and not modelled.
class E4Table {
 public:
  static constexpr int kRows = 4;
  static constexpr int kMarkers = 8;

  // row r in 0..3 -> (input bit, marker bits 1..8, output bit)
  static int input_bit(int row);
  static int output_bit(int row);
  static int marker_bit(int row, int marker);  // marker in 1..8

  // Column read top to bottom, as a 4-bit word (bit 3 = first row).
  static std::array<int, 4> waveform(int marker);
  static std::string waveform_string(int marker);

  // The word read as binary: odd markers give 1,2,4,8; even give 3,6,9,12.
  static int numeric(int marker);

  static std::string row_string(int row);  // "1 00100101 1"
};

struct E4Holes {
  std::vector<int> covered;       // marker numbers plus the input's 10
  std::vector<int> holes;         // {5, 7, 11}
  std::vector<int> space_primes;  // {2, 3} from the opposed markers 1 and 5
};

E4Holes e4_sieve_holes();

}  // namespace pbsq
