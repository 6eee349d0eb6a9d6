#include "pbsq/modulator.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbsq {

ModulatorCell mod_step(ModulatorCell cell, int new_input) {
  if (cell.input == 1 && new_input == 0) cell.output ^= 1;
  cell.input = new_input;
  return cell;
}

std::string ChainState::render() const {
  std::string out;
  for (const auto& c : cells) {
    out += std::to_string(c.output);
    out += 'M';
  }
  out += std::to_string(external_input);
  return out;
}

std::vector<ChainState> chain_run(size_t cells, size_t steps) {
  if (cells < 1) throw std::domain_error("chain_run: cells >= 1");
  ChainState state;
  state.cells.assign(cells, ModulatorCell{});
  state.external_input = 0;
  std::vector<ChainState> history;
  history.reserve(steps);
  for (size_t s = 0; s < steps; ++s) {
    history.push_back(state);
    // toggle the external input and let falling edges ripple leftward
    int signal = state.external_input ^ 1;
    state.external_input = signal;
    for (size_t i = state.cells.size(); i-- > 0;) {
      ModulatorCell before = state.cells[i];
      state.cells[i] = mod_step(before, signal);
      if (state.cells[i].output == before.output) break;  // no edge to pass on
      signal = state.cells[i].output;
    }
  }
  return history;
}

std::vector<std::string> chain_run_rendered(size_t cells, size_t steps) {
  std::vector<std::string> out;
  for (const auto& s : chain_run(cells, steps)) out.push_back(s.render());
  return out;
}

namespace {

// input | markers 1..8 | output, exactly as published
constexpr int kE4[E4Table::kRows][10] = {
    {1, 0, 0, 1, 0, 0, 1, 0, 1, 1},
    {0, 0, 1, 0, 0, 1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1, 0, 0, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 1, 0, 0, 0},
};

void check_row(int row) {
  if (row < 0 || row >= E4Table::kRows) throw std::domain_error("E4: row in 0..3");
}

void check_marker(int marker) {
  if (marker < 1 || marker > E4Table::kMarkers) throw std::domain_error("E4: marker in 1..8");
}

}  // namespace

int E4Table::input_bit(int row) {
  check_row(row);
  return kE4[row][0];
}

int E4Table::output_bit(int row) {
  check_row(row);
  return kE4[row][9];
}

int E4Table::marker_bit(int row, int marker) {
  check_row(row);
  check_marker(marker);
  return kE4[row][marker];
}

std::array<int, 4> E4Table::waveform(int marker) {
  check_marker(marker);
  return {kE4[0][marker], kE4[1][marker], kE4[2][marker], kE4[3][marker]};
}

std::string E4Table::waveform_string(int marker) {
  std::string s;
  for (int b : waveform(marker)) s += static_cast<char>('0' + b);
  return s;
}

int E4Table::numeric(int marker) {
  auto w = waveform(marker);
  return (w[0] << 3) | (w[1] << 2) | (w[2] << 1) | w[3];
}

std::string E4Table::row_string(int row) {
  check_row(row);
  std::string s = std::to_string(kE4[row][0]) + " ";
  for (int m = 1; m <= kMarkers; ++m) s += static_cast<char>('0' + kE4[row][m]);
  s += " " + std::to_string(kE4[row][9]);
  return s;
}

E4Holes e4_sieve_holes() {
  E4Holes result;
  for (int m = 1; m <= E4Table::kMarkers; ++m) result.covered.push_back(E4Table::numeric(m));
  result.covered.push_back(10);  // the input word 1010
  std::sort(result.covered.begin(), result.covered.end());
  for (int v = 1; v <= 12; ++v) {
    if (!std::binary_search(result.covered.begin(), result.covered.end(), v)) {
      result.holes.push_back(v);
    }
  }
  result.space_primes = {2, 3};  // the opposed markers 1 and 5 leave two spaces
  return result;
}

}  // namespace pbsq
