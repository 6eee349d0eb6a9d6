#include <doctest.h>

#include <set>
#include <stdexcept>

#include "pbsq/modulator.hpp"

using namespace pbsq;

TEST_CASE("single cell steps") {
  ModulatorCell c{0, 0};
  c = mod_step(c, 1);
  CHECK(c.render() == "0M1");  // rising edge: output unchanged
  c = mod_step(c, 0);
  CHECK(c.render() == "1M0");  // falling edge: output toggles
  c = mod_step(c, 1);
  CHECK(c.render() == "1M1");
  c = mod_step(c, 0);
  CHECK(c.render() == "0M0");  // cycle closes
}

TEST_CASE("single cell run") {
  CHECK(chain_run_rendered(1, 4) ==
        std::vector<std::string>{"0M0", "0M1", "1M0", "1M1"});
}

TEST_CASE("three-cell chain counts in binary") {
  auto lines = chain_run_rendered(3, 16);
  REQUIRE(lines.size() == 16);
  CHECK(lines.front() == "0M0M0M0");
  CHECK(lines.back() == "1M1M1M1");
  for (size_t i = 0; i < lines.size(); ++i) {
    // strip the Ms: the rendering reads as the binary value of i
    std::string bits;
    for (char c : lines[i]) {
      if (c != 'M') bits += c;
    }
    CHECK(std::stoul(bits, nullptr, 2) == i);
  }
}

TEST_CASE("chain wraps with period 2^(cells+1)") {
  auto lines = chain_run_rendered(3, 32);
  for (size_t i = 0; i < 16; ++i) CHECK(lines[i] == lines[i + 16]);
  std::set<std::string> distinct(lines.begin(), lines.end());
  CHECK(distinct.size() == 16);
}

TEST_CASE("frequency halving over eight input edges") {
  // feed 1,0 repeated through one cell: 8 input transitions, 4 output ones
  ModulatorCell c{0, 0};
  int input_transitions = 0, output_transitions = 0;
  int input = 0;
  for (int step = 0; step < 8; ++step) {
    int prev_out = c.output;
    input ^= 1;
    ++input_transitions;
    c = mod_step(c, input);
    output_transitions += c.output != prev_out;
  }
  CHECK(input_transitions == 8);
  CHECK(output_transitions == 4);
}

TEST_CASE("E4 table rows read the published stable states") {
  CHECK(E4Table::row_string(0) == "1 00100101 1");
  CHECK(E4Table::row_string(1) == "0 01001001 1");
  CHECK(E4Table::row_string(2) == "1 01010010 0");
  CHECK(E4Table::row_string(3) == "0 10010100 0");

  // input column 1,0,1,0; output column 1,1,0,0
  for (int r = 0; r < 4; ++r) {
    CHECK(E4Table::input_bit(r) == (r % 2 == 0 ? 1 : 0));
    CHECK(E4Table::output_bit(r) == (r < 2 ? 1 : 0));
  }
}

TEST_CASE("E4 marker waveforms and the numeric map") {
  CHECK(E4Table::waveform_string(1) == "0001");
  CHECK(E4Table::waveform_string(7) == "0010");
  CHECK(E4Table::waveform_string(5) == "0100");
  CHECK(E4Table::waveform_string(3) == "1000");
  CHECK(E4Table::waveform_string(2) == "0110");
  CHECK(E4Table::waveform_string(8) == "1100");

  CHECK(E4Table::numeric(1) == 1);
  CHECK(E4Table::numeric(7) == 2);
  CHECK(E4Table::numeric(5) == 4);
  CHECK(E4Table::numeric(3) == 8);
  CHECK(E4Table::numeric(4) == 3);
  CHECK(E4Table::numeric(2) == 6);
  CHECK(E4Table::numeric(6) == 9);
  CHECK(E4Table::numeric(8) == 12);

  CHECK_THROWS_AS(E4Table::waveform(0), std::domain_error);
  CHECK_THROWS_AS(E4Table::waveform(9), std::domain_error);
}

TEST_CASE("E4 sieve holes") {
  E4Holes holes = e4_sieve_holes();
  CHECK(holes.covered ==
        std::vector<int>{1, 2, 3, 4, 6, 8, 9, 10, 12});  // markers plus input 1010 = 10
  CHECK(holes.holes == std::vector<int>{5, 7, 11});
  CHECK(holes.space_primes == std::vector<int>{2, 3});
}
