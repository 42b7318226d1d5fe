#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "surfenc/circuit.hpp"
#include "surfenc/rng.hpp"
#include "surfenc/shots.hpp"
#include "surfenc/surface9.hpp"
#include "surfenc/tableau.hpp"

using namespace surfenc;
using shots::ShotDataset;

namespace {

std::array<std::uint8_t, 9> row_from_mask(std::uint16_t mask) {
  std::array<std::uint8_t, 9> row{};
  for (int q = 0; q < 9; ++q) row[q] = (mask >> q) & 1;
  return row;
}

StabilizerTableau encoded_state() {
  StabilizerTableau t(9);
  SplitRng rng(1, 0, 0);
  run_circuit(t, surf9::encoding_circuit(), rng);
  return t;
}

std::array<std::uint8_t, 9> sample_row(const StabilizerTableau& state,
                                        bool x_basis, SplitRng& rng) {
  StabilizerTableau t = state;
  if (x_basis) {
    for (int q = 0; q < 9; ++q) t.apply_h(q);
  }
  std::array<std::uint8_t, 9> row{};
  const auto outcomes = t.measure_all_z(rng);
  for (int q = 0; q < 9; ++q) row[q] = outcomes[q] < 0 ? 1 : 0;
  return row;
}

ShotDataset all_plus_x_rows(int n) {
  ShotDataset x;
  x.basis = 'X';
  for (int i = 0; i < n; ++i) x.rows.push_back(row_from_mask(0));
  return x;
}

}  // namespace

TEST_CASE("dataset csv golden and round-trip") {
  ShotDataset d;
  d.basis = 'X';
  d.metadata = {{"device", "sim-a"}, {"delay_ns", 2147.6}};
  d.rows.push_back(row_from_mask(0x002));  // qubit 2 read -1

  const std::string csv = shots::dataset_to_csv(d);
  CHECK(csv ==
        "{\"basis\":\"X\",\"delay_ns\":2147.6,\"device\":\"sim-a\"}\n"
        "0,1,0,0,0,0,0,0,0\n");

  const ShotDataset back = shots::dataset_from_csv(csv);
  CHECK(back.basis == 'X');
  CHECK(back.metadata.at("device").get<std::string>() == "sim-a");
  CHECK(back.metadata.at("delay_ns").get<double>() == 2147.6);
  CHECK(back.metadata.at("basis").get<std::string>() == "X");
  REQUIRE(back.rows.size() == 1);
  CHECK(back.rows[0] == d.rows[0]);

  // Nested metadata survives verbatim.
  ShotDataset nested;
  nested.basis = 'Z';
  nested.metadata = {{"run", {{"id", 7}, {"label", "night"}}}};
  nested.rows.push_back(row_from_mask(0x1FF));
  const ShotDataset nback = shots::dataset_from_csv(shots::dataset_to_csv(nested));
  CHECK(nback.basis == 'Z');
  CHECK(nback.metadata.at("run").at("id").get<int>() == 7);
  CHECK(nback.metadata.at("run").at("label").get<std::string>() == "night");
  CHECK(nback.rows[0] == nested.rows[0]);
}

TEST_CASE("dataset csv parse errors") {
  CHECK_THROWS_AS(shots::dataset_from_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(shots::dataset_from_csv("not json\n0,0,0,0,0,0,0,0,0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(shots::dataset_from_csv("{\"device\":\"x\"}\n"),
                  std::invalid_argument);  // no basis
  CHECK_THROWS_AS(shots::dataset_from_csv("{\"basis\":\"Y\"}\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(shots::dataset_from_csv("{\"basis\":1}\n"),
                  std::invalid_argument);
  const std::string head = "{\"basis\":\"Z\"}\n";
  CHECK_THROWS_AS(shots::dataset_from_csv(head + "0,0,0,0,0,0,0,0\n"),
                  std::invalid_argument);  // 8 entries
  CHECK_THROWS_AS(shots::dataset_from_csv(head + "0,0,0,0,0,0,0,0,0,0\n"),
                  std::invalid_argument);  // 10 entries
  CHECK_THROWS_WITH_AS(
      shots::dataset_from_csv(head + "0,0,2,0,0,0,0,0,0\n"),
      doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(shots::dataset_from_csv(head + "0,0,x,0,0,0,0,0,0\n"),
                  std::invalid_argument);
  // Blank lines between rows are fine.
  const auto ok =
      shots::dataset_from_csv(head + "\n0,0,0,0,0,0,0,0,0\n\n");
  CHECK(ok.rows.size() == 1);
}

TEST_CASE("noiseless encoded shots give perfect scores") {
  const StabilizerTableau state = encoded_state();
  ShotDataset z, x;
  z.basis = 'Z';
  x.basis = 'X';
  for (int i = 0; i < 600; ++i) {
    SplitRng zr(3, static_cast<std::uint64_t>(i), 0);
    SplitRng xr(4, static_cast<std::uint64_t>(i), 0);
    z.rows.push_back(sample_row(state, false, zr));
    x.rows.push_back(sample_row(state, true, xr));
  }
  const auto a = shots::analyze_shots(z, x);
  CHECK(a.z_rows == 600);
  CHECK(a.x_rows == 600);
  CHECK(a.p_l == 0.0);
  CHECK(a.p_z == 1.0);
  CHECK(a.p_x == 1.0);
  CHECK(a.fidelity_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single readout flips decode correctly but fail postselection") {
  const StabilizerTableau state = encoded_state();
  ShotDataset z;
  z.basis = 'Z';
  for (int i = 0; i < 18; ++i) {
    SplitRng rng(5, static_cast<std::uint64_t>(i), 0);
    auto row = sample_row(state, false, rng);
    row[i % 9] ^= 1;  // one corrupted qubit per row
    z.rows.push_back(row);
  }
  const auto a = shots::analyze_shots(z, all_plus_x_rows(20));
  // Distance three: every single flip is corrected, but its syndrome is
  // nontrivial so the row never counts toward the joint Z pass.
  CHECK(a.p_l == 0.0);
  CHECK(a.p_z == 0.0);
  CHECK(a.p_x == 1.0);
  CHECK(a.fidelity_bound == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("crafted datasets reproduce the joint fidelity bound") {
  ShotDataset z, x;
  z.basis = 'Z';
  x.basis = 'X';
  for (int i = 0; i < 100; ++i) {
    // 85 clean rows, 15 with one flipped qubit (syndrome nontrivial).
    z.rows.push_back(row_from_mask(i < 85 ? 0x000 : 0x001));
    // 68 clean rows, 32 breaking the first X parity.
    x.rows.push_back(row_from_mask(i < 68 ? 0x000 : 0x001));
  }
  const auto a = shots::analyze_shots(z, x);
  CHECK(a.p_l == 0.0);
  CHECK(a.p_z == 0.85);
  CHECK(a.p_x == 0.68);
  CHECK(a.fidelity_bound == doctest::Approx(0.53).epsilon(1e-12));
}

TEST_CASE("undetected logical flips are counted as failures") {
  // Mask 0x61 (qubits 1, 6, 7 read -1) has trivial syndrome but odd overlap
  // with the logical-Z support, so it hard-decodes to -1 untouched.
  REQUIRE(surf9::z_syndrome_bits(0x61) == 0);
  REQUIRE(surf9::hard_decode_logical(0x61) == -1);
  ShotDataset z;
  z.basis = 'Z';
  for (int i = 0; i < 100; ++i) {
    z.rows.push_back(row_from_mask(i < 90 ? 0x000 : 0x061));
  }
  const auto a = shots::analyze_shots(z, all_plus_x_rows(10));
  CHECK(a.p_l == 0.1);
  CHECK(a.p_z == 0.9);  // the flipped rows pass the parity checks but not Z_L
}

TEST_CASE("analysis input validation") {
  ShotDataset z, x;
  z.basis = 'Z';
  x.basis = 'X';
  z.rows.push_back(row_from_mask(0));
  x.rows.push_back(row_from_mask(0));
  CHECK_NOTHROW(shots::analyze_shots(z, x));
  CHECK_THROWS_AS(shots::analyze_shots(x, z), std::invalid_argument);
  CHECK_THROWS_AS(shots::analyze_shots(z, z), std::invalid_argument);

  ShotDataset empty_z = z, empty_x = x;
  empty_z.rows.clear();
  empty_x.rows.clear();
  CHECK_THROWS_AS(shots::analyze_shots(empty_z, x), std::runtime_error);
  CHECK_THROWS_AS(shots::analyze_shots(z, empty_x), std::runtime_error);
}
