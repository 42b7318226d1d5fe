#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "surfenc/circuit.hpp"
#include "surfenc/concat.hpp"
#include "surfenc/noise.hpp"
#include "surfenc/pauli.hpp"
#include "surfenc/rng.hpp"
#include "surfenc/surface9.hpp"
#include "surfenc/tableau.hpp"

using namespace surfenc;
using concat::EdtMode;

namespace {

constexpr EdtMode kAllModes[] = {EdtMode::kNone, EdtMode::kEdt5,
                                 EdtMode::kEdt28, EdtMode::kEdt258};

// Widens a generator on the mode's wire count to `n` wires.
PauliString widen(const PauliString& g, int n) {
  PauliString out(n);
  for (int q = 0; q < g.n; ++q) {
    if (g.x_bit(q)) out.toggle_x(q);
    if (g.z_bit(q)) out.toggle_z(q);
  }
  out.phase = g.phase;
  return out;
}

}  // namespace

TEST_CASE("mode names and block lists") {
  CHECK(concat::edt_mode_name(EdtMode::kNone) == std::string("none"));
  CHECK(concat::edt_mode_name(EdtMode::kEdt258) == std::string("258"));
  CHECK(concat::edt_mode_from_name("28") == EdtMode::kEdt28);
  CHECK_THROWS_AS(concat::edt_mode_from_name("2"), std::invalid_argument);
  CHECK(concat::edt_blocks(EdtMode::kNone).empty());
  CHECK(concat::edt_blocks(EdtMode::kEdt5).size() == 1);
  CHECK(concat::edt_blocks(EdtMode::kEdt5)[0] == 4);
  CHECK(concat::edt_blocks(EdtMode::kEdt28)[0] == 1);
  CHECK(concat::edt_blocks(EdtMode::kEdt28)[1] == 7);
  CHECK(concat::edt_blocks(EdtMode::kEdt258).size() == 3);
}

TEST_CASE("register sizes per mode") {
  CHECK(concat::num_wires(EdtMode::kNone) == 81);
  CHECK(concat::num_wires(EdtMode::kEdt5) == 99);
  CHECK(concat::num_wires(EdtMode::kEdt28) == 117);
  CHECK(concat::num_wires(EdtMode::kEdt258) == 135);
  CHECK(concat::num_cnots(EdtMode::kNone) == 144);
  CHECK(concat::num_cnots(EdtMode::kEdt5) == 178);
  CHECK(concat::num_cnots(EdtMode::kEdt28) == 212);
  CHECK(concat::num_cnots(EdtMode::kEdt258) == 246);
}

TEST_CASE("renumbering squares to the 180-degree rotation") {
  // The encoded-H relabeling is a 90-degree lattice rotation: applied twice
  // it gives the 180-degree rotation (a code automorphism fixing both
  // logicals), and applied four times every position is home.
  concat::BlockLayout layout = concat::BlockLayout::contiguous(0);
  layout.renumber();
  std::set<int> wires(layout.wire_of_pos.begin(), layout.wire_of_pos.end());
  CHECK(wires.size() == 9);  // a permutation
  layout.renumber();
  for (int p = 0; p < 9; ++p) CHECK(layout.wire_of_pos[p] == 8 - p);
  layout.renumber();
  layout.renumber();
  for (int p = 0; p < 9; ++p) CHECK(layout.wire_of_pos[p] == p);
}

TEST_CASE("final layouts occupy disjoint live wires") {
  for (const auto mode : kAllModes) {
    const auto layouts = concat::final_layouts(mode);
    std::set<int> used;
    for (const auto& l : layouts) {
      for (const int w : l.wire_of_pos) {
        CHECK(w >= 0);
        CHECK(w < concat::num_wires(mode));
        CHECK(used.insert(w).second);  // no wire serves two positions
      }
    }
    CHECK(used.size() == 81);
    // Teleported blocks live in the ancilla range.
    for (const int j : concat::edt_blocks(mode)) {
      for (const int w : layouts[j].wire_of_pos) CHECK(w >= 81);
    }
  }
}

TEST_CASE("level-2 generator list is a valid 81-generator stabilizer group") {
  for (const auto mode : kAllModes) {
    const auto gens = concat::logical_zero_l2_generators(mode);
    REQUIRE(gens.size() == 81);
    for (const auto& g : gens) CHECK(g.is_hermitian());
    const auto canon = canonicalize(gens);  // throws if dependent
    CHECK(canon.size() == 81);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        REQUIRE(gens[i].commutes_with(gens[j]));
      }
    }
  }
}

TEST_CASE("noiseless attempt prepares exactly the level-2 zero state") {
  for (const auto mode : kAllModes) {
    concat::TableauEngine eng(SplitRng(7, 0, 11));
    concat::NoFaults nf;
    long preps = 0;
    const auto res = concat::run_attempt(eng, mode, nf, &preps);
    CHECK_FALSE(res.detected);
    CHECK(res.edts_started ==
          static_cast<int>(concat::edt_blocks(mode).size()));
    CHECK(preps == 9 + 2 * res.edts_started);
    const int n = eng.tableau().num_qubits();
    CHECK(n == concat::num_wires(mode));
    for (const auto& g : concat::logical_zero_l2_generators(mode)) {
      REQUIRE(eng.tableau().expectation(widen(g, n)) == +1);
    }
    // The attempt's layouts agree with the static prediction.
    const auto expect = concat::final_layouts(mode);
    for (int b = 0; b < 9; ++b) {
      CHECK(res.layouts[b].wire_of_pos == expect[b].wire_of_pos);
    }
  }
}

TEST_CASE("frame engine mirrors the noiseless run exactly") {
  for (const auto mode : kAllModes) {
    concat::FrameEngine eng;
    concat::NoFaults nf;
    auto res = concat::run_attempt(eng, mode, nf);
    CHECK_FALSE(res.detected);
    CHECK(eng.frame().is_identity_bits());
    concat::measure_register(eng, res);
    for (int b = 0; b < 9; ++b) CHECK(res.block_neg_masks[b] == 0);
  }
}

TEST_CASE("prepare_logical_zero_l2 at p = 0 accepts on the first attempt") {
  for (const auto mode : kAllModes) {
    concat::TableauEngine eng(SplitRng(9, 0, 1));
    SplitRng fault_rng(9, 0, 2);
    const auto out =
        concat::prepare_logical_zero_l2(eng, mode, NoiseModel(0.0), fault_rng);
    CHECK(out.attempts == 1);
    CHECK(out.level1_preps ==
          9 + 2 * static_cast<long>(concat::edt_blocks(mode).size()));
  }
}

TEST_CASE("noiseless measurement satisfies block and outer constraints") {
  for (int seed = 0; seed < 10; ++seed) {
    concat::TableauEngine eng(SplitRng(seed, 3, 1));
    concat::NoFaults nf;
    auto res = concat::run_attempt(eng, EdtMode::kEdt258, nf);
    REQUIRE_FALSE(res.detected);
    concat::measure_register(eng, res);
    std::uint16_t outer_neg = 0;
    for (int b = 0; b < 9; ++b) {
      CHECK(surf9::z_syndrome_bits(res.block_neg_masks[b]) == 0);
      if (surf9::hard_decode_logical(res.block_neg_masks[b]) < 0) {
        outer_neg |= static_cast<std::uint16_t>(1u << b);
      }
    }
    CHECK(surf9::z_syndrome_bits(outer_neg) == 0);
    CHECK(surf9::hard_decode_logical(outer_neg) == +1);
  }
}

TEST_CASE("a single X before the EDT is detected") {
  // CNOT ordinal 39 is block 5's final encoder gate (0-based block 4); an IX
  // fault there leaves one X on that block, which the EDT's logical Bell
  // measurement flags as a Z-syndrome violation on the ancilla copy.
  const std::vector<FaultEvent> plan = {{39, 1}};
  concat::TableauEngine eng(SplitRng(21, 0, 1));
  concat::PlannedFaults faults{plan};
  const auto res = concat::run_attempt(eng, EdtMode::kEdt5, faults);
  CHECK(res.detected);
  CHECK(res.edts_started == 1);

  // The same fault sails through when no EDT guards that block, and the
  // level-1 decoder corrects the single error.
  concat::TableauEngine eng2(SplitRng(21, 0, 1));
  concat::PlannedFaults faults2{plan};
  auto res2 = concat::run_attempt(eng2, EdtMode::kNone, faults2);
  CHECK_FALSE(res2.detected);
  concat::measure_register(eng2, res2);
  std::uint16_t outer_neg = 0;
  for (int b = 0; b < 9; ++b) {
    if (surf9::hard_decode_logical(res2.block_neg_masks[b]) < 0) {
      outer_neg |= static_cast<std::uint16_t>(1u << b);
    }
  }
  CHECK(surf9::hard_decode_logical(outer_neg) == +1);
}

TEST_CASE("frame and tableau agree on planned-fault detection") {
  // Sweep every 1-fault location in the EDT258 attempt with a fixed Pauli
  // and compare the detection indicator between backends.
  const int cnots = concat::num_cnots(EdtMode::kEdt258);
  for (int ord = 0; ord < cnots; ord += 7) {
    for (const int pauli : {1, 4, 10}) {
      const std::vector<FaultEvent> plan = {{ord, pauli}};
      concat::FrameEngine fe;
      concat::PlannedFaults pf{plan};
      const auto fr = concat::run_attempt(fe, EdtMode::kEdt258, pf);
      concat::TableauEngine te(SplitRng(ord, pauli, 5));
      concat::PlannedFaults pt{plan};
      const auto tr = concat::run_attempt(te, EdtMode::kEdt258, pt);
      REQUIRE(fr.detected == tr.detected);
      REQUIRE(fr.edts_started == tr.edts_started);
    }
  }
}

TEST_CASE("exported level-2 circuit matches the driver") {
  for (const auto mode : kAllModes) {
    const auto c = concat::level2_circuit(mode);
    CHECK(c.n == concat::num_wires(mode));
    CHECK(c.cnot_count() == concat::num_cnots(mode));
    int measures = 0;
    std::vector<std::string> markers;
    for (const auto& ev : c.events) {
      if (ev.kind == GateKind::kMeasureZ) ++measures;
      if (ev.kind == GateKind::kMarker) markers.push_back(ev.tag);
    }
    const int edts = static_cast<int>(concat::edt_blocks(mode).size());
    CHECK(measures == 81 + 18 * edts);
    // Marker skeleton: nine block labels, the three phase labels, one per
    // EDT, and the final measurement label.
    CHECK(std::count(markers.begin(), markers.end(), "block-1") == 1);
    CHECK(std::count(markers.begin(), markers.end(), "block-9") == 1);
    CHECK(std::count(markers.begin(), markers.end(), "encoded-h") == 1);
    CHECK(std::count(markers.begin(), markers.end(), "step-1") == 1);
    CHECK(std::count(markers.begin(), markers.end(), "step-2") == 1);
    CHECK(std::count(markers.begin(), markers.end(), "measure") == 1);
    CHECK(static_cast<int>(markers.size()) == 9 + 3 + edts + 1);
    // Round-trips through the text format.
    const auto text = to_text(c);
    CHECK(to_text(from_text(text)) == text);
  }
}

TEST_CASE("level-2 circuit replay reproduces the zero state") {
  // Running the exported EDT-free circuit event-by-event on a tableau gives
  // the same state as the driver (measurement events excluded).
  const auto c = concat::level2_circuit(EdtMode::kNone);
  StabilizerTableau t(c.n);
  SplitRng rng(31, 0, 0);
  for (const auto& ev : c.events) {
    if (ev.kind == GateKind::kMeasureZ) break;  // stop before readout
    switch (ev.kind) {
      case GateKind::kInitZero: t.init_zero(ev.a, rng); break;
      case GateKind::kInitPlus: t.init_plus(ev.a, rng); break;
      case GateKind::kH: t.apply_h(ev.a); break;
      case GateKind::kCnot: t.apply_cnot(ev.a, ev.b); break;
      default: break;
    }
  }
  for (const auto& g : concat::logical_zero_l2_generators(EdtMode::kNone)) {
    REQUIRE(t.expectation(g) == +1);
  }
}

TEST_CASE("restart loop recovers from persistent noise") {
  // At a noise level where detection is near-certain for a while, the loop
  // still terminates and the accepted state decodes cleanly at p = 0 faults
  // afterwards (the final accepted attempt had no detected error).
  concat::TableauEngine eng(SplitRng(77, 4, 1));
  SplitRng fault_rng(77, 4, 2);
  const auto out = concat::prepare_logical_zero_l2(eng, EdtMode::kEdt258,
                                                   NoiseModel(0.05), fault_rng);
  CHECK(out.attempts >= 1);
  CHECK(out.level1_preps >= 15L * out.attempts / 2);  // aborted attempts count too
}
