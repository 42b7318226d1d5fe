#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surfenc/circuit.hpp"
#include "surfenc/noise.hpp"
#include "surfenc/pauli.hpp"
#include "surfenc/rng.hpp"
#include "surfenc/surface9.hpp"
#include "surfenc/tableau.hpp"

namespace surfenc {
namespace concat {

// Which level-1 blocks (by outer code position) get an error-detecting
// teleportation after the level-2 encoding circuit.
enum class EdtMode { kNone, kEdt5, kEdt28, kEdt258 };

const char* edt_mode_name(EdtMode mode);  // "none", "5", "28", "258"
EdtMode edt_mode_from_name(const std::string& name);
std::span<const int> edt_blocks(EdtMode mode);  // ascending, 0-based

// Live register width: 81 data wires plus 18 fresh ancilla wires per EDT.
int num_wires(EdtMode mode);
// CNOT count of one full attempt: 9*8 block encoders + 8*9 encoded CNOTs,
// plus per EDT two more block encoders and two more encoded CNOTs (34).
int num_cnots(EdtMode mode);

// Position relabeling that makes transversal H a logical Hadamard: the wire
// at code position p plays position kRenumber[p] afterwards (1-based map
// 1->7, 2->6, 3->1, 4->2, 5->5, 6->8, 7->9, 8->4, 9->3).
inline constexpr std::array<int, 9> kRenumber = {6, 5, 0, 1, 4, 7, 8, 3, 2};

// The level-2 circuit mirrors the level-1 encoder: |+>_L seeds (encoded H
// after |0>_L preparation) on these blocks, then the same CNOT pattern with
// encoded CNOTs.
inline constexpr std::array<int, 4> kPlusBlocks = {0, 3, 5, 8};
inline constexpr std::array<std::array<int, 2>, 6> kStep1Pairs = {
    {{0, 1}, {3, 2}, {5, 4}, {8, 7}, {3, 4}, {5, 6}}};
inline constexpr std::array<std::array<int, 2>, 2> kStep2Pairs = {
    {{2, 1}, {6, 7}}};

// Tracks which physical wire currently holds each code position of one
// nine-qubit block (encoded Hadamards permute positions; teleportations move
// blocks to fresh wires).
struct BlockLayout {
  std::array<int, 9> wire_of_pos{};

  static BlockLayout contiguous(int base_wire) {
    BlockLayout out;
    for (int p = 0; p < 9; ++p) out.wire_of_pos[p] = base_wire + p;
    return out;
  }

  void renumber() {
    std::array<int, 9> next{};
    for (int p = 0; p < 9; ++p) next[kRenumber[p]] = wire_of_pos[p];
    wire_of_pos = next;
  }
};

// Where each block's positions sit after one full noiseless attempt.
std::array<BlockLayout, 9> final_layouts(EdtMode mode);

// The 81 stabilizer generators of the prepared |0>_L2 on the live wires of
// `mode`'s register (per-block code stabilizers through each block's final
// layout, plus the outer code's stabilizers and logical Z over the block
// logicals).  Retired ancilla/teleported-away wires carry no support.
std::vector<PauliString> logical_zero_l2_generators(EdtMode mode);

// ---------------------------------------------------------------------------
// Engines.  The attempt driver below is templated over this interface so the
// same control flow serves fast Pauli-frame simulation, exact tableau
// simulation, and circuit export.
// ---------------------------------------------------------------------------

// Propagates the accumulated fault Pauli through the circuit; measurements
// read outcome flips against the fixed all-+1 reference sample (a valid
// noiseless sample for this preparation, whose choice provably cannot change
// detection or failure indicators).
class FrameEngine {
 public:
  void begin(int wires) { frame_ = PauliString(wires); }
  void init_zero(int) {}
  void init_plus(int) {}
  void h(int w) { frame_.conj_h(w); }
  void cnot(int c, int t) { frame_.conj_cnot(c, t); }
  void x(int w) { frame_.toggle_x(w); }
  void z(int w) { frame_.toggle_z(w); }
  void inject(int c, int t, int pauli) {
    const int pc = pauli >> 2;
    const int pt = pauli & 3;
    if (pauli_has_x(pc)) frame_.toggle_x(c);
    if (pauli_has_z(pc)) frame_.toggle_z(c);
    if (pauli_has_x(pt)) frame_.toggle_x(t);
    if (pauli_has_z(pt)) frame_.toggle_z(t);
  }
  int measure(int w) { return frame_.x_bit(w) ? -1 : +1; }
  void marker(const char*) {}

  const PauliString& frame() const { return frame_; }

 private:
  PauliString frame_;
};

// Exact stabilizer simulation; measurement randomness comes from the stream
// handed in at construction, which persists across attempts of one shot.
class TableauEngine {
 public:
  explicit TableauEngine(SplitRng meas_rng) : rng_(meas_rng), t_(1) {}

  void begin(int wires) { t_ = StabilizerTableau(wires); }
  void init_zero(int w) { t_.init_zero(w, rng_); }
  void init_plus(int w) { t_.init_plus(w, rng_); }
  void h(int w) { t_.apply_h(w); }
  void cnot(int c, int t) { t_.apply_cnot(c, t); }
  void x(int w) { t_.apply_x(w); }
  void z(int w) { t_.apply_z(w); }
  void inject(int c, int t, int pauli) {
    PauliString p(t_.num_qubits());
    const int pc = pauli >> 2;
    const int pt = pauli & 3;
    if (pauli_has_x(pc)) p.toggle_x(c);
    if (pauli_has_z(pc)) p.toggle_z(c);
    if (pauli_has_x(pt)) p.toggle_x(t);
    if (pauli_has_z(pt)) p.toggle_z(t);
    p.phase = static_cast<std::uint8_t>(p.y_count() & 3);
    t_.apply_pauli(p);
  }
  int measure(int w) { return t_.measure_z(w, rng_); }
  void marker(const char*) {}

  StabilizerTableau& tableau() { return t_; }
  const StabilizerTableau& tableau() const { return t_; }

 private:
  SplitRng rng_;
  StabilizerTableau t_;
};

// Records the event stream instead of simulating; measurements report +1 so
// the noiseless control flow (no detection, no corrections) is what lands in
// the exported circuit.
class RecorderEngine {
 public:
  void begin(int wires) { c_ = CliffordCircuit(wires); }
  void init_zero(int w) { c_.init_zero(w); }
  void init_plus(int w) { c_.init_plus(w); }
  void h(int w) { c_.h(w); }
  void cnot(int c, int t) { c_.cnot(c, t); }
  void x(int w) { c_.x(w); }
  void z(int w) { c_.z(w); }
  void inject(int, int, int) {}
  int measure(int w) {
    c_.measure_z(w);
    return +1;
  }
  void marker(const char* tag) { c_.marker(tag); }

  CliffordCircuit take() { return std::move(c_); }

 private:
  CliffordCircuit c_{0};
};

// ---------------------------------------------------------------------------
// Fault sources.  The driver asks once per executed CNOT, passing the CNOT's
// ordinal within the attempt; a nonzero return is a two-qubit Pauli index to
// inject after that gate.
// ---------------------------------------------------------------------------

struct NoFaults {
  int next_fault(int) { return 0; }
};

struct BernoulliFaults {
  double p;
  SplitRng* rng;
  int next_fault(int) {
    if (!rng->bernoulli(p)) return 0;
    return 1 + static_cast<int>(rng->below(kTwoQubitPaulis));
  }
};

// Injects a fixed fault set; `faults` must be sorted by event_index, which
// here means the CNOT ordinal within the attempt.
struct PlannedFaults {
  std::span<const FaultEvent> faults;
  std::size_t cursor = 0;
  int next_fault(int ordinal) {
    if (cursor < faults.size() && faults[cursor].event_index == ordinal) {
      return faults[cursor++].pauli;
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------
// Attempt driver.
// ---------------------------------------------------------------------------

struct AttemptResult {
  bool detected = false;
  int edts_started = 0;
  std::array<BlockLayout, 9> layouts{};
  // Final per-block outcome masks, bit p = code position p read -1; filled by
  // measure_register.
  std::array<std::uint16_t, 9> block_neg_masks{};
};

namespace detail {

inline constexpr const char* kBlockMarkers[9] = {
    "block-1", "block-2", "block-3", "block-4", "block-5",
    "block-6", "block-7", "block-8", "block-9"};
inline constexpr const char* kEdtMarkers[9] = {
    "edt-1", "edt-2", "edt-3", "edt-4", "edt-5",
    "edt-6", "edt-7", "edt-8", "edt-9"};

template <class Engine, class Faults>
void l1_encode(Engine& eng, Faults& faults, int base, int& ordinal) {
  for (int p = 0; p < 9; ++p) {
    const bool plus = p == 0 || p == 3 || p == 5 || p == 8;
    if (plus) {
      eng.init_plus(base + p);
    } else {
      eng.init_zero(base + p);
    }
  }
  auto faulty_cnot = [&](int c, int t) {
    eng.cnot(base + c, base + t);
    if (const int pl = faults.next_fault(ordinal)) {
      eng.inject(base + c, base + t, pl);
    }
    ++ordinal;
  };
  for (const auto& [c, t] : kStep1Pairs) faulty_cnot(c, t);
  for (const auto& [c, t] : kStep2Pairs) faulty_cnot(c, t);
}

template <class Engine>
void encoded_h(Engine& eng, BlockLayout& layout) {
  for (int p = 0; p < 9; ++p) eng.h(layout.wire_of_pos[p]);
  layout.renumber();
}

template <class Engine, class Faults>
void encoded_cnot(Engine& eng, Faults& faults, const BlockLayout& control,
                  const BlockLayout& target, int& ordinal) {
  for (int p = 0; p < 9; ++p) {
    const int cw = control.wire_of_pos[p];
    const int tw = target.wire_of_pos[p];
    eng.cnot(cw, tw);
    if (const int pl = faults.next_fault(ordinal)) eng.inject(cw, tw, pl);
    ++ordinal;
  }
}

template <class Engine>
std::uint16_t measure_block(Engine& eng, const BlockLayout& layout) {
  std::uint16_t mask = 0;
  for (int p = 0; p < 9; ++p) {
    if (eng.measure(layout.wire_of_pos[p]) < 0) {
      mask |= static_cast<std::uint16_t>(1u << p);
    }
  }
  return mask;
}

inline bool z_l_minus(std::uint16_t neg_mask) {
  return std::popcount(
             static_cast<unsigned>(neg_mask & surf9::kLogicalZSupport)) &
         1;
}

}  // namespace detail

// Runs one level-2 preparation attempt: nine level-1 encoders, encoded
// Hadamards on the |+>_L blocks, the eight encoded CNOTs, then the mode's
// EDTs in ascending block order.  A detected EDT aborts the attempt
// immediately (remaining work is skipped).  `level1_preps`, if non-null,
// accumulates one count per level-1 encoder started.
template <class Engine, class Faults>
AttemptResult run_attempt(Engine& eng, EdtMode mode, Faults& faults,
                          long* level1_preps = nullptr) {
  eng.begin(num_wires(mode));
  AttemptResult r;
  int ordinal = 0;
  for (int b = 0; b < 9; ++b) {
    r.layouts[b] = BlockLayout::contiguous(9 * b);
  }
  for (int b = 0; b < 9; ++b) {
    eng.marker(detail::kBlockMarkers[b]);
    detail::l1_encode(eng, faults, 9 * b, ordinal);
  }
  if (level1_preps) *level1_preps += 9;
  eng.marker("encoded-h");
  for (const int b : kPlusBlocks) detail::encoded_h(eng, r.layouts[b]);
  eng.marker("step-1");
  for (const auto& [c, t] : kStep1Pairs) {
    detail::encoded_cnot(eng, faults, r.layouts[c], r.layouts[t], ordinal);
  }
  eng.marker("step-2");
  for (const auto& [c, t] : kStep2Pairs) {
    detail::encoded_cnot(eng, faults, r.layouts[c], r.layouts[t], ordinal);
  }
  int fresh = 81;
  for (const int j : edt_blocks(mode)) {
    eng.marker(detail::kEdtMarkers[j]);
    ++r.edts_started;
    BlockLayout anc_a = BlockLayout::contiguous(fresh);
    BlockLayout anc_b = BlockLayout::contiguous(fresh + 9);
    fresh += 18;
    // Fresh logical Bell pair: A = |+>_L via encoder + encoded H, B = |0>_L,
    // entangled by one encoded CNOT.
    detail::l1_encode(eng, faults, anc_a.wire_of_pos[0], ordinal);
    detail::l1_encode(eng, faults, anc_b.wire_of_pos[0], ordinal);
    if (level1_preps) *level1_preps += 2;
    detail::encoded_h(eng, anc_a);
    detail::encoded_cnot(eng, faults, anc_a, anc_b, ordinal);
    // Logical Bell measurement of (data block, A).
    detail::encoded_cnot(eng, faults, r.layouts[j], anc_a, ordinal);
    detail::encoded_h(eng, r.layouts[j]);
    const std::uint16_t m_data = detail::measure_block(eng, r.layouts[j]);
    const std::uint16_t m_anc = detail::measure_block(eng, anc_a);
    if (surf9::z_syndrome_bits(m_data) != 0 ||
        surf9::z_syndrome_bits(m_anc) != 0) {
      r.detected = true;
      return r;
    }
    // Both syndromes trivial, so the hard-decoded logical values are the raw
    // Z_L parities.  Teleportation byproduct: X_L for the ancilla value, Z_L
    // for the data value, applied to the surviving half B.
    if (detail::z_l_minus(m_anc)) {
      eng.x(anc_b.wire_of_pos[0]);
      eng.x(anc_b.wire_of_pos[5]);
      eng.x(anc_b.wire_of_pos[6]);
    }
    if (detail::z_l_minus(m_data)) {
      eng.z(anc_b.wire_of_pos[0]);
      eng.z(anc_b.wire_of_pos[1]);
      eng.z(anc_b.wire_of_pos[2]);
    }
    r.layouts[j] = anc_b;
  }
  return r;
}

// Z-measures all 81 data positions (block by block, position by position,
// permutations inverted through the layouts) into block_neg_masks.
template <class Engine>
void measure_register(Engine& eng, AttemptResult& r) {
  eng.marker("measure");
  for (int b = 0; b < 9; ++b) {
    r.block_neg_masks[b] = detail::measure_block(eng, r.layouts[b]);
  }
}

// ---------------------------------------------------------------------------
// Non-template entry points.
// ---------------------------------------------------------------------------

struct EncodingOutcome {
  long attempts = 0;
  long level1_preps = 0;
  std::array<BlockLayout, 9> layouts{};
};

// Repeats noisy attempts on the tableau engine until one passes all EDTs;
// the engine then holds the accepted register state.
EncodingOutcome prepare_logical_zero_l2(TableauEngine& eng, EdtMode mode,
                                        const NoiseModel& noise,
                                        SplitRng& fault_rng);

// The canonical full circuit of one attempt (including final measurement),
// with marker lines delimiting blocks, steps, and EDT segments.  CNOT event
// order equals the driver's ordinal order.
CliffordCircuit level2_circuit(EdtMode mode);

}  // namespace concat
}  // namespace surfenc
