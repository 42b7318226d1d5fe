#pragma once

#include <string>
#include <vector>

#include "surfenc/pauli.hpp"
#include "surfenc/rng.hpp"
#include "surfenc/tableau.hpp"

namespace surfenc {

enum class GateKind {
  kInitZero,  // INIT0 q
  kInitPlus,  // INITP q
  kH,         // H q
  kX,         // X q
  kZ,         // Z q
  kCnot,      // CNOT c t
  kMeasureZ,  // MEASZ q
  kMarker,    // # marker:<tag>
};

struct GateEvent {
  GateKind kind;
  int a = -1;  // qubit (or control), 0-based
  int b = -1;  // target for CNOT
  std::string tag;  // marker text
};

// Ordered list of gate events on a fixed wire count.  Wires are 0-based in
// memory; the text format uses 1-based indices.
struct CliffordCircuit {
  int n = 0;
  std::vector<GateEvent> events;

  explicit CliffordCircuit(int num_qubits = 0);

  void init_zero(int q) { push({GateKind::kInitZero, check(q)}); }
  void init_plus(int q) { push({GateKind::kInitPlus, check(q)}); }
  void h(int q) { push({GateKind::kH, check(q)}); }
  void x(int q) { push({GateKind::kX, check(q)}); }
  void z(int q) { push({GateKind::kZ, check(q)}); }
  void cnot(int control, int target);
  void measure_z(int q) { push({GateKind::kMeasureZ, check(q)}); }
  void marker(std::string tag);

  int cnot_count() const;
  // Event indices of every CNOT, in program order (CNOT ordinal -> index).
  std::vector<int> cnot_event_indices() const;

 private:
  int check(int q) const;
  void push(GateEvent e) { events.push_back(std::move(e)); }
};

// Plain-text serialization:
//   one event per line; `H 3`, `CNOT 1 2`, `INIT0 4`, `INITP 5`, `MEASZ 7`,
//   comment/marker lines start with `#` (markers as `# marker:<tag>`),
//   qubit indices 1-based.  First line is `QUBITS <n>`.
std::string to_text(const CliffordCircuit& c);
// Inverse of to_text; throws std::invalid_argument with a line number on
// malformed input.  Plain `#` comments that are not markers are skipped.
CliffordCircuit from_text(const std::string& text);

// Runs the circuit on a tableau (which must have c.n qubits).  Measurement
// outcomes are appended to `outcomes` in program order when it is non-null.
void run_circuit(StabilizerTableau& t, const CliffordCircuit& c, SplitRng& rng,
                 std::vector<int>* outcomes = nullptr);

// Conjugates `fault` (a Pauli inserted immediately after the event at
// `location`) through every later unitary event, returning the equivalent
// Pauli just before the end of the circuit.  Later init/measurement events on
// wires the error never touches are skipped; one that lands on the error's
// support throws, since its collapse/reset semantics belong to the caller.
PauliString propagate_pauli(const CliffordCircuit& c, int location,
                            const PauliString& fault);

}  // namespace surfenc
