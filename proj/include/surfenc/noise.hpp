#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfenc/circuit.hpp"
#include "surfenc/rng.hpp"

namespace surfenc {

// Circuit-level noise: every physical CNOT is followed by a two-qubit
// depolarizing channel of strength p_cnot (one of the 15 non-identity
// two-qubit Paulis, uniformly).  All other operations are ideal.
struct NoiseModel {
  double p_cnot = 0.0;

  explicit NoiseModel(double p = 0.0);
};

// Two-qubit Pauli index: 1..15, encoded as 4*c + t with c/t in
// {0:I, 1:X, 2:Y, 3:Z} acting on (control, target).
inline constexpr int kTwoQubitPaulis = 15;

std::string two_qubit_pauli_label(int pauli);  // e.g. 5 -> "XX", 3 -> "IZ"
int two_qubit_pauli_from_label(const std::string& label);

// Decomposed X/Z components of one side of a two-qubit Pauli.
inline bool pauli_has_x(int single) { return single == 1 || single == 2; }
inline bool pauli_has_z(int single) { return single == 2 || single == 3; }

// One sampled or enumerated fault: `event_index` addresses a kCnot event in
// the circuit the fault list belongs to; `pauli` is the two-qubit Pauli index.
struct FaultEvent {
  int event_index;
  int pauli;
};

// Draws the fault set for one execution of `circuit`: each CNOT independently
// suffers a uniform non-identity two-qubit Pauli with probability p_cnot.
std::vector<FaultEvent> sample_cnot_faults(const CliffordCircuit& circuit,
                                           const NoiseModel& noise,
                                           SplitRng& rng);

// Applies a fault list to a tableau mid-run: run_circuit_with_faults executes
// the circuit and injects each listed Pauli right after its CNOT.
void run_circuit_with_faults(StabilizerTableau& t, const CliffordCircuit& c,
                             const std::vector<FaultEvent>& faults,
                             SplitRng& rng, std::vector<int>* outcomes);

// Iterates every weight-k combination of CNOT fault locations x Pauli kinds
// for a circuit with `num_cnots` CNOTs (locations are CNOT ordinals, not
// event indices).  Visit order is lexicographic, so runs are reproducible.
class FaultEnumerator {
 public:
  FaultEnumerator(int num_cnots, int k);

  // Total number of fault combinations: C(num_cnots, k) * 15^k.
  std::uint64_t size() const;

  // Fills `out` (size k) with {cnot_ordinal, pauli} pairs for combination
  // `index` in [0, size()).
  void combination(std::uint64_t index, std::vector<FaultEvent>* out) const;

 private:
  int num_cnots_;
  int k_;
  std::vector<std::uint64_t> binom_;  // C(i, j) table
};

// Uniformly samples a weight-k fault combination (used where exhaustive
// enumeration is impractical, k >= 3).
std::vector<FaultEvent> sample_weight_k_faults(int num_cnots, int k,
                                               SplitRng& rng);

// CSV serialization of a fault list: header `event_index,pauli_label`, one
// row per fault.
std::string faults_to_csv(const std::vector<FaultEvent>& faults);
std::vector<FaultEvent> faults_from_csv(const std::string& csv);

}  // namespace surfenc
