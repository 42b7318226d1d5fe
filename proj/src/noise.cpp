#include "surfenc/noise.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace surfenc {

NoiseModel::NoiseModel(double p) : p_cnot(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("NoiseModel: p_cnot must be in [0,1]");
  }
}

std::string two_qubit_pauli_label(int pauli) {
  if (pauli < 1 || pauli > kTwoQubitPaulis) {
    throw std::invalid_argument("two_qubit_pauli_label: index out of range");
  }
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string out;
  out += kLetters[pauli >> 2];
  out += kLetters[pauli & 3];
  return out;
}

int two_qubit_pauli_from_label(const std::string& label) {
  if (label.size() != 2) {
    throw std::invalid_argument("two_qubit_pauli_from_label: need two letters");
  }
  auto digit = [](char c) {
    switch (c) {
      case 'I': return 0;
      case 'X': return 1;
      case 'Y': return 2;
      case 'Z': return 3;
      default:
        throw std::invalid_argument(
            "two_qubit_pauli_from_label: unknown letter");
    }
  };
  const int p = 4 * digit(label[0]) + digit(label[1]);
  if (p == 0) {
    throw std::invalid_argument("two_qubit_pauli_from_label: II is not a fault");
  }
  return p;
}

std::vector<FaultEvent> sample_cnot_faults(const CliffordCircuit& circuit,
                                           const NoiseModel& noise,
                                           SplitRng& rng) {
  std::vector<FaultEvent> out;
  for (int i = 0; i < static_cast<int>(circuit.events.size()); ++i) {
    if (circuit.events[i].kind != GateKind::kCnot) continue;
    if (rng.bernoulli(noise.p_cnot)) {
      out.push_back({i, 1 + static_cast<int>(rng.below(kTwoQubitPaulis))});
    }
  }
  return out;
}

namespace {

PauliString two_qubit_pauli(int n, int control, int target, int pauli) {
  PauliString p(n);
  const int pc = pauli >> 2;
  const int pt = pauli & 3;
  if (pauli_has_x(pc)) p.toggle_x(control);
  if (pauli_has_z(pc)) p.toggle_z(control);
  if (pauli_has_x(pt)) p.toggle_x(target);
  if (pauli_has_z(pt)) p.toggle_z(target);
  // Phase irrelevant for state conjugation; leave Hermitian.
  p.phase = static_cast<std::uint8_t>(p.y_count() & 3);
  return p;
}

}  // namespace

void run_circuit_with_faults(StabilizerTableau& t, const CliffordCircuit& c,
                             const std::vector<FaultEvent>& faults,
                             SplitRng& rng, std::vector<int>* outcomes) {
  if (t.num_qubits() != c.n) {
    throw std::invalid_argument("run_circuit_with_faults: size mismatch");
  }
  std::vector<FaultEvent> sorted = faults;
  std::sort(sorted.begin(), sorted.end(),
            [](const FaultEvent& a, const FaultEvent& b) {
              return a.event_index < b.event_index;
            });
  std::size_t next = 0;
  for (int i = 0; i < static_cast<int>(c.events.size()); ++i) {
    const auto& e = c.events[i];
    switch (e.kind) {
      case GateKind::kInitZero:
        t.init_zero(e.a, rng);
        break;
      case GateKind::kInitPlus:
        t.init_plus(e.a, rng);
        break;
      case GateKind::kH:
        t.apply_h(e.a);
        break;
      case GateKind::kX:
        t.apply_x(e.a);
        break;
      case GateKind::kZ:
        t.apply_z(e.a);
        break;
      case GateKind::kCnot:
        t.apply_cnot(e.a, e.b);
        break;
      case GateKind::kMeasureZ: {
        const int m = t.measure_z(e.a, rng);
        if (outcomes) outcomes->push_back(m);
        break;
      }
      case GateKind::kMarker:
        break;
    }
    while (next < sorted.size() && sorted[next].event_index == i) {
      if (e.kind != GateKind::kCnot) {
        throw std::invalid_argument(
            "run_circuit_with_faults: fault attached to a non-CNOT event");
      }
      t.apply_pauli(two_qubit_pauli(c.n, e.a, e.b, sorted[next].pauli));
      ++next;
    }
  }
  if (next != sorted.size()) {
    throw std::invalid_argument(
        "run_circuit_with_faults: fault event index out of range");
  }
}

FaultEnumerator::FaultEnumerator(int num_cnots, int k)
    : num_cnots_(num_cnots), k_(k) {
  if (num_cnots < 0 || k < 0 || k > num_cnots) {
    throw std::invalid_argument("FaultEnumerator: bad arguments");
  }
  // Pascal's triangle up to C(num_cnots, k), flattened row-major.
  binom_.assign(static_cast<std::size_t>(num_cnots + 1) * (k + 1), 0);
  auto at = [this](int a, int b) -> std::uint64_t& {
    return binom_[static_cast<std::size_t>(a) * (k_ + 1) + b];
  };
  for (int a = 0; a <= num_cnots; ++a) {
    at(a, 0) = 1;
    for (int b = 1; b <= std::min(a, k); ++b) {
      at(a, b) = (a == b) ? 1 : at(a - 1, b - 1) + at(a - 1, b);
    }
  }
}

std::uint64_t FaultEnumerator::size() const {
  std::uint64_t paulis = 1;
  for (int i = 0; i < k_; ++i) paulis *= kTwoQubitPaulis;
  return binom_[static_cast<std::size_t>(num_cnots_) * (k_ + 1) + k_] * paulis;
}

void FaultEnumerator::combination(std::uint64_t index,
                                  std::vector<FaultEvent>* out) const {
  if (index >= size()) {
    throw std::out_of_range("FaultEnumerator::combination: index");
  }
  out->resize(k_);
  std::uint64_t paulis = 1;
  for (int i = 0; i < k_; ++i) paulis *= kTwoQubitPaulis;
  std::uint64_t combo = index / paulis;
  std::uint64_t pauli_code = index % paulis;
  // Unrank the k-combination in lexicographic order.
  auto at = [this](int a, int b) -> std::uint64_t {
    return binom_[static_cast<std::size_t>(a) * (k_ + 1) + b];
  };
  int next_loc = 0;
  for (int slot = 0; slot < k_; ++slot) {
    int remaining = k_ - slot;
    int loc = next_loc;
    while (true) {
      const std::uint64_t with_loc = at(num_cnots_ - loc - 1, remaining - 1);
      if (combo < with_loc) break;
      combo -= with_loc;
      ++loc;
    }
    (*out)[slot].event_index = loc;  // CNOT ordinal; caller maps to events
    next_loc = loc + 1;
  }
  for (int slot = k_ - 1; slot >= 0; --slot) {
    (*out)[slot].pauli = 1 + static_cast<int>(pauli_code % kTwoQubitPaulis);
    pauli_code /= kTwoQubitPaulis;
  }
}

std::vector<FaultEvent> sample_weight_k_faults(int num_cnots, int k,
                                               SplitRng& rng) {
  if (k < 0 || k > num_cnots) {
    throw std::invalid_argument("sample_weight_k_faults: bad k");
  }
  // Floyd's algorithm for a uniform k-subset, then sort for program order.
  std::vector<int> chosen;
  for (int j = num_cnots - k; j < num_cnots; ++j) {
    int t = static_cast<int>(rng.below(static_cast<std::uint32_t>(j + 1)));
    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) t = j;
    chosen.push_back(t);
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<FaultEvent> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = {chosen[i], 1 + static_cast<int>(rng.below(kTwoQubitPaulis))};
  }
  return out;
}

std::string faults_to_csv(const std::vector<FaultEvent>& faults) {
  std::ostringstream out;
  out << "event_index,pauli_label\n";
  for (const auto& f : faults) {
    out << f.event_index << ',' << two_qubit_pauli_label(f.pauli) << '\n';
  }
  return out.str();
}

std::vector<FaultEvent> faults_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) ||
      line.find("event_index") == std::string::npos) {
    throw std::invalid_argument("faults_from_csv: missing header");
  }
  std::vector<FaultEvent> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("faults_from_csv: bad row at line " +
                                  std::to_string(line_no));
    }
    FaultEvent f;
    try {
      f.event_index = std::stoi(line.substr(0, comma));
    } catch (const std::exception&) {
      throw std::invalid_argument("faults_from_csv: bad index at line " +
                                  std::to_string(line_no));
    }
    f.pauli = two_qubit_pauli_from_label(line.substr(comma + 1));
    out.push_back(f);
  }
  return out;
}

}  // namespace surfenc
