#include "surfenc/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace surfenc {

CliffordCircuit::CliffordCircuit(int num_qubits) : n(num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("CliffordCircuit: qubit count out of range");
  }
}

int CliffordCircuit::check(int q) const {
  if (q < 0 || q >= n) {
    throw std::out_of_range("CliffordCircuit: qubit index out of range");
  }
  return q;
}

void CliffordCircuit::cnot(int control, int target) {
  check(control);
  check(target);
  if (control == target) {
    throw std::invalid_argument("CliffordCircuit: CNOT control equals target");
  }
  push({GateKind::kCnot, control, target});
}

void CliffordCircuit::marker(std::string tag) {
  if (tag.empty() || tag.find('\n') != std::string::npos) {
    throw std::invalid_argument("CliffordCircuit: bad marker tag");
  }
  push({GateKind::kMarker, -1, -1, std::move(tag)});
}

int CliffordCircuit::cnot_count() const {
  int count = 0;
  for (const auto& e : events) {
    if (e.kind == GateKind::kCnot) ++count;
  }
  return count;
}

std::vector<int> CliffordCircuit::cnot_event_indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(events.size()); ++i) {
    if (events[i].kind == GateKind::kCnot) out.push_back(i);
  }
  return out;
}

std::string to_text(const CliffordCircuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.n << '\n';
  for (const auto& e : c.events) {
    switch (e.kind) {
      case GateKind::kInitZero:
        out << "INIT0 " << e.a + 1 << '\n';
        break;
      case GateKind::kInitPlus:
        out << "INITP " << e.a + 1 << '\n';
        break;
      case GateKind::kH:
        out << "H " << e.a + 1 << '\n';
        break;
      case GateKind::kX:
        out << "X " << e.a + 1 << '\n';
        break;
      case GateKind::kZ:
        out << "Z " << e.a + 1 << '\n';
        break;
      case GateKind::kCnot:
        out << "CNOT " << e.a + 1 << ' ' << e.b + 1 << '\n';
        break;
      case GateKind::kMeasureZ:
        out << "MEASZ " << e.a + 1 << '\n';
        break;
      case GateKind::kMarker:
        out << "# marker:" << e.tag << '\n';
        break;
    }
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
  throw std::invalid_argument("circuit text line " + std::to_string(line_no) +
                              ": " + why);
}

int parse_qubit(const std::string& tok, int n, int line_no) {
  int q = 0;
  try {
    q = std::stoi(tok);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected qubit index, got '" + tok + "'");
  }
  if (q < 1 || q > n) parse_fail(line_no, "qubit index out of range");
  return q - 1;
}

}  // namespace

CliffordCircuit from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  CliffordCircuit circuit(0);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;  // blank line
    if (op == "#") {
      std::string rest;
      std::getline(ls, rest);
      const auto pos = rest.find("marker:");
      if (pos != std::string::npos) {
        if (!have_header) parse_fail(line_no, "marker before QUBITS header");
        circuit.marker(rest.substr(pos + 7));
      }
      continue;  // plain comment
    }
    if (!have_header) {
      if (op != "QUBITS") parse_fail(line_no, "expected QUBITS header");
      int n = 0;
      if (!(ls >> n) || n < 1 || n > kMaxQubits) {
        parse_fail(line_no, "bad qubit count");
      }
      circuit = CliffordCircuit(n);
      have_header = true;
      continue;
    }
    std::string ta, tb;
    if (op == "CNOT") {
      if (!(ls >> ta >> tb)) parse_fail(line_no, "CNOT needs two qubits");
      const int c = parse_qubit(ta, circuit.n, line_no);
      const int t = parse_qubit(tb, circuit.n, line_no);
      if (c == t) parse_fail(line_no, "CNOT control equals target");
      circuit.cnot(c, t);
    } else if (op == "H" || op == "X" || op == "Z" || op == "INIT0" ||
               op == "INITP" || op == "MEASZ") {
      if (!(ls >> ta)) parse_fail(line_no, op + " needs one qubit");
      const int q = parse_qubit(ta, circuit.n, line_no);
      if (op == "H") {
        circuit.h(q);
      } else if (op == "X") {
        circuit.x(q);
      } else if (op == "Z") {
        circuit.z(q);
      } else if (op == "INIT0") {
        circuit.init_zero(q);
      } else if (op == "INITP") {
        circuit.init_plus(q);
      } else {
        circuit.measure_z(q);
      }
    } else {
      parse_fail(line_no, "unknown operation '" + op + "'");
    }
    std::string extra;
    if (ls >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
  }
  if (!have_header) {
    throw std::invalid_argument("circuit text: missing QUBITS header");
  }
  return circuit;
}

void run_circuit(StabilizerTableau& t, const CliffordCircuit& c, SplitRng& rng,
                 std::vector<int>* outcomes) {
  if (t.num_qubits() != c.n) {
    throw std::invalid_argument("run_circuit: qubit count mismatch");
  }
  for (const auto& e : c.events) {
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
  }
}

PauliString propagate_pauli(const CliffordCircuit& c, int location,
                            const PauliString& fault) {
  if (location < 0 || location >= static_cast<int>(c.events.size())) {
    throw std::invalid_argument("propagate_pauli: location out of range");
  }
  if (fault.n != c.n) {
    throw std::invalid_argument("propagate_pauli: size mismatch");
  }
  PauliString p = fault;
  for (std::size_t i = location + 1; i < c.events.size(); ++i) {
    const auto& e = c.events[i];
    switch (e.kind) {
      case GateKind::kH:
        p.conj_h(e.a);
        break;
      case GateKind::kX:
        p.conj_x(e.a);
        break;
      case GateKind::kZ:
        p.conj_z(e.a);
        break;
      case GateKind::kCnot:
        p.conj_cnot(e.a, e.b);
        break;
      case GateKind::kMarker:
        break;
      case GateKind::kInitZero:
      case GateKind::kInitPlus:
      case GateKind::kMeasureZ:
        // Harmless on wires the error does not touch; on its support the
        // collapse/reset semantics belong to the caller, so refuse.
        if (p.x_bit(e.a) || p.z_bit(e.a)) {
          throw std::invalid_argument(
              "propagate_pauli: init/measure hits the propagated error; the "
              "caller owns that semantics");
        }
        break;
    }
  }
  return p;
}

}  // namespace surfenc
