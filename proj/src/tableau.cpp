#include "surfenc/tableau.hpp"

#include <stdexcept>

namespace surfenc {

StabilizerTableau::StabilizerTableau(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("StabilizerTableau: qubit count out of range");
  }
  rows_.reserve(2 * n_);
  for (int q = 0; q < n_; ++q) {
    rows_.push_back(PauliString::single(n_, q, 'X'));  // destabilizers
  }
  for (int q = 0; q < n_; ++q) {
    rows_.push_back(PauliString::single(n_, q, 'Z'));  // stabilizers
  }
}

void StabilizerTableau::apply_h(int q) {
  for (auto& row : rows_) row.conj_h(q);
}

void StabilizerTableau::apply_x(int q) {
  for (auto& row : rows_) row.conj_x(q);
}

void StabilizerTableau::apply_z(int q) {
  for (auto& row : rows_) row.conj_z(q);
}

void StabilizerTableau::apply_cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control equals target");
  }
  for (auto& row : rows_) row.conj_cnot(control, target);
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
  if (p.n != n_) {
    throw std::invalid_argument("apply_pauli: size mismatch");
  }
  // P S P^dag = -S exactly when P and S anticommute.
  for (auto& row : rows_) {
    if (!row.commutes_with(p)) row.negate();
  }
}

int StabilizerTableau::find_x_pivot(int q) const {
  for (int i = n_; i < 2 * n_; ++i) {
    if (rows_[i].x_bit(q)) return i;
  }
  return -1;
}

int StabilizerTableau::measure_z(int q, SplitRng& rng) {
  if (q < 0 || q >= n_) {
    throw std::invalid_argument("measure_z: qubit out of range");
  }
  const int p = find_x_pivot(q);
  if (p >= 0) {
    // Random branch: some stabilizer anticommutes with Z_q.  Multiply it into
    // every other anticommuting row (stabilizer rows all commute pairwise, so
    // the product order carries no sign ambiguity there), then replace it by
    // +/- Z_q.
    for (int i = 0; i < 2 * n_; ++i) {
      if (i != p && rows_[i].x_bit(q)) {
        rows_[i] = rows_[p] * rows_[i];
      }
    }
    rows_[p - n_] = rows_[p];
    const bool minus = rng.next() & 1;
    rows_[p] = PauliString::single(n_, q, 'Z');
    if (minus) rows_[p].negate();
    return minus ? -1 : +1;
  }
  // Deterministic branch: Z_q is in the stabilizer group.  Its sign is the
  // phase of the product of stabilizers flagged by destabilizer X-bits.
  PauliString acc = PauliString::identity(n_);
  for (int i = 0; i < n_; ++i) {
    if (rows_[i].x_bit(q)) acc *= rows_[i + n_];
  }
  if (acc.x != PauliString::identity(n_).x ||
      !acc.z_bit(q) || acc.weight() != 1) {
    throw std::logic_error("measure_z: accumulated row is not +/- Z_q");
  }
  return acc.sign();
}

std::vector<int> StabilizerTableau::measure_all_z(SplitRng& rng) {
  std::vector<int> out(n_);
  for (int q = 0; q < n_; ++q) out[q] = measure_z(q, rng);
  return out;
}

void StabilizerTableau::init_zero(int q, SplitRng& rng) {
  if (measure_z(q, rng) < 0) apply_x(q);
}

void StabilizerTableau::init_plus(int q, SplitRng& rng) {
  init_zero(q, rng);
  apply_h(q);
}

PauliString StabilizerTableau::stabilizer(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("stabilizer: index");
  return rows_[n_ + i];
}

PauliString StabilizerTableau::destabilizer(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("destabilizer: index");
  return rows_[i];
}

std::vector<PauliString> StabilizerTableau::stabilizers() const {
  return {rows_.begin() + n_, rows_.end()};
}

int StabilizerTableau::expectation(const PauliString& p) const {
  if (p.n != n_) throw std::invalid_argument("expectation: size");
  if (!p.is_hermitian()) throw std::invalid_argument("expectation: non-Hermitian operator");
  for (int i = 0; i < n_; ++i) {
    if (!rows_[n_ + i].commutes_with(p)) return 0;
  }
  // p commutes with the full group of a pure stabilizer state, so +/-p is a
  // product of stabilizers.  The destabilizers index which ones: row i of the
  // product is needed exactly when destabilizer i anticommutes with p.
  PauliString acc(n_);
  for (int i = 0; i < n_; ++i) {
    if (!rows_[i].commutes_with(p)) acc *= rows_[n_ + i];
  }
  for (int w = 0; w < kPauliWords; ++w) {
    if (acc.x[w] != p.x[w] || acc.z[w] != p.z[w]) {
      throw std::logic_error("expectation: commuting operator outside group");
    }
  }
  return acc.sign() == p.sign() ? +1 : -1;
}

std::vector<PauliString> StabilizerTableau::canonical_stabilizers() const {
  return canonicalize(stabilizers());
}

std::vector<PauliString> StabilizerTableau::z_constraints() const {
  // In the canonical basis the X-part pivots come first, so the Z-type
  // subgroup is exactly the tail of rows with empty X part.
  std::vector<PauliString> out;
  for (const auto& row : canonical_stabilizers()) {
    bool x_free = true;
    for (int w = 0; w < kPauliWords; ++w) {
      if (row.x[w]) x_free = false;
    }
    if (x_free) out.push_back(row);
  }
  return out;
}

std::vector<PauliString> canonicalize(std::vector<PauliString> gens) {
  if (gens.empty()) return gens;
  const int n = gens[0].n;
  for (const auto& g : gens) {
    if (g.n != n) throw std::invalid_argument("canonicalize: size mismatch");
    if (!g.is_hermitian()) {
      throw std::invalid_argument("canonicalize: non-Hermitian generator");
    }
  }
  const int rows = static_cast<int>(gens.size());
  int rank = 0;
  // Column order: X_0..X_{n-1} then Z_0..Z_{n-1}.
  for (int col = 0; col < 2 * n && rank < rows; ++col) {
    const bool is_x = col < n;
    const int q = is_x ? col : col - n;
    auto bit = [&](const PauliString& p) {
      return is_x ? p.x_bit(q) : p.z_bit(q);
    };
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (bit(gens[r])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(gens[rank], gens[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r != rank && bit(gens[r])) gens[r] *= gens[rank];
    }
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (!gens[r].is_identity_bits()) {
      throw std::logic_error("canonicalize: rank bookkeeping failed");
    }
    if (gens[r].sign() != +1) {
      throw std::invalid_argument("canonicalize: generators imply -I");
    }
  }
  gens.resize(rank);
  return gens;
}

}  // namespace surfenc
