#pragma once

#include <optional>
#include <vector>

#include "mqc/linalg.hpp"
#include "mqc/pauli.hpp"
#include "mqc/rng.hpp"

namespace mqc {

// n independent, pairwise-commuting Hermitian Pauli generators with signs
// +-1; determines an n-qubit state up to global phase.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::vector<PauliString> generators);

  // Stabilizer of |0...0>: { Z_0, ..., Z_{n-1} }.
  static StabilizerTableau zero_state(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliString>& generators() const { return generators_; }

 private:
  int num_qubits_;
  std::vector<PauliString> generators_;
};

struct TableauMeasureResult {
  int outcome;  // +1 or -1
  StabilizerTableau tableau;
  bool deterministic;
};

// Measures the Hermitian Pauli m on the stabilizer state. When a generator
// anticommutes with m, the first such generator N1 is replaced by
// (outcome)*m and every other anticommuting generator Ni by N1*Ni; the
// outcome is uniform (or forced). When every generator commutes, the outcome
// is determined by the group and the tableau is unchanged; a disagreeing
// forced outcome is an error.
TableauMeasureResult tableau_measure(const StabilizerTableau& t,
                                     const PauliString& m,
                                     std::optional<int> forced_outcome,
                                     Rng& rng);

// Conjugates every generator: the tableau of g|psi>.
StabilizerTableau tableau_apply_clifford(const StabilizerTableau& t,
                                         const CliffordGate& g);

// The +1 eigenstate of all generators, phase-canonicalized. Width capped at
// 12 qubits; this is the cross-engine oracle, not a production path.
PureState tableau_to_state(const StabilizerTableau& t);

// True iff the signed groups generated by the two tableaus are identical.
bool stabilizer_equal(const StabilizerTableau& a, const StabilizerTableau& b);

// True iff u maps every single-qubit X and Z generator to a phase times a
// Pauli string under conjugation. Arity capped at 3.
bool clifford_membership(const UnitaryMatrix& u, double tol = kStructuralTol);

}  // namespace mqc
