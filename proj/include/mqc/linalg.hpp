#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mqc/pauli.hpp"
#include "mqc/rng.hpp"

namespace mqc {

// Structural tolerance for unitarity/orthogonality checks.
inline constexpr double kStructuralTol = 1e-10;
// Below this Born probability a forced branch is treated as impossible.
inline constexpr double kImpossibleBranchTol = 1e-12;

// Dense n-qubit state vector. Qubit 0 is the leftmost tensor factor, i.e. the
// most significant bit of an amplitude index.
class PureState {
 public:
  PureState(int num_qubits, Vec amplitudes);

  // |00...0>
  static PureState zero(int num_qubits);
  static PureState basis_state(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vec& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::uint64_t index) const {
    return amplitudes_(static_cast<Eigen::Index>(index));
  }

 private:
  int num_qubits_;
  Vec amplitudes_;
};

// A k-qubit unitary; U^dag U = I within kStructuralTol entrywise.
class UnitaryMatrix {
 public:
  UnitaryMatrix(int arity, Mat entries);
  explicit UnitaryMatrix(Mat entries);

  int arity() const { return arity_; }
  const Mat& entries() const { return entries_; }

  UnitaryMatrix adjoint() const { return {arity_, entries_.adjoint()}; }

 private:
  int arity_;
  Mat entries_;
};

// A projective measurement on k qubits, in one of three forms:
//   basis      - a complete orthonormal basis; outcome = basis index
//   observable - a Hermitian Pauli; outcome 0 <-> eigenvalue +1, 1 <-> -1
//   projectors - orthogonal projectors summing to identity; outcome = index
class MeasurementSpec {
 public:
  enum class Kind { Basis, Observable, Projectors };

  static MeasurementSpec basis(std::vector<Vec> states);
  static MeasurementSpec observable(PauliString hermitian);
  static MeasurementSpec projectors(std::vector<Mat> ps);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  int num_outcomes() const;

  const std::vector<Vec>& basis_states() const { return basis_states_; }
  const PauliString& observable_pauli() const { return observable_; }
  const std::vector<Mat>& projector_list() const { return projectors_; }

  // +1/-1 for observable outcomes; throws for other kinds.
  int eigenvalue(int outcome) const;

 private:
  MeasurementSpec() : observable_(1) {}

  Kind kind_ = Kind::Basis;
  int arity_ = 0;
  std::vector<Vec> basis_states_;
  PauliString observable_;
  std::vector<Mat> projectors_;
};

// Bell states, indexed as
//   0: (|00>+|11>)/sqrt2   1: (|01>+|10>)/sqrt2
//   2: (|01>-|10>)/sqrt2   3: (|00>-|11>)/sqrt2
PureState make_bell_state(int j);

PureState apply_gate(const PureState& state, const UnitaryMatrix& u,
                     const std::vector<int>& targets);
PureState apply_pauli(const PureState& state, const PauliString& p,
                      const std::vector<int>& targets);
PureState apply_clifford(const PureState& state, const CliffordGate& g);

struct MeasureResult {
  int outcome;
  double probability;
  PureState state;
};
MeasureResult measure(const PureState& state, const MeasurementSpec& spec,
                      const std::vector<int>& targets, Rng& rng);

struct PostSelectResult {
  double probability;
  PureState state;
};
PostSelectResult post_select(const PureState& state,
                             const MeasurementSpec& spec,
                             const std::vector<int>& targets, int outcome);

// Born probabilities of every outcome, in outcome-index order.
std::vector<double> outcome_probabilities(const PureState& state,
                                          const MeasurementSpec& spec,
                                          const std::vector<int>& targets);

double fidelity(const PureState& a, const PureState& b);
bool equal_up_to_global_phase(const PureState& a, const PureState& b,
                              double tol = kStructuralTol);

PureState tensor(const PureState& a, const PureState& b);

// perm[q] = position of old qubit q in the new ordering.
PureState permute_qubits(const PureState& state, const std::vector<int>& perm);

// Pulls out the listed qubits (in the listed order) when the state factorizes
// across that cut; throws InternalError otherwise.
PureState extract_qubits(const PureState& state, const std::vector<int>& keep);

// Multiplies by a global phase making the first significant amplitude
// positive real.
PureState canonicalize_phase(const PureState& state);

}  // namespace mqc
