#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mqc {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Engine-wide cap; every construction in scope needs at most 8 live qubits.
inline constexpr int kMaxQubits = 20;

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Mat pauli_matrix(Pauli p);

// An n-qubit Pauli group element  i^k · Π_q X_q^{x_q} Z_q^{z_q}  with Y = iXZ,
// so the Pauli letter Y on one qubit is (x=1, z=1, k+=1).
//
// Qubit 0 is the leftmost tensor factor and the most significant bit of a
// basis-state index.
class PauliString {
 public:
  explicit PauliString(int num_qubits);

  // Accepts an optional "+", "-", "i" or "-i" prefix followed by one of
  // I/X/Y/Z per qubit, e.g. "-IXXI".
  static PauliString parse(const std::string& text);

  static PauliString from_paulis(const std::vector<Pauli>& ps);
  static PauliString single(int num_qubits, int qubit, Pauli p);

  int num_qubits() const { return num_qubits_; }
  int phase_exponent() const { return phase_exponent_; }

  bool x_bit(int q) const { return (x_bits_ >> q) & 1u; }
  bool z_bit(int q) const { return (z_bits_ >> q) & 1u; }
  Pauli pauli_at(int q) const;
  void set_pauli(int q, Pauli p);
  void set_phase_exponent(int k);

  // Number of non-identity tensor components.
  int weight() const;
  bool is_identity_pattern() const { return x_bits_ == 0 && z_bits_ == 0; }

  bool is_hermitian() const;
  // For Hermitian strings: +1 or -1 overall sign relative to the positive
  // tensor product of Pauli letters.
  int sign() const;

  // i^k with the per-qubit Y factors folded in, i.e. the scalar s such that
  // *this == s * (tensor of letters). s is i^m for some m.
  int letter_phase_exponent() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }
  bool operator==(const PauliString& rhs) const = default;

  // Equal x/z pattern, ignoring phase.
  bool same_pattern(const PauliString& rhs) const {
    return num_qubits_ == rhs.num_qubits_ && x_bits_ == rhs.x_bits_ &&
           z_bits_ == rhs.z_bits_;
  }

  bool commutes_with(const PauliString& rhs) const;

  std::string to_string() const;
  Mat dense() const;

  // W|b> = i^k (-1)^{z.b} |b xor x>, applied over the full register.
  Vec apply(const Vec& amplitudes) const;

  // Restriction/embedding helpers for acting on a subset of qubits.
  PauliString embedded(int total_qubits, const std::vector<int>& targets) const;

 private:
  int num_qubits_ = 0;
  std::uint64_t x_bits_ = 0;
  std::uint64_t z_bits_ = 0;
  int phase_exponent_ = 0;  // mod 4
};

PauliString pauli_mul(const PauliString& a, const PauliString& b);
bool pauli_commutes(const PauliString& a, const PauliString& b);

// The named Clifford generators plus Paulis and SWAP.
class CliffordGate {
 public:
  enum class Kind { CNOT, H, P, X, Y, Z, SWAP };

  CliffordGate(Kind kind, std::vector<int> targets);

  Kind kind() const { return kind_; }
  const std::vector<int>& targets() const { return targets_; }
  int arity() const { return static_cast<int>(targets_.size()); }

  static CliffordGate cnot(int control, int target) {
    return {Kind::CNOT, {control, target}};
  }
  static CliffordGate h(int q) { return {Kind::H, {q}}; }
  static CliffordGate p(int q) { return {Kind::P, {q}}; }
  static CliffordGate x(int q) { return {Kind::X, {q}}; }
  static CliffordGate y(int q) { return {Kind::Y, {q}}; }
  static CliffordGate z(int q) { return {Kind::Z, {q}}; }
  static CliffordGate swap(int a, int b) { return {Kind::SWAP, {a, b}}; }

  // Dense matrix on arity() qubits, first target = leftmost factor.
  Mat matrix() const;
  std::string name() const;

 private:
  Kind kind_;
  std::vector<int> targets_;
};

// g . p . g^dagger with exact phase tracking.
PauliString conjugate_by_clifford(const PauliString& p, const CliffordGate& g);

// If m is (unit scalar) x (tensor of Pauli letters), returns the letter
// pattern and the scalar. Phase-0 pattern in .pauli; m = scale * pauli.dense().
struct ScaledPauli {
  PauliString pauli;
  Complex scale;
};
std::optional<ScaledPauli> dense_to_pauli(const Mat& m, double tol = 1e-10);

}  // namespace mqc
