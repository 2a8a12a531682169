#include "mqc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mqc/errors.hpp"

namespace mqc {

namespace {

constexpr Complex kI(0.0, 1.0);

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw InternalError("bad Pauli enum");
}

Mat pauli_matrix(Pauli p) {
  Mat m(2, 2);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliString::PauliString(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidInput("PauliString width out of range: " +
                       std::to_string(num_qubits));
  }
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  int phase = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = 1;
    ++pos;
  }
  if (negative) phase += 2;
  const std::string letters = text.substr(pos);
  if (letters.empty()) throw InvalidInput("empty Pauli string: '" + text + "'");
  PauliString result(static_cast<int>(letters.size()));
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': result.set_pauli(static_cast<int>(q), Pauli::X); break;
      case 'Y': result.set_pauli(static_cast<int>(q), Pauli::Y); break;
      case 'Z': result.set_pauli(static_cast<int>(q), Pauli::Z); break;
      default:
        throw InvalidInput("bad Pauli letter in '" + text + "'");
    }
  }
  result.phase_exponent_ = (result.phase_exponent_ + phase) % 4;
  return result;
}

PauliString PauliString::from_paulis(const std::vector<Pauli>& ps) {
  PauliString result(static_cast<int>(ps.size()));
  for (std::size_t q = 0; q < ps.size(); ++q) {
    result.set_pauli(static_cast<int>(q), ps[q]);
  }
  return result;
}

PauliString PauliString::single(int num_qubits, int qubit, Pauli p) {
  PauliString result(num_qubits);
  result.set_pauli(qubit, p);
  return result;
}

Pauli PauliString::pauli_at(int q) const {
  const int code = (x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0);
  switch (code) {
    case 0: return Pauli::I;
    case 1: return Pauli::X;
    case 2: return Pauli::Z;
    default: return Pauli::Y;
  }
}

void PauliString::set_pauli(int q, Pauli p) {
  if (q < 0 || q >= num_qubits_) throw InvalidInput("qubit index out of range");
  // Remove the old letter's i factor, install the new one.
  if (pauli_at(q) == Pauli::Y) phase_exponent_ = (phase_exponent_ + 3) % 4;
  const std::uint64_t bit = std::uint64_t{1} << q;
  x_bits_ &= ~bit;
  z_bits_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_bits_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_bits_ |= bit;
  if (p == Pauli::Y) phase_exponent_ = (phase_exponent_ + 1) % 4;
}

void PauliString::set_phase_exponent(int k) {
  phase_exponent_ = ((k % 4) + 4) % 4;
}

int PauliString::weight() const {
  return std::popcount(x_bits_ | z_bits_);
}

int PauliString::letter_phase_exponent() const {
  const int y_count = std::popcount(x_bits_ & z_bits_);
  return ((phase_exponent_ - y_count) % 4 + 4) % 4;
}

bool PauliString::is_hermitian() const {
  // Hermitian iff the scalar in front of the letter tensor is +-1.
  return letter_phase_exponent() % 2 == 0;
}

int PauliString::sign() const {
  if (!is_hermitian()) throw InternalError("sign() on non-Hermitian Pauli");
  return letter_phase_exponent() == 0 ? 1 : -1;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (num_qubits_ != rhs.num_qubits_) {
    throw InvalidInput("Pauli product size mismatch");
  }
  // Per qubit: (X^a Z^b)(X^c Z^d) = (-1)^{bc} X^{a+c} Z^{b+d}.
  const int swaps = std::popcount(z_bits_ & rhs.x_bits_);
  phase_exponent_ = (phase_exponent_ + rhs.phase_exponent_ + 2 * swaps) % 4;
  x_bits_ ^= rhs.x_bits_;
  z_bits_ ^= rhs.z_bits_;
  return *this;
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  if (num_qubits_ != rhs.num_qubits_) {
    throw InvalidInput("Pauli commutator size mismatch");
  }
  const int symplectic = std::popcount(x_bits_ & rhs.z_bits_) +
                         std::popcount(z_bits_ & rhs.x_bits_);
  return symplectic % 2 == 0;
}

std::string PauliString::to_string() const {
  std::string out;
  switch (letter_phase_exponent()) {
    case 0: break;
    case 1: out += "i"; break;
    case 2: out += "-"; break;
    case 3: out += "-i"; break;
  }
  for (int q = 0; q < num_qubits_; ++q) out += pauli_char(pauli_at(q));
  return out;
}

Mat PauliString::dense() const {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  Mat m = Mat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = col;
    int sign_exp = phase_exponent_;
    for (int q = 0; q < num_qubits_; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << (num_qubits_ - 1 - q);
      const bool b = (col & bit) != 0;
      if (z_bit(q) && b) sign_exp += 2;
      if (x_bit(q)) row ^= bit;
    }
    m(row, col) = i_power(sign_exp);
  }
  return m;
}

Vec PauliString::apply(const Vec& amplitudes) const {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  if (amplitudes.size() != dim) {
    throw InvalidInput("PauliString::apply dimension mismatch");
  }
  // Index-space masks: qubit q sits at bit (n-1-q) of a basis index.
  std::uint64_t x_idx = 0, z_idx = 0;
  for (int q = 0; q < num_qubits_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (num_qubits_ - 1 - q);
    if (x_bit(q)) x_idx |= bit;
    if (z_bit(q)) z_idx |= bit;
  }
  Vec out(dim);
  const Complex front = i_power(phase_exponent_);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int zdots = std::popcount(static_cast<std::uint64_t>(i) & z_idx);
    const Complex c = (zdots % 2 == 0) ? front : -front;
    out(static_cast<Eigen::Index>(i ^ static_cast<Eigen::Index>(x_idx))) =
        c * amplitudes(i);
  }
  return out;
}

PauliString PauliString::embedded(int total_qubits,
                                  const std::vector<int>& targets) const {
  if (static_cast<int>(targets.size()) != num_qubits_) {
    throw InvalidInput("embedded(): target count != width");
  }
  PauliString out(total_qubits);
  for (int q = 0; q < num_qubits_; ++q) {
    out.set_pauli(targets[q], pauli_at(q));
  }
  // Same letters, same scalar in front of them.
  out.set_phase_exponent(out.phase_exponent_ + letter_phase_exponent());
  return out;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  return a * b;
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  return a.commutes_with(b);
}

CliffordGate::CliffordGate(Kind kind, std::vector<int> targets)
    : kind_(kind), targets_(std::move(targets)) {
  const int want = (kind == Kind::CNOT || kind == Kind::SWAP) ? 2 : 1;
  if (static_cast<int>(targets_.size()) != want) {
    throw InvalidInput("Clifford gate target count mismatch");
  }
  if (want == 2 && targets_[0] == targets_[1]) {
    throw InvalidInput("Clifford gate duplicate targets");
  }
}

std::string CliffordGate::name() const {
  switch (kind_) {
    case Kind::CNOT: return "CNOT";
    case Kind::H: return "H";
    case Kind::P: return "P";
    case Kind::X: return "X";
    case Kind::Y: return "Y";
    case Kind::Z: return "Z";
    case Kind::SWAP: return "SWAP";
  }
  throw InternalError("bad Clifford kind");
}

Mat CliffordGate::matrix() const {
  const double s = 1.0 / std::sqrt(2.0);
  switch (kind_) {
    case Kind::H: {
      Mat m(2, 2);
      m << s, s, s, -s;
      return m;
    }
    case Kind::P: {
      // P = exp(-i pi Z / 4) = diag(e^{-i pi/4}, e^{+i pi/4}).
      Mat m = Mat::Zero(2, 2);
      m(0, 0) = std::exp(Complex(0, -M_PI / 4));
      m(1, 1) = std::exp(Complex(0, M_PI / 4));
      return m;
    }
    case Kind::X: return pauli_matrix(Pauli::X);
    case Kind::Y: return pauli_matrix(Pauli::Y);
    case Kind::Z: return pauli_matrix(Pauli::Z);
    case Kind::CNOT: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    }
    case Kind::SWAP: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      return m;
    }
  }
  throw InternalError("bad Clifford kind");
}

namespace {

// Image of the generator X_q or Z_q under conjugation by g, as a full-width
// PauliString with exact phase.
PauliString generator_image(const CliffordGate& g, int num_qubits, int q,
                            bool is_x) {
  PauliString out(num_qubits);
  const auto& t = g.targets();
  const bool on_gate =
      std::find(t.begin(), t.end(), q) != t.end();
  if (!on_gate) {
    out.set_pauli(q, is_x ? Pauli::X : Pauli::Z);
    return out;
  }
  using K = CliffordGate::Kind;
  switch (g.kind()) {
    case K::H:
      out.set_pauli(q, is_x ? Pauli::Z : Pauli::X);
      return out;
    case K::P:
      if (is_x) {
        out.set_pauli(q, Pauli::Y);  // P X P^dag = Y
      } else {
        out.set_pauli(q, Pauli::Z);
      }
      return out;
    case K::X:
      out.set_pauli(q, is_x ? Pauli::X : Pauli::Z);
      if (!is_x) out.set_phase_exponent(2);
      return out;
    case K::Y:
      out.set_pauli(q, is_x ? Pauli::X : Pauli::Z);
      out.set_phase_exponent(2);
      return out;
    case K::Z:
      out.set_pauli(q, is_x ? Pauli::X : Pauli::Z);
      if (is_x) out.set_phase_exponent(2);
      return out;
    case K::CNOT: {
      const int control = t[0], target = t[1];
      if (is_x) {
        out.set_pauli(q, Pauli::X);
        if (q == control) out.set_pauli(target, Pauli::X);
      } else {
        out.set_pauli(q, Pauli::Z);
        if (q == target) out.set_pauli(control, Pauli::Z);
      }
      return out;
    }
    case K::SWAP: {
      const int other = (q == t[0]) ? t[1] : t[0];
      out.set_pauli(other, is_x ? Pauli::X : Pauli::Z);
      return out;
    }
  }
  throw InternalError("bad Clifford kind");
}

}  // namespace

PauliString conjugate_by_clifford(const PauliString& p, const CliffordGate& g) {
  const int n = p.num_qubits();
  for (int t : g.targets()) {
    if (t < 0 || t >= n) throw InvalidInput("Clifford target out of range");
  }
  // p = i^k Prod_q X_q^{x_q} Z_q^{z_q}; conjugate factor by factor in the
  // defining order (ascending qubit, X before Z). The scalar i^k rides along.
  PauliString result(n);
  result.set_phase_exponent(p.phase_exponent());
  for (int q = 0; q < n; ++q) {
    if (p.x_bit(q)) result *= generator_image(g, n, q, true);
    if (p.z_bit(q)) result *= generator_image(g, n, q, false);
  }
  return result;
}

std::optional<ScaledPauli> dense_to_pauli(const Mat& m, double tol) {
  const Eigen::Index dim = m.rows();
  if (m.cols() != dim || dim == 0 || (dim & (dim - 1)) != 0) return std::nullopt;
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;

  std::vector<Pauli> letters(n, Pauli::I);
  // Enumerate all 4^n letter patterns.
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int q = 0; q < n; ++q) {
      letters[q] = static_cast<Pauli>(c & 3u);
      c >>= 2;
    }
    const PauliString candidate = PauliString::from_paulis(letters);
    const Mat pd = candidate.dense();
    const Complex lambda = (pd.adjoint() * m).trace() / static_cast<double>(dim);
    if (std::abs(std::abs(lambda) - 1.0) > tol) continue;
    if ((m - lambda * pd).cwiseAbs().maxCoeff() <= tol) {
      PauliString pattern = candidate;
      pattern.set_phase_exponent(pattern.phase_exponent() -
                                 pattern.letter_phase_exponent());
      // pattern now has scalar +1 in front of its letters.
      return ScaledPauli{pattern, lambda};
    }
  }
  return std::nullopt;
}

}  // namespace mqc
