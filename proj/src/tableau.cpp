#include "mqc/tableau.hpp"

#include <algorithm>

#include "mqc/errors.hpp"

namespace mqc {

namespace {

// Row-reduction workspace over the symplectic GF(2) representation.
// Each row is the 2n-bit (x|z) vector of one generator plus a bookkeeping
// mask of which original generators were multiplied into it.
struct Gf2Basis {
  std::vector<std::uint64_t> rows;   // bit b<n: x_b, bit n+b: z_b
  std::vector<std::uint64_t> combos; // bit g: original generator g included
  int num_qubits;

  static std::uint64_t row_of(const PauliString& p) {
    std::uint64_t row = 0;
    for (int q = 0; q < p.num_qubits(); ++q) {
      if (p.x_bit(q)) row |= std::uint64_t{1} << q;
      if (p.z_bit(q)) row |= std::uint64_t{1} << (p.num_qubits() + q);
    }
    return row;
  }

  explicit Gf2Basis(const std::vector<PauliString>& gens)
      : num_qubits(gens.empty() ? 0 : gens[0].num_qubits()) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::uint64_t row = row_of(gens[g]);
      std::uint64_t combo = std::uint64_t{1} << g;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::uint64_t pivot = rows[r] & ~(rows[r] - 1);
        if (row & pivot) {
          row ^= rows[r];
          combo ^= combos[r];
        }
      }
      if (row != 0) {
        rows.push_back(row);
        combos.push_back(combo);
      }
    }
  }

  int rank() const { return static_cast<int>(rows.size()); }

  // If target's pattern is in the span, returns the combination mask.
  std::optional<std::uint64_t> express(const PauliString& target) const {
    std::uint64_t row = row_of(target);
    std::uint64_t combo = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t pivot = rows[r] & ~(rows[r] - 1);
      if (row & pivot) {
        row ^= rows[r];
        combo ^= combos[r];
      }
    }
    if (row != 0) return std::nullopt;
    return combo;
  }
};

// Exact product of the generators selected by the combination mask.
PauliString combo_product(const std::vector<PauliString>& gens,
                          std::uint64_t combo, int num_qubits) {
  PauliString product(num_qubits);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if ((combo >> g) & 1u) product *= gens[g];
  }
  return product;
}

// Membership of m (with sign) in the signed group of `gens`; returns the
// sign s with s*m in the group, or nullopt if the pattern is outside.
std::optional<int> signed_membership(const std::vector<PauliString>& gens,
                                     const Gf2Basis& basis,
                                     const PauliString& m) {
  const auto combo = basis.express(m);
  if (!combo) return std::nullopt;
  const PauliString product =
      combo_product(gens, *combo, m.num_qubits());
  if (!product.same_pattern(m)) {
    throw InternalError("GF(2) expression does not reproduce the pattern");
  }
  return product.sign() * m.sign();
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::vector<PauliString> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("empty tableau");
  num_qubits_ = generators_[0].num_qubits();
  if (static_cast<int>(generators_.size()) != num_qubits_) {
    throw InvalidInput("tableau needs exactly n generators");
  }
  for (const PauliString& g : generators_) {
    if (g.num_qubits() != num_qubits_) throw InvalidInput("ragged tableau");
    if (!g.is_hermitian()) {
      throw InvalidInput("generator has non-real sign: " + g.to_string());
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!generators_[i].commutes_with(generators_[j])) {
        throw InvalidInput("generators do not commute: " +
                           generators_[i].to_string() + " vs " +
                           generators_[j].to_string());
      }
    }
  }
  if (Gf2Basis(generators_).rank() != num_qubits_) {
    throw InvalidInput("generators are not independent");
  }
}

StabilizerTableau StabilizerTableau::zero_state(int num_qubits) {
  std::vector<PauliString> gens;
  gens.reserve(num_qubits);
  for (int q = 0; q < num_qubits; ++q) {
    gens.push_back(PauliString::single(num_qubits, q, Pauli::Z));
  }
  return StabilizerTableau(std::move(gens));
}

TableauMeasureResult tableau_measure(const StabilizerTableau& t,
                                     const PauliString& m,
                                     std::optional<int> forced_outcome,
                                     Rng& rng) {
  if (m.num_qubits() != t.num_qubits()) {
    throw InvalidInput("measurement width mismatch");
  }
  if (!m.is_hermitian()) {
    throw InvalidInput("measured operator is not Hermitian: " + m.to_string());
  }
  if (forced_outcome && *forced_outcome != 1 && *forced_outcome != -1) {
    throw InvalidInput("forced outcome must be +1 or -1");
  }

  std::vector<std::size_t> anti;
  for (std::size_t i = 0; i < t.generators().size(); ++i) {
    if (!t.generators()[i].commutes_with(m)) anti.push_back(i);
  }

  if (anti.empty()) {
    const Gf2Basis basis(t.generators());
    const auto s = signed_membership(t.generators(), basis, m);
    if (!s) {
      // A full-rank commuting tableau always contains m up to sign.
      throw InternalError("commuting operator outside the stabilizer group");
    }
    if (forced_outcome && *forced_outcome != *s) {
      throw InvalidInput("forced outcome contradicts determined value");
    }
    return {*s, t, true};
  }

  // Index 0 of the two equiprobable outcomes maps to +1, matching the
  // observable-kind outcome convention of the dense engine.
  const int outcome =
      forced_outcome ? *forced_outcome : (rng.uniform01() < 0.5 ? 1 : -1);
  const std::size_t pivot = anti.front();
  std::vector<PauliString> gens = t.generators();
  for (std::size_t i : anti) {
    if (i == pivot) continue;
    gens[i] = gens[pivot] * gens[i];
  }
  PauliString signed_m = m;
  if (outcome == -1) signed_m.set_phase_exponent(signed_m.phase_exponent() + 2);
  gens[pivot] = signed_m;
  return {outcome, StabilizerTableau(std::move(gens)), false};
}

StabilizerTableau tableau_apply_clifford(const StabilizerTableau& t,
                                         const CliffordGate& g) {
  std::vector<PauliString> gens;
  gens.reserve(t.generators().size());
  for (const PauliString& p : t.generators()) {
    gens.push_back(conjugate_by_clifford(p, g));
  }
  return StabilizerTableau(std::move(gens));
}

PureState tableau_to_state(const StabilizerTableau& t) {
  const int n = t.num_qubits();
  if (n > 12) throw InvalidInput("tableau_to_state capped at 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  for (Eigen::Index ref = 0; ref < dim; ++ref) {
    Vec v = Vec::Zero(dim);
    v(ref) = 1.0;
    for (const PauliString& g : t.generators()) {
      v = 0.5 * (v + g.apply(v));
    }
    const double norm = v.norm();
    if (norm > 1e-6) {
      v /= norm;
      return canonicalize_phase(PureState(n, std::move(v)));
    }
  }
  throw InternalError("projector annihilated every reference state");
}

bool stabilizer_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  const Gf2Basis basis_a(a.generators());
  for (const PauliString& g : b.generators()) {
    const auto s = signed_membership(a.generators(), basis_a, g);
    if (!s || *s != 1) return false;
  }
  const Gf2Basis basis_b(b.generators());
  for (const PauliString& g : a.generators()) {
    const auto s = signed_membership(b.generators(), basis_b, g);
    if (!s || *s != 1) return false;
  }
  return true;
}

bool clifford_membership(const UnitaryMatrix& u, double tol) {
  if (u.arity() > 3) throw InvalidInput("clifford_membership capped at 3 qubits");
  const int n = u.arity();
  for (int q = 0; q < n; ++q) {
    for (Pauli p : {Pauli::X, Pauli::Z}) {
      const Mat gen = PauliString::single(n, q, p).dense();
      const Mat image = u.entries() * gen * u.entries().adjoint();
      if (!dense_to_pauli(image, tol)) return false;
    }
  }
  return true;
}

}  // namespace mqc
