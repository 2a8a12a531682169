#include "mqc/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "mqc/errors.hpp"

namespace mqc {

namespace {

int bit_pos(int n, int q) { return n - 1 - q; }

void check_targets(int num_qubits, const std::vector<int>& targets, int arity) {
  if (static_cast<int>(targets.size()) != arity) {
    throw InvalidInput("target count does not match operator arity");
  }
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) throw InvalidInput("target out of range");
    const std::uint64_t bit = std::uint64_t{1} << t;
    if (seen & bit) throw InvalidInput("duplicate target");
    seen |= bit;
  }
}

// Index offsets for each local pattern on `targets` (first target = local
// most significant bit) plus all base indices with the target bits cleared.
struct SubspaceIndex {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint64_t> bases;
};

SubspaceIndex subspace_index(int num_qubits, const std::vector<int>& targets) {
  const int k = static_cast<int>(targets.size());
  SubspaceIndex out;
  out.offsets.resize(std::size_t{1} << k);
  for (std::uint64_t l = 0; l < out.offsets.size(); ++l) {
    std::uint64_t off = 0;
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1u) {
        off |= std::uint64_t{1} << bit_pos(num_qubits, targets[j]);
      }
    }
    out.offsets[l] = off;
  }
  std::uint64_t mask = 0;
  for (int t : targets) mask |= std::uint64_t{1} << bit_pos(num_qubits, t);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  out.bases.reserve(dim >> k);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & mask) == 0) out.bases.push_back(i);
  }
  return out;
}

Vec apply_matrix_on_targets(const Vec& amplitudes, int num_qubits,
                            const Mat& m, const std::vector<int>& targets) {
  const SubspaceIndex idx = subspace_index(num_qubits, targets);
  const Eigen::Index block = static_cast<Eigen::Index>(idx.offsets.size());
  Vec out(amplitudes.size());
  Vec in_block(block), out_block(block);
  for (std::uint64_t base : idx.bases) {
    for (Eigen::Index l = 0; l < block; ++l) {
      in_block(l) = amplitudes(static_cast<Eigen::Index>(base + idx.offsets[l]));
    }
    out_block.noalias() = m * in_block;
    for (Eigen::Index l = 0; l < block; ++l) {
      out(static_cast<Eigen::Index>(base + idx.offsets[l])) = out_block(l);
    }
  }
  return out;
}

}  // namespace

PureState::PureState(int num_qubits, Vec amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
    throw InvalidInput("state width out of range: " +
                       std::to_string(num_qubits_));
  }
  if (amplitudes_.size() != (Eigen::Index{1} << num_qubits_)) {
    throw InvalidInput("amplitude vector length is not 2^n");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kStructuralTol) {
    throw InvalidInput("state not normalized; |norm-1| = " +
                       std::to_string(std::abs(norm - 1.0)));
  }
}

PureState PureState::zero(int num_qubits) {
  return basis_state(num_qubits, 0);
}

PureState PureState::basis_state(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidInput("state width out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  if (static_cast<Eigen::Index>(index) >= dim) {
    throw InvalidInput("basis index out of range");
  }
  Vec amps = Vec::Zero(dim);
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return {num_qubits, std::move(amps)};
}

UnitaryMatrix::UnitaryMatrix(int arity, Mat entries)
    : arity_(arity), entries_(std::move(entries)) {
  if (arity_ < 1 || arity_ > kMaxQubits) throw InvalidInput("bad arity");
  const Eigen::Index dim = Eigen::Index{1} << arity_;
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw InvalidInput("unitary has wrong dimensions");
  }
  const Mat gram = entries_.adjoint() * entries_;
  const double dev = (gram - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (dev > kStructuralTol) {
    throw InvalidInput("matrix is not unitary; max deviation " +
                       std::to_string(dev));
  }
}

UnitaryMatrix::UnitaryMatrix(Mat entries)
    : UnitaryMatrix(
          [&] {
            Eigen::Index d = entries.rows();
            int k = 0;
            while ((Eigen::Index{1} << k) < d) ++k;
            return k;
          }(),
          entries) {}

MeasurementSpec MeasurementSpec::basis(std::vector<Vec> states) {
  if (states.empty()) throw InvalidInput("empty basis");
  const Eigen::Index dim = states[0].size();
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  if ((Eigen::Index{1} << k) != dim) throw InvalidInput("basis dim not 2^k");
  if (static_cast<Eigen::Index>(states.size()) != dim) {
    throw InvalidInput("basis is not complete");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != dim) throw InvalidInput("ragged basis");
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = states[j].dot(states[i]);  // conjugates states[j]
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - want) > kStructuralTol) {
        throw InvalidInput("basis not orthonormal");
      }
    }
  }
  MeasurementSpec spec;
  spec.kind_ = Kind::Basis;
  spec.arity_ = k;
  spec.basis_states_ = std::move(states);
  return spec;
}

MeasurementSpec MeasurementSpec::observable(PauliString hermitian) {
  if (!hermitian.is_hermitian()) {
    throw InvalidInput("observable Pauli is not Hermitian");
  }
  MeasurementSpec spec;
  spec.kind_ = Kind::Observable;
  spec.arity_ = hermitian.num_qubits();
  spec.observable_ = std::move(hermitian);
  return spec;
}

MeasurementSpec MeasurementSpec::projectors(std::vector<Mat> ps) {
  if (ps.empty()) throw InvalidInput("empty projector list");
  const Eigen::Index dim = ps[0].rows();
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  if ((Eigen::Index{1} << k) != dim) throw InvalidInput("projector dim not 2^k");
  Mat sum = Mat::Zero(dim, dim);
  for (const Mat& p : ps) {
    if (p.rows() != dim || p.cols() != dim) throw InvalidInput("ragged projector");
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > kStructuralTol) {
      throw InvalidInput("projector not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > kStructuralTol) {
      throw InvalidInput("projector not idempotent");
    }
    sum += p;
  }
  if ((sum - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() > kStructuralTol) {
    throw InvalidInput("projectors do not sum to identity");
  }
  MeasurementSpec spec;
  spec.kind_ = Kind::Projectors;
  spec.arity_ = k;
  spec.projectors_ = std::move(ps);
  return spec;
}

int MeasurementSpec::num_outcomes() const {
  switch (kind_) {
    case Kind::Basis: return static_cast<int>(basis_states_.size());
    case Kind::Observable: return 2;
    case Kind::Projectors: return static_cast<int>(projectors_.size());
  }
  throw InternalError("bad spec kind");
}

int MeasurementSpec::eigenvalue(int outcome) const {
  if (kind_ != Kind::Observable) {
    throw InvalidInput("eigenvalue() applies to observable measurements");
  }
  if (outcome != 0 && outcome != 1) throw InvalidInput("bad outcome index");
  return outcome == 0 ? 1 : -1;
}

PureState make_bell_state(int j) {
  const double s = 1.0 / std::sqrt(2.0);
  Vec amps = Vec::Zero(4);
  switch (j) {
    case 0: amps(0) = s; amps(3) = s; break;
    case 1: amps(1) = s; amps(2) = s; break;
    case 2: amps(1) = s; amps(2) = -s; break;
    case 3: amps(0) = s; amps(3) = -s; break;
    default: throw InvalidInput("Bell index out of range");
  }
  return {2, std::move(amps)};
}

PureState apply_gate(const PureState& state, const UnitaryMatrix& u,
                     const std::vector<int>& targets) {
  check_targets(state.num_qubits(), targets, u.arity());
  Vec out = apply_matrix_on_targets(state.amplitudes(), state.num_qubits(),
                                    u.entries(), targets);
  return {state.num_qubits(), std::move(out)};
}

PureState apply_pauli(const PureState& state, const PauliString& p,
                      const std::vector<int>& targets) {
  check_targets(state.num_qubits(), targets, p.num_qubits());
  const PauliString wide = p.embedded(state.num_qubits(), targets);
  return {state.num_qubits(), wide.apply(state.amplitudes())};
}

PureState apply_clifford(const PureState& state, const CliffordGate& g) {
  return apply_gate(state, UnitaryMatrix(g.arity(), g.matrix()), g.targets());
}

namespace {

// Unnormalized projection of `state` onto the given outcome branch.
Vec project_branch(const PureState& state, const MeasurementSpec& spec,
                   const std::vector<int>& targets, int outcome) {
  const int n = state.num_qubits();
  switch (spec.kind()) {
    case MeasurementSpec::Kind::Basis: {
      const Vec& b = spec.basis_states()[outcome];
      const SubspaceIndex idx = subspace_index(n, targets);
      const Eigen::Index block = static_cast<Eigen::Index>(idx.offsets.size());
      Vec out = Vec::Zero(state.dim());
      for (std::uint64_t base : idx.bases) {
        Complex overlap = 0.0;
        for (Eigen::Index l = 0; l < block; ++l) {
          overlap += std::conj(b(l)) *
                     state.amplitudes()(static_cast<Eigen::Index>(base + idx.offsets[l]));
        }
        for (Eigen::Index l = 0; l < block; ++l) {
          out(static_cast<Eigen::Index>(base + idx.offsets[l])) = overlap * b(l);
        }
      }
      return out;
    }
    case MeasurementSpec::Kind::Observable: {
      const PauliString wide =
          spec.observable_pauli().embedded(n, targets);
      const Vec applied = wide.apply(state.amplitudes());
      const double sign = outcome == 0 ? 1.0 : -1.0;
      return 0.5 * (state.amplitudes() + sign * applied);
    }
    case MeasurementSpec::Kind::Projectors: {
      return apply_matrix_on_targets(state.amplitudes(), n,
                                     spec.projector_list()[outcome], targets);
    }
  }
  throw InternalError("bad spec kind");
}

}  // namespace

std::vector<double> outcome_probabilities(const PureState& state,
                                          const MeasurementSpec& spec,
                                          const std::vector<int>& targets) {
  check_targets(state.num_qubits(), targets, spec.arity());
  std::vector<double> probs(spec.num_outcomes());
  for (int j = 0; j < spec.num_outcomes(); ++j) {
    probs[j] = project_branch(state, spec, targets, j).squaredNorm();
  }
  return probs;
}

MeasureResult measure(const PureState& state, const MeasurementSpec& spec,
                      const std::vector<int>& targets, Rng& rng) {
  const std::vector<double> probs = outcome_probabilities(state, spec, targets);
  int outcome = rng.sample(probs);
  if (probs[outcome] < kImpossibleBranchTol) {
    // Rounding pushed the draw past the final nonzero band; take the likeliest.
    outcome = static_cast<int>(
        std::max_element(probs.begin(), probs.end()) - probs.begin());
  }
  Vec post = project_branch(state, spec, targets, outcome);
  post /= post.norm();
  return {outcome, probs[outcome], PureState(state.num_qubits(), std::move(post))};
}

PostSelectResult post_select(const PureState& state,
                             const MeasurementSpec& spec,
                             const std::vector<int>& targets, int outcome) {
  check_targets(state.num_qubits(), targets, spec.arity());
  if (outcome < 0 || outcome >= spec.num_outcomes()) {
    throw InvalidInput("outcome index out of range");
  }
  Vec post = project_branch(state, spec, targets, outcome);
  const double prob = post.squaredNorm();
  if (prob < kImpossibleBranchTol) {
    throw InvalidInput("impossible branch: forced outcome has probability " +
                       std::to_string(prob));
  }
  post /= std::sqrt(prob);
  return {prob, PureState(state.num_qubits(), std::move(post))};
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidInput("fidelity dimension mismatch");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

bool equal_up_to_global_phase(const PureState& a, const PureState& b,
                              double tol) {
  return fidelity(a, b) >= 1.0 - tol;
}

PureState tensor(const PureState& a, const PureState& b) {
  const int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) throw InvalidInput("tensor exceeds qubit cap");
  Vec amps(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
      amps(i * b.dim() + j) = a.amplitudes()(i) * b.amplitudes()(j);
    }
  }
  return {n, std::move(amps)};
}

PureState permute_qubits(const PureState& state, const std::vector<int>& perm) {
  const int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("bad permutation");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw InvalidInput("bad permutation");
    hit[p] = true;
  }
  Vec out(state.dim());
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    std::uint64_t j = 0;
    for (int q = 0; q < n; ++q) {
      if ((static_cast<std::uint64_t>(i) >> bit_pos(n, q)) & 1u) {
        j |= std::uint64_t{1} << bit_pos(n, perm[q]);
      }
    }
    out(static_cast<Eigen::Index>(j)) = state.amplitudes()(i);
  }
  return {n, std::move(out)};
}

PureState extract_qubits(const PureState& state, const std::vector<int>& keep) {
  const int n = state.num_qubits();
  const int k = static_cast<int>(keep.size());
  if (k < 1 || k > n) throw InvalidInput("extract_qubits: bad keep list");
  check_targets(n, keep, k);
  if (k == n) return permute_qubits(state, [&] {
    // keep[j] names the old qubit that should land at position j.
    std::vector<int> perm(n);
    for (int j = 0; j < k; ++j) perm[keep[j]] = j;
    return perm;
  }());

  std::vector<int> removed;
  for (int q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
      removed.push_back(q);
    }
  }
  const Eigen::Index keep_dim = Eigen::Index{1} << k;
  const Eigen::Index rest_dim = Eigen::Index{1} << (n - k);
  Mat m(rest_dim, keep_dim);
  for (Eigen::Index r = 0; r < rest_dim; ++r) {
    for (Eigen::Index c = 0; c < keep_dim; ++c) {
      std::uint64_t idx = 0;
      for (int j = 0; j < k; ++j) {
        if ((static_cast<std::uint64_t>(c) >> (k - 1 - j)) & 1u) {
          idx |= std::uint64_t{1} << bit_pos(n, keep[j]);
        }
      }
      for (int j = 0; j < n - k; ++j) {
        if ((static_cast<std::uint64_t>(r) >> (n - k - 1 - j)) & 1u) {
          idx |= std::uint64_t{1} << bit_pos(n, removed[j]);
        }
      }
      m(r, c) = state.amplitudes()(static_cast<Eigen::Index>(idx));
    }
  }
  Eigen::Index best = 0;
  m.rowwise().squaredNorm().maxCoeff(&best);
  Vec w = m.row(best).transpose();
  w /= w.norm();
  double residual = 0.0;
  for (Eigen::Index r = 0; r < rest_dim; ++r) {
    const Complex c = w.dot(m.row(r).transpose());
    residual += (m.row(r).transpose() - c * w).squaredNorm();
  }
  if (residual > 1e-16) {
    throw InternalError("extract_qubits: state does not factorize; residual " +
                        std::to_string(residual));
  }
  return {k, std::move(w)};
}

PureState canonicalize_phase(const PureState& state) {
  const double maxabs = state.amplitudes().cwiseAbs().maxCoeff();
  Vec amps = state.amplitudes();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (std::abs(amps(i)) >= 1e-6 * maxabs) {
      const Complex phase = amps(i) / std::abs(amps(i));
      amps /= phase;
      break;
    }
  }
  return {state.num_qubits(), std::move(amps)};
}

}  // namespace mqc
