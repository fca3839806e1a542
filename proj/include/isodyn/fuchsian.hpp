#pragma once

#include "isodyn/linalg.hpp"

#include <utility>
#include <vector>

namespace isodyn {

/// Pole positions and characteristic indices of a Fuchsian system. Finite
/// poles carry the full index list (zeros included); the pole at infinity is
/// the `infinity_indices` column. The Fuchs relation says all indices sum to
/// zero.
struct RiemannScheme {
    std::vector<Rat> poles;
    std::vector<std::vector<Rat>> indices;
    std::vector<Rat> infinity_indices;

    Eigen::Index size() const { return static_cast<Eigen::Index>(infinity_indices.size()); }
};

/// Sum of all characteristic indices with multiplicity; zero iff the Fuchs
/// relation holds.
Rat fuchs_sum(const RiemannScheme& scheme);

/// Multiplicity partitions of the indices, weakly decreasing, one per finite
/// pole plus one for infinity when the residue there is nonzero.
using SpectralType = std::vector<std::vector<int>>;
SpectralType spectral_type(const RiemannScheme& scheme);

/// Eigenvector data of one residue matrix: A_i = b · c_dag with the
/// orthogonality condition c_dag · b = diag(theta), all theta nonzero.
struct PoleData {
    Rat z;
    RatMat b;       // m x r, right eigenvectors
    RatMat c_dag;   // r x m, left eigenvectors
    std::vector<Rat> theta;

    Eigen::Index rank() const { return b.cols(); }
};

struct DecompositionPoint {
    Eigen::Index size = 0;  // matrix size m
    std::vector<PoleData> poles;
    std::vector<Rat> theta_inf;  // prescribed spectrum at infinity, m values
};

struct FuchsianSystem {
    std::vector<std::pair<Rat, RatMat>> residues;  // (z_i, A_i)
    RatMat a_inf;
};

/// Scheme carried by a decomposition point (pole thetas padded with zeros).
RiemannScheme scheme_of(const DecompositionPoint& point);

bool check_orthogonality(const DecompositionPoint& point);

/// Checks all DecompositionPoint invariants; throws on violation.
void validate(const DecompositionPoint& point);

/// Builds the residue matrices A_i = B_i C_i_dag and A_inf = -sum A_i, and
/// verifies that the spectrum of A_inf equals theta_inf as a multiset.
FuchsianSystem assemble(const DecompositionPoint& point);

/// A_i += s I, A_inf -= s I (the residue-level effect of (z - z_i)^s scaling).
FuchsianSystem scalar_gauge(const FuchsianSystem& system, std::size_t pole, const Rat& s);

/// Exchanges eigen-slots j and k (vectors and eigenvalue) at the given pole.
DecompositionPoint sigma_swap(const DecompositionPoint& point, std::size_t pole, std::size_t j, std::size_t k);

/// The composite of the kernel-slot swap at pole 1 with the scalar gauge that
/// re-zeroes the swapped eigenvalue, in its cross-product closed form. Needs
/// m = 3 and rank 2 at pole 1 with distinct indices there.
DecompositionPoint sigma13_hat(const DecompositionPoint& point);

/// Pure index bookkeeping on a Riemann scheme.
struct SchemeAction {
    enum class Kind { Rank1, Rank2, DpA2Model, DpA1Model, Sigma13Hat, ScalarGauge };
    Kind kind;
    std::size_t alpha = 0, beta = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (mu, nu) slots, 0-based
    std::size_t pole = 0;
    Rat shift;

    static SchemeAction rank1(std::size_t alpha, std::size_t beta, std::size_t mu, std::size_t nu) {
        return {Kind::Rank1, alpha, beta, {{mu, nu}}, 0, Rat(0)};
    }
    static SchemeAction rank2(std::size_t alpha, std::size_t beta,
                              std::pair<std::size_t, std::size_t> p1,
                              std::pair<std::size_t, std::size_t> p2) {
        return {Kind::Rank2, alpha, beta, {p1, p2}, 0, Rat(0)};
    }
    static SchemeAction dpa2_model() { return {Kind::DpA2Model, 0, 0, {}, 0, Rat(0)}; }
    static SchemeAction dpa1_model() { return {Kind::DpA1Model, 0, 0, {}, 0, Rat(0)}; }
    static SchemeAction sigma13() { return {Kind::Sigma13Hat, 0, 0, {}, 0, Rat(0)}; }
    static SchemeAction scalar(std::size_t pole, Rat s) {
        return {Kind::ScalarGauge, 0, 0, {}, pole, std::move(s)};
    }
};

RiemannScheme riemann_action(const RiemannScheme& scheme, const SchemeAction& action);

}  // namespace isodyn
