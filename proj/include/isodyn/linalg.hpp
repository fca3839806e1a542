#pragma once

#include "isodyn/rational.hpp"

#include <functional>
#include <vector>

namespace isodyn {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatRowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

inline bool is_zero(const RatMat& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) return false;
    return true;
}

inline bool equal(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero(RatMat(a - b));
}

inline RatMat identity(Eigen::Index n) { return RatMat::Identity(n, n); }

/// column * row outer product
inline RatMat outer(const RatVec& col, const RatRowVec& row) { return col * row; }

/// Solves a·x = b by Gaussian elimination with exact pivoting (first nonzero
/// pivot; magnitude heuristics are pointless over the rationals).
/// b may have several columns. Throws SingularMatrix.
RatMat solve_linear(const RatMat& a, const RatMat& b);

RatMat mat_inverse(const RatMat& a);

Rat det(const RatMat& a);

Eigen::Index rank(const RatMat& a);

/// Basis of the right kernel of a.
std::vector<RatVec> kernel_basis(const RatMat& a);

/// Elementary symmetric functions (e_1, ..., e_n) of the eigenvalues of a,
/// i.e. the sums of principal k-by-k minors.
std::vector<Rat> elem_sym_of_spectrum(const RatMat& a);

/// Elementary symmetric functions of an explicit value list.
std::vector<Rat> elem_sym(const std::vector<Rat>& values);

/// Given m+1 vectors in Q^m whose first m are independent and whose last has
/// all-nonzero coordinates in their basis, returns S with S·v_i proportional
/// to e_i (i < m) and S·v_m equal to the all-ones vector, via
/// S = diag(w)^-1 T^-1, T = [v_0 ... v_{m-1}], w = T^-1 v_m.
RatMat projective_frame(const std::vector<RatVec>& vectors);

struct SamplePlan {
    int sample_count = 20;
    std::uint64_t seed = 1;
    std::vector<Rat> excluded_points;
};

/// True iff evaluator(z) is the zero matrix at every sampled z. Samples are
/// rationals with numerator and denominator in [1, 10^6]; draws that land on
/// excluded points (poles) are skipped and redrawn.
bool rational_identity_zero(const std::function<RatMat(const Rat&)>& evaluator, const SamplePlan& plan);

}  // namespace isodyn
