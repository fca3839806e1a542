#pragma once

#include "isodyn/fuchsian.hpp"
#include "isodyn/suites.hpp"

namespace isodyn::testing {

inline bool scheme_eq(const RiemannScheme& a, const RiemannScheme& b) {
    return a.poles == b.poles && a.indices == b.indices && a.infinity_indices == b.infinity_indices;
}

inline RatMat mat(Eigen::Index rows, Eigen::Index cols, std::initializer_list<long> entries) {
    RatMat m(rows, cols);
    auto it = entries.begin();
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rat(*it++);
    return m;
}

inline RatVec col(std::initializer_list<long> entries) {
    RatVec v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries) v(i++) = Rat(e);
    return v;
}

/// A fixed generic 3x3 scheme for the two-pole family.
inline RiemannScheme a2_scheme_fixture() {
    RiemannScheme scheme;
    scheme.poles = {Rat(0), Rat(1)};
    scheme.indices = {{rat(1, 2), rat(-2, 3), Rat(0)}, {rat(3, 5), rat(7, 4), Rat(0)}};
    const Rat k1 = rat(1, 3), k2 = rat(-1, 5);
    scheme.infinity_indices = {k1, k2, Rat(-(rat(1, 2) - rat(2, 3) + rat(3, 5) + rat(7, 4) + k1 + k2))};
    return scheme;
}

/// A fixed generic 4x4 scheme with the double third-pole eigenvalue.
inline RiemannScheme a1_scheme_fixture() {
    RiemannScheme scheme;
    scheme.poles = {Rat(0), Rat(1), Rat(2)};
    scheme.indices = {{rat(1, 2), rat(-2, 3), rat(5, 7), Rat(0)},
                      {rat(3, 4), rat(-1, 5), rat(2, 9), rat(1, 6)}};
    Rat sum(0);
    for (const auto& pole : scheme.indices)
        for (const Rat& v : pole) sum += v;
    const Rat t3 = Rat(-sum) / 2;
    scheme.indices.push_back({t3, t3, Rat(0), Rat(0)});
    scheme.infinity_indices = {Rat(0), Rat(0), Rat(0), Rat(0)};
    return scheme;
}

/// Random conjugation plus per-slot rescales; stays in the gauge orbit.
inline DecompositionPoint random_gauge(const DecompositionPoint& point, Rng& rng) {
    const Eigen::Index m = point.size;
    RatMat p(m, m);
    for (;;) {
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) p(i, j) = rng.rational(-6, 6, 1, 4);
        if (det(p) != 0) break;
    }
    const RatMat p_inv = mat_inverse(p);
    DecompositionPoint out = point;
    for (auto& pole : out.poles) {
        pole.b = p * pole.b;
        pole.c_dag = pole.c_dag * p_inv;
        for (Eigen::Index j = 0; j < pole.rank(); ++j) {
            Rat scale = rng.rational(1, 9, 1, 5);
            pole.b.col(j) *= scale;
            pole.c_dag.row(j) /= scale;
        }
    }
    return out;
}

}  // namespace isodyn::testing
