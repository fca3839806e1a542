#pragma once

#include "isodyn/fuchsian.hpp"

namespace isodyn {

/// An elementary transformation between two finite poles. Each (mu, nu) pair
/// lowers theta at slot mu of pole alpha by one and raises theta at slot nu of
/// pole beta by one; one pair is a rank-1 transformation, two pairs rank 2.
/// All indices 0-based.
struct TransformSpec {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    SchemeAction scheme_action() const {
        SchemeAction a;
        a.kind = pairs.size() == 1 ? SchemeAction::Kind::Rank1 : SchemeAction::Kind::Rank2;
        a.alpha = alpha;
        a.beta = beta;
        a.pairs = pairs;
        return a;
    }
};

/// R(z) = I + (z_alpha - z_beta)/(z - z_alpha) P with P a projector.
struct Multiplier {
    Rat z_alpha;
    Rat z_beta;
    RatMat p;

    RatMat eval(const Rat& z) const;      // R(z), z != z_alpha
    RatMat eval_inv(const Rat& z) const;  // R(z)^-1 = I + (z_beta - z_alpha)/(z - z_beta) P
    RatMat deriv(const Rat& z) const;     // dR/dz = -(z_alpha - z_beta)/(z - z_alpha)^2 P
};

/// P = b_{beta,nu} c_alpha^{mu+} / (c_alpha^{mu+} b_{beta,nu}).
Multiplier rank1_projector(const DecompositionPoint& point, const TransformSpec& spec);

DecompositionPoint rank1_transform(const DecompositionPoint& point, const TransformSpec& spec);

/// Evolution of the residue matrices themselves under the multiplier.
/// Checks the projector constraints P A_alpha Q = 0, Q A_beta P = 0 first.
FuchsianSystem residue_transform(const FuchsianSystem& system, const Multiplier& mult,
                                 std::size_t alpha, std::size_t beta);

struct Rank2Projectors {
    RatMat p1, p2;           // the two rank-1 projectors
    RatMat cal_p1, cal_p2;   // orthogonalized: Q2 P1 / tr(Q2 P1), Q1 P2 / tr(Q1 P2)
    RatMat cal_pt1, cal_pt2; // P1 Q2 / tr, P2 Q1 / tr
    RatMat cal_p;            // cal_p1 + cal_p2, the rank-2 projector
};

Rank2Projectors rank2_projectors(const DecompositionPoint& point, const TransformSpec& spec);

Multiplier rank2_multiplier(const DecompositionPoint& point, const TransformSpec& spec);

DecompositionPoint rank2_transform(const DecompositionPoint& point, const TransformSpec& spec);

/// True iff Abar(z) R(z) - R(z) A(z) - dR/dz vanishes at every sampled z.
bool compatibility_check(const FuchsianSystem& before, const FuchsianSystem& after,
                         const Multiplier& mult, const SamplePlan& plan);

}  // namespace isodyn
