#include "isodyn/schlesinger.hpp"

#include "isodyn/errors.hpp"

#include <array>
#include <set>

namespace isodyn {

RatMat Multiplier::eval(const Rat& z) const {
    return identity(p.rows()) + RatMat(((z_alpha - z_beta) / (z - z_alpha)) * p);
}

RatMat Multiplier::eval_inv(const Rat& z) const {
    return identity(p.rows()) + RatMat(((z_beta - z_alpha) / (z - z_beta)) * p);
}

RatMat Multiplier::deriv(const Rat& z) const {
    const Rat d = z - z_alpha;
    return RatMat((-(z_alpha - z_beta) / (d * d)) * p);
}

namespace {

void check_spec(const DecompositionPoint& point, const TransformSpec& spec, std::size_t expected_rank) {
    if (spec.alpha == spec.beta) throw InvalidTransform("alpha = beta");
    if (spec.alpha >= point.poles.size() || spec.beta >= point.poles.size())
        throw InvalidTransform("pole index out of range");
    if (spec.pairs.size() != expected_rank) throw InvalidTransform("wrong number of index pairs");
    std::set<std::size_t> mus, nus;
    for (const auto& [mu, nu] : spec.pairs) {
        if (mu >= static_cast<std::size_t>(point.poles[spec.alpha].rank()) ||
            nu >= static_cast<std::size_t>(point.poles[spec.beta].rank()))
            throw InvalidTransform("eigen index out of range");
        if (!mus.insert(mu).second || !nus.insert(nu).second)
            throw InvalidTransform("rank-2 pairs must be distinct in both slots");
    }
}

/// sum over finite poles i != skip of (w_num - z_skip)/(z_i - z_skip) A_i,
/// where A_i = B_i C_i^+ and w_num is the other transformation pole.
RatMat weighted_residue_sum(const DecompositionPoint& point, std::size_t skip, const Rat& other_z) {
    const auto& base = point.poles[skip];
    RatMat sum = RatMat::Zero(point.size, point.size);
    for (std::size_t i = 0; i < point.poles.size(); ++i) {
        if (i == skip) continue;
        const auto& pole = point.poles[i];
        sum += RatMat(((other_z - base.z) / (pole.z - base.z)) * RatMat(pole.b * pole.c_dag));
    }
    return sum;
}

RatMat rank1_projector_matrix(const PoleData& alpha_pole, const PoleData& beta_pole,
                              std::size_t mu, std::size_t nu) {
    const RatVec b = beta_pole.b.col(static_cast<Eigen::Index>(nu));
    const RatRowVec c = alpha_pole.c_dag.row(static_cast<Eigen::Index>(mu));
    const Rat pairing = (c * b)(0, 0);
    if (pairing == 0)
        throw DegenerateParameter("c_alpha^" + std::to_string(mu + 1) + " . b_beta," + std::to_string(nu + 1));
    return RatMat((b * c) / pairing);
}

Rat nonzero_or_throw(Rat value, const std::string& name) {
    if (value == 0) throw DegenerateParameter(name);
    return value;
}

}  // namespace

Multiplier rank1_projector(const DecompositionPoint& point, const TransformSpec& spec) {
    check_spec(point, spec, 1);
    const auto& [mu, nu] = spec.pairs[0];
    Multiplier mult;
    mult.z_alpha = point.poles[spec.alpha].z;
    mult.z_beta = point.poles[spec.beta].z;
    mult.p = rank1_projector_matrix(point.poles[spec.alpha], point.poles[spec.beta], mu, nu);
    return mult;
}

DecompositionPoint rank1_transform(const DecompositionPoint& point, const TransformSpec& spec) {
    check_spec(point, spec, 1);
    const auto& [mu, nu] = spec.pairs[0];
    const auto& pa = point.poles[spec.alpha];
    const auto& pb = point.poles[spec.beta];
    const Eigen::Index m = point.size;

    const RatVec b_bn = pb.b.col(static_cast<Eigen::Index>(nu));
    const RatRowVec c_am = pa.c_dag.row(static_cast<Eigen::Index>(mu));
    const Rat pairing = nonzero_or_throw((c_am * b_bn)(0, 0), "c_alpha^mu . b_beta,nu");
    const RatMat p = RatMat((b_bn * c_am) / pairing);
    const RatMat q = identity(m) - p;

    const Rat theta_am = pa.theta[mu];
    const Rat theta_bn = pb.theta[nu];
    nonzero_or_throw(theta_am - 1, "theta_alpha^mu - 1");
    nonzero_or_throw(theta_bn + 1, "theta_beta^nu + 1");

    const RatMat sum_a = weighted_residue_sum(point, spec.alpha, pb.z);
    const RatMat sum_b = weighted_residue_sum(point, spec.beta, pa.z);

    DecompositionPoint out = point;

    // poles away from alpha and beta conjugate by R(z_i)
    for (std::size_t i = 0; i < point.poles.size(); ++i) {
        if (i == spec.alpha || i == spec.beta) continue;
        const auto& pole = point.poles[i];
        const Rat w = (pa.z - pb.z) / (pole.z - pa.z);
        const Rat w_inv = (pb.z - pa.z) / (pole.z - pb.z);
        const RatMat r = identity(m) + RatMat(w * p);
        const RatMat r_inv = identity(m) + RatMat(w_inv * p);
        out.poles[i].b = r * pole.b;
        out.poles[i].c_dag = pole.c_dag * r_inv;
    }

    // pole alpha
    {
        auto& dst = out.poles[spec.alpha];
        dst.b.col(static_cast<Eigen::Index>(mu)) = b_bn;
        for (std::size_t j = 0; j < pa.theta.size(); ++j) {
            if (j == mu) continue;
            const Rat denom = nonzero_or_throw(theta_am - pa.theta[j] - 1,
                                               "theta_alpha^mu - theta_alpha^" + std::to_string(j + 1) + " - 1");
            dst.b.col(static_cast<Eigen::Index>(j)) =
                pa.b.col(static_cast<Eigen::Index>(j)) -
                RatMat(p * sum_a / denom) * pa.b.col(static_cast<Eigen::Index>(j));
        }
        RatMat correction = identity(m);
        for (std::size_t j = 0; j < pa.theta.size(); ++j) {
            if (j == mu) continue;
            correction += RatMat(pa.b.col(static_cast<Eigen::Index>(j)) *
                                 pa.c_dag.row(static_cast<Eigen::Index>(j)) /
                                 (theta_am - pa.theta[j] - 1));
        }
        dst.c_dag.row(static_cast<Eigen::Index>(mu)) =
            (c_am / pairing) * RatMat((theta_am - 1) * identity(m) + RatMat(sum_a * correction * q));
        for (std::size_t j = 0; j < pa.theta.size(); ++j) {
            if (j == mu) continue;
            dst.c_dag.row(static_cast<Eigen::Index>(j)) = pa.c_dag.row(static_cast<Eigen::Index>(j)) * q;
        }
        dst.theta[mu] = theta_am - 1;
    }

    // pole beta
    {
        auto& dst = out.poles[spec.beta];
        dst.c_dag.row(static_cast<Eigen::Index>(nu)) = c_am;
        for (std::size_t j = 0; j < pb.theta.size(); ++j) {
            if (j == nu) continue;
            const Rat denom = nonzero_or_throw(theta_bn - pb.theta[j] + 1,
                                               "theta_beta^nu - theta_beta^" + std::to_string(j + 1) + " + 1");
            dst.c_dag.row(static_cast<Eigen::Index>(j)) =
                pb.c_dag.row(static_cast<Eigen::Index>(j)) -
                pb.c_dag.row(static_cast<Eigen::Index>(j)) * RatMat(sum_b * p / denom);
        }
        RatMat correction = identity(m);
        for (std::size_t j = 0; j < pb.theta.size(); ++j) {
            if (j == nu) continue;
            correction += RatMat(pb.b.col(static_cast<Eigen::Index>(j)) *
                                 pb.c_dag.row(static_cast<Eigen::Index>(j)) /
                                 (theta_bn - pb.theta[j] + 1));
        }
        dst.b.col(static_cast<Eigen::Index>(nu)) =
            RatMat((theta_bn + 1) * identity(m) + RatMat(q * correction * sum_b)) * RatMat(b_bn / pairing);
        for (std::size_t j = 0; j < pb.theta.size(); ++j) {
            if (j == nu) continue;
            dst.b.col(static_cast<Eigen::Index>(j)) = q * pb.b.col(static_cast<Eigen::Index>(j));
        }
        dst.theta[nu] = theta_bn + 1;
    }

    return out;
}

FuchsianSystem residue_transform(const FuchsianSystem& system, const Multiplier& mult,
                                 std::size_t alpha, std::size_t beta) {
    if (alpha == beta || alpha >= system.residues.size() || beta >= system.residues.size())
        throw InvalidTransform("pole index");
    const Eigen::Index m = system.a_inf.rows();
    const RatMat& p = mult.p;
    const RatMat q = identity(m) - p;
    const RatMat& a_alpha = system.residues[alpha].second;
    const RatMat& a_beta = system.residues[beta].second;
    if (!is_zero(RatMat(p * a_alpha * q))) throw ConstraintViolated("P A_alpha Q != 0");
    if (!is_zero(RatMat(q * a_beta * p))) throw ConstraintViolated("Q A_beta P != 0");

    const Rat za = system.residues[alpha].first;
    const Rat zb = system.residues[beta].first;

    FuchsianSystem out = system;
    for (std::size_t i = 0; i < system.residues.size(); ++i) {
        if (i == alpha || i == beta) continue;
        const Rat zi = system.residues[i].first;
        out.residues[i].second = mult.eval(zi) * system.residues[i].second * mult.eval_inv(zi);
    }
    RatMat acc_alpha = a_alpha - RatMat(q * a_alpha * p) - p;
    RatMat acc_beta = a_beta - RatMat(p * a_beta * q) + p;
    for (std::size_t i = 0; i < system.residues.size(); ++i) {
        const Rat zi = system.residues[i].first;
        const RatMat& ai = system.residues[i].second;
        if (i != alpha) acc_alpha += RatMat(((zb - za) / (zi - za)) * RatMat(p * ai * q));
        if (i != beta) acc_beta += RatMat(((za - zb) / (zi - zb)) * RatMat(q * ai * p));
    }
    out.residues[alpha].second = std::move(acc_alpha);
    out.residues[beta].second = std::move(acc_beta);
    return out;
}

Rank2Projectors rank2_projectors(const DecompositionPoint& point, const TransformSpec& spec) {
    check_spec(point, spec, 2);
    const auto& pa = point.poles[spec.alpha];
    const auto& pb = point.poles[spec.beta];
    const Eigen::Index m = point.size;

    Rank2Projectors out;
    out.p1 = rank1_projector_matrix(pa, pb, spec.pairs[0].first, spec.pairs[0].second);
    out.p2 = rank1_projector_matrix(pa, pb, spec.pairs[1].first, spec.pairs[1].second);
    const RatMat q1 = identity(m) - out.p1;
    const RatMat q2 = identity(m) - out.p2;
    const RatMat q2p1 = q2 * out.p1;
    const RatMat q1p2 = q1 * out.p2;
    const Rat tau = nonzero_or_throw(q2p1.trace(), "tr(Q_2 P_1)");
    out.cal_p1 = RatMat(q2p1 / tau);
    out.cal_p2 = RatMat(q1p2 / tau);
    out.cal_pt1 = RatMat(out.p1 * q2 / tau);
    out.cal_pt2 = RatMat(out.p2 * q1 / tau);
    out.cal_p = out.cal_p1 + out.cal_p2;
    return out;
}

Multiplier rank2_multiplier(const DecompositionPoint& point, const TransformSpec& spec) {
    Multiplier mult;
    mult.z_alpha = point.poles[spec.alpha].z;
    mult.z_beta = point.poles[spec.beta].z;
    mult.p = rank2_projectors(point, spec).cal_p;
    return mult;
}

DecompositionPoint rank2_transform(const DecompositionPoint& point, const TransformSpec& spec) {
    const Rank2Projectors proj = rank2_projectors(point, spec);
    const auto& pa = point.poles[spec.alpha];
    const auto& pb = point.poles[spec.beta];
    const Eigen::Index m = point.size;
    const std::size_t mu1 = spec.pairs[0].first, nu1 = spec.pairs[0].second;
    const std::size_t mu2 = spec.pairs[1].first, nu2 = spec.pairs[1].second;

    const RatMat q = identity(m) - proj.cal_p;
    const std::array<RatMat, 2> q_other = {identity(m) - proj.p2, identity(m) - proj.p1};
    const std::array<const RatMat*, 2> cal_p = {&proj.cal_p1, &proj.cal_p2};
    const std::array<const RatMat*, 2> cal_pt = {&proj.cal_pt1, &proj.cal_pt2};
    const std::array<std::size_t, 2> mus = {mu1, mu2};
    const std::array<std::size_t, 2> nus = {nu1, nu2};

    for (std::size_t k = 0; k < 2; ++k) {
        nonzero_or_throw(pa.theta[mus[k]] - 1, "theta_alpha^mu" + std::to_string(k + 1) + " - 1");
        nonzero_or_throw(pb.theta[nus[k]] + 1, "theta_beta^nu" + std::to_string(k + 1) + " + 1");
    }

    const RatMat sum_a = weighted_residue_sum(point, spec.alpha, pb.z);
    const RatMat sum_b = weighted_residue_sum(point, spec.beta, pa.z);

    DecompositionPoint out = point;

    for (std::size_t i = 0; i < point.poles.size(); ++i) {
        if (i == spec.alpha || i == spec.beta) continue;
        const auto& pole = point.poles[i];
        const Rat w = (pa.z - pb.z) / (pole.z - pa.z);
        const Rat w_inv = (pb.z - pa.z) / (pole.z - pb.z);
        const RatMat r = identity(m) + RatMat(w * proj.cal_p);
        const RatMat r_inv = identity(m) + RatMat(w_inv * proj.cal_p);
        out.poles[i].b = r * pole.b;
        out.poles[i].c_dag = pole.c_dag * r_inv;
    }

    // pole alpha
    {
        auto& dst = out.poles[spec.alpha];
        for (std::size_t k = 0; k < 2; ++k) {
            dst.b.col(static_cast<Eigen::Index>(mus[k])) =
                q_other[k] * pb.b.col(static_cast<Eigen::Index>(nus[k]));
        }
        for (std::size_t j = 0; j < pa.theta.size(); ++j) {
            if (j == mu1 || j == mu2) continue;
            RatMat mixer = RatMat::Zero(m, m);
            for (std::size_t k = 0; k < 2; ++k) {
                const Rat denom = nonzero_or_throw(
                    pa.theta[mus[k]] - pa.theta[j] - 1,
                    "theta_alpha^mu" + std::to_string(k + 1) + " - theta_alpha^" + std::to_string(j + 1) + " - 1");
                mixer += RatMat(*cal_p[k] / denom);
            }
            dst.b.col(static_cast<Eigen::Index>(j)) =
                pa.b.col(static_cast<Eigen::Index>(j)) -
                RatMat(mixer * sum_a) * pa.b.col(static_cast<Eigen::Index>(j));
        }
        for (std::size_t k = 0; k < 2; ++k) {
            const RatRowVec c_am = pa.c_dag.row(static_cast<Eigen::Index>(mus[k]));
            const Rat mixed_pairing = nonzero_or_throw(
                (c_am * RatMat(q_other[k] * pb.b.col(static_cast<Eigen::Index>(nus[k]))))(0, 0),
                "c_alpha^mu" + std::to_string(k + 1) + " Q b_beta,nu" + std::to_string(k + 1));
            RatMat correction = identity(m);
            for (std::size_t j = 0; j < pa.theta.size(); ++j) {
                if (j == mu1 || j == mu2) continue;
                const Rat denom = nonzero_or_throw(
                    pa.theta[mus[k]] - pa.theta[j] - 1,
                    "theta_alpha^mu" + std::to_string(k + 1) + " - theta_alpha^" + std::to_string(j + 1) + " - 1");
                correction += RatMat(pa.b.col(static_cast<Eigen::Index>(j)) *
                                     pa.c_dag.row(static_cast<Eigen::Index>(j)) / denom);
            }
            dst.c_dag.row(static_cast<Eigen::Index>(mus[k])) =
                (c_am / mixed_pairing) *
                RatMat((pa.theta[mus[k]] - 1) * identity(m) + RatMat(sum_a * correction * q));
        }
        for (std::size_t j = 0; j < pa.theta.size(); ++j) {
            if (j == mu1 || j == mu2) continue;
            dst.c_dag.row(static_cast<Eigen::Index>(j)) = pa.c_dag.row(static_cast<Eigen::Index>(j)) * q;
        }
        dst.theta[mu1] = pa.theta[mu1] - 1;
        dst.theta[mu2] = pa.theta[mu2] - 1;
    }

    // pole beta
    {
        auto& dst = out.poles[spec.beta];
        for (std::size_t k = 0; k < 2; ++k) {
            dst.c_dag.row(static_cast<Eigen::Index>(nus[k])) =
                pa.c_dag.row(static_cast<Eigen::Index>(mus[k])) * q_other[k];
        }
        for (std::size_t j = 0; j < pb.theta.size(); ++j) {
            if (j == nu1 || j == nu2) continue;
            RatMat mixer = RatMat::Zero(m, m);
            for (std::size_t k = 0; k < 2; ++k) {
                const Rat denom = nonzero_or_throw(
                    pb.theta[nus[k]] - pb.theta[j] + 1,
                    "theta_beta^nu" + std::to_string(k + 1) + " - theta_beta^" + std::to_string(j + 1) + " + 1");
                mixer += RatMat(*cal_pt[k] / denom);
            }
            dst.c_dag.row(static_cast<Eigen::Index>(j)) =
                pb.c_dag.row(static_cast<Eigen::Index>(j)) -
                pb.c_dag.row(static_cast<Eigen::Index>(j)) * RatMat(sum_b * mixer);
        }
        for (std::size_t k = 0; k < 2; ++k) {
            const RatVec b_bn = pb.b.col(static_cast<Eigen::Index>(nus[k]));
            const Rat mixed_pairing = nonzero_or_throw(
                (RatMat(pa.c_dag.row(static_cast<Eigen::Index>(mus[k])) * q_other[k]) * b_bn)(0, 0),
                "c_alpha^mu" + std::to_string(k + 1) + " Q b_beta,nu" + std::to_string(k + 1));
            // the j-sum denominator carries theta_beta^nu_k of the current
            // pair; this is what the residue-level evolution reproduces
            RatMat correction = identity(m);
            for (std::size_t j = 0; j < pb.theta.size(); ++j) {
                if (j == nu1 || j == nu2) continue;
                const Rat denom = nonzero_or_throw(
                    pb.theta[nus[k]] - pb.theta[j] + 1,
                    "theta_beta^nu" + std::to_string(k + 1) + " - theta_beta^" + std::to_string(j + 1) + " + 1");
                correction += RatMat(pb.b.col(static_cast<Eigen::Index>(j)) *
                                     pb.c_dag.row(static_cast<Eigen::Index>(j)) / denom);
            }
            dst.b.col(static_cast<Eigen::Index>(nus[k])) =
                RatMat((pb.theta[nus[k]] + 1) * identity(m) + RatMat(q * correction * sum_b)) *
                RatMat(b_bn / mixed_pairing);
        }
        for (std::size_t j = 0; j < pb.theta.size(); ++j) {
            if (j == nu1 || j == nu2) continue;
            dst.b.col(static_cast<Eigen::Index>(j)) = q * pb.b.col(static_cast<Eigen::Index>(j));
        }
        dst.theta[nu1] = pb.theta[nu1] + 1;
        dst.theta[nu2] = pb.theta[nu2] + 1;
    }

    return out;
}

bool compatibility_check(const FuchsianSystem& before, const FuchsianSystem& after,
                         const Multiplier& mult, const SamplePlan& plan) {
    SamplePlan effective = plan;
    for (const auto& [z, a] : before.residues) effective.excluded_points.push_back(z);
    effective.excluded_points.push_back(mult.z_alpha);
    effective.excluded_points.push_back(mult.z_beta);
    const auto a_of = [](const FuchsianSystem& sys, const Rat& z) {
        RatMat value = RatMat::Zero(sys.a_inf.rows(), sys.a_inf.cols());
        for (const auto& [zi, ai] : sys.residues) value += RatMat(ai / (z - zi));
        return value;
    };
    return rational_identity_zero(
        [&](const Rat& z) {
            return RatMat(a_of(after, z) * mult.eval(z) - mult.eval(z) * a_of(before, z) - mult.deriv(z));
        },
        effective);
}

}  // namespace isodyn
