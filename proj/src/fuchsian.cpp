#include "isodyn/fuchsian.hpp"

#include "isodyn/errors.hpp"

#include <algorithm>
#include <map>

namespace isodyn {

Rat fuchs_sum(const RiemannScheme& scheme) {
    Rat sum(0);
    for (const auto& pole : scheme.indices)
        for (const Rat& v : pole) sum += v;
    for (const Rat& v : scheme.infinity_indices) sum += v;
    return sum;
}

namespace {

std::vector<int> partition_of(const std::vector<Rat>& values) {
    std::map<Rat, int> mult;
    for (const Rat& v : values) ++mult[v];
    std::vector<int> part;
    for (const auto& [value, count] : mult) part.push_back(count);
    std::sort(part.rbegin(), part.rend());
    return part;
}

}  // namespace

SpectralType spectral_type(const RiemannScheme& scheme) {
    SpectralType type;
    for (const auto& pole : scheme.indices) type.push_back(partition_of(pole));
    const bool inf_pole = std::any_of(scheme.infinity_indices.begin(), scheme.infinity_indices.end(),
                                      [](const Rat& v) { return v != 0; });
    if (inf_pole) type.push_back(partition_of(scheme.infinity_indices));
    return type;
}

RiemannScheme scheme_of(const DecompositionPoint& point) {
    RiemannScheme scheme;
    for (const auto& pole : point.poles) {
        scheme.poles.push_back(pole.z);
        std::vector<Rat> indices = pole.theta;
        indices.resize(static_cast<std::size_t>(point.size), Rat(0));
        scheme.indices.push_back(std::move(indices));
    }
    scheme.infinity_indices = point.theta_inf;
    return scheme;
}

bool check_orthogonality(const DecompositionPoint& point) {
    for (const auto& pole : point.poles) {
        RatMat expected = RatMat::Zero(pole.rank(), pole.rank());
        for (Eigen::Index j = 0; j < pole.rank(); ++j)
            expected(j, j) = pole.theta[static_cast<std::size_t>(j)];
        if (!equal(RatMat(pole.c_dag * pole.b), expected)) return false;
    }
    return true;
}

void validate(const DecompositionPoint& point) {
    const Eigen::Index m = point.size;
    if (static_cast<Eigen::Index>(point.theta_inf.size()) != m)
        throw InvalidIndex("theta_inf needs m entries");
    for (std::size_t i = 0; i < point.poles.size(); ++i) {
        const auto& pole = point.poles[i];
        const Eigen::Index r = pole.rank();
        if (pole.b.rows() != m || pole.c_dag.cols() != m || pole.c_dag.rows() != r ||
            static_cast<Eigen::Index>(pole.theta.size()) != r)
            throw InvalidIndex("pole " + std::to_string(i) + " shape");
        for (const Rat& t : pole.theta)
            if (t == 0) throw DegenerateParameter("theta at pole " + std::to_string(i));
        if (rank(pole.b) != r || rank(pole.c_dag) != r)
            throw InvalidIndex("pole " + std::to_string(i) + " eigenvector matrix is rank-deficient");
        for (std::size_t a = 0; a < point.poles.size(); ++a)
            if (a != i && point.poles[a].z == pole.z) throw InvalidIndex("coinciding poles");
    }
    if (!check_orthogonality(point)) throw InvalidIndex("orthogonality condition fails");
}

FuchsianSystem assemble(const DecompositionPoint& point) {
    validate(point);
    const Eigen::Index m = point.size;
    FuchsianSystem system;
    system.a_inf = RatMat::Zero(m, m);
    for (const auto& pole : point.poles) {
        RatMat a = pole.b * pole.c_dag;
        system.a_inf -= a;
        system.residues.emplace_back(pole.z, std::move(a));
    }
    const std::vector<Rat> have = elem_sym_of_spectrum(system.a_inf);
    const std::vector<Rat> want = elem_sym(point.theta_inf);
    for (std::size_t k = 0; k < have.size(); ++k)
        if (have[k] != want[k])
            throw SpectrumMismatch("A_inf characteristic polynomial, coefficient e_" + std::to_string(k + 1));
    // multiplicities: eigenspace dimension must match for each distinct value
    std::map<Rat, int> mult;
    for (const Rat& v : point.theta_inf) ++mult[v];
    for (const auto& [value, count] : mult) {
        const RatMat shifted = system.a_inf - value * identity(m);
        if (rank(shifted) != m - count)
            throw SpectrumMismatch("A_inf eigenspace dimension at " + to_string(value));
    }
    return system;
}

FuchsianSystem scalar_gauge(const FuchsianSystem& system, std::size_t pole, const Rat& s) {
    if (pole >= system.residues.size()) throw InvalidIndex("scalar_gauge pole");
    FuchsianSystem out = system;
    const Eigen::Index m = out.a_inf.rows();
    out.residues[pole].second += s * identity(m);
    out.a_inf -= s * identity(m);
    return out;
}

DecompositionPoint sigma_swap(const DecompositionPoint& point, std::size_t pole, std::size_t j, std::size_t k) {
    if (pole >= point.poles.size()) throw InvalidIndex("sigma_swap pole");
    const std::size_t r = static_cast<std::size_t>(point.poles[pole].rank());
    if (j >= r || k >= r) throw InvalidIndex("sigma_swap slot");
    DecompositionPoint out = point;
    auto& data = out.poles[pole];
    if (j != k) {
        data.b.col(static_cast<Eigen::Index>(j)).swap(data.b.col(static_cast<Eigen::Index>(k)));
        data.c_dag.row(static_cast<Eigen::Index>(j)).swap(data.c_dag.row(static_cast<Eigen::Index>(k)));
        std::swap(data.theta[j], data.theta[k]);
    }
    return out;
}

namespace {

RatVec cross(const RatVec& u, const RatVec& v) {
    RatVec w(3);
    w(0) = u(1) * v(2) - u(2) * v(1);
    w(1) = u(2) * v(0) - u(0) * v(2);
    w(2) = u(0) * v(1) - u(1) * v(0);
    return w;
}

}  // namespace

DecompositionPoint sigma13_hat(const DecompositionPoint& point) {
    if (point.size != 3 || point.poles.empty() || point.poles[0].rank() != 2)
        throw InvalidTransform("sigma13_hat needs a 3x3 point of rank 2 at pole 1");
    const Rat t1 = point.poles[0].theta[0];
    const Rat t2 = point.poles[0].theta[1];
    if (t1 == t2) throw DegenerateParameter("theta_1^1 - theta_1^2");

    const RatVec b1 = point.poles[0].b.col(0);
    const RatVec b2 = point.poles[0].b.col(1);
    const RatVec c1 = point.poles[0].c_dag.row(0).transpose();
    const RatVec c2 = point.poles[0].c_dag.row(1).transpose();

    const RatVec cxc = cross(c1, c2);
    const RatVec bxb = cross(b1, b2);
    const Rat pairing = cxc.dot(bxb);
    if (pairing == 0) throw DegenerateParameter("(c_1^1 x c_1^2) . (b_1^1 x b_1^2)");

    DecompositionPoint out = point;
    auto& pole = out.poles[0];
    pole.b.col(0) = cxc;
    pole.c_dag.row(0) = (Rat(-t1) / pairing) * bxb.transpose();
    // the swapped slot keeps its vectors; its index drops by t1, so the c-row
    // rescales to keep the orthogonality pairing equal to the new index
    pole.c_dag.row(1) *= (t2 - t1) / t2;
    pole.theta[0] = -t1;
    pole.theta[1] = t2 - t1;
    for (Rat& v : out.theta_inf) v += t1;
    return out;
}

RiemannScheme riemann_action(const RiemannScheme& scheme, const SchemeAction& action) {
    RiemannScheme out = scheme;
    const auto check_pole_slot = [&](std::size_t pole, std::size_t slot) {
        if (pole >= out.indices.size() || slot >= out.indices[pole].size())
            throw InvalidTransform("index out of range");
    };
    switch (action.kind) {
        case SchemeAction::Kind::Rank1:
        case SchemeAction::Kind::Rank2: {
            if (action.alpha == action.beta) throw InvalidTransform("alpha = beta");
            for (const auto& [mu, nu] : action.pairs) {
                check_pole_slot(action.alpha, mu);
                check_pole_slot(action.beta, nu);
                out.indices[action.alpha][mu] -= 1;
                out.indices[action.beta][nu] += 1;
            }
            break;
        }
        case SchemeAction::Kind::DpA2Model: {
            if (out.indices.size() != 2 || out.size() != 3)
                throw InvalidTransform("dpa2 model action needs the 3x3 two-pole scheme");
            out.indices[0][1] -= 1;
            out.indices[1][0] -= 1;
            out.indices[1][1] -= 1;
            for (Rat& v : out.infinity_indices) v += 1;
            break;
        }
        case SchemeAction::Kind::DpA1Model: {
            if (out.indices.size() != 3 || out.size() != 4)
                throw InvalidTransform("dpa1 model action needs the 4x4 three-pole scheme");
            for (Rat& v : out.indices[1]) v -= 1;
            out.indices[2][0] += 2;
            out.indices[2][1] += 2;
            break;
        }
        case SchemeAction::Kind::Sigma13Hat: {
            if (out.indices.empty() || out.indices[0].size() != 3 || out.indices[0][2] != 0)
                throw InvalidTransform("sigma13 action needs a 3x3 scheme with a kernel slot at pole 1");
            const Rat t1 = out.indices[0][0];
            out.indices[0][0] = -t1;
            out.indices[0][1] -= t1;
            for (Rat& v : out.infinity_indices) v += t1;
            break;
        }
        case SchemeAction::Kind::ScalarGauge: {
            if (action.pole >= out.indices.size()) throw InvalidTransform("scalar gauge pole");
            for (Rat& v : out.indices[action.pole]) v += action.shift;
            for (Rat& v : out.infinity_indices) v -= action.shift;
            break;
        }
    }
    return out;
}

}  // namespace isodyn
