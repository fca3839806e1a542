#include "isodyn/reduction.hpp"

#include "isodyn/errors.hpp"

namespace isodyn {

namespace {

Rat nonzero_or_throw(Rat value, const std::string& name) {
    if (value == 0) throw DegenerateParameter(name);
    return value;
}

struct A2Scheme {
    Rat t11, t12, t21, t22;   // indices at the finite poles
    Rat k1, k2, k3;           // indices at infinity
    Rat z1, z2;
};

A2Scheme a2_shape(const RiemannScheme& scheme) {
    if (scheme.poles.size() != 2 || scheme.size() != 3 || scheme.indices[0].size() != 3 ||
        scheme.indices[1].size() != 3 || scheme.indices[0][2] != 0 || scheme.indices[1][2] != 0)
        throw InvalidIndex("expected the 3x3 two-pole scheme shape");
    return {scheme.indices[0][0], scheme.indices[0][1], scheme.indices[1][0], scheme.indices[1][1],
            scheme.infinity_indices[0], scheme.infinity_indices[1], scheme.infinity_indices[2],
            scheme.poles[0], scheme.poles[1]};
}

struct A1Scheme {
    Rat t11, t12, t13;        // pole 1
    std::array<Rat, 4> t2;    // pole 2
    Rat t31, t32;             // pole 3 (equal in the double-eigenvalue family)
    Rat z1, z2, z3;
};

A1Scheme a1_shape(const RiemannScheme& scheme) {
    if (scheme.poles.size() != 3 || scheme.size() != 4 || scheme.indices[0].size() != 4 ||
        scheme.indices[1].size() != 4 || scheme.indices[2].size() != 4 ||
        scheme.indices[0][3] != 0 || scheme.indices[2][2] != 0 || scheme.indices[2][3] != 0)
        throw InvalidIndex("expected the 4x4 three-pole scheme shape");
    for (const Rat& v : scheme.infinity_indices)
        if (v != 0) throw InvalidIndex("the 4x4 family has no pole at infinity");
    return {scheme.indices[0][0],
            scheme.indices[0][1],
            scheme.indices[0][2],
            {scheme.indices[1][0], scheme.indices[1][1], scheme.indices[1][2], scheme.indices[1][3]},
            scheme.indices[2][0],
            scheme.indices[2][1],
            scheme.poles[0],
            scheme.poles[1],
            scheme.poles[2]};
}

/// Solves F(v) = target for an affine map F given by evaluation, by probing
/// F at zero and at the unit vectors.
std::vector<Rat> solve_affine_by_probing(
    const std::function<std::vector<Rat>(const std::vector<Rat>&)>& f, std::size_t arity,
    const std::vector<Rat>& target) {
    const std::vector<Rat> at_zero = f(std::vector<Rat>(arity, Rat(0)));
    const std::size_t dim = at_zero.size();
    RatMat m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(arity));
    for (std::size_t j = 0; j < arity; ++j) {
        std::vector<Rat> probe(arity, Rat(0));
        probe[j] = 1;
        const std::vector<Rat> at_probe = f(probe);
        for (std::size_t i = 0; i < dim; ++i)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = at_probe[i] - at_zero[i];
    }
    RatMat rhs(static_cast<Eigen::Index>(dim), 1);
    for (std::size_t i = 0; i < dim; ++i)
        rhs(static_cast<Eigen::Index>(i), 0) = target[i] - at_zero[i];
    const RatMat solution = solve_linear(m, rhs);
    std::vector<Rat> out(arity);
    for (std::size_t j = 0; j < arity; ++j) out[j] = solution(static_cast<Eigen::Index>(j), 0);
    return out;
}

RatMat a2_slice_b1() {
    RatMat b(3, 2);
    b << Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0);
    return b;
}

RatMat a2_slice_b2() {
    RatMat b(3, 2);
    b << Rat(0), Rat(1), Rat(0), Rat(1), Rat(1), Rat(1);
    return b;
}

RatMat a2_slice_c1(const A2Scheme& s, const Rat& alpha, const Rat& beta) {
    RatMat c(2, 3);
    c << s.t11, Rat(0), alpha, Rat(0), s.t12, beta;
    return c;
}

RatMat a2_slice_c2(const A2Scheme& s, const XYCoords& xy) {
    RatMat c(2, 3);
    c << Rat(-xy.x - s.t21), xy.x, s.t21, Rat(s.t22 - xy.y), xy.y, Rat(0);
    return c;
}

}  // namespace

std::pair<Rat, Rat> a2_accessory(const RiemannScheme& scheme, const XYCoords& xy) {
    const A2Scheme s = a2_shape(scheme);
    const std::vector<Rat> target = elem_sym({s.k1, s.k2, s.k3});
    if (-(s.t11 + s.t12 + s.t21 + s.t22) != s.k1 + s.k2 + s.k3)
        throw NoAccessorySolution("trace of the residue at infinity (Fuchs relation)");
    const RatMat b1 = a2_slice_b1(), b2 = a2_slice_b2();
    const RatMat a2_part = RatMat(-(b2 * a2_slice_c2(s, xy)));
    const auto coeffs = [&](const std::vector<Rat>& v) {
        const RatMat a_inf = RatMat(a2_part - b1 * a2_slice_c1(s, v[0], v[1]));
        const std::vector<Rat> e = elem_sym_of_spectrum(a_inf);
        return std::vector<Rat>{e[1], e[2]};
    };
    try {
        const std::vector<Rat> solution =
            solve_affine_by_probing(coeffs, 2, {target[1], target[2]});
        return {solution[0], solution[1]};
    } catch (const SingularMatrix&) {
        throw NoAccessorySolution("accessory system for the 3x3 slice is singular");
    }
}

DecompositionPoint a2_point_from_xy(const RiemannScheme& scheme, const XYCoords& xy) {
    const A2Scheme s = a2_shape(scheme);
    const auto [alpha, beta] = a2_accessory(scheme, xy);
    DecompositionPoint point;
    point.size = 3;
    point.poles.push_back({s.z1, a2_slice_b1(), a2_slice_c1(s, alpha, beta), {s.t11, s.t12}});
    point.poles.push_back({s.z2, a2_slice_b2(), a2_slice_c2(s, xy), {s.t21, s.t22}});
    point.theta_inf = {s.k1, s.k2, s.k3};
    assemble(point);  // enforces orthogonality, ranks, and the infinity spectrum
    return point;
}

namespace {

/// Similarity by S then per-slot rescales pinning the frame columns exactly.
DecompositionPoint apply_frame(const DecompositionPoint& point, const RatMat& s) {
    const RatMat s_inv = mat_inverse(s);
    DecompositionPoint out = point;
    for (auto& pole : out.poles) {
        pole.b = s * pole.b;
        pole.c_dag = pole.c_dag * s_inv;
    }
    return out;
}

void pin_column(PoleData& pole, Eigen::Index col, Eigen::Index axis) {
    const Rat scale = pole.b(axis, col);
    if (scale == 0) throw DegenerateFrame("pinned column vanished");
    for (Eigen::Index i = 0; i < pole.b.rows(); ++i) {
        if (i == axis) {
            if (pole.b(i, col) == 0) throw DegenerateFrame("pinned column vanished");
        } else if (pole.b(i, col) != 0) {
            throw DegenerateFrame("column not on its axis");
        }
    }
    pole.b.col(col) /= scale;
    pole.c_dag.row(col) *= scale;
}

}  // namespace

XYCoords a2_xy_from_point(const DecompositionPoint& point) {
    if (point.size != 3 || point.poles.size() != 2 || point.poles[0].rank() != 2 ||
        point.poles[1].rank() != 2)
        throw InvalidIndex("expected a 3x3 two-pole rank-2 point");
    const std::vector<RatVec> frame = {point.poles[0].b.col(0), point.poles[0].b.col(1),
                                       point.poles[1].b.col(0), point.poles[1].b.col(1)};
    DecompositionPoint canonical = apply_frame(point, projective_frame(frame));
    pin_column(canonical.poles[0], 0, 0);
    pin_column(canonical.poles[0], 1, 1);
    pin_column(canonical.poles[1], 0, 2);
    const RatMat& c2 = canonical.poles[1].c_dag;
    if (c2(1, 2) != 0) throw InconsistentSlice("second pole, row 2 kernel entry");
    if (c2(0, 2) != canonical.poles[1].theta[0])
        throw InconsistentSlice("second pole, row 1 pairing entry");
    return {c2(0, 1), c2(1, 1)};
}

XYCoords a2_psi_closed(const RiemannScheme& scheme, const XYCoords& xy) {
    const A2Scheme s = a2_shape(scheme);
    const auto [alpha, beta] = a2_accessory(scheme, xy);
    nonzero_or_throw(alpha, "alpha(x, y)");
    const Rat lead = (alpha - beta) / (alpha * nonzero_or_throw(s.t12 - s.t11 + 1, "theta_1^2 - theta_1^1 + 1"));
    const Rat xy_sum = xy.x + xy.y;
    const Rat base = alpha * xy_sum + s.t11 * xy.y;
    const Rat denom = nonzero_or_throw(alpha * (s.t21 + 1) - (alpha - beta) * xy.y,
                                       "alpha (theta_2^1 + 1) - (alpha - beta) y");
    const Rat x_bar = lead * base;
    // the scalar factor here is theta_2^1 - theta_2^2 + 1; deriving the map
    // symbolically pins it down, and only this reading matches the pipeline
    const Rat y_bar =
        lead * (alpha * (alpha * xy_sum + xy.y * (s.t12 + 1)) * (s.t21 - s.t22 + 1) / denom - base);
    return {x_bar, y_bar};
}

Rat a2_curve_q(const RiemannScheme& scheme, const XYCoords& xy) {
    const A2Scheme s = a2_shape(scheme);
    const Rat sum = xy.x + xy.y;
    return (s.t11 - s.t12) * sum * (sum + s.t21 - s.t22) +
           (s.t21 - s.t22) * (s.t22 * xy.x + s.t21 * xy.y);
}

FGPoint a2_to_fg_homogeneous(const RiemannScheme& scheme, const Rat& x_hom, const Rat& y_hom,
                             const Rat& z_hom) {
    const A2Scheme s = a2_shape(scheme);
    nonzero_or_throw(s.t21 - s.t22, "theta_2^1 - theta_2^2");
    const Rat sum = x_hom + y_hom;
    const auto f = P1::projective((s.t11 - s.t12) * sum, (s.t21 - s.t22) * z_hom);
    const auto g = P1::projective(s.t22 * x_hom + s.t21 * y_hom, sum + (s.t21 - s.t22) * z_hom);
    if (!f || !g) throw DegenerateParameter("(f, g) image (0/0)");
    return {*f, *g};
}

FGPoint a2_to_fg(const RiemannScheme& scheme, const XYCoords& xy) {
    return a2_to_fg_homogeneous(scheme, xy.x, xy.y, Rat(1));
}

XYCoords a2_from_fg(const RiemannScheme& scheme, const FGPoint& fg) {
    const A2Scheme s = a2_shape(scheme);
    if (fg.f.is_infinity() || fg.g.is_infinity())
        throw DegenerateParameter("finite (f, g) required for the affine chart");
    nonzero_or_throw(s.t11 - s.t12, "theta_1^1 - theta_1^2");
    const Rat sum = fg.f.value() * (s.t21 - s.t22) / (s.t11 - s.t12);
    RatMat m(2, 2);
    m << Rat(1), Rat(1), s.t22, s.t21;
    RatMat rhs(2, 1);
    rhs << sum, Rat(fg.g.value() * (sum + s.t21 - s.t22));
    const RatMat solution = solve_linear(m, rhs);
    return {solution(0, 0), solution(1, 0)};
}

ParamsA2 a2_param_dict(const RiemannScheme& scheme) {
    const A2Scheme s = a2_shape(scheme);
    ParamsA2 params;
    params.b = {Rat(s.t12 + s.k1), Rat(s.t12 + s.k2), Rat(s.t12 + s.k3), Rat(0),
                s.t21,             s.t22,             Rat(s.t11 - s.t12), Rat(-s.t12 - 1)};
    return params;
}

bool a2_verify_composition(const RiemannScheme& scheme, const XYCoords& xy) {
    const auto [model_params, model_fg] = dpa2_step(a2_param_dict(scheme), a2_to_fg(scheme, xy));

    DecompositionPoint point = a2_point_from_xy(scheme, xy);
    point = rank1_transform(point, {1, 0, {{0, 0}}});
    point = sigma13_hat(point);
    point = rank1_transform(point, {1, 0, {{1, 0}}});
    point = sigma13_hat(point);

    const RiemannScheme evolved = scheme_of(point);
    const FGPoint chain_fg = a2_to_fg(evolved, a2_xy_from_point(point));
    return model_params == a2_param_dict(evolved) && model_fg == chain_fg;
}

// ---------------------------------------------------------------------------
// 4x4 family
// ---------------------------------------------------------------------------

namespace {

RatMat a1_slice_b1() {
    RatMat b = RatMat::Zero(4, 3);
    b(0, 0) = b(1, 1) = b(2, 2) = Rat(1);
    return b;
}

RatMat a1_slice_b3() {
    RatMat b(4, 2);
    b << Rat(0), Rat(1), Rat(0), Rat(1), Rat(0), Rat(1), Rat(1), Rat(1);
    return b;
}

RatMat a1_slice_c1(const A1Scheme& s, const std::array<Rat, 3>& fill) {
    RatMat c = RatMat::Zero(3, 4);
    c(0, 0) = s.t11;
    c(1, 1) = s.t12;
    c(2, 2) = s.t13;
    c(0, 3) = fill[0];
    c(1, 3) = fill[1];
    c(2, 3) = fill[2];
    return c;
}

RatMat a1_slice_c3(const A1Scheme& s, const XYCoords& xy) {
    RatMat c = RatMat::Zero(2, 4);
    c(0, 0) = -(xy.x + s.t31);
    c(0, 2) = xy.x;
    c(0, 3) = s.t31;
    c(1, 1) = s.t32 - xy.y;
    c(1, 2) = xy.y;
    return c;
}

/// Exact eigen-decomposition of a matrix with prescribed simple rational
/// eigenvalues, normalized to the orthogonality condition.
PoleData eigen_pole(const Rat& z, const RatMat& a, const std::vector<Rat>& theta) {
    const Eigen::Index m = a.rows();
    PoleData pole;
    pole.z = z;
    pole.theta = theta;
    pole.b = RatMat(m, static_cast<Eigen::Index>(theta.size()));
    pole.c_dag = RatMat(static_cast<Eigen::Index>(theta.size()), m);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const RatMat shifted = a - theta[j] * identity(m);
        const std::vector<RatVec> right = kernel_basis(shifted);
        const std::vector<RatVec> left = kernel_basis(RatMat(shifted.transpose()));
        if (right.size() != 1 || left.size() != 1)
            throw SpectrumMismatch("eigenvalue " + to_string(theta[j]) + " is not simple");
        const RatVec& b = right[0];
        const RatRowVec c = left[0].transpose();
        const Rat pairing = nonzero_or_throw((c * b)(0, 0), "eigenvector pairing");
        pole.b.col(static_cast<Eigen::Index>(j)) = b;
        pole.c_dag.row(static_cast<Eigen::Index>(j)) = (theta[j] / pairing) * c;
    }
    return pole;
}

}  // namespace

std::array<Rat, 3> a1_accessory(const RiemannScheme& scheme, const XYCoords& xy) {
    const A1Scheme s = a1_shape(scheme);
    const std::vector<Rat> t2(s.t2.begin(), s.t2.end());
    const std::vector<Rat> target = elem_sym(t2);
    if (-(s.t11 + s.t12 + s.t13 + s.t31 + s.t32) != s.t2[0] + s.t2[1] + s.t2[2] + s.t2[3])
        throw NoAccessorySolution("trace of the second residue (Fuchs relation)");
    const RatMat b1 = a1_slice_b1();
    const RatMat a3 = RatMat(a1_slice_b3() * a1_slice_c3(s, xy));
    const auto coeffs = [&](const std::vector<Rat>& v) {
        const RatMat a2 = RatMat(-(b1 * a1_slice_c1(s, {v[0], v[1], v[2]})) - a3);
        const std::vector<Rat> e = elem_sym_of_spectrum(a2);
        return std::vector<Rat>{e[1], e[2], e[3]};
    };
    try {
        const std::vector<Rat> solution =
            solve_affine_by_probing(coeffs, 3, {target[1], target[2], target[3]});
        return {solution[0], solution[1], solution[2]};
    } catch (const SingularMatrix&) {
        throw NoAccessorySolution("accessory system for the 4x4 slice is singular");
    }
}

DecompositionPoint a1_point_from_xy(const RiemannScheme& scheme, const XYCoords& xy) {
    const A1Scheme s = a1_shape(scheme);
    const std::array<Rat, 3> fill = a1_accessory(scheme, xy);
    const RatMat b1 = a1_slice_b1();
    const RatMat c1 = a1_slice_c1(s, fill);
    const RatMat b3 = a1_slice_b3();
    const RatMat c3 = a1_slice_c3(s, xy);
    const RatMat a2 = RatMat(-(b1 * c1) - b3 * c3);

    DecompositionPoint point;
    point.size = 4;
    point.poles.push_back({s.z1, b1, c1, {s.t11, s.t12, s.t13}});
    point.poles.push_back(eigen_pole(s.z2, a2, std::vector<Rat>(s.t2.begin(), s.t2.end())));
    point.poles.push_back({s.z3, b3, c3, {s.t31, s.t32}});
    point.theta_inf = {Rat(0), Rat(0), Rat(0), Rat(0)};
    assemble(point);
    return point;
}

XYCoords a1_xy_from_point(const DecompositionPoint& point) {
    if (point.size != 4 || point.poles.size() != 3 || point.poles[0].rank() != 3 ||
        point.poles[2].rank() != 2)
        throw InvalidIndex("expected a 4x4 three-pole point of ranks 3, 4, 2");
    if (point.poles[2].theta[0] != point.poles[2].theta[1])
        throw InvalidIndex("third pole must carry the double eigenvalue");

    // stage 1: frame on the pole-1 eigenvectors and the pole-3 eigenplane
    RatMat m0(4, 4);
    m0.col(0) = point.poles[0].b.col(0);
    m0.col(1) = point.poles[0].b.col(1);
    m0.col(2) = point.poles[0].b.col(2);
    m0.col(3) = point.poles[2].b.col(0);
    RatMat m0_inv;
    try {
        m0_inv = mat_inverse(m0);
    } catch (const SingularMatrix&) {
        throw DegenerateFrame("pole-1 eigenvectors and the pole-3 plane are dependent");
    }
    const RatVec c_hat = m0_inv * point.poles[2].b.col(1);
    RatMat s = m0_inv;
    for (Eigen::Index i = 0; i < 3; ++i) {
        if (c_hat(i) == 0) throw DegenerateFrame("pole-3 plane touches a frame axis");
        s.row(i) /= c_hat(i);
    }
    DecompositionPoint canonical = apply_frame(point, s);
    pin_column(canonical.poles[0], 0, 0);
    pin_column(canonical.poles[0], 1, 1);
    pin_column(canonical.poles[0], 2, 2);

    const auto repin_pole3 = [](PoleData& pole) {
        // mix the double-eigenvalue basis so that b_3,1 = e4, b_3,2 = ones
        RatMat t(2, 2);
        t(0, 0) = pole.b(3, 0) - pole.b(0, 0);
        t(0, 1) = pole.b(3, 1) - pole.b(0, 1);
        t(1, 0) = pole.b(0, 0);
        t(1, 1) = pole.b(0, 1);
        RatMat t_inv;
        try {
            t_inv = mat_inverse(t);
        } catch (const SingularMatrix&) {
            throw DegenerateFrame("pole-3 plane degenerate against e4 and ones");
        }
        const RatMat pinned = pole.b * t_inv;
        RatMat expected(4, 2);
        expected << Rat(0), Rat(1), Rat(0), Rat(1), Rat(0), Rat(1), Rat(1), Rat(1);
        if (!equal(pinned, expected)) throw DegenerateFrame("pole-3 plane is not span(e4, ones)");
        pole.b = pinned;
        pole.c_dag = t * pole.c_dag;
    };
    repin_pole3(canonical.poles[2]);

    // stage 2: residual gauge (a, b, 1) fixing the slice zero pattern
    const RatMat& c3 = canonical.poles[2].c_dag;
    const Rat a_den = nonzero_or_throw(c3(0, 1) + c3(1, 1), "residual gauge divisor c12 + c22");
    const Rat b_den = nonzero_or_throw(c3(0, 0) + c3(1, 0), "residual gauge divisor c11 + c21");
    const Rat a = c3(1, 1) / a_den;
    const Rat b = -c3(1, 0) / b_den;
    if (a + b == 0) throw ResidualGaugeUnsolvable("gauge matrix is singular (a + b = 0)");

    RatMat p = identity(4);
    p(0, 3) = p(1, 3) = p(2, 3) = b;
    p(3, 3) = a + b;
    canonical = apply_frame(canonical, p);
    pin_column(canonical.poles[0], 0, 0);
    pin_column(canonical.poles[0], 1, 1);
    pin_column(canonical.poles[0], 2, 2);
    repin_pole3(canonical.poles[2]);

    const RatMat& c3_final = canonical.poles[2].c_dag;
    if (c3_final(0, 1) != 0 || c3_final(1, 0) != 0)
        throw InconsistentSlice("residual gauge did not reach the slice zero pattern");
    return {c3_final(0, 2), c3_final(1, 2)};
}

Rat a1_curve_q(const RiemannScheme& scheme, const XYCoords& xy) {
    const A1Scheme s = a1_shape(scheme);
    const Rat t3 = s.t31;
    const Rat linear_part = (s.t13 - s.t12 - t3) * (s.t13 - s.t11) * xy.x +
                            (s.t13 - s.t11 - t3) * (s.t13 - s.t12) * xy.y;
    const Rat square_root_part = (s.t13 - s.t11) * xy.x + (s.t13 - s.t12) * xy.y;
    return square_root_part * square_root_part + (s.t11 - s.t12) * linear_part;
}

FGPoint a1_to_fg(const RiemannScheme& scheme, const XYCoords& xy) {
    const A1Scheme s = a1_shape(scheme);
    const Rat t3 = s.t31;
    const Rat p = s.t13 - s.t11;
    const Rat q = s.t12 - s.t13;
    const auto f = P1::projective(-(s.t12 * p * xy.x - s.t11 * q * xy.y), p * xy.x - q * xy.y);
    const auto g = P1::projective(s.t12 * p * (xy.x + t3) - s.t11 * q * (xy.y - t3),
                                  p * (xy.x + t3) - q * (xy.y - t3));
    if (!f || !g) throw DegenerateParameter("(f, g) image (0/0)");
    return {*f, *g};
}

XYCoords a1_from_fg(const RiemannScheme& scheme, const FGPoint& fg) {
    const A1Scheme s = a1_shape(scheme);
    if (fg.f.is_infinity() || fg.g.is_infinity())
        throw DegenerateParameter("finite (f, g) required for the affine chart");
    const Rat t3 = s.t31;
    const Rat p = s.t13 - s.t11;
    const Rat q = s.t12 - s.t13;
    const Rat f = fg.f.value(), g = fg.g.value();
    RatMat m(2, 2);
    m << Rat(p * (f + s.t12)), Rat(-q * (f + s.t11)), Rat(p * (g - s.t12)), Rat(-q * (g - s.t11));
    RatMat rhs(2, 1);
    rhs << Rat(0), Rat(-t3 * (p * (g - s.t12) + q * (g - s.t11)));
    try {
        const RatMat solution = solve_linear(m, rhs);
        return {solution(0, 0), solution(1, 0)};
    } catch (const SingularMatrix&) {
        throw DegenerateParameter("the (f, g) chart inversion is singular here");
    }
}

ParamsA1 a1_param_dict(const RiemannScheme& scheme) {
    const A1Scheme s = a1_shape(scheme);
    ParamsA1 params;
    params.b = s.t31 / 2;
    params.bi = {Rat(s.t2[0] + params.b), Rat(s.t2[1] + params.b), Rat(s.t2[2] + params.b),
                 Rat(s.t2[3] + params.b), s.t11, s.t12, s.t13, Rat(-1)};
    return params;
}

bool a1_verify_composition(const RiemannScheme& scheme, const XYCoords& xy) {
    const auto [model_params, model_fg] = dpa1_step(a1_param_dict(scheme), a1_to_fg(scheme, xy));

    DecompositionPoint point = a1_point_from_xy(scheme, xy);
    point = rank2_transform(point, {1, 2, {{0, 0}, {1, 1}}});
    point = rank2_transform(point, {1, 2, {{2, 0}, {3, 1}}});

    const RiemannScheme evolved = scheme_of(point);
    const FGPoint chain_fg = a1_to_fg(evolved, a1_xy_from_point(point));
    return model_params == a1_param_dict(evolved) && model_fg == chain_fg;
}

}  // namespace isodyn
