#include "isodyn/dpmodels.hpp"

#include "isodyn/errors.hpp"

#include <algorithm>

namespace isodyn {

std::string to_string(const P1& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

namespace {

// dense univariate polynomials, ascending coefficients
using Poly = std::vector<Rat>;

Poly poly_const(Rat c) { return {std::move(c)}; }

// a0 + a1 t
Poly poly_linear(Rat a0, Rat a1) { return {std::move(a0), std::move(a1)}; }

Poly poly_add(const Poly& p, const Poly& q) {
    Poly r(std::max(p.size(), q.size()), Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    return r;
}

Poly poly_sub(const Poly& p, const Poly& q) {
    Poly r(std::max(p.size(), q.size()), Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
    return r;
}

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

std::size_t degree(const Poly& p) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) d = i;
    return d;
}

// value of the degree-d homogenization at [n : m]
Rat eval_homogeneous(const Poly& p, const Rat& n, const Rat& m, std::size_t d) {
    Rat value(0);
    Rat n_pow(1);
    std::vector<Rat> m_pows(d + 1);
    m_pows[0] = 1;
    for (std::size_t i = 1; i <= d; ++i) m_pows[i] = m_pows[i - 1] * m;
    for (std::size_t k = 0; k <= d; ++k) {
        if (k < p.size() && p[k] != 0) value += p[k] * n_pow * m_pows[d - k];
        n_pow *= n;
    }
    return value;
}

/// The four Mobius entries of a half-map solve, as polynomials in the fiber
/// coordinate. Evaluation homogenizes all four to their common degree, which
/// is what extends the solve to the fiber at infinity.
struct FiberSolve {
    Poly a, b, c, d;

    Mobius at(const P1& t) const {
        const std::size_t deg = std::max(std::max(degree(a), degree(b)), std::max(degree(c), degree(d)));
        return Mobius{eval_homogeneous(a, t.num(), t.den(), deg),
                      eval_homogeneous(b, t.num(), t.den(), deg),
                      eval_homogeneous(c, t.num(), t.den(), deg),
                      eval_homogeneous(d, t.num(), t.den(), deg)};
    }
};

/// Solve of K(t)/W(t) = (x + t)(y + t) for y as a Mobius map of x:
/// y = [-t x + (K/W - t^2)] / [x + t], cleared of the W denominator.
FiberSolve product_equation_solve(const Poly& k, const Poly& w) {
    const Poly t = poly_linear(Rat(0), Rat(1));
    const Poly tw = poly_mul(t, w);
    return FiberSolve{
        poly_sub(poly_const(Rat(0)), tw),             // -t W
        poly_sub(k, poly_mul(t, tw)),                 // K - t^2 W
        w,                                            //  W
        tw                                            //  t W
    };
}

P1 apply_or_throw(const Mobius& mobius, const P1& z, const char* what) {
    const std::optional<P1> image = mobius.apply(z);
    if (!image) throw DegenerateParameter(std::string(what) + " indeterminate (0/0)");
    return *image;
}

void check_base_points(const std::vector<LabeledPoint>& base, const FGPoint& pt) {
    for (const auto& lp : base)
        if (lp.point == pt) throw BasePointHit(lp.label, 0);
}

}  // namespace

std::vector<LabeledPoint> dpa2_base_points(const ParamsA2& params) {
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < 4; ++i)
        pts.push_back({"p" + std::to_string(i + 1), {P1(params.b[i]), P1(Rat(-params.b[i]))}});
    pts.push_back({"p5", {P1::infinity(), P1(params.b[4])}});
    pts.push_back({"p6", {P1::infinity(), P1(params.b[5])}});
    pts.push_back({"p7", {P1(Rat(-params.b[6])), P1::infinity()}});
    pts.push_back({"p8", {P1(Rat(-params.b[7])), P1::infinity()}});
    return pts;
}

std::vector<LabeledPoint> dpa1_base_points(const ParamsA1& params) {
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < 4; ++i)
        pts.push_back({"p" + std::to_string(i + 1),
                       {P1(Rat(params.b + params.bi[i])), P1(Rat(params.b - params.bi[i]))}});
    for (int i = 4; i < 8; ++i)
        pts.push_back({"p" + std::to_string(i + 1), {P1(Rat(-params.bi[i])), P1(params.bi[i])}});
    return pts;
}

Mobius dpa2_first_solve(const ParamsA2& params, const P1& g) {
    // (f + g)(fbar + g) = prod(g + b_i, i<=4) / ((g - b5)(g - b6))
    Poly k = poly_const(Rat(1));
    for (int i = 0; i < 4; ++i) k = poly_mul(k, poly_linear(params.b[i], Rat(1)));
    const Poly w = poly_mul(poly_linear(Rat(-params.b[4]), Rat(1)), poly_linear(Rat(-params.b[5]), Rat(1)));
    return product_equation_solve(k, w).at(g);
}

Mobius dpa2_second_solve(const ParamsA2& params, const P1& f_bar) {
    // (fbar + g)(fbar + gbar) = prod(fbar - b_i, i<=4) / ((fbar + b7 - delta)(fbar + b8 - delta))
    const Rat delta = params.delta();
    Poly k = poly_const(Rat(1));
    for (int i = 0; i < 4; ++i) k = poly_mul(k, poly_linear(Rat(-params.b[i]), Rat(1)));
    const Poly w = poly_mul(poly_linear(Rat(params.b[6] - delta), Rat(1)),
                            poly_linear(Rat(params.b[7] - delta), Rat(1)));
    return product_equation_solve(k, w).at(f_bar);
}

std::pair<ParamsA2, FGPoint> dpa2_step(const ParamsA2& params, const FGPoint& pt) {
    check_base_points(dpa2_base_points(params), pt);
    const P1 f_bar = apply_or_throw(dpa2_first_solve(params, pt.g), pt.f, "dpa2 first solve");
    const P1 g_bar = apply_or_throw(dpa2_second_solve(params, f_bar), pt.g, "dpa2 second solve");
    ParamsA2 out = params;
    const Rat delta = params.delta();
    out.b[4] += delta;
    out.b[5] += delta;
    out.b[6] -= delta;
    out.b[7] -= delta;
    return {out, {f_bar, g_bar}};
}

namespace {

/// Entries of the dpa1 solves share one shape: with U = t - u1, V = t - u2 and
/// quartics K, W in the fiber coordinate t, the equation
/// (x + U)(y + V) W = (x + t)(y + t) K solved for y as a Mobius map of x is
///   y = [ (t K - V W) x + (t^2 K - U V W) ] / [ (W - K) x + (U W - t K) ].
FiberSolve dpa1_shifted_solve(const Poly& k, const Poly& w, const Rat& u1, const Rat& u2) {
    const Poly t = poly_linear(Rat(0), Rat(1));
    const Poly shifted_u = poly_linear(Rat(-u1), Rat(1));  // t - u1
    const Poly shifted_v = poly_linear(Rat(-u2), Rat(1));  // t - u2
    const Poly tk = poly_mul(t, k);
    return FiberSolve{
        poly_sub(tk, poly_mul(shifted_v, w)),
        poly_sub(poly_mul(t, tk), poly_mul(poly_mul(shifted_u, shifted_v), w)),
        poly_sub(w, k),
        poly_sub(poly_mul(shifted_u, w), tk)};
}

}  // namespace

Mobius dpa1_first_solve(const ParamsA1& params, const P1& g) {
    // (f + g - 2b)(fbar + g - b - bbar) G58 = (f + g)(fbar + g) G14
    const Rat b = params.b;
    const Rat b_bar = b - params.delta();
    Poly g14 = poly_const(Rat(1));
    Poly g58 = poly_const(Rat(1));
    for (int i = 0; i < 4; ++i) g14 = poly_mul(g14, poly_linear(Rat(params.bi[i] - b), Rat(1)));
    for (int i = 4; i < 8; ++i) g58 = poly_mul(g58, poly_linear(Rat(-params.bi[i]), Rat(1)));
    return dpa1_shifted_solve(g14, g58, Rat(2 * b), Rat(b + b_bar)).at(g);
}

Mobius dpa1_second_solve(const ParamsA1& params, const P1& f_bar) {
    // (fbar + g - b - bbar)(fbar + gbar - 2 bbar) F58 = (fbar + g)(fbar + gbar) F14
    const Rat b = params.b;
    const Rat b_bar = b - params.delta();
    Poly f14 = poly_const(Rat(1));
    Poly f58 = poly_const(Rat(1));
    for (int i = 0; i < 4; ++i) f14 = poly_mul(f14, poly_linear(Rat(-b_bar - params.bi[i]), Rat(1)));
    for (int i = 4; i < 8; ++i) f58 = poly_mul(f58, poly_linear(params.bi[i], Rat(1)));
    return dpa1_shifted_solve(f14, f58, Rat(b + b_bar), Rat(2 * b_bar)).at(f_bar);
}

Mobius dpa1_inv_first_solve(const ParamsA1& params, const P1& f_bar) {
    // the second product equation read backwards: unknown g from (fbar, gbar)
    const Rat b_bar = params.b;
    const Rat b = b_bar + params.delta();
    Poly f14 = poly_const(Rat(1));
    Poly f58 = poly_const(Rat(1));
    for (int i = 0; i < 4; ++i) f14 = poly_mul(f14, poly_linear(Rat(-b_bar - params.bi[i]), Rat(1)));
    for (int i = 4; i < 8; ++i) f58 = poly_mul(f58, poly_linear(params.bi[i], Rat(1)));
    return dpa1_shifted_solve(f14, f58, Rat(2 * b_bar), Rat(b + b_bar)).at(f_bar);
}

Mobius dpa1_inv_second_solve(const ParamsA1& params, const P1& g) {
    // the first product equation read backwards: unknown f from (fbar, g)
    const Rat b_bar = params.b;
    const Rat b = b_bar + params.delta();
    Poly g14 = poly_const(Rat(1));
    Poly g58 = poly_const(Rat(1));
    for (int i = 0; i < 4; ++i) g14 = poly_mul(g14, poly_linear(Rat(params.bi[i] - b), Rat(1)));
    for (int i = 4; i < 8; ++i) g58 = poly_mul(g58, poly_linear(Rat(-params.bi[i]), Rat(1)));
    return dpa1_shifted_solve(g14, g58, Rat(b + b_bar), Rat(2 * b)).at(g);
}

std::pair<ParamsA1, FGPoint> dpa1_step(const ParamsA1& params, const FGPoint& pt) {
    check_base_points(dpa1_base_points(params), pt);
    const P1 f_bar = apply_or_throw(dpa1_first_solve(params, pt.g), pt.f, "dpa1 first solve");
    const P1 g_bar = apply_or_throw(dpa1_second_solve(params, f_bar), pt.g, "dpa1 second solve");
    ParamsA1 out = params;
    out.b -= params.delta();
    return {out, {f_bar, g_bar}};
}

std::pair<ParamsA1, FGPoint> dpa1_inverse(const ParamsA1& params, const FGPoint& pt) {
    check_base_points(dpa1_base_points(params), pt);
    const P1 g = apply_or_throw(dpa1_inv_first_solve(params, pt.f), pt.g, "dpa1 inverse first solve");
    const P1 f = apply_or_throw(dpa1_inv_second_solve(params, g), pt.f, "dpa1 inverse second solve");
    ParamsA1 out = params;
    out.b += params.delta();
    return {out, {f, g}};
}

}  // namespace isodyn
