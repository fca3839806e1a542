#pragma once

#include "isodyn/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isodyn {

/// Point of the projective line over Q: a finite rational or infinity.
class P1 {
public:
    P1() = default;
    P1(Rat v) : num_(std::move(v)), den_(1) {}
    P1(long v) : num_(v), den_(1) {}

    static P1 infinity() {
        P1 p;
        p.num_ = 1;
        p.den_ = 0;
        return p;
    }

    /// [n : d] up to scale; nullopt for the indeterminate [0 : 0].
    static std::optional<P1> projective(const Rat& n, const Rat& d) {
        if (d != 0) return P1(Rat(n / d));
        if (n == 0) return std::nullopt;
        return infinity();
    }

    bool is_infinity() const { return den_ == 0; }
    const Rat& value() const { return num_; }  // finite points only
    const Rat& num() const { return num_; }
    const Rat& den() const { return den_; }

    bool operator==(const P1& other) const { return num_ == other.num_ && den_ == other.den_; }
    bool operator!=(const P1& other) const { return !(*this == other); }

private:
    Rat num_ = 0;
    Rat den_ = 1;
};

std::string to_string(const P1& p);

struct FGPoint {
    P1 f, g;
    bool operator==(const FGPoint& other) const { return f == other.f && g == other.g; }
};

/// z -> (a z + b)/(c z + d) extended to P1 as [a z0 + b z1 : c z0 + d z1].
struct Mobius {
    Rat a, b, c, d;

    std::optional<P1> apply(const P1& z) const {
        return P1::projective(a * z.num() + b * z.den(), c * z.num() + d * z.den());
    }
    bool indeterminate_at(const P1& z) const { return !apply(z).has_value(); }
};

struct ParamsA2 {
    std::array<Rat, 8> b;
    Rat delta() const {
        Rat s(0);
        for (const Rat& v : b) s += v;
        return s;
    }
    bool operator==(const ParamsA2& other) const { return b == other.b; }
};

struct ParamsA1 {
    Rat b;
    std::array<Rat, 8> bi;
    Rat delta() const {
        Rat s(0);
        for (const Rat& v : bi) s += v;
        return s;
    }
    bool operator==(const ParamsA1& other) const { return b == other.b && bi == other.bi; }
};

struct LabeledPoint {
    std::string label;
    FGPoint point;
};

/// p1..4 = (b_i, -b_i), p5,6 = (inf, b_5/6), p7,8 = (-b_7/8, inf).
std::vector<LabeledPoint> dpa2_base_points(const ParamsA2& params);

/// p1..4 = (b + b_i, b - b_i) on f + g = 2b; p5..8 = (-b_i, b_i) on f + g = 0.
std::vector<LabeledPoint> dpa1_base_points(const ParamsA1& params);

/// Linear solve of the first defining product equation, as the fractional
/// linear map f -> fbar on the fiber through g. Exposed so the suites can
/// verify the exact 0/0 behaviour at the indeterminate points.
Mobius dpa2_first_solve(const ParamsA2& params, const P1& g);
/// Second product equation: g -> gbar on the fiber through fbar (parameters
/// taken before the step; the evolved b7, b8 are formed internally).
Mobius dpa2_second_solve(const ParamsA2& params, const P1& f_bar);

Mobius dpa1_first_solve(const ParamsA1& params, const P1& g);
Mobius dpa1_second_solve(const ParamsA1& params, const P1& f_bar);
Mobius dpa1_inv_first_solve(const ParamsA1& params, const P1& f_bar);
Mobius dpa1_inv_second_solve(const ParamsA1& params, const P1& g);

std::pair<ParamsA2, FGPoint> dpa2_step(const ParamsA2& params, const FGPoint& pt);
std::pair<ParamsA1, FGPoint> dpa1_step(const ParamsA1& params, const FGPoint& pt);
std::pair<ParamsA1, FGPoint> dpa1_inverse(const ParamsA1& params, const FGPoint& pt);

}  // namespace isodyn
