#include "isodyn/errors.hpp"
#include "isodyn/reduction.hpp"
#include "isodyn/suites.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace isodyn;
using testing::a1_scheme_fixture;
using testing::a2_scheme_fixture;
using testing::random_gauge;

TEST_CASE("a2 slice construction") {
    const RiemannScheme scheme = a2_scheme_fixture();
    const XYCoords xy{rat(4, 7), rat(-2, 9)};
    const DecompositionPoint point = a2_point_from_xy(scheme, xy);

    SUBCASE("the second pole rows carry the slice pattern") {
        const RatMat& c2 = point.poles[1].c_dag;
        const Rat t21 = scheme.indices[1][0], t22 = scheme.indices[1][1];
        CHECK(c2(0, 0) == -xy.x - t21);
        CHECK(c2(0, 1) == xy.x);
        CHECK(c2(0, 2) == t21);
        CHECK(c2(1, 0) == t22 - xy.y);
        CHECK(c2(1, 1) == xy.y);
        CHECK(c2(1, 2) == 0);
    }

    SUBCASE("read-back is the identity") {
        CHECK(a2_xy_from_point(point) == xy);
        Rng rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            const XYCoords probe{rng.rational(-15, 15, 1, 8), rng.rational(-15, 15, 1, 8)};
            CHECK(a2_xy_from_point(a2_point_from_xy(scheme, probe)) == probe);
        }
    }

    SUBCASE("gauge invariance of the read-off") {
        Rng rng(23);
        for (int trial = 0; trial < 10; ++trial)
            CHECK(a2_xy_from_point(random_gauge(point, rng)) == xy);
    }

    SUBCASE("a Fuchs-violating prescription is rejected") {
        RiemannScheme broken = scheme;
        broken.infinity_indices[0] += 1;
        CHECK_THROWS_AS(a2_point_from_xy(broken, xy), NoAccessorySolution);
    }
}

TEST_CASE("a2 closed form versus pipeline") {
    const RiemannScheme scheme = a2_scheme_fixture();
    Rng rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        const XYCoords xy{rng.rational(-10, 10, 1, 6), rng.rational(-10, 10, 1, 6)};
        const DecompositionPoint stepped = rank1_transform(a2_point_from_xy(scheme, xy), {0, 1, {{0, 0}}});
        CHECK(a2_psi_closed(scheme, xy) == a2_xy_from_point(stepped));
        // the nearby mis-reading (theta_1^1 - theta_2^2 + 1) of the scalar
        // factor does not reproduce the map
        const auto [alpha, beta] = a2_accessory(scheme, xy);
        const Rat t11 = scheme.indices[0][0], t12 = scheme.indices[0][1];
        const Rat t21 = scheme.indices[1][0], t22 = scheme.indices[1][1];
        const Rat lead = (alpha - beta) / (alpha * (t12 - t11 + 1));
        const Rat base = alpha * (xy.x + xy.y) + t11 * xy.y;
        const Rat denom = alpha * (t21 + 1) - (alpha - beta) * xy.y;
        const Rat misread_y =
            lead * (alpha * (alpha * (xy.x + xy.y) + xy.y * (t12 + 1)) * (t11 - t22 + 1) / denom - base);
        CHECK(misread_y != a2_xy_from_point(stepped).y);
        // the scheme shift accompanying the map
        CHECK(stepped.poles[0].theta[0] == t11 - 1);
        CHECK(stepped.poles[1].theta[0] == t21 + 1);
    }
}

TEST_CASE("a2 curve incidence and the (f, g) chart") {
    const RiemannScheme scheme = a2_scheme_fixture();
    const Rat t11 = scheme.indices[0][0], t12 = scheme.indices[0][1];
    const Rat t21 = scheme.indices[1][0], t22 = scheme.indices[1][1];

    CHECK(a2_curve_q(scheme, {Rat(0), Rat(0)}) == 0);
    CHECK(a2_curve_q(scheme, {Rat(-t21), t22}) == 0);
    CHECK(a2_curve_q(scheme, {Rat(1), Rat(1)}) != 0);

    SUBCASE("third base point follows the symmetric denominator pattern") {
        const Rat k3 = scheme.infinity_indices[2];
        const XYCoords symmetric{Rat((t11 + t21 + k3) * (t12 + k3) / (t11 - t12)),
                                 Rat(-(t11 + t22 + k3) * (t12 + k3) / (t11 - t12))};
        CHECK(a2_curve_q(scheme, symmetric) == 0);
        // the variant with t11 - t22 in the y-denominator misses the curve
        const XYCoords variant{symmetric.x, Rat(-(t11 + t22 + k3) * (t12 + k3) / (t11 - t22))};
        CHECK(a2_curve_q(scheme, variant) != 0);
    }

    SUBCASE("images of the marked points") {
        CHECK(a2_to_fg(scheme, {Rat(0), Rat(0)}) == FGPoint{P1(Rat(0)), P1(Rat(0))});
        CHECK(a2_to_fg_homogeneous(scheme, Rat(0), Rat(1), Rat(0)) == FGPoint{P1::infinity(), P1(t21)});
        CHECK(a2_to_fg_homogeneous(scheme, Rat(1), Rat(0), Rat(0)) == FGPoint{P1::infinity(), P1(t22)});
    }

    SUBCASE("blown-down loci land at the remaining model base points") {
        // the line through (-t21 : t22 : 1) and (1 : -1 : 0) maps to the
        // constant f = t12 - t11, the remaining g-infinity base point's f
        for (const Rat t : {rat(1, 2), Rat(3), rat(-7, 5)}) {
            const FGPoint image =
                a2_to_fg_homogeneous(scheme, Rat(-t21 + t), Rat(t22 - t), Rat(1));
            CHECK(image.f == P1(Rat(t12 - t11)));
        }
        // approaching (1 : -1 : 0) along the distinguished second-order
        // direction gives f = t12 + 1
        const Rat v = (t11 - t12) / ((t21 - t22) * (t12 + 1));
        for (const Rat u : {rat(1, 3), rat(-2, 7)}) {
            const FGPoint image = a2_to_fg_homogeneous(scheme, Rat(1), Rat(u - 1), Rat(v * u));
            CHECK(image.f == P1(Rat(t12 + 1)));
        }
    }

    SUBCASE("round trip through (f, g)") {
        Rng rng(37);
        for (int trial = 0; trial < 10; ++trial) {
            const XYCoords xy{rng.rational(-12, 12, 1, 7), rng.rational(-12, 12, 1, 7)};
            try {
                CHECK(a2_from_fg(scheme, a2_to_fg(scheme, xy)) == xy);
            } catch (const DegenerateParameter&) {
                // g at infinity has no affine preimage in this chart
            }
        }
    }
}

TEST_CASE("the map is indeterminate exactly where the accessory solve degenerates") {
    // every finite base point sits on the (2,2)-curve, and on that curve the
    // accessory system is singular, so the whole pipeline is 0/0 there
    const RiemannScheme scheme = a2_scheme_fixture();
    const Rat t11 = scheme.indices[0][0], t12 = scheme.indices[0][1];
    const Rat t21 = scheme.indices[1][0], t22 = scheme.indices[1][1];
    std::vector<XYCoords> base;
    for (int j = 0; j < 3; ++j) {
        const Rat k = scheme.infinity_indices[static_cast<std::size_t>(j)];
        base.push_back({Rat((t11 + t21 + k) * (t12 + k) / (t11 - t12)),
                        Rat(-(t11 + t22 + k) * (t12 + k) / (t11 - t12))});
    }
    base.push_back({Rat(0), Rat(0)});
    base.push_back({Rat(-t21), t22});
    for (const XYCoords& p : base) {
        CHECK(a2_curve_q(scheme, p) == 0);
        CHECK_THROWS_AS(a2_psi_closed(scheme, p), NoAccessorySolution);
        CHECK_THROWS_AS(a2_point_from_xy(scheme, p), NoAccessorySolution);
    }

    const RiemannScheme e7 = a1_scheme_fixture();
    const Rat u1 = e7.indices[0][0], u2 = e7.indices[0][1], u3 = e7.indices[0][2];
    const Rat t3 = e7.indices[2][0];
    std::vector<XYCoords> base1;
    for (int j = 0; j < 4; ++j) {
        const Rat v = e7.indices[1][static_cast<std::size_t>(j)];
        base1.push_back({Rat((u1 + v + t3) * (u3 + v) / (u1 - u3)),
                         Rat(-(u2 + v + t3) * (u3 + v) / (u2 - u3))});
    }
    base1.push_back({Rat(0), Rat(0)});
    base1.push_back({Rat(-t3), t3});
    for (const XYCoords& p : base1) {
        CHECK(a1_curve_q(e7, p) == 0);
        CHECK_THROWS_AS(a1_point_from_xy(e7, p), NoAccessorySolution);
    }
}

TEST_CASE("the accessory determinant is the (2,2)-curve") {
    const RiemannScheme scheme = a2_scheme_fixture();
    Rng rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        const XYCoords xy{rng.rational(-9, 9, 1, 5), rng.rational(-9, 9, 1, 5)};
        const auto elem = [&](const Rat& al, const Rat& be) {
            RatMat b1(3, 2), c1(2, 3), b2(3, 2), c2(2, 3);
            b1 << Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0);
            c1 << scheme.indices[0][0], Rat(0), al, Rat(0), scheme.indices[0][1], be;
            b2 << Rat(0), Rat(1), Rat(0), Rat(1), Rat(1), Rat(1);
            c2 << Rat(-xy.x - scheme.indices[1][0]), xy.x, scheme.indices[1][0],
                Rat(scheme.indices[1][1] - xy.y), xy.y, Rat(0);
            const auto e = elem_sym_of_spectrum(RatMat(-(b1 * c1) - b2 * c2));
            return std::pair{e[1], e[2]};
        };
        const auto at_zero = elem(Rat(0), Rat(0));
        const auto at_a = elem(Rat(1), Rat(0));
        const auto at_b = elem(Rat(0), Rat(1));
        RatMat system(2, 2);
        system << Rat(at_a.first - at_zero.first), Rat(at_b.first - at_zero.first),
            Rat(at_a.second - at_zero.second), Rat(at_b.second - at_zero.second);
        CHECK(det(system) == a2_curve_q(scheme, xy));
    }
}

TEST_CASE("a2 parameter dictionary") {
    const RiemannScheme scheme = a2_scheme_fixture();
    const ParamsA2 dict = a2_param_dict(scheme);
    CHECK(dict.b[3] == 0);
    CHECK(dict.b[7] == -scheme.indices[0][1] - 1);
    CHECK(dict.b[0] == scheme.indices[0][1] + scheme.infinity_indices[0]);
    CHECK(dict.delta() == -1);

    // the model scheme action matches the model parameter evolution
    const RiemannScheme evolved = riemann_action(scheme, SchemeAction::dpa2_model());
    const ParamsA2 evolved_dict = a2_param_dict(evolved);
    CHECK(evolved_dict.b[0] == dict.b[0]);
    CHECK(evolved_dict.b[4] == dict.b[4] + dict.delta());
    CHECK(evolved_dict.b[5] == dict.b[5] + dict.delta());
    CHECK(evolved_dict.b[6] == dict.b[6] - dict.delta());
    CHECK(evolved_dict.b[7] == dict.b[7] - dict.delta());
}

TEST_CASE("a2 composition identity") {
    const RiemannScheme scheme = a2_scheme_fixture();
    CHECK(a2_verify_composition(scheme, {rat(3, 5), rat(1, 2)}));

    SUBCASE("the two chain orders realize the same map") {
        // both orders are translations by the same vector, so they coincide
        const XYCoords xy{rat(3, 5), rat(1, 2)};
        const auto run_chain = [&](std::size_t first_slot, std::size_t second_slot) {
            DecompositionPoint point = a2_point_from_xy(scheme, xy);
            point = rank1_transform(point, {1, 0, {{first_slot, 0}}});
            point = sigma13_hat(point);
            point = rank1_transform(point, {1, 0, {{second_slot, 0}}});
            point = sigma13_hat(point);
            return a2_to_fg(scheme_of(point), a2_xy_from_point(point));
        };
        CHECK(run_chain(0, 1) == run_chain(1, 0));
    }

    SUBCASE("an incomplete chain does not reproduce the model step") {
        const XYCoords xy{rat(3, 5), rat(1, 2)};
        const auto [model_params, model_fg] = dpa2_step(a2_param_dict(scheme), a2_to_fg(scheme, xy));
        DecompositionPoint point = a2_point_from_xy(scheme, xy);
        point = rank1_transform(point, {1, 0, {{0, 0}}});
        point = sigma13_hat(point);
        point = rank1_transform(point, {1, 0, {{1, 0}}});
        // final kernel swap dropped: the scheme, hence the parameters, disagree
        const ParamsA2 chain_params = a2_param_dict(scheme_of(point));
        CHECK(!(chain_params == model_params));
    }
}

TEST_CASE("a1 slice construction") {
    const RiemannScheme scheme = a1_scheme_fixture();
    const XYCoords xy{rat(5, 8), rat(-3, 7)};
    const DecompositionPoint point = a1_point_from_xy(scheme, xy);
    const Rat t3 = scheme.indices[2][0];

    SUBCASE("third-pole slice pattern") {
        const RatMat& c3 = point.poles[2].c_dag;
        CHECK(c3(0, 0) == -(xy.x + t3));
        CHECK(c3(0, 1) == 0);
        CHECK(c3(0, 2) == xy.x);
        CHECK(c3(0, 3) == t3);
        CHECK(c3(1, 0) == 0);
        CHECK(c3(1, 1) == t3 - xy.y);
        CHECK(c3(1, 2) == xy.y);
        CHECK(c3(1, 3) == 0);
    }

    SUBCASE("the double eigenvalue has a two-dimensional eigenspace") {
        const FuchsianSystem system = assemble(point);
        const RatMat& a3 = system.residues[2].second;
        CHECK(rank(RatMat(a3 - t3 * identity(4))) == 2);
        CHECK(rank(a3) == 2);
    }

    SUBCASE("read-back and gauge invariance") {
        CHECK(a1_xy_from_point(point) == xy);
        Rng rng(41);
        for (int trial = 0; trial < 6; ++trial)
            CHECK(a1_xy_from_point(random_gauge(point, rng)) == xy);
    }

    SUBCASE("mixing the double-eigenvalue basis is gauge") {
        Rng rng(43);
        for (int trial = 0; trial < 6; ++trial) {
            DecompositionPoint mixed = point;
            RatMat q(2, 2);
            do {
                for (Eigen::Index i = 0; i < 2; ++i)
                    for (Eigen::Index j = 0; j < 2; ++j) q(i, j) = rng.rational(-5, 5, 1, 3);
            } while (det(q) == 0);
            mixed.poles[2].b = mixed.poles[2].b * q;
            mixed.poles[2].c_dag = mat_inverse(q) * mixed.poles[2].c_dag;
            CHECK(check_orthogonality(mixed));  // theta_3 I commutes with q
            CHECK(a1_xy_from_point(mixed) == xy);
        }
    }
}

TEST_CASE("a1 curve incidence and the (f, g) chart") {
    const RiemannScheme scheme = a1_scheme_fixture();
    const Rat t11 = scheme.indices[0][0], t12 = scheme.indices[0][1], t13 = scheme.indices[0][2];
    const Rat t3 = scheme.indices[2][0];

    CHECK(a1_curve_q(scheme, {Rat(0), Rat(0)}) == 0);
    CHECK(a1_curve_q(scheme, {Rat(-t3), t3}) == 0);
    CHECK(a1_curve_q(scheme, {Rat(1), Rat(1)}) != 0);

    SUBCASE("images of the finite base points and the parameter dictionary") {
        const ParamsA1 dict = a1_param_dict(scheme);
        CHECK(dict.b * 2 == t3);
        CHECK(dict.bi[7] == -1);
        for (int i = 0; i < 4; ++i) {
            const Rat t2i = scheme.indices[1][static_cast<std::size_t>(i)];
            const XYCoords p{Rat((t11 + t2i + t3) * (t13 + t2i) / (t11 - t13)),
                             Rat(-(t12 + t2i + t3) * (t13 + t2i) / (t12 - t13))};
            CHECK(a1_curve_q(scheme, p) == 0);
            const FGPoint image = a1_to_fg(scheme, p);
            CHECK(image.f == P1(Rat(t2i + t3)));
            CHECK(image.g == P1(Rat(-t2i)));
            CHECK(image.f.value() + image.g.value() == t3);
        }
    }

    SUBCASE("directional images at infinity") {
        // along y = const the image tends to (-theta_1^1, theta_1^1)
        const Rat p = t13 - t11, q = t12 - t13;
        const auto f_dir = [&](const Rat& rx, const Rat& ry) {
            return Rat(-(t12 * p * rx - t11 * q * ry) / (p * rx - q * ry));
        };
        const auto g_dir = [&](const Rat& rx, const Rat& ry) {
            return Rat((t12 * p * rx - t11 * q * ry) / (p * rx - q * ry));
        };
        CHECK(f_dir(Rat(0), Rat(1)) == -t11);  // y -> infinity, x finite
        CHECK(g_dir(Rat(0), Rat(1)) == t11);
        CHECK(f_dir(Rat(1), Rat(0)) == -t12);  // x -> infinity, y finite
        CHECK(f_dir(Rat(1), Rat(-1)) == -t13);  // along the line x + y = 0
        // the doubly-infinite direction that blows down to (1, -1)
        const Rat r = -(t11 + 1) * (t12 - t13) / ((t12 + 1) * (t11 - t13));
        CHECK(f_dir(r, Rat(1)) == 1);
        CHECK(g_dir(r, Rat(1)) == -1);
    }

    SUBCASE("round trip") {
        Rng rng(47);
        for (int trial = 0; trial < 10; ++trial) {
            const XYCoords xy{rng.rational(-12, 12, 1, 7), rng.rational(-12, 12, 1, 7)};
            try {
                CHECK(a1_from_fg(scheme, a1_to_fg(scheme, xy)) == xy);
            } catch (const DegenerateParameter&) {
            }
        }
    }
}

TEST_CASE("rank-1 pipeline on the 4x4 slice") {
    // the elementary transformation between the two simple-spectrum poles
    // keeps the double eigenvalue untouched, so the read-off still applies
    const RiemannScheme scheme = a1_scheme_fixture();
    Rng rng(59);
    for (int trial = 0; trial < 5; ++trial) {
        const XYCoords xy{rng.rational(-10, 10, 1, 6), rng.rational(-10, 10, 1, 6)};
        const DecompositionPoint point = a1_point_from_xy(scheme, xy);
        const DecompositionPoint out = rank1_transform(point, {0, 1, {{0, 0}}});
        CHECK(check_orthogonality(out));
        CHECK(out.poles[0].theta[0] == scheme.indices[0][0] - 1);
        CHECK(out.poles[1].theta[0] == scheme.indices[1][0] + 1);
        CHECK(out.poles[2].theta == point.poles[2].theta);
        const XYCoords image = a1_xy_from_point(out);  // exact, no residual gauge failure
        CHECK(a1_xy_from_point(out) == image);
    }
}

TEST_CASE("a1 dictionary delta consistency") {
    const RiemannScheme scheme = a1_scheme_fixture();
    const ParamsA1 dict = a1_param_dict(scheme);
    CHECK(dict.delta() == -1);
    const RiemannScheme evolved = riemann_action(scheme, SchemeAction::dpa1_model());
    const ParamsA1 evolved_dict = a1_param_dict(evolved);
    CHECK(evolved_dict.b == dict.b - dict.delta());
    CHECK(evolved_dict.bi == dict.bi);
}

TEST_CASE("a1 composition identity") {
    const RiemannScheme scheme = a1_scheme_fixture();
    const XYCoords xy{rat(2, 5), rat(-1, 3)};
    CHECK(a1_verify_composition(scheme, xy));

    SUBCASE("a single rank-2 transformation is not the model step") {
        const auto [model_params, model_fg] = dpa1_step(a1_param_dict(scheme), a1_to_fg(scheme, xy));
        DecompositionPoint point = a1_point_from_xy(scheme, xy);
        point = rank2_transform(point, {1, 2, {{0, 0}, {1, 1}}});
        const RiemannScheme evolved = scheme_of(point);
        const ParamsA1 chain_params = a1_param_dict(evolved);
        CHECK(!(chain_params == model_params));
    }
}
