#include "isodyn/errors.hpp"
#include "isodyn/fuchsian.hpp"
#include "isodyn/reduction.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace isodyn;
using testing::a1_scheme_fixture;
using testing::a2_scheme_fixture;
using testing::mat;

TEST_CASE("fuchs_sum") {
    CHECK(fuchs_sum(a2_scheme_fixture()) == 0);
    CHECK(fuchs_sum(a1_scheme_fixture()) == 0);

    RiemannScheme zeros;
    zeros.poles = {Rat(0)};
    zeros.indices = {{Rat(0), Rat(0)}};
    zeros.infinity_indices = {Rat(0), Rat(0)};
    CHECK(fuchs_sum(zeros) == 0);

    // the double eigenvalue counts twice: dropping one copy breaks the balance
    RiemannScheme e7 = a1_scheme_fixture();
    const Rat t3 = e7.indices[2][0];
    CHECK(fuchs_sum(e7) == 0);
    e7.indices[2][1] = Rat(0);
    CHECK(fuchs_sum(e7) == -t3);
}

TEST_CASE("spectral_type") {
    const SpectralType a2_type = spectral_type(a2_scheme_fixture());
    REQUIRE(a2_type.size() == 3);
    for (const auto& part : a2_type) CHECK(part == std::vector<int>{1, 1, 1});

    const SpectralType a1_type = spectral_type(a1_scheme_fixture());
    REQUIRE(a1_type.size() == 3);  // residue at infinity vanishes, no partition for it
    CHECK(a1_type[0] == std::vector<int>{1, 1, 1, 1});
    CHECK(a1_type[1] == std::vector<int>{1, 1, 1, 1});
    CHECK(a1_type[2] == std::vector<int>{2, 2});
}

TEST_CASE("assemble") {
    SUBCASE("rank-zero poles give the zero system") {
        DecompositionPoint point;
        point.size = 3;
        point.poles.push_back({Rat(0), RatMat(3, 0), RatMat(0, 3), {}});
        point.theta_inf = {Rat(0), Rat(0), Rat(0)};
        const FuchsianSystem system = assemble(point);
        CHECK(is_zero(system.residues[0].second));
        CHECK(is_zero(system.a_inf));
    }

    SUBCASE("a single rank-one pole") {
        DecompositionPoint point;
        point.size = 3;
        const Rat theta = rat(5, 3);
        RatMat b = RatMat::Zero(3, 1);
        b(0, 0) = 1;
        RatMat c = RatMat::Zero(1, 3);
        c(0, 0) = theta;
        point.poles.push_back({Rat(0), b, c, {theta}});
        point.theta_inf = {Rat(-theta), Rat(0), Rat(0)};
        const FuchsianSystem system = assemble(point);
        RatMat expected = RatMat::Zero(3, 3);
        expected(0, 0) = theta;
        CHECK(equal(system.residues[0].second, expected));
    }

    SUBCASE("residues act on their eigenvector blocks") {
        const DecompositionPoint point = a2_point_from_xy(a2_scheme_fixture(), {rat(2, 7), rat(-3, 5)});
        const FuchsianSystem system = assemble(point);
        for (std::size_t i = 0; i < point.poles.size(); ++i) {
            const auto& pole = point.poles[i];
            RatMat theta = RatMat::Zero(pole.rank(), pole.rank());
            for (Eigen::Index j = 0; j < pole.rank(); ++j)
                theta(j, j) = pole.theta[static_cast<std::size_t>(j)];
            CHECK(equal(RatMat(system.residues[i].second * pole.b), RatMat(pole.b * theta)));
            // the residue's column space is the span of its eigenvectors
            RatMat joined(point.size, point.size + pole.rank());
            joined.leftCols(point.size) = system.residues[i].second;
            joined.rightCols(pole.rank()) = pole.b;
            CHECK(rank(joined) == pole.rank());
        }
    }

    SUBCASE("slice point has the scheme's spectrum at infinity") {
        const RiemannScheme scheme = a2_scheme_fixture();
        const DecompositionPoint point = a2_point_from_xy(scheme, {rat(2, 7), rat(-3, 5)});
        const FuchsianSystem system = assemble(point);
        CHECK(elem_sym_of_spectrum(system.a_inf) == elem_sym(scheme.infinity_indices));
        // a wrong prescription is rejected
        DecompositionPoint bad = point;
        bad.theta_inf[0] += 1;
        CHECK_THROWS_AS(assemble(bad), SpectrumMismatch);
    }
}

TEST_CASE("check_orthogonality") {
    const DecompositionPoint point = a2_point_from_xy(a2_scheme_fixture(), {rat(1, 3), rat(4, 9)});
    CHECK(check_orthogonality(point));
    DecompositionPoint perturbed = point;
    perturbed.poles[0].c_dag(0, 0) += 1;
    CHECK_FALSE(check_orthogonality(perturbed));
}

TEST_CASE("scalar_gauge") {
    const DecompositionPoint point = a2_point_from_xy(a2_scheme_fixture(), {rat(1, 2), rat(2, 5)});
    const FuchsianSystem system = assemble(point);
    const Rat s = rat(3, 7);

    const FuchsianSystem shifted = scalar_gauge(system, 0, s);
    CHECK(equal(shifted.residues[0].second, RatMat(system.residues[0].second + s * identity(3))));
    CHECK(equal(shifted.residues[1].second, system.residues[1].second));
    CHECK(equal(shifted.a_inf, RatMat(system.a_inf - s * identity(3))));

    const FuchsianSystem back = scalar_gauge(scalar_gauge(system, 0, Rat(-s)), 0, s);
    CHECK(equal(back.residues[0].second, system.residues[0].second));
    CHECK(equal(scalar_gauge(system, 1, Rat(0)).residues[1].second, system.residues[1].second));
}

TEST_CASE("sigma_swap") {
    const DecompositionPoint point = a2_point_from_xy(a2_scheme_fixture(), {rat(-2, 3), rat(1, 8)});
    CHECK(equal(sigma_swap(point, 1, 0, 0).poles[1].b, point.poles[1].b));

    const DecompositionPoint twice = sigma_swap(sigma_swap(point, 1, 0, 1), 1, 0, 1);
    CHECK(equal(twice.poles[1].b, point.poles[1].b));
    CHECK(equal(twice.poles[1].c_dag, point.poles[1].c_dag));

    const DecompositionPoint swapped = sigma_swap(point, 1, 0, 1);
    CHECK(check_orthogonality(swapped));
    CHECK(equal(RatMat(swapped.poles[1].b * swapped.poles[1].c_dag),
                RatMat(point.poles[1].b * point.poles[1].c_dag)));
    CHECK_THROWS_AS(sigma_swap(point, 1, 0, 2), InvalidIndex);
}

TEST_CASE("sigma13_hat") {
    const RiemannScheme scheme = a2_scheme_fixture();
    const DecompositionPoint point = a2_point_from_xy(scheme, {rat(3, 4), rat(-1, 6)});
    const Rat t11 = scheme.indices[0][0];

    const DecompositionPoint out = sigma13_hat(point);
    CHECK(check_orthogonality(out));
    CHECK(testing::scheme_eq(scheme_of(out), riemann_action(scheme, SchemeAction::sigma13())));

    // pole 2 is untouched, pole 1 assembles to A_1 - theta_1^1 I
    CHECK(equal(RatMat(out.poles[1].b * out.poles[1].c_dag),
                RatMat(point.poles[1].b * point.poles[1].c_dag)));
    CHECK(equal(RatMat(out.poles[0].b * out.poles[0].c_dag),
                RatMat(point.poles[0].b * point.poles[0].c_dag - t11 * identity(3))));

    // the scheme action is an involution
    const RiemannScheme round =
        riemann_action(riemann_action(scheme, SchemeAction::sigma13()), SchemeAction::sigma13());
    CHECK(testing::scheme_eq(round, scheme));
}

TEST_CASE("riemann_action") {
    const RiemannScheme scheme = a2_scheme_fixture();

    SUBCASE("one unit moves between the chosen slots") {
        const RiemannScheme shifted = riemann_action(scheme, SchemeAction::rank1(0, 1, 0, 0));
        CHECK(shifted.indices[0][0] == scheme.indices[0][0] - 1);
        CHECK(shifted.indices[1][0] == scheme.indices[1][0] + 1);
        CHECK(shifted.indices[0][1] == scheme.indices[0][1]);
        CHECK(shifted.infinity_indices == scheme.infinity_indices);
    }

    SUBCASE("model actions") {
        const RiemannScheme a2_model = riemann_action(scheme, SchemeAction::dpa2_model());
        CHECK(a2_model.indices[0][0] == scheme.indices[0][0]);
        CHECK(a2_model.indices[0][1] == scheme.indices[0][1] - 1);
        CHECK(a2_model.indices[1][0] == scheme.indices[1][0] - 1);
        CHECK(a2_model.indices[1][1] == scheme.indices[1][1] - 1);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(a2_model.infinity_indices[j] == scheme.infinity_indices[j] + 1);

        const RiemannScheme e7 = a1_scheme_fixture();
        const RiemannScheme a1_model = riemann_action(e7, SchemeAction::dpa1_model());
        for (std::size_t i = 0; i < 4; ++i) CHECK(a1_model.indices[1][i] == e7.indices[1][i] - 1);
        CHECK(a1_model.indices[2][0] == e7.indices[2][0] + 2);
        CHECK(a1_model.indices[2][1] == e7.indices[2][1] + 2);
        CHECK(a1_model.indices[0] == e7.indices[0]);
    }

    SUBCASE("the four-step chain composes to the model action") {
        RiemannScheme chained = riemann_action(scheme, SchemeAction::rank1(1, 0, 0, 0));
        chained = riemann_action(chained, SchemeAction::sigma13());
        chained = riemann_action(chained, SchemeAction::rank1(1, 0, 1, 0));
        chained = riemann_action(chained, SchemeAction::sigma13());
        CHECK(testing::scheme_eq(chained, riemann_action(scheme, SchemeAction::dpa2_model())));
    }

    SUBCASE("scalar gauge preserves the Fuchs sum") {
        const RiemannScheme shifted = riemann_action(scheme, SchemeAction::scalar(0, rat(5, 9)));
        CHECK(fuchs_sum(shifted) == fuchs_sum(scheme));
        CHECK(shifted.indices[0][2] == rat(5, 9));
    }

    CHECK_THROWS_AS(riemann_action(scheme, SchemeAction::rank1(0, 0, 0, 0)), InvalidTransform);
    CHECK_THROWS_AS(riemann_action(a1_scheme_fixture(), SchemeAction::dpa2_model()), InvalidTransform);
}
