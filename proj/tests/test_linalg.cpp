#include "isodyn/errors.hpp"
#include "isodyn/linalg.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace isodyn;
using testing::col;
using testing::mat;

namespace {

// independent 2x2 oracle via Cramer's rule
RatVec cramer2(const RatMat& a, const RatVec& b) {
    const Rat d = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    RatVec x(2);
    x(0) = (b(0) * a(1, 1) - a(0, 1) * b(1)) / d;
    x(1) = (a(0, 0) * b(1) - b(0) * a(1, 0)) / d;
    return x;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    const Rat sum = rat(1, 6) + rat(1, 3);
    CHECK(sum.get_num() == 1);
    CHECK(sum.get_den() == 2);
    CHECK(rat_from_string("-7/21") == rat(-1, 3));
    CHECK_THROWS_AS(rat_from_string("1/0"), ConfigError);
}

TEST_CASE("solve_linear") {
    CHECK(equal(solve_linear(identity(3), col({1, 2, 3})), col({1, 2, 3})));

    RatMat diag = mat(2, 2, {2, 0, 0, 4});
    RatMat x = solve_linear(diag, col({1, 1}));
    CHECK(x(0, 0) == rat(1, 2));
    CHECK(x(1, 0) == rat(1, 4));

    const RatMat a = mat(2, 2, {1, 1, 1, 2});
    const RatVec b = col({3, 5});
    const RatVec expected = cramer2(a, b);
    CHECK(expected(0) == 1);
    CHECK(expected(1) == 2);
    const RatMat solved = solve_linear(a, b);
    CHECK(equal(solved, expected));
    CHECK(is_zero(RatMat(a * solved - b)));

    CHECK_THROWS_AS(solve_linear(mat(2, 2, {1, 2, 2, 4}), col({1, 1})), SingularMatrix);
}

TEST_CASE("mat_inverse") {
    CHECK(equal(mat_inverse(identity(4)), identity(4)));
    CHECK(equal(mat_inverse(mat(2, 2, {1, 1, 0, 1})), mat(2, 2, {1, -1, 0, 1})));

    RatMat d(2, 2);
    d << Rat(2), Rat(0), Rat(0), rat(1, 3);
    const RatMat d_inv = mat_inverse(d);
    CHECK(d_inv(0, 0) == rat(1, 2));
    CHECK(d_inv(1, 1) == 3);

    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        RatMat a(3, 3);
        do {
            for (Eigen::Index i = 0; i < 3; ++i)
                for (Eigen::Index j = 0; j < 3; ++j) a(i, j) = rng.rational(-9, 9, 1, 6);
        } while (det(a) == 0);
        CHECK(equal(RatMat(mat_inverse(a) * a), identity(3)));
        CHECK(equal(RatMat(a * mat_inverse(a)), identity(3)));
    }
}

TEST_CASE("det, rank, kernel") {
    CHECK(det(mat(2, 2, {1, 2, 3, 4})) == -2);
    CHECK(det(mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
    CHECK(rank(mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);

    const RatMat rank1 = mat(3, 3, {1, 2, 3, 2, 4, 6, 3, 6, 9});
    const auto kernel = kernel_basis(rank1);
    REQUIRE(kernel.size() == 2);
    for (const RatVec& v : kernel) CHECK(is_zero(RatMat(rank1 * v)));
}

TEST_CASE("elementary symmetric functions of a spectrum") {
    // conjugate diag(1, 2, 3) so the eigenvalues are hidden
    const RatMat s = mat(3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1});
    RatMat d = RatMat::Zero(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    const RatMat a = s * d * mat_inverse(s);
    const auto e = elem_sym_of_spectrum(a);
    CHECK(e[0] == 6);
    CHECK(e[1] == 11);
    CHECK(e[2] == 6);
    const auto direct = elem_sym({Rat(1), Rat(2), Rat(3)});
    CHECK(direct[0] == 6);
    CHECK(direct[1] == 11);
    CHECK(direct[2] == 6);
}

TEST_CASE("projective_frame") {
    std::vector<RatVec> identity_frame = {col({1, 0, 0}), col({0, 1, 0}), col({0, 0, 1}), col({1, 1, 1})};
    CHECK(equal(projective_frame(identity_frame), identity(3)));

    std::vector<RatVec> rescale = {col({1, 0, 0}), col({0, 1, 0}), col({0, 0, 1}), col({2, 3, 4})};
    RatMat expected = RatMat::Zero(3, 3);
    expected(0, 0) = rat(1, 2);
    expected(1, 1) = rat(1, 3);
    expected(2, 2) = rat(1, 4);
    CHECK(equal(projective_frame(rescale), expected));

    std::vector<RatVec> swapped = {col({0, 1}), col({1, 0}), col({1, 1})};
    const RatMat s = projective_frame(swapped);
    CHECK(s(1, 0) * swapped[0](0) + s(1, 1) * swapped[0](1) == 0);  // S e2 on the first axis
    CHECK(equal(RatMat(s * swapped[2]), col({1, 1})));

    CHECK_THROWS_AS(projective_frame({col({1, 0}), col({2, 0}), col({1, 1})}), DegenerateFrame);
    CHECK_THROWS_AS(projective_frame({col({1, 0}), col({0, 1}), col({1, 0})}), DegenerateFrame);

    // postcondition holds for random frames
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RatVec> vectors;
        for (int k = 0; k < 4; ++k) {
            RatVec v(3);
            for (Eigen::Index i = 0; i < 3; ++i) v(i) = rng.rational(-8, 8, 1, 5);
            vectors.push_back(v);
        }
        try {
            const RatMat frame = projective_frame(vectors);
            for (int k = 0; k < 3; ++k) {
                const RatVec image = frame * vectors[static_cast<std::size_t>(k)];
                for (Eigen::Index i = 0; i < 3; ++i)
                    if (i != k) CHECK(image(i) == 0);
            }
            CHECK(equal(RatMat(frame * vectors[3]), col({1, 1, 1})));
        } catch (const DegenerateFrame&) {
            // fine for degenerate draws
        }
    }
}

TEST_CASE("rational_identity_zero") {
    const auto zero = [](const Rat&) { return RatMat::Zero(2, 2).eval(); };
    CHECK(rational_identity_zero(zero, {20, 5, {}}));

    const auto linear = [](const Rat& z) {
        RatMat m(1, 1);
        m(0, 0) = z;
        return m;
    };
    CHECK_FALSE(rational_identity_zero(linear, {20, 5, {}}));

    CHECK_THROWS_AS(rational_identity_zero(zero, {0, 5, {}}), InvalidIndex);

    // identical plans sample identically
    std::vector<Rat> first, second;
    const auto recorder = [](std::vector<Rat>& sink) {
        return [&sink](const Rat& z) {
            sink.push_back(z);
            return RatMat::Zero(1, 1).eval();
        };
    };
    rational_identity_zero(recorder(first), {10, 99, {}});
    rational_identity_zero(recorder(second), {10, 99, {}});
    CHECK(first == second);
}
