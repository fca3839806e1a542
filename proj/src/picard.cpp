#include "isodyn/picard.hpp"

#include "isodyn/errors.hpp"

#include <algorithm>
#include <array>

namespace isodyn {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in lattice arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice arithmetic");
    return r;
}

PicMat gram(PicBasisKind basis) {
    PicMat g = PicMat::Zero();
    if (basis == PicBasisKind::P1xP1_8) {
        g(0, 1) = g(1, 0) = 1;
        for (int i = 2; i < 10; ++i) g(i, i) = -1;
    } else {
        g(0, 0) = 1;
        for (int i = 1; i < 10; ++i) g(i, i) = -1;
    }
    return g;
}

PicVec vec(std::array<std::int64_t, 10> entries) {
    PicVec v;
    for (int i = 0; i < 10; ++i) v(i) = entries[static_cast<std::size_t>(i)];
    return v;
}

PicClass cls(PicBasisKind basis, std::array<std::int64_t, 10> entries) {
    return {basis, vec(entries)};
}

}  // namespace

std::int64_t pairing(const PicClass& a, const PicClass& b) {
    if (a.basis != b.basis) throw BasisMismatch();
    const PicMat g = gram(a.basis);
    std::int64_t total = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (g(i, j) != 0)
                total = checked_add(total, checked_mul(checked_mul(a.coeffs(i), g(i, j)), b.coeffs(j)));
    return total;
}

PicClass anticanonical(PicBasisKind basis) {
    if (basis == PicBasisKind::P1xP1_8)
        return cls(basis, {2, 2, -1, -1, -1, -1, -1, -1, -1, -1});
    return cls(basis, {3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
}

std::int64_t virtual_genus(const PicClass& c) {
    PicClass k = anticanonical(c.basis);
    k.coeffs = -k.coeffs;
    return (pairing(c, c) + pairing(k, c)) / 2 + 1;
}

namespace {

// shorthand for classes in the (H_f, H_g, E_1..E_8) basis
PicClass hE(std::array<std::int64_t, 10> entries) { return cls(PicBasisKind::P1xP1_8, entries); }

void validate_affine_diagram(const RootBasis& basis, const std::vector<int>& expected_degrees) {
    const std::size_t n = basis.roots.size();
    std::vector<int> degrees(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (pairing(basis.roots[i], basis.roots[i]) != -2)
            throw Error("root self-pairing is not -2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int64_t p = pairing(basis.roots[i], basis.roots[j]);
            if (p != 0 && p != 1) throw Error("root pairing outside {0, 1}");
            if (p == 1) ++degrees[i];
        }
    }
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected_degrees) throw Error("root diagram degree sequence mismatch");
    // affine: the Cartan matrix 2I - adjacency-count is singular; verified via
    // the null vector of marks being orthogonal is implied by -K orthogonality
}

}  // namespace

RootBasis root_basis(RootLabel label) {
    RootBasis basis;
    basis.label = label;
    basis.basis = PicBasisKind::P1xP1_8;
    switch (label) {
        case RootLabel::E6Affine:
            basis.roots = {
                hE({0, 0, 0, 0, 1, -1, 0, 0, 0, 0}),    // E3 - E4
                hE({0, 0, 0, 1, -1, 0, 0, 0, 0, 0}),    // E2 - E3
                hE({0, 0, 1, -1, 0, 0, 0, 0, 0, 0}),    // E1 - E2
                hE({1, 0, -1, 0, 0, 0, 0, 0, -1, 0}),   // Hf - E1 - E7
                hE({0, 0, 0, 0, 0, 0, 0, 0, 1, -1}),    // E7 - E8
                hE({0, 1, -1, 0, 0, 0, -1, 0, 0, 0}),   // Hg - E1 - E5
                hE({0, 0, 0, 0, 0, 0, 1, -1, 0, 0}),    // E5 - E6
            };
            validate_affine_diagram(basis, {1, 1, 1, 2, 2, 2, 3});
            break;
        case RootLabel::E7Affine:
            basis.roots = {
                hE({0, 0, 0, 0, 0, 0, 0, 0, 1, -1}),    // E7 - E8
                hE({0, 0, 0, 0, 1, -1, 0, 0, 0, 0}),    // E3 - E4
                hE({0, 0, 0, 1, -1, 0, 0, 0, 0, 0}),    // E2 - E3
                hE({0, 0, 1, -1, 0, 0, 0, 0, 0, 0}),    // E1 - E2
                hE({1, 0, -1, 0, 0, 0, -1, 0, 0, 0}),   // Hf - E1 - E5
                hE({0, 0, 0, 0, 0, 0, 1, -1, 0, 0}),    // E5 - E6
                hE({0, 0, 0, 0, 0, 0, 0, 1, -1, 0}),    // E6 - E7
                hE({-1, 1, 0, 0, 0, 0, 0, 0, 0, 0}),    // Hg - Hf
            };
            validate_affine_diagram(basis, {1, 1, 1, 2, 2, 2, 2, 3});
            break;
        case RootLabel::A2Surface:
            basis.roots = {
                hE({1, 1, -1, -1, -1, -1, 0, 0, 0, 0}),
                hE({1, 0, 0, 0, 0, 0, -1, -1, 0, 0}),
                hE({0, 1, 0, 0, 0, 0, 0, 0, -1, -1}),
            };
            break;
        case RootLabel::A1Surface:
            basis.roots = {
                hE({1, 1, -1, -1, -1, -1, 0, 0, 0, 0}),
                hE({1, 1, 0, 0, 0, 0, -1, -1, -1, -1}),
            };
            break;
    }
    return basis;
}

namespace {

LatticeMap map_from_columns(const std::string& name, std::array<std::array<std::int64_t, 10>, 10> cols) {
    LatticeMap map;
    map.name = name;
    map.basis = PicBasisKind::P1xP1_8;
    for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 10; ++i)
            map.matrix(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return map;
}

}  // namespace

LatticeMap pushforward(const std::string& name) {
    if (name == "phi_a2")
        return map_from_columns(name, {{
            {6, 3, -2, -2, -2, -2, -1, -1, -3, -3},
            {3, 1, -1, -1, -1, -1, 0, 0, -1, -1},
            {2, 1, 0, -1, -1, -1, 0, 0, -1, -1},
            {2, 1, -1, 0, -1, -1, 0, 0, -1, -1},
            {2, 1, -1, -1, 0, -1, 0, 0, -1, -1},
            {2, 1, -1, -1, -1, 0, 0, 0, -1, -1},
            {3, 1, -1, -1, -1, -1, 0, -1, -1, -1},
            {3, 1, -1, -1, -1, -1, -1, 0, -1, -1},
            {1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
            {1, 0, 0, 0, 0, 0, 0, 0, -1, 0},
        }});
    if (name == "psi_a2")
        return map_from_columns(name, {{
            {2, 3, -1, -1, -1, -1, -2, 0, 0, -2},
            {3, 5, -2, -2, -2, -2, -3, -1, 0, -2},
            {1, 2, 0, -1, -1, -1, -1, 0, 0, -1},
            {1, 2, -1, 0, -1, -1, -1, 0, 0, -1},
            {1, 2, -1, -1, 0, -1, -1, 0, 0, -1},
            {1, 2, -1, -1, -1, 0, -1, 0, 0, -1},
            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
            {2, 2, -1, -1, -1, -1, -2, 0, 0, -1},
            {2, 3, -1, -1, -1, -1, -2, -1, 0, -2},
            {0, 1, 0, 0, 0, 0, -1, 0, 0, 0},
        }});
    if (name == "phi_a1")
        return map_from_columns(name, {{
            {9, 4, -3, -3, -3, -3, -3, -3, -3, -3},
            {4, 1, -1, -1, -1, -1, -1, -1, -1, -1},
            {3, 1, 0, -1, -1, -1, -1, -1, -1, -1},
            {3, 1, -1, 0, -1, -1, -1, -1, -1, -1},
            {3, 1, -1, -1, 0, -1, -1, -1, -1, -1},
            {3, 1, -1, -1, -1, 0, -1, -1, -1, -1},
            {3, 1, -1, -1, -1, -1, 0, -1, -1, -1},
            {3, 1, -1, -1, -1, -1, -1, 0, -1, -1},
            {3, 1, -1, -1, -1, -1, -1, -1, 0, -1},
            {3, 1, -1, -1, -1, -1, -1, -1, -1, 0},
        }});
    if (name == "psi11_a1")
        return map_from_columns(name, {{
            {4, 3, -3, -1, -1, -1, 0, -2, -2, -2},
            {3, 4, -3, -1, -1, -1, 0, -2, -2, -2},
            {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
            {2, 2, -2, 0, -1, -1, 0, -1, -1, -1},
            {2, 2, -2, -1, 0, -1, 0, -1, -1, -1},
            {2, 2, -2, -1, -1, 0, 0, -1, -1, -1},
            {3, 3, -2, -1, -1, -1, 0, -2, -2, -2},
            {1, 1, -1, 0, 0, 0, 0, 0, -1, -1},
            {1, 1, -1, 0, 0, 0, 0, -1, 0, -1},
            {1, 1, -1, 0, 0, 0, 0, -1, -1, 0},
        }});
    if (name == "psi12_a1")
        return map_from_columns(name, {{
            {6, 3, -1, -1, -3, -3, -2, -2, -2, -2},
            // the E8 coefficient is forced to -1 by isometry and -K invariance
            {3, 2, 0, 0, -2, -2, -1, -1, -1, -1},
            {3, 2, 0, -1, -2, -2, -1, -1, -1, -1},
            {3, 2, -1, 0, -2, -2, -1, -1, -1, -1},
            {1, 0, 0, 0, 0, -1, 0, 0, 0, 0},
            {1, 0, 0, 0, -1, 0, 0, 0, 0, 0},
            {2, 1, 0, 0, -1, -1, 0, -1, -1, -1},
            {2, 1, 0, 0, -1, -1, -1, 0, -1, -1},
            {2, 1, 0, 0, -1, -1, -1, -1, 0, -1},
            {2, 1, 0, 0, -1, -1, -1, -1, -1, 0},
        }});
    if (name == "psi34_a1")
        return map_from_columns(name, {{
            {6, 3, -3, -3, -1, -1, -2, -2, -2, -2},
            // E8 coefficient forced to -1, as in the other rank-2 action
            {3, 2, -2, -2, 0, 0, -1, -1, -1, -1},
            {1, 0, 0, -1, 0, 0, 0, 0, 0, 0},
            {1, 0, -1, 0, 0, 0, 0, 0, 0, 0},
            {3, 2, -2, -2, 0, -1, -1, -1, -1, -1},
            {3, 2, -2, -2, -1, 0, -1, -1, -1, -1},
            {2, 1, -1, -1, 0, 0, 0, -1, -1, -1},
            {2, 1, -1, -1, 0, 0, -1, 0, -1, -1},
            {2, 1, -1, -1, 0, 0, -1, -1, 0, -1},
            {2, 1, -1, -1, 0, 0, -1, -1, -1, 0},
        }});
    throw UnknownMap(name);
}

bool check_isometry(const LatticeMap& map) {
    const PicMat g = gram(map.basis);
    // exact small integers; Eigen's int64 products suffice, magnitudes are
    // re-checked through the pairing path in the suites
    const PicMat conj = map.matrix.transpose() * g * map.matrix;
    if (conj != g) return false;
    const PicClass k = anticanonical(map.basis);
    return PicVec(map.matrix * k.coeffs) == k.coeffs;
}

PicClass apply(const LatticeMap& map, const PicClass& c) {
    if (map.basis != c.basis) throw BasisMismatch();
    return {c.basis, PicVec(map.matrix * c.coeffs)};
}

std::vector<std::int64_t> translation_vector(const LatticeMap& map, const RootBasis& roots) {
    const PicClass k = anticanonical(map.basis);
    std::vector<std::int64_t> out;
    for (const PicClass& root : roots.roots) {
        const PicVec diff = apply(map, root).coeffs - root.coeffs;
        // diff must be an integer multiple of -K = (2, 2, -1, ..., -1)
        const std::int64_t c = diff(2) / k.coeffs(2);
        if (PicVec(c * k.coeffs) != diff)
            throw NotTranslation("root image does not differ by a multiple of -K");
        out.push_back(c);
    }
    return out;
}

LatticeMap blowdown_change_of_basis(BlowdownCase which) {
    LatticeMap map;
    std::vector<PicClass> d_source;
    if (which == BlowdownCase::A2Schlesinger) {
        // source basis (F, F_1..F_9); columns H_f, H_g, E_1..E_8
        map = map_from_columns("blowdown_a2", {{
            {1, 0, 0, 0, 0, 0, -1, 0, 0, 0},   // Hf = F - F6
            {1, 0, 0, 0, 0, -1, 0, 0, 0, 0},   // Hg = F - F5
            {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},    // E1 = F1
            {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},    // E2 = F2
            {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},    // E3 = F3
            {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},    // E4 = F4
            {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},    // E5 = F7
            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},    // E6 = F8
            {1, 0, 0, 0, 0, -1, -1, 0, 0, 0},  // E7 = F - F5 - F6
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},    // E8 = F9
        }});
        map.basis = PicBasisKind::P2_9;
        d_source = {cls(PicBasisKind::P2_9, {2, -1, -1, -1, -1, -1, -1, 0, 0, 0}),
                    cls(PicBasisKind::P2_9, {1, 0, 0, 0, 0, 0, -1, -1, -1, 0}),
                    cls(PicBasisKind::P2_9, {0, 0, 0, 0, 0, 0, 1, 0, 0, -1})};
    } else {
        // source basis (H_x, H_y, F_1..F_8)
        map = map_from_columns("blowdown_a1", {{
            {1, 1, 0, 0, 0, 0, -1, 0, -1, 0},   // Hf = Hx + Hy - F5 - F7
            {1, 1, 0, 0, 0, 0, 0, -1, -1, 0},   // Hg = Hx + Hy - F6 - F7
            {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},     // E1 = F1
            {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},     // E2 = F2
            {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},     // E3 = F3
            {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},     // E4 = F4
            {0, 1, 0, 0, 0, 0, 0, 0, -1, 0},    // E5 = Hy - F7
            {1, 0, 0, 0, 0, 0, 0, 0, -1, 0},    // E6 = Hx - F7
            {1, 1, 0, 0, 0, 0, -1, -1, -1, 0},  // E7 = Hx + Hy - F5 - F6 - F7
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},     // E8 = F8
        }});
        map.basis = PicBasisKind::P1xP1_8;
        d_source = {cls(PicBasisKind::P1xP1_8, {2, 2, -1, -1, -1, -1, -1, -1, -2, 0}),
                    cls(PicBasisKind::P1xP1_8, {0, 0, 0, 0, 0, 0, 0, 0, 1, -1})};
    }

    // pairing relations of a P1xP1 8-point basis, computed in the source Gram
    const auto column_class = [&](int j) {
        return PicClass{map.basis, PicVec(map.matrix.col(j))};
    };
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const std::int64_t p = pairing(column_class(i), column_class(j));
            std::int64_t expected = 0;
            if (i < 2 && j < 2) expected = (i == j) ? 0 : 1;
            if (i >= 2 && i == j) expected = -1;
            if (p != expected) throw Error("blowdown pairing relation fails");
        }
    }
    // the anticanonical class agrees on both sides
    PicVec minus_k = PicVec::Zero();
    minus_k += 2 * map.matrix.col(0) + 2 * map.matrix.col(1);
    for (int j = 2; j < 10; ++j) minus_k -= map.matrix.col(j);
    if (minus_k != anticanonical(map.basis).coeffs) throw Error("blowdown anticanonical mismatch");

    // the surface roots decompose the same way on both sides
    const RootBasis target_roots =
        root_basis(which == BlowdownCase::A2Schlesinger ? RootLabel::A2Surface : RootLabel::A1Surface);
    for (std::size_t r = 0; r < d_source.size(); ++r) {
        PicVec expanded = PicVec::Zero();
        for (int j = 0; j < 10; ++j) expanded += target_roots.roots[r].coeffs(j) * map.matrix.col(j);
        if (expanded != d_source[r].coeffs) throw Error("blowdown surface-root mismatch");
    }
    return map;
}

}  // namespace isodyn
