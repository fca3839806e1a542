#include "isodyn/linalg.hpp"

#include "isodyn/errors.hpp"

#include <algorithm>

namespace isodyn {

Rat rat_from_string(const std::string& text) {
    Rat q;
    if (q.set_str(text, 10) != 0) throw ConfigError("cannot parse rational '" + text + "'");
    if (q.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

namespace {

struct Echelon {
    RatMat m;                    // reduced row echelon form
    std::vector<Eigen::Index> pivot_cols;
};

Echelon rref(RatMat m) {
    Echelon out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        m.row(p).swap(m.row(r));
        const Rat inv_pivot = Rat(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv_pivot;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat factor = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace

RatMat solve_linear(const RatMat& a, const RatMat& b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.rows() != n) throw InvalidIndex("solve_linear shape");
    RatMat aug(n, n + b.cols());
    aug.leftCols(n) = a;
    aug.rightCols(b.cols()) = b;
    const Echelon e = rref(std::move(aug));
    if (static_cast<Eigen::Index>(e.pivot_cols.size()) != n ||
        (n > 0 && e.pivot_cols.back() >= n))
        throw SingularMatrix();
    return e.m.rightCols(b.cols());
}

RatMat mat_inverse(const RatMat& a) { return solve_linear(a, identity(a.rows())); }

Rat det(const RatMat& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw InvalidIndex("det of non-square matrix");
    RatMat m = a;
    Rat d(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            d = -d;
        }
        d *= m(c, c);
        const Rat inv_pivot = Rat(1) / m(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rat factor = m(i, c) * inv_pivot;
            for (Eigen::Index j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return d;
}

Eigen::Index rank(const RatMat& a) { return static_cast<Eigen::Index>(rref(a).pivot_cols.size()); }

std::vector<RatVec> kernel_basis(const RatMat& a) {
    const Eigen::Index cols = a.cols();
    const Echelon e = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v = RatVec::Zero(cols);
        v(free_col) = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v(e.pivot_cols[r]) = -e.m(static_cast<Eigen::Index>(r), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> elem_sym_of_spectrum(const RatMat& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw InvalidIndex("elem_sym_of_spectrum of non-square matrix");
    // Faddeev-LeVerrier: exact over the rationals, avoids enumerating minors.
    // det(tI - a) = t^n + c_1 t^(n-1) + ... + c_n with c_k = (-1)^k e_k.
    std::vector<Rat> e(static_cast<std::size_t>(n));
    RatMat m = identity(n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        const RatMat am = a * m;
        const Rat c = -am.trace() / Rat(k);
        e[static_cast<std::size_t>(k - 1)] = (k % 2 == 1) ? Rat(-c) : c;
        if (k == n) break;
        m = am + c * identity(n);
    }
    return e;
}

std::vector<Rat> elem_sym(const std::vector<Rat>& values) {
    std::vector<Rat> e(values.size() + 1, Rat(0));
    e[0] = 1;
    std::size_t used = 0;
    for (const Rat& v : values) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += v * e[k - 1];
    }
    return std::vector<Rat>(e.begin() + 1, e.end());
}

RatMat projective_frame(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) throw DegenerateFrame("no vectors");
    const Eigen::Index m = vectors.front().rows();
    if (static_cast<Eigen::Index>(vectors.size()) != m + 1)
        throw DegenerateFrame("need m+1 vectors in Q^m");
    RatMat t(m, m);
    for (Eigen::Index j = 0; j < m; ++j) t.col(j) = vectors[static_cast<std::size_t>(j)];
    RatMat t_inv;
    try {
        t_inv = mat_inverse(t);
    } catch (const SingularMatrix&) {
        throw DegenerateFrame("first m vectors are dependent");
    }
    const RatVec w = t_inv * vectors.back();
    RatMat s = t_inv;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (w(i) == 0) throw DegenerateFrame("last vector has a zero coordinate in the frame basis");
        s.row(i) /= w(i);
    }
    return s;
}

bool rational_identity_zero(const std::function<RatMat(const Rat&)>& evaluator, const SamplePlan& plan) {
    if (plan.sample_count < 1) throw InvalidIndex("sample_count must be positive");
    Rng rng(plan.seed);
    int taken = 0;
    while (taken < plan.sample_count) {
        const Rat z = rng.rational(1, 1000000, 1, 1000000);
        bool excluded = false;
        for (const Rat& p : plan.excluded_points)
            if (p == z) { excluded = true; break; }
        if (excluded) continue;
        ++taken;
        if (!is_zero(evaluator(z))) return false;
    }
    return true;
}

}  // namespace isodyn
