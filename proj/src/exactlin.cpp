#include <srg/exactlin.hpp>

#include <srg/errors.hpp>

#include <numeric>

namespace srg {

RatMatrix gram_path(std::size_t r) {
    if (r < 1) throw Error("gram_path: r >= 1 required");
    RatMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        m(i, i) = 2;
        if (i + 1 < r) {
            m(i, i + 1) = -1;
            m(i + 1, i) = -1;
        }
    }
    return m;
}

RatMatrix gram_cycle(std::size_t t) {
    if (t < 3) throw Error("gram_cycle: t >= 3 required");
    RatMatrix m(t, t);
    for (std::size_t i = 0; i < t; ++i) {
        m(i, i) = 2;
        m(i, (i + 1) % t) = -1;
        m(i, (i + t - 1) % t) = -1;
    }
    return m;
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw Error("det: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    RatMatrix a = m;
    Rat prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Rat(0);
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Rat d = a(n - 1, n - 1);
    if (negate) d = -d;
    return d;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a(p, c) == 0) ++p;
        if (p == nr) continue;
        a.swap_rows(p, r);
        const Rat pv = a(r, c);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (a(i, c) == 0) continue;
            const Rat f = a(i, c) / pv;
            for (std::size_t j = c; j < nc; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

PsdResult psd_rank(const RatMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("psd_rank: symmetric matrix required");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    std::vector<std::size_t> active(n);
    std::iota(active.begin(), active.end(), std::size_t{0});
    std::size_t positive_pivots = 0;
    while (!active.empty()) {
        std::size_t pick = n;  // n = none found
        for (std::size_t idx : active) {
            if (a(idx, idx) < 0) return {false, rank(m)};
            if (pick == n && a(idx, idx) > 0) pick = idx;
        }
        if (pick == n) {
            // all remaining diagonals are zero: PSD iff the block is zero
            for (std::size_t i : active)
                for (std::size_t j : active)
                    if (a(i, j) != 0) return {false, rank(m)};
            break;
        }
        const Rat piv = a(pick, pick);
        active.erase(std::find(active.begin(), active.end(), pick));
        for (std::size_t i : active) {
            if (a(i, pick) == 0) continue;
            const Rat f = a(i, pick) / piv;
            for (std::size_t j : active) a(i, j) -= f * a(pick, j);
        }
        ++positive_pivots;
    }
    return {true, positive_pivots};
}

std::optional<RatVector> solve_consistent(const RatMatrix& m, const RatVector& b) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (b.size() != nr) throw Error("solve_consistent: dimension mismatch");
    RatMatrix a(nr, nc + 1);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) a(i, j) = m(i, j);
        a(i, nc) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a(p, c) == 0) ++p;
        if (p == nr) continue;
        a.swap_rows(p, r);
        const Rat pv = a(r, c);
        for (std::size_t j = c; j <= nc; ++j) a(r, j) /= pv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rat f = a(i, c);
            for (std::size_t j = c; j <= nc; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (a(i, nc) != 0) return std::nullopt;
    RatVector x(nc, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a(i, nc);
    return x;
}

Rat projection_sq_norm(const RatMatrix& gram, const RatVector& b) {
    auto x = solve_consistent(gram, b);
    if (!x) throw InconsistentSystem("projection_sq_norm: b not in the column space of gram");
    return dot(b, *x);
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
    if (x.size() != m.cols()) throw Error("mat_vec: dimension mismatch");
    RatVector y(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

}  // namespace srg
