#include <srg/roots.hpp>

#include <srg/errors.hpp>
#include <srg/exactlin.hpp>

#include <algorithm>
#include <numeric>

namespace srg {

std::string ade_name(const AdeComponent& c) {
    const char letter = c.type == AdeType::A ? 'A' : c.type == AdeType::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(c.rank);
}

namespace {

// Diagonal decomposition of a positive definite form:
// Q(x) = sum_i d[i] * (x_i + sum_{j>i} c[i][j] x_j)^2, all d[i] > 0.
struct DiagonalForm {
    std::vector<Rat> d;
    RatMatrix c;
};

DiagonalForm decompose(const RatMatrix& g) {
    const std::size_t n = g.rows();
    RatMatrix a = g;
    DiagonalForm out{std::vector<Rat>(n), RatMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) <= 0)
            throw NotPositiveDefinite("pivot " + std::to_string(i) + " is " +
                                      to_string(a(i, i)));
        out.d[i] = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) out.c(i, j) = a(i, j) / a(i, i);
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t s = i + 1; s < n; ++s)
                a(r, s) -= a(i, r) * a(i, s) / a(i, i);
    }
    return out;
}

void enumerate(const DiagonalForm& fm, std::size_t level, const Rat& remaining,
               std::vector<long>& x, std::vector<RootVector>& out) {
    if (level == std::size_t(-1) || remaining < 0) return;
    // walking down from the last coordinate; at level i choose x_i
    const std::size_t i = level;
    Rat shift(0);
    for (std::size_t j = i + 1; j < x.size(); ++j) shift += fm.c(i, j) * long(x[j]);
    const Rat box = remaining / fm.d[i];
    const Int lo = ceil_minus_sqrt(-shift, box);
    const Int hi = floor_plus_sqrt(-shift, box);
    for (Int xi = lo; xi <= hi; ++xi) {
        x[i] = xi.get_si();
        const Rat term = fm.d[i] * (Rat(x[i]) + shift) * (Rat(x[i]) + shift);
        const Rat rest = remaining - term;
        if (rest < 0) continue;
        if (i == 0) {
            if (rest == 0) out.push_back(x);
        } else {
            enumerate(fm, i - 1, rest, x, out);
        }
    }
    x[i] = 0;
}

}  // namespace

RootSet short_vectors(const LatticeGram& lat, const Rat& target_norm) {
    if (lat.rank == 0 || !lat.gram.is_square() || lat.gram.rows() != lat.rank)
        throw Error("short_vectors: gram must be rank x rank");
    if (!lat.gram.is_symmetric()) throw NotSymmetric("short_vectors: gram must be symmetric");
    if (target_norm <= 0) throw Error("short_vectors: target norm must be positive");
    const DiagonalForm fm = decompose(lat.gram);
    std::vector<long> x(lat.rank, 0);
    RootSet rs;
    enumerate(fm, lat.rank - 1, target_norm, x, rs.roots);
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

namespace {

Rat gram_inner(const RatMatrix& g, const RootVector& a, const RootVector& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += g(i, j) * a[i] * b[j];
    }
    return s;
}

AdeComponent identify(std::size_t rank, std::size_t count) {
    if (count == rank * (rank + 1)) return {AdeType::A, rank, count};
    if (rank >= 4 && count == 2 * rank * (rank - 1)) return {AdeType::D, rank, count};
    if (rank == 6 && count == 72) return {AdeType::E, 6, 72};
    if (rank == 7 && count == 126) return {AdeType::E, 7, 126};
    if (rank == 8 && count == 240) return {AdeType::E, 8, 240};
    throw UnrecognizedComponent("component with rank " + std::to_string(rank) + " and " +
                                std::to_string(count) +
                                " roots matches no simply-laced system");
}

}  // namespace

RootClassification classify(const RootSet& rs, const LatticeGram& lat) {
    const std::size_t m = rs.roots.size();
    // connected components under the non-orthogonality relation
    std::vector<std::size_t> comp(m, std::size_t(-1));
    std::size_t ncomp = 0;
    for (std::size_t seed = 0; seed < m; ++seed) {
        if (comp[seed] != std::size_t(-1)) continue;
        std::vector<std::size_t> stack{seed};
        comp[seed] = ncomp;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t other = 0; other < m; ++other) {
                if (comp[other] != std::size_t(-1)) continue;
                if (gram_inner(lat.gram, rs.roots[cur], rs.roots[other]) != 0) {
                    comp[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }

    RootClassification out;
    for (std::size_t c = 0; c < ncomp; ++c) {
        std::vector<const RootVector*> members;
        for (std::size_t i = 0; i < m; ++i)
            if (comp[i] == c) members.push_back(&rs.roots[i]);
        RatMatrix span(members.size(), lat.rank);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < lat.rank; ++j) span(i, j) = (*members[i])[j];
        out.components.push_back(identify(rank(span), members.size()));
    }
    return out;
}

std::size_t max_roots(std::size_t rank) {
    if (rank < 1 || rank > 4)
        throw RankUnsupported("max_roots is certified for ranks 1..4 only");
    // root counts of the irreducible simply-laced systems by rank
    // (rank 3: D3 coincides with A3; rank 4: D4 = 24 beats A4 = 20)
    auto irreducible = [](std::size_t n) -> std::vector<std::size_t> {
        std::vector<std::size_t> counts{n * (n + 1)};  // A_n
        if (n >= 4) counts.push_back(2 * n * (n - 1));  // D_n
        return counts;
    };
    std::vector<std::size_t> best(rank + 1, 0);
    for (std::size_t r = 1; r <= rank; ++r)
        for (std::size_t n = 1; n <= r; ++n)
            for (std::size_t cnt : irreducible(n))
                best[r] = std::max(best[r], cnt + best[r - n]);
    return best[rank];
}

RatMatrix simple_root_gram_a(std::size_t n) {
    if (n < 1) throw Error("simple_root_gram_a: rank >= 1 required");
    return gram_path(n);
}

RatMatrix simple_root_gram_d(std::size_t n) {
    if (n < 3) throw Error("simple_root_gram_d: rank >= 3 required");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        m(i, i + 1) = -1;
        m(i + 1, i) = -1;
    }
    m(n - 3, n - 1) = -1;
    m(n - 1, n - 3) = -1;
    return m;
}

}  // namespace srg
