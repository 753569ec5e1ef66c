#pragma once

#include <srg/graphs.hpp>

#include <cstddef>
#include <set>
#include <utility>

namespace srg::fixtures {

// Kneser graph K(5,2): vertices are 2-subsets of {0..4}, disjoint sets adjacent
inline Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    Graph g(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto& [a, b] = pairs[i];
            const auto& [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

// quadratic-residue adjacency; q must be a prime with q = 1 (mod 4)
inline Graph paley(long q) {
    std::set<long> residues;
    for (long x = 1; x < q; ++x) residues.insert(x * x % q);
    Graph g{std::size_t(q)};
    for (long i = 0; i < q; ++i)
        for (long j = i + 1; j < q; ++j)
            if (residues.count((j - i) % q)) g.add_edge(std::size_t(i), std::size_t(j));
    return g;
}

// n x n rook graph: same row or same column
inline Graph rook(std::size_t n) {
    Graph g(n * n);
    for (std::size_t a = 0; a < n * n; ++a)
        for (std::size_t b = a + 1; b < n * n; ++b)
            if (a / n == b / n || a % n == b % n) g.add_edge(a, b);
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// complete tripartite K_{2,2,2} (the octahedron), srg(6,4,2,4)
inline Graph octahedron() {
    Graph g(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (i / 2 != j / 2) g.add_edge(i, j);
    return g;
}

inline Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace srg::fixtures
