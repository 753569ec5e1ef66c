#pragma once

#include <srg/matrix.hpp>
#include <srg/params.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace srg {

/// Simple undirected graph: dense symmetric adjacency, zero diagonal,
/// 0-based vertex ids.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), adj_(n, std::vector<bool>(n, false)) {}

    std::size_t size() const { return n_; }

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }

    void add_edge(std::size_t i, std::size_t j);

    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;

    Graph complement() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<bool>> adj_;
};

/// Parses a graph6 string (short form n <= 62 plus the 4-byte extended
/// header). Trailing whitespace and an optional ">>graph6<<" prefix are
/// accepted. Throws MalformedHeader / TruncatedBitVector / TrailingGarbage.
Graph parse_graph6(const std::string& text);

/// Encodes to graph6; short form for n <= 62, extended header up to 258047,
/// TooLarge beyond.
std::string write_graph6(const Graph& g);

/// Parses {"n": int, "edges": [[i,j],...]}. Throws BadGraphFile.
Graph parse_adjacency_json(const std::string& text);
std::string write_adjacency_json(const Graph& g);

/// Confirms strong regularity by exhaustive pair counting and returns the
/// parameters. Complete, empty and disconnected (mu = 0) graphs are rejected
/// as Degenerate. Throws NotRegular / NotStronglyRegular with a witness.
SrgParams verify_srg(const Graph& g);

/// Gram matrix I + w1*A + w2*(J-I-A) of the unit representation in the
/// theta-eigenspace; positive semidefinite of rank mult(theta).
RatMatrix representation_gram(const Graph& g, long theta);

/// The cycles partitioning the neighborhood of `center` (requires the induced
/// subgraph on the neighborhood to be 2-regular).
struct NeighborhoodDecomposition {
    std::size_t center = 0;
    std::vector<std::vector<std::size_t>> cycles;  // vertex ids in cycle order
};

/// Decomposes the neighborhood of u into cycles. Each new cycle starts at its
/// minimum-id unvisited vertex and proceeds toward the smaller-id neighbor.
/// Throws NotDegreeTwo with the offending vertex.
NeighborhoodDecomposition neighborhood_cycles(const Graph& g, std::size_t u);

/// A cycle of length t with the subset of positions adjacent to an external
/// vertex marked.
struct MarkedCycle {
    std::size_t t = 0;
    std::vector<std::size_t> marks;  // positions on the cycle, sorted
};

/// Marks the common neighbors of u and w on each neighborhood cycle of u.
/// Requires w distinct from and non-adjacent to u; mark totals sum to the
/// number of common neighbors (mu in a strongly regular graph).
std::vector<MarkedCycle> mu_marks(const Graph& g, std::size_t u, std::size_t w);

}  // namespace srg
