#pragma once

#include <srg/matrix.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace srg {

/// Basis Gram matrix of a positive definite lattice.
struct LatticeGram {
    std::size_t rank = 0;
    RatMatrix gram;
};

/// Integer coordinate vector in the lattice basis.
using RootVector = std::vector<long>;

/// All lattice vectors of a fixed norm, lexicographically sorted; closed
/// under negation by construction.
struct RootSet {
    std::vector<RootVector> roots;
};

enum class AdeType { A, D, E };

struct AdeComponent {
    AdeType type;
    std::size_t rank;
    std::size_t root_count;
};

struct RootClassification {
    std::vector<AdeComponent> components;
};

std::string ade_name(const AdeComponent& c);

/// Complete enumeration of integer vectors x with x^T G x = target_norm,
/// via exact branch-and-bound with rational interval bounds.
/// Throws NotPositiveDefinite.
RootSet short_vectors(const LatticeGram& lat, const Rat& target_norm);

/// Splits a complete norm-2 root set into connected components under
/// non-orthogonality and identifies each by its (rank, root count) pair,
/// which is unambiguous among simply-laced systems.
/// Throws UnrecognizedComponent when a pair matches no ADE system.
RootClassification classify(const RootSet& rs, const LatticeGram& lat);

/// Maximum total root count over direct sums of simply-laced systems of
/// total rank <= rank; certified for rank <= 4 only (RankUnsupported above).
std::size_t max_roots(std::size_t rank);

/// Simple-root Gram matrices (entries 2, -1, 0 per the Dynkin diagram).
RatMatrix simple_root_gram_a(std::size_t n);
RatMatrix simple_root_gram_d(std::size_t n);

}  // namespace srg
