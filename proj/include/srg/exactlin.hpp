#pragma once

#include <srg/matrix.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace srg {

using RatVector = std::vector<Rat>;

/// r x r Gram matrix of r consecutive hatted path vectors:
/// 2 on the diagonal, -1 on the first off-diagonals.
RatMatrix gram_path(std::size_t r);

/// t x t Gram matrix of the hatted vectors around a t-cycle (t >= 3):
/// circulant with 2 on the diagonal and -1 for cycle-adjacent pairs.
RatMatrix gram_cycle(std::size_t t);

/// Exact determinant via Bareiss fraction-free elimination.
Rat det(const RatMatrix& m);

/// Exact rank via Gaussian elimination; accepts rectangular input.
std::size_t rank(const RatMatrix& m);

struct PsdResult {
    bool is_psd;
    std::size_t rank;
};

/// Exact positive-semidefiniteness test with rank, by symmetric elimination
/// on positive diagonal pivots. A zero diagonal with a nonzero residual row,
/// or any negative diagonal, refutes. Throws NotSymmetric.
PsdResult psd_rank(const RatMatrix& m);

/// A particular solution of m x = b (free variables set to 0),
/// or nullopt when the system is inconsistent.
std::optional<RatVector> solve_consistent(const RatMatrix& m, const RatVector& b);

/// Squared length (p,p) of the orthogonal projection of a target vector onto
/// span{g_i}, where gram = Gram(g_i) and b_i = (target, g_i). Equal to b^T x
/// for any solution of gram x = b; well-defined on singular gram matrices.
/// Throws InconsistentSystem when b is not in the column space.
Rat projection_sq_norm(const RatMatrix& gram, const RatVector& b);

Rat dot(const RatVector& a, const RatVector& b);
RatVector mat_vec(const RatMatrix& m, const RatVector& x);

}  // namespace srg
