#pragma once

#include <srg/rat.hpp>

#include <string>
#include <vector>

namespace srg {

/// Parameter quadruple (v, k, lambda, mu) of a strongly regular graph.
/// Valid instances satisfy 0 < k, v >= k+2, 0 <= lambda < k, 1 <= mu <= k
/// and the counting identity k(k-lambda-1) = (v-k-1)mu.
struct SrgParams {
    long v;
    long k;
    long lambda;
    long mu;
};

/// Diameter-2 intersection numbers derived from the parameters.
struct IntersectionArray {
    long b0, b1;  // b0 = k, b1 = k - lambda - 1
    long c1, c2;  // c1 = 1, c2 = mu
    long a1, a2;  // a1 = lambda, a2 = k - mu
};

/// Eigenvalue data. When `integral` is false the parameters are of conference
/// type: the nontrivial eigenvalues are ((lambda-mu) +- sqrt(disc))/2 with
/// non-square disc and both multiplicities equal (v-1)/2.
struct Spectrum {
    long theta_plus = 0;   // meaningful when integral
    long theta_minus = 0;  // meaningful when integral
    long mult_k = 1;
    long mult_plus = 0;
    long mult_minus = 0;
    bool integral = false;
    Int disc;  // (lambda-mu)^2 + 4(k-mu)
    long half_trace_num = 0;  // lambda - mu, the rational part numerator of 2*theta
};

/// Inner products of the unit representation vectors at distance 0, 1, 2
/// in the eigenspace of `eigenvalue`.
struct CosineSequence {
    Rat w0;
    Rat w1;
    Rat w2;
    long eigenvalue = 0;
};

struct FeasibilityCheck {
    std::string name;
    bool ok;
    std::string detail;  // exact values, rendered
};

struct FeasibilityReport {
    long v = 0, k = 0, lambda = 0, mu = 0;
    bool identity_ok = false;
    bool integrality_ok = false;
    bool krein_ok = false;
    bool absolute_bound_ok = false;
    std::vector<FeasibilityCheck> details;

    bool feasible() const {
        return identity_ok && integrality_ok && krein_ok && absolute_bound_ok;
    }
};

/// Checks ranges and the identity k(k-lambda-1) = (v-k-1)mu.
/// Throws RangeViolation or IdentityViolation.
SrgParams validate_params(long v, long k, long lambda, long mu);

IntersectionArray intersection_array(const SrgParams& p);

/// Eigenvalues are the roots of x^2 - (lambda-mu)x - (k-mu); multiplicities
/// come from the trace conditions, evaluated exactly and checked for
/// integrality. Throws NonIntegralMultiplicity when no integral assignment
/// exists (which rules the parameters infeasible).
Spectrum spectrum(const SrgParams& p);

/// Symbolic rendering of a nontrivial eigenvalue ("2", "-7", or the
/// half-integer surd form for conference parameters).
std::string theta_string(const Spectrum& s, bool plus);

/// The exact cosine sequence (1, theta/k, w2) with w2 solving
/// theta*w1 = w0 + lambda*w1 + (k-lambda-1)*w2.
/// Throws NotAnEigenvalue / NonIntegralEigenvalue.
CosineSequence cosine_sequence(const SrgParams& p, long theta);

/// Evaluates identity, multiplicity integrality, both Krein conditions, and
/// the absolute bound, all exactly and without short-circuiting.
FeasibilityReport feasibility_report(long v, long k, long lambda, long mu);
FeasibilityReport feasibility_report(const SrgParams& p);

}  // namespace srg
