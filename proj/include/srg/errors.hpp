#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- parameter arithmetic ---

struct RangeViolation : Error {
    using Error::Error;
};

/// k(k-lambda-1) != (v-k-1)mu; carries both sides.
struct IdentityViolation : Error {
    IdentityViolation(const std::string& msg, mpz_class lhs, mpz_class rhs)
        : Error(msg), lhs(std::move(lhs)), rhs(std::move(rhs)) {}
    mpz_class lhs, rhs;
};

struct NonIntegralMultiplicity : Error {
    using Error::Error;
};

struct NotAnEigenvalue : Error {
    using Error::Error;
};

struct NonIntegralEigenvalue : Error {
    using Error::Error;
};

// --- exact linear algebra ---

struct NotSymmetric : Error {
    using Error::Error;
};

struct InconsistentSystem : Error {
    using Error::Error;
};

// --- graph ingestion / structure ---

struct MalformedHeader : Error {
    using Error::Error;
};

struct TruncatedBitVector : Error {
    using Error::Error;
};

struct TrailingGarbage : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct BadGraphFile : Error {
    using Error::Error;
};

struct NotRegular : Error {
    NotRegular(const std::string& msg, std::size_t vertex) : Error(msg), vertex(vertex) {}
    std::size_t vertex;
};

struct NotStronglyRegular : Error {
    NotStronglyRegular(const std::string& msg, std::size_t a, std::size_t b)
        : Error(msg), a(a), b(b) {}
    std::size_t a, b;  // witness pair
};

struct Degenerate : Error {
    using Error::Error;
};

struct NotDegreeTwo : Error {
    NotDegreeTwo(const std::string& msg, std::size_t vertex) : Error(msg), vertex(vertex) {}
    std::size_t vertex;
};

// --- proof replay ---

struct DegenerateCosine : Error {
    using Error::Error;
};

struct NonSquareScale : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct BetaOutOfRange : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

// --- root systems ---

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct UnrecognizedComponent : Error {
    using Error::Error;
};

struct RankUnsupported : Error {
    using Error::Error;
};

}  // namespace srg
