#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charex {

// Input/contract violations. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The moment recursion refuted or under-determined the ansatz mid-run.
// The CLI maps these to exit code 3.
class RecursionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateMuError : public ValidationError {
public:
    DuplicateMuError(std::size_t i, std::size_t j)
        : ValidationError("DuplicateMu: entries " + std::to_string(i) + " and " +
                          std::to_string(j) + " coincide"),
          first(i),
          second(j) {}
    std::size_t first;
    std::size_t second;
};

class ZeroMuError : public ValidationError {
public:
    explicit ZeroMuError(std::size_t i)
        : ValidationError("ZeroMu: entry " + std::to_string(i) + " is zero"), index(i) {}
    std::size_t index;
};

class NonPositiveMuError : public ValidationError {
public:
    explicit NonPositiveMuError(std::size_t i)
        : ValidationError("NonPositiveMu: entry " + std::to_string(i) +
                          " must be strictly positive for the Laplace family"),
          index(i) {}
    std::size_t index;
};

class TooFewMuError : public ValidationError {
public:
    explicit TooFewMuError(std::size_t n)
        : ValidationError("TooFewMu: need at least 2 entries, got " + std::to_string(n)),
          count(n) {}
    std::size_t count;
};

class FamilyMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OddDegreeError : public ValidationError {
public:
    explicit OddDegreeError(int m)
        : ValidationError("OddDegree: identity is stated for even powers, got m = " +
                          std::to_string(m)),
          degree(m) {}
    int degree;
};

class RankOutOfRangeError : public ValidationError {
public:
    RankOutOfRangeError(int rank, int sample_size)
        : ValidationError("RankOutOfRange: rank " + std::to_string(rank) +
                          " outside sample of size " + std::to_string(sample_size)),
          rank(rank),
          sample_size(sample_size) {}
    int rank;
    int sample_size;
};

class DegreeCapError : public ValidationError {
public:
    DegreeCapError(int m, int cap)
        : ValidationError("DegreeCap: degree " + std::to_string(m) +
                          " exceeds the configured cap " + std::to_string(cap)),
          degree(m),
          cap(cap) {}
    int degree;
    int cap;
};

class InsufficientMomentsError : public ValidationError {
public:
    InsufficientMomentsError(int needed, int have)
        : ValidationError("InsufficientMoments: need moments up to degree " +
                          std::to_string(needed) + ", have up to " + std::to_string(have)),
          needed(needed),
          have(have) {}
    int needed;
    int have;
};

class InsufficientSeedsError : public ValidationError {
public:
    InsufficientSeedsError()
        : ValidationError("InsufficientSeeds: the recursion needs a degree-1 seed") {}
};

}  // namespace charex
