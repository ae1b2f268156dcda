#pragma once

#include <charex/errors.hpp>
#include <charex/rational.hpp>
#include <charex/symfunc.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace charex {

enum class Family { Exponential, Laplace };

std::string family_name(Family f);

// Coefficient vector mu_1..mu_n. Both families require n >= 2 and pairwise
// distinct nonzero entries; the Laplace family additionally requires every
// entry to be strictly positive.
class MuVector {
public:
    MuVector(std::vector<Rational> entries, Family family);

    std::span<const Rational> entries() const { return entries_; }
    const Rational& operator[](std::size_t k) const { return entries_[k]; }
    std::size_t size() const { return entries_.size(); }
    Family family() const { return family_; }
    bool all_positive() const { return all_positive_; }

    friend bool operator==(const MuVector& a, const MuVector& b) {
        return a.family_ == b.family_ && a.entries_ == b.entries_;
    }

private:
    std::vector<Rational> entries_;
    Family family_;
    bool all_positive_;
};

// Exact mixture coefficients theta_1..theta_n in positional correspondence
// with the mu entries; they sum to 1 exactly (checked at construction).
class ThetaSet {
public:
    ThetaSet(std::vector<Rational> coefficients, MuVector source_mu);

    std::span<const Rational> coefficients() const { return coefficients_; }
    const Rational& operator[](std::size_t k) const { return coefficients_[k]; }
    std::size_t size() const { return coefficients_.size(); }
    Family family() const { return source_mu_.family(); }
    const MuVector& source_mu() const { return source_mu_; }

private:
    std::vector<Rational> coefficients_;
    MuVector source_mu_;
};

// theta_k = prod_{j != k} mu_k / (mu_k - mu_j)
ThetaSet theta_exponential(const MuVector& mu);

// theta_k = prod_{j != k} mu_k^2 / (mu_k^2 - mu_j^2)
ThetaSet theta_laplace(const MuVector& mu);

// sum_k theta_k mu_k^m
Rational weighted_power_sum(const ThetaSet& theta, int m);

enum class ConditionVerdict {
    PassUpTo,         // no equality found in the scanned range m = 2..m_max
    FailAt,           // first m >= 2 with h_m(mu) = p_m(mu)
    PassProvenAllM,   // closed-form argument covers every m >= 2
};

struct ConditionReport {
    ConditionVerdict verdict;
    int checked_up_to;              // the requested m_max
    std::optional<int> fail_m;      // set for FailAt
    std::optional<Rational> h_m;    // witness values at fail_m
    std::optional<Rational> p_m;
};

// Scans h_m(mu) ?= p_m(mu) for m = 2..m_max. All-positive vectors pass for
// every m (each mu_k^m appears on the left along with strictly positive extra
// terms); for n = 2 the equality case has a closed form: it happens iff
// mu_2 = -mu_1, first at m = 3, so that pair short-circuits to FailAt(3).
ConditionReport check_condition(const MuVector& mu, int m_max);

struct Lemma1Check {
    bool holds;
    Rational lhs;  // sum_k theta_k mu_k^m
    Rational rhs;  // h_m(mu), or h_{m/2}(mu_1^2..mu_n^2) for the Laplace form
};

// Exponential form: sum_k theta_k mu_k^m = h_m(mu), any m >= 0.
Lemma1Check verify_lemma1(const MuVector& mu, const ThetaSet& theta, int m);

// Laplace form, stated for even m: sum_k theta_k mu_k^m = h_{m/2}(mu^2).
// Odd m raises OddDegreeError; odd-power sums remain reachable through
// weighted_power_sum.
Lemma1Check verify_lemma1_laplace(const MuVector& mu, const ThetaSet& theta, int m);

}  // namespace charex
