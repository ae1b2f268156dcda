#pragma once

#include <charex/errors.hpp>
#include <charex/mixture.hpp>
#include <charex/rational.hpp>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace charex {

// Raw moment sequence M_0..M_max, M_m = E(X^m). This is the real-domain
// carrier of the derivatives of the characteristic function at zero:
// phi^(m)(0) = i^m M_m, so exact rational arithmetic applies throughout and
// the i^m bookkeeping never enters the code.
class MomentSeq {
public:
    explicit MomentSeq(std::vector<Rational> values,
                       std::optional<Family> family_context = std::nullopt);

    const Rational& operator[](int m) const { return values_[static_cast<std::size_t>(m)]; }
    int max_degree() const { return static_cast<int>(values_.size()) - 1; }
    std::span<const Rational> values() const { return values_; }
    std::optional<Family> family_context() const { return family_context_; }

private:
    std::vector<Rational> values_;
    std::optional<Family> family_context_;
};

// E(S^m) for S = mu_1 X_1 + ... + mu_n X_n with X_k i.i.d. carrying the given
// moments: sum over W_{n,m} of multinomial(c) * prod_j mu_j^{k_j} M_{k_j}.
Rational moment_of_sum(const MuVector& mu, const MomentSeq& moments, int m,
                       int degree_cap = kDefaultDegreeCap);

// Exact moments of the named family at rate lambda > 0:
//   Exponential: M_m = m! / lambda^m
//   Laplace:     M_m = m! / lambda^m for even m, 0 for odd m
MomentSeq forward_moments(Family family, const Rational& lambda, int m_max);

enum class StepOutcome { Solved, SingularConsistent, SingularInconsistent };

std::string step_outcome_name(StepOutcome o);

// One degree of the recursion: M_m * D_m = R_m with
//   D_m = sum_k theta_k mu_k^m - p_m(mu)
//   R_m = sum over compositions of m with every part < m
//         of multinomial * prod_j mu_j^{k_j} M_{k_j}
struct RecursionStep {
    int m;
    Rational denominator;  // D_m
    Rational rhs;          // R_m
    StepOutcome outcome;
    Rational moment;       // M_m for Solved / SingularConsistent
};

// D_m as the recursion computes it. Shared with the condition check through
// the identity sum_k theta_k mu_k^m = h_m(mu): D_m = 0 iff h_m = p_m.
Rational step_denominator(const ThetaSet& theta, int m);

class MissingSeedError : public RecursionError {
public:
    explicit MissingSeedError(int m)
        : RecursionError("MissingSeed: step " + std::to_string(m) +
                         " is singular-consistent and needs a seed moment"),
          degree(m) {}
    int degree;
};

class InconsistentError : public RecursionError {
public:
    InconsistentError(int m, Rational d, Rational r)
        : RecursionError("Inconsistent: step " + std::to_string(m) +
                         " has zero denominator but rhs " + r.str() +
                         "; no law satisfies the identity with these inputs"),
          degree(m),
          denominator(std::move(d)),
          rhs(std::move(r)) {}
    int degree;
    Rational denominator;
    Rational rhs;
};

struct Reconstruction {
    MomentSeq moments;
    std::vector<RecursionStep> steps;
};

// The inductive algorithm: M_0 = 1, M_1 = seeds[1], then for m = 2..m_max
// solve M_m D_m = R_m. A zero denominator with zero rhs consumes seeds[m]
// (MissingSeedError without one); a zero denominator with nonzero rhs is an
// InconsistentError. All arithmetic exact.
Reconstruction reconstruct_moments(const MuVector& mu, const ThetaSet& theta,
                                   const std::map<int, Rational>& seeds, int m_max);

enum class SeedClass { Degenerate, Exponential, NegExponential };

struct SeedVerdict {
    SeedClass kind;
    Rational lambda;  // 1/M_1 or -1/M_1; unused for Degenerate
};

// M_1 = 0 -> point mass at zero; M_1 > 0 -> Exp(1/M_1); M_1 < 0 -> the
// sign-flipped branch, -X ~ Exp(-1/M_1).
SeedVerdict classify_from_seed(const Rational& first_moment);

}  // namespace charex
