#include <charex/moments.hpp>

#include <algorithm>

namespace charex {

namespace {

// Pascal triangle up to row `max`, exact.
std::vector<std::vector<BigInt>> binomial_table(int max) {
    std::vector<std::vector<BigInt>> c(max + 1);
    for (int i = 0; i <= max; ++i) {
        c[i].assign(i + 1, BigInt(1));
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

// sum over W_{n,m} with every part <= part_cap of
// multinomial(c) * prod_j mu_j^{k_j} M_{k_j}.
// Walks the composition tree with running multinomial coefficient and
// monomial, so shared prefixes are computed once.
Rational weighted_composition_sum(std::span<const Rational> mu, std::span<const Rational> M,
                                  int m, int part_cap) {
    const int n = static_cast<int>(mu.size());
    const auto binom = binomial_table(m);
    std::vector<std::vector<Rational>> pow(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j) {
        pow[j].reserve(m + 1);
        pow[j].emplace_back(1);
        for (int k = 1; k <= m; ++k) pow[j].push_back(pow[j].back() * mu[j]);
    }

    Rational acc(0);
    // coeff carries prod of C(used + k, k) = m!/(k_1!..k_j!) over the prefix.
    auto recurse = [&](auto&& self, int j, int used, const BigInt& coeff,
                       const Rational& partial) -> void {
        const int rem = m - used;
        if (j == n - 1) {
            if (rem > part_cap) return;
            acc += partial * pow[j][rem] * M[rem] * Rational(coeff * binom[m][rem]);
            return;
        }
        const int top = std::min(rem, part_cap);
        for (int k = top; k >= 0; --k) {
            self(self, j + 1, used + k, coeff * binom[used + k][k],
                 partial * pow[j][k] * M[k]);
        }
    };
    recurse(recurse, 0, 0, BigInt(1), Rational(1));
    return acc;
}

}  // namespace

MomentSeq::MomentSeq(std::vector<Rational> values, std::optional<Family> family_context)
    : values_(std::move(values)), family_context_(family_context) {
    if (values_.empty()) throw ValidationError("MomentSeq: needs at least M_0");
    if (values_[0] != Rational(1)) throw ValidationError("MomentSeq: M_0 must be 1");
    if (family_context_ == Family::Exponential && values_.size() >= 3) {
        // variance nonnegativity, exact
        if (values_[2] < values_[1] * values_[1])
            throw ValidationError("MomentSeq: M_2 >= M_1^2 violated for exponential context");
    }
}

Rational moment_of_sum(const MuVector& mu, const MomentSeq& moments, int m, int degree_cap) {
    if (m < 0) throw ValidationError("moment_of_sum: negative degree");
    if (m > degree_cap) throw DegreeCapError(m, degree_cap);
    if (moments.max_degree() < m) throw InsufficientMomentsError(m, moments.max_degree());
    if (m == 0) return Rational(1);
    return weighted_composition_sum(mu.entries(), moments.values(), m, m);
}

MomentSeq forward_moments(Family family, const Rational& lambda, int m_max) {
    if (!lambda.is_positive()) throw ValidationError("forward_moments: lambda must be > 0");
    if (m_max < 0) throw ValidationError("forward_moments: m_max must be >= 0");
    std::vector<Rational> values;
    values.reserve(m_max + 1);
    Rational lambda_pow(1);  // lambda^m
    BigInt fact(1);          // m!
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) {
            lambda_pow *= lambda;
            fact *= m;
        }
        const bool zero = family == Family::Laplace && m % 2 == 1;
        values.push_back(zero ? Rational(0) : Rational(fact) / lambda_pow);
    }
    return MomentSeq(std::move(values), family);
}

std::string step_outcome_name(StepOutcome o) {
    switch (o) {
        case StepOutcome::Solved: return "Solved";
        case StepOutcome::SingularConsistent: return "SingularConsistent";
        case StepOutcome::SingularInconsistent: return "SingularInconsistent";
    }
    return "?";
}

Rational step_denominator(const ThetaSet& theta, int m) {
    return weighted_power_sum(theta, m) - power_sum(theta.source_mu().entries(), m, m);
}

Reconstruction reconstruct_moments(const MuVector& mu, const ThetaSet& theta,
                                   const std::map<int, Rational>& seeds, int m_max) {
    if (!(theta.source_mu() == mu))
        throw ValidationError("reconstruct_moments: theta was not derived from this mu");
    if (m_max < 2) throw ValidationError("reconstruct_moments: m_max must be >= 2");
    const auto seed1 = seeds.find(1);
    if (seed1 == seeds.end()) throw InsufficientSeedsError();

    std::vector<Rational> M;
    M.reserve(m_max + 1);
    M.emplace_back(1);
    M.push_back(seed1->second);

    std::vector<RecursionStep> steps;
    steps.reserve(m_max - 1);
    for (int m = 2; m <= m_max; ++m) {
        Rational d = step_denominator(theta, m);
        Rational r = weighted_composition_sum(mu.entries(), M, m, m - 1);
        if (!d.is_zero()) {
            Rational value = r / d;
            steps.push_back({m, std::move(d), std::move(r), StepOutcome::Solved, value});
            M.push_back(std::move(value));
            continue;
        }
        if (!r.is_zero()) {
            // Logged by the thrown error; no law matches these inputs.
            throw InconsistentError(m, std::move(d), std::move(r));
        }
        const auto seed = seeds.find(m);
        if (seed == seeds.end()) throw MissingSeedError(m);
        steps.push_back({m, std::move(d), std::move(r), StepOutcome::SingularConsistent,
                         seed->second});
        M.push_back(seed->second);
    }
    return Reconstruction{MomentSeq(std::move(M)), std::move(steps)};
}

SeedVerdict classify_from_seed(const Rational& first_moment) {
    if (first_moment.is_zero()) return {SeedClass::Degenerate, Rational(0)};
    if (first_moment.is_positive()) return {SeedClass::Exponential, first_moment.inverse()};
    return {SeedClass::NegExponential, -first_moment.inverse()};
}

}  // namespace charex
