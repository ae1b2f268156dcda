#include <charex/mixture.hpp>

namespace charex {

std::string family_name(Family f) {
    return f == Family::Exponential ? "exp" : "laplace";
}

MuVector::MuVector(std::vector<Rational> entries, Family family)
    : entries_(std::move(entries)), family_(family) {
    if (entries_.size() < 2) throw TooFewMuError(entries_.size());
    all_positive_ = true;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].is_zero()) throw ZeroMuError(i);
        if (!entries_[i].is_positive()) {
            all_positive_ = false;
            if (family_ == Family::Laplace) throw NonPositiveMuError(i);
        }
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if (entries_[i] == entries_[j]) throw DuplicateMuError(i, j);
        }
    }
}

ThetaSet::ThetaSet(std::vector<Rational> coefficients, MuVector source_mu)
    : coefficients_(std::move(coefficients)), source_mu_(std::move(source_mu)) {
    if (coefficients_.size() != source_mu_.size())
        throw ValidationError("ThetaSet: coefficient count must match mu");
    Rational sum(0);
    for (const Rational& t : coefficients_) sum += t;
    if (sum != Rational(1))
        throw ValidationError("ThetaSet: coefficients must sum to 1, got " + sum.str());
}

ThetaSet theta_exponential(const MuVector& mu) {
    if (mu.family() != Family::Exponential)
        throw FamilyMismatchError("theta_exponential: mu is tagged " + family_name(mu.family()));
    const std::size_t n = mu.size();
    std::vector<Rational> theta;
    theta.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational t(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            t *= mu[k] / (mu[k] - mu[j]);
        }
        theta.push_back(std::move(t));
    }
    return ThetaSet(std::move(theta), mu);
}

ThetaSet theta_laplace(const MuVector& mu) {
    if (mu.family() != Family::Laplace)
        throw FamilyMismatchError("theta_laplace: mu is tagged " + family_name(mu.family()));
    const std::size_t n = mu.size();
    std::vector<Rational> theta;
    theta.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational mk2 = mu[k] * mu[k];
        Rational t(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const Rational mj2 = mu[j] * mu[j];
            t *= mk2 / (mk2 - mj2);
        }
        theta.push_back(std::move(t));
    }
    return ThetaSet(std::move(theta), mu);
}

Rational weighted_power_sum(const ThetaSet& theta, int m) {
    if (m < 0) throw ValidationError("weighted_power_sum: negative degree");
    const auto& mu = theta.source_mu();
    Rational acc(0);
    for (std::size_t k = 0; k < theta.size(); ++k) acc += theta[k] * mu[k].pow(m);
    return acc;
}

ConditionReport check_condition(const MuVector& mu, int m_max) {
    if (m_max < 2) throw ValidationError("check_condition: m_max must be >= 2");
    ConditionReport report{ConditionVerdict::PassUpTo, m_max, {}, {}, {}};

    if (mu.all_positive()) {
        report.verdict = ConditionVerdict::PassProvenAllM;
        return report;
    }
    if (mu.size() == 2 && mu[1] == -mu[0]) {
        // Equality holds exactly at every odd m; the first is m = 3.
        report.verdict = ConditionVerdict::FailAt;
        report.fail_m = 3;
        report.h_m = complete_homogeneous(mu.entries(), 3);
        report.p_m = power_sum(mu.entries(), 3);
        return report;
    }
    for (int m = 2; m <= m_max; ++m) {
        Rational h = complete_homogeneous(mu.entries(), m, m_max);
        Rational p = power_sum(mu.entries(), m, m_max);
        if (h == p) {
            report.verdict = ConditionVerdict::FailAt;
            report.fail_m = m;
            report.h_m = std::move(h);
            report.p_m = std::move(p);
            return report;
        }
    }
    return report;
}

namespace {

void check_theta_for(const MuVector& mu, const ThetaSet& theta) {
    if (!(theta.source_mu() == mu))
        throw ValidationError("lemma check: theta was not derived from this mu");
}

}  // namespace

Lemma1Check verify_lemma1(const MuVector& mu, const ThetaSet& theta, int m) {
    if (m < 0) throw ValidationError("verify_lemma1: degree must be >= 0");
    if (theta.family() != Family::Exponential)
        throw FamilyMismatchError("verify_lemma1: needs an exponential-family theta set");
    check_theta_for(mu, theta);
    Rational lhs = weighted_power_sum(theta, m);
    Rational rhs = complete_homogeneous(mu.entries(), m, std::max(m, kDefaultDegreeCap));
    const bool holds = lhs == rhs;
    return Lemma1Check{holds, std::move(lhs), std::move(rhs)};
}

Lemma1Check verify_lemma1_laplace(const MuVector& mu, const ThetaSet& theta, int m) {
    if (m < 0) throw ValidationError("verify_lemma1_laplace: degree must be >= 0");
    if (theta.family() != Family::Laplace)
        throw FamilyMismatchError("verify_lemma1_laplace: needs a Laplace-family theta set");
    check_theta_for(mu, theta);
    if (m % 2 != 0) throw OddDegreeError(m);
    std::vector<Rational> mu_squared;
    mu_squared.reserve(mu.size());
    for (const Rational& x : mu.entries()) mu_squared.push_back(x * x);
    Rational lhs = weighted_power_sum(theta, m);
    Rational rhs = complete_homogeneous(mu_squared, m / 2, std::max(m / 2, kDefaultDegreeCap));
    const bool holds = lhs == rhs;
    return Lemma1Check{holds, std::move(lhs), std::move(rhs)};
}

}  // namespace charex
