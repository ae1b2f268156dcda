#pragma once

#include <charex/errors.hpp>
#include <charex/mixture.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace charex {

struct MixtureTerm {
    double weight;          // theta_k as a double
    double rate;            // lambda / |mu_k|
    bool positive_support;  // sign of mu_k picks the half-line
};

// Signed exponential mixture for S = mu_1 X_1 + ... + mu_n X_n with the X_k
// i.i.d. Exp(lambda): term k is theta_k times an exponential of rate
// lambda/|mu_k| on the half-line given by sign(mu_k). Weights may alternate
// in sign; the mixture is still an honest law (the expansion is the partial
// fraction decomposition of its characteristic function).
class MixtureLaw {
public:
    MixtureLaw(const MuVector& mu, const ThetaSet& theta, double lambda);

    const std::vector<MixtureTerm>& terms() const { return terms_; }
    double lambda() const { return lambda_; }
    // |1 - sum of converted weights|, recorded at construction.
    double weight_conversion_error() const { return weight_error_; }

private:
    std::vector<MixtureTerm> terms_;
    double lambda_;
    double weight_error_;
};

// Density; defined a.e., x = 0 evaluates the right limit.
double mixture_pdf(const MixtureLaw& law, double x);

// CDF: monotone, right-continuous, 0 at -inf, 1 at +inf.
double mixture_cdf(const MixtureLaw& law, double x);

// n i.i.d. draws of S = sum_k mu_k X_k, X_k i.i.d. Exp(lambda), by inverse
// transform from the counter-based generator: the seed fully determines the
// output, bit-identically for any worker count.
std::vector<double> sample_sum(const MuVector& mu, double lambda, std::int64_t n_samples,
                               std::uint64_t seed);

// CDF of the n-th smallest of L i.i.d. Exp(lambda) draws.
double order_stat_cdf(int L, int n, double lambda, double x);

// Two-sided Kolmogorov-Smirnov statistic against a reference CDF; the input
// must already be sorted ascending.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

struct RenyiReport {
    int L;
    int n;
    double lambda;
    std::int64_t n_samples;
    std::uint64_t seed;
    double ks_s;                  // S against order_stat_cdf(L, n, lambda, .)
    double ks_s_over_lambda;      // S/lambda against the same CDF
    double threshold;             // 1.95 / sqrt(n_samples)
    bool s_matches;
    bool s_over_lambda_matches;
};

// Builds mu_k = 1/(L-k+1), k = 1..n, samples S and measures both S and
// S/lambda against the order-statistic CDF. Both distances are reported;
// neither variant is silently preferred.
RenyiReport renyi_check(int L, int n, double lambda, std::int64_t n_samples,
                        std::uint64_t seed);

}  // namespace charex
