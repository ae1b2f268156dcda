#include <charex/dist.hpp>
#include <charex/parallel.hpp>
#include <charex/rng.hpp>
#include <charex/symfunc.hpp>

#include <algorithm>
#include <cmath>

namespace charex {

namespace {

// Draws with k-major streams so each (sample, component) pair has its own
// counter; partition-independent by construction.
std::vector<double> sample_weighted_exponentials(std::span<const double> weights,
                                                 double lambda, std::int64_t n_samples,
                                                 std::uint64_t seed) {
    if (n_samples < 1) throw ValidationError("sampling: n_samples must be >= 1");
    if (!(lambda > 0.0)) throw ValidationError("sampling: lambda must be > 0");
    const CounterRng rng(seed);
    std::vector<double> out(static_cast<std::size_t>(n_samples));
    for_each_chunk(n_samples, [&](int, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < weights.size(); ++k) {
                const double u = rng.uniform01(static_cast<std::uint64_t>(i), k);
                s += weights[k] * (-std::log(u) / lambda);
            }
            out[static_cast<std::size_t>(i)] = s;
        }
    });
    return out;
}

}  // namespace

MixtureLaw::MixtureLaw(const MuVector& mu, const ThetaSet& theta, double lambda)
    : lambda_(lambda) {
    if (theta.family() != Family::Exponential)
        throw FamilyMismatchError(
            "MixtureLaw: needs an exponential-family theta set (the signed-exponential "
            "expansion does not represent Laplace-family mixtures)");
    if (!(theta.source_mu() == mu))
        throw ValidationError("MixtureLaw: theta was not derived from this mu");
    if (!(lambda > 0.0)) throw ValidationError("MixtureLaw: lambda must be > 0");
    terms_.reserve(mu.size());
    double weight_sum = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const double m = mu[k].to_double();
        const double w = theta[k].to_double();
        terms_.push_back({w, lambda / std::abs(m), m > 0.0});
        weight_sum += w;
    }
    weight_error_ = std::abs(1.0 - weight_sum);
    // sum small-magnitude weights first when evaluating; fix the order once
    std::stable_sort(terms_.begin(), terms_.end(), [](const MixtureTerm& a, const MixtureTerm& b) {
        return std::abs(a.weight) < std::abs(b.weight);
    });
}

double mixture_pdf(const MixtureLaw& law, double x) {
    double f = 0.0;
    if (x >= 0.0) {
        // x = 0: right limit, only positive-support terms contribute
        for (const MixtureTerm& t : law.terms())
            if (t.positive_support) f += t.weight * t.rate * std::exp(-t.rate * x);
    } else {
        for (const MixtureTerm& t : law.terms())
            if (!t.positive_support) f += t.weight * t.rate * std::exp(t.rate * x);
    }
    return f;
}

double mixture_cdf(const MixtureLaw& law, double x) {
    double F = 0.0;
    for (const MixtureTerm& t : law.terms()) {
        if (t.positive_support) {
            if (x > 0.0) F += t.weight * -std::expm1(-t.rate * x);
        } else {
            F += t.weight * (x < 0.0 ? std::exp(t.rate * x) : 1.0);
        }
    }
    return F;
}

std::vector<double> sample_sum(const MuVector& mu, double lambda, std::int64_t n_samples,
                               std::uint64_t seed) {
    std::vector<double> weights(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) weights[k] = mu[k].to_double();
    return sample_weighted_exponentials(weights, lambda, n_samples, seed);
}

double order_stat_cdf(int L, int n, double lambda, double x) {
    if (L < 1 || n < 1 || n > L) throw RankOutOfRangeError(n, L);
    if (!(lambda > 0.0)) throw ValidationError("order_stat_cdf: lambda must be > 0");
    if (x <= 0.0) return 0.0;
    const double p = -std::expm1(-lambda * x);  // P(single draw <= x)
    const double q = std::exp(-lambda * x);
    double acc = 0.0;
    for (int j = n; j <= L; ++j) {
        const double c = binomial(L, j).convert_to<double>();
        acc += c * std::pow(p, j) * std::pow(q, L - j);
    }
    return std::min(acc, 1.0);
}

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf) {
    if (sorted_samples.empty()) throw ValidationError("ks_statistic: empty sample");
    if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
        throw ValidationError("ks_statistic: samples must be sorted ascending");
    const double n = static_cast<double>(sorted_samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double F = cdf(sorted_samples[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - F;
        const double lo = F - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

RenyiReport renyi_check(int L, int n, double lambda, std::int64_t n_samples,
                        std::uint64_t seed) {
    if (n < 1 || n >= L) throw RankOutOfRangeError(n, L);
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) weights[k - 1] = 1.0 / static_cast<double>(L - k + 1);

    std::vector<double> s = sample_weighted_exponentials(weights, lambda, n_samples, seed);
    std::sort(s.begin(), s.end());
    const auto ref = [&](double x) { return order_stat_cdf(L, n, lambda, x); };
    const double ks_s = ks_statistic(s, ref);
    for (double& x : s) x /= lambda;
    const double ks_scaled = ks_statistic(s, ref);

    const double threshold = 1.95 / std::sqrt(static_cast<double>(n_samples));
    return RenyiReport{L,    n,    lambda,           n_samples,          seed,
                       ks_s, ks_scaled, threshold,   ks_s < threshold,
                       ks_scaled < threshold};
}

}  // namespace charex
