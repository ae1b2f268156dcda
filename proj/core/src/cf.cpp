#include <charex/cf.hpp>
#include <charex/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace charex {

CFModel CFModel::parse(std::string_view text) {
    const auto bad = [&]() -> ParseError {
        return ParseError("ParseError: model '" + std::string(text) +
                          "' (expected degenerate, exp:L, negexp:L, laplace:L, bernoulli:A)");
    };
    if (text == "degenerate") return degenerate();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw bad();
    const std::string_view name = text.substr(0, colon);
    const std::string value(text.substr(colon + 1));
    double param = 0.0;
    try {
        std::size_t used = 0;
        param = std::stod(value, &used);
        if (used != value.size()) throw bad();
    } catch (const std::exception&) {
        throw bad();
    }
    if (!(param > 0.0)) throw ValidationError("CFModel: parameter must be > 0");
    if (name == "exp") return exponential(param);
    if (name == "negexp") return neg_exponential(param);
    if (name == "laplace") return laplace(param);
    if (name == "bernoulli") return half_bernoulli(param);
    throw bad();
}

std::string CFModel::str() const {
    switch (kind_) {
        case CFKind::Degenerate: return "degenerate";
        case CFKind::Exp: return "exp:" + std::to_string(param_);
        case CFKind::NegExp: return "negexp:" + std::to_string(param_);
        case CFKind::Laplace: return "laplace:" + std::to_string(param_);
        case CFKind::HalfBernoulli: return "bernoulli:" + std::to_string(param_);
    }
    return "?";
}

std::complex<double> cf_eval(const CFModel& model, double t) {
    const double p = model.param();
    switch (model.kind()) {
        case CFKind::Degenerate:
            return {1.0, 0.0};
        case CFKind::Exp: {
            const double d = p * p + t * t;
            return {p * p / d, p * t / d};
        }
        case CFKind::NegExp: {
            const double d = p * p + t * t;
            return {p * p / d, -p * t / d};
        }
        case CFKind::Laplace: {
            const double d = p * p + t * t;
            return {p * p / d, 0.0};
        }
        case CFKind::HalfBernoulli:
            return {0.5 * (1.0 + std::cos(p * t)), 0.5 * std::sin(p * t)};
    }
    return {std::numeric_limits<double>::quiet_NaN(), 0.0};
}

GridSpec::GridSpec(double t_min, double t_max, int points)
    : t_min_(t_min), t_max_(t_max), points_(points) {
    if (!(t_min < t_max)) throw ValidationError("GridSpec: t_min must be < t_max");
    if (points < 2) throw ValidationError("GridSpec: needs at least 2 points");
}

GridSpec default_grid() { return GridSpec(-10.0, 10.0, 2001); }

namespace {

struct PointMax {
    double value = -1.0;
    std::int64_t index = -1;
};

// Chunked max scan; ties resolve to the smallest grid index, which makes the
// merged result independent of the chunk layout.
ResidualReport scan_grid(const GridSpec& grid,
                         const std::function<double(double)>& residual_at) {
    const int workers = std::max(1, worker_count());
    std::vector<PointMax> partial(workers);
    for_each_chunk(grid.points(), [&](int chunk, std::int64_t begin, std::int64_t end) {
        PointMax local;
        for (std::int64_t i = begin; i < end; ++i) {
            const double r = residual_at(grid.point(static_cast<int>(i)));
            if (r > local.value) {
                local.value = r;
                local.index = i;
            }
        }
        partial[chunk] = local;
    });
    PointMax best;
    for (const PointMax& c : partial) {
        if (c.index < 0) continue;
        if (c.value > best.value || (c.value == best.value && c.index < best.index)) best = c;
    }
    return ResidualReport{best.value, grid.point(static_cast<int>(best.index))};
}

}  // namespace

ResidualReport identity_residual(const CFModel& model, const MuVector& mu,
                                 const ThetaSet& theta, const GridSpec& grid) {
    if (!(theta.source_mu() == mu))
        throw ValidationError("identity_residual: theta was not derived from this mu");
    const std::size_t n = mu.size();
    std::vector<double> mu_d(n), theta_d(n);
    for (std::size_t k = 0; k < n; ++k) {
        mu_d[k] = mu[k].to_double();
        theta_d[k] = theta[k].to_double();
    }
    // ascending |theta| summation order, ties by index
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(theta_d[a]) < std::abs(theta_d[b]);
    });

    const auto residual_at = [&](double t) {
        std::complex<double> prod(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) prod *= cf_eval(model, mu_d[k] * t);
        std::complex<double> mix(0.0, 0.0);
        for (std::size_t k : order) mix += theta_d[k] * cf_eval(model, mu_d[k] * t);
        return std::abs(prod - mix);
    };
    return scan_grid(grid, residual_at);
}

ResidualReport phisa_residual(const CFModel& model, const GridSpec& grid) {
    const auto residual_at = [&](double t) {
        const std::complex<double> a = cf_eval(model, t);
        const std::complex<double> b = cf_eval(model, -t);
        return std::abs(a * b - 0.5 * (a + b));
    };
    return scan_grid(grid, residual_at);
}

}  // namespace charex
