#pragma once

#include <charex/errors.hpp>
#include <charex/mixture.hpp>

#include <complex>
#include <string>
#include <string_view>

namespace charex {

enum class CFKind { Degenerate, Exp, NegExp, Laplace, HalfBernoulli };

// Closed-form candidate law, evaluable as a characteristic function:
//   Degenerate        phi(t) = 1
//   Exp(lambda)       phi(t) = lambda / (lambda - it)
//   NegExp(lambda)    phi(t) = lambda / (lambda + it)
//   Laplace(lambda)   phi(t) = lambda^2 / (lambda^2 + t^2)
//   HalfBernoulli(a)  phi(t) = (1 + e^{iat}) / 2
class CFModel {
public:
    static CFModel degenerate() { return CFModel(CFKind::Degenerate, 0.0); }
    static CFModel exponential(double lambda) { return CFModel(CFKind::Exp, checked(lambda)); }
    static CFModel neg_exponential(double lambda) { return CFModel(CFKind::NegExp, checked(lambda)); }
    static CFModel laplace(double lambda) { return CFModel(CFKind::Laplace, checked(lambda)); }
    static CFModel half_bernoulli(double atom) { return CFModel(CFKind::HalfBernoulli, checked(atom)); }

    // CLI grammar: "degenerate", "exp:L", "negexp:L", "laplace:L", "bernoulli:A".
    static CFModel parse(std::string_view text);

    CFKind kind() const { return kind_; }
    double param() const { return param_; }
    std::string str() const;

private:
    CFModel(CFKind kind, double param) : kind_(kind), param_(param) {}
    static double checked(double v) {
        if (!(v > 0.0)) throw ValidationError("CFModel: parameter must be > 0");
        return v;
    }

    CFKind kind_;
    double param_;
};

std::complex<double> cf_eval(const CFModel& model, double t);

// Uniform grid including both endpoints.
class GridSpec {
public:
    GridSpec(double t_min, double t_max, int points);

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    int points() const { return points_; }
    double point(int i) const {
        return t_min_ + (t_max_ - t_min_) * static_cast<double>(i) /
                            static_cast<double>(points_ - 1);
    }

private:
    double t_min_;
    double t_max_;
    int points_;
};

// t in [-10, 10], 2001 points: fine enough to pin residual maxima of the
// closed-form models while staying cheap.
GridSpec default_grid();

struct ResidualReport {
    double max_residual;
    double argmax_t;
};

// max over the grid of | prod_k phi(mu_k t) - sum_k theta_k phi(mu_k t) |.
// Theta values are converted to floating point here; the mixture sum runs in
// ascending |theta_k| order so the alternating-sign cancellation is
// deterministic. Grid evaluation may be chunked across workers; the result
// does not depend on the partitioning.
ResidualReport identity_residual(const CFModel& model, const MuVector& mu,
                                 const ThetaSet& theta, const GridSpec& grid);

// max over the grid of | phi(t) phi(-t) - (phi(t) + phi(-t)) / 2 |.
ResidualReport phisa_residual(const CFModel& model, const GridSpec& grid);

}  // namespace charex
