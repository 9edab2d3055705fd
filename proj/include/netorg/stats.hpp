#pragma once

#include <optional>
#include <span>

namespace netorg {

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double ci95_lo = 0.0;  // 95% confidence bounds on the slope
    double ci95_hi = 0.0;
    int n_points = 0;
};

// Least-squares line with a t-based 95% CI on the slope (n - 2 degrees of
// freedom). Requires at least 3 points and non-constant x.
OlsFit ols_fit(std::span<const double> x, std::span<const double> y);

// ols_fit on (log x, log y); every value must be positive.
OlsFit loglog_slope(std::span<const double> xs, std::span<const double> ys);

struct MeanStd {
    double mean = 0.0;
    std::optional<double> stddev;  // sample (n-1) std; empty when n < 2
};

MeanStd mean_std(std::span<const double> xs);

double median(std::span<const double> xs);

// Two-sided 97.5% quantile of the t-distribution.
double t_quantile_975(int dof);

}  // namespace netorg
