#include "netorg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace netorg {

double t_quantile_975(int dof) {
    if (dof < 1) throw std::invalid_argument("t_quantile_975: dof must be >= 1");
    boost::math::students_t dist(static_cast<double>(dof));
    return boost::math::quantile(dist, 0.975);
}

OlsFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("ols_fit: mismatched series lengths");
    }
    const auto n = static_cast<int>(x.size());
    if (n < 3) throw std::invalid_argument("ols_fit: need at least 3 points");

    double mean_x = 0.0, mean_y = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (y[i] - mean_y);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols_fit: x is constant");

    OlsFit fit;
    fit.n_points = n;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ssr = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ssr += r * r;
    }
    const double sigma2 = ssr / (n - 2);
    const double se = std::sqrt(sigma2 / sxx);
    const double half_width = t_quantile_975(n - 2) * se;
    fit.ci95_lo = fit.slope - half_width;
    fit.ci95_hi = fit.slope + half_width;
    return fit;
}

OlsFit loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("loglog_slope: mismatched series lengths");
    }
    std::vector<double> lx(xs.size()), ly(ys.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0.0 || ys[i] <= 0.0) {
            throw std::invalid_argument("loglog_slope: values must be positive");
        }
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    return ols_fit(lx, ly);
}

MeanStd mean_std(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean_std: empty series");
    MeanStd out;
    for (double v : xs) out.mean += v;
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() >= 2) {
        double ss = 0.0;
        for (double v : xs) {
            const double d = v - out.mean;
            ss += d * d;
        }
        out.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

double median(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("median: empty series");
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

}  // namespace netorg
