#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace qopt {

struct NelderMeadOptions {
    int max_iterations = 400;
    double tolerance = 1e-8;  // stop when the simplex value spread drops below
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/// Downhill-simplex minimization of f starting from an explicit simplex of
/// dim+1 vertices. Deterministic given the initial simplex.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<std::vector<double>> simplex,
                                    const NelderMeadOptions& opt = {}) {
    const std::size_t dim = simplex.empty() ? 0 : simplex.front().size();
    std::vector<double> values(simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = f(simplex[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(simplex.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        for (std::size_t i : idx) {
            s2.push_back(simplex[i]);
            v2.push_back(values[i]);
        }
        simplex.swap(s2);
        values.swap(v2);
    };

    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        order();
        if (std::fabs(values.back() - values.front()) <= opt.tolerance) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i)
            for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
        for (double& c : centroid) c /= static_cast<double>(simplex.size() - 1);

        auto blend = [&](const std::vector<double>& from, double scale) {
            std::vector<double> p(dim);
            for (std::size_t d = 0; d < dim; ++d)
                p[d] = centroid[d] + scale * (from[d] - centroid[d]);
            return p;
        };

        std::vector<double> reflected = blend(simplex.back(), -opt.reflection);
        double fr = f(reflected);
        if (fr < values.front()) {
            std::vector<double> expanded = blend(simplex.back(), -opt.reflection * opt.expansion);
            double fe = f(expanded);
            if (fe < fr) {
                simplex.back() = std::move(expanded);
                values.back() = fe;
            } else {
                simplex.back() = std::move(reflected);
                values.back() = fr;
            }
        } else if (fr < values[values.size() - 2]) {
            simplex.back() = std::move(reflected);
            values.back() = fr;
        } else {
            const bool outside = fr < values.back();
            std::vector<double> contracted =
                blend(simplex.back(), outside ? -opt.reflection * opt.contraction
                                              : opt.contraction);
            double fc = f(contracted);
            if (fc < std::min(fr, values.back())) {
                simplex.back() = std::move(contracted);
                values.back() = fc;
            } else {
                for (std::size_t i = 1; i < simplex.size(); ++i) {
                    for (std::size_t d = 0; d < dim; ++d)
                        simplex[i][d] =
                            simplex[0][d] + opt.shrink * (simplex[i][d] - simplex[0][d]);
                    values[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return {simplex.front(), values.front(), iter};
}

}  // namespace qopt
