// GridFunction: a function on a uniform circle grid with circular
// piecewise-linear interpolation between nodes.
//
// A grid function may carry an exact evaluator (a closure for the underlying
// analytic function). When present, eval() uses it; interpolation of the node
// data is always available through interp(). Operators that are specified to
// act on interpolated data call interp() explicitly.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rpflab/circle.hpp"

namespace rpflab {

class GridFunction {
  public:
    GridFunction() = default;

    explicit GridFunction(std::size_t n, double fill = 0.0) : values_(n, fill) {
        check_size(n);
    }

    GridFunction(std::vector<double> values) : values_(std::move(values)) {
        check_size(values_.size());
    }

    // Samples fn at the nodes and keeps it as the exact evaluator.
    static GridFunction sample(std::size_t n, const std::function<double(double)>& fn) {
        GridFunction g(n);
        for (std::size_t i = 0; i < n; ++i) g.values_[i] = fn(static_cast<double>(i) / n);
        g.exact_ = fn;
        return g;
    }

    // Grid data only, no exact evaluator.
    static GridFunction from_samples(std::size_t n, const std::function<double(double)>& fn) {
        GridFunction g = sample(n, fn);
        g.exact_ = nullptr;
        return g;
    }

    std::size_t size() const { return values_.size(); }
    double node(std::size_t i) const { return static_cast<double>(i) / values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool has_exact() const { return static_cast<bool>(exact_); }
    void set_exact(std::function<double(double)> fn) { exact_ = std::move(fn); }
    void drop_exact() { exact_ = nullptr; }

    // Circular piecewise-linear interpolation of the node data; exact at nodes.
    double interp(double x) const {
        const std::size_t n = values_.size();
        double t = wrap(x) * static_cast<double>(n);
        auto i = static_cast<std::size_t>(t);
        if (i >= n) i = n - 1;
        double frac = t - static_cast<double>(i);
        std::size_t j = (i + 1 == n) ? 0 : i + 1;
        return values_[i] + frac * (values_[j] - values_[i]);
    }

    // Exact evaluator when available, interpolation otherwise.
    double eval(double x) const { return exact_ ? exact_(wrap(x)) : interp(x); }

    double max() const {
        double m = values_[0];
        for (double v : values_) m = std::fmax(m, v);
        return m;
    }
    double min() const {
        double m = values_[0];
        for (double v : values_) m = std::fmin(m, v);
        return m;
    }
    double sup_norm() const {
        double m = 0;
        for (double v : values_) m = std::fmax(m, std::fabs(v));
        return m;
    }

    // Node-wise mean = integral against Lebesgue of the node data.
    double mean() const {
        double s = 0;
        for (double v : values_) s += v;
        return s / static_cast<double>(values_.size());
    }

  private:
    static void check_size(std::size_t n) {
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::invalid_argument("GridFunction: grid size must be a power of two >= 2");
    }

    std::vector<double> values_;
    std::function<double(double)> exact_;
};

}  // namespace rpflab
