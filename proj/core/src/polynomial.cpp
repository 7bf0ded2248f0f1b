#include "pertcoul/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace pertcoul::poly {

double evaluate(std::span<const double> p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> derivative(std::span<const double> p) {
    if (p.size() <= 1) return {0.0};
    std::vector<double> d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

std::vector<double> multiply(std::span<const double> p, std::span<const double> q) {
    if (p.empty() || q.empty()) return {0.0};
    std::vector<double> out(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
}

std::vector<double> add(std::span<const double> p, std::span<const double> q) {
    std::vector<double> out(std::max(p.size(), q.size()), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) out[i] += q[i];
    return out;
}

std::vector<double> trimmed(std::vector<double> p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    if (p.empty()) p.push_back(0.0);
    return p;
}

int degree(std::span<const double> p) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        if (p[static_cast<std::size_t>(k)] != 0.0) return k;
    }
    return -1;
}

double root_bound(std::span<const double> p) {
    const int d = degree(p);
    if (d <= 0) return 0.0;
    const double lead = std::abs(p[static_cast<std::size_t>(d)]);
    double m = 0.0;
    for (int k = 1; k <= d; ++k) {
        double ratio = std::abs(p[static_cast<std::size_t>(d - k)]) / lead;
        if (k == d) ratio *= 0.5;
        m = std::max(m, std::pow(ratio, 1.0 / k));
    }
    return 2.0 * m;
}

namespace {

// Bisection for a sign change of f on [a, b]; f(a), f(b) of opposite sign.
template <class F>
double bisect(F&& f, double a, double b) {
    double fa = f(a);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(fa)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

int count_positive_roots(std::span<const double> p) {
    const int d = degree(p);
    if (d <= 0) return 0;
    const auto dp = derivative(p);
    const auto f = [&](double x) { return evaluate(p, x); };
    const auto df = [&](double x) { return evaluate(dp, x); };

    const double bound = root_bound(p);
    if (!(bound > 0.0)) return 0;
    const double hi = 1.01 * bound;
    const double lo = hi * 1e-12;
    constexpr int samples = 4000;
    const double ratio = std::pow(hi / lo, 1.0 / samples);

    int changes = 0;
    double x_prev = lo;
    double f_prev = f(x_prev);
    double d_prev = df(x_prev);
    for (int i = 1; i <= samples; ++i) {
        const double x = (i == samples) ? hi : lo * std::pow(ratio, i);
        const double fx = f(x);
        const double dx = df(x);
        if (std::signbit(fx) != std::signbit(f_prev)) {
            ++changes;
        } else if (std::signbit(dx) != std::signbit(d_prev)) {
            // Two close roots inside one cell: P turns around without the
            // endpoint signs noticing. Inspect P at the turning point.
            const double xc = bisect(df, x_prev, x);
            if (std::signbit(f(xc)) != std::signbit(fx)) changes += 2;
        }
        x_prev = x;
        f_prev = fx;
        d_prev = dx;
    }
    return changes;
}

} // namespace pertcoul::poly
