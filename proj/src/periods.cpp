#include "subc/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace subc {

namespace {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Newton iteration on the Legendre recurrence; cached per node count.
const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // ascending node order, so sheet continuation marches monotonically
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rule.nodes[a] < rule.nodes[b]; });
    GaussRule sorted;
    for (int i : idx) {
        sorted.nodes.push_back(rule.nodes[i]);
        sorted.weights.push_back(rule.weights[i]);
    }
    return cache.emplace(n, std::move(sorted)).first->second;
}

// n-node Gauss-Legendre integral of numerator/w over the straight segment
// z0 -> z1, tracking the sheet from w_at_z0; also reports w at z1.
Complex segment_quadrature(const HyperellipticModel& m, const std::vector<Complex>& numerator,
                           Complex z0, Complex z1, Complex w_at_z0, int n, Complex* w_at_z1) {
    const GaussRule& rule = gauss_rule(n);
    Complex half = (z1 - z0) * 0.5;
    Complex mid = (z0 + z1) * 0.5;
    Complex acc(0.0, 0.0);
    Complex w = w_at_z0;
    for (int k = 0; k < n; ++k) {
        Complex z = mid + half * rule.nodes[k];
        w = sqrt_continued(m, z, w);
        acc += rule.weights[k] * poly_eval(numerator, z) / w;
    }
    if (w_at_z1) *w_at_z1 = sqrt_continued(m, z1, w);
    return acc * half;
}

Complex segment_adaptive(const HyperellipticModel& m, const std::vector<Complex>& numerator,
                         Complex z0, Complex z1, Complex w0, const QuadratureConfig& cfg,
                         double seg_tol, int depth, double& err_out) {
    Complex coarse = segment_quadrature(m, numerator, z0, z1, w0, cfg.nodes, nullptr);
    Complex w1;
    Complex fine = segment_quadrature(m, numerator, z0, z1, w0, 2 * cfg.nodes, &w1);
    double err = std::abs(fine - coarse);
    if (err <= seg_tol || depth >= cfg.max_refinements) {
        err_out += err;
        return fine;
    }
    Complex zm = (z0 + z1) * 0.5;
    Complex wm;
    segment_quadrature(m, numerator, z0, zm, w0, cfg.nodes, &wm);
    Complex left = segment_adaptive(m, numerator, z0, zm, w0, cfg, seg_tol / 2, depth + 1, err_out);
    Complex right = segment_adaptive(m, numerator, zm, z1, wm, cfg, seg_tol / 2, depth + 1, err_out);
    return left + right;
}

}  // namespace

Complex segment_integral(const HyperellipticModel& m, const std::vector<Complex>& numerator,
                         Complex z0, Complex z1, Complex w_at_z0, const QuadratureConfig& cfg,
                         Complex* w_at_z1, double* error) {
    if (w_at_z1) {
        // marching continuation, independent of the quadrature nodes
        const double step = m.min_separation / 8.0;
        int steps = std::max(1, static_cast<int>(std::ceil(std::abs(z1 - z0) / step)));
        Complex w = w_at_z0;
        for (int k = 1; k <= steps; ++k)
            w = sqrt_continued(m, z0 + (z1 - z0) * (static_cast<double>(k) / steps), w);
        *w_at_z1 = w;
    }
    double err = 0.0;
    Complex value = segment_adaptive(m, numerator, z0, z1, w_at_z0, cfg, cfg.tol, 0, err);
    if (error) *error = err;
    return value;
}

Complex cycle_integral(const HyperellipticModel& m, const std::vector<Complex>& numerator,
                       const Cycle& cycle, const QuadratureConfig& cfg, double* error) {
    const std::size_t n = cycle.waypoints.size();
    if (n < 2) throw std::invalid_argument("cycle_integral: degenerate cycle");

    // w at each waypoint by marching continuation (fine steps, independent of
    // the quadrature nodes)
    std::vector<Complex> w_at(n + 1);
    w_at[0] = cycle.w_start;
    const double step = m.min_separation / 8.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex z0 = cycle.waypoints[i];
        Complex z1 = cycle.waypoints[(i + 1) % n];
        int steps = std::max(1, static_cast<int>(std::ceil(std::abs(z1 - z0) / step)));
        Complex w = w_at[i];
        for (int k = 1; k <= steps; ++k)
            w = sqrt_continued(m, z0 + (z1 - z0) * (static_cast<double>(k) / steps), w);
        w_at[i + 1] = w;
    }
    if (std::abs(w_at[n] - cycle.w_start) > std::abs(w_at[n] + cycle.w_start))
        throw std::runtime_error("cycle_integral: cycle does not close on the double cover");

    double total_len = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        total_len += std::abs(cycle.waypoints[(i + 1) % n] - cycle.waypoints[i]);

    Complex acc(0.0, 0.0);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex z0 = cycle.waypoints[i];
        Complex z1 = cycle.waypoints[(i + 1) % n];
        double seg_tol = cfg.tol * (std::abs(z1 - z0) / total_len);
        acc += segment_adaptive(m, numerator, z0, z1, w_at[i], cfg, seg_tol, 0, err);
    }
    if (error) *error = err;
    return acc;
}

PeriodMatrix period_matrix(const HyperellipticModel& m, const DifferentialTriple& t,
                           const std::vector<Cycle>& cycles, const QuadratureConfig& cfg) {
    if (!conformality_check(t))
        throw std::invalid_argument("period_matrix: differential triple is not conformal");
    const int rows = static_cast<int>(cycles.size());
    PeriodMatrix pm;
    pm.theta = t.theta;
    pm.rows.resize(rows, 3);
    pm.complex_rows.resize(rows, 3);
    pm.errors.resize(rows, 3);
    Complex phase = std::exp(Complex(0.0, t.theta));
    for (int i = 0; i < 3; ++i) {
        std::vector<Complex> numerator = to_complex_coeffs(t.p[i]);
        for (int r = 0; r < rows; ++r) {
            double err = 0.0;
            Complex value = cycle_integral(m, numerator, cycles[r], cfg, &err);
            if (err > 100.0 * cfg.tol)
                throw std::runtime_error("period_matrix: quadrature failed to converge");
            pm.complex_rows(r, i) = value;
            pm.rows(r, i) = (phase * value).real();
            pm.errors(r, i) = err;
        }
    }
    return pm;
}

}  // namespace subc
