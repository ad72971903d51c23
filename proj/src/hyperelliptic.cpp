#include "subc/surface.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subc {

Complex poly_eval(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) return {};
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = Complex(1.0, 0.0);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
    // one Newton polish per root
    std::vector<Complex> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * static_cast<double>(i);
    for (Complex& r : roots) {
        for (int it = 0; it < 3; ++it) {
            Complex d = poly_eval(dc, r);
            if (std::abs(d) == 0.0) break;
            r -= poly_eval(c, r) / d;
        }
    }
    return roots;
}

std::vector<Complex> to_complex_coeffs(const PolyQi& p) {
    std::vector<Complex> out(p.is_zero() ? 1 : p.total_degree() + 1, Complex(0.0, 0.0));
    for (const auto& [e, c] : p.terms())
        out[e[0]] = Complex(c.real().to_double(), c.imag().to_double());
    return out;
}

PolyQi to_gaussian(const PolyQ& p) {
    PolyQi out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, GaussianRational(c));
    return out;
}

HyperellipticModel hyperelliptic_model(const std::vector<Complex>& coeffs, double separation_tol) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    const int degree = static_cast<int>(c.size()) - 1;
    if (degree < 4) throw std::invalid_argument("hyperelliptic_model: degree must be >= 4");
    const int genus = (degree % 2 == 0) ? (degree - 2) / 2 : (degree - 1) / 2;
    if (genus < 1) throw std::invalid_argument("hyperelliptic_model: genus must be >= 1");

    std::vector<Complex> roots = poly_roots(c);
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            min_sep = std::min(min_sep, std::abs(roots[i] - roots[j]));
    if (!(min_sep > separation_tol))
        throw std::invalid_argument("hyperelliptic_model: branch points not separated (f not squarefree?)");

    auto arg2pi = [](Complex z) {
        double a = std::arg(z);
        if (a < -1e-12) a += 2.0 * M_PI;
        return a;
    };
    std::sort(roots.begin(), roots.end(), [&](Complex a, Complex b) {
        double aa = arg2pi(a), ab = arg2pi(b);
        if (std::abs(aa - ab) > 1e-9) return aa < ab;
        return std::abs(a) < std::abs(b);
    });

    return HyperellipticModel{std::move(c), genus, std::move(roots), min_sep};
}

Complex sqrt_continued(const HyperellipticModel& m, Complex z, Complex w_prev) {
    Complex w = std::sqrt(poly_eval(m.f, z));
    return std::abs(w - w_prev) <= std::abs(w + w_prev) ? w : -w;
}

namespace {

int degree_of(const PolyQi& q) { return q.is_zero() ? -1 : q.total_degree(); }

}  // namespace

bool base_point_free(const HyperellipticModel& m, const SpinorData& s, double tol) {
    const int d0 = degree_of(s.q0), d1 = degree_of(s.q1);
    if (d0 < 0 && d1 < 0) return false;
    // section degree bound in the trivialization: 2 deg q <= g - 1
    if (2 * d0 > m.genus - 1 || 2 * d1 > m.genus - 1) return false;
    // simultaneous vanishing over z = infinity
    if (2 * d0 < m.genus - 1 && 2 * d1 < m.genus - 1) return false;

    // common finite roots
    std::vector<Complex> c0 = to_complex_coeffs(s.q0), c1 = to_complex_coeffs(s.q1);
    for (Complex r : poly_roots(c0))
        if (std::abs(poly_eval(c1, r)) <= tol) return false;
    for (Complex r : poly_roots(c1))
        if (std::abs(poly_eval(c0, r)) <= tol) return false;
    return true;
}

DifferentialTriple differentials_from_spinor(const SpinorData& s, double theta) {
    PolyQi a = s.q0 * s.q0;
    PolyQi b = s.q1 * s.q1;
    DifferentialTriple t;
    t.p[0] = a - b;
    t.p[1] = GaussianRational::i() * (a + b);
    t.p[2] = GaussianRational(2) * (s.q0 * s.q1);
    t.theta = theta;
    return t;
}

bool conformality_check(const DifferentialTriple& t) {
    PolyQi sum = t.p[0] * t.p[0] + t.p[1] * t.p[1] + t.p[2] * t.p[2];
    return sum.is_zero();
}

}  // namespace subc
