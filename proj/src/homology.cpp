#include "subc/surface.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace subc {

namespace {

// Densified traversal of a cycle with continuously tracked w, closed
// (z.front() == z.back(), same for w).
struct SampledPath {
    std::vector<Complex> z;
    std::vector<Complex> w;
};

SampledPath sample_cycle(const HyperellipticModel& m, const Cycle& c, double max_step) {
    SampledPath path;
    Complex w = c.w_start;
    path.z.push_back(c.waypoints.front());
    path.w.push_back(w);
    const std::size_t n = c.waypoints.size();
    for (std::size_t i = 0; i < n; ++i) {
        Complex z0 = c.waypoints[i];
        Complex z1 = c.waypoints[(i + 1) % n];
        int steps = std::max(1, static_cast<int>(std::ceil(std::abs(z1 - z0) / max_step)));
        for (int k = 1; k <= steps; ++k) {
            Complex z = z0 + (z1 - z0) * (static_cast<double>(k) / steps);
            w = sqrt_continued(m, z, w);
            path.z.push_back(z);
            path.w.push_back(w);
        }
    }
    if (std::abs(path.w.back() - c.w_start) > std::abs(path.w.back() + c.w_start))
        throw std::runtime_error("sample_cycle: path does not close on the double cover");
    return path;
}

// Proper crossing of open segments a0a1 and b0b1; fills s, t in (0,1).
bool segments_cross(Complex a0, Complex a1, Complex b0, Complex b1, double& s, double& t) {
    Complex da = a1 - a0, db = b1 - b0;
    double denom = da.real() * db.imag() - da.imag() * db.real();
    if (std::abs(denom) < 1e-15) return false;
    Complex d = b0 - a0;
    s = (d.real() * db.imag() - d.imag() * db.real()) / denom;
    t = (d.real() * da.imag() - d.imag() * da.real()) / denom;
    const double eps = 1e-12;
    return s > eps && s < 1.0 - eps && t > eps && t < 1.0 - eps;
}

}  // namespace

Cycle capsule_cycle(const HyperellipticModel& m, Complex a, Complex b, double clearance,
                    int segments) {
    if (segments < 8) throw std::invalid_argument("capsule_cycle: need at least 8 segments");
    Complex center = (a + b) * 0.5;
    Complex u = (b - a) / std::abs(b - a);
    double semi_major = 0.5 * std::abs(b - a) + clearance;
    double semi_minor = clearance;
    Cycle c;
    for (int k = 0; k < segments; ++k) {
        double t = 2.0 * M_PI * k / segments;
        Complex offset = u * (semi_major * std::cos(t)) +
                         u * Complex(0.0, 1.0) * (semi_minor * std::sin(t));
        c.waypoints.push_back(center + offset);
    }
    c.w_start = std::sqrt(poly_eval(m.f, c.waypoints.front()));
    return c;
}

Cycle reversed(const Cycle& c) {
    Cycle r;
    r.waypoints.push_back(c.waypoints.front());
    for (std::size_t i = c.waypoints.size(); i-- > 1;) r.waypoints.push_back(c.waypoints[i]);
    r.w_start = c.w_start;
    return r;
}

int intersection_number(const HyperellipticModel& m, const Cycle& a, const Cycle& b) {
    const double step = m.min_separation / 8.0;
    SampledPath pa = sample_cycle(m, a, step);
    SampledPath pb = sample_cycle(m, b, step);
    int total = 0;
    for (std::size_t i = 0; i + 1 < pa.z.size(); ++i) {
        for (std::size_t j = 0; j + 1 < pb.z.size(); ++j) {
            double s, t;
            if (!segments_cross(pa.z[i], pa.z[i + 1], pb.z[j], pb.z[j + 1], s, t)) continue;
            Complex zx = pa.z[i] + (pa.z[i + 1] - pa.z[i]) * s;
            Complex wa = sqrt_continued(m, zx, pa.w[i]);
            Complex wb = sqrt_continued(m, zx, pb.w[j]);
            bool same_sheet = std::abs(wa - wb) <= std::abs(wa + wb);
            if (!same_sheet) continue;
            Complex da = pa.z[i + 1] - pa.z[i], db = pb.z[j + 1] - pb.z[j];
            double cross = da.real() * db.imag() - da.imag() * db.real();
            total += cross > 0.0 ? 1 : -1;
        }
    }
    return total;
}

HomologyBasis homology_basis(const HyperellipticModel& m) {
    const int g = m.genus;
    const int nb = static_cast<int>(m.branch_points.size());
    const double clearance = m.min_separation / 4.0;

    // consecutive pairs; for an even-degree model skip the first pair so that
    // exactly 2g chained loops remain
    int first = (nb == 2 * g + 2) ? 1 : 0;
    HomologyBasis basis;
    for (int j = first; j < first + 2 * g; ++j)
        basis.cycles.push_back(
            capsule_cycle(m, m.branch_points[j], m.branch_points[j + 1], clearance));

    basis.pairing = Eigen::MatrixXi::Zero(2 * g, 2 * g);
    for (int i = 0; i < 2 * g; ++i)
        for (int j = i + 1; j < 2 * g; ++j) {
            int n = intersection_number(m, basis.cycles[i], basis.cycles[j]);
            basis.pairing(i, j) = n;
            basis.pairing(j, i) = -n;
        }

    double det = basis.pairing.cast<double>().determinant();
    basis.pairing_determinant = static_cast<int>(std::llround(det));
    if (basis.pairing_determinant != 1 && basis.pairing_determinant != -1)
        throw std::runtime_error("homology_basis: intersection pairing is not unimodular");
    return basis;
}

}  // namespace subc
