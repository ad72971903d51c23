#pragma once

#include "subc/poly.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace subc {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Univariate complex polynomial helpers (coefficients in ascending degree).

Complex poly_eval(const std::vector<Complex>& coeffs, Complex z);
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

// Coefficients of an exact univariate Gaussian-rational polynomial, ascending.
std::vector<Complex> to_complex_coeffs(const PolyQi& p);
// Lift of an exact rational univariate polynomial into the Gaussian rationals.
PolyQi to_gaussian(const PolyQ& p);

// ---------------------------------------------------------------------------
// Hyperelliptic model w^2 = f(z).

struct HyperellipticModel {
    std::vector<Complex> f;  // ascending coefficients, leading nonzero
    int genus;
    std::vector<Complex> branch_points;  // sorted by (argument, modulus)
    double min_separation;
};

// degree must be 2g+1 or 2g+2 with g >= 1; roots must be separated beyond
// separation_tol.
HyperellipticModel hyperelliptic_model(const std::vector<Complex>& coeffs,
                                       double separation_tol = 1e-8);

// One value of w = sqrt(f(z)), chosen nearest to w_prev (continuous sheet
// tracking along paths).
Complex sqrt_continued(const HyperellipticModel& m, Complex z, Complex w_prev);

// ---------------------------------------------------------------------------
// Spinor data and the induced differential triple.

struct SpinorData {
    PolyQi q0, q1;  // univariate, exact coefficients
};

// No simultaneous vanishing on the surface: no common finite root of (q0,q1)
// and at least one section not vanishing over z = infinity.
bool base_point_free(const HyperellipticModel& m, const SpinorData& s, double tol = 1e-9);

struct DifferentialTriple {
    std::array<PolyQi, 3> p;  // omega_i = p_i(z) dz / w, exact numerators
    double theta = 0.0;       // associate-family phase e^{i theta}, applied on evaluation
};

// (p0, p1, p2) = (q0^2 - q1^2, i (q0^2 + q1^2), 2 q0 q1), phase kept symbolic.
DifferentialTriple differentials_from_spinor(const SpinorData& s, double theta = 0.0);

// Exact check of p0^2 + p1^2 + p2^2 = 0.
bool conformality_check(const DifferentialTriple& t);

// ---------------------------------------------------------------------------
// Homology cycles and intersection numbers.

struct Cycle {
    std::vector<Complex> waypoints;  // closed polygon; the last connects to the first
    Complex w_start;                 // value of w at waypoints[0], fixing the sheet
};

// Polygonal loop around two branch points with the given clearance, lifted to
// the sheet selected by taking the principal sqrt at the starting waypoint.
Cycle capsule_cycle(const HyperellipticModel& m, Complex a, Complex b, double clearance,
                    int segments = 64);

// Reverses orientation; the row of a reversed cycle negates.
Cycle reversed(const Cycle& c);

// Signed crossing count of the two lifted paths on the double cover.
int intersection_number(const HyperellipticModel& m, const Cycle& a, const Cycle& b);

struct HomologyBasis {
    std::vector<Cycle> cycles;  // 2g
    Eigen::MatrixXi pairing;    // intersection matrix of the cycles
    int pairing_determinant;    // +-1 certifies a homology basis
};

// 2g capsule loops around consecutive branch points (argument/modulus order),
// certified post hoc by the unimodularity of their intersection pairing.
HomologyBasis homology_basis(const HyperellipticModel& m);

// ---------------------------------------------------------------------------
// Periods.

struct QuadratureConfig {
    int nodes = 64;           // Gauss-Legendre nodes per path segment
    double tol = 1e-8;        // target absolute error per entry
    int max_refinements = 10; // segment-halving depth
};

// Integral of numerator(z)/w dz along the straight segment z0 -> z1 starting
// on the sheet fixed by w_at_z0; reports the arrival value of w and a
// node-doubling error estimate.
Complex segment_integral(const HyperellipticModel& m, const std::vector<Complex>& numerator,
                         Complex z0, Complex z1, Complex w_at_z0, const QuadratureConfig& cfg,
                         Complex* w_at_z1 = nullptr, double* error = nullptr);

// Integral of numerator(z)/w dz along the lifted cycle; the error estimate
// comes from node-count doubling.
Complex cycle_integral(const HyperellipticModel& m, const std::vector<Complex>& numerator,
                       const Cycle& cycle, const QuadratureConfig& cfg, double* error = nullptr);

struct PeriodMatrix {
    Eigen::MatrixXd rows;          // 2g x 3, Re(e^{i theta} integrals)
    Eigen::MatrixXcd complex_rows; // the unphased complex integrals
    Eigen::MatrixXd errors;        // per-entry quadrature error estimates
    double theta = 0.0;
};

PeriodMatrix period_matrix(const HyperellipticModel& m, const DifferentialTriple& t,
                           const std::vector<Cycle>& cycles, const QuadratureConfig& cfg);

// ---------------------------------------------------------------------------
// Rank-3 lattice detection from the 2g period rows.

struct Lattice3 {
    bool success = false;
    Eigen::Matrix3d generators;    // rows are the three generators
    Eigen::MatrixXi coefficients;  // rows expressed as integer combinations
    double residual = 0.0;         // max distance of a row from the lattice
    std::string detail;            // failure diagnostics
};

Lattice3 lattice_detect(const PeriodMatrix& pm, double tol);

// ---------------------------------------------------------------------------
// Immersion mesh.

struct MeshConfig {
    int resolution = 16;        // grid cells per side of the z-domain square
    double radius = 0.0;        // half-side; 0 = auto from the branch points
    Complex basepoint{0.0, 0.0};// 0 = auto (a grid vertex away from branch points)
    QuadratureConfig quad;
    unsigned tree_seed = 0;     // selects among spanning trees (BFS tie order)
};

struct ImmersionMesh {
    std::vector<Eigen::Vector3d> vertices;           // reduced mod the lattice
    std::vector<std::array<int, 3>> triangles;       // 0-based indices
    std::vector<std::pair<Complex, int>> source;     // per-vertex (z, sheet)
    double closure_residual = 0.0;                   // max cycle-closure defect mod lattice
};

ImmersionMesh immersion_mesh(const HyperellipticModel& m, const DifferentialTriple& t,
                             const Lattice3& lattice, const MeshConfig& cfg);

// Wavefront OBJ: "v x y z" per vertex (9 significant digits), "f i j k"
// per triangle (1-based), nothing else.
void export_obj(const ImmersionMesh& mesh, std::ostream& out);
void export_obj(const ImmersionMesh& mesh, const std::string& path);

}  // namespace subc
