// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses exact arithmetic where
// the claim is exact.

#include "subc/examples.hpp"
#include "subc/limit_series.hpp"
#include "subc/linear_series.hpp"
#include "subc/parser.hpp"
#include "subc/surface.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace subc;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool subset_eq(const std::vector<int>& got, const std::vector<int>& want) { return got == want; }

// all strictly increasing sequences of length r+1 in [0, d]
void enumerate_sequences(int d, int r, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> a(r + 1);
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == r + 1) {
            fn(a);
            return;
        }
        for (int v = lo; v <= d; ++v) {
            a[i] = v;
            rec(i + 1, v + 1);
        }
    };
    rec(0, 0);
}

HyperellipticModel schwarz_model() {
    std::vector<Complex> f(9, Complex(0.0, 0.0));
    f[0] = 1.0;
    f[4] = -14.0;
    f[8] = 1.0;
    return hyperelliptic_model(f);
}

}  // namespace

int main() {
    // ---- criterion 1: full verification of the genus-9 quadric-quartic curve
    ExampleWitness w32 = example_quadric_quartic();
    WitnessVerification v32 = verify_witness(w32);
    {
        bool ok = v32.ok && v32.smoothness == SmoothnessCertificate::Status::Smooth &&
                  v32.contact == 8 &&
                  subset_eq(v32.report.gaps.gaps, {1, 2, 3, 4, 5, 9, 10, 11, 17}) &&
                  subset_eq(v32.report.ramification.alpha, {0, 0, 0, 0, 0, 3, 3, 3, 8}) &&
                  v32.report.h0_table.size() > 8 && v32.report.h0_table[8] == 4 &&
                  v32.report.subcanonical;
        report(1, ok,
               "genus-9 quadric-quartic curve: smooth, contact 8, gaps "
               "(1,2,3,4,5,9,10,11,17), alpha (0,0,0,0,0,3,3,3,8), h0(8p)=4, subcanonical");
    }

    // ---- criterion 2: constructed quintic with five-fold line contact
    ExampleWitness w31 = example_quintic_inflection();
    WitnessVerification v31 = verify_witness(w31);
    {
        bool ok = v31.ok && v31.smoothness == SmoothnessCertificate::Status::Smooth &&
                  v31.contact == 5 && v31.report.h0_table.size() > 5 &&
                  v31.report.h0_table[5] == 3 &&
                  subset_eq(v31.report.ramification.alpha, {0, 0, 0, 2, 2, 5});
        report(2, ok, "constructed smooth quintic with (C.l)_p = 5: h0(5p)=3, alpha (0,0,0,2,2,5)");
    }

    // ---- criterion 3: condition rank, dimension ledgers, expected dimensions
    {
        PolyQ s = PolyQ::variable(1, 0);
        std::vector<PolyQ> conic{s * s, s, PolyQ::constant(1, Rational(1)), PolyQ(1)};
        bool ok = imposed_conditions_rank(monomial_basis(4, 4), conic, 8) == 8 &&
                  dimension_ledger("3.2").total() == 14 && dimension_ledger("3.3").total() == 15 &&
                  dimension_ledger("3.4").total() == 16 && expected_dimension(6, 2) == 10 &&
                  expected_dimension(9, 3) == 14;
        report(3, ok,
               "order-8 conditions on quadric quartics have rank 8; ledgers 14/15/16; "
               "expected dimensions 10 (g=6,r=2) and 14 (g=9,r=3)");
    }

    // ---- criterion 4: hyperelliptic h0 closed form vs brute force
    {
        bool ok = true;
        for (int g = 2; g <= 8; ++g)
            for (int n = 0; n <= 2 * g - 2; ++n) {
                int closed = hyperelliptic_h0(g, n);
                if (closed != (n + 2) / 2 || closed != hyperelliptic_h0_bruteforce(g, n))
                    ok = false;
            }
        report(4, ok,
               "hyperelliptic h0(n p_inf) = floor((n+2)/2) = monomial count, 2<=g<=8, 0<=n<=2g-2");
    }

    // ---- criterion 5: duality, semigroup, and gap/vanishing agreement on
    //      every catalogued curve
    {
        ExampleWitness w33 = example_cone_ruling();
        ExampleWitness w34 = example_cubic_pair_inflection();
        std::vector<const WitnessVerification*> reports;
        WitnessVerification v33 = verify_witness(w33);
        WitnessVerification v34 = verify_witness(w34);
        reports = {&v31, &v32, &v33, &v34};
        bool ok = v33.ok && v34.ok;
        for (const WitnessVerification* v : reports) {
            const PointReport& r = v->report;
            int g = r.gaps.genus;
            // cross-path: gaps are exactly the shifted canonical vanishing orders
            if (static_cast<int>(r.vanishing.a.size()) != g) ok = false;
            for (int i = 0; i < g && ok; ++i)
                if (r.gaps.gaps[i] != r.vanishing.a[i] + 1) ok = false;
            // second path to h0: count non-gaps up to n
            for (int n = 0; n <= 2 * g - 1 && ok; ++n) {
                int nongaps = 0;
                for (int k = 1; k <= n; ++k)
                    if (std::find(r.gaps.gaps.begin(), r.gaps.gaps.end(), k) == r.gaps.gaps.end())
                        ++nongaps;
                if (r.h0_table[n] != 1 + nongaps) ok = false;
            }
            // subcanonical points: K = (2g-2)p, so duality reads off the table
            if (!r.subcanonical) ok = false;
            for (int n = 0; n <= 2 * g - 2 && ok; ++n)
                if (r.h0_table[n] - r.h0_table[2 * g - 2 - n] != n - g + 1) ok = false;
            if (!r.semigroup_ok) ok = false;
        }
        report(5, ok,
               "duality h0(np)-h0(K-np)=n-g+1, semigroup closure, and gap/vanishing "
               "cross-path agreement on all four catalogued curves");
    }

    // ---- criterion 6: limit-series combinatorics
    {
        bool ok = true;
        // compatibility classification vs the sum condition, exhaustively
        for (int d = 1; d <= 10 && ok; ++d)
            for (int r = 0; r <= 3 && r <= d && ok; ++r)
                enumerate_sequences(d, r, [&](const std::vector<int>& a1) {
                    enumerate_sequences(d, r, [&](const std::vector<int>& a2) {
                        bool crude = true, refined = true;
                        for (int i = 0; i <= r; ++i) {
                            int sum = a1[i] + a2[r - i];
                            if (sum < d) crude = false;
                            if (sum != d) refined = false;
                        }
                        LimitClass want = refined ? LimitClass::Refined
                                                  : (crude ? LimitClass::Crude : LimitClass::NotLimit);
                        if (classify_limit({d, r, a1, a2}) != want) ok = false;
                    });
                });
        // elliptic-tail gluing: refined and strictly monotone for all valid c
        for (int g = 3; g <= 8 && ok; ++g)
            for (int r = 1; r <= 3 && r <= g - 2 && ok; ++r)
                enumerate_sequences(g - 1, r, [&](const std::vector<int>& c) {
                    if (c.front() < 1 || c.back() != g - 1) return;
                    EllipticTailSequences out = elliptic_tail_sequences(g, r, c);
                    if (out.a.back() != g - 1) ok = false;
                    for (int i = 1; i <= r; ++i)
                        if (out.a[i] <= out.a[i - 1] || out.b[i] <= out.b[i - 1]) ok = false;
                    if (classify_limit({g - 1, r, c, out.b}) != LimitClass::Refined) ok = false;
                });
        // torsion gate, exhaustively over denominators <= 24
        for (int g : {3, 4, 6, 9}) {
            long target = 2L * g - 2;
            for (int bu = 1; bu <= 24 && ok; ++bu)
                for (int au = 0; au < bu && ok; ++au)
                    for (int bv = 1; bv <= 24 && ok; ++bv)
                        for (int av = 0; av < bv; ++av) {
                            Rational u(au, bu), v(av, bv);
                            long nu = u.denominator().get_si();
                            long nv = v.denominator().get_si();
                            long order = nu / std::gcd(nu, nv) * nv;
                            TorsionCoordinate t{u, v};
                            if (torsion_order(t) != order) ok = false;
                            if (lemma_torsion_gate(g, t) != (order == target)) ok = false;
                        }
        }
        report(6, ok,
               "limit-series suite: compatibility classification (d<=10, r<=3), "
               "elliptic-tail sequences (g<=8), torsion gate (denominators <= 24)");
    }

    // ---- criterion 7: parity constancy over 100 pseudorandom family members
    {
        ParityFamilyReport pf = parity_family_check(100);
        bool ok = pf.complete && pf.produced == 100 && pf.all_odd && pf.alpha_constant &&
                  pf.h0_histogram.size() == 1 && pf.h0_histogram.count(3) == 1;
        report(7, ok,
               "100 pseudorandom members of the five-fold-inflection quintic family all "
               "have h0(5p) = 3 (odd), constant ramification");
    }

    // ---- criterion 8: periods and lattice detection on w^2 = z^8 - 14 z^4 + 1
    HyperellipticModel model = schwarz_model();
    SpinorData spinor{to_gaussian(parse_polynomial("1", {"z"})),
                      to_gaussian(parse_polynomial("z", {"z"}))};
    HomologyBasis basis = homology_basis(model);
    {
        bool ok = conformality_check(differentials_from_spinor(spinor));

        // contractible loop integrates to < 1e-8 for all three differentials
        Cycle loop;
        Complex center(2.5, 2.5);
        for (int k = 0; k < 16; ++k) {
            double a = 2.0 * M_PI * k / 16;
            loop.waypoints.push_back(center + Complex(0.2 * std::cos(a), 0.2 * std::sin(a)));
        }
        loop.w_start = std::sqrt(poly_eval(model.f, loop.waypoints.front()));
        QuadratureConfig cfg;
        cfg.tol = 1e-10;
        DifferentialTriple triple = differentials_from_spinor(spinor);
        for (int k = 0; k < 3; ++k)
            if (std::abs(cycle_integral(model, to_complex_coeffs(triple.p[k]), loop, cfg)) > 1e-8)
                ok = false;

        auto detect = [&](double theta, double quad_tol) {
            QuadratureConfig qc;
            qc.tol = quad_tol;
            PeriodMatrix pm =
                period_matrix(model, differentials_from_spinor(spinor, theta), basis.cycles, qc);
            return lattice_detect(pm, 1e-6);
        };
        Lattice3 l0 = detect(0.0, 1e-10);
        Lattice3 l90 = detect(M_PI / 2.0, 1e-10);
        if (!(l0.success && l0.residual < 1e-6)) ok = false;
        if (!(l90.success && l90.residual < 1e-6)) ok = false;
        for (double quad_tol : {1e-6, 1e-8, 1e-10}) {
            Lattice3 l45 = detect(M_PI / 4.0, quad_tol);
            if (l45.success || l45.residual <= 1e-3) ok = false;
        }
        report(8, ok,
               "w^2 = z^8-14z^4+1 with (q0,q1)=(1,z): exact conformality, contractible "
               "loops < 1e-8, lattice closes (residual < 1e-6) at theta 0 and pi/2, fails "
               "(residual > 1e-3) at theta pi/4");
    }

    // ---- criterion 9: immersion mesh contract
    {
        DifferentialTriple triple = differentials_from_spinor(spinor);
        QuadratureConfig qc;
        qc.tol = 1e-9;
        PeriodMatrix pm = period_matrix(model, triple, basis.cycles, qc);
        Lattice3 lat = lattice_detect(pm, 1e-6);
        bool ok = lat.success;
        if (ok) {
            MeshConfig mc;
            mc.resolution = 10;
            mc.quad = qc;
            ImmersionMesh mesh = immersion_mesh(model, triple, lat, mc);
            MeshConfig mc2 = mc;
            mc2.tree_seed = 7;
            ImmersionMesh other = immersion_mesh(model, triple, lat, mc2);
            if (mesh.vertices.size() != other.vertices.size()) ok = false;
            for (std::size_t k = 0; ok && k < mesh.vertices.size(); ++k)
                if ((mesh.vertices[k] - other.vertices[k]).norm() >= 10.0 * qc.tol) ok = false;
            for (const auto& v : mesh.vertices)
                if (!v.allFinite()) ok = false;
            for (const auto& tri : mesh.triangles)
                for (int idx : tri)
                    if (idx < 0 || idx >= static_cast<int>(mesh.vertices.size())) ok = false;
            std::ostringstream a, b;
            export_obj(mesh, a);
            export_obj(immersion_mesh(model, triple, lat, mc), b);
            if (a.str().empty() || a.str() != b.str()) ok = false;
        }
        report(9, ok,
               "immersion mesh: spanning-tree independence within 10x tolerance, valid "
               "finite OBJ, bit-identical regeneration");
    }

    if (g_failures > 0) std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
