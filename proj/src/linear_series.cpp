#include "subc/linear_series.hpp"

#include <functional>
#include <stdexcept>

namespace subc {

namespace {

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            cur[var] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, left - e);
        }
    };
    if (degree >= 0) rec(0, degree);
    return out;
}

}  // namespace

std::vector<PolyQ> monomial_basis(int nvars, int degree) {
    std::vector<PolyQ> out;
    for (const Exponents& e : monomials_of_degree(nvars, degree))
        out.push_back(PolyQ::monomial(nvars, e, Rational(1)));
    return out;
}

CanonicalSystem canonical_system(const CompleteIntersectionCurve& curve) {
    const int k = curve.canonical_twist();
    const int nv = curve.ambient_dim() + 1;
    std::vector<Exponents> monos = monomials_of_degree(nv, k);
    const int ncols = static_cast<int>(monos.size());
    std::map<Exponents, int> col_of;
    for (int c = 0; c < ncols; ++c) col_of[monos[c]] = c;

    // degree-k graded piece of the ideal: m * F_i over monomials m of
    // complementary degree
    std::vector<PolyQ> ideal_k;
    for (const PolyQ& f : curve.forms()) {
        int d = f.total_degree();
        if (d > k) continue;
        for (const Exponents& m : monomials_of_degree(nv, k - d))
            ideal_k.push_back(PolyQ::monomial(nv, m, Rational(1)) * f);
    }

    MatrixQ rows = MatrixQ::Constant(static_cast<int>(ideal_k.size()), ncols, Rational(0));
    for (std::size_t i = 0; i < ideal_k.size(); ++i)
        for (const auto& [e, c] : ideal_k[i].terms()) rows(static_cast<int>(i), col_of.at(e)) = c;
    int ideal_rank = matrix_rank(rows);

    // greedy complement: monomials that extend the row space
    MatrixQ work = MatrixQ::Constant(static_cast<int>(ideal_k.size()) + ncols, ncols, Rational(0));
    work.topRows(rows.rows()) = rows;
    int used = static_cast<int>(rows.rows());
    int rank = ideal_rank;
    CanonicalSystem sys;
    sys.twist = k;
    for (int c = 0; c < ncols; ++c) {
        work(used, c) = Rational(1);
        int nr = matrix_rank(work.topRows(used + 1));
        if (nr > rank) {
            rank = nr;
            ++used;
            sys.basis.push_back(PolyQ::monomial(nv, monos[c], Rational(1)));
        } else {
            work(used, c) = Rational(0);
        }
    }
    sys.dimension = static_cast<int>(sys.basis.size());
    if (sys.dimension != curve.genus())
        throw std::runtime_error(
            "canonical_system: dimension " + std::to_string(sys.dimension) +
            " does not match genus " + std::to_string(curve.genus()) + " (model inconsistency)");
    return sys;
}

namespace {

// Taylor coefficient matrix: row r = order-r coefficients of the composed
// basis series.
MatrixQ taylor_matrix(const std::vector<PolyQ>& basis, const LocalBranch& branch, int rows) {
    if (rows - 1 > branch.truncation_order)
        throw std::runtime_error("taylor_matrix: branch truncation too small; raise the order");
    MatrixQ m(rows, static_cast<int>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        SeriesQ s = compose(basis[c], branch);
        for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = s[r];
    }
    return m;
}

}  // namespace

int h0_of_multiple(const CompleteIntersectionCurve& curve, const CanonicalSystem& canonical,
                   const LocalBranch& branch, int n) {
    if (n < 0) throw std::invalid_argument("h0_of_multiple: n must be >= 0");
    const int g = curve.genus();
    if (n > 2 * g - 2) return n - g + 1;  // h0(K - np) = 0 beyond the special range
    int h0_k_minus = g - (n == 0 ? 0 : matrix_rank(taylor_matrix(canonical.basis, branch, n)));
    return n - g + 1 + h0_k_minus;
}

GapSequence gap_sequence(const CompleteIntersectionCurve& curve, const CanonicalSystem& canonical,
                         const LocalBranch& branch) {
    const int g = curve.genus();
    GapSequence gs;
    gs.genus = g;
    int prev = h0_of_multiple(curve, canonical, branch, 0);
    for (int n = 1; n <= 2 * g - 1; ++n) {
        int cur = h0_of_multiple(curve, canonical, branch, n);
        if (cur == prev) gs.gaps.push_back(n);
        prev = cur;
    }
    if (static_cast<int>(gs.gaps.size()) != g)
        throw std::runtime_error("gap_sequence: expected exactly g gaps (truncation starvation?)");
    return gs;
}

VanishingSequence vanishing_sequence(const std::vector<PolyQ>& series_basis,
                                     const LocalBranch& branch) {
    const int n = branch.truncation_order;
    const int cols = static_cast<int>(series_basis.size());
    std::vector<std::vector<Rational>> col(cols);
    for (int c = 0; c < cols; ++c) col[c] = compose(series_basis[c], branch).coeffs();

    auto lead = [&](int c) -> int {
        for (int r = 0; r <= n; ++r)
            if (!col[c][r].is_zero()) return r;
        return -1;
    };

    std::vector<int> pivot_col(n + 1, -1);  // order -> column holding that pivot
    std::vector<int> orders;
    int d = -1;
    for (int c = 0; c < cols; ++c) {
        int r = lead(c);
        while (r >= 0 && pivot_col[r] >= 0) {
            int pc = pivot_col[r];
            Rational f = col[c][r] / col[pc][r];
            for (int i = r; i <= n; ++i) col[c][i] -= f * col[pc][i];
            r = lead(c);
        }
        if (r < 0)
            throw std::runtime_error(
                "vanishing_sequence: dependent basis or truncation starvation");
        pivot_col[r] = c;
        orders.push_back(r);
        d = std::max(d, r);
    }
    std::sort(orders.begin(), orders.end());

    VanishingSequence v;
    v.a = std::move(orders);
    v.r = cols - 1;
    v.d = v.a.back();  // callers with a definite degree may override
    return v;
}

RamificationSequence ramification_and_weight(const VanishingSequence& v) {
    RamificationSequence r;
    r.weight = 0;
    for (std::size_t i = 0; i < v.a.size(); ++i) {
        int ai = v.a[i] - static_cast<int>(i);
        r.alpha.push_back(ai);
        r.weight += ai;
    }
    return r;
}

bool is_subcanonical(const CompleteIntersectionCurve& curve, const CanonicalSystem& canonical,
                     const LocalBranch& branch) {
    GapSequence gs = gap_sequence(curve, canonical, branch);
    return gs.gaps.back() == 2 * curve.genus() - 1;
}

bool semigroup_check(const GapSequence& gs) {
    const int top = 2 * gs.genus - 1;
    std::vector<bool> is_gap(top + 1, false);
    for (int k : gs.gaps) {
        if (k < 1 || k > top) return false;
        is_gap[k] = true;
    }
    // sums beyond 2g-1 are automatically non-gaps
    for (int a = 1; a <= top; ++a) {
        if (is_gap[a]) continue;
        for (int b = a; a + b <= top; ++b) {
            if (is_gap[b]) continue;
            if (is_gap[a + b]) return false;
        }
    }
    return true;
}

int hyperelliptic_h0(int g, int n) {
    if (g < 2 || n < 0 || n > 2 * g - 2)
        throw std::invalid_argument("hyperelliptic_h0: need g >= 2 and 0 <= n <= 2g-2");
    return (n + 2) / 2;
}

int hyperelliptic_h0_bruteforce(int g, int n) {
    if (g < 2 || n < 0 || n > 2 * g - 2)
        throw std::invalid_argument("hyperelliptic_h0_bruteforce: out of range");
    // Monomial sections z^i and z^i*w on w^2 = f(z), deg f = 2g+1, with pole
    // orders 2i and 2i + 2g + 1 at the infinite Weierstrass point.
    int count = 0;
    for (int i = 0; 2 * i <= n; ++i) ++count;
    for (int i = 0; 2 * i + 2 * g + 1 <= n; ++i) ++count;
    return count;
}

PointReport analyze_point(const CompleteIntersectionCurve& curve, const ProjectivePoint& point,
                          int order, unsigned seed) {
    const int g = curve.genus();
    if (order < 0) order = 4 * g;
    LocalBranch branch = local_branch(curve, point, order, seed);
    CanonicalSystem canonical = canonical_system(curve);

    PointReport rep;
    for (int n = 0; n <= 2 * g - 1; ++n)
        rep.h0_table.push_back(h0_of_multiple(curve, canonical, branch, n));
    rep.gaps = gap_sequence(curve, canonical, branch);
    rep.vanishing = vanishing_sequence(canonical.basis, branch);
    rep.vanishing.d = 2 * g - 2;
    rep.ramification = ramification_and_weight(rep.vanishing);
    rep.subcanonical = rep.gaps.gaps.back() == 2 * g - 1;
    rep.semigroup_ok = semigroup_check(rep.gaps);
    return rep;
}

}  // namespace subc
