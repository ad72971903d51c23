#include "subc/curve.hpp"

#include <functional>
#include <stdexcept>

namespace subc {

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    chart_ = -1;
    for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i)
        if (!coords_[i].is_zero()) { chart_ = i; break; }
    if (chart_ < 0) throw std::invalid_argument("ProjectivePoint: zero vector");
    Rational inv = Rational(1) / coords_[chart_];
    for (auto& c : coords_) c *= inv;
}

std::string ProjectivePoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ":";
        s += coords_[i].str();
    }
    return s + ")";
}

CompleteIntersectionCurve::CompleteIntersectionCurve(int ambient_dim, std::vector<PolyQ> forms,
                                                     std::vector<std::string> variable_names)
    : n_(ambient_dim), forms_(std::move(forms)), names_(std::move(variable_names)) {
    if (static_cast<int>(forms_.size()) != n_ - 1)
        throw std::invalid_argument("CompleteIntersectionCurve: need n-1 forms in P^n");
    int degree_sum = 0;
    long long degree_prod = 1;
    for (const PolyQ& f : forms_) {
        if (f.nvars() != n_ + 1)
            throw std::invalid_argument("CompleteIntersectionCurve: form arity != n+1");
        if (f.is_zero() || !f.is_homogeneous())
            throw std::invalid_argument("CompleteIntersectionCurve: forms must be nonzero homogeneous");
        int d = f.total_degree();
        degrees_.push_back(d);
        degree_sum += d;
        degree_prod *= d;
    }
    twist_ = degree_sum - n_ - 1;
    if (twist_ < 1)
        throw std::invalid_argument("CompleteIntersectionCurve: canonical twist must be >= 1");
    // adjunction: 2g - 2 = k * prod(d_i)
    long long two_g_minus_2 = static_cast<long long>(twist_) * degree_prod;
    genus_ = static_cast<int>(two_g_minus_2 / 2 + 1);
    if (names_.empty())
        for (int i = 0; i <= n_; ++i) names_.push_back("x" + std::to_string(i));
}

bool CompleteIntersectionCurve::contains(const ProjectivePoint& p) const {
    for (const PolyQ& f : forms_)
        if (!f.evaluate(p.coords()).is_zero()) return false;
    return true;
}

bool is_smooth_at(const std::vector<PolyQ>& forms, const ProjectivePoint& p) {
    int m = static_cast<int>(forms.size());
    int cols = static_cast<int>(p.coords().size());
    for (const PolyQ& f : forms)
        if (!f.evaluate(p.coords()).is_zero())
            throw std::invalid_argument("is_smooth_at: point is not on the variety");
    MatrixQ jac(m, cols);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j)
            jac(i, j) = forms[i].derivative(j).evaluate(p.coords());
    return matrix_rank(jac) == m;
}

bool is_smooth_at(const CompleteIntersectionCurve& curve, const ProjectivePoint& p) {
    return is_smooth_at(curve.forms(), p);
}

PolyQ dehomogenize(const PolyQ& form, int chart) {
    PolyQ r(form.nvars());
    for (const auto& [e, c] : form.terms()) {
        Exponents d = e;
        d[chart] = 0;
        r.add_term(std::move(d), c);
    }
    return r;
}

namespace {

PolyQ poly_det(const std::vector<std::vector<PolyQ>>& m) {
    std::size_t k = m.size();
    if (k == 1) return m[0][0];
    int nv = m[0][0].nvars();
    PolyQ det(nv);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<PolyQ>> sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<PolyQ> row;
            for (std::size_t l = 0; l < k; ++l)
                if (l != j) row.push_back(m[i][l]);
            sub.push_back(std::move(row));
        }
        PolyQ term = m[0][j] * poly_det(sub);
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

}  // namespace

std::vector<PolyQ> jacobian_minors(const std::vector<PolyQ>& forms, int k) {
    int m = static_cast<int>(forms.size());
    int cols = forms.empty() ? 0 : forms[0].nvars();
    std::vector<std::vector<PolyQ>> jac(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j) jac[i].push_back(forms[i].derivative(j));

    std::vector<PolyQ> minors;
    std::vector<int> rsel, csel;
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
        if (depth == k) {
            std::vector<std::vector<PolyQ>> sub(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i].push_back(jac[rsel[i]][csel[j]]);
            PolyQ d = poly_det(sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
            return;
        }
        for (int c = start; c <= cols - (k - depth); ++c) {
            csel.push_back(c);
            pick_cols(c + 1, depth + 1);
            csel.pop_back();
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r <= m - (k - depth); ++r) {
            rsel.push_back(r);
            pick_rows(r + 1, depth + 1);
            rsel.pop_back();
        }
    };
    pick_rows(0, 0);
    return minors;
}

namespace {

// Brute search for a rational singular point with small coordinates. Only a
// convenience for error reporting; the certificate itself comes from the
// elimination step.
std::optional<ProjectivePoint> witness_search(const std::vector<PolyQ>& system, int ambient_dim) {
    int ncoords = ambient_dim + 1;
    std::vector<int> v(ncoords, 0);
    const int lo = -2, hi = 2;
    std::function<std::optional<ProjectivePoint>(int)> rec =
        [&](int i) -> std::optional<ProjectivePoint> {
        if (i == ncoords) {
            bool all_zero = true;
            for (int x : v)
                if (x != 0) all_zero = false;
            if (all_zero) return std::nullopt;
            std::vector<Rational> coords;
            for (int x : v) coords.emplace_back(x);
            for (const PolyQ& f : system)
                if (!f.evaluate(coords).is_zero()) return std::nullopt;
            return ProjectivePoint(coords);
        }
        for (int x = lo; x <= hi; ++x) {
            v[i] = x;
            if (auto w = rec(i + 1)) return w;
        }
        return std::nullopt;
    };
    return rec(0);
}

}  // namespace

SmoothnessCertificate smoothness_certificate(int ambient_dim, const std::vector<PolyQ>& forms,
                                             long budget) {
    int codim = static_cast<int>(forms.size());
    std::vector<PolyQ> system = forms;
    for (PolyQ& m : jacobian_minors(forms, codim)) system.push_back(std::move(m));

    SmoothnessCertificate cert;
    cert.status = SmoothnessCertificate::Status::Smooth;
    GroebnerOptions opts;
    opts.max_reductions = budget;

    for (int chart = 0; chart <= ambient_dim; ++chart) {
        std::vector<PolyQ> affine;
        for (const PolyQ& f : system) affine.push_back(dehomogenize(f, chart));
        GroebnerRun run = groebner_basis(affine, opts);
        cert.reductions_used += run.reductions_used;
        if (run.triviality == IdealTriviality::BudgetExceeded) {
            cert.status = SmoothnessCertificate::Status::Inconclusive;
            cert.detail = "elimination budget exceeded in chart " + std::to_string(chart);
            return cert;
        }
        if (run.triviality == IdealTriviality::NonTrivial) {
            cert.status = SmoothnessCertificate::Status::Singular;
            cert.detail = "singular locus meets chart " + std::to_string(chart);
            cert.witness = witness_search(system, ambient_dim);
            return cert;
        }
    }
    return cert;
}

SmoothnessCertificate smoothness_certificate(const CompleteIntersectionCurve& curve, long budget) {
    return smoothness_certificate(curve.ambient_dim(), curve.forms(), budget);
}

}  // namespace subc
