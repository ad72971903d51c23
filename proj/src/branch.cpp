#include "subc/branch.hpp"

#include <random>
#include <stdexcept>

namespace subc {

namespace {

SeriesQ compose_series(const PolyQ& form, const std::vector<SeriesQ>& coords, int order) {
    SeriesQ acc(order);
    for (const auto& [e, c] : form.terms()) {
        SeriesQ t = SeriesQ::constant(c, order);
        for (std::size_t j = 0; j < coords.size(); ++j)
            for (int k = 0; k < e[j]; ++k) t *= coords[j];
        acc += t;
    }
    return acc;
}

}  // namespace

LocalBranch local_branch(const CompleteIntersectionCurve& curve, const ProjectivePoint& point,
                         int order, unsigned seed) {
    return local_branch(curve.ambient_dim(), curve.forms(), point, order, seed);
}

LocalBranch local_branch(int ambient_dim, const std::vector<PolyQ>& forms,
                         const ProjectivePoint& point, int order, unsigned seed) {
    if (static_cast<int>(forms.size()) != ambient_dim - 1)
        throw std::invalid_argument("local_branch: need ambient_dim - 1 forms");
    for (const PolyQ& f : forms)
        if (!f.evaluate(point.coords()).is_zero())
            throw std::invalid_argument("local_branch: point is not on the curve");
    if (!is_smooth_at(forms, point))
        throw std::invalid_argument("local_branch: point is not a smooth point");
    if (order < 1) throw std::invalid_argument("local_branch: order must be >= 1");

    const int ncoords = ambient_dim + 1;
    const int chart = point.chart();
    std::vector<int> affine;  // ambient indices of the chart-affine coordinates
    for (int j = 0; j < ncoords; ++j)
        if (j != chart) affine.push_back(j);
    const int n = static_cast<int>(affine.size());

    // Jacobian rows of the defining forms w.r.t. the affine coordinates.
    MatrixQ jac(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n; ++j)
            jac(i, j) = forms[i].derivative(affine[j]).evaluate(point.coords());

    // Uniformizer candidates: coordinate sections x_j - p_j * x_chart first,
    // then seeded random rational combinations of them.
    std::mt19937 rng(seed);
    auto make_candidate = [&](const std::vector<Rational>& combo) {
        PolyQ u(ncoords);
        Rational shift(0);
        for (int j = 0; j < n; ++j) {
            u += combo[j] * PolyQ::variable(ncoords, affine[j]);
            shift += combo[j] * point.coords()[affine[j]];
        }
        u -= shift * PolyQ::variable(ncoords, chart);
        return u;
    };

    PolyQ uniformizer(ncoords);
    bool found = false;
    for (int attempt = 0; attempt < n + 40 && !found; ++attempt) {
        std::vector<Rational> combo(n, Rational(0));
        if (attempt < n) {
            combo[attempt] = Rational(1);
        } else {
            std::uniform_int_distribution<int> dist(-5, 5);
            for (int j = 0; j < n; ++j) combo[j] = Rational(dist(rng));
        }
        for (int j = 0; j < n; ++j) jac(n - 1, j) = combo[j];
        if (matrix_rank(jac) == n) {
            uniformizer = make_candidate(combo);
            found = true;
        }
    }
    if (!found)
        throw std::runtime_error("local_branch: no transverse uniformizer found (internal)");

    // jac now holds the full invertible system for the Newton steps.
    std::vector<SeriesQ> coords(ncoords);
    for (int j = 0; j < ncoords; ++j)
        coords[j] = SeriesQ::constant(point.coords()[j], order);

    VectorQ rhs(n), step(n);
    for (int k = 1; k <= order; ++k) {
        for (int i = 0; i < n - 1; ++i) {
            SeriesQ r = compose_series(forms[i], coords, k);
            rhs(i) = -r[k];
        }
        SeriesQ ru = compose_series(uniformizer, coords, k);
        rhs(n - 1) = (k == 1 ? Rational(1) : Rational(0)) - ru[k];
        if (!solve_linear(jac, rhs, step))
            throw std::runtime_error("local_branch: Newton system became singular (internal)");
        for (int j = 0; j < n; ++j) coords[affine[j]][k] = step(j);
    }

    // Sanity: forms compose to zero, uniformizer composes to order exactly 1.
    for (const PolyQ& f : forms)
        if (!compose_series(f, coords, order).is_zero_to_truncation())
            throw std::runtime_error("local_branch: lifted series does not satisfy the forms");
    SeriesQ u = compose_series(uniformizer, coords, order);
    if (u.vanishing_order() != std::optional<int>(1))
        throw std::runtime_error("local_branch: uniformizer does not have order 1");

    return LocalBranch{point, chart, uniformizer, std::move(coords), order};
}

SeriesQ compose(const PolyQ& form, const LocalBranch& branch) {
    if (form.nvars() != static_cast<int>(branch.coordinate_series.size()))
        throw std::invalid_argument("compose: form arity mismatch");
    return compose_series(form, branch.coordinate_series, branch.truncation_order);
}

std::optional<int> vanishing_order(const PolyQ& form, const LocalBranch& branch) {
    return compose(form, branch).vanishing_order();
}

}  // namespace subc
