#include "subc/surface.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace subc {

namespace {

// Floating-point LLL (delta = 0.99) on the rows of B.
void lll_reduce(Eigen::MatrixXd& B) {
    const int n = static_cast<int>(B.rows());
    if (n <= 1) return;
    const double delta = 0.99;

    Eigen::MatrixXd gs = B;          // Gram-Schmidt vectors
    Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
    auto recompute = [&]() {
        gs = B;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                double d = gs.row(j).squaredNorm();
                mu(i, j) = d > 0.0 ? B.row(i).dot(gs.row(j)) / d : 0.0;
                gs.row(i) -= mu(i, j) * gs.row(j);
            }
        }
    };
    recompute();

    int k = 1;
    int guard = 10000;
    while (k < n && guard-- > 0) {
        for (int j = k - 1; j >= 0; --j) {
            double r = std::round(mu(k, j));
            if (r != 0.0) {
                B.row(k) -= r * B.row(j);
                recompute();
            }
        }
        double lhs = gs.row(k).squaredNorm();
        double rhs = (delta - mu(k, k - 1) * mu(k, k - 1)) * gs.row(k - 1).squaredNorm();
        if (lhs >= rhs) {
            ++k;
        } else {
            B.row(k).swap(B.row(k - 1));
            recompute();
            k = std::max(k - 1, 1);
        }
    }
}

}  // namespace

Lattice3 lattice_detect(const PeriodMatrix& pm, double tol) {
    Lattice3 out;
    const int n = static_cast<int>(pm.rows.rows());
    if (n < 3) {
        out.detail = "need at least 3 period rows";
        return out;
    }

    // Embedding: (C * row_i, e_i). Integer relations among the rows become
    // short vectors whose geometric part is C * residual.
    const double scale = std::max(pm.rows.cwiseAbs().maxCoeff(), 1e-300);
    const double C = 1.0 / (tol * scale);
    Eigen::MatrixXd emb = Eigen::MatrixXd::Zero(n, 3 + n);
    for (int i = 0; i < n; ++i) {
        emb.block(i, 0, 1, 3) = C * pm.rows.row(i);
        emb(i, 3 + i) = 1.0;
    }
    lll_reduce(emb);

    // Sort by geometric norm; the three largest carry the lattice generators.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return emb.block(a, 0, 1, 3).squaredNorm() < emb.block(b, 0, 1, 3).squaredNorm();
    });
    Eigen::Matrix3d gen;
    for (int i = 0; i < 3; ++i) gen.row(i) = emb.block(order[n - 3 + i], 0, 1, 3) / C;

    double det = gen.determinant();
    double norm3 = gen.rowwise().norm().prod();
    if (!(std::abs(det) > 1e-12 * std::max(norm3, 1e-300))) {
        out.detail = "period rows do not span rank 3";
        return out;
    }

    // Reduce the generator triple (pairwise size reduction keeps them short).
    Eigen::MatrixXd g3 = gen;
    lll_reduce(g3);
    gen = g3;

    // Express every row as an integer combination.
    Eigen::Matrix3d inv = gen.inverse();
    out.coefficients.resize(n, 3);
    double worst = 0.0;
    double max_coeff = 0.0;
    for (int i = 0; i < n; ++i) {
        Eigen::RowVector3d x = pm.rows.row(i) * inv;
        Eigen::RowVector3d c = x.array().round();
        for (int j = 0; j < 3; ++j) out.coefficients(i, j) = static_cast<int>(c(j));
        worst = std::max(worst, (pm.rows.row(i) - c * gen).norm());
        max_coeff = std::max(max_coeff, c.cwiseAbs().maxCoeff());
    }
    out.generators = gen;
    out.residual = worst;
    if (worst >= tol * scale) {
        std::ostringstream os;
        os << "best residual " << worst << " above tolerance " << tol * scale;
        out.detail = os.str();
        return out;
    }
    if (max_coeff > 1e6) {
        out.detail = "integer coefficients implausibly large (spurious relation)";
        return out;
    }
    out.success = true;
    return out;
}

}  // namespace subc
