#pragma once

#include "subc/exact_linalg.hpp"
#include "subc/groebner.hpp"
#include "subc/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subc {

// Point of P^n with exact coordinates, normalized so the last nonzero
// coordinate is 1.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
    // Index of the normalized coordinate (the canonical affine chart).
    int chart() const { return chart_; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_;
    }

    std::string str() const;

private:
    std::vector<Rational> coords_;
    int chart_;
};

// Smooth curve cut out by n-1 homogeneous forms in P^n. The canonical twist
// k = sum(d_i) - n - 1 realizes omega_C as O_C(k) by adjunction.
class CompleteIntersectionCurve {
public:
    CompleteIntersectionCurve(int ambient_dim, std::vector<PolyQ> forms,
                              std::vector<std::string> variable_names = {});

    int ambient_dim() const { return n_; }
    const std::vector<PolyQ>& forms() const { return forms_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::string>& variable_names() const { return names_; }
    int canonical_twist() const { return twist_; }
    int genus() const { return genus_; }

    bool contains(const ProjectivePoint& p) const;

private:
    int n_;
    std::vector<PolyQ> forms_;
    std::vector<int> degrees_;
    std::vector<std::string> names_;
    int twist_;
    int genus_;
};

// Rank of the Jacobian of the forms at a point lying on all of them equals
// the expected codimension exactly at smooth points.
bool is_smooth_at(const std::vector<PolyQ>& forms, const ProjectivePoint& p);
bool is_smooth_at(const CompleteIntersectionCurve& curve, const ProjectivePoint& p);

struct SmoothnessCertificate {
    enum class Status { Smooth, Singular, Inconclusive };
    Status status;
    std::optional<ProjectivePoint> witness;  // a singular point, when one was found
    long reductions_used = 0;
    std::string detail;
};

// Decides global smoothness of the complete intersection cut out by the
// forms (any codimension; a single form checks a hypersurface). Chart by
// chart, the dehomogenized system {forms, maximal Jacobian minors} must
// generate the unit ideal.
SmoothnessCertificate smoothness_certificate(int ambient_dim, const std::vector<PolyQ>& forms,
                                             long budget = 2'000'000);
SmoothnessCertificate smoothness_certificate(const CompleteIntersectionCurve& curve,
                                             long budget = 2'000'000);

// All k-by-k minors of the Jacobian matrix of the forms.
std::vector<PolyQ> jacobian_minors(const std::vector<PolyQ>& forms, int k);

// Sets variable `chart` to 1 (arity preserved; the result is non-homogeneous
// in general).
PolyQ dehomogenize(const PolyQ& form, int chart);

}  // namespace subc
