#pragma once

#include "subc/branch.hpp"
#include "subc/curve.hpp"

#include <vector>

namespace subc {

// Basis of H0(omega_C) realized as degree-k forms modulo the degree-k piece
// of the curve's ideal (k the canonical twist).
struct CanonicalSystem {
    int twist;
    std::vector<PolyQ> basis;
    int dimension;  // always the genus
};

struct VanishingSequence {
    std::vector<int> a;  // strictly increasing, in [0, d]
    int d;
    int r;  // a.size() == r + 1
};

struct RamificationSequence {
    std::vector<int> alpha;  // non-decreasing
    int weight;
};

struct GapSequence {
    std::vector<int> gaps;  // g strictly increasing integers in [1, 2g-1]
    int genus;
};

// All monomials of the given total degree, as polynomials (lexicographic-ish
// deterministic order).
std::vector<PolyQ> monomial_basis(int nvars, int degree);

CanonicalSystem canonical_system(const CompleteIntersectionCurve& curve);

// Exact h0(C, n*p) via Riemann-Roch duality: h0(np) = n - g + 1 + h0(K - np),
// with h0(K - np) read off the rank of the order-(n-1) Taylor matrix of the
// canonical basis along the branch.
int h0_of_multiple(const CompleteIntersectionCurve& curve, const CanonicalSystem& canonical,
                   const LocalBranch& branch, int n);

GapSequence gap_sequence(const CompleteIntersectionCurve& curve, const CanonicalSystem& canonical,
                         const LocalBranch& branch);

// The r+1 distinct branch orders achieved by the series' sections, by exact
// column reduction of the Taylor matrix.
VanishingSequence vanishing_sequence(const std::vector<PolyQ>& series_basis,
                                     const LocalBranch& branch);

RamificationSequence ramification_and_weight(const VanishingSequence& v);

bool is_subcanonical(const CompleteIntersectionCurve& curve, const CanonicalSystem& canonical,
                     const LocalBranch& branch);

// True iff the non-gaps are closed under addition.
bool semigroup_check(const GapSequence& gaps);

// h0 at the infinite Weierstrass point of a hyperelliptic curve, closed form
// and brute-force monomial-count oracle.
int hyperelliptic_h0(int g, int n);
int hyperelliptic_h0_bruteforce(int g, int n);

// Convenience: computes the default branch (order 4g) and everything above.
struct PointReport {
    std::vector<int> h0_table;  // h0(n*p) for n = 0..2g-1
    GapSequence gaps;
    VanishingSequence vanishing;
    RamificationSequence ramification;
    bool subcanonical;
    bool semigroup_ok;
};

PointReport analyze_point(const CompleteIntersectionCurve& curve, const ProjectivePoint& point,
                          int order = -1, unsigned seed = 12345u);

}  // namespace subc
