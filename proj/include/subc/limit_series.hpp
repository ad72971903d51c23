#pragma once

#include "subc/linear_series.hpp"
#include "subc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subc {

// Aspect vanishing data of a candidate limit series at the node of a
// two-component nodal curve.
struct NodalVanishingData {
    int d;
    int r;
    std::vector<int> a1;  // vanishing sequence of the C1 aspect at the node
    std::vector<int> a2;  // vanishing sequence of the C2 aspect at the node
};

enum class LimitClass { NotLimit, Crude, Refined };

std::string to_string(LimitClass c);

// Checks a1[i] + a2[r-i] >= d for all i; refined when all are equalities.
LimitClass classify_limit(const NodalVanishingData& data);

// Sequence arithmetic of the elliptic-tail gluing: from the C-aspect
// vanishing c at the node (c0 >= 1, c_r = g-1), produces the E-aspect
// vanishing b at the node and a at the marked point.
struct EllipticTailSequences {
    std::vector<int> a;  // at the marked point; a_r = g-1
    std::vector<int> b;  // at the node; (c, b) is refined for d = g-1
};

EllipticTailSequences elliptic_tail_sequences(int g, int r, const std::vector<int>& c);

// p - q in lattice coordinates on E = C/(Z + tau*Z), both entries mod 1.
struct TorsionCoordinate {
    Rational u;
    Rational v;

    TorsionCoordinate(Rational u_, Rational v_);
};

// Least n >= 1 with n*u and n*v integral (lcm of reduced denominators).
long torsion_order(const TorsionCoordinate& t);

// True iff the torsion order is exactly 2g-2, the gluing condition for
// elliptic tails.
bool lemma_torsion_gate(int g, const TorsionCoordinate& t);

// 2g - r(r-1)/2 - 1, the dimension every component must reach.
int expected_dimension(int g, int r);
// 2g - 1 - r^2, the weaker bound from Weierstrass-weight counting alone.
int naive_bound(int g, int r);
// (0,...,0, r,...,r, g-1) with g-r-1 zeros and r copies of r; weight
// r^2 + g - 1.
RamificationSequence minimal_ramification(int g, int r);

}  // namespace subc
