#pragma once

#include "subc/poly.hpp"

#include <vector>

namespace subc {

// Buchberger over Q with degrevlex order. Geared at radical-membership style
// questions (does the ideal contain 1), with a step budget so callers get an
// explicit "inconclusive" instead of a runaway computation.

struct GroebnerOptions {
    long max_reductions = 2'000'000;  // term reduction steps
};

enum class IdealTriviality { Trivial, NonTrivial, BudgetExceeded };

struct GroebnerRun {
    IdealTriviality triviality;
    std::vector<PolyQ> basis;  // reduced basis when completed
    long reductions_used = 0;
};

GroebnerRun groebner_basis(const std::vector<PolyQ>& generators,
                           const GroebnerOptions& opts = {});

// True iff 1 lies in the ideal generated by the (affine) polynomials.
IdealTriviality ideal_contains_one(const std::vector<PolyQ>& generators,
                                   const GroebnerOptions& opts = {});

}  // namespace subc
