#include "subc/groebner.hpp"

#include <algorithm>
#include <utility>

namespace subc {

namespace {

int total_deg(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// degrevlex: higher total degree wins; ties broken by the rightmost
// differing exponent, smaller exponent winning.
bool drl_greater(const Exponents& a, const Exponents& b) {
    int da = total_deg(a), db = total_deg(b);
    if (da != db) return da > db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

using Term = std::pair<Exponents, Rational>;

// Terms sorted descending in degrevlex; leading term at front.
struct GPoly {
    std::vector<Term> terms;
    bool zero() const { return terms.empty(); }
    const Exponents& lm() const { return terms.front().first; }
    const Rational& lc() const { return terms.front().second; }
};

GPoly to_gpoly(const PolyQ& p) {
    GPoly g;
    g.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(g.terms.begin(), g.terms.end(),
              [](const Term& a, const Term& b) { return drl_greater(a.first, b.first); });
    return g;
}

PolyQ to_multipoly(const GPoly& g, int nvars) {
    PolyQ p(nvars);
    for (const auto& [e, c] : g.terms) p.add_term(e, c);
    return p;
}

// Clear denominators, strip integer content, make the leading coefficient
// positive. Keeps coefficient growth in check across reductions.
void normalize(GPoly& g) {
    if (g.zero()) return;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : g.terms)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> nums;
    nums.reserve(g.terms.size());
    for (const auto& [e, c] : g.terms) {
        mpz_class n = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        nums.push_back(std::move(n));
    }
    if (content == 0) content = 1;
    if (nums.front() < 0) content = -content;
    for (std::size_t i = 0; i < g.terms.size(); ++i)
        g.terms[i].second = Rational(mpq_class(nums[i] / content));
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// g -= (coef * x^shift) * h, merging sorted term lists.
void axpy(GPoly& g, const Rational& coef, const Exponents& shift, const GPoly& h) {
    std::vector<Term> out;
    out.reserve(g.terms.size() + h.terms.size());
    std::size_t i = 0, j = 0;
    Exponents e(shift.size());
    while (i < g.terms.size() || j < h.terms.size()) {
        bool take_g;
        if (j >= h.terms.size()) take_g = true;
        else {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = h.terms[j].first[k] + shift[k];
            if (i >= g.terms.size()) take_g = false;
            else if (g.terms[i].first == e) {
                Rational c = g.terms[i].second - coef * h.terms[j].second;
                if (!c.is_zero()) out.emplace_back(e, std::move(c));
                ++i;
                ++j;
                continue;
            } else take_g = drl_greater(g.terms[i].first, e);
        }
        if (take_g) {
            out.push_back(std::move(g.terms[i]));
            ++i;
        } else {
            out.emplace_back(e, -(coef * h.terms[j].second));
            ++j;
        }
    }
    g.terms = std::move(out);
}

// Full normal form of g modulo basis. Counts reduction steps against budget;
// returns false when the budget runs out.
bool reduce(GPoly& g, const std::vector<GPoly>& basis, long& budget) {
    std::size_t scan = 0;  // index of first term not yet known irreducible
    while (scan < g.terms.size()) {
        bool reduced = false;
        for (const GPoly& h : basis) {
            if (h.zero()) continue;
            if (!divides(h.lm(), g.terms[scan].first)) continue;
            if (--budget < 0) return false;
            Exponents shift(g.terms[scan].first.size());
            for (std::size_t k = 0; k < shift.size(); ++k)
                shift[k] = g.terms[scan].first[k] - h.lm()[k];
            Rational coef = g.terms[scan].second / h.lc();
            axpy(g, coef, shift, h);
            reduced = true;
            break;
        }
        if (!reduced) ++scan;
    }
    return true;
}

struct Pair {
    std::size_t i, j;
    Exponents lcm;
    int deg;
};

}  // namespace

GroebnerRun groebner_basis(const std::vector<PolyQ>& generators, const GroebnerOptions& opts) {
    GroebnerRun run;
    run.triviality = IdealTriviality::NonTrivial;
    long budget = opts.max_reductions;
    int nvars = 0;

    std::vector<GPoly> basis;
    for (const PolyQ& p : generators) {
        nvars = p.nvars();
        if (p.is_zero()) continue;
        GPoly g = to_gpoly(p);
        normalize(g);
        basis.push_back(std::move(g));
    }

    auto is_constant = [](const GPoly& g) {
        return !g.zero() && total_deg(g.lm()) == 0;
    };
    for (const GPoly& g : basis)
        if (is_constant(g)) {
            run.triviality = IdealTriviality::Trivial;
            run.basis = {PolyQ::constant(nvars, Rational(1))};
            return run;
        }

    std::vector<Pair> pairs;
    auto push_pairs_with = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].zero()) continue;
            if (coprime(basis[i].lm(), basis[t].lm())) continue;  // product criterion
            Exponents l = lcm_exp(basis[i].lm(), basis[t].lm());
            pairs.push_back({i, t, l, total_deg(l)});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs_with(t);

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(),
                                     [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
        Pair p = *best;
        pairs.erase(best);

        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j || basis[k].zero()) continue;
            if (!divides(basis[k].lm(), p.lcm)) continue;
            bool ik_alive = false, jk_alive = false;
            for (const Pair& q : pairs) {
                if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k))) ik_alive = true;
                if ((q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) jk_alive = true;
            }
            if (!ik_alive && !jk_alive) skip = true;
        }
        if (skip) continue;

        const GPoly& f = basis[p.i];
        const GPoly& h = basis[p.j];
        Exponents sf(p.lcm.size()), sh(p.lcm.size());
        for (std::size_t k = 0; k < p.lcm.size(); ++k) {
            sf[k] = p.lcm[k] - f.lm()[k];
            sh[k] = p.lcm[k] - h.lm()[k];
        }
        GPoly s;
        axpy(s, Rational(-1) / f.lc(), sf, f);
        axpy(s, Rational(1) / h.lc(), sh, h);

        if (!reduce(s, basis, budget)) {
            run.triviality = IdealTriviality::BudgetExceeded;
            run.reductions_used = opts.max_reductions;
            return run;
        }
        if (s.zero()) continue;
        normalize(s);
        if (is_constant(s)) {
            run.triviality = IdealTriviality::Trivial;
            run.basis = {PolyQ::constant(nvars, Rational(1))};
            run.reductions_used = opts.max_reductions - budget;
            return run;
        }
        basis.push_back(std::move(s));
        push_pairs_with(basis.size() - 1);
    }

    // inter-reduce for a canonical-ish output basis
    for (std::size_t i = 0; i < basis.size(); ++i) {
        GPoly g = basis[i];
        basis[i].terms.clear();
        if (!reduce(g, basis, budget)) {
            run.triviality = IdealTriviality::BudgetExceeded;
            return run;
        }
        normalize(g);
        basis[i] = std::move(g);
    }

    for (const GPoly& g : basis) {
        if (g.zero()) continue;
        run.basis.push_back(to_multipoly(g, nvars));
    }
    run.reductions_used = opts.max_reductions - budget;
    return run;
}

IdealTriviality ideal_contains_one(const std::vector<PolyQ>& generators,
                                   const GroebnerOptions& opts) {
    return groebner_basis(generators, opts).triviality;
}

}  // namespace subc
