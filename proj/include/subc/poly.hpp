#pragma once

#include "subc/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace subc {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over an exact scalar. Zero coefficients are
// never stored; the term map is ordered so iteration is deterministic.
template <typename Scalar>
class MultiPoly {
public:
    using Terms = std::map<Exponents, Scalar>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
    }

    static MultiPoly constant(int nvars, Scalar c) {
        MultiPoly p(nvars);
        p.add_term(Exponents(nvars, 0), std::move(c));
        return p;
    }
    static MultiPoly variable(int nvars, int index) {
        MultiPoly p(nvars);
        Exponents e(nvars, 0);
        e.at(index) = 1;
        p.add_term(e, Scalar(1));
        return p;
    }
    static MultiPoly monomial(int nvars, Exponents e, Scalar c) {
        MultiPoly p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
        return d;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int de = degree_of(e);
            if (d == -2) d = de;
            else if (d != de) return false;
        }
        return true;
    }

    void add_term(Exponents e, Scalar c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
        Scalar acc(0);
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(std::move(d), c * Scalar(e[var]));
        }
        return r;
    }

    // Substitutes the given polynomials for the variables (arity of result =
    // arity of the images).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::substitute: arity mismatch");
        int m = images.empty() ? 0 : images.front().nvars();
        MultiPoly acc(m);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(m, c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= images[i];
            acc += t;
        }
        return acc;
    }

    static int degree_of(const Exponents& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    // Canonical text form: terms in the map's order, "c*x0^e0*..." joined
    // with signs. Variable names supplied by the caller.
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names.at(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            std::string body;
            if (mono.empty()) body = cs;
            else if (cs == "1") body = mono;
            else body = cs + "*" + mono;
            if (first) {
                out = (neg ? "-" : "") + body;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    static std::string coeff_str(const Rational& c) { return c.str(); }

    void check_arity(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("MultiPoly: mixed variable counts");
    }

    int nvars_;
    Terms terms_;
};

using PolyQ = MultiPoly<Rational>;
using PolyQi = MultiPoly<GaussianRational>;

}  // namespace subc
