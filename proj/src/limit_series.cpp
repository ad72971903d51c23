#include "subc/limit_series.hpp"

#include <stdexcept>

namespace subc {

namespace {

bool valid_vanishing(const std::vector<int>& a, int d, int r) {
    if (static_cast<int>(a.size()) != r + 1) return false;
    for (int i = 0; i <= r; ++i) {
        if (a[i] < 0 || a[i] > d) return false;
        if (i > 0 && a[i] <= a[i - 1]) return false;
    }
    return true;
}

}  // namespace

std::string to_string(LimitClass c) {
    switch (c) {
        case LimitClass::NotLimit: return "not_limit";
        case LimitClass::Crude: return "crude";
        case LimitClass::Refined: return "refined";
    }
    return "?";
}

LimitClass classify_limit(const NodalVanishingData& data) {
    if (!valid_vanishing(data.a1, data.d, data.r) || !valid_vanishing(data.a2, data.d, data.r))
        throw std::invalid_argument("classify_limit: invalid vanishing sequences");
    bool all_equal = true;
    for (int i = 0; i <= data.r; ++i) {
        int s = data.a1[i] + data.a2[data.r - i];
        if (s < data.d) return LimitClass::NotLimit;
        if (s > data.d) all_equal = false;
    }
    return all_equal ? LimitClass::Refined : LimitClass::Crude;
}

EllipticTailSequences elliptic_tail_sequences(int g, int r, const std::vector<int>& c) {
    if (!valid_vanishing(c, g - 1, r))
        throw std::invalid_argument("elliptic_tail_sequences: invalid input sequence");
    if (c.front() < 1 || c.back() != g - 1)
        throw std::invalid_argument("elliptic_tail_sequences: need c0 >= 1 and c_r = g-1");

    EllipticTailSequences out;
    out.b.resize(r + 1);
    out.a.resize(r + 1);
    for (int i = 0; i <= r; ++i) out.b[i] = g - 1 - c[r - i];
    out.a[r] = g - 1;
    for (int i = 1; i <= r; ++i) out.a[r - i] = g - 2 - out.b[i];

    NodalVanishingData check{g - 1, r, c, out.b};
    if (classify_limit(check) != LimitClass::Refined)
        throw std::logic_error("elliptic_tail_sequences: output pair is not refined (internal)");
    return out;
}

TorsionCoordinate::TorsionCoordinate(Rational u_, Rational v_) : u(std::move(u_)), v(std::move(v_)) {
    auto reduce_mod1 = [](Rational& x) {
        mpz_class num = x.numerator(), den = x.denominator(), q, rem;
        mpz_fdiv_r(rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        x = Rational(mpq_class(rem, den));
    };
    reduce_mod1(u);
    reduce_mod1(v);
}

long torsion_order(const TorsionCoordinate& t) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), t.u.denominator().get_mpz_t(), t.v.denominator().get_mpz_t());
    return l.get_si();
}

bool lemma_torsion_gate(int g, const TorsionCoordinate& t) {
    if (g < 3) throw std::invalid_argument("lemma_torsion_gate: need g >= 3");
    return torsion_order(t) == 2L * g - 2;
}

int expected_dimension(int g, int r) {
    if (g < 3 || r < 0) throw std::invalid_argument("expected_dimension: need g >= 3, r >= 0");
    return 2 * g - r * (r - 1) / 2 - 1;
}

int naive_bound(int g, int r) {
    if (g < 3 || r < 0) throw std::invalid_argument("naive_bound: need g >= 3, r >= 0");
    return 2 * g - 1 - r * r;
}

RamificationSequence minimal_ramification(int g, int r) {
    if (g < 3 || r < 0 || g - r - 1 < 0)
        throw std::invalid_argument("minimal_ramification: need g >= 3 and r <= g-1");
    RamificationSequence seq;
    seq.alpha.assign(g - r - 1, 0);
    seq.alpha.insert(seq.alpha.end(), r, r);
    seq.alpha.push_back(g - 1);
    seq.weight = r * r + g - 1;
    return seq;
}

}  // namespace subc
