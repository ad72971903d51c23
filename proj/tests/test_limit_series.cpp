#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subc/limit_series.hpp"

#include <functional>
#include <numeric>

using namespace subc;

TEST_CASE("classify_limit on the d=8 r=3 examples") {
    CHECK(classify_limit({8, 3, {0, 1, 2, 8}, {0, 6, 7, 8}}) == LimitClass::Refined);
    CHECK(classify_limit({8, 3, {0, 1, 2, 8}, {1, 6, 7, 8}}) == LimitClass::Crude);
    CHECK(classify_limit({8, 3, {0, 1, 2, 8}, {0, 5, 7, 8}}) == LimitClass::NotLimit);
}

namespace {

// Independent oracle straight from the defining inequalities.
LimitClass classify_oracle(int d, int r, const std::vector<int>& a1, const std::vector<int>& a2) {
    int geq = 0, eq = 0;
    for (int i = 0; i <= r; ++i) {
        int s = a1[i] + a2[r - i];
        if (s >= d) ++geq;
        if (s == d) ++eq;
    }
    if (geq < r + 1) return LimitClass::NotLimit;
    return eq == r + 1 ? LimitClass::Refined : LimitClass::Crude;
}

void enumerate_sequences(int d, int r, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> a(r + 1);
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == r + 1) {
            f(a);
            return;
        }
        for (int v = lo; v <= d - (r - i); ++v) {
            a[i] = v;
            rec(i + 1, v + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

TEST_CASE("classify_limit matches the oracle exhaustively and is symmetric") {
    for (int d = 1; d <= 10; ++d) {
        for (int r = 0; r <= 3 && r <= d; ++r) {
            enumerate_sequences(d, r, [&](const std::vector<int>& a1) {
                enumerate_sequences(d, r, [&](const std::vector<int>& a2) {
                    LimitClass got = classify_limit({d, r, a1, a2});
                    CHECK(got == classify_oracle(d, r, a1, a2));
                    CHECK(got == classify_limit({d, r, a2, a1}));
                });
            });
        }
    }
}

TEST_CASE("elliptic_tail_sequences on the worked cases") {
    auto s1 = elliptic_tail_sequences(6, 2, {1, 2, 5});
    CHECK(s1.b == std::vector<int>{0, 3, 4});
    CHECK(s1.a == std::vector<int>{0, 1, 5});

    auto s2 = elliptic_tail_sequences(3, 1, {1, 2});
    CHECK(s2.b == std::vector<int>{0, 1});
    CHECK(s2.a == std::vector<int>{0, 2});
}

TEST_CASE("elliptic_tail_sequences exhaustive properties for g <= 8, r <= 3") {
    for (int g = 3; g <= 8; ++g) {
        for (int r = 1; r <= 3 && r <= g - 2; ++r) {
            enumerate_sequences(g - 1, r, [&](const std::vector<int>& c) {
                if (c.front() < 1 || c.back() != g - 1) return;
                auto out = elliptic_tail_sequences(g, r, c);
                CHECK(out.a.back() == g - 1);
                for (int i = 1; i <= r; ++i) {
                    CHECK(out.a[i] > out.a[i - 1]);
                    CHECK(out.b[i] > out.b[i - 1]);
                }
                CHECK(classify_limit({g - 1, r, c, out.b}) == LimitClass::Refined);
            });
        }
    }
}

TEST_CASE("torsion_order basics") {
    CHECK(torsion_order({Rational(1, 10), Rational(0)}) == 10);
    CHECK(torsion_order({Rational(1, 4), Rational(1, 2)}) == 4);
    CHECK(torsion_order({Rational(0), Rational(0)}) == 1);
    // canonical mod-1 reduction
    CHECK(torsion_order({Rational(-1, 3), Rational(7, 5)}) == 15);
}

TEST_CASE("torsion gate") {
    CHECK(lemma_torsion_gate(6, {Rational(1, 10), Rational(0)}));
    CHECK_FALSE(lemma_torsion_gate(6, {Rational(1, 5), Rational(0)}));
    CHECK(lemma_torsion_gate(3, {Rational(1, 4), Rational(1, 4)}));
}

TEST_CASE("torsion gate exhaustive over denominators <= 24") {
    for (int g : {3, 4, 6, 9}) {
        long target = 2L * g - 2;
        for (int bu = 1; bu <= 24; ++bu)
            for (int au = 0; au < bu; ++au)
                for (int bv = 1; bv <= 24; ++bv)
                    for (int av = 0; av < bv; ++av) {
                        TorsionCoordinate t{Rational(au, bu), Rational(av, bv)};
                        long nu = Rational(au, bu).denominator().get_si();
                        long nv = Rational(av, bv).denominator().get_si();
                        long order = nu / std::gcd(nu, nv) * nv;
                        CHECK(torsion_order(t) == order);
                        CHECK(lemma_torsion_gate(g, t) == (order == target));
                    }
    }
}

TEST_CASE("expected dimension, naive bound, minimal ramification") {
    CHECK(expected_dimension(6, 2) == 10);
    CHECK(expected_dimension(9, 3) == 14);
    CHECK(naive_bound(9, 3) == 8);
    auto mr = minimal_ramification(9, 3);
    CHECK(mr.alpha == std::vector<int>{0, 0, 0, 0, 0, 3, 3, 3, 8});
    CHECK(mr.weight == 17);

    for (int g = 3; g <= 12; ++g) {
        CHECK(expected_dimension(g, 1) == 2 * g - 1);
        CHECK(expected_dimension(g, 0) == 2 * g - 1);
        for (int r = 0; r <= g - 1; ++r) {
            auto m = minimal_ramification(g, r);
            int w = 0;
            for (int x : m.alpha) w += x;
            CHECK(w == m.weight);
            CHECK(m.weight == r * r + g - 1);
            CHECK(3 * g - 2 - m.weight == naive_bound(g, r));
        }
    }
}
