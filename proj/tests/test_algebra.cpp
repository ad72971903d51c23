#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subc/exact_linalg.hpp"
#include "subc/poly.hpp"
#include "subc/series.hpp"

#include <random>

using namespace subc;

namespace {

std::mt19937 rng(20240817u);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
    CHECK(Rational(7, -14) == Rational(-1, 2));
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(), b = random_rational();
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("gaussian rationals") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(2), Rational(3));
    CHECK(z * z.conj() == GaussianRational(Rational(13)));
    CHECK(z / z == GaussianRational(1));
}

TEST_CASE("matrix_rank identity and zero") {
    MatrixQ id = MatrixQ::Constant(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i) id(i, i) = Rational(1);
    CHECK(matrix_rank(id) == 3);
    CHECK(matrix_rank(MatrixQ::Constant(4, 4, Rational(0))) == 0);
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    for (int trial = 0; trial < 20; ++trial) {
        MatrixQ a(4, 6);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) a(i, j) = random_rational();
        int r = matrix_rank(a);
        CHECK(r == matrix_rank(MatrixQ(a.transpose())));
        MatrixQ b = a;
        b.row(0).swap(b.row(3));
        b.row(1) *= Rational(-7, 3);
        CHECK(matrix_rank(b) == r);
    }
}

TEST_CASE("null_space columns are actual kernel vectors") {
    MatrixQ a(2, 4);
    a << Rational(1), Rational(2), Rational(3), Rational(4),
         Rational(2), Rational(4), Rational(6), Rational(8);
    MatrixQ ns = null_space(a);
    CHECK(ns.cols() == 3);
    MatrixQ prod = a * ns;
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
}

TEST_CASE("series multiplication and truncation contract") {
    SeriesQ one_plus_t({Rational(1), Rational(1)});
    SeriesQ one_minus_t({Rational(1), Rational(-1)});
    SeriesQ p = one_plus_t * one_minus_t;
    CHECK(p[0] == Rational(1));
    CHECK(p[1] == Rational(0));
    CHECK(p.truncation_order() == 1);  // min of the operands

    auto t_pow = [](int k, int order) {
        SeriesQ s(order);
        if (k <= order) s[k] = Rational(1);
        return s;
    };
    SeriesQ q = t_pow(3, 10) * t_pow(5, 10);
    CHECK(q.vanishing_order() == 8);

    SeriesQ q2 = t_pow(3, 7) * t_pow(5, 7);
    CHECK_FALSE(q2.vanishing_order().has_value());  // "order >= 8", nothing asserted
}

TEST_CASE("poly evaluate and homogeneity") {
    std::vector<std::string> vars{"x", "y", "z", "t"};
    PolyQ s(4);
    s.add_term({1, 0, 1, 0}, Rational(1));
    s.add_term({0, 2, 0, 0}, Rational(-1));
    s.add_term({0, 0, 0, 2}, Rational(1));
    CHECK(s.is_homogeneous());
    CHECK(s.total_degree() == 2);

    std::vector<Rational> p{Rational(0), Rational(0), Rational(1), Rational(0)};
    CHECK(s.evaluate(p).is_zero());
    std::vector<Rational> e1{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK(PolyQ::variable(4, 0).evaluate(e1) == Rational(1));

    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> v;
        for (int i = 0; i < 4; ++i) v.push_back(random_rational());
        Rational lambda = random_rational();
        if (lambda.is_zero()) continue;
        std::vector<Rational> lv;
        for (const auto& c : v) lv.push_back(lambda * c);
        Rational lhs = s.evaluate(lv);
        Rational rhs = lambda * lambda * s.evaluate(v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("poly substitute composes correctly") {
    PolyQ f(2);  // x^2 + y
    f.add_term({2, 0}, Rational(1));
    f.add_term({0, 1}, Rational(1));
    // x -> u+1, y -> u
    PolyQ u_plus_1 = PolyQ::variable(1, 0) + PolyQ::constant(1, Rational(1));
    PolyQ g = f.substitute({u_plus_1, PolyQ::variable(1, 0)});
    // (u+1)^2 + u = u^2 + 3u + 1
    CHECK(g.coefficient({2}) == Rational(1));
    CHECK(g.coefficient({1}) == Rational(3));
    CHECK(g.coefficient({0}) == Rational(1));
}
