#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subc/linear_series.hpp"
#include "subc/parser.hpp"

using namespace subc;

namespace {

const std::vector<std::string> P2{"x", "y", "z"};
const std::vector<std::string> P3{"x", "y", "z", "t"};

ProjectivePoint pt(std::initializer_list<int> coords) {
    std::vector<Rational> v;
    for (int c : coords) v.emplace_back(c);
    return ProjectivePoint(std::move(v));
}

}  // namespace

TEST_CASE("hyperelliptic h0 closed form matches the monomial count") {
    for (int g = 2; g <= 8; ++g)
        for (int n = 0; n <= 2 * g - 2; ++n)
            CHECK(hyperelliptic_h0(g, n) == hyperelliptic_h0_bruteforce(g, n));
    CHECK_THROWS(hyperelliptic_h0(2, 3));
    CHECK_THROWS(hyperelliptic_h0(1, 0));
}

TEST_CASE("canonical system of a plane quintic and a (2,4) space curve") {
    PolyQ quintic = parse_polynomial("x^5 + x*y^4 - y*z^4", P2);
    CompleteIntersectionCurve c(2, {quintic}, P2);
    CanonicalSystem k = canonical_system(c);
    CHECK(k.twist == 2);
    CHECK(k.dimension == 6);
    for (const PolyQ& b : k.basis) {
        CHECK(b.is_homogeneous());
        CHECK(b.total_degree() == 2);
    }

    PolyQ s = parse_polynomial("x*z - y^2 + t^2", P3);
    PolyQ f4 = parse_polynomial("x^4 + y^4 + z^4 + t^4", P3);
    CompleteIntersectionCurve ci(3, {s, f4}, P3);
    CanonicalSystem k2 = canonical_system(ci);
    CHECK(k2.twist == 2);
    CHECK(k2.dimension == 9);  // 10 quadrics in P^3 minus the one ideal relation
}

TEST_CASE("Klein quartic at (1:0:0): ordinary flex") {
    PolyQ f = parse_polynomial("x^3*y + y^3*z + z^3*x", P2);
    CompleteIntersectionCurve c(2, {f}, P2);
    PointReport rep = analyze_point(c, pt({1, 0, 0}));

    CHECK(rep.gaps.gaps == std::vector<int>{1, 2, 4});
    CHECK(rep.vanishing.a == std::vector<int>{0, 1, 3});
    CHECK(rep.ramification.alpha == std::vector<int>{0, 0, 1});
    CHECK(rep.ramification.weight == 1);
    CHECK_FALSE(rep.subcanonical);
    CHECK(rep.semigroup_ok);
    CHECK(rep.h0_table == std::vector<int>{1, 1, 1, 2, 2, 3});
}

TEST_CASE("plane quintic with a five-fold inflection line") {
    // The line y = 0 meets the curve only at p = (0:0:1), with multiplicity 5.
    PolyQ f = parse_polynomial("x^5 + x*y^4 - y*z^4", P2);
    CompleteIntersectionCurve c(2, {f}, P2);
    CHECK(smoothness_certificate(c).status == SmoothnessCertificate::Status::Smooth);

    PointReport rep = analyze_point(c, pt({0, 0, 1}));
    CHECK(rep.gaps.genus == 6);
    CHECK(rep.gaps.gaps == std::vector<int>{1, 2, 3, 6, 7, 11});
    CHECK(rep.subcanonical);  // 2g - 1 = 11 is a gap
    CHECK(rep.semigroup_ok);
    CHECK(rep.vanishing.a == std::vector<int>{0, 1, 2, 5, 6, 10});
    CHECK(rep.vanishing.d == 10);
    CHECK(rep.ramification.alpha == std::vector<int>{0, 0, 0, 2, 2, 5});
    CHECK(rep.ramification.weight == 9);
    CHECK(rep.h0_table == std::vector<int>{1, 1, 1, 1, 2, 3, 3, 3, 4, 5, 6, 6});
}

TEST_CASE("gap sequence, vanishing sequence and h0 table agree pairwise") {
    // gaps are exactly {a_i + 1}, and h0(np) = n - g + 1 + #{a_i >= n}
    std::vector<CompleteIntersectionCurve> curves;
    curves.emplace_back(2, std::vector<PolyQ>{parse_polynomial("x^3*y + y^3*z + z^3*x", P2)}, P2);
    curves.emplace_back(2, std::vector<PolyQ>{parse_polynomial("x^5 + x*y^4 - y*z^4", P2)}, P2);
    std::vector<ProjectivePoint> points{pt({1, 0, 0}), pt({0, 0, 1})};

    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& c = curves[k];
        const int g = c.genus();
        PointReport rep = analyze_point(c, points[k]);
        REQUIRE(static_cast<int>(rep.vanishing.a.size()) == g);
        for (int i = 0; i < g; ++i) CHECK(rep.gaps.gaps[i] == rep.vanishing.a[i] + 1);
        for (int n = 0; n <= 2 * g - 1; ++n) {
            int special = 0;
            for (int a : rep.vanishing.a)
                if (a >= n) ++special;
            CHECK(rep.h0_table[n] == n - g + 1 + special);
        }
    }
}

TEST_CASE("branch seed does not change the invariants") {
    PolyQ f = parse_polynomial("x^5 + x*y^4 - y*z^4", P2);
    CompleteIntersectionCurve c(2, {f}, P2);
    PointReport a = analyze_point(c, pt({0, 0, 1}), -1, 7u);
    PointReport b = analyze_point(c, pt({0, 0, 1}), -1, 20250101u);
    CHECK(a.gaps.gaps == b.gaps.gaps);
    CHECK(a.vanishing.a == b.vanishing.a);
    CHECK(a.h0_table == b.h0_table);
}

TEST_CASE("semigroup closure check") {
    CHECK(semigroup_check({{1, 2, 3, 6, 7, 11}, 6}));
    CHECK(semigroup_check({{1, 2, 3}, 3}));           // ordinary point, g = 3
    CHECK_FALSE(semigroup_check({{1, 3, 4}, 3}));     // 2 + 2 = 4 would be a gap
    CHECK(semigroup_check({{1, 2, 4}, 3}));
    CHECK_FALSE(semigroup_check({{1, 2, 12}, 3}));    // gap out of range
}
