#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subc/branch.hpp"
#include "subc/curve.hpp"
#include "subc/parser.hpp"

using namespace subc;

namespace {

const std::vector<std::string> P3{"x", "y", "z", "t"};
const std::vector<std::string> P2{"x", "y", "z"};

ProjectivePoint pt(std::initializer_list<int> coords) {
    std::vector<Rational> v;
    for (int c : coords) v.emplace_back(c);
    return ProjectivePoint(std::move(v));
}

}  // namespace

TEST_CASE("projective point normalization") {
    ProjectivePoint p({Rational(2), Rational(4), Rational(0)});
    CHECK(p.coords()[0] == Rational(1, 2));
    CHECK(p.coords()[1] == Rational(1));
    CHECK(p.chart() == 1);
    CHECK(pt({0, 0, 1, 0}) == ProjectivePoint({Rational(0), Rational(0), Rational(-3), Rational(0)}));
}

TEST_CASE("genus from degrees") {
    PolyQ s = parse_polynomial("x*z - y^2 + t^2", P3);
    PolyQ t4 = parse_polynomial("x^4 + t^4", P3);
    CompleteIntersectionCurve c24(3, {s, t4}, P3);
    CHECK(c24.genus() == 9);
    CHECK(c24.canonical_twist() == 2);

    PolyQ c1 = parse_polynomial("x^3 + y^3 + z^3 + t^3", P3);
    PolyQ c2 = parse_polynomial("x^2*y + z^2*t", P3);
    CompleteIntersectionCurve c33(3, {c1, c2}, P3);
    CHECK(c33.genus() == 10);

    PolyQ quintic = parse_polynomial("x^5 + y^5 + z^5", P2);
    CompleteIntersectionCurve q(2, {quintic}, P2);
    CHECK(q.genus() == 6);
    CHECK(q.canonical_twist() == 2);
}

TEST_CASE("degenerate degree data rejected") {
    PolyQ conic = parse_polynomial("x*z - y^2", P2);
    CHECK_THROWS(CompleteIntersectionCurve(2, {conic}, P2));  // k = -1
}

TEST_CASE("pointwise smoothness") {
    PolyQ line = parse_polynomial("y", P2);
    CHECK(is_smooth_at(std::vector<PolyQ>{line}, pt({1, 0, 1})));
    CHECK(is_smooth_at(std::vector<PolyQ>{line}, pt({1, 0, 0})));

    PolyQ cone = parse_polynomial("x*z - y^2", P3);
    CHECK_FALSE(is_smooth_at(std::vector<PolyQ>{cone}, pt({0, 0, 0, 1})));
    CHECK(is_smooth_at(std::vector<PolyQ>{cone}, pt({0, 0, 1, 0})));

    CHECK_THROWS(is_smooth_at(std::vector<PolyQ>{cone}, pt({1, 1, 0, 0})));  // not on it
}

TEST_CASE("smoothness certificate: smooth quadric, singular cone") {
    PolyQ s = parse_polynomial("x*z - y^2 + t^2", P3);
    auto cert = smoothness_certificate(3, {s});
    CHECK(cert.status == SmoothnessCertificate::Status::Smooth);

    PolyQ cone = parse_polynomial("x*z - y^2", P3);
    auto bad = smoothness_certificate(3, {cone});
    CHECK(bad.status == SmoothnessCertificate::Status::Singular);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == pt({0, 0, 0, 1}));
}

TEST_CASE("smoothness certificate respects the budget") {
    // smooth cubic whose chart ideals need actual elimination work
    PolyQ e = parse_polynomial("y^2*z - x^3 - x*z^2 - z^3", P2);
    auto full = smoothness_certificate(2, {e});
    CHECK(full.status == SmoothnessCertificate::Status::Smooth);
    CHECK(full.reductions_used > 0);

    auto cert = smoothness_certificate(2, {e}, 0);
    CHECK(cert.status == SmoothnessCertificate::Status::Inconclusive);
}

TEST_CASE("local branch of a plane quintic") {
    PolyQ f = parse_polynomial("y*z^4 - x^5 - x*y^4", P2);  // smooth at (0:0:1)
    CompleteIntersectionCurve c(2, {f}, P2);
    ProjectivePoint p = pt({0, 0, 1});
    REQUIRE(c.contains(p));
    REQUIRE(is_smooth_at(c, p));
    LocalBranch b = local_branch(c, p, 20);

    // y = x^5 + O(higher) on the branch: x has order 1, y order 5
    CHECK(vanishing_order(parse_polynomial("x", P2), b) == 1);
    CHECK(vanishing_order(parse_polynomial("y", P2), b) == 5);
    CHECK(vanishing_order(parse_polynomial("z", P2), b) == 0);
    // transverse line through p
    CHECK(vanishing_order(parse_polynomial("x + y", P2), b) == 1);
}

TEST_CASE("vanishing order is additive and uniformizer independent") {
    PolyQ f = parse_polynomial("y*z^4 - x^5 - x*y^4", P2);
    CompleteIntersectionCurve c(2, {f}, P2);
    ProjectivePoint p = pt({0, 0, 1});
    LocalBranch b1 = local_branch(c, p, 24, 1u);
    LocalBranch b2 = local_branch(c, p, 24, 99u);

    std::vector<PolyQ> probes = {
        parse_polynomial("x", P2), parse_polynomial("y", P2), parse_polynomial("x + y", P2),
        parse_polynomial("x^2 + y*z", P2), parse_polynomial("x*y", P2)};
    for (const PolyQ& g : probes)
        CHECK(vanishing_order(g, b1) == vanishing_order(g, b2));

    auto o = [&](const PolyQ& g) { return *vanishing_order(g, b1); };
    PolyQ x = parse_polynomial("x", P2), y = parse_polynomial("y", P2);
    CHECK(o(x * y) == o(x) + o(y));
    PolyQ g1 = parse_polynomial("x^2 + y*z", P2);
    CHECK(o(g1 * y) == o(g1) + o(y));
}
