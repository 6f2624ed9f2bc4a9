#include <doctest.h>

#include "oracles.hpp"

using namespace twistor;

namespace {

ExactPoint pt(long a, long b, long c, long d) { return {a, b, c, d}; }
ExactPlucker pv(std::array<long, 6> v) {
    ExactPlucker t;
    for (int k = 0; k < 6; ++k) t[k] = v[k];
    return t;
}
ExactLine random_line(Rng& rng) {
    for (;;) {
        ExactPoint a = random_point(rng, 10), b = random_point(rng, 10);
        if (!same_point(a, b)) return {a, b};
    }
}

ExactForm segre() {
    ExactForm q(2);
    q.coeff({1, 0, 0, 1}) = 1;
    q.coeff({0, 1, 1, 0}) = -1;
    return q;
}

}  // namespace

TEST_CASE("plucker_of examples") {
    CHECK(ExactLine(pt(1, 0, 0, 0), pt(0, 1, 0, 0)).plucker().p == pv({1, 0, 0, 0, 0, 0}).p);
    CHECK(ExactLine(pt(1, 0, 0, 1), pt(0, 1, -1, 0)).plucker().p == pv({1, -1, 0, 0, -1, 1}).p);
    Rng rng(1);
    for (int k = 0; k < 30; ++k) {
        Quaternion q = random_quaternion(rng, 10);
        const auto &q1 = q.a(), &q2 = q.b();
        ExactPlucker expected;
        expected.p = {GaussianRational(1), -q2.conj(), q1.conj(), -q1, -q2, GaussianRational(q1.norm() + q2.norm())};
        auto t = plucker_of(twistor_fiber(q));
        CHECK(t.p == expected.p);
        CHECK(klein_form(t).is_zero());
    }
    CHECK_THROWS_AS(ExactLine(pt(1, 2, 3, 4), pt(2, 4, 6, 8)), InvalidInput);
}

TEST_CASE("incidence pairing") {
    auto l01 = ExactLine(pt(1, 0, 0, 0), pt(0, 1, 0, 0));
    auto l23 = ExactLine(pt(0, 0, 1, 0), pt(0, 0, 0, 1));
    auto l12 = ExactLine(pt(0, 1, 0, 0), pt(0, 0, 1, 0));
    CHECK(incidence(l01.plucker(), l23.plucker()) == GaussianRational(1));
    CHECK(incidence(l01.plucker(), l12.plucker()).is_zero());
    Rng rng(2);
    for (int k = 0; k < 100; ++k) {
        ExactLine x = random_line(rng);
        ExactLine y = k % 2 ? random_line(rng) : ExactLine(x.a(), random_point(rng, 10));
        bool meet = incidence(x.plucker(), y.plucker()).is_zero();
        CHECK(meet == oracle::lines_meet(x, y));
        CHECK(incidence(x.plucker(), y.plucker()) == incidence(y.plucker(), x.plucker()));
        CHECK(klein_form(x.plucker()).is_zero());
        CHECK(incidence(x.plucker(), x.plucker()).is_zero());
    }
    auto fibers = sample_twistor_lines(10, 3);
    for (std::size_t a = 0; a < fibers.size(); ++a)
        for (std::size_t b = a + 1; b < fibers.size(); ++b)
            CHECK_FALSE(incidence(fibers[a].plucker(), fibers[b].plucker()).is_zero());
}

TEST_CASE("involution on the Grassmannian") {
    auto fixed = pv({1, -1, 0, 0, -1, 1});
    CHECK(j_plucker(fixed).p == fixed.p);
    CHECK(j_plucker(pv({1, 0, 0, 0, 0, 0})).p == pv({1, 0, 0, 0, 0, 0}).p);
    CHECK(j_plucker(pv({0, 1, 0, 0, 0, 0})).p == pv({0, 0, 0, 0, 1, 0}).p);
    CHECK_FALSE(is_twistor(ExactLine(pt(1, 0, 0, 0), pt(0, 0, 1, 0))));
    CHECK(is_twistor(ExactLine(pt(1, 0, 0, 0), pt(0, 1, 0, 0))));

    Rng rng(4);
    for (int k = 0; k < 100; ++k) {
        ExactLine l = random_line(rng);
        auto t = l.plucker();
        CHECK(same_plucker(j_plucker(j_plucker(t)), t));
        CHECK(klein_form(j_plucker(t)).is_zero());
        ExactLine image(j_point(l.a()), j_point(l.b()));
        CHECK(same_plucker(j_plucker(t), image.plucker()));
        CHECK_FALSE(is_twistor(l));
        ExactLine f = fiber_through(random_point(rng, 10));
        CHECK(is_twistor(f));
        CHECK(is_twistor(to_approx(f.plucker())));
        CHECK(twistor_margin(to_approx(l.plucker())) > 1e-6);
    }
}

TEST_CASE("transversals of four lines") {
    // a ruling of the Segre quadric
    std::vector<ExactLine> ruling{ExactLine(pt(1, 0, 0, 0), pt(0, 1, 0, 0)), ExactLine(pt(0, 0, 1, 0), pt(0, 0, 0, 1)),
                                  ExactLine(pt(1, 0, 1, 0), pt(0, 1, 0, 1)), ExactLine(pt(1, 0, 2, 0), pt(0, 1, 0, 2))};
    auto r = transversals(ruling);
    CHECK(r.kind == TransversalResult::Kind::Infinite);
    // every line of the opposite ruling span(e0 + l e1, e2 + l e3) meets all four
    for (long l = -3; l <= 3; ++l) {
        ExactLine opp(pt(1, l, 0, 0), pt(0, 0, 1, l));
        for (const auto& x : ruling) CHECK(oracle::lines_meet(opp, x));
    }

    int twos = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto lines = sample_twistor_lines(4, seed);
        auto t = transversals(lines);
        REQUIRE(t.kind == TransversalResult::Kind::Finite);
        REQUIRE(t.discriminant);
        twos += t.count == 2;
        for (const auto& x : t.exact_lines)
            for (const auto& l : lines) CHECK(oracle::lines_meet(x, l));
        for (const auto& x : t.approx_lines)
            for (const auto& l : lines) CHECK(std::abs(incidence(x.plucker(), to_approx(l.plucker()))) < 1e-8);
    }
    CHECK(twos == 10);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto t = transversals(sample_twistor_lines(5, seed));
        CHECK(t.kind == TransversalResult::Kind::Finite);
        CHECK(t.count == 0);
    }
    auto meeting = ruling;
    meeting.push_back(ExactLine(pt(1, 0, 0, 0), pt(0, 0, 1, 0)));
    CHECK_THROWS_AS(transversals(meeting), InvalidInput);
}

TEST_CASE("tangent fourth line gives a single transversal") {
    // three lines span(e0 + l e2, e1 + l e3), l = 0, inf, 1, of the Segre quadric
    std::vector<ExactLine> lines{ExactLine(pt(1, 0, 0, 0), pt(0, 1, 0, 0)), ExactLine(pt(0, 0, 1, 0), pt(0, 0, 0, 1)),
                                 ExactLine(pt(1, 0, 1, 0), pt(0, 1, 0, 1))};
    // x = (1,1,2,2) lies on the l = 2 line; the tangent plane there is
    // 2z0 - 2z1 - z2 + z3 = 0, which contains y = (1,0,0,-2) with Q(y) != 0
    ExactLine tangent(pt(1, 1, 2, 2), pt(1, 0, 0, -2));
    auto r = restrict_to_line(segre(), tangent);
    CHECK_FALSE(r.is_zero());
    CHECK(binary_gcd({r.derivative(0), r.derivative(1)}).degree() == 1);
    lines.push_back(tangent);
    auto t = transversals(lines);
    CHECK(t.kind == TransversalResult::Kind::Finite);
    CHECK(t.count == 1);
    REQUIRE(t.exact_lines.size() == 1);
    for (const auto& l : lines) CHECK(oracle::lines_meet(t.exact_lines[0], l));
    // it is the opposite-ruling line span(e0 + e1, e2 + e3)
    CHECK(same_plucker(t.exact_lines[0].plucker(), ExactLine(pt(1, 1, 0, 0), pt(0, 0, 1, 1)).plucker()));
}

TEST_CASE("quadric through three lines") {
    ExactForm q = quadric_through_three(ExactLine(pt(1, 0, 0, 0), pt(0, 1, 0, 0)), ExactLine(pt(0, 0, 1, 0), pt(0, 0, 0, 1)),
                                        ExactLine(pt(1, 0, 1, 0), pt(0, 1, 0, 1)));
    ExactForm s = segre();
    bool prop = true;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            if (!(q.coeffs()[i] * s.coeffs()[j] - q.coeffs()[j] * s.coeffs()[i]).is_zero()) prop = false;
    CHECK(prop);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto l = sample_twistor_lines(3, seed);
        ExactForm f = quadric_through_three(l[0], l[1], l[2]);
        for (const auto& x : l) CHECK(oracle::vanishes_on(f, x));
        CHECK(is_smooth_quadric(f));
        auto m = quadric_matrix(f);
        CHECK_FALSE(oracle::det(m).is_zero());
        GaussianRational a;
        CHECK(j_proportionality(f, a));
        // the rows of the 9 x 10 system have rank 9
        CHECK(oracle::rank(line_conditions(l, 2)) == 9);
        // transversals of the three lines lie on the quadric
        Rng rng(seed);
        ExactPoint x = random_point_on(l[0], rng, 10);
        ExactLine tr = oracle::transversal_through(x, l[1], l[2]);
        CHECK(oracle::vanishes_on(f, tr));
        CHECK(restrict_to_line(f, tr).is_zero());
    }
}

TEST_CASE("ruling lines") {
    ExactForm q = segre();
    auto r = ruling_lines_at(q, pt(1, 0, 0, 0));
    REQUIRE(r.is_exact());
    ExactLine a(pt(1, 0, 0, 0), pt(0, 1, 0, 0)), b(pt(1, 0, 0, 0), pt(0, 0, 1, 0));
    bool ok = (same_plucker(r.exact[0].plucker(), a.plucker()) && same_plucker(r.exact[1].plucker(), b.plucker())) ||
              (same_plucker(r.exact[0].plucker(), b.plucker()) && same_plucker(r.exact[1].plucker(), a.plucker()));
    CHECK(ok);
    CHECK_THROWS_AS(ruling_lines_at(q, pt(1, 1, 1, 0)), InvalidInput);
    ExactForm cone(2);
    cone.coeff({1, 0, 0, 1}) = 1;
    cone.coeff({0, 2, 0, 0}) = -1;
    CHECK_THROWS_AS(ruling_lines_at(cone, pt(1, 0, 0, 0)), InvalidInput);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto l = sample_twistor_lines(3, seed);
        ExactForm f = quadric_through_three(l[0], l[1], l[2]);
        Rng rng(seed + 50);
        ExactPoint x = random_point_on(l[1], rng, 10);
        auto rl = ruling_lines_at(f, x);
        REQUIRE(rl.is_exact());
        int fibers = 0, twistors = 0;
        for (const auto& y : rl.exact) {
            CHECK(oracle::vanishes_on(f, y));
            fibers += same_plucker(y.plucker(), l[1].plucker());
            twistors += is_twistor(y);
        }
        CHECK(fibers == 1);
        CHECK(twistors == 1);
    }
}
