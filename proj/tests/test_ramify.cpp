#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padicft/arith.hpp"
#include "padicft/ramify.hpp"

using namespace padicft;
using namespace padicft::ramify;

TEST_CASE("value-group ordering: gamma_K sits under the divisible part") {
    auto one = value_exact(0, 0);
    auto gk = value_exact(0, 1);       // gamma_K itself
    auto small = value_exact(-1, 0);   // a divisible element < 1
    auto big = value_exact(0, -5);     // gamma_K^{-5} > 1
    CHECK(compare_value(gk, one) == -1);
    CHECK(compare_value(small, gk) == -1); // every divisible < 1 is below gamma_K
    CHECK(compare_value(one, big) == -1);
    CHECK(compare_value(gk, gk) == 0);

    // r -> 0: a higher power of r is smaller
    auto r1 = value_boundary(Regime::RZero, 0, false, 1, false, 0);
    auto r0 = value_boundary(Regime::RZero, 0, false, 0, false, 0);
    CHECK(compare_value(r1, r0) == -1);

    // r -> 1: exp(-c) r^{-d} gamma drops below r^{sl} gamma^{-sl}
    auto lpsi = value_boundary(Regime::ROne, 0, true, 0, true, 1);
    auto ltilde = value_boundary(Regime::ROne, 0, false, 2, false, -2);
    CHECK(compare_value(lpsi, ltilde) == -1);

    // regimes cannot be mixed, and not everything symbolic is comparable
    CHECK_THROWS_WITH_AS(compare_value(one, r0), doctest::Contains("RegimeMismatch"),
                         ContractError);
    auto ambiguous = value_boundary(Regime::ROne, 1, true, 0, false, 0);
    CHECK_THROWS_WITH_AS(compare_value(ambiguous, value_boundary(Regime::ROne, 0, false, 0, false, 0)),
                         doctest::Contains("SymbolicIncomparable"), ContractError);
}

TEST_CASE("swan conductors of decompositions") {
    CHECK(swan(make_decomposition({{value_exact(0, 0), 4}})) == Rational(0));
    CHECK(swan(make_decomposition({{value_exact(-1, 2), 3}})) == Rational(6));
    CHECK(swan(make_decomposition({{value_exact(-1, Rational(3, 2)), 2},
                                   {value_exact(-2, 1), 1}})) == Rational(4));

    // additive under disjoint union
    std::mt19937_64 rng(43);
    auto random_dec = [&rng]() {
        std::vector<SlopeEntry> es;
        int n = 1 + (int)(rng() % 3);
        for (int i = 0; i < n; i++) {
            Rational flat((std::int64_t)(rng() % 9) - 4, 1 + (std::int64_t)(rng() % 3));
            Rational sharp((std::int64_t)(rng() % 7) - 3, 1 + (std::int64_t)(rng() % 2));
            es.push_back({value_exact(flat, sharp), 1 + (std::int64_t)(rng() % 4)});
        }
        // drop duplicate slopes
        std::vector<SlopeEntry> uniq;
        for (const auto& e : es) {
            bool dup = false;
            for (const auto& u : uniq) dup = dup || u.slope == e.slope;
            if (!dup) uniq.push_back(e);
        }
        return make_decomposition(uniq);
    };
    for (int t = 0; t < 200; t++) {
        auto A = random_dec();
        auto B = random_dec();
        CHECK(swan(decomposition_union(A, B)) == swan(A) + swan(B));
    }
}

TEST_CASE("tensor slopes: unramified factors scale, smaller slope wins") {
    auto b1 = value_exact(Rational(-1, 5), 1);
    auto b2 = value_exact(Rational(-1, 20), -2);

    // trivial factor: lengths multiply, slopes unchanged
    auto trivial2 = make_decomposition({{value_exact(0, 0), 2}});
    auto B = make_decomposition({{b1, 1}, {b2, 3}});
    auto scaled = tensor_slopes(trivial2, B);
    CHECK(scaled == make_decomposition({{b1, 2}, {b2, 6}}));
    CHECK(swan(scaled) == Rational(2) * swan(B));

    // -1/5 < -1/20 in the flat part: the more ramified slope dominates
    auto dom = tensor_slopes(make_decomposition({{b1, 1}}),
                             make_decomposition({{b2, 3}}));
    CHECK(dom == make_decomposition({{b1, 3}}));

    // equal nontrivial slopes are out of contract
    auto nt = make_decomposition({{value_exact(-1, 2), 1}});
    CHECK_THROWS_WITH_AS(tensor_slopes(nt, nt), doctest::Contains("EqualSlopes"),
                         ContractError);
}

TEST_CASE("herbrand function: branches, stabilization, convexity") {
    CHECK(herbrand(2, -1) == Rational(-1));
    CHECK(herbrand(7, Rational(-3, 8), 2) == Rational(-3, 8));
    CHECK(herbrand(2, Rational(3, 2)) == Rational(2));
    for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
        for (std::int64_t m = 0; m <= 5; m++) {
            CHECK(herbrand(q, m) == Rational(arith::ipow(q, m) - 1));
            if (m >= 1) CHECK(herbrand(q, m, m) == Rational(arith::ipow(q, m) - 1));
        }
    }

    // finite levels agree with the full tower up to x = m - 1
    // (rational grid with denominators <= 8)
    for (std::int64_t q : {2, 3, 5}) {
        for (std::int64_t m = 1; m <= 5; m++) {
            for (std::int64_t den = 1; den <= 8; den++) {
                for (Rational x(-2 * den, den); x <= Rational(m - 1); x += Rational(1, den)) {
                    CHECK(herbrand(q, x, m) == herbrand(q, x));
                }
            }
        }
    }

    // piecewise-affine continuity at the integer breakpoints: extending the
    // left segment affinely to the breakpoint hits the right value
    for (std::int64_t q : {2, 3, 4}) {
        for (std::int64_t x0 = 0; x0 <= 4; x0++) {
            Rational a(x0 - 1), mid(2 * x0 - 1, 2), b(x0);
            Rational slope = (herbrand(q, mid) - herbrand(q, a)) / (mid - a);
            CHECK(herbrand(q, b) == herbrand(q, a) + slope * (b - a));
        }
    }

    // strictly increasing and convex on x >= 0
    for (std::int64_t q : {2, 3, 9}) {
        Rational prev = herbrand(q, 0), prev_diff;
        bool first_diff = true;
        for (int j = 1; j <= 40; j++) {
            Rational x(j, 8);
            Rational cur = herbrand(q, x);
            CHECK(cur > prev);
            Rational diff = cur - prev;
            if (!first_diff) CHECK(diff >= prev_diff);
            prev_diff = diff;
            first_diff = false;
            prev = cur;
        }
    }
}

TEST_CASE("transfer: slope, Swan conductor and rank of the transform") {
    auto t1 = transfer(1, 0, 3);
    CHECK(t1.sl_V == Rational(0));
    CHECK(t1.sw_V == Rational(0));
    CHECK(t1.ft_rank == Rational(1));

    auto t2 = transfer(2, 1, 3);
    CHECK(t2.sl_V == Rational(2));
    CHECK(t2.sw_V == Rational(4));
    CHECK(t2.ft_rank == Rational(6));

    auto t3 = transfer(2, Rational(3, 2), 2);
    CHECK(t3.sl_V == Rational(2));
    CHECK(t3.sw_V == Rational(4));
    CHECK(t3.ft_rank == Rational(6));

    CHECK_THROWS_WITH_AS(transfer(1, Rational(1, 2), 2),
                         doctest::Contains("HypothesisViolated"), ContractError);
}

TEST_CASE("carayol dimensions and the closed-form identity") {
    CHECK(carayol_dim(3, 2) == 6);
    CHECK(carayol_dim(2, 3) == 6);
    CHECK(carayol_dim(5, 4) == 50);
    CHECK_THROWS_AS(carayol_dim(3, 0), ContractError);
    CHECK_THROWS_AS(carayol_dim(6, 2), ContractError); // 6 is not a prime power

    // the two-dimensional transfer at half-integral slopes reproduces the
    // closed form for every parity
    for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
        for (std::int64_t sw = 1; sw <= 12; sw++) {
            CHECK(transfer(2, Rational(sw, 2), q).ft_rank ==
                  Rational(carayol_dim(q, sw)));
        }
    }
}

TEST_CASE("boundary Euler characteristic") {
    CHECK(gos_chi(0, 0) == Rational(0));
    CHECK(gos_chi(0, 1) == Rational(-1));
    for (std::int64_t sw : {1, 2, 7}) CHECK(gos_chi(sw, -sw) == Rational(0));
}

TEST_CASE("boundary slopes of the two sheaves") {
    auto psi0 = boundary_slopes(SheafKind::Lpsi, BoundarySide::Inner, Regime::RZero);
    CHECK(psi0.is_trivial());
    CHECK(boundary_slopes(SheafKind::Lpsi, BoundarySide::Outer, Regime::RZero)
              .is_trivial());

    auto lt = boundary_slopes(SheafKind::Ltilde, BoundarySide::Outer, Regime::ROne, 2);
    CHECK(lt.sharp == Rational(-2));
    CHECK(lt.logr_coeff == Rational(2));
    CHECK_FALSE(lt.minus_c);
    auto lti = boundary_slopes(SheafKind::Ltilde, BoundarySide::Inner, Regime::RZero, 2);
    CHECK(lti.sharp == Rational(2));

    auto psi1 = boundary_slopes(SheafKind::Lpsi, BoundarySide::Outer, Regime::ROne);
    CHECK(psi1.sharp == Rational(1));
    CHECK(psi1.minus_c);
    CHECK(psi1.minus_d_logr);

    CHECK_THROWS_WITH_AS(
        boundary_slopes(SheafKind::Lpsi, BoundarySide::Inner, Regime::ROne),
        doctest::Contains("UnsupportedCombination"), ContractError);
}

TEST_CASE("the stalk-rank pipeline agrees with the closed form on the grid") {
    auto p1 = ft_stalk_rank_pipeline(2, Rational(3, 2), 2);
    CHECK(p1.alpha == Rational(4));
    CHECK(p1.beta == Rational(2));
    CHECK(p1.rank == Rational(6));

    auto p2 = ft_stalk_rank_pipeline(3, 1, 2);
    CHECK(p2.alpha == Rational(3));
    CHECK(p2.beta == Rational(3));
    CHECK(p2.rank == Rational(6));

    auto p3 = ft_stalk_rank_pipeline(2, Rational(1, 2), 2);
    CHECK(p3.alpha == Rational(1));
    CHECK(p3.beta == Rational(2));
    CHECK(p3.rank == Rational(3));
    CHECK(carayol_dim(2, 1) == 3);

    for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
        for (std::int64_t n = 2; n <= 4; n++) {
            for (std::int64_t j = 1; j <= 4 * n; j++) {
                Rational sl(j, n);
                auto pipe = ft_stalk_rank_pipeline(n, sl, q);
                auto closed = transfer(n, sl, q);
                CHECK(pipe.rank == closed.ft_rank);
                CHECK(pipe.alpha == closed.sw_V);
                CHECK(pipe.beta == Rational(n));
            }
        }
    }
}

TEST_CASE("discriminant of a constant conductor profile is a line") {
    auto P = make_profile(Rational(0), std::nullopt, {}, {Rational(5)});
    auto d = pl_discriminant(P);
    CHECK(pl_eval(d, 0) == Rational(0));
    CHECK(pl_eval(d, 3) == Rational(15));
    CHECK(pl_eval(d, Rational(1, 2)) == Rational(5, 2));
    auto [l, r] = pl_derivatives(d, 2);
    CHECK(l == Rational(5));
    CHECK(r == Rational(5));
    CHECK(pl_convex(d));
}

TEST_CASE("discriminant of the character profile has one break") {
    // profile -1 below the break c' = 3, 0 above: delta(s) = max(0, c' - s)
    auto P = make_profile(Rational(0), std::nullopt, {Rational(3)},
                          {Rational(-1), Rational(0)});
    auto d = pl_discriminant(P);
    CHECK(pl_eval(d, 0) == Rational(3));
    CHECK(pl_eval(d, 2) == Rational(1));
    CHECK(pl_eval(d, 3) == Rational(0));
    CHECK(pl_eval(d, 10) == Rational(0));
    auto [l, r] = pl_derivatives(d, 3);
    CHECK(l == Rational(-1));
    CHECK(r == Rational(0));
    // -left = sw_> exceeds sw_< = right at the breakpoint
    CHECK(-l > r);
    CHECK(pl_convex(d));

    // a decreasing profile cannot integrate to a convex function
    CHECK_THROWS_WITH_AS(
        pl_discriminant(make_profile(Rational(0), std::nullopt, {Rational(1)},
                                     {Rational(1), Rational(0)})),
        doctest::Contains("NotConvexifiable"), ContractError);
}

TEST_CASE("discriminant anchoring at finite endpoints") {
    // non-vanishing tail, finite right endpoint: delta(hi) = 0
    auto P = make_profile(Rational(0), Rational(10), {Rational(4)},
                          {Rational(1), Rational(2)});
    auto d = pl_discriminant(P);
    CHECK(pl_eval(d, 10) == Rational(0));
    CHECK(pl_eval(d, 4) == Rational(-12));
    CHECK(pl_eval(d, 0) == Rational(-16));
    CHECK_THROWS_AS(pl_eval(d, 11), ContractError);

    // unbounded above with non-vanishing tail: pin the left endpoint
    auto Q = make_profile(Rational(1), std::nullopt, {}, {Rational(2)});
    CHECK(pl_eval(pl_discriminant(Q), 1) == Rational(0));
}

TEST_CASE("derivative readout inverts integration; inversion symmetry") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 200; t++) {
        // random non-decreasing step profile on (-8, 8)
        int nb = (int)(rng() % 3);
        std::vector<Rational> breaks, values;
        std::int64_t prev_b = -7;
        for (int i = 0; i < nb; i++) {
            prev_b += 1 + (std::int64_t)(rng() % 4);
            if (prev_b >= 8) { nb = i; break; }
            breaks.push_back(Rational(prev_b));
        }
        Rational v((std::int64_t)(rng() % 9) - 4, 1 + (std::int64_t)(rng() % 2));
        values.push_back(v);
        for (int i = 0; i < nb; i++) {
            v += Rational((std::int64_t)(rng() % 3), 1 + (std::int64_t)(rng() % 2));
            values.push_back(v);
        }
        auto P = make_profile(Rational(-8), Rational(8), breaks, values);
        auto d = pl_discriminant(P);
        CHECK(pl_convex(d));

        // off breakpoints both derivatives reproduce the profile value
        for (std::int64_t num = -15; num <= 15; num += 2) {
            Rational s(num, 2); // half-integers never hit the integer breaks
            size_t seg = 0;
            while (seg < breaks.size() && breaks[seg] <= s) seg++;
            auto [dl, dr] = pl_derivatives(d, s);
            CHECK(dl == values[seg]);
            CHECK(dr == values[seg]);
        }

        // the inversion s -> -s: delta_G(s) - delta_F(-s) is a constant and
        // the one-sided derivatives swap and negate
        auto G = pl_discriminant(profile_reflect(P));
        Rational offset = pl_eval(G, Rational(-8)) - pl_eval(d, Rational(8));
        for (std::int64_t num = -16; num <= 16; num++) {
            Rational s(num, 2);
            CHECK(pl_eval(G, s) - pl_eval(d, -s) == offset);
            auto [gl, gr] = pl_derivatives(G, s);
            auto [fl, fr] = pl_derivatives(d, -s);
            CHECK(gl == -fr);
            CHECK(gr == -fl);
        }
    }
}
