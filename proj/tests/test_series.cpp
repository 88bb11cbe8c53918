#include <catch2/catch_amalgamated.hpp>

#include <famod/logs.hpp>
#include <famod/series.hpp>

using namespace famod;

TEST_CASE("series_substitute with the identity series", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    QTypicalSeries id{r, {GradedPoly::one(r)}};
    GradedPoly a = GradedPoly::variable(r, v_key(1)) + GradedPoly::variable(r, t_key(2));
    CHECK(series_substitute(id, a, DEG_INF) == a);
}

TEST_CASE("series_substitute one level", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    LogSeries logs = araki_logs(r, 1);
    QTypicalSeries s{r, {logs.coeffs[0], logs.coeffs[1]}};
    GradedPoly y = GradedPoly::variable(r, t_key(1));
    GradedPoly expect = y + logs.coeffs[1] * y.pow(r.q);
    CHECK(series_substitute(s, y, DEG_INF) == expect);
}

TEST_CASE("series_substitute of a sum, capped at the q-th power level", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    LogSeries logs = araki_logs(r, 2);
    QTypicalSeries s = logs.as_q_typical();
    GradedPoly y = GradedPoly::variable(r, t_key(1, 0));
    GradedPoly z = GradedPoly::variable(r, t_key(1, 1));
    long long D = 2 * (r.q - 1) * r.q + 2 * (r.q - 1);  // through the q-th power level
    GradedPoly got = series_substitute(s, y + z, D);
    GradedPoly expect = (y + z + (logs.coeffs[1] * (y + z).pow(r.q))).truncated(D);
    CHECK(got == expect);
}

TEST_CASE("reversal of the identity", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    QTypicalSeries id{r, {GradedPoly::one(r)}};
    XSeries rev = series_reverse(id, 1);
    CHECK(rev.coeff(1) == GradedPoly::one(r));
    for (long long k = 2; k <= rev.xbound(); ++k) CHECK(rev.coeff(k).is_zero());
}

TEST_CASE("reversal at level 1 solves r1 + l1 = 0", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    LogSeries logs = araki_logs(r, 1);
    XSeries rev = series_reverse(logs.as_q_typical(), 1);
    CHECK(rev.coeff(r.q) == -logs.coeffs[1]);
    // the inverse is not q-typical beyond the q-power slots: exponents are
    // congruent to 1 mod (q - 1)
    for (const auto& [k, c] : rev.coeffs()) CHECK(k % (r.q - 1) == 1 % (r.q - 1));
}

TEST_CASE("reverse is an involution on the truncated ring", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    LogSeries logs = araki_logs(r, 2);
    XSeries s = XSeries::from_q_typical(logs.as_q_typical(), qpow(r, 2));
    XSeries rev = s.reversed();
    XSeries back = rev.reversed();
    for (long long k = 1; k <= s.xbound(); ++k) CHECK(back.coeff(k) == s.coeff(k));
}

TEST_CASE("r(s(X)) = X exactly up to the bound", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    LogSeries logs = araki_logs(r, 2);
    XSeries s = XSeries::from_q_typical(logs.as_q_typical(), qpow(r, 2));
    XSeries rev = s.reversed();
    XSeries comp = rev.composed_with(s);
    CHECK(comp.coeff(1) == GradedPoly::one(r));
    for (long long k = 2; k <= comp.xbound(); ++k) {
        INFO("exponent " << k);
        CHECK(comp.coeff(k).is_zero());
    }
    // and in the other order
    XSeries comp2 = s.composed_with(rev);
    CHECK(comp2.coeff(1) == GradedPoly::one(r));
    for (long long k = 2; k <= comp2.xbound(); ++k) CHECK(comp2.coeff(k).is_zero());
}

TEST_CASE("log(exp) applied to a polynomial argument returns it", "[series]") {
    RingParams r = make_ring(3, 1, 1, 1);
    LogSeries logs = araki_logs(r, 2);
    long long D = 2 * (qpow(r, 2) - 1);
    GradedPoly x = GradedPoly::variable(r, t_key(1));
    GradedPoly lx = series_substitute(logs.as_q_typical(), x, D);
    XSeries exp = XSeries::from_q_typical(logs.as_q_typical(), D / (2 * (r.q - 1))).reversed();
    CHECK(exp.evaluated_at(lx, D) == x);
}
