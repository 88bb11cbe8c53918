#include <catch2/catch_amalgamated.hpp>

#include <famod/gpoly.hpp>

#include <random>

using namespace famod;

namespace {
GradedPoly v(const RingParams& r, long long i, long long e = 1) {
    return GradedPoly::variable(r, v_key(i), e);
}
GradedPoly t(const RingParams& r, long long i, int slot = 0, long long e = 1) {
    return GradedPoly::variable(r, t_key(i, slot), e);
}
}  // namespace

TEST_CASE("lex order examples", "[gpoly]") {
    Monomial v1sq = Monomial::variable(v_key(1), 2);
    Monomial v2 = Monomial::variable(v_key(2));
    CHECK(lex_compare(v1sq, v2) < 0);
    CHECK(lex_compare(v2, v1sq) > 0);
    CHECK(lex_compare(v2, v2) == 0);
    CHECK(lex_compare(Monomial::one(), Monomial::variable(v_key(1))) < 0);
    // family order: v < V < t0 < t1 < t2 < x
    CHECK(lex_compare(Monomial::variable(v_key(9)), Monomial::variable(V_key(1))) < 0);
    CHECK(lex_compare(Monomial::variable(V_key(9)), Monomial::variable(t_key(1, 0))) < 0);
    CHECK(lex_compare(Monomial::variable(t_key(9, 0)), Monomial::variable(t_key(1, 1))) < 0);
    CHECK(lex_compare(Monomial::variable(t_key(9, 1)), Monomial::variable(t_key(1, 2))) < 0);
    CHECK(lex_compare(Monomial::variable(t_key(9, 2)), Monomial::variable(x_key(1))) < 0);
}

TEST_CASE("arithmetic basics and truncation semantics", "[gpoly]") {
    RingParams r = make_ring(3, 1, 1, 1);
    GradedPoly v1 = v(r, 1);
    CHECK(v1 + GradedPoly::zero(r) == v1);

    long long D = 4 * (r.q - 1);
    GradedPoly prod = poly_arith(v1, t(r, 1), PolyOp::mul, D);
    CHECK(prod.term_count() == 1);
    CHECK(prod == v1 * t(r, 1));

    // (1 + v1)(1 - v1) with the v1^2 term truncated away
    GradedPoly one = GradedPoly::one(r);
    long long Dsmall = 4 * (r.q - 1) - 1;
    GradedPoly res = poly_arith(one + v1, one - v1, PolyOp::mul, Dsmall);
    CHECK(res == one);
}

TEST_CASE("mismatched rings raise", "[gpoly]") {
    RingParams a = make_ring(3, 1, 1, 1), b = make_ring(5, 1, 1, 1);
    CHECK_THROWS_AS(v(a, 1) + v(b, 1), std::invalid_argument);
}

TEST_CASE("grading", "[gpoly]") {
    RingParams r = make_ring(3, 1, 1, 1);
    auto g1 = v(r, 1).grade();
    REQUIRE(g1.size() == 1);
    CHECK(g1.begin()->first == 2 * (r.q - 1));

    auto g2 = t(r, 2).grade();
    REQUIRE(g2.size() == 1);
    CHECK(g2.begin()->first == 2 * (r.q * r.q - 1));

    auto g3 = (GradedPoly::one(r) + v(r, 1)).grade();
    REQUIRE(g3.size() == 2);
    CHECK(g3.count(0) == 1);
    CHECK(g3.count(2 * (r.q - 1)) == 1);
    CHECK(g3[0] == GradedPoly::one(r));
    CHECK(g3[2 * (r.q - 1)] == v(r, 1));
}

TEST_CASE("homogeneity is preserved by multiplication", "[gpoly][property]") {
    std::mt19937_64 rng(123);
    RingParams r = make_ring(3, 2, 1, 1);
    std::uniform_int_distribution<long long> idx(1, 3), exp(1, 2), coef(-5, 5);
    auto random_poly = [&]() {
        GradedPoly p(r);
        for (int k = 0; k < 4; ++k) {
            Monomial m = Monomial::variable(v_key(idx(rng)), exp(rng)) *
                         Monomial::variable(t_key(idx(rng)), exp(rng));
            p.add_term(m, KElement(r, coef(rng)));
        }
        return p;
    };
    for (int it = 0; it < 25; ++it) {
        GradedPoly a = random_poly(), b = random_poly();
        GradedPoly ab = a * b;
        auto ga = a.grade(), gb = b.grade(), gab = ab.grade();
        for (const auto& [d, comp] : gab) {
            GradedPoly acc(r);
            for (const auto& [da, ca] : ga) {
                auto itb = gb.find(d - da);
                if (itb != gb.end()) acc += ca * itb->second;
            }
            CHECK(acc == comp);
        }
    }
}

TEST_CASE("truncation coherence", "[gpoly][property]") {
    std::mt19937_64 rng(321);
    RingParams r = make_ring(3, 1, 1, 1);
    std::uniform_int_distribution<long long> idx(1, 2), exp(1, 3), coef(-4, 4);
    auto random_poly = [&]() {
        GradedPoly p(r);
        for (int k = 0; k < 5; ++k)
            p.add_term(Monomial::variable(v_key(idx(rng)), exp(rng)), KElement(r, coef(rng)));
        return p;
    };
    for (int it = 0; it < 30; ++it) {
        GradedPoly a = random_poly(), b = random_poly();
        long long D = 2 * (r.q - 1) * 5, Dp = 2 * (r.q - 1) * 3;
        CHECK(GradedPoly::mul(a, b, D).truncated(Dp) == GradedPoly::mul(a, b, Dp));
        CHECK((a + b).truncated(Dp) == a.truncated(Dp) + b.truncated(Dp));
    }
}

TEST_CASE("indexed monomials", "[gpoly]") {
    RingParams r = make_ring(3, 1, 1, 1);
    CHECK(indexed_monomial(r, GenFamily::v, Seq{2}) == v(r, 2));
    CHECK(indexed_monomial(r, GenFamily::v, Seq::empty()) == GradedPoly::one(r));
    // t_{(1,1)} = t_1 * t_1^q
    CHECK(indexed_monomial(r, GenFamily::t, Seq{1, 1}) ==
          GradedPoly::term(r, Monomial::variable(t_key(1), 1 + r.q), KElement::one(r)));
    // degree 2(q^{||I||} - 1)
    for (long long n = 0; n <= 4; ++n)
        for (const Seq& I : compositions(n)) {
            GradedPoly m = indexed_monomial(r, GenFamily::v, I);
            long long deg = 0;
            CHECK(m.is_homogeneous(&deg));
            CHECK(deg == generator_degree(r, n));
        }
}

TEST_CASE("substitution", "[gpoly]") {
    RingParams r = make_ring(3, 1, 1, 1);
    GradedPoly p = v(r, 1) * t(r, 1) + t(r, 2);
    GradedPoly zero = GradedPoly::zero(r);
    GradedPoly img = p.substituted([&](VarKey k) -> const GradedPoly* {
        return key_family(k) == Family::t0 && key_index(k) == 2 ? &zero : nullptr;
    });
    CHECK(img == v(r, 1) * t(r, 1));

    GradedPoly repl = v(r, 2) + t(r, 1);
    GradedPoly img2 = (v(r, 1) * v(r, 1)).substituted([&](VarKey k) -> const GradedPoly* {
        return key_family(k) == Family::v && key_index(k) == 1 ? &repl : nullptr;
    });
    CHECK(img2 == repl * repl);
}

TEST_CASE("pruned drops high-valuation coefficients", "[gpoly]") {
    RingParams r = make_ring(3, 2, 1, 1);
    GradedPoly p = v(r, 1).scaled(KElement::pi_power(r, 3)) + v(r, 2);
    CHECK(p.pruned(3) == v(r, 2));
    CHECK(p.pruned(4) == p);
}

TEST_CASE("text rendering", "[gpoly]") {
    RingParams r = make_ring(3, 1, 1, 1);
    GradedPoly p = t(r, 1, 1) * t(r, 1, 2) * v(r, 1, 2);
    CHECK(p.to_string() == "v1^2*t1'*t1''");
    CHECK(GradedPoly::zero(r).to_string() == "0");
}
