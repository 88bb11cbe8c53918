#include <catch2/catch_amalgamated.hpp>

#include <famod/witt.hpp>

using namespace famod;

namespace {

GradedPoly xvar(const RingParams& r, long long i, long long e = 1) {
    return GradedPoly::variable(r, x_key(i), e);
}

/// Feasible (norm, m) ranges per residue field size; the m = 3 identities at
/// large q involve dense degree-q^4 expansions that stop being desk scale.
bool witt_range_ok(const RingParams& r, long long norm, long long m) {
    if (r.q <= 3) return norm <= 4 && m <= 3;
    if (r.q <= 5) return m <= 2 ? norm <= 4 : norm <= 3;
    return m <= 2 ? norm <= 3 : norm <= 2;
}

/// The defining identity for a fixed sequence K:
///   sum_t x_t^{q^{||K||}} = sum_{IJ=K} (Pi(K)/Pi(I)) (w_J)^{q^{||I||}}.
bool defining_identity_holds(const RingParams& r, const Seq& K, long long m) {
    GradedPoly lhs(r);
    for (long long t = 1; t <= m; ++t) lhs += xvar(r, t, qpow(r, K.norm()));
    GradedPoly rhs(r);
    KElement piK = pi_A_seq(r, K);
    for (long long cut = 0; cut <= K.length(); ++cut) {
        Seq I = K.prefix(cut), J = K.suffix_from(cut);
        KElement scale = piK / pi_A_seq(r, I);
        GradedPoly wj = generalized_witt(r, J, m);
        rhs += wj.pow(qpow(r, I.norm())).scaled(scale);
    }
    return lhs == rhs;
}

}  // namespace

TEST_CASE("classical witt base cases", "[witt]") {
    RingParams r = make_ring(3, 1, 1, 1);
    for (long long m = 1; m <= 3; ++m) {
        GradedPoly w0 = classical_witt(r, 0, m);
        GradedPoly expect(r);
        for (long long t = 1; t <= m; ++t) expect += xvar(r, t);
        CHECK(w0 == expect);
    }
    // single variable: w_j = 0 for j >= 1
    for (long long j = 1; j <= 3; ++j) CHECK(classical_witt(r, j, 1).is_zero());
}

TEST_CASE("classical w_1 at (3,1,1), two variables", "[witt]") {
    RingParams r = make_ring(3, 1, 1, 1);
    // (x1^3 + x2^3 - (x1+x2)^3)/3 = -x1^2 x2 - x1 x2^2
    GradedPoly expect = -(xvar(r, 1, 2) * xvar(r, 2)) - (xvar(r, 1) * xvar(r, 2, 2));
    CHECK(classical_witt(r, 1, 2) == expect);
}

TEST_CASE("generalized witt base cases", "[witt]") {
    RingParams r = make_ring(3, 1, 1, 1);
    for (long long m = 1; m <= 3; ++m) {
        GradedPoly we = generalized_witt(r, Seq::empty(), m);
        GradedPoly expect(r);
        for (long long t = 1; t <= m; ++t) expect += xvar(r, t);
        CHECK(we == expect);
    }
    for (long long n = 1; n <= 3; ++n)
        for (const Seq& I : compositions(n)) CHECK(generalized_witt(r, I, 1).is_zero());
}

TEST_CASE("w_(h) solves the defining identity directly", "[witt]") {
    RingParams r = make_ring(3, 2, 1, 1);
    for (long long h = 1; h <= 2; ++h) {
        GradedPoly lhs(r);
        for (long long t = 1; t <= 2; ++t) lhs += xvar(r, t, qpow(r, h));
        GradedPoly sum = xvar(r, 1) + xvar(r, 2);
        GradedPoly expect = (lhs - sum.pow(qpow(r, h))).divided_by(pi_A_single(r, h));
        CHECK(generalized_witt(r, Seq{h}, 2) == expect);
    }
}

TEST_CASE("defining identity", "[witt][property]") {
    for (auto [p, e, f] : {std::tuple{3LL, 1LL, 1LL}, {3LL, 2LL, 1LL}, {5LL, 1LL, 1LL}}) {
        RingParams r = make_ring(p, e, f);
        for (long long n = 1; n <= 4; ++n)
            for (long long m = 1; m <= 3; ++m) {
                if (!witt_range_ok(r, n, m)) continue;
                for (const Seq& K : compositions(n)) {
                    INFO("config p=" << p << " e=" << e << " f=" << f << " K=" << K.to_string()
                                     << " m=" << m);
                    CHECK(defining_identity_holds(r, K, m));
                }
            }
    }
}

TEST_CASE("integrality of generalized witt coefficients", "[witt][property]") {
    for (auto [p, e, f] : {std::tuple{3LL, 1LL, 1LL}, {3LL, 2LL, 1LL}, {5LL, 1LL, 1LL}}) {
        RingParams r = make_ring(p, e, f);
        for (long long n = 0; n <= 4; ++n)
            for (long long m = 1; m <= 3; ++m) {
                if (!witt_range_ok(r, n, m)) continue;
                for (const Seq& I : compositions(n)) {
                    INFO("I=" << I.to_string() << " m=" << m);
                    CHECK(generalized_witt(r, I, m).min_coeff_valuation() >= 0);
                }
            }
    }
}

TEST_CASE("mod-pi congruence w_I = w_{|I|}^{q^{||I||-|I|}}", "[witt][property]") {
    for (auto [p, e, f] : {std::tuple{3LL, 1LL, 1LL}, {3LL, 2LL, 1LL}, {5LL, 1LL, 1LL}}) {
        RingParams r = make_ring(p, e, f);
        for (long long n = 1; n <= 4; ++n)
            for (long long m = 1; m <= 3; ++m) {
                if (!witt_range_ok(r, n, m)) continue;
                auto classical = classical_witt_family(r, n, m);
                for (const Seq& I : compositions(n)) {
                    GradedPoly diff =
                        generalized_witt(r, I, m) -
                        classical[static_cast<size_t>(I.length())].pow(qpow(r, n - I.length()));
                    INFO("I=" << I.to_string() << " m=" << m);
                    CHECK(diff.min_coeff_valuation() >= 1);
                }
            }
    }
}

TEST_CASE("pi-divisibility of classical w_i for ramified rings", "[witt]") {
    // pi | w_i for 0 < i < e, and w_e has a unit coefficient
    for (long long e : {2LL, 3LL}) {
        RingParams r = make_ring(3, e, 1, 1);
        auto w = classical_witt_family(r, e, 2);
        for (long long i = 1; i < e; ++i) {
            INFO("e=" << e << " i=" << i);
            CHECK(w[static_cast<size_t>(i)].min_coeff_valuation() >= 1);
        }
        CHECK(w[static_cast<size_t>(e)].min_coeff_valuation() == 0);
    }
}

TEST_CASE("symmetry in two variables", "[witt][property]") {
    RingParams r = make_ring(3, 2, 1, 1);
    std::map<VarKey, GradedPoly> swap;
    swap.emplace(x_key(1), xvar(r, 2));
    swap.emplace(x_key(2), xvar(r, 1));
    auto swapped = [&](const GradedPoly& g) {
        return g.substituted([&](VarKey k) -> const GradedPoly* {
            auto it = swap.find(k);
            return it == swap.end() ? nullptr : &it->second;
        });
    };
    for (long long n = 0; n <= 4; ++n)
        for (const Seq& I : compositions(n)) {
            GradedPoly w = generalized_witt(r, I, 2);
            CHECK(w == swapped(w));
        }
    for (long long j = 0; j <= 3; ++j) {
        GradedPoly w = classical_witt(r, j, 2);
        CHECK(w == swapped(w));
    }
}

TEST_CASE("w_j and w_(j) differ in general", "[witt]") {
    RingParams r = make_ring(3, 1, 1, 1);
    CHECK_FALSE(classical_witt(r, 2, 2) == generalized_witt(r, Seq{2}, 2));
}

TEST_CASE("evaluator agrees with symbolic substitution", "[witt]") {
    RingParams r = make_ring(3, 1, 1, 1);
    GradedPoly a = GradedPoly::variable(r, t_key(1, 0));
    GradedPoly b = GradedPoly::variable(r, t_key(1, 1));
    std::map<VarKey, GradedPoly> img;
    img.emplace(x_key(1), a);
    img.emplace(x_key(2), b);
    auto subst = [&](const GradedPoly& g) {
        return g.substituted([&](VarKey k) -> const GradedPoly* {
            auto it = img.find(k);
            return it == img.end() ? nullptr : &it->second;
        });
    };
    WittEvaluator we(r, {a, b});
    for (long long n = 0; n <= 3; ++n)
        for (const Seq& I : compositions(n))
            CHECK(we.eval(I) == subst(generalized_witt(r, I, 2)));
}

TEST_CASE("evaluator ignores zeros among the arguments", "[witt]") {
    RingParams r = make_ring(3, 1, 1, 1);
    GradedPoly a = GradedPoly::variable(r, t_key(1, 0));
    GradedPoly b = GradedPoly::variable(r, t_key(1, 1));
    WittEvaluator two(r, {a, b});
    WittEvaluator padded(r, {a, GradedPoly::zero(r), b, GradedPoly::zero(r)});
    for (long long n = 0; n <= 3; ++n)
        for (const Seq& I : compositions(n)) CHECK(two.eval(I) == padded.eval(I));
}

TEST_CASE("pruned evaluation matches the exact value mod pi^prec", "[witt]") {
    RingParams r = make_ring(3, 2, 1, 1);
    GradedPoly a = GradedPoly::variable(r, t_key(1, 0));
    GradedPoly b = GradedPoly::variable(r, t_key(1, 1), r.q);
    for (long long prec : {1LL, 2LL, 3LL}) {
        WittEvaluator exact(r, {a, b});
        WittEvaluator pruned(r, {a, b});
        for (long long n = 0; n <= 3; ++n)
            for (const Seq& I : compositions(n)) {
                GradedPoly diff = exact.eval(I) - pruned.eval(I, prec);
                INFO("I=" << I.to_string() << " prec=" << prec);
                CHECK(diff.min_coeff_valuation() >= prec);
            }
    }
}
