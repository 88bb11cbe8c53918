#include <catch2/catch_amalgamated.hpp>

#include <famod/seq.hpp>

#include <random>

using namespace famod;

TEST_CASE("seq_stats on (1,2,3)", "[seq]") {
    Seq I{1, 2, 3};
    auto s = seq_stats(I);
    CHECK(s.length == 3);
    CHECK(s.norm == 6);
    REQUIRE(s.dprime.has_value());
    CHECK(*s.dprime == Seq{3, 3});
    REQUIRE(s.tprime.has_value());
    CHECK(*s.tprime == Seq{2, 3});
}

TEST_CASE("seq_stats edge cases", "[seq]") {
    auto s0 = seq_stats(Seq::empty());
    CHECK(s0.length == 0);
    CHECK(s0.norm == 0);
    CHECK_FALSE(s0.dprime.has_value());
    CHECK_FALSE(s0.tprime.has_value());
    CHECK_THROWS_AS(Seq::empty().dprime(), std::invalid_argument);
    CHECK_THROWS_AS(Seq::empty().tprime(), std::invalid_argument);

    auto s1 = seq_stats(Seq{5});
    CHECK(s1.length == 1);
    CHECK(s1.norm == 5);
    CHECK_FALSE(s1.dprime.has_value());
    CHECK(*s1.tprime == Seq::empty());
    CHECK_THROWS_AS((Seq{5}.dprime()), std::invalid_argument);
}

TEST_CASE("entries must be positive", "[seq]") {
    CHECK_THROWS_AS((Seq{0}), std::invalid_argument);
    CHECK_THROWS_AS((Seq{1, -2}), std::invalid_argument);
}

TEST_CASE("concatenation is a monoid law", "[seq][property]") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> len(0, 4), val(1, 5);
    auto random_seq = [&]() {
        std::vector<long long> xs;
        long long n = len(rng);
        for (long long i = 0; i < n; ++i) xs.push_back(val(rng));
        return Seq(xs);
    };
    for (int it = 0; it < 100; ++it) {
        Seq a = random_seq(), b = random_seq(), c = random_seq();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + Seq::empty() == a);
        CHECK(Seq::empty() + a == a);
        CHECK((a + b).norm() == a.norm() + b.norm());
        CHECK((a + b).length() == a.length() + b.length());
    }
}

TEST_CASE("Pi_A values", "[seq]") {
    RingParams r = make_ring(3, 1, 1, 1);
    CHECK(pi_A_seq(r, Seq::empty()) == KElement::one(r));
    for (long long h = 1; h <= 3; ++h)
        CHECK(pi_A_seq(r, Seq{h}) == KElement::pi(r) - KElement::pi_power(r, qpow(r, h)));
    // (1,1): Pi(2) * Pi(1)
    CHECK(pi_A_seq(r, Seq{1, 1}) == pi_A_single(r, 2) * pi_A_single(r, 1));
}

TEST_CASE("Pi_A valuation equals |I|", "[seq][property]") {
    // q = 9 capped at norm 4: the factor pi^{q^6} alone has a quarter of a
    // million digits there
    for (auto [p, e, f, nmax] :
         {std::tuple{3LL, 1LL, 1LL, 6LL}, {3LL, 2LL, 1LL, 6LL}, {3LL, 1LL, 2LL, 4LL}}) {
        RingParams r = make_ring(p, e, f);
        for (long long n = 0; n <= nmax; ++n)
            for (const Seq& I : compositions(n))
                CHECK(pi_valuation(pi_A_seq(r, I)) == I.length());
    }
}

TEST_CASE("Pi_A peel-first identity Pi(K) = Pi(k1) Pi(K'')", "[seq][property]") {
    RingParams r = make_ring(3, 2, 1, 1);
    for (long long n = 2; n <= 5; ++n)
        for (const Seq& K : compositions(n))
            if (K.length() >= 2)
                CHECK(pi_A_seq(r, K) ==
                      pi_A_single(r, K.entries()[0]) * pi_A_seq(r, K.dprime()));
}

TEST_CASE("composition enumeration is lexicographic and complete", "[seq]") {
    auto c3 = compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == Seq{1, 1, 1});
    CHECK(c3[1] == Seq{1, 2});
    CHECK(c3[2] == Seq{2, 1});
    CHECK(c3[3] == Seq{3});
    CHECK(compositions(0).size() == 1);
    CHECK(compositions(6).size() == 32);
    for (size_t i = 1; i < c3.size(); ++i) CHECK(c3[i - 1] < c3[i]);
}

TEST_CASE("text form", "[seq]") {
    CHECK(Seq::empty().to_string() == "()");
    CHECK(Seq{1, 2}.to_string() == "(1,2)");
}
