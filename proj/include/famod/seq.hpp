#pragma once

#include <sstream>
#include <vector>

#include "kelement.hpp"
#include "ring.hpp"

namespace famod {

/// Finite sequence of positive integers.  Concatenation makes these a monoid
/// with identity the empty sequence.
class Seq {
public:
    Seq() = default;
    Seq(std::initializer_list<long long> xs) : e_(xs) { validate(); }
    explicit Seq(std::vector<long long> xs) : e_(std::move(xs)) { validate(); }

    static Seq empty() { return Seq(); }

    /// (k, k, ..., k), n copies.
    static Seq constant(long long k, long long n) {
        return Seq(std::vector<long long>(static_cast<size_t>(n), k));
    }

    const std::vector<long long>& entries() const { return e_; }
    long long length() const { return static_cast<long long>(e_.size()); }  // |I|
    bool empty_seq() const { return e_.empty(); }

    /// ||I|| = sum of the entries.
    long long norm() const {
        long long s = 0;
        for (long long x : e_) s += x;
        return s;
    }

    friend Seq operator+(const Seq& a, const Seq& b) {  // concatenation
        std::vector<long long> xs(a.e_);
        xs.insert(xs.end(), b.e_.begin(), b.e_.end());
        return Seq(std::move(xs));
    }

    /// I'' = (i1+i2, i3, ..., im); needs |I| >= 2.
    Seq dprime() const {
        if (length() < 2) throw std::invalid_argument("Seq::dprime: needs |I| >= 2");
        std::vector<long long> xs;
        xs.push_back(e_[0] + e_[1]);
        xs.insert(xs.end(), e_.begin() + 2, e_.end());
        return Seq(std::move(xs));
    }

    /// I''' = (i2, i3, ..., im); needs |I| >= 1.
    Seq tprime() const {
        if (length() < 1) throw std::invalid_argument("Seq::tprime: needs |I| >= 1");
        return Seq(std::vector<long long>(e_.begin() + 1, e_.end()));
    }

    Seq drop_last() const {
        if (length() < 1) throw std::invalid_argument("Seq::drop_last: empty");
        return Seq(std::vector<long long>(e_.begin(), e_.end() - 1));
    }

    Seq prefix(long long n) const {
        return Seq(std::vector<long long>(e_.begin(), e_.begin() + n));
    }
    Seq suffix_from(long long n) const {
        return Seq(std::vector<long long>(e_.begin() + n, e_.end()));
    }

    friend bool operator==(const Seq&, const Seq&) = default;
    friend bool operator<(const Seq& a, const Seq& b) { return a.e_ < b.e_; }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) os << ",";
            os << e_[i];
        }
        os << ")";
        return os.str();
    }

private:
    void validate() const {
        for (long long x : e_)
            if (x < 1) throw std::invalid_argument("Seq: entries must be positive");
    }

    std::vector<long long> e_;
};

struct SeqStats {
    long long length = 0;
    long long norm = 0;
    std::optional<Seq> dprime;  // absent when |I| < 2
    std::optional<Seq> tprime;  // absent when |I| < 1
};

inline SeqStats seq_stats(const Seq& I) {
    SeqStats s;
    s.length = I.length();
    s.norm = I.norm();
    if (I.length() >= 2) s.dprime = I.dprime();
    if (I.length() >= 1) s.tprime = I.tprime();
    return s;
}

/// All sequences of positive integers with norm n (compositions of n), in
/// lexicographic order.  Empty list for n < 0; the empty sequence for n = 0.
inline std::vector<Seq> compositions(long long n) {
    std::vector<Seq> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back(Seq::empty());
        return out;
    }
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rest) -> void {
        if (rest == 0) {
            out.push_back(Seq(cur));
            return;
        }
        for (long long k = 1; k <= rest; ++k) {
            cur.push_back(k);
            self(self, rest - k);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// Pi_A(h) = pi - pi^{q^h} for a single integer h >= 1.
inline KElement pi_A_single(const RingParams& ring, long long h) {
    return KElement::pi(ring) - KElement::pi_power(ring, qpow(ring, h));
}

/// Pi_A of a sequence: Pi_A(empty) = 1, and
/// Pi_A(I) = Pi_A(||I||) * Pi_A((i_1, ..., i_{m-1})).
/// Every factor has valuation 1, so nu_pi(Pi_A(I)) = |I|.
inline KElement pi_A_seq(const RingParams& ring, const Seq& I) {
    KElement out = KElement::one(ring);
    Seq cur = I;
    while (!cur.empty_seq()) {
        out *= pi_A_single(ring, cur.norm());
        cur = cur.drop_last();
    }
    return out;
}

}  // namespace famod
