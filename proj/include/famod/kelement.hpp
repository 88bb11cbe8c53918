#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "ring.hpp"

namespace famod {

using Rat = mpq_class;

inline mpz_class to_mpz(long long x) { return mpz_class(static_cast<long>(x)); }

inline Rat make_rat(long long num, long long den = 1) {
    Rat r(to_mpz(num), to_mpz(den));
    r.canonicalize();
    return r;
}

/// Valuation value for "plus infinity" (the valuation of 0).
inline constexpr long long VAL_INF = std::numeric_limits<long long>::max();

/// p-adic valuation of a nonzero rational; VAL_INF for 0.
inline long long p_valuation(const Rat& a, long long p) {
    if (a == 0) return VAL_INF;
    mpz_class tmp;
    mpz_class pz = to_mpz(p);
    long long vn =
        static_cast<long long>(mpz_remove(tmp.get_mpz_t(), a.get_num_mpz_t(), pz.get_mpz_t()));
    long long vd =
        static_cast<long long>(mpz_remove(tmp.get_mpz_t(), a.get_den_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

/// Element of K = Q[pi]/(pi^e - u*p), stored as exact rational coordinates
/// in the basis 1, pi, ..., pi^{e-1}.  All arithmetic is exact; the defining
/// relation pi^e = u*p is folded in on multiplication.
class KElement {
public:
    KElement() = default;

    explicit KElement(const RingParams& ring) : ring_(ring), c_(ring.e, Rat(0)) {}

    KElement(const RingParams& ring, const Rat& value) : KElement(ring) { c_[0] = value; }

    KElement(const RingParams& ring, long long value) : KElement(ring, make_rat(value)) {}

    static KElement zero(const RingParams& ring) { return KElement(ring); }
    static KElement one(const RingParams& ring) { return KElement(ring, 1); }

    /// pi^k, any integer k (negative powers via pi^{-1} = pi^{e-1}/(u p)).
    static KElement pi_power(const RingParams& ring, long long k) {
        KElement out = one(ring);
        if (k >= 0) {
            // pi^{e m + r} = (u p)^m pi^r
            long long m = k / ring.e, r = k % ring.e;
            Rat scale(1);
            Rat up = make_rat(ring.u * ring.p);
            for (long long i = 0; i < m; ++i) scale *= up;
            out.c_[0] = 0;
            out.c_[static_cast<size_t>(r)] = scale;
        } else {
            KElement inv = pi_power(ring, 1).inverse();
            for (long long i = 0; i < -k; ++i) out = out * inv;
        }
        return out;
    }

    static KElement pi(const RingParams& ring) { return pi_power(ring, 1); }

    const RingParams& ring() const { return ring_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const KElement& a, const KElement& b) {
        return a.ring_ == b.ring_ && a.c_ == b.c_;
    }

    KElement operator-() const {
        KElement out(*this);
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend KElement operator+(const KElement& a, const KElement& b) {
        require_same_ring(a.ring_, b.ring_, "KElement+");
        KElement out(a);
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
        return out;
    }

    friend KElement operator-(const KElement& a, const KElement& b) {
        require_same_ring(a.ring_, b.ring_, "KElement-");
        KElement out(a);
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
        return out;
    }

    friend KElement operator*(const KElement& a, const KElement& b) {
        require_same_ring(a.ring_, b.ring_, "KElement*");
        const long long e = a.ring_.e;
        std::vector<Rat> conv(static_cast<size_t>(2 * e - 1), Rat(0));
        for (long long i = 0; i < e; ++i) {
            if (a.c_[static_cast<size_t>(i)] == 0) continue;
            for (long long j = 0; j < e; ++j) {
                if (b.c_[static_cast<size_t>(j)] == 0) continue;
                conv[static_cast<size_t>(i + j)] +=
                    a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        KElement out(a.ring_);
        Rat up = make_rat(a.ring_.u * a.ring_.p);
        for (long long k = 2 * e - 2; k >= 0; --k) {
            if (conv[static_cast<size_t>(k)] == 0) continue;
            if (k >= e)
                conv[static_cast<size_t>(k - e)] += conv[static_cast<size_t>(k)] * up;
            else
                out.c_[static_cast<size_t>(k)] = conv[static_cast<size_t>(k)];
        }
        return out;
    }

    KElement& operator+=(const KElement& b) { return *this = *this + b; }
    KElement& operator-=(const KElement& b) { return *this = *this - b; }
    KElement& operator*=(const KElement& b) { return *this = *this * b; }

    KElement scaled(const Rat& r) const {
        KElement out(*this);
        for (auto& x : out.c_) x *= r;
        return out;
    }

    /// Multiplicative inverse via extended gcd in Q[x] against x^e - u*p.
    KElement inverse() const {
        if (is_zero()) throw std::domain_error("KElement: division by zero");
        const long long e = ring_.e;
        if (e == 1) {
            KElement out(ring_);
            out.c_[0] = Rat(1) / c_[0];
            return out;
        }
        // Extended Euclid on (m, a) with m = x^e - u*p.
        using Poly = std::vector<Rat>;  // coefficient list, low degree first
        auto deg = [](const Poly& p) -> long long {
            for (long long i = static_cast<long long>(p.size()) - 1; i >= 0; --i)
                if (p[static_cast<size_t>(i)] != 0) return i;
            return -1;
        };
        Poly m(static_cast<size_t>(e + 1), Rat(0));
        m[0] = -make_rat(ring_.u * ring_.p);
        m[static_cast<size_t>(e)] = 1;
        Poly a(c_.begin(), c_.end());
        Poly s0{Rat(0)}, s1{Rat(1)};  // coeffs of the input element in the Bezout identity
        Poly r0 = m, r1 = a;
        while (deg(r1) > 0) {
            // divide r0 by r1
            Poly quo(static_cast<size_t>(deg(r0) - deg(r1) + 1), Rat(0));
            Poly rem = r0;
            while (deg(rem) >= deg(r1)) {
                long long k = deg(rem) - deg(r1);
                Rat cfac = rem[static_cast<size_t>(deg(rem))] / r1[static_cast<size_t>(deg(r1))];
                quo[static_cast<size_t>(k)] += cfac;
                for (long long i = 0; i <= deg(r1); ++i)
                    rem[static_cast<size_t>(i + k)] -= cfac * r1[static_cast<size_t>(i)];
            }
            Poly s2(std::max(s0.size(), quo.size() + s1.size()), Rat(0));
            for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (size_t i = 0; i < quo.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quo[i] * s1[j];
            s0 = s1;
            s1 = s2;
            r0 = r1;
            r1 = rem;
        }
        if (deg(r1) != 0) throw std::domain_error("KElement: element not invertible");
        Rat lead = r1[0];
        KElement out(ring_);
        for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(e); ++i)
            out.c_[i] = s1[i] / lead;
        // degrees >= e in s1 cannot occur: deg(s1) < deg(m) = e
        return out;
    }

    friend KElement operator/(const KElement& a, const KElement& b) { return a * b.inverse(); }

    /// pi-adic valuation.  Coordinates occupy distinct residues mod e, so the
    /// minimum over e*nu_p(c_i) + i is exact (no cancellation possible).
    long long valuation() const {
        long long best = VAL_INF;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            long long v = ring_.e * p_valuation(c_[i], ring_.p) + static_cast<long long>(i);
            if (v < best) best = v;
        }
        return best;
    }

    /// Image in the prime field F_p (valid only on the valuation->=0 subring).
    long long reduce_mod_pi() const {
        if (valuation() < 0)
            throw std::domain_error("reduce_mod_pi: negative valuation");
        if (is_zero()) return 0;
        // pi |-> 0, so only coordinate 0 survives; its denominator is prime to p.
        const Rat& c0 = c_[0];
        mpz_class p = to_mpz(ring_.p);
        mpz_class num = c0.get_num() % p;
        mpz_class den = c0.get_den() % p;
        mpz_class deninv;
        if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("reduce_mod_pi: denominator not invertible");
        mpz_class r = (num * deninv) % p;
        if (r < 0) r += p;
        return r.get_si();
    }

    /// Serialized form: list of e rational strings "num/den" in lowest terms.
    std::vector<std::string> serialize() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) {
            Rat y(x);
            y.canonicalize();
            out.push_back(y.get_str());
        }
        return out;
    }

    static KElement deserialize(const RingParams& ring, const std::vector<std::string>& coords) {
        if (static_cast<long long>(coords.size()) != ring.e)
            throw std::invalid_argument("KElement::deserialize: wrong coordinate count");
        KElement out(ring);
        for (size_t i = 0; i < coords.size(); ++i) {
            out.c_[i] = Rat(coords[i]);
            out.c_[i].canonicalize();
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << c_[i].get_str();
            if (i == 1) os << "*pi";
            if (i > 1) os << "*pi^" << i;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    RingParams ring_;
    std::vector<Rat> c_;
};

enum class KOp { add, sub, mul, div };

/// The four field operations behind one entry point.
inline KElement k_arith(const KElement& a, const KElement& b, KOp op) {
    switch (op) {
        case KOp::add: return a + b;
        case KOp::sub: return a - b;
        case KOp::mul: return a * b;
        case KOp::div: return a / b;
    }
    throw std::invalid_argument("k_arith: bad op");
}

inline long long pi_valuation(const KElement& a) { return a.valuation(); }

inline long long reduce_mod_pi(const KElement& a) { return a.reduce_mod_pi(); }

}  // namespace famod
