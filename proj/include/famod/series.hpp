#pragma once

#include <map>

#include "gpoly.hpp"

namespace famod {

/// A q-typical series sum_i c_i X^{q^i}, stored as the coefficient list
/// c_0, c_1, ..., c_n.  Logarithms and strict isomorphism series have c_0 = 1.
struct QTypicalSeries {
    RingParams ring;
    std::vector<GradedPoly> coeffs;

    long long level() const { return static_cast<long long>(coeffs.size()) - 1; }
};

/// sum_i c_i * arg^{q^i}, truncated at degree D.
inline GradedPoly series_substitute(const QTypicalSeries& s, const GradedPoly& arg, long long D) {
    require_same_ring(s.ring, arg.ring(), "series_substitute");
    GradedPoly out = GradedPoly::zero(s.ring);
    for (size_t i = 0; i < s.coeffs.size(); ++i) {
        if (s.coeffs[i].is_zero()) continue;
        GradedPoly p = arg.pow(qpow(s.ring, static_cast<long long>(i)), D);
        if (p.is_zero()) continue;
        out += GradedPoly::mul(s.coeffs[i], p, D);
    }
    return out.truncated(D);
}

/// Truncated power series in one variable X with GradedPoly coefficients.
/// Exponents above xbound are dropped.  X carries formal degree -2, so the
/// coefficient of X^k in the series we manipulate is homogeneous of degree
/// 2(k-1); no polynomial-degree truncation is applied here.
class XSeries {
public:
    XSeries() = default;
    XSeries(const RingParams& ring, long long xbound) : ring_(ring), xbound_(xbound) {}

    static XSeries zero(const RingParams& ring, long long xbound) {
        return XSeries(ring, xbound);
    }

    static XSeries identity(const RingParams& ring, long long xbound) {
        XSeries s(ring, xbound);
        s.set(1, GradedPoly::one(ring));
        return s;
    }

    static XSeries from_q_typical(const QTypicalSeries& q, long long xbound) {
        XSeries s(q.ring, xbound);
        for (size_t i = 0; i < q.coeffs.size(); ++i) {
            long long ex = qpow(q.ring, static_cast<long long>(i));
            if (ex > xbound) break;
            s.set(ex, q.coeffs[i]);
        }
        return s;
    }

    const RingParams& ring() const { return ring_; }
    long long xbound() const { return xbound_; }
    const std::map<long long, GradedPoly>& coeffs() const { return c_; }

    GradedPoly coeff(long long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? GradedPoly::zero(ring_) : it->second;
    }

    void set(long long k, const GradedPoly& p) {
        if (k > xbound_) return;
        if (p.is_zero())
            c_.erase(k);
        else
            c_[k] = p;
    }

    void add(long long k, const GradedPoly& p) {
        if (k > xbound_ || p.is_zero()) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    friend XSeries operator+(const XSeries& a, const XSeries& b) {
        require_same_ring(a.ring_, b.ring_, "XSeries+");
        XSeries out(a.ring_, std::min(a.xbound_, b.xbound_));
        for (const auto& [k, p] : a.c_) out.add(k, p);
        for (const auto& [k, p] : b.c_) out.add(k, p);
        return out;
    }

    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        require_same_ring(a.ring_, b.ring_, "XSeries*");
        XSeries out(a.ring_, std::min(a.xbound_, b.xbound_));
        for (const auto& [i, p] : a.c_) {
            for (const auto& [j, q] : b.c_) {
                if (i + j > out.xbound_) break;
                out.add(i + j, p * q);
            }
        }
        return out;
    }

    XSeries scaled(const GradedPoly& g) const {
        XSeries out(ring_, xbound_);
        for (const auto& [k, p] : c_) out.add(k, p * g);
        return out;
    }

    /// this(g(X)): requires g to have no constant term.
    XSeries composed_with(const XSeries& g) const {
        require_same_ring(ring_, g.ring_, "XSeries::composed_with");
        if (g.c_.count(0)) throw std::invalid_argument("XSeries compose: constant term");
        long long xb = std::min(xbound_, g.xbound_);
        XSeries out(ring_, xb);
        XSeries gp(ring_, xb);  // g^prev
        gp.set(0, GradedPoly::one(ring_));
        long long prev = 0;
        for (const auto& [k, p] : c_) {
            if (k == 0) {
                out.add(0, p);
                continue;
            }
            if (k * g.min_exponent() > xb) break;
            for (; prev < k; ++prev) gp = gp * g;
            for (const auto& [j, q] : gp.c_) out.add(j, p * q);
        }
        return out;
    }

    long long min_exponent() const { return c_.empty() ? xbound_ + 1 : c_.begin()->first; }

    /// Compositional inverse r with r(this(X)) = X up to the exponent bound.
    /// Requires coefficient 1 at X^1 and nothing below.  The inverse of a
    /// q-typical series is generally not q-typical: it is supported on all
    /// exponents congruent to 1 mod (q-1).
    XSeries reversed() const {
        if (min_exponent() != 1 || !(coeff(1) == GradedPoly::one(ring_)))
            throw std::invalid_argument("XSeries::reversed: series must start with X");
        // powers of this
        std::vector<XSeries> pw;  // pw[k] = this^{k+1}
        pw.push_back(*this);
        for (long long k = 2; k <= xbound_; ++k) pw.push_back(pw.back() * (*this));
        XSeries r(ring_, xbound_);
        r.set(1, GradedPoly::one(ring_));
        for (long long m = 2; m <= xbound_; ++m) {
            // coefficient of X^m in r(this): sum_k r_k [X^m] this^k; with
            // [X^m] this^m = 1 this solves r_m directly.
            GradedPoly acc = GradedPoly::zero(ring_);
            for (const auto& [k, rk] : r.c_) {
                if (k >= m) break;
                GradedPoly cm = pw[static_cast<size_t>(k - 1)].coeff(m);
                if (!cm.is_zero()) acc += rk * cm;
            }
            r.set(m, -acc);
        }
        return r;
    }

    /// Evaluate at a polynomial argument: sum_k c_k * a^k, truncated at D.
    GradedPoly evaluated_at(const GradedPoly& a, long long D) const {
        require_same_ring(ring_, a.ring(), "XSeries::evaluated_at");
        GradedPoly out = GradedPoly::zero(ring_);
        GradedPoly ap = GradedPoly::one(ring_);
        long long prev = 0;
        for (const auto& [k, p] : c_) {
            for (; prev < k; ++prev) ap = GradedPoly::mul(ap, a, D);
            if (ap.is_zero() && k > 0) break;
            out += GradedPoly::mul(p, ap, D);
        }
        return out.truncated(D);
    }

private:
    RingParams ring_;
    long long xbound_ = 0;
    std::map<long long, GradedPoly> c_;
};

/// Compositional inverse of a q-typical series with c_0 = 1, computed out to
/// X^{q^n}.  Returned as a general series; its restriction to q-power
/// exponents solves the q-typical coefficient equations.
inline XSeries series_reverse(const QTypicalSeries& s, long long n) {
    if (s.coeffs.empty() || !(s.coeffs[0] == GradedPoly::one(s.ring)))
        throw std::invalid_argument("series_reverse: leading coefficient must be 1");
    long long xb = qpow(s.ring, n);
    return XSeries::from_q_typical(s, xb).reversed();
}

/// q-power coefficients of a general series, as a QTypicalSeries view.
inline QTypicalSeries q_typical_part(const XSeries& s, long long n) {
    QTypicalSeries out{s.ring(), {}};
    for (long long i = 0; i <= n; ++i) {
        long long ex = qpow(s.ring(), i);
        if (ex > s.xbound()) break;
        out.coeffs.push_back(s.coeff(ex));
    }
    return out;
}

}  // namespace famod
