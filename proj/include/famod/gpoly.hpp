#pragma once

#include <functional>
#include <map>
#include <sstream>

#include "kelement.hpp"
#include "monomial.hpp"
#include "ring.hpp"
#include "seq.hpp"

namespace famod {

/// Degree bound meaning "no truncation".
inline constexpr long long DEG_INF = std::numeric_limits<long long>::max();

/// Sparse polynomial over K in the graded generator families, with tensor
/// slot awareness.  Terms of degree above the truncation bound are dropped;
/// the bound the value was computed under is carried along.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, KElement, MonomialLexLess>;

    GradedPoly() = default;
    explicit GradedPoly(const RingParams& ring, long long trunc = DEG_INF)
        : ring_(ring), trunc_(trunc) {}

    static GradedPoly zero(const RingParams& ring) { return GradedPoly(ring); }

    static GradedPoly constant(const RingParams& ring, const KElement& c) {
        GradedPoly p(ring);
        if (!c.is_zero()) p.terms_.emplace(Monomial::one(), c);
        return p;
    }
    static GradedPoly constant(const RingParams& ring, long long c) {
        return constant(ring, KElement(ring, c));
    }
    static GradedPoly one(const RingParams& ring) { return constant(ring, 1); }

    static GradedPoly variable(const RingParams& ring, VarKey k, long long exp = 1) {
        GradedPoly p(ring);
        if (exp == 0) return one(ring);
        p.terms_.emplace(Monomial::variable(k, exp), KElement::one(ring));
        return p;
    }

    static GradedPoly term(const RingParams& ring, const Monomial& m, const KElement& c) {
        GradedPoly p(ring);
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    const RingParams& ring() const { return ring_; }
    long long trunc_bound() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    size_t term_count() const { return terms_.size(); }

    KElement coefficient_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? KElement::zero(ring_) : it->second;
    }

    /// Value equality (the truncation bookkeeping does not participate).
    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    void add_term(const Monomial& m, const KElement& c) {
        if (c.is_zero()) return;
        if (m.degree(ring_) > trunc_) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GradedPoly operator-() const {
        GradedPoly out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
        require_same_ring(a.ring_, b.ring_, "GradedPoly+");
        GradedPoly out(a);
        out.trunc_ = std::min(a.trunc_, b.trunc_);
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) {
        require_same_ring(a.ring_, b.ring_, "GradedPoly-");
        GradedPoly out(a);
        out.trunc_ = std::min(a.trunc_, b.trunc_);
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    GradedPoly& operator+=(const GradedPoly& b) { return *this = *this + b; }
    GradedPoly& operator-=(const GradedPoly& b) { return *this = *this - b; }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        return mul(a, b, std::min(a.trunc_, b.trunc_));
    }
    GradedPoly& operator*=(const GradedPoly& b) { return *this = *this * b; }

    static GradedPoly mul(const GradedPoly& a, const GradedPoly& b, long long D) {
        require_same_ring(a.ring_, b.ring_, "GradedPoly::mul");
        GradedPoly out(a.ring_, std::min({a.trunc_, b.trunc_, D}));
        if (a.is_zero() || b.is_zero()) return out;
        for (const auto& [ma, ca] : a.terms_) {
            long long da = ma.degree(a.ring_);
            for (const auto& [mb, cb] : b.terms_) {
                if (out.trunc_ != DEG_INF && da + mb.degree(a.ring_) > out.trunc_) continue;
                out.add_term(ma * mb, ca * cb);
            }
        }
        return out;
    }

    GradedPoly scaled(const KElement& c) const {
        GradedPoly out(ring_, trunc_);
        if (c.is_zero()) return out;
        for (const auto& [m, x] : terms_) {
            KElement y = x * c;
            if (!y.is_zero()) out.terms_.emplace(m, y);
        }
        return out;
    }

    GradedPoly divided_by(const KElement& c) const { return scaled(c.inverse()); }

    GradedPoly pow(long long n, long long D = DEG_INF) const {
        if (n < 0) throw std::invalid_argument("GradedPoly::pow: negative exponent");
        if (n == 0) return one(ring_);
        if (terms_.size() == 1) {  // single term: direct
            const auto& [m, c] = *terms_.begin();
            KElement cc = KElement::one(ring_);
            KElement base = c;
            long long k = n;
            while (k) {
                if (k & 1) cc *= base;
                base *= base;
                k >>= 1;
            }
            GradedPoly out(ring_, std::min(trunc_, D));
            out.add_term(m.pow(n), cc);
            return out;
        }
        GradedPoly acc = one(ring_);
        GradedPoly base = *this;
        long long k = n;
        while (k) {
            if (k & 1) acc = mul(acc, base, D);
            k >>= 1;
            if (k) base = mul(base, base, D);
        }
        return acc;
    }

    /// Drop all terms of degree > D.
    GradedPoly truncated(long long D) const {
        GradedPoly out(ring_, std::min(trunc_, D));
        for (const auto& [m, c] : terms_)
            if (m.degree(ring_) <= D) out.terms_.emplace(m, c);
        return out;
    }

    /// Drop all terms whose coefficient has pi-adic valuation >= M.  Used by
    /// computations that only need the result modulo pi^M.
    GradedPoly pruned(long long M) const {
        GradedPoly out(ring_, trunc_);
        for (const auto& [m, c] : terms_)
            if (c.valuation() < M) out.terms_.emplace(m, c);
        return out;
    }

    long long min_term_degree() const {
        long long d = DEG_INF;
        for (const auto& [m, c] : terms_) d = std::min(d, m.degree(ring_));
        return d;
    }

    long long max_term_degree() const {
        long long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree(ring_));
        return d;
    }

    /// Minimum pi-adic valuation over all coefficients (VAL_INF when zero).
    long long min_coeff_valuation() const {
        long long v = VAL_INF;
        for (const auto& [m, c] : terms_) v = std::min(v, c.valuation());
        return v;
    }

    bool is_homogeneous(long long* deg_out = nullptr) const {
        if (terms_.empty()) {
            if (deg_out) *deg_out = 0;
            return true;
        }
        long long d = terms_.begin()->first.degree(ring_);
        for (const auto& [m, c] : terms_)
            if (m.degree(ring_) != d) return false;
        if (deg_out) *deg_out = d;
        return true;
    }

    /// Decomposition into homogeneous components, keyed by degree.
    std::map<long long, GradedPoly> grade() const {
        std::map<long long, GradedPoly> out;
        for (const auto& [m, c] : terms_) {
            long long d = m.degree(ring_);
            auto it = out.find(d);
            if (it == out.end()) it = out.emplace(d, GradedPoly(ring_, trunc_)).first;
            it->second.terms_.emplace(m, c);
        }
        return out;
    }

    /// Ring-map substitution: image(k) returns the replacement polynomial for
    /// the variable k, or nullptr to keep it unchanged.
    GradedPoly substituted(const std::function<const GradedPoly*(VarKey)>& image,
                           long long D = DEG_INF) const {
        GradedPoly out(ring_, std::min(trunc_, D));
        for (const auto& [m, c] : terms_) {
            GradedPoly acc = constant(ring_, c);
            Monomial kept;
            for (const auto& [k, e] : m.factors()) {
                const GradedPoly* img = image(k);
                if (img == nullptr) {
                    kept = kept * Monomial::variable(k, e);
                } else {
                    require_same_ring(ring_, img->ring(), "GradedPoly::substituted");
                    if (img->is_zero()) {
                        acc = zero(ring_);
                        break;
                    }
                    acc = mul(acc, img->pow(e, D), D);
                    if (acc.is_zero()) break;
                }
            }
            if (acc.is_zero()) continue;
            if (!kept.is_one()) acc = mul(acc, term(ring_, kept, KElement::one(ring_)), D);
            out += acc;
        }
        out.trunc_ = std::min(trunc_, D);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool unit = c.is_one();
            if (!unit) os << "(" << c.to_string() << ")";
            if (m.is_one()) {
                if (unit) os << "1";
            } else {
                if (!unit) os << "*";
                os << m.to_string();
            }
        }
        return os.str();
    }

private:
    RingParams ring_;
    long long trunc_ = DEG_INF;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul };

inline GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, PolyOp op, long long D) {
    switch (op) {
        case PolyOp::add: return (a + b).truncated(D);
        case PolyOp::sub: return (a - b).truncated(D);
        case PolyOp::mul: return GradedPoly::mul(a, b, D);
    }
    throw std::invalid_argument("poly_arith: bad op");
}

enum class GenFamily { v, V, t };

/// The indexed monomials v_I, V_I, t_I:
/// v_{(i1,...,in)} = v_{i1} * (v_{(i2,...,in)})^{q^{i1}}, with v_empty = 1.
inline GradedPoly indexed_monomial(const RingParams& ring, GenFamily fam, const Seq& I) {
    Monomial m;
    long long shift = 0;  // running exponent q^{i1 + ... + i_{j-1}}
    for (long long j = 0; j < I.length(); ++j) {
        long long idx = I.entries()[static_cast<size_t>(j)];
        VarKey k = fam == GenFamily::v ? v_key(idx) : fam == GenFamily::V ? V_key(idx) : t_key(idx);
        m = m * Monomial::variable(k, qpow(ring, shift));
        shift += idx;
    }
    return GradedPoly::term(ring, m, KElement::one(ring));
}

}  // namespace famod
