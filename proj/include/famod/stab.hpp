#pragma once

#include "hopf.hpp"

namespace famod {

/// The stabilizer algebra context: F_q[t_1, ..., t_imax]/(t_j^{q^h} - t_j)
/// for A-height h, with prime-field structure constants.
struct StabAlgebra {
    RingParams ring;
    long long h = 1;
    long long imax = 0;
};

/// Element of the stabilizer algebra (up to three tensor slots of t's),
/// prime-field coefficients in [1, p), exponents kept in normal form:
/// n |-> ((n-1) mod (q^h - 1)) + 1.
class StabElement {
public:
    using TermMap = std::map<Monomial, long long, MonomialLexLess>;

    StabElement() = default;
    StabElement(const RingParams& ring, long long h) : ring_(ring), h_(h) {}

    static StabElement zero(const RingParams& ring, long long h) { return StabElement(ring, h); }

    static StabElement one(const RingParams& ring, long long h) {
        StabElement s(ring, h);
        s.add_raw(Monomial::one(), 1);
        return s;
    }

    static StabElement variable(const RingParams& ring, long long h, long long idx, int slot = 0,
                                long long exp = 1) {
        StabElement s(ring, h);
        s.add_raw(Monomial::variable(t_key(idx, slot), exp), 1);
        return s;
    }

    const RingParams& ring() const { return ring_; }
    long long height() const { return h_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long fold_exponent(long long n) const {
        if (n <= 0) throw std::invalid_argument("StabElement: nonpositive exponent");
        long long period = qpow(ring_, h_) - 1;
        if (period <= 0) return 1;
        return (n - 1) % period + 1;
    }

    Monomial fold_monomial(const Monomial& m) const {
        Monomial out;
        for (const auto& [k, e] : m.factors()) {
            if (!is_t_family(key_family(k)))
                throw std::invalid_argument("StabElement: only t variables allowed");
            out = out * Monomial::variable(k, fold_exponent(e));
        }
        return out;
    }

    /// Insert coeff * m, folding exponents and reducing the coefficient mod p.
    void add_raw(const Monomial& m, long long coeff) {
        coeff %= ring_.p;
        if (coeff < 0) coeff += ring_.p;
        if (coeff == 0) return;
        Monomial f = fold_monomial(m);
        auto [it, fresh] = terms_.emplace(f, coeff);
        if (!fresh) {
            it->second = (it->second + coeff) % ring_.p;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const StabElement& a, const StabElement& b) {
        return a.ring_ == b.ring_ && a.h_ == b.h_ && a.terms_ == b.terms_;
    }

    friend StabElement operator+(const StabElement& a, const StabElement& b) {
        check_compat(a, b, "StabElement+");
        StabElement out(a);
        for (const auto& [m, c] : b.terms_) out.add_raw(m, c);
        return out;
    }

    friend StabElement operator-(const StabElement& a, const StabElement& b) {
        check_compat(a, b, "StabElement-");
        StabElement out(a);
        for (const auto& [m, c] : b.terms_) out.add_raw(m, -c);
        return out;
    }

    friend StabElement operator*(const StabElement& a, const StabElement& b) {
        check_compat(a, b, "StabElement*");
        StabElement out(a.ring_, a.h_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_raw(ma * mb, ca * cb);
        return out;
    }

    StabElement operator-() const {
        StabElement out(ring_, h_);
        for (const auto& [m, c] : terms_) out.add_raw(m, -c);
        return out;
    }

    /// Frobenius x -> x^p: p-th powers of the monomials; coefficients are
    /// fixed (Fermat).
    StabElement frobenius() const {
        StabElement out(ring_, h_);
        for (const auto& [m, c] : terms_) out.add_raw(m.pow(ring_.p), c);
        return out;
    }

    /// x^n via base-p digits and Frobenius steps.
    StabElement pow(long long n) const {
        if (n < 0) throw std::invalid_argument("StabElement::pow: negative exponent");
        StabElement acc = one(ring_, h_);
        if (n == 0) return acc;
        StabElement base = *this;
        while (n) {
            long long digit = n % ring_.p;
            for (long long i = 0; i < digit; ++i) acc = acc * base;
            n /= ring_.p;
            if (n) base = base.frobenius();
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1 || m.is_one()) os << c;
            if (!m.is_one()) {
                if (c != 1) os << "*";
                os << m.to_string();
            }
        }
        return os.str();
    }

private:
    static void check_compat(const StabElement& a, const StabElement& b, const char* where) {
        require_same_ring(a.ring_, b.ring_, where);
        if (a.h_ != b.h_) throw std::invalid_argument(std::string(where) + ": height mismatch");
    }

    RingParams ring_;
    long long h_ = 1;
    TermMap terms_;
};

/// Exponent normal form as a standalone operation (idempotent by
/// construction: elements are stored normalized).
inline StabElement stab_normal_form(const StabElement& x) {
    StabElement out(x.ring(), x.height());
    for (const auto& [m, c] : x.terms()) out.add_raw(m, c);
    return out;
}

/// Specialize a pi-integral polynomial at v_h = 1, v_j = 0 (j != h), reduce
/// coefficients mod pi and fold exponents.
inline StabElement stab_from_gpoly(const RingParams& ring, long long h, const GradedPoly& g) {
    StabElement out(ring, h);
    for (const auto& [m, c] : g.terms()) {
        Monomial kept;
        bool killed = false;
        for (const auto& [k, e] : m.factors()) {
            Family fam = key_family(k);
            if (fam == Family::v) {
                if (key_index(k) != h) {
                    killed = true;
                    break;
                }
                continue;  // v_h -> 1
            }
            if (!is_t_family(fam))
                throw std::invalid_argument("stab_from_gpoly: unexpected variable family");
            kept = kept * Monomial::variable(k, e);
        }
        if (killed) continue;
        out.add_raw(kept, c.reduce_mod_pi());
    }
    return out;
}

/// Reduced coproduct correction sets: the specialization v_h = 1, v_j = 0
/// (j != h) of the integral recursion, re-run directly.  Only the all-h
/// v-sequences survive as correction weights.  Elements carry K coefficients
/// pruned to the given pi-adic precision.
inline std::vector<std::vector<GradedPoly>> stab_delta_sets(const RingParams& ring, long long h,
                                                            long long kmax, long long prec) {
    std::vector<std::vector<GradedPoly>> sets;
    sets.push_back({GradedPoly::one(ring)});
    for (long long m = 1; m <= kmax; ++m) {
        std::vector<GradedPoly> cur;
        for (long long i = 0; i <= m; ++i) {
            GradedPoly el = GradedPoly::one(ring);
            if (i > 0) el = el * GradedPoly::variable(ring, t_key(i, 0));
            if (m - i > 0) el = el * GradedPoly::variable(ring, t_key(m - i, 1), qpow(ring, i));
            cur.push_back(el);
        }
        for (long long r = 1; r * h <= m; ++r) {
            WittEvaluator we(ring, sets[static_cast<size_t>(m - r * h)]);
            GradedPoly wj = we.eval(Seq::constant(h, r), prec);
            if (!wj.is_zero()) cur.push_back(wj);  // reduced v_J = 1
        }
        sets.push_back(std::move(cur));
    }
    return sets;
}

/// b_{i,j} = w_{e(j+1)}(Delta_i) in the reduced setting; zero for i <= 0.
inline StabElement b_element(const RingParams& ring, long long h, long long i, long long j) {
    if (j < 0) throw std::invalid_argument("b_element: j >= 0 required");
    if (i <= 0) return StabElement::zero(ring, h);
    // generous pi-adic precision: the division budget along the recursion is
    // e (the w-chain) plus the correction divisions inside the sets
    long long prec = 4 + 2 * (ring.e * (j + 2) + i);
    auto sets = stab_delta_sets(ring, h, i, prec);
    WittEvaluator we(ring, sets[static_cast<size_t>(i)]);
    GradedPoly b = we.eval(Seq::constant(j + 1, ring.e), 1);
    return stab_from_gpoly(ring, h, b);
}

/// Reduced coproduct Delta(t_k) in the stabilizer algebra.  Computed from
/// the reduced correction sets; for k <= (e+1)h the low-degree closed form
///   sum_i t_i (x) t_{k-i}^{q^i} + b_{k-eh,h-1}
/// must agree, and disagreement raises.
inline StabElement stab_coproduct(const RingParams& ring, long long h, long long k) {
    if (k < 0) throw std::invalid_argument("stab_coproduct: k >= 0 required");
    if (k == 0) return StabElement::one(ring, h);
    long long prec = 4 + 2 * (ring.e + k);
    auto sets = stab_delta_sets(ring, h, k, prec);
    GradedPoly total(ring);
    for (const auto& el : sets[static_cast<size_t>(k)]) total += el.pruned(1);
    StabElement out = stab_from_gpoly(ring, h, total);

    if (k <= (ring.e + 1) * h) {
        StabElement low = StabElement::zero(ring, h);
        for (long long i = 0; i <= k; ++i) {
            Monomial m;
            if (i > 0) m = m * Monomial::variable(t_key(i, 0), 1);
            if (k - i > 0) m = m * Monomial::variable(t_key(k - i, 1), qpow(ring, i));
            low.add_raw(m, 1);
        }
        low = low + b_element(ring, h, k - ring.e * h, h - 1);
        if (!(low == out))
            throw std::logic_error("stab_coproduct: low-degree formula disagrees with recursion");
    }
    return out;
}

/// Substitution on stabilizer elements through an explicit image table.
inline StabElement stab_substitute(const StabElement& x,
                                   const std::map<VarKey, StabElement>& images) {
    StabElement out(x.ring(), x.height());
    for (const auto& [m, c] : x.terms()) {
        StabElement acc = StabElement::one(x.ring(), x.height());
        Monomial kept;
        bool zero = false;
        for (const auto& [k, e] : m.factors()) {
            auto it = images.find(k);
            if (it == images.end()) {
                kept = kept * Monomial::variable(k, e);
                continue;
            }
            if (it->second.is_zero()) {
                zero = true;
                break;
            }
            acc = acc * it->second.pow(e);
        }
        if (zero) continue;
        StabElement keptel(x.ring(), x.height());
        keptel.add_raw(kept, c);
        out = out + acc * keptel;
    }
    return out;
}

inline std::string paramstr(const RingParams& ring, long long h, long long k) {
    std::ostringstream os;
    os << "p=" << ring.p << " e=" << ring.e << " f=" << ring.f << " h=" << h;
    if (k > 0) os << " k=" << k;
    return os.str();
}

/// Coassociativity of the reduced coproduct in the three-slot normal form.
inline Report stab_coassoc_check(const RingParams& ring, long long h, long long kmax) {
    Report rep;
    std::vector<StabElement> delta;
    delta.push_back(StabElement::one(ring, h));
    for (long long k = 1; k <= kmax; ++k) delta.push_back(stab_coproduct(ring, h, k));

    std::map<VarKey, StabElement> on_slot0, on_slot1, shift_up;
    for (long long i = 1; i <= kmax; ++i) {
        shift_up.emplace(t_key(i, 0), StabElement::variable(ring, h, i, 1));
        shift_up.emplace(t_key(i, 1), StabElement::variable(ring, h, i, 2));
    }
    for (long long i = 1; i <= kmax; ++i) {
        on_slot0.emplace(t_key(i, 0), delta[static_cast<size_t>(i)]);
        on_slot0.emplace(t_key(i, 1), StabElement::variable(ring, h, i, 2));
        on_slot1.emplace(t_key(i, 1), stab_substitute(delta[static_cast<size_t>(i)], shift_up));
    }
    rep.add("stab Delta(1) = 1 (x) 1", paramstr(ring, h, 0), delta[0] == StabElement::one(ring, h));
    for (long long k = 1; k <= kmax; ++k) {
        StabElement lhs = stab_substitute(delta[static_cast<size_t>(k)], on_slot0);
        StabElement rhs = stab_substitute(delta[static_cast<size_t>(k)], on_slot1);
        rep.add("stab coassociativity on t_k", paramstr(ring, h, k), lhs == rhs);
    }
    return rep;
}

/// The Sigma(h) presentation check.  With the reduction
/// rho = (mod pi, v_j = 0 for j != h):
///   rho(eta_R(v_k)) = 0                    for k < h,
///   rho(eta_R(v_h)) = v_h                  exactly,
///   rho(eta_R(v_{h+i}))|_{t_1=...=t_{i-1}=0} = v_h t_i^{q^h} - t_i v_h^{q^i},
/// which is precisely the relation set t_i eta_R(v_h)^{q^i} = v_h t_i^{q^h};
/// after v_h = 1 the quotient presentation is t_j^{q^h} = t_j.
struct StabPresentation {
    StabAlgebra alg;
    Report report;
    std::vector<StabElement> coproducts;  // Delta(t_1..t_imax)
};

/// Reduction rho: coefficients mod pi, v_j -> 0 for j != h, v_h kept.
inline GradedPoly reduce_keep_vh(const GradedPoly& x, long long h) {
    GradedPoly out(x.ring(), x.trunc_bound());
    for (const auto& [m, c] : x.terms()) {
        bool killed = false;
        for (const auto& [k, e] : m.factors())
            if (key_family(k) == Family::v && key_index(k) != h) {
                killed = true;
                break;
            }
        if (killed) continue;
        out.add_term(m, KElement(x.ring(), c.reduce_mod_pi()));
    }
    return out;
}

inline StabPresentation stab_presentation(const RingParams& ring, long long h, long long kmax) {
    if (h < 1) throw std::invalid_argument("stab_presentation: h >= 1 required");
    StabPresentation out;
    out.alg = StabAlgebra{ring, h, kmax};
    auto gens = eta_R_v(ring, std::max(kmax, h));

    for (long long k = 1; k <= kmax; ++k) {
        GradedPoly red = reduce_keep_vh(gens[static_cast<size_t>(k)], h);
        if (k < h) {
            out.report.add("rho(eta_R(v_k)) = 0 for k < h",
                           paramstr(ring, h, k), red.is_zero(),
                           red.is_zero() ? "" : red.to_string());
        } else if (k == h) {
            bool ok = red == GradedPoly::variable(ring, v_key(h));
            out.report.add("rho(eta_R(v_h)) = v_h", paramstr(ring, h, k), ok,
                           ok ? "" : red.to_string());
        } else {
            long long i = k - h;
            std::map<VarKey, GradedPoly> killsmall;
            for (long long s = 1; s < i; ++s)
                killsmall.emplace(t_key(s, 0), GradedPoly::zero(ring));
            GradedPoly masked = mod_p_normalize(substitute_map(red, killsmall));
            GradedPoly expected =
                GradedPoly::variable(ring, v_key(h)) *
                    GradedPoly::variable(ring, t_key(i), qpow(ring, h)) -
                GradedPoly::variable(ring, t_key(i)) *
                    GradedPoly::variable(ring, v_key(h), qpow(ring, i));
            expected = mod_p_normalize(expected);
            bool ok = masked == expected;
            out.report.add("Sigma(h) relation t_i v_h^{q^i} = v_h t_i^{q^h} emerges",
                           paramstr(ring, h, k) + " i=" + std::to_string(i), ok,
                           ok ? "" : masked.to_string());
        }
    }
    for (long long k = 1; k <= kmax; ++k)
        out.coproducts.push_back(stab_coproduct(ring, h, k));
    return out;
}

/// A[V_h] equivariant-thickening checks: specializing the logs through
/// V_i -> 0 (i != h) must produce
///   alpha_i = 0 when h does not divide i,
///   alpha_{hj} = pi^{-j} (pi alpha_h)^{(q^{hj}-1)/(q^h-1)},
/// and the specialization kills the other-system generators as well.
inline Report thickening_check(const RingParams& ring, long long h, long long nmax) {
    if (h < 1) throw std::invalid_argument("thickening_check: h >= 1 required");
    Report rep;
    long long n = h * nmax;
    LogSeries lH = hazewinkel_logs(ring, n);
    LogSeries lA = araki_logs(ring, n);

    std::map<VarKey, GradedPoly> killV, killv;
    for (long long i = 1; i <= n; ++i) {
        if (i == h) continue;
        killV.emplace(V_key(i), GradedPoly::zero(ring));
        killv.emplace(v_key(i), GradedPoly::zero(ring));
    }
    std::vector<GradedPoly> alpha, beta;
    for (long long i = 0; i <= n; ++i) {
        alpha.push_back(substitute_map(lH.coeffs[static_cast<size_t>(i)], killV));
        beta.push_back(substitute_map(lA.coeffs[static_cast<size_t>(i)], killv));
    }

    for (long long i = 1; i <= n; ++i) {
        if (i % h == 0) continue;
        rep.add("alpha_i = 0 when h does not divide i",
                paramstr(ring, h, 0) + " i=" + std::to_string(i),
                alpha[static_cast<size_t>(i)].is_zero());
        rep.add("araki specialization vanishes when h does not divide i",
                paramstr(ring, h, 0) + " i=" + std::to_string(i),
                beta[static_cast<size_t>(i)].is_zero());
    }
    for (long long j = 1; j <= nmax; ++j) {
        long long expo = (qpow(ring, h * j) - 1) / (qpow(ring, h) - 1);
        GradedPoly rhs = alpha[static_cast<size_t>(h)]
                             .scaled(KElement::pi(ring))
                             .pow(expo)
                             .scaled(KElement::pi_power(ring, -j));
        bool ok = alpha[static_cast<size_t>(h * j)] == rhs;
        rep.add("alpha_{hj} = pi^{-j} (pi alpha_h)^{(q^{hj}-1)/(q^h-1)}",
                paramstr(ring, h, 0) + " j=" + std::to_string(j), ok);
    }
    // the logarithm-vanishing pattern forces the Hazewinkel generators to
    // vanish in the araki specialization as well
    auto table = generator_conversion(ring, n, ConvDirection::hazewinkel_to_araki);
    for (long long i = 1; i <= n; ++i) {
        if (i % h == 0) continue;
        GradedPoly img = substitute_map(table[static_cast<size_t>(i)], killv);
        rep.add("gamma(V_i) = 0 when h does not divide i",
                paramstr(ring, h, 0) + " i=" + std::to_string(i), img.is_zero());
    }
    return rep;
}

}  // namespace famod
