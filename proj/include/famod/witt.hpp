#pragma once

#include <map>

#include "gpoly.hpp"
#include "seq.hpp"

namespace famod {

/// (x_1 + ... + x_m)^N by direct multinomial enumeration; far cheaper than
/// repeated multiplication for the large q-power exponents the Witt
/// identities need.
inline GradedPoly variable_sum_power(const RingParams& ring, const std::vector<VarKey>& vars,
                                     long long N) {
    GradedPoly out(ring);
    if (vars.empty()) return N == 0 ? GradedPoly::one(ring) : out;
    std::vector<long long> expo(vars.size(), 0);
    mpz_class coef = 1;
    auto rec = [&](auto&& self, size_t i, long long rest, const mpz_class& c) -> void {
        if (i + 1 == vars.size()) {
            expo[i] = rest;
            Monomial m;
            for (size_t k = 0; k < vars.size(); ++k)
                if (expo[k] > 0) m = m * Monomial::variable(vars[k], expo[k]);
            out.add_term(m, KElement(ring, Rat(c)));
            return;
        }
        for (long long a = 0; a <= rest; ++a) {
            expo[i] = a;
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(rest),
                         static_cast<unsigned long>(a));
            self(self, i + 1, rest - a, c * binom);
        }
    };
    rec(rec, 0, N, coef);
    return out;
}

inline std::vector<VarKey> witt_vars(long long m) {
    std::vector<VarKey> vars;
    for (long long t = 1; t <= m; ++t) vars.push_back(x_key(t));
    return vars;
}

/// Classical-style Witt polynomials w_j in m variables, defined by
///   sum_t x_t^{q^k} = sum_{j=0}^{k} pi^j (w_j)^{q^{k-j}},   w_0 = sum_t x_t.
/// Coefficients live in K; integrality is a theorem, asserted by tests.
inline std::vector<GradedPoly> classical_witt_family(const RingParams& ring, long long jmax,
                                                     long long m) {
    std::vector<VarKey> vars = witt_vars(m);
    std::vector<GradedPoly> w;
    GradedPoly s0(ring);
    for (auto k : vars) s0 += GradedPoly::variable(ring, k);
    w.push_back(s0);
    for (long long k = 1; k <= jmax; ++k) {
        GradedPoly pk(ring);  // power sum
        for (auto key : vars)
            pk += GradedPoly::variable(ring, key, qpow(ring, k));
        GradedPoly num = pk;
        for (long long j = 0; j < k; ++j) {
            long long e = qpow(ring, k - j);
            GradedPoly pw = (j == 0) ? variable_sum_power(ring, vars, e) : w[static_cast<size_t>(j)].pow(e);
            num -= pw.scaled(KElement::pi_power(ring, j));
        }
        w.push_back(num.divided_by(KElement::pi_power(ring, k)));
    }
    return w;
}

inline GradedPoly classical_witt(const RingParams& ring, long long j, long long m) {
    return classical_witt_family(ring, j, m).back();
}

/// Generalized Witt polynomial w_I in m variables, built by the recursion
///   w_empty = sum_t x_t,
///   w_{(k)} = (sum_t x_t^{q^k} - (sum_t x_t)^{q^k}) / Pi_A(k),
///   w_K     = (w_{K''} - (w_{K'''})^{q^{k_1}}) / Pi_A(k_1)    for |K| >= 2.
inline GradedPoly generalized_witt(const RingParams& ring, const Seq& I, long long m) {
    std::vector<VarKey> vars = witt_vars(m);
    std::map<std::vector<long long>, GradedPoly> cache;
    auto rec = [&](auto&& self, const Seq& K) -> GradedPoly {
        auto it = cache.find(K.entries());
        if (it != cache.end()) return it->second;
        GradedPoly out(ring);
        if (K.length() == 0) {
            for (auto key : vars) out += GradedPoly::variable(ring, key);
        } else if (K.length() == 1) {
            long long k = K.entries()[0];
            long long e = qpow(ring, k);
            GradedPoly pk(ring);
            for (auto key : vars) pk += GradedPoly::variable(ring, key, e);
            out = (pk - variable_sum_power(ring, vars, e)).divided_by(pi_A_single(ring, k));
        } else {
            long long k1 = K.entries()[0];
            GradedPoly a = self(self, K.dprime());
            GradedPoly b = self(self, K.tprime()).pow(qpow(ring, k1));
            out = (a - b).divided_by(pi_A_single(ring, k1));
        }
        cache.emplace(K.entries(), out);
        return out;
    };
    return rec(rec, I);
}

/// Power with optional mod-pi^prec pruning of intermediates (valid whenever
/// only the value mod pi^prec is consumed downstream and all inputs are
/// pi-integral).
inline GradedPoly pow_pruned(const GradedPoly& a, long long n, long long D, long long prec) {
    if (prec <= 0) return a.pow(n, D);
    if (n == 0) return GradedPoly::one(a.ring());
    GradedPoly acc = GradedPoly::one(a.ring());
    GradedPoly base = a.pruned(prec);
    long long k = n;
    while (k) {
        if (k & 1) acc = GradedPoly::mul(acc, base, D).pruned(prec);
        k >>= 1;
        if (k) base = GradedPoly::mul(base, base, D).pruned(prec);
    }
    return acc;
}

/// Evaluation of the generalized Witt polynomials at explicit ring elements
/// (the "sets" of the correction-set recursions).  Zeros among the arguments
/// are ignored: the w's depend only on power sums of their inputs.
///
/// When prec > 0 the result is only guaranteed modulo pi^prec; internal
/// precision grows by one for every division by a valuation-1 scalar.
class WittEvaluator {
public:
    WittEvaluator(const RingParams& ring, std::vector<GradedPoly> args, long long D = DEG_INF)
        : ring_(ring), D_(D) {
        for (auto& a : args)
            if (!a.is_zero()) args_.push_back(std::move(a));
    }

    size_t arg_count() const { return args_.size(); }

    /// w_I(args), exact (prec = 0) or modulo pi^prec.
    GradedPoly eval(const Seq& I, long long prec = 0) {
        auto key = std::make_pair(I.entries(), prec);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        GradedPoly out(ring_, D_);
        long long inner = prec > 0 ? prec + 1 : 0;
        if (args_.empty()) {
            // all power sums vanish, so every w_I does too
        } else if (I.length() == 0) {
            for (const auto& a : args_) out += a;
            out = out.truncated(D_);
            if (prec > 0) out = out.pruned(prec);
        } else if (I.length() == 1) {
            long long k = I.entries()[0];
            GradedPoly num = power_sum(k, inner) - sum_power(k, inner);
            out = num.divided_by(pi_A_single(ring_, k));
            if (prec > 0) out = out.pruned(prec);
        } else {
            long long k1 = I.entries()[0];
            GradedPoly a = eval(I.dprime(), inner);
            GradedPoly b = pow_pruned(eval(I.tprime(), inner), qpow(ring_, k1), D_, inner);
            out = (a - b).divided_by(pi_A_single(ring_, k1));
            if (prec > 0) out = out.pruned(prec);
        }
        cache_.emplace(key, out);
        return out;
    }

private:
    GradedPoly power_sum(long long k, long long prec) {
        GradedPoly out(ring_, D_);
        long long e = qpow(ring_, k);
        for (const auto& a : args_) out += pow_pruned(a, e, D_, prec);
        return out.truncated(D_);
    }

    GradedPoly sum_power(long long k, long long prec) {
        GradedPoly s(ring_, D_);
        for (const auto& a : args_) s += a;
        return pow_pruned(s.truncated(D_), qpow(ring_, k), D_, prec);
    }

    RingParams ring_;
    long long D_;
    std::vector<GradedPoly> args_;
    std::map<std::pair<std::vector<long long>, long long>, GradedPoly> cache_;
};

}  // namespace famod
