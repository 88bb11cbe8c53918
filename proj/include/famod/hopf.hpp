#pragma once

#include "fgl.hpp"
#include "report.hpp"

namespace famod {

/// eta_R on the log coefficients: eta_R(l_i) = sum_{j=0}^{i} l_j (t_{i-j})^{q^j}.
inline std::vector<GradedPoly> eta_R_logs(const RingParams& ring, long long n,
                                          Convention conv = Convention::araki) {
    LogSeries logs = conv == Convention::araki ? araki_logs(ring, n) : hazewinkel_logs(ring, n);
    std::vector<GradedPoly> out;
    for (long long i = 0; i <= n; ++i) {
        GradedPoly acc(ring);
        for (long long j = 0; j <= i; ++j) {
            GradedPoly tpow = (i == j)
                                  ? GradedPoly::one(ring)
                                  : GradedPoly::variable(ring, t_key(i - j), qpow(ring, j));
            acc += logs.coeffs[static_cast<size_t>(j)] * tpow;
        }
        out.push_back(acc);
    }
    return out;
}

/// eta_R on the generators, solved triangularly by pushing the defining log
/// relation through eta_R.  Araki: the i = h term of the relation contributes
/// eta_R(l_h) pi^{q^h}, so
///   eta_R(v_h) = (pi - pi^{q^h}) eta_R(l_h) - sum_{i=1}^{h-1} eta_R(l_i) eta_R(v_{h-i})^{q^i};
/// Hazewinkel:
///   eta_R(V_h) = pi eta_R(l_h) - sum_{i=1}^{h-1} eta_R(l_i) eta_R(V_{h-i})^{q^i}.
/// Index 0 of the result is eta_R(v_0) = pi.  All outputs are pi-integral;
/// a violation raises (it would indicate an implementation bug).
inline std::vector<GradedPoly> eta_R_v(const RingParams& ring, long long k,
                                       Convention conv = Convention::araki) {
    auto el = eta_R_logs(ring, k, conv);
    std::vector<GradedPoly> gen;
    gen.push_back(GradedPoly::constant(ring, KElement::pi(ring)));
    for (long long h = 1; h <= k; ++h) {
        KElement lead = conv == Convention::araki ? pi_A_single(ring, h) : KElement::pi(ring);
        GradedPoly acc = el[static_cast<size_t>(h)].scaled(lead);
        for (long long i = 1; i < h; ++i)
            acc -= el[static_cast<size_t>(i)] *
                   gen[static_cast<size_t>(h - i)].pow(qpow(ring, i));
        if (acc.min_coeff_valuation() < 0)
            throw std::logic_error("eta_R_v: non-integral coefficient at h = " + std::to_string(h));
        gen.push_back(acc);
    }
    return gen;
}

/// eta_R(v_J) = eta_R(v_{j1}) * eta_R(v_{J'})^{q^{j1}} from computed generators.
inline GradedPoly eta_R_of_vI(const RingParams& ring, const std::vector<GradedPoly>& gens,
                              const Seq& J) {
    GradedPoly out = GradedPoly::one(ring);
    long long shift = 0;
    for (long long j : J.entries()) {
        out = out * gens[static_cast<size_t>(j)].pow(qpow(ring, shift));
        shift += j;
    }
    return out;
}

/// Closed form for the right unit on generators via the correction-set
/// recursion
///   N_h = { (-1)^{|I|} t_I (v_i t_j^{q^i})^{q^{||I||}} : ||I|| + i + j = h },
///   R_h = N_h  u  { eta_R(v_J) w_J(R_{h-i}) : ||J|| = i, 0 < i < h },
///   eta_R(v_h) = w_empty(R_h),
/// with v_0 = pi and t_0 = 1.  Consumes its own lower-index outputs, so the
/// route is independent of eta_R_v.
inline std::vector<GradedPoly> eta_R_closed_family(const RingParams& ring, long long h) {
    std::vector<GradedPoly> gens;
    gens.push_back(GradedPoly::constant(ring, KElement::pi(ring)));
    std::vector<std::vector<GradedPoly>> R(1);
    for (long long m = 1; m <= h; ++m) {
        std::vector<GradedPoly> Rm;
        for (long long nI = 0; nI <= m; ++nI) {
            for (const Seq& I : compositions(nI)) {
                for (long long i = 0; i + nI <= m; ++i) {
                    long long j = m - nI - i;
                    GradedPoly core =
                        i == 0 ? GradedPoly::constant(ring, KElement::pi(ring))
                               : GradedPoly::variable(ring, v_key(i));
                    if (j > 0)
                        core = core * GradedPoly::variable(ring, t_key(j), qpow(ring, i));
                    GradedPoly elem =
                        indexed_monomial(ring, GenFamily::t, I) * core.pow(qpow(ring, nI));
                    if (I.length() % 2 == 1) elem = -elem;
                    if (!elem.is_zero()) Rm.push_back(elem);
                }
            }
        }
        for (long long i = 1; i < m; ++i) {
            WittEvaluator we(ring, R[static_cast<size_t>(m - i)]);
            for (const Seq& J : compositions(i)) {
                GradedPoly wj = we.eval(J);
                if (wj.is_zero()) continue;
                Rm.push_back(eta_R_of_vI(ring, gens, J) * wj);
            }
        }
        GradedPoly g(ring);
        for (const auto& r : Rm) g += r;
        R.push_back(std::move(Rm));
        gens.push_back(g);
    }
    return gens;
}

inline GradedPoly eta_R_closed(const RingParams& ring, long long h) {
    return eta_R_closed_family(ring, h)[static_cast<size_t>(h)];
}

/// Correction sets Delta_0, ..., Delta_kmax of the coproduct recursion:
///   M_h = { t_i (x) t_{h-i}^{q^i} : 0 <= i <= h },
///   Delta_h = M_h  u  { (v_J (x) 1) w_J(Delta_{h-||J||}) : |J| > 0 }.
inline std::vector<std::vector<GradedPoly>> coproduct_delta_sets(const RingParams& ring,
                                                                 long long kmax) {
    std::vector<std::vector<GradedPoly>> sets;
    sets.push_back({GradedPoly::one(ring)});  // Delta_0 = {1 (x) 1}
    for (long long m = 1; m <= kmax; ++m) {
        std::vector<GradedPoly> cur;
        for (long long i = 0; i <= m; ++i) {
            GradedPoly el = GradedPoly::one(ring);
            if (i > 0) el = el * GradedPoly::variable(ring, t_key(i, 0));
            if (m - i > 0) el = el * GradedPoly::variable(ring, t_key(m - i, 1), qpow(ring, i));
            cur.push_back(el);
        }
        for (long long nrm = 1; nrm <= m; ++nrm) {
            WittEvaluator we(ring, sets[static_cast<size_t>(m - nrm)]);
            for (const Seq& J : compositions(nrm)) {
                GradedPoly wj = we.eval(J);
                if (wj.is_zero()) continue;
                cur.push_back(indexed_monomial(ring, GenFamily::v, J) * wj);
            }
        }
        sets.push_back(std::move(cur));
    }
    return sets;
}

enum class CoproductRoute { witt, logmatch, both };

/// Coproduct on the t-generators via the correction sets: Delta(t_k) =
/// w_empty(Delta_k).
inline std::vector<GradedPoly> coproduct_t_family_witt(const RingParams& ring, long long kmax) {
    auto sets = coproduct_delta_sets(ring, kmax);
    std::vector<GradedPoly> out;
    for (long long k = 0; k <= kmax; ++k) {
        GradedPoly d(ring);
        for (const auto& el : sets[static_cast<size_t>(k)]) d += el;
        if (d.min_coeff_valuation() < 0)
            throw std::logic_error("coproduct_t: non-integral coefficient");
        out.push_back(d);
    }
    return out;
}

/// Coproduct by matching homogeneous components of
///   sum_{i,m} (l_m (x) 1) Delta(t_i)^{q^m} = sum_{i,j,m} (l_m t_i^{q^m}) (x) t_j^{q^{i+m}}:
///   Delta(t_k) = sum_{m+i+j=k} (l_m t_i^{q^m}) (x) t_j^{q^{i+m}}
///              - sum_{m=1}^{k} l_m Delta(t_{k-m})^{q^m}.
inline std::vector<GradedPoly> coproduct_t_family_logmatch(const RingParams& ring,
                                                           long long kmax) {
    LogSeries logs = araki_logs(ring, kmax);
    std::vector<GradedPoly> out;
    out.push_back(GradedPoly::one(ring));
    for (long long k = 1; k <= kmax; ++k) {
        GradedPoly acc(ring);
        for (long long m = 0; m <= k; ++m) {
            for (long long i = 0; m + i <= k; ++i) {
                long long j = k - m - i;
                GradedPoly term = logs.coeffs[static_cast<size_t>(m)];
                if (i > 0) term = term * GradedPoly::variable(ring, t_key(i, 0), qpow(ring, m));
                if (j > 0) term = term * GradedPoly::variable(ring, t_key(j, 1), qpow(ring, i + m));
                acc += term;
            }
        }
        for (long long m = 1; m <= k; ++m)
            acc -= logs.coeffs[static_cast<size_t>(m)] *
                   out[static_cast<size_t>(k - m)].pow(qpow(ring, m));
        if (acc.min_coeff_valuation() < 0)
            throw std::logic_error("coproduct_t (logmatch): non-integral coefficient");
        out.push_back(acc);
    }
    return out;
}

inline GradedPoly coproduct_t(const RingParams& ring, long long k, long long D = DEG_INF,
                              CoproductRoute route = CoproductRoute::witt) {
    if (route == CoproductRoute::logmatch)
        return coproduct_t_family_logmatch(ring, k).back().truncated(D);
    GradedPoly w = coproduct_t_family_witt(ring, k).back();
    if (route == CoproductRoute::both) {
        GradedPoly l = coproduct_t_family_logmatch(ring, k).back();
        if (!(w == l)) throw std::logic_error("coproduct_t: witt and logmatch routes disagree");
    }
    return w.truncated(D);
}

/// Counit: identity on v/V, t_i |-> 0.  Input must be slot-0 only.
inline GradedPoly counit(const GradedPoly& x) {
    for (const auto& [m, c] : x.terms())
        if (m.contains_family(Family::t1) || m.contains_family(Family::t2))
            throw std::invalid_argument("counit: input must have a single tensor slot");
    GradedPoly zero = GradedPoly::zero(x.ring());
    return x.substituted([&](VarKey k) -> const GradedPoly* {
        return key_family(k) == Family::t0 ? &zero : nullptr;
    });
}

/// Canonical mod-p form of a pi-integral polynomial: every coefficient is
/// replaced by its residue in F_p, lifted back as an integer in [0, p).
inline GradedPoly mod_p_normalize(const GradedPoly& x) {
    GradedPoly out(x.ring(), x.trunc_bound());
    for (const auto& [m, c] : x.terms())
        out.add_term(m, KElement(x.ring(), c.reduce_mod_pi()));
    return out;
}

/// Reduction modulo I_h = (pi, v_1, ..., v_{h-1}): kills v_j (j < h) and
/// reduces coefficients mod pi (input must be pi-integral).
inline GradedPoly reduce_mod_Ih(const GradedPoly& x, long long h) {
    GradedPoly out(x.ring(), x.trunc_bound());
    for (const auto& [m, c] : x.terms()) {
        bool killed = false;
        for (const auto& [k, e] : m.factors())
            if (key_family(k) == Family::v && key_index(k) < h) {
                killed = true;
                break;
            }
        if (killed) continue;
        out.add_term(m, KElement(x.ring(), c.reduce_mod_pi()));
    }
    return out;
}

/// Term-wise membership test for I_h * V^AT: every term must carry a pi
/// (coefficient valuation >= 1) or some v_j with j < h.  For this monomial
/// ideal the term-wise test is exact.
inline bool in_Ih_ideal(const GradedPoly& x, long long h, std::string* witness = nullptr) {
    for (const auto& [m, c] : x.terms()) {
        bool ok = c.valuation() >= 1;
        if (!ok)
            for (const auto& [k, e] : m.factors())
                if (key_family(k) == Family::v && key_index(k) < h) {
                    ok = true;
                    break;
                }
        if (!ok) {
            if (witness) *witness = "(" + c.to_string() + ")*" + m.to_string();
            return false;
        }
    }
    return true;
}

/// Invariance of I_h: eta_R(v_j) in I_h * V^AT for j < h, and
/// eta_R(v_h) - v_h in I_h * V^AT; the generator-chain congruences
/// eta_R(v_j) = v_j mod I_j are reported for every j <= kmax.
inline Report verify_invariance(const RingParams& ring, long long h, long long kmax,
                                long long /*D*/ = DEG_INF) {
    if (h < 1) throw std::invalid_argument("verify_invariance: h >= 1 required");
    if (kmax < h) throw std::invalid_argument("verify_invariance: kmax >= h required");
    Report rep;
    auto gens = eta_R_v(ring, kmax);
    rep.add("eta_R(pi) = pi in I_h", "h=" + std::to_string(h), true);
    for (long long j = 1; j < h; ++j) {
        std::string w;
        bool ok = in_Ih_ideal(gens[static_cast<size_t>(j)], h, &w);
        rep.add("eta_R(v_j) in I_h*VAT", "h=" + std::to_string(h) + " j=" + std::to_string(j), ok,
                w);
    }
    for (long long j = 1; j <= kmax; ++j) {
        GradedPoly diff =
            gens[static_cast<size_t>(j)] - GradedPoly::variable(ring, v_key(j));
        std::string w;
        bool ok = in_Ih_ideal(diff, j, &w);
        rep.add("eta_R(v_j) = v_j mod I_j*VAT", "j=" + std::to_string(j), ok, w);
    }
    {
        GradedPoly diff = gens[static_cast<size_t>(h)] - GradedPoly::variable(ring, v_key(h));
        std::string w;
        bool ok = in_Ih_ideal(diff, h, &w);
        rep.add("eta_R(v_h) = v_h mod I_h*VAT", "h=" + std::to_string(h), ok, w);
    }
    return rep;
}

/// The conjugation identity: the formal sum over all (I, i) != (empty, 0) of
/// [(-1)^{|I|}]_F (t_I t_i^{q^{||I||}}) must vanish up to degree D (the full
/// sum including the (empty, 0) term is then the constant 1).  Needs p > 2,
/// where [-1]_F(X) = -X.
inline Report conjugation_identity(const RingParams& ring, long long D) {
    Report rep;
    if (ring.p == 2) throw std::domain_error("conjugation_identity: requires p > 2");
    std::vector<GradedPoly> elems;
    for (long long total = 1; generator_degree(ring, total) <= D; ++total) {
        for (long long nI = 0; nI <= total; ++nI) {
            long long i = total - nI;
            for (const Seq& I : compositions(nI)) {
                if (I.empty_seq() && i == 0) continue;
                GradedPoly el = indexed_monomial(ring, GenFamily::t, I);
                if (i > 0)
                    el = el * GradedPoly::variable(ring, t_key(i), qpow(ring, nI));
                if (I.length() % 2 == 1) el = -el;
                elems.push_back(el);
            }
        }
    }
    long long mindeg = generator_degree(ring, 1);
    LogSeries logs = araki_logs(ring, level_for_xbound(ring, std::max<long long>(1, D / mindeg)));
    GradedPoly s = fgl_sum(logs, elems, D);
    rep.add("conjugation formal sum equals 1", "D=" + std::to_string(D), s.is_zero(),
            s.is_zero() ? "" : s.to_string());
    return rep;
}

/// Substitution through an explicit image table; absent keys stay unchanged.
inline GradedPoly substitute_map(const GradedPoly& p, const std::map<VarKey, GradedPoly>& images,
                                 long long D = DEG_INF) {
    return p.substituted(
        [&](VarKey k) -> const GradedPoly* {
            auto it = images.find(k);
            return it == images.end() ? nullptr : &it->second;
        },
        D);
}

/// Hopf algebroid axioms on the t-generators up to degree D: coassociativity
/// in the three-slot normal form and both counit laws.
///
/// Normal form bookkeeping: (Delta (x) 1) keeps v's in slot 0; (1 (x) Delta)
/// puts the images' v's into slot 1, which the tensor relation moves across
/// the first factor as eta_R(v).
inline Report hopf_axiom_suite(const RingParams& ring, long long D) {
    Report rep;
    long long kmax = 0;
    while (generator_degree(ring, kmax + 1) <= D) ++kmax;
    auto delta = coproduct_t_family_witt(ring, kmax);
    auto gens = eta_R_v(ring, kmax);

    // images of t_i under Delta with slots shifted (0,1) -> (1,2) and v's
    // pushed through the first factor as eta_R(v)
    std::map<VarKey, GradedPoly> shift_up;  // t0 -> t1, t1 -> t2, v -> eta_R(v)
    for (long long i = 1; i <= kmax; ++i) {
        shift_up.emplace(t_key(i, 0), GradedPoly::variable(ring, t_key(i, 1)));
        shift_up.emplace(t_key(i, 1), GradedPoly::variable(ring, t_key(i, 2)));
        shift_up.emplace(v_key(i), gens[static_cast<size_t>(i)]);
    }
    std::map<VarKey, GradedPoly> delta_on_slot1;
    for (long long i = 1; i <= kmax; ++i)
        delta_on_slot1.emplace(t_key(i, 1),
                               substitute_map(delta[static_cast<size_t>(i)], shift_up));

    std::map<VarKey, GradedPoly> delta_on_slot0;  // t0 -> Delta(t), t1 -> t2
    for (long long i = 1; i <= kmax; ++i) {
        delta_on_slot0.emplace(t_key(i, 0), delta[static_cast<size_t>(i)]);
        delta_on_slot0.emplace(t_key(i, 1), GradedPoly::variable(ring, t_key(i, 2)));
    }

    rep.add("Delta(1) = 1 (x) 1", "", delta[0] == GradedPoly::one(ring));
    for (long long k = 1; k <= kmax; ++k) {
        GradedPoly lhs = substitute_map(delta[static_cast<size_t>(k)], delta_on_slot0);
        GradedPoly rhs = substitute_map(delta[static_cast<size_t>(k)], delta_on_slot1);
        rep.add("coassociativity on t_k", "k=" + std::to_string(k), lhs == rhs);
    }

    std::map<VarKey, GradedPoly> kill_t0, kill_t1, down_t1;
    for (long long i = 1; i <= kmax; ++i) {
        kill_t0.emplace(t_key(i, 0), GradedPoly::zero(ring));
        kill_t1.emplace(t_key(i, 1), GradedPoly::zero(ring));
        down_t1.emplace(t_key(i, 1), GradedPoly::variable(ring, t_key(i, 0)));
    }
    for (long long k = 1; k <= kmax; ++k) {
        GradedPoly left =
            substitute_map(substitute_map(delta[static_cast<size_t>(k)], kill_t0), down_t1);
        GradedPoly right = substitute_map(delta[static_cast<size_t>(k)], kill_t1);
        GradedPoly tk = GradedPoly::variable(ring, t_key(k));
        rep.add("(eps (x) 1) Delta = id on t_k", "k=" + std::to_string(k), left == tk);
        rep.add("(1 (x) eps) Delta = id on t_k", "k=" + std::to_string(k), right == tk);
    }
    return rep;
}

/// Ordered partitions of i + h*e of length e with all entries >= h.
inline std::vector<Seq> s_ihe_partitions(long long i, long long h, long long e) {
    std::vector<Seq> out;
    std::vector<long long> cur;
    long long target = i + h * e;
    auto rec = [&](auto&& self, long long pos, long long rest) -> void {
        if (pos == e) {
            if (rest == 0) out.push_back(Seq(cur));
            return;
        }
        long long remaining_min = h * (e - pos - 1);
        for (long long a = h; a + remaining_min <= rest; ++a) {
            cur.push_back(a);
            self(self, pos + 1, rest - a);
            cur.pop_back();
        }
    };
    rec(rec, 0, target);
    return out;
}

/// The b elements of the integral world: b_{i,j} = w_{e(j+1)}(Delta_i),
/// evaluated on the coproduct correction set; zero for i <= 0.
inline GradedPoly b_element_integral(const RingParams& ring, long long i, long long j) {
    if (i <= 0) return GradedPoly::zero(ring);
    auto sets = coproduct_delta_sets(ring, i);
    WittEvaluator we(ring, sets[static_cast<size_t>(i)]);
    return we.eval(Seq::constant(j + 1, ring.e));
}

/// Reduction of Delta(t_k) modulo I_h for 0 < k <= (e+1)h, cross-checked
/// against the closed formula
///   sum_i t_i (x) t_{k-i}^{q^i}
///   + sum_{i=0}^{k-eh} (b_{k-eh-i,h-1})^{q^i} sum_{I in S_{i,h,e}} (v_I (x) 1).
inline GradedPoly coproduct_mod_In(const RingParams& ring, long long k, long long h) {
    if (k <= 0 || k > (ring.e + 1) * h)
        throw std::invalid_argument("coproduct_mod_In: need 0 < k <= (e+1)h");
    GradedPoly lhs = reduce_mod_Ih(coproduct_t(ring, k), h);

    GradedPoly rhs(ring);
    for (long long i = 0; i <= k; ++i) {
        GradedPoly el = GradedPoly::one(ring);
        if (i > 0) el = el * GradedPoly::variable(ring, t_key(i, 0));
        if (k - i > 0) el = el * GradedPoly::variable(ring, t_key(k - i, 1), qpow(ring, i));
        rhs += el;
    }
    for (long long i = 0; i <= k - ring.e * h; ++i) {
        GradedPoly b = b_element_integral(ring, k - ring.e * h - i, h - 1);
        GradedPoly bred = reduce_mod_Ih(b, h).pow(qpow(ring, i));
        if (bred.is_zero()) continue;
        GradedPoly vsum(ring);
        for (const Seq& I : s_ihe_partitions(i, h, ring.e))
            vsum += indexed_monomial(ring, GenFamily::v, I);
        rhs += bred * vsum;
    }
    rhs = mod_p_normalize(rhs);
    if (!(lhs == rhs))
        throw std::logic_error("coproduct_mod_In: reduction disagrees with the closed formula");
    return lhs;
}

}  // namespace famod
