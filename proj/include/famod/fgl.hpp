#pragma once

#include "logs.hpp"
#include "series.hpp"
#include "witt.hpp"

namespace famod {

/// log_F of a polynomial argument: sum_i l_i * arg^{q^i}, truncated at D.
inline GradedPoly log_apply(const LogSeries& logs, const GradedPoly& arg, long long D) {
    return series_substitute(logs.as_q_typical(), arg, D);
}

/// Highest q-typical level that can contribute below the exponent bound.
inline long long level_for_xbound(const RingParams& ring, long long xbound) {
    long long lvl = 0;
    while (qpow(ring, lvl + 1) <= xbound) ++lvl;
    return lvl;
}

/// exp_F = log_F^{-1} as a truncated series out to X^xbound.  Requires the
/// log series to carry enough coefficients (q^level >= xbound coverage).
inline XSeries exp_series(const LogSeries& logs, long long xbound) {
    if (logs.level() < level_for_xbound(logs.ring, xbound))
        throw std::invalid_argument("exp_series: log series has too few coefficients");
    return XSeries::from_q_typical(logs.as_q_typical(), xbound).reversed();
}

/// Formal group law sum: exp_F(sum_i log_F(arg_i)), truncated at degree D.
/// Every argument must consist of positive-degree terms only.
inline GradedPoly fgl_sum(const LogSeries& logs, const std::vector<GradedPoly>& args,
                          long long D) {
    long long mindeg = DEG_INF;
    GradedPoly s(logs.ring, D);
    for (const auto& a : args) {
        require_same_ring(logs.ring, a.ring(), "fgl_sum");
        if (a.is_zero()) continue;
        if (a.min_term_degree() <= 0)
            throw std::invalid_argument("fgl_sum: arguments must have positive degree");
        mindeg = std::min(mindeg, a.min_term_degree());
    }
    if (mindeg == DEG_INF) return GradedPoly::zero(logs.ring);
    for (const auto& a : args) {
        if (a.is_zero()) continue;
        s += log_apply(logs, a, D);
    }
    long long xbound = std::max<long long>(1, D / mindeg);
    return exp_series(logs, xbound).evaluated_at(s, D);
}

/// Result of the structured formal sum: the collapsed value and the
/// correction sets B_h the recursion produced.
struct StructuredSum {
    GradedPoly total;
    std::map<long long, std::vector<GradedPoly>> B;
};

/// Structured formal sum over homogeneous families A_h (elements of degree
/// 2(q^h - 1)), via the correction-set recursion
///   B_h = A_h  u  { v_J * w_J(B_{h - ||J||}) : |J| > 0 },
/// which collapses the formal double sum to sum^F_h w_empty(B_h).
inline StructuredSum structured_formal_sum(const LogSeries& logs,
                                           const std::map<long long, std::vector<GradedPoly>>& A,
                                           long long D) {
    const RingParams& ring = logs.ring;
    long long hmax = 0;
    for (const auto& [h, elems] : A) {
        if (h < 1) throw std::invalid_argument("structured_formal_sum: levels must be positive");
        for (const auto& a : elems) {
            long long deg = 0;
            if (!a.is_zero() && (!a.is_homogeneous(&deg) || deg != generator_degree(ring, h)))
                throw std::invalid_argument(
                    "structured_formal_sum: element not homogeneous of degree 2(q^h - 1)");
        }
        if (generator_degree(ring, h) <= D) hmax = std::max(hmax, h);
    }
    StructuredSum out{GradedPoly::zero(ring), {}};
    std::vector<GradedPoly> level_sums;
    for (long long h = 1; h <= hmax; ++h) {
        std::vector<GradedPoly> Bh;
        if (auto it = A.find(h); it != A.end())
            for (const auto& a : it->second)
                if (!a.is_zero()) Bh.push_back(a.truncated(D));
        for (long long nrm = 1; nrm < h; ++nrm) {
            auto lower = out.B.find(h - nrm);
            if (lower == out.B.end() || lower->second.empty()) continue;
            WittEvaluator we(ring, lower->second, D);
            for (const Seq& J : compositions(nrm)) {
                GradedPoly wj = we.eval(J);
                if (wj.is_zero()) continue;
                Bh.push_back(indexed_monomial(ring, GenFamily::v, J) * wj);
            }
        }
        out.B.emplace(h, Bh);
        GradedPoly sum(ring, D);
        for (const auto& b : Bh) sum += b;
        if (!sum.is_zero()) level_sums.push_back(sum.truncated(D));
    }
    out.total = fgl_sum(logs, level_sums, D);
    return out;
}

/// [-1]_F(X) = -X for p > 2; the series is returned q-typically (only the
/// level-0 coefficient is nonzero).
inline QTypicalSeries negation(const LogSeries& logs, long long /*D*/) {
    if (logs.ring.p == 2)
        throw std::domain_error("negation: requires p > 2");
    return QTypicalSeries{logs.ring, {-GradedPoly::one(logs.ring)}};
}

/// Strict isomorphism coefficient extraction: given the images of the log
/// coefficients under the two classifying maps (f1 = source, f2 = target),
///   t_i = f2(l_i) - sum_{j=0}^{i-1} f1(l_{i-j}) t_j^{q^{i-j}},  t_0 = 1.
inline std::vector<GradedPoly> strict_iso_coeffs(const std::vector<GradedPoly>& f1_logs,
                                                 const std::vector<GradedPoly>& f2_logs,
                                                 long long n) {
    if (f1_logs.empty() || f2_logs.empty())
        throw std::invalid_argument("strict_iso_coeffs: empty log list");
    const RingParams& ring = f1_logs[0].ring();
    if (!(f1_logs[0] == GradedPoly::one(ring)) || !(f2_logs[0] == GradedPoly::one(ring)))
        throw std::invalid_argument("strict_iso_coeffs: logs must be strict (l_0 = 1)");
    if (static_cast<long long>(f1_logs.size()) <= n || static_cast<long long>(f2_logs.size()) <= n)
        throw std::invalid_argument("strict_iso_coeffs: too few log coefficients");
    std::vector<GradedPoly> t;
    t.push_back(GradedPoly::one(ring));
    for (long long i = 1; i <= n; ++i) {
        GradedPoly acc = f2_logs[static_cast<size_t>(i)];
        for (long long j = 0; j < i; ++j)
            acc -= f1_logs[static_cast<size_t>(i - j)] *
                   t[static_cast<size_t>(j)].pow(qpow(ring, i - j));
        t.push_back(acc);
    }
    return t;
}

}  // namespace famod
