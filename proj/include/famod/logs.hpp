#pragma once

#include "gpoly.hpp"
#include "series.hpp"

namespace famod {

enum class Convention { araki, hazewinkel };

/// Logarithm coefficients l_0, ..., l_n of the universal A-typical formal
/// A-module law, as polynomials over K in the Araki generators v_i or the
/// Hazewinkel generators V_i.  l_0 = 1 and l_h is homogeneous of degree
/// 2(q^h - 1); denominators (powers of pi and of pi - pi^{q^i}) are genuine.
struct LogSeries {
    RingParams ring;
    Convention conv = Convention::araki;
    std::vector<GradedPoly> coeffs;

    long long level() const { return static_cast<long long>(coeffs.size()) - 1; }

    QTypicalSeries as_q_typical() const { return QTypicalSeries{ring, coeffs}; }
};

/// Araki recursion.  The defining relation sums to i = h with v_0 = pi, so
/// the l_h term appears on both sides and the solve divides by pi - pi^{q^h}:
///   l_h = (sum_{i=0}^{h-1} l_i (v_{h-i})^{q^i}) / (pi - pi^{q^h}).
inline LogSeries araki_logs(const RingParams& ring, long long n) {
    LogSeries out{ring, Convention::araki, {}};
    out.coeffs.push_back(GradedPoly::one(ring));
    for (long long h = 1; h <= n; ++h) {
        GradedPoly num(ring);
        for (long long i = 0; i < h; ++i) {
            GradedPoly vpow = GradedPoly::variable(ring, v_key(h - i), qpow(ring, i));
            num += out.coeffs[static_cast<size_t>(i)] * vpow;
        }
        out.coeffs.push_back(num.divided_by(pi_A_single(ring, h)));
    }
    return out;
}

/// Hazewinkel recursion: l_h = (sum_{i=0}^{h-1} l_i (V_{h-i})^{q^i}) / pi.
inline LogSeries hazewinkel_logs(const RingParams& ring, long long n) {
    LogSeries out{ring, Convention::hazewinkel, {}};
    out.coeffs.push_back(GradedPoly::one(ring));
    for (long long h = 1; h <= n; ++h) {
        GradedPoly num(ring);
        for (long long i = 0; i < h; ++i) {
            GradedPoly vpow = GradedPoly::variable(ring, V_key(h - i), qpow(ring, i));
            num += out.coeffs[static_cast<size_t>(i)] * vpow;
        }
        out.coeffs.push_back(num.divided_by(KElement::pi(ring)));
    }
    return out;
}

/// Closed form: l_h = sum over all compositions I of h of v_I / Pi_A(I).
inline LogSeries closed_form_logs(const RingParams& ring, long long n) {
    LogSeries out{ring, Convention::araki, {}};
    for (long long h = 0; h <= n; ++h) {
        GradedPoly lh(ring);
        for (const Seq& I : compositions(h))
            lh += indexed_monomial(ring, GenFamily::v, I).divided_by(pi_A_seq(ring, I));
        out.coeffs.push_back(lh);
    }
    return out;
}

enum class ConvDirection { araki_to_hazewinkel, hazewinkel_to_araki };

/// Substitution tables between the two generator systems, obtained by
/// equating the two log series degree by degree and solving triangularly.
/// Index i of the result is the image of v_i (respectively V_i); entry 0 is
/// unused.
inline std::vector<GradedPoly> generator_conversion(const RingParams& ring, long long n,
                                                    ConvDirection dir) {
    LogSeries lA = araki_logs(ring, n);
    LogSeries lH = hazewinkel_logs(ring, n);
    std::vector<GradedPoly> table;
    table.push_back(GradedPoly::zero(ring));
    for (long long h = 1; h <= n; ++h) {
        GradedPoly acc(ring);
        if (dir == ConvDirection::araki_to_hazewinkel) {
            // v_h + sum_{i=1}^{h-1} l^H_i P_{h-i}^{q^i} = (pi - pi^{q^h}) l^H_h
            acc = lH.coeffs[static_cast<size_t>(h)].scaled(pi_A_single(ring, h));
        } else {
            // V_h + sum_{i=1}^{h-1} l^A_i Q_{h-i}^{q^i} = pi l^A_h
            acc = lA.coeffs[static_cast<size_t>(h)].scaled(KElement::pi(ring));
        }
        const LogSeries& lower = dir == ConvDirection::araki_to_hazewinkel ? lH : lA;
        for (long long i = 1; i < h; ++i)
            acc -= lower.coeffs[static_cast<size_t>(i)] *
                   table[static_cast<size_t>(h - i)].pow(qpow(ring, i));
        table.push_back(acc);
    }
    return table;
}

/// Substitute a conversion table into a polynomial (v's when the table maps
/// v_i, V's when it maps V_i).
inline GradedPoly apply_conversion(const GradedPoly& p, Family from,
                                   const std::vector<GradedPoly>& table, long long D = DEG_INF) {
    return p.substituted(
        [&](VarKey k) -> const GradedPoly* {
            if (key_family(k) != from) return nullptr;
            long long i = key_index(k);
            if (i >= static_cast<long long>(table.size()))
                throw std::invalid_argument("apply_conversion: table too short");
            return &table[static_cast<size_t>(i)];
        },
        D);
}

}  // namespace famod
