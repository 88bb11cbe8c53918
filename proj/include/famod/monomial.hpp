#pragma once

#include <cstdint>
#include <sstream>
#include <vector>

#include "ring.hpp"

namespace famod {

/// Variable families, in ranking order.  t0/t1/t2 are the t-generators in
/// tensor slots 0, 1, 2; v/V generators always live in slot 0 (left-aligned
/// tensor normal form).  x variables are auxiliary (Witt polynomial inputs).
enum class Family : uint8_t { v = 0, V = 1, t0 = 2, t1 = 3, t2 = 4, x = 5 };

/// Packed (family, index); numeric order on the key is the variable ranking.
using VarKey = uint32_t;

inline VarKey var_key(Family f, long long idx) {
    if (idx < 1 || idx > 0xFFFFFF) throw std::invalid_argument("var_key: bad index");
    return (static_cast<uint32_t>(f) << 24) | static_cast<uint32_t>(idx);
}
inline Family key_family(VarKey k) { return static_cast<Family>(k >> 24); }
inline long long key_index(VarKey k) { return static_cast<long long>(k & 0xFFFFFF); }

inline VarKey v_key(long long i) { return var_key(Family::v, i); }
inline VarKey V_key(long long i) { return var_key(Family::V, i); }
inline VarKey t_key(long long i, int slot = 0) {
    switch (slot) {
        case 0: return var_key(Family::t0, i);
        case 1: return var_key(Family::t1, i);
        case 2: return var_key(Family::t2, i);
        default: throw std::invalid_argument("t_key: slot must be 0, 1 or 2");
    }
}
inline VarKey x_key(long long i) { return var_key(Family::x, i); }

inline bool is_t_family(Family f) {
    return f == Family::t0 || f == Family::t1 || f == Family::t2;
}
inline int t_slot(Family f) {
    if (f == Family::t0) return 0;
    if (f == Family::t1) return 1;
    if (f == Family::t2) return 2;
    throw std::invalid_argument("t_slot: not a t family");
}

inline std::string var_name(VarKey k) {
    std::ostringstream os;
    switch (key_family(k)) {
        case Family::v: os << "v" << key_index(k); break;
        case Family::V: os << "V" << key_index(k); break;
        case Family::t0: os << "t" << key_index(k); break;
        case Family::t1: os << "t" << key_index(k) << "'"; break;
        case Family::t2: os << "t" << key_index(k) << "''"; break;
        case Family::x: os << "x" << key_index(k); break;
    }
    return os.str();
}

/// A monomial: sorted (ascending VarKey) list of (variable, exponent>0).
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial variable(VarKey k, long long exp = 1) {
        Monomial m;
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (exp > 0) m.v_.emplace_back(k, exp);
        return m;
    }

    const std::vector<std::pair<VarKey, long long>>& factors() const { return v_; }
    bool is_one() const { return v_.empty(); }

    long long exponent_of(VarKey k) const {
        for (const auto& [key, e] : v_)
            if (key == k) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.v_.reserve(a.v_.size() + b.v_.size());
        size_t i = 0, j = 0;
        while (i < a.v_.size() || j < b.v_.size()) {
            if (j == b.v_.size() || (i < a.v_.size() && a.v_[i].first < b.v_[j].first))
                out.v_.push_back(a.v_[i++]);
            else if (i == a.v_.size() || b.v_[j].first < a.v_[i].first)
                out.v_.push_back(b.v_[j++]);
            else {
                out.v_.emplace_back(a.v_[i].first, a.v_[i].second + b.v_[j].second);
                ++i, ++j;
            }
        }
        return out;
    }

    Monomial pow(long long n) const {
        if (n < 0) throw std::invalid_argument("Monomial::pow: negative exponent");
        Monomial out;
        if (n == 0) return out;
        out.v_ = v_;
        for (auto& [k, e] : out.v_) e *= n;
        return out;
    }

    /// Graded degree: sum over factors of exp * deg(var); x variables have
    /// degree 0 (they are ungraded formal markers).
    long long degree(const RingParams& ring) const {
        long long d = 0;
        for (const auto& [k, e] : v_) {
            if (key_family(k) == Family::x) continue;
            d += e * generator_degree(ring, key_index(k));
        }
        return d;
    }

    bool contains_family(Family f) const {
        for (const auto& [k, e] : v_)
            if (key_family(k) == f) return true;
        return false;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        if (v_.empty()) return "1";
        std::ostringstream os;
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i) os << "*";
            os << var_name(v_[i].first);
            if (v_[i].second != 1) os << "^" << v_[i].second;
        }
        return os.str();
    }

private:
    std::vector<std::pair<VarKey, long long>> v_;
};

/// Lexicographic order with the higher-ranked generator dominating:
/// compare exponents from the highest variable downward; first difference
/// decides.  Returns -1, 0, or 1.
inline int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& av = a.factors();
    const auto& bv = b.factors();
    auto ia = av.rbegin();
    auto ib = bv.rbegin();
    while (ia != av.rend() || ib != bv.rend()) {
        if (ia == av.rend()) return -1;
        if (ib == bv.rend()) return 1;
        if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

struct MonomialLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

}  // namespace famod
