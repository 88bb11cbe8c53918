#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace famod {

/// Arithmetic context for the coefficient field K = Q[pi]/(pi^e - u*p).
///
/// p is the residue characteristic, e the ramification degree, f the residue
/// degree, u an integer unit (coprime to p).  Derived data: q = p^f is the
/// residue field size and d = e*f the total degree over Q_p.  Every degree
/// in the graded world is expressed through q: deg v_i = deg V_i = deg t_i
/// = 2(q^i - 1).
struct RingParams {
    long long p = 0;
    long long e = 1;
    long long f = 1;
    long long u = 1;
    long long q = 0;  // p^f, derived
    long long d = 0;  // e*f, derived

    friend bool operator==(const RingParams&, const RingParams&) = default;
};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long k = 3; k * k <= n; k += 2)
        if (n % k == 0) return false;
    return true;
}

inline RingParams make_ring(long long p, long long e, long long f, long long u = 1) {
    if (!is_prime(p))
        throw std::invalid_argument("make_ring: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("make_ring: ramification degree e must be >= 1");
    if (f < 1) throw std::invalid_argument("make_ring: residue degree f must be >= 1");
    if (u == 0 || u % p == 0)
        throw std::invalid_argument("make_ring: u must be a unit (not divisible by p)");
    RingParams r;
    r.p = p;
    r.e = e;
    r.f = f;
    r.u = u;
    r.q = 1;
    for (long long i = 0; i < f; ++i) {
        if (r.q > (1LL << 40) / p)
            throw std::invalid_argument("make_ring: q = p^f too large");
        r.q *= p;
    }
    r.d = e * f;
    return r;
}

/// q^k as a plain integer exponent; overflow-checked.
inline long long qpow(const RingParams& r, long long k) {
    if (k < 0) throw std::invalid_argument("qpow: negative exponent");
    long long out = 1;
    for (long long i = 0; i < k; ++i) {
        if (out > (1LL << 56) / r.q) throw std::overflow_error("qpow: exponent overflow");
        out *= r.q;
    }
    return out;
}

/// Grading of the generators v_i / V_i / t_i.
inline long long generator_degree(const RingParams& r, long long i) {
    return 2 * (qpow(r, i) - 1);
}

inline void require_same_ring(const RingParams& a, const RingParams& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": mismatched ring parameters");
}

}  // namespace famod
