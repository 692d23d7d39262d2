#pragma once

// word-size prime field helpers for the modular gcd and the degree probe

#include <cstdint>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 r = a + b;
    return r >= p ? r - p : r;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p);
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n);
// k-th prime below 2^62 counting down, cached
u64 big_prime(std::size_t k);
bool sqrt_mod(u64 a, u64 p, u64& r);

// image of q mod p; false when p divides the denominator
bool rat_mod(const Rational& q, u64 p, u64& out);
// image of a + b*sqrt(d) with sqrt(d) -> s
bool scalar_mod(const Scalar& x, u64 p, u64 s, u64& out);

using ModPoly = std::vector<u64>;  // low to high, trimmed
void mp_trim(ModPoly& a);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p);
void mp_divrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q, ModPoly& r);
ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p);  // monic
ModPoly mp_monic(const ModPoly& a, u64 p);
u64 mp_eval(const ModPoly& a, u64 x, u64 p);
// values at nodes -> coefficients, degree < nodes.size()
ModPoly mp_interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out);

}  // namespace cremona::detail
