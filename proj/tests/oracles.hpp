#pragma once

// Reference computations for the tests, written against plain integer
// arithmetic so they share as little as possible with the library.

#include <random>
#include <vector>

#include "psfactor/poly.hpp"
#include "psfactor/series.hpp"

namespace oracle {

using psf::Integer;
using psf::IntPoly;

inline Integer modp(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Integer pw(const Integer& p, std::size_t e) {
    Integer r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= p;
    return r;
}

inline Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw std::runtime_error("oracle: not invertible");
    return r;
}

/// V with tau_n(V f) = 1, from the linear system sum_i V_i f_{n+j-i} = [j == 0],
/// j < L, solved mod p^N by elimination on the unit diagonal f_n. Returns V_0..V_{N-1}
/// with V_i mod p^(N-i). L is taken large enough that the truncation error
/// (which gains a factor p for every n rows it travels) is invisible.
inline std::vector<Integer> weierstrass_unit_inverse(const IntPoly& f, const Integer& p, std::size_t n, std::size_t N) {
    const std::size_t L = (n + 1) * (N + 2) + N + 2;
    const Integer m = pw(p, N);
    auto fc = [&](long k) -> Integer { return (k >= 0 && static_cast<std::size_t>(k) < f.size()) ? f[static_cast<std::size_t>(k)] : Integer(0); };
    std::vector<std::vector<Integer>> A(L, std::vector<Integer>(L + 1));
    for (std::size_t j = 0; j < L; ++j) {
        for (std::size_t i = 0; i < L; ++i) A[j][i] = modp(fc(static_cast<long>(n + j) - static_cast<long>(i)), m);
        A[j][L] = j == 0 ? 1 : 0;
    }
    for (std::size_t c = 0; c < L; ++c) {
        const Integer inv = inv_mod(A[c][c], m);
        for (std::size_t k = c; k <= L; ++k) A[c][k] = modp(A[c][k] * inv, m);
        for (std::size_t r = 0; r < L; ++r) {
            if (r == c || A[r][c] == 0) continue;
            const Integer t = A[r][c];
            for (std::size_t k = c; k <= L; ++k) A[r][k] = modp(A[r][k] - t * A[c][k], m);
        }
    }
    std::vector<Integer> V(N);
    for (std::size_t i = 0; i < N; ++i) V[i] = modp(A[i][L], pw(p, N - i));
    return V;
}

/// Random polynomial that is p-distinguished of order n, degree n + extra.
inline IntPoly random_distinguished(std::mt19937_64& rng, long p, std::size_t n, std::size_t extra, long bound = 20) {
    auto r = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
    IntPoly f(n + extra + 1);
    for (std::size_t i = 0; i < n; ++i) f[i] = p * r(-bound, bound);
    long u;
    do u = r(-bound, bound);
    while (u % p == 0);
    f[n] = u;
    for (std::size_t i = n + 1; i < f.size(); ++i) f[i] = r(-bound, bound);
    if (extra > 0 && f.back() == 0) f.back() = 1;
    return f;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Integer eval(const IntPoly& f, const Integer& x) {
    Integer r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

} // namespace oracle

namespace oracle {

inline std::size_t val(const Integer& a, const Integer& p) {
    if (a == 0) return static_cast<std::size_t>(-1);
    std::size_t v = 0;
    Integer t = a;
    while (t % p == 0) {
        t /= p;
        ++v;
    }
    return v;
}

inline IntPoly deriv(const IntPoly& f) {
    IntPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Integer(static_cast<unsigned long>(i)));
    return d;
}

/// Does the squarefree f (discriminant valuation vd) have a root in pZ_p? A root
/// mod p^(2vd+1) with v(f') <= vd lifts, and every genuine root gives one. The
/// residues are searched digit by digit, keeping only partial roots.
inline bool has_root_in_max_ideal(const IntPoly& f, const Integer& p, std::size_t vd) {
    const std::size_t k = 2 * vd + 1;
    const IntPoly df = deriv(f);
    std::vector<Integer> level{Integer(0)}; // candidates mod p^j, starting at j = 1 with alpha = 0
    Integer pj = p;
    for (std::size_t j = 1;; ++j) {
        std::vector<Integer> kept;
        for (const auto& a : level)
            if (modp(eval(f, a), pj) == 0) kept.push_back(a);
        if (j == k) {
            for (const auto& a : kept) {
                const Integer d = modp(eval(df, a), pw(p, k));
                if (d != 0 && val(d, p) <= vd) return true;
            }
            return false;
        }
        if (kept.empty()) return false;
        level.clear();
        for (const auto& a : kept)
            for (Integer c = 0; c < p; ++c) level.push_back(a + c * pj);
        pj *= p;
    }
}

} // namespace oracle
