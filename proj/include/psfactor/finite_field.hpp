#pragma once

// Polynomials over F_p (p prime, possibly large): gcd, powering, roots and
// distinct/equal-degree factorization of squarefree polynomials.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "poly.hpp"
#include "ring_core.hpp"

namespace psf::fp {

using Poly = IntPoly; // coefficients in [0, p), trimmed

inline Poly norm(const Poly& f, const Integer& p) { return poly::reduce(f, p); }

inline long deg(const Poly& f) { return static_cast<long>(f.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, const Integer& p) { return norm(poly::add(a, b), p); }
inline Poly sub(const Poly& a, const Poly& b, const Integer& p) { return norm(poly::sub(a, b), p); }
inline Poly mul(const Poly& a, const Poly& b, const Integer& p) { return norm(poly::mul(a, b), p); }

inline Poly monic(const Poly& f, const Integer& p) {
    if (f.empty()) return f;
    const Integer inv = mod_inverse(f.back(), p);
    return norm(poly::scale(f, inv), p);
}

inline poly::DivMod divmod(const Poly& a, const Poly& b, const Integer& p) {
    if (b.empty()) fail(Errc::Internal, "division by zero polynomial over F_p");
    const Integer inv = mod_inverse(b.back(), p);
    Poly r = a;
    const long db = deg(b);
    if (deg(r) < db) return {{}, r};
    Poly q(static_cast<std::size_t>(deg(r) - db + 1), Integer(0));
    for (long i = deg(r); i >= db; --i) {
        const Integer c = mod_floor(r[static_cast<std::size_t>(i)] * inv, p);
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j <= db; ++j) {
            auto& t = r[static_cast<std::size_t>(i - db + j)];
            t = mod_floor(t - c * b[static_cast<std::size_t>(j)], p);
        }
    }
    poly::trim(r);
    poly::trim(q);
    return {q, r};
}

inline Poly rem(const Poly& a, const Poly& b, const Integer& p) { return divmod(a, b, p).remainder; }

/// Monic gcd (zero if both are zero).
inline Poly gcd(Poly a, Poly b, const Integer& p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline Poly derivative(const Poly& f, const Integer& p) { return norm(poly::derivative(f), p); }

/// base^e mod m.
inline Poly powmod(const Poly& base, Integer e, const Poly& m, const Integer& p) {
    Poly result{Integer(1)};
    result = rem(result, m, p);
    Poly b = rem(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, b, p), m, p);
        e >>= 1;
        if (e > 0) b = rem(mul(b, b, p), m, p);
    }
    return result;
}

inline bool is_squarefree(const Poly& f, const Integer& p) {
    if (deg(f) <= 0) return true;
    const Poly d = derivative(f, p);
    if (d.empty()) return false;
    return deg(gcd(f, d, p)) == 0;
}

namespace detail {

inline Poly x_poly() { return Poly{Integer(0), Integer(1)}; }

/// Deterministic pseudo-random polynomial of degree < d.
inline Poly random_poly(std::size_t d, const Integer& p, gmp_randclass& rng) {
    Poly r(d);
    for (auto& c : r) c = rng.get_z_range(p);
    poly::trim(r);
    return r;
}

/// Splits a squarefree monic f whose irreducible factors all have degree d.
inline void equal_degree_split(const Poly& f, std::size_t d, const Integer& p, gmp_randclass& rng, std::vector<Poly>& out) {
    const long n = deg(f);
    if (n <= static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Poly a = random_poly(static_cast<std::size_t>(n), p, rng);
        if (deg(a) <= 0) continue;
        Poly b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1)) mod f
            Poly t = rem(a, f, p), s = t;
            for (std::size_t i = 1; i < d; ++i) {
                t = rem(mul(t, t, p), f, p);
                s = add(s, t, p);
            }
            b = s;
        } else {
            const Integer e = (ipow(p, d) - 1) / 2;
            b = sub(powmod(a, e, f, p), Poly{Integer(1)}, p);
        }
        Poly g = gcd(f, b, p);
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(divmod(f, g, p).quotient, d, p, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Monic irreducible factors of a squarefree polynomial, sorted by (degree, coefficients).
inline std::vector<Poly> factor_squarefree(const Poly& f_in, const Integer& p) {
    Poly f = monic(norm(f_in, p), p);
    if (deg(f) < 0) fail(Errc::ZeroInput, "factoring zero over F_p");
    if (!is_squarefree(f, p)) fail(Errc::PreconditionViolation, "polynomial over F_p is not squarefree");
    std::vector<Poly> out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    const Poly x = detail::x_poly();
    Poly h = x; // X^(p^d) mod f
    for (std::size_t d = 1; 2 * static_cast<long>(d) <= deg(f); ++d) {
        h = powmod(h, p, f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            detail::equal_degree_split(g, d, p, rng, out);
            f = divmod(f, g, p).quotient;
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Irreducible factors with multiplicity, sorted as in factor_squarefree.
inline std::vector<std::pair<Poly, std::size_t>> factor(const Poly& f_in, const Integer& p) {
    Poly f = monic(norm(f_in, p), p);
    if (deg(f) < 0) fail(Errc::ZeroInput, "factoring zero over F_p");
    std::vector<std::pair<Poly, std::size_t>> out;
    std::size_t scale = 1;
    while (deg(f) > 0) {
        const Poly d = derivative(f, p);
        if (d.empty()) {
            // f = h(X^p) = h(X)^p over the prime field
            const std::size_t step = static_cast<std::size_t>(p.get_ui());
            Poly h;
            for (std::size_t i = 0; i < f.size(); i += step) h.push_back(f[i]);
            f = h;
            scale *= step;
            continue;
        }
        const Poly s = divmod(f, gcd(f, d, p), p).quotient; // factors of multiplicity prime to p
        for (const auto& phi : factor_squarefree(s, p)) {
            std::size_t m = 0;
            for (;;) {
                auto dm = divmod(f, phi, p);
                if (!dm.remainder.empty()) break;
                f = dm.quotient;
                ++m;
            }
            out.emplace_back(phi, m * scale);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    // the same irreducible can surface at two Frobenius scales
    std::vector<std::pair<Poly, std::size_t>> merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(std::move(e));
    }
    return merged;
}

/// s*a + t*b = 1 over F_p with deg s < deg b, deg t < deg a; NotCoprime otherwise.
inline std::pair<Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const Integer& p) {
    Poly r0 = norm(a, p), r1 = norm(b, p);
    Poly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
    while (!r1.empty()) {
        auto dm = divmod(r0, r1, p);
        Poly r2 = dm.remainder;
        Poly s2 = sub(s0, mul(dm.quotient, s1, p), p);
        Poly t2 = sub(t0, mul(dm.quotient, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (deg(r0) != 0) fail(Errc::NotCoprime, "polynomials share a factor mod " + to_string(p));
    const Integer inv = mod_inverse(r0[0], p);
    return {norm(poly::scale(s0, inv), p), norm(poly::scale(t0, inv), p)};
}

/// Distinct roots in F_p, ascending.
inline std::vector<Integer> roots(const Poly& f_in, const Integer& p) {
    Poly f = monic(norm(f_in, p), p);
    if (deg(f) < 0) fail(Errc::ZeroInput, "roots of zero over F_p");
    std::vector<Integer> out;
    if (deg(f) == 0) return out;
    // the part of f splitting into distinct linear factors
    Poly g = gcd(f, sub(powmod(detail::x_poly(), p, f, p), detail::x_poly(), p), p);
    if (deg(g) <= 0) return out;
    std::vector<Poly> lin;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    detail::equal_degree_split(g, 1, p, rng, lin);
    for (const auto& l : lin) out.push_back(mod_floor(-l[0], p));
    std::sort(out.begin(), out.end());
    return out;
}

/// Multiplicity of the root r of f over F_p.
inline std::size_t root_multiplicity(Poly f, const Integer& r, const Integer& p) {
    f = norm(f, p);
    const Poly lin = norm(Poly{-r, Integer(1)}, p);
    std::size_t m = 0;
    while (!f.empty()) {
        auto dm = divmod(f, lin, p);
        if (!dm.remainder.empty()) break;
        f = dm.quotient;
        ++m;
    }
    return m;
}

} // namespace psf::fp
