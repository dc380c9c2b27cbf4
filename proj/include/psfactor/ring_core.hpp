#pragma once

// Integer arithmetic over Z, residues mod p^k and integer factorization.
//
// Integers are GMP's mpz_class. Everything here is a pure function of its
// arguments; the only shared state is a lazily built (immutable afterwards)
// table of small primes used for trial division.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace psf {

using Integer = mpz_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// A natural number or infinity. Used for omega(0) and v_p(0).
class ExtNat {
public:
    static constexpr ExtNat infinite() { return ExtNat(true, 0); }
    static constexpr ExtNat finite(std::size_t v) { return ExtNat(false, v); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    std::size_t value() const {
        if (infinite_) fail(Errc::PreconditionViolation, "value() of infinite ExtNat");
        return value_;
    }

    friend constexpr bool operator==(const ExtNat&, const ExtNat&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtNat& v) {
        return v.infinite_ ? (os << "inf") : (os << v.value_);
    }

private:
    constexpr ExtNat(bool inf, std::size_t v) : infinite_(inf), value_(v) {}
    bool infinite_;
    std::size_t value_;
};

using OmegaValue = ExtNat;

// ---------------------------------------------------------------------------
// Small helpers

inline Integer ipow(const Integer& base, std::size_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; the caller guarantees d | n.
inline Integer exact_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Extended gcd: returns (g, x, y) with g = x*a + y*b and g >= 0.
struct Bezout {
    Integer g, x, y;
};

inline Bezout ext_gcd(const Integer& a, const Integer& b) {
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Inverse of a modulo m, or NotAUnit.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m == 1) return 0;
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(Errc::NotAUnit, to_string(a) + " is not invertible mod " + to_string(m));
    return r;
}

inline Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// Primality and factorization

namespace detail {

inline constexpr std::uint32_t kTrialBound = 1'000'000;

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// One Miller-Rabin round; n odd > 3, n - 1 = d * 2^s.
inline bool mr_round(const Integer& n, const Integer& a, const Integer& d, std::size_t s) {
    const Integer nm1 = n - 1;
    Integer x = powmod(a, d, n);
    if (x == 1 || x == nm1) return true;
    for (std::size_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace detail

/// Miller-Rabin. Deterministic below 3.4e14 (bases 2..17); above that 40
/// rounds with bases drawn from a fixed-seed generator, so results are
/// reproducible.
inline bool is_probable_prime(const Integer& n_in) {
    const Integer n = abs(n_in);
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (divides(Integer(p), n)) return false;
    }
    Integer d = n - 1;
    std::size_t s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    static const Integer kDeterministicBound("341550071728321");
    if (n < kDeterministicBound) {
        for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u})
            if (!detail::mr_round(n, Integer(a), d, s)) return false;
        return true;
    }
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eed);
    const Integer span = n - 3;
    for (int round = 0; round < 40; ++round) {
        Integer a = rng.get_z_range(span) + 2;
        if (!detail::mr_round(n, a, d, s)) return false;
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
inline Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        const std::size_t m = 128;
        std::size_t r = 1;
        auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = step(y);
            std::size_t k = 0;
            do {
                ys = y;
                const std::size_t lim = std::min(m, r - k);
                for (std::size_t i = 0; i < lim; ++i) {
                    y = step(y);
                    q = q * abs(Integer(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split_composite(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    split_composite(d, out);
    split_composite(exact_div(n, d), out);
}

} // namespace detail

struct PrimePower {
    Integer prime;
    std::size_t multiplicity;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// unit * prod(prime^multiplicity); primes ascending and pairwise distinct.
struct IntFactorization {
    int unit = 1;
    std::vector<PrimePower> primes;

    Integer value() const {
        Integer v = unit;
        for (const auto& pp : primes) v *= ipow(pp.prime, pp.multiplicity);
        return v;
    }
    friend bool operator==(const IntFactorization&, const IntFactorization&) = default;
};

/// Trial division to 10^6, then Pollard-Brent rho with Miller-Rabin.
inline IntFactorization factor_integer(const Integer& n) {
    if (n == 0) fail(Errc::ZeroInput, "cannot factor 0");
    IntFactorization out;
    out.unit = sgn(n) < 0 ? -1 : 1;
    Integer m = abs(n);
    std::vector<Integer> found;
    for (std::uint32_t p : detail::small_primes()) {
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            found.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1) detail::split_composite(m, found);
    std::sort(found.begin(), found.end());
    for (const auto& p : found) {
        if (!out.primes.empty() && out.primes.back().prime == p)
            ++out.primes.back().multiplicity;
        else
            out.primes.push_back({p, 1});
    }
    return out;
}

/// Number of distinct primes dividing n; infinite for n = 0.
inline OmegaValue omega(const Integer& n) {
    if (n == 0) return OmegaValue::infinite();
    return OmegaValue::finite(factor_integer(n).primes.size());
}

/// Largest e with p^e | n, without a primality check.
inline std::size_t valuation_unchecked(const Integer& n, const Integer& p) {
    if (n == 0) fail(Errc::ZeroInput, "valuation of 0 is infinite");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline ExtNat valuation(const Integer& n, const Integer& p) {
    if (!is_probable_prime(p)) fail(Errc::NotPrime, to_string(p) + " is not prime");
    if (n == 0) return ExtNat::infinite();
    return ExtNat::finite(valuation_unchecked(n, p));
}

/// The canonical associate of n in Z is |n|; this is its unit.
inline int unit_part(const Integer& n) { return sgn(n) < 0 ? -1 : 1; }

// ---------------------------------------------------------------------------
// Residues mod p^k

/// An element of Z_p / p^k Z_p, stored as its least nonnegative representative.
class ResidueElement {
public:
    ResidueElement(Integer p, std::size_t precision, const Integer& value)
        : p_(std::move(p)), k_(precision), value_(mod_floor(value, ipow(p_, precision))) {}

    static ResidueElement reduce(const Integer& a, const Integer& p, std::size_t k) {
        return ResidueElement(p, k, a);
    }

    const Integer& prime() const { return p_; }
    std::size_t precision() const { return k_; }
    const Integer& value() const { return value_; }
    Integer modulus() const { return ipow(p_, k_); }

    bool is_unit() const { return k_ == 0 || !divides(p_, value_); }
    bool is_zero() const { return value_ == 0; }

    ResidueElement at_precision(std::size_t k) const {
        if (k > k_) fail(Errc::InsufficientLevel, "cannot raise residue precision");
        return ResidueElement(p_, k, value_);
    }

    friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
        check_same(a, b);
        return ResidueElement(a.p_, std::min(a.k_, b.k_), a.value_ + b.value_);
    }
    friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
        check_same(a, b);
        return ResidueElement(a.p_, std::min(a.k_, b.k_), a.value_ - b.value_);
    }
    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
        check_same(a, b);
        return ResidueElement(a.p_, std::min(a.k_, b.k_), a.value_ * b.value_);
    }
    ResidueElement operator-() const { return ResidueElement(p_, k_, -value_); }

    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ResidueElement& r) {
        return os << r.value_ << " (mod " << r.p_ << "^" << r.k_ << ")";
    }

private:
    static void check_same(const ResidueElement& a, const ResidueElement& b) {
        if (a.p_ != b.p_) fail(Errc::PrimeMismatch, "residues over different primes");
    }

    Integer p_;
    std::size_t k_;
    Integer value_;
};

inline ResidueElement residue_invert(const ResidueElement& a) {
    if (!a.is_unit()) fail(Errc::NotAUnit, to_string(a.value()) + " is divisible by " + to_string(a.prime()));
    if (a.precision() == 0) return a;
    return ResidueElement(a.prime(), a.precision(), mod_inverse(a.value(), a.modulus()));
}

// ---------------------------------------------------------------------------
// The effective-PID surface the algorithms rely on. Only Z is instantiated.

template <class R>
concept EffectivePid = requires(const typename R::element& a, const typename R::element& b) {
    typename R::element;
    { R::factor(a) };
    { R::valuation(a, b) } -> std::same_as<ExtNat>;
    { R::canonical_residue(a, b, std::size_t{}) } -> std::same_as<typename R::element>;
    { R::is_unit(a) } -> std::same_as<bool>;
};

struct IntegerRing {
    using element = Integer;
    static IntFactorization factor(const Integer& a) { return factor_integer(a); }
    static ExtNat valuation(const Integer& a, const Integer& p) { return psf::valuation(a, p); }
    /// Representatives of Z / p^i are [0, p^i).
    static Integer canonical_residue(const Integer& a, const Integer& p, std::size_t i) {
        return mod_floor(a, ipow(p, i));
    }
    static bool is_unit(const Integer& a) { return abs(a) == 1; }
};

static_assert(EffectivePid<IntegerRing>);

} // namespace psf
