#pragma once

// Dense univariate polynomials: plain integer coefficient vectors (ascending)
// and PadicPoly, a polynomial over Z_p known to a uniform p-adic precision.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ring_core.hpp"
#include "series.hpp"

namespace psf {

using IntPoly = std::vector<Integer>;

namespace poly {

inline void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline IntPoly trimmed(IntPoly f) {
    trim(f);
    return f;
}

/// Degree of a trimmed polynomial; -1 for zero.
inline long degree(const IntPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<long>(i);
    return -1;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trimmed(std::move(r));
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trimmed(std::move(r));
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return trimmed(std::move(r));
}

inline IntPoly scale(const IntPoly& a, const Integer& s) {
    IntPoly r = a;
    for (auto& v : r) v *= s;
    return trimmed(std::move(r));
}

inline IntPoly derivative(const IntPoly& f) {
    if (f.size() <= 1) return {};
    IntPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    return trimmed(std::move(d));
}

inline Integer eval(const IntPoly& f, const Integer& x) {
    Integer r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

/// f(x) mod m, Horner with reductions.
inline Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& m) {
    Integer r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = mod_floor(r * x + f[i], m);
    return r;
}

inline IntPoly reduce(const IntPoly& f, const Integer& m) {
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], m);
    return trimmed(std::move(r));
}

/// f(a + b*Y) as a polynomial in Y.
inline IntPoly taylor_shift(const IntPoly& f, const Integer& a, const Integer& b) {
    // Horner in the composed variable: r = r*(a + bY) + f_i
    IntPoly r;
    for (std::size_t i = f.size(); i-- > 0;) {
        IntPoly next(r.size() + 1, Integer(0));
        for (std::size_t j = 0; j < r.size(); ++j) {
            next[j] += r[j] * a;
            next[j + 1] += r[j] * b;
        }
        next[0] += f[i];
        r = std::move(next);
    }
    return trimmed(std::move(r));
}

/// Division by a monic polynomial: f = q*g + r with deg r < deg g.
struct DivMod {
    IntPoly quotient, remainder;
};

inline DivMod divmod_monic(const IntPoly& f_in, const IntPoly& g) {
    const long dg = degree(g);
    if (dg < 0 || g[static_cast<std::size_t>(dg)] != 1) fail(Errc::PreconditionViolation, "divisor must be monic");
    IntPoly r = trimmed(f_in);
    const long df = degree(r);
    if (df < dg) return {{}, r};
    IntPoly q(static_cast<std::size_t>(df - dg + 1), Integer(0));
    for (long i = df; i >= dg; --i) {
        const Integer c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - dg)] = c;
        for (long j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= c * g[static_cast<std::size_t>(j)];
    }
    trim(r);
    trim(q);
    return {q, r};
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Resultant via the Sylvester matrix.
inline Integer resultant(const IntPoly& f_in, const IntPoly& g_in) {
    const IntPoly f = trimmed(f_in), g = trimmed(g_in);
    const long m = degree(f), n = degree(g);
    if (m < 0 || n < 0) return 0;
    if (m == 0) return ipow(f[0], static_cast<std::size_t>(n));
    if (n == 0) return ipow(g[0], static_cast<std::size_t>(m));
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) s[r][r + m - j] = f[j];
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) s[n + r][r + n - j] = g[j];
    return bareiss_det(std::move(s));
}

/// Discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Integer discriminant(const IntPoly& f_in) {
    const IntPoly f = trimmed(f_in);
    const long n = degree(f);
    if (n < 1) fail(Errc::PreconditionViolation, "discriminant of a constant");
    if (n == 1) return 1;
    Integer r = resultant(f, derivative(f));
    r = exact_div(r, f.back());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

} // namespace poly

inline constexpr std::size_t kExactPrecision = std::numeric_limits<std::size_t>::max();

/// p-adic valuation of a coefficient as far as it is known.
struct KnownValuation {
    std::size_t value;
    bool certain; // false: the coefficient is 0 mod p^value and only v >= value is known
};

/// A polynomial over Z_p whose coefficients are known modulo p^precision
/// (or exactly). Coefficients are least nonnegative residues when inexact.
class PadicPoly {
public:
    /// Trailing zero residues are dropped unless `declared_degree` keeps them.
    PadicPoly(Integer p, std::size_t precision, IntPoly coeffs, long declared_degree = -1)
        : p_(std::move(p)), k_(precision), c_(std::move(coeffs)) {
        if (k_ != kExactPrecision) {
            const Integer m = ipow(p_, k_);
            for (auto& v : c_) v = mod_floor(v, m);
        }
        if (declared_degree >= 0)
            c_.resize(static_cast<std::size_t>(declared_degree) + 1, Integer(0));
        else
            poly::trim(c_);
    }

    static PadicPoly exact(Integer p, IntPoly coeffs) { return PadicPoly(std::move(p), kExactPrecision, std::move(coeffs)); }

    const Integer& prime() const { return p_; }
    std::size_t precision() const { return k_; }
    bool is_exact() const { return k_ == kExactPrecision; }
    const IntPoly& coeffs() const { return c_; }
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    KnownValuation coeff_valuation(std::size_t i) const {
        const Integer c = (*this)[i];
        if (c == 0) return {k_, false};
        const std::size_t v = valuation_unchecked(c, p_);
        if (!is_exact() && v >= k_) return {k_, false};
        return {v, true};
    }

    PadicPoly at_precision(std::size_t k) const {
        if (k > k_) fail(Errc::InsufficientLevel, "cannot raise p-adic precision");
        return PadicPoly(p_, k, c_, degree());
    }

    ResidueElement coeff(std::size_t i) const {
        if (is_exact()) fail(Errc::PreconditionViolation, "exact coefficient has no residue precision");
        return ResidueElement(p_, k_, (*this)[i]);
    }

    friend PadicPoly operator*(const PadicPoly& a, const PadicPoly& b) {
        if (a.p_ != b.p_) fail(Errc::PrimeMismatch, "polynomials over different primes");
        return PadicPoly(a.p_, std::min(a.k_, b.k_), poly::mul(a.c_, b.c_), a.degree() + b.degree());
    }

    /// Equal as elements of (Z/p^k)[X] at the lower of the two precisions.
    bool congruent(const PadicPoly& o) const {
        return congruent(o, std::min(k_, o.k_));
    }
    bool congruent(const PadicPoly& o, std::size_t k) const {
        if (p_ != o.p_) return false;
        if (k == kExactPrecision) return poly::trimmed(c_) == poly::trimmed(o.c_);
        const Integer m = ipow(p_, k);
        return poly::reduce(c_, m) == poly::reduce(o.c_, m);
    }

    friend bool operator==(const PadicPoly&, const PadicPoly&) = default;

private:
    Integer p_;
    std::size_t k_;
    IntPoly c_;
};

inline std::string render(const PadicPoly& f) {
    std::string s = render_poly(f.coeffs());
    if (f.is_exact()) return s + " (exact, p=" + to_string(f.prime()) + ")";
    return s + " (mod " + to_string(f.prime()) + "^" + std::to_string(f.precision()) + ")";
}

} // namespace psf
