#pragma once

// Truncated power series over Z, and series over Z_p known modulo the
// weighted ideal A^k = (p, X)^k, where coefficient i is known mod p^(k-i).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ring_core.hpp"

namespace psf {

/// f mod X^N with exact integer coefficients; coeffs().size() == N.
class SeriesTrunc {
public:
    SeriesTrunc() = default;
    explicit SeriesTrunc(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {}

    /// Pads or cuts `coeffs` to exactly `order` entries.
    SeriesTrunc(std::vector<Integer> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order, Integer(0));
    }

    static SeriesTrunc zero(std::size_t order) { return SeriesTrunc(std::vector<Integer>(order, Integer(0))); }
    static SeriesTrunc one(std::size_t order) { return constant(1, order); }
    static SeriesTrunc constant(const Integer& c, std::size_t order) {
        auto s = zero(order);
        if (order > 0) s.c_[0] = c;
        return s;
    }
    static SeriesTrunc x(std::size_t order) {
        auto s = zero(order);
        if (order > 1) s.c_[1] = 1;
        return s;
    }

    std::size_t trunc_order() const { return c_.size(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    void set(std::size_t i, Integer v) { c_.at(i) = std::move(v); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
    }

    /// Index of the first nonzero coefficient, if any is visible.
    std::optional<std::size_t> x_order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return i;
        return std::nullopt;
    }

    /// gcd of the visible coefficients (nonnegative).
    Integer content() const {
        Integer g = 0;
        for (const auto& v : c_) g = gcd(g, v);
        return g;
    }

    SeriesTrunc truncated(std::size_t order) const {
        return SeriesTrunc(std::vector<Integer>(c_.begin(), c_.begin() + std::min(order, c_.size())), order);
    }

    /// Divides every coefficient by d (which must divide all of them).
    SeriesTrunc divided_exactly(const Integer& d) const {
        auto out = *this;
        for (auto& v : out.c_) v = exact_div(v, d);
        return out;
    }

    /// f / X^r, losing r digits of truncation.
    SeriesTrunc shifted_down(std::size_t r) const {
        if (r > c_.size()) fail(Errc::InsufficientTruncation, "shift exceeds truncation");
        return SeriesTrunc(std::vector<Integer>(c_.begin() + r, c_.end()));
    }

    friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b) {
        const auto n = std::min(a.trunc_order(), b.trunc_order());
        SeriesTrunc r = zero(n);
        for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) {
        const auto n = std::min(a.trunc_order(), b.trunc_order());
        SeriesTrunc r = zero(n);
        for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
        const auto n = std::min(a.trunc_order(), b.trunc_order());
        SeriesTrunc r = zero(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend SeriesTrunc operator*(const Integer& s, const SeriesTrunc& a) {
        auto r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    friend bool operator==(const SeriesTrunc&, const SeriesTrunc&) = default;

private:
    std::vector<Integer> c_;
};

/// Ascending rendering "2 + 3*X + X^2"; zero terms are skipped.
inline std::string render_poly(const std::vector<Integer>& c, std::string_view var = "X") {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Integer mag = abs(c[i]);
        if (first) {
            if (sgn(c[i]) < 0) os << "-";
        } else {
            os << (sgn(c[i]) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

/// "2 + X + O(X^4)"; the O-term is omitted when `with_order` is false.
inline std::string render(const SeriesTrunc& f, bool with_order = true) {
    std::string s = render_poly(f.coeffs());
    if (with_order) s += " + O(X^" + std::to_string(f.trunc_order()) + ")";
    return s;
}

// ---------------------------------------------------------------------------

/// f mod A^k over Z_p: coefficient i is the least nonnegative residue mod p^(k-i).
class SeriesApprox {
public:
    SeriesApprox(Integer p, std::size_t level, std::vector<Integer> coeffs)
        : p_(std::move(p)), c_(std::move(coeffs)) {
        c_.resize(level, Integer(0));
        canonicalize();
    }

    static SeriesApprox zero(const Integer& p, std::size_t level) { return SeriesApprox(p, level, {}); }
    static SeriesApprox one(const Integer& p, std::size_t level) { return SeriesApprox(p, level, {Integer(1)}); }

    const Integer& prime() const { return p_; }
    std::size_t level() const { return c_.size(); }
    const std::vector<Integer>& values() const { return c_; }
    /// Stored value of coefficient i (0 beyond the level).
    Integer value(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    ResidueElement coeff(std::size_t i) const {
        if (i >= c_.size()) fail(Errc::InsufficientLevel, "coefficient beyond level");
        return ResidueElement(p_, c_.size() - i, c_[i]);
    }

    /// The same series known to a lower level.
    SeriesApprox at_level(std::size_t k) const {
        if (k > level()) fail(Errc::InsufficientLevel, "cannot raise level " + std::to_string(level()) + " to " + std::to_string(k));
        return SeriesApprox(p_, k, std::vector<Integer>(c_.begin(), c_.begin() + k));
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
    }

    friend bool operator==(const SeriesApprox&, const SeriesApprox&) = default;

private:
    void canonicalize() {
        const std::size_t k = c_.size();
        Integer m = 1;
        // walk from the top so the modulus grows by one factor of p per step
        for (std::size_t i = k; i-- > 0;) {
            m *= p_;
            c_[i] = mod_floor(c_[i], m);
        }
    }

    Integer p_;
    std::vector<Integer> c_;
};

inline void require_same_prime(const SeriesApprox& a, const SeriesApprox& b) {
    if (a.prime() != b.prime())
        fail(Errc::PrimeMismatch, "series over p=" + to_string(a.prime()) + " and p=" + to_string(b.prime()));
}

/// f mod A^k.
inline SeriesApprox reduce_to_approx(const SeriesTrunc& f, const Integer& p, std::size_t k) {
    if (f.trunc_order() < k)
        fail(Errc::InsufficientTruncation, "series known mod X^" + std::to_string(f.trunc_order()) +
                                               " cannot be reduced to level " + std::to_string(k));
    return SeriesApprox(p, k, std::vector<Integer>(f.coeffs().begin(), f.coeffs().begin() + k));
}

/// Same, for an integer polynomial given by its coefficients (exact, so any level works).
inline SeriesApprox reduce_poly_to_approx(const std::vector<Integer>& f, const Integer& p, std::size_t k) {
    std::vector<Integer> c(f.begin(), f.begin() + std::min(k, f.size()));
    return SeriesApprox(p, k, std::move(c));
}

inline SeriesApprox approx_add(const SeriesApprox& f, const SeriesApprox& g) {
    require_same_prime(f, g);
    const auto k = std::min(f.level(), g.level());
    std::vector<Integer> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = f.value(i) + g.value(i);
    return SeriesApprox(f.prime(), k, std::move(c));
}

inline SeriesApprox approx_sub(const SeriesApprox& f, const SeriesApprox& g) {
    require_same_prime(f, g);
    const auto k = std::min(f.level(), g.level());
    std::vector<Integer> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = f.value(i) - g.value(i);
    return SeriesApprox(f.prime(), k, std::move(c));
}

inline SeriesApprox approx_neg(const SeriesApprox& f) {
    std::vector<Integer> c(f.level());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -f.value(i);
    return SeriesApprox(f.prime(), f.level(), std::move(c));
}

/// Schoolbook product on the window below min(level f, level g).
inline SeriesApprox approx_mul(const SeriesApprox& f, const SeriesApprox& g) {
    require_same_prime(f, g);
    const auto k = std::min(f.level(), g.level());
    std::vector<Integer> c(k, Integer(0));
    for (std::size_t i = 0; i < k; ++i) {
        const Integer& a = f.values()[i];
        if (a == 0) continue;
        for (std::size_t j = 0; i + j < k; ++j) {
            const Integer& b = g.values()[j];
            if (b != 0) mpz_addmul(c[i + j].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
    }
    return SeriesApprox(f.prime(), k, std::move(c));
}

/// Inverse of a unit series by back-substitution, exact at every level.
inline SeriesApprox approx_invert_unit(const SeriesApprox& f) {
    const auto k = f.level();
    const Integer& p = f.prime();
    if (k == 0) return f;
    if (divides(p, f.value(0)))
        fail(Errc::NotAUnit, "constant term " + to_string(f.value(0)) + " is divisible by " + to_string(p));
    const Integer pk = ipow(p, k);
    const Integer inv0 = mod_inverse(f.value(0), pk);
    std::vector<Integer> g(k, Integer(0));
    g[0] = inv0;
    Integer mod = pk;
    for (std::size_t i = 1; i < k; ++i) {
        mod = exact_div(mod, p); // p^(k-i)
        Integer s = 0;
        for (std::size_t j = 1; j <= i; ++j)
            if (f.value(j) != 0) s += f.value(j) * g[i - j];
        g[i] = mod_floor(-inv0 * s, mod);
    }
    return SeriesApprox(p, k, std::move(g));
}

/// tau_n: f -> sum f_{n+i} X^i. Loses n levels.
inline SeriesApprox tau(std::size_t n, const SeriesApprox& f) {
    if (f.level() < n)
        fail(Errc::InsufficientLevel, "tau_" + std::to_string(n) + " of a level-" + std::to_string(f.level()) + " series");
    std::vector<Integer> c(f.values().begin() + n, f.values().end());
    return SeriesApprox(f.prime(), f.level() - n, std::move(c));
}

/// alpha_n: f -> f - X^n tau_n(f), i.e. the first n coefficients.
inline SeriesApprox alpha(std::size_t n, const SeriesApprox& f) {
    std::vector<Integer> c(f.values().begin(), f.values().begin() + std::min(n, f.level()));
    return SeriesApprox(f.prime(), f.level(), std::move(c));
}

/// X^n * f, keeping the level (coefficients pushed past it are dropped).
inline SeriesApprox shift_up(std::size_t n, const SeriesApprox& f) {
    std::vector<Integer> c(f.level(), Integer(0));
    for (std::size_t i = 0; i + n < f.level(); ++i) c[i + n] = f.value(i);
    return SeriesApprox(f.prime(), f.level(), std::move(c));
}

struct DistinguishedOrder {
    std::optional<std::size_t> order;
    bool distinguished() const { return order.has_value(); }
    friend bool operator==(const DistinguishedOrder&, const DistinguishedOrder&) = default;
};

/// Least n below the level with p not dividing f_n.
inline DistinguishedOrder distinguished_order(const SeriesApprox& f) {
    if (f.level() == 0) fail(Errc::InsufficientLevel, "distinguished order needs level >= 1");
    for (std::size_t i = 0; i < f.level(); ++i)
        if (!divides(f.prime(), f.value(i))) return {i};
    return {std::nullopt};
}

/// Canonical text form: "c0 + c1*X + ... + c_{k-1}*X^{k-1} (mod p, level k)".
inline std::string render(const SeriesApprox& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.level(); ++i) {
        if (i > 0) os << " + ";
        os << f.value(i);
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    if (f.level() == 0) os << "0";
    os << " (mod " << f.prime() << ", level " << f.level() << ")";
    return os.str();
}

} // namespace psf
