#pragma once

// Pipelines over Z[[X]]: coprime splitting of the constant term, lifting of
// p-adic factors to integer series, finite-precision prime factorization and
// the irreducibility deciders.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic_poly.hpp"
#include "ring_core.hpp"
#include "series.hpp"
#include "weierstrass.hpp"

namespace psf {

// ---------------------------------------------------------------------------
// Coprime splitting

struct CoprimeSplit {
    std::vector<SeriesTrunc> parts; // a_i + b_i g, truncated
    std::vector<Integer> a, b;
    SeriesTrunc g;

    SeriesTrunc product() const {
        SeriesTrunc r = SeriesTrunc::one(g.trunc_order());
        for (const auto& p : parts) r = r * p;
        return r;
    }
};

namespace detail {

/// Unique g with g_0 = 0 and sum_m c_m g^m = f, given c_0 = f_0 and c_1 = 1.
inline SeriesTrunc solve_power_equation(const SeriesTrunc& f, const std::vector<Integer>& c) {
    const std::size_t N = f.trunc_order();
    const std::size_t deg = c.size() - 1;
    std::vector<Integer> g(N, Integer(0));
    // pw[m][i] = coefficient i of g^m, for m >= 2
    std::vector<std::vector<Integer>> pw(deg + 1, std::vector<Integer>(N, Integer(0)));
    for (std::size_t i = 1; i < N; ++i) {
        Integer rhs = f[i];
        for (std::size_t m = 2; m <= deg; ++m) {
            const auto& prev = (m == 2) ? g : pw[m - 1];
            Integer s = 0;
            for (std::size_t j = 1; j + 1 <= i; ++j)
                if (g[j] != 0 && prev[i - j] != 0) s += g[j] * prev[i - j];
            pw[m][i] = s;
            if (c[m] != 0) rhs -= c[m] * s;
        }
        g[i] = rhs;
    }
    return SeriesTrunc(std::move(g));
}

} // namespace detail

/// f = (a + s g)(b + r g) with g in X Z[[X]].
inline CoprimeSplit split_two(const SeriesTrunc& f, const Integer& a, const Integer& b, const Integer& r, const Integer& s) {
    if (r * a + s * b != 1) fail(Errc::BadBezout, "r*a + s*b != 1");
    if (f.trunc_order() == 0 || f[0] != a * b) fail(Errc::BadSplit, "constant term is not a*b");
    const std::size_t N = f.trunc_order();
    std::vector<Integer> g(N, Integer(0));
    const Integer rs = r * s;
    for (std::size_t n = 1; n < N; ++n) {
        Integer acc = 0;
        for (std::size_t i = 1; i < n; ++i) acc += g[i] * g[n - i];
        g[n] = f[n] - rs * acc;
    }
    SeriesTrunc G(std::move(g));
    CoprimeSplit out;
    out.g = G;
    out.a = {a, b};
    out.b = {s, r};
    out.parts = {SeriesTrunc::constant(a, N) + s * G, SeriesTrunc::constant(b, N) + r * G};
    return out;
}

/// b with sum_i b_i prod_{j != i} a_j = 1 for pairwise coprime a.
inline std::vector<Integer> partition_of_unity(const std::vector<Integer>& a) {
    const std::size_t k = a.size();
    if (k == 0) fail(Errc::PreconditionViolation, "empty partition");
    if (k == 1) {
        if (a[0] == 0) fail(Errc::BadPartition, "single zero part");
        return {Integer(1)};
    }
    std::vector<Integer> M(k, Integer(1));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) M[i] *= a[j];
    std::vector<Integer> b(k, Integer(0));
    b[0] = 1;
    Integer g = M[0];
    for (std::size_t i = 1; i < k; ++i) {
        const auto bz = ext_gcd(g, M[i]);
        for (std::size_t j = 0; j < i; ++j) b[j] *= bz.x;
        b[i] = bz.y;
        g = bz.g;
    }
    if (g != 1 && g != -1) fail(Errc::NotPairwiseCoprime, "parts are not pairwise coprime");
    if (g == -1)
        for (auto& v : b) v = -v;
    return b;
}

/// f = prod_i (a_i + b_i g) with g in X Z[[X]].
inline CoprimeSplit split_multi(const SeriesTrunc& f, const std::vector<Integer>& a, const std::vector<Integer>& b) {
    const std::size_t k = a.size();
    if (k == 0 || b.size() != k) fail(Errc::BadPartition, "need matching, nonempty a and b");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (abs(gcd(a[i], a[j])) != 1) fail(Errc::NotPairwiseCoprime, "a_" + std::to_string(i + 1) + " and a_" + std::to_string(j + 1) + " share a factor");
    Integer prod = 1, unity = 0;
    for (std::size_t i = 0; i < k; ++i) {
        prod *= a[i];
        Integer m = b[i];
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) m *= a[j];
        unity += m;
    }
    if (unity != 1) fail(Errc::BadPartition, "sum_i b_i prod_{j!=i} a_j != 1");
    if (f.trunc_order() == 0 || f[0] != prod) fail(Errc::BadSplit, "constant term is not the product of the parts");
    // coefficients of prod_i (a_i + b_i Y)
    std::vector<Integer> c{Integer(1)};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Integer> next(c.size() + 1, Integer(0));
        for (std::size_t m = 0; m < c.size(); ++m) {
            next[m] += c[m] * a[i];
            next[m + 1] += c[m] * b[i];
        }
        c = std::move(next);
    }
    const std::size_t N = f.trunc_order();
    CoprimeSplit out;
    out.g = detail::solve_power_equation(f, c);
    out.a = a;
    out.b = b;
    for (std::size_t i = 0; i < k; ++i) out.parts.push_back(SeriesTrunc::constant(a[i], N) + b[i] * out.g);
    return out;
}

/// Splits f along the prime-power decomposition of f_0 (sign carried by the first part).
inline CoprimeSplit split_by_constant(const SeriesTrunc& f) {
    if (f.trunc_order() == 0 || f[0] == 0) fail(Errc::ZeroConstantTerm, "constant term is 0");
    const auto fac = factor_integer(f[0]);
    std::vector<Integer> a;
    for (const auto& pp : fac.primes) a.push_back(ipow(pp.prime, pp.multiplicity));
    if (a.empty()) a.push_back(1);
    a[0] *= fac.unit;
    return split_multi(f, a, partition_of_unity(a));
}

// ---------------------------------------------------------------------------
// Lifting a factor to Z[[X]]

struct LiftResult {
    SeriesTrunc g;                 // mod X^N, g_0 = d
    std::vector<ResidueElement> h; // h_i mod f_0^(N-1-i), i < N-1
};

namespace detail {

/// Core recursion over coefficient representatives known mod p^precision.
inline LiftResult lift_core(const IntPoly& f, std::size_t precision, const Integer& p, const Integer& d, std::size_t N) {
    if (N == 0) fail(Errc::PreconditionViolation, "N must be positive");
    const Integer f0 = f.empty() ? Integer(0) : f[0];
    if (f0 == 0) fail(Errc::ZeroConstantTerm, "f_0 = 0");
    const std::size_t e = valuation_unchecked(f0, p);
    if (precision != kExactPrecision && e >= precision) throw PrecisionError("constant term vanishes at the stored precision", 1);
    if (e == 0) fail(Errc::PreconditionViolation, to_string(p) + " does not divide f_0");
    if (d == 0 || valuation_unchecked(d, p) < e) fail(Errc::NotInIdeal, to_string(d) + " is not in f_0 Z_(" + to_string(p) + ")");
    if (precision != kExactPrecision && precision < e * N)
        throw PrecisionError("lifting to X^" + std::to_string(N) + " needs digits mod p^" + std::to_string(e * N), e * N - precision);

    auto coeff = [&](std::size_t i) { return i < f.size() ? f[i] : Integer(0); };
    const Integer pe = ipow(p, e);
    const Integer w = exact_div(f0, pe);
    std::vector<Integer> g(N, Integer(0));
    g[0] = d;
    std::vector<ResidueElement> h;
    if (N == 1) return {SeriesTrunc(std::move(g)), h};
    const Integer top = ipow(p, e * (N - 1));
    const Integer winv = mod_inverse(w, top);
    std::vector<Integer> hv;
    hv.push_back(mod_floor(exact_div(d, pe) * winv, top));
    h.emplace_back(p, e * (N - 1), hv[0]);
    for (std::size_t n = 1; n < N; ++n) {
        Integer sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += hv[i] * coeff(n - i);
        g[n] = mod_floor(sum, pe);
        if (n + 1 < N) {
            const std::size_t k = e * (N - 1 - n);
            const Integer mk = ipow(p, k);
            hv.push_back(mod_floor(exact_div(g[n] - sum, pe) * winv, mk));
            h.emplace_back(p, k, hv.back());
        }
    }
    return {SeriesTrunc(std::move(g)), std::move(h)};
}

} // namespace detail

/// Integer series g mod X^N with g_0 = d and g = h f for some h over Z_(p).
inline LiftResult lift_factor(const SeriesTrunc& f, const Integer& p, const Integer& d, std::size_t N) {
    if (!is_probable_prime(p)) fail(Errc::NotPrime, to_string(p) + " is not prime");
    if (f.trunc_order() < N) fail(Errc::InsufficientTruncation, "series known mod X^" + std::to_string(f.trunc_order()));
    return detail::lift_core(f.coeffs(), kExactPrecision, p, d, N);
}

/// The same for a p-adic polynomial factor.
inline LiftResult lift_factor(const PadicPoly& f, const Integer& d, std::size_t N) {
    return detail::lift_core(f.coeffs(), f.precision(), f.prime(), d, N);
}

// ---------------------------------------------------------------------------
// Input model and options

/// What the caller vouches for when f is a truncation of a genuine power series.
struct SeriesAssertions {
    bool polynomial = true;  // f is exactly the polynomial given; coefficients beyond are 0
    bool content = false;    // the visible content is the content of the series
    bool order = false;      // the visible X-order is the order of the series

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        if (polynomial) return out;
        if (content) out.push_back("content");
        if (order) out.push_back("order");
        return out;
    }
};

inline std::size_t default_max_precision() {
    if (const char* env = std::getenv("PS_MAX_PRECISION")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 256;
}

struct FactorOptions {
    SeriesAssertions assertions;
    std::size_t max_precision = default_max_precision(); // cap on the p-adic working precision
};

namespace detail {

/// Coefficient access honouring the truncation model.
class SeriesView {
public:
    SeriesView(const SeriesTrunc& f, bool polynomial) : f_(f), polynomial_(polynomial) {}

    Integer at(std::size_t i) const {
        if (i < f_.trunc_order()) return f_[i];
        if (polynomial_) return 0;
        fail(Errc::InsufficientTruncation, "coefficient " + std::to_string(i) + " needed but series is known mod X^" + std::to_string(f_.trunc_order()));
    }
    std::size_t available() const { return polynomial_ ? static_cast<std::size_t>(-1) : f_.trunc_order(); }
    std::size_t size() const { return f_.trunc_order(); }

private:
    SeriesTrunc f_;
    bool polynomial_;
};

/// f / (c X^r) with its data.
struct Normalized {
    Integer content;
    std::size_t r;
    SeriesTrunc primitive; // coefficients from index r on, divided by c
};

inline Normalized normalize(const SeriesTrunc& f, const SeriesAssertions& as) {
    const auto r = f.x_order();
    if (!r) fail(Errc::ZeroInput, "series is zero at its truncation");
    if (!as.polynomial && !as.content) fail(Errc::ContentNotAsserted, "content of a truncated series must be asserted");
    if (!as.polynomial && *r > 0 && !as.order) fail(Errc::ContentNotAsserted, "X-order of a truncated series must be asserted");
    Normalized n{f.content(), *r, {}};
    n.primitive = f.shifted_down(*r).divided_exactly(n.content);
    return n;
}

/// P of a p-distinguished series of order n, as a polynomial at uniform precision W.
inline PadicPoly weierstrass_poly(const SeriesView& f, const Integer& p, std::size_t n, std::size_t W) {
    const std::size_t Nw = W + n;
    const std::size_t level = (n + 1) * Nw;
    if (level > f.available())
        fail(Errc::InsufficientTruncation, "preparation needs " + std::to_string(level) + " coefficients");
    std::vector<Integer> c(level);
    for (std::size_t i = 0; i < level; ++i) c[i] = f.at(i);
    const auto res = prepare(SeriesApprox(p, level, std::move(c)), n, Nw);
    return PadicPoly(p, W, res.polynomial(), static_cast<long>(n));
}

inline std::size_t distinguished_index(const SeriesView& f, const Integer& p) {
    for (std::size_t i = 0;; ++i) {
        if (i >= f.available()) fail(Errc::InsufficientTruncation, "no coefficient prime to " + to_string(p) + " is visible");
        if (!divides(p, f.at(i))) return i;
        if (f.available() == static_cast<std::size_t>(-1) && i > f.size()) fail(Errc::NotDistinguished, "every coefficient is divisible by " + to_string(p));
    }
}

/// Factors P_f at p, raising the working precision until `need` digits survive.
inline PadicFactorOutcome factor_weierstrass(const SeriesView& f, const Integer& p, std::size_t n, std::size_t need, std::size_t cap) {
    std::size_t W = std::max<std::size_t>(need + 2, 8);
    for (;;) {
        if (W > cap) fail(Errc::PrecisionLoss, "p-adic working precision would exceed the cap " + std::to_string(cap) + " at p=" + to_string(p));
        std::size_t grow = W / 2;
        try {
            const PadicPoly P = weierstrass_poly(f, p, n, W);
            auto out = padic_factor(P);
            if (out.verdict == PadicVerdict::Unresolved || out.precision() >= need) return out;
            grow = std::max(grow, need - out.precision());
        } catch (const PrecisionError& e) {
            grow = std::max(grow, e.extra());
        }
        W += std::max<std::size_t>(grow, 1);
    }
}

inline bool coeff_less(const SeriesTrunc& a, const SeriesTrunc& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

/// f / g mod X^N for g_0 | f exactly at every step; nullopt if a step is not integral.
inline std::optional<SeriesTrunc> exact_series_divide(const SeriesTrunc& f, const SeriesTrunc& g, std::size_t N) {
    if (g.trunc_order() == 0 || g[0] == 0) return std::nullopt;
    std::vector<Integer> q(N, Integer(0));
    for (std::size_t n = 0; n < N; ++n) {
        Integer s = f[n];
        for (std::size_t i = 0; i < n; ++i) s -= q[i] * g[n - i];
        if (!divides(g[0], s)) return std::nullopt;
        q[n] = exact_div(s, g[0]);
    }
    return SeriesTrunc(std::move(q));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Factorization

struct FactorProvenance {
    enum class Kind { Content, X, Lifted } kind;
    Integer prime; // 0 for X
    std::size_t t = 0;
    std::string padic_factor; // rendered p-adic factor for lifted ones
};

struct FactorizationResult {
    SeriesTrunc unit;
    std::vector<SeriesTrunc> factors;
    std::size_t precision;
    std::vector<FactorProvenance> provenance;
    std::vector<std::string> certificate;
    std::vector<std::string> assertions;
    bool verified = false;

    SeriesTrunc product() const {
        SeriesTrunc r = unit;
        for (const auto& f : factors) r = r * f;
        return r;
    }
};

/// Prime factorization of f mod X^N.
inline FactorizationResult factor_series(const SeriesTrunc& f, std::size_t N, const FactorOptions& opt = {}) {
    if (N == 0) fail(Errc::PreconditionViolation, "precision N must be positive");
    const auto norm = detail::normalize(f, opt.assertions);
    if (!opt.assertions.polynomial && f.trunc_order() < N + norm.r)
        fail(Errc::InsufficientTruncation, "need f mod X^" + std::to_string(N + norm.r));
    const detail::SeriesView fv(norm.primitive, opt.assertions.polynomial);

    FactorizationResult out;
    out.precision = N;
    out.assertions = opt.assertions.labels();

    // content primes, then X's
    const auto cfac = factor_integer(norm.content);
    for (const auto& pp : cfac.primes)
        for (std::size_t i = 0; i < pp.multiplicity; ++i) {
            out.factors.push_back(SeriesTrunc::constant(pp.prime, N));
            out.provenance.push_back({FactorProvenance::Kind::Content, pp.prime, 0, {}});
        }
    for (std::size_t i = 0; i < norm.r; ++i) {
        out.factors.push_back(SeriesTrunc::x(N));
        out.provenance.push_back({FactorProvenance::Kind::X, 0, 0, {}});
    }

    const Integer f0 = fv.at(0);
    const auto f0fac = factor_integer(f0);
    struct Lifted {
        SeriesTrunc g;
        FactorProvenance prov;
    };
    std::vector<Lifted> lifted;
    for (const auto& pp : f0fac.primes) {
        const Integer& p = pp.prime;
        const std::size_t e = pp.multiplicity;
        const std::size_t n = detail::distinguished_index(fv, p);
        const auto res = detail::factor_weierstrass(fv, p, n, e * N, opt.max_precision);
        if (res.verdict == PadicVerdict::Unresolved)
            fail(Errc::UnresolvedPadicFactorization, "at p=" + to_string(p) + ": " + res.reason);
        out.certificate.push_back("p=" + to_string(p) + ": Weierstrass polynomial of degree " + std::to_string(n) + " has " +
                                  std::to_string(res.factors.size()) + " irreducible factor(s) mod " + to_string(p) + "^" +
                                  std::to_string(res.precision()));
        for (const auto& note : res.certificate) out.certificate.push_back("p=" + to_string(p) + ": " + note);
        std::size_t tsum = 0;
        for (const auto& psi : res.factors) {
            const std::size_t t = valuation_unchecked(psi[0], p);
            tsum += t;
            const auto lr = lift_factor(psi, ipow(p, t), N);
            lifted.push_back({lr.g, {FactorProvenance::Kind::Lifted, p, t, render(psi)}});
        }
        if (tsum != e) fail(Errc::Internal, "p-adic factor valuations do not add up at p=" + to_string(p));
    }
    std::sort(lifted.begin(), lifted.end(), [](const Lifted& a, const Lifted& b) {
        if (a.prov.prime != b.prov.prime) return a.prov.prime < b.prov.prime;
        if (a.prov.t != b.prov.t) return a.prov.t > b.prov.t;
        return detail::coeff_less(a.g, b.g);
    });

    // V = f' / prod g by coefficient recursion; V_0 = +-1
    SeriesTrunc G = SeriesTrunc::one(N);
    for (const auto& l : lifted) G = G * l.g;
    std::vector<Integer> fp(N);
    for (std::size_t i = 0; i < N; ++i) fp[i] = fv.at(i);
    const auto V = detail::exact_series_divide(SeriesTrunc(fp), G, N);
    if (!V) fail(Errc::Internal, "unit recursion is not integral");
    out.unit = *V;
    for (auto& l : lifted) {
        out.factors.push_back(std::move(l.g));
        out.provenance.push_back(std::move(l.prov));
    }
    const SeriesTrunc target(std::vector<Integer>(f.coeffs().begin(), f.coeffs().begin() + std::min(N, f.trunc_order())), N);
    out.verified = (out.product() == target);
    if (!out.verified) fail(Errc::Internal, "factorization does not multiply back");
    return out;
}

// ---------------------------------------------------------------------------
// Irreducibility

enum class Verdict { Irreducible, Reducible, Unresolved };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Irreducible: return "IRREDUCIBLE";
    case Verdict::Reducible: return "REDUCIBLE";
    case Verdict::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

struct IrreducibilityVerdict {
    Verdict verdict;
    std::vector<SeriesTrunc> witness; // Reducible: nonunit factors whose product is f mod X^N
    std::string reason;               // Unresolved only
    std::vector<std::string> certificate;
    std::vector<std::string> assertions;

    SeriesTrunc witness_product(std::size_t N) const {
        SeriesTrunc r = SeriesTrunc::one(N);
        for (const auto& w : witness) r = r * w.truncated(N);
        return r;
    }
};

struct IrreducibleOptions {
    SeriesAssertions assertions;
    std::size_t max_precision = default_max_precision();
    std::size_t witness_precision = 32; // X-adic precision of witnesses for polynomial input
};

namespace detail {

inline IrreducibilityVerdict make(Verdict v, std::string note) {
    IrreducibilityVerdict out{v, {}, {}, {}, {}};
    out.certificate.push_back(std::move(note));
    return out;
}

inline std::size_t witness_order(const SeriesTrunc& f, const IrreducibleOptions& opt) {
    return opt.assertions.polynomial ? std::max(opt.witness_precision, f.trunc_order()) : f.trunc_order();
}

inline SeriesTrunc padded(const SeriesTrunc& f, std::size_t N) { return f.truncated(N); }

/// Shared steps: zero constant term and several primes in f_0. nullopt if neither applies.
inline std::optional<IrreducibilityVerdict> early_steps(const SeriesTrunc& f, const IrreducibleOptions& opt) {
    if (f.trunc_order() == 0 || f.is_zero()) fail(Errc::ZeroInput, "series is zero at its truncation");
    const std::size_t N = witness_order(f, opt);
    if (f[0] == 0) {
        if (f.trunc_order() < 2 && !opt.assertions.polynomial) fail(Errc::InsufficientTruncation, "f_1 is not visible");
        const Integer f1 = f[1];
        if (f1 == 1 || f1 == -1) return make(Verdict::Irreducible, "f_0 = 0 and f_1 is a unit");
        auto out = make(Verdict::Reducible, "f_0 = 0 and f_1 is not a unit");
        const auto rest = padded(f, N + 1).shifted_down(1);
        out.witness = {SeriesTrunc::x(N), rest.truncated(N)};
        return out;
    }
    if (f[0] == 1 || f[0] == -1) fail(Errc::PreconditionViolation, "f is a unit");
    const auto fac = factor_integer(f[0]);
    if (fac.primes.size() > 1) {
        auto out = make(Verdict::Reducible, "f_0 has " + std::to_string(fac.primes.size()) + " distinct prime factors");
        out.witness = split_by_constant(padded(f, N)).parts;
        return out;
    }
    return std::nullopt;
}

/// Witness from the full factorization, unit absorbed into the first factor.
inline std::vector<SeriesTrunc> factorization_witness(const SeriesTrunc& f, std::size_t N, const IrreducibleOptions& opt) {
    try {
        FactorOptions fo{opt.assertions, opt.max_precision};
        auto fr = factor_series(f, N, fo);
        if (fr.factors.size() < 2) return {};
        fr.factors[0] = fr.unit * fr.factors[0];
        return fr.factors;
    } catch (const Error&) {
        return {};
    }
}

/// Number of irreducible factors of P_{f'} at p: exact when known, else a lower bound.
struct FactorCount {
    std::size_t count;
    bool exact;
    std::string note;
};

inline FactorCount count_weierstrass_factors(const SeriesView& f, const Integer& p, std::size_t cap) {
    const std::size_t n = distinguished_index(f, p);
    if (n == 0) return {0, true, "P = 1 (order 0)"};
    std::size_t W = 8;
    for (;;) {
        if (W > cap) return {1, false, "precision cap " + std::to_string(cap) + " reached"};
        std::size_t grow = W;
        try {
            const PadicPoly P = weierstrass_poly(f, p, n, W);
            const auto out = padic_factor(P);
            std::string note = "P of degree " + std::to_string(n) + ": " + std::string(verdict_name(out.verdict));
            for (const auto& c : out.certificate) note += "; " + c;
            if (out.verdict != PadicVerdict::Unresolved) return {out.factors.size(), true, note};
            return {out.min_factor_count, out.count_exact, note + "; " + out.reason};
        } catch (const PrecisionError& e) {
            grow = std::max(grow, e.extra());
        }
        W += grow;
    }
}

} // namespace detail

/// Irreducibility in Z[[X]] from omega(f_0), omega(f_1), k = v_p(c(f)) and the factor count of P_{f/c(f)}.
inline IrreducibilityVerdict irreducible_series(const SeriesTrunc& f, const IrreducibleOptions& opt = {}) {
    if (auto early = detail::early_steps(f, opt)) {
        early->assertions = opt.assertions.labels();
        return *early;
    }
    if (!opt.assertions.polynomial && !opt.assertions.content)
        fail(Errc::ContentNotAsserted, "content of a truncated series must be asserted");
    const Integer p = factor_integer(f[0]).primes.front().prime;
    const Integer c = f.content();
    const std::size_t k = valuation_unchecked(c, p);
    const SeriesTrunc fc = f.divided_exactly(c);
    const detail::SeriesView fv(fc, opt.assertions.polynomial);
    const auto l = detail::count_weierstrass_factors(fv, p, opt.max_precision);
    const std::size_t N = detail::witness_order(f, opt);

    IrreducibilityVerdict out{Verdict::Unresolved, {}, {}, {}, opt.assertions.labels()};
    out.certificate.push_back("p=" + to_string(p) + ", k=" + std::to_string(k) + ", " + l.note);
    if (k >= 2 || (k == 1 && l.count >= 1) || (k == 0 && l.count >= 2)) {
        out.verdict = Verdict::Reducible;
        if (k >= 1) out.witness = {SeriesTrunc::constant(p, N), detail::padded(f, N).divided_exactly(p)};
        else out.witness = detail::factorization_witness(f, N, opt);
    } else if (l.exact) {
        out.verdict = (k + l.count == 1) ? Verdict::Irreducible : Verdict::Reducible;
    } else {
        out.reason = "factor count of the Weierstrass polynomial is not determined: " + l.note;
    }
    return out;
}

/// Irreducibility of a polynomial through chi: does f split into two factors with constant terms in pZ_(p)?
inline IrreducibilityVerdict irreducible_poly_via_chi(const SeriesTrunc& f, const Integer& p, const IrreducibleOptions& opt = {}) {
    if (!is_probable_prime(p)) fail(Errc::NotPrime, to_string(p) + " is not prime");
    if (f.trunc_order() > 0 && f[0] != 0 && !divides(p, f[0])) fail(Errc::PreconditionViolation, to_string(p) + " does not divide f_0");
    if (auto early = detail::early_steps(f, opt)) return *early;
    const Integer c = f.content();
    const std::size_t k = valuation_unchecked(c, p);
    const Integer pk = ipow(p, k);
    const SeriesTrunc fk = f.divided_exactly(pk);
    const detail::SeriesView fv(fk, true);
    const std::size_t N = detail::witness_order(f, opt);
    IrreducibilityVerdict out{Verdict::Unresolved, {}, {}, {}, {}};
    if (k >= 2) {
        out.verdict = Verdict::Reducible;
        out.certificate.push_back("chi = 0: p^2 divides the content");
        out.witness = {SeriesTrunc::constant(p, N), detail::padded(f, N).divided_exactly(p)};
        return out;
    }
    const std::size_t n = detail::distinguished_index(fv, p);
    if (k == 1) {
        out.verdict = n > 0 ? Verdict::Reducible : Verdict::Irreducible;
        out.certificate.push_back(n > 0 ? "chi = 0: k = 1 and P != 1" : "chi = 1: k = 1 and P = 1");
        if (n > 0) out.witness = {SeriesTrunc::constant(p, N), detail::padded(f, N).divided_exactly(p)};
        return out;
    }
    const auto l = detail::count_weierstrass_factors(fv, p, opt.max_precision);
    out.certificate.push_back("k = 0, " + l.note);
    if (l.count >= 2) {
        out.verdict = Verdict::Reducible;
        out.certificate.push_back("chi = 0: P is reducible");
        out.witness = detail::factorization_witness(f, N, opt);
    } else if (l.exact) {
        out.verdict = Verdict::Irreducible;
        out.certificate.push_back("chi = 1: P is irreducible");
    } else {
        out.reason = "chi undetermined: " + l.note;
    }
    return out;
}

/// Irreducibility of a series without nonunit constant or square divisors, from a
/// Weierstrass approximation Q at the precision certified by the discriminant.
inline IrreducibilityVerdict irreducible_squarefree(const SeriesTrunc& f, const IrreducibleOptions& opt = {}) {
    if (auto early = detail::early_steps(f, opt)) {
        early->assertions = opt.assertions.labels();
        return *early;
    }
    const Integer p = factor_integer(f[0]).primes.front().prime;
    if (opt.assertions.polynomial && f.content() != 1)
        fail(Errc::PreconditionViolation, "f has a nonunit constant divisor");
    const detail::SeriesView fv(f, opt.assertions.polynomial);
    const std::size_t n = detail::distinguished_index(fv, p);
    IrreducibilityVerdict out{Verdict::Unresolved, {}, {}, {}, opt.assertions.labels()};
    const std::size_t v0 = valuation_unchecked(f[0], p);

    // certified v(Delta(P)) from an approximation
    std::optional<std::size_t> vd;
    std::size_t W = 8;
    while (!vd && W <= opt.max_precision) {
        try {
            const PadicPoly P = detail::weierstrass_poly(fv, p, n, W);
            vd = discriminant(P).valuation;
        } catch (const Error& e) {
            if (e.code() == Errc::InsufficientTruncation) break;
            if (e.code() != Errc::PrecisionLoss) throw;
        }
        if (!vd) W *= 2;
    }
    if (!vd) fail(Errc::DiscriminantUnresolved, "discriminant valuation not certified up to precision " + std::to_string(std::min(W, opt.max_precision)));
    const std::size_t N = n + psf::detail::precision_exponent(static_cast<long>(n), static_cast<long>(v0), static_cast<long>(*vd));
    const std::size_t level = (n + 1) * N;
    if (level > fv.available()) fail(Errc::InsufficientTruncation, "need f mod X^" + std::to_string(level));
    std::vector<Integer> g(level);
    for (std::size_t i = 0; i < level; ++i) g[i] = fv.at(i);
    const auto Q = prepare(SeriesApprox(p, level, std::move(g)), n, N).polynomial();
    out.certificate.push_back("p=" + to_string(p) + ", n=" + std::to_string(n) + ", v(Delta)=" + std::to_string(*vd) +
                              ", N=" + std::to_string(N) + ", Q = " + render_poly(Q));
    const auto res = padic_factor(PadicPoly::exact(p, Q));
    if (res.verdict == PadicVerdict::Irreducible) {
        out.verdict = Verdict::Irreducible;
    } else if (res.certainly_reducible()) {
        out.verdict = Verdict::Reducible;
        out.witness = detail::factorization_witness(f, detail::witness_order(f, opt), opt);
    } else {
        out.reason = res.reason;
    }
    for (const auto& c : res.certificate) out.certificate.push_back(c);
    return out;
}

} // namespace psf
