#pragma once

// Polynomials over Z_p at finite precision: Newton polygons, Hensel lifting,
// root finding and a factorizer with an explicit completeness boundary.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finite_field.hpp"
#include "poly.hpp"
#include "ring_core.hpp"
#include "series.hpp"
#include "weierstrass.hpp"

namespace psf {

// ---------------------------------------------------------------------------
// Newton polygon

struct NewtonSegment {
    long slope_num;     // slope = slope_num / slope_den in lowest terms
    long slope_den;     // > 0
    std::size_t length; // horizontal length

    /// Common valuation of the roots belonging to this segment, as num/den.
    std::pair<long, long> root_valuation() const { return {-slope_num, slope_den}; }
    friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
    std::vector<std::pair<std::size_t, std::size_t>> vertices; // (i, v_p(f_i))
    std::vector<NewtonSegment> segments;
    std::size_t x_order = 0;

    std::size_t length() const {
        std::size_t s = 0;
        for (const auto& g : segments) s += g.length;
        return s;
    }
};

namespace detail {

inline long lcross(std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Lower convex hull of points sorted by abscissa (collinear points dropped).
inline std::vector<std::pair<long, long>> lower_hull(const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::pair<long, long>> h;
    for (const auto& q : pts) {
        while (h.size() >= 2 && lcross(h[h.size() - 2], h.back(), q) <= 0) h.pop_back();
        h.push_back(q);
    }
    return h;
}

/// Smallest integer >= the hull height at abscissa i (i within the hull's range).
inline long hull_ceil_at(const std::vector<std::pair<long, long>>& h, long i) {
    for (std::size_t s = 0; s + 1 < h.size(); ++s) {
        const auto [x0, y0] = h[s];
        const auto [x1, y1] = h[s + 1];
        if (i < x0 || i > x1) continue;
        const long num = y0 * (x1 - x0) + (y1 - y0) * (i - x0);
        const long den = x1 - x0;
        return num >= 0 ? (num + den - 1) / den : -((-num) / den);
    }
    return h.empty() ? 0 : h.back().second;
}

} // namespace detail

inline NewtonPolygon newton_polygon(const PadicPoly& f) {
    const long d = f.degree();
    if (d < 0) fail(Errc::ZeroInput, "Newton polygon of the zero polynomial");
    const bool exact = f.is_exact();
    NewtonPolygon np;
    std::vector<std::pair<long, long>> pts;
    std::vector<long> unknown;
    for (long i = 0; i <= d; ++i) {
        const auto kv = f.coeff_valuation(static_cast<std::size_t>(i));
        if (kv.certain) pts.emplace_back(i, static_cast<long>(kv.value));
        else if (!exact) unknown.push_back(i);
    }
    if (pts.empty()) throw PrecisionError("every coefficient vanishes at the stored precision", 1);
    if (exact) {
        np.x_order = static_cast<std::size_t>(pts.front().first);
    } else {
        if (!unknown.empty() && unknown.front() < pts.front().first)
            throw PrecisionError("constant term vanishes at the stored precision", 1);
        if (!unknown.empty() && unknown.back() > pts.back().first)
            throw PrecisionError("leading coefficient vanishes at the stored precision", 1);
    }
    const auto hull = detail::lower_hull(pts);
    if (!exact) {
        const long K = static_cast<long>(f.precision());
        long extra = 0;
        for (long i : unknown) extra = std::max(extra, detail::hull_ceil_at(hull, i) - K);
        if (extra > 0) throw PrecisionError("an undetermined coefficient could lie below the polygon", static_cast<std::size_t>(extra));
    }
    for (const auto& [i, v] : hull) np.vertices.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(v));
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const long rise = hull[s + 1].second - hull[s].second;
        const long run = hull[s + 1].first - hull[s].first;
        const long g = std::gcd(rise < 0 ? -rise : rise, run);
        np.segments.push_back({rise / g, run / g, static_cast<std::size_t>(run)});
    }
    return np;
}

// ---------------------------------------------------------------------------
// Hensel lifting

namespace detail {

/// Quadratic Hensel step loop: f == g*h mod p with s*g + t*h == 1 mod p, lifted to p^k.
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, IntPoly g, IntPoly h, const Integer& p, std::size_t k) {
    auto [s, t] = fp::ext_gcd(g, h, p);
    std::size_t e = 1;
    while (e < k) {
        const std::size_t e2 = std::min(2 * e, k);
        const Integer M = ipow(p, e2);
        auto red = [&](const IntPoly& x) { return poly::reduce(x, M); };
        const IntPoly err = red(poly::sub(f, poly::mul(g, h)));
        auto [q, r] = poly::divmod_monic(red(poly::mul(s, err)), h);
        q = red(q);
        r = red(r);
        const IntPoly g2 = red(poly::add(g, poly::add(poly::mul(t, err), poly::mul(q, g))));
        const IntPoly h2 = red(poly::add(h, r));
        const IntPoly b = red(poly::sub(poly::add(poly::mul(s, g2), poly::mul(t, h2)), IntPoly{Integer(1)}));
        auto [c, dd] = poly::divmod_monic(red(poly::mul(s, b)), h2);
        s = red(poly::sub(s, dd));
        t = red(poly::sub(t, poly::add(poly::mul(t, b), poly::mul(red(c), g2))));
        g = g2;
        h = h2;
        e = e2;
    }
    return {g, h};
}

/// Lifts f == prod(parts) mod p (parts monic, pairwise coprime mod p) to p^k.
inline std::vector<IntPoly> hensel_multi(const IntPoly& f, const std::vector<IntPoly>& parts, const Integer& p, std::size_t k) {
    if (parts.size() == 1) return {poly::reduce(f, ipow(p, k))};
    const std::size_t half = parts.size() / 2;
    IntPoly g0{Integer(1)}, h0{Integer(1)};
    for (std::size_t i = 0; i < half; ++i) g0 = fp::mul(g0, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) h0 = fp::mul(h0, parts[i], p);
    auto [g, h] = hensel_pair(f, g0, h0, p, k);
    auto left = hensel_multi(g, std::vector<IntPoly>(parts.begin(), parts.begin() + static_cast<long>(half)), p, k);
    auto right = hensel_multi(h, std::vector<IntPoly>(parts.begin() + static_cast<long>(half), parts.end()), p, k);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

} // namespace detail

/// Lifts f == g0*h0 mod p to f == g*h mod p^k with g, h monic.
inline std::pair<PadicPoly, PadicPoly> hensel_lift(const PadicPoly& f, const IntPoly& g0_in, const IntPoly& h0_in, std::size_t k) {
    const Integer& p = f.prime();
    if (k == 0) fail(Errc::PreconditionViolation, "target precision must be positive");
    if (!f.is_monic()) fail(Errc::PreconditionViolation, "Hensel lifting needs a monic polynomial");
    if (k > f.precision()) throw PrecisionError("target precision exceeds the input's", k - f.precision());
    const IntPoly g0 = fp::monic(fp::norm(g0_in, p), p), h0 = fp::monic(fp::norm(h0_in, p), p);
    if (g0.empty() || h0.empty()) fail(Errc::PreconditionViolation, "factors must be nonzero mod p");
    if (fp::mul(g0, h0, p) != fp::norm(f.coeffs(), p))
        fail(Errc::PreconditionViolation, "f is not congruent to g0*h0 mod p");
    if (fp::deg(fp::gcd(g0, h0, p)) != 0) fail(Errc::NotCoprime, "g0 and h0 are not coprime mod p");
    auto [g, h] = detail::hensel_pair(f.coeffs(), g0, h0, p, k);
    return {PadicPoly(p, k, g, fp::deg(g0)), PadicPoly(p, k, h, fp::deg(h0))};
}

// ---------------------------------------------------------------------------
// Discriminant

struct DiscriminantValue {
    Integer value;         // reduced mod p^precision unless exact
    std::size_t precision; // kExactPrecision for exact inputs
    std::optional<std::size_t> valuation; // set when certified at the precision
};

/// Discriminant of the representatives, valid mod p^precision for monic or unit-leading input.
inline DiscriminantValue discriminant(const PadicPoly& f) {
    if (f.degree() < 1) fail(Errc::PreconditionViolation, "discriminant needs positive degree");
    if (divides(f.prime(), f.coeffs().back()))
        fail(Errc::PreconditionViolation, "leading coefficient must be a unit");
    Integer d = poly::discriminant(f.coeffs());
    if (!f.is_exact()) d = mod_floor(d, ipow(f.prime(), f.precision()));
    DiscriminantValue out{d, f.precision(), std::nullopt};
    if (d != 0) {
        const std::size_t v = valuation_unchecked(d, f.prime());
        if (f.is_exact() || v < f.precision()) out.valuation = v;
    }
    return out;
}

namespace detail {

struct BoundData {
    long n, v0, vd;
};

inline BoundData bound_data(const PadicPoly& f) {
    const long n = f.degree();
    if (n < 1) fail(Errc::PreconditionViolation, "bound needs positive degree");
    if (divides(f.prime(), f.coeffs().back()))
        fail(Errc::PreconditionViolation, "leading coefficient must be a unit");
    const auto v0 = f.coeff_valuation(0);
    if (!v0.certain) throw PrecisionError("constant term vanishes at the stored precision", 1);
    const auto disc = discriminant(f);
    if (!disc.valuation)
        fail(Errc::ZeroDiscriminantAtPrecision, "discriminant is 0 mod " + to_string(f.prime()) + "^" + std::to_string(f.precision()));
    return {n, static_cast<long>(v0.value), static_cast<long>(*disc.valuation)};
}

/// Least k with p^-k < min(|f_0|, |D|^2 / |f_0|^(4n-3)).
inline std::size_t norm_bound_exponent(long n, long v0, long vd) {
    return static_cast<std::size_t>(std::max(v0, 2 * vd - (4 * n - 3) * v0) + 1);
}

/// Root separation: g == f mod p^k with k > n v(D) keeps every root of f
/// closer to a root of g than to the other roots of f.
inline std::size_t separation_bound_exponent(long n, long vd) { return static_cast<std::size_t>(n * vd + 1); }

inline std::size_t precision_exponent(long n, long v0, long vd) {
    return std::max(norm_bound_exponent(n, v0, vd), separation_bound_exponent(n, vd));
}

} // namespace detail

/// The weighted-norm bound on its own: the least k with
/// p^-k < min(|f_0|, |D(f)|^2 / |f_0|^(4n-3)). Not sufficient by itself; see
/// irreducibility_precision_bound.
inline std::size_t norm_precision_bound(const PadicPoly& f) {
    const auto b = detail::bound_data(f);
    return detail::norm_bound_exponent(b.n, b.v0, b.vd);
}

/// Uniform precision k such that every monic g == f mod p^k of the same degree
/// shares f's irreducibility status (monic f, f_0 != 0, discriminant certified).
/// The norm bound alone misses cases such as X^2 + 15X + 36 at p = 3, so the
/// root-separation bound n v(D) + 1 is imposed as well.
inline std::size_t irreducibility_precision_bound(const PadicPoly& f) {
    const auto b = detail::bound_data(f);
    return detail::precision_exponent(b.n, b.v0, b.vd);
}

// ---------------------------------------------------------------------------
// Roots

struct PadicRoot {
    Integer value;         // least nonnegative residue
    std::size_t precision; // certified mod p^precision
};

namespace detail {

inline constexpr std::size_t kMaxTreeDepth = 4096;

/// Per-coefficient precision of f(alpha + p^j Y) when f is known mod p^K.
inline std::size_t shifted_precision(std::size_t K, std::size_t i, std::size_t j) {
    return K == kExactPrecision ? kExactPrecision : K + i * j;
}

/// Z_p roots of f lying in alpha + p^j Z_p. f monic, known mod p^K (or exact and squarefree).
inline void root_tree(const IntPoly& f, std::size_t K, const Integer& p, const Integer& alpha, std::size_t j,
                      std::size_t want, std::vector<PadicRoot>& out, std::size_t depth) {
    if (depth > kMaxTreeDepth) fail(Errc::Internal, "root search did not terminate");
    const Integer pj = ipow(p, j);
    const IntPoly h = poly::taylor_shift(f, alpha, pj);
    const std::size_t d = f.size() - 1;
    std::vector<std::optional<std::size_t>> v(d + 1);
    std::size_t m = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i <= d; ++i) {
        const Integer hi = i < h.size() ? h[i] : Integer(0);
        const std::size_t pr = shifted_precision(K, i, j);
        if (hi == 0) continue;
        const std::size_t vi = valuation_unchecked(hi, p);
        if (vi < pr) {
            v[i] = vi;
            m = std::min(m, vi);
        }
    }
    for (std::size_t i = 0; i <= d; ++i) {
        if (v[i]) continue;
        const std::size_t pr = shifted_precision(K, i, j);
        if (pr <= m) throw PrecisionError("root of multiplicity > 1 at the stored precision", m + 1 - pr);
    }
    const Integer pm = ipow(p, m);
    IntPoly H(d + 1), Hbar(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        const Integer hi = i < h.size() ? h[i] : Integer(0);
        H[i] = exact_div(hi, pm);
        Hbar[i] = (v[i] && *v[i] == m) ? mod_floor(H[i], p) : Integer(0);
    }
    poly::trim(Hbar);
    poly::trim(H);
    for (const Integer& c : fp::roots(Hbar, p)) {
        if (fp::root_multiplicity(Hbar, c, p) >= 2) {
            root_tree(f, K, p, alpha + pj * c, j + 1, want, out, depth + 1);
            continue;
        }
        // simple root: Newton iteration on H
        const std::size_t target = (K == kExactPrecision) ? (want > j ? want - j : 1) : K - m;
        const IntPoly dH = poly::derivative(H);
        Integer y = c;
        std::size_t t = 1;
        while (t < target) {
            t = std::min(2 * t, target);
            const Integer M = ipow(p, t);
            const Integer inv = mod_inverse(poly::eval_mod(dH, y, M), M);
            y = mod_floor(y - poly::eval_mod(H, y, M) * inv, M);
        }
        const std::size_t prec = target + j;
        out.push_back({mod_floor(alpha + pj * y, ipow(p, prec)), prec});
    }
}

/// Synthetic division by (X - alpha); f monic.
inline IntPoly deflate(const IntPoly& f, const Integer& alpha) {
    const std::size_t d = f.size() - 1;
    IntPoly q(d);
    Integer carry = 0;
    for (std::size_t i = d; i-- > 0;) {
        carry = f[i + 1] + alpha * carry;
        q[i] = carry;
    }
    return q;
}

} // namespace detail

/// Roots of f in Z_p. Exact inputs must be squarefree; they get precision `want`.
inline std::vector<PadicRoot> padic_roots(const PadicPoly& f, std::size_t want = 16) {
    if (!f.is_monic()) fail(Errc::PreconditionViolation, "root search needs a monic polynomial");
    std::vector<PadicRoot> out;
    if (f.degree() < 1) return out;
    if (f.is_exact() && poly::discriminant(f.coeffs()) == 0)
        fail(Errc::ZeroDiscriminantAtPrecision, "exact input has a repeated factor");
    detail::root_tree(f.coeffs(), f.precision(), f.prime(), 0, 0, want, out, 0);
    std::sort(out.begin(), out.end(), [](const PadicRoot& a, const PadicRoot& b) { return a.value < b.value; });
    return out;
}

/// Roots in pZ_p to precision k (fewer digits when the input's precision does not certify k).
inline std::vector<ResidueElement> roots_in_max_ideal(const PadicPoly& f_in, std::size_t k) {
    if (k == 0) fail(Errc::PreconditionViolation, "precision must be positive");
    if (!f_in.is_monic()) fail(Errc::PreconditionViolation, "root search needs a monic polynomial");
    if (f_in.degree() < 1) return {};
    const PadicPoly f = f_in.is_exact() ? f_in : f_in.at_precision(std::min(k, f_in.precision()));
    const auto disc = discriminant(f);
    if (!disc.valuation) throw PrecisionError("discriminant valuation not certified", 1);
    std::vector<PadicRoot> found;
    detail::root_tree(f.coeffs(), f.precision(), f.prime(), 0, 1, k, found, 0);
    std::vector<ResidueElement> out;
    for (const auto& r : found) out.emplace_back(f.prime(), std::min(k, r.precision), r.value);
    std::sort(out.begin(), out.end(), [](const ResidueElement& a, const ResidueElement& b) { return a.value() < b.value(); });
    return out;
}

// ---------------------------------------------------------------------------
// Factorization

enum class PadicVerdict { Irreducible, Factored, Unresolved };

inline std::string_view verdict_name(PadicVerdict v) {
    switch (v) {
    case PadicVerdict::Irreducible: return "IRREDUCIBLE";
    case PadicVerdict::Factored: return "FACTORED";
    case PadicVerdict::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

struct PadicFactorOutcome {
    PadicVerdict verdict;
    std::vector<PadicPoly> factors; // monic; Irreducible carries the input itself
    Integer unit = 1;               // input = unit * prod(factors) at the factors' precision
    std::size_t min_factor_count = 1;
    bool count_exact = false; // min_factor_count is the exact number of irreducible factors
    std::vector<std::string> certificate;
    std::string reason; // Unresolved only

    /// Irreducible factors are known to be at least two.
    bool certainly_reducible() const { return min_factor_count >= 2; }
    std::size_t precision() const {
        std::size_t k = kExactPrecision;
        for (const auto& f : factors) k = std::min(k, f.precision());
        return k;
    }
};

namespace detail {

inline constexpr std::size_t kMaxSplitDepth = 24;

struct Piece {
    PadicPoly poly;
    bool irreducible;
    std::size_t count;     // lower bound on the number of irreducible factors
    bool count_exact;
};

struct Partial {
    std::vector<Piece> pieces;
    std::vector<std::string> notes;

    void append(Partial&& o) {
        for (auto& p : o.pieces) pieces.push_back(std::move(p));
        for (auto& n : o.notes) notes.push_back(std::move(n));
    }
};

inline std::string slope_text(const NewtonSegment& s) {
    const auto [num, den] = s.root_valuation();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

/// Apply an exact coefficient map to every piece, keeping precision.
template <class Map>
Partial map_pieces(Partial part, Map&& map) {
    for (auto& pc : part.pieces) pc.poly = map(pc.poly);
    return part;
}

/// g(Y) -> p^(s*deg g) g(X / p^s), monic of the same degree.
inline PadicPoly unscale(const PadicPoly& g, std::size_t s) {
    const long d = g.degree();
    IntPoly c(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] * ipow(g.prime(), s * static_cast<std::size_t>(d - i));
    const std::size_t k = (s > 0 && d > 0 && !g.is_exact()) ? g.precision() + s : g.precision();
    return PadicPoly(g.prime(), k, std::move(c), d);
}

/// g(Y) -> g(Y + shift).
inline PadicPoly translate(const PadicPoly& g, const Integer& shift) {
    return PadicPoly(g.prime(), g.precision(), poly::taylor_shift(g.coeffs(), shift, 1), g.degree());
}

/// Residual polynomial of a segment over F_p.
inline IntPoly residual(const PadicPoly& f, const NewtonPolygon& np, std::size_t seg) {
    const auto [i0, v0] = np.vertices[seg];
    const NewtonSegment& s = np.segments[seg];
    const std::size_t e = static_cast<std::size_t>(s.slope_den);
    const std::size_t t = s.length / e;
    const Integer& p = f.prime();
    IntPoly r(t + 1);
    for (std::size_t q = 0; q <= t; ++q) {
        const std::size_t i = i0 + q * e;
        const long level = static_cast<long>(v0) + static_cast<long>(q) * s.slope_num;
        const Integer c = f[i];
        if (c != 0 && valuation_unchecked(c, p) == static_cast<std::size_t>(level))
            r[q] = mod_floor(exact_div(c, ipow(p, static_cast<std::size_t>(level))), p);
    }
    poly::trim(r);
    return r;
}

inline Partial split_noroot(const PadicPoly& A, std::size_t depth);

/// Splits A by root valuation: roots above the integer threshold s go to the first factor.
inline std::pair<PadicPoly, PadicPoly> split_at_threshold(const PadicPoly& A, std::size_t s, std::size_t a) {
    const Integer& p = A.prime();
    const std::size_t K = A.precision();
    const std::size_t d = static_cast<std::size_t>(A.degree());
    const std::size_t c = A.coeff_valuation(a).value + s * a;
    if (K <= c) throw PrecisionError("valuation split needs more digits", c + 1 - K);
    const std::size_t LQ = K - c;
    const std::size_t NQ = LQ / (a + 1);
    if (NQ < a + 1) throw PrecisionError("valuation split needs more digits", (a + 1) * (a + 1) - LQ);
    std::vector<Integer> q(std::min(LQ, d + 1));
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Integer scaled = A[i] * ipow(p, s * i);
        const Integer pc = ipow(p, c);
        q[i] = divides(pc, scaled) ? exact_div(scaled, pc) : Integer(0);
    }
    const auto W = prepare(SeriesApprox(p, LQ, std::move(q)), a, NQ);
    IntPoly a1(a + 1);
    for (std::size_t i = 0; i <= a; ++i) a1[i] = W.P.value(i) * ipow(p, s * (a - i));
    const std::size_t K1 = std::min(K, NQ - a + 1 + s);
    auto dm = poly::divmod_monic(A.coeffs(), a1);
    const Integer mod = ipow(p, K1);
    if (!poly::reduce(dm.remainder, mod).empty()) fail(Errc::Internal, "valuation split does not divide");
    return {PadicPoly(p, K1, a1, static_cast<long>(a)), PadicPoly(p, K1, dm.quotient, static_cast<long>(d - a))};
}

/// Single segment with integer root valuation lam: factor via the residual over F_p.
inline Partial split_integer_slope(const PadicPoly& A, std::size_t lam, std::size_t depth) {
    const Integer& p = A.prime();
    const std::size_t d = static_cast<std::size_t>(A.degree());
    const std::size_t K = A.precision();
    if (K <= lam * d) throw PrecisionError("rescaling needs more digits", lam * d + 1 - K);
    const std::size_t KQ = K - lam * d;
    IntPoly q(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        const Integer pw = ipow(p, lam * (d - i));
        q[i] = divides(pw, A[i]) ? exact_div(A[i], pw) : Integer(0);
    }
    const PadicPoly Q(p, KQ, q, static_cast<long>(d));
    const auto groups = fp::factor(Q.coeffs(), p);
    Partial part;
    if (groups.size() == 1 && groups[0].second == 1) {
        part.pieces.push_back({A, true, 1, true});
        part.notes.push_back("degree " + std::to_string(d) + " factor with irreducible residual mod " + to_string(p));
        return part;
    }
    std::vector<IntPoly> powers;
    for (const auto& [phi, e] : groups) {
        IntPoly pw{Integer(1)};
        for (std::size_t r = 0; r < e; ++r) pw = fp::mul(pw, phi, p);
        powers.push_back(pw);
    }
    const auto lifted = hensel_multi(Q.coeffs(), powers, p, KQ);
    for (std::size_t gidx = 0; gidx < groups.size(); ++gidx) {
        const auto& [phi, e] = groups[gidx];
        const PadicPoly G(p, KQ, lifted[gidx], static_cast<long>(fp::deg(phi) * static_cast<long>(e)));
        if (e == 1) {
            part.pieces.push_back({unscale(G, lam), true, 1, true});
            continue;
        }
        if (fp::deg(phi) == 1 && depth < kMaxSplitDepth) {
            const Integer c = mod_floor(-phi[0], p);
            Partial sub = split_noroot(translate(G, c), depth + 1);
            sub = map_pieces(std::move(sub), [&](const PadicPoly& g) { return unscale(translate(g, -c), lam); });
            part.append(std::move(sub));
            continue;
        }
        part.pieces.push_back({unscale(G, lam), false, 1, false});
        part.notes.push_back("repeated residual factor of degree " + std::to_string(fp::deg(phi)));
    }
    return part;
}

/// Factor a monic polynomial known to have no roots in Z_p.
inline Partial split_noroot(const PadicPoly& A, std::size_t depth) {
    const long d = A.degree();
    Partial part;
    if (d <= 3) {
        part.pieces.push_back({A, true, 1, true});
        part.notes.push_back("degree " + std::to_string(d) + " factor without roots in Z_" + to_string(A.prime()));
        return part;
    }
    const NewtonPolygon np = newton_polygon(A);
    const auto& segs = np.segments;
    if (segs.size() >= 2) {
        std::size_t a = 0;
        for (std::size_t j = 0; j + 1 < segs.size(); ++j) {
            a += segs[j].length;
            const auto [ln, ld] = segs[j].root_valuation();
            const auto [rn, rd] = segs[j + 1].root_valuation();
            // integer s with rn/rd <= s < ln/ld
            const long s = (ln % ld == 0) ? ln / ld - 1 : ln / ld;
            if (s < 0 || s * rd < rn) continue;
            auto [A1, B] = split_at_threshold(A, static_cast<std::size_t>(s), a);
            part.notes.push_back("split by root valuation at threshold " + std::to_string(s));
            part.append(split_noroot(A1, depth + 1));
            part.append(split_noroot(B, depth + 1));
            return part;
        }
        // segments not separable by an integer rescaling: count only
        std::size_t count = 0;
        bool exact = true;
        for (std::size_t j = 0; j < segs.size(); ++j) {
            if (segs[j].length == static_cast<std::size_t>(segs[j].slope_den)) {
                ++count;
                continue;
            }
            const IntPoly r = residual(A, np, j);
            if (fp::is_squarefree(r, A.prime())) count += fp::factor_squarefree(r, A.prime()).size();
            else {
                ++count;
                exact = false;
            }
        }
        part.pieces.push_back({A, false, count, exact});
        part.notes.push_back(std::to_string(segs.size()) + " polygon segments with no integer separation");
        return part;
    }
    const NewtonSegment& seg = segs.front();
    if (seg.length == static_cast<std::size_t>(seg.slope_den)) {
        part.pieces.push_back({A, true, 1, true});
        part.notes.push_back("single segment of slope " + slope_text(seg) + " with denominator equal to its length");
        return part;
    }
    if (seg.slope_den == 1) return split_integer_slope(A, static_cast<std::size_t>(-seg.slope_num), depth);
    const IntPoly r = residual(A, np, 0);
    if (fp::is_squarefree(r, A.prime())) {
        const std::size_t cnt = fp::factor_squarefree(r, A.prime()).size();
        if (cnt == 1) {
            part.pieces.push_back({A, true, 1, true});
            part.notes.push_back("segment of slope " + slope_text(seg) + " with irreducible residual polynomial");
        } else {
            part.pieces.push_back({A, false, cnt, true});
            part.notes.push_back("segment of slope " + slope_text(seg) + " has " + std::to_string(cnt) + " residual factors");
        }
        return part;
    }
    part.pieces.push_back({A, false, 1, false});
    part.notes.push_back("requires advanced factorization: segment of slope " + slope_text(seg) + " with inseparable residual");
    return part;
}

} // namespace detail

/// Factors a polynomial with unit leading coefficient over Z_p.
inline PadicFactorOutcome padic_factor(const PadicPoly& f_in) {
    const Integer& p = f_in.prime();
    if (f_in.degree() < 0) fail(Errc::ZeroInput, "factoring the zero polynomial");
    if (divides(p, f_in.coeffs().back())) fail(Errc::PreconditionViolation, "leading coefficient must be a unit");

    PadicFactorOutcome out{PadicVerdict::Irreducible, {}, 1, 1, true, {}, {}};
    std::vector<PadicPoly> factors;
    IntPoly work = f_in.coeffs();
    std::size_t K = f_in.precision();

    // strip X exactly
    std::size_t r = 0;
    if (f_in.is_exact()) {
        while (r < work.size() && work[r] == 0) ++r;
        work.erase(work.begin(), work.begin() + static_cast<long>(r));
    } else if (f_in.degree() >= 1 && f_in.coeff_valuation(0).certain == false) {
        throw PrecisionError("constant term vanishes at the stored precision", 1);
    }

    if (f_in.is_exact()) {
        if (work.size() > 2 && poly::discriminant(work) == 0) {
            out.verdict = PadicVerdict::Unresolved;
            out.reason = "exact input has a repeated factor";
            out.count_exact = false;
            out.min_factor_count = r + 1;
            out.factors = {f_in};
            return out;
        }
        // exact input: choose a working precision beyond the discriminant
        std::size_t vd = 0;
        if (work.size() > 2) vd = valuation_unchecked(poly::discriminant(work), p);
        K = 2 * vd + 16;
    }
    if (work.back() != 1) {
        const Integer u = work.back();
        out.unit = u;
        const Integer m = ipow(p, K);
        const Integer inv = mod_inverse(u, m);
        for (auto& c : work) c = mod_floor(c * inv, m);
    }
    for (std::size_t i = 0; i < r; ++i) factors.push_back(PadicPoly(p, K, {Integer(0), Integer(1)}));
    if (r > 0) out.certificate.push_back(std::to_string(r) + " factor(s) X split off exactly");

    PadicPoly rest(p, K, work, static_cast<long>(work.size()) - 1);
    if (rest.degree() >= 1) {
        auto roots = padic_roots(rest);
        for (const auto& rt : roots) {
            const std::size_t k = std::min(rest.precision(), rt.precision);
            factors.push_back(PadicPoly(p, k, {-rt.value, Integer(1)}));
            rest = PadicPoly(p, k, detail::deflate(rest.coeffs(), rt.value), rest.degree() - 1);
        }
        if (!roots.empty()) out.certificate.push_back(std::to_string(roots.size()) + " root(s) in Z_" + to_string(p) + " certified by Hensel");
    }
    std::size_t min_count = factors.size();
    bool exact_count = true;
    std::vector<PadicPoly> unresolved;
    if (rest.degree() >= 1) {
        auto part = detail::split_noroot(rest, 0);
        for (auto& pc : part.pieces) {
            min_count += pc.count;
            exact_count = exact_count && pc.count_exact;
            if (pc.irreducible) factors.push_back(pc.poly);
            else unresolved.push_back(pc.poly);
        }
        for (auto& n : part.notes) out.certificate.push_back(std::move(n));
    }
    // bring every part to a common precision so the product check is uniform
    std::size_t common = K;
    for (const auto& g : factors) common = std::min(common, g.precision());
    for (const auto& g : unresolved) common = std::min(common, g.precision());
    for (auto& g : factors) g = g.at_precision(common);
    for (auto& g : unresolved) g = g.at_precision(common);

    out.min_factor_count = min_count;
    out.count_exact = exact_count;
    if (!unresolved.empty()) {
        out.verdict = PadicVerdict::Unresolved;
        for (const auto& n : out.certificate)
            if (n.rfind("requires", 0) == 0 || n.find("no integer separation") != std::string::npos ||
                n.find("residual factors") != std::string::npos || n.find("repeated residual") != std::string::npos)
                out.reason = n;
        if (out.reason.empty()) out.reason = "factorization outside the supported domain";
        factors.insert(factors.end(), unresolved.begin(), unresolved.end());
        out.factors = std::move(factors);
        return out;
    }
    std::sort(factors.begin(), factors.end(), [](const PadicPoly& a, const PadicPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    out.verdict = factors.size() == 1 ? PadicVerdict::Irreducible : PadicVerdict::Factored;
    if (factors.empty()) out.certificate.push_back("unit polynomial");
    out.factors = std::move(factors);
    return out;
}

} // namespace psf
