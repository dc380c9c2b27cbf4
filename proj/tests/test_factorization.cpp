#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "psfactor/factorization.hpp"

using namespace psf;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

SeriesTrunc series(std::initializer_list<long> v, std::size_t N) { return SeriesTrunc(ints(v), N); }

/// Coefficients of 1/(1 - X)^k style products computed by plain convolution.
SeriesTrunc product(const std::vector<SeriesTrunc>& fs, std::size_t N) {
    IntPoly acc{Integer(1)};
    for (const auto& f : fs) acc = oracle::mul(acc, f.coeffs());
    return SeriesTrunc(IntPoly(acc.begin(), acc.begin() + static_cast<long>(std::min(N, acc.size()))), N);
}

std::size_t nonunit_count(const FactorizationResult& r) { return r.factors.size(); }

std::size_t lifted_count(const FactorizationResult& r) {
    std::size_t k = 0;
    for (const auto& pv : r.provenance) k += pv.kind == FactorProvenance::Kind::Lifted;
    return k;
}

} // namespace

// --- coprime splitting ------------------------------------------------------

TEST(SplitTwo, SixPlusX) {
    const auto s = split_two(series({6, 1}, 4), 2, 3, -1, 1);
    EXPECT_EQ(s.g.coeffs(), ints({0, 1, 1, 2}));
    EXPECT_EQ(s.parts[0].coeffs(), ints({2, 1, 1, 2}));
    EXPECT_EQ(s.parts[1].coeffs(), ints({3, -1, -1, -2}));
    EXPECT_EQ(product(s.parts, 4), series({6, 1}, 4));
}

TEST(SplitTwo, ConstantInput) {
    const auto s = split_two(series({6}, 5), 2, 3, -1, 1);
    EXPECT_TRUE(s.g.is_zero());
    EXPECT_EQ(s.parts[0], SeriesTrunc::constant(2, 5));
    EXPECT_EQ(s.parts[1], SeriesTrunc::constant(3, 5));
}

TEST(SplitTwo, TrivialFirstPart) {
    const auto s = split_two(series({5, 2, 7}, 6), 1, 5, 1, 0);
    EXPECT_EQ(s.parts[0], SeriesTrunc::one(6));
    EXPECT_EQ(s.parts[1], series({5, 2, 7}, 6));
}

TEST(SplitTwo, Errors) {
    try {
        split_two(series({6, 1}, 4), 2, 3, 1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadBezout);
    }
    try {
        split_two(series({7, 1}, 4), 2, 3, -1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadSplit);
    }
}

TEST(SplitTwo, PartsAreComaximal) {
    // r(a + s g) + s(b + r g) = 1 + 2 r s g is a unit
    std::mt19937_64 rng(53);
    for (int it = 0; it < 100; ++it) {
        const long a = 2 + static_cast<long>(rng() % 30), b = 2 + static_cast<long>(rng() % 30);
        const auto bz = ext_gcd(a, b);
        if (bz.g != 1) continue;
        std::vector<Integer> c(8);
        c[0] = a * b;
        for (std::size_t i = 1; i < 8; ++i) c[i] = static_cast<long>(rng() % 41) - 20;
        const auto s = split_two(SeriesTrunc(c), a, b, bz.x, bz.y);
        EXPECT_EQ(product(s.parts, 8), SeriesTrunc(c));
        const SeriesTrunc comb = bz.x * s.parts[0] + bz.y * s.parts[1];
        EXPECT_EQ(comb[0], 1);
    }
}

TEST(SplitMulti, ThirtyPlusX) {
    const std::vector<Integer> a = ints({2, 3, 5});
    const auto b = partition_of_unity(a);
    const auto s = split_multi(series({30, 1}, 16), a, b);
    ASSERT_EQ(s.parts.size(), 3u);
    EXPECT_EQ(s.parts[0][0], 2);
    EXPECT_EQ(s.parts[1][0], 3);
    EXPECT_EQ(s.parts[2][0], 5);
    EXPECT_EQ(product(s.parts, 16), series({30, 1}, 16));
}

TEST(SplitMulti, TwoPartsMatchSplitTwo) {
    const auto m = split_multi(series({6, 1, 4, -2}, 10), ints({2, 3}), ints({1, -1}));
    // sum b_i prod_{j!=i} a_j = 1*3 - 1*2 = 1; split_two puts s with a and r with b
    const auto t = split_two(series({6, 1, 4, -2}, 10), 2, 3, -1, 1);
    EXPECT_EQ(m.g, t.g);
    EXPECT_EQ(m.parts, t.parts);
}

TEST(SplitMulti, SinglePart) {
    const auto s = split_multi(series({7, 3, 1}, 6), ints({7}), ints({1}));
    ASSERT_EQ(s.parts.size(), 1u);
    EXPECT_EQ(s.parts[0], series({7, 3, 1}, 6));
}

TEST(SplitMulti, Errors) {
    try {
        split_multi(series({12, 1}, 4), ints({2, 6}), ints({1, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPairwiseCoprime);
    }
    try {
        split_multi(series({6, 1}, 4), ints({2, 3}), ints({1, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadPartition);
    }
}

TEST(SplitByConstant, RandomProducts) {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 200; ++it) {
        std::vector<Integer> c(10);
        c[0] = static_cast<long>(rng() % 4000) - 2000;
        if (c[0] == 0) c[0] = 30;
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = static_cast<long>(rng() % 101) - 50;
        const SeriesTrunc f(c);
        const auto s = split_by_constant(f);
        EXPECT_EQ(product(s.parts, 10), f);
        const auto w = omega(c[0]);
        EXPECT_EQ(s.parts.size(), std::max<std::size_t>(1, w.value()));
    }
}

// --- lifting -------------------------------------------------------------------

TEST(LiftFactor, SixPlusXAtTwo) {
    const auto r = lift_factor(series({6, 1}, 4), 2, 2, 4);
    EXPECT_EQ(r.g.coeffs(), ints({2, 1, 1, 0}));
    ASSERT_EQ(r.h.size(), 3u);
    EXPECT_EQ(r.h[0], ResidueElement(2, 3, 3)); // 1/3 mod 8
}

TEST(LiftFactor, RelationAtMixedPrecision) {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 100; ++it) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        const std::size_t N = 2 + rng() % 6;
        std::vector<Integer> c(N);
        const std::size_t e = 1 + rng() % 2;
        long u = static_cast<long>(rng() % 20) + 1;
        if (u % p == 0) ++u;
        c[0] = oracle::pw(p, e) * u;
        for (std::size_t i = 1; i < N; ++i) c[i] = static_cast<long>(rng() % 41) - 20;
        const Integer d = oracle::pw(p, e + rng() % 2);
        const auto r = lift_factor(SeriesTrunc(c), p, d, N);
        EXPECT_EQ(r.g[0], d);
        const Integer pe = oracle::pw(p, e);
        for (std::size_t i = 1; i < N; ++i) {
            EXPECT_GE(r.g[i], 0);
            EXPECT_LT(r.g[i], pe);
        }
        // (h f)_n == g_n mod p^(e(N-1-n)) for n < N - 1
        for (std::size_t n = 0; n + 1 < N; ++n) {
            Integer s = 0;
            for (std::size_t i = 0; i <= n; ++i) s += r.h[i].value() * c[n - i];
            const Integer m = oracle::pw(p, e * (N - 1 - n));
            EXPECT_EQ(oracle::modp(s - r.g[n], m), 0) << "n=" << n;
        }
    }
}

TEST(LiftFactor, CanonicalDigitsForEisensteinInput) {
    // p - X^2 with d = p: digits are taken in [0, p), so g = p + (p - 1) X^2 + ...
    for (long p : {2, 3, 5}) {
        const auto r = lift_factor(series({p, 0, -1}, 6), p, p, 6);
        EXPECT_EQ(r.g[0], p);
        EXPECT_EQ(r.g[1], 0);
        EXPECT_EQ(r.g[2], p - 1);
        EXPECT_EQ(r.h[0].value(), 1);
    }
}

TEST(LiftFactor, StableUnderPerturbation) {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 100; ++it) {
        const long p = rng() % 2 ? 2 : 3;
        const std::size_t N = 2 + rng() % 5;
        std::vector<Integer> c(N);
        c[0] = p * (static_cast<long>(rng() % 5) * p + 1);
        for (std::size_t i = 1; i < N; ++i) c[i] = static_cast<long>(rng() % 41) - 20;
        const std::size_t e = oracle::val(c[0], p);
        std::vector<Integer> c2 = c;
        for (std::size_t i = 0; i < N; ++i) c2[i] += oracle::pw(p, e * (N - i)) * (static_cast<long>(rng() % 7) - 3);
        const Integer d = oracle::pw(p, e);
        EXPECT_EQ(lift_factor(SeriesTrunc(c), p, d, N).g, lift_factor(SeriesTrunc(c2), p, d, N).g);
    }
}

TEST(LiftFactor, Errors) {
    try {
        lift_factor(series({6, 1}, 4), 2, 3, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotInIdeal);
    }
    try {
        lift_factor(series({0, 1}, 4), 2, 2, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroConstantTerm);
    }
}

// --- factor_series -------------------------------------------------------------

TEST(FactorSeries, SixPlusX) {
    const auto r = factor_series(series({6, 1}, 8), 8);
    EXPECT_TRUE(r.unit[0] == 1 || r.unit[0] == -1);
    ASSERT_EQ(r.factors.size(), 2u);
    EXPECT_EQ(r.factors[0][0], 2);
    EXPECT_EQ(r.factors[1][0], 3);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.unit * product(r.factors, 8), series({6, 1}, 8));
}

TEST(FactorSeries, PureXPower) {
    const auto r = factor_series(series({0, 0, 0, 1}, 6), 6);
    EXPECT_EQ(r.unit, SeriesTrunc::one(6));
    ASSERT_EQ(r.factors.size(), 3u);
    for (const auto& f : r.factors) EXPECT_EQ(f, SeriesTrunc::x(6));
}

TEST(FactorSeries, IrreducibleQuadratic) {
    const auto r = factor_series(series({2, 3, 1}, 8), 8);
    ASSERT_EQ(r.factors.size(), 1u);
    EXPECT_EQ(r.factors[0][0], 2);
    EXPECT_EQ(r.unit * r.factors[0], series({2, 3, 1}, 8));
}

TEST(FactorSeries, ContentAndX) {
    // 12 X^2 (5 + X) -> content primes 2, 2, 3, then X, X, then the 5-part
    const auto r = factor_series(series({0, 0, 60, 12}, 8), 8);
    ASSERT_EQ(r.factors.size(), 6u);
    EXPECT_EQ(r.factors[0], SeriesTrunc::constant(2, 8));
    EXPECT_EQ(r.factors[1], SeriesTrunc::constant(2, 8));
    EXPECT_EQ(r.factors[2], SeriesTrunc::constant(3, 8));
    EXPECT_EQ(r.factors[3], SeriesTrunc::x(8));
    EXPECT_EQ(r.factors[4], SeriesTrunc::x(8));
    EXPECT_EQ(r.factors[5][0], 5);
    EXPECT_TRUE(r.verified);
}

TEST(FactorSeries, SeriesNeedsContentAssertion) {
    FactorOptions opt;
    opt.assertions.polynomial = false;
    try {
        factor_series(series({6, 1, 3}, 48), 4, opt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ContentNotAsserted);
    }
    opt.assertions.content = true;
    const auto r = factor_series(series({6, 1, 3}, 48), 4, opt);
    EXPECT_EQ(r.assertions, std::vector<std::string>{"content"});
    EXPECT_TRUE(r.verified);
}

TEST(FactorSeries, RandomProductsAndOmegaBound) {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 150; ++it) {
        std::vector<Integer> c(1 + rng() % 4);
        for (auto& v : c) v = static_cast<long>(rng() % 101) - 50;
        if (c[0] == 0 || c[0] == 1 || c[0] == -1) c[0] = 42;
        const SeriesTrunc f(c, 10);
        FactorizationResult r;
        try {
            r = factor_series(f, 10);
        } catch (const Error& e) {
            ASSERT_TRUE(e.code() == Errc::UnresolvedPadicFactorization || e.code() == Errc::PrecisionLoss) << e.what();
            continue;
        }
        EXPECT_TRUE(r.unit[0] == 1 || r.unit[0] == -1);
        EXPECT_EQ(r.unit * product(r.factors, 10), f);
        EXPECT_GE(nonunit_count(r), omega(f.content() == 1 ? c[0] : c[0] / f.content()).value());
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
            if (r.provenance[i].kind != FactorProvenance::Kind::Lifted) continue;
            const Integer f0 = r.factors[i][0];
            EXPECT_GT(f0, 0);
            EXPECT_EQ(factor_integer(f0).primes.size(), 1u);
        }
    }
}

// --- irreducibility ----------------------------------------------------------

TEST(IrreducibleSeries, Examples) {
    EXPECT_EQ(irreducible_series(series({0, 1, 5}, 4)).verdict, Verdict::Irreducible);
    EXPECT_EQ(irreducible_series(series({0, -1}, 4)).verdict, Verdict::Irreducible);
    const auto six = irreducible_series(series({6, 1}, 2));
    EXPECT_EQ(six.verdict, Verdict::Reducible);
    EXPECT_EQ(six.witness_product(32), series({6, 1}, 32));
    EXPECT_EQ(irreducible_series(series({2, 3, 1}, 3)).verdict, Verdict::Irreducible);
}

TEST(IrreducibleSeries, XTimesNonUnit) {
    const auto v = irreducible_series(series({0, 2, 1}, 3));
    EXPECT_EQ(v.verdict, Verdict::Reducible);
    EXPECT_EQ(v.witness_product(32), series({0, 2, 1}, 32));
}

TEST(IrreducibleSeries, ContentPower) {
    // 4 + 2X = 2 (2 + X)
    const auto v = irreducible_series(series({4, 2}, 2));
    EXPECT_EQ(v.verdict, Verdict::Reducible);
    EXPECT_EQ(v.witness_product(32), series({4, 2}, 32));
    // 2 + 2X = 2 (1 + X): k = 1, P = 1 -> irreducible
    EXPECT_EQ(irreducible_series(series({2, 2}, 2)).verdict, Verdict::Irreducible);
}

TEST(IrreducibleChi, Examples) {
    EXPECT_EQ(irreducible_poly_via_chi(series({2, 3, 1}, 3), 2).verdict, Verdict::Irreducible);
    for (long p : {2, 3, 5}) {
        EXPECT_EQ(irreducible_poly_via_chi(series({p * p, 1}, 2), p).verdict, Verdict::Irreducible);
        const auto v = irreducible_poly_via_chi(series({p * p, p}, 2), p);
        EXPECT_EQ(v.verdict, Verdict::Reducible);
        EXPECT_EQ(v.witness_product(32), series({p * p, p}, 32));
        EXPECT_EQ(irreducible_poly_via_chi(series({-p, 0, 1}, 3), p).verdict, Verdict::Irreducible);
    }
}

TEST(IrreducibleSquarefree, Examples) {
    EXPECT_EQ(irreducible_squarefree(series({2, 1, 1}, 3)).verdict, Verdict::Irreducible);
    EXPECT_EQ(irreducible_squarefree(series({6, 1}, 2)).verdict, Verdict::Reducible);
    EXPECT_EQ(irreducible_squarefree(series({0, 1, 3}, 3)).verdict, Verdict::Irreducible);
    EXPECT_EQ(irreducible_squarefree(series({-3, 0, 1}, 3)).verdict, Verdict::Irreducible);
    // (3 + X)(3 + 2X) = 9 + 9X + 2X^2: the Weierstrass polynomial at 3 splits
    const auto v = irreducible_squarefree(series({9, 9, 2}, 3));
    EXPECT_EQ(v.verdict, Verdict::Reducible);
    EXPECT_EQ(v.witness_product(32), series({9, 9, 2}, 32));
}

TEST(Irreducible, DecidersAgreeWithFactorCount) {
    std::mt19937_64 rng(73);
    int compared = 0;
    for (int it = 0; it < 200; ++it) {
        std::vector<Integer> c(2 + rng() % 3);
        for (auto& v : c) v = static_cast<long>(rng() % 101) - 50;
        if (c[0] == 0 || c[0] == 1 || c[0] == -1) c[0] = 2 * (1 + static_cast<long>(rng() % 10));
        if (c.back() == 0) c.back() = 1;
        const SeriesTrunc f(c, c.size());
        const auto v = irreducible_series(f);
        if (v.verdict == Verdict::Unresolved) continue;
        FactorizationResult r;
        try {
            r = factor_series(f, 12);
        } catch (const Error&) {
            continue;
        }
        EXPECT_EQ(r.factors.size() == 1, v.verdict == Verdict::Irreducible) << render(f);
        if (v.verdict == Verdict::Reducible) EXPECT_EQ(v.witness_product(32), f.truncated(32)) << render(f);
        ++compared;
    }
    EXPECT_GT(compared, 150);
}

TEST(Irreducible, ZeroSeriesRejected) {
    try {
        irreducible_series(SeriesTrunc::zero(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroInput);
    }
}
