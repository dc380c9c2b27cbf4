#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poly.hpp"
#include "series.hpp"

namespace psf {

/// f = U * P with P monic of degree `order`, lower coefficients in pZ.
struct WeierstrassResult {
    std::size_t order;
    SeriesApprox P;     // level N, zero above `order`
    SeriesApprox U_inv; // level N
    Integer prime;

    std::size_t level() const { return P.level(); }
    /// Coefficients 0..order of P.
    IntPoly polynomial() const {
        return IntPoly(P.values().begin(), P.values().begin() + static_cast<long>(std::min(order + 1, P.level())));
    }
};

/// Weierstrass preparation of g mod A^((n+1)N) to level N.
inline WeierstrassResult prepare(const SeriesApprox& g_in, std::size_t n, std::size_t N) {
    if (N == 0) fail(Errc::PreconditionViolation, "target level N must be at least 1");
    const std::size_t need = (n + 1) * N;
    if (g_in.level() < need)
        fail(Errc::InsufficientLevel, "preparation to level " + std::to_string(N) + " at order " + std::to_string(n) +
                                          " needs level " + std::to_string(need) + ", got " + std::to_string(g_in.level()));
    const SeriesApprox g = g_in.at_level(need);
    const auto ord = distinguished_order(g);
    if (!ord.distinguished()) fail(Errc::NotDistinguished, "series is not distinguished at level " + std::to_string(need));
    if (*ord.order != n)
        fail(Errc::PreconditionViolation, "claimed order " + std::to_string(n) + " but series has order " + std::to_string(*ord.order));

    const Integer& p = g.prime();
    const SeriesApprox t = approx_invert_unit(tau(n, g)); // level (n+1)N - n
    const SeriesApprox ta = approx_mul(t, alpha(n, g));

    SeriesApprox S = SeriesApprox::one(p, need - n);
    SeriesApprox sum = S.at_level(N);
    for (std::size_t i = 1; i < N; ++i) {
        S = tau(n, approx_mul(ta, S)); // level (n+1)N - n(i+1)
        sum = (i % 2 == 1) ? approx_sub(sum, S.at_level(N)) : approx_add(sum, S.at_level(N));
    }
    const SeriesApprox V = approx_mul(t.at_level(N), sum);
    const SeriesApprox raw = approx_mul(g.at_level(N), V);

    std::vector<Integer> pc(N, Integer(0));
    for (std::size_t i = 0; i < std::min(n, N); ++i) pc[i] = raw.value(i);
    if (n < N) pc[n] = 1;
    return {n, SeriesApprox(p, N, std::move(pc)), V, p};
}

/// Compares the preparations of two congruent series at the guaranteed precisions.
inline bool check_stability(const SeriesApprox& f, const SeriesApprox& g, std::size_t n, std::size_t N) {
    require_same_prime(f, g);
    const auto of = distinguished_order(f.at_level(std::min(f.level(), (n + 1) * N)));
    const auto og = distinguished_order(g.at_level(std::min(g.level(), (n + 1) * N)));
    if (of.order != og.order)
        fail(Errc::PreconditionViolation, "series are distinguished of different orders");
    const std::size_t avail = std::min(f.level(), g.level());
    const std::size_t Np = std::max(N, std::min(N + 1, avail / (n + 1)));

    const auto pf = prepare(f, n, N), pg = prepare(g, n, N);
    if (!(pf.U_inv == pg.U_inv)) return false;
    if (Np == N) return pf.P == pg.P;
    return prepare(f, n, Np).P == prepare(g, n, Np).P;
}

struct FactorizationUnit {
    ResidueElement unit_inverse;
    std::vector<PadicPoly> factors;
};

/// Given polynomial factors with p | constant term exactly for the first k,
/// returns (u^-1, Psi_1..Psi_k) with u the leading coefficient of Psi_1...Psi_k.
inline FactorizationUnit weierstrass_from_factorization(const std::vector<PadicPoly>& factors, std::size_t k) {
    if (k > factors.size()) fail(Errc::IndexingViolation, "k exceeds the number of factors");
    if (factors.empty()) fail(Errc::PreconditionViolation, "no factors given");
    const Integer& p = factors.front().prime();
    std::size_t prec = kExactPrecision;
    for (const auto& f : factors) {
        if (f.prime() != p) fail(Errc::PrimeMismatch, "factors over different primes");
        prec = std::min(prec, f.precision());
    }
    if (prec == kExactPrecision) fail(Errc::PreconditionViolation, "factors need a finite precision");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool in_ideal = divides(p, factors[i][0]);
        if (in_ideal != (i < k))
            fail(Errc::IndexingViolation, "factor " + std::to_string(i + 1) +
                                              (in_ideal ? " has constant term in pZ but index > k" : " has unit constant term but index <= k"));
    }
    ResidueElement u(p, prec, 1);
    std::vector<PadicPoly> out;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& f = factors[i];
        u = u * ResidueElement(p, prec, f.coeffs().back());
        out.push_back(f.at_precision(prec));
    }
    return {residue_invert(u), std::move(out)};
}

} // namespace psf
