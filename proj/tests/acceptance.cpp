// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "psfactor/psfactor.hpp"

using namespace psf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

long pick(std::mt19937_64& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

IntPoly truncate(IntPoly f, std::size_t N) {
    if (f.size() > N) f.resize(N);
    return f;
}

/// Exact product of the factors mod X^N, by plain convolution.
IntPoly product_mod(const std::vector<SeriesTrunc>& fs, std::size_t N) {
    IntPoly acc{Integer(1)};
    for (const auto& f : fs) acc = truncate(oracle::mul(acc, f.coeffs()), N);
    acc.resize(N);
    return acc;
}

IntPoly padded(const IntPoly& f, std::size_t N) {
    IntPoly g = truncate(f, N);
    g.resize(N);
    return g;
}

/// Random element of A^m, A = (p, X), supported in degrees < len.
IntPoly ideal_element(std::mt19937_64& rng, long p, std::size_t m, std::size_t len) {
    IntPoly e(len);
    for (std::size_t i = 0; i < len; ++i) e[i] = oracle::pw(p, i < m ? m - i : 0) * pick(rng, -3, 3);
    return e;
}

IntPoly add(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

WeierstrassResult prep(const IntPoly& f, long p, std::size_t n, std::size_t N) {
    return prepare(reduce_poly_to_approx(f, p, (n + 1) * N), n, N);
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    failures += !o.pass;
}

// --- 1 ------------------------------------------------------------------------

Outcome examples() {
    struct Case {
        const char* text;
        Verdict want;
    };
    const Case cases[] = {{"6+X", Verdict::Reducible},      {"(1+X)*(2+X)", Verdict::Irreducible},
                          {"X^2 - 2", Verdict::Irreducible}, {"X^2 - 3", Verdict::Irreducible},
                          {"X^2 - 5", Verdict::Irreducible}, {"2 - X^2", Verdict::Irreducible}};
    std::string bad;
    double worst = 0;
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const auto e = parse_expression(c.text);
        const SeriesTrunc f(e.coeffs, std::max<std::size_t>(32, e.coeffs.size()));
        const auto v = irreducible_series(f);
        bool ok = v.verdict == c.want;
        if (ok && c.want == Verdict::Reducible) {
            ok = v.witness.size() >= 2 && product_mod(v.witness, 32) == padded(e.coeffs, 32);
            for (const auto& w : v.witness) ok = ok && w[0] != 1 && w[0] != -1;
        }
        cli::CommandConfig cfg;
        cfg.command = cli::Command::Irreducible;
        const auto out = cli::run(cfg, e);
        ok = ok && out.exit_code == cli::kExitOk && out.text.rfind(std::string(verdict_name(c.want)) + "\n", 0) == 0;
        const double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        if (!ok || dt >= 1.0) bad += std::string(" ") + c.text;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "6 examples, slowest %.3fs", worst);
    return {bad.empty(), bad.empty() ? buf : "mismatch:" + bad};
}

// --- 2 ------------------------------------------------------------------------

Outcome preparation() {
    std::mt19937_64 rng(2001);
    const auto t0 = Clock::now();
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        const std::size_t n = 1 + rng() % 3, N = 1 + rng() % 6;
        const IntPoly f = oracle::random_distinguished(rng, p, n, rng() % 4);
        const auto w = prep(f, p, n, N);
        bool ok = approx_mul(w.U_inv, reduce_poly_to_approx(f, p, N)) == w.P;
        for (std::size_t i = 0; i < std::min(n, N); ++i) ok = ok && oracle::modp(w.P.value(i), p) == 0;
        if (n < N) ok = ok && w.P.value(n) == 1;
        for (std::size_t i = n + 1; i < N; ++i) ok = ok && w.P.value(i) == 0;
        ok = ok && w.U_inv.values() == oracle::weierstrass_unit_inverse(f, p, n, N);
        bad += !ok;
    }
    const double dt = seconds_since(t0);
    return {bad == 0 && dt < 10.0, std::to_string(bad) + " of 500 mismatched"};
}

// --- 3 ------------------------------------------------------------------------

Outcome stability() {
    std::mt19937_64 rng(3001);
    int bad = 0;
    for (int it = 0; it < 100; ++it) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        const std::size_t n = 1 + rng() % 3, N = 1 + rng() % 4;
        const IntPoly f = oracle::random_distinguished(rng, p, n, rng() % 3);
        const std::size_t m = (n + 1) * N;
        const IntPoly g = add(f, ideal_element(rng, p, m, m + 2));
        // both known to level (n+1)(N+1), so P can be compared at N + 1
        const std::size_t L = (n + 1) * (N + 1);
        const auto F = reduce_poly_to_approx(f, p, L), G = reduce_poly_to_approx(g, p, L);
        const bool ok = check_stability(F, G, n, N) && prepare(F, n, N + 1).P == prepare(G, n, N + 1).P &&
                        prepare(F, n, N).U_inv == prepare(G, n, N).U_inv;
        bad += !ok;
    }
    return {bad == 0, std::to_string(bad) + " of 100 pairs disagreed"};
}

// --- 4 ------------------------------------------------------------------------

Outcome multiplicativity() {
    std::mt19937_64 rng(4001);
    int bad = 0;
    for (int it = 0; it < 100; ++it) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        const std::size_t a = 1 + rng() % 2, b = 1 + rng() % 2, N = 1 + rng() % 5;
        const IntPoly g = oracle::random_distinguished(rng, p, a, rng() % 3);
        const IntPoly h = oracle::random_distinguished(rng, p, b, rng() % 3);
        const auto wg = prep(g, p, a, N), wh = prep(h, p, b, N), wgh = prep(oracle::mul(g, h), p, a + b, N);
        bad += !(approx_mul(wg.P, wh.P) == wgh.P);
    }
    return {bad == 0, std::to_string(bad) + " of 100 pairs disagreed"};
}

// --- 5 ------------------------------------------------------------------------

Outcome recursions() {
    const auto two = split_two(SeriesTrunc(ints({6, 1}), 4), 2, 3, -1, 1);
    const bool ex1 = two.g.coeffs() == ints({0, 1, 1, 2}) && product_mod(two.parts, 4) == padded(ints({6, 1}), 4);

    const std::vector<Integer> a = ints({2, 3, 5});
    const auto multi = split_multi(SeriesTrunc(ints({30, 1}), 16), a, partition_of_unity(a));
    bool ex2 = multi.parts.size() == 3 && product_mod(multi.parts, 16) == padded(ints({30, 1}), 16);
    for (std::size_t i = 0; ex2 && i < 3; ++i) ex2 = multi.parts[i][0] == a[i];

    std::mt19937_64 rng(5001);
    int bad = 0, unresolved = 0;
    for (int it = 0; it < 200; ++it) {
        IntPoly c(1 + rng() % 4);
        for (auto& v : c) v = pick(rng, -50, 50);
        if (c[0] == 0) c[0] = 1 + static_cast<long>(rng() % 50);
        const SeriesTrunc f(c, 12);
        try {
            const auto r = factor_series(f, 12);
            const std::size_t w = c[0] == 1 || c[0] == -1 ? 0 : omega(c[0]).value();
            bad += r.factors.size() < w;
        } catch (const Error& e) {
            if (e.code() != Errc::UnresolvedPadicFactorization && e.code() != Errc::PrecisionLoss) throw;
            ++unresolved;
        }
    }
    std::string d = std::string("split_two ") + (ex1 ? "ok" : "WRONG") + ", split_multi " + (ex2 ? "ok" : "WRONG") + ", count bound failed on " +
                    std::to_string(bad) + " of " + std::to_string(200 - unresolved) + " resolved (" + std::to_string(unresolved) + " unresolved)";
    return {ex1 && ex2 && bad == 0, d};
}

// --- 6 ------------------------------------------------------------------------

bool lift_relation(const IntPoly& f, const LiftResult& r, long p, std::size_t e, std::size_t N) {
    for (std::size_t n = 0; n + 1 < N; ++n) {
        Integer s = 0;
        for (std::size_t i = 0; i <= n && i < f.size(); ++i) s += r.h[n - i].value() * f[i];
        if (oracle::modp(s - r.g[n], oracle::pw(p, e * (N - 1 - n))) != 0) return false;
    }
    return true;
}

Outcome lifting() {
    const IntPoly f = ints({6, 1});
    const auto r = lift_factor(SeriesTrunc(f, 4), 2, 2, 4);
    const bool ex = r.g.truncated(3).coeffs() == ints({2, 1, 1}) && lift_relation(f, r, 2, 1, 4);

    std::mt19937_64 rng(6001);
    int bad = 0;
    for (int it = 0; it < 50; ++it) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        const std::size_t N = 2 + rng() % 5, e = 1 + rng() % 2;
        long u = pick(rng, 1, 30);
        if (u % p == 0) ++u;
        IntPoly c(N);
        c[0] = oracle::pw(p, e) * u;
        for (std::size_t i = 1; i < N; ++i) c[i] = pick(rng, -20, 20);
        IntPoly c2 = c;
        // (f_0, X)^N = (p^e, X)^N
        for (std::size_t i = 0; i < N; ++i) c2[i] += oracle::pw(p, e * (N - i)) * pick(rng, -3, 3);
        const Integer d = oracle::pw(p, e);
        const auto r1 = lift_factor(SeriesTrunc(c), p, d, N), r2 = lift_factor(SeriesTrunc(c2), p, d, N);
        bad += !(r1.g == r2.g && lift_relation(c, r1, p, e, N) && lift_relation(c2, r2, p, e, N));
    }
    return {ex && bad == 0, std::string("6+X lift ") + (ex ? "ok" : "WRONG") + ", " + std::to_string(bad) + " of 50 perturbations changed g"};
}

// --- 7 ------------------------------------------------------------------------

Integer discriminant_monic(const IntPoly& f) {
    if (f.size() == 3) return f[1] * f[1] - 4 * f[0];
    const Integer &b = f[2], &c = f[1], &d = f[0];
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

Outcome oracle_equivalence() {
    std::size_t total = 0, unresolved = 0, disagree = 0;
    std::string first_bad;
    for (long p : {2L, 3L}) {
        std::vector<long> vals;
        for (long v = -20; v <= 20; ++v)
            if (v % p == 0) vals.push_back(v);
        for (std::size_t n : {2u, 3u}) {
            std::vector<std::size_t> idx(n, 0);
            for (;;) {
                IntPoly f(n + 1);
                for (std::size_t i = 0; i < n; ++i) f[i] = vals[idx[i]];
                f[n] = 1;
                const Integer D = discriminant_monic(f);
                if (D != 0) {
                    ++total;
                    const bool reducible = oracle::has_root_in_max_ideal(f, p, oracle::val(D, p));
                    const auto out = padic_factor(PadicPoly::exact(p, f));
                    if (out.verdict == PadicVerdict::Unresolved) ++unresolved;
                    else if ((out.verdict == PadicVerdict::Factored) != reducible) {
                        ++disagree;
                        if (first_bad.empty()) first_bad = " first: p=" + std::to_string(p) + " " + render_poly(f);
                    }
                }
                std::size_t k = 0;
                while (k < n && ++idx[k] == vals.size()) idx[k++] = 0;
                if (k == n) break;
            }
        }
    }
    const double rate = total ? 100.0 * static_cast<double>(unresolved) / static_cast<double>(total) : 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu squarefree polynomials, %zu disagreements, unresolved %zu (%.2f%%)", total, disagree, unresolved, rate);
    return {disagree == 0 && rate < 10.0, buf + first_bad};
}

// --- 8 ------------------------------------------------------------------------

struct Built {
    IntPoly f;
    std::size_t count; // nonunit factors by construction
};

IntPoly primitive_tail(std::mt19937_64& rng, IntPoly head, std::size_t extra) {
    for (std::size_t i = 0; i < extra; ++i) head.push_back(pick(rng, -9, 9));
    head.push_back(1);
    return head;
}

Built random_product(std::mt19937_64& rng) {
    const long primes[] = {2, 3, 5, 7};
    IntPoly f = primitive_tail(rng, {pick(rng, 0, 1) ? 1 : -1}, rng() % 3); // unit
    std::size_t count = 0;
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t j = 0; j < k; ++j) {
        const long p = primes[rng() % 4];
        IntPoly g;
        switch (rng() % 5) {
        case 0: g = {p}; break;                                                    // content prime
        case 1: g = {0, 1}; break;                                                 // X
        case 2: g = primitive_tail(rng, {p * (pick(rng, 0, 1) ? 1 : -1)}, rng() % 3); // prime constant term
        case 3: {                                                                   // +-p^t + b X, p does not divide b
            long b = pick(rng, 1, 9);
            if (b % p == 0) ++b;
            g = primitive_tail(rng, {oracle::pw(p, 1 + rng() % 3) * (pick(rng, 0, 1) ? 1 : -1), b}, rng() % 2);
            break;
        }
        default: { // Eisenstein: p + p c X + u X^2, p does not divide u
            long u = pick(rng, 1, 9);
            if (u % p == 0) ++u;
            g = {p, p * pick(rng, -2, 2), u};
            break;
        }
        }
        f = oracle::mul(f, g);
        ++count;
    }
    return {f, count};
}

Outcome end_to_end() {
    std::mt19937_64 rng(8001);
    const std::size_t N = 16;
    int wrong_product = 0, wrong_count = 0, resolved = 0;
    for (int it = 0; it < 100; ++it) {
        const Built b = random_product(rng);
        const SeriesTrunc f(b.f, std::max(N, b.f.size()));
        try {
            const auto r = factor_series(f, N);
            ++resolved;
            std::vector<SeriesTrunc> all = r.factors;
            all.push_back(r.unit);
            wrong_product += !(product_mod(all, N) == padded(b.f, N)) || !(r.unit[0] == 1 || r.unit[0] == -1);
            wrong_count += r.factors.size() != b.count;
        } catch (const Error& e) {
            if (e.code() != Errc::UnresolvedPadicFactorization && e.code() != Errc::PrecisionLoss) throw;
        }
    }
    return {wrong_product == 0 && wrong_count == 0 && resolved > 0,
            std::to_string(resolved) + " of 100 resolved, " + std::to_string(wrong_product) + " wrong products, " +
                std::to_string(wrong_count) + " wrong factor counts"};
}

} // namespace

int main() {
    criterion(1, "worked examples", examples);
    criterion(2, "preparation identity vs back-substitution", preparation);
    criterion(3, "preparation stability", stability);
    criterion(4, "multiplicativity of P", multiplicativity);
    criterion(5, "coprime splitting and factor-count bound", recursions);
    criterion(6, "lifting and its stability", lifting);
    criterion(7, "p-adic verdicts vs exhaustive root search", oracle_equivalence);
    criterion(8, "end-to-end factorization mod X^16", end_to_end);
    return failures == 0 ? 0 : 1;
}
