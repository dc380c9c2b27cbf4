#pragma once

// Command dispatch for the psfactor tool. `run` never throws: library errors
// become exit code 1, an Unresolved verdict exit code 2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expression.hpp"
#include "factorization.hpp"
#include "padic_poly.hpp"
#include "weierstrass.hpp"

namespace psf::cli {

enum class Command { Weierstrass, Irreducible, Factor, Split, PadicFactor };
enum class Format { Text, Json };
enum class Method { Series, Chi, Squarefree };

inline std::string_view command_name(Command c) {
    switch (c) {
    case Command::Weierstrass: return "weierstrass";
    case Command::Irreducible: return "irreducible";
    case Command::Factor: return "factor";
    case Command::Split: return "split";
    case Command::PadicFactor: return "padic-factor";
    }
    return "?";
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnresolved = 2;

struct CommandConfig {
    Command command = Command::Factor;
    std::optional<Integer> prime;
    std::optional<std::size_t> precision; // command default when unset
    Format format = Format::Text;
    Method method = Method::Series;        // irreducible only
    std::optional<std::size_t> series;     // input is f mod X^M rather than a polynomial
    bool assert_content = false;
    bool assert_order = false;
    std::size_t max_precision = default_max_precision();

    std::size_t effective_precision() const {
        if (precision) return *precision;
        return command == Command::Irreducible ? 32 : 16;
    }

    SeriesAssertions assertions() const { return {!series.has_value(), assert_content, assert_order}; }

    void validate() const {
        if (precision && *precision == 0) fail(Errc::PreconditionViolation, "precision must be at least 1");
        if ((command == Command::Weierstrass || command == Command::PadicFactor) && !prime)
            fail(Errc::PreconditionViolation, std::string(command_name(command)) + " requires --prime");
        if (command == Command::Irreducible && method == Method::Chi && !prime)
            fail(Errc::PreconditionViolation, "--method chi requires --prime");
        if (prime && !is_probable_prime(*prime)) fail(Errc::NotPrime, to_string(*prime) + " is not prime");
        if (series && *series == 0) fail(Errc::PreconditionViolation, "series truncation order must be at least 1");
        if (command == Command::PadicFactor && series) fail(Errc::PreconditionViolation, "padic-factor takes a polynomial");
    }
};

struct RunOutput {
    std::string text;
    int exit_code;
};

namespace detail {

using nlohmann::json;

/// Every command fills the same fields; unused ones stay null or empty.
struct Report {
    std::string command;
    std::string input;
    std::optional<Integer> prime;
    std::optional<std::size_t> precision;
    std::string verdict;
    std::optional<std::string> unit;
    std::vector<std::string> factors;
    std::vector<std::string> factor_notes;
    std::vector<std::string> certificate;
    std::vector<std::string> assertions;
    std::optional<bool> verified;
    std::string check; // what `verified` refers to
    std::string reason;
    std::optional<Error> error;
};

inline json to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["input"] = r.input;
    j["prime"] = r.prime ? json(to_string(*r.prime)) : json(nullptr);
    j["precision"] = r.precision ? json(*r.precision) : json(nullptr);
    j["verdict"] = r.verdict;
    j["unit"] = r.unit ? json(*r.unit) : json(nullptr);
    j["factors"] = json::array();
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        json f;
        f["value"] = r.factors[i];
        f["note"] = i < r.factor_notes.size() ? r.factor_notes[i] : "";
        j["factors"].push_back(std::move(f));
    }
    j["certificate"] = r.certificate;
    j["assertions"] = r.assertions;
    j["verified"] = r.verified ? json(*r.verified) : json(nullptr);
    j["check"] = r.check;
    j["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
    if (r.error) j["error"] = {{"code", std::string(errc_name(r.error->code()))}, {"message", r.error->what()}};
    else j["error"] = nullptr;
    return j;
}

inline std::string to_text(const Report& r) {
    std::string s;
    if (r.error) return std::string("error: ") + r.error->what() + "\n";
    s += r.verdict + "\n";
    if (!r.reason.empty()) s += "reason: " + r.reason + "\n";
    if (r.unit) s += "unit: " + *r.unit + "\n";
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        s += "factor " + std::to_string(i + 1) + ": " + r.factors[i];
        if (i < r.factor_notes.size() && !r.factor_notes[i].empty()) s += "  [" + r.factor_notes[i] + "]";
        s += "\n";
    }
    for (const auto& c : r.certificate) s += "certificate: " + c + "\n";
    if (!r.assertions.empty()) {
        s += "conditional on asserted:";
        for (const auto& a : r.assertions) s += " " + a;
        s += "\n";
    }
    if (r.verified) s += "check " + r.check + ": " + (*r.verified ? "verified" : "UNVERIFIED") + "\n";
    return s;
}

inline SeriesTrunc input_series(const CommandConfig& cfg, const Expression& e, std::size_t N) {
    if (cfg.series) {
        if (e.coeffs.size() > *cfg.series)
            fail(Errc::PreconditionViolation, "input has terms of degree >= the truncation order " + std::to_string(*cfg.series));
        return SeriesTrunc(e.coeffs, *cfg.series);
    }
    return SeriesTrunc(e.coeffs, std::max(N, e.coeffs.size()));
}

inline std::string provenance_note(const FactorProvenance& p) {
    switch (p.kind) {
    case FactorProvenance::Kind::Content: return "content prime " + to_string(p.prime);
    case FactorProvenance::Kind::X: return "X";
    case FactorProvenance::Kind::Lifted:
        return "p=" + to_string(p.prime) + ", t=" + std::to_string(p.t) + ", lifted from " + p.padic_factor;
    }
    return "";
}

inline int run_weierstrass(const CommandConfig& cfg, const Expression& e, Report& r) {
    const Integer& p = *cfg.prime;
    const std::size_t N = cfg.effective_precision();
    const auto& c = e.coeffs;
    std::size_t n = 0;
    const std::size_t visible = cfg.series ? *cfg.series : c.size();
    while (n < visible && n < c.size() && divides(p, c[n])) ++n;
    if (n >= c.size()) fail(Errc::NotDistinguished, "every visible coefficient is divisible by " + to_string(p));
    const std::size_t level = (n + 1) * N;
    const SeriesApprox f = cfg.series ? reduce_to_approx(input_series(cfg, e, N), p, level) : reduce_poly_to_approx(c, p, level);
    const auto w = prepare(f, n, N);
    r.verdict = "PREPARED";
    r.unit = render(w.U_inv);
    r.factors.push_back(render(w.P));
    r.factor_notes.push_back("P = " + render_poly(w.polynomial()) + ", order " + std::to_string(n));
    r.certificate.push_back("prepared from f mod A^" + std::to_string(level) + "; unit is U^-1");
    r.assertions = cfg.assertions().labels();
    r.verified = approx_mul(w.U_inv, f.at_level(N)) == w.P;
    r.check = "U^-1 * f = P mod A^" + std::to_string(N);
    return kExitOk;
}

inline int run_irreducible(const CommandConfig& cfg, const Expression& e, Report& r) {
    const std::size_t N = cfg.effective_precision();
    const SeriesTrunc f = input_series(cfg, e, N);
    IrreducibleOptions opt{cfg.assertions(), cfg.max_precision, N};
    IrreducibilityVerdict v = [&] {
        switch (cfg.method) {
        case Method::Chi: return irreducible_poly_via_chi(f, *cfg.prime, opt);
        case Method::Squarefree: return irreducible_squarefree(f, opt);
        case Method::Series: break;
        }
        return irreducible_series(f, opt);
    }();
    r.verdict = std::string(verdict_name(v.verdict));
    r.reason = v.reason;
    r.certificate = v.certificate;
    r.assertions = v.assertions;
    if (v.verdict == Verdict::Reducible) {
        const std::size_t W = psf::detail::witness_order(f, opt);
        for (const auto& w : v.witness) r.factors.push_back(render(w.truncated(W)));
        r.factor_notes.assign(r.factors.size(), "witness");
        r.verified = !v.witness.empty() && v.witness_product(W) == f.truncated(W);
        r.check = "product of witnesses = f mod X^" + std::to_string(W);
    }
    return v.verdict == Verdict::Unresolved ? kExitUnresolved : kExitOk;
}

inline int run_factor(const CommandConfig& cfg, const Expression& e, Report& r) {
    const std::size_t N = cfg.effective_precision();
    const SeriesTrunc f = input_series(cfg, e, N);
    FactorizationResult fr;
    try {
        fr = factor_series(f, N, FactorOptions{cfg.assertions(), cfg.max_precision});
    } catch (const Error& err) {
        if (err.code() != Errc::UnresolvedPadicFactorization && err.code() != Errc::PrecisionLoss) throw;
        r.verdict = "UNRESOLVED";
        r.reason = err.what();
        r.assertions = cfg.assertions().labels();
        return kExitUnresolved;
    }
    r.verdict = "FACTORED";
    r.unit = render(fr.unit);
    for (std::size_t i = 0; i < fr.factors.size(); ++i) {
        r.factors.push_back(render(fr.factors[i]));
        r.factor_notes.push_back(provenance_note(fr.provenance[i]));
    }
    r.certificate = fr.certificate;
    r.assertions = fr.assertions;
    r.verified = fr.product() == f.truncated(N);
    r.check = "unit * product = f mod X^" + std::to_string(N);
    return kExitOk;
}

inline int run_split(const CommandConfig& cfg, const Expression& e, Report& r) {
    const std::size_t N = cfg.effective_precision();
    const SeriesTrunc f = input_series(cfg, e, N).truncated(N);
    const auto s = split_by_constant(f);
    r.verdict = "SPLIT";
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        r.factors.push_back(render(s.parts[i]));
        r.factor_notes.push_back("constant term " + to_string(s.parts[i][0]));
    }
    r.certificate.push_back("g = " + render(s.g));
    r.assertions = cfg.assertions().labels();
    r.verified = s.product() == f;
    r.check = "product of parts = f mod X^" + std::to_string(N);
    return kExitOk;
}

inline int run_padic_factor(const CommandConfig& cfg, const Expression& e, Report& r) {
    const Integer& p = *cfg.prime;
    const PadicPoly f = cfg.precision ? PadicPoly(p, *cfg.precision, e.coeffs) : PadicPoly::exact(p, e.coeffs);
    if (!cfg.precision) r.precision.reset();
    const auto out = padic_factor(f);
    r.verdict = std::string(verdict_name(out.verdict));
    r.reason = out.reason;
    r.unit = to_string(out.unit);
    for (const auto& g : out.factors) r.factors.push_back(render(g));
    r.certificate = out.certificate;
    const std::size_t k = out.precision();
    PadicPoly prod(p, k, {out.unit});
    for (const auto& g : out.factors) prod = prod * g;
    r.verified = prod.congruent(f, std::min(k, f.precision()));
    r.check = k == kExactPrecision ? std::string("unit * product = f exactly")
                                   : "unit * product = f mod " + to_string(p) + "^" + std::to_string(std::min(k, f.precision()));
    return out.verdict == PadicVerdict::Unresolved ? kExitUnresolved : kExitOk;
}

} // namespace detail

inline RunOutput run(const CommandConfig& cfg, const Expression& e) {
    detail::Report r;
    r.command = std::string(command_name(cfg.command));
    r.input = e.render();
    r.prime = cfg.prime;
    r.precision = cfg.effective_precision();
    int code = kExitError;
    try {
        cfg.validate();
        switch (cfg.command) {
        case Command::Weierstrass: code = detail::run_weierstrass(cfg, e, r); break;
        case Command::Irreducible: code = detail::run_irreducible(cfg, e, r); break;
        case Command::Factor: code = detail::run_factor(cfg, e, r); break;
        case Command::Split: code = detail::run_split(cfg, e, r); break;
        case Command::PadicFactor: code = detail::run_padic_factor(cfg, e, r); break;
        }
    } catch (const Error& err) {
        r.error = err;
        code = kExitError;
    } catch (const std::exception& ex) {
        r.error = Error(Errc::Internal, ex.what());
        code = kExitError;
    }
    if (cfg.format == Format::Json) return {detail::to_json(r).dump(2) + "\n", code};
    return {detail::to_text(r), code};
}

} // namespace psf::cli
