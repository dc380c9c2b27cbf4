#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "psfactor/cli.hpp"

namespace {

using psf::cli::Command;
using psf::cli::CommandConfig;

void add_common(CLI::App* sub, CommandConfig& cfg, std::string& prime, std::string& expr, std::string& format) {
    sub->add_option("expression", expr, "polynomial in X, e.g. \"6 + X\"")->required();
    sub->add_option("--prime,-p", prime, "prime p");
    sub->add_option("--prec,-N", cfg.precision, "precision N");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--series", cfg.series, "treat the input as a series known mod X^M");
    sub->add_flag("--assert-content", cfg.assert_content, "the visible content is the series content");
    sub->add_flag("--assert-order", cfg.assert_order, "the visible X-order is the series order");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factorization and irreducibility in Z[[X]]"};
    app.require_subcommand(1);

    CommandConfig cfg;
    std::string prime, expr, format = "text", method = "series";
    const std::map<std::string, Command> commands = {
        {"weierstrass", Command::Weierstrass}, {"irreducible", Command::Irreducible}, {"factor", Command::Factor},
        {"split", Command::Split},             {"padic-factor", Command::PadicFactor},
    };
    const std::map<std::string, std::string> help = {
        {"weierstrass", "Weierstrass preparation f = U * P at a prime"},
        {"irreducible", "decide irreducibility in Z[[X]]"},
        {"factor", "prime factorization mod X^N"},
        {"split", "split along the prime powers of f(0)"},
        {"padic-factor", "factor a polynomial over Z_p"},
    };
    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        add_common(sub, cfg, prime, expr, format);
        if (cmd == Command::Irreducible)
            sub->add_option("--method", method, "decision procedure")->check(CLI::IsMember({"series", "chi", "squarefree"}));
        sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
    }
    CLI11_PARSE(app, argc, argv);

    cfg.format = format == "json" ? psf::cli::Format::Json : psf::cli::Format::Text;
    cfg.method = method == "chi" ? psf::cli::Method::Chi : method == "squarefree" ? psf::cli::Method::Squarefree : psf::cli::Method::Series;
    try {
        if (!prime.empty()) cfg.prime = psf::Integer(prime);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: --prime must be an integer\n";
        return psf::cli::kExitError;
    }

    psf::Expression e;
    try {
        e = psf::parse_expression(expr);
    } catch (const psf::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return psf::cli::kExitError;
    }
    const auto out = psf::cli::run(cfg, e);
    (out.exit_code == psf::cli::kExitError ? std::cerr : std::cout) << out.text;
    return out.exit_code;
}
