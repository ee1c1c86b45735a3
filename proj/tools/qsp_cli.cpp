#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qsp/certificate.hpp"
#include "qsp/expr.hpp"
#include "qsp/suites.hpp"

using namespace qsp;

namespace {

struct Common {
    int r = 3, d = 2;
    std::string variant = "jj", spec = "generic";

    void add(CLI::App* app) {
        app->add_option("--r", r, "rank parameter r (n = 2r + 2)")->capture_default_str();
        app->add_option("--d", d, "tensor power d")->capture_default_str();
        app->add_option("--variant", variant, "jj, ji, ij or ii")->capture_default_str();
        app->add_option("--spec", spec, "generic, b2 (q0=q1), b1 (q0=q1=q) or d1 (q0=q1=1)")->capture_default_str();
    }
    RepParams params() const {
        RepParams p;
        p.r = r;
        p.d = d;
        p.variant = variant_by_name(variant);
        p.spec = Specialization::by_name(spec);
        return p;
    }
};

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for the three-parameter affine Hecke algebra of type C, its coideal duals and Schur algebras"};
    app.require_subcommand(1);

    Common vc;
    SuiteConfig cfg;
    std::string format = "md", output;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "suite name (see 'list')")->required();
    vc.add(verify);
    verify->add_option("--window", cfg.window, "window multiplier m: coordinates in [-m n, m n]")->capture_default_str();
    verify->add_option("--max-len", cfg.max_len, "max word length for Weyl/Hecke sweeps")->capture_default_str();
    verify->add_option("--cert-len", cfg.cert_len, "max length of g in the generation certificate")->capture_default_str();
    verify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
    verify->add_option("--cache-dir", cfg.cache_dir, "table cache directory (default: $QSP_CACHE_DIR)");
    verify->add_option("--output", output, "write the report to a file");

    Common ec;
    std::string kind, expr;
    auto* eval = app.add_subcommand("eval", "evaluate an expression and print its canonical form");
    eval->add_option("--kind", kind, "scalar, hecke, tensor or schur")->required();
    eval->add_option("--expr", expr, "expression text")->required();
    ec.add(eval);

    Common cc;
    int cert_len = 3;
    std::string cert_out;
    auto* cert = app.add_subcommand("certificate", "emit the generation certificate as JSON");
    cc.add(cert);
    cert->add_option("--cert-len", cert_len, "max length of g")->capture_default_str();
    cert->add_option("--output", cert_out, "write to a file");

    auto* list = app.add_subcommand("list", "list suite names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (auto& s : suite_names()) std::cout << s << "\n";
            return 0;
        }
        if (*verify) {
            RepParams p = vc.params();
            cfg.r = p.r;
            cfg.d = p.d;
            cfg.variant = p.variant;
            cfg.spec = p.spec;
            if (cfg.cache_dir.empty())
                if (const char* env = std::getenv("QSP_CACHE_DIR")) cfg.cache_dir = env;
            SuiteReport rep = run_suite(cfg);
            emit(format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_markdown(), output);
            return rep.passed() ? 0 : 1;
        }
        if (*eval) {
            ExprContext ctx(ec.params());
            std::cout << dump_element(kind_by_name(kind), expr, ctx) << "\n";
            return 0;
        }
        if (*cert) {
            RepParams p = cc.params();
            SchurContext S(p);
            Certificate C = generate_schur_basis_from_psi(S, cert_len);
            emit(C.to_json().dump(1) + "\n", cert_out);
            return C.all_verified() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
