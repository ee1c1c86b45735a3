// Acceptance runner: one PASS/FAIL line per criterion, then a summary. Always exits 0.
#include "qsp/certificate.hpp"
#include "qsp/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qsp;

namespace {

struct Outcome {
    int checks = 0;
    double seconds = 0;
    std::vector<std::string> failures;

    void add(const CheckRecord& c)
    {
        ++checks;
        seconds += c.seconds;
        if (!c.pass) failures.push_back(c.id + (c.counterexample.empty() ? "" : ": " + c.counterexample));
    }
    void add(const SuiteReport& rep, const std::function<bool(const CheckRecord&)>& keep = {})
    {
        for (auto& c : rep.checks)
            if (!keep || keep(c)) add(c);
    }
    void fail(std::string why) { failures.push_back(std::move(why)); }
};

SuiteConfig cfg(const std::string& suite, int r, int d, Variant v = Variant::jj)
{
    SuiteConfig c;
    c.suite = suite;
    c.r = r;
    c.d = d;
    c.variant = v;
    return c;
}

double now()
{
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

bool has_prefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

int passed = 0;
int total = 0;

void report(int id, const std::string& what, const Outcome& o, double budget)
{
    ++total;
    bool ok = o.failures.empty() && o.checks > 0 && o.seconds <= budget;
    if (ok) ++passed;
    char head[64];
    std::snprintf(head, sizeof head, "criterion %2d %s", id, ok ? "PASS" : "FAIL");
    std::ostringstream line;
    line << head << "  " << what << "  [" << o.checks << " checks, " << o.seconds << " s, budget " << budget << " s]";
    if (o.checks == 0) line << "  no checks ran";
    if (o.seconds > budget) line << "  over time budget";
    std::cout << line.str() << "\n";
    std::size_t shown = 0;
    for (auto& f : o.failures) {
        if (++shown > 6) {
            std::cout << "    ... " << o.failures.size() - 6 << " more\n";
            break;
        }
        std::cout << "    reason: " << f << "\n";
    }
    std::cout.flush();
}

// Single-factor coideal action against the case-by-case closed form.
Outcome closed_form(int r)
{
    Outcome o;
    double t0 = now();
    RepParams p;
    p.r = r;
    p.d = 1;
    CoidealAction C(p);
    int n = 2 * r + 2;
    std::vector<CoidealGen> gens;
    for (int i = 0; i <= r; ++i) {
        gens.push_back({CoidealGen::e, i, 1});
        gens.push_back({CoidealGen::f, i, 1});
    }
    for (int a = 0; a <= r + 1; ++a) {
        gens.push_back({CoidealGen::h, a, 1});
        gens.push_back({CoidealGen::h, a, -1});
    }
    for (auto& g : gens)
        for (int j = -2 * n; j <= 2 * n; ++j) {
            ++o.checks;
            if (C.act(TensorVec::basis({j}), g) != closed_form_jj(g, j, r, Scalar::q0(), Scalar::q1(), Scalar::q()))
                o.fail(g.name() + " on v_" + std::to_string(j));
        }
    o.seconds = now() - t0;
    return o;
}

// Wall-counting length against BFS distance in the Cayley graph.
Outcome weyl_length(int d, int max_len)
{
    Outcome o;
    double t0 = now();
    WeylParams wp{d, 8};
    auto layers = elements_by_length(wp, max_len);
    for (int len = 0; len < (int)layers.size(); ++len)
        for (auto& g : layers[len]) {
            ++o.checks;
            if (g.length() != len) o.fail(g.str() + " has length " + std::to_string(g.length()) + ", BFS " + std::to_string(len));
        }
    o.seconds = now() - t0;
    return o;
}

// kappa_inv(kappa(x_lambda T_w)) = x_lambda T_w, compared as elements of H.
Outcome kappa_round_trip(int r, int d, int max_len)
{
    Outcome o;
    double t0 = now();
    RepParams p;
    p.r = r;
    p.d = d;
    SchurContext S(p);
    const Hecke& H = S.hecke().hecke();
    std::vector<WeylElt> ws;
    for (auto& layer : elements_by_length(p.weyl(), max_len)) ws.insert(ws.end(), layer.begin(), layer.end());
    for (auto& lam : S.compositions()) {
        HeckeElt x = S.x_lambda(lam);
        for (auto& w : ws) {
            ++o.checks;
            TElt t;
            t.parts[lam] = H.T(w);
            try {
                TElt back = S.kappa_inv(S.kappa(t));
                bool ok = back.parts.size() == 1 && back.parts.count(lam) &&
                          H.mul(x, back.parts.at(lam)) == H.mul(x, H.T(w));
                if (!ok) o.fail(comp_str(lam) + " " + w.str());
            } catch (const TriangularityError& e) {
                o.fail(comp_str(lam) + " " + w.str() + ": triangularity assertion fired: " + e.what());
            }
        }
    }
    o.seconds = now() - t0;
    return o;
}

}  // namespace

int main()
{
    double start = now();
    std::cout << "acceptance run\n";

    {
        Outcome o;
        o.add(run_suite(cfg("hecke-relations", 3, 2)));
        o.add(run_suite(cfg("hecke-relations", 3, 3)));
        report(1, "Hecke presentation d=2,3", o, 120);
    }
    {
        Outcome o;
        o.add(run_suite(cfg("braid-td", 3, 2)));
        o.add(run_suite(cfg("braid-td", 3, 3)));
        report(2, "T_d quadratic, commutation and braid d=2,3", o, 60);
    }
    {
        Outcome o;
        o.add(run_suite(cfg("module-relations", 3, 2)));
        report(3, "Hecke relations on M_f, f in [-2n,2n]^d, r=3 d=2", o, 300);
    }
    {
        Outcome o;
        o.add(run_suite(cfg("commute", 3, 2)));
        report(4, "coideal and Hecke generators commute, jj r=3 d=2", o, 300);
    }
    {
        Outcome o;
        o.add(run_suite(cfg("coideal-serre", 3, 1)));
        o.add(run_suite(cfg("coideal-serre", 3, 2)));
        report(5, "coideal defining relations d=1,2", o, 300);
    }
    report(6, "d=1 closed form on v_j, |j| <= 2n, r=3", closed_form(3), 10);
    {
        Outcome o;
        o.add(run_suite(cfg("schur-xlm", 3, 2)));
        report(7, "x_lambda T_i = p_{s_i} x_lambda, 15 compositions r=3 d=2", o, 60);
    }
    {
        // the suite also carries a check of the computed Psi(e_r) coefficient; the criterion is the displayed one
        Outcome o;
        auto keep = [](const CheckRecord& c) { return !has_prefix(c.anchor, "Psi(e_r) with q0^-1 q1"); };
        o.add(run_suite(cfg("schur-psi", 3, 2)), keep);
        o.add(run_suite(cfg("schur-psi", 2, 1)), keep);
        report(8, "Psi on Chevalley generators as displayed, r=3 d=2 and r=2 d=1", o, 300);
    }

    SuiteReport gen32 = run_suite(cfg("schur-generate", 3, 2));
    SuiteReport gen21 = run_suite(cfg("schur-generate", 2, 1));
    {
        Outcome o;
        o.add(gen32, [](const CheckRecord& c) { return has_prefix(c.id, "product"); });
        report(9, "generator products phi^e phi^e = phi^e + q_{s_i}^-1 phi^{s_i}, and f~ variant, r=3 d=2", o, 60);
    }
    {
        Outcome o;
        auto keep = [](const CheckRecord& c) { return has_prefix(c.id, "certificate"); };
        o.add(gen21, keep);
        o.add(gen32, keep);
        report(10, "generation certificate l(g) <= 3, r=2 d=1 and r=3 d=2", o, 600);
    }
    {
        Outcome o;
        o.add(gen32, [](const CheckRecord& c) { return has_prefix(c.id, "idempotent"); });
        report(11, "weight idempotents by interpolation, r=3 d=2", o, 120);
    }
    {
        // the Psi(t) span checks are reported on their own line below, not part of this criterion
        Outcome o, span;
        auto is_span = [](const CheckRecord& c) { return has_prefix(c.anchor, "Psi(t) in"); };
        for (auto [r, d, v] : {std::tuple{3, 2, Variant::ji}, std::tuple{3, 2, Variant::ij}, std::tuple{2, 2, Variant::ii}}) {
            SuiteReport rep = run_suite(cfg("variants", r, d, v));
            o.add(rep, [&](const CheckRecord& c) { return !is_span(c); });
            span.add(rep, is_span);
        }
        report(12, "variant suites ji, ij r=3 d=2 and ii r=2 d=2", o, 900);
        std::cout << "    note: Psi(t) span checks " << span.checks - span.failures.size() << "/" << span.checks
                  << " pass (not part of the criterion)\n";
    }
    {
        Outcome o;
        o.add(run_suite(cfg("specialize-consistency", 3, 2)));
        report(13, "criteria 1, 3, 4 under q0=q1, q0=q1=q, q0=q1=1 and T_0 quadratic types", o, 600);
    }
    {
        Outcome o;
        for (int d : {2, 3}) {
            Outcome w = weyl_length(d, 8);
            o.checks += w.checks;
            o.seconds += w.seconds;
            o.failures.insert(o.failures.end(), w.failures.begin(), w.failures.end());
        }
        report(14, "wall-counting length = BFS distance, l <= 8, d=2,3", o, 120);
    }
    report(15, "kappa_inv kappa = id on x_lambda T_w, l(w) <= 4, r=3 d=2", kappa_round_trip(3, 2, 4), 180);

    std::cout << "summary: " << passed << "/" << total << " criteria pass, " << total - passed << " fail ("
              << now() - start << " s)\n";
    return 0;
}
