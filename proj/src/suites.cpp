#include "qsp/suites.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "qsp/certificate.hpp"

namespace qsp {

std::string HeckeLetter::str() const {
    switch (kind) {
        case T: return "T" + std::to_string(index);
        case Tinv: return "T" + std::to_string(index) + "^-1";
        case X: return "X" + std::to_string(index);
        case Xinv: return "X" + std::to_string(index) + "^-1";
    }
    return "?";
}

namespace {

HeckeLetter T(int i) { return {HeckeLetter::T, i}; }
HeckeLetter X(int a) { return {HeckeLetter::X, a}; }
HeckeLetter Xi(int a) { return {HeckeLetter::Xinv, a}; }

HeckeRelation rel(std::string id, std::string anchor, std::vector<std::pair<Scalar, HeckeWord>> terms) {
    return {std::move(id), std::move(anchor), std::move(terms)};
}

HeckeRelation commutator(const std::string& id, const std::string& anchor, HeckeWord a, HeckeWord b) {
    HeckeWord ab = a, ba = b;
    ab.insert(ab.end(), b.begin(), b.end());
    ba.insert(ba.end(), a.begin(), a.end());
    return rel(id, anchor, {{Scalar(1), ab}, {Scalar(-1), ba}});
}

// (T - a)(T - b) with a = root1, b = root2
HeckeRelation quadratic(const std::string& id, const std::string& anchor, int i, const Scalar& a, const Scalar& b) {
    return rel(id, anchor, {{Scalar(1), {T(i), T(i)}}, {-(a + b), {T(i)}}, {a * b, {}}});
}

}  // namespace

std::vector<HeckeRelation> hecke_relations(const HeckeParams& p) {
    const int d = p.w.d;
    const Scalar &q = p.q, &q0 = p.q0, &q1 = p.q1;
    std::vector<HeckeRelation> out;
    for (int a = 1; a <= d; ++a) {
        out.push_back(rel("toric X" + std::to_string(a) + " X" + std::to_string(a) + "^-1", "toric relation",
                          {{Scalar(1), {X(a), Xi(a)}}, {Scalar(-1), {}}}));
        out.push_back(rel("toric X" + std::to_string(a) + "^-1 X" + std::to_string(a), "toric relation",
                          {{Scalar(1), {Xi(a), X(a)}}, {Scalar(-1), {}}}));
        for (int b = a + 1; b <= d; ++b)
            out.push_back(commutator("toric X" + std::to_string(a) + " X" + std::to_string(b), "toric relation", {X(a)},
                                     {X(b)}));
    }
    out.push_back(quadratic("quadratic T0", "Hecke quadratic relation", 0, q0.inv(), -q1));
    for (int i = 1; i < d; ++i)
        out.push_back(quadratic("quadratic T" + std::to_string(i), "Hecke quadratic relation", i, q.inv(), -q));
    for (int k = 2; k < d; ++k)
        out.push_back(rel("braid T" + std::to_string(k) + " T" + std::to_string(k - 1), "Hecke braid relation",
                          {{Scalar(1), {T(k), T(k - 1), T(k)}}, {Scalar(-1), {T(k - 1), T(k), T(k - 1)}}}));
    if (d >= 2)
        out.push_back(rel("braid (T0 T1)^2", "Hecke braid relation",
                          {{Scalar(1), {T(0), T(1), T(0), T(1)}}, {Scalar(-1), {T(1), T(0), T(1), T(0)}}}));
    for (int i = 0; i < d; ++i)
        for (int j = i + 2; j < d; ++j)
            out.push_back(commutator("commute T" + std::to_string(i) + " T" + std::to_string(j),
                                     "Hecke commuting relation", {T(i)}, {T(j)}));
    Scalar c = q0.inv() * q1;
    out.push_back(rel("Bernstein T0 X1^-1 T0", "Bernstein relation T0 X1^-1 T0",
                      {{Scalar(1), {T(0), Xi(1), T(0)}}, {-c, {X(1)}}, {-(c - Scalar(1)), {T(0)}}}));
    for (int i = 1; i < d; ++i)
        out.push_back(rel("Bernstein T" + std::to_string(i) + " X" + std::to_string(i) + " T" + std::to_string(i),
                          "Bernstein relation Ti Xi Ti = X(i+1)",
                          {{Scalar(1), {T(i), X(i), T(i)}}, {Scalar(-1), {X(i + 1)}}}));
    for (int i = 0; i < d; ++i)
        for (int j = 1; j <= d; ++j)
            if (j != i && j != i + 1)
                out.push_back(commutator("Bernstein T" + std::to_string(i) + " X" + std::to_string(j),
                                         "Bernstein relation Ti Xj = Xj Ti", {T(i)}, {X(j)}));
    return out;
}

std::vector<HeckeRelation> braid_td_relations(const HeckeParams& p) {
    const int d = p.w.d;
    std::vector<HeckeRelation> out;
    out.push_back(quadratic("Td quadratic", "T_d quadratic relation", d, p.q1.inv(), -p.q0.inv()));
    for (int i = 0; i + 2 <= d; ++i)
        out.push_back(commutator("Td commute T" + std::to_string(i), "T_d commutes with far generators", {T(d)}, {T(i)}));
    if (d >= 2)
        out.push_back(rel("Td braid", "T_d braid with T_{d-1}",
                          {{Scalar(1), {T(d - 1), T(d), T(d - 1), T(d)}}, {Scalar(-1), {T(d), T(d - 1), T(d), T(d - 1)}}}));
    return out;
}

HeckeElt eval_relation(const Hecke& H, const HeckeRelation& rel) {
    HeckeElt out = H.zero();
    for (auto& [c, w] : rel.terms) {
        HeckeElt h = H.one();
        for (auto& l : w) {
            switch (l.kind) {
                case HeckeLetter::T: h = H.mul_gen(h, l.index); break;
                case HeckeLetter::Tinv: h = H.mul(h, H.gen_inverse(l.index)); break;
                case HeckeLetter::X: h = H.mul(h, H.X(l.index)); break;
                case HeckeLetter::Xinv: h = H.mul(h, H.X_inv(l.index)); break;
            }
        }
        out += h * c;
    }
    return out;
}

TensorVec eval_relation(const HeckeAction& A, const HeckeRelation& rel, const TensorVec& v) {
    TensorVec out;
    for (auto& [c, w] : rel.terms) {
        TensorVec x = v;
        for (auto& l : w) {
            switch (l.kind) {
                case HeckeLetter::T: x = A.act_gen(x, l.index); break;
                case HeckeLetter::Tinv: x = A.act_gen_inverse(x, l.index); break;
                case HeckeLetter::X: x = A.act_X(x, l.index, 1); break;
                case HeckeLetter::Xinv: x = A.act_X(x, l.index, -1); break;
            }
        }
        out += x * c;
    }
    return out;
}

std::vector<std::vector<int>> window_indices(const RepParams& p, int mult) {
    const int lo = -mult * p.n(), hi = mult * p.n();
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < p.d; ++k) {
        std::vector<std::vector<int>> next;
        for (auto& f : out)
            for (int x = lo; x <= hi; ++x)
                if (p.residue_allowed(x)) {
                    auto g = f;
                    g.push_back(x);
                    next.push_back(std::move(g));
                }
        out = std::move(next);
    }
    return out;
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (auto& c : checks) n += !c.pass;
    return n;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["suite"] = config.suite;
    j["config"] = {{"r", config.r},
                   {"d", config.d},
                   {"variant", variant_name(config.variant)},
                   {"specialization", config.spec.name()},
                   {"window", config.window},
                   {"max_len", config.max_len},
                   {"cert_len", config.cert_len}};
    j["checks"] = nlohmann::json::array();
    for (auto& c : checks) {
        nlohmann::json r{{"id", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"seconds", c.seconds}};
        if (!c.counterexample.empty()) r["counterexample"] = c.counterexample;
        if (!c.detail.empty()) r["detail"] = c.detail;
        j["checks"].push_back(r);
    }
    j["passed"] = passed();
    j["failures"] = failures();
    j["seconds"] = seconds;
    return j;
}

std::string SuiteReport::to_markdown() const {
    std::ostringstream os;
    os << "# " << config.suite << "\n\n";
    os << "r=" << config.r << ", d=" << config.d << ", variant " << variant_name(config.variant) << ", specialization "
       << config.spec.name() << ", window " << config.window << "\n\n";
    os << "| check | anchor | status | time (s) | counterexample |\n|---|---|---|---|---|\n";
    for (auto& c : checks) {
        std::string ce = c.counterexample;
        for (auto& ch : ce)
            if (ch == '|' || ch == '\n') ch = ' ';
        os << "| " << c.id << " | " << c.anchor << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.seconds << " | "
           << ce << " |\n";
    }
    os << "\n" << (checks.size() - failures()) << "/" << checks.size() << " checks pass (" << seconds << " s)\n";
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hecke-relations", "braid-td",       "module-relations",
                                                "commute",         "coideal-serre",  "schur-xlm",
                                                "schur-psi",       "schur-generate", "variants",
                                                "specialize-consistency"};
    return names;
}

namespace {

using Check = std::function<CheckRecord()>;

std::string index_str(const std::vector<int>& f) {
    std::string s = "M[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
}

std::string clip(std::string s) {
    if (s.size() > 400) s = s.substr(0, 400) + " ...";
    return s;
}

Check timed(std::string id, std::string anchor, std::function<void(CheckRecord&)> body) {
    return [id = std::move(id), anchor = std::move(anchor), body = std::move(body)] {
        CheckRecord r;
        r.id = id;
        r.anchor = anchor;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.counterexample = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
}

std::vector<CheckRecord> run_checks(const std::vector<Check>& checks) {
    std::vector<CheckRecord> out(checks.size());
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) out[i] = checks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, checks.size()); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < checks.size();) out[i] = checks[i]();
        });
    for (auto& th : pool) th.join();
    return out;
}

RepParams rep(const SuiteConfig& c, Variant v) {
    RepParams p;
    p.r = c.r;
    p.d = c.d;
    p.variant = v;
    p.spec = c.spec;
    return p;
}

std::string prefix(const std::string& pre, const std::string& id) { return pre.empty() ? id : pre + ": " + id; }

// Shared pieces; objects are shared between checks and must outlive them.
struct Env {
    SuiteConfig cfg;
    std::vector<std::shared_ptr<void>> keep;

    template <class T, class... A>
    std::shared_ptr<T> make(A&&... a) {
        auto p = std::make_shared<T>(std::forward<A>(a)...);
        keep.push_back(p);
        return p;
    }
};

void hecke_checks(Env& env, std::vector<Check>& out, const Specialization& spec, const std::string& pre) {
    auto H = env.make<Hecke>(HeckeParams::make({env.cfg.d, 2 * env.cfg.r + 2}, spec));
    if (!env.cfg.cache_dir.empty()) TableCache(env.cfg.cache_dir).prime(*H);
    for (auto& rl : hecke_relations(H->params()))
        out.push_back(timed(prefix(pre, rl.id), rl.anchor, [H, rl](CheckRecord& r) {
            HeckeElt res = eval_relation(*H, rl);
            r.pass = res.is_zero();
            if (!r.pass) r.counterexample = "residue " + clip(res.str());
        }));
}

void braid_checks(Env& env, std::vector<Check>& out) {
    auto H = env.make<Hecke>(HeckeParams::make({env.cfg.d, 2 * env.cfg.r + 2}, env.cfg.spec));
    if (!env.cfg.cache_dir.empty()) TableCache(env.cfg.cache_dir).prime(*H);
    out.push_back(timed("Td definition", "T_d as q0^-1 X_d T_{d-1}^-1 ... T_0^-1 ... T_{d-1}^-1", [H](CheckRecord& r) {
        HeckeElt a = H->Td_from_X(), b = H->Td_from_X1();
        r.pass = a == H->gen(H->d()) && b == H->gen(H->d());
        if (!r.pass) r.counterexample = "composite " + clip(a.str());
    }));
    for (auto& rl : braid_td_relations(H->params()))
        out.push_back(timed(rl.id, rl.anchor, [H, rl](CheckRecord& r) {
            HeckeElt res = eval_relation(*H, rl);
            r.pass = res.is_zero();
            if (!r.pass) r.counterexample = "residue " + clip(res.str());
        }));
}

void module_checks(Env& env, std::vector<Check>& out, const RepParams& p, const std::string& pre) {
    auto A = env.make<HeckeAction>(p);
    auto win = env.make<std::vector<std::vector<int>>>(window_indices(p, env.cfg.window));
    auto rels = hecke_relations(A->hecke().params());
    for (auto& b : braid_td_relations(A->hecke().params())) rels.push_back(b);
    for (auto& rl : rels)
        out.push_back(timed(prefix(pre, "module " + rl.id), rl.anchor, [A, win, rl](CheckRecord& r) {
            r.pass = true;
            for (auto& f : *win) {
                TensorVec res = eval_relation(*A, rl, TensorVec::basis(f));
                if (!res.is_zero()) {
                    r.pass = false;
                    r.counterexample = index_str(f) + " -> " + clip(res.str());
                    return;
                }
            }
            r.detail = std::to_string(win->size()) + " indices";
        }));
}

void commute_checks(Env& env, std::vector<Check>& out, const RepParams& p, const std::string& pre) {
    auto A = env.make<HeckeAction>(p);
    auto U = env.make<CoidealAction>(p);
    auto win = env.make<std::vector<std::vector<int>>>(window_indices(p, env.cfg.window));
    for (auto& g : U->generators())
        for (int i = 0; i <= p.d; ++i)
            out.push_back(timed(prefix(pre, g.name() + " | T" + std::to_string(i)), "coideal and Hecke actions commute",
                                [A, U, win, g, i](CheckRecord& r) {
                                    r.pass = true;
                                    for (auto& f : *win) {
                                        TensorVec m = TensorVec::basis(f);
                                        TensorVec a = A->act_gen(U->act(m, g), i), b = U->act(A->act_gen(m, i), g);
                                        if (a != b) {
                                            r.pass = false;
                                            r.counterexample = index_str(f) + ": " + clip((a - b).str());
                                            return;
                                        }
                                    }
                                }));
}

void coideal_checks(Env& env, std::vector<Check>& out, const RepParams& p, const std::string& pre) {
    auto U = env.make<CoidealAction>(p);
    auto win = env.make<std::vector<std::vector<int>>>(window_indices(p, env.cfg.window));
    for (auto& rl : U->relations())
        out.push_back(timed(prefix(pre, rl.name), "coideal defining relation", [U, win, rl](CheckRecord& r) {
            r.pass = true;
            for (auto& f : *win) {
                TensorVec res = U->eval(TensorVec::basis(f), rl);
                if (!res.is_zero()) {
                    r.pass = false;
                    r.counterexample = index_str(f) + " -> " + clip(res.str());
                    return;
                }
            }
        }));
}

// Single-factor displays of t_r (ji, ii) and t_0 (ij, ii).
void t_display_checks(Env& env, std::vector<Check>& out, const RepParams& p0, const std::string& pre) {
    RepParams p = p0;
    p.d = 1;
    auto U = env.make<CoidealAction>(p);
    const int r = p.r, n = p.n(), lo = -env.cfg.window * n, hi = env.cfg.window * n;
    const Scalar q = specialize(Scalar::q(), p.spec), q0 = specialize(Scalar::q0(), p.spec),
                 q1 = specialize(Scalar::q1(), p.spec);
    const Scalar qq = q - q.inv();
    if (U->valid({CoidealGen::tr, r, 1}))
        out.push_back(timed(prefix(pre, "t_r single factor"), "t_r module formula", [=](CheckRecord& rc) {
            Scalar c = (Scalar(1) - q0 * q1.inv()) / qq;
            rc.pass = true;
            for (int f = lo; f <= hi; ++f) {
                if (!p.residue_allowed(f)) continue;
                auto [k, j] = residue_split(f, r);
                TensorVec expect;
                if (k == r)
                    expect = TensorVec::basis({-r + n * (j + 1)}, q0 * q1.inv()) + TensorVec::basis({f}, c * q.inv());
                else if (k == -r)
                    expect = TensorVec::basis({r + n * (j - 1)}) + TensorVec::basis({f}, c * q);
                else
                    expect = TensorVec::basis({f}, c);
                TensorVec got = U->act(TensorVec::basis({f}), {CoidealGen::tr, r, 1});
                if (got != expect) {
                    rc.pass = false;
                    rc.counterexample = "v" + std::to_string(f) + ": got " + got.str() + ", displayed " + expect.str();
                    return;
                }
            }
        }));
    if (U->valid({CoidealGen::t0, 0, 1}))
        out.push_back(timed(prefix(pre, "t_0 single factor"), "t_0 module formula", [=](CheckRecord& rc) {
            Scalar c = (q1 - q0.inv()) / qq;
            rc.pass = true;
            for (int f = lo; f <= hi; ++f) {
                if (!p.residue_allowed(f)) continue;
                TensorVec expect;
                if (mod(f, n) == 1)
                    expect = TensorVec::basis({f - 2}) + TensorVec::basis({f}, c * q);
                else if (mod(f, n) == n - 1)
                    expect = TensorVec::basis({f + 2}, q0.inv() * q1) + TensorVec::basis({f}, c * q.inv());
                else
                    expect = TensorVec::basis({f}, c);
                TensorVec got = U->act(TensorVec::basis({f}), {CoidealGen::t0, 0, 1});
                if (got != expect) {
                    rc.pass = false;
                    rc.counterexample = "v" + std::to_string(f) + ": got " + got.str() + ", displayed " + expect.str();
                    return;
                }
            }
        }));
}

void xlm_checks(Env& env, std::vector<Check>& out, const RepParams& p) {
    auto S = env.make<SchurContext>(p);
    for (auto& lam : S->compositions())
        out.push_back(timed("x" + comp_str(lam) + " T_i", "x_lambda T_i = p_{s_i} x_lambda", [S, lam](CheckRecord& r) {
            const Hecke& H = S->hecke().hecke();
            const int d = S->params().d;
            HeckeElt x = S->x_lambda(lam);
            r.pass = true;
            for (int i : parabolic_gens(lam, d)) {
                Scalar ps = i == 0 ? H.params().q0.inv() : i == d ? H.params().q1.inv() : H.params().q.inv();
                if (H.mul(x, H.gen(i)) != x * ps) {
                    r.pass = false;
                    r.counterexample = "i=" + std::to_string(i);
                    return;
                }
            }
            r.detail = "generators " + word_str(parabolic_gens(lam, d));
        }));
}

void psi_checks(Env& env, std::vector<Check>& out, const RepParams& p) {
    auto S = env.make<SchurContext>(p);
    const int r = p.r;
    const Scalar q = specialize(Scalar::q(), p.spec), q0 = specialize(Scalar::q0(), p.spec),
                 q1 = specialize(Scalar::q1(), p.spec);
    auto lemma = [S](const CoidealGen& g, bool f_side, std::function<Scalar(const Composition&)> coef) {
        return [S, g, f_side, coef](CheckRecord& rc) {
            SchurElt ps = S->psi(g);
            auto e = WeylElt::identity(S->params().weyl());
            rc.pass = true;
            for (auto& lam : S->compositions()) {
                auto t = f_side ? tilde_f(lam, g.index) : tilde_e(lam, g.index);
                TensorVec expect;
                if (t && S->contains(*t)) expect = S->phi(*t, lam, e).image(lam) * coef(lam);
                if (ps.image(lam) != expect) {
                    rc.pass = false;
                    std::string ratio;
                    if (t && !expect.is_zero()) {
                        auto lead = M_index(*t);
                        ratio = ", observed coefficient " + (ps.image(lam).coeff(lead) / (expect.coeff(lead) / coef(lam))).str();
                    }
                    rc.counterexample = comp_str(lam) + ": expected coefficient " + coef(lam).str() + ratio;
                    return;
                }
            }
        };
    };
    for (int i = 0; i <= r; ++i) {
        CoidealGen e{CoidealGen::e, i, 1}, f{CoidealGen::f, i, 1};
        if (!S->coideal().valid(e)) continue;
        if (i != r)
            out.push_back(timed("Psi(e_" + std::to_string(i) + ")", "Psi(e_i) = sum q^{lambda_{i+1}-1} phi^e",
                                lemma(e, false, [=](const Composition& l) { return q.pow(l[i + 1] - 1); })));
        else
            out.push_back(timed("Psi(e_r) displayed", "Psi(e_r) = sum q^{3(lambda_{r+1}-1)} q0 q1^-1 phi^e",
                                lemma(e, false, [=](const Composition& l) { return q.pow(3 * (l[r + 1] - 1)) * q0 * q1.inv(); })));
        if (i == 0)
            out.push_back(timed("Psi(f_0)", "Psi(f_0) = sum q1 q^{2(lambda_0-1)} phi^e",
                                lemma(f, true, [=](const Composition& l) { return q1 * q.pow(2 * (l[0] - 1)); })));
        else if (i == r)
            out.push_back(timed("Psi(f_r)", "Psi(f_r) = sum q0 q1^-1 q^{lambda_r-lambda_{r+1}-1} phi^e",
                                lemma(f, true, [=](const Composition& l) { return q0 * q1.inv() * q.pow(l[r] - l[r + 1] - 1); })));
        else
            out.push_back(timed("Psi(f_" + std::to_string(i) + ")", "Psi(f_i) = sum q^{lambda_i-1} phi^e",
                                lemma(f, true, [=](const Composition& l) { return q.pow(l[i] - 1); })));
    }
    if (S->coideal().valid({CoidealGen::e, r, 1}))
        out.push_back(timed("Psi(e_r) computed", "Psi(e_r) with q0^-1 q1 (the inverse of the displayed ratio)",
                            lemma({CoidealGen::e, r, 1}, false,
                                  [=](const Composition& l) { return q.pow(3 * (l[r + 1] - 1)) * q0.inv() * q1; })));
    if (p.variant == Variant::jj)
        out.push_back(timed("Psi(h_a) eigenvalues", "Psi(h_a) acts on M_mu by q^{2 mu_0}, q^{mu_a}, q^{2 mu_{r+1}}",
                            [S, q, r](CheckRecord& rc) {
                                rc.pass = true;
                                for (auto& mu : S->compositions())
                                    for (int a = 0; a <= r + 1; ++a) {
                                        Scalar expect = (a == 0 || a == r + 1) ? q.pow(2 * mu[a]) : q.pow(mu[a]);
                                        if (S->eigenvalue({CoidealGen::h, a, 1}, mu) != expect) {
                                            rc.pass = false;
                                            rc.counterexample = comp_str(mu) + " h_" + std::to_string(a);
                                            return;
                                        }
                                    }
                            }));
    for (auto& g : S->coideal().generators())
        out.push_back(timed("expansion of Psi(" + g.name() + ")", "phi-basis expansion re-evaluates", [S, g](CheckRecord& rc) {
            SchurElt s = S->psi(g);
            PhiExpansion ex = S->phi_expand(s);
            rc.pass = S->from_expansion(ex) == s;
            rc.detail = std::to_string(ex.size()) + " phi terms";
        }));
}

void generate_checks(Env& env, std::vector<Check>& out, const RepParams& p) {
    auto S = env.make<SchurContext>(p);
    auto wp = p.weyl();
    const int d = p.d, r = p.r;
    auto w = omega(r, d);
    for (auto& lam : S->compositions())
        out.push_back(timed("idempotent " + comp_str(lam), "weight idempotent by interpolation", [S, lam](CheckRecord& rc) {
            auto ip = S->interpolation(lam);
            rc.pass = S->eval_interpolation(ip) == S->idempotent(lam);
            rc.detail = std::to_string(ip.factors.size()) + " factors";
        }));
    auto e = WeylElt::identity(wp);
    const Scalar q = specialize(Scalar::q(), p.spec), q1 = specialize(Scalar::q1(), p.spec);
    for (int i = 0; i < d; ++i) {
        out.push_back(timed("product s_" + std::to_string(i) + " displayed",
                            "phi^e_{w,e~_i(w)} phi^e_{e~_i(w),w} = phi^e_{w,w} + q_{s_i}^-1 phi^{s_i}_{w,w}",
                            [S, w, e, i, wp, q, q1](CheckRecord& rc) {
                                auto nu = tilde_e(w, i);
                                if (!nu || !S->contains(*nu)) {
                                    rc.counterexample = "e~_i(omega) not available";
                                    return;
                                }
                                SchurElt prod = S->compose(S->phi(w, *nu, e), S->phi(*nu, w, e));
                                SchurElt s = S->phi(w, w, WeylElt::generator(i, wp));
                                Scalar qs = i == 0 ? q1 : q;
                                rc.pass = prod == S->idempotent(w) + s * qs.inv();
                                if (!rc.pass) {
                                    auto ex = S->phi_expand(prod);
                                    Scalar b = ex[{w, w, WeylElt::generator(i, wp)}];
                                    rc.counterexample = "observed coefficient " + b.str() + ", displayed " + qs.inv().str();
                                }
                            }));
    }
    out.push_back(timed("product s_d via f~", "phi^e_{w,nu} phi^e_{nu,w} = phi^e_{w,w} + phi^{s_d}_{w,w}",
                        [S, w, e, d, r, wp](CheckRecord& rc) {
                            Composition nu = w;
                            std::vector<Composition> path{w};
                            for (int j = d; j <= r; ++j) {
                                auto t = tilde_f(nu, j);
                                if (!t || !S->contains(*t)) {
                                    rc.counterexample = "chain leaves the variant at f~_" + std::to_string(j);
                                    return;
                                }
                                nu = *t;
                                path.push_back(nu);
                            }
                            SchurElt up = S->idempotent(w), down = S->idempotent(w);
                            for (std::size_t k = 1; k < path.size(); ++k) {
                                up = S->compose(S->phi(path[k], path[k - 1], e), up);
                                down = S->compose(down, S->phi(path[k - 1], path[k], e));
                            }
                            SchurElt prod = S->compose(down, up);
                            rc.pass = prod == S->idempotent(w) + S->phi(w, w, WeylElt::generator(d, wp));
                            if (r > d)
                                rc.detail = "f~_r(omega) = 0 for r > d; taken along f~_d ... f~_r to " + comp_str(nu);
                        }));
    int len = env.cfg.cert_len;
    out.push_back(timed("certificate l(g) <= " + std::to_string(len), "Schur algebra generated by Psi",
                        [S, len](CheckRecord& rc) {
                            Certificate C = generate_schur_basis_from_psi(*S, len);
                            std::size_t bad = 0;
                            for (auto& en : C.entries)
                                if (!en.verified) {
                                    if (!bad) rc.counterexample = "unverified " + phi_name(en.target);
                                    ++bad;
                                }
                            rc.pass = bad == 0 && !C.entries.empty();
                            rc.detail = std::to_string(C.entries.size()) + " targets, " + std::to_string(bad) + " unverified";
                        }));
}

void t_membership_checks(Env& env, std::vector<Check>& out, const RepParams& p) {
    auto S = env.make<SchurContext>(p);
    for (auto kind : {CoidealGen::t0, CoidealGen::tr}) {
        CoidealGen g{kind, kind == CoidealGen::t0 ? 0 : p.r, 1};
        if (!S->coideal().valid(g)) continue;
        int wall = kind == CoidealGen::t0 ? 0 : p.d;
        auto sw = WeylElt::generator(wall, p.weyl());
        auto scan = [S, g, sw](bool allow_e) {
            return [S, g, sw, allow_e](CheckRecord& rc) {
                auto ex = S->phi_expand(S->psi(g));
                rc.pass = true;
                for (auto& [k, c] : ex) {
                    auto& [l, m, w] = k;
                    bool ok = l == m && (w == sw || (allow_e && w.is_identity()));
                    if (!ok) {
                        rc.pass = false;
                        rc.counterexample = phi_name(k) + " * " + c.str();
                        return;
                    }
                }
            };
        };
        std::string s = "s_" + std::to_string(wall);
        out.push_back(timed("Psi(" + g.name() + ") in span phi^" + s, "Psi(t) in sum F phi^{s}_{lambda,lambda}", scan(false)));
        out.push_back(timed("Psi(" + g.name() + ") in span phi^e, phi^" + s,
                            "Psi(t) in sum F phi^e_{lambda,lambda} + F phi^{s}_{lambda,lambda}", scan(true)));
    }
}

void check_preconditions(const SuiteConfig& c) {
    if (c.r < 1) throw std::invalid_argument("precondition violated: r >= 1");
    if (c.d < 1) throw std::invalid_argument("precondition violated: d >= 1");
    if (c.window < 1) throw std::invalid_argument("precondition violated: window >= 1");
    if (c.cert_len < 0) throw std::invalid_argument("precondition violated: cert_len >= 0");
    static const std::vector<std::string> hecke_only{"hecke-relations", "braid-td"};
    if (std::find(hecke_only.begin(), hecke_only.end(), c.suite) != hecke_only.end()) return;
    if (c.r < c.d)
        throw std::invalid_argument("precondition violated: r >= d (r=" + std::to_string(c.r) + ", d=" + std::to_string(c.d) + ")");
    if (c.variant == Variant::ii && c.d < 2) throw std::invalid_argument("precondition violated: d >= 2 for variant ii");
    if (c.variant == Variant::ii && c.r < 2) throw std::invalid_argument("precondition violated: r >= 2 for variant ii");
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& c) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), c.suite) == names.end())
        throw std::invalid_argument("unknown suite '" + c.suite + "'");
    check_preconditions(c);
    auto t0 = std::chrono::steady_clock::now();
    Env env{c, {}};
    std::vector<Check> checks;
    RepParams p = rep(c, c.variant);
    const std::string& s = c.suite;
    if (s == "hecke-relations") {
        hecke_checks(env, checks, c.spec, "");
    } else if (s == "braid-td") {
        braid_checks(env, checks);
    } else if (s == "module-relations") {
        module_checks(env, checks, p, "");
    } else if (s == "commute") {
        commute_checks(env, checks, p, "");
    } else if (s == "coideal-serre") {
        coideal_checks(env, checks, p, "");
    } else if (s == "schur-xlm") {
        xlm_checks(env, checks, p);
    } else if (s == "schur-psi") {
        psi_checks(env, checks, p);
    } else if (s == "schur-generate") {
        generate_checks(env, checks, p);
    } else if (s == "variants") {
        if (c.variant == Variant::jj) throw std::invalid_argument("the variants suite needs --variant ji, ij or ii");
        module_checks(env, checks, p, "module");
        coideal_checks(env, checks, p, "relations");
        commute_checks(env, checks, p, "commute");
        t_display_checks(env, checks, p, "display");
        t_membership_checks(env, checks, p);
    } else if (s == "specialize-consistency") {
        std::vector<Specialization> specs;
        if (c.spec.identity())
            specs = {Specialization::b2(), Specialization::b1(), Specialization::d1()};
        else
            specs = {c.spec};
        for (auto& sp : specs) {
            RepParams ps = p;
            ps.spec = sp;
            std::string pre = sp.name();
            hecke_checks(env, checks, sp, pre);
            module_checks(env, checks, ps, pre);
            commute_checks(env, checks, ps, pre);
            checks.push_back(timed(pre + ": T0 quadratic type", "specialized T0 quadratic", [sp, c](CheckRecord& rc) {
                Hecke H(HeckeParams::make({c.d, 2 * c.r + 2}, sp));
                const Scalar q = Scalar::q(), q1 = Scalar::q1();
                Scalar a, b;
                if (sp.name() == "b2") {
                    a = q1.inv();
                    b = -q1;
                } else if (sp.name() == "b1") {
                    a = q.inv();
                    b = -q;
                } else {
                    a = Scalar(1);
                    b = Scalar(-1);
                }
                HeckeElt res = eval_relation(H, quadratic("T0", "", 0, a, b));
                rc.pass = res.is_zero();
                rc.detail = "(T0 - " + a.str() + ")(T0 - " + b.str() + ") = 0";
                if (!rc.pass) rc.counterexample = "residue " + clip(res.str());
            }));
        }
    }
    SuiteReport rep_out;
    rep_out.config = c;
    rep_out.checks = run_checks(checks);
    rep_out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep_out;
}

bool TableCache::prime(Hecke& H) const {
    namespace fs = std::filesystem;
    const auto& w = H.weyl();
    fs::create_directories(dir_);
    fs::path file = fs::path(dir_) / ("hecke_X_d" + std::to_string(w.d) + "_n" + std::to_string(w.n) + "_" +
                                      H.params().spec.name() + ".json");
    auto dump = [](const HeckeElt& h) {
        auto arr = nlohmann::json::array();
        for (auto& [g, c] : h.terms()) arr.push_back({{"w", g.is_identity() ? "e" : g.str()}, {"c", c.str()}});
        return arr;
    };
    if (fs::exists(file)) {
        std::ifstream in(file);
        nlohmann::json j = nlohmann::json::parse(in);
        std::vector<HeckeElt> X, Xinv;
        auto load = [&](const nlohmann::json& arr) {
            HeckeElt h(w);
            for (auto& t : arr) h.add_term(WeylElt::parse(t["w"].get<std::string>(), w), Scalar::parse(t["c"].get<std::string>()));
            return h;
        };
        for (auto& a : j["X"]) X.push_back(load(a));
        for (auto& a : j["Xinv"]) Xinv.push_back(load(a));
        H.set_X(std::move(X), std::move(Xinv));
        return true;
    }
    nlohmann::json j;
    j["X"] = nlohmann::json::array();
    j["Xinv"] = nlohmann::json::array();
    for (auto& x : H.X_all()) j["X"].push_back(dump(x));
    for (auto& x : H.X_inv_all()) j["Xinv"].push_back(dump(x));
    std::ofstream(file) << j.dump(1);
    return false;
}

std::vector<std::vector<WeylElt>> TableCache::bfs(const WeylParams& p, int max_len) const {
    namespace fs = std::filesystem;
    fs::create_directories(dir_);
    fs::path file = fs::path(dir_) / ("weyl_bfs_d" + std::to_string(p.d) + "_n" + std::to_string(p.n) + "_l" +
                                      std::to_string(max_len) + ".json");
    if (fs::exists(file)) {
        std::ifstream in(file);
        nlohmann::json j = nlohmann::json::parse(in);
        std::vector<std::vector<WeylElt>> out;
        for (auto& layer : j) {
            out.emplace_back();
            for (auto& s : layer) out.back().push_back(WeylElt::parse(s.get<std::string>(), p));
        }
        return out;
    }
    auto out = elements_by_length(p, max_len);
    nlohmann::json j = nlohmann::json::array();
    for (auto& layer : out) {
        auto arr = nlohmann::json::array();
        for (auto& g : layer) arr.push_back(g.is_identity() ? "e" : g.str());
        j.push_back(arr);
    }
    std::ofstream(file) << j.dump();
    return out;
}

}  // namespace qsp
