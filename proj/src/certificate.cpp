#include "qsp/certificate.hpp"

#include <algorithm>
#include <deque>

namespace qsp {

std::string idem_letter(const Composition& c) { return "1_" + comp_str(c); }

TensorVec eval_letter(const SchurContext& S, const std::map<Composition, Interpolation>& idem, const std::string& letter,
                      const TensorVec& v) {
    if (letter.rfind("1_", 0) == 0) {
        Composition c = parse_comp(letter.substr(2));
        auto it = idem.find(c);
        if (it == idem.end()) throw std::invalid_argument("no interpolation for " + letter);
        return S.apply_interpolation(it->second, v);
    }
    return S.coideal().act(v, CoidealGen::parse(letter, S.params().r));
}

TensorVec eval_combo(const SchurContext& S, const std::map<Composition, Interpolation>& idem, const CertCombo& c,
                     const TensorVec& v) {
    TensorVec out;
    for (auto& t : c) {
        TensorVec x = v;
        for (auto it = t.word.rbegin(); it != t.word.rend() && !x.is_zero(); ++it) x = eval_letter(S, idem, *it, x);
        out += x * t.coef;
    }
    return out;
}

SchurElt eval_combo(const SchurContext& S, const std::map<Composition, Interpolation>& idem, const CertCombo& c) {
    SchurElt s;
    for (auto& lam : S.compositions()) s.images[lam] = eval_combo(S, idem, c, S.M(lam));
    return s;
}

static CertCombo normalize(const CertCombo& c) {
    std::map<std::vector<std::string>, Scalar> acc;
    for (auto& t : c) acc[t.word] += t.coef;
    CertCombo out;
    for (auto& [w, x] : acc)
        if (!x.is_zero()) out.push_back({x, w});
    return out;
}

CertCombo combo_mul(const CertCombo& a, const CertCombo& b) {
    CertCombo out;
    for (auto& x : a)
        for (auto& y : b) {
            CertTerm t{x.coef * y.coef, x.word};
            t.word.insert(t.word.end(), y.word.begin(), y.word.end());
            out.push_back(std::move(t));
        }
    return normalize(out);
}

static CertCombo combo_scale(CertCombo c, const Scalar& s) {
    for (auto& t : c) t.coef *= s;
    return normalize(c);
}

static CertCombo combo_add(CertCombo a, const CertCombo& b) {
    a.insert(a.end(), b.begin(), b.end());
    return normalize(a);
}

bool Certificate::all_verified() const {
    return std::all_of(entries.begin(), entries.end(), [](const CertEntry& e) { return e.verified; });
}

static nlohmann::json combo_json(const CertCombo& c) {
    auto arr = nlohmann::json::array();
    for (auto& t : c) arr.push_back({{"coef", t.coef.str()}, {"word", t.word}});
    return arr;
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["r"] = params.r;
    j["d"] = params.d;
    j["variant"] = variant_name(params.variant);
    j["specialization"] = params.spec.name();
    j["max_len"] = max_len;
    j["omega"] = comp_str(omega);
    for (auto& [c, ip] : idempotents) {
        auto arr = nlohmann::json::array();
        for (auto& f : ip.factors)
            arr.push_back({{"gen", f.gen.name()}, {"shift", f.shift.str()}, {"denom", f.denom.str()}});
        j["idempotents"][comp_str(c)] = arr;
    }
    for (auto& [c, steps] : chains) {
        auto arr = nlohmann::json::array();
        for (auto& s : steps)
            arr.push_back({{"move", s.move}, {"to", comp_str(s.to)}, {"coef", s.coef.str()}, {"back", s.back},
                           {"back_coef", s.back_coef.str()}});
        j["chains"][comp_str(c)] = arr;
    }
    j["products"] = nlohmann::json::array();
    for (auto& p : products)
        j["products"].push_back(
            {{"i", p.i}, {"via", p.via}, {"nu", comp_str(p.nu)}, {"a", p.a.str()}, {"b", p.b.str()}});
    j["entries"] = nlohmann::json::array();
    for (auto& e : entries) {
        auto& [lam, mu, g] = e.target;
        j["entries"].push_back({{"target", phi_name(e.target)},
                                {"lambda", comp_str(lam)},
                                {"mu", comp_str(mu)},
                                {"g", g.is_identity() ? "e" : g.str()},
                                {"verified", e.verified},
                                {"terms", combo_json(e.terms)}});
    }
    return j;
}

namespace {

struct Builder {
    const SchurContext& S;
    Certificate& C;

    CertCombo idem(const Composition& c) const { return {{Scalar(1), {idem_letter(c)}}}; }

    SchurElt eval(const CertCombo& c) const { return eval_combo(S, C.idempotents, c); }

    // Psi(gen) o 1_from = coef * phi^e_{to,from}
    Scalar step_coef(const CoidealGen& gen, const Composition& from, const Composition& to) const {
        TensorVec img = eval_combo(S, C.idempotents, CertCombo{{Scalar(1), {gen.name(), idem_letter(from)}}}, S.M(from));
        TensorVec base = S.phi(to, from, WeylElt::identity(S.params().weyl())).image(from);
        auto lead = M_index(to);
        Scalar c = img.coeff(lead) / base.coeff(lead);
        if (c.is_zero() || img != base * c)
            throw ChainError(gen.name() + " o " + idem_letter(from) + " is not a multiple of phi^e" + comp_str(to) +
                             comp_str(from));
        return c;
    }

    std::optional<ChainStep> try_step(const Composition& from, bool e_move, int i) const {
        CoidealGen g{e_move ? CoidealGen::e : CoidealGen::f, i, 1};
        CoidealGen back{e_move ? CoidealGen::f : CoidealGen::e, i, 1};
        if (!S.coideal().valid(g) || !S.coideal().valid(back)) return std::nullopt;
        auto to = e_move ? tilde_e(from, i) : tilde_f(from, i);
        if (!to || !S.contains(*to)) return std::nullopt;
        ChainStep st;
        st.move = std::string(e_move ? "e~_" : "f~_") + std::to_string(i);
        st.to = *to;
        st.coef = step_coef(g, from, *to);
        st.back = back.name();
        st.back_coef = step_coef(back, *to, from);
        return st;
    }

    static std::string gen_of(const ChainStep& s) { return (s.move[0] == 'e' ? "e_" : "f_") + s.move.substr(3); }

    // phi^e_{to,from} along the steps.
    CertCombo up(const Composition& from, const std::vector<ChainStep>& steps) const {
        CertCombo out = idem(from);
        for (auto& s : steps) {
            out = combo_mul(CertCombo{{s.coef.inv(), {gen_of(s)}}}, out);
        }
        return out;
    }

    // phi^e_{from,to}, the reverse chain.
    CertCombo down(const Composition& from, const std::vector<ChainStep>& steps) const {
        if (steps.empty()) return idem(from);
        CertCombo out = idem(steps.back().to);
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            out = combo_mul(CertCombo{{it->back_coef.inv(), {it->back}}}, out);
        return out;
    }

    void build_chains() {
        const auto& w = C.omega;
        C.chains[w] = {};
        std::deque<Composition> queue{w};
        while (!queue.empty()) {
            Composition cur = queue.front();
            queue.pop_front();
            auto gc = parabolic_gens(cur, S.params().d);
            for (int i = 0; i <= S.params().r; ++i)
                for (bool e_move : {true, false}) {
                    auto to = e_move ? tilde_e(cur, i) : tilde_f(cur, i);
                    if (!to || !S.contains(*to) || C.chains.count(*to)) continue;
                    auto gt = parabolic_gens(*to, S.params().d);
                    if (!std::includes(gt.begin(), gt.end(), gc.begin(), gc.end())) continue;
                    auto st = try_step(cur, e_move, i);
                    if (!st) continue;
                    auto path = C.chains[cur];
                    path.push_back(*st);
                    C.chains[*to] = path;
                    queue.push_back(*to);
                }
        }
        for (auto& lam : S.compositions())
            if (!C.chains.count(lam)) throw ChainError("no nested e~/f~ chain from omega to " + comp_str(lam));
    }

    // Z = a phi^e_{omega,omega} + b phi^{s_i}_{omega,omega}; returns the combo for phi^{s_i}.
    CertCombo extract(const CertCombo& Z, int i, const std::string& via, const Composition& nu) {
        const auto& w = C.omega;
        WeylParams wp = S.params().weyl();
        WeylElt e = WeylElt::identity(wp), s = WeylElt::generator(i, wp);
        PhiExpansion ex = S.phi_expand(eval(Z));
        Scalar a, b;
        for (auto& [k, c] : ex) {
            auto& [l, m, g] = k;
            if (l == w && m == w && g == e)
                a = c;
            else if (l == w && m == w && g == s)
                b = c;
            else
                throw ChainError("product for s_" + std::to_string(i) + " has stray term " + phi_name(k));
        }
        if (b.is_zero()) throw ChainError("product for s_" + std::to_string(i) + " has no phi^{s_i} term");
        C.products.push_back({i, via, nu, a, b});
        return combo_scale(combo_add(Z, combo_scale(idem(w), -a)), b.inv());
    }

    std::vector<ChainStep> walk(const Composition& from, const std::vector<std::pair<bool, int>>& moves) {
        std::vector<ChainStep> steps;
        Composition cur = from;
        for (auto [e_move, i] : moves) {
            auto st = try_step(cur, e_move, i);
            if (!st) return {};
            cur = st->to;
            steps.push_back(*st);
        }
        return steps;
    }

    CertCombo simple_reflection(int i) {
        const auto& w = C.omega;
        const int d = S.params().d, r = S.params().r;
        const auto& U = S.coideal();
        if (i < d) {
            if (auto st = try_step(w, true, i)) {
                std::vector<ChainStep> steps{*st};
                return extract(combo_mul(down(w, steps), up(w, steps)), i, "e~_" + std::to_string(i), st->to);
            }
            if (i == 0 && U.valid({CoidealGen::t0, 0, 1}))
                return extract(CertCombo{{Scalar(1), {"t_0", idem_letter(w)}}}, 0, "t_0", w);
            throw ChainError("no construction for s_" + std::to_string(i));
        }
        std::vector<std::pair<bool, int>> moves;
        for (int j = d; j <= r; ++j) moves.push_back({false, j});
        auto steps = walk(w, moves);
        if (steps.size() == moves.size())
            return extract(combo_mul(down(w, steps), up(w, steps)), d, "f~ chain", steps.back().to);
        CoidealGen tr{CoidealGen::tr, r, 1};
        if (!U.valid(tr)) throw ChainError("no construction for s_d");
        CertCombo Z{{Scalar(1), {tr.name(), idem_letter(w)}}};
        PhiExpansion ex = S.phi_expand(eval(Z));
        bool has_sd = false;
        for (auto& [k, c] : ex) has_sd |= !std::get<2>(k).is_identity();
        if (has_sd) return extract(Z, d, tr.name(), w);
        moves.pop_back();
        steps = walk(w, moves);
        if (steps.size() != moves.size()) throw ChainError("no construction for s_d");
        Composition nu = steps.empty() ? w : steps.back().to;
        CertCombo mid{{Scalar(1), {tr.name(), idem_letter(nu)}}};
        return extract(combo_mul(down(w, steps), combo_mul(mid, up(w, steps))), d, tr.name() + " at nu", nu);
    }
};

}  // namespace

Certificate generate_schur_basis_from_psi(const SchurContext& S, int max_len) {
    const RepParams& p = S.params();
    p.validate_duality();
    Certificate C;
    C.params = p;
    C.max_len = max_len;
    C.omega = omega(p.r, p.d);
    for (auto& lam : S.compositions()) C.idempotents[lam] = S.interpolation(lam);

    Builder B{S, C};
    B.build_chains();

    std::vector<CertCombo> refl;
    for (int i = 0; i <= p.d; ++i) refl.push_back(B.simple_reflection(i));

    WeylParams wp = p.weyl();
    std::vector<WeylElt> elts;
    for (auto& layer : elements_by_length(wp, max_len)) elts.insert(elts.end(), layer.begin(), layer.end());

    std::map<WeylElt, CertCombo> at_omega;
    for (auto& g : elts) {
        CertCombo c = B.idem(C.omega);
        for (int i : g.reduced_word()) c = combo_mul(c, refl[i]);
        at_omega[g] = c;
    }

    for (auto& lam : S.compositions())
        for (auto& mu : S.compositions()) {
            CertCombo left = B.up(C.omega, C.chains.at(lam));
            CertCombo right = B.down(C.omega, C.chains.at(mu));
            for (auto& g : elts) {
                if (!S.in_D(lam, mu, g)) continue;
                CertEntry e;
                e.target = {lam, mu, g};
                SchurElt target = S.phi(lam, mu, g);
                CertCombo raw = combo_mul(left, combo_mul(at_omega.at(g), right));
                TensorVec y = eval_combo(S, C.idempotents, raw, S.M(mu)), t = target.image(mu);
                if (!t.terms().empty()) {
                    auto& [f, tc] = *t.terms().begin();
                    Scalar c = y.coeff(f) / tc;
                    if (!c.is_zero()) {
                        e.terms = combo_scale(raw, c.inv());
                        e.verified = B.eval(e.terms) == target;
                    }
                }
                if (!e.verified) e.terms = raw;
                C.entries.push_back(std::move(e));
            }
        }
    return C;
}

}  // namespace qsp
