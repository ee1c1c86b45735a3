#include "qsp/coideal.hpp"

#include <cstdlib>
#include <set>
#include <tuple>

namespace qsp {

namespace {

std::string atom_str(const GlAtom& a)
{
    static const char* names = "EFKD";
    std::string s(1, names[a.kind]);
    s += "_" + std::to_string(a.index);
    if (a.power != 1) s += "^" + std::to_string(a.power);
    return s;
}

}  // namespace

std::string gl_op_str(const GlOp& op)
{
    std::vector<std::pair<std::string, Scalar>> items;
    for (const auto& t : op) {
        std::string w;
        for (const auto& a : t.atoms) w += (w.empty() ? "" : "*") + atom_str(a);
        items.push_back({w.empty() ? "1" : w, t.coef});
    }
    return linear_combination_str(items);
}

GlhatAction::GlhatAction(const RepParams& p) : p_(p), q_(specialize(Scalar::q(), p.spec))
{
    const int n = p.n(), r = p.r;
    has_.assign(n, true);
    labels_.resize(n);
    for (int i = 0; i < n; ++i) labels_[i] = {i, 1};
    if (p.variant == Variant::ji || p.variant == Variant::ii) {
        has_[r + 1] = false;
        labels_[r] = {r, 2};
    }
    if (p.variant == Variant::ij || p.variant == Variant::ii) {
        has_[n - 1] = false;
        labels_[0] = {n - 1, 2};
    }
}

bool GlhatAction::has_label(int i) const { return has_[mod(i, p_.n())]; }

Label GlhatAction::label(int i) const
{
    if (!has_label(i)) throw std::out_of_range("no generator with label " + std::to_string(i) + " in this variant");
    return labels_[mod(i, p_.n())];
}

int GlhatAction::K_weight(int m, int i) const
{
    Label l = label(i);
    int n = p_.n();
    return (mod(m - l.lo, n) == 0 ? 1 : 0) - (mod(m - l.lo - l.step, n) == 0 ? 1 : 0);
}

TensorVec GlhatAction::E(const TensorVec& v, int i) const
{
    Label l = label(i);
    const int n = p_.n();
    TensorVec out;
    for (const auto& [f, c] : v.terms()) {
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (mod(f[k] - l.lo - l.step, n) != 0) continue;
            int w = 0;
            for (std::size_t m = k + 1; m < f.size(); ++m) w -= K_weight(f[m], i);
            auto g = f;
            g[k] -= l.step;
            out.add_term(g, c * q_.pow(w));
        }
    }
    return out;
}

TensorVec GlhatAction::F(const TensorVec& v, int i) const
{
    Label l = label(i);
    const int n = p_.n();
    TensorVec out;
    for (const auto& [f, c] : v.terms()) {
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (mod(f[k] - l.lo, n) != 0) continue;
            int w = 0;
            for (std::size_t m = 0; m < k; ++m) w += K_weight(f[m], i);
            auto g = f;
            g[k] += l.step;
            out.add_term(g, c * q_.pow(w));
        }
    }
    return out;
}

TensorVec GlhatAction::K(const TensorVec& v, int i, int power) const
{
    TensorVec out;
    for (const auto& [f, c] : v.terms()) {
        int w = 0;
        for (int x : f) w += K_weight(x, i);
        out.add_term(f, c * q_.pow(w * power));
    }
    return out;
}

TensorVec GlhatAction::D(const TensorVec& v, int a, int power) const
{
    TensorVec out;
    const int n = p_.n();
    for (const auto& [f, c] : v.terms()) {
        int w = 0;
        for (int x : f) w += mod(x - a, n) == 0 ? 1 : 0;
        out.add_term(f, c * q_.pow(w * power));
    }
    return out;
}

TensorVec GlhatAction::apply(const TensorVec& v, const GlAtom& a) const
{
    switch (a.kind) {
    case GlAtom::E: return E(v, a.index);
    case GlAtom::F: return F(v, a.index);
    case GlAtom::K: return K(v, a.index, a.power);
    case GlAtom::D: return D(v, a.index, a.power);
    }
    return v;
}

TensorVec GlhatAction::apply(const TensorVec& v, const GlOp& op) const
{
    TensorVec out;
    for (const auto& t : op) {
        TensorVec w = v;
        for (auto it = t.atoms.rbegin(); it != t.atoms.rend(); ++it) w = apply(w, *it);
        out += w * t.coef;
    }
    return out;
}

std::string CoidealGen::name() const
{
    switch (kind) {
    case t0: return "t_0";
    case tr: return "t_r";
    default: break;
    }
    static const char* names = "efhk";
    std::string s(1, names[kind]);
    s += "_" + std::to_string(index);
    if (power != 1) s += "^" + std::to_string(power);
    return s;
}

CoidealGen CoidealGen::parse(const std::string& s, int r)
{
    auto bad = [&]() { return std::invalid_argument("bad coideal generator: " + s); };
    if (s.size() < 3 || s[1] != '_') throw bad();
    std::string rest = s.substr(2);
    int power = 1;
    if (auto p = rest.find('^'); p != std::string::npos) {
        std::string e = rest.substr(p + 1);
        if (e == "-1")
            power = -1;
        else if (e != "1")
            throw bad();
        rest = rest.substr(0, p);
    }
    if (s[0] == 't') {
        if (power != 1) throw bad();
        if (rest == "r" || rest == std::to_string(r)) return {tr, r, 1};
        if (rest == "0") return {t0, 0, 1};
        throw bad();
    }
    int idx = 0;
    try {
        std::size_t used = 0;
        idx = std::stoi(rest, &used);
        if (used != rest.size()) throw bad();
    } catch (const std::logic_error&) {
        throw bad();
    }
    switch (s[0]) {
    case 'e': if (power != 1) throw bad(); return {e, idx, 1};
    case 'f': if (power != 1) throw bad(); return {f, idx, 1};
    case 'h': return {h, idx, power};
    case 'k': return {k, idx, power};
    default: throw bad();
    }
}

bool CoidealGen::operator<(const CoidealGen& o) const
{
    return std::tie(kind, index, power) < std::tie(o.kind, o.index, o.power);
}

bool CoidealGen::operator==(const CoidealGen& o) const
{
    return kind == o.kind && index == o.index && power == o.power;
}

Scalar swap_q0_q1(const Scalar& x)
{
    auto sw = [](const IntPoly& p) {
        std::vector<IntPoly::Term> ts;
        for (auto [e, c] : p.terms()) {
            std::swap(e[1], e[2]);
            ts.emplace_back(e, c);
        }
        return IntPoly::from_terms(std::move(ts));
    };
    return Scalar(sw(x.num()), sw(x.den()));
}

CoidealAction::CoidealAction(const RepParams& p)
    : p_(p),
      gl_(p),
      q_(specialize(Scalar::q(), p.spec)),
      q0_(specialize(Scalar::q0(), p.spec)),
      q1_(specialize(Scalar::q1(), p.spec))
{
}

std::vector<CoidealGen> CoidealAction::generators() const
{
    const int r = p_.r;
    std::vector<CoidealGen> out;
    int lo = 0, hi = r;
    switch (p_.variant) {
    case Variant::jj: break;
    case Variant::ji: hi = r - 1; break;
    case Variant::ij: lo = 1; break;
    case Variant::ii: lo = 1; hi = r - 1; break;
    }
    for (int i = lo; i <= hi; ++i) out.push_back({CoidealGen::e, i, 1});
    for (int i = lo; i <= hi; ++i) out.push_back({CoidealGen::f, i, 1});
    if (p_.variant == Variant::jj)
        for (int a = 0; a <= r + 1; ++a) out.push_back({CoidealGen::h, a, 1});
    for (int i = lo; i <= hi; ++i) out.push_back({CoidealGen::k, i, 1});
    if (p_.variant == Variant::ij || p_.variant == Variant::ii) out.push_back({CoidealGen::t0, 0, 1});
    if (p_.variant == Variant::ji || p_.variant == Variant::ii) out.push_back({CoidealGen::tr, r, 1});
    return out;
}

bool CoidealAction::valid(const CoidealGen& g) const
{
    if (g.power != 1 && g.power != -1) return false;
    if (g.power == -1 && g.kind != CoidealGen::h && g.kind != CoidealGen::k) return false;
    CoidealGen base = g;
    base.power = 1;
    for (const auto& x : generators())
        if (x == base) return true;
    return false;
}

GlOp CoidealAction::embedding(const CoidealGen& g) const
{
    if (!valid(g)) throw std::invalid_argument("generator " + g.name() + " not in the " + variant_name(p_.variant) + " algebra");
    const int r = p_.r, i = g.index;
    const Scalar one(1);
    const Scalar qi = q_.inv();
    auto Ea = [](int x) { return GlAtom{GlAtom::E, x, 1}; };
    auto Fa = [](int x) { return GlAtom{GlAtom::F, x, 1}; };
    auto Ka = [](int x, int p) { return GlAtom{GlAtom::K, x, p}; };
    auto Da = [](int x, int p) { return GlAtom{GlAtom::D, x, p}; };
    switch (g.kind) {
    case CoidealGen::h: return {{one, {Da(i, g.power), Da(-i, g.power)}}};
    case CoidealGen::k: return {{one, {Ka(i, g.power), Ka(-i - 1, -g.power)}}};
    case CoidealGen::e: {
        Scalar c = i == 0 ? q0_.inv() : i == r ? qi : one;
        return {{one, {Ea(i)}}, {c, {Fa(-i - 1), Ka(i, -1)}}};
    }
    case CoidealGen::f: {
        Scalar c = i == 0 ? q1_ * qi : i == r ? q0_ * q1_.inv() : one;
        return {{one, {Ea(-i - 1)}}, {c, {Fa(i), Ka(-i - 1, -1)}}};
    }
    case CoidealGen::tr: {
        Scalar c = (one - q0_ * q1_.inv()) / (q_ - qi);
        return {{one, {Ea(r)}}, {q_ * q0_ * q1_.inv(), {Fa(r), Ka(r, -1)}}, {c, {Ka(r, -1)}}};
    }
    case CoidealGen::t0: {
        Scalar c = (q1_ - q0_.inv()) / (q_ - qi);
        return {{one, {Ea(0)}}, {q_ * q0_.inv() * q1_, {Fa(0), Ka(0, -1)}}, {c, {Ka(0, -1)}}};
    }
    }
    return {};
}

void CoidealAction::check_support(const TensorVec& v) const
{
    for (const auto& [f, c] : v.terms())
        if (!p_.index_allowed(f)) {
            std::string s;
            for (int x : f) s += (s.empty() ? "" : ",") + std::to_string(x);
            throw SupportError("index [" + s + "] outside the " + variant_name(p_.variant) + " subspace");
        }
}

TensorVec CoidealAction::act(const TensorVec& v, const CoidealGen& g) const
{
    check_support(v);
    GlOp op;
    TensorVec out;
    for (const auto& [f, c] : v.terms()) {
        TensorVec img;
        bool hit = false;
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find({g, f});
            if (it != cache_.end()) {
                img = it->second;
                hit = true;
            }
        }
        if (!hit) {
            if (op.empty()) op = embedding(g);
            img = gl_.apply(TensorVec::basis(f), op);
            std::lock_guard<std::mutex> lk(mu_);
            cache_.emplace(std::make_pair(g, f), img);
        }
        out += img * c;
    }
    return out;
}

TensorVec CoidealAction::act_word(const TensorVec& v, const CoidealWord& w) const
{
    TensorVec out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(out, *it);
    return out;
}

TensorVec CoidealAction::eval(const TensorVec& v, const Relation& rel) const
{
    TensorVec out;
    for (const auto& [c, w] : rel.terms) out += act_word(v, w) * c;
    return out;
}

namespace {

using G = CoidealGen;
G e_(int i) { return {G::e, i, 1}; }
G f_(int i) { return {G::f, i, 1}; }
G h_(int a, int p = 1) { return {G::h, a, p}; }
G k_(int i, int p = 1) { return {G::k, i, p}; }

std::string word_name(const CoidealWord& w)
{
    std::string s;
    for (const auto& g : w) s += (s.empty() ? "" : "*") + g.name();
    return s.empty() ? "1" : s;
}

Relation make_rel(std::vector<std::pair<Scalar, CoidealWord>> terms)
{
    Relation r;
    std::vector<std::pair<std::string, Scalar>> items;
    for (const auto& [c, w] : terms) items.push_back({word_name(w), c});
    r.name = linear_combination_str(items) + " = 0";
    r.terms = std::move(terms);
    return r;
}

}  // namespace

std::vector<Relation> CoidealAction::jj_relations() const
{
    const int r = p_.r;
    const Scalar q = Scalar::q(), qi = q.inv(), q0 = Scalar::q0(), q1 = Scalar::q1();
    const Scalar qq = q + qi, one(1), m1(-1);
    std::vector<Relation> out;
    for (int a = 0; a <= r + 1; ++a) {
        for (int b = a + 1; b <= r + 1; ++b) out.push_back(make_rel({{one, {h_(a), h_(b)}}, {m1, {h_(b), h_(a)}}}));
        out.push_back(make_rel({{one, {h_(a), h_(a, -1)}}, {m1, {}}}));
        out.push_back(make_rel({{one, {h_(a, -1), h_(a)}}, {m1, {}}}));
        for (int j = 0; j <= r; ++j) {
            int x = a == 0 ? 2 * (j == 0) : a == r + 1 ? -2 * (j == r) : (a == j) - (a - 1 == j);
            out.push_back(make_rel({{one, {h_(a), e_(j), h_(a, -1)}}, {-q.pow(x), {e_(j)}}}));
            out.push_back(make_rel({{one, {h_(a), f_(j), h_(a, -1)}}, {-q.pow(-x), {f_(j)}}}));
        }
    }
    for (int i = 0; i <= r; ++i) {
        out.push_back(make_rel({{one, {k_(i)}}, {m1, {h_(i), h_(i + 1, -1)}}}));
        for (int j = 0; j <= r; ++j) {
            if (i == j && (i == 0 || i == r)) continue;
            std::vector<std::pair<Scalar, CoidealWord>> t{{one, {e_(i), f_(j)}}, {m1, {f_(j), e_(i)}}};
            if (i == j) {
                Scalar c = (q - qi).inv();
                t.push_back({-c, {h_(i), h_(i + 1, -1)}});
                t.push_back({c, {h_(i, -1), h_(i + 1)}});
            }
            out.push_back(make_rel(t));
        }
    }
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) {
            if (std::abs(i - j) == 1) {
                out.push_back(make_rel({{one, {e_(i), e_(i), e_(j)}}, {one, {e_(j), e_(i), e_(i)}}, {-qq, {e_(i), e_(j), e_(i)}}}));
                out.push_back(make_rel({{one, {f_(i), f_(i), f_(j)}}, {one, {f_(j), f_(i), f_(i)}}, {-qq, {f_(i), f_(j), f_(i)}}}));
            } else if (i < j) {
                out.push_back(make_rel({{one, {e_(i), e_(j)}}, {m1, {e_(j), e_(i)}}}));
                out.push_back(make_rel({{one, {f_(i), f_(j)}}, {m1, {f_(j), f_(i)}}}));
            }
        }
    auto deformed = [&](int i, const Scalar& a, const Scalar& b) {
        G E = e_(i), F = f_(i), K = k_(i), Ki = k_(i, -1);
        out.push_back(make_rel({{one, {E, E, F}},
                                {one, {F, E, E}},
                                {-qq, {E, F, E}},
                                {qq * a, {E, K}},
                                {qq * b, {E, Ki}}}));
        out.push_back(make_rel({{one, {F, F, E}},
                                {one, {E, F, F}},
                                {-qq, {F, E, F}},
                                {qq * a, {K, F}},
                                {qq * b, {Ki, F}}}));
    };
    deformed(r, q * q * q0 * q1.inv(), qi * qi);
    deformed(0, q1 * q, q0.inv() * qi);
    return out;
}

std::vector<Relation> CoidealAction::ji_relations(bool mirror) const
{
    const int r = p_.r;
    const Scalar q = Scalar::q(), qi = q.inv(), q0 = Scalar::q0(), q1 = Scalar::q1();
    const Scalar qq = q + qi, one(1), m1(-1);
    G t = {G::tr, r, 1};
    auto c = [](int i, int j) { return 2 * (i == j) - (i == j + 1) - (i == j - 1); };
    std::vector<std::vector<std::pair<Scalar, CoidealWord>>> raw;
    {
        CoidealWord w{k_(0)};
        for (int i = 1; i <= r - 1; ++i) {
            w.push_back(k_(i));
            w.push_back(k_(i));
        }
        raw.push_back({{one, w}, {-qi, {}}});
    }
    for (int i = 0; i <= r - 1; ++i) {
        raw.push_back({{one, {k_(i), k_(i, -1)}}, {m1, {}}});
        raw.push_back({{one, {k_(i), t}}, {m1, {t, k_(i)}}});
        for (int j = 0; j <= r - 1; ++j) {
            if (i < j) raw.push_back({{one, {k_(i), k_(j)}}, {m1, {k_(j), k_(i)}}});
            int x = c(i, j) + (i == 0 && j == 0);
            raw.push_back({{one, {k_(i), e_(j), k_(i, -1)}}, {-q.pow(x), {e_(j)}}});
            raw.push_back({{one, {k_(i), f_(j), k_(i, -1)}}, {-q.pow(-x), {f_(j)}}});
            if (std::abs(i - j) > 1 && i < j) {
                raw.push_back({{one, {e_(i), e_(j)}}, {m1, {e_(j), e_(i)}}});
                raw.push_back({{one, {f_(i), f_(j)}}, {m1, {f_(j), f_(i)}}});
            }
            if (!(i == 0 && j == 0)) {
                std::vector<std::pair<Scalar, CoidealWord>> tt{{one, {e_(i), f_(j)}}, {m1, {f_(j), e_(i)}}};
                if (i == j) {
                    Scalar cc = (q - qi).inv();
                    tt.push_back({-cc, {k_(i)}});
                    tt.push_back({cc, {k_(i, -1)}});
                }
                raw.push_back(tt);
            }
            if (std::abs(i - j) == 1) {
                raw.push_back({{one, {e_(i), e_(i), e_(j)}}, {one, {e_(j), e_(i), e_(i)}}, {-qq, {e_(i), e_(j), e_(i)}}});
                raw.push_back({{one, {f_(i), f_(i), f_(j)}}, {one, {f_(j), f_(i), f_(i)}}, {-qq, {f_(i), f_(j), f_(i)}}});
            }
        }
        if (i <= r - 2) {
            raw.push_back({{one, {e_(i), t}}, {m1, {t, e_(i)}}});
            raw.push_back({{one, {f_(i), t}}, {m1, {t, f_(i)}}});
        }
    }
    for (G x : {e_(r - 1), f_(r - 1)}) {
        raw.push_back({{one, {x, x, t}}, {one, {t, x, x}}, {-qq, {x, t, x}}});
        raw.push_back({{one, {t, t, x}}, {one, {x, t, t}}, {-qq, {t, x, t}}, {-(q0 * q1.inv()), {x}}});
    }
    auto deformed = [&](int i, const Scalar& a, const Scalar& b) {
        G E = e_(i), F = f_(i), K = k_(i), Ki = k_(i, -1);
        return std::vector<std::vector<std::pair<Scalar, CoidealWord>>>{
            {{one, {E, E, F}}, {one, {F, E, E}}, {-qq, {E, F, E}}, {qq * a, {E, K}}, {qq * b, {E, Ki}}},
            {{one, {F, F, E}}, {one, {E, F, F}}, {-qq, {F, E, F}}, {qq * a, {K, F}}, {qq * b, {Ki, F}}}};
    };
    // Transport sends the e_0 pair to q0 q, q1^-1 q^-1 at e_r, which the embedding of e_r, f_r
    // (shared with jj) does not satisfy; the jj coefficients are used instead unless literal.
    if (!mirror || literal_transport_)
        for (auto& t : deformed(0, q1 * q, q0.inv() * qi)) raw.push_back(t);
    std::vector<Relation> out;
    for (auto& terms : raw) {
        if (mirror)
            for (auto& [coef, w] : terms) {
                coef = swap_q0_q1(coef);
                for (auto& g : w) {
                    if (g.kind == G::tr)
                        g = {G::t0, 0, 1};
                    else
                        g.index = r - g.index;
                }
            }
        out.push_back(make_rel(terms));
    }
    if (mirror && !literal_transport_)
        for (auto& t : deformed(r, q * q * q0 * q1.inv(), qi * qi)) out.push_back(make_rel(t));
    return out;
}

std::vector<Relation> CoidealAction::ii_relations() const
{
    std::vector<Relation> out;
    std::set<std::string> seen;
    auto keep = [&](const Relation& rel) {
        for (const auto& [c, w] : rel.terms)
            for (const auto& g : w)
                if (!valid(g)) return;
        if (seen.insert(rel.name).second) out.push_back(rel);
    };
    for (const auto& rel : ji_relations(false)) keep(rel);
    for (const auto& rel : ji_relations(true)) keep(rel);
    G t0 = {G::t0, 0, 1}, tr = {G::tr, p_.r, 1};
    keep(make_rel({{Scalar(1), {t0, tr}}, {Scalar(-1), {tr, t0}}}));
    return out;
}

std::vector<Relation> CoidealAction::relations() const
{
    std::vector<Relation> rels;
    switch (p_.variant) {
    case Variant::jj: rels = jj_relations(); break;
    case Variant::ji: rels = ji_relations(false); break;
    case Variant::ij: rels = ji_relations(true); break;
    case Variant::ii: rels = ii_relations(); break;
    }
    for (auto& rel : rels)
        for (auto& [c, w] : rel.terms) c = specialize(c, p_.spec);
    return rels;
}

TensorVec closed_form_jj(const CoidealGen& g, int j, int r, const Scalar& q0, const Scalar& q1, const Scalar& q)
{
    const int n = 2 * r + 2;
    auto eq = [&](int a, int b) { return mod(a - b, n) == 0; };
    auto v = [](int x, const Scalar& c = Scalar(1)) { return TensorVec::basis({x}, c); };
    TensorVec out;
    const int i = g.index;
    switch (g.kind) {
    case CoidealGen::h: {
        int a = i;
        Scalar val = 1;
        if ((a == 0 || a == r + 1) && eq(a, j))
            val = q * q;
        else if (a != 0 && a != r + 1 && (eq(a, j) || eq(-a, j)))
            val = q;
        return v(j, val.pow(g.power));
    }
    case CoidealGen::e:
        if (i == 0) {
            if (eq(j, 1)) return v(j - 1);
            if (eq(j, -1)) return v(j + 1, q0.inv());
            return out;
        }
        if (i == r) {
            if (eq(j, r + 1)) return v(j - 1) + v(j + 1);
            return out;
        }
        if (eq(j, i + 1)) out += v(j - 1);
        if (eq(-j, i + 1)) out += v(j + 1);
        return out;
    case CoidealGen::f:
        if (i == 0) {
            if (eq(j, 0)) return v(j + 1, q1) + v(j - 1);
            return out;
        }
        if (i == r) {
            if (eq(j, r)) return v(j + 1, q0 * q1.inv());
            if (eq(j, r + 2)) return v(j - 1);
            return out;
        }
        if (eq(j, i)) out += v(j + 1);
        if (eq(-j, i)) out += v(j - 1);
        return out;
    default: throw std::invalid_argument("closed form covers e, f, h only");
    }
}

}  // namespace qsp
