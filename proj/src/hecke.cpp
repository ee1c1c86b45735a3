#include "qsp/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

HeckeElt HeckeElt::basis(const WeylElt& w, const Scalar& c)
{
    HeckeElt h(w.params());
    h.add_term(w, c);
    return h;
}

Scalar HeckeElt::coeff(const WeylElt& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void HeckeElt::add_term(const WeylElt& w, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o)
{
    if (terms_.empty()) p_ = o.p_;
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o)
{
    if (terms_.empty()) p_ = o.p_;
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

HeckeElt& HeckeElt::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

namespace {

std::string coeff_prefix(const Scalar& c)
{
    if (c == Scalar(1)) return "";
    if (c == Scalar(-1)) return "-";
    std::string s = c.str();
    bool atomic = s.find_first_of("/ ") == std::string::npos;
    return atomic ? s + "*" : "(" + s + ")*";
}

}  // namespace

std::string linear_combination_str(const std::vector<std::pair<std::string, Scalar>>& items)
{
    if (items.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [name, c] : items) {
        std::string t = coeff_prefix(c) + name;
        if (first)
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
        first = false;
    }
    return out;
}

std::string HeckeElt::str() const
{
    std::vector<std::pair<std::string, Scalar>> items;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) items.push_back({"T[" + it->first.str() + "]", it->second});
    return linear_combination_str(items);
}

HeckeElt specialize(const HeckeElt& h, const Specialization& s)
{
    HeckeElt out(h.params());
    for (const auto& [w, c] : h.terms()) out.add_term(w, specialize(c, s));
    return out;
}

HeckeParams HeckeParams::make(const WeylParams& w, const Specialization& s)
{
    w.validate();
    HeckeParams p;
    p.w = w;
    p.spec = s;
    p.q = Scalar::q();
    p.q0 = specialize(Scalar::q0(), s);
    p.q1 = specialize(Scalar::q1(), s);
    const int d = w.d;
    for (int i = 0; i <= d; ++i) {
        Scalar a, b, wt, ev;
        if (i == d) {
            a = p.q1.inv();
            b = -p.q0.inv();
            wt = p.q0.inv();
            ev = p.q1.inv();
        } else if (i == 0) {
            a = p.q0.inv();
            b = -p.q1;
            wt = p.q1;
            ev = p.q0.inv();
        } else {
            a = p.q.inv();
            b = -p.q;
            wt = p.q;
            ev = p.q.inv();
        }
        p.root_a.push_back(a);
        p.root_b.push_back(b);
        p.root_sum.push_back(a + b);
        p.root_negprod.push_back(-(a * b));
        p.weight.push_back(wt);
        p.eigen.push_back(ev);
    }
    return p;
}

Hecke::Hecke(HeckeParams p) : p_(std::move(p)) { build_X(); }

HeckeElt Hecke::gen_inverse(int i) const
{
    // T^2 = (a+b) T - ab  =>  T^{-1} = (T - (a+b)) / (-ab)
    auto k = static_cast<std::size_t>(i);
    HeckeElt h = gen(i);
    h.add_term(WeylElt::identity(p_.w), -p_.root_sum[k]);
    return h * p_.root_negprod[k].inv();
}

HeckeElt Hecke::T_word(const Word& w) const
{
    HeckeElt h = one();
    for (int i : w) h = mul_gen(h, i, Side::Right);
    return h;
}

HeckeElt Hecke::mul_gen(const HeckeElt& h, int i, Side side) const
{
    auto k = static_cast<std::size_t>(i);
    HeckeElt out(p_.w);
    for (const auto& [w, c] : h.terms()) {
        WeylElt ws = side == Side::Right ? w.times_gen(i) : w.gen_times(i);
        if (ws.length() > w.length()) {
            out.add_term(ws, c);
        } else {
            out.add_term(w, c * p_.root_sum[k]);
            out.add_term(ws, c * p_.root_negprod[k]);
        }
    }
    return out;
}

HeckeElt Hecke::mul(const HeckeElt& a, const HeckeElt& b) const
{
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<std::pair<Word, Scalar>> items;
    items.reserve(b.terms().size());
    for (const auto& [w, c] : b.terms()) items.push_back({word(w), c});
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    HeckeElt out(p_.w);
    // walk the prefix tree of reduced words, sharing a * T_prefix between terms
    auto dfs = [&](auto&& self, const HeckeElt& cur, std::size_t lo, std::size_t hi, std::size_t depth) -> void {
        std::size_t i = lo;
        while (i < hi && items[i].first.size() == depth) {
            out += cur * items[i].second;
            ++i;
        }
        while (i < hi) {
            int letter = items[i].first[depth];
            std::size_t j = i;
            while (j < hi && items[j].first[depth] == letter) ++j;
            self(self, mul_gen(cur, letter, Side::Right), i, j, depth + 1);
            i = j;
        }
    };
    dfs(dfs, a, 0, items.size(), 0);
    return out;
}

HeckeElt Hecke::pow(const HeckeElt& h, int k) const
{
    if (k < 0) throw std::invalid_argument("negative powers of general Hecke elements are not supported");
    HeckeElt r = one();
    for (int i = 0; i < k; ++i) r = mul(r, h);
    return r;
}

void Hecke::build_X()
{
    const int d = p_.w.d;
    X_.assign(static_cast<std::size_t>(d), HeckeElt());
    Xinv_.assign(static_cast<std::size_t>(d), HeckeElt());
    // X_d = q0 T_d T_{d-1} ... T_1 T_0 T_1 ... T_{d-1}
    Word w{d};
    for (int i = d - 1; i >= 0; --i) w.push_back(i);
    for (int i = 1; i <= d - 1; ++i) w.push_back(i);
    X_[static_cast<std::size_t>(d - 1)] = T_word(w) * p_.q0;
    HeckeElt inv = one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv = mul(inv, gen_inverse(*it));
    Xinv_[static_cast<std::size_t>(d - 1)] = inv * p_.q0.inv();
    for (int a = d - 1; a >= 1; --a) {
        HeckeElt ti = gen_inverse(a);
        auto k = static_cast<std::size_t>(a);
        X_[k - 1] = mul(mul(ti, X_[k]), ti);
        Xinv_[k - 1] = mul_gen(mul_gen(Xinv_[k], a, Side::Left), a, Side::Right);
    }
}

const HeckeElt& Hecke::X(int a) const
{
    if (a < 1 || a > d()) throw std::out_of_range("X index out of range");
    return X_[static_cast<std::size_t>(a - 1)];
}

const HeckeElt& Hecke::X_inv(int a) const
{
    if (a < 1 || a > d()) throw std::out_of_range("X index out of range");
    return Xinv_[static_cast<std::size_t>(a - 1)];
}

void Hecke::set_X(std::vector<HeckeElt> X, std::vector<HeckeElt> Xinv)
{
    if (static_cast<int>(X.size()) != d() || static_cast<int>(Xinv.size()) != d())
        throw std::invalid_argument("wrong number of Bernstein elements");
    X_ = std::move(X);
    Xinv_ = std::move(Xinv);
}

HeckeElt Hecke::Td_from_X() const
{
    const int d = this->d();
    HeckeElt h = X(d);
    for (int i = d - 1; i >= 0; --i) h = mul(h, gen_inverse(i));
    for (int i = 1; i <= d - 1; ++i) h = mul(h, gen_inverse(i));
    return h * p_.q0.inv();
}

HeckeElt Hecke::Td_from_X1() const
{
    const int d = this->d();
    HeckeElt h = one();
    for (int i = d - 1; i >= 1; --i) h = mul_gen(h, i, Side::Right);
    h = mul(mul(h, X(1)), gen_inverse(0));
    for (int i = 1; i <= d - 1; ++i) h = mul(h, gen_inverse(i));
    return h * p_.q0.inv();
}

const Word& Hecke::word(const WeylElt& w) const
{
    std::lock_guard<std::mutex> lock(word_mu_);
    auto it = words_.find(w);
    if (it == words_.end()) it = words_.emplace(w, w.reduced_word()).first;
    return it->second;
}

Scalar Hecke::q_w(const WeylElt& w) const
{
    Scalar s(1);
    for (int i : word(w)) s *= p_.weight[static_cast<std::size_t>(i)];
    return s;
}

HeckeElt Hecke::T_X(const std::vector<WeylElt>& xs) const
{
    HeckeElt h(p_.w);
    for (const auto& w : xs) h.add_term(w, q_w(w).inv());
    return h;
}

HeckeElt Hecke::x_lambda(const std::vector<int>& gens) const { return T_X(parabolic_elements(gens, p_.w)); }

}  // namespace qsp
