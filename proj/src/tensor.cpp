#include "qsp/tensor.hpp"

#include <stdexcept>
#include <tuple>

namespace qsp {

std::string variant_name(Variant v)
{
    switch (v) {
    case Variant::jj: return "jj";
    case Variant::ji: return "ji";
    case Variant::ij: return "ij";
    case Variant::ii: return "ii";
    }
    return "jj";
}

Variant variant_by_name(const std::string& s)
{
    if (s == "jj") return Variant::jj;
    if (s == "ji") return Variant::ji;
    if (s == "ij") return Variant::ij;
    if (s == "ii") return Variant::ii;
    throw std::invalid_argument("unknown variant: " + s);
}

int mod(int a, int n)
{
    int m = a % n;
    return m < 0 ? m + n : m;
}

std::pair<int, int> residue_split(int f, int r)
{
    int n = 2 * r + 2;
    int k = mod(f + r, n) - r;
    return {k, (f - k) / n};
}

bool RepParams::residue_allowed(int m) const
{
    int k = mod(m, n());
    if ((variant == Variant::ji || variant == Variant::ii) && k == r + 1) return false;
    if ((variant == Variant::ij || variant == Variant::ii) && k == 0) return false;
    return true;
}

bool RepParams::index_allowed(const std::vector<int>& f) const
{
    for (int x : f)
        if (!residue_allowed(x)) return false;
    return true;
}

void RepParams::validate_duality() const
{
    if (r < 1 || d < 1) throw std::invalid_argument("need r >= 1 and d >= 1");
    if (r < d) throw std::invalid_argument("duality requires r >= d");
    if (variant == Variant::ii && (r < 2 || d < 2)) throw std::invalid_argument("ii variant requires r >= d >= 2");
}

TensorVec TensorVec::basis(const Index& f, const Scalar& c)
{
    TensorVec v;
    v.add_term(f, c);
    return v;
}

Scalar TensorVec::coeff(const Index& f) const
{
    auto it = terms_.find(f);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorVec::add_term(const Index& f, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(f, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorVec& TensorVec::operator+=(const TensorVec& o)
{
    for (const auto& [f, c] : o.terms_) add_term(f, c);
    return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& o)
{
    for (const auto& [f, c] : o.terms_) add_term(f, -c);
    return *this;
}

TensorVec& TensorVec::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, x] : terms_) x *= c;
    return *this;
}

std::string TensorVec::str() const
{
    std::vector<std::pair<std::string, Scalar>> items;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& f = it->first;
        std::string name = f.size() == 1 ? "v[" : "M[";
        for (std::size_t i = 0; i < f.size(); ++i) name += (i ? "," : "") + std::to_string(f[i]);
        items.push_back({name + "]", it->second});
    }
    return linear_combination_str(items);
}

TensorVec specialize(const TensorVec& v, const Specialization& s)
{
    TensorVec out;
    for (const auto& [f, c] : v.terms()) out.add_term(f, specialize(c, s));
    return out;
}

HeckeAction::HeckeAction(const RepParams& p) : p_(p), H_(HeckeParams::make(p.weyl(), p.spec))
{
    const auto& hp = H_.params();
    A_ = hp.q0.inv() * hp.q1;
    B_ = hp.q1 - hp.q0.inv();
    C_ = A_ - Scalar(1);
}

TensorVec HeckeAction::act_X(const TensorVec& v, int a, int power) const
{
    if (a < 1 || a > p_.d) throw std::out_of_range("X index out of range");
    TensorVec out;
    for (const auto& [f, c] : v.terms()) {
        auto g = f;
        g[a - 1] -= power * p_.n();
        out.add_term(g, c);
    }
    return out;
}

TensorVec HeckeAction::T0_single(int f) const
{
    const int n = p_.n(), r = p_.r;
    const auto& hp = H_.params();
    auto [k, j] = residue_split(f, r);
    TensorVec out;
    auto put = [&](int kk, int jj, const Scalar& c) { out.add_term({kk + n * jj}, c); };
    Scalar mB = -B_, mC = -C_;
    if (k == r + 1) {
        if (j >= 0) {
            put(-k, -j, A_);
            for (int l = 1; l <= j; ++l) put(k, j - 2 * l, B_);
            for (int l = 1; l <= j; ++l) put(k, j + 1 - 2 * l, C_);
        } else {
            put(-k, -j, 1);
            for (int l = 1; l <= -j; ++l) put(k, -j - 2 * l, mB);
            for (int l = 2; l <= -j; ++l) put(k, -j + 1 - 2 * l, mC);
        }
    } else if (k > 0) {
        if (j >= 0) {
            put(-k, -j, 1);
            for (int l = 1; l <= j; ++l) put(k, j - 2 * l, B_);
            for (int l = 1; l <= j; ++l) put(k, j + 1 - 2 * l, C_);
        } else {
            put(-k, -j, 1);
            for (int l = 1; l <= -j; ++l) put(k, -j - 2 * l, mB);
            for (int l = 1; l <= -j; ++l) put(k, -j + 1 - 2 * l, mC);
        }
    } else if (k == 0) {
        if (j >= 0) {
            put(0, -j, hp.q0.inv());
            for (int l = 1; l <= j; ++l) put(k, j - 2 * l, B_);
            for (int l = 1; l <= j; ++l) put(k, j + 1 - 2 * l, C_);
        } else {
            put(0, -j, hp.q1);
            for (int l = 0; l <= -j; ++l) put(0, -j - 2 * l, mB);
            for (int l = 1; l <= -j; ++l) put(k, -j + 1 - 2 * l, mC);
        }
    } else {
        if (j > 0) {
            put(-k, -j, A_);
            for (int l = 1; l <= j - 1; ++l) put(k, j - 2 * l, B_);
            for (int l = 1; l <= j; ++l) put(k, j + 1 - 2 * l, C_);
        } else {
            put(-k, -j, A_);
            for (int l = 0; l <= -j; ++l) put(k, -j - 2 * l, mB);
            for (int l = 1; l <= -j; ++l) put(k, -j + 1 - 2 * l, mC);
        }
    }
    return out;
}

namespace {

// (u^p w^s - u^s w^p) / (w - u) as a list of exponent pairs with sign.
std::vector<std::tuple<int, int, int>> divided_difference(int p, int s)
{
    std::vector<std::tuple<int, int, int>> out;
    if (s > p)
        for (int k = 0; k < s - p; ++k) out.emplace_back(p + k, s - 1 - k, 1);
    else if (p > s)
        for (int k = 0; k < p - s; ++k) out.emplace_back(s + k, p - 1 - k, -1);
    return out;
}

}  // namespace

TensorVec HeckeAction::Ti_basis(const TensorVec::Index& f, int i) const
{
    const int n = p_.n(), r = p_.r;
    const auto& hp = H_.params();
    const int x = i - 1, y = i;  // 0-based positions of z_i, z_{i+1}
    auto [fx, a] = residue_split(f[x], r);
    auto [fy, b] = residue_split(f[y], r);
    TensorVec out;
    auto fs = f;
    std::swap(fs[x], fs[y]);
    Scalar qi = hp.q.inv();
    Scalar coef = qi - hp.q;
    auto bar_times = [&](int ex, int ey, const Scalar& c) {
        auto g = f;
        g[x] = fx + n * ex;
        g[y] = fy + n * ey;
        out.add_term(g, c);
    };
    if (fy > fx) {
        out.add_term(fs, 1);
        for (auto [ex, ey, sg] : divided_difference(b, a)) bar_times(ex + 1, ey, coef * Scalar(sg));
    } else if (fy == fx) {
        bar_times(b, a, qi);
        for (auto [ex, ey, sg] : divided_difference(b, a)) bar_times(ex + 1, ey, coef * Scalar(sg));
    } else {
        out.add_term(fs, 1);
        for (auto [ex, ey, sg] : divided_difference(b, a + 1)) bar_times(ex, ey, coef * Scalar(sg));
    }
    return out;
}

TensorVec HeckeAction::Td_basis(const TensorVec::Index& f) const
{
    const int d = p_.d;
    TensorVec v = act_X(TensorVec::basis(f), d);
    for (int i = d - 1; i >= 1; --i) v = act_gen_inverse(v, i);
    v = act_gen_inverse(v, 0);
    for (int i = 1; i <= d - 1; ++i) v = act_gen_inverse(v, i);
    return v * H_.params().q0.inv();
}

TensorVec HeckeAction::basis_gen(const TensorVec::Index& f, int i) const
{
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find({i, f});
        if (it != cache_.end()) return it->second;
    }
    TensorVec out;
    if (i == 0) {
        TensorVec single = T0_single(f[0]);
        for (const auto& [g, c] : single.terms()) {
            auto h = f;
            h[0] = g[0];
            out.add_term(h, c);
        }
    } else if (i == p_.d) {
        out = Td_basis(f);
    } else {
        out = Ti_basis(f, i);
    }
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(std::make_pair(i, f), out);
    return out;
}

TensorVec HeckeAction::act_gen(const TensorVec& v, int i) const
{
    if (i < 0 || i > p_.d) throw std::out_of_range("generator index out of range");
    TensorVec out;
    for (const auto& [f, c] : v.terms()) out += basis_gen(f, i) * c;
    return out;
}

TensorVec HeckeAction::act_Ti(const TensorVec& v, int i) const
{
    if (i < 1 || i >= p_.d) throw std::out_of_range("T_i index out of range");
    return act_gen(v, i);
}

TensorVec HeckeAction::act_T0(const TensorVec& v) const { return act_gen(v, 0); }
TensorVec HeckeAction::act_Td(const TensorVec& v) const { return act_gen(v, p_.d); }

TensorVec HeckeAction::act_gen_inverse(const TensorVec& v, int i) const
{
    const auto& hp = H_.params();
    TensorVec out = act_gen(v, i) - v * hp.root_sum[i];
    return out * hp.root_negprod[i].inv();
}

TensorVec HeckeAction::act_word(const TensorVec& v, const Word& w) const
{
    TensorVec out = v;
    for (int i : w) out = act_gen(out, i);
    return out;
}

TensorVec HeckeAction::act(const TensorVec& v, const HeckeElt& h) const
{
    TensorVec out;
    for (const auto& [w, c] : h.terms()) out += act_word(v, H_.word(w)) * c;
    return out;
}

}  // namespace qsp
