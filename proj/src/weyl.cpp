#include "qsp/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace qsp {

void WeylParams::validate() const
{
    if (d < 1) throw std::invalid_argument("rank d must be at least 1");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("period n must be even and at least 4");
}

WeylElt WeylElt::identity(const WeylParams& p)
{
    WeylElt g;
    g.p_ = p;
    g.perm_.resize(static_cast<std::size_t>(p.d));
    for (int i = 0; i < p.d; ++i) g.perm_[static_cast<std::size_t>(i)] = i;
    g.sign_.assign(static_cast<std::size_t>(p.d), 1);
    g.off_.assign(static_cast<std::size_t>(p.d), 0);
    g.len_ = 0;
    return g;
}

WeylElt WeylElt::generator(int i, const WeylParams& p)
{
    if (i < 0 || i > p.d) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
    WeylElt g = identity(p);
    if (i == 0) {
        g.sign_[0] = -1;
    } else if (i == p.d) {
        g.sign_[static_cast<std::size_t>(p.d - 1)] = -1;
        g.off_[static_cast<std::size_t>(p.d - 1)] = 1;
    } else {
        std::swap(g.perm_[static_cast<std::size_t>(i - 1)], g.perm_[static_cast<std::size_t>(i)]);
    }
    g.len_ = 1;
    return g;
}

WeylElt WeylElt::from_word(const Word& w, const WeylParams& p)
{
    WeylElt g = identity(p);
    for (int i : w) g = g.times_gen(i);
    return g;
}

WeylElt WeylElt::parse(std::string_view text, const WeylParams& p)
{
    Word w;
    std::size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip();
    if (i < text.size() && text[i] == 'e' && text.substr(i).find_first_not_of("e ") == std::string_view::npos)
        return identity(p);
    while (i < text.size()) {
        skip();
        if (i >= text.size() || text[i] != 's') throw std::invalid_argument("bad Weyl word '" + std::string(text) + "'");
        ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (start == i) throw std::invalid_argument("bad Weyl word '" + std::string(text) + "'");
        w.push_back(std::stoi(std::string(text.substr(start, i - start))));
        skip();
        if (i < text.size()) {
            if (text[i] != '.') throw std::invalid_argument("bad Weyl word '" + std::string(text) + "'");
            ++i;
        }
    }
    return from_word(w, p);
}

std::vector<int> WeylElt::act(const std::vector<int>& f) const
{
    if (static_cast<int>(f.size()) != p_.d) throw std::invalid_argument("vector length does not match rank");
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = sign_[i] * f[static_cast<std::size_t>(perm_[i])] + p_.n * off_[i];
    return out;
}

WeylElt operator*(const WeylElt& g, const WeylElt& h)
{
    if (g.p_ != h.p_) throw std::invalid_argument("Weyl group parameter mismatch");
    WeylElt r;
    r.p_ = g.p_;
    std::size_t d = static_cast<std::size_t>(g.p_.d);
    r.perm_.resize(d);
    r.sign_.resize(d);
    r.off_.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        auto j = static_cast<std::size_t>(h.perm_[i]);
        r.perm_[i] = g.perm_[j];
        r.sign_[i] = h.sign_[i] * g.sign_[j];
        r.off_[i] = h.sign_[i] * g.off_[j] + h.off_[i];
    }
    r.compute_length();
    return r;
}

WeylElt WeylElt::inverse() const
{
    WeylElt r = *this;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        auto j = static_cast<std::size_t>(perm_[i]);
        r.perm_[j] = static_cast<int>(i);
        r.sign_[j] = sign_[i];
        r.off_[j] = -sign_[i] * off_[i];
    }
    return r;
}

WeylElt WeylElt::times_gen(int i) const { return *this * generator(i, p_); }

WeylElt WeylElt::gen_times(int i) const { return generator(i, p_) * *this; }

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

// Count walls between the alcove point p_i = (i+1) n / (2(d+1)) and its image,
// after scaling all coordinates by 2(d+1) so everything is integral.
void WeylElt::compute_length()
{
    const long d = p_.d, n = p_.n;
    const long L1 = n * (d + 1), L2 = 2 * n * (d + 1);
    std::vector<long> P(static_cast<std::size_t>(d)), G(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) P[static_cast<std::size_t>(i)] = (i + 1) * n;
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
        G[i] = sign_[i] * P[static_cast<std::size_t>(perm_[i])] + n * off_[i] * 2 * (d + 1);
    long len = 0;
    auto walls = [](long x, long y, long L) { return std::labs(floor_div(x, L) - floor_div(y, L)); };
    for (std::size_t i = 0; i < P.size(); ++i) {
        len += walls(P[i], G[i], L1);
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            len += walls(P[i] - P[j], G[i] - G[j], L2);
            len += walls(P[i] + P[j], G[i] + G[j], L2);
        }
    }
    len_ = static_cast<int>(len);
}

Word WeylElt::reduced_word() const
{
    Word w;
    WeylElt g = *this;
    while (g.len_ > 0) {
        int found = -1;
        for (int i = 0; i <= p_.d; ++i) {
            WeylElt h = g.times_gen(i);
            if (h.len_ < g.len_) {
                found = i;
                g = std::move(h);
                break;
            }
        }
        if (found < 0) throw std::logic_error("element of positive length without right descent");
        w.push_back(found);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::string word_str(const Word& w)
{
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += '.';
        s += "s" + std::to_string(w[k]);
    }
    return s;
}

std::string WeylElt::str() const { return word_str(reduced_word()); }

bool WeylElt::operator<(const WeylElt& o) const
{
    if (len_ != o.len_) return len_ < o.len_;
    if (perm_ != o.perm_) return perm_ < o.perm_;
    if (sign_ != o.sign_) return sign_ < o.sign_;
    return off_ < o.off_;
}

std::size_t WeylElt::hash() const
{
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= static_cast<std::size_t>(v + 0x9e37);
        h *= 1099511628211ull;
    };
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        mix(perm_[i]);
        mix(sign_[i]);
        mix(off_[i]);
    }
    return h;
}

std::vector<WeylElt> parabolic_elements(const std::vector<int>& gens, const WeylParams& p)
{
    std::vector<int> g = gens;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    for (int i : g)
        if (i < 0 || i > p.d) throw std::out_of_range("generator index out of range");
    if (static_cast<int>(g.size()) == p.d + 1)
        throw std::invalid_argument("full generator set generates an infinite group");
    std::unordered_set<WeylElt, WeylHash> seen;
    std::vector<WeylElt> out;
    std::queue<WeylElt> todo;
    WeylElt e = WeylElt::identity(p);
    seen.insert(e);
    todo.push(e);
    while (!todo.empty()) {
        WeylElt x = todo.front();
        todo.pop();
        out.push_back(x);
        for (int i : g) {
            WeylElt y = x.times_gen(i);
            if (seen.insert(y).second) todo.push(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_min_right(const WeylElt& g, const std::vector<int>& gens)
{
    for (int i : gens)
        if (g.gen_times(i).length() < g.length()) return false;
    return true;
}

bool is_min_left(const WeylElt& g, const std::vector<int>& gens)
{
    for (int i : gens)
        if (g.times_gen(i).length() < g.length()) return false;
    return true;
}

bool is_min_double(const WeylElt& g, const std::vector<int>& left_gens, const std::vector<int>& right_gens)
{
    return is_min_right(g, left_gens) && is_min_left(g, right_gens);
}

std::vector<WeylElt> double_coset(const std::vector<int>& left_gens, const WeylElt& g,
                                  const std::vector<int>& right_gens)
{
    const auto& p = g.params();
    auto L = parabolic_elements(left_gens, p);
    auto R = parabolic_elements(right_gens, p);
    std::unordered_set<WeylElt, WeylHash> seen;
    std::vector<WeylElt> out;
    for (const auto& a : L) {
        WeylElt ag = a * g;
        for (const auto& b : R) {
            WeylElt x = ag * b;
            if (seen.insert(x).second) out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeylElt min_double_rep(const std::vector<int>& left_gens, const WeylElt& g, const std::vector<int>& right_gens)
{
    WeylElt x = g;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : left_gens) {
            WeylElt y = x.gen_times(i);
            if (y.length() < x.length()) {
                x = std::move(y);
                moved = true;
            }
        }
        for (int i : right_gens) {
            WeylElt y = x.times_gen(i);
            if (y.length() < x.length()) {
                x = std::move(y);
                moved = true;
            }
        }
    }
    return x;
}

std::vector<std::vector<WeylElt>> elements_by_length(const WeylParams& p, int max_len)
{
    std::vector<std::vector<WeylElt>> levels;
    std::unordered_set<WeylElt, WeylHash> seen;
    WeylElt e = WeylElt::identity(p);
    seen.insert(e);
    levels.push_back({e});
    for (int k = 1; k <= max_len; ++k) {
        std::vector<WeylElt> next;
        for (const auto& x : levels.back())
            for (int i = 0; i <= p.d; ++i) {
                WeylElt y = x.times_gen(i);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        std::sort(next.begin(), next.end());
        levels.push_back(std::move(next));
    }
    return levels;
}

}  // namespace qsp
