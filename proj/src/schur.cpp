#include "qsp/schur.hpp"

#include <algorithm>
#include <sstream>

namespace qsp {

std::string comp_str(const Composition& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

Composition parse_comp(const std::string& s) {
    Composition c;
    std::string t;
    for (char ch : s)
        if (ch != '(' && ch != ')' && ch != ' ') t += ch;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw std::invalid_argument("bad composition: " + s);
        c.push_back(std::stoi(part));
        if (c.back() < 0) throw std::invalid_argument("negative part in composition: " + s);
    }
    if (c.size() < 2) throw std::invalid_argument("bad composition: " + s);
    return c;
}

static void compositions_rec(int slots, int left, Composition& cur, std::vector<Composition>& out) {
    if ((int)cur.size() == slots - 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur.push_back(k);
        compositions_rec(slots, left - k, cur, out);
        cur.pop_back();
    }
}

std::vector<Composition> enumerate_compositions(int r, int d, Variant v) {
    if (d < 1) throw std::invalid_argument("d >= 1 required");
    if (r < d) throw std::invalid_argument("r >= d required (r=" + std::to_string(r) + ", d=" + std::to_string(d) + ")");
    std::vector<Composition> all, out;
    Composition cur;
    compositions_rec(r + 2, d, cur, all);
    bool no_last = v == Variant::ji || v == Variant::ii;
    bool no_first = v == Variant::ij || v == Variant::ii;
    for (auto& c : all) {
        if (no_last && c[r + 1] != 0) continue;
        if (no_first && c[0] != 0) continue;
        out.push_back(c);
    }
    return out;
}

Composition omega(int r, int d) {
    if (r < d) throw std::invalid_argument("r >= d required");
    Composition c(r + 2, 0);
    for (int i = 1; i <= d; ++i) c[i] = 1;
    return c;
}

std::optional<Composition> tilde_e(const Composition& c, int i) {
    if (i < 0 || i + 1 >= (int)c.size()) throw std::out_of_range("tilde_e index");
    if (c[i + 1] == 0) return std::nullopt;
    Composition out = c;
    ++out[i];
    --out[i + 1];
    return out;
}

std::optional<Composition> tilde_f(const Composition& c, int i) {
    if (i < 0 || i + 1 >= (int)c.size()) throw std::out_of_range("tilde_f index");
    if (c[i] == 0) return std::nullopt;
    Composition out = c;
    --out[i];
    ++out[i + 1];
    return out;
}

std::vector<int> parabolic_gens(const Composition& c, int d) {
    std::vector<bool> cut(d + 1, false);
    int s = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        s += c[i];
        cut[s] = true;
    }
    std::vector<int> g;
    for (int i = 0; i <= d; ++i)
        if (!cut[i]) g.push_back(i);
    return g;
}

std::vector<int> M_index(const Composition& c) {
    std::vector<int> f;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int k = 0; k < c[i]; ++k) f.push_back((int)i);
    return f;
}

bool TElt::operator==(const TElt& o) const {
    auto clean = [](const std::map<Composition, HeckeElt>& m) {
        std::map<Composition, HeckeElt> out;
        for (auto& [k, v] : m)
            if (!v.is_zero()) out.emplace(k, v);
        return out;
    };
    return clean(parts) == clean(o.parts);
}

std::string TElt::str() const {
    std::string out;
    for (auto& [lam, h] : parts) {
        if (h.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "x" + comp_str(lam) + "*(" + h.str() + ")";
    }
    return out.empty() ? "0" : out;
}

TensorVec SchurElt::image(const Composition& c) const {
    auto it = images.find(c);
    return it == images.end() ? TensorVec() : it->second;
}

bool SchurElt::is_zero() const {
    for (auto& [k, v] : images)
        if (!v.is_zero()) return false;
    return true;
}

SchurElt& SchurElt::operator+=(const SchurElt& o) {
    for (auto& [k, v] : o.images) images[k] += v;
    return *this;
}

SchurElt& SchurElt::operator-=(const SchurElt& o) {
    for (auto& [k, v] : o.images) images[k] -= v;
    return *this;
}

SchurElt& SchurElt::operator*=(const Scalar& c) {
    for (auto& [k, v] : images) v *= c;
    return *this;
}

bool SchurElt::operator==(const SchurElt& o) const {
    for (auto& [k, v] : images)
        if (v != o.image(k)) return false;
    for (auto& [k, v] : o.images)
        if (v != image(k)) return false;
    return true;
}

std::string phi_name(const PhiKey& k) {
    auto& [lam, mu, g] = k;
    std::string w = g.is_identity() ? "e" : g.str();
    return "phi[" + w + "]" + comp_str(lam) + comp_str(mu);
}

SchurContext::SchurContext(const RepParams& p) : p_(p), H_(p), U_(p) {
    comps_ = enumerate_compositions(p.r, p.d, p.variant);
}

bool SchurContext::contains(const Composition& c) const {
    return std::binary_search(comps_.begin(), comps_.end(), c, std::greater<>());
}

const std::vector<WeylElt>& SchurContext::W_lambda(const Composition& c) const {
    std::lock_guard lk(mu_);
    auto it = W_cache_.find(c);
    if (it != W_cache_.end()) return it->second;
    return W_cache_.emplace(c, parabolic_elements(parabolic_gens(c, p_.d), p_.weyl())).first->second;
}

HeckeElt SchurContext::x_lambda(const Composition& c) const {
    return H_.hecke().T_X(W_lambda(c));
}

std::pair<Composition, Word> SchurContext::orbit_decomposition(const std::vector<int>& f) const {
    {
        std::lock_guard lk(mu_);
        auto it = orbit_cache_.find(f);
        if (it != orbit_cache_.end()) return it->second;
    }
    const int d = p_.d, n = p_.n(), r = p_.r;
    if ((int)f.size() != d) throw std::invalid_argument("index has wrong length");
    std::vector<int> u = f;
    Word pushed;
    for (;;) {
        if (u[0] < 0) {
            u[0] = -u[0];
            pushed.push_back(0);
            continue;
        }
        bool moved = false;
        for (int i = 1; i < d; ++i)
            if (u[i - 1] > u[i]) {
                std::swap(u[i - 1], u[i]);
                pushed.push_back(i);
                moved = true;
                break;
            }
        if (moved) continue;
        if (u[d - 1] > r + 1) {
            u[d - 1] = n - u[d - 1];
            pushed.push_back(d);
            continue;
        }
        break;
    }
    Composition lam(r + 2, 0);
    for (int x : u) ++lam[x];
    std::reverse(pushed.begin(), pushed.end());
    std::pair<Composition, Word> res{lam, pushed};
    std::lock_guard lk(mu_);
    orbit_cache_.emplace(f, res);
    return res;
}

Composition SchurContext::orbit_type(const std::vector<int>& f) const { return orbit_decomposition(f).first; }

TensorVec SchurContext::kappa(const TElt& t) const {
    TensorVec out;
    for (auto& [lam, h] : t.parts) out += H_.act(M(lam), h);
    return out;
}

TensorVec SchurContext::leading_image(const std::vector<int>& f) const {
    {
        std::lock_guard lk(mu_);
        auto it = image_cache_.find(f);
        if (it != image_cache_.end()) return it->second;
    }
    auto [lam, w] = orbit_decomposition(f);
    TensorVec img = H_.act_word(M(lam), w);
    std::lock_guard lk(mu_);
    image_cache_.emplace(f, img);
    return img;
}

TElt SchurContext::kappa_inv(const TensorVec& v) const {
    TElt out;
    TensorVec rem = v;
    const WeylParams wp = p_.weyl();
    while (!rem.is_zero()) {
        const std::vector<int>* best = nullptr;
        std::size_t best_len = 0;
        for (auto& [f, c] : rem.terms()) {
            std::size_t len = orbit_decomposition(f).second.size();
            if (!best || len > best_len) {
                best = &f;
                best_len = len;
            }
        }
        std::vector<int> f = *best;
        auto [lam, w] = orbit_decomposition(f);
        if (!contains(lam))
            throw TriangularityError("orbit type " + comp_str(lam) + " outside the variant at index " + word_str(f));
        TensorVec img = leading_image(f);
        Scalar lead = img.coeff(f);
        if (lead.is_zero()) throw TriangularityError("zero leading coefficient at " + word_str(f));
        for (auto& [g, c] : img.terms())
            if (g != f && orbit_decomposition(g).second.size() >= best_len)
                throw TriangularityError("no strict decrease at " + word_str(f) + " (term " + word_str(g) + ")");
        Scalar c = rem.coeff(f) / lead;
        rem -= img * c;
        auto& part = out.parts[lam];
        if (part.params() != wp) part = HeckeElt(wp);
        part.add_term(WeylElt::from_word(w, wp), c);
    }
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = it->second.is_zero() ? out.parts.erase(it) : std::next(it);
    return out;
}

bool SchurContext::in_D(const Composition& lam, const Composition& mu, const WeylElt& g) const {
    return is_min_double(g, parabolic_gens(lam, p_.d), parabolic_gens(mu, p_.d));
}

SchurElt SchurContext::phi(const Composition& lam, const Composition& mu, const WeylElt& g) const {
    if (!contains(lam) || !contains(mu))
        throw std::invalid_argument("composition outside the variant: " + comp_str(lam) + " " + comp_str(mu));
    auto gl = parabolic_gens(lam, p_.d), gm = parabolic_gens(mu, p_.d);
    if (!is_min_double(g, gl, gm))
        throw std::invalid_argument(g.str() + " is not a minimal double coset representative for " + comp_str(lam) +
                                    ", " + comp_str(mu));
    std::vector<WeylElt> xs;
    for (auto& x : double_coset(gl, g, gm))
        if (is_min_right(x, gl)) xs.push_back(x);
    SchurElt s;
    s.images[mu] = H_.act(M(lam), H_.hecke().T_X(xs));
    return s;
}

SchurElt SchurContext::identity() const {
    SchurElt s;
    for (auto& c : comps_) s.images[c] = M(c);
    return s;
}

SchurElt SchurContext::psi(const CoidealGen& g) const {
    if (!U_.valid(g)) throw std::invalid_argument("generator " + g.name() + " not in the " + variant_name(p_.variant) + " algebra");
    SchurElt s;
    for (auto& c : comps_) {
        TensorVec img = U_.act(M(c), g);
        kappa_inv(img);
        s.images[c] = img;
    }
    return s;
}

TensorVec SchurContext::apply(const SchurElt& s, const TensorVec& v) const {
    TensorVec out;
    for (auto& [lam, h] : kappa_inv(v).parts) {
        auto it = s.images.find(lam);
        if (it == s.images.end() || it->second.is_zero()) continue;
        out += H_.act(it->second, h);
    }
    return out;
}

SchurElt SchurContext::compose(const SchurElt& a, const SchurElt& b) const {
    SchurElt s;
    for (auto& [mu, v] : b.images) s.images[mu] = apply(a, v);
    return s;
}

PhiExpansion SchurContext::phi_expand(const SchurElt& s) const {
    PhiExpansion out;
    for (auto& [mu, v] : s.images) {
        if (v.is_zero()) continue;
        auto gm = parabolic_gens(mu, p_.d);
        for (auto& [lam, h] : kappa_inv(v).parts) {
            auto gl = parabolic_gens(lam, p_.d);
            for (auto& [w, c] : h.terms())
                if (is_min_left(w, gm)) out[{lam, mu, w}] = c * H_.hecke().q_w(w);
        }
    }
    if (from_expansion(out) != s) throw std::logic_error("element is not H-linear on the generators");
    return out;
}

SchurElt SchurContext::from_expansion(const PhiExpansion& e) const {
    SchurElt s;
    for (auto& [k, c] : e) {
        auto& [lam, mu, g] = k;
        s += phi(lam, mu, g) * c;
    }
    return s;
}

TensorVec SchurContext::project(const Composition& lam, const TensorVec& v) const {
    TensorVec out;
    for (auto& [f, c] : v.terms())
        if (orbit_type(f) == lam) out.add_term(f, c);
    return out;
}

std::vector<CoidealGen> SchurContext::cartan_generators() const {
    std::vector<CoidealGen> out;
    for (auto& g : U_.generators())
        if (g.kind == CoidealGen::h || g.kind == CoidealGen::k) out.push_back(g);
    return out;
}

Scalar SchurContext::eigenvalue(const CoidealGen& g, const Composition& mu) const {
    TensorVec m = M(mu), img = U_.act(m, g);
    Scalar c = img.coeff(M_index(mu));
    if (img != m * c) throw std::logic_error(comp_str(mu) + " is not an eigenvector of " + g.name());
    return c;
}

Interpolation SchurContext::interpolation(const Composition& lam) const {
    auto gens = cartan_generators();
    Interpolation ip{lam, {}};
    for (auto& mu : comps_) {
        if (mu == lam) continue;
        bool found = false;
        for (auto& g : gens) {
            Scalar a = eigenvalue(g, lam), b = eigenvalue(g, mu);
            if (a != b) {
                ip.factors.push_back({g, b, a - b});
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("eigenvalue collision between " + comp_str(lam) + " and " + comp_str(mu));
    }
    return ip;
}

TensorVec SchurContext::apply_interpolation(const Interpolation& ip, const TensorVec& v) const {
    TensorVec out = v;
    for (auto& fac : ip.factors) {
        if (out.is_zero()) break;
        out = (U_.act(out, fac.gen) - out * fac.shift) * fac.denom.inv();
    }
    return out;
}

SchurElt SchurContext::eval_interpolation(const Interpolation& ip) const {
    SchurElt s;
    for (auto& c : comps_) s.images[c] = apply_interpolation(ip, M(c));
    return s;
}

}  // namespace qsp
