#include "qsp/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace qsp {

namespace {

bool exp_greater(const Exp& a, const Exp& b) { return a > b; }

Exp exp_add(const Exp& a, const Exp& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Exp exp_sub(const Exp& a, const Exp& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
bool exp_ge(const Exp& a, const Exp& b) { return a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2]; }
Exp exp_min(const Exp& a, const Exp& b)
{
    return {std::min(a[0], b[0]), std::min(a[1], b[1]), std::min(a[2], b[2])};
}

const char* kVarNames[3] = {"q", "q0", "q1"};

}  // namespace

IntPoly::IntPoly(long c)
{
    if (c != 0) terms_.push_back({Exp{0, 0, 0}, mpz_class(c)});
}

IntPoly::IntPoly(const mpz_class& c)
{
    if (c != 0) terms_.push_back({Exp{0, 0, 0}, c});
}

IntPoly IntPoly::monomial(const Exp& e, const mpz_class& c)
{
    IntPoly p;
    if (c != 0) p.terms_.push_back({e, c});
    return p;
}

IntPoly IntPoly::var(int v)
{
    Exp e{0, 0, 0};
    e[v] = 1;
    return monomial(e);
}

IntPoly IntPoly::from_terms(std::vector<Term> terms)
{
    IntPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void IntPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exp_greater(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool IntPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exp{0, 0, 0});
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

template <bool Sub>
std::vector<IntPoly::Term> merge(const std::vector<IntPoly::Term>& a, const std::vector<IntPoly::Term>& b)
{
    std::vector<IntPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && exp_greater(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || exp_greater(b[j].first, a[i].first)) {
            out.push_back(b[j]);
            if (Sub) out.back().second = -out.back().second;
            ++j;
        } else {
            mpz_class c = Sub ? mpz_class(a[i].second - b[j].second) : mpz_class(a[i].second + b[j].second);
            if (c != 0) out.push_back({a[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    terms_ = merge<false>(terms_, o.terms_);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    terms_ = merge<true>(terms_, o.terms_);
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) {
        IntPoly r = b;
        for (auto& t : r.terms_) {
            t.first = exp_add(t.first, a.terms_[0].first);
            t.second *= a.terms_[0].second;
        }
        return r;
    }
    if (b.is_monomial()) return b * a;
    std::vector<IntPoly::Term> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc.push_back({exp_add(x.first, y.first), x.second * y.second});
    return IntPoly::from_terms(std::move(acc));
}

IntPoly& IntPoly::mul_int(const mpz_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

IntPoly& IntPoly::div_int(const mpz_class& c)
{
    for (auto& t : terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return *this;
}

IntPoly IntPoly::mul_monomial(const Exp& e) const
{
    IntPoly r = *this;
    for (auto& t : r.terms_) t.first = exp_add(t.first, e);
    return r;
}

IntPoly IntPoly::div_monomial(const Exp& e) const
{
    IntPoly r = *this;
    for (auto& t : r.terms_) {
        t.first = exp_sub(t.first, e);
        if (t.first[0] < 0 || t.first[1] < 0 || t.first[2] < 0)
            throw std::domain_error("monomial does not divide polynomial");
    }
    return r;
}

IntPoly IntPoly::pow(unsigned k) const
{
    IntPoly r(1), base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

bool IntPoly::operator<(const IntPoly& o) const
{
    std::size_t n = std::min(size(), o.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (terms_[i].first != o.terms_[i].first) return exp_greater(terms_[i].first, o.terms_[i].first);
        if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return size() < o.size();
}

int IntPoly::degree(int v) const
{
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first[v]);
    return d;
}

Exp IntPoly::min_exponents() const
{
    if (terms_.empty()) return {0, 0, 0};
    Exp m = terms_[0].first;
    for (const auto& t : terms_) m = exp_min(m, t.first);
    return m;
}

mpz_class IntPoly::content() const
{
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<IntPoly> IntPoly::coeffs_in(int v) const
{
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(std::max(0, degree(v) + 1)));
    for (const auto& t : terms_) {
        Exp e = t.first;
        int k = e[v];
        e[v] = 0;
        parts[static_cast<std::size_t>(k)].push_back({e, t.second});
    }
    std::vector<IntPoly> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(from_terms(std::move(p)));
    return out;
}

IntPoly IntPoly::from_coeffs(const std::vector<IntPoly>& cs, int v)
{
    std::vector<Term> acc;
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (const auto& t : cs[k].terms_) {
            Exp e = t.first;
            e[v] += static_cast<int>(k);
            acc.push_back({e, t.second});
        }
    return from_terms(std::move(acc));
}

namespace {

std::string monomial_str(const Exp& e, const mpz_class& c)
{
    std::string factors;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += kVarNames[v];
        if (e[v] != 1) factors += '^' + std::to_string(e[v]);
    }
    if (factors.empty()) return c.get_str();
    if (c == 1) return factors;
    if (c == -1) return "-" + factors;
    return c.get_str() + "*" + factors;
}

std::string join_terms(const std::vector<std::string>& parts)
{
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            s += " - " + parts[i].substr(1);
        else
            s += " + " + parts[i];
    }
    return s;
}

}  // namespace

std::string IntPoly::str() const
{
    std::vector<std::string> parts;
    for (const auto& t : terms_) parts.push_back(monomial_str(t.first, t.second));
    return join_terms(parts);
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient)
{
    if (b.is_zero()) throw DivisionByZero("division by zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    const auto& lb = b.lead();
    if (b.is_monomial()) {
        std::vector<IntPoly::Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!exp_ge(t.first, lb.first) || !mpz_divisible_p(t.second.get_mpz_t(), lb.second.get_mpz_t()))
                return false;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), t.second.get_mpz_t(), lb.second.get_mpz_t());
            out.push_back({exp_sub(t.first, lb.first), std::move(c)});
        }
        if (quotient) *quotient = IntPoly::from_terms(std::move(out));
        return true;
    }
    IntPoly rem = a;
    std::vector<IntPoly::Term> q;
    while (!rem.is_zero()) {
        const auto& lt = rem.lead();
        if (!exp_ge(lt.first, lb.first) || !mpz_divisible_p(lt.second.get_mpz_t(), lb.second.get_mpz_t()))
            return false;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), lt.second.get_mpz_t(), lb.second.get_mpz_t());
        IntPoly t = IntPoly::monomial(exp_sub(lt.first, lb.first), c);
        q.push_back(t.lead());
        rem -= t * b;
    }
    if (quotient) *quotient = IntPoly::from_terms(std::move(q));
    return true;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b)
{
    IntPoly q;
    if (!divides(b, a, &q)) throw std::domain_error("inexact polynomial division");
    return q;
}

namespace {

using UPoly = std::vector<IntPoly>;  // coefficients by degree in the current variable

void trim(UPoly& p)
{
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly positive_lead(IntPoly p)
{
    if (!p.is_zero() && p.lead().second < 0) p = -p;
    return p;
}

IntPoly gcd_rec(const IntPoly& a, const IntPoly& b, int v);

IntPoly ucontent(const UPoly& p, int v)
{
    IntPoly g;
    for (const auto& c : p) {
        g = gcd_rec(g, c, v + 1);
        if (g.is_constant() && g == IntPoly(1)) break;
    }
    return g;
}

UPoly udiv(const UPoly& p, const IntPoly& c)
{
    UPoly out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(exact_div(x, c));
    return out;
}

UPoly uscale(const UPoly& p, const IntPoly& c)
{
    UPoly out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(x * c);
    return out;
}

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
UPoly prem(UPoly a, const UPoly& b)
{
    int db = udeg(b);
    const IntPoly& lb = b.back();
    int e = udeg(a) - db + 1;
    while (!a.empty() && udeg(a) >= db) {
        IntPoly la = a.back();
        int shift = udeg(a) - db;
        for (auto& x : a) x = x * lb;
        for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
        trim(a);
        --e;
    }
    if (e > 0) {
        IntPoly f = lb.pow(static_cast<unsigned>(e));
        for (auto& x : a) x = x * f;
    }
    return a;
}

// Subresultant PRS gcd of primitive polynomials; returns a primitive result.
UPoly subresultant_gcd(UPoly a, UPoly b, int v)
{
    if (udeg(a) < udeg(b)) std::swap(a, b);
    IntPoly g(1), h(1);
    while (true) {
        int delta = udeg(a) - udeg(b);
        UPoly r = prem(a, b);
        if (r.empty()) break;
        if (udeg(r) == 0) return UPoly{IntPoly(1)};
        a = std::move(b);
        b = udiv(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    IntPoly c = ucontent(b, v);
    b = udiv(b, c);
    if (b.back().lead().second < 0)
        for (auto& x : b) x = -x;
    return b;
}

IntPoly gcd_rec(const IntPoly& a, const IntPoly& b, int v)
{
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);
    if (v == 3) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.lead().second.get_mpz_t(), b.lead().second.get_mpz_t());
        return IntPoly(g);
    }
    UPoly A = a.coeffs_in(v), B = b.coeffs_in(v);
    if (A.size() == 1 && B.size() == 1) return gcd_rec(a, b, v + 1);
    if (A.size() == 1) return gcd_rec(a, ucontent(B, v), v + 1);
    if (B.size() == 1) return gcd_rec(ucontent(A, v), b, v + 1);
    IntPoly ca = ucontent(A, v), cb = ucontent(B, v);
    IntPoly c = gcd_rec(ca, cb, v + 1);
    UPoly g = subresultant_gcd(udiv(A, ca), udiv(B, cb), v);
    return positive_lead(IntPoly::from_coeffs(uscale(g, c), v));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);
    Exp ma = a.min_exponents(), mb = b.min_exponents();
    Exp m = exp_min(ma, mb);
    mpz_class ci = a.content(), cj = b.content(), c;
    mpz_gcd(c.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
    if (a.is_monomial() || b.is_monomial()) return IntPoly::monomial(m, c);
    IntPoly a1 = a.div_monomial(ma), b1 = b.div_monomial(mb);
    a1.div_int(ci);
    b1.div_int(cj);
    if (a1.is_constant() || b1.is_constant()) return IntPoly::monomial(m, c);
    IntPoly g;
    if (positive_lead(a1) == positive_lead(b1))
        g = positive_lead(a1);
    else
        g = gcd_rec(a1, b1, 0);
    return g.mul_monomial(m).mul_int(c);
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos)
{
}

Scalar::Scalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

Scalar Scalar::monomial(const Exp& e, long c)
{
    Exp pos{std::max(e[0], 0), std::max(e[1], 0), std::max(e[2], 0)};
    Exp neg{std::max(-e[0], 0), std::max(-e[1], 0), std::max(-e[2], 0)};
    if (c == 0) return {};
    IntPoly num = IntPoly::monomial(pos, mpz_class(c));
    IntPoly den = IntPoly::monomial(neg);
    return {std::move(num), std::move(den), Raw{}};
}

void Scalar::canonicalize()
{
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    Exp m = exp_min(num_.min_exponents(), den_.min_exponents());
    if (m != Exp{0, 0, 0}) {
        num_ = num_.div_monomial(m);
        den_ = den_.div_monomial(m);
    }
    if (!den_.is_monomial()) {
        IntPoly g = gcd(num_, den_);
        if (!(g.is_constant() && g == IntPoly(1))) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    } else {
        mpz_class a = num_.content(), g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), den_.lead().second.get_mpz_t());
        if (g != 1) {
            num_.div_int(g);
            den_.div_int(g);
        }
    }
    if (den_.lead().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::canonical() const { return {num_, den_}; }

bool Scalar::is_one() const { return num_ == den_; }

bool Scalar::is_laurent() const { return den_.is_monomial() && den_.lead().second == 1; }

Scalar Scalar::operator-() const { return {-num_, den_, Raw{}}; }

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero())
            den_ = IntPoly(1);
        else if (!den_.is_constant())
            canonicalize();
        return *this;
    }
    IntPoly g = gcd(den_, o.den_);
    IntPoly a = exact_div(o.den_, g), b = exact_div(den_, g);
    num_ = num_ * a + o.num_ * b;
    den_ = den_ * a;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_zero() || o.is_zero()) return *this = Scalar();
    IntPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    auto reduce = [](const IntPoly& p, const IntPoly& g) { return g == IntPoly(1) ? p : exact_div(p, g); };
    num_ = reduce(num_, g1) * reduce(o.num_, g2);
    den_ = reduce(den_, g2) * reduce(o.den_, g1);
    if (den_.lead().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar r(den_, num_, Raw{});
    if (r.den_.lead().second < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Scalar Scalar::pow(int k) const
{
    if (k < 0) return inv().pow(-k);
    Scalar r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

bool Scalar::operator<(const Scalar& o) const
{
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::string Scalar::str() const
{
    if (is_laurent()) {
        const Exp& e = den_.lead().first;
        std::vector<IntPoly::Term> ts;
        for (const auto& t : num_.terms()) ts.push_back({exp_sub(t.first, e), t.second});
        // display order: q first, then q1, then q0
        std::stable_sort(ts.begin(), ts.end(), [](const IntPoly::Term& a, const IntPoly::Term& b) {
            return std::tie(a.first[0], a.first[2], a.first[1]) > std::tie(b.first[0], b.first[2], b.first[1]);
        });
        std::vector<std::string> parts;
        for (const auto& t : ts) parts.push_back(monomial_str(t.first, t.second));
        return join_terms(parts);
    }
    std::string n = num_.str(), d = den_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar parse_all()
    {
        Scalar x = expr();
        skip();
        if (i_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
        return x;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Scalar expr()
    {
        Scalar x = term();
        while (true) {
            if (eat('+'))
                x += term();
            else if (eat('-'))
                x -= term();
            else
                return x;
        }
    }
    Scalar term()
    {
        Scalar x = unary();
        while (true) {
            if (eat('*')) {
                x *= unary();
            } else if (eat('/')) {
                std::size_t at = i_;
                Scalar y = unary();
                if (y.is_zero()) throw ParseError("division by zero", at);
                x /= y;
            } else {
                return x;
            }
        }
    }
    Scalar unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    long integer(bool allow_sign)
    {
        skip();
        std::size_t start = i_;
        bool neg = false;
        if (allow_sign && i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
            neg = s_[i_] == '-';
            ++i_;
        }
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (digits == i_) throw ParseError("expected integer", start);
        long v = std::stol(std::string(s_.substr(digits, i_ - digits)));
        return neg ? -v : v;
    }
    Scalar power()
    {
        Scalar x = atom();
        if (eat('^')) {
            std::size_t at = i_;
            long k = integer(true);
            if (k < 0 && x.is_zero()) throw ParseError("negative power of zero", at);
            x = x.pow(static_cast<int>(k));
        }
        return x;
    }
    Scalar atom()
    {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Scalar x = expr();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            mpz_class v(std::string(s_.substr(start, i_ - start)));
            return {IntPoly(v), IntPoly(1)};
        }
        if (c == 'q') {
            ++i_;
            if (i_ < s_.size() && s_[i_] == '0') {
                ++i_;
                return Scalar::q0();
            }
            if (i_ < s_.size() && s_[i_] == '1') {
                ++i_;
                return Scalar::q1();
            }
            return Scalar::q();
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
    }
};

IntPoly substitute(const IntPoly& p, const Specialization& s)
{
    std::vector<IntPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Exp e = t.first;
        auto apply = [&](int v, Target tg) {
            int k = e[v];
            if (tg == Target::Keep) return;
            e[v] = 0;
            if (tg == Target::Q) e[0] += k;
            if (tg == Target::Q1) e[2] += k;
        };
        apply(1, s.q0);
        apply(2, s.q1);
        out.push_back({e, t.second});
    }
    return IntPoly::from_terms(std::move(out));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

Specialization Specialization::by_name(std::string_view name)
{
    if (name == "generic") return generic();
    if (name == "b2" || name == "q0=q1") return b2();
    if (name == "b1" || name == "q0=q1=q") return b1();
    if (name == "d1" || name == "q0=q1=1") return d1();
    throw std::invalid_argument("unknown specialization '" + std::string(name) + "'");
}

std::string Specialization::name() const
{
    if (identity()) return "generic";
    if (q0 == Target::Q1 && q1 == Target::Keep) return "b2";
    if (q0 == Target::Q && q1 == Target::Q) return "b1";
    if (q0 == Target::One && q1 == Target::One) return "d1";
    auto t = [](Target x) {
        switch (x) {
        case Target::Keep: return std::string("keep");
        case Target::Q: return std::string("q");
        case Target::One: return std::string("1");
        case Target::Q1: return std::string("q1");
        }
        return std::string();
    };
    return "q0->" + t(q0) + ",q1->" + t(q1);
}

Scalar specialize(const Scalar& x, const Specialization& s)
{
    if (s.q1 == Target::Q1) throw std::invalid_argument("q1 cannot map to itself by alias");
    if (s.identity()) return x;
    IntPoly den = substitute(x.den(), s);
    if (den.is_zero()) throw DivisionByZero("denominator vanishes under specialization " + s.name());
    return {substitute(x.num(), s), den};
}

}  // namespace qsp
