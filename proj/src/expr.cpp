#include "qsp/expr.hpp"

#include <cctype>

namespace qsp {

std::string kind_name(ExprKind k) {
    switch (k) {
        case ExprKind::scalar: return "scalar";
        case ExprKind::hecke: return "hecke";
        case ExprKind::tensor: return "tensor";
        case ExprKind::schur: return "schur";
    }
    return "?";
}

ExprKind kind_by_name(const std::string& s) {
    if (s == "scalar") return ExprKind::scalar;
    if (s == "hecke") return ExprKind::hecke;
    if (s == "tensor") return ExprKind::tensor;
    if (s == "schur") return ExprKind::schur;
    throw std::invalid_argument("unknown kind '" + s + "' (expected scalar, hecke, tensor or schur)");
}

const Hecke& ExprContext::hecke() {
    if (!H_) H_ = std::make_unique<Hecke>(HeckeParams::make(p_.weyl(), p_.spec));
    return *H_;
}

const HeckeAction& ExprContext::action() {
    if (!A_) A_ = std::make_unique<HeckeAction>(p_);
    return *A_;
}

const CoidealAction& ExprContext::coideal() {
    if (!U_) U_ = std::make_unique<CoidealAction>(p_);
    return *U_;
}

const SchurContext& ExprContext::schur() {
    if (!S_) S_ = std::make_unique<SchurContext>(p_);
    return *S_;
}

namespace {

const char* type_name(const ExprValue& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "hecke element";
        case 2: return "tensor vector";
        case 3: return "Schur element";
        default: return "coideal generator";
    }
}

class Parser {
public:
    Parser(const std::string& s, ExprContext& ctx) : s_(s), ctx_(ctx) {}

    ExprValue parse() {
        ExprValue v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    ExprContext& ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void type_fail(std::size_t at, const std::string& op, const ExprValue& a, const ExprValue& b) const {
        throw ParseError(std::string("cannot apply '") + op + "' to " + type_name(a) + " and " + type_name(b), at);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string t = s_.substr(start, pos_ - start);
        if (t.empty() || t == "-" || t == "+") {
            pos_ = start;
            fail("expected an integer");
        }
        return std::stol(t);
    }
    // Raw text up to the matching close bracket.
    std::string bracketed(char open, char close) {
        expect(open);
        std::size_t start = pos_;
        int depth = 1;
        while (pos_ < s_.size()) {
            if (s_[pos_] == open) ++depth;
            if (s_[pos_] == close && --depth == 0) break;
            ++pos_;
        }
        if (pos_ >= s_.size()) fail(std::string("missing '") + close + "'");
        std::string t = s_.substr(start, pos_ - start);
        ++pos_;
        return t;
    }
    std::vector<int> int_list(const std::string& t, std::size_t at) {
        std::vector<int> out;
        std::size_t i = 0;
        while (i < t.size()) {
            while (i < t.size() && (t[i] == ' ' || t[i] == ',')) ++i;
            if (i >= t.size()) break;
            std::size_t j = i;
            if (t[j] == '-' || t[j] == '+') ++j;
            while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
            if (j == i || !std::isdigit(static_cast<unsigned char>(t[j - 1]))) throw ParseError("expected an integer", at + i);
            out.push_back(std::stoi(t.substr(i, j - i)));
            i = j;
            while (i < t.size() && t[i] == ' ') ++i;
            if (i < t.size() && t[i] != ',') throw ParseError("expected ','", at + i);
        }
        return out;
    }

    // A scalar next to a Hecke or Schur element stands for a multiple of the unit.
    ExprValue promote(const ExprValue& v, const ExprValue& other) {
        if (v.index() != 0) return v;
        if (other.index() == 1) return ctx_.hecke().one() * std::get<0>(v);
        if (other.index() == 3) return ctx_.schur().identity() * std::get<0>(v);
        return v;
    }

    ExprValue add(std::size_t at, char op, ExprValue a0, const ExprValue& b0) {
        Scalar sign = op == '+' ? Scalar(1) : Scalar(-1);
        ExprValue a = promote(a0, b0), b = promote(b0, a0);
        if (a.index() != b.index() || a.index() == 4) type_fail(at, std::string(1, op), a, b);
        switch (a.index()) {
            case 0: return std::get<0>(a) + std::get<0>(b) * sign;
            case 1: return std::get<1>(a) + std::get<1>(b) * sign;
            case 2: return std::get<2>(a) + std::get<2>(b) * sign;
            default: return std::get<3>(a) + std::get<3>(b) * sign;
        }
    }

    ExprValue scale(const Scalar& c, ExprValue v, std::size_t at) {
        switch (v.index()) {
            case 0: return std::get<0>(v) * c;
            case 1: return std::get<1>(v) * c;
            case 2: return std::get<2>(v) * c;
            case 3: return std::get<3>(v) * c;
            default: throw ParseError("cannot scale a coideal generator; apply it to a vector first", at);
        }
    }

    ExprValue mul(std::size_t at, const ExprValue& a, const ExprValue& b) {
        if (a.index() == 0) return scale(std::get<0>(a), b, at);
        if (b.index() == 0) return scale(std::get<0>(b), a, at);
        if (a.index() == 1 && b.index() == 1) return ctx_.hecke().mul(std::get<1>(a), std::get<1>(b));
        if (a.index() == 2 && b.index() == 1) return ctx_.action().act(std::get<2>(a), std::get<1>(b));
        if (a.index() == 3 && b.index() == 3) return ctx_.schur().compose(std::get<3>(a), std::get<3>(b));
        type_fail(at, "*", a, b);
    }

    ExprValue expr() {
        ExprValue v = term();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('+'))
                v = add(at, '+', v, term());
            else if (eat('-'))
                v = add(at, '-', v, term());
            else
                return v;
        }
    }

    ExprValue term() {
        ExprValue v = unary();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('*')) {
                v = mul(at, v, unary());
            } else if (eat('/')) {
                ExprValue d = unary();
                if (d.index() != 0) type_fail(at, "/", v, d);
                if (std::get<0>(d).is_zero()) throw ParseError("division by zero", at);
                v = scale(std::get<0>(d).inv(), v, at);
            } else {
                return v;
            }
        }
    }

    ExprValue unary() {
        skip();
        std::size_t at = pos_;
        if (eat('-')) return scale(Scalar(-1), unary(), at);
        return app();
    }

    ExprValue app() {
        ExprValue a = power();
        skip();
        std::size_t at = pos_;
        if (!eat('.')) return a;
        ExprValue b = app();
        if (b.index() != 2) type_fail(at, ".", a, b);
        const TensorVec& v = std::get<2>(b);
        if (a.index() == 4) return ctx_.coideal().act(v, std::get<4>(a));
        if (a.index() == 3) return ctx_.schur().apply(std::get<3>(a), v);
        type_fail(at, ".", a, b);
    }

    ExprValue power() {
        ExprValue a = atom();
        skip();
        std::size_t at = pos_;
        if (!eat('^')) return a;
        long k = integer();
        switch (a.index()) {
            case 0:
                if (std::get<0>(a).is_zero() && k < 0) throw ParseError("zero to a negative power", at);
                return std::get<0>(a).pow((int)k);
            case 1: {
                const HeckeElt& h = std::get<1>(a);
                if (k >= 0) return ctx_.hecke().pow(h, (int)k);
                HeckeElt inv = invert(h, at);
                return ctx_.hecke().pow(inv, (int)-k);
            }
            case 4: {
                CoidealGen g = std::get<4>(a);
                if (g.kind != CoidealGen::h && g.kind != CoidealGen::k)
                    throw ParseError("only h_a and k_i take powers", at);
                g.power *= (int)k;
                return g;
            }
            default: throw ParseError(std::string("cannot raise a ") + type_name(a) + " to a power", at);
        }
    }

    // Inverses of T_s and X_a only.
    HeckeElt invert(const HeckeElt& h, std::size_t at) {
        const Hecke& H = ctx_.hecke();
        for (int i = 0; i <= H.d(); ++i)
            if (h == H.gen(i)) return H.gen_inverse(i);
        for (int a = 1; a <= H.d(); ++a)
            if (h == H.X(a)) return H.X_inv(a);
        throw ParseError("negative powers are supported for T_s and X_a only", at);
    }

    bool word(const char* w) {
        skip();
        std::size_t n = std::char_traits<char>::length(w);
        if (s_.compare(pos_, n, w) != 0) return false;
        if (pos_ + n < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_ + n])) || s_[pos_ + n] == '_'))
            return false;
        pos_ += n;
        return true;
    }

    ExprValue atom() {
        skip();
        std::size_t at = pos_;
        if (at >= s_.size()) fail("unexpected end of input");
        char c = s_[at];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (s_.compare(at, 2, "1_") == 0) {
                pos_ += 2;
                std::string t = "(" + bracketed('(', ')') + ")";
                try {
                    return ctx_.schur().idempotent(parse_comp(t));
                } catch (const std::logic_error& e) {
                    throw ParseError(e.what(), at);
                }
            }
            return Scalar(integer());
        }
        if (eat('(')) {
            ExprValue v = expr();
            expect(')');
            return v;
        }
        if (word("q0")) return Scalar::q0();
        if (word("q1")) return Scalar::q1();
        if (word("q")) return Scalar::q();
        if (s_.compare(at, 2, "T[") == 0) {
            ++pos_;
            std::size_t inner = pos_ + 1;
            std::string t = bracketed('[', ']');
            try {
                const Hecke& H = ctx_.hecke();
                if (!t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit((unsigned char)ch); })) {
                    int i = std::stoi(t);
                    if (i > H.d()) throw ParseError("generator index out of range", inner);
                    return H.gen(i);
                }
                return H.T(WeylElt::parse(t, H.weyl()));
            } catch (const std::logic_error& e) {
                throw ParseError(e.what(), inner);
            }
        }
        if (s_.compare(at, 2, "X[") == 0) {
            ++pos_;
            std::size_t inner = pos_ + 1;
            auto l = int_list(bracketed('[', ']'), inner);
            if (l.size() != 1 || l[0] < 1 || l[0] > ctx_.params().d) throw ParseError("X[a] needs 1 <= a <= d", inner);
            return ctx_.hecke().X(l[0]);
        }
        if (s_.compare(at, 2, "v[") == 0 || s_.compare(at, 2, "M[") == 0) {
            ++pos_;
            std::size_t inner = pos_ + 1;
            auto f = int_list(bracketed('[', ']'), inner);
            if ((int)f.size() != ctx_.params().d)
                throw ParseError("index needs " + std::to_string(ctx_.params().d) + " entries", inner);
            if (!ctx_.params().index_allowed(f)) throw ParseError("index outside the variant module", inner);
            return TensorVec::basis(f);
        }
        if (s_.compare(at, 4, "phi[") == 0) {
            pos_ += 3;
            std::size_t inner = pos_ + 1;
            std::string w = bracketed('[', ']');
            std::size_t args_at = pos_;
            std::string args = bracketed('(', ')');
            auto cut = args.find(")");
            if (cut == std::string::npos) throw ParseError("expected phi[g](lambda,mu)", args_at);
            std::string a1 = args.substr(0, cut + 1), rest = args.substr(cut + 1);
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw ParseError("expected phi[g](lambda,mu)", args_at);
            rest = rest.substr(comma + 1);
            try {
                const SchurContext& S = ctx_.schur();
                WeylElt g = WeylElt::parse(w, S.params().weyl());
                return S.phi(parse_comp(a1), parse_comp(rest), g);
            } catch (const std::logic_error& e) {
                throw ParseError(e.what(), inner);
            }
        }
        if (s_.compare(at, 4, "Psi(") == 0) {
            pos_ += 3;
            std::size_t inner = pos_ + 1;
            std::string t = bracketed('(', ')');
            try {
                return ctx_.schur().psi(CoidealGen::parse(t, ctx_.params().r));
            } catch (const std::logic_error& e) {
                throw ParseError(e.what(), inner);
            }
        }
        if (std::string("efhkt").find(c) != std::string::npos && s_.compare(at + 1, 1, "_") == 0) {
            std::size_t j = at + 2;
            while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
            std::string name = s_.substr(at, j - at);
            CoidealGen g;
            try {
                g = CoidealGen::parse(name, ctx_.params().r);
            } catch (const std::logic_error& e) {
                throw ParseError(e.what(), at);
            }
            if (!ctx_.coideal().valid(g))
                throw ParseError(name + " is not a generator of the " + variant_name(ctx_.params().variant) + " algebra", at);
            pos_ = j;
            return g;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

ExprValue evaluate(const std::string& text, ExprContext& ctx) {
    try {
        return Parser(text, ctx).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const SupportError& e) {
        throw EvalError(e.what());
    } catch (const std::logic_error& e) {
        throw EvalError(e.what());
    }
}

std::string dump_element(ExprKind kind, const std::string& text, ExprContext& ctx) {
    ExprValue v = evaluate(text, ctx);
    const Specialization& sp = ctx.params().spec;
    auto mismatch = [&] {
        throw EvalError(std::string("expression is a ") + type_name(v) + ", not a " + kind_name(kind) + " element");
    };
    switch (kind) {
        case ExprKind::scalar:
            if (v.index() != 0) mismatch();
            return specialize(std::get<0>(v), sp).str();
        case ExprKind::hecke:
            if (v.index() == 0) return HeckeElt::basis(WeylElt::identity(ctx.params().weyl()), specialize(std::get<0>(v), sp)).str();
            if (v.index() != 1) mismatch();
            return specialize(std::get<1>(v), sp).str();
        case ExprKind::tensor:
            if (v.index() != 2) mismatch();
            return specialize(std::get<2>(v), sp).str();
        case ExprKind::schur: {
            if (v.index() != 3) mismatch();
            std::vector<std::pair<std::string, Scalar>> items;
            for (auto& [k, c] : ctx.schur().phi_expand(std::get<3>(v))) items.push_back({phi_name(k), specialize(c, sp)});
            return linear_combination_str(items);
        }
    }
    return "";
}

}  // namespace qsp
