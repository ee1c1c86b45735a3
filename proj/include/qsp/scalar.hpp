#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsp {

// Exponents of (q, q0, q1).
using Exp = std::array<int, 3>;

class IntPoly {
public:
    using Term = std::pair<Exp, mpz_class>;

    IntPoly() = default;
    explicit IntPoly(long c);
    explicit IntPoly(const mpz_class& c);
    static IntPoly monomial(const Exp& e, const mpz_class& c = 1);
    static IntPoly var(int v);

    // Terms are kept sorted by descending lex order (q > q0 > q1), no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& lead() const { return terms_.front(); }
    std::size_t size() const { return terms_.size(); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& mul_int(const mpz_class& c);
    IntPoly& div_int(const mpz_class& c);  // exact
    IntPoly mul_monomial(const Exp& e) const;
    IntPoly div_monomial(const Exp& e) const;  // exact
    IntPoly pow(unsigned k) const;

    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }
    bool operator<(const IntPoly& o) const;

    int degree(int v) const;
    Exp min_exponents() const;
    mpz_class content() const;  // positive gcd of coefficients, 0 for zero

    // Coefficients with respect to variable v; index k holds the part of x_v^k.
    std::vector<IntPoly> coeffs_in(int v) const;
    static IntPoly from_coeffs(const std::vector<IntPoly>& cs, int v);

    std::string str() const;

    static IntPoly from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
    void normalize();
};

// Exact quotient; throws std::domain_error if b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);
// Greatest common divisor with non-negative leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Element of Q(q, q0, q1) in canonical reduced form.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(IntPoly num, IntPoly den);

    static Scalar q() { return monomial({1, 0, 0}); }
    static Scalar q0() { return monomial({0, 1, 0}); }
    static Scalar q1() { return monomial({0, 0, 1}); }
    // Laurent monomial; negative exponents go to the denominator.
    static Scalar monomial(const Exp& e, long c = 1);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inv() const;
    Scalar pow(int k) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    std::string str() const;
    static Scalar parse(std::string_view text);

    // Re-runs canonicalization; a no-op on values built through the public API.
    Scalar canonical() const;

private:
    IntPoly num_, den_;
    struct Raw {};
    Scalar(IntPoly num, IntPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();
};

// Image of q0 or q1 under a specialization. Q1 is only meaningful for q0.
enum class Target { Keep, Q, One, Q1 };

struct Specialization {
    Target q0 = Target::Keep;
    Target q1 = Target::Keep;
    bool identity() const { return q0 == Target::Keep && q1 == Target::Keep; }

    static Specialization generic() { return {}; }
    static Specialization b2() { return {Target::Q1, Target::Keep}; }
    static Specialization b1() { return {Target::Q, Target::Q}; }
    static Specialization d1() { return {Target::One, Target::One}; }
    static Specialization by_name(std::string_view name);
    std::string name() const;
};

Scalar specialize(const Scalar& x, const Specialization& s);

}  // namespace qsp
