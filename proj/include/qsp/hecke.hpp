#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsp/scalar.hpp"
#include "qsp/weyl.hpp"

namespace qsp {

enum class Side { Left, Right };

// Finite linear combination of Coxeter basis elements T_w.
class HeckeElt {
public:
    using Map = std::map<WeylElt, Scalar>;

    HeckeElt() = default;
    explicit HeckeElt(const WeylParams& p) : p_(p) {}
    static HeckeElt basis(const WeylElt& w, const Scalar& c = Scalar(1));

    const WeylParams& params() const { return p_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const WeylElt& w) const;
    void add_term(const WeylElt& w, const Scalar& c);

    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt& operator*=(const Scalar& c);
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(const Scalar& c, HeckeElt a) { return a *= c; }
    friend HeckeElt operator*(HeckeElt a, const Scalar& c) { return a *= c; }
    HeckeElt operator-() const { return *this * Scalar(-1); }

    bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

    // e.g. "q0^-1*q1*T[s0.s1] + T[]", longest basis elements first.
    std::string str() const;

private:
    WeylParams p_;
    Map terms_;
};

HeckeElt specialize(const HeckeElt& h, const Specialization& s);

// "c1*name1 + c2*name2 ..." with coefficient 1 elided and compound coefficients parenthesized.
std::string linear_combination_str(const std::vector<std::pair<std::string, Scalar>>& items);

struct HeckeParams {
    WeylParams w;
    Specialization spec;
    Scalar q, q0, q1;
    // Quadratic (T_s - a_s)(T_s - b_s) = 0, stored as a_s + b_s and -a_s b_s.
    std::vector<Scalar> root_a, root_b, root_sum, root_negprod;
    // Weights q_s of T_X sums, and the eigenvalues p_s of x_lambda T_s.
    std::vector<Scalar> weight, eigen;

    static HeckeParams make(const WeylParams& w, const Specialization& s = Specialization::generic());
};

// Three-parameter affine Hecke algebra of type C_d in the Coxeter basis.
class Hecke {
public:
    explicit Hecke(HeckeParams p);

    const HeckeParams& params() const { return p_; }
    const WeylParams& weyl() const { return p_.w; }
    int d() const { return p_.w.d; }

    HeckeElt one() const { return HeckeElt::basis(WeylElt::identity(p_.w)); }
    HeckeElt zero() const { return HeckeElt(p_.w); }
    HeckeElt T(const WeylElt& w) const { return HeckeElt::basis(w); }
    HeckeElt gen(int i) const { return T(WeylElt::generator(i, p_.w)); }
    HeckeElt gen_inverse(int i) const;
    // Product T_{i_1} ... T_{i_l} of an arbitrary word.
    HeckeElt T_word(const Word& w) const;

    HeckeElt mul_gen(const HeckeElt& h, int i, Side side = Side::Right) const;
    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
    HeckeElt pow(const HeckeElt& h, int k) const;

    const HeckeElt& X(int a) const;
    const HeckeElt& X_inv(int a) const;
    // q0^{-1} X_d T_{d-1}^{-1} ... T_0^{-1} ... T_{d-1}^{-1}
    HeckeElt Td_from_X() const;
    // q0^{-1} T_{d-1} ... T_1 (X_1 T_0^{-1}) T_1^{-1} ... T_{d-1}^{-1}
    HeckeElt Td_from_X1() const;

    Scalar q_w(const WeylElt& w) const;
    HeckeElt T_X(const std::vector<WeylElt>& xs) const;
    HeckeElt x_lambda(const std::vector<int>& gens) const;

    const Word& word(const WeylElt& w) const;

    // Replace the cached Bernstein elements (used when loading from a cache file).
    void set_X(std::vector<HeckeElt> X, std::vector<HeckeElt> Xinv);
    const std::vector<HeckeElt>& X_all() const { return X_; }
    const std::vector<HeckeElt>& X_inv_all() const { return Xinv_; }

private:
    HeckeParams p_;
    std::vector<HeckeElt> X_, Xinv_;  // index a-1
    mutable std::mutex word_mu_;
    mutable std::unordered_map<WeylElt, Word, WeylHash> words_;
    void build_X();
};

}  // namespace qsp
