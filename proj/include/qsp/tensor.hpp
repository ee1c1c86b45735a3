#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qsp/hecke.hpp"

namespace qsp {

enum class Variant { jj, ji, ij, ii };

std::string variant_name(Variant v);
Variant variant_by_name(const std::string& s);

struct RepParams {
    int r = 1;
    int d = 1;
    Variant variant = Variant::jj;
    Specialization spec;

    int n() const { return 2 * r + 2; }
    WeylParams weyl() const { return {d, n()}; }
    // Residue classes excluded from the variant subspace.
    bool residue_allowed(int m) const;
    bool index_allowed(const std::vector<int>& f) const;
    // Preconditions of the duality theorems (r >= d, plus r, d >= 2 for ii).
    void validate_duality() const;
};

int mod(int a, int n);
// f = fbar + c n with -r <= fbar <= r+1
std::pair<int, int> residue_split(int f, int r);

// Finite linear combination of basis vectors M_f.
class TensorVec {
public:
    using Index = std::vector<int>;
    using Map = std::map<Index, Scalar>;

    TensorVec() = default;
    static TensorVec basis(const Index& f, const Scalar& c = Scalar(1));

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Index& f) const;
    void add_term(const Index& f, const Scalar& c);

    TensorVec& operator+=(const TensorVec& o);
    TensorVec& operator-=(const TensorVec& o);
    TensorVec& operator*=(const Scalar& c);
    friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
    friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
    friend TensorVec operator*(const Scalar& c, TensorVec a) { return a *= c; }
    friend TensorVec operator*(TensorVec a, const Scalar& c) { return a *= c; }

    bool operator==(const TensorVec& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorVec& o) const { return !(*this == o); }

    // "q1*v[1] + v[-1]" for one factor, "c*M[f1,f2]" otherwise; indices in descending order.
    std::string str() const;

private:
    Map terms_;
};

TensorVec specialize(const TensorVec& v, const Specialization& s);

// Right action of the Hecke algebra on the tensor space.
class HeckeAction {
public:
    explicit HeckeAction(const RepParams& p);

    const RepParams& params() const { return p_; }
    const Hecke& hecke() const { return H_; }

    TensorVec act_X(const TensorVec& v, int a, int power = 1) const;
    TensorVec act_Ti(const TensorVec& v, int i) const;  // 1 <= i <= d-1
    TensorVec act_T0(const TensorVec& v) const;
    TensorVec act_Td(const TensorVec& v) const;          // composite through X_d
    TensorVec act_gen(const TensorVec& v, int i) const;  // 0 <= i <= d
    TensorVec act_gen_inverse(const TensorVec& v, int i) const;
    TensorVec act_word(const TensorVec& v, const Word& w) const;
    TensorVec act(const TensorVec& v, const HeckeElt& h) const;

    // Single-factor T_0 table.
    TensorVec T0_single(int f) const;

private:
    RepParams p_;
    Hecke H_;
    Scalar A_, B_, C_;  // q0^-1 q1, q1 - q0^-1, q0^-1 q1 - 1
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, TensorVec::Index>, TensorVec> cache_;
    TensorVec basis_gen(const TensorVec::Index& f, int i) const;
    TensorVec Ti_basis(const TensorVec::Index& f, int i) const;
    TensorVec Td_basis(const TensorVec::Index& f) const;
};

}  // namespace qsp
