#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsp/tensor.hpp"

namespace qsp {

class SupportError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Generator i of the (relabeled) quantum affine gl acts on one factor by
// E_i v_m = v_{m-step} if m = lo+step, F_i v_m = v_{m+step} if m = lo (mod n),
// K_i = D_lo D_{lo+step}^{-1}.
struct Label {
    int lo = 0;
    int step = 1;
};

struct GlAtom {
    enum Kind { E, F, K, D } kind;
    int index;
    int power = 1;  // K and D only
};

// coef * atoms[0] * atoms[1] * ... ; the last atom acts first.
struct GlTerm {
    Scalar coef;
    std::vector<GlAtom> atoms;
};
using GlOp = std::vector<GlTerm>;

std::string gl_op_str(const GlOp& op);

class GlhatAction {
public:
    explicit GlhatAction(const RepParams& p);

    const RepParams& params() const { return p_; }
    bool has_label(int i) const;
    Label label(int i) const;

    TensorVec E(const TensorVec& v, int i) const;
    TensorVec F(const TensorVec& v, int i) const;
    TensorVec K(const TensorVec& v, int i, int power = 1) const;
    TensorVec D(const TensorVec& v, int a, int power = 1) const;
    TensorVec apply(const TensorVec& v, const GlAtom& a) const;
    TensorVec apply(const TensorVec& v, const GlOp& op) const;

    // exponent of q in K_i v_m
    int K_weight(int m, int i) const;

private:
    RepParams p_;
    Scalar q_;
    std::vector<bool> has_;
    std::vector<Label> labels_;
};

struct CoidealGen {
    enum Kind { e, f, h, k, t0, tr } kind;
    int index = 0;
    int power = 1;  // h and k only

    std::string name() const;
    // "e_1", "f_0", "h_2^-1", "k_0", "t_0", "t_r"
    static CoidealGen parse(const std::string& s, int r);
    bool operator<(const CoidealGen& o) const;
    bool operator==(const CoidealGen& o) const;
};

using CoidealWord = std::vector<CoidealGen>;  // leftmost acts last

struct Relation {
    std::string name;
    // sum of coef * word, expected to vanish
    std::vector<std::pair<Scalar, CoidealWord>> terms;
};

// Swap q0 and q1 in a scalar.
Scalar swap_q0_q1(const Scalar& x);

class CoidealAction {
public:
    explicit CoidealAction(const RepParams& p);

    const RepParams& params() const { return p_; }
    const GlhatAction& glhat() const { return gl_; }

    // Generators of the algebra for the variant, without inverses.
    std::vector<CoidealGen> generators() const;
    bool valid(const CoidealGen& g) const;
    GlOp embedding(const CoidealGen& g) const;

    // Throws SupportError on indices outside the variant subspace.
    TensorVec act(const TensorVec& v, const CoidealGen& g) const;
    TensorVec act_word(const TensorVec& v, const CoidealWord& w) const;
    TensorVec eval(const TensorVec& v, const Relation& rel) const;

    // Defining relations as stated for the variant (ij and ii use the ji list transported
    // along q0 <-> q1, i -> r-i, t_r -> t_0).
    std::vector<Relation> relations() const;

    void check_support(const TensorVec& v) const;

    // Use the ji deformed Serre pair transported literally to e_r, f_r for ij (off by default).
    void set_literal_transport(bool on) { literal_transport_ = on; }

private:
    RepParams p_;
    GlhatAction gl_;
    Scalar q_, q0_, q1_;
    bool literal_transport_ = false;
    mutable std::mutex mu_;
    mutable std::map<std::pair<CoidealGen, TensorVec::Index>, TensorVec> cache_;

    std::vector<Relation> jj_relations() const;
    std::vector<Relation> ji_relations(bool mirror) const;
    std::vector<Relation> ii_relations() const;
};

// The single-factor closed form for the jj algebra, written out case by case.
TensorVec closed_form_jj(const CoidealGen& g, int j, int r, const Scalar& q0, const Scalar& q1, const Scalar& q);

}  // namespace qsp
