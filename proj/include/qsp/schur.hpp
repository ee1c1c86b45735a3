#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qsp/coideal.hpp"

namespace qsp {

// Weak composition (lambda_0, ..., lambda_{r+1}) of d.
using Composition = std::vector<int>;

std::string comp_str(const Composition& c);
Composition parse_comp(const std::string& s);

// All compositions of d into r+2 parts, filtered by variant; refuses r < d.
std::vector<Composition> enumerate_compositions(int r, int d, Variant v = Variant::jj);
Composition omega(int r, int d);
std::optional<Composition> tilde_e(const Composition& c, int i);
std::optional<Composition> tilde_f(const Composition& c, int i);
// Generators of W_lambda: {0..d} minus the cut points lambda_0, lambda_{0,1}, ..., lambda_{0,r}.
std::vector<int> parabolic_gens(const Composition& c, int d);
// (0^{lambda_0}, 1^{lambda_1}, ..., (r+1)^{lambda_{r+1}})
std::vector<int> M_index(const Composition& c);

class TriangularityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Formal sum of x_lambda * h_lambda.
struct TElt {
    std::map<Composition, HeckeElt> parts;
    bool operator==(const TElt& o) const;
    std::string str() const;
};

// Endomorphism stored through its values on the generators M_lambda.
class SchurElt {
public:
    std::map<Composition, TensorVec> images;

    TensorVec image(const Composition& c) const;
    bool is_zero() const;
    SchurElt& operator+=(const SchurElt& o);
    SchurElt& operator-=(const SchurElt& o);
    SchurElt& operator*=(const Scalar& c);
    friend SchurElt operator+(SchurElt a, const SchurElt& b) { return a += b; }
    friend SchurElt operator-(SchurElt a, const SchurElt& b) { return a -= b; }
    friend SchurElt operator*(const Scalar& c, SchurElt a) { return a *= c; }
    friend SchurElt operator*(SchurElt a, const Scalar& c) { return a *= c; }
    bool operator==(const SchurElt& o) const;
    bool operator!=(const SchurElt& o) const { return !(*this == o); }
};

using PhiKey = std::tuple<Composition, Composition, WeylElt>;  // (lambda, mu, g)
using PhiExpansion = std::map<PhiKey, Scalar>;

std::string phi_name(const PhiKey& k);

// Multi-point interpolation of phi^e_{lambda,lambda} in the diagonal Cartan generators.
struct Interpolation {
    Composition target;
    struct Factor {
        CoidealGen gen;
        Scalar shift;  // eigenvalue being killed
        Scalar denom;  // target eigenvalue minus shift
    };
    std::vector<Factor> factors;
};

class SchurContext {
public:
    explicit SchurContext(const RepParams& p);

    const RepParams& params() const { return p_; }
    const std::vector<Composition>& compositions() const { return comps_; }
    const HeckeAction& hecke() const { return H_; }
    const CoidealAction& coideal() const { return U_; }
    bool contains(const Composition& c) const;

    const std::vector<WeylElt>& W_lambda(const Composition& c) const;
    HeckeElt x_lambda(const Composition& c) const;
    TensorVec M(const Composition& c) const { return TensorVec::basis(M_index(c)); }

    // Orbit type lambda(f) and a reduced word of w(f), with M_{lambda} . w(f) = f.
    std::pair<Composition, Word> orbit_decomposition(const std::vector<int>& f) const;
    Composition orbit_type(const std::vector<int>& f) const;

    TensorVec kappa(const TElt& t) const;
    TElt kappa_inv(const TensorVec& v) const;

    SchurElt phi(const Composition& lam, const Composition& mu, const WeylElt& g) const;
    bool in_D(const Composition& lam, const Composition& mu, const WeylElt& g) const;
    SchurElt identity() const;
    SchurElt idempotent(const Composition& lam) const { return phi(lam, lam, WeylElt::identity(p_.weyl())); }
    SchurElt psi(const CoidealGen& g) const;

    TensorVec apply(const SchurElt& s, const TensorVec& v) const;
    SchurElt compose(const SchurElt& a, const SchurElt& b) const;

    // Throws std::logic_error when the element is not H-linear on the generators.
    PhiExpansion phi_expand(const SchurElt& s) const;
    SchurElt from_expansion(const PhiExpansion& e) const;

    // Keep the part of v in the summand of orbit type lambda.
    TensorVec project(const Composition& lam, const TensorVec& v) const;

    // Cartan generators used for interpolation: h_a for jj, k_i otherwise.
    std::vector<CoidealGen> cartan_generators() const;
    // Eigenvalue of a diagonal generator on M_mu; throws if M_mu is not an eigenvector.
    Scalar eigenvalue(const CoidealGen& g, const Composition& mu) const;
    Interpolation interpolation(const Composition& lam) const;
    TensorVec apply_interpolation(const Interpolation& ip, const TensorVec& v) const;
    SchurElt eval_interpolation(const Interpolation& ip) const;

private:
    RepParams p_;
    HeckeAction H_;
    CoidealAction U_;
    std::vector<Composition> comps_;
    mutable std::mutex mu_;
    mutable std::map<Composition, std::vector<WeylElt>> W_cache_;
    mutable std::map<std::vector<int>, std::pair<Composition, Word>> orbit_cache_;
    mutable std::map<std::vector<int>, TensorVec> image_cache_;
    TensorVec leading_image(const std::vector<int>& f) const;
};

}  // namespace qsp
