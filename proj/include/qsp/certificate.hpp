#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsp/schur.hpp"

namespace qsp {

// Letters: coideal generator names ("e_1", "t_r", ...) and idempotents "1_(0,1,1,0)".
// A word is read as a composition: the rightmost letter acts first.
struct CertTerm {
    Scalar coef;
    std::vector<std::string> word;
};
using CertCombo = std::vector<CertTerm>;

struct CertEntry {
    PhiKey target;
    CertCombo terms;
    bool verified = false;
};

// phi^e_{omega,nu} o phi^e_{nu,omega} = a phi^e_{omega,omega} + b phi^{s_i}_{omega,omega}
struct ProductIdentity {
    int i = 0;
    std::string via;  // "e~_i", "f~ chain", "t_r", ...
    Composition nu;
    Scalar a, b;
};

struct ChainStep {
    std::string move;  // "e~_1", "f~_0", ...
    Composition to;
    Scalar coef;       // Psi(gen) o 1_from = coef * phi^e_{to,from}
    std::string back;  // generator of the inverse move
    Scalar back_coef;  // Psi(back) o 1_to = back_coef * phi^e_{from,to}
};

struct Certificate {
    RepParams params;
    int max_len = 0;
    Composition omega;
    std::map<Composition, Interpolation> idempotents;
    std::map<Composition, std::vector<ChainStep>> chains;  // omega -> lambda
    std::vector<ProductIdentity> products;
    std::vector<CertEntry> entries;

    bool all_verified() const;
    nlohmann::json to_json() const;
};

class ChainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string idem_letter(const Composition& c);
TensorVec eval_letter(const SchurContext& S, const std::map<Composition, Interpolation>& idem, const std::string& letter,
                      const TensorVec& v);
TensorVec eval_combo(const SchurContext& S, const std::map<Composition, Interpolation>& idem, const CertCombo& c,
                     const TensorVec& v);
SchurElt eval_combo(const SchurContext& S, const std::map<Composition, Interpolation>& idem, const CertCombo& c);

CertCombo combo_mul(const CertCombo& a, const CertCombo& b);

// Runs the constructive generation argument and verifies every word by evaluation.
Certificate generate_schur_basis_from_psi(const SchurContext& S, int max_len);

}  // namespace qsp
