#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "qsp/schur.hpp"

namespace qsp {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExprKind { scalar, hecke, tensor, schur };
std::string kind_name(ExprKind k);
ExprKind kind_by_name(const std::string& s);

using ExprValue = std::variant<Scalar, HeckeElt, TensorVec, SchurElt, CoidealGen>;

// Evaluation context; the Hecke, tensor and Schur layers are built on first use.
class ExprContext {
public:
    explicit ExprContext(const RepParams& p) : p_(p) {}
    const RepParams& params() const { return p_; }
    const Hecke& hecke();
    const HeckeAction& action();
    const CoidealAction& coideal();
    const SchurContext& schur();

private:
    RepParams p_;
    std::unique_ptr<Hecke> H_;
    std::unique_ptr<HeckeAction> A_;
    std::unique_ptr<CoidealAction> U_;
    std::unique_ptr<SchurContext> S_;
};

// Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | app
//   app   := power ('.' app)?            coideal generator or Schur element applied to a vector
//   power := atom ('^' ['-'] int)?
//   atom  := int | q | q0 | q1 | '(' expr ')' | T[s0.s1] | T[i] | X[a] | v[f1,...] | M[f1,...]
//          | phi[g](lambda,mu) | Psi(gen) | 1_(lambda) | e_i | f_i | h_a | k_i | t_0 | t_r
// A vector times a Hecke element is the right action.
ExprValue evaluate(const std::string& text, ExprContext& ctx);

// Evaluate and print the canonical text; throws EvalError when the kind does not match.
std::string dump_element(ExprKind kind, const std::string& text, ExprContext& ctx);

}  // namespace qsp
