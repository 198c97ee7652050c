#ifndef STONE_EXPR_HPP
#define STONE_EXPR_HPP

#include <map>
#include <memory>
#include <string>

#include "stone/algebra.hpp"

namespace stone {

/// Abstract syntax for the algebra expression language:
///   expr := prod ; prod := tens ('*' tens)* ; tens := term ('(x)' term)* ;
///   term := 'GF(' int ')' '[' ident ']' '/' '(' poly ')'
///         | 'Fn(' int ',' int ')' | '(' expr ')' ;
///   poly := monomial ('+' monomial)* ;
///   monomial := coeff? ident ('^' int)? | coeff ;
/// '*' is product, '(x)' is tensor; both left-associative, '(x)' binds tighter.
struct AlgebraExpr {
  enum class Kind { UnivariateQuotient, FunctionAlg, Product, Tensor };

  Kind kind;
  unsigned p = 0;          // leaves only
  std::string var;         // UnivariateQuotient
  Vec polyCoeffs;          // UnivariateQuotient, ascending degree
  std::size_t setSize = 0; // FunctionAlg
  std::shared_ptr<const AlgebraExpr> lhs, rhs;  // Product / Tensor
};

using AlgebraExprPtr = std::shared_ptr<const AlgebraExpr>;

/// Throws ParseError (with byte offset + expected tokens) on bad syntax and
/// StoneError(MixedCharacteristic) when leaves disagree on p.
AlgebraExprPtr parseAlgebraExpr(const std::string& text);

/// Canonical form; reparsing yields a structurally identical tree.
std::string printAlgebraExpr(const AlgebraExpr& e);

/// Parse just a polynomial in the given variable over F_p (the CLI factor
/// commands take bare polynomials).
FpPoly parsePolynomial(PrimeField field, const std::string& text);

/// Structural evaluation through the algebra constructors, cached by the
/// printed form of each subtree.
class ExprEvaluator {
public:
  explicit ExprEvaluator(Caps caps = {}) : caps_(caps) {}
  FiniteAlgebra eval(const AlgebraExprPtr& e);
  const Caps& caps() const { return caps_; }

private:
  Caps caps_;
  std::map<std::string, FiniteAlgebra> cache_;
};

}  // namespace stone

#endif
