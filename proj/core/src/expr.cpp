#include "stone/expr.hpp"

#include <cctype>
#include <functional>

namespace stone {

namespace {

struct Token {
  enum class Type { Int, Ident, Punct, End };
  Type type = Type::End;
  std::string text;
  unsigned long long value = 0;  // Int
  std::size_t offset = 0;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { tokenize(); }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

private:
  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Token t;
        t.type = Token::Type::Int;
        t.offset = i;
        unsigned long long v = 0;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
          v = v * 10 + static_cast<unsigned long long>(text_[i] - '0');
          if (v > 1'000'000'000ULL) {
            throw ParseError(t.offset, {"smaller integer"}, "integer literal too large");
          }
          t.text += text_[i];
          ++i;
        }
        t.value = v;
        tokens_.push_back(std::move(t));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        Token t;
        t.type = Token::Type::Ident;
        t.offset = i;
        while (i < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i]))) {
          t.text += text_[i];
          ++i;
        }
        tokens_.push_back(std::move(t));
        continue;
      }
      if (std::string("()[]/*+^,").find(c) != std::string::npos) {
        Token t;
        t.type = Token::Type::Punct;
        t.offset = i;
        t.text = std::string(1, c);
        tokens_.push_back(std::move(t));
        ++i;
        continue;
      }
      throw ParseError(i, {"token"}, std::string("unexpected character '") + c + "'");
    }
    Token end;
    end.type = Token::Type::End;
    end.offset = text_.size();
    tokens_.push_back(std::move(end));
  }

  std::string text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  AlgebraExprPtr parse() {
    AlgebraExprPtr e = parseProduct();
    expectEnd();
    checkCharacteristic(e);
    return e;
  }

  FpPoly parseBarePolynomial(PrimeField field) {
    Vec coeffs = parsePoly(field, "");
    expectEnd();
    return FpPoly(field, coeffs);
  }

private:
  [[noreturn]] void err(std::vector<std::string> expected, const std::string& what) {
    throw ParseError(lex_.peek().offset, std::move(expected), what);
  }

  void expectPunct(const std::string& p) {
    const Token& t = lex_.peek();
    if (t.type != Token::Type::Punct || t.text != p) {
      err({"'" + p + "'"}, "expected '" + p + "'");
    }
    lex_.next();
  }

  unsigned long long expectInt() {
    const Token& t = lex_.peek();
    if (t.type != Token::Type::Int) err({"integer"}, "expected an integer");
    unsigned long long v = t.value;
    lex_.next();
    return v;
  }

  std::string expectIdent() {
    const Token& t = lex_.peek();
    if (t.type != Token::Type::Ident) err({"identifier"}, "expected an identifier");
    std::string s = t.text;
    lex_.next();
    return s;
  }

  void expectEnd() {
    if (lex_.peek().type != Token::Type::End) {
      err({"end of input"}, "trailing input");
    }
  }

  bool atTensorOp() const {
    return lex_.peek(0).type == Token::Type::Punct && lex_.peek(0).text == "(" &&
           lex_.peek(1).type == Token::Type::Ident && lex_.peek(1).text == "x" &&
           lex_.peek(2).type == Token::Type::Punct && lex_.peek(2).text == ")";
  }

  AlgebraExprPtr parseProduct() {
    AlgebraExprPtr e = parseTensor();
    while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "*") {
      lex_.next();
      AlgebraExprPtr r = parseTensor();
      auto node = std::make_shared<AlgebraExpr>();
      node->kind = AlgebraExpr::Kind::Product;
      node->lhs = e;
      node->rhs = r;
      e = node;
    }
    return e;
  }

  AlgebraExprPtr parseTensor() {
    AlgebraExprPtr e = parseTerm();
    while (atTensorOp()) {
      lex_.next();
      lex_.next();
      lex_.next();
      AlgebraExprPtr r = parseTerm();
      auto node = std::make_shared<AlgebraExpr>();
      node->kind = AlgebraExpr::Kind::Tensor;
      node->lhs = e;
      node->rhs = r;
      e = node;
    }
    return e;
  }

  AlgebraExprPtr parseTerm() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Ident && t.text == "GF") {
      lex_.next();
      expectPunct("(");
      PrimeField field(static_cast<unsigned>(expectInt()));
      expectPunct(")");
      expectPunct("[");
      std::string var = expectIdent();
      expectPunct("]");
      expectPunct("/");
      expectPunct("(");
      Vec coeffs = parsePoly(field, var);
      expectPunct(")");
      auto node = std::make_shared<AlgebraExpr>();
      node->kind = AlgebraExpr::Kind::UnivariateQuotient;
      node->p = field.p();
      node->var = var;
      node->polyCoeffs = std::move(coeffs);
      return node;
    }
    if (t.type == Token::Type::Ident && t.text == "Fn") {
      lex_.next();
      expectPunct("(");
      PrimeField field(static_cast<unsigned>(expectInt()));
      expectPunct(",");
      unsigned long long size = expectInt();
      expectPunct(")");
      auto node = std::make_shared<AlgebraExpr>();
      node->kind = AlgebraExpr::Kind::FunctionAlg;
      node->p = field.p();
      node->setSize = static_cast<std::size_t>(size);
      return node;
    }
    if (t.type == Token::Type::Punct && t.text == "(") {
      lex_.next();
      AlgebraExprPtr e = parseProduct();
      expectPunct(")");
      return e;
    }
    err({"'GF'", "'Fn'", "'('"}, "expected a term");
  }

  // poly := monomial ('+' monomial)* ; monomial := coeff? ident ('^' int)? | coeff
  // coefficients accumulate and reduce mod p; requiredVar pins the variable
  Vec parsePoly(PrimeField field, const std::string& requiredVar) {
    std::vector<unsigned long long> acc;
    std::string var = requiredVar;
    auto addMonomial = [&](unsigned long long coeff, unsigned long long exp) {
      if (acc.size() <= exp) acc.resize(exp + 1, 0);
      acc[exp] = (acc[exp] + coeff) % field.p();
    };
    while (true) {
      const Token& t = lex_.peek();
      unsigned long long coeff = 1;
      bool sawCoeff = false;
      if (t.type == Token::Type::Int) {
        coeff = t.value % field.p();
        sawCoeff = true;
        lex_.next();
      }
      const Token& v = lex_.peek();
      if (v.type == Token::Type::Ident) {
        if (!var.empty() && v.text != var) {
          err({"'" + var + "'"}, "unexpected variable '" + v.text + "'");
        }
        if (var.empty()) var = v.text;
        lex_.next();
        unsigned long long exp = 1;
        if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "^") {
          lex_.next();
          exp = expectInt();
        }
        if (exp > 4096) err({"smaller exponent"}, "exponent too large");
        addMonomial(coeff, exp);
      } else if (sawCoeff) {
        addMonomial(coeff, 0);
      } else {
        err({"coefficient", "variable"}, "expected a monomial");
      }
      if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "+") {
        lex_.next();
        continue;
      }
      break;
    }
    Vec coeffs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) coeffs[i] = static_cast<Fel>(acc[i]);
    return coeffs;
  }

  void checkCharacteristic(const AlgebraExprPtr& e) {
    unsigned p = 0;
    std::function<void(const AlgebraExprPtr&)> walk = [&](const AlgebraExprPtr& node) {
      if (!node) return;
      if (node->kind == AlgebraExpr::Kind::Product || node->kind == AlgebraExpr::Kind::Tensor) {
        walk(node->lhs);
        walk(node->rhs);
        return;
      }
      if (p == 0) {
        p = node->p;
      } else if (p != node->p) {
        fail(Errc::MixedCharacteristic,
             "leaves use both p=" + std::to_string(p) + " and p=" + std::to_string(node->p));
      }
    };
    walk(e);
  }

  Lexer lex_;
};

std::string printPoly(const Vec& coeffs, unsigned p, const std::string& var) {
  return FpPoly(PrimeField(p), coeffs).toString(var);
}

}  // namespace

AlgebraExprPtr parseAlgebraExpr(const std::string& text) {
  Parser parser(text);
  return parser.parse();
}

FpPoly parsePolynomial(PrimeField field, const std::string& text) {
  Parser parser(text);
  return parser.parseBarePolynomial(field);
}

std::string printAlgebraExpr(const AlgebraExpr& e) {
  switch (e.kind) {
    case AlgebraExpr::Kind::UnivariateQuotient:
      return "GF(" + std::to_string(e.p) + ")[" + e.var + "]/(" +
             printPoly(e.polyCoeffs, e.p, e.var) + ")";
    case AlgebraExpr::Kind::FunctionAlg:
      return "Fn(" + std::to_string(e.p) + "," + std::to_string(e.setSize) + ")";
    case AlgebraExpr::Kind::Product: {
      std::string l = printAlgebraExpr(*e.lhs);
      std::string r = printAlgebraExpr(*e.rhs);
      if (e.rhs->kind == AlgebraExpr::Kind::Product) r = "(" + r + ")";
      return l + " * " + r;
    }
    case AlgebraExpr::Kind::Tensor: {
      std::string l = printAlgebraExpr(*e.lhs);
      std::string r = printAlgebraExpr(*e.rhs);
      if (e.lhs->kind == AlgebraExpr::Kind::Product) l = "(" + l + ")";
      if (e.rhs->kind == AlgebraExpr::Kind::Product ||
          e.rhs->kind == AlgebraExpr::Kind::Tensor) {
        r = "(" + r + ")";
      }
      return l + " (x) " + r;
    }
  }
  return "";
}

FiniteAlgebra ExprEvaluator::eval(const AlgebraExprPtr& e) {
  if (!e) fail(Errc::BadInput, "empty expression");
  const std::string key = printAlgebraExpr(*e);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  FiniteAlgebra result = [&]() -> FiniteAlgebra {
    switch (e->kind) {
      case AlgebraExpr::Kind::UnivariateQuotient: {
        PrimeField field(e->p);
        return univariateQuotient(field, FpPoly(field, e->polyCoeffs), caps_);
      }
      case AlgebraExpr::Kind::FunctionAlg:
        return functionAlgebra(PrimeField(e->p), e->setSize, {}, caps_);
      case AlgebraExpr::Kind::Product:
        return productAlgebra(eval(e->lhs), eval(e->rhs), caps_).algebra;
      case AlgebraExpr::Kind::Tensor:
        return tensorAlgebra(eval(e->lhs), eval(e->rhs), caps_).algebra;
    }
    fail(Errc::BadInput, "unreachable expression kind");
  }();
  cache_.emplace(key, result);
  return result;
}

}  // namespace stone
