#ifndef STONE_POLY_HPP
#define STONE_POLY_HPP

#include <string>
#include <vector>

#include "stone/fp.hpp"

namespace stone {

class FpPoly;

struct PolyDivMod;

/// Dense univariate polynomial over F_p, coefficients ascending
/// (coeffs[i] multiplies x^i). Zero polynomial has empty coeffs.
class FpPoly {
public:
  explicit FpPoly(PrimeField field) : field_(field) {}
  FpPoly(PrimeField field, Vec coeffs);

  static FpPoly zero(PrimeField field) { return FpPoly(field); }
  static FpPoly constant(PrimeField field, Fel c);
  static FpPoly x(PrimeField field);

  const PrimeField& field() const { return field_; }
  const Vec& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Fel leadingCoeff() const { return coeffs_.empty() ? Fel{0} : coeffs_.back(); }
  bool isMonic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Fel coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Fel{0}; }

  FpPoly add(const FpPoly& o) const;
  FpPoly sub(const FpPoly& o) const;
  FpPoly mul(const FpPoly& o) const;
  FpPoly scale(Fel c) const;
  FpPoly shift(std::size_t k) const;  // multiply by x^k

  PolyDivMod divmod(const FpPoly& divisor) const;
  FpPoly mod(const FpPoly& divisor) const;

  FpPoly derivative() const;
  FpPoly monicScaled() const;  // divide by leading coefficient
  Fel eval(Fel x) const;

  /// "x^3+2x+1" style, descending powers, '+'-joined; "0" for zero.
  std::string toString(const std::string& var = "x") const;

  bool operator==(const FpPoly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }
  // by degree, then coefficient tuple ascending; canonical order for factor lists
  bool operator<(const FpPoly& o) const;

private:
  void normalize();

  PrimeField field_;
  Vec coeffs_;
};

struct PolyDivMod {
  FpPoly quot;
  FpPoly rem;
};

FpPoly polyGcd(const FpPoly& a, const FpPoly& b);  // monic gcd, 0 for (0,0)

}  // namespace stone

#endif
