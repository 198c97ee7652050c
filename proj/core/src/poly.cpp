#include "stone/poly.hpp"

namespace stone {

FpPoly::FpPoly(PrimeField field, Vec coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (Fel& c : coeffs_) c = static_cast<Fel>(c % field_.p());
  normalize();
}

void FpPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::constant(PrimeField field, Fel c) {
  return FpPoly(field, Vec{c});
}

FpPoly FpPoly::x(PrimeField field) { return FpPoly(field, Vec{0, 1}); }

FpPoly FpPoly::add(const FpPoly& o) const {
  Vec out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::sub(const FpPoly& o) const {
  Vec out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::mul(const FpPoly& o) const {
  if (isZero() || o.isZero()) return zero(field_);
  Vec out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::scale(Fel c) const {
  Vec out = coeffs_;
  for (Fel& v : out) v = field_.mul(v, c);
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::shift(std::size_t k) const {
  if (isZero()) return *this;
  Vec out(coeffs_.size() + k, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return FpPoly(field_, std::move(out));
}

PolyDivMod FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.isZero()) fail(Errc::BadInput, "polynomial division by zero");
  FpPoly rem = *this;
  FpPoly quot = zero(field_);
  const Fel leadInv = field_.inv(divisor.leadingCoeff());
  while (!rem.isZero() && rem.degree() >= divisor.degree()) {
    const std::size_t shiftBy = static_cast<std::size_t>(rem.degree() - divisor.degree());
    const Fel factor = field_.mul(rem.leadingCoeff(), leadInv);
    FpPoly term = FpPoly::constant(field_, factor).shift(shiftBy);
    quot = quot.add(term);
    rem = rem.sub(divisor.mul(term));
  }
  return PolyDivMod{quot, rem};
}

FpPoly FpPoly::mod(const FpPoly& divisor) const { return divmod(divisor).rem; }

FpPoly FpPoly::derivative() const {
  if (coeffs_.size() <= 1) return zero(field_);
  Vec out(coeffs_.size() - 1, 0);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_.mul(coeffs_[i], field_.reduce(static_cast<long long>(i)));
  }
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::monicScaled() const {
  if (isZero()) return *this;
  return scale(field_.inv(leadingCoeff()));
}

Fel FpPoly::eval(Fel x) const {
  Fel acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  }
  return acc;
}

std::string FpPoly::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Fel c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(static_cast<unsigned>(c));
    } else {
      if (c != 1) out += std::to_string(static_cast<unsigned>(c));
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  return coeffs_ < o.coeffs_;
}

FpPoly polyGcd(const FpPoly& a, const FpPoly& b) {
  FpPoly r0 = a, r1 = b;
  while (!r1.isZero()) {
    FpPoly r2 = r0.mod(r1);
    r0 = r1;
    r1 = r2;
  }
  return r0.monicScaled();
}

}  // namespace stone
