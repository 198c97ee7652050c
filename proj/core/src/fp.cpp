#include "stone/fp.hpp"

namespace stone {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::BadUnit: return "BadUnit";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::DimCapExceeded: return "DimCapExceeded";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::NotMonic: return "NotMonic";
    case Errc::ZeroDegree: return "ZeroDegree";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotPBoolean: return "NotPBoolean";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotInjectiveInput: return "NotInjectiveInput";
    case Errc::InternalClosureFailure: return "InternalClosureFailure";
    case Errc::SystemValidationFailure: return "SystemValidationFailure";
    case Errc::ScalarResolutionFailure: return "ScalarResolutionFailure";
    case Errc::NoPreimagePoint: return "NoPreimagePoint";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::InvalidSubtower: return "InvalidSubtower";
    case Errc::InvalidAtDepth: return "InvalidAtDepth";
    case Errc::NotClopenAtThisDepth: return "NotClopenAtThisDepth";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::MixedCharacteristic: return "MixedCharacteristic";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

int errcExitClass(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::MixedCharacteristic:
    case Errc::BadInput:
      return 1;
    case Errc::DimCapExceeded:
    case Errc::EnumerationCapExceeded:
      return 3;
    default:
      return 2;
  }
}

bool isSmallPrime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (p < 2 || p > 251 || !isSmallPrime(p)) {
    fail(Errc::NotPrime, "modulus " + std::to_string(p) + " is not a prime in [2,251]");
  }
}

Fel PrimeField::pow(Fel a, unsigned long long e) const {
  unsigned result = 1;
  unsigned base = a % p_;
  while (e > 0) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<Fel>(result);
}

Fel PrimeField::inv(Fel a) const {
  if (a == 0) fail(Errc::BadInput, "inverse of zero");
  // Fermat: a^(p-2)
  return pow(a, p_ - 2);
}

}  // namespace stone
