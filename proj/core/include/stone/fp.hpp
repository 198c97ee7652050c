#ifndef STONE_FP_HPP
#define STONE_FP_HPP

#include <cstdint>
#include <vector>

#include "stone/errors.hpp"

namespace stone {

// One scalar of F_p. p <= 251, so a byte always suffices.
using Fel = std::uint8_t;
// A coordinate vector over F_p (an algebra element, a row, a column...).
using Vec = std::vector<Fel>;

/// The prime field F_p, 2 <= p <= 251. Arithmetic is by direct mod;
/// at this size there is nothing to gain from tables.
class PrimeField {
public:
  explicit PrimeField(unsigned p);

  unsigned p() const { return p_; }

  Fel add(Fel a, Fel b) const { return static_cast<Fel>((a + b) % p_); }
  Fel sub(Fel a, Fel b) const { return static_cast<Fel>((a + p_ - b) % p_); }
  Fel neg(Fel a) const { return static_cast<Fel>((p_ - a) % p_); }
  Fel mul(Fel a, Fel b) const {
    return static_cast<Fel>((static_cast<unsigned>(a) * b) % p_);
  }
  Fel pow(Fel a, unsigned long long e) const;
  Fel inv(Fel a) const;  // a != 0
  Fel reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Fel>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  unsigned p_;
};

/// Deterministic primality for the supported range (trial division).
bool isSmallPrime(unsigned n);

}  // namespace stone

#endif
