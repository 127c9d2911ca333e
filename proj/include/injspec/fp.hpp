#pragma once

#include "injspec/errors.hpp"

namespace injspec {

// Prime field F_p for 2 <= p <= 97.  Elements are ints normalized to [0, p).
struct PrimeField {
  int p = 2;

  PrimeField() = default;
  explicit PrimeField(int p_) : p(p_) {
    require(p >= 2 && p <= 97, errc::invalid_input, "field characteristic must lie in [2, 97]");
    for (int d = 2; d * d <= p; ++d)
      require(p % d != 0, errc::invalid_input, "field characteristic must be prime");
  }

  int norm(long long x) const {
    long long r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
  }
  int add(int a, int b) const { return norm(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return norm(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return norm(static_cast<long long>(a) * b); }
  int neg(int a) const { return norm(-static_cast<long long>(a)); }
  int pow(int a, long long e) const {
    int r = 1, b = norm(a);
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  int inv(int a) const {
    a = norm(a);
    require(a != 0, errc::invalid_input, "division by zero in prime field");
    return pow(a, p - 2);
  }
  int div(int a, int b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField&) const = default;
};

}  // namespace injspec
