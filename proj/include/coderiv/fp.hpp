#pragma once

#include <cstdint>
#include <stdexcept>

namespace coderiv {

// The prime field Z/p for a compile-time prime p. Small and value-like;
// everything the moduli census needs (p in {2, 3, 5}) fits in an int.
template <int P>
struct Zp {
  static_assert(P >= 2, "modulus must be at least 2");
  int v = 0;

  Zp() = default;
  Zp(long long x) : v(static_cast<int>(((x % P) + P) % P)) {}

  static constexpr int modulus() { return P; }

  friend Zp operator+(Zp a, Zp b) { return Zp(a.v + b.v); }
  friend Zp operator-(Zp a, Zp b) { return Zp(a.v - b.v); }
  friend Zp operator*(Zp a, Zp b) {
    return Zp(static_cast<long long>(a.v) * b.v);
  }
  Zp operator-() const { return Zp(-v); }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
  friend bool operator!=(Zp a, Zp b) { return a.v != b.v; }
  friend bool operator<(Zp a, Zp b) { return a.v < b.v; }

  Zp inverse() const {
    if (v == 0) throw std::domain_error("division by zero");
    // Fermat: v^{p-2} mod p.
    long long base = v, acc = 1;
    int e = P - 2;
    while (e > 0) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Zp(acc);
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
};

template <int P>
inline bool scalar_is_zero(Zp<P> x) {
  return x.v == 0;
}

}  // namespace coderiv
