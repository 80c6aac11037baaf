#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace g2graph {

/// Element of GF(4) = {0, 1, w, W} where w is a root of x^2 + x + 1 and
/// W = w^2 = w + 1 is its conjugate.
///
/// The 2-bit code is the coordinate vector over the basis {1, w}, so
/// addition is XOR. Codes: 0 -> 0, 1 -> 1, 2 -> w, 3 -> W.
class Gf4 {
public:
  constexpr Gf4() = default;

  static constexpr Gf4 from_code(unsigned code) {
    if (code > 3) {
      throw std::out_of_range("Gf4 code must be in 0..3");
    }
    return Gf4(static_cast<std::uint8_t>(code));
  }

  static constexpr Gf4 zero() { return Gf4(0); }
  static constexpr Gf4 one() { return Gf4(1); }
  static constexpr Gf4 omega() { return Gf4(2); }
  static constexpr Gf4 omega_bar() { return Gf4(3); }

  constexpr unsigned code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.code_ ^ b.code_); }
  // Characteristic 2: subtraction is addition.
  friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
  friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(kMul[a.code_][b.code_]); }
  constexpr Gf4& operator+=(Gf4 o) { return *this = *this + o; }
  constexpr Gf4& operator*=(Gf4 o) { return *this = *this * o; }

  friend constexpr bool operator==(Gf4, Gf4) = default;
  friend constexpr auto operator<=>(Gf4, Gf4) = default;

private:
  constexpr explicit Gf4(std::uint8_t code) : code_(code) {}

  static constexpr std::uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };

  std::uint8_t code_ = 0;
};

inline constexpr std::array<Gf4, 4> kGf4Elements = {Gf4::zero(), Gf4::one(), Gf4::omega(),
                                                    Gf4::omega_bar()};

/// Frobenius x -> x^2, the unique nontrivial field automorphism.
constexpr Gf4 conj(Gf4 a) { return a * a; }

/// Absolute trace into GF(2): a + a^2. Always 0 or 1.
constexpr Gf4 trace(Gf4 a) { return a + conj(a); }

/// Relative norm a * conj(a) = a^3. Always 0 or 1.
constexpr Gf4 norm(Gf4 a) { return a * conj(a); }

/// Multiplicative inverse; throws on zero.
constexpr Gf4 inverse(Gf4 a) {
  if (a.is_zero()) {
    throw std::domain_error("GF(4): zero has no inverse");
  }
  // a^3 = 1, so a^-1 = a^2.
  return conj(a);
}

/// "0", "1", "w", "W".
constexpr std::string_view to_string(Gf4 a) {
  constexpr std::string_view names[4] = {"0", "1", "w", "W"};
  return names[a.code()];
}

inline std::ostream& operator<<(std::ostream& os, Gf4 a) { return os << to_string(a); }

}  // namespace g2graph
