#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace flca {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

class Prime {
 public:
  explicit Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) throw std::invalid_argument(std::to_string(value) + " is not prime");
  }

  std::uint64_t value() const noexcept { return value_; }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

// The declaration order is the canonical order of atoms in a direct sum.
enum class Family : std::uint8_t {
  Int,       // Z
  Rat,       // Q, discrete
  Real,      // R
  Circle,    // T = S^1
  Solenoid,  // Sol = dual of discrete Q
  Adele,     // A
  FinAdele,  // Afin
  FinCyc,    // Z/p^n
  ProInt,    // Z_p
  PAdic,     // Q_p
  Pruefer,   // Q_p/Z_p
};

inline constexpr Family kAllFamilies[] = {
    Family::Int,      Family::Rat,    Family::Real,   Family::Circle,
    Family::Solenoid, Family::Adele,  Family::FinAdele, Family::FinCyc,
    Family::ProInt,   Family::PAdic,  Family::Pruefer,
};

constexpr bool is_local(Family f) noexcept {
  return f == Family::FinCyc || f == Family::ProInt || f == Family::PAdic || f == Family::Pruefer;
}

// One of the eleven indecomposable finite-rank LCA groups. Local atoms carry
// a prime; FinCyc additionally carries an exponent n >= 1.
class Atom {
 public:
  static Atom integers() { return Atom(Family::Int); }
  static Atom rationals() { return Atom(Family::Rat); }
  static Atom reals() { return Atom(Family::Real); }
  static Atom circle() { return Atom(Family::Circle); }
  static Atom solenoid() { return Atom(Family::Solenoid); }
  static Atom adeles() { return Atom(Family::Adele); }
  static Atom finite_adeles() { return Atom(Family::FinAdele); }

  static Atom cyclic(Prime p, std::uint32_t exponent) {
    if (exponent == 0) throw std::invalid_argument("cyclic atom needs exponent >= 1");
    return Atom(Family::FinCyc, p.value(), exponent);
  }
  static Atom p_adic_integers(Prime p) { return Atom(Family::ProInt, p.value(), 0); }
  static Atom p_adic_numbers(Prime p) { return Atom(Family::PAdic, p.value(), 0); }
  static Atom pruefer(Prime p) { return Atom(Family::Pruefer, p.value(), 0); }

  // Local atom of the given family; exponent is ignored unless family is FinCyc.
  static Atom local(Family f, Prime p, std::uint32_t exponent = 1) {
    switch (f) {
      case Family::FinCyc: return cyclic(p, exponent);
      case Family::ProInt: return p_adic_integers(p);
      case Family::PAdic: return p_adic_numbers(p);
      case Family::Pruefer: return pruefer(p);
      default: throw std::invalid_argument("not a local family");
    }
  }

  static Atom global(Family f) {
    if (is_local(f)) throw std::invalid_argument("local family needs a prime");
    return Atom(f);
  }

  Family family() const noexcept { return family_; }
  bool local() const noexcept { return is_local(family_); }
  // Only meaningful for local atoms.
  Prime prime() const { return Prime(prime_); }
  std::uint64_t prime_value() const noexcept { return prime_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  // Order p^n of a FinCyc atom.
  std::uint64_t order() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < exponent_; ++i) q *= prime_;
    return q;
  }

  // Family, then prime, then exponent.
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  explicit Atom(Family f, std::uint64_t p = 0, std::uint32_t e = 0)
      : family_(f), prime_(p), exponent_(e) {}

  Family family_;
  std::uint64_t prime_;
  std::uint32_t exponent_;
};

inline std::string to_string(const Atom& a) {
  const std::string p = std::to_string(a.prime_value());
  switch (a.family()) {
    case Family::Int: return "Z";
    case Family::Rat: return "Q";
    case Family::Real: return "R";
    case Family::Circle: return "T";
    case Family::Solenoid: return "Sol";
    case Family::Adele: return "A";
    case Family::FinAdele: return "Afin";
    case Family::FinCyc: return "Z/" + std::to_string(a.order());
    case Family::ProInt: return "Z_" + p;
    case Family::PAdic: return "Q_" + p;
    case Family::Pruefer: return "Q_" + p + "/Z_" + p;
  }
  return "?";
}

// Pontryagin dual of a single atom.
inline Atom dual(const Atom& a) {
  switch (a.family()) {
    case Family::Int: return Atom::circle();
    case Family::Circle: return Atom::integers();
    case Family::Rat: return Atom::solenoid();
    case Family::Solenoid: return Atom::rationals();
    case Family::ProInt: return Atom::pruefer(a.prime());
    case Family::Pruefer: return Atom::p_adic_integers(a.prime());
    default: return a;
  }
}

}  // namespace flca
