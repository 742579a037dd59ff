#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "derived.hpp"
#include "prime_indexed.hpp"
#include "structure.hpp"

namespace flca {

// Tags for the two coordinate systems on prod_v Z^2.
//   CompactDiscrete: (r, s)_v  <->  r_inf[Z] + s_inf[T] + [prod Z_p^r_p] + [sum (Q_p/Z_p)^s_p]
//   Adelic:          (r, s)_v  <->  r_inf[R] - s_inf[Sol] + [prod' (Q_p^r_p : Z_p^r_p)] - [sum (Q_p/Z_p)^s_p]
// The first is additive and turns duality into the swap (r, s) -> (s, r);
// the second makes the derived tensor product componentwise.
struct CompactDiscreteBasis {};
struct AdelicBasis {};

template <class Basis>
class PlaceVector {
 public:
  PlaceVector() = default;
  PlaceVector(IntPair at_infinity, PrimeIndexed<IntPair> finite)
      : at_infinity_(at_infinity), finite_(std::move(finite)) {}

  const IntPair& at_infinity() const noexcept { return at_infinity_; }
  const PrimeIndexed<IntPair>& finite() const noexcept { return finite_; }
  const IntPair& at(std::uint64_t p) const { return finite_.at(p); }
  bool is_zero() const { return *this == PlaceVector(); }

  PlaceVector& operator+=(const PlaceVector& o) {
    at_infinity_ += o.at_infinity_;
    finite_ = zip(finite_, o.finite_, [](const IntPair& a, const IntPair& b) { return a + b; });
    return *this;
  }
  friend PlaceVector operator+(PlaceVector a, const PlaceVector& b) { return a += b; }
  friend PlaceVector operator-(const PlaceVector& a) {
    return PlaceVector(-a.at_infinity_, a.finite_.map([](const IntPair& v) { return -v; }));
  }
  friend PlaceVector operator-(const PlaceVector& a, const PlaceVector& b) { return a + (-b); }
  friend PlaceVector operator*(std::int64_t k, const PlaceVector& a) {
    return PlaceVector(k * a.at_infinity_, a.finite_.map([k](const IntPair& v) { return k * v; }));
  }
  friend bool operator==(const PlaceVector&, const PlaceVector&) = default;

 private:
  IntPair at_infinity_;
  PrimeIndexed<IntPair> finite_;
};

using K0Class = PlaceVector<CompactDiscreteBasis>;
using AdelicCoords = PlaceVector<AdelicBasis>;

template <class Basis>
std::string to_string(const PlaceVector<Basis>& x) {
  std::string s = to_string(x.at_infinity()) + "; default " + to_string(x.finite().fallback());
  bool first = true;
  for (const auto& [p, v] : x.finite().exceptions()) {
    s += first ? "; " : ", ";
    s += std::to_string(p) + ":" + to_string(v);
    first = false;
  }
  return s;
}

namespace detail {

inline K0Class k0_at_infinity(IntPair v, IntPair fallback = {}) {
  return K0Class(v, PrimeIndexed<IntPair>(fallback));
}

inline K0Class k0_at_prime(std::uint64_t p, IntPair v) {
  PrimeIndexed<IntPair> f;
  f.set(p, v);
  return K0Class({}, std::move(f));
}

}  // namespace detail

inline K0Class k0_of(const Atom& a) {
  using detail::k0_at_infinity;
  using detail::k0_at_prime;
  switch (a.family()) {
    case Family::Int: return k0_at_infinity({1, 0});
    case Family::Circle: return k0_at_infinity({0, 1});
    case Family::Real: return k0_at_infinity({1, 1});
    case Family::Rat: return k0_at_infinity({1, 0}, {0, 1});
    case Family::Solenoid: return k0_at_infinity({0, 1}, {1, 0});
    case Family::Adele: return k0_at_infinity({1, 1}, {1, 1});
    case Family::FinAdele: return k0_at_infinity({0, 0}, {1, 1});
    case Family::FinCyc: return {};
    case Family::ProInt: return k0_at_prime(a.prime_value(), {1, 0});
    case Family::Pruefer: return k0_at_prime(a.prime_value(), {0, 1});
    case Family::PAdic: return k0_at_prime(a.prime_value(), {1, 1});
  }
  return {};
}

inline K0Class k0_of(const FlcaGroup& x) {
  K0Class out;
  for (const auto& [a, c] : x.atoms()) out += static_cast<std::int64_t>(c) * k0_of(a);
  return out;
}

inline K0Class k0_of(const Indecomposable& x) {
  if (const Atom* a = std::get_if<Atom>(&x)) return k0_of(*a);
  const K0Class afin = k0_of(Atom::finite_adeles());
  // [Q -> Afin] in degrees 0,1; [Afin -> Sol] in degrees -1,0.
  if (std::holds_alternative<EComplex>(x)) return k0_of(Atom::rationals()) - afin;
  return k0_of(Atom::solenoid()) - afin;
}

// Euler characteristic sum_n (-1)^n [D^n].
inline K0Class k0_of_derived(const DerivedObject& d) {
  K0Class out;
  for (const auto& [t, c] : d.terms()) {
    const std::int64_t sign = (t.shift % 2 == 0) ? 1 : -1;
    out += sign * static_cast<std::int64_t>(c) * k0_of(t.object);
  }
  return out;
}

inline K0Class k0_of_derived(const GradedObject& g) { return k0_of_derived(to_derived(g)); }

// [A] -> [A^v].
template <class Basis>
PlaceVector<Basis> involution(const PlaceVector<Basis>& x) {
  return PlaceVector<Basis>(x.at_infinity().swapped(),
                            x.finite().map([](const IntPair& v) { return v.swapped(); }));
}

inline AdelicCoords to_adelic(const K0Class& x) {
  const IntPair inf = x.at_infinity();
  const std::int64_t s_inf = inf.first - inf.second;
  return AdelicCoords({inf.first, s_inf}, x.finite().map([s_inf](const IntPair& v) {
    const std::int64_t r = v.first + s_inf;
    return IntPair{r, r - v.second};
  }));
}

inline K0Class from_adelic(const AdelicCoords& y) {
  const IntPair inf = y.at_infinity();
  const std::int64_t s_inf = inf.second;
  return K0Class({inf.first, inf.first - s_inf}, y.finite().map([s_inf](const IntPair& v) {
    return IntPair{v.first - s_inf, v.first - v.second};
  }));
}

inline AdelicCoords componentwise_product(const AdelicCoords& x, const AdelicCoords& y) {
  auto times = [](const IntPair& a, const IntPair& b) { return IntPair{a.first * b.first, a.second * b.second}; };
  return AdelicCoords(times(x.at_infinity(), y.at_infinity()), zip(x.finite(), y.finite(), times));
}

// [X] * [Y] = [X (x)^L Y].
inline K0Class mul(const K0Class& x, const K0Class& y) {
  return from_adelic(componentwise_product(to_adelic(x), to_adelic(y)));
}

inline K0Class k0_unit() { return k0_of(Atom::integers()); }

// ---------------------------------------------------------------------------
// Recovering the class of a group from rank invariants.
//
// With r = dim Hom(A, R), s = dim Hom(R, A), chi1 = chi(RHom(A, Q_p)) and
// chi2 = chi(RHom(Q_p, A)) (Euler characteristics of Q_p-dimensions):
//   Literal:   r_p = s + chi1,      s_p = r + chi2
//   Corrected: r_p = chi1 - r + s,  s_p = chi2 + r - s
// select_left_inverse() decides between them by evaluating both on the four
// generator families.

enum class LeftInverseFormula : std::uint8_t { Literal, Corrected };

inline std::string to_string(LeftInverseFormula f) {
  return f == LeftInverseFormula::Literal ? "literal" : "corrected";
}

// sum_n (-1)^n dim_{Q_p} H^n(d); every nonzero term must be a copy of Q_p.
inline std::int64_t qp_euler_characteristic(const DerivedObject& d, std::uint64_t p) {
  std::int64_t chi = 0;
  for (const auto& [t, c] : d.terms()) {
    const Atom* a = std::get_if<Atom>(&t.object);
    if (!a || a->family() != Family::PAdic || a->prime_value() != p)
      throw InvariantViolation(to_string(d) + " is not a Q_" + std::to_string(p) + "-vector space");
    chi += ((t.shift % 2 == 0) ? 1 : -1) * static_cast<std::int64_t>(c);
  }
  return chi;
}

inline std::uint64_t first_prime_not_in(const std::vector<std::uint64_t>& used) {
  for (std::uint64_t q = 2;; ++q)
    if (is_prime(q) && std::find(used.begin(), used.end(), q) == used.end()) return q;
}

inline K0Class k0_from_invariants(const FlcaGroup& x, LeftInverseFormula formula) {
  const RankProfile rp = ranks(x);
  const auto r = static_cast<std::int64_t>(rp.z_rank);
  const auto s = static_cast<std::int64_t>(rp.s1_rank);
  auto local = [&](std::uint64_t p) {
    const FlcaGroup qp(Atom::p_adic_numbers(Prime(p)));
    const std::int64_t chi1 = qp_euler_characteristic(rhom(x, qp), p);
    const std::int64_t chi2 = qp_euler_characteristic(rhom(qp, x), p);
    if (formula == LeftInverseFormula::Literal) return IntPair{s + chi1, r + chi2};
    return IntPair{chi1 - r + s, chi2 + r - s};
  };
  const std::vector<std::uint64_t> ps = primes_of(x);
  // Away from the primes of x every local invariant takes its generic value.
  PrimeIndexed<IntPair> finite(local(first_prime_not_in(ps)));
  for (std::uint64_t p : ps) finite.set(p, local(p));
  return K0Class({r, s}, std::move(finite));
}

struct LeftInverseReport {
  bool literal_ok = false;
  bool corrected_ok = false;
  std::vector<std::string> literal_failures;
};

// Evaluates both formulas on Z, T, prod Z_p^r and sum (Q_p/Z_p)^s, comparing
// against the coordinates the generators were built from.
inline LeftInverseReport evaluate_left_inverses() {
  struct Generator {
    FlcaGroup group;
    K0Class coords;
  };
  std::vector<Generator> gens{
      {Atom::integers(), detail::k0_at_infinity({1, 0})},
      {FlcaGroup(Atom::integers(), 3), detail::k0_at_infinity({3, 0})},
      {Atom::circle(), detail::k0_at_infinity({0, 1})},
      {FlcaGroup(Atom::circle(), 2), detail::k0_at_infinity({0, 2})},
  };
  for (std::uint64_t p : {2, 3, 5, 7, 101}) {
    for (std::int64_t k : {1, 2}) {
      gens.push_back({FlcaGroup(Atom::p_adic_integers(Prime(p)), k), detail::k0_at_prime(p, {k, 0})});
      gens.push_back({FlcaGroup(Atom::pruefer(Prime(p)), k), detail::k0_at_prime(p, {0, k})});
    }
  }
  gens.push_back({FlcaGroup(Atom::p_adic_integers(Prime(2))) + Atom::p_adic_integers(Prime(3)),
                  detail::k0_at_prime(2, {1, 0}) + detail::k0_at_prime(3, {1, 0})});

  LeftInverseReport rep{true, true, {}};
  for (const auto& g : gens) {
    if (k0_from_invariants(g.group, LeftInverseFormula::Literal) != g.coords) {
      rep.literal_ok = false;
      rep.literal_failures.push_back(to_string(g.group));
    }
    if (k0_from_invariants(g.group, LeftInverseFormula::Corrected) != g.coords) rep.corrected_ok = false;
  }
  return rep;
}

inline LeftInverseFormula select_left_inverse() {
  const LeftInverseReport rep = evaluate_left_inverses();
  if (rep.literal_ok == rep.corrected_ok)
    throw InvariantViolation("expected exactly one left-inverse formula to be the identity on generators");
  return rep.literal_ok ? LeftInverseFormula::Literal : LeftInverseFormula::Corrected;
}

inline K0Class k0_from_invariants(const FlcaGroup& x) {
  static const LeftInverseFormula winner = select_left_inverse();
  return k0_from_invariants(x, winner);
}

}  // namespace flca
