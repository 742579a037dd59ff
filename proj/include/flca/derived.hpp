#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace flca {

// The two-term complex [Q -> Afin] (Q in degree 0, Afin in degree 1). Its
// differential is injective with dense image but not a closed embedding.
struct EComplex {
  friend auto operator<=>(const EComplex&, const EComplex&) = default;
};
// Its dual [Afin -> Sol] in degrees -1, 0.
struct EDualComplex {
  friend auto operator<=>(const EDualComplex&, const EDualComplex&) = default;
};

// Atoms sort before E, E before E*.
using Indecomposable = std::variant<Atom, EComplex, EDualComplex>;

inline std::string to_string(const Indecomposable& x) {
  if (const Atom* a = std::get_if<Atom>(&x)) return to_string(*a);
  return std::holds_alternative<EComplex>(x) ? "E" : "E*";
}

inline Indecomposable dual(const Indecomposable& x) {
  if (const Atom* a = std::get_if<Atom>(&x)) return dual(*a);
  if (std::holds_alternative<EComplex>(x)) return EDualComplex{};
  return EComplex{};
}

// T[n] sits in cohomological degree -n.
template <class T>
struct Shifted {
  T object;
  std::int64_t shift = 0;

  std::int64_t degree() const { return -shift; }
  friend bool operator==(const Shifted&, const Shifted&) = default;
};

// By object, then by ascending cohomological degree.
struct ShiftedOrder {
  template <class T>
  bool operator()(const Shifted<T>& a, const Shifted<T>& b) const {
    if (auto c = a.object <=> b.object; c != 0) return c < 0;
    return a.shift > b.shift;
  }
};

// A bounded complex with zero differentials, i.e. a finite sum of shifted
// indecomposables, kept in canonical sorted form.
template <class T>
class SplitComplex {
 public:
  using Term = Shifted<T>;
  using Terms = SortedMultiset<Term, ShiftedOrder>;

  SplitComplex() = default;
  explicit SplitComplex(Terms terms) : terms_(std::move(terms)) {}
  explicit SplitComplex(const T& object, std::int64_t shift = 0, std::uint64_t count = 1) {
    terms_.add(Term{object, shift}, count);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  SplitComplex shifted(std::int64_t n) const {
    Terms out;
    for (const auto& [t, c] : terms_) out.add(Term{t.object, t.shift + n}, c);
    return SplitComplex(std::move(out));
  }

  SplitComplex repeated(std::uint64_t k) const { return SplitComplex(terms_.scaled(k)); }

  std::optional<SplitComplex> minus(const SplitComplex& other) const {
    auto r = terms_.minus(other.terms_);
    if (!r) return std::nullopt;
    return SplitComplex(std::move(*r));
  }

  SplitComplex& operator+=(const SplitComplex& o) {
    terms_.add(o.terms_);
    return *this;
  }
  friend SplitComplex operator+(SplitComplex a, const SplitComplex& b) { return a += b; }
  friend bool operator==(const SplitComplex&, const SplitComplex&) = default;

 private:
  Terms terms_;
};

using GradedObject = SplitComplex<Atom>;
using DerivedObject = SplitComplex<Indecomposable>;

inline GradedObject embed(const FlcaGroup& x, std::int64_t shift = 0) {
  GradedObject g;
  for (const auto& [a, c] : x.atoms()) g += GradedObject(a, shift, c);
  return g;
}

inline DerivedObject to_derived(const GradedObject& g) {
  DerivedObject d;
  for (const auto& [t, c] : g.terms()) d += DerivedObject(Indecomposable(t.object), t.shift, c);
  return d;
}

inline DerivedObject to_derived(const FlcaGroup& x) { return to_derived(embed(x)); }

// nullopt if d contains E or E*.
inline std::optional<GradedObject> to_graded(const DerivedObject& d) {
  GradedObject g;
  for (const auto& [t, c] : d.terms()) {
    const Atom* a = std::get_if<Atom>(&t.object);
    if (!a) return std::nullopt;
    g += GradedObject(*a, t.shift, c);
  }
  return g;
}

inline bool contains_e(const DerivedObject& d) { return !to_graded(d).has_value(); }

template <class T>
std::string to_string(const SplitComplex<T>& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [t, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += detail::render_term(to_string(t.object), c, t.shift);
  }
  return s;
}

// Human-readable gloss of every E / E* summand, e.g.
// "E = [Q > Afin] in degrees 0,1".
inline std::vector<std::string> describe_e_terms(const DerivedObject& d) {
  std::vector<std::string> out;
  for (const auto& [t, c] : d.terms()) {
    if (std::holds_alternative<Atom>(t.object)) continue;
    const bool e = std::holds_alternative<EComplex>(t.object);
    const std::int64_t lo = e ? -t.shift : -1 - t.shift;
    out.push_back(detail::render_term(e ? "E" : "E*", 1, t.shift) + " = " +
                  (e ? "[Q > Afin]" : "[Afin > Sol]") + " in degrees " + std::to_string(lo) +
                  "," + std::to_string(lo + 1));
  }
  return out;
}

template <class T>
SplitComplex<T> dual_split(const SplitComplex<T>& x) {
  SplitComplex<T> out;
  for (const auto& [t, c] : x.terms()) out += SplitComplex<T>(T(dual(t.object)), -t.shift, c);
  return out;
}

inline GradedObject dual(const GradedObject& x) { return dual_split(x); }

// X[n] -> X^v[-n]; E[n] -> E*[-n].
inline DerivedObject dual_derived(const DerivedObject& d) { return dual_split(d); }

namespace detail {

inline DerivedObject cell(const Atom& a, std::int64_t shift = 0) { return DerivedObject(Indecomposable(a), shift); }
inline DerivedObject e_cell() { return DerivedObject(Indecomposable(EComplex{})); }

// Row a local at p, column a global family.
inline DerivedObject local_global(const Atom& a, Family col) {
  const Prime p = a.prime();
  switch (a.family()) {
    case Family::FinCyc:
      if (col == Family::Circle) return cell(a);
      if (col == Family::Int) return cell(a, -1);
      return {};
    case Family::ProInt:
      switch (col) {
        case Family::Circle: return cell(Atom::pruefer(p));
        case Family::Int: return cell(Atom::pruefer(p), -1);
        case Family::Solenoid:
        case Family::Adele:
        case Family::FinAdele: return cell(Atom::p_adic_numbers(p));
        default: return {};
      }
    case Family::PAdic:
      switch (col) {
        case Family::Circle:
        case Family::Solenoid:
        case Family::Adele:
        case Family::FinAdele: return cell(a);
        case Family::Int: return cell(a, -1);
        default: return {};
      }
    case Family::Pruefer:
      if (col == Family::Circle) return cell(Atom::p_adic_integers(p));
      if (col == Family::Int) return cell(Atom::p_adic_integers(p), -1);
      return {};
    default: throw InvariantViolation("local_global called with a global row");
  }
}

// Row a global family, column b local at p.
inline DerivedObject global_local(Family row, const Atom& b) {
  const Family f = b.family();
  switch (row) {
    case Family::Int: return cell(b);
    case Family::Circle: return cell(b, -1);
    case Family::Rat:
    case Family::Adele:
    case Family::FinAdele:
      if (f == Family::Pruefer || f == Family::PAdic) return cell(Atom::p_adic_numbers(b.prime()));
      return {};
    default: return {};  // Real, Solenoid
  }
}

inline DerivedObject global_global(Family row, Family col) {
  const Atom Z = Atom::integers(), Q = Atom::rationals(), R = Atom::reals(),
             Sol = Atom::solenoid(), A = Atom::adeles(), Afin = Atom::finite_adeles();
  switch (row) {
    case Family::Int: return cell(Atom::global(col));
    case Family::Real:
      switch (col) {
        case Family::Real:
        case Family::Circle:
        case Family::Solenoid:
        case Family::Adele: return cell(R);
        default: return {};
      }
    case Family::Circle:
      switch (col) {
        case Family::Int: return cell(Z, -1);
        case Family::Rat: return cell(Q, -1);
        case Family::Circle: return cell(Z);
        case Family::Solenoid: return e_cell();
        case Family::Adele:
        case Family::FinAdele: return cell(Afin, -1);
        default: return {};
      }
    case Family::Rat:
      switch (col) {
        case Family::Int: return e_cell();
        case Family::Rat: return cell(Q);
        case Family::Real: return cell(R);
        case Family::Circle:
        case Family::Solenoid: return cell(Sol);
        case Family::Adele: return cell(A);
        case Family::FinAdele: return cell(Afin);
        default: return {};
      }
    case Family::Solenoid:
      switch (col) {
        case Family::Int:
        case Family::Rat: return cell(Q, -1);
        case Family::Circle:
        case Family::Solenoid: return cell(Q);
        default: return {};
      }
    case Family::Adele:
      switch (col) {
        case Family::Int: return cell(Afin, -1);
        case Family::Real: return cell(R);
        case Family::Circle:
        case Family::Solenoid:
        case Family::Adele: return cell(A);
        case Family::FinAdele: return cell(Afin);
        default: return {};
      }
    case Family::FinAdele:
      switch (col) {
        case Family::Int: return cell(Afin, -1);
        case Family::Circle:
        case Family::Solenoid:
        case Family::Adele:
        case Family::FinAdele: return cell(Afin);
        default: return {};
      }
    default: throw InvariantViolation("global_global called with a local row");
  }
}

inline DerivedObject local_local(const Atom& a, const Atom& b) {
  const Prime p = a.prime();
  const Atom Zp = Atom::p_adic_integers(p), Qp = Atom::p_adic_numbers(p), Pr = Atom::pruefer(p);
  switch (a.family()) {
    case Family::FinCyc:
      switch (b.family()) {
        case Family::FinCyc: {
          const Atom c = Atom::cyclic(p, std::min(a.exponent(), b.exponent()));
          return cell(c) + cell(c, -1);
        }
        case Family::Pruefer: return cell(a);
        case Family::ProInt: return cell(a, -1);
        default: return {};
      }
    case Family::ProInt:
      switch (b.family()) {
        case Family::FinCyc: return cell(b);
        case Family::Pruefer: return cell(Pr);
        case Family::PAdic: return cell(Qp);
        case Family::ProInt: return cell(Zp);
        default: return {};
      }
    case Family::PAdic:
      if (b.family() == Family::Pruefer || b.family() == Family::PAdic) return cell(Qp);
      return {};
    case Family::Pruefer:
      switch (b.family()) {
        case Family::FinCyc: return cell(b, -1);
        case Family::Pruefer: return cell(Zp);
        case Family::ProInt: return cell(Zp, -1);
        default: return {};
      }
    default: throw InvariantViolation("local_local called with a global row");
  }
}

}  // namespace detail

// RHom(a, b) for two atoms. Local atoms at different primes are orthogonal.
inline DerivedObject atom_rhom(const Atom& a, const Atom& b) {
  if (a.local() && b.local()) {
    if (a.prime() != b.prime()) return {};
    return detail::local_local(a, b);
  }
  if (a.local()) return detail::local_global(a, b.family());
  if (b.local()) return detail::global_local(a.family(), b);
  return detail::global_global(a.family(), b.family());
}

// Biadditive; RHom(a[m], b[n]) = RHom(a, b)[n - m].
inline DerivedObject rhom(const GradedObject& x, const GradedObject& y) {
  DerivedObject out;
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms())
      out += atom_rhom(s.object, t.object).shifted(t.shift - s.shift).repeated(cs * ct);
  return out;
}

inline DerivedObject rhom(const FlcaGroup& x, const FlcaGroup& y) { return rhom(embed(x), embed(y)); }

// X (x)^L Y := RHom(X, Y^v)^v.
inline DerivedObject derived_tensor(const GradedObject& x, const GradedObject& y) {
  return dual_derived(rhom(x, dual(y)));
}

inline DerivedObject derived_tensor(const FlcaGroup& x, const FlcaGroup& y) {
  return derived_tensor(embed(x), embed(y));
}

enum class HeartToken : std::uint8_t {
  CokQtoAfin,    // coker(Q -> Afin), exists only in the left heart
  CokAfinToSol,  // coker(Afin -> Sol)
};

inline std::string to_string(HeartToken t) {
  return t == HeartToken::CokQtoAfin ? "coker[Q > Afin]" : "coker[Afin > Sol]";
}

// A cohomology object: a genuine group plus heart-only cokernels.
struct ExtResult {
  SortedMultiset<HeartToken> heart;
  FlcaGroup group;

  bool is_group() const noexcept { return heart.empty(); }
  friend bool operator==(const ExtResult&, const ExtResult&) = default;
};

inline std::string to_string(const ExtResult& r) {
  if (r.is_group()) return to_string(r.group);
  std::string s;
  for (const auto& [t, c] : r.heart) {
    if (!s.empty()) s += " + ";
    s += detail::render_term(to_string(t), c, 0);
  }
  if (!r.group.is_zero()) s += " + " + to_string(r.group);
  return s;
}

// H^n of a split complex. Both differentials of E and E* are injective, so
// each contributes only a heart token, in its upper degree.
inline ExtResult cohomology(std::int64_t n, const DerivedObject& d) {
  ExtResult r;
  for (const auto& [t, c] : d.terms()) {
    if (const Atom* a = std::get_if<Atom>(&t.object)) {
      if (t.degree() == n) r.group += FlcaGroup(*a, c);
    } else if (std::holds_alternative<EComplex>(t.object)) {
      if (1 - t.shift == n) r.heart.add(HeartToken::CokQtoAfin, c);
    } else {
      if (-t.shift == n) r.heart.add(HeartToken::CokAfinToSol, c);
    }
  }
  return r;
}

inline ExtResult ext(std::int64_t n, const GradedObject& x, const GradedObject& y) {
  return cohomology(n, rhom(x, y));
}

inline ExtResult ext(std::int64_t n, const FlcaGroup& x, const FlcaGroup& y) {
  return ext(n, embed(x), embed(y));
}

}  // namespace flca
