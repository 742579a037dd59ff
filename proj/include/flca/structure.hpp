#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "group.hpp"
#include "prime_indexed.hpp"

namespace flca {

enum class TypeClass : std::uint8_t { TypeZ, TypeS1, TypeA };

inline std::string to_string(TypeClass t) {
  switch (t) {
    case TypeClass::TypeZ: return "Z";
    case TypeClass::TypeS1: return "S1";
    case TypeClass::TypeA: return "A";
  }
  return "?";
}

struct PropertyRecord {
  bool compact = false;
  bool discrete = false;
  bool connected = false;
  TypeClass type_class = TypeClass::TypeA;
  bool divisible = false;
  bool strictly_divisible = false;
  bool codivisible = false;
  bool in_I = false;
  bool in_P = false;
  bool topological_torsion = false;
  std::optional<std::uint64_t> p_group_for;

  friend bool operator==(const PropertyRecord&, const PropertyRecord&) = default;
};

inline TypeClass type_class(Family f) {
  switch (f) {
    case Family::Int:
    case Family::Rat: return TypeClass::TypeZ;
    case Family::Circle:
    case Family::Solenoid: return TypeClass::TypeS1;
    default: return TypeClass::TypeA;
  }
}

inline PropertyRecord classify_atom(const Atom& a) {
  const Family f = a.family();
  PropertyRecord r;
  r.type_class = type_class(f);
  r.compact = f == Family::FinCyc || f == Family::ProInt || f == Family::Circle || f == Family::Solenoid;
  r.discrete = f == Family::Int || f == Family::Rat || f == Family::FinCyc || f == Family::Pruefer;
  r.connected = f == Family::Real || f == Family::Circle || f == Family::Solenoid;
  r.divisible = f != Family::Int && f != Family::FinCyc && f != Family::ProInt;
  // Multiplication by p has finite kernel on every atom, so surjective implies strict.
  r.strictly_divisible = r.divisible;
  const Family d = dual(a).family();
  r.codivisible = d != Family::Int && d != Family::FinCyc && d != Family::ProInt;
  r.in_I = r.divisible && r.type_class != TypeClass::TypeZ;
  r.in_P = r.codivisible && r.type_class != TypeClass::TypeS1;
  r.topological_torsion = a.local() || f == Family::FinAdele;
  if (a.local()) r.p_group_for = a.prime_value();
  return r;
}

// Properties of a direct sum: each flag holds iff it holds for every summand.
// The zero group is a p-group for every p; p_group_for is left empty for it.
inline PropertyRecord classify(const FlcaGroup& x) {
  PropertyRecord r{true, true, true, TypeClass::TypeA, true, true, true, true, true, true, std::nullopt};
  std::optional<TypeClass> common_type;
  bool mixed_type = false;
  bool single_prime = true;
  for (const auto& [a, c] : x.atoms()) {
    const PropertyRecord q = classify_atom(a);
    r.compact &= q.compact;
    r.discrete &= q.discrete;
    r.connected &= q.connected;
    r.divisible &= q.divisible;
    r.strictly_divisible &= q.strictly_divisible;
    r.codivisible &= q.codivisible;
    r.in_I &= q.in_I;
    r.in_P &= q.in_P;
    r.topological_torsion &= q.topological_torsion;
    if (!common_type) common_type = q.type_class;
    else if (*common_type != q.type_class) mixed_type = true;
    if (!q.p_group_for || (r.p_group_for && *r.p_group_for != *q.p_group_for)) single_prime = false;
    else r.p_group_for = q.p_group_for;
  }
  if (!single_prime) r.p_group_for.reset();
  if (common_type && !mixed_type) r.type_class = *common_type;
  return r;
}

// True iff every summand has the given type (vacuously true for 0).
inline bool is_of_type(const FlcaGroup& x, TypeClass t) {
  for (const auto& [a, c] : x.atoms())
    if (type_class(a.family()) != t) return false;
  return true;
}

struct Filtration {
  FlcaGroup part_S1;
  FlcaGroup part_A;
  FlcaGroup part_Z;
  FlcaGroup part_R;
  FlcaGroup part_toptors;

  friend bool operator==(const Filtration&, const Filtration&) = default;
};

// The chain X_S1 c X_{S1+A} c X with subquotients of type S1, A, Z; the type-A
// part further splits into its vector part and its topological torsion part.
inline Filtration filtration(const FlcaGroup& x) {
  Filtration f;
  for (const auto& [a, c] : x.atoms()) {
    const FlcaGroup term(a, c);
    switch (type_class(a.family())) {
      case TypeClass::TypeS1: f.part_S1 += term; break;
      case TypeClass::TypeZ: f.part_Z += term; break;
      case TypeClass::TypeA:
        f.part_A += term;
        if (a.family() == Family::Real) {
          f.part_R += term;
        } else if (a.family() == Family::Adele) {
          f.part_R += FlcaGroup(Atom::reals(), c);
          f.part_toptors += FlcaGroup(Atom::finite_adeles(), c);
        } else {
          f.part_toptors += term;
        }
        break;
    }
  }
  return f;
}

// p_data.at(p) = (ker_exp, coker_exp) for multiplication by p.
struct RankProfile {
  std::uint64_t z_rank = 0;
  std::uint64_t s1_rank = 0;
  PrimeIndexed<IntPair> p_data;

  RankProfile& operator+=(const RankProfile& o) {
    z_rank += o.z_rank;
    s1_rank += o.s1_rank;
    p_data = zip(p_data, o.p_data, [](const IntPair& a, const IntPair& b) { return a + b; });
    return *this;
  }
  friend RankProfile operator+(RankProfile a, const RankProfile& b) { return a += b; }
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

inline RankProfile atom_ranks(const Atom& a) {
  RankProfile r;
  auto at_prime = [&](IntPair v) { r.p_data.set(a.prime_value(), v); };
  switch (a.family()) {
    case Family::Int: r.z_rank = 1; r.p_data = PrimeIndexed<IntPair>({0, 1}); break;
    case Family::Rat: r.z_rank = 1; break;
    case Family::Real: r.z_rank = 1; r.s1_rank = 1; break;
    case Family::Circle: r.s1_rank = 1; r.p_data = PrimeIndexed<IntPair>({1, 0}); break;
    case Family::Solenoid: r.s1_rank = 1; break;
    case Family::Adele: r.z_rank = 1; r.s1_rank = 1; break;
    case Family::FinAdele: break;
    case Family::FinCyc: at_prime({1, 1}); break;
    case Family::ProInt: at_prime({0, 1}); break;
    case Family::PAdic: break;
    case Family::Pruefer: at_prime({1, 0}); break;
  }
  return r;
}

inline RankProfile ranks(const FlcaGroup& x) {
  RankProfile r;
  for (const auto& [a, c] : x.atoms()) {
    const RankProfile one = atom_ranks(a);
    for (std::uint64_t i = 0; i < c; ++i) r += one;
  }
  return r;
}

inline std::string to_string(const RankProfile& r) {
  std::string s = "z=" + std::to_string(r.z_rank) + ", s1=" + std::to_string(r.s1_rank) +
                  "; default " + to_string(r.p_data.fallback());
  bool first = true;
  for (const auto& [p, v] : r.p_data.exceptions()) {
    s += first ? "; " : ", ";
    s += std::to_string(p) + ":" + to_string(v);
    first = false;
  }
  return s;
}

inline std::string to_string(const Filtration& f) {
  return "S1: " + to_string(f.part_S1) + "; A: " + to_string(f.part_A) + " (R: " +
         to_string(f.part_R) + ", toptors: " + to_string(f.part_toptors) + "); Z: " +
         to_string(f.part_Z);
}

// The topological p-torsion part; each adele factor contributes its Q_p.
inline FlcaGroup p_component(const FlcaGroup& x, Prime p) {
  FlcaGroup out;
  for (const auto& [a, c] : x.atoms()) {
    if (a.local() && a.prime() == p)
      out += FlcaGroup(a, c);
    else if (a.family() == Family::Adele || a.family() == Family::FinAdele)
      out += FlcaGroup(Atom::p_adic_numbers(p), c);
  }
  return out;
}

enum class ResolutionKind : std::uint8_t { Injective, Projective };

// Injective: 0 -> X -> left -> right -> 0 with left, right in I.
// Projective: 0 -> left -> right -> X -> 0 with left, right in P.
struct Resolution {
  ResolutionKind kind;
  FlcaGroup left;
  FlcaGroup right;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

inline std::string to_string(const Resolution& r) {
  return std::string(r.kind == ResolutionKind::Injective ? "injective" : "projective") + " [" +
         to_string(r.left) + " -> " + to_string(r.right) + "]";
}

inline std::pair<FlcaGroup, FlcaGroup> injective_resolution_of(const Atom& a) {
  switch (a.family()) {
    case Family::Int: return {Atom::reals(), Atom::circle()};
    case Family::Rat: return {Atom::adeles(), Atom::solenoid()};
    case Family::FinCyc: return {Atom::pruefer(a.prime()), Atom::pruefer(a.prime())};
    case Family::ProInt: return {Atom::p_adic_numbers(a.prime()), Atom::pruefer(a.prime())};
    default: return {a, FlcaGroup()};
  }
}

inline std::pair<FlcaGroup, FlcaGroup> projective_resolution_of(const Atom& a) {
  switch (a.family()) {
    case Family::Circle: return {Atom::integers(), Atom::reals()};
    case Family::Solenoid: return {Atom::rationals(), Atom::adeles()};
    case Family::FinCyc: return {Atom::p_adic_integers(a.prime()), Atom::p_adic_integers(a.prime())};
    case Family::Pruefer: return {Atom::p_adic_integers(a.prime()), Atom::p_adic_numbers(a.prime())};
    default: return {FlcaGroup(), a};
  }
}

inline Resolution resolve_injective(const FlcaGroup& x) {
  Resolution r{ResolutionKind::Injective, {}, {}};
  for (const auto& [a, c] : x.atoms()) {
    auto [i0, i1] = injective_resolution_of(a);
    r.left += i0.repeated(c);
    r.right += i1.repeated(c);
  }
  return r;
}

inline Resolution resolve_projective(const FlcaGroup& x) {
  Resolution r{ResolutionKind::Projective, {}, {}};
  for (const auto& [a, c] : x.atoms()) {
    auto [p1, p0] = projective_resolution_of(a);
    r.left += p1.repeated(c);
    r.right += p0.repeated(c);
  }
  return r;
}

}  // namespace flca
