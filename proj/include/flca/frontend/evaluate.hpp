#pragma once

#include <string>
#include <string_view>

#include "../error.hpp"
#include "../flca.hpp"
#include "parser.hpp"
#include "value.hpp"

namespace flca::frontend {

namespace detail {

[[noreturn]] inline void type_error(Func f, const std::string& what) {
  throw TypeError(std::string(info(f).name) + ": " + what);
}

inline FlcaGroup as_group(Func f, const Value& v) {
  if (const auto* g = std::get_if<FlcaGroup>(&v)) return *g;
  type_error(f, "expected a group, got " + kind_name(v));
}

// Groups and E-free derived values are accepted as split complexes.
inline GradedObject as_graded(Func f, const Value& v) {
  if (const auto* g = std::get_if<FlcaGroup>(&v)) return embed(*g);
  if (const auto* d = std::get_if<DerivedObject>(&v)) {
    if (auto g = to_graded(*d)) return *g;
    type_error(f, "arguments containing E or E* are not supported");
  }
  type_error(f, "expected a group or complex, got " + kind_name(v));
}

inline K0Class as_k0(Func f, const Value& v) {
  if (const auto* k = std::get_if<K0Class>(&v)) return *k;
  if (const auto* g = std::get_if<FlcaGroup>(&v)) return k0_of(*g);
  if (const auto* d = std::get_if<DerivedObject>(&v)) return k0_of_derived(*d);
  type_error(f, "expected a group, complex or K0 class, got " + kind_name(v));
}

inline bool has_property(const std::string& name, const FlcaGroup& x) {
  const PropertyRecord r = classify(x);
  if (name == "compact") return r.compact;
  if (name == "discrete") return r.discrete;
  if (name == "connected") return r.connected;
  if (name == "typeZ") return is_of_type(x, TypeClass::TypeZ);
  if (name == "typeS1") return is_of_type(x, TypeClass::TypeS1);
  if (name == "typeA") return is_of_type(x, TypeClass::TypeA);
  if (name == "divisible") return r.divisible;
  if (name == "strictly_divisible") return r.strictly_divisible;
  if (name == "codivisible") return r.codivisible;
  if (name == "in_I") return r.in_I;
  if (name == "in_P") return r.in_P;
  if (name == "toptors") return r.topological_torsion;
  if (name == "pgroup") return x.is_zero() || r.p_group_for.has_value();
  throw InvariantViolation("unknown property " + name);
}

}  // namespace detail

inline Value evaluate(const Expr& e) {
  using detail::as_graded;
  using detail::as_group;
  using detail::as_k0;
  switch (e.kind) {
    case Expr::Kind::Literal: return e.literal;
    case Expr::Kind::Integer:
    case Expr::Kind::Property: throw InvariantViolation("bare argument token evaluated");
    case Expr::Kind::Sum: {
      FlcaGroup g;
      DerivedObject d;
      bool derived = false;
      for (const auto& c : e.children) {
        const Value v = evaluate(c);
        if (const auto* x = std::get_if<FlcaGroup>(&v)) {
          g += *x;
        } else if (const auto* y = std::get_if<DerivedObject>(&v)) {
          d += *y;
          derived = true;
        } else {
          throw TypeError("+: cannot add a value of kind " + kind_name(v));
        }
      }
      if (!derived) return g;
      return d + to_derived(g);
    }
    case Expr::Kind::Repeat: {
      const Value v = evaluate(e.children.front());
      const auto k = static_cast<std::uint64_t>(e.integer);
      if (const auto* g = std::get_if<FlcaGroup>(&v)) return g->repeated(k);
      if (const auto* d = std::get_if<DerivedObject>(&v)) return d->repeated(k);
      throw TypeError("^: cannot repeat a value of kind " + kind_name(v));
    }
    case Expr::Kind::Shift: {
      const Value v = evaluate(e.children.front());
      if (const auto* g = std::get_if<FlcaGroup>(&v)) return to_derived(embed(*g, e.integer));
      if (const auto* d = std::get_if<DerivedObject>(&v)) return d->shifted(e.integer);
      throw TypeError("[n]: cannot shift a value of kind " + kind_name(v));
    }
    case Expr::Kind::Apply: break;
  }

  const Func f = e.func;
  const auto& args = e.children;
  auto arg = [&](std::size_t i) { return evaluate(args[i]); };
  switch (f) {
    case Func::Dual: {
      const Value v = arg(0);
      if (const auto* g = std::get_if<FlcaGroup>(&v)) return dual(*g);
      if (const auto* d = std::get_if<DerivedObject>(&v)) return dual_derived(*d);
      if (const auto* k = std::get_if<K0Class>(&v)) return involution(*k);
      detail::type_error(f, "cannot dualize a value of kind " + kind_name(v));
    }
    case Func::Hom: return hom(as_group(f, arg(0)), as_group(f, arg(1)));
    case Func::Tensor: return tensor(as_group(f, arg(0)), as_group(f, arg(1)));
    case Func::Rhom: return rhom(as_graded(f, arg(0)), as_graded(f, arg(1)));
    case Func::Dtensor: return derived_tensor(as_graded(f, arg(0)), as_graded(f, arg(1)));
    case Func::Ext: return ext(args[0].integer, as_graded(f, arg(1)), as_graded(f, arg(2)));
    case Func::K0: {
      const Value v = arg(0);
      if (std::holds_alternative<K0Class>(v)) detail::type_error(f, "argument is already a K0 class");
      return as_k0(f, v);
    }
    case Func::K0mul: return mul(as_k0(f, arg(0)), as_k0(f, arg(1)));
    case Func::Ranks: return ranks(as_group(f, arg(0)));
    case Func::Filt: return filtration(as_group(f, arg(0)));
    case Func::Pcomp:
      return p_component(as_group(f, arg(0)), Prime(static_cast<std::uint64_t>(args[1].integer)));
    case Func::ResI: return resolve_injective(as_group(f, arg(0)));
    case Func::ResP: return resolve_projective(as_group(f, arg(0)));
    case Func::Is: return detail::has_property(args[0].name, as_group(f, arg(1)));
  }
  throw InvariantViolation("unhandled function");
}

inline Value evaluate(std::string_view input) { return evaluate(parse(input)); }

// Group and derived values compare equal when the derived value is the group in degree 0.
inline bool same_value(const Value& a, const Value& b) {
  auto as_derived = [](const Value& v) -> std::optional<DerivedObject> {
    if (const auto* g = std::get_if<FlcaGroup>(&v)) return to_derived(*g);
    if (const auto* d = std::get_if<DerivedObject>(&v)) return *d;
    return std::nullopt;
  };
  auto da = as_derived(a), db = as_derived(b);
  if (da && db) return *da == *db;
  return a == b;
}

}  // namespace flca::frontend
