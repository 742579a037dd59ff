#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "../derived.hpp"
#include "../k0.hpp"
#include "../structure.hpp"

namespace flca::frontend {

using Value = std::variant<FlcaGroup, DerivedObject, K0Class, RankProfile, Filtration, ExtResult,
                           Resolution, bool>;

inline std::string kind_name(const Value& v) {
  struct {
    std::string operator()(const FlcaGroup&) const { return "group"; }
    std::string operator()(const DerivedObject&) const { return "derived"; }
    std::string operator()(const K0Class&) const { return "k0"; }
    std::string operator()(const RankProfile&) const { return "ranks"; }
    std::string operator()(const Filtration&) const { return "filtration"; }
    std::string operator()(const ExtResult&) const { return "ext"; }
    std::string operator()(const Resolution&) const { return "resolution"; }
    std::string operator()(bool) const { return "bool"; }
  } visitor;
  return std::visit(visitor, v);
}

// Canonical one-line serialization.
inline std::string canonical(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>)
          return x ? "true" : "false";
        else
          return to_string(x);
      },
      v);
}

// Canonical serialization plus a gloss for E / E* summands.
inline std::string render_text(const Value& v) {
  std::string s = canonical(v);
  if (const auto* d = std::get_if<DerivedObject>(&v)) {
    const auto notes = describe_e_terms(*d);
    if (notes.empty()) return s;
    if (notes.size() == 1 && d->terms().entries().size() == 1 && d->terms().total() == 1) {
      // "E = [Q > Afin] ..." -> "(= [Q > Afin] ...)"
      const auto eq = notes.front().find(" = ");
      return s + "  (= " + notes.front().substr(eq + 3) + ")";
    }
    std::string joined;
    for (const auto& n : notes) joined += (joined.empty() ? "" : "; ") + n;
    return s + "  (" + joined + ")";
  }
  return s;
}

using Json = nlohmann::ordered_json;

inline Json pair_json(const IntPair& p) { return Json::array({p.first, p.second}); }

inline Json exceptions_json(const PrimeIndexed<IntPair>& f) {
  Json ex = Json::object();
  for (const auto& [p, v] : f.exceptions()) ex[std::to_string(p)] = pair_json(v);
  return ex;
}

inline Json to_json(const K0Class& x) {
  return Json{{"at_infinity", pair_json(x.at_infinity())},
              {"default", pair_json(x.finite().fallback())},
              {"exceptions", exceptions_json(x.finite())}};
}

inline Json value_json(const Value& v) {
  if (const auto* k = std::get_if<K0Class>(&v)) return to_json(*k);
  if (const auto* r = std::get_if<RankProfile>(&v))
    return Json{{"z_rank", r->z_rank},
                {"s1_rank", r->s1_rank},
                {"default", pair_json(r->p_data.fallback())},
                {"exceptions", exceptions_json(r->p_data)}};
  if (const auto* f = std::get_if<Filtration>(&v))
    return Json{{"S1", to_string(f->part_S1)}, {"A", to_string(f->part_A)}, {"Z", to_string(f->part_Z)},
                {"R", to_string(f->part_R)},   {"toptors", to_string(f->part_toptors)}};
  if (const auto* r = std::get_if<Resolution>(&v))
    return Json{{"type", r->kind == ResolutionKind::Injective ? "injective" : "projective"},
                {"left", to_string(r->left)},
                {"right", to_string(r->right)}};
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  return canonical(v);
}

// {"kind": ..., "value": ...}; structured kinds also carry their text form.
inline Json to_json(const Value& v) {
  Json j{{"kind", kind_name(v)}, {"value", value_json(v)}};
  if (std::holds_alternative<K0Class>(v) || std::holds_alternative<RankProfile>(v) ||
      std::holds_alternative<Filtration>(v) || std::holds_alternative<Resolution>(v))
    j["text"] = canonical(v);
  return j;
}

}  // namespace flca::frontend
