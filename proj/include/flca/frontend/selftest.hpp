#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../flca.hpp"
#include "../testing/finite_abelian.hpp"
#include "evaluate.hpp"
#include "table.hpp"

namespace flca::frontend {

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string note;            // extra information, e.g. the selected formula
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      passed = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

namespace selftest {

inline std::vector<Atom> sample_atoms() { return table_atoms({2, 3}, {1, 2}, true); }

inline SuiteResult duality() {
  SuiteResult r{"duality"};
  for (const Atom& a : sample_atoms()) {
    r.check(dual(dual(a)) == a, "dual dual " + to_string(a));
    for (const Atom& b : sample_atoms())
      r.check(atom_rhom(a, b) == atom_rhom(dual(b), dual(a)), "rhom(" + to_string(a) + ", " + to_string(b) + ")");
  }
  return r;
}

inline SuiteResult degrees() {
  SuiteResult r{"degrees"};
  for (const Atom& a : sample_atoms())
    for (const Atom& b : sample_atoms()) {
      const std::string pair = "(" + to_string(a) + ", " + to_string(b) + ")";
      for (std::int64_t n = -3; n <= 4; ++n)
        if (n != 0 && n != 1) r.check(ext(n, a, b) == ExtResult{}, "ext " + std::to_string(n) + pair);
      r.check(ext(0, a, b) == ExtResult{{}, hom(a, b)}, "ext0 = hom " + pair);
    }
  return r;
}

inline SuiteResult monoidal() {
  SuiteResult r{"monoidal"};
  const auto atoms = sample_atoms();
  const FlcaGroup unit = Atom::integers();
  for (const Atom& a : atoms) {
    r.check(tensor(unit, a) == FlcaGroup(a), "unit " + to_string(a));
    r.check(derived_tensor(unit, a) == to_derived(FlcaGroup(a)), "derived unit " + to_string(a));
    for (const Atom& b : atoms) {
      const FlcaGroup ab = tensor(a, b);
      r.check(ab == tensor(b, a), "commutativity " + to_string(a) + ", " + to_string(b));
      r.check(derived_tensor(a, b) == derived_tensor(b, a), "derived commutativity");
      for (const Atom& c : atoms) {
        const std::string t = to_string(a) + ", " + to_string(b) + ", " + to_string(c);
        r.check(tensor(ab, c) == tensor(a, tensor(b, c)), "associativity " + t);
        r.check(hom(ab, c) == hom(a, hom(b, c)), "adjunction " + t);
      }
    }
  }
  return r;
}

inline testing::FiniteAbelian as_finite(const FlcaGroup& g) {
  std::vector<std::uint64_t> orders;
  for (const auto& [a, c] : g.atoms()) {
    if (a.family() != Family::FinCyc) throw InvariantViolation(to_string(g) + " is not finite");
    for (std::uint64_t i = 0; i < c; ++i) orders.push_back(a.order());
  }
  return testing::FiniteAbelian(orders);
}

inline std::vector<Atom> small_cyclic_atoms(std::uint64_t max_order) {
  std::vector<Atom> out;
  for (std::uint64_t p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t n = 1; q <= max_order; ++n, q *= p) out.push_back(Atom::cyclic(Prime(p), n));
  }
  return out;
}

inline SuiteResult finite() {
  SuiteResult r{"finite"};
  const auto atoms = small_cyclic_atoms(64);
  for (const Atom& a : atoms)
    for (const Atom& b : atoms) {
      const auto ga = as_finite(a), gb = as_finite(b);
      const std::string pair = "(" + to_string(a) + ", " + to_string(b) + ")";
      const ExtResult e1 = ext(1, a, b);
      r.check(testing::torsion_profile(as_finite(hom(a, b))) == testing::hom_profile(ga, gb), "hom " + pair);
      r.check(e1.is_group() && testing::torsion_profile(as_finite(e1.group)) == testing::ext1_profile(ga, gb),
              "ext1 " + pair);
      const auto g = testing::FiniteAbelian({std::gcd(a.order(), b.order())});
      r.check(testing::torsion_profile(as_finite(tensor(a, b))) == testing::torsion_profile(g), "tensor " + pair);
    }
  return r;
}

inline SuiteResult k0mul() {
  SuiteResult r{"k0mul"};
  for (const Atom& a : sample_atoms())
    for (const Atom& b : sample_atoms())
      r.check(mul(k0_of(a), k0_of(b)) == k0_of_derived(derived_tensor(FlcaGroup(a), FlcaGroup(b))),
              "[" + to_string(a) + "][" + to_string(b) + "]");
  return r;
}

inline K0Class random_k0(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  std::uniform_int_distribution<int> n_ex(0, 4);
  static constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPrimes) - 1);
  PrimeIndexed<IntPair> finite(IntPair{coord(rng), coord(rng)});
  for (int i = n_ex(rng); i > 0; --i) finite.set(kPrimes[pick(rng)], IntPair{coord(rng), coord(rng)});
  return K0Class(IntPair{coord(rng), coord(rng)}, finite);
}

inline SuiteResult ring(std::size_t samples = 1000) {
  SuiteResult r{"ring"};
  std::mt19937_64 rng(20261017);
  const K0Class one = k0_unit();
  const AdelicCoords ones(IntPair{1, 1}, PrimeIndexed<IntPair>(IntPair{1, 1}));
  r.check(to_adelic(one) == ones, "unit has all-ones adelic coordinates");
  for (std::size_t i = 0; i < samples; ++i) {
    const K0Class x = random_k0(rng), y = random_k0(rng), z = random_k0(rng);
    r.check(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity");
    r.check(mul(x, y) == mul(y, x), "commutativity");
    r.check(mul(one, x) == x, "unit");
    r.check(mul(x, y + z) == mul(x, y) + mul(x, z), "distributivity");
    r.check(from_adelic(to_adelic(x)) == x, "from_adelic . to_adelic");
    const AdelicCoords ax = to_adelic(x);
    r.check(to_adelic(from_adelic(ax)) == ax, "to_adelic . from_adelic");
  }
  return r;
}

inline SuiteResult involution_witness() {
  SuiteResult r{"involution"};
  const K0Class t = k0_of(Atom::circle()), z = k0_of(Atom::integers());
  const K0Class lhs = involution(mul(t, t));
  const K0Class rhs = mul(involution(t), involution(t));
  r.check(lhs == -z, "involution([T]*[T]) = -[Z]");
  r.check(rhs == z, "involution[T] * involution[T] = [Z]");
  r.check(lhs != rhs, "involution is not multiplicative");
  for (const Atom& a : sample_atoms())
    r.check(k0_of(dual(a)) == involution(k0_of(a)), "[dual " + to_string(a) + "]");
  return r;
}

inline SuiteResult resolutions() {
  SuiteResult r{"resolutions"};
  auto all_in = [](const FlcaGroup& g, bool injective) {
    for (const auto& [a, c] : g.atoms()) {
      const PropertyRecord p = classify_atom(a);
      if (injective ? !p.in_I : !p.in_P) return false;
    }
    return true;
  };
  for (const Atom& a : sample_atoms()) {
    const Resolution inj = resolve_injective(a), proj = resolve_projective(a);
    const std::string s = to_string(a);
    r.check(all_in(inj.left, true) && all_in(inj.right, true), "injective entries in I: " + s);
    r.check(all_in(proj.left, false) && all_in(proj.right, false), "projective entries in P: " + s);
    r.check(k0_of(a) == k0_of(inj.left) - k0_of(inj.right), "injective Euler relation: " + s);
    r.check(k0_of(a) == k0_of(proj.right) - k0_of(proj.left), "projective Euler relation: " + s);
    const Resolution dual_inj = resolve_injective(dual(a));
    r.check(dual(proj.left) == dual_inj.right && dual(proj.right) == dual_inj.left, "resolution duality: " + s);
  }
  return r;
}

inline SuiteResult left_inverse() {
  SuiteResult r{"leftinverse"};
  const LeftInverseReport rep = evaluate_left_inverses();
  r.check(rep.literal_ok != rep.corrected_ok, "exactly one formula is a left inverse");
  const LeftInverseFormula winner = rep.corrected_ok ? LeftInverseFormula::Corrected : LeftInverseFormula::Literal;
  r.note = "winner: " + to_string(winner);
  if (!rep.literal_failures.empty()) r.note += "; literal formula fails on " + rep.literal_failures.front();
  for (const Atom& a : table_atoms({2, 3, 5}, {1, 2, 3}, true))
    r.check(k0_from_invariants(a, winner) == k0_of(a), "k0_from_invariants " + to_string(a));
  return r;
}

// The Afin row and column, frozen in the table, must equal the A entries
// minus the R entries under A = R + Afin.
inline SuiteResult finite_adeles() {
  SuiteResult r{"afin"};
  const Atom A = Atom::adeles(), R = Atom::reals(), Afin = Atom::finite_adeles();
  auto split = [](const DerivedObject& d) {
    DerivedObject out;
    for (const auto& [t, c] : d.terms()) {
      const Atom* a = std::get_if<Atom>(&t.object);
      if (a && a->family() == Family::Adele) {
        out += DerivedObject(Indecomposable(Atom::reals()), t.shift, c);
        out += DerivedObject(Indecomposable(Atom::finite_adeles()), t.shift, c);
      } else {
        out += DerivedObject(t.object, t.shift, c);
      }
    }
    return out;
  };
  for (const Atom& b : sample_atoms()) {
    const auto by_row = split(atom_rhom(A, b)).minus(split(atom_rhom(R, b)));
    r.check(by_row.has_value() && *by_row == split(atom_rhom(Afin, b)), "row Afin, column " + to_string(b));
    const auto by_col = split(atom_rhom(b, A)).minus(split(atom_rhom(b, R)));
    r.check(by_col.has_value() && *by_col == split(atom_rhom(b, Afin)), "column Afin, row " + to_string(b));
  }
  return r;
}

inline SuiteResult objects() {
  SuiteResult r{"objects"};
  for (const Atom& a : sample_atoms()) {
    const FlcaGroup x(a);
    const Filtration f = filtration(x), fd = filtration(dual(x));
    r.check(fd.part_Z == dual(f.part_S1) && fd.part_S1 == dual(f.part_Z), "filtration duality " + to_string(a));
    const RankProfile rp = ranks(x), rd = ranks(dual(x));
    r.check(rd.z_rank == rp.s1_rank && rd.s1_rank == rp.z_rank &&
                rd.p_data == rp.p_data.map([](const IntPair& v) { return v.swapped(); }),
            "rank duality " + to_string(a));
    const PropertyRecord p = classify_atom(a);
    r.check(!p.in_I || (p.divisible && f.part_Z.is_zero()), "I-objects have no Z part " + to_string(a));
    r.check(!p.in_P || (p.codivisible && f.part_S1.is_zero()), "P-objects have no S1 part " + to_string(a));
    r.check(hom(x, Atom::reals()).count(Atom::reals()) == rp.z_rank, "z_rank = dim Hom(-, R) " + to_string(a));
    r.check(hom(Atom::reals(), x).count(Atom::reals()) == rp.s1_rank, "s1_rank = dim Hom(R, -) " + to_string(a));
  }
  return r;
}

inline SuiteResult roundtrip() {
  SuiteResult r{"roundtrip"};
  const auto atoms = sample_atoms();
  for (const Atom& a : atoms)
    for (const Atom& b : atoms) {
      const DerivedObject d = atom_rhom(a, b);
      if (contains_e(d)) continue;
      const Value v = d;
      r.check(same_value(evaluate(canonical(v)), v), "parse(format(" + canonical(v) + "))");
      const Value g = hom(a, b) + FlcaGroup(a);
      r.check(same_value(evaluate(canonical(g)), g), "parse(format(" + canonical(g) + "))");
    }
  return r;
}

struct Suite {
  std::string name;
  std::function<SuiteResult()> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"duality", duality},         {"degrees", degrees},     {"monoidal", monoidal},
      {"finite", finite},           {"k0mul", k0mul},         {"ring", [] { return ring(); }},
      {"involution", involution_witness}, {"resolutions", resolutions}, {"leftinverse", left_inverse},
      {"afin", finite_adeles},      {"objects", objects},     {"roundtrip", roundtrip},
  };
  return all;
}

}  // namespace selftest
}  // namespace flca::frontend
