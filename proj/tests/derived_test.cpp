#include <gtest/gtest.h>

#include "flca/derived.hpp"
#include "flca/frontend/evaluate.hpp"
#include "flca/hom_tensor.hpp"
#include "test_support.hpp"

using namespace flca;

namespace {

const Prime p2(2), p3(3), p5(5);

DerivedObject split_adeles(const DerivedObject& d) {
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
}

Atom atom_named(const std::string& s) {
  const auto v = frontend::evaluate(s);
  const auto& g = std::get<FlcaGroup>(v);
  if (g.atoms().entries().size() != 1) throw std::runtime_error(s + " is not an atom");
  return g.atoms().entries().front().first;
}

}  // namespace

TEST(AtomRhom, Examples) {
  EXPECT_EQ(to_string(atom_rhom(Atom::finite_adeles(), Atom::circle())), "Afin");
  EXPECT_EQ(to_string(atom_rhom(Atom::p_adic_integers(p3), Atom::p_adic_numbers(p5))), "0");
  EXPECT_EQ(to_string(atom_rhom(Atom::rationals(), Atom::integers())), "E");
  EXPECT_EQ(to_string(atom_rhom(Atom::circle(), Atom::integers())), "Z[-1]");
  EXPECT_EQ(to_string(atom_rhom(Atom::cyclic(p2, 3), Atom::cyclic(p2, 1))), "Z/2 + Z/2[-1]");
  EXPECT_EQ(to_string(atom_rhom(Atom::finite_adeles(), Atom::integers())), "Afin[-1]");
}

TEST(AtomRhom, MatchesHandTranscribedTable) {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint32_t n : {1, 2, 3}) {
      const auto t = test::load_golden(FLCA_GOLDEN_DIR "/rhom_template.tsv", p, n);
      ASSERT_EQ(t.rows.size(), 10u);
      ASSERT_EQ(t.columns.size(), 10u);
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.columns.size(); ++j)
          EXPECT_EQ(to_string(atom_rhom(atom_named(t.rows[i]), atom_named(t.columns[j]))), t.cells[i][j])
              << "p=" << p << " n=" << n << " (" << t.rows[i] << ", " << t.columns[j] << ")";
    }
}

TEST(AtomRhom, DualitySymmetryIncludingAfin) {
  for (const Atom& a : test::atoms_235())
    for (const Atom& b : test::atoms_235())
      EXPECT_EQ(atom_rhom(a, b), atom_rhom(dual(b), dual(a))) << to_string(a) << ", " << to_string(b);
}

TEST(AtomRhom, DifferentPrimesAreOrthogonal) {
  for (const Atom& a : test::atoms_235())
    for (const Atom& b : test::atoms_235())
      if (a.local() && b.local() && a.prime() != b.prime()) { EXPECT_TRUE(atom_rhom(a, b).is_zero()); }
}

TEST(AtomRhom, FiniteAdelesAreAdelesMinusReals) {
  const Atom A = Atom::adeles(), R = Atom::reals(), Afin = Atom::finite_adeles();
  for (const Atom& b : test::atoms_235()) {
    EXPECT_EQ(split_adeles(atom_rhom(A, b)), split_adeles(atom_rhom(R, b) + atom_rhom(Afin, b))) << to_string(b);
    EXPECT_EQ(split_adeles(atom_rhom(b, A)), split_adeles(atom_rhom(b, R) + atom_rhom(b, Afin))) << to_string(b);
  }
}

TEST(Rhom, ShiftsAndSums) {
  const GradedObject t1(Atom::circle(), 1);
  EXPECT_EQ(to_string(rhom(t1, embed(Atom::integers()))), "Z[-2]");
  EXPECT_EQ(to_string(rhom(embed(Atom::integers()), GradedObject(Atom::circle(), 2))), "T[2]");
  EXPECT_EQ(to_string(rhom(FlcaGroup(Atom::circle(), 2), Atom::integers())), "Z^2[-1]");
  EXPECT_EQ(to_string(rhom(FlcaGroup(Atom::rationals()) + Atom::circle(), Atom::integers())), "Z[-1] + E");
}

TEST(Rhom, ShiftRuleOnAllPairs) {
  for (const Atom& a : test::atoms_23())
    for (const Atom& b : test::atoms_23())
      for (std::int64_t m : {-1, 0, 2})
        for (std::int64_t n : {-2, 0, 1})
          EXPECT_EQ(rhom(GradedObject(a, m), GradedObject(b, n)), atom_rhom(a, b).shifted(n - m));
}

TEST(DualDerived, Examples) {
  EXPECT_EQ(to_string(dual_derived(DerivedObject(Indecomposable(EComplex{}), 1))), "E*[-1]");
  EXPECT_EQ(to_string(dual_derived(DerivedObject(Indecomposable(Atom::integers()), -2))), "T[2]");
  const DerivedObject d = atom_rhom(Atom::circle(), Atom::solenoid()) + atom_rhom(Atom::circle(), Atom::integers());
  EXPECT_EQ(dual_derived(dual_derived(d)), d);
}

TEST(DerivedTensor, Examples) {
  EXPECT_EQ(to_string(derived_tensor(Atom::circle(), Atom::circle())), "T[1]");
  EXPECT_EQ(to_string(derived_tensor(Atom::rationals(), Atom::circle())), "E*");
  EXPECT_EQ(to_string(derived_tensor(Atom::integers(), Atom::adeles())), "A");
  EXPECT_EQ(to_string(derived_tensor(Atom::cyclic(p2, 1), Atom::cyclic(p2, 2))), "Z/2[1] + Z/2");
}

TEST(DerivedTensor, DegreeZeroIsTensor) {
  for (const Atom& a : test::atoms_23())
    for (const Atom& b : test::atoms_23()) {
      const ExtResult h0 = cohomology(0, derived_tensor(a, b));
      if (h0.is_group()) { EXPECT_EQ(h0.group, tensor(a, b)) << to_string(a) << ", " << to_string(b); }
    }
}

TEST(Ext, Examples) {
  EXPECT_EQ(to_string(ext(1, Atom::circle(), Atom::integers())), "Z");
  EXPECT_EQ(to_string(ext(0, Atom::rationals(), Atom::integers())), "0");
  EXPECT_EQ(to_string(ext(1, Atom::rationals(), Atom::integers())), "coker[Q > Afin]");
  EXPECT_EQ(to_string(ext(1, Atom::circle(), Atom::solenoid())), "coker[Q > Afin]");
  EXPECT_EQ(to_string(ext(1, Atom::pruefer(p2), Atom::p_adic_integers(p2))), "Z_2");
  EXPECT_EQ(to_string(cohomology(0, derived_tensor(Atom::rationals(), Atom::circle()))), "coker[Afin > Sol]");
}

TEST(Ext, VanishesOutsideDegreesZeroAndOne) {
  for (const Atom& a : test::atoms_235())
    for (const Atom& b : test::atoms_235()) {
      for (std::int64_t n : {-3, -2, -1, 2, 3, 4}) EXPECT_EQ(ext(n, a, b), ExtResult{});
      EXPECT_EQ(ext(0, a, b), (ExtResult{{}, hom(a, b)}));
    }
}
