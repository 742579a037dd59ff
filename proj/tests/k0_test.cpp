#include <random>

#include <gtest/gtest.h>

#include "flca/k0.hpp"
#include "test_support.hpp"

using namespace flca;

namespace {

const Prime p2(2), p3(3), p5(5);

K0Class K(const FlcaGroup& x) { return k0_of(x); }

// Adelic coordinates read off basis images: at infinity [Z] -> (1,1), [T] -> (0,-1);
// at p, [Z_p] -> (1,1) and [Q_p/Z_p] -> (0,-1); a class at infinity also moves
// every finite place by its s-coordinate.
AdelicCoords adelic_oracle(const K0Class& x) {
  const IntPair inf = x.at_infinity();
  const IntPair z_img{1, 1}, t_img{0, -1};
  const IntPair at_inf = inf.first * z_img + inf.second * t_img;
  auto place = [&](const IntPair& v) {
    const IntPair local = v.first * z_img + v.second * t_img;
    return local + IntPair{at_inf.second, at_inf.second};
  };
  PrimeIndexed<IntPair> finite(place(x.finite().fallback()));
  for (const auto& [p, v] : x.finite().exceptions()) finite.set(p, place(v));
  return AdelicCoords(at_inf, finite);
}

}  // namespace

TEST(K0, Examples) {
  EXPECT_EQ(to_string(K(Atom::integers())), "(1,0); default (0,0)");
  EXPECT_EQ(to_string(K(Atom::reals())), "(1,1); default (0,0)");
  EXPECT_EQ(to_string(K(Atom::rationals())), "(1,0); default (0,1)");
  EXPECT_EQ(to_string(K(Atom::solenoid())), "(0,1); default (1,0)");
  EXPECT_EQ(to_string(K(Atom::finite_adeles())), "(0,0); default (1,1)");
  EXPECT_EQ(to_string(K(Atom::p_adic_numbers(p5))), "(0,0); default (0,0); 5:(1,1)");
  EXPECT_TRUE(K(Atom::cyclic(p3, 2)).is_zero());
  EXPECT_EQ(to_string(K(FlcaGroup(Atom::p_adic_integers(p2), 2) + Atom::pruefer(p3))),
            "(0,0); default (0,0); 2:(2,0), 3:(0,1)");
}

TEST(K0, ExactSequencesHold) {
  // 0 -> Z -> R -> T -> 0, 0 -> Q -> A -> Sol -> 0, 0 -> Z_p -> Q_p -> Q_p/Z_p -> 0,
  // 0 -> Z_p -> Z_p -> Z/p^n -> 0, A = R + Afin.
  EXPECT_EQ(K(Atom::integers()), K(Atom::reals()) - K(Atom::circle()));
  EXPECT_EQ(K(Atom::rationals()), K(Atom::adeles()) - K(Atom::solenoid()));
  for (const Prime& p : {p2, p3, p5}) {
    EXPECT_EQ(K(Atom::p_adic_numbers(p)), K(Atom::p_adic_integers(p)) + K(Atom::pruefer(p)));
    EXPECT_EQ(K(Atom::cyclic(p, 2)), K(Atom::p_adic_integers(p)) - K(Atom::p_adic_integers(p)));
  }
  EXPECT_EQ(K(Atom::adeles()), K(Atom::reals()) + K(Atom::finite_adeles()));
}

TEST(K0, EulerCharacteristicOfE) {
  const DerivedObject e(Indecomposable(EComplex{}));
  EXPECT_EQ(k0_of_derived(e), K(Atom::rationals()) - K(Atom::finite_adeles()));
  EXPECT_EQ(k0_of_derived(dual_derived(e)), K(Atom::solenoid()) - K(Atom::finite_adeles()));
  EXPECT_EQ(k0_of_derived(GradedObject(Atom::integers(), 1)), -K(Atom::integers()));
}

TEST(K0, InvolutionIsDuality) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const FlcaGroup x = test::random_group(rng);
    EXPECT_EQ(involution(K(x)), K(dual(x)));
    EXPECT_EQ(involution(involution(K(x))), K(x));
  }
}

TEST(K0, AdelicCoordinatesMatchBasisImages) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const K0Class x = K(test::random_group(rng)) - K(test::random_group(rng));
    EXPECT_EQ(to_adelic(x), adelic_oracle(x)) << to_string(x);
    EXPECT_EQ(from_adelic(to_adelic(x)), x);
  }
  EXPECT_EQ(to_adelic(k0_unit()), AdelicCoords({1, 1}, PrimeIndexed<IntPair>({1, 1})));
}

TEST(K0, ProductIsDerivedTensor) {
  for (const Atom& a : test::atoms_235())
    for (const Atom& b : test::atoms_235())
      EXPECT_EQ(mul(K(a), K(b)), k0_of_derived(derived_tensor(a, b))) << to_string(a) << ", " << to_string(b);
  const DerivedObject e_dual(Indecomposable(EDualComplex{}));
  EXPECT_EQ(mul(K(Atom::rationals()), K(Atom::circle())), k0_of_derived(e_dual));
}

TEST(K0, RhomClassIsDualOfProductWithDual) {
  for (const Atom& a : test::atoms_23())
    for (const Atom& b : test::atoms_23())
      EXPECT_EQ(k0_of_derived(atom_rhom(a, b)), involution(mul(K(a), involution(K(b)))))
          << to_string(a) << ", " << to_string(b);
}

TEST(K0, InvolutionIsNotMultiplicative) {
  const K0Class t = K(Atom::circle()), z = K(Atom::integers());
  EXPECT_EQ(involution(mul(t, t)), -z);
  EXPECT_EQ(mul(involution(t), involution(t)), z);
}

TEST(LeftInverse, CorrectedFormulaWins) {
  const LeftInverseReport rep = evaluate_left_inverses();
  EXPECT_FALSE(rep.literal_ok);
  EXPECT_TRUE(rep.corrected_ok);
  EXPECT_EQ(select_left_inverse(), LeftInverseFormula::Corrected);
  EXPECT_NE(k0_from_invariants(Atom::integers(), LeftInverseFormula::Literal), K(Atom::integers()));
  ASSERT_FALSE(rep.literal_failures.empty());
  EXPECT_EQ(rep.literal_failures.front(), "Z");
}

TEST(LeftInverse, Examples) {
  EXPECT_EQ(to_string(k0_from_invariants(Atom::p_adic_integers(p5))), "(0,0); default (0,0); 5:(1,0)");
  EXPECT_EQ(k0_from_invariants(Atom::rationals()), K(Atom::rationals()));
}

TEST(LeftInverse, RecoversEveryGroup) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const FlcaGroup x = test::random_group(rng);
    EXPECT_EQ(k0_from_invariants(x), K(x)) << to_string(x);
  }
}
