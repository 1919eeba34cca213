#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbgg/kostant.hpp"
#include "pbgg/repinfo.hpp"

#include <random>

using namespace pbgg;

namespace {

RatVector weight(std::initializer_list<const char*> coords) {
  RatVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const char* c : coords) v[i++] = parse_rational(c);
  return v;
}

std::vector<IntScalar> coords(std::initializer_list<IntScalar> c) { return c; }

}  // namespace

TEST_CASE("weyl dimension formula") {
  const RootSystem a1 = build_root_system({Series::A, 1});
  CHECK(weyl_dim(a1, weight({"4"})) == 5);
  const RootSystem a2 = build_root_system({Series::A, 2});
  CHECK(weyl_dim(a2, weight({"1", "1"})) == 8);
  const RootSystem c3 = build_root_system({Series::C, 3});
  CHECK(weyl_dim(c3, weight({"1", "0", "0"})) == 6);
  CHECK_THROWS_AS(weyl_dim(a2, weight({"-1", "0"})), input_error);
  CHECK_THROWS_AS(weyl_dim(a2, weight({"1/2", "0"})), input_error);
}

TEST_CASE("levi dimension formula") {
  const RootSystem a3 = build_root_system({Series::A, 3});
  const Parabolic p = make_parabolic(a3, {1, 3});
  CHECK(levi_dim(p, RatVector::Zero(3)) == 1);
  for (long m = 0; m <= 4; ++m) {
    RatVector mu = weight({"0", "0", "0"});
    mu[1] = Rational(m);
    CHECK(levi_dim(p, mu) == m + 1);  // the Levi is A_1
    // crossed coefficients do not matter
    mu[0] = parse_rational("-7/2");
    mu[2] = Rational(11);
    CHECK(levi_dim(p, mu) == m + 1);
  }
  CHECK_THROWS_AS(levi_dim(p, weight({"0", "-1", "0"})), input_error);
  CHECK_THROWS_AS(levi_dim(p, weight({"0", "1/3", "0"})), input_error);

  // product Levi: A3 crossed {2} leaves A_1 x A_1, dimensions multiply
  const Parabolic middle = make_parabolic(a3, {2});
  for (long a = 0; a <= 3; ++a)
    for (long c = 0; c <= 3; ++c) {
      RatVector mu(3);
      mu << Rational(a), parse_rational("-9/4"), Rational(c);
      CHECK(levi_dim(middle, mu) == (a + 1) * (c + 1));
    }
}

TEST_CASE("freudenthal textbook values") {
  const RootSystem a2 = build_root_system({Series::A, 2});
  const MultiplicityTable adjoint = freudenthal(a2, weight({"1", "1"}));
  CHECK(adjoint.total() == 8);
  CHECK(adjoint.weight_to_mult.at(coords({0, 0})) == 2);
  CHECK(adjoint.weight_to_mult.size() == 7);

  const RootSystem a1 = build_root_system({Series::A, 1});
  const MultiplicityTable sym2 = freudenthal(a1, weight({"2"}));
  CHECK(sym2.weight_to_mult.size() == 3);
  for (IntScalar c : {-2, 0, 2}) CHECK(sym2.weight_to_mult.at(coords({c})) == 1);

  const RootSystem c2 = build_root_system({Series::C, 2});
  const MultiplicityTable lambda20 = freudenthal(c2, weight({"0", "1"}));
  CHECK(lambda20.total() == 5);
  CHECK(lambda20.weight_to_mult.at(coords({0, 0})) == 1);
}

TEST_CASE("freudenthal matches the Weyl dimension on random weights") {
  std::mt19937 gen(5);
  int done = 0;
  while (done < 10) {
    const char* names[] = {"A2", "A3", "C2", "C3"};
    const RootSystem rs = build_root_system(parse_algebra(names[done % 4]));
    std::uniform_int_distribution<int> coeff(0, 3);
    RatVector lambda(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) lambda[i] = Rational(coeff(gen));
    if (weyl_dim(rs, lambda) > 2000) continue;
    const MultiplicityTable table = freudenthal(rs, lambda);
    CHECK(table.total() == weyl_dim(rs, lambda));
    ++done;
  }
}

TEST_CASE("freudenthal is invariant under rescaling the form") {
  // Scaling the symmetrizer rescales the invariant form; multiplicities
  // must not move.
  const RootSystem c3 = build_root_system({Series::C, 3});
  const RatVector lambda = weight({"1", "0", "1"});
  const MultiplicityTable reference = freudenthal(c3, lambda);
  for (IntScalar scale : {2, 3}) {
    RootSystem scaled = c3;
    scaled.symmetrizer *= scale;
    RatMatrix da(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        da(i, j) = Rational(scaled.symmetrizer[i] * scaled.cartan(i, j));
    scaled.form = inverse_exact(da);
    CHECK(freudenthal(scaled, lambda).weight_to_mult == reference.weight_to_mult);
  }
}

TEST_CASE("multiplicities are constant on Weyl orbits") {
  std::mt19937 gen(41);
  const RootSystem a3 = build_root_system({Series::A, 3});
  const RatVector lambda = weight({"1", "1", "0"});
  const MultiplicityTable table = freudenthal(a3, lambda);
  std::vector<std::vector<IntScalar>> keys;
  for (const auto& [k, m] : table.weight_to_mult) keys.push_back(k);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> refl(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& key = keys[pick(gen)];
    RatVector mu(3);
    for (int i = 0; i < 3; ++i) mu[i] = Rational(key[static_cast<std::size_t>(i)]);
    std::vector<int> word;
    for (int s = 0; s < 6; ++s) word.push_back(refl(gen));
    const RatVector image = weyl_act(element_from_word(a3, word), mu);
    std::vector<IntScalar> image_key(3);
    for (int i = 0; i < 3; ++i) image_key[static_cast<std::size_t>(i)] = rational_to_int(image[i]);
    CHECK(table.weight_to_mult.at(image_key) == table.weight_to_mult.at(key));
  }
}

TEST_CASE("freudenthal guard") {
  const RootSystem c3 = build_root_system({Series::C, 3});
  CHECK_THROWS_AS(freudenthal(c3, weight({"20", "20", "20"})), resource_error);
}

TEST_CASE("kernel dimensions of Cartan elements") {
  const RootSystem a1 = build_root_system({Series::A, 1});
  CHECK(kernel_dim(a1, weight({"2"}), CartanElement{weight({"0"})}) == 3);
  CHECK(kernel_dim(a1, weight({"2"}), CartanElement{weight({"1"})}) == 1);

  // Adjoint of A2 with X = (1, -1): the zero weight (multiplicity 2) and
  // +-(alpha_1 - alpha_2) pair to zero, so the kernel has dimension 4.
  const RootSystem a2 = build_root_system({Series::A, 2});
  const CartanElement x{weight({"1", "-1"})};
  CHECK(kernel_dim(a2, weight({"1", "1"}), x) == 4);

  // scaling X does not change the kernel
  const CartanElement x3{weight({"-5/2", "5/2"})};
  CHECK(kernel_dim(a2, weight({"1", "1"}), x3) == 4);
  CHECK(kernel_dim(a2, weight({"2", "1"}), x) ==
        kernel_dim(a2, weight({"2", "1"}), x3));
}

TEST_CASE("center characters") {
  const RootSystem c3 = build_root_system({Series::C, 3});
  const CenterCharacter ok = center_character(c3, weight({"2", "1", "0"}), GroupTag::AdjointC);
  CHECK(ok.residue == 0);
  CHECK(ok.integrable);
  const CenterCharacter bad = center_character(c3, weight({"1", "0", "0"}), GroupTag::AdjointC);
  CHECK(bad.residue == 1);
  CHECK_FALSE(bad.integrable);
  CHECK(center_character(c3, RatVector::Zero(3), GroupTag::AdjointC).integrable);

  const RootSystem a3 = build_root_system({Series::A, 3});
  CHECK(center_character(a3, weight({"1", "2", "1"}), GroupTag::AdjointAEven).integrable);
  CHECK_FALSE(center_character(a3, weight({"1", "2", "2"}), GroupTag::AdjointAEven).integrable);

  // su-center: sum of i a_i mod (rank+1)
  const CenterCharacter su = center_character(a3, weight({"1", "0", "1"}), GroupTag::SuCenter, 4);
  CHECK(su.residue == 0);
  CHECK(su.integrable);
  CHECK_FALSE(center_character(a3, weight({"1", "0", "0"}), GroupTag::SuCenter, 4).integrable);

  CHECK_THROWS_AS(center_character(a3, RatVector::Zero(3), GroupTag::AdjointC), input_error);
  CHECK_THROWS_AS(center_character(c3, RatVector::Zero(3), GroupTag::SuCenter, 4), input_error);
  CHECK_THROWS_AS(center_character(a3, RatVector::Zero(3), GroupTag::SuCenter, 5), input_error);
  const RootSystem a4 = build_root_system({Series::A, 4});
  CHECK_THROWS_AS(center_character(a4, RatVector::Zero(4), GroupTag::AdjointAEven), input_error);
}

TEST_CASE("cartan product") {
  const RatVector a = weight({"1", "2"});
  const RatVector b = weight({"0", "3"});
  CHECK(cartan_product(a, RatVector::Zero(2)) == a);
  CHECK(cartan_product(a, b) == cartan_product(b, a));
  CHECK(cartan_product(a, b) == weight({"1", "5"}));

  // The degree-1 homology weight of the contact-projective family is the
  // Cartan product of the degree-0 weight with the (k+1)-st symmetric power
  // direction -(k+1) alpha_1.
  const RootSystem c3 = build_root_system({Series::C, 3});
  const Parabolic p = make_parabolic(c3, {1});
  for (long k = 0; k <= 2; ++k) {
    RatVector lambda = weight({"0", "2", "1"});
    lambda[0] = Rational(k);
    const HomologyTable table = homology_weights(p, lambda);
    IntVector alpha1(3);
    alpha1 << 1, 0, 0;
    const RatVector shift = Rational(-(k + 1)) * root_to_weight_basis(c3, alpha1);
    CHECK(cartan_product(table.degrees[0][0].weight, shift) == table.degrees[1][0].weight);
  }
}
