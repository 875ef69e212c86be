#include <random>  // for mt19937_64
#include <vector>  // for vector

#include <catch2/catch.hpp>

#include "sncat/linear.hpp"
#include "support/oracles.hpp"

namespace {
  using sncat::BinaryRelation;
  using sncat::CompletedCategory;
  using sncat::CompletedOneMorphism;
  using sncat::LinearElement;
  using sncat::LinearTwoCategory;
  using sncat::PointSet;
  using sncat::Rational;
  using sncat::SetPartition;

  LinearTwoCategory linear_A(std::size_t n) {
    return LinearTwoCategory(sncat::relation_two_category(n));
  }

  LinearTwoCategory linear_B(std::size_t n) {
    return LinearTwoCategory(sncat::partition_two_category(n));
  }

  // sum of c * label over Hom(f, f).
  LinearElement combination(LinearTwoCategory const&                               L,
                            std::size_t                                            f,
                            std::vector<std::pair<nlohmann::json, int>> const& terms) {
    auto const&   C = L.category();
    LinearElement x(f, f);
    for (auto const& [label, c] : terms) {
      x.add(C.find_cell(label), c);
    }
    return x;
  }

  // Oracle: alternating sum over all subrelations of rho.
  LinearElement mobius_element(LinearTwoCategory const& L,
                               std::size_t              f,
                               BinaryRelation const&    rho) {
    LinearElement x(f, f);
    auto const    size = rho.size();
    for (auto const& sub : subrelations(rho)) {
      x.add(L.category().find_cell(sub), (size - sub.size()) % 2 == 0 ? 1 : -1);
    }
    return x;
  }

  PointSet subset_of(LinearTwoCategory const& L, CompletedCategory::Object const& o) {
    return L.category().cell_label(o.cell).get<BinaryRelation>().domain();
  }

  BinaryRelation const eps = BinaryRelation::identity(2);
  BinaryRelation const sig(2, {{1, 0}, {0, 1}});
  BinaryRelation const alpha(2, {{0, 0}});
  BinaryRelation const beta(2, {{1, 0}});
  BinaryRelation const gamma_(2, {{0, 1}});
  BinaryRelation const delta(2, {{1, 1}});
  BinaryRelation const tau(2);
}  // namespace

TEST_CASE("dimensions of linearized hom spaces", "[linear]") {
  auto const A2 = linear_A(2);
  auto const e  = A2.category().find_one_morphism(eps);
  CHECK(A2.dimension(e, e) == 4);
  auto const B2 = linear_B(2);
  auto const be = B2.category().find_one_morphism(SetPartition::identity(2));
  auto const bs = B2.category().find_one_morphism(
      SetPartition(2, std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}}));
  CHECK(B2.dimension(be, bs) == 1);
  CHECK(linear_A(1).dimension(0, 0) == 2);
}

TEST_CASE("compositions are bilinear", "[linear]") {
  auto const      L = linear_A(2);
  auto const&     C = L.category();
  std::mt19937_64 rng(9);
  auto            random_element = [&](std::size_t f, std::size_t g) {
    LinearElement x(f, g);
    for (auto c : C.hom(f, g)) {
      x.add(c, Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4));
    }
    return x;
  };
  auto const k = C.one_morphism_count();
  for (std::size_t f = 0; f < k; ++f) {
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t h = 0; h < k; ++h) {
        auto const a  = random_element(f, g);
        auto const a2 = random_element(f, g);
        auto const b  = random_element(g, h);
        Rational const q(2, 3);
        CHECK(L.vcomp(b, a + q * a2) == L.vcomp(b, a) + q * L.vcomp(b, a2));
        auto const c = random_element(h, f);
        CHECK(L.hcomp(c, a + a2) == L.hcomp(c, a) + L.hcomp(c, a2));
        for (auto x : C.hom(f, g)) {
          for (auto y : C.hom(g, h)) {
            CHECK(L.vcomp(L.basis(g, h, y), L.basis(f, g, x))
                  == L.basis(f, h, C.vcomp(y, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("End of the identity is commutative with equal compositions", "[linear]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& L : {linear_A(n), linear_B(n)}) {
      auto const  A  = end_of_identity(L, 0);
      auto const& C  = L.category();
      auto const  id = C.id1(0);
      for (auto x : A.basis) {
        for (auto y : A.basis) {
          REQUIRE(C.hcomp(x, y) == C.vcomp(x, y));
          REQUIRE(C.hcomp(x, y) == C.hcomp(y, x));
          REQUIRE(C.in_hom(id, id, C.hcomp(x, y)));
        }
      }
    }
    CHECK(end_of_identity(linear_A(n), 0).dimension() == std::size_t(1) << n);
  }
  CHECK(end_of_identity(linear_B(2), 0).dimension() == 2);
  CHECK(end_of_identity(linear_B(3), 0).dimension() == 5);
}

TEST_CASE("primitive idempotents for n = 2", "[linear]") {
  auto const A2 = linear_A(2);
  auto const e  = A2.category().id1(0);
  std::vector<LinearElement> got;
  for (auto const& p : primitive_idempotents(A2, end_of_identity(A2, 0))) {
    got.push_back(p.element);
  }
  std::vector<LinearElement> const expected{
      combination(A2, e, {{eps, 1}, {alpha, -1}, {delta, -1}, {tau, 1}}),
      combination(A2, e, {{alpha, 1}, {tau, -1}}),
      combination(A2, e, {{delta, 1}, {tau, -1}}),
      combination(A2, e, {{tau, 1}})};
  CHECK(got == expected);

  auto const B2 = linear_B(2);
  auto const be = B2.category().id1(0);
  got.clear();
  for (auto const& p : primitive_idempotents(B2, end_of_identity(B2, 0))) {
    got.push_back(p.element);
  }
  CHECK(got
        == std::vector<LinearElement>{
            combination(B2, be, {{SetPartition::identity(2), 1},
                                 {SetPartition::one_block(2), -1}}),
            combination(B2, be, {{SetPartition::one_block(2), 1}})});
}

TEST_CASE("primitive idempotents are complete and orthogonal", "[linear]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& L : {linear_A(n), linear_B(n)}) {
      auto const    id    = L.category().id1(0);
      auto const    idems = primitive_idempotents(L, end_of_identity(L, 0));
      LinearElement sum(id, id);
      for (std::size_t s = 0; s < idems.size(); ++s) {
        sum += idems[s].element;
        for (std::size_t t = 0; t < idems.size(); ++t) {
          auto const p = L.vcomp(idems[s].element, idems[t].element);
          REQUIRE(p == (s == t ? idems[s].element : LinearElement(id, id)));
        }
      }
      REQUIRE(sum == L.identity(id));
    }
  }
}

TEST_CASE("sandwiched identities vanish exactly when sigma(X) != Y", "[linear]") {
  for (std::size_t n = 2; n <= 3; ++n) {
    CompletedCategory const K(linear_A(n));
    auto const&             L       = K.linear();
    auto const&             C       = L.category();
    auto const&             objects = K.objects();
    REQUIRE(objects.size() == std::size_t(1) << n);
    for (auto const& p : sncat::symmetric_group(n)) {
      auto const r = p.to_relation();
      auto const f = C.find_one_morphism(r);
      for (std::size_t x = 0; x < objects.size(); ++x) {
        auto const X = subset_of(L, objects[x]);
        for (std::size_t y = 0; y < objects.size(); ++y) {
          auto const Y = subset_of(L, objects[y]);
          auto const s = K.sandwich(y, L.identity(f), x);
          auto const rho = restrict(p, X).to_relation();
          if (oracle::image(r, X) == Y) {
            REQUIRE(s == mobius_element(L, f, rho));
          } else {
            REQUIRE(s.is_zero());
          }
          // Sandwiching twice changes nothing.
          REQUIRE(K.sandwich(y, s, x) == s);
        }
      }
    }
  }
}

TEST_CASE("sandwich examples for n = 2", "[linear]") {
  CompletedCategory const K(linear_A(2));
  auto const&             L = K.linear();
  auto const&             C = L.category();
  auto const e = C.find_one_morphism(eps);
  auto const s = C.find_one_morphism(sig);
  // Objects: X = {1,2}, {1}, {2}, {}.
  CHECK(K.sandwich(1, L.identity(e), 1)
        == combination(L, e, {{alpha, 1}, {tau, -1}}));
  CHECK(K.sandwich(2, L.identity(e), 1).is_zero());
  CHECK(K.sandwich(2, L.identity(s), 1)
        == combination(L, s, {{beta, 1}, {tau, -1}}));
}

TEST_CASE("isomorphism of completed 1-morphisms", "[linear]") {
  CompletedCategory const K2(linear_A(2));
  auto const&             C2 = K2.linear().category();
  auto const e = C2.find_one_morphism(eps);
  auto const s = C2.find_one_morphism(sig);
  CHECK_FALSE(K2.is_isomorphic({0, 0, e}, {0, 0, s}).isomorphic);
  auto const same = K2.is_isomorphic({0, 0, s}, {0, 0, s});
  CHECK(same.isomorphic);
  REQUIRE(same.forward.has_value());
  REQUIRE(same.backward.has_value());

  CompletedCategory const K3(linear_A(3));
  auto const&             L3 = K3.linear();
  auto const&             C3 = L3.category();
  // The transposition (2 3) agrees with the identity on {1}.
  auto const id3 = C3.find_one_morphism(BinaryRelation::identity(3));
  auto const t23 = C3.find_one_morphism(BinaryRelation(3, {{0, 0}, {2, 1}, {1, 2}}));
  std::size_t one_point = sncat::kUndefined;
  for (std::size_t o = 0; o < K3.objects().size(); ++o) {
    if (subset_of(L3, K3.objects()[o]) == PointSet{0}) {
      one_point = o;
    }
  }
  REQUIRE(one_point != sncat::kUndefined);
  CompletedOneMorphism const F{one_point, one_point, id3};
  CompletedOneMorphism const G{one_point, one_point, t23};
  auto const iso = K3.is_isomorphic(F, G);
  REQUIRE(iso.isomorphic);
  REQUIRE(iso.forward.has_value());
  CHECK(L3.vcomp(*iso.backward, *iso.forward) == K3.identity(F));
  CHECK(L3.vcomp(*iso.forward, *iso.backward) == K3.identity(G));
}

TEST_CASE("completed categories: objects, classes and locality", "[linear]") {
  std::vector<std::size_t> const a_objects{2, 4, 8}, a_classes{2, 7, 34};
  std::vector<std::size_t> const b_objects{1, 2, 5}, b_classes{1, 3, 16};
  for (std::size_t n = 1; n <= 3; ++n) {
    CompletedCategory const A(linear_A(n));
    CHECK(A.objects().size() == a_objects[n - 1]);
    CHECK(A.indecomposables().size() == a_classes[n - 1]);
    CHECK(A.is_local());
    CompletedCategory const B(linear_B(n));
    CHECK(B.objects().size() == b_objects[n - 1]);
    CHECK(B.indecomposables().size() == b_classes[n - 1]);
    CHECK(B.is_local());
    for (auto const* K : {&A, &B}) {
      for (auto const& F : K->nonzero_one_morphisms()) {
        REQUIRE(K->end_dimension(F) == 1);
      }
    }
  }
}

TEST_CASE("fiat verdicts", "[linear]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& L : {linear_A(n), linear_B(n)}) {
      auto const report = fiat_check(CompletedCategory(L));
      CHECK(report.fiat);
      CHECK(report.witness.is_null());
      CHECK(report.adjunctions.size() == sncat::symmetric_group(n).size());
      for (auto const& a : report.adjunctions) {
        CHECK(a.triangles);
        CHECK(a.completed_triangles);
        CHECK(a.dual == L.category().inverse(a.one));
      }
      CHECK(report.star.available);
      CHECK(report.star.involutive);
      CHECK(report.star.typing);
      CHECK(report.star.hcomp_contravariant);
      CHECK(report.star.vcomp_contravariant);
    }
  }
  auto const is2 = fiat_check(sncat::symmetric_inverse_ordered_monoid(2));
  CHECK_FALSE(is2.fiat);
  CHECK(is2.witness.at("s") == nlohmann::json(alpha));
  CHECK(is2.witness.at("unit_side_empty") == true);
  auto const f2 = fiat_check(sncat::factorizable_ordered_monoid(2));
  CHECK_FALSE(f2.fiat);
  CHECK(f2.witness.at("s") == nlohmann::json(SetPartition::one_block(2)));
  CHECK(f2.witness.at("counit_side_empty") == true);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK_FALSE(fiat_check(sncat::symmetric_inverse_ordered_monoid(n)).fiat);
  }
  // F*_1 is the trivial group.
  CHECK(fiat_check(sncat::factorizable_ordered_monoid(1)).fiat);
  CHECK_FALSE(fiat_check(sncat::factorizable_ordered_monoid(3)).fiat);
}

TEST_CASE("element JSON uses p/q coefficients", "[linear]") {
  auto const L = linear_B(2);
  auto const e = L.category().id1(0);
  auto const x = combination(L, e, {{SetPartition::identity(2), 1},
                                    {SetPartition::one_block(2), -1}});
  auto const j = L.to_json(x);
  CHECK(j.at("coeffs").at(nlohmann::json(SetPartition::one_block(2)).dump()) == "-1/1");
  CHECK(j.at("coeffs").at(nlohmann::json(SetPartition::identity(2)).dump()) == "1/1");
  CHECK(sncat::to_string(Rational(6, 4)) == "3/2");
}
