#include <set>     // for set
#include <string>  // for string
#include <vector>  // for vector

#include <catch2/catch.hpp>

#include "sncat/bicat.hpp"
#include "sncat/errors.hpp"

namespace {
  using sncat::BinaryRelation;
  using sncat::CheckMode;
  using sncat::SetPartition;
  using sncat::TwoCategory;
  using Blocks = std::vector<std::vector<std::size_t>>;

  std::size_t one(TwoCategory const& C, nlohmann::json const& label) {
    return C.find_one_morphism(label);
  }

  std::size_t cell(TwoCategory const& C, nlohmann::json const& label) {
    return C.find_cell(label);
  }

  std::set<std::string> hom_labels(TwoCategory const& C, std::size_t f, std::size_t g) {
    std::set<std::string> result;
    for (auto c : C.hom(f, g)) {
      result.insert(C.cell_label(c).dump());
    }
    return result;
  }

  std::set<std::string> dumps(std::vector<nlohmann::json> const& labels) {
    std::set<std::string> result;
    for (auto const& l : labels) {
      result.insert(l.dump());
    }
    return result;
  }
}  // namespace

TEST_CASE("relation 2-category hom-sets", "[bicat]") {
  auto const A1 = sncat::relation_two_category(1);
  CHECK(A1.one_morphism_count() == 1);
  CHECK(A1.hom(0, 0).size() == 2);

  auto const A2  = sncat::relation_two_category(2);
  auto const eps = one(A2, BinaryRelation::identity(2));
  auto const sig = one(A2, BinaryRelation(2, {{1, 0}, {0, 1}}));
  for (std::size_t f = 0; f < A2.one_morphism_count(); ++f) {
    CHECK(A2.hom(f, f).size() == 4);
    CHECK(A2.in_hom(f, f, A2.id2(f)));
  }
  BinaryRelation const tau(2);
  CHECK(hom_labels(A2, eps, sig) == dumps({tau}));
  CHECK(hom_labels(A2, eps, eps)
        == dumps({BinaryRelation::identity(2), BinaryRelation(2, {{0, 0}}),
                  BinaryRelation(2, {{1, 1}}), tau}));
  CHECK(A2.compose1(sig, sig) == eps);
  CHECK(A2.id1(0) == eps);
  CHECK_THROWS_AS(sncat::relation_two_category(5), sncat::RangeError);
}

TEST_CASE("partition 2-category hom-sets", "[bicat]") {
  auto const B2    = sncat::partition_two_category(2);
  auto const eps   = SetPartition::identity(2);
  auto const sigma = SetPartition(2, Blocks{{0, 3}, {1, 2}});
  auto const tau   = SetPartition::one_block(2);
  auto const e     = one(B2, eps);
  auto const s     = one(B2, sigma);
  CHECK(hom_labels(B2, e, e) == dumps({eps, tau}));
  CHECK(hom_labels(B2, e, s) == dumps({tau}));
  CHECK(hom_labels(B2, s, s) == dumps({sigma, tau}));
  CHECK(B2.id2(s) == cell(B2, sigma));

  auto const B3 = sncat::partition_two_category(3);
  auto const i3 = one(B3, SetPartition::identity(3));
  CHECK(B3.hom(i3, i3).size() == 5);
}

TEST_CASE("axioms hold exhaustively for n <= 2", "[bicat]") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto const& C :
         {sncat::relation_two_category(n), sncat::partition_two_category(n)}) {
      auto const report = check_axioms(C, CheckMode::exhaustive());
      INFO(nlohmann::json(report).dump());
      CHECK(report.passed());
      CHECK(report.find("interchange").checked > 0);
      auto const lemmas = check_translation_bijections(C, CheckMode::exhaustive());
      CHECK(lemmas.passed());
    }
  }
}

TEST_CASE("axioms hold on samples for n = 3", "[bicat]") {
  for (auto const& C :
       {sncat::relation_two_category(3), sncat::partition_two_category(3)}) {
    auto const mode   = CheckMode::sampled(7, 20000);
    auto const report = check_axioms(C, mode);
    CHECK(report.passed());
    CHECK(report.find("interchange").checked == 20000);
    CHECK(check_translation_bijections(C, mode).passed());
    // Same seed, same report.
    CHECK(nlohmann::json(check_axioms(C, mode)) == nlohmann::json(report));
  }
}

TEST_CASE("a corrupted vertical composition is caught", "[bicat]") {
  auto       A2    = sncat::relation_two_category(2);
  auto const eps   = cell(A2, BinaryRelation::identity(2));
  auto const alpha = cell(A2, BinaryRelation(2, {{0, 0}}));
  auto const tau   = cell(A2, BinaryRelation(2));
  REQUIRE(A2.vcomp(eps, alpha) == alpha);
  A2.set_vcomp(eps, alpha, tau);
  auto const report = check_axioms(A2, CheckMode::exhaustive());
  CHECK_FALSE(report.passed());
  auto const& units = report.find("vcomp_units");
  CHECK_FALSE(units.passed);
  CHECK_FALSE(units.witness.is_null());
}

TEST_CASE("translation by sigma maps Hom(eps, eps) onto Hom(sigma, sigma)", "[bicat]") {
  auto const B2    = sncat::partition_two_category(2);
  auto const sigma = SetPartition(2, Blocks{{0, 3}, {1, 2}});
  auto const e     = B2.id1(0);
  auto const s     = one(B2, sigma);
  std::set<std::string> image;
  for (auto c : B2.hom(e, e)) {
    image.insert(B2.cell_label(B2.hcomp(B2.id2(s), c)).dump());
  }
  CHECK(image == hom_labels(B2, s, s));
}

TEST_CASE("ordered monoid 2-categories", "[bicat]") {
  auto const M  = sncat::symmetric_inverse_ordered_monoid(2);
  auto const C  = ordered_monoid_two_category(M);
  auto const e  = one(C, BinaryRelation::identity(2));
  auto const t  = one(C, BinaryRelation(2));
  CHECK(C.hom(t, e).size() == 1);
  CHECK(C.hom(e, t).empty());
  for (std::size_t f = 0; f < C.one_morphism_count(); ++f) {
    CHECK(C.hom(f, f).size() == 1);
  }
  CHECK(check_axioms(C, CheckMode::exhaustive()).passed());

  auto const F  = sncat::factorizable_ordered_monoid(2);
  auto const D  = ordered_monoid_two_category(F);
  auto const fe = one(D, SetPartition::identity(2));
  auto const ft = one(D, SetPartition::one_block(2));
  CHECK(D.hom(fe, ft).size() == 1);
  CHECK(check_axioms(D, CheckMode::exhaustive()).passed());
}

TEST_CASE("non-admissible orders are rejected", "[bicat]") {
  // Z/2 with e <= g: e <= g forces g = eg <= gg = e.
  sncat::OrderedMonoid M;
  M.name    = "Z2";
  M.degree  = 1;
  M.labels  = {"e", "g"};
  M.product = {{0, 1}, {1, 0}};
  M.unit    = 0;
  M.order   = sncat::OrderMatrix(2);
  M.order.set(0, 0);
  M.order.set(1, 1);
  M.order.set(0, 1);
  M.rank = {1, 1};
  CHECK_THROWS_AS(ordered_monoid_two_category(M), sncat::OrderError);
}

TEST_CASE("axiom report JSON", "[bicat]") {
  auto const C = sncat::partition_two_category(1);
  auto const j = nlohmann::json(check_axioms(C, CheckMode::sampled(3, 10)));
  CHECK(j.at("category") == "B");
  CHECK(j.at("n") == 1);
  CHECK(j.at("mode") == "sampled");
  CHECK(j.at("seed") == 3);
  for (auto const& a : j.at("axioms")) {
    CHECK(a.at("status") == "pass");
    CHECK(a.at("witness").is_null());
  }
  auto const k = nlohmann::json(check_axioms(C, CheckMode::exhaustive()));
  CHECK(k.at("seed").is_null());
}
