// Finite strict 2-categories stored as composition tables, the three
// constructions used throughout (the relation and partition 2-categories on
// S_n and the 2-category of an ordered monoid), and exhaustive or sampled
// verification of the 2-category axioms.

#ifndef SNCAT_BICAT_HPP_
#define SNCAT_BICAT_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>      // for vector

#include <nlohmann/json.hpp>

#include "sncat/partitions.hpp"
#include "sncat/poset.hpp"
#include "sncat/relations.hpp"

namespace sncat {

  inline constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

  //! A finite strict 2-category.
  //!
  //! 2-morphisms ("cells") are stored as bare values: the same cell may lie in
  //! many hom-sets, exactly as in the tables of the relation and partition
  //! constructions. A typed 2-morphism is a cell together with the pair (f, g)
  //! of 1-morphisms whose hom-set contains it.
  //!
  //! The two compositions of cells are given by rules evaluated on first use
  //! and memoized. Explicit entries set with set_vcomp / set_hcomp take
  //! precedence over the rules.
  class TwoCategory {
   public:
    struct OneMorphism {
      std::size_t    source;
      std::size_t    target;
      nlohmann::json label;
    };

    TwoCategory(std::string name, std::size_t degree, std::size_t objects);

    // Construction.
    std::size_t add_one_morphism(std::size_t    source,
                                 std::size_t    target,
                                 nlohmann::json label);
    std::size_t add_cell(nlohmann::json label);
    void        set_compose1(std::size_t g, std::size_t f, std::size_t gf);
    void        set_id1(std::size_t object, std::size_t f);
    void        set_id2(std::size_t f, std::size_t cell);
    void set_hom(std::size_t f, std::size_t g, std::vector<std::size_t> cells);
    void set_vcomp(std::size_t beta, std::size_t alpha, std::size_t cell);
    void set_hcomp(std::size_t beta, std::size_t alpha, std::size_t cell);
    using CellRule = std::function<std::size_t(std::size_t, std::size_t)>;
    void set_vcomp_rule(CellRule rule);
    void set_hcomp_rule(CellRule rule);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t object_count() const noexcept {
      return _objects;
    }
    std::size_t one_morphism_count() const noexcept {
      return _one.size();
    }
    OneMorphism const& one_morphism(std::size_t f) const {
      return _one.at(f);
    }
    std::size_t cell_count() const noexcept {
      return _cells.size();
    }
    nlohmann::json const& cell_label(std::size_t c) const {
      return _cells.at(c);
    }
    //! Index of the cell with this label, or kUndefined.
    std::size_t find_cell(nlohmann::json const& label) const;
    //! Index of the 1-morphism with this label, or kUndefined.
    std::size_t find_one_morphism(nlohmann::json const& label) const;

    //! g * f (f first), or kUndefined when the objects do not match.
    std::size_t compose1(std::size_t g, std::size_t f) const {
      return _compose1[g * _one.size() + f];
    }
    std::size_t id1(std::size_t object) const {
      return _id1.at(object);
    }
    std::size_t id2(std::size_t f) const {
      return _id2.at(f);
    }
    //! Sorted cell indices of Hom(f, g).
    std::vector<std::size_t> const& hom(std::size_t f, std::size_t g) const {
      return _hom[f * _one.size() + g];
    }
    bool in_hom(std::size_t f, std::size_t g, std::size_t cell) const;
    //! beta o_1 alpha, or kUndefined.
    std::size_t vcomp(std::size_t beta, std::size_t alpha) const {
      return lookup(_vcomp, _vcomp_rule, beta, alpha);
    }
    //! beta o_0 alpha, or kUndefined.
    std::size_t hcomp(std::size_t beta, std::size_t alpha) const {
      return lookup(_hcomp, _hcomp_rule, beta, alpha);
    }
    //! The 1-morphism g with g * f = id and f * g = id, or kUndefined.
    std::size_t inverse(std::size_t f) const;

   private:
    using CellTable = std::unordered_map<std::uint64_t, std::size_t>;
    std::size_t lookup(CellTable&      table,
                       CellRule const& rule,
                       std::size_t     beta,
                       std::size_t     alpha) const;

    std::string                            _name;
    std::size_t                            _degree;
    std::size_t                            _objects;
    std::vector<OneMorphism>               _one;
    std::vector<nlohmann::json>            _cells;
    std::map<std::string, std::size_t>     _cell_index;
    std::vector<std::size_t>               _compose1;
    std::vector<std::size_t>               _id1;
    std::vector<std::size_t>               _id2;
    std::vector<std::vector<std::size_t>>  _hom;
    mutable CellTable                      _vcomp;
    mutable CellTable                      _hcomp;
    CellRule                               _vcomp_rule;
    CellRule                               _hcomp_rule;
  };

  //! Hom(x, y) of the relation construction: all subrelations of x n y.
  std::vector<BinaryRelation> relation_hom(BinaryRelation const& x,
                                           BinaryRelation const& y);
  //! Hom(x, y) of the partition construction: all coarsenings of x v y.
  std::vector<SetPartition> partition_hom(SetPartition const& x,
                                          SetPartition const& y);

  //! Largest n accepted by relation_two_category / partition_two_category.
  inline constexpr std::size_t kMaxTwoCategoryDegree = 4;

  //! One object, 1-morphisms S_n, Hom(pi, sigma) the subrelations of
  //! pi n sigma, o_1 intersection, o_0 composition of relations.
  TwoCategory relation_two_category(std::size_t n);

  //! One object, 1-morphisms S_n, Hom(pi, sigma) the propagating partitions
  //! above pi and sigma, o_1 join, o_0 the mini-max product.
  TwoCategory partition_two_category(std::size_t n);

  //! A finite monoid with an order, given by tables.
  struct OrderedMonoid {
    std::string                           name;
    std::size_t                           degree = 0;
    std::vector<nlohmann::json>           labels;
    std::vector<std::vector<std::size_t>> product;  // product[a][b] = a * b
    std::size_t                           unit = 0;
    OrderMatrix                           order{0};
    //! Size of the underlying map (domain size, or number of blocks).
    std::vector<std::size_t> rank;

    std::size_t size() const noexcept {
      return labels.size();
    }
  };

  //! IS_n under composition with the inclusion order. n <= 4.
  OrderedMonoid symmetric_inverse_ordered_monoid(std::size_t n);
  //! F*_n under the mini-max product with the refinement order. n <= 4.
  OrderedMonoid factorizable_ordered_monoid(std::size_t n);

  //! One object, 1-morphisms the monoid elements, Hom(s, t) = {(s, t)} when
  //! s <= t and empty otherwise. Throws OrderError if the order is not an
  //! admissible partial order, AlgebraError if the product is not a monoid.
  TwoCategory ordered_monoid_two_category(OrderedMonoid const& monoid);

  struct CheckMode {
    enum class Kind { exhaustive, sampled };
    Kind          kind  = Kind::exhaustive;
    std::uint64_t seed  = 0;
    std::size_t   count = 100000;

    static CheckMode exhaustive() {
      return {};
    }
    static CheckMode sampled(std::uint64_t seed, std::size_t count) {
      return {Kind::sampled, seed, count};
    }
  };

  struct AxiomResult {
    explicit AxiomResult(std::string name_ = {}) : name(std::move(name_)) {}

    std::string    name;
    bool           passed  = true;
    std::size_t    checked = 0;
    nlohmann::json witness;  // null when passed
  };

  struct AxiomReport {
    std::string              category;
    std::size_t              n = 0;
    CheckMode                mode;
    std::vector<AxiomResult> axioms;

    bool passed() const;
    AxiomResult const& find(std::string const& name) const;
  };

  void to_json(nlohmann::json& j, AxiomReport const& report);

  //! Checks associativity and unit laws for both compositions, typing of
  //! every composite, functoriality of o_0 on identities and the
  //! interchange law. Failures become report entries with a witness.
  AxiomReport check_axioms(TwoCategory const& C, CheckMode mode);

  //! Checks that translation by a 1-morphism (left and right) is a bijection
  //! between hom-sets and distributes over o_1.
  AxiomReport check_translation_bijections(TwoCategory const& C,
                                           CheckMode          mode);

}  // namespace sncat

#endif  // SNCAT_BICAT_HPP_
