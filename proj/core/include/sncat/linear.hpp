// Linearization of a finite 2-category over the rationals, the algebra of
// 2-endomorphisms of an identity 1-morphism with its primitive idempotents,
// the idempotent-split 2-category, and adjunction (fiat) checks.

#ifndef SNCAT_LINEAR_HPP_
#define SNCAT_LINEAR_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "sncat/bicat.hpp"

namespace sncat {

  using Rational = mpq_class;

  //! Always "p/q", also for integers.
  std::string to_string(Rational const& q);

  //! An element of the linearized Hom(source, target): a finite rational
  //! combination of cells. Zero coefficients are never stored.
  class LinearElement {
   public:
    LinearElement() = default;
    LinearElement(std::size_t source, std::size_t target)
        : _source(source), _target(target) {}

    static LinearElement basis(std::size_t source,
                               std::size_t target,
                               std::size_t cell);

    std::size_t source() const noexcept {
      return _source;
    }
    std::size_t target() const noexcept {
      return _target;
    }
    std::map<std::size_t, Rational> const& coefficients() const noexcept {
      return _coeffs;
    }
    Rational coefficient(std::size_t cell) const;
    bool     is_zero() const noexcept {
      return _coeffs.empty();
    }

    void add(std::size_t cell, Rational const& c);

    LinearElement& operator+=(LinearElement const& other);
    LinearElement& operator-=(LinearElement const& other);
    LinearElement& operator*=(Rational const& c);

    friend LinearElement operator+(LinearElement a, LinearElement const& b) {
      return a += b;
    }
    friend LinearElement operator-(LinearElement a, LinearElement const& b) {
      return a -= b;
    }
    friend LinearElement operator*(Rational const& c, LinearElement a) {
      return a *= c;
    }
    friend bool operator==(LinearElement const& a, LinearElement const& b) {
      return a._source == b._source && a._target == b._target
             && a._coeffs == b._coeffs;
    }

   private:
    void check_compatible(LinearElement const& other) const;

    std::size_t                     _source = 0;
    std::size_t                     _target = 0;
    std::map<std::size_t, Rational> _coeffs;
  };

  //! The k-linearization: hom-spaces with the cells of the hom-sets as bases,
  //! both compositions extended bilinearly.
  class LinearTwoCategory {
   public:
    explicit LinearTwoCategory(TwoCategory C) : _C(std::move(C)) {}

    TwoCategory const& category() const noexcept {
      return _C;
    }
    std::size_t dimension(std::size_t f, std::size_t g) const {
      return _C.hom(f, g).size();
    }
    //! Throws RangeError if the cell is not in Hom(f, g).
    LinearElement basis(std::size_t f, std::size_t g, std::size_t cell) const;
    LinearElement identity(std::size_t f) const;
    //! True if the support of x lies in the hom-set of its source and target.
    bool is_well_typed(LinearElement const& x) const;

    //! beta o_1 alpha. Throws DimensionError if alpha.target != beta.source.
    LinearElement vcomp(LinearElement const& beta,
                        LinearElement const& alpha) const;
    //! beta o_0 alpha.
    LinearElement hcomp(LinearElement const& beta,
                        LinearElement const& alpha) const;

    nlohmann::json to_json(LinearElement const& x) const;

   private:
    TwoCategory _C;
  };

  //! The algebra End(1_i) with basis the cells of Hom(1_i, 1_i).
  struct EndAlgebra {
    std::size_t                           object   = 0;
    std::size_t                           identity = 0;  // the 1-morphism 1_i
    std::vector<std::size_t>              basis;         // cells
    std::vector<std::vector<std::size_t>> product;       // basis positions
    std::size_t                           unit = 0;      // basis position

    std::size_t dimension() const noexcept {
      return basis.size();
    }
  };

  //! Throws AlgebraError unless o_0 = o_1 on the basis, the product is
  //! commutative and has a unit.
  EndAlgebra end_of_identity(LinearTwoCategory const& L, std::size_t object);

  struct PrimitiveIdempotent {
    std::size_t   cell;  // the basis element the idempotent is attached to
    LinearElement element;
  };

  //! For a basis closed under an idempotent commutative product (a finite
  //! semilattice with y <= x iff y x = y), the elements
  //! e_x = sum_{y <= x} mu(y, x) y. The result is verified to consist of
  //! pairwise orthogonal idempotents summing to the unit, one per basis
  //! element, and is ordered by decreasing size of the down-set of x, then
  //! by cell. Throws AlgebraError if any of this fails.
  std::vector<PrimitiveIdempotent>
  primitive_idempotents(LinearTwoCategory const& L, EndAlgebra const& A);

  //! eY o_0 x o_0 eX.
  LinearElement sandwich(LinearTwoCategory const& L,
                         LinearElement const&     eY,
                         LinearElement const&     x,
                         LinearElement const&     eX);

  //! A 1-morphism of the split 2-category: an underlying 1-morphism between
  //! two completed objects.
  struct CompletedOneMorphism {
    std::size_t source;  // completed object
    std::size_t target;  // completed object
    std::size_t one;     // underlying 1-morphism

    auto operator<=>(CompletedOneMorphism const&) const = default;
  };

  struct IsomorphismResult {
    bool isomorphic = false;
    //! Mutually inverse pair when isomorphic.
    std::optional<LinearElement> forward;
    std::optional<LinearElement> backward;
    //! Number of products g o_1 f examined.
    std::size_t checked = 0;
  };

  struct IndecomposableClass {
    std::size_t              source;  // completed object
    std::size_t              target;  // completed object
    std::vector<std::size_t> members;  // underlying 1-morphisms, sorted
    //! The cell id2(member) o_0 (idempotent cell of the source), the same for
    //! every member; kUndefined if that composite is not a cell.
    std::size_t label_cell = kUndefined;

    std::size_t representative() const {
      return members.front();
    }
  };

  //! The idempotent splitting: objects are pairs (i, primitive idempotent of
  //! End(1_i)), Hom((F, s -> t), (G, s -> t)) = e_t o_0 Hom(F, G) o_0 e_s.
  class CompletedCategory {
   public:
    struct Object {
      std::size_t   object;  // of the underlying 2-category
      std::size_t   cell;    // cell the idempotent is attached to
      LinearElement idempotent;
    };

    explicit CompletedCategory(LinearTwoCategory L);

    LinearTwoCategory const& linear() const noexcept {
      return _L;
    }
    std::vector<Object> const& objects() const noexcept {
      return _objects;
    }
    EndAlgebra const& end_algebra(std::size_t object) const {
      return _end.at(object);
    }

    LinearElement sandwich(std::size_t          target,
                           LinearElement const& x,
                           std::size_t          source) const;
    LinearElement identity(CompletedOneMorphism const& F) const;
    //! F is zero iff its identity is the zero vector.
    bool is_zero(CompletedOneMorphism const& F) const;

    //! A basis (reduced echelon form) of the completed Hom(F, G). Throws
    //! DimensionError when F and G do not share source and target.
    std::vector<LinearElement> hom_basis(CompletedOneMorphism const& F,
                                         CompletedOneMorphism const& G) const;
    std::size_t end_dimension(CompletedOneMorphism const& F) const {
      return hom_basis(F, F).size();
    }

    //! Searches spanning sets of Hom(F, G) and Hom(G, F) for a mutually
    //! inverse pair. Assumes End(F) is local. Throws DimensionError when F and
    //! G do not share source and target.
    IsomorphismResult is_isomorphic(CompletedOneMorphism const& F,
                                    CompletedOneMorphism const& G) const;

    //! All nonzero 1-morphisms, ordered by (source, target, one).
    std::vector<CompletedOneMorphism> nonzero_one_morphisms() const;

    //! True iff every completed End(1) and every nonzero completed End(F) is
    //! one-dimensional; otherwise `witness` describes the first failure.
    bool is_local(nlohmann::json* witness = nullptr) const;

    //! Isomorphism classes of nonzero 1-morphisms, ordered by (source,
    //! target, representative). Throws AlgebraError if some nonzero
    //! 1-morphism is not local or the label cells within a class differ.
    std::vector<IndecomposableClass> const& indecomposables() const;

   private:
    std::vector<LinearElement> hom_spanning_set(CompletedOneMorphism const& F,
                                                CompletedOneMorphism const& G) const;

    LinearTwoCategory                                      _L;
    std::vector<EndAlgebra>                                _end;
    std::vector<Object>                                    _objects;
    mutable std::optional<std::vector<IndecomposableClass>> _classes;
  };

  //! Reduces a list of elements of one hom-space to a basis of its span.
  std::vector<LinearElement> row_reduce(std::vector<LinearElement> elements);

  struct AdjunctionResult {
    std::size_t one;
    std::size_t dual = kUndefined;
    std::size_t unit_cell   = kUndefined;  // in Hom(1, dual * one)
    std::size_t counit_cell = kUndefined;  // in Hom(one * dual, 1)
    bool        triangles   = false;
    //! Triangle identities for the sandwiched unit and counit, for every
    //! nonzero completed 1-morphism over `one`.
    bool        completed_triangles = false;
    std::size_t completed_checked   = 0;
    //! JSON labels under "one", "dual", "unit", "counit".
    nlohmann::json labels = nlohmann::json::object();
  };

  struct AntiInvolutionReport {
    bool           available   = false;
    bool           involutive  = false;
    bool           typing      = false;
    bool           hcomp_contravariant = false;
    bool           vcomp_contravariant = false;
    std::size_t    checked = 0;
    nlohmann::json witness;
  };

  struct FiatReport {
    std::string                   category;
    std::size_t                   n    = 0;
    bool                          fiat = false;
    std::vector<AdjunctionResult> adjunctions;
    AntiInvolutionReport          star;
    nlohmann::json                witness;  // non-fiat witness, or null
  };

  //! The anti-involution on cells (transpose of relations for "A", swapping
  //! primed and unprimed points for "B"), as a map of cell indices; nullopt
  //! for other categories. kUndefined where the image is not a cell.
  std::optional<std::vector<std::size_t>> candidate_star(TwoCategory const& C);

  //! For each 1-morphism sigma, takes sigma* = sigma^-1 and searches the
  //! cells of Hom(1, sigma* sigma) and Hom(sigma sigma*, 1) for a unit and
  //! counit satisfying both triangle identities, then repeats the check in
  //! the split 2-category. The anti-involution is checked and reported but
  //! does not enter the verdict.
  FiatReport fiat_check(CompletedCategory const& C);

  //! Non-fiatness of the 2-category of an ordered monoid: returns a
  //! non-invertible element s of maximal rank (first in the monoid order of
  //! labels) with no t such that Hom(1, t s) and Hom(s t, 1) are both
  //! non-empty, so s has no right adjoint. fiat is true iff no such s
  //! exists and every element is invertible.
  FiatReport fiat_check(OrderedMonoid const& M);

  void to_json(nlohmann::json& j, FiatReport const& report);

}  // namespace sncat

#endif  // SNCAT_LINEAR_HPP_
