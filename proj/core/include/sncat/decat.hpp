// Integer algebras given by structure constants: semigroup algebras, Möbius
// bases of Z[IS_n] and Z[F*_n], and split Grothendieck rings of the
// idempotent-split 2-categories.

#ifndef SNCAT_DECAT_HPP_
#define SNCAT_DECAT_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include <nlohmann/json.hpp>

#include "sncat/bicat.hpp"
#include "sncat/linear.hpp"

namespace sncat {

  using IntVector = std::vector<std::int64_t>;

  //! A free Z-module with basis `basis` and product
  //! a * b = sum_c sc(a, b, c) c.
  class AlgebraPresentation {
   public:
    AlgebraPresentation() = default;
    explicit AlgebraPresentation(std::vector<nlohmann::json> basis);

    std::size_t rank() const noexcept {
      return _basis.size();
    }
    std::vector<nlohmann::json> const& basis() const noexcept {
      return _basis;
    }
    //! Position of the basis element with this label, or kUndefined.
    std::size_t find(nlohmann::json const& label) const;

    IntVector const& unit() const noexcept {
      return _unit;
    }
    void set_unit(IntVector unit);

    //! Adds v to sc(a, b, c).
    void add(std::size_t a, std::size_t b, std::size_t c, std::int64_t v);
    //! Nonzero (c, sc(a, b, c)), sorted by c.
    std::vector<std::pair<std::size_t, std::int64_t>> const&
    product(std::size_t a, std::size_t b) const {
      return _products[a * rank() + b];
    }
    IntVector multiply(IntVector const& x, IntVector const& y) const;
    IntVector basis_vector(std::size_t a) const;

    //! A witness triple if (ab)c != a(bc) for some basis elements.
    std::optional<nlohmann::json> associativity_failure() const;
    //! A witness if the unit is not a two-sided unit on the basis.
    std::optional<nlohmann::json> unit_failure() const;

   private:
    std::vector<nlohmann::json>                                     _basis;
    IntVector                                                       _unit;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> _products;
  };

  //! {"rank", "basis", "unit", "sc": [[a, b, c, value], ...]} with the
  //! triples sorted.
  void to_json(nlohmann::json& j, AlgebraPresentation const& A);

  //! Z[S] for a finite monoid given by labels and product[a][b] = a * b.
  //! Throws AlgebraError if the product is not associative or `unit` is not
  //! a unit.
  AlgebraPresentation
  semigroup_algebra(std::vector<nlohmann::json> const&           labels,
                    std::vector<std::vector<std::size_t>> const& product,
                    std::size_t                                  unit);
  AlgebraPresentation semigroup_algebra(OrderedMonoid const& M);

  //! An element of a Möbius basis: `element` indexes the monoid and
  //! `expansion` gives it in the standard basis.
  struct MobiusBasisElement {
    std::size_t element;
    IntVector   expansion;
  };

  //! For each s in symmetric_inverse_monoid(n), the alternating sum over all
  //! restrictions r of s (s included) of (-1)^{|s| - |r|} r. The base change
  //! is checked to be unitriangular for inclusion. n <= 5.
  std::vector<MobiusBasisElement> mobius_basis_is(std::size_t n);

  //! For each s in maximal_factorizable_submonoid(n), sum over t coarser than
  //! s of mu(s, t) t, with mu the Möbius function of refinement on F*_n. The
  //! base change is checked to be unitriangular. n <= 4.
  std::vector<MobiusBasisElement> mobius_basis_fstar(std::size_t n);

  //! The split Grothendieck ring: basis the isomorphism classes of nonzero
  //! 1-morphisms of the split 2-category, labelled by their label cells,
  //! [G][F] = [G F] when the target of F is the source of G and 0
  //! otherwise. The unit is the sum of the classes of the identities. Throws
  //! AlgebraError if a class has no label cell or a nonzero composite lies
  //! in no class.
  AlgebraPresentation grothendieck_ring(CompletedCategory const& K);

  struct IsomorphismReport {
    bool           passed          = false;
    std::size_t    products_checked = 0;
    std::size_t    products_failed  = 0;
    bool           unit_ok          = false;
    //! Determinant of the matrix of the map; the map is a Z-isomorphism iff
    //! it is +1 or -1.
    std::int64_t   determinant = 0;
    nlohmann::json witness;  // first mismatch, or null
  };

  void to_json(nlohmann::json& j, IsomorphismReport const& report);

  //! Checks that the Z-linear map sending basis element a of A to map[a]
  //! (a vector over B's basis) is a unital ring isomorphism.
  IsomorphismReport verify_isomorphism(AlgebraPresentation const&   A,
                                       AlgebraPresentation const&   B,
                                       std::vector<IntVector> const& map);

  //! The map sending each class of A to the Möbius element of the basis
  //! element of B with the same label. Throws RangeError if a label is
  //! missing from B.
  std::vector<IntVector>
  label_map(AlgebraPresentation const&             A,
            AlgebraPresentation const&             B,
            std::vector<MobiusBasisElement> const& mobius);

  //! Decategorification of the linearized 2-category of an ordered monoid,
  //! with basis relabelled by the monoid elements. n <= 4.
  AlgebraPresentation ordered_monoid_decat(OrderedMonoid const& M);

}  // namespace sncat

#endif  // SNCAT_DECAT_HPP_
