// Binary relations on {0, ..., n - 1}, the monoid B_n, the symmetric group
// S_n and the symmetric inverse monoid IS_n.
//
// Points are 0-based in the C++ interface and 1-based in JSON. A pair (y, x)
// means "x is sent to y", so compose(a, b) is the boolean matrix product a * b
// and reads right to left, like composition of maps.

#ifndef SNCAT_RELATIONS_HPP_
#define SNCAT_RELATIONS_HPP_

#include <array>             // for array
#include <bit>               // for popcount
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint16_t, uint32_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <utility>           // for pair
#include <vector>            // for vector

#include <nlohmann/json_fwd.hpp>

namespace sncat {

  //! Largest ground set supported by the fixed-width row storage.
  inline constexpr std::size_t kMaxDegree = 16;

  //! A subset of {0, ..., kMaxDegree - 1} stored as a bit mask.
  class PointSet {
   public:
    constexpr PointSet() noexcept = default;
    constexpr explicit PointSet(std::uint32_t mask) noexcept : _mask(mask) {}
    PointSet(std::initializer_list<std::size_t> points);

    static constexpr PointSet all(std::size_t n) noexcept {
      return PointSet(n == 32 ? ~std::uint32_t(0)
                              : (std::uint32_t(1) << n) - 1);
    }

    constexpr std::uint32_t mask() const noexcept {
      return _mask;
    }
    constexpr bool contains(std::size_t x) const noexcept {
      return (_mask >> x) & 1U;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_mask));
    }
    constexpr bool empty() const noexcept {
      return _mask == 0;
    }
    constexpr bool is_subset_of(PointSet other) const noexcept {
      return (_mask & ~other._mask) == 0;
    }
    std::vector<std::size_t> points() const;

    constexpr auto operator<=>(PointSet const&) const noexcept = default;

   private:
    std::uint32_t _mask = 0;
  };

  //! A binary relation on an n-point set, stored as one bit row per point.
  class BinaryRelation {
   public:
    using Pair = std::pair<std::size_t, std::size_t>;

    //! The empty relation on an n-point set.
    explicit BinaryRelation(std::size_t n = 0);
    BinaryRelation(std::size_t n, std::initializer_list<Pair> pairs);
    BinaryRelation(std::size_t n, std::span<Pair const> pairs);

    static BinaryRelation identity(std::size_t n);
    //! The identity relation restricted to the points of \p X.
    static BinaryRelation identity_on(std::size_t n, PointSet X);

    std::size_t degree() const noexcept {
      return _n;
    }
    bool contains(std::size_t y, std::size_t x) const noexcept {
      return (_rows[y] >> x) & 1U;
    }
    //! Number of pairs.
    std::size_t size() const noexcept;
    bool empty() const noexcept {
      return size() == 0;
    }
    //! Row \p y as a set of points x with (y, x) in the relation.
    PointSet row(std::size_t y) const noexcept {
      return PointSet(_rows[y]);
    }
    //! Pairs (y, x) in lexicographic order.
    std::vector<Pair> pairs() const;
    //! {x : (y, x) for some y}
    PointSet domain() const noexcept;
    //! {y : (y, x) for some x}
    PointSet image() const noexcept;
    BinaryRelation transpose() const;

    void insert(std::size_t y, std::size_t x);

    bool operator==(BinaryRelation const&) const noexcept = default;
    //! Total order by (degree, lexicographic pair list).
    std::strong_ordering operator<=>(BinaryRelation const& that) const;

   private:
    std::size_t                                  _n = 0;
    std::array<std::uint16_t, kMaxDegree> _rows{};
  };

  //! The composite a * b = {(z, x) : (z, y) in a and (y, x) in b}.
  BinaryRelation compose(BinaryRelation const& a, BinaryRelation const& b);
  BinaryRelation intersect(BinaryRelation const& a, BinaryRelation const& b);
  //! Inclusion order of B_n.
  bool is_subrelation(BinaryRelation const& a, BinaryRelation const& b);

  //! Maximum number of pairs accepted by subrelations().
  inline constexpr std::size_t kMaxSubrelationPairs = 24;

  //! All subsets of a's pairs, sorted by the relation order.
  std::vector<BinaryRelation> subrelations(BinaryRelation const& a);

  //! {s : s <= x for some x in X} under inclusion, sorted.
  std::vector<BinaryRelation>
  lower_set_closure(std::span<BinaryRelation const> X);

  class Permutation {
   public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    std::size_t operator[](std::size_t x) const noexcept {
      return _images[x];
    }
    std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }
    Permutation inverse() const;
    //! The relation {(sigma(x), x)}.
    BinaryRelation to_relation() const;

    bool operator==(Permutation const&) const noexcept = default;
    auto operator<=>(Permutation const&) const noexcept = default;

   private:
    std::vector<std::size_t> _images;
  };

  //! (p * q)(x) = p(q(x)).
  Permutation compose(Permutation const& p, Permutation const& q);

  //! S_n in lexicographic order of image sequences; the identity comes first.
  std::vector<Permutation> symmetric_group(std::size_t n);

  //! A bijection between two subsets of {0, ..., n - 1}.
  class PartialBijection {
   public:
    static constexpr int kUndefined = -1;

    //! The empty map.
    explicit PartialBijection(std::size_t n = 0);
    //! \p images[x] is the image of x or kUndefined.
    explicit PartialBijection(std::vector<int> images);
    //! Throws if \p r has two pairs in one row or column.
    static PartialBijection from_relation(BinaryRelation const& r);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    bool is_defined(std::size_t x) const noexcept {
      return _images[x] != kUndefined;
    }
    std::size_t operator[](std::size_t x) const noexcept {
      return static_cast<std::size_t>(_images[x]);
    }
    std::size_t rank() const noexcept;
    PointSet domain() const noexcept;
    PointSet image() const noexcept;
    BinaryRelation to_relation() const;
    PartialBijection inverse() const;

    bool operator==(PartialBijection const&) const noexcept = default;
    //! Same order as the relation forms.
    std::strong_ordering operator<=>(PartialBijection const& that) const;

   private:
    std::vector<int> _images;
  };

  //! (p * q)(x) = p(q(x)) where defined.
  PartialBijection compose(PartialBijection const& p,
                           PartialBijection const& q);

  //! Largest n accepted by symmetric_inverse_monoid().
  inline constexpr std::size_t kMaxInverseMonoidDegree = 6;

  //! IS_n sorted by the relation order; |IS_n| = sum_k C(n,k)^2 k!.
  std::vector<PartialBijection> symmetric_inverse_monoid(std::size_t n);

  //! sum_k C(n,k)^2 k!
  std::size_t symmetric_inverse_monoid_size(std::size_t n);

  std::pair<PointSet, PointSet> domain_image(PartialBijection const& p);

  //! The partial bijection with domain \p X sending x to sigma(x).
  PartialBijection restrict(Permutation const& sigma, PointSet X);

  void to_json(nlohmann::json& j, BinaryRelation const& r);
  void from_json(nlohmann::json const& j, BinaryRelation& r);
  void to_json(nlohmann::json& j, PartialBijection const& p);
  void from_json(nlohmann::json const& j, PartialBijection& p);

}  // namespace sncat

#endif  // SNCAT_RELATIONS_HPP_
