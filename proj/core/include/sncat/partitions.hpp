// Set partitions of {1, ..., n, 1', ..., n'}: the partition monoid P_n with
// the mini-max product, propagating partitions PP_n (the dual symmetric
// inverse monoid I*_n), the refinement lattice, and F*_n = S_n upper set.
//
// Internally point x in [0, n) is the unprimed x + 1 and point n + x is the
// primed (x + 1)'. A partition is stored as its restricted growth string:
// label[p] is the index of p's block when blocks are sorted by minimum point.

#ifndef SNCAT_PARTITIONS_HPP_
#define SNCAT_PARTITIONS_HPP_

#include <array>    // for array
#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <span>     // for span
#include <vector>   // for vector

#include <nlohmann/json_fwd.hpp>

#include "sncat/relations.hpp"

namespace sncat {

  //! Largest n for which a SetPartition can be stored.
  inline constexpr std::size_t kMaxPartitionDegree = 8;

  //! A set partition of an m-point set in restricted growth form.
  //! Shared representation of SetPartition and QuotientPartition.
  class PointPartition {
   public:
    static constexpr std::size_t kMaxPoints = 2 * kMaxPartitionDegree;

    PointPartition() = default;
    //! Canonicalizes arbitrary block labels: points with equal labels share
    //! a block.
    PointPartition(std::size_t m, std::span<std::size_t const> labels);
    PointPartition(std::size_t                                 m,
                   std::vector<std::vector<std::size_t>> const& blocks);

    std::size_t point_count() const noexcept {
      return _m;
    }
    std::size_t block_count() const noexcept {
      return _block_count;
    }
    std::size_t block_of(std::size_t p) const noexcept {
      return _labels[p];
    }
    bool same_block(std::size_t p, std::size_t q) const noexcept {
      return _labels[p] == _labels[q];
    }
    //! Blocks sorted by minimum, points sorted within blocks.
    std::vector<std::vector<std::size_t>> blocks() const;

    bool operator==(PointPartition const&) const noexcept = default;
    std::strong_ordering operator<=>(PointPartition const& that) const noexcept;

   private:
    std::size_t                               _m = 0;
    std::size_t                               _block_count = 0;
    std::array<std::uint8_t, kMaxPoints> _labels{};
  };

  //! Partition of {1, ..., n} (an element of the partition lattice of n).
  class QuotientPartition {
   public:
    QuotientPartition() = default;
    QuotientPartition(std::size_t n, std::span<std::size_t const> labels);
    QuotientPartition(std::size_t                                 n,
                      std::vector<std::vector<std::size_t>> const& blocks);
    static QuotientPartition discrete(std::size_t n);
    static QuotientPartition indiscrete(std::size_t n);

    std::size_t degree() const noexcept {
      return _p.point_count();
    }
    std::size_t block_count() const noexcept {
      return _p.block_count();
    }
    std::size_t block_of(std::size_t x) const noexcept {
      return _p.block_of(x);
    }
    std::vector<std::vector<std::size_t>> blocks() const {
      return _p.blocks();
    }

    bool operator==(QuotientPartition const&) const noexcept = default;
    auto operator<=>(QuotientPartition const&) const noexcept = default;

   private:
    explicit QuotientPartition(PointPartition p) : _p(p) {}
    PointPartition _p;
  };

  //! Refinement order: every block of a lies inside a block of b.
  bool refines(QuotientPartition const& a, QuotientPartition const& b);

  //! All partitions of an n-set in restricted growth string order.
  std::vector<QuotientPartition> all_quotients(std::size_t n);

  //! An element of P_n.
  class SetPartition {
   public:
    SetPartition() = default;
    //! Block labels for the 2n points; canonicalized.
    SetPartition(std::size_t n, std::span<std::size_t const> labels);
    //! Blocks given as lists of internal points in [0, 2n).
    SetPartition(std::size_t                                 n,
                 std::vector<std::vector<std::size_t>> const& blocks);

    static SetPartition identity(std::size_t n);
    //! Blocks {x, sigma(x)'}.
    static SetPartition from_permutation(Permutation const& sigma);
    static SetPartition one_block(std::size_t n);
    static SetPartition singletons(std::size_t n);
    //! The idempotent of I*_n with blocks A u A' for A in q.
    static SetPartition from_quotient(QuotientPartition const& q);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t block_count() const noexcept {
      return _p.block_count();
    }
    std::size_t block_of(std::size_t p) const noexcept {
      return _p.block_of(p);
    }
    bool same_block(std::size_t p, std::size_t q) const noexcept {
      return _p.same_block(p, q);
    }
    std::vector<std::vector<std::size_t>> blocks() const {
      return _p.blocks();
    }
    //! The partition induced on the unprimed points.
    QuotientPartition domain_quotient() const;
    //! The partition induced on the primed points.
    QuotientPartition image_quotient() const;
    //! Swap primed and unprimed points.
    SetPartition flip() const;

    bool operator==(SetPartition const&) const noexcept = default;
    auto operator<=>(SetPartition const&) const noexcept = default;

   private:
    std::size_t    _n = 0;
    PointPartition _p;
  };

  //! The mini-max product rho * pi: pi on the top two layers, rho on the
  //! bottom two, outer connectivity read off after fusing the middle layer.
  SetPartition product(SetPartition const& rho, SetPartition const& pi);

  //! Every block meets both {1..n} and {1'..n'}.
  bool is_propagating(SetPartition const& p);

  //! Refinement order of P_n.
  bool refines(SetPartition const& a, SetPartition const& b);
  SetPartition join(SetPartition const& a, SetPartition const& b);
  SetPartition meet(SetPartition const& a, SetPartition const& b);

  //! Largest block count accepted by coarsenings().
  inline constexpr std::size_t kMaxCoarseningBlocks = 12;

  //! All b with a <= b, in restricted growth order on a's blocks.
  std::vector<SetPartition> coarsenings(SetPartition const& a);

  //! P_n sorted; n <= 4.
  std::vector<SetPartition> partition_monoid(std::size_t n);
  //! PP_n sorted; n <= 4.
  std::vector<SetPartition> propagating_partitions(std::size_t n);

  //! {s : x <= s for some x in X}, sorted. Coarsenings of propagating
  //! partitions are propagating, so this stays inside PP_n when X does.
  std::vector<SetPartition> upper_set_closure(std::span<SetPartition const> X);

  //! rho = idempotent * sigma with sigma in S_n and idempotent >= identity.
  struct Factorization {
    Permutation  sigma;
    SetPartition idempotent;
  };

  //! Throws AlgebraError when rho lies above no permutation.
  Factorization factorize(SetPartition const& rho);

  //! Largest n accepted by maximal_factorizable_submonoid().
  inline constexpr std::size_t kMaxFactorizableDegree = 5;

  //! F*_n as the upper set of S_n in PP_n, sorted. Every element is checked
  //! to factor through a permutation and an idempotent above the identity.
  std::vector<SetPartition> maximal_factorizable_submonoid(std::size_t n);

  void to_json(nlohmann::json& j, SetPartition const& p);
  void from_json(nlohmann::json const& j, SetPartition& p);
  void to_json(nlohmann::json& j, QuotientPartition const& q);

}  // namespace sncat

#endif  // SNCAT_PARTITIONS_HPP_
