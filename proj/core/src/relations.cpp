#include "sncat/relations.hpp"

#include <algorithm>  // for sort, next_permutation, unique
#include <numeric>    // for iota
#include <string>     // for string, to_string

#include <nlohmann/json.hpp>

#include "sncat/errors.hpp"

namespace sncat {

  namespace {
    void check_degree(std::size_t n) {
      if (n > kMaxDegree) {
        throw RangeError("degree " + std::to_string(n) + " exceeds "
                         + std::to_string(kMaxDegree));
      }
    }

    void check_same_degree(std::size_t m, std::size_t n, char const* what) {
      if (m != n) {
        throw DimensionError(std::string(what) + ": degrees "
                             + std::to_string(m) + " and " + std::to_string(n)
                             + " differ");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PointSet
  ////////////////////////////////////////////////////////////////////////

  PointSet::PointSet(std::initializer_list<std::size_t> points) {
    for (auto x : points) {
      _mask |= std::uint32_t(1) << x;
    }
  }

  std::vector<std::size_t> PointSet::points() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < 32; ++x) {
      if (contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BinaryRelation
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation::BinaryRelation(std::size_t n) : _n(n) {
    check_degree(n);
  }

  BinaryRelation::BinaryRelation(std::size_t n, std::initializer_list<Pair> pairs)
      : BinaryRelation(n, std::span<Pair const>(pairs.begin(), pairs.size())) {}

  BinaryRelation::BinaryRelation(std::size_t n, std::span<Pair const> pairs)
      : BinaryRelation(n) {
    for (auto const& [y, x] : pairs) {
      insert(y, x);
    }
  }

  BinaryRelation BinaryRelation::identity(std::size_t n) {
    return identity_on(n, PointSet::all(n));
  }

  BinaryRelation BinaryRelation::identity_on(std::size_t n, PointSet X) {
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (X.contains(x)) {
        r.insert(x, x);
      }
    }
    return r;
  }

  void BinaryRelation::insert(std::size_t y, std::size_t x) {
    if (y >= _n || x >= _n) {
      throw RangeError("pair (" + std::to_string(y) + ", " + std::to_string(x)
                       + ") outside a " + std::to_string(_n) + "-point set");
    }
    _rows[y] |= static_cast<std::uint16_t>(1U << x);
  }

  std::size_t BinaryRelation::size() const noexcept {
    std::size_t total = 0;
    for (std::size_t y = 0; y < _n; ++y) {
      total += static_cast<std::size_t>(std::popcount(_rows[y]));
    }
    return total;
  }

  std::vector<BinaryRelation::Pair> BinaryRelation::pairs() const {
    std::vector<Pair> out;
    for (std::size_t y = 0; y < _n; ++y) {
      for (std::size_t x = 0; x < _n; ++x) {
        if (contains(y, x)) {
          out.emplace_back(y, x);
        }
      }
    }
    return out;
  }

  PointSet BinaryRelation::domain() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t y = 0; y < _n; ++y) {
      mask |= _rows[y];
    }
    return PointSet(mask);
  }

  PointSet BinaryRelation::image() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t y = 0; y < _n; ++y) {
      if (_rows[y] != 0) {
        mask |= std::uint32_t(1) << y;
      }
    }
    return PointSet(mask);
  }

  BinaryRelation BinaryRelation::transpose() const {
    BinaryRelation t(_n);
    for (auto const& [y, x] : pairs()) {
      t.insert(x, y);
    }
    return t;
  }

  std::strong_ordering
  BinaryRelation::operator<=>(BinaryRelation const& that) const {
    if (auto c = _n <=> that._n; c != 0) {
      return c;
    }
    auto const lhs = pairs();
    auto const rhs = that.pairs();
    return std::lexicographical_compare_three_way(
        lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  }

  BinaryRelation compose(BinaryRelation const& a, BinaryRelation const& b) {
    check_same_degree(a.degree(), b.degree(), "compose");
    BinaryRelation result(a.degree());
    for (std::size_t z = 0; z < a.degree(); ++z) {
      for (std::size_t y = 0; y < a.degree(); ++y) {
        if (a.contains(z, y)) {
          for (auto x : b.row(y).points()) {
            result.insert(z, x);
          }
        }
      }
    }
    return result;
  }

  BinaryRelation intersect(BinaryRelation const& a, BinaryRelation const& b) {
    check_same_degree(a.degree(), b.degree(), "intersect");
    BinaryRelation result(a.degree());
    for (std::size_t y = 0; y < a.degree(); ++y) {
      for (auto x : PointSet(a.row(y).mask() & b.row(y).mask()).points()) {
        result.insert(y, x);
      }
    }
    return result;
  }

  bool is_subrelation(BinaryRelation const& a, BinaryRelation const& b) {
    check_same_degree(a.degree(), b.degree(), "is_subrelation");
    for (std::size_t y = 0; y < a.degree(); ++y) {
      if (!a.row(y).is_subset_of(b.row(y))) {
        return false;
      }
    }
    return true;
  }

  std::vector<BinaryRelation> subrelations(BinaryRelation const& a) {
    auto const pairs = a.pairs();
    if (pairs.size() > kMaxSubrelationPairs) {
      throw RangeError("subrelations: " + std::to_string(pairs.size())
                       + " pairs exceed the guard of "
                       + std::to_string(kMaxSubrelationPairs));
    }
    std::vector<BinaryRelation> out;
    out.reserve(std::size_t(1) << pairs.size());
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << pairs.size());
         ++bits) {
      BinaryRelation r(a.degree());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((bits >> i) & 1U) {
          r.insert(pairs[i].first, pairs[i].second);
        }
      }
      out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<BinaryRelation>
  lower_set_closure(std::span<BinaryRelation const> X) {
    std::vector<BinaryRelation> out;
    for (auto const& x : X) {
      if (!out.empty()) {
        check_same_degree(out.front().degree(), x.degree(),
                          "lower_set_closure");
      }
      auto const below = subrelations(x);
      out.insert(out.end(), below.begin(), below.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : _images(std::move(images)) {
    check_degree(_images.size());
    std::vector<bool> seen(_images.size(), false);
    for (auto y : _images) {
      if (y >= _images.size() || seen[y]) {
        throw RangeError("Permutation: images do not form a bijection");
      }
      seen[y] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(_images.size());
    for (std::size_t x = 0; x < _images.size(); ++x) {
      inv[_images[x]] = x;
    }
    return Permutation(std::move(inv));
  }

  BinaryRelation Permutation::to_relation() const {
    BinaryRelation r(degree());
    for (std::size_t x = 0; x < degree(); ++x) {
      r.insert(_images[x], x);
    }
    return r;
  }

  Permutation compose(Permutation const& p, Permutation const& q) {
    check_same_degree(p.degree(), q.degree(), "compose");
    std::vector<std::size_t> images(p.degree());
    for (std::size_t x = 0; x < p.degree(); ++x) {
      images[x] = p[q[x]];
    }
    return Permutation(std::move(images));
  }

  std::vector<Permutation> symmetric_group(std::size_t n) {
    check_degree(n);
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialBijection
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::size_t n)
      : _images(n, kUndefined) {
    check_degree(n);
  }

  PartialBijection::PartialBijection(std::vector<int> images)
      : _images(std::move(images)) {
    check_degree(_images.size());
    std::vector<bool> seen(_images.size(), false);
    for (auto y : _images) {
      if (y == kUndefined) {
        continue;
      }
      if (y < 0 || static_cast<std::size_t>(y) >= _images.size()
          || seen[static_cast<std::size_t>(y)]) {
        throw RangeError("PartialBijection: map is not injective");
      }
      seen[static_cast<std::size_t>(y)] = true;
    }
  }

  PartialBijection PartialBijection::from_relation(BinaryRelation const& r) {
    std::vector<int> images(r.degree(), kUndefined);
    for (auto const& [y, x] : r.pairs()) {
      if (images[x] != kUndefined) {
        throw RangeError("relation is not a partial bijection");
      }
      images[x] = static_cast<int>(y);
    }
    return PartialBijection(std::move(images));
  }

  std::size_t PartialBijection::rank() const noexcept {
    return domain().size();
  }

  PointSet PartialBijection::domain() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t x = 0; x < degree(); ++x) {
      if (is_defined(x)) {
        mask |= std::uint32_t(1) << x;
      }
    }
    return PointSet(mask);
  }

  PointSet PartialBijection::image() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t x = 0; x < degree(); ++x) {
      if (is_defined(x)) {
        mask |= std::uint32_t(1) << (*this)[x];
      }
    }
    return PointSet(mask);
  }

  BinaryRelation PartialBijection::to_relation() const {
    BinaryRelation r(degree());
    for (std::size_t x = 0; x < degree(); ++x) {
      if (is_defined(x)) {
        r.insert((*this)[x], x);
      }
    }
    return r;
  }

  PartialBijection PartialBijection::inverse() const {
    return from_relation(to_relation().transpose());
  }

  std::strong_ordering
  PartialBijection::operator<=>(PartialBijection const& that) const {
    return to_relation() <=> that.to_relation();
  }

  PartialBijection compose(PartialBijection const& p,
                           PartialBijection const& q) {
    check_same_degree(p.degree(), q.degree(), "compose");
    std::vector<int> images(p.degree(), PartialBijection::kUndefined);
    for (std::size_t x = 0; x < q.degree(); ++x) {
      if (q.is_defined(x) && p.is_defined(q[x])) {
        images[x] = static_cast<int>(p[q[x]]);
      }
    }
    return PartialBijection(std::move(images));
  }

  std::size_t symmetric_inverse_monoid_size(std::size_t n) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t binom = 1;
      for (std::size_t i = 0; i < k; ++i) {
        binom = binom * (n - i) / (i + 1);
      }
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        fact *= i;
      }
      total += binom * binom * fact;
    }
    return total;
  }

  namespace {
    void extend_partial(std::vector<int>&              images,
                        std::vector<bool>&             used,
                        std::size_t                    x,
                        std::vector<PartialBijection>& out) {
      if (x == images.size()) {
        out.emplace_back(images);
        return;
      }
      images[x] = PartialBijection::kUndefined;
      extend_partial(images, used, x + 1, out);
      for (std::size_t y = 0; y < images.size(); ++y) {
        if (!used[y]) {
          used[y]   = true;
          images[x] = static_cast<int>(y);
          extend_partial(images, used, x + 1, out);
          used[y] = false;
        }
      }
      images[x] = PartialBijection::kUndefined;
    }
  }  // namespace

  std::vector<PartialBijection> symmetric_inverse_monoid(std::size_t n) {
    if (n == 0 || n > kMaxInverseMonoidDegree) {
      throw RangeError("symmetric_inverse_monoid: n must be in [1, "
                       + std::to_string(kMaxInverseMonoidDegree) + "]");
    }
    std::vector<PartialBijection> out;
    out.reserve(symmetric_inverse_monoid_size(n));
    std::vector<int>  images(n, PartialBijection::kUndefined);
    std::vector<bool> used(n, false);
    extend_partial(images, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::pair<PointSet, PointSet> domain_image(PartialBijection const& p) {
    return {p.domain(), p.image()};
  }

  PartialBijection restrict(Permutation const& sigma, PointSet X) {
    std::vector<int> images(sigma.degree(), PartialBijection::kUndefined);
    for (std::size_t x = 0; x < sigma.degree(); ++x) {
      if (X.contains(x)) {
        images[x] = static_cast<int>(sigma[x]);
      }
    }
    return PartialBijection(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  void to_json(nlohmann::json& j, BinaryRelation const& r) {
    auto pairs = nlohmann::json::array();
    for (auto const& [y, x] : r.pairs()) {
      pairs.push_back({y + 1, x + 1});
    }
    j = nlohmann::json{{"n", r.degree()}, {"pairs", std::move(pairs)}};
  }

  void from_json(nlohmann::json const& j, BinaryRelation& r) {
    auto const n = j.at("n").get<std::size_t>();
    r            = BinaryRelation(n);
    for (auto const& p : j.at("pairs")) {
      auto const y = p.at(0).get<std::size_t>();
      auto const x = p.at(1).get<std::size_t>();
      if (y == 0 || x == 0) {
        throw RangeError("relation JSON points are 1-based");
      }
      r.insert(y - 1, x - 1);
    }
  }

  void to_json(nlohmann::json& j, PartialBijection const& p) {
    auto map = nlohmann::json::object();
    for (std::size_t x = 0; x < p.degree(); ++x) {
      if (p.is_defined(x)) {
        map[std::to_string(x + 1)] = std::to_string(p[x] + 1);
      }
    }
    j = nlohmann::json{{"n", p.degree()}, {"map", std::move(map)}};
  }

  void from_json(nlohmann::json const& j, PartialBijection& p) {
    auto const       n = j.at("n").get<std::size_t>();
    std::vector<int> images(n, PartialBijection::kUndefined);
    for (auto const& [key, value] : j.at("map").items()) {
      auto const x = std::stoul(key);
      auto const y = std::stoul(value.get<std::string>());
      if (x == 0 || y == 0 || x > n || y > n) {
        throw RangeError("partial bijection JSON point out of range");
      }
      images[x - 1] = static_cast<int>(y - 1);
    }
    p = PartialBijection(std::move(images));
  }

}  // namespace sncat
