#include "sncat/partitions.hpp"

#include <algorithm>  // for sort, unique, max
#include <numeric>    // for iota
#include <string>     // for string, to_string

#include <nlohmann/json.hpp>

#include "sncat/errors.hpp"

namespace sncat {

  namespace {
    // Path-compressed union-find over at most 3 * kMaxPartitionDegree points.
    class UnionFind {
     public:
      explicit UnionFind(std::size_t size) : _parent(size) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    void check_same_degree(std::size_t m, std::size_t n, char const* what) {
      if (m != n) {
        throw DimensionError(std::string(what) + ": degrees "
                             + std::to_string(m) + " and " + std::to_string(n)
                             + " differ");
      }
    }

    void check_partition_degree(std::size_t n) {
      if (n > kMaxPartitionDegree) {
        throw RangeError("partition degree " + std::to_string(n) + " exceeds "
                         + std::to_string(kMaxPartitionDegree));
      }
    }

    // Calls f(rgs) for every restricted growth string of length m.
    template <typename F>
    void for_each_rgs(std::size_t m, F&& f) {
      if (m == 0) {
        std::vector<std::size_t> empty;
        f(empty);
        return;
      }
      std::vector<std::size_t> rgs(m, 0);
      std::vector<std::size_t> prefix_max(m, 0);
      while (true) {
        f(rgs);
        // Increment the rightmost position that can grow.
        std::size_t i = m - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
          --i;
        }
        if (i == 0) {
          return;
        }
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t k = i + 1; k < m; ++k) {
          rgs[k]        = 0;
          prefix_max[k] = prefix_max[i];
        }
      }
    }

    std::vector<std::size_t> labels_from_blocks(
        std::size_t                                  m,
        std::vector<std::vector<std::size_t>> const& blocks) {
      std::vector<std::size_t> labels(m, m);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
          throw RangeError("partition has an empty block");
        }
        for (auto p : blocks[b]) {
          if (p >= m || labels[p] != m) {
            throw RangeError("blocks are not a partition of the point set");
          }
          labels[p] = b;
        }
      }
      for (auto l : labels) {
        if (l == m) {
          throw RangeError("blocks do not cover the point set");
        }
      }
      return labels;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PointPartition
  ////////////////////////////////////////////////////////////////////////

  PointPartition::PointPartition(std::size_t                  m,
                                 std::span<std::size_t const> labels)
      : _m(m) {
    if (m > kMaxPoints) {
      throw RangeError("partition of " + std::to_string(m)
                       + " points exceeds the storage limit");
    }
    if (labels.size() != m) {
      throw DimensionError("partition labels have the wrong length");
    }
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t p = 0; p < m; ++p) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& s) {
        return s.first == labels[p];
      });
      if (it == seen.end()) {
        seen.emplace_back(labels[p], seen.size());
        _labels[p] = static_cast<std::uint8_t>(seen.size() - 1);
      } else {
        _labels[p] = static_cast<std::uint8_t>(it->second);
      }
    }
    _block_count = seen.size();
  }

  PointPartition::PointPartition(
      std::size_t                                  m,
      std::vector<std::vector<std::size_t>> const& blocks)
      : PointPartition(m, labels_from_blocks(m, blocks)) {}

  std::vector<std::vector<std::size_t>> PointPartition::blocks() const {
    std::vector<std::vector<std::size_t>> out(_block_count);
    for (std::size_t p = 0; p < _m; ++p) {
      out[_labels[p]].push_back(p);
    }
    return out;
  }

  std::strong_ordering
  PointPartition::operator<=>(PointPartition const& that) const noexcept {
    if (auto c = _m <=> that._m; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(_labels.begin(),
                                                  _labels.begin() + _m,
                                                  that._labels.begin(),
                                                  that._labels.begin() + _m);
  }

  ////////////////////////////////////////////////////////////////////////
  // QuotientPartition
  ////////////////////////////////////////////////////////////////////////

  QuotientPartition::QuotientPartition(std::size_t                  n,
                                       std::span<std::size_t const> labels)
      : _p(n, labels) {}

  QuotientPartition::QuotientPartition(
      std::size_t                                  n,
      std::vector<std::vector<std::size_t>> const& blocks)
      : _p(n, blocks) {}

  QuotientPartition QuotientPartition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return QuotientPartition(n, labels);
  }

  QuotientPartition QuotientPartition::indiscrete(std::size_t n) {
    std::vector<std::size_t> labels(n, 0);
    return QuotientPartition(n, labels);
  }

  bool refines(QuotientPartition const& a, QuotientPartition const& b) {
    check_same_degree(a.degree(), b.degree(), "refines");
    for (std::size_t x = 0; x < a.degree(); ++x) {
      for (std::size_t y = x + 1; y < a.degree(); ++y) {
        if (a.block_of(x) == a.block_of(y) && b.block_of(x) != b.block_of(y)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<QuotientPartition> all_quotients(std::size_t n) {
    check_partition_degree(n);
    std::vector<QuotientPartition> out;
    for_each_rgs(n, [&](std::vector<std::size_t> const& rgs) {
      out.emplace_back(n, rgs);
    });
    return out;
  }

  void to_json(nlohmann::json& j, QuotientPartition const& q) {
    auto blocks = nlohmann::json::array();
    for (auto const& b : q.blocks()) {
      auto block = nlohmann::json::array();
      for (auto x : b) {
        block.push_back(std::to_string(x + 1));
      }
      blocks.push_back(std::move(block));
    }
    j = nlohmann::json{{"n", q.degree()}, {"blocks", std::move(blocks)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // SetPartition
  ////////////////////////////////////////////////////////////////////////

  SetPartition::SetPartition(std::size_t n, std::span<std::size_t const> labels)
      : _n(n), _p((check_partition_degree(n), 2 * n), labels) {}

  SetPartition::SetPartition(
      std::size_t                                  n,
      std::vector<std::vector<std::size_t>> const& blocks)
      : _n(n), _p((check_partition_degree(n), 2 * n), blocks) {}

  SetPartition SetPartition::identity(std::size_t n) {
    return from_permutation(Permutation::identity(n));
  }

  SetPartition SetPartition::from_permutation(Permutation const& sigma) {
    auto const               n = sigma.degree();
    std::vector<std::size_t> labels(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x]            = x;
      labels[n + sigma[x]] = x;
    }
    return SetPartition(n, labels);
  }

  SetPartition SetPartition::one_block(std::size_t n) {
    std::vector<std::size_t> labels(2 * n, 0);
    return SetPartition(n, labels);
  }

  SetPartition SetPartition::singletons(std::size_t n) {
    std::vector<std::size_t> labels(2 * n);
    std::iota(labels.begin(), labels.end(), 0);
    return SetPartition(n, labels);
  }

  SetPartition SetPartition::from_quotient(QuotientPartition const& q) {
    auto const               n = q.degree();
    std::vector<std::size_t> labels(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x]     = q.block_of(x);
      labels[n + x] = q.block_of(x);
    }
    return SetPartition(n, labels);
  }

  QuotientPartition SetPartition::domain_quotient() const {
    std::vector<std::size_t> labels(_n);
    for (std::size_t x = 0; x < _n; ++x) {
      labels[x] = block_of(x);
    }
    return QuotientPartition(_n, labels);
  }

  QuotientPartition SetPartition::image_quotient() const {
    std::vector<std::size_t> labels(_n);
    for (std::size_t x = 0; x < _n; ++x) {
      labels[x] = block_of(_n + x);
    }
    return QuotientPartition(_n, labels);
  }

  SetPartition SetPartition::flip() const {
    std::vector<std::size_t> labels(2 * _n);
    for (std::size_t x = 0; x < _n; ++x) {
      labels[x]      = block_of(_n + x);
      labels[_n + x] = block_of(x);
    }
    return SetPartition(_n, labels);
  }

  SetPartition product(SetPartition const& rho, SetPartition const& pi) {
    check_same_degree(rho.degree(), pi.degree(), "product");
    auto const n = pi.degree();
    // Layers: [0, n) top, [n, 2n) middle, [2n, 3n) bottom. pi occupies the
    // top and middle layers as is; rho is shifted down by n.
    UnionFind uf(3 * n);
    std::vector<std::size_t> first_of_pi(2 * n, 2 * n);
    std::vector<std::size_t> first_of_rho(2 * n, 2 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      auto& f = first_of_pi[pi.block_of(p)];
      if (f == 2 * n) {
        f = p;
      } else {
        uf.unite(f, p);
      }
      auto& g = first_of_rho[rho.block_of(p)];
      if (g == 2 * n) {
        g = p;
      } else {
        uf.unite(g + n, p + n);
      }
    }
    std::vector<std::size_t> labels(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x]     = uf.find(x);
      labels[n + x] = uf.find(2 * n + x);
    }
    return SetPartition(n, labels);
  }

  bool is_propagating(SetPartition const& p) {
    auto const        n = p.degree();
    std::vector<bool> top(p.block_count(), false);
    std::vector<bool> bottom(p.block_count(), false);
    for (std::size_t x = 0; x < n; ++x) {
      top[p.block_of(x)]        = true;
      bottom[p.block_of(n + x)] = true;
    }
    for (std::size_t b = 0; b < p.block_count(); ++b) {
      if (!top[b] || !bottom[b]) {
        return false;
      }
    }
    return true;
  }

  bool refines(SetPartition const& a, SetPartition const& b) {
    check_same_degree(a.degree(), b.degree(), "refines");
    // Each block of a must map into a single block of b.
    std::vector<std::size_t> target(a.block_count(), SIZE_MAX);
    for (std::size_t p = 0; p < 2 * a.degree(); ++p) {
      auto& t = target[a.block_of(p)];
      if (t == SIZE_MAX) {
        t = b.block_of(p);
      } else if (t != b.block_of(p)) {
        return false;
      }
    }
    return true;
  }

  SetPartition join(SetPartition const& a, SetPartition const& b) {
    check_same_degree(a.degree(), b.degree(), "join");
    auto const m = 2 * a.degree();
    UnionFind  uf(m);
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (a.same_block(p, q) || b.same_block(p, q)) {
          uf.unite(p, q);
        }
      }
    }
    std::vector<std::size_t> labels(m);
    for (std::size_t p = 0; p < m; ++p) {
      labels[p] = uf.find(p);
    }
    return SetPartition(a.degree(), labels);
  }

  SetPartition meet(SetPartition const& a, SetPartition const& b) {
    check_same_degree(a.degree(), b.degree(), "meet");
    auto const               m = 2 * a.degree();
    std::vector<std::size_t> labels(m);
    for (std::size_t p = 0; p < m; ++p) {
      labels[p] = a.block_of(p) * PointPartition::kMaxPoints + b.block_of(p);
    }
    return SetPartition(a.degree(), labels);
  }

  std::vector<SetPartition> coarsenings(SetPartition const& a) {
    if (a.block_count() > kMaxCoarseningBlocks) {
      throw RangeError("coarsenings: " + std::to_string(a.block_count())
                       + " blocks exceed the guard of "
                       + std::to_string(kMaxCoarseningBlocks));
    }
    std::vector<SetPartition> out;
    auto const                m = 2 * a.degree();
    for_each_rgs(a.block_count(), [&](std::vector<std::size_t> const& rgs) {
      std::vector<std::size_t> labels(m);
      for (std::size_t p = 0; p < m; ++p) {
        labels[p] = rgs[a.block_of(p)];
      }
      out.emplace_back(a.degree(), labels);
    });
    return out;
  }

  std::vector<SetPartition> partition_monoid(std::size_t n) {
    if (n == 0 || n > 4) {
      throw RangeError("partition_monoid: n must be in [1, 4]");
    }
    std::vector<SetPartition> out;
    for_each_rgs(2 * n, [&](std::vector<std::size_t> const& rgs) {
      out.emplace_back(n, rgs);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<SetPartition> propagating_partitions(std::size_t n) {
    auto all = partition_monoid(n);
    std::erase_if(all, [](auto const& p) { return !is_propagating(p); });
    return all;
  }

  std::vector<SetPartition>
  upper_set_closure(std::span<SetPartition const> X) {
    std::vector<SetPartition> out;
    for (auto const& x : X) {
      if (!out.empty()) {
        check_same_degree(out.front().degree(), x.degree(),
                          "upper_set_closure");
      }
      auto const above = coarsenings(x);
      out.insert(out.end(), above.begin(), above.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Factorization factorize(SetPartition const& rho) {
    auto const id = SetPartition::identity(rho.degree());
    for (auto const& sigma : symmetric_group(rho.degree())) {
      auto const s = SetPartition::from_permutation(sigma);
      if (!refines(s, rho)) {
        continue;
      }
      auto const e = product(rho, SetPartition::from_permutation(sigma.inverse()));
      if (!refines(id, e) || product(e, e) != e || product(e, s) != rho) {
        throw AlgebraError("factorize: rho sigma^-1 is not an idempotent "
                           "above the identity");
      }
      return Factorization{sigma, e};
    }
    throw AlgebraError("factorize: partition lies above no permutation");
  }

  std::vector<SetPartition> maximal_factorizable_submonoid(std::size_t n) {
    if (n == 0 || n > kMaxFactorizableDegree) {
      throw RangeError("maximal_factorizable_submonoid: n must be in [1, "
                       + std::to_string(kMaxFactorizableDegree) + "]");
    }
    std::vector<SetPartition> perms;
    for (auto const& sigma : symmetric_group(n)) {
      perms.push_back(SetPartition::from_permutation(sigma));
    }
    auto out = upper_set_closure(perms);
    for (auto const& rho : out) {
      if (!is_propagating(rho)) {
        throw AlgebraError("upper set of S_n left PP_n");
      }
      factorize(rho);
    }
    return out;
  }

  void to_json(nlohmann::json& j, SetPartition const& p) {
    auto const n      = p.degree();
    auto       blocks = nlohmann::json::array();
    for (auto const& b : p.blocks()) {
      auto block = nlohmann::json::array();
      for (auto q : b) {
        block.push_back(q < n ? std::to_string(q + 1)
                              : std::to_string(q - n + 1) + "'");
      }
      blocks.push_back(std::move(block));
    }
    j = nlohmann::json{{"n", n}, {"blocks", std::move(blocks)}};
  }

  void from_json(nlohmann::json const& j, SetPartition& p) {
    auto const                            n = j.at("n").get<std::size_t>();
    std::vector<std::vector<std::size_t>> blocks;
    for (auto const& b : j.at("blocks")) {
      auto& block = blocks.emplace_back();
      for (auto const& point : b) {
        auto s     = point.get<std::string>();
        bool prime = !s.empty() && s.back() == '\'';
        if (prime) {
          s.pop_back();
        }
        auto const x = std::stoul(s);
        if (x == 0 || x > n) {
          throw RangeError("partition JSON point out of range");
        }
        block.push_back(prime ? n + x - 1 : x - 1);
      }
    }
    p = SetPartition(n, blocks);
  }

}  // namespace sncat
