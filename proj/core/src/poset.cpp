#include "sncat/poset.hpp"

#include <algorithm>  // for sort
#include <numeric>    // for iota
#include <string>     // for to_string

#include "sncat/errors.hpp"

namespace sncat {

  MobiusFunction::MobiusFunction(OrderMatrix const& order)
      : _size(order.size()), _values(order.size() * order.size(), 0) {
    auto const n = _size;
    for (std::size_t i = 0; i < n; ++i) {
      if (!order.leq(i, i)) {
        throw OrderError("order is not reflexive at element "
                         + std::to_string(i));
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (order.leq(i, j) && order.leq(j, i)) {
          throw OrderError("order is not antisymmetric on elements "
                           + std::to_string(i) + " and " + std::to_string(j));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!order.leq(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (order.leq(j, k) && !order.leq(i, k)) {
            throw OrderError("order is not transitive");
          }
        }
      }
    }

    // A linear extension: sort by the number of elements below.
    std::vector<std::size_t> down(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        down[i] += order.leq(j, i);
      }
    }
    std::vector<std::size_t> linear(n);
    std::iota(linear.begin(), linear.end(), 0);
    std::stable_sort(linear.begin(), linear.end(),
                     [&](auto a, auto b) { return down[a] < down[b]; });

    for (std::size_t x = 0; x < n; ++x) {
      for (auto y : linear) {
        if (!order.leq(x, y)) {
          continue;
        }
        if (y == x) {
          _values[x * n + y] = 1;
          continue;
        }
        std::int64_t sum = 0;
        for (auto z : linear) {
          if (z != y && order.leq(x, z) && order.leq(z, y)) {
            sum += _values[x * n + z];
          }
        }
        _values[x * n + y] = -sum;
      }
    }
  }

}  // namespace sncat
