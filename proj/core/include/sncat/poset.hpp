// Möbius function of a finite poset.

#ifndef SNCAT_POSET_HPP_
#define SNCAT_POSET_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <span>     // for span
#include <vector>   // for vector

namespace sncat {

  //! Dense order relation on indices 0..size-1: leq(i, j) iff i <= j.
  class OrderMatrix {
   public:
    explicit OrderMatrix(std::size_t size)
        : _size(size), _bits(size * size, false) {}

    std::size_t size() const noexcept {
      return _size;
    }
    bool leq(std::size_t i, std::size_t j) const {
      return _bits[i * _size + j];
    }
    void set(std::size_t i, std::size_t j, bool value = true) {
      _bits[i * _size + j] = value;
    }

   private:
    std::size_t       _size;
    std::vector<bool> _bits;
  };

  //! mu(x, x) = 1, mu(x, y) = -sum_{x <= z < y} mu(x, z) for x < y, and 0
  //! when x is not below y. Exact 64-bit integers.
  class MobiusFunction {
   public:
    //! Throws OrderError unless \p order is reflexive, antisymmetric and
    //! transitive.
    explicit MobiusFunction(OrderMatrix const& order);

    template <typename T, typename Leq>
    static MobiusFunction of(std::span<T const> elements, Leq&& leq) {
      OrderMatrix order(elements.size());
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
          order.set(i, j, leq(elements[i], elements[j]));
        }
      }
      return MobiusFunction(order);
    }

    std::size_t size() const noexcept {
      return _size;
    }
    std::int64_t operator()(std::size_t x, std::size_t y) const {
      return _values[x * _size + y];
    }

   private:
    std::size_t               _size;
    std::vector<std::int64_t> _values;
  };

}  // namespace sncat

#endif  // SNCAT_POSET_HPP_
