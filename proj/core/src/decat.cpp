#include "sncat/decat.hpp"

#include <algorithm>  // for lower_bound, sort
#include <map>        // for map
#include <string>     // for to_string
#include <tuple>      // for tuple
#include <utility>    // for move

#include "sncat/errors.hpp"
#include "sncat/partitions.hpp"
#include "sncat/poset.hpp"
#include "sncat/relations.hpp"

namespace sncat {

  ////////////////////////////////////////////////////////////////////////
  // AlgebraPresentation
  ////////////////////////////////////////////////////////////////////////

  AlgebraPresentation::AlgebraPresentation(std::vector<nlohmann::json> basis)
      : _basis(std::move(basis)),
        _unit(_basis.size(), 0),
        _products(_basis.size() * _basis.size()) {}

  std::size_t AlgebraPresentation::find(nlohmann::json const& label) const {
    for (std::size_t a = 0; a < _basis.size(); ++a) {
      if (_basis[a] == label) {
        return a;
      }
    }
    return kUndefined;
  }

  void AlgebraPresentation::set_unit(IntVector unit) {
    if (unit.size() != rank()) {
      throw DimensionError("unit has the wrong length");
    }
    _unit = std::move(unit);
  }

  void AlgebraPresentation::add(std::size_t  a,
                                std::size_t  b,
                                std::size_t  c,
                                std::int64_t v) {
    if (a >= rank() || b >= rank() || c >= rank()) {
      throw RangeError("structure constant index out of range");
    }
    auto& terms = _products[a * rank() + b];
    auto  it    = std::lower_bound(
        terms.begin(), terms.end(), c, [](auto const& t, std::size_t x) {
          return t.first < x;
        });
    if (it != terms.end() && it->first == c) {
      it->second += v;
      if (it->second == 0) {
        terms.erase(it);
      }
    } else if (v != 0) {
      terms.insert(it, {c, v});
    }
  }

  IntVector AlgebraPresentation::basis_vector(std::size_t a) const {
    IntVector x(rank(), 0);
    x.at(a) = 1;
    return x;
  }

  IntVector AlgebraPresentation::multiply(IntVector const& x,
                                          IntVector const& y) const {
    if (x.size() != rank() || y.size() != rank()) {
      throw DimensionError("vector has the wrong length");
    }
    IntVector z(rank(), 0);
    for (std::size_t a = 0; a < rank(); ++a) {
      if (x[a] == 0) {
        continue;
      }
      for (std::size_t b = 0; b < rank(); ++b) {
        if (y[b] == 0) {
          continue;
        }
        for (auto const& [c, v] : product(a, b)) {
          z[c] += x[a] * y[b] * v;
        }
      }
    }
    return z;
  }

  std::optional<nlohmann::json>
  AlgebraPresentation::associativity_failure() const {
    auto const k = rank();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        auto const ab = multiply(basis_vector(a), basis_vector(b));
        for (std::size_t c = 0; c < k; ++c) {
          auto const lhs = multiply(ab, basis_vector(c));
          IntVector  bc(k, 0);
          for (auto const& [d, v] : product(b, c)) {
            bc[d] = v;
          }
          if (lhs != multiply(basis_vector(a), bc)) {
            return nlohmann::json{_basis[a], _basis[b], _basis[c]};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<nlohmann::json> AlgebraPresentation::unit_failure() const {
    for (std::size_t a = 0; a < rank(); ++a) {
      auto const x = basis_vector(a);
      if (multiply(_unit, x) != x || multiply(x, _unit) != x) {
        return std::optional<nlohmann::json>(std::in_place, _basis[a]);
      }
    }
    return std::nullopt;
  }

  void to_json(nlohmann::json& j, AlgebraPresentation const& A) {
    auto sc = nlohmann::json::array();
    for (std::size_t a = 0; a < A.rank(); ++a) {
      for (std::size_t b = 0; b < A.rank(); ++b) {
        for (auto const& [c, v] : A.product(a, b)) {
          sc.push_back({a, b, c, v});
        }
      }
    }
    j = {{"rank", A.rank()},
         {"basis", A.basis()},
         {"unit", A.unit()},
         {"sc", std::move(sc)}};
  }

  AlgebraPresentation
  semigroup_algebra(std::vector<nlohmann::json> const&           labels,
                    std::vector<std::vector<std::size_t>> const& product,
                    std::size_t                                  unit) {
    auto const k = labels.size();
    if (product.size() != k || unit >= k) {
      throw DimensionError("product table does not match the labels");
    }
    AlgebraPresentation A(labels);
    for (std::size_t a = 0; a < k; ++a) {
      if (product[a].size() != k) {
        throw DimensionError("product table is not square");
      }
      for (std::size_t b = 0; b < k; ++b) {
        if (product[a][b] >= k) {
          throw AlgebraError("product is not closed");
        }
        A.add(a, b, product[a][b], 1);
      }
    }
    A.set_unit(A.basis_vector(unit));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          if (product[product[a][b]][c] != product[a][product[b][c]]) {
            throw AlgebraError("product is not associative at "
                               + labels[a].dump() + ", " + labels[b].dump()
                               + ", " + labels[c].dump());
          }
        }
      }
    }
    if (auto w = A.unit_failure()) {
      throw AlgebraError("not a unit: " + w->dump());
    }
    return A;
  }

  AlgebraPresentation semigroup_algebra(OrderedMonoid const& M) {
    return semigroup_algebra(M.labels, M.product, M.unit);
  }

  ////////////////////////////////////////////////////////////////////////
  // Möbius bases
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Leq>
    void check_unitriangular(std::vector<MobiusBasisElement> const& basis,
                             Leq&&                                  leq) {
      for (auto const& m : basis) {
        for (std::size_t t = 0; t < m.expansion.size(); ++t) {
          auto const v = m.expansion[t];
          if ((t == m.element && v != 1) || (v != 0 && !leq(t, m.element))) {
            throw AlgebraError("Möbius basis is not unitriangular at "
                               + std::to_string(m.element));
          }
        }
      }
    }
  }  // namespace

  std::vector<MobiusBasisElement> mobius_basis_is(std::size_t n) {
    if (n == 0 || n > 5) {
      throw RangeError("n must be in [1, 5]");
    }
    auto const elements = symmetric_inverse_monoid(n);
    auto       index    = [&](PartialBijection const& p) {
      return static_cast<std::size_t>(
          std::lower_bound(elements.begin(), elements.end(), p)
          - elements.begin());
    };
    std::vector<MobiusBasisElement> result;
    for (std::size_t s = 0; s < elements.size(); ++s) {
      auto const rel    = elements[s].to_relation();
      auto const domain = elements[s].domain();
      IntVector  expansion(elements.size(), 0);
      // Subsets X of the domain, via submasks.
      auto const full = domain.mask();
      for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
        PointSet const X(sub);
        auto const     r = PartialBijection::from_relation(
            compose(rel, BinaryRelation::identity_on(n, X)));
        auto const sign = ((domain.size() - X.size()) % 2 == 0) ? 1 : -1;
        expansion[index(r)] += sign;
        if (sub == 0) {
          break;
        }
      }
      result.push_back({s, std::move(expansion)});
    }
    check_unitriangular(result, [&](std::size_t t, std::size_t s) {
      return is_subrelation(elements[t].to_relation(),
                            elements[s].to_relation());
    });
    return result;
  }

  std::vector<MobiusBasisElement> mobius_basis_fstar(std::size_t n) {
    if (n == 0 || n > 4) {
      throw RangeError("n must be in [1, 4]");
    }
    auto const elements = maximal_factorizable_submonoid(n);
    auto const mu       = MobiusFunction::of(
        std::span<SetPartition const>(elements),
        [](SetPartition const& a, SetPartition const& b) {
          return refines(a, b);
        });
    std::vector<MobiusBasisElement> result;
    for (std::size_t s = 0; s < elements.size(); ++s) {
      IntVector expansion(elements.size(), 0);
      for (std::size_t t = 0; t < elements.size(); ++t) {
        expansion[t] = mu(s, t);
      }
      result.push_back({s, std::move(expansion)});
    }
    // Support lies above s.
    check_unitriangular(result, [&](std::size_t t, std::size_t s) {
      return refines(elements[s], elements[t]);
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Grothendieck rings
  ////////////////////////////////////////////////////////////////////////

  AlgebraPresentation grothendieck_ring(CompletedCategory const& K) {
    auto const& C       = K.linear().category();
    auto const& classes = K.indecomposables();

    std::vector<nlohmann::json>                                    labels;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>
        class_of;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (classes[k].label_cell == kUndefined) {
        throw AlgebraError("indecomposable class without a label");
      }
      labels.push_back(C.cell_label(classes[k].label_cell));
      for (auto f : classes[k].members) {
        class_of.emplace(std::tuple{classes[k].source, classes[k].target, f},
                         k);
      }
    }

    AlgebraPresentation A(labels);
    IntVector           unit(classes.size(), 0);
    for (std::size_t g = 0; g < classes.size(); ++g) {
      auto const& G = classes[g];
      if (G.source == G.target
          && C.id1(K.objects()[G.source].object) == G.representative()) {
        unit[g] = 1;
      }
      for (std::size_t f = 0; f < classes.size(); ++f) {
        auto const& F = classes[f];
        if (F.target != G.source) {
          continue;
        }
        auto const gf = C.compose1(G.representative(), F.representative());
        CompletedOneMorphism const composite{F.source, G.target, gf};
        auto it = class_of.find({F.source, G.target, gf});
        if (it == class_of.end()) {
          if (!K.is_zero(composite)) {
            throw AlgebraError("composite lies in no indecomposable class");
          }
          continue;
        }
        A.add(g, f, it->second, 1);
      }
    }
    A.set_unit(std::move(unit));
    return A;
  }

  void to_json(nlohmann::json& j, IsomorphismReport const& report) {
    j = {{"passed", report.passed},
         {"products_checked", report.products_checked},
         {"products_failed", report.products_failed},
         {"unit_ok", report.unit_ok},
         {"determinant", report.determinant},
         {"witness", report.witness}};
  }

  namespace {
    Rational determinant(std::vector<IntVector> const& rows) {
      auto const                         k = rows.size();
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != k) {
          return 0;
        }
        for (std::size_t j = 0; j < k; ++j) {
          m[i][j] = static_cast<long>(rows[i][j]);
        }
      }
      Rational det = 1;
      for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) {
          ++pivot;
        }
        if (pivot == k) {
          return 0;
        }
        if (pivot != col) {
          std::swap(m[pivot], m[col]);
          det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < k; ++i) {
          if (m[i][col] == 0) {
            continue;
          }
          Rational const factor = m[i][col] / m[col][col];
          for (std::size_t j = col; j < k; ++j) {
            m[i][j] -= factor * m[col][j];
          }
        }
      }
      return det;
    }
  }  // namespace

  IsomorphismReport verify_isomorphism(AlgebraPresentation const&    A,
                                       AlgebraPresentation const&    B,
                                       std::vector<IntVector> const& map) {
    if (map.size() != A.rank()) {
      throw DimensionError("map has the wrong number of images");
    }
    for (auto const& x : map) {
      if (x.size() != B.rank()) {
        throw DimensionError("image has the wrong length");
      }
    }
    IsomorphismReport report;
    auto              apply = [&](IntVector const& x) {
      IntVector y(B.rank(), 0);
      for (std::size_t a = 0; a < A.rank(); ++a) {
        if (x[a] != 0) {
          for (std::size_t b = 0; b < B.rank(); ++b) {
            y[b] += x[a] * map[a][b];
          }
        }
      }
      return y;
    };
    for (std::size_t a = 0; a < A.rank(); ++a) {
      for (std::size_t b = 0; b < A.rank(); ++b) {
        ++report.products_checked;
        IntVector ab(A.rank(), 0);
        for (auto const& [c, v] : A.product(a, b)) {
          ab[c] = v;
        }
        if (apply(ab) != B.multiply(map[a], map[b])) {
          ++report.products_failed;
          if (report.witness.is_null()) {
            report.witness = {{"a", A.basis()[a]}, {"b", A.basis()[b]}};
          }
        }
      }
    }
    report.unit_ok = apply(A.unit()) == B.unit();
    if (!report.unit_ok && report.witness.is_null()) {
      report.witness = {{"unit", "image of the unit is not the unit"}};
    }
    if (A.rank() == B.rank()) {
      auto const det = determinant(map);
      if (det.get_den() == 1 && det.get_num().fits_slong_p()) {
        report.determinant = det.get_num().get_si();
      }
    }
    bool const invertible = report.determinant == 1 || report.determinant == -1;
    if (!invertible && report.witness.is_null()) {
      report.witness = {{"determinant", report.determinant}};
    }
    report.passed = report.products_failed == 0 && report.unit_ok && invertible;
    return report;
  }

  std::vector<IntVector>
  label_map(AlgebraPresentation const&             A,
            AlgebraPresentation const&             B,
            std::vector<MobiusBasisElement> const& mobius) {
    std::vector<IntVector> map;
    for (auto const& label : A.basis()) {
      auto const b = B.find(label);
      if (b == kUndefined) {
        throw RangeError("no basis element labelled " + label.dump());
      }
      map.push_back(mobius.at(b).expansion);
    }
    return map;
  }

  AlgebraPresentation ordered_monoid_decat(OrderedMonoid const& M) {
    CompletedCategory const K{
        LinearTwoCategory(ordered_monoid_two_category(M))};
    auto const          G = grothendieck_ring(K);
    auto const&         classes = K.indecomposables();
    std::vector<nlohmann::json> labels;
    for (auto const& k : classes) {
      labels.push_back(M.labels.at(k.representative()));
    }
    AlgebraPresentation A(std::move(labels));
    for (std::size_t a = 0; a < A.rank(); ++a) {
      for (std::size_t b = 0; b < A.rank(); ++b) {
        for (auto const& [c, v] : G.product(a, b)) {
          A.add(a, b, c, v);
        }
      }
    }
    A.set_unit(G.unit());
    return A;
  }

}  // namespace sncat
