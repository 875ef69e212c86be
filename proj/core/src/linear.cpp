#include "sncat/linear.hpp"

#include <algorithm>  // for sort, find
#include <numeric>    // for iota
#include <string>     // for string
#include <utility>    // for move

#include "sncat/errors.hpp"
#include "sncat/partitions.hpp"
#include "sncat/poset.hpp"
#include "sncat/relations.hpp"

namespace sncat {

  std::string to_string(Rational const& q) {
    Rational r = q;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }

  ////////////////////////////////////////////////////////////////////////
  // LinearElement
  ////////////////////////////////////////////////////////////////////////

  LinearElement LinearElement::basis(std::size_t source,
                                     std::size_t target,
                                     std::size_t cell) {
    LinearElement x(source, target);
    x._coeffs.emplace(cell, 1);
    return x;
  }

  Rational LinearElement::coefficient(std::size_t cell) const {
    auto it = _coeffs.find(cell);
    return it == _coeffs.end() ? Rational(0) : it->second;
  }

  void LinearElement::add(std::size_t cell, Rational const& c) {
    Rational v = c;
    v.canonicalize();
    if (v == 0) {
      return;
    }
    auto [it, inserted] = _coeffs.emplace(cell, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) {
        _coeffs.erase(it);
      }
    }
  }

  void LinearElement::check_compatible(LinearElement const& other) const {
    if (_source != other._source || _target != other._target) {
      throw DimensionError("elements of different hom-spaces");
    }
  }

  LinearElement& LinearElement::operator+=(LinearElement const& other) {
    check_compatible(other);
    for (auto const& [c, v] : other._coeffs) {
      add(c, v);
    }
    return *this;
  }

  LinearElement& LinearElement::operator-=(LinearElement const& other) {
    check_compatible(other);
    for (auto const& [c, v] : other._coeffs) {
      add(c, -v);
    }
    return *this;
  }

  LinearElement& LinearElement::operator*=(Rational const& c) {
    if (c == 0) {
      _coeffs.clear();
      return *this;
    }
    for (auto& [cell, v] : _coeffs) {
      v *= c;
    }
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // LinearTwoCategory
  ////////////////////////////////////////////////////////////////////////

  LinearElement LinearTwoCategory::basis(std::size_t f,
                                         std::size_t g,
                                         std::size_t cell) const {
    if (!_C.in_hom(f, g, cell)) {
      throw RangeError("cell is not in the hom-set");
    }
    return LinearElement::basis(f, g, cell);
  }

  LinearElement LinearTwoCategory::identity(std::size_t f) const {
    return LinearElement::basis(f, f, _C.id2(f));
  }

  bool LinearTwoCategory::is_well_typed(LinearElement const& x) const {
    for (auto const& [c, v] : x.coefficients()) {
      if (!_C.in_hom(x.source(), x.target(), c)) {
        return false;
      }
    }
    return true;
  }

  LinearElement LinearTwoCategory::vcomp(LinearElement const& beta,
                                         LinearElement const& alpha) const {
    if (alpha.target() != beta.source()) {
      throw DimensionError("vcomp: target of alpha is not source of beta");
    }
    LinearElement result(alpha.source(), beta.target());
    for (auto const& [b, vb] : beta.coefficients()) {
      for (auto const& [a, va] : alpha.coefficients()) {
        auto const c = _C.vcomp(b, a);
        if (c == kUndefined) {
          throw AlgebraError("vcomp: composite is not a cell");
        }
        result.add(c, vb * va);
      }
    }
    return result;
  }

  LinearElement LinearTwoCategory::hcomp(LinearElement const& beta,
                                         LinearElement const& alpha) const {
    auto const source = _C.compose1(beta.source(), alpha.source());
    auto const target = _C.compose1(beta.target(), alpha.target());
    if (source == kUndefined || target == kUndefined) {
      throw DimensionError("hcomp: 1-morphisms are not composable");
    }
    LinearElement result(source, target);
    for (auto const& [b, vb] : beta.coefficients()) {
      for (auto const& [a, va] : alpha.coefficients()) {
        auto const c = _C.hcomp(b, a);
        if (c == kUndefined) {
          throw AlgebraError("hcomp: composite is not a cell");
        }
        result.add(c, vb * va);
      }
    }
    return result;
  }

  nlohmann::json LinearTwoCategory::to_json(LinearElement const& x) const {
    auto coeffs = nlohmann::json::object();
    for (auto const& [c, v] : x.coefficients()) {
      coeffs[_C.cell_label(c).dump()] = sncat::to_string(v);
    }
    return {{"source", _C.one_morphism(x.source()).label},
            {"target", _C.one_morphism(x.target()).label},
            {"coeffs", std::move(coeffs)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // End(1_i) and its idempotents
  ////////////////////////////////////////////////////////////////////////

  EndAlgebra end_of_identity(LinearTwoCategory const& L, std::size_t object) {
    auto const& C = L.category();
    EndAlgebra  A;
    A.object   = object;
    A.identity = C.id1(object);
    A.basis    = C.hom(A.identity, A.identity);
    auto const k = A.basis.size();
    auto position = [&](std::size_t cell) {
      auto it = std::find(A.basis.begin(), A.basis.end(), cell);
      if (it == A.basis.end()) {
        throw AlgebraError("End(1) is not closed under composition");
      }
      return static_cast<std::size_t>(it - A.basis.begin());
    };
    A.product.assign(k, std::vector<std::size_t>(k));
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t a = 0; a < k; ++a) {
        auto const v = C.vcomp(A.basis[b], A.basis[a]);
        auto const h = C.hcomp(A.basis[b], A.basis[a]);
        if (v == kUndefined || v != h) {
          throw AlgebraError("Eckmann-Hilton: o_0 and o_1 differ on End(1) at "
                             + C.cell_label(A.basis[b]).dump() + ", "
                             + C.cell_label(A.basis[a]).dump());
        }
        A.product[b][a] = position(v);
      }
    }
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t a = 0; a < k; ++a) {
        if (A.product[b][a] != A.product[a][b]) {
          throw AlgebraError("Eckmann-Hilton: End(1) is not commutative");
        }
      }
    }
    A.unit = position(C.id2(A.identity));
    for (std::size_t a = 0; a < k; ++a) {
      if (A.product[A.unit][a] != a) {
        throw AlgebraError("End(1): identity 2-morphism is not a unit");
      }
    }
    return A;
  }

  std::vector<PrimitiveIdempotent>
  primitive_idempotents(LinearTwoCategory const& L, EndAlgebra const& A) {
    auto const k = A.dimension();
    for (std::size_t x = 0; x < k; ++x) {
      if (A.product[x][x] != x) {
        throw AlgebraError("End(1) basis is not a semilattice");
      }
    }
    OrderMatrix order(k);
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t x = 0; x < k; ++x) {
        order.set(y, x, A.product[y][x] == y);
      }
    }
    MobiusFunction const mu(order);

    std::vector<PrimitiveIdempotent> result;
    std::vector<std::size_t>         down;
    for (std::size_t x = 0; x < k; ++x) {
      LinearElement e(A.identity, A.identity);
      std::size_t   below = 0;
      for (std::size_t y = 0; y < k; ++y) {
        if (order.leq(y, x)) {
          e.add(A.basis[y], mu(y, x));
          ++below;
        }
      }
      result.push_back({A.basis[x], std::move(e)});
      down.push_back(below);
    }

    auto const    one = L.identity(A.identity);
    LinearElement sum(A.identity, A.identity);
    for (std::size_t x = 0; x < k; ++x) {
      auto const& e = result[x].element;
      if (e.is_zero() || L.vcomp(e, e) != e) {
        throw AlgebraError("not an idempotent: e_"
                           + L.category().cell_label(A.basis[x]).dump());
      }
      for (std::size_t y = x + 1; y < k; ++y) {
        if (!L.vcomp(e, result[y].element).is_zero()) {
          throw AlgebraError("idempotents are not orthogonal");
        }
      }
      sum += e;
    }
    if (sum != one) {
      throw AlgebraError("idempotents do not sum to the identity");
    }

    std::vector<std::size_t> order_index(k);
    std::iota(order_index.begin(), order_index.end(), 0);
    std::sort(order_index.begin(), order_index.end(), [&](auto a, auto b) {
      if (down[a] != down[b]) {
        return down[a] > down[b];
      }
      return A.basis[a] < A.basis[b];
    });
    std::vector<PrimitiveIdempotent> sorted;
    for (auto i : order_index) {
      sorted.push_back(std::move(result[i]));
    }
    return sorted;
  }

  LinearElement sandwich(LinearTwoCategory const& L,
                         LinearElement const&     eY,
                         LinearElement const&     x,
                         LinearElement const&     eX) {
    return L.hcomp(L.hcomp(eY, x), eX);
  }

  std::vector<LinearElement> row_reduce(std::vector<LinearElement> elements) {
    std::vector<LinearElement> rows;
    for (auto& x : elements) {
      // Reduce x against the current rows, whose pivots are their first
      // cells and which are zero on each other's pivots.
      for (auto const& r : rows) {
        auto const pivot = r.coefficients().begin()->first;
        auto const c     = x.coefficient(pivot);
        if (c != 0) {
          x -= c * r;
        }
      }
      if (x.is_zero()) {
        continue;
      }
      auto const pivot = x.coefficients().begin()->first;
      x *= Rational(1) / x.coefficient(pivot);
      for (auto& r : rows) {
        auto const c = r.coefficient(pivot);
        if (c != 0) {
          r -= c * x;
        }
      }
      rows.push_back(std::move(x));
    }
    std::sort(rows.begin(), rows.end(), [](auto const& a, auto const& b) {
      return a.coefficients().begin()->first < b.coefficients().begin()->first;
    });
    return rows;
  }

  ////////////////////////////////////////////////////////////////////////
  // CompletedCategory
  ////////////////////////////////////////////////////////////////////////

  CompletedCategory::CompletedCategory(LinearTwoCategory L) : _L(std::move(L)) {
    for (std::size_t i = 0; i < _L.category().object_count(); ++i) {
      _end.push_back(end_of_identity(_L, i));
      for (auto& e : primitive_idempotents(_L, _end.back())) {
        _objects.push_back({i, e.cell, std::move(e.element)});
      }
    }
  }

  LinearElement CompletedCategory::sandwich(std::size_t          target,
                                            LinearElement const& x,
                                            std::size_t          source) const {
    return sncat::sandwich(
        _L, _objects.at(target).idempotent, x, _objects.at(source).idempotent);
  }

  LinearElement
  CompletedCategory::identity(CompletedOneMorphism const& F) const {
    auto const& f = _L.category().one_morphism(F.one);
    if (f.source != _objects.at(F.source).object
        || f.target != _objects.at(F.target).object) {
      throw DimensionError("1-morphism does not match the completed objects");
    }
    return sandwich(F.target, _L.identity(F.one), F.source);
  }

  bool CompletedCategory::is_zero(CompletedOneMorphism const& F) const {
    return identity(F).is_zero();
  }

  std::vector<LinearElement>
  CompletedCategory::hom_spanning_set(CompletedOneMorphism const& F,
                                      CompletedOneMorphism const& G) const {
    if (F.source != G.source || F.target != G.target) {
      throw DimensionError("completed 1-morphisms have different objects");
    }
    identity(F);
    identity(G);
    std::vector<LinearElement> result;
    for (auto c : _L.category().hom(F.one, G.one)) {
      auto x = sandwich(F.target, _L.basis(F.one, G.one, c), F.source);
      if (!x.is_zero()) {
        result.push_back(std::move(x));
      }
    }
    return result;
  }

  std::vector<LinearElement>
  CompletedCategory::hom_basis(CompletedOneMorphism const& F,
                               CompletedOneMorphism const& G) const {
    return row_reduce(hom_spanning_set(F, G));
  }

  IsomorphismResult
  CompletedCategory::is_isomorphic(CompletedOneMorphism const& F,
                                   CompletedOneMorphism const& G) const {
    auto const        idF = identity(F);
    auto const        idG = identity(G);
    IsomorphismResult result;
    if (F.source != G.source || F.target != G.target) {
      throw DimensionError("completed 1-morphisms have different objects");
    }
    if (idF.is_zero() || idG.is_zero()) {
      result.isomorphic = idF.is_zero() && idG.is_zero();
      if (result.isomorphic) {
        result.forward  = LinearElement(F.one, G.one);
        result.backward = LinearElement(G.one, F.one);
      }
      return result;
    }
    auto const to   = hom_spanning_set(F, G);
    auto const from = hom_spanning_set(G, F);
    auto const pivot = idF.coefficients().begin()->first;
    for (auto const& f : to) {
      for (auto const& g : from) {
        ++result.checked;
        auto const gf = _L.vcomp(g, f);
        Rational const c = gf.coefficient(pivot) / idF.coefficient(pivot);
        if (c == 0 || gf != c * idF) {
          continue;
        }
        auto const inv = (Rational(1) / c) * g;
        if (_L.vcomp(inv, f) == idF && _L.vcomp(f, inv) == idG) {
          result.isomorphic = true;
          result.forward    = f;
          result.backward   = inv;
          return result;
        }
      }
    }
    return result;
  }

  std::vector<CompletedOneMorphism>
  CompletedCategory::nonzero_one_morphisms() const {
    auto const&                       C = _L.category();
    std::vector<CompletedOneMorphism> result;
    for (std::size_t s = 0; s < _objects.size(); ++s) {
      for (std::size_t t = 0; t < _objects.size(); ++t) {
        for (std::size_t f = 0; f < C.one_morphism_count(); ++f) {
          auto const& m = C.one_morphism(f);
          if (m.source != _objects[s].object || m.target != _objects[t].object) {
            continue;
          }
          CompletedOneMorphism F{s, t, f};
          if (!is_zero(F)) {
            result.push_back(F);
          }
        }
      }
    }
    return result;
  }

  bool CompletedCategory::is_local(nlohmann::json* witness) const {
    auto const& C = _L.category();
    for (std::size_t s = 0; s < _objects.size(); ++s) {
      CompletedOneMorphism one{s, s, C.id1(_objects[s].object)};
      if (auto d = end_dimension(one); d != 1) {
        if (witness != nullptr) {
          *witness = {{"object", s}, {"end_dimension", d}};
        }
        return false;
      }
    }
    for (auto const& F : nonzero_one_morphisms()) {
      if (auto d = end_dimension(F); d != 1) {
        if (witness != nullptr) {
          *witness = {{"source", F.source},
                      {"target", F.target},
                      {"one", C.one_morphism(F.one).label},
                      {"end_dimension", d}};
        }
        return false;
      }
    }
    return true;
  }

  std::vector<IndecomposableClass> const&
  CompletedCategory::indecomposables() const {
    if (_classes) {
      return *_classes;
    }
    auto const&                      C = _L.category();
    std::vector<IndecomposableClass> classes;
    for (auto const& F : nonzero_one_morphisms()) {
      if (end_dimension(F) != 1) {
        throw AlgebraError("completed 1-morphism over "
                           + C.one_morphism(F.one).label.dump()
                           + " is not local");
      }
      auto const label = C.hcomp(C.id2(F.one), _objects[F.source].cell);
      bool       found = false;
      for (auto& k : classes) {
        if (k.source != F.source || k.target != F.target) {
          continue;
        }
        CompletedOneMorphism rep{k.source, k.target, k.representative()};
        if (is_isomorphic(F, rep).isomorphic) {
          if (label != k.label_cell) {
            throw AlgebraError("isomorphic 1-morphisms with different labels");
          }
          k.members.push_back(F.one);
          found = true;
          break;
        }
      }
      if (!found) {
        classes.push_back({F.source, F.target, {F.one}, label});
      }
    }
    _classes = std::move(classes);
    return *_classes;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fiat checks
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<std::size_t>> candidate_star(TwoCategory const& C) {
    std::vector<std::size_t> star(C.cell_count(), kUndefined);
    if (C.name() == "A") {
      for (std::size_t c = 0; c < C.cell_count(); ++c) {
        auto const r = C.cell_label(c).get<BinaryRelation>();
        star[c]      = C.find_cell(nlohmann::json(r.transpose()));
      }
      return star;
    }
    if (C.name() == "B") {
      for (std::size_t c = 0; c < C.cell_count(); ++c) {
        auto const p = C.cell_label(c).get<SetPartition>();
        star[c]      = C.find_cell(nlohmann::json(p.flip()));
      }
      return star;
    }
    return std::nullopt;
  }

  namespace {
    // Cell-level triangle identities for unit eta: 1 -> dual one and counit
    // eps: one dual -> 1.
    bool triangles(TwoCategory const& C,
                   std::size_t        one,
                   std::size_t        dual,
                   std::size_t        eta,
                   std::size_t        eps) {
      auto const f  = C.id2(one);
      auto const g  = C.id2(dual);
      auto const a  = C.hcomp(f, eta);
      auto const b  = C.hcomp(eps, f);
      auto const c  = C.hcomp(eta, g);
      auto const d  = C.hcomp(g, eps);
      if (a == kUndefined || b == kUndefined || c == kUndefined
          || d == kUndefined) {
        return false;
      }
      return C.vcomp(b, a) == f && C.vcomp(d, c) == g;
    }

    AntiInvolutionReport check_star(TwoCategory const& C) {
      AntiInvolutionReport report;
      auto const           star = candidate_star(C);
      if (!star) {
        return report;
      }
      report.available           = true;
      report.involutive          = true;
      report.typing              = true;
      report.hcomp_contravariant = true;
      report.vcomp_contravariant = true;
      auto const& s              = *star;
      auto        label          = [&](std::size_t c) {
        return c == kUndefined ? nlohmann::json("undefined")
                                        : C.cell_label(c);
      };
      for (std::size_t c = 0; c < C.cell_count(); ++c) {
        ++report.checked;
        if (s[c] == kUndefined || s[s[c]] != c) {
          if (report.involutive && report.witness.is_null()) {
            report.witness = {{"involutive", label(c)}};
          }
          report.involutive = false;
        }
      }
      auto const m = C.one_morphism_count();
      for (std::size_t f = 0; f < m; ++f) {
        for (std::size_t g = 0; g < m; ++g) {
          auto const fs = C.inverse(f), gs = C.inverse(g);
          for (auto c : C.hom(f, g)) {
            ++report.checked;
            if (fs == kUndefined || gs == kUndefined || s[c] == kUndefined
                || !C.in_hom(fs, gs, s[c])) {
              if (report.typing && report.witness.is_null()) {
                report.witness = {{"typing", label(c)}};
              }
              report.typing = false;
            }
          }
        }
      }
      for (std::size_t b = 0; b < C.cell_count(); ++b) {
        for (std::size_t a = 0; a < C.cell_count(); ++a) {
          if (s[a] == kUndefined || s[b] == kUndefined) {
            continue;
          }
          ++report.checked;
          auto const h = C.hcomp(b, a);
          if (h != kUndefined
              && (s[h] == kUndefined || s[h] != C.hcomp(s[a], s[b]))) {
            if (report.hcomp_contravariant && report.witness.is_null()) {
              report.witness = {{"hcomp", {label(b), label(a)}}};
            }
            report.hcomp_contravariant = false;
          }
          auto const v = C.vcomp(b, a);
          if (v != kUndefined
              && (s[v] == kUndefined || s[v] != C.vcomp(s[a], s[b]))) {
            if (report.vcomp_contravariant && report.witness.is_null()) {
              report.witness = {{"vcomp", {label(b), label(a)}}};
            }
            report.vcomp_contravariant = false;
          }
        }
      }
      return report;
    }
  }  // namespace

  FiatReport fiat_check(CompletedCategory const& K) {
    auto const& L = K.linear();
    auto const& C = L.category();
    FiatReport  report;
    report.category = C.name();
    report.n        = C.degree();
    report.fiat     = true;

    auto const nonzero = K.nonzero_one_morphisms();
    for (std::size_t f = 0; f < C.one_morphism_count(); ++f) {
      AdjunctionResult adj;
      adj.one  = f;
      adj.dual = C.inverse(f);
      if (adj.dual == kUndefined) {
        report.fiat    = false;
        report.witness = {{"one", C.one_morphism(f).label},
                          {"reason", "no inverse 1-morphism"}};
        adj.labels["one"] = C.one_morphism(f).label;
        report.adjunctions.push_back(adj);
        continue;
      }
      auto const& m    = C.one_morphism(f);
      auto const  unit = C.hom(C.id1(m.source), C.compose1(adj.dual, f));
      auto const  cou  = C.hom(C.compose1(f, adj.dual), C.id1(m.target));
      for (auto eta : unit) {
        for (auto eps : cou) {
          if (triangles(C, f, adj.dual, eta, eps)) {
            adj.unit_cell   = eta;
            adj.counit_cell = eps;
            adj.triangles   = true;
            break;
          }
        }
        if (adj.triangles) {
          break;
        }
      }
      if (adj.triangles) {
        adj.completed_triangles = true;
        auto const eta = LinearElement::basis(
            C.id1(m.source), C.compose1(adj.dual, f), adj.unit_cell);
        auto const eps = LinearElement::basis(
            C.compose1(f, adj.dual), C.id1(m.target), adj.counit_cell);
        for (auto const& F : nonzero) {
          if (F.one != f) {
            continue;
          }
          CompletedOneMorphism const G{F.target, F.source, adj.dual};
          auto const                 idF  = K.identity(F);
          auto const                 idG  = K.identity(G);
          auto const                 etaK = K.sandwich(F.source, eta, F.source);
          auto const                 epsK = K.sandwich(F.target, eps, F.target);
          auto const t1 = L.vcomp(L.hcomp(epsK, idF), L.hcomp(idF, etaK));
          auto const t2 = L.vcomp(L.hcomp(idG, epsK), L.hcomp(etaK, idG));
          ++adj.completed_checked;
          if (t1 != idF || t2 != idG) {
            adj.completed_triangles = false;
          }
        }
      }
      adj.labels["one"] = m.label;
      adj.labels["dual"] = C.one_morphism(adj.dual).label;
      if (adj.triangles) {
        adj.labels["unit"]   = C.cell_label(adj.unit_cell);
        adj.labels["counit"] = C.cell_label(adj.counit_cell);
      }
      if (!adj.triangles || !adj.completed_triangles) {
        report.fiat = false;
        if (report.witness.is_null()) {
          report.witness = {{"one", m.label},
                            {"reason", "triangle identities fail"}};
        }
      }
      report.adjunctions.push_back(adj);
    }
    report.star = check_star(C);
    return report;
  }

  FiatReport fiat_check(OrderedMonoid const& M) {
    FiatReport report;
    report.category = M.name;
    report.n        = M.degree;
    auto const k    = M.size();
    auto const u    = M.unit;
    auto const& P   = M.product;

    std::vector<bool> invertible(k, false);
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        if (P[s][t] == u && P[t][s] == u) {
          invertible[s] = true;
        }
      }
    }
    // Right adjoint t of s: 1 <= t s and s t <= 1. Left adjoint: 1 <= s t
    // and t s <= 1.
    auto has_adjoint = [&](std::size_t s, bool right) {
      for (std::size_t t = 0; t < k; ++t) {
        auto const inner = right ? P[t][s] : P[s][t];
        auto const outer = right ? P[s][t] : P[t][s];
        if (M.order.leq(u, inner) && M.order.leq(outer, u)) {
          return true;
        }
      }
      return false;
    };
    auto side_empty = [&](std::size_t s, bool unit_side) {
      for (std::size_t t = 0; t < k; ++t) {
        if (unit_side ? M.order.leq(u, P[t][s]) : M.order.leq(P[s][t], u)) {
          return false;
        }
      }
      return true;
    };

    std::optional<std::size_t> witness;
    bool                       right = true;
    for (bool r : {true, false}) {
      for (std::size_t s = 0; s < k; ++s) {
        if (invertible[s] || has_adjoint(s, r)) {
          continue;
        }
        if (!witness || M.rank[s] > M.rank[*witness]) {
          witness = s;
        }
      }
      if (witness) {
        right = r;
        break;
      }
    }
    report.fiat = !witness.has_value();
    if (witness) {
      auto const s   = *witness;
      report.witness = {{"s", M.labels[s]},
                        {"rank", M.rank[s]},
                        {"invertible", false},
                        {"missing", right ? "right adjoint" : "left adjoint"}};
      if (right) {
        report.witness["unit_side_empty"]   = side_empty(s, true);
        report.witness["counit_side_empty"] = side_empty(s, false);
      }
    }
    return report;
  }

  void to_json(nlohmann::json& j, FiatReport const& report) {
    auto adjunctions = nlohmann::json::array();
    for (auto const& a : report.adjunctions) {
      adjunctions.push_back({{"one", a.labels.at("one")},
                             {"dual", a.labels.value("dual", nlohmann::json())},
                             {"unit", a.labels.value("unit", nlohmann::json())},
                             {"counit",
                              a.labels.value("counit", nlohmann::json())},
                             {"triangles", a.triangles},
                             {"completed_triangles", a.completed_triangles},
                             {"completed_checked", a.completed_checked}});
    }
    nlohmann::json star;
    if (report.star.available) {
      star = {{"involutive", report.star.involutive},
              {"typing", report.star.typing},
              {"hcomp_contravariant", report.star.hcomp_contravariant},
              {"vcomp_contravariant", report.star.vcomp_contravariant},
              {"checked", report.star.checked},
              {"witness", report.star.witness}};
    }
    j = {{"category", report.category},
         {"n", report.n},
         {"fiat", report.fiat},
         {"adjunctions", std::move(adjunctions)},
         {"anti_involution", std::move(star)},
         {"witness", report.witness}};
  }

}  // namespace sncat
