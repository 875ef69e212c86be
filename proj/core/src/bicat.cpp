#include "sncat/bicat.hpp"

#include <algorithm>  // for sort, unique, binary_search
#include <memory>     // for make_shared
#include <random>     // for mt19937_64, uniform_int_distribution
#include <string>     // for string, to_string
#include <utility>    // for move, pair

#include "sncat/errors.hpp"

namespace sncat {

  ////////////////////////////////////////////////////////////////////////
  // TwoCategory
  ////////////////////////////////////////////////////////////////////////

  TwoCategory::TwoCategory(std::string name,
                           std::size_t degree,
                           std::size_t objects)
      : _name(std::move(name)),
        _degree(degree),
        _objects(objects),
        _id1(objects, kUndefined) {}

  std::size_t TwoCategory::add_one_morphism(std::size_t    source,
                                            std::size_t    target,
                                            nlohmann::json label) {
    if (source >= _objects || target >= _objects) {
      throw RangeError("add_one_morphism: object out of range");
    }
    auto const m = _one.size();
    _one.push_back({source, target, std::move(label)});
    // Re-layout the square tables for the new 1-morphism count.
    std::vector<std::size_t>              compose1((m + 1) * (m + 1),
                                      kUndefined);
    std::vector<std::vector<std::size_t>> hom((m + 1) * (m + 1));
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t f = 0; f < m; ++f) {
        compose1[g * (m + 1) + f] = _compose1[g * m + f];
        hom[g * (m + 1) + f]      = std::move(_hom[g * m + f]);
      }
    }
    _compose1 = std::move(compose1);
    _hom      = std::move(hom);
    _id2.push_back(kUndefined);
    return m;
  }

  std::size_t TwoCategory::add_cell(nlohmann::json label) {
    auto key = label.dump();
    if (_cell_index.contains(key)) {
      throw RangeError("add_cell: duplicate cell " + key);
    }
    auto const c = _cells.size();
    _cell_index.emplace(std::move(key), c);
    _cells.push_back(std::move(label));
    return c;
  }

  void TwoCategory::set_compose1(std::size_t g, std::size_t f, std::size_t gf) {
    _compose1.at(g * _one.size() + f) = gf;
  }

  void TwoCategory::set_id1(std::size_t object, std::size_t f) {
    _id1.at(object) = f;
  }

  void TwoCategory::set_id2(std::size_t f, std::size_t cell) {
    _id2.at(f) = cell;
  }

  void TwoCategory::set_hom(std::size_t              f,
                            std::size_t              g,
                            std::vector<std::size_t> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    _hom.at(f * _one.size() + g) = std::move(cells);
  }

  namespace {
    std::uint64_t cell_key(std::size_t beta, std::size_t alpha) {
      return (static_cast<std::uint64_t>(beta) << 32) | alpha;
    }
  }  // namespace

  void TwoCategory::set_vcomp(std::size_t beta,
                              std::size_t alpha,
                              std::size_t cell) {
    if (beta >= _cells.size() || alpha >= _cells.size()) {
      throw RangeError("set_vcomp: cell out of range");
    }
    _vcomp[cell_key(beta, alpha)] = cell;
  }

  void TwoCategory::set_hcomp(std::size_t beta,
                              std::size_t alpha,
                              std::size_t cell) {
    if (beta >= _cells.size() || alpha >= _cells.size()) {
      throw RangeError("set_hcomp: cell out of range");
    }
    _hcomp[cell_key(beta, alpha)] = cell;
  }

  void TwoCategory::set_vcomp_rule(CellRule rule) {
    _vcomp_rule = std::move(rule);
  }

  void TwoCategory::set_hcomp_rule(CellRule rule) {
    _hcomp_rule = std::move(rule);
  }

  std::size_t TwoCategory::lookup(CellTable&      table,
                                  CellRule const& rule,
                                  std::size_t     beta,
                                  std::size_t     alpha) const {
    if (beta >= _cells.size() || alpha >= _cells.size()) {
      return kUndefined;
    }
    auto const key = cell_key(beta, alpha);
    if (auto it = table.find(key); it != table.end()) {
      return it->second;
    }
    auto const c = rule ? rule(beta, alpha) : kUndefined;
    table.emplace(key, c);
    return c;
  }

  std::size_t TwoCategory::find_cell(nlohmann::json const& label) const {
    auto it = _cell_index.find(label.dump());
    return it == _cell_index.end() ? kUndefined : it->second;
  }

  std::size_t
  TwoCategory::find_one_morphism(nlohmann::json const& label) const {
    for (std::size_t f = 0; f < _one.size(); ++f) {
      if (_one[f].label == label) {
        return f;
      }
    }
    return kUndefined;
  }

  bool TwoCategory::in_hom(std::size_t f, std::size_t g, std::size_t cell) const {
    auto const& h = hom(f, g);
    return std::binary_search(h.begin(), h.end(), cell);
  }

  std::size_t TwoCategory::inverse(std::size_t f) const {
    auto const& ff = one_morphism(f);
    for (std::size_t g = 0; g < _one.size(); ++g) {
      if (compose1(g, f) == id1(ff.source) && compose1(f, g) == id1(ff.target)) {
        return g;
      }
    }
    return kUndefined;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Builds a one-object 2-category whose 1-morphisms are the values in
    // `ones` (closed under `mul`) and whose cells are the union of all
    // hom-sets. Composites that are not cells are undefined.
    template <typename M,
              typename Cell,
              typename Mul,
              typename Hom,
              typename VComp,
              typename HComp,
              typename Id2>
    TwoCategory build_one_object(std::string           name,
                                 std::size_t           degree,
                                 std::vector<M> const& ones,
                                 M const&              unit,
                                 Mul                   mul,
                                 Hom                   hom,
                                 VComp                 vcomp,
                                 HComp                 hcomp,
                                 Id2                   id2) {
      TwoCategory C(std::move(name), degree, 1);
      for (auto const& f : ones) {
        C.add_one_morphism(0, 0, nlohmann::json(f));
      }
      auto index_of = [&](M const& m) {
        auto it = std::find(ones.begin(), ones.end(), m);
        if (it == ones.end()) {
          throw AlgebraError("1-morphisms are not closed under composition");
        }
        return static_cast<std::size_t>(it - ones.begin());
      };
      C.set_id1(0, index_of(unit));
      for (std::size_t g = 0; g < ones.size(); ++g) {
        for (std::size_t f = 0; f < ones.size(); ++f) {
          C.set_compose1(g, f, index_of(mul(ones[g], ones[f])));
        }
      }

      std::vector<std::vector<Cell>> homs(ones.size() * ones.size());
      std::vector<Cell>              universe;
      for (std::size_t f = 0; f < ones.size(); ++f) {
        for (std::size_t g = 0; g < ones.size(); ++g) {
          homs[f * ones.size() + g] = hom(ones[f], ones[g]);
          auto const& h             = homs[f * ones.size() + g];
          universe.insert(universe.end(), h.begin(), h.end());
        }
      }
      std::sort(universe.begin(), universe.end());
      universe.erase(std::unique(universe.begin(), universe.end()),
                     universe.end());
      auto cell_index = std::make_shared<std::map<Cell, std::size_t>>();
      for (auto const& c : universe) {
        cell_index->emplace(c, C.add_cell(nlohmann::json(c)));
      }
      auto cells  = std::make_shared<std::vector<Cell>>(std::move(universe));
      auto lookup = [cell_index](std::optional<Cell> const& c) {
        if (!c) {
          return kUndefined;
        }
        auto it = cell_index->find(*c);
        return it == cell_index->end() ? kUndefined : it->second;
      };
      for (std::size_t f = 0; f < ones.size(); ++f) {
        for (std::size_t g = 0; g < ones.size(); ++g) {
          std::vector<std::size_t> hc;
          for (auto const& c : homs[f * ones.size() + g]) {
            hc.push_back(cell_index->at(c));
          }
          C.set_hom(f, g, std::move(hc));
        }
        C.set_id2(f, lookup(id2(ones[f])));
      }
      C.set_vcomp_rule([cells, lookup, vcomp](std::size_t b, std::size_t a) {
        return lookup(vcomp((*cells)[b], (*cells)[a]));
      });
      C.set_hcomp_rule([cells, lookup, hcomp](std::size_t b, std::size_t a) {
        return lookup(hcomp((*cells)[b], (*cells)[a]));
      });
      return C;
    }

    void check_two_category_degree(std::size_t n) {
      if (n == 0 || n > kMaxTwoCategoryDegree) {
        throw RangeError("n must be in [1, "
                         + std::to_string(kMaxTwoCategoryDegree) + "]");
      }
    }
  }  // namespace

  std::vector<BinaryRelation> relation_hom(BinaryRelation const& x,
                                           BinaryRelation const& y) {
    return subrelations(intersect(x, y));
  }

  std::vector<SetPartition> partition_hom(SetPartition const& x,
                                          SetPartition const& y) {
    return coarsenings(join(x, y));
  }

  TwoCategory relation_two_category(std::size_t n) {
    check_two_category_degree(n);
    std::vector<BinaryRelation> ones;
    for (auto const& sigma : symmetric_group(n)) {
      ones.push_back(sigma.to_relation());
    }
    using R = BinaryRelation;
    return build_one_object<R, R>(
        "A",
        n,
        ones,
        R::identity(n),
        [](R const& g, R const& f) { return compose(g, f); },
        relation_hom,
        [](R const& b, R const& a) { return std::optional<R>(intersect(b, a)); },
        [](R const& b, R const& a) { return std::optional<R>(compose(b, a)); },
        [](R const& f) { return std::optional<R>(f); });
  }

  TwoCategory partition_two_category(std::size_t n) {
    check_two_category_degree(n);
    std::vector<SetPartition> ones;
    for (auto const& sigma : symmetric_group(n)) {
      ones.push_back(SetPartition::from_permutation(sigma));
    }
    using P = SetPartition;
    return build_one_object<P, P>(
        "B",
        n,
        ones,
        P::identity(n),
        [](P const& g, P const& f) { return product(g, f); },
        partition_hom,
        [](P const& b, P const& a) { return std::optional<P>(join(b, a)); },
        [](P const& b, P const& a) { return std::optional<P>(product(b, a)); },
        [](P const& f) { return std::optional<P>(f); });
  }

  OrderedMonoid symmetric_inverse_ordered_monoid(std::size_t n) {
    check_two_category_degree(n);
    auto const    elements = symmetric_inverse_monoid(n);
    OrderedMonoid M;
    M.name   = "ordered-ISn";
    M.degree = n;
    M.order  = OrderMatrix(elements.size());
    std::vector<BinaryRelation> rel;
    for (auto const& e : elements) {
      rel.push_back(e.to_relation());
      M.labels.emplace_back(rel.back());
      M.rank.push_back(e.rank());
    }
    M.product.assign(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) {
        auto const ab = compose(elements[a], elements[b]);
        M.product[a][b] = static_cast<std::size_t>(
            std::lower_bound(elements.begin(), elements.end(), ab)
            - elements.begin());
        M.order.set(a, b, is_subrelation(rel[a], rel[b]));
      }
    }
    M.unit = static_cast<std::size_t>(
        std::lower_bound(elements.begin(),
                         elements.end(),
                         PartialBijection::from_relation(
                             BinaryRelation::identity(n)))
        - elements.begin());
    return M;
  }

  OrderedMonoid factorizable_ordered_monoid(std::size_t n) {
    check_two_category_degree(n);
    auto const    elements = maximal_factorizable_submonoid(n);
    OrderedMonoid M;
    M.name   = "ordered-Fstar";
    M.degree = n;
    M.order  = OrderMatrix(elements.size());
    for (auto const& e : elements) {
      M.labels.emplace_back(e);
      M.rank.push_back(e.block_count());
    }
    auto index_of = [&](SetPartition const& p) {
      auto it = std::lower_bound(elements.begin(), elements.end(), p);
      if (it == elements.end() || *it != p) {
        throw AlgebraError("F*_n is not closed under the product");
      }
      return static_cast<std::size_t>(it - elements.begin());
    };
    M.product.assign(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) {
        M.product[a][b] = index_of(product(elements[a], elements[b]));
        M.order.set(a, b, refines(elements[a], elements[b]));
      }
    }
    M.unit = index_of(SetPartition::identity(n));
    return M;
  }

  TwoCategory ordered_monoid_two_category(OrderedMonoid const& M) {
    auto const k = M.size();
    // MobiusFunction validates reflexivity, antisymmetry and transitivity.
    MobiusFunction{M.order};
    for (std::size_t a = 0; a < k; ++a) {
      if (M.product[M.unit][a] != a || M.product[a][M.unit] != a) {
        throw AlgebraError(M.name + ": unit law fails");
      }
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          if (M.product[M.product[a][b]][c] != M.product[a][M.product[b][c]]) {
            throw AlgebraError(M.name + ": product is not associative");
          }
        }
      }
    }
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        if (!M.order.leq(s, t)) {
          continue;
        }
        for (std::size_t x = 0; x < k; ++x) {
          if (!M.order.leq(M.product[s][x], M.product[t][x])
              || !M.order.leq(M.product[x][s], M.product[x][t])) {
            throw OrderError(M.name + ": order is not admissible");
          }
        }
      }
    }

    using Cell = std::pair<std::size_t, std::size_t>;

    TwoCategory C(M.name, M.degree, 1);
    for (std::size_t s = 0; s < k; ++s) {
      C.add_one_morphism(0, 0, M.labels[s]);
    }
    C.set_id1(0, M.unit);
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t f = 0; f < k; ++f) {
        C.set_compose1(g, f, M.product[g][f]);
      }
    }
    std::map<Cell, std::size_t> cell_index;
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        if (M.order.leq(s, t)) {
          cell_index.emplace(
              Cell{s, t},
              C.add_cell({{"source", M.labels[s]}, {"target", M.labels[t]}}));
        }
      }
    }
    for (std::size_t s = 0; s < k; ++s) {
      C.set_id2(s, cell_index.at({s, s}));
      for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::size_t> cells;
        if (auto it = cell_index.find({s, t}); it != cell_index.end()) {
          cells.push_back(it->second);
        }
        C.set_hom(s, t, std::move(cells));
      }
    }
    for (auto const& [b, bi] : cell_index) {
      for (auto const& [a, ai] : cell_index) {
        if (a.second == b.first) {
          C.set_vcomp(bi, ai, cell_index.at({a.first, b.second}));
        }
        auto it = cell_index.find(
            {M.product[b.first][a.first], M.product[b.second][a.second]});
        if (it != cell_index.end()) {
          C.set_hcomp(bi, ai, it->second);
        }
      }
    }
    return C;
  }

  ////////////////////////////////////////////////////////////////////////
  // Axiom checking
  ////////////////////////////////////////////////////////////////////////

  bool AxiomReport::passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](auto const& a) {
      return a.passed;
    });
  }

  AxiomResult const& AxiomReport::find(std::string const& name) const {
    for (auto const& a : axioms) {
      if (a.name == name) {
        return a;
      }
    }
    throw RangeError("no axiom named " + name);
  }

  void to_json(nlohmann::json& j, AxiomReport const& report) {
    auto axioms = nlohmann::json::array();
    for (auto const& a : report.axioms) {
      axioms.push_back({{"name", a.name},
                        {"status", a.passed ? "pass" : "fail"},
                        {"checked", a.checked},
                        {"witness", a.witness}});
    }
    bool const sampled = report.mode.kind == CheckMode::Kind::sampled;
    j                  = {{"category", report.category},
                          {"n", report.n},
                          {"mode", sampled ? "sampled" : "exhaustive"},
                          {"seed",
                           sampled ? nlohmann::json(report.mode.seed)
                                   : nlohmann::json(nullptr)},
                          {"axioms", std::move(axioms)}};
  }

  namespace {
    struct Typed {
      std::size_t source;  // 1-morphism
      std::size_t target;  // 1-morphism
      std::size_t cell;
    };

    // Iterates over a finite domain either completely or by uniform
    // sampling; the callback returns false to stop at the first failure.
    class Domain {
     public:
      Domain(CheckMode const& mode, std::mt19937_64& rng)
          : _mode(mode), _rng(rng) {}

      // Calls f(i, j, ...) over index tuples in [0, sizes[0]) x ...
      template <typename F>
      std::size_t run(std::vector<std::size_t> const& sizes, F&& f) {
        for (auto s : sizes) {
          if (s == 0) {
            return 0;
          }
        }
        std::vector<std::size_t> idx(sizes.size(), 0);
        std::size_t              checked = 0;
        if (_mode.kind == CheckMode::Kind::sampled) {
          for (std::size_t k = 0; k < _mode.count; ++k) {
            for (std::size_t d = 0; d < sizes.size(); ++d) {
              idx[d] = std::uniform_int_distribution<std::size_t>(
                  0, sizes[d] - 1)(_rng);
            }
            ++checked;
            if (!f(idx)) {
              break;
            }
          }
          return checked;
        }
        while (true) {
          ++checked;
          if (!f(idx)) {
            return checked;
          }
          std::size_t d = sizes.size();
          while (d > 0) {
            --d;
            if (++idx[d] < sizes[d]) {
              break;
            }
            idx[d] = 0;
            if (d == 0) {
              return checked;
            }
          }
          if (sizes.empty()) {
            return checked;
          }
        }
      }

     private:
      CheckMode        _mode;
      std::mt19937_64& _rng;
    };

    class Checker {
     public:
      Checker(TwoCategory const& C, CheckMode mode)
          : _C(C), _mode(mode), _rng(mode.seed) {
        for (std::size_t f = 0; f < C.one_morphism_count(); ++f) {
          for (std::size_t g = 0; g < C.one_morphism_count(); ++g) {
            if (C.one_morphism(f).source != C.one_morphism(g).source
                || C.one_morphism(f).target != C.one_morphism(g).target) {
              continue;
            }
            for (auto c : C.hom(f, g)) {
              _typed.push_back({f, g, c});
            }
          }
        }
        for (std::size_t a = 0; a < _typed.size(); ++a) {
          for (std::size_t b = 0; b < _typed.size(); ++b) {
            if (_typed[a].target == _typed[b].source) {
              _chains.emplace_back(a, b);
            }
          }
        }
      }

      AxiomReport run() {
        AxiomReport report{_C.name(), _C.degree(), _mode, {}};
        report.axioms.push_back(compose1_associativity());
        report.axioms.push_back(compose1_units());
        report.axioms.push_back(id2_typing());
        report.axioms.push_back(vcomp_typing());
        report.axioms.push_back(vcomp_associativity());
        report.axioms.push_back(vcomp_units());
        report.axioms.push_back(hcomp_typing());
        report.axioms.push_back(hcomp_associativity());
        report.axioms.push_back(hcomp_units());
        report.axioms.push_back(hcomp_identities());
        report.axioms.push_back(interchange());
        return report;
      }

      AxiomReport run_translations() {
        AxiomReport report{_C.name(), _C.degree(), _mode, {}};
        report.axioms.push_back(translation_bijection(true));
        report.axioms.push_back(translation_distributes(true));
        report.axioms.push_back(translation_bijection(false));
        report.axioms.push_back(translation_distributes(false));
        return report;
      }

     private:
      nlohmann::json one(std::size_t f) const {
        return _C.one_morphism(f).label;
      }
      nlohmann::json cell(std::size_t c) const {
        return c == kUndefined ? nlohmann::json("undefined")
                               : _C.cell_label(c);
      }
      nlohmann::json typed(Typed const& t) const {
        return {{"source", one(t.source)},
                {"target", one(t.target)},
                {"cell", cell(t.cell)}};
      }
      bool horizontally_composable(Typed const& beta, Typed const& alpha) const {
        return _C.one_morphism(alpha.source).target
               == _C.one_morphism(beta.source).source;
      }

      AxiomResult compose1_associativity() {
        AxiomResult r{"compose1_associativity"};
        auto const  m = _C.one_morphism_count();
        r.checked     = Domain(_mode, _rng).run({m, m, m}, [&](auto const& i) {
          auto const h = i[0], g = i[1], f = i[2];
          auto const hg = _C.compose1(h, g), gf = _C.compose1(g, f);
          if (hg == kUndefined || gf == kUndefined) {
            return true;
          }
          auto const lhs = _C.compose1(hg, f), rhs = _C.compose1(h, gf);
          if (lhs != rhs) {
            r.passed  = false;
            r.witness = {{"h", one(h)}, {"g", one(g)}, {"f", one(f)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult compose1_units() {
        AxiomResult r{"compose1_units"};
        auto const  m = _C.one_morphism_count();
        r.checked     = Domain(_mode, _rng).run({m}, [&](auto const& i) {
          auto const& f = _C.one_morphism(i[0]);
          if (_C.compose1(_C.id1(f.target), i[0]) != i[0]
              || _C.compose1(i[0], _C.id1(f.source)) != i[0]) {
            r.passed  = false;
            r.witness = {{"f", one(i[0])}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult id2_typing() {
        AxiomResult r{"id2_typing"};
        auto const  m = _C.one_morphism_count();
        r.checked     = Domain(_mode, _rng).run({m}, [&](auto const& i) {
          auto const c = _C.id2(i[0]);
          if (c == kUndefined || !_C.in_hom(i[0], i[0], c)) {
            r.passed  = false;
            r.witness = {{"f", one(i[0])}, {"id2", cell(c)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult vcomp_typing() {
        AxiomResult r{"vcomp_typing"};
        r.checked = Domain(_mode, _rng).run({_chains.size()}, [&](auto const& i) {
          auto const& alpha = _typed[_chains[i[0]].first];
          auto const& gamma = _typed[_chains[i[0]].second];
          auto const  c     = _C.vcomp(gamma.cell, alpha.cell);
          if (c == kUndefined || !_C.in_hom(alpha.source, gamma.target, c)) {
            r.passed  = false;
            r.witness = {{"alpha", typed(alpha)},
                         {"gamma", typed(gamma)},
                         {"composite", cell(c)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult vcomp_associativity() {
        AxiomResult r{"vcomp_associativity"};
        auto const  t = _typed.size();
        r.checked     = Domain(_mode, _rng).run({_chains.size(), t}, [&](auto const& i) {
          auto const& alpha = _typed[_chains[i[0]].first];
          auto const& beta  = _typed[_chains[i[0]].second];
          auto const& gamma = _typed[i[1]];
          if (gamma.source != beta.target) {
            return true;
          }
          auto const gb  = _C.vcomp(gamma.cell, beta.cell);
          auto const ba  = _C.vcomp(beta.cell, alpha.cell);
          auto const lhs = gb == kUndefined ? kUndefined : _C.vcomp(gb, alpha.cell);
          auto const rhs = ba == kUndefined ? kUndefined : _C.vcomp(gamma.cell, ba);
          if (lhs == kUndefined || lhs != rhs) {
            r.passed  = false;
            r.witness = {{"alpha", typed(alpha)},
                         {"beta", typed(beta)},
                         {"gamma", typed(gamma)},
                         {"lhs", cell(lhs)},
                         {"rhs", cell(rhs)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult vcomp_units() {
        AxiomResult r{"vcomp_units"};
        r.checked = Domain(_mode, _rng).run({_typed.size()}, [&](auto const& i) {
          auto const& a     = _typed[i[0]];
          auto const  left  = _C.vcomp(_C.id2(a.target), a.cell);
          auto const  right = _C.vcomp(a.cell, _C.id2(a.source));
          if (left != a.cell || right != a.cell) {
            r.passed  = false;
            r.witness = {{"alpha", typed(a)},
                         {"id_target_o1_alpha", cell(left)},
                         {"alpha_o1_id_source", cell(right)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult hcomp_typing() {
        AxiomResult r{"hcomp_typing"};
        auto const  t = _typed.size();
        r.checked     = Domain(_mode, _rng).run({t, t}, [&](auto const& i) {
          auto const& beta  = _typed[i[0]];
          auto const& alpha = _typed[i[1]];
          if (!horizontally_composable(beta, alpha)) {
            return true;
          }
          auto const c      = _C.hcomp(beta.cell, alpha.cell);
          auto const source = _C.compose1(beta.source, alpha.source);
          auto const target = _C.compose1(beta.target, alpha.target);
          if (c == kUndefined || !_C.in_hom(source, target, c)) {
            r.passed  = false;
            r.witness = {{"beta", typed(beta)},
                         {"alpha", typed(alpha)},
                         {"composite", cell(c)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult hcomp_associativity() {
        AxiomResult r{"hcomp_associativity"};
        auto const  t = _typed.size();
        r.checked     = Domain(_mode, _rng).run({t, t, t}, [&](auto const& i) {
          auto const& gamma = _typed[i[0]];
          auto const& beta  = _typed[i[1]];
          auto const& alpha = _typed[i[2]];
          if (!horizontally_composable(gamma, beta)
              || !horizontally_composable(beta, alpha)) {
            return true;
          }
          auto const gb  = _C.hcomp(gamma.cell, beta.cell);
          auto const ba  = _C.hcomp(beta.cell, alpha.cell);
          auto const lhs = gb == kUndefined ? kUndefined : _C.hcomp(gb, alpha.cell);
          auto const rhs = ba == kUndefined ? kUndefined : _C.hcomp(gamma.cell, ba);
          if (lhs == kUndefined || lhs != rhs) {
            r.passed  = false;
            r.witness = {{"gamma", typed(gamma)},
                         {"beta", typed(beta)},
                         {"alpha", typed(alpha)},
                         {"lhs", cell(lhs)},
                         {"rhs", cell(rhs)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult hcomp_units() {
        AxiomResult r{"hcomp_units"};
        r.checked = Domain(_mode, _rng).run({_typed.size()}, [&](auto const& i) {
          auto const& a  = _typed[i[0]];
          auto const& f  = _C.one_morphism(a.source);
          auto const  l  = _C.hcomp(_C.id2(_C.id1(f.target)), a.cell);
          auto const  rr = _C.hcomp(a.cell, _C.id2(_C.id1(f.source)));
          if (l != a.cell || rr != a.cell) {
            r.passed  = false;
            r.witness = {{"alpha", typed(a)},
                         {"left", cell(l)},
                         {"right", cell(rr)}};
            return false;
          }
          return true;
        });
        return r;
      }

      // id_g o_0 id_f = id_{g f}
      AxiomResult hcomp_identities() {
        AxiomResult r{"hcomp_identities"};
        auto const  m = _C.one_morphism_count();
        r.checked     = Domain(_mode, _rng).run({m, m}, [&](auto const& i) {
          auto const gf = _C.compose1(i[0], i[1]);
          if (gf == kUndefined) {
            return true;
          }
          auto const c = _C.hcomp(_C.id2(i[0]), _C.id2(i[1]));
          if (c != _C.id2(gf)) {
            r.passed  = false;
            r.witness = {{"g", one(i[0])}, {"f", one(i[1])}, {"composite", cell(c)}};
            return false;
          }
          return true;
        });
        return r;
      }

      // (delta o_0 gamma) o_1 (beta o_0 alpha)
      //   = (delta o_1 beta) o_0 (gamma o_1 alpha)
      AxiomResult interchange() {
        AxiomResult r{"interchange"};
        auto const  k = _chains.size();
        r.checked     = Domain(_mode, _rng).run({k, k}, [&](auto const& i) {
          auto const& alpha = _typed[_chains[i[0]].first];
          auto const& gamma = _typed[_chains[i[0]].second];
          auto const& beta  = _typed[_chains[i[1]].first];
          auto const& delta = _typed[_chains[i[1]].second];
          if (!horizontally_composable(beta, alpha)) {
            return true;
          }
          auto const dg  = _C.hcomp(delta.cell, gamma.cell);
          auto const ba  = _C.hcomp(beta.cell, alpha.cell);
          auto const db  = _C.vcomp(delta.cell, beta.cell);
          auto const ga  = _C.vcomp(gamma.cell, alpha.cell);
          auto const lhs = (dg == kUndefined || ba == kUndefined)
                               ? kUndefined
                               : _C.vcomp(dg, ba);
          auto const rhs = (db == kUndefined || ga == kUndefined)
                               ? kUndefined
                               : _C.hcomp(db, ga);
          if (lhs == kUndefined || lhs != rhs) {
            r.passed  = false;
            r.witness = {{"alpha", typed(alpha)},
                         {"beta", typed(beta)},
                         {"gamma", typed(gamma)},
                         {"delta", typed(delta)},
                         {"lhs", cell(lhs)},
                         {"rhs", cell(rhs)}};
            return false;
          }
          return true;
        });
        return r;
      }

      // Translating alpha in Hom(sigma, tau) by pi: pi o_0 alpha on the left,
      // alpha o_0 pi on the right.
      std::size_t translate(bool left, std::size_t pi, std::size_t c) const {
        return left ? _C.hcomp(_C.id2(pi), c) : _C.hcomp(c, _C.id2(pi));
      }
      std::size_t translate_one(bool left, std::size_t pi, std::size_t f) const {
        return left ? _C.compose1(pi, f) : _C.compose1(f, pi);
      }

      AxiomResult translation_bijection(bool left) {
        AxiomResult r{left ? "left_translation_bijection"
                           : "right_translation_bijection"};
        auto const  m = _C.one_morphism_count();
        r.checked     = Domain(_mode, _rng).run({m, m, m}, [&](auto const& i) {
          auto const pi = i[0], sigma = i[1], tau = i[2];
          auto const& s = _C.one_morphism(sigma);
          auto const& t = _C.one_morphism(tau);
          if (s.source != t.source || s.target != t.target) {
            return true;
          }
          auto const ps = translate_one(left, pi, sigma);
          auto const pt = translate_one(left, pi, tau);
          if (ps == kUndefined || pt == kUndefined) {
            return true;
          }
          std::vector<std::size_t> image;
          bool                     typed_ok = true;
          for (auto c : _C.hom(sigma, tau)) {
            auto const tc = translate(left, pi, c);
            typed_ok      = typed_ok && tc != kUndefined && _C.in_hom(ps, pt, tc);
            image.push_back(tc);
          }
          std::sort(image.begin(), image.end());
          bool const injective =
              std::adjacent_find(image.begin(), image.end()) == image.end();
          if (!typed_ok || !injective || image != _C.hom(ps, pt)) {
            r.passed  = false;
            r.witness = {{"pi", one(pi)}, {"sigma", one(sigma)}, {"tau", one(tau)}};
            return false;
          }
          return true;
        });
        return r;
      }

      AxiomResult translation_distributes(bool left) {
        AxiomResult r{left ? "left_translation_distributes"
                           : "right_translation_distributes"};
        auto const  m = _C.one_morphism_count();
        r.checked     = Domain(_mode, _rng).run({m, _chains.size()}, [&](auto const& i) {
          auto const  pi    = i[0];
          auto const& alpha = _typed[_chains[i[1]].first];
          auto const& beta  = _typed[_chains[i[1]].second];
          if (translate_one(left, pi, alpha.source) == kUndefined) {
            return true;
          }
          auto const ba  = _C.vcomp(beta.cell, alpha.cell);
          auto const lhs = translate(left, pi, ba);
          auto const rhs = _C.vcomp(translate(left, pi, beta.cell),
                                    translate(left, pi, alpha.cell));
          if (lhs == kUndefined || lhs != rhs) {
            r.passed  = false;
            r.witness = {{"pi", one(pi)},
                         {"alpha", typed(alpha)},
                         {"beta", typed(beta)},
                         {"lhs", cell(lhs)},
                         {"rhs", cell(rhs)}};
            return false;
          }
          return true;
        });
        return r;
      }

      TwoCategory const&                              _C;
      CheckMode                                       _mode;
      std::mt19937_64                                 _rng;
      std::vector<Typed>                              _typed;
      std::vector<std::pair<std::size_t, std::size_t>> _chains;
    };
  }  // namespace

  AxiomReport check_axioms(TwoCategory const& C, CheckMode mode) {
    return Checker(C, mode).run();
  }

  AxiomReport check_translation_bijections(TwoCategory const& C,
                                           CheckMode          mode) {
    return Checker(C, mode).run_translations();
  }

}  // namespace sncat
