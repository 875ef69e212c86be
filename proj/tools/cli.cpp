#include "cli.hpp"

#include <algorithm>  // for reverse
#include <cstdint>    // for uint64_t
#include <exception>  // for exception
#include <fstream>    // for ofstream
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "render.hpp"
#include "sncat/bicat.hpp"
#include "sncat/decat.hpp"
#include "sncat/linear.hpp"

namespace sncat::cli {

  namespace {

    struct UsageError : std::invalid_argument {
      using std::invalid_argument::invalid_argument;
    };

    struct Config {
      std::string                  cat;
      std::size_t                  n = 0;
      std::string                  mode   = "exhaustive";
      std::optional<std::uint64_t> seed;
      std::size_t                  count  = 100000;
      std::string                  format = "text";
      std::string                  out;

      bool ordered() const {
        return cat == "ordered-ISn" || cat == "ordered-Fstar";
      }
      bool json() const {
        return format == "json";
      }
    };

    void require_n(Config const& cfg, std::size_t max, char const* what) {
      if (cfg.n < 1 || cfg.n > max) {
        throw UsageError(std::string(what) + ": --n must be in [1, "
                         + std::to_string(max) + "]");
      }
    }

    void require_unsampled(Config const& cfg, char const* what) {
      if (cfg.mode != "exhaustive" || cfg.seed) {
        throw UsageError(std::string(what)
                         + ": --mode and --seed apply to check-axioms only");
      }
    }

    OrderedMonoid ordered_monoid(Config const& cfg) {
      return cfg.cat == "ordered-ISn" ? symmetric_inverse_ordered_monoid(cfg.n)
                                      : factorizable_ordered_monoid(cfg.n);
    }

    TwoCategory two_category(Config const& cfg) {
      if (cfg.cat == "A") {
        return relation_two_category(cfg.n);
      }
      if (cfg.cat == "B") {
        return partition_two_category(cfg.n);
      }
      return ordered_monoid_two_category(ordered_monoid(cfg));
    }

    // Names for the ordered variants follow the underlying monoid.
    Namer namer_for(Config const& cfg) {
      if (cfg.cat == "ordered-ISn") {
        return Namer("A", cfg.n);
      }
      if (cfg.cat == "ordered-Fstar") {
        return Namer("B", cfg.n);
      }
      return Namer(cfg.cat, cfg.n);
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    ////////////////////////////////////////////////////////////////////////
    // check-axioms
    ////////////////////////////////////////////////////////////////////////

    int check_axioms_command(Config const& cfg, std::ostream& out) {
      require_n(cfg, kMaxTwoCategoryDegree, "check-axioms");
      bool const sampled = cfg.mode == "sampled";
      if (sampled != cfg.seed.has_value()) {
        throw UsageError("check-axioms: --seed is required with --mode "
                         "sampled and not allowed otherwise");
      }
      if (!sampled && cfg.n > 3) {
        throw UsageError("check-axioms: exhaustive mode needs --n <= 3");
      }
      if (sampled && cfg.count == 0) {
        throw UsageError("check-axioms: --count must be positive");
      }
      auto const mode = sampled ? CheckMode::sampled(*cfg.seed, cfg.count)
                                : CheckMode::exhaustive();
      auto const C      = two_category(cfg);
      auto       report = check_axioms(C, mode);
      if (!cfg.ordered()) {
        for (auto& a : check_translation_bijections(C, mode).axioms) {
          report.axioms.push_back(std::move(a));
        }
      }
      if (cfg.json()) {
        out << nlohmann::json(report).dump(2) << "\n";
      } else {
        out << "category: " << cfg.cat << "\n"
            << "n: " << cfg.n << "\n"
            << "mode: " << cfg.mode << "\n"
            << "seed: " << (sampled ? std::to_string(*cfg.seed) : "none")
            << "\n";
        for (auto const& a : report.axioms) {
          out << a.name << ": " << (a.passed ? "pass" : "FAIL") << " (checked "
              << a.checked << ")";
          if (!a.passed) {
            out << " witness " << a.witness.dump();
          }
          out << "\n";
        }
        out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
      }
      return report.passed() ? kExitOk : kExitFailed;
    }

    ////////////////////////////////////////////////////////////////////////
    // hom-table
    ////////////////////////////////////////////////////////////////////////

    int hom_table_command(Config const& cfg, std::ostream& out) {
      require_unsampled(cfg, "hom-table");
      if (cfg.ordered()) {
        throw UsageError("hom-table: --cat must be A or B");
      }
      require_n(cfg, cfg.json() ? kMaxTwoCategoryDegree : 3, "hom-table");

      std::vector<nlohmann::json> elements;
      std::function<std::vector<nlohmann::json>(std::size_t, std::size_t)> hom;
      if (cfg.cat == "A") {
        auto const is = symmetric_inverse_monoid(cfg.n);
        for (auto const& p : is) {
          elements.emplace_back(p.to_relation());
        }
        hom = [is](std::size_t x, std::size_t y) {
          std::vector<nlohmann::json> cells;
          for (auto const& r : relation_hom(is[x].to_relation(), is[y].to_relation())) {
            cells.emplace_back(r);
          }
          return cells;
        };
      } else {
        auto const fs = maximal_factorizable_submonoid(cfg.n);
        for (auto const& p : fs) {
          elements.emplace_back(p);
        }
        hom = [fs](std::size_t x, std::size_t y) {
          std::vector<nlohmann::json> cells;
          for (auto const& p : partition_hom(fs[x], fs[y])) {
            cells.emplace_back(p);
          }
          return cells;
        };
      }

      Namer const namer(cfg.cat, cfg.n);
      std::vector<std::size_t> order;
      if (namer.greek()) {
        for (auto const& l : namer.row_order()) {
          order.push_back(static_cast<std::size_t>(
              std::find(elements.begin(), elements.end(), l) - elements.begin()));
        }
      } else {
        for (std::size_t i = 0; i < elements.size(); ++i) {
          order.push_back(i);
        }
      }

      auto const title = cfg.cat + "_" + std::to_string(cfg.n);
      if (cfg.json()) {
        auto homs = nlohmann::json::array();
        for (auto x : order) {
          for (auto y : order) {
            homs.push_back({{"source", elements[x]},
                            {"target", elements[y]},
                            {"cells", hom(x, y)}});
          }
        }
        out << nlohmann::json{{"category", cfg.cat},
                              {"n", cfg.n},
                              {"elements", elements},
                              {"homs", std::move(homs)}}
                   .dump(2)
            << "\n";
        return kExitOk;
      }
      if (namer.greek()) {
        out << title << ": 2-morphisms from x (column) to y (row)\n";
        std::vector<std::string> header{"y\\x"};
        for (auto x : order) {
          header.push_back(namer.name(elements[x]));
        }
        std::vector<std::vector<std::string>> rows;
        for (auto y : order) {
          std::vector<std::string> row{namer.name(elements[y])};
          for (auto x : order) {
            row.push_back(list_cells(namer, hom(x, y)));
          }
          rows.push_back(std::move(row));
        }
        out << render_table(header, rows);
        return kExitOk;
      }
      out << title << ": 2-morphisms from x to y\n";
      for (auto x : order) {
        for (auto y : order) {
          out << namer.name(elements[x]) << " -> " << namer.name(elements[y])
              << ": " << list_cells(namer, hom(x, y)) << "\n";
        }
      }
      return kExitOk;
    }

    ////////////////////////////////////////////////////////////////////////
    // decat
    ////////////////////////////////////////////////////////////////////////

    template <typename Terms>
    std::string sum(Terms const& terms) {
      std::string s;
      for (auto const& [c, v] : terms) {
        if (v < 0) {
          s += "-";
        } else if (!s.empty()) {
          s += "+";
        }
        auto const a = v < 0 ? -v : v;
        s += (a == 1 ? "" : std::to_string(a) + "*") + "e" + std::to_string(c);
      }
      return s.empty() ? "0" : s;
    }

    void print_algebra(std::ostream&                   out,
                       AlgebraPresentation const&      A,
                       std::vector<std::string> const& names) {
      out << "  rank: " << A.rank() << "\n";
      for (std::size_t a = 0; a < A.rank(); ++a) {
        out << "  e" << a << " = " << names[a] << "\n";
      }
      std::vector<std::pair<std::size_t, std::int64_t>> unit;
      for (std::size_t a = 0; a < A.rank(); ++a) {
        if (A.unit()[a] != 0) {
          unit.emplace_back(a, A.unit()[a]);
        }
      }
      out << "  unit = " << sum(unit) << "\n";
      for (std::size_t a = 0; a < A.rank(); ++a) {
        for (std::size_t b = 0; b < A.rank(); ++b) {
          auto const& p = A.product(a, b);
          if (p.empty()) {
            continue;
          }
          out << "  e" << a << "*e" << b << " = " << sum(p) << "\n";
        }
      }
    }

    int ordered_decat(Config const& cfg, std::ostream& out) {
      auto const M       = ordered_monoid(cfg);
      auto const D       = ordered_monoid_decat(M);
      auto const S       = semigroup_algebra(M);
      bool const equal   = nlohmann::json(D) == nlohmann::json(S);
      bool const assoc   = !D.associativity_failure().has_value();
      bool const passed  = equal && assoc;
      if (cfg.json()) {
        out << nlohmann::json{{"category", cfg.cat},
                              {"n", cfg.n},
                              {"decategorification", D},
                              {"semigroup_algebra", S},
                              {"associative", assoc},
                              {"equals_semigroup_algebra", equal},
                              {"passed", passed}}
                   .dump(2)
            << "\n";
      } else {
        auto const               namer = namer_for(cfg);
        std::vector<std::string> names;
        for (auto const& l : D.basis()) {
          names.push_back(namer.name(l));
        }
        out << "category: " << cfg.cat << "\n"
            << "n: " << cfg.n << "\n"
            << "indecomposable classes: " << D.rank() << "\n"
            << "decategorification:\n";
        print_algebra(out, D, names);
        out << "associative: " << yes_no(assoc) << "\n"
            << "equals semigroup algebra: " << yes_no(equal) << "\n"
            << "result: " << (passed ? "pass" : "FAIL") << "\n";
      }
      return passed ? kExitOk : kExitFailed;
    }

    int decat_command(Config const& cfg, std::ostream& out) {
      require_unsampled(cfg, "decat");
      require_n(cfg, 3, "decat");
      if (cfg.ordered()) {
        return ordered_decat(cfg, out);
      }
      CompletedCategory const K{LinearTwoCategory(two_category(cfg))};
      auto const&             L       = K.linear();
      auto const&             C       = L.category();
      auto const&             classes = K.indecomposables();
      nlohmann::json          locality;
      bool const              local = K.is_local(&locality);

      auto const G = grothendieck_ring(K);
      auto const M = cfg.cat == "A" ? symmetric_inverse_ordered_monoid(cfg.n)
                                    : factorizable_ordered_monoid(cfg.n);
      auto const S      = semigroup_algebra(M);
      auto const mobius = cfg.cat == "A" ? mobius_basis_is(cfg.n)
                                         : mobius_basis_fstar(cfg.n);
      auto const iso    = verify_isomorphism(G, S, label_map(G, S, mobius));
      bool const assoc  = !G.associativity_failure().has_value()
                         && !S.associativity_failure().has_value();
      bool const passed = local && assoc && iso.passed;

      if (cfg.json()) {
        auto objects = nlohmann::json::array();
        for (auto const& o : K.objects()) {
          objects.push_back(L.to_json(o.idempotent));
        }
        auto jclasses = nlohmann::json::array();
        for (auto const& k : classes) {
          auto members = nlohmann::json::array();
          for (auto f : k.members) {
            members.push_back(C.one_morphism(f).label);
          }
          jclasses.push_back(
              {{"source", k.source},
               {"target", k.target},
               {"label", C.cell_label(k.label_cell)},
               {"members", std::move(members)},
               {"identity",
                L.to_json(K.identity({k.source, k.target, k.representative()}))}});
        }
        out << nlohmann::json{{"category", cfg.cat},
                              {"n", cfg.n},
                              {"objects", std::move(objects)},
                              {"classes", std::move(jclasses)},
                              {"local", local},
                              {"grothendieck_ring", G},
                              {"semigroup_algebra", S},
                              {"isomorphism", iso},
                              {"passed", passed}}
                   .dump(2)
            << "\n";
        return passed ? kExitOk : kExitFailed;
      }

      Namer const              namer(cfg.cat, cfg.n);
      std::vector<std::string> object_names;
      for (auto const& o : K.objects()) {
        object_names.push_back("i_{" + expression(namer, L, o.idempotent) + "}");
      }
      auto class_expression = [&](IndecomposableClass const& k) {
        return expression(
            namer, L, K.identity({k.source, k.target, k.representative()}));
      };

      out << "category: " << cfg.cat << "\n"
          << "n: " << cfg.n << "\n"
          << "completed objects: " << K.objects().size() << "\n"
          << "indecomposable classes: " << classes.size() << "\n"
          << "local: " << yes_no(local) << "\n";
      if (!local) {
        out << "locality witness: " << locality.dump() << "\n";
      }
      out << "\n"
          << cfg.cat << "_" << cfg.n
          << " completed: indecomposable 1-morphisms from x (column) to y "
             "(row)\n";
      auto const k = K.objects().size();
      std::vector<std::vector<std::string>> entries(k,
                                                    std::vector<std::string>(k));
      for (auto const& c : classes) {
        auto& e = entries[c.target][c.source];
        e += (e.empty() ? "" : namer.greek() ? "," : "; ") + class_expression(c);
      }
      if (namer.greek()) {
        std::vector<std::string> header{"y\\x"};
        header.insert(header.end(), object_names.begin(), object_names.end());
        std::vector<std::vector<std::string>> rows;
        for (std::size_t y = 0; y < k; ++y) {
          std::vector<std::string> row{object_names[y]};
          for (std::size_t x = 0; x < k; ++x) {
            row.push_back(entries[y][x].empty() ? "∅" : entries[y][x]);
          }
          rows.push_back(std::move(row));
        }
        out << render_table(header, rows);
      } else {
        for (std::size_t x = 0; x < k; ++x) {
          for (std::size_t y = 0; y < k; ++y) {
            if (!entries[y][x].empty()) {
              out << object_names[x] << " -> " << object_names[y] << ": "
                  << entries[y][x] << "\n";
            }
          }
        }
      }

      std::vector<std::string> class_names, element_names;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        class_names.push_back("[" + class_expression(classes[i]) + "]");
      }
      for (auto const& l : S.basis()) {
        element_names.push_back(namer.name(l));
      }
      out << "\ngrothendieck ring:\n";
      print_algebra(out, G, class_names);
      out << "\nsemigroup algebra:\n";
      print_algebra(out, S, element_names);
      out << "\nisomorphism: class of F -> Möbius element of its label\n"
          << "  products checked: " << iso.products_checked << "\n"
          << "  products failed: " << iso.products_failed << "\n"
          << "  unit: " << (iso.unit_ok ? "ok" : "FAIL") << "\n"
          << "  determinant: " << iso.determinant << "\n";
      if (!iso.witness.is_null()) {
        out << "  witness: " << iso.witness.dump() << "\n";
      }
      out << "  verified: " << yes_no(iso.passed) << "\n"
          << "associative: " << yes_no(assoc) << "\n"
          << "result: " << (passed ? "pass" : "FAIL") << "\n";
      return passed ? kExitOk : kExitFailed;
    }

    ////////////////////////////////////////////////////////////////////////
    // fiat
    ////////////////////////////////////////////////////////////////////////

    int fiat_command(Config const& cfg, std::ostream& out) {
      require_unsampled(cfg, "fiat");
      require_n(cfg, 3, "fiat");
      Namer const namer = namer_for(cfg);
      FiatReport  report;
      bool        expected = false;
      if (cfg.ordered()) {
        report   = fiat_check(ordered_monoid(cfg));
        expected = !report.fiat && !report.witness.is_null();
      } else {
        report   = fiat_check(CompletedCategory(LinearTwoCategory(two_category(cfg))));
        expected = report.fiat;
      }
      if (cfg.json()) {
        auto j        = nlohmann::json(report);
        j["expected"] = expected;
        out << j.dump(2) << "\n";
        return expected ? kExitOk : kExitFailed;
      }
      out << "category: " << cfg.cat << "\n"
          << "n: " << cfg.n << "\n"
          << "fiat: " << yes_no(report.fiat) << "\n";
      for (auto const& a : report.adjunctions) {
        auto const& l = a.labels;
        out << namer.name(l.at("one")) << "* = "
            << (l.contains("dual") ? namer.name(l.at("dual")) : "none");
        if (a.triangles) {
          out << ": unit " << namer.name(l.at("unit")) << ", counit "
              << namer.name(l.at("counit"))
              << ", triangle identities hold; split category: "
              << (a.completed_triangles ? "hold" : "FAIL") << " ("
              << a.completed_checked << " checked)";
        } else {
          out << ": no unit and counit satisfy the triangle identities";
        }
        out << "\n";
      }
      if (report.star.available) {
        auto const& s = report.star;
        out << "anti-involution: involutive " << yes_no(s.involutive)
            << ", typing " << yes_no(s.typing) << ", o_0 contravariant "
            << yes_no(s.hcomp_contravariant) << ", o_1 contravariant "
            << yes_no(s.vcomp_contravariant) << " (" << s.checked
            << " checked)\n";
      }
      if (!report.witness.is_null()) {
        auto const& w = report.witness;
        if (w.contains("s")) {
          out << "witness: " << namer.name(w.at("s")) << " (rank "
              << w.at("rank").get<std::size_t>() << "), no "
              << w.at("missing").get<std::string>();
          if (w.value("unit_side_empty", false)) {
            out << "; Hom(1, t s) is empty for every t";
          }
          if (w.value("counit_side_empty", false)) {
            out << "; Hom(s t, 1) is empty for every t";
          }
          out << "\n";
        } else {
          out << "witness: " << w.dump() << "\n";
        }
      }
      out << "result: " << (expected ? "as expected" : "UNEXPECTED") << "\n";
      return expected ? kExitOk : kExitFailed;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Finite 2-categories of relations and partitions"};
    app.name("sncat");
    app.require_subcommand(1);

    Config     cfg;
    auto const cats  = std::vector<std::string>{"A", "B", "ordered-ISn", "ordered-Fstar"};
    auto       add_common = [&](CLI::App* sub) {
      sub->add_option("--cat", cfg.cat, "Category")
          ->required()
          ->check(CLI::IsMember(cats));
      sub->add_option("--n", cfg.n, "Degree")->required();
      sub->add_option("--format", cfg.format, "Output format")
          ->check(CLI::IsMember({"text", "json"}));
      sub->add_option("--out", cfg.out, "Write output to this file");
      sub->add_option("--mode", cfg.mode, "Check mode")
          ->check(CLI::IsMember({"exhaustive", "sampled"}));
      sub->add_option("--seed", cfg.seed, "Seed for sampled mode");
      sub->add_option("--count", cfg.count, "Samples per axiom");
    };
    auto* check = app.add_subcommand("check-axioms", "Verify the 2-category axioms");
    auto* table = app.add_subcommand("hom-table", "Print all hom-sets");
    auto* decat = app.add_subcommand("decat", "Split idempotents and decategorify");
    auto* fiat  = app.add_subcommand("fiat", "Check adjunctions");
    for (auto* sub : {check, table, decat, fiat}) {
      add_common(sub);
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kExitUsage;
    }

    std::ostringstream buffer;
    int                code = kExitOk;
    try {
      if (check->parsed()) {
        code = check_axioms_command(cfg, buffer);
      } else if (table->parsed()) {
        code = hom_table_command(cfg, buffer);
      } else if (decat->parsed()) {
        code = decat_command(cfg, buffer);
      } else {
        code = fiat_command(cfg, buffer);
      }
    } catch (UsageError const& e) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kExitFailed;
    }

    if (cfg.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "usage error: cannot write " << cfg.out << "\n";
        return kExitUsage;
      }
      file << buffer.str();
    }
    return code;
  }

}  // namespace sncat::cli
