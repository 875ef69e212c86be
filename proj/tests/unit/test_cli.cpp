#include <cstdio>      // for remove
#include <filesystem>  // for temp_directory_path
#include <fstream>     // for ifstream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include <catch2/catch.hpp>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = sncat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string golden(std::string const& name) {
    auto const text = slurp(std::string(SNCAT_GOLDEN_DIR) + "/" + name);
    REQUIRE_FALSE(text.empty());
    return text;
  }

  // The completed table: from its title line up to the blank line after it.
  std::string completed_table(std::string const& out) {
    auto const start = out.find("completed:");
    REQUIRE(start != std::string::npos);
    auto const begin = out.rfind('\n', start) + 1;
    auto const end   = out.find("\n\n", start);
    return out.substr(begin, end + 1 - begin);
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }
}  // namespace

TEST_CASE("hom tables match the golden files byte for byte", "[cli]") {
  auto const b = run({"hom-table", "--cat", "B", "--n", "2", "--format", "text"});
  CHECK(b.code == 0);
  CHECK(b.out == golden("hom_table_B2.txt"));
  auto const a = run({"hom-table", "--cat", "A", "--n", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == golden("hom_table_A2.txt"));
}

TEST_CASE("completed tables match the golden files byte for byte", "[cli]") {
  auto const b = run({"decat", "--cat", "B", "--n", "2"});
  CHECK(b.code == 0);
  CHECK(completed_table(b.out) == golden("completed_B2.txt"));
  CHECK(contains(b.out, "completed objects: 2\n"));
  CHECK(contains(b.out, "indecomposable classes: 3\n"));
  CHECK(contains(b.out, "verified: yes\n"));

  auto const a = run({"decat", "--cat", "A", "--n", "2"});
  CHECK(a.code == 0);
  CHECK(completed_table(a.out) == golden("completed_A2.txt"));
  CHECK(contains(a.out, "completed objects: 4\n"));
  CHECK(contains(a.out, "indecomposable classes: 7\n"));
  CHECK(contains(a.out, "products checked: 49\n"));
}

TEST_CASE("decat for n = 1 and the ordered variants", "[cli]") {
  auto const a = run({"decat", "--cat", "A", "--n", "1"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "completed objects: 2\n"));
  CHECK(contains(a.out, "indecomposable classes: 2\n"));
  for (std::string cat : {"ordered-ISn", "ordered-Fstar"}) {
    auto const r = run({"decat", "--cat", cat, "--n", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "equals semigroup algebra: yes\n"));
  }
  auto const j = run({"decat", "--cat", "B", "--n", "2", "--format", "json"});
  CHECK(j.code == 0);
  auto const report = nlohmann::json::parse(j.out);
  CHECK(report.at("passed") == true);
  CHECK(report.at("classes").size() == 3);
  CHECK(report.at("isomorphism").at("passed") == true);
}

TEST_CASE("hom table for n = 1 lists IS_1", "[cli]") {
  auto const r = run({"hom-table", "--cat", "A", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out
        == "A_1: 2-morphisms from x to y\n"
           "∅ -> ∅: ∅\n"
           "∅ -> {1→1}: ∅\n"
           "{1→1} -> ∅: ∅\n"
           "{1→1} -> {1→1}: ∅,{1→1}\n");
  auto const j = run({"hom-table", "--cat", "B", "--n", "3", "--format", "json"});
  CHECK(j.code == 0);
  auto const table = nlohmann::json::parse(j.out);
  CHECK(table.at("elements").size() == 16);
  CHECK(table.at("homs").size() == 256);
}

TEST_CASE("check-axioms exit codes and seed echo", "[cli]") {
  CHECK(run({"check-axioms", "--cat", "A", "--n", "2", "--mode", "exhaustive"}).code == 0);
  CHECK(run({"check-axioms", "--cat", "B", "--n", "2"}).code == 0);
  CHECK(run({"check-axioms", "--cat", "ordered-Fstar", "--n", "2"}).code == 0);

  auto const s = run({"check-axioms", "--cat", "A", "--n", "3", "--mode", "sampled",
                      "--seed", "7", "--count", "100000"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "seed: 7\n"));
  CHECK(contains(s.out, "interchange: pass (checked 100000)\n"));

  auto const j = run({"check-axioms", "--cat", "B", "--n", "3", "--mode", "sampled",
                      "--seed", "7", "--count", "1000", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).at("seed") == 7);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "C", "--n", "2"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "A"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "A", "--n", "0"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "A", "--n", "3", "--mode", "sampled"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "A", "--n", "2", "--seed", "1"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "A", "--n", "4"}).code == 2);
  CHECK(run({"check-axioms", "--cat", "A", "--n", "2", "--mode", "random"}).code == 2);
  CHECK(run({"hom-table", "--cat", "ordered-ISn", "--n", "2"}).code == 2);
  CHECK(run({"hom-table", "--cat", "A", "--n", "4"}).code == 2);
  CHECK(run({"decat", "--cat", "A", "--n", "4"}).code == 2);
  CHECK(run({"fiat", "--cat", "B", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(run({"fiat", "--cat", "B", "--n", "2", "--mode", "sampled", "--seed", "1"}).code == 2);
  auto const r = run({"check-axioms", "--cat", "A", "--n", "3", "--mode", "sampled"});
  CHECK(contains(r.err, "--seed"));
  CHECK(r.out.empty());
}

TEST_CASE("fiat command verdicts", "[cli]") {
  auto const a = run({"fiat", "--cat", "A", "--n", "2"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "fiat: yes\n"));
  auto const b = run({"fiat", "--cat", "B", "--n", "1"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "fiat: yes\n"));
  auto const o = run({"fiat", "--cat", "ordered-ISn", "--n", "2"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "fiat: no\n"));
  CHECK(contains(o.out, "witness: α "));
  auto const f = run({"fiat", "--cat", "ordered-Fstar", "--n", "2", "--format", "json"});
  CHECK(f.code == 0);
  auto const j = nlohmann::json::parse(f.out);
  CHECK(j.at("fiat") == false);
  CHECK(j.at("witness").at("s").at("blocks").size() == 1);
}

TEST_CASE("output is deterministic and --out writes a file", "[cli]") {
  std::vector<std::string> const args{"decat", "--cat", "A", "--n", "3"};
  auto const first = run(args);
  CHECK(first.code == 0);
  CHECK(run(args).out == first.out);

  auto const path = (std::filesystem::temp_directory_path() / "sncat_cli_test.txt").string();
  auto const r    = run({"hom-table", "--cat", "B", "--n", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == golden("hom_table_B2.txt"));
  std::remove(path.c_str());
}
