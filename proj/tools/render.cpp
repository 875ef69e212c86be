#include "render.hpp"

#include <algorithm>  // for sort, max
#include <utility>    // for pair

#include "sncat/partitions.hpp"
#include "sncat/relations.hpp"

namespace sncat::cli {

  namespace {
    // Listing order inside a cell: eps, sigma, alpha, beta, gamma,
    // delta, tau. Row order: eps, sigma, tau, alpha, beta, gamma, delta.
    struct Named {
      char const*    name;
      nlohmann::json label;
    };

    std::vector<Named> greek_relations() {
      using R = BinaryRelation;
      return {{"ε", R(2, {{0, 0}, {1, 1}})},
              {"σ", R(2, {{1, 0}, {0, 1}})},
              {"α", R(2, {{0, 0}})},
              {"β", R(2, {{1, 0}})},
              {"γ", R(2, {{0, 1}})},
              {"δ", R(2, {{1, 1}})},
              {"τ", R(2)}};
    }

    std::vector<Named> greek_partitions() {
      using P = SetPartition;
      return {{"ε", P::identity(2)},
              {"σ", P(2, std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}})},
              {"τ", P::one_block(2)}};
    }
  }  // namespace

  Namer::Namer(std::string const& category, std::size_t n) {
    if (n != 2 || (category != "A" && category != "B")) {
      return;
    }
    auto const named = category == "A" ? greek_relations() : greek_partitions();
    for (std::size_t i = 0; i < named.size(); ++i) {
      _names.emplace(named[i].label.dump(), named[i].name);
      _listing.emplace(named[i].label.dump(), i);
    }
    // eps, sigma, tau first, then the rest in listing order.
    _rows.push_back(named[0].label);
    _rows.push_back(named[1].label);
    _rows.push_back(named.back().label);
    for (std::size_t i = 2; i + 1 < named.size(); ++i) {
      _rows.push_back(named[i].label);
    }
  }

  std::string Namer::name(nlohmann::json const& label) const {
    auto const key = label.dump();
    auto       it  = _names.find(key);
    if (it != _names.end()) {
      return it->second;
    }
    return compact(label);
  }

  std::string compact(nlohmann::json const& label) {
    // Relations as {x→y,...}, partitions as {1,1'|2,2'}.
    std::string s;
    if (label.is_object() && label.contains("pairs")) {
      for (auto const& p : label.at("pairs")) {
        s += (s.empty() ? "" : ",") + p.at(1).dump() + "→" + p.at(0).dump();
      }
      return s.empty() ? "∅" : "{" + s + "}";
    }
    if (label.is_object() && label.contains("blocks")) {
      for (auto const& b : label.at("blocks")) {
        s += s.empty() ? "" : "|";
        bool first = true;
        for (auto const& v : b) {
          s += (first ? "" : ",") + v.get<std::string>();
          first = false;
        }
      }
      return "{" + s + "}";
    }
    return label.dump();
  }

  std::size_t Namer::listing_rank(nlohmann::json const& label) const {
    auto it = _listing.find(label.dump());
    return it == _listing.end() ? 0 : it->second;
  }

  std::string list_cells(Namer const& namer, std::vector<nlohmann::json> labels) {
    if (namer.greek()) {
      std::stable_sort(labels.begin(), labels.end(), [&](auto const& a, auto const& b) {
        return namer.listing_rank(a) < namer.listing_rank(b);
      });
    }
    std::string result;
    for (auto const& l : labels) {
      if (!result.empty()) {
        result += ",";
      }
      result += namer.name(l);
    }
    return result;
  }

  std::string expression(Namer const&             namer,
                         LinearTwoCategory const& L,
                         LinearElement const&     x) {
    if (x.is_zero()) {
      return "0";
    }
    auto const& C = L.category();
    std::vector<std::pair<std::size_t, Rational>> terms(
        x.coefficients().begin(), x.coefficients().end());
    if (namer.greek()) {
      std::stable_sort(terms.begin(), terms.end(), [&](auto const& a, auto const& b) {
        return namer.listing_rank(C.cell_label(a.first))
               < namer.listing_rank(C.cell_label(b.first));
      });
    }
    std::string result;
    for (auto const& [cell, c] : terms) {
      bool const negative = c < 0;
      if (negative) {
        result += "-";
      } else if (!result.empty()) {
        result += "+";
      }
      Rational const a = negative ? Rational(-c) : c;
      if (a != 1) {
        result += a.get_str() + "*";
      }
      result += namer.name(C.cell_label(cell));
    }
    return result;
  }

  std::size_t display_width(std::string const& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) {
      // Count every byte that does not continue a multi-byte sequence.
      if ((ch & 0xC0) != 0x80) {
        ++w;
      }
    }
    return w;
  }

  std::string render_table(std::vector<std::string> const&              header,
                           std::vector<std::vector<std::string>> const& rows) {
    auto const               k = header.size();
    std::vector<std::size_t> width(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      width[j] = display_width(header[j]);
      for (auto const& r : rows) {
        width[j] = std::max(width[j], display_width(r.at(j)));
      }
    }
    auto line = [&](std::vector<std::string> const& cells) {
      std::string s;
      for (std::size_t j = 0; j < k; ++j) {
        if (j > 0) {
          s += " | ";
        }
        s += cells[j];
        if (j + 1 < k) {
          s += std::string(width[j] - display_width(cells[j]), ' ');
        }
      }
      return s + "\n";
    };
    std::string out = line(header);
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) {
        out += "-+-";
      }
      out += std::string(width[j], '-');
    }
    out += "\n";
    for (auto const& r : rows) {
      out += line(r);
    }
    return out;
  }

}  // namespace sncat::cli
