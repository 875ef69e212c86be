// Text rendering for the command line tool: names of 2-morphisms, linear
// combinations, and aligned tables.

#ifndef SNCAT_TOOLS_RENDER_HPP_
#define SNCAT_TOOLS_RENDER_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <vector>   // for vector

#include <nlohmann/json.hpp>

#include "sncat/linear.hpp"

namespace sncat::cli {

  //! Names for cell labels. For n = 2 and the categories A and B these are
  //! the Greek letters ε, σ, τ, α, β, γ, δ; otherwise compact().
  class Namer {
   public:
    Namer(std::string const& category, std::size_t n);

    std::string name(nlohmann::json const& label) const;
    //! Sort key for listing cells inside a table entry.
    std::size_t listing_rank(nlohmann::json const& label) const;
    //! True if Greek names are in use.
    bool greek() const noexcept {
      return !_names.empty();
    }
    //! Labels in table row order: ε, σ, τ, then the rest.
    std::vector<nlohmann::json> const& row_order() const noexcept {
      return _rows;
    }

   private:
    std::map<std::string, std::string> _names;    // dump -> name
    std::map<std::string, std::size_t> _listing;  // dump -> rank
    std::vector<nlohmann::json>        _rows;
  };

  //! Short form of a relation or partition label: {1→2,2→1} or {1,2'|2,1'}.
  std::string compact(nlohmann::json const& label);

  //! Names joined by ",", in listing order.
  std::string list_cells(Namer const& namer, std::vector<nlohmann::json> labels);

  //! E.g. "ε-α-δ+τ"; "0" for the zero element.
  std::string expression(Namer const&             namer,
                         LinearTwoCategory const& L,
                         LinearElement const&     x);

  //! Number of code points in a UTF-8 string.
  std::size_t display_width(std::string const& s);

  //! Columns padded to equal width and separated by " | ", a rule of '-'
  //! joined by "-+-" under the header. The last column is not padded.
  std::string render_table(std::vector<std::string> const&              header,
                           std::vector<std::vector<std::string>> const& rows);

}  // namespace sncat::cli

#endif  // SNCAT_TOOLS_RENDER_HPP_
