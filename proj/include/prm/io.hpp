#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prm/code.hpp"
#include "prm/homopoly.hpp"
#include "prm/projgeom.hpp"

namespace prm::io {

using nlohmann::json;

// Point text: one point per line, comma-separated element encodings
// ("1,0,2"). Blank lines and lines starting with '#' are skipped. Points
// are canonicalized on read.
std::vector<ProjPoint> parse_points(std::string_view text,
                                    const ProjSpace& space);
ProjPoint parse_point(std::string_view line, const ProjSpace& space);
std::string format_point(const ProjPoint& p);

template <typename Range>
std::string format_vec(const Range& v) {
  std::string s;
  bool first = true;
  for (auto x : v) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(x);
  }
  return s;
}

// Polynomial text: one term per line, "coeff; e0,e1,...,em". The degree is
// inferred from the first term and every other term must match it. An
// empty text is the zero polynomial of `degree`, which must then be given.
HomPoly parse_polynomial(std::string_view text, const Field& field,
                         std::size_t nvars,
                         std::optional<std::uint32_t> degree = std::nullopt);
std::string format_polynomial(const HomPoly& f);

// Rows of element encodings, comma-separated, one line per row.
std::string matrix_csv(const Matrix& m);

json to_json(const CodeParams& c);
CodeParams code_params_from_json(const json& j);

json to_json(const Flat& f);
/// Rebuilds a flat and checks that the stored basis is already canonical.
Flat flat_from_json(const json& j, const ProjSpace& space);

json to_json(const GenMatrix& g);
GenMatrix gen_matrix_from_json(const json& j, const Field& field);

}  // namespace prm::io
