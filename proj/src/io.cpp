#include "prm/io.hpp"

#include <charconv>
#include <sstream>

#include "prm/error.hpp"

namespace prm::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "not a nonnegative integer: '" +
                                      std::string(s) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s) {
  std::vector<std::uint64_t> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_uint(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

Elem to_elem(std::uint64_t v, const Field& field) {
  if (!field.contains(v)) {
    throw Error(Errc::ParseError, std::to_string(v) +
                                      " is not an element of GF(" +
                                      std::to_string(field.q()) + ")");
  }
  return static_cast<Elem>(v);
}

}  // namespace

ProjPoint parse_point(std::string_view line, const ProjSpace& space) {
  Vec v;
  for (auto x : parse_list(line)) v.push_back(to_elem(x, space.field()));
  return space.canonicalize(std::move(v));
}

std::vector<ProjPoint> parse_points(std::string_view text,
                                    const ProjSpace& space) {
  std::vector<ProjPoint> out;
  for (auto line : lines(text)) out.push_back(parse_point(line, space));
  return out;
}

std::string format_point(const ProjPoint& p) { return format_vec(p.coords()); }

HomPoly parse_polynomial(std::string_view text, const Field& field,
                         std::size_t nvars,
                         std::optional<std::uint32_t> degree) {
  const auto ls = lines(text);
  std::vector<std::pair<Elem, Exponents>> terms;
  for (auto line : ls) {
    const auto semi = line.find(';');
    if (semi == std::string_view::npos) {
      throw Error(Errc::ParseError,
                  "term '" + std::string(line) + "' lacks ';' separator");
    }
    const Elem c = to_elem(parse_uint(line.substr(0, semi)), field);
    Exponents e;
    std::uint64_t sum = 0;
    for (auto x : parse_list(line.substr(semi + 1))) {
      e.push_back(static_cast<std::uint32_t>(x));
      sum += x;
    }
    if (!degree) degree = static_cast<std::uint32_t>(sum);
    terms.emplace_back(c, std::move(e));
  }
  if (!degree) {
    throw Error(Errc::ParseError, "empty polynomial needs an explicit degree");
  }
  HomPoly f(field, nvars, *degree);
  for (const auto& [c, e] : terms) f.add_term(e, c);
  return f;
}

std::string format_polynomial(const HomPoly& f) {
  std::string s;
  for (const auto& [e, c] : f.terms()) {
    s += std::to_string(c);
    s += "; ";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(e[i]);
    }
    s += '\n';
  }
  return s;
}

std::string matrix_csv(const Matrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += format_vec(row);
    s += '\n';
  }
  return s;
}

json to_json(const CodeParams& c) {
  return json{{"q", c.q}, {"m", c.m}, {"nu", c.nu}, {"n", c.n},
              {"k", c.k}, {"d", c.d}, {"r", c.r},   {"s", c.s}};
}

CodeParams code_params_from_json(const json& j) {
  CodeParams c;
  j.at("q").get_to(c.q);
  j.at("m").get_to(c.m);
  j.at("nu").get_to(c.nu);
  j.at("n").get_to(c.n);
  j.at("k").get_to(c.k);
  j.at("d").get_to(c.d);
  j.at("r").get_to(c.r);
  j.at("s").get_to(c.s);
  return c;
}

json to_json(const Flat& f) {
  return json{{"dim", f.dim()}, {"basis", f.basis()}};
}

Flat flat_from_json(const json& j, const ProjSpace& space) {
  const auto basis = j.at("basis").get<Matrix>();
  Flat f = space.span(basis);
  if (f.basis() != basis || f.dim() != j.at("dim").get<int>()) {
    throw Error(Errc::ParseError, "flat basis is not in canonical form");
  }
  return f;
}

json to_json(const GenMatrix& g) {
  json points = json::array();
  for (const auto& p : g.points) points.push_back(p.coords());
  return json{{"q", g.q},
              {"m", g.m},
              {"nu", g.nu},
              {"rows", g.monomials},
              {"points", std::move(points)},
              {"entries", g.entries}};
}

GenMatrix gen_matrix_from_json(const json& j, const Field& field) {
  GenMatrix g;
  j.at("q").get_to(g.q);
  j.at("m").get_to(g.m);
  j.at("nu").get_to(g.nu);
  if (g.q != field.q()) {
    throw Error(Errc::ParseError, "matrix field does not match");
  }
  const ProjSpace space(field, g.m);
  g.monomials = j.at("rows").get<std::vector<Exponents>>();
  for (const auto& p : j.at("points")) {
    g.points.push_back(space.canonicalize(p.get<Vec>()));
  }
  g.entries = j.at("entries").get<Matrix>();
  return g;
}

}  // namespace prm::io
