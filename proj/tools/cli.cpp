#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "prm/code.hpp"
#include "prm/error.hpp"
#include "prm/gf.hpp"
#include "prm/homopoly.hpp"
#include "prm/io.hpp"
#include "prm/projgeom.hpp"
#include "prm/random.hpp"
#include "prm/separation.hpp"

namespace prm::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultBudget = 2'000'000;

// Thrown by subcommands to leave with a specific exit code after printing
// a diagnostic.
struct Exit {
  int code;
  std::string message;
};

struct FieldOpts {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;

  Field resolve() const {
    if (p != 0) {
      const Field f = Field::make(p, e == 0 ? 1 : e);
      if (q != 0 && q != f.q()) {
        throw Error(Errc::InvalidArgument,
                    "--q " + std::to_string(q) + " disagrees with --p/--e");
      }
      return f;
    }
    if (e != 0) throw Error(Errc::InvalidArgument, "--e requires --p");
    if (q == 0) throw Error(Errc::InvalidArgument, "give --q or --p/--e");
    return Field::of_order(q);
  }
};

void add_field_options(CLI::App* cmd, FieldOpts& f) {
  cmd->add_option("--q", f.q, "field order (a prime power)");
  cmd->add_option("--p", f.p, "field characteristic");
  cmd->add_option("--e", f.e, "extension degree (with --p)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string flat_text(const Flat& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.basis().size(); ++i) {
    if (i) s += " | ";
    s += io::format_vec(f.basis()[i]);
  }
  return s + "]";
}

std::string poly_inline(const HomPoly& f) {
  std::string s = io::format_polynomial(f);
  if (s.empty()) return "0";
  for (auto& c : s) {
    if (c == '\n') c = '/';
  }
  s.pop_back();
  return s;
}

Matrix parse_generators(const std::string& text, const ProjSpace& space) {
  Matrix gens;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    gens.push_back(io::parse_point(row, space).coords());
  }
  if (gens.empty()) throw Error(Errc::InvalidArgument, "no generators given");
  return gens;
}

std::uint32_t top_degree(const Field& field, int m) {
  return static_cast<std::uint32_t>(m) * (field.q() - 1);
}

// ---------------------------------------------------------------------------

struct ParamsOpts {
  FieldOpts field;
  int m = 0;
  std::uint32_t nu = 0;
  std::string format = "text";
};

void cmd_params(const ParamsOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  const CodeParams c = distance_formula(field.q(), o.m, o.nu);
  if (o.format == "json") {
    out << io::to_json(c).dump() << '\n';
  } else if (o.format == "csv") {
    out << "q,m,nu,n,k,d,r,s\n"
        << c.q << ',' << c.m << ',' << c.nu << ',' << c.n << ',' << c.k << ','
        << c.d << ',' << c.r << ',' << c.s << '\n';
  } else {
    out << "PC_" << c.nu << "(" << c.m << "," << c.q << ")\n"
        << "n=" << c.n << "\nk=" << c.k << "\nd=" << c.d << "\nr=" << c.r
        << "\ns=" << c.s << '\n';
  }
}

struct VerifyOpts {
  FieldOpts field;
  int m = 0;
  std::uint32_t nu = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
  std::string format = "text";
};

void cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  const CodeParams c = distance_formula(field.q(), o.m, o.nu);
  const GenMatrix g = generator_matrix(field, o.m, o.nu);
  const Matrix basis = rref(field, g.entries);
  const std::uint64_t k_rank = basis.size();
  const bool k_ok = k_rank == c.k;

  json report{{"params", io::to_json(c)},
              {"k_formula", c.k},
              {"k_rank", k_rank},
              {"k_status", k_ok ? "MATCH" : "MISMATCH"}};
  auto emit_k = [&] {
    if (o.format != "json") {
      out << "k: " << c.k << (k_ok ? "=" : "!=") << k_rank << ' '
          << (k_ok ? "MATCH" : "MISMATCH") << '\n';
    }
  };

  std::uint64_t d_search = 0;
  try {
    d_search = min_weight_of_basis(field, basis, o.budget, o.threads);
  } catch (const BudgetExceeded& e) {
    emit_k();
    if (o.format == "json") {
      report["d_status"] = "BUDGET_EXCEEDED";
      report["required"] = e.required();
      out << report.dump() << '\n';
    }
    throw Exit{kBudget, std::string("d: ") + e.what()};
  }
  const bool d_ok = d_search == c.d;
  report["d_formula"] = c.d;
  report["d_search"] = d_search;
  report["d_status"] = d_ok ? "MATCH" : "MISMATCH";
  report["single_nonvanishing"] = d_search < 2;

  if (o.format == "json") {
    out << report.dump() << '\n';
  } else {
    emit_k();
    out << "d: " << c.d << (d_ok ? "=" : "!=") << d_search << ' '
        << (d_ok ? "MATCH" : "MISMATCH") << '\n';
    out << "polynomials with a single non-vanishing point: "
        << (d_search < 2 ? "FOUND" : "none") << '\n';
  }
  if (!k_ok || !d_ok) throw Exit{kMismatch, "formula and oracle disagree"};
}

struct MatrixOpts {
  FieldOpts field;
  int m = 0;
  std::uint32_t nu = 0;
  std::string format = "csv";
  std::string output;
};

void cmd_matrix(const MatrixOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  const GenMatrix g = generator_matrix(field, o.m, o.nu);
  std::string text;
  if (o.format == "json") {
    text = io::to_json(g).dump() + "\n";
  } else if (o.format == "csv") {
    text = io::matrix_csv(g.entries);
  } else {
    std::ostringstream ss;
    ss << g.entries.size() << "x" << g.points.size() << " generator matrix of PC_"
       << o.nu << "(" << o.m << "," << field.q() << ")\n";
    for (std::size_t r = 0; r < g.entries.size(); ++r) {
      ss << std::setw(12) << io::format_vec(g.monomials[r]) << " :";
      for (Elem x : g.entries[r]) ss << ' ' << x;
      ss << '\n';
    }
    text = ss.str();
  }
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) throw Error(Errc::InvalidArgument, "cannot write " + o.output);
    f << text;
  }
}

struct SeparateOpts {
  FieldOpts field;
  int m = 0;
  std::string points_file;
  std::size_t target = 0;  // 1-based; 0 means every point
  std::string format = "text";
};

void cmd_separate(const SeparateOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  const ProjSpace space(field, o.m);
  const SeparationInstance inst(space,
                                io::parse_points(read_file(o.points_file), space));
  const auto& pts = inst.points();
  if (o.target > pts.size()) {
    throw Error(Errc::InvalidArgument, "--target exceeds the number of points");
  }

  std::vector<std::size_t> targets;
  if (o.target == 0) {
    for (std::size_t i = 0; i < pts.size(); ++i) targets.push_back(i);
  } else {
    targets.push_back(o.target - 1);
  }

  json j{{"q", field.q()}, {"m", o.m}, {"separators", json::array()}};
  for (const auto& p : pts) j["points"].push_back(p.coords());
  std::vector<std::vector<Elem>> table;
  bool separated = true;
  for (auto i : targets) {
    const auto h = separating_hyperplane(inst, i);
    const HomPoly form = space.hyperplane_form(h.hyperplane());
    std::vector<Elem> row;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      row.push_back(form.evaluate(pts[k]));
      if ((row.back() == 0) != (k == i)) separated = false;
    }
    table.push_back(row);

    json chain = json::array();
    for (const auto& f : h.chain) chain.push_back(io::to_json(f));
    j["separators"].push_back(json{{"target", i + 1},
                                   {"chain", std::move(chain)},
                                   {"hyperplane", io::to_json(h.hyperplane())},
                                   {"form", io::format_polynomial(form)},
                                   {"values", row}});
    if (o.format != "json") {
      out << "P" << i + 1 << " = " << io::format_point(pts[i]) << '\n';
      for (const auto& f : h.chain) {
        out << "  dim " << f.dim() << ": " << flat_text(f) << '\n';
      }
      out << "  G" << i + 1 << " = " << poly_inline(form) << '\n';
    }
  }
  j["separated"] = separated;

  if (o.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << "separation table G_i(P_j):\n     ";
    for (std::size_t k = 0; k < pts.size(); ++k) out << std::setw(5) << ("P" + std::to_string(k + 1));
    out << '\n';
    for (std::size_t r = 0; r < targets.size(); ++r) {
      out << std::setw(5) << ("G" + std::to_string(targets[r] + 1));
      for (Elem v : table[r]) out << std::setw(5) << v;
      out << '\n';
    }
    out << (separated ? "separated: yes" : "separated: NO") << '\n';
  }
  if (!separated) throw Exit{kMismatch, "separation check failed"};
}

bool in_case_one_regime(std::uint32_t q, int m, std::uint32_t nu) {
  const std::uint32_t base = static_cast<std::uint32_t>(m - 1) * (q - 1) + 1;
  return nu >= base && nu - base < q - 1;
}

void print_gap(const ProjSpace& space, const HomPoly& f,
               const SeparationInstance& inst, const HomPoly& h,
               const std::string& format, std::ostream& out) {
  const Field& field = space.field();
  const auto survivors = nonvanishing_set(h, space);
  const std::uint64_t zeros = space.num_points() - survivors.size();
  const std::uint32_t bound = top_degree(field, space.dim());
  json j{{"q", field.q()},
         {"m", space.dim()},
         {"F", io::format_polynomial(f)},
         {"deg_F", f.degree()},
         {"t", inst.size()},
         {"P_t", inst.points().back().coords()},
         {"H", io::format_polynomial(h)},
         {"deg_H", h.degree()},
         {"zeros_H", zeros},
         {"n", space.num_points()},
         {"degree_bound", bound},
         {"deg_H_within_bound", h.degree() <= bound}};
  for (const auto& p : inst.points()) j["nonvanishing_F"].push_back(p.coords());
  if (survivors.size() == 1) j["nonvanishing_H"] = survivors.front().coords();

  std::optional<ContradictionReport> rep;
  if (in_case_one_regime(field.q(), space.dim(), f.degree())) {
    rep = contradiction_report(space, f.degree(), f);
    j["regime"] = json{{"s", rep->s},
                       {"threshold", rep->threshold},
                       {"outcome", outcome_name(rep->outcome)}};
  } else {
    j["regime"] = nullptr;
  }

  if (format == "json") {
    out << j.dump() << '\n';
    return;
  }
  out << "F = " << poly_inline(f) << "  (degree " << f.degree() << ")\n";
  out << "non-vanishing set of F (t=" << inst.size() << "):";
  for (const auto& p : inst.points()) out << " (" << io::format_point(p) << ")";
  out << "\nP_t = " << io::format_point(inst.points().back()) << '\n';
  out << "H = " << poly_inline(h) << '\n';
  out << "deg H = " << h.degree() << " = deg F + t - 1\n";
  out << "|Z(H)| = " << zeros << " of n = " << space.num_points() << '\n';
  out << "non-vanishing point of H:";
  for (const auto& p : survivors) out << " (" << io::format_point(p) << ")";
  out << '\n';
  out << "deg H <= m(q-1) = " << bound << ": "
      << (h.degree() <= bound ? "yes" : "no") << '\n';
  if (rep) {
    out << "regime: nu-1 = (m-1)(q-1)+" << rep->s << ", q-s = " << rep->threshold
        << ", outcome " << outcome_name(rep->outcome) << '\n';
  } else {
    out << "regime: nu is not of the form (m-1)(q-1)+s+1\n";
  }
}

struct GapOpts {
  FieldOpts field;
  int m = 0;
  std::string poly_file;
  std::string last;
  std::string format = "text";
};

void cmd_gap(const GapOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  const ProjSpace space(field, o.m);
  const HomPoly f = io::parse_polynomial(read_file(o.poly_file), field,
                                         space.arity());
  auto pts = nonvanishing_set(f, space);
  if (!o.last.empty()) {
    const ProjPoint last = io::parse_point(o.last, space);
    const auto it = std::find(pts.begin(), pts.end(), last);
    if (it == pts.end()) {
      throw Error(Errc::InvalidArgument,
                  "--last point is not in the non-vanishing set of F");
    }
    std::rotate(it, it + 1, pts.end());
  }
  const SeparationInstance inst(space, pts);
  const HomPoly h = gap_product(f, inst);
  print_gap(space, f, inst, h, o.format, out);
}

struct GapDemoOpts {
  FieldOpts field;
  int m = 0;
  std::uint32_t nu = 0;
  std::uint64_t seed = 0;
  std::uint64_t tries = 100'000;
  std::string format = "text";
};

void cmd_gapdemo(const GapDemoOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  check_nu(field.q(), o.m, o.nu);
  const ProjSpace space(field, o.m);
  SplitMix64 rng(o.seed);
  const auto f = sample_polynomial_with_support(space, o.nu, 2, field.q() + 1,
                                                rng, o.tries);
  if (!f) {
    throw Exit{kInfeasible,
               "no F of degree " + std::to_string(o.nu) +
                   " with 2 <= t <= q+1=" + std::to_string(field.q() + 1) +
                   " found in " + std::to_string(o.tries) + " draws"};
  }
  const SeparationInstance inst(space, nonvanishing_set(*f, space));
  const HomPoly h = gap_product(*f, inst);
  print_gap(space, *f, inst, h, o.format, out);
}

struct SweepOpts {
  std::vector<std::uint32_t> qs;
  std::vector<int> ms;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
  std::string format = "text";
};

void cmd_sweep(const SweepOpts& o, std::ostream& out) {
  std::vector<Field> fields;
  for (auto q : o.qs) fields.push_back(Field::of_order(q));
  for (int m : o.ms) {
    if (m < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
  }
  std::vector<SweepRow> rows;
  for (const auto& field : fields) {
    for (int m : o.ms) {
      for (std::uint32_t nu = 1; nu <= top_degree(field, m); ++nu) {
        const CodeParams c = distance_formula(field.q(), m, nu);
        const GenMatrix g = generator_matrix(field, m, nu);
        const Matrix basis = rref(field, g.entries);
        SweepRow row;
        row.q = field.q();
        row.m = m;
        row.nu = nu;
        row.n = c.n;
        row.k_formula = c.k;
        row.k_rank = basis.size();
        row.d_formula = c.d;
        try {
          row.d_search = min_weight_of_basis(field, basis, o.budget, o.threads);
        } catch (const BudgetExceeded&) {
        }
        if (row.k_formula != row.k_rank ||
            (row.d_search && *row.d_search != row.d_formula)) {
          row.status = "MISMATCH";
        } else {
          row.status = row.d_search ? "MATCH" : "SKIPPED";
        }
        rows.push_back(row);
      }
    }
  }

  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    out << j.dump() << '\n';
  } else {
    const bool csv = o.format == "csv";
    const char* sep = csv ? "," : " ";
    auto cell = [&](const auto& v, int w) {
      std::ostringstream ss;
      if (csv) {
        ss << v;
      } else {
        ss << std::setw(w) << v;
      }
      return ss.str();
    };
    const std::vector<std::pair<const char*, int>> cols{
        {"q", 3},       {"m", 2},         {"nu", 3},     {"n", 6},
        {"k_formula", 9}, {"k_rank", 6},   {"d_formula", 9}, {"d_search", 8},
        {"status", 8}};
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? sep : "") << cell(cols[i].first, cols[i].second);
    }
    out << '\n';
    for (const auto& r : rows) {
      out << cell(r.q, 3) << sep << cell(r.m, 2) << sep << cell(r.nu, 3) << sep
          << cell(r.n, 6) << sep << cell(r.k_formula, 9) << sep
          << cell(r.k_rank, 6) << sep << cell(r.d_formula, 9) << sep
          << cell(r.d_search ? std::to_string(*r.d_search) : std::string(csv ? "" : "-"), 8)
          << sep << cell(r.status, 8) << '\n';
    }
  }
  for (const auto& r : rows) {
    if (r.status == "MISMATCH") throw Exit{kMismatch, "sweep found a mismatch"};
  }
}

struct FlatsOpts {
  FieldOpts field;
  int m = 0;
  std::string generators;
  std::string format = "text";
};

void cmd_flats(const FlatsOpts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  const ProjSpace space(field, o.m);
  const Flat f = space.span(parse_generators(o.generators, space));
  const auto ext = space.extensions(f);
  const std::uint64_t formula = extension_count(field.q(), o.m, f.dim());

  // Every point off f must lie in exactly one extension.
  std::vector<int> hits(space.num_points(), 0);
  for (const auto& p : space.flat_points(f)) hits[space.index_of(p)] = -1;
  for (const auto& g : ext) {
    for (const auto& p : space.flat_points(g)) {
      const auto idx = space.index_of(p);
      if (hits[idx] >= 0) ++hits[idx];
    }
  }
  const bool partition =
      std::all_of(hits.begin(), hits.end(), [](int h) { return h == -1 || h == 1; });
  const bool ok = partition && ext.size() == formula;

  if (o.format == "json") {
    json exts = json::array();
    for (const auto& g : ext) exts.push_back(io::to_json(g));
    out << json{{"q", field.q()},
                {"m", o.m},
                {"flat", io::to_json(f)},
                {"extensions", std::move(exts)},
                {"count", ext.size()},
                {"formula", formula},
                {"partition", partition}}
               .dump()
        << '\n';
  } else {
    out << "flat (dim " << f.dim() << "): " << flat_text(f) << '\n';
    for (const auto& g : ext) out << "  " << flat_text(g) << '\n';
    out << "extensions: " << ext.size() << ", formula (q^(m-j)-1)/(q-1) = "
        << formula << (ext.size() == formula ? " MATCH" : " MISMATCH") << '\n';
    out << "partition of the complement: " << (partition ? "yes" : "NO") << '\n';
  }
  if (!ok) throw Exit{kMismatch, "extension count or partition check failed"};
}

struct Lemma4Opts {
  FieldOpts field;
  int m = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
  std::string format = "text";
};

void cmd_lemma4(const Lemma4Opts& o, std::ostream& out) {
  const Field field = o.field.resolve();
  if (o.m < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
  json per_degree = json::array();
  bool ok = true;
  for (std::uint32_t nu = 1; nu <= top_degree(field, o.m); ++nu) {
    std::uint64_t w = 0;
    try {
      w = min_weight_exhaustive(field, o.m, nu, o.budget, o.threads);
    } catch (const BudgetExceeded& e) {
      throw Exit{kBudget, "nu=" + std::to_string(nu) + ": " + e.what()};
    }
    ok = ok && w >= 2;
    per_degree.push_back(json{{"nu", nu}, {"min_weight", w}});
    if (o.format != "json") {
      out << "nu=" << nu << " min non-vanishing count " << w << '\n';
    }
  }
  if (o.format == "json") {
    out << json{{"q", field.q()}, {"m", o.m}, {"degrees", per_degree}, {"holds", ok}}
               .dump()
        << '\n';
  } else {
    out << "no polynomial of degree <= m(q-1) with exactly one non-vanishing "
           "point: "
        << (ok ? "true" : "false") << '\n';
  }
  if (!ok) throw Exit{kMismatch, "found a single non-vanishing point"};
}

}  // namespace

json to_json(const SweepRow& r) {
  json j{{"q", r.q},
         {"m", r.m},
         {"nu", r.nu},
         {"n", r.n},
         {"k_formula", r.k_formula},
         {"k_rank", r.k_rank},
         {"d_formula", r.d_formula},
         {"d_search", nullptr},
         {"status", r.status}};
  if (r.d_search) j["d_search"] = *r.d_search;
  return j;
}

SweepRow sweep_row_from_json(const json& j) {
  SweepRow r;
  j.at("q").get_to(r.q);
  j.at("m").get_to(r.m);
  j.at("nu").get_to(r.nu);
  j.at("n").get_to(r.n);
  j.at("k_formula").get_to(r.k_formula);
  j.at("k_rank").get_to(r.k_rank);
  j.at("d_formula").get_to(r.d_formula);
  if (!j.at("d_search").is_null()) r.d_search = j.at("d_search").get<std::uint64_t>();
  j.at("status").get_to(r.status);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Projective Reed-Muller code toolkit"};
  app.require_subcommand(1);
  std::function<void()> action;
  const std::vector<std::string> formats{"text", "json", "csv"};

  ParamsOpts params;
  auto* c_params = app.add_subcommand("params", "closed-form n, k, d");
  add_field_options(c_params, params.field);
  c_params->add_option("--m", params.m)->required();
  c_params->add_option("--nu", params.nu)->required();
  c_params->add_option("--format", params.format)->check(CLI::IsMember(formats));
  c_params->callback([&] { action = [&] { cmd_params(params, out); }; });

  VerifyOpts verify;
  auto* c_verify = app.add_subcommand("verify", "check k and d against oracles");
  add_field_options(c_verify, verify.field);
  c_verify->add_option("--m", verify.m)->required();
  c_verify->add_option("--nu", verify.nu)->required();
  c_verify->add_option("--budget", verify.budget, "max codewords to enumerate");
  c_verify->add_option("--threads", verify.threads);
  c_verify->add_option("--format", verify.format)->check(CLI::IsMember(formats));
  c_verify->callback([&] { action = [&] { cmd_verify(verify, out); }; });

  MatrixOpts matrix;
  auto* c_matrix = app.add_subcommand("matrix", "emit the generator matrix");
  add_field_options(c_matrix, matrix.field);
  c_matrix->add_option("--m", matrix.m)->required();
  c_matrix->add_option("--nu", matrix.nu)->required();
  c_matrix->add_option("--format", matrix.format)->check(CLI::IsMember(formats));
  c_matrix->add_option("-o,--output", matrix.output);
  c_matrix->callback([&] { action = [&] { cmd_matrix(matrix, out); }; });

  SeparateOpts separate;
  auto* c_separate = app.add_subcommand("separate", "separating hyperplanes");
  add_field_options(c_separate, separate.field);
  c_separate->add_option("--m", separate.m)->required();
  c_separate->add_option("--points", separate.points_file)->required();
  c_separate->add_option("--target", separate.target,
                         "1-based point index (default: all)");
  c_separate->add_option("--format", separate.format)->check(CLI::IsMember(formats));
  c_separate->callback([&] { action = [&] { cmd_separate(separate, out); }; });

  GapOpts gap;
  auto* c_gap = app.add_subcommand("gap", "gap product for a given F");
  add_field_options(c_gap, gap.field);
  c_gap->add_option("--m", gap.m)->required();
  c_gap->add_option("--poly", gap.poly_file)->required();
  c_gap->add_option("--last", gap.last, "non-vanishing point to keep as P_t");
  c_gap->add_option("--format", gap.format)->check(CLI::IsMember(formats));
  c_gap->callback([&] { action = [&] { cmd_gap(gap, out); }; });

  GapDemoOpts demo;
  auto* c_demo = app.add_subcommand("gapdemo", "gap product for a random F");
  add_field_options(c_demo, demo.field);
  c_demo->add_option("--m", demo.m)->required();
  c_demo->add_option("--nu", demo.nu)->required();
  c_demo->add_option("--seed", demo.seed);
  c_demo->add_option("--tries", demo.tries);
  c_demo->add_option("--format", demo.format)->check(CLI::IsMember(formats));
  c_demo->callback([&] { action = [&] { cmd_gapdemo(demo, out); }; });

  SweepOpts sweep;
  auto* c_sweep = app.add_subcommand("sweep", "parameter table over q and m");
  c_sweep->add_option("--q-list", sweep.qs)->delimiter(',');
  c_sweep->add_option("--m-list", sweep.ms)->delimiter(',');
  c_sweep->add_option("--budget", sweep.budget);
  c_sweep->add_option("--threads", sweep.threads);
  c_sweep->add_option("--format", sweep.format)->check(CLI::IsMember(formats));
  c_sweep->callback([&] { action = [&] { cmd_sweep(sweep, out); }; });

  FlatsOpts flats;
  auto* c_flats = app.add_subcommand("flats", "extensions of a flat");
  add_field_options(c_flats, flats.field);
  c_flats->add_option("--m", flats.m)->required();
  c_flats->add_option("--generators", flats.generators,
                      "generator rows, e.g. \"1,0,0;0,1,0\"")
      ->required();
  c_flats->add_option("--format", flats.format)->check(CLI::IsMember(formats));
  c_flats->callback([&] { action = [&] { cmd_flats(flats, out); }; });

  Lemma4Opts lemma4;
  auto* c_lemma4 =
      app.add_subcommand("lemma4", "no single non-vanishing point check");
  add_field_options(c_lemma4, lemma4.field);
  c_lemma4->add_option("--m", lemma4.m)->required();
  c_lemma4->add_option("--budget", lemma4.budget);
  c_lemma4->add_option("--threads", lemma4.threads);
  c_lemma4->add_option("--format", lemma4.format)->check(CLI::IsMember(formats));
  c_lemma4->callback([&] { action = [&] { cmd_lemma4(lemma4, out); }; });

  std::vector<std::string> argv_store{"prm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    action();
  } catch (const Exit& e) {
    err << e.message << '\n';
    return e.code;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace prm::cli
