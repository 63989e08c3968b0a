#include "seriesforge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "seriesforge/bfile.hpp"
#include "seriesforge/labeled_counts.hpp"
#include "seriesforge/reference_tables.hpp"
#include "seriesforge/series_json.hpp"
#include "seriesforge/unlabeled_counts.hpp"

namespace seriesforge {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { plain, csv, json };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

// Highest b-file index `verify` evaluates; later entries are reported as skipped.
constexpr std::int64_t kVerifyLimit = 40;

// ---- count families ----

struct Family {
  bool uses_m;
  unsigned min_m;
};

const std::map<std::string, Family> kFamilies{
    {"ultrametrics", {true, 1}},
    {"fully-colored-labeled", {true, 1}},
    {"mobiles", {true, 1}},
    {"chain-increasing", {true, 0}},
    {"processes", {false, 0}},
    {"unlabeled", {false, 0}},
    {"multipartite-unlabeled", {true, 1}},
    {"fully-colored-unlabeled", {true, 1}},
};

void check_family_args(const std::string& family, const std::optional<unsigned>& m) {
  const Family& f = kFamilies.at(family);
  if (!f.uses_m && m) throw UsageError("family " + family + " takes no --m");
  if (f.uses_m && !m) throw UsageError("family " + family + " needs --m");
  if (f.uses_m && *m < f.min_m) throw UsageError("family " + family + " needs --m >= " + std::to_string(f.min_m));
}

// Values s = 1..max_s of one family; the unlabeled families share one run of
// the refined recurrence.
std::vector<BigInt> family_values(const std::string& family, unsigned m, unsigned max_s) {
  std::vector<BigInt> out;
  if (family == "unlabeled" || family == "multipartite-unlabeled" || family == "fully-colored-unlabeled") {
    for (const auto& r : refined_polys(max_s)) {
      if (family == "unlabeled") out.push_back(r.poly.eval_at(BigInt(1)));
      else if (family == "multipartite-unlabeled") out.push_back(multipartite_unlabeled_polynomial(r).eval_at(BigInt(m)));
      else out.push_back(fully_colored_unlabeled(r, m));
    }
    return out;
  }
  if (family == "chain-increasing" || family == "processes") {
    const BigInt at(family == "processes" ? 2u : m);
    for (const auto& y : chain_increasing_polynomials(max_s)) out.push_back(y.eval_at(at));
    return out;
  }
  for (unsigned s = 1; s <= max_s; ++s) {
    if (family == "ultrametrics") out.push_back(count_ultrametrics(s, m));
    else if (family == "fully-colored-labeled") out.push_back(count_fully_colored_labeled(s, m));
    else out.push_back(count_mobiles(s, m));
  }
  return out;
}

// ---- tables ----

struct Table {
  std::string row_label;
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<std::optional<BigInt>>> cells;
};

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string q = "\"";
  for (char c : text) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit_table(const Table& t, Format format, std::ostream& os) {
  switch (format) {
    case Format::plain:
      for (const auto& row : t.cells) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << (row[j] ? row[j]->to_string() : "-");
        os << '\n';
      }
      break;
    case Format::csv:
      os << t.row_label;
      for (const auto& c : t.columns) os << ',' << c;
      os << '\n';
      for (std::size_t i = 0; i < t.cells.size(); ++i) {
        os << t.rows[i];
        for (const auto& cell : t.cells[i]) os << ',' << (cell ? cell->to_string() : "");
        os << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < t.cells.size(); ++i) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& cell : t.cells[i]) values.push_back(cell ? integer_to_json(*cell) : nlohmann::json());
        rows.push_back({{t.row_label, t.rows[i]}, {"values", values}});
      }
      os << nlohmann::json{{"columns", t.columns}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
  }
}

struct TableRequest {
  std::string name;
  unsigned max_s = 0, max_m = 0, max_n = 0;
  bool check_paper = false;
};

struct Mismatch {
  std::string cell;
  std::string expected, computed;
};

// Grid tables: rows m = 1..max_m, columns s = 1..max_s.
Table grid_table(const std::string& name, unsigned max_s, unsigned max_m, const reference::Grid& ref,
                 std::vector<Mismatch>& mismatches, std::size_t& compared) {
  Table t{"m", {}, {}, {}};
  for (unsigned s = 1; s <= max_s; ++s) t.columns.push_back(std::to_string(s));
  std::vector<RefinedPoly> refined;
  if (name == "multipartite-unlabeled" || name == "fully-colored-unlabeled") refined = refined_polys(max_s);
  std::vector<PolyVar> polys;
  for (unsigned s = 1; s <= max_s; ++s) {
    if (name == "symbolic") polys.push_back(a_polynomial(s));
    else if (name == "mobiles") polys.push_back(g_polynomial(s));
    else if (name == "multipartite-unlabeled") polys.push_back(multipartite_unlabeled_polynomial(refined[s - 1]));
  }
  for (unsigned m = 1; m <= max_m; ++m) {
    t.rows.push_back(std::to_string(m));
    std::vector<std::optional<BigInt>> row;
    for (unsigned s = 1; s <= max_s; ++s) {
      BigInt v;
      if (name == "fully-colored-labeled") v = count_fully_colored_labeled(s, m);
      else if (name == "fully-colored-unlabeled") v = fully_colored_unlabeled(refined[s - 1], m);
      else v = polys[s - 1].eval_at(BigInt(m));
      if (m <= ref.size() && s <= ref[m - 1].size()) {
        ++compared;
        const BigInt expected(ref[m - 1][s - 1]);
        if (expected != v) {
          mismatches.push_back({"m=" + std::to_string(m) + " s=" + std::to_string(s), expected.to_string(),
                                v.to_string()});
        }
      }
      row.push_back(v);
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

// Rows k = 1..max_n-1 inner vertices, columns n = 2..max_n leaves, then a sum row.
Table riordan_table(unsigned max_n, std::vector<Mismatch>& mismatches, std::size_t& compared) {
  Table t{"k", {}, {}, {}};
  if (max_n < 2) throw UsageError("--max-n must be >= 2");
  const auto polys = refined_polys(max_n);
  const auto& ref = reference::riordan_triangle_rows();
  for (unsigned n = 2; n <= max_n; ++n) t.columns.push_back(std::to_string(n));
  auto note = [&](const std::string& cell, std::int64_t expected, const BigInt& v) {
    ++compared;
    if (BigInt(expected) != v) mismatches.push_back({cell, std::to_string(expected), v.to_string()});
  };
  for (unsigned k = 1; k < max_n; ++k) {
    t.rows.push_back(std::to_string(k));
    std::vector<std::optional<BigInt>> row;
    for (unsigned n = 2; n <= max_n; ++n) {
      if (k >= n) {
        row.emplace_back();
        continue;
      }
      const BigInt v = polys[n - 1].poly.coefficient(k);
      if (n <= 10) note("k=" + std::to_string(k) + " n=" + std::to_string(n), ref[k - 1][n - k - 1], v);
      row.push_back(v);
    }
    t.cells.push_back(std::move(row));
  }
  t.rows.push_back("sum");
  std::vector<std::optional<BigInt>> sums;
  for (unsigned n = 2; n <= max_n; ++n) {
    const BigInt v = polys[n - 1].poly.eval_at(BigInt(1));
    if (n <= 10) note("sum n=" + std::to_string(n), reference::riordan_column_sums()[n - 2], v);
    sums.push_back(v);
  }
  t.cells.push_back(std::move(sums));
  return t;
}

int cmd_table(const TableRequest& req, Format format, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::pair<const reference::Grid& (*)(), unsigned>> grids{
      {"symbolic", {&reference::ultrametric_table, 8}},
      {"fully-colored-labeled", {&reference::fully_colored_labeled_table, 6}},
      {"mobiles", {&reference::mobile_table, 8}},
      {"multipartite-unlabeled", {&reference::multipartite_unlabeled_table, 8}},
      {"fully-colored-unlabeled", {&reference::fully_colored_unlabeled_table, 6}},
  };
  std::vector<Mismatch> mismatches;
  std::size_t compared = 0;
  Table t;
  if (req.name == "riordan-triangle") {
    t = riordan_table(req.max_n ? req.max_n : 10, mismatches, compared);
  } else {
    const auto& [ref, size] = grids.at(req.name);
    const unsigned max_s = req.max_s ? req.max_s : size;
    const unsigned max_m = req.max_m ? req.max_m : size;
    t = grid_table(req.name, max_s, max_m, ref(), mismatches, compared);
  }
  emit_table(t, format, out);
  if (!req.check_paper) return kExitOk;
  for (const auto& mm : mismatches)
    err << "mismatch at " << mm.cell << ": published " << mm.expected << ", computed " << mm.computed << '\n';
  if (!mismatches.empty()) {
    err << mismatches.size() << " of " << compared << " published cells differ\n";
    return kExitMismatch;
  }
  err << "all " << compared << " published cells match\n";
  return kExitOk;
}

// ---- count ----

int cmd_count(const std::string& family, unsigned s, const std::optional<unsigned>& m, Format format,
              std::ostream& out) {
  check_family_args(family, m);
  if (s < 1) throw UsageError("--s must be >= 1");
  const BigInt value = family_values(family, m.value_or(0), s).back();
  switch (format) {
    case Format::plain: out << value.to_string() << '\n'; break;
    case Format::csv:
      out << "family,s,m,value\n" << family << ',' << s << ',' << (m ? std::to_string(*m) : "") << ','
          << value.to_string() << '\n';
      break;
    case Format::json: {
      nlohmann::json j{{"family", family}, {"s", s}, {"value", integer_to_json(value)}};
      if (m) j["m"] = *m;
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---- gf ----

struct GfRequest {
  std::string kind;
  std::optional<unsigned> m;
  std::size_t order = 0;
  std::string degrees = "symbolic";
  std::size_t max_order = 16;
};

std::size_t order_cap(std::size_t flag) {
  const char* env = std::getenv("SERIESFORGE_MAX_ORDER");
  if (env == nullptr || *env == '\0') return flag;
  std::size_t value = 0;
  const std::string text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("SERIESFORGE_MAX_ORDER is not a nonnegative integer: " + text);
  }
  return std::min(flag, value);
}

void emit_rational_series(const std::string& kind, unsigned m, const ExpSeries<BigRational>& series, Format format,
                          std::ostream& out) {
  switch (format) {
    case Format::plain:
      for (std::size_t n = 1; n <= series.order(); ++n) out << (n > 1 ? " " : "") << series.coeff(n).to_string();
      out << '\n';
      break;
    case Format::csv:
      out << "n,coefficient\n";
      for (std::size_t n = 1; n <= series.order(); ++n) out << n << ',' << series.coeff(n).to_string() << '\n';
      break;
    case Format::json: {
      nlohmann::json j = to_json(series);
      j["kind"] = kind;
      j["m"] = m;
      out << j.dump() << '\n';
      break;
    }
  }
}

int cmd_gf(const GfRequest& req, Format format, std::ostream& out) {
  const std::size_t cap = order_cap(req.max_order);
  if (req.order < 1) throw UsageError("--order must be >= 1");
  if (req.order > cap) {
    throw UsageError("--order " + std::to_string(req.order) + " exceeds the limit " + std::to_string(cap) +
                     " (raise --max-order or SERIESFORGE_MAX_ORDER)");
  }
  if (!req.m) throw UsageError("gf needs --m");
  const unsigned m = *req.m;
  if (req.kind != "Y" && m < 1) throw UsageError("gf " + req.kind + " needs --m >= 1");

  if (req.kind == "A") {
    emit_rational_series("A", m, ultrametric_series(m, req.order), format, out);
  } else if (req.kind == "G") {
    emit_rational_series("G", m, mobile_series(m, req.order), format, out);
  } else if (req.kind == "Y") {
    emit_rational_series("Y", m, chain_increasing_series(m, req.order), format, out);
  } else {
    static const std::map<std::string, DegreeKind> kinds{
        {"symbolic", DegreeKind::symbolic}, {"ones", DegreeKind::all_ones}, {"factorial", DegreeKind::factorial}};
    const auto p = p_series(DegreeSpec::uniform(m, kinds.at(req.degrees)), req.order);
    switch (format) {
      case Format::plain:
        for (std::size_t s = 1; s <= req.order; ++s) out << s << ": " << p.coeff(s).to_string() << '\n';
        break;
      case Format::csv:
        out << "s,coefficient\n";
        for (std::size_t s = 1; s <= req.order; ++s) out << s << ',' << csv_quote(p.coeff(s).to_string()) << '\n';
        break;
      case Format::json: {
        nlohmann::json coeffs = nlohmann::json::array();
        for (std::size_t s = 1; s <= req.order; ++s) coeffs.push_back(to_json(p.coeff(s)));
        out << nlohmann::json{{"kind", "P"}, {"m", m}, {"order", req.order}, {"degrees", req.degrees},
                              {"coeffs", coeffs}}
                   .dump()
            << '\n';
        break;
      }
    }
  }
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string& family, const std::optional<unsigned>& m, const std::string& path,
               std::ostream& out, std::ostream& err) {
  check_family_args(family, m);
  BFile bfile;
  try {
    bfile = load_bfile(path);
  } catch (const BFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::int64_t max_index = 0;
  std::size_t skipped = 0;
  for (const auto& [n, v] : bfile.entries) {
    if (n >= 1 && n <= kVerifyLimit) max_index = std::max(max_index, n);
    else ++skipped;
  }
  if (max_index == 0) {
    err << "error: no b-file index in 1.." << kVerifyLimit << '\n';
    return kExitUsage;
  }
  const auto values = family_values(family, m.value_or(0), static_cast<unsigned>(max_index));
  std::size_t checked = 0;
  for (const auto& [n, v] : bfile.entries) {
    if (n < 1 || n > kVerifyLimit) continue;
    const BigInt& computed = values[static_cast<std::size_t>(n - 1)];
    if (computed != v) {
      out << "MISMATCH at n=" << n << ": b-file " << v.to_string() << ", computed " << computed.to_string() << '\n';
      return kExitMismatch;
    }
    ++checked;
  }
  out << "OK: " << checked << " terms match";
  if (skipped > 0) out << " (" << skipped << " outside 1.." << kVerifyLimit << " skipped)";
  out << '\n';
  return kExitOk;
}

std::vector<std::string> keys_of(const auto& map) {
  std::vector<std::string> out;
  for (const auto& [k, v] : map) out.push_back(k);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of series-reduced trees and related families"};
  app.name("seriesforge");
  app.require_subcommand(1);

  std::string format_name = "plain";
  std::string output_path;
  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember(keys_of(kFormats)));
    cmd->add_option("-o,--output", output_path, "Write results to this file instead of standard output");
  };

  std::string family;
  unsigned s = 0;
  std::optional<unsigned> m;

  auto* count = app.add_subcommand("count", "Print one exact count");
  count->add_option("family", family, "Count family")->required()->check(CLI::IsMember(keys_of(kFamilies)));
  count->add_option("--s", s, "Number of leaves (chains, actions)")->required();
  count->add_option("--m", m, "Number of colors");
  add_output_options(count);

  TableRequest table_req;
  auto* table = app.add_subcommand("table", "Print a table of counts");
  table
      ->add_option("name", table_req.name, "Table")
      ->required()
      ->check(CLI::IsMember({"symbolic", "fully-colored-labeled", "mobiles", "riordan-triangle",
                             "multipartite-unlabeled", "fully-colored-unlabeled"}));
  table->add_option("--max-s", table_req.max_s, "Largest s (default: published size)");
  table->add_option("--max-m", table_req.max_m, "Largest m (default: published size)");
  table->add_option("--max-n", table_req.max_n, "Largest n for riordan-triangle (default 10)");
  table->add_flag("--check-paper", table_req.check_paper, "Compare with the published values; exit 2 on mismatch");
  add_output_options(table);

  GfRequest gf_req;
  auto* gf = app.add_subcommand("gf", "Print generating-function coefficients");
  gf->add_option("kind", gf_req.kind, "P, A, G or Y")->required()->check(CLI::IsMember({"P", "A", "G", "Y"}));
  gf->add_option("--m", gf_req.m, "Number of colors");
  gf->add_option("--order", gf_req.order, "Truncation order")->required();
  gf->add_option("--degrees", gf_req.degrees, "Degree functions for P")
      ->check(CLI::IsMember({"symbolic", "ones", "factorial"}));
  gf->add_option("--max-order", gf_req.max_order, "Largest accepted order (default 16)");
  add_output_options(gf);

  std::string bfile_path;
  auto* verify = app.add_subcommand("verify", "Check a family against an OEIS b-file");
  verify->add_option("family", family, "Count family")->required()->check(CLI::IsMember(keys_of(kFamilies)));
  verify->add_option("--m", m, "Number of colors");
  verify->add_option("--bfile", bfile_path, "b-file path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    const Format format = kFormats.at(format_name);
    if (count->parsed()) status = cmd_count(family, s, m, format, buffer);
    else if (table->parsed()) status = cmd_table(table_req, format, buffer, err);
    else if (gf->parsed()) status = cmd_gf(gf_req, format, buffer);
    else status = cmd_verify(family, m, bfile_path, buffer, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output_path);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << output_path << '\n';
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace seriesforge
