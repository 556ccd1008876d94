// Command-line frontend. Talks to the library exclusively through the
// public C API; all judgement here is parsing, formatting, and exit-code
// mapping (0 success, 1 invalid input or failure, 2 inconclusive scan).

#include "traceform/traceform.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInconclusive = 2;

enum class Format { Text, Json, Csv };

// Thrown to unwind to main with a message and exit code.
struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void bail(int code, const std::string& message) {
  throw CliFailure{code, message};
}

[[noreturn]] void bail_status(tf_status status) {
  bail(status == TF_ERR_NOT_STABILIZED ? kExitInconclusive : kExitInvalid,
       tf_last_error());
}

void check(tf_status status) {
  if (status != TF_OK) bail_status(status);
}

// Adopts a malloc'd string from the API.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  tf_string_free(s);
  return out;
}

struct RootSystemHandle {
  tf_root_system* rs = nullptr;
  ~RootSystemHandle() { tf_root_system_free(rs); }
};

struct GroupHandle {
  tf_group* g = nullptr;
  ~GroupHandle() { tf_group_free(g); }
};

RootSystemHandle open_root_system(const std::string& type, int rank) {
  if (type.size() != 1) bail(kExitInvalid, "type must be a single letter A-G");
  RootSystemHandle h;
  check(tf_root_system_create(type[0], rank, &h.rs));
  return h;
}

GroupHandle open_group(const std::string& label) {
  GroupHandle h;
  check(tf_group_parse(label.c_str(), &h.g));
  return h;
}

// Weight coordinates: integers, tolerating [1,0,2] style brackets/commas.
std::vector<int64_t> parse_coords(const std::vector<std::string>& raw) {
  std::vector<int64_t> out;
  for (const std::string& token : raw) {
    std::string cleaned;
    for (char c : token) {
      if (c == '[' || c == ']' || c == '(' || c == ')') continue;
      cleaned += (c == ',') ? ' ' : c;
    }
    std::istringstream in(cleaned);
    std::string piece;
    while (in >> piece) {
      try {
        size_t used = 0;
        out.push_back(std::stoll(piece, &used));
        if (used != piece.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        bail(kExitInvalid, "bad weight coordinate '" + piece + "'");
      }
    }
  }
  return out;
}

// Optional override of the dimension cap used by `irrep`.
int64_t dimension_cap_from_env() {
  const char* env = std::getenv("TRACEFORM_ORBIT_CAP");
  if (env == nullptr || *env == '\0') return 0;  // library default
  try {
    size_t used = 0;
    int64_t cap = std::stoll(env, &used);
    if (used != std::strlen(env) || cap <= 0) throw std::invalid_argument("");
    return cap;
  } catch (const std::exception&) {
    bail(kExitInvalid,
         "TRACEFORM_ORBIT_CAP must be a positive integer, got '" +
             std::string(env) + "'");
  }
}

// --------------------------------------------------------------------
// Rendering
// --------------------------------------------------------------------

std::string join_array(const json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    if (v.is_string()) {
      out += v.get<std::string>();
    } else {
      out += v.dump();
    }
  }
  return out;
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "(out of scope)";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    return v.empty() ? "(none)" : join_array(v, ", ");
  }
  return v.dump();
}

void emit_text(const json& record, std::ostream& os) {
  for (const auto& [key, value] : record.items()) {
    if (value.is_object() || (value.is_array() && !value.empty() &&
                              value.front().is_object())) {
      os << key << ":\n";
      const json& items = value;
      for (const auto& item : items) {
        os << "  -";
        for (const auto& [k2, v2] : item.items()) {
          os << " " << k2 << "=" << scalar_text(v2);
        }
        os << "\n";
      }
    } else {
      os << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void emit_csv_scalar(const json& record, std::ostream& os) {
  std::string header, row;
  for (const auto& [key, value] : record.items()) {
    if (value.is_object()) continue;  // nested blocks have no CSV shape
    if (!header.empty()) {
      header += ",";
      row += ",";
    }
    header += key;
    if (value.is_array()) {
      row += join_array(value, ";");
    } else if (value.is_string()) {
      row += value.get<std::string>();
    } else if (value.is_boolean()) {
      row += value.get<bool>() ? "true" : "false";
    } else if (value.is_null()) {
      row += "";
    } else {
      row += value.dump();
    }
  }
  os << header << "\n" << row << "\n";
}

// Emits one record in the chosen format. Returns the suggested exit code
// (records carrying stabilized=false degrade to "inconclusive").
void emit(const json& record, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json:
      os << record.dump(2) << "\n";
      return;
    case Format::Csv:
      emit_csv_scalar(record, os);
      return;
    case Format::Text:
      emit_text(record, os);
      return;
  }
}

const char* kTableColumns[] = {"family",          "params",
                               "N",               "E",
                               "ratio_primes",    "degenerate_primes",
                               "zero_primes",     "flags"};

json table_row_view(const json& row) {
  json out;
  out["family"] = row["family"];
  out["params"] = row["params"];
  out["N"] = row["group_index"];
  out["E"] = row["e"];
  out["ratio_primes"] =
      row["ratio_primes"].is_null() ? "" : join_array(row["ratio_primes"], ";");
  out["degenerate_primes"] = join_array(row["degenerate_primes"], ";");
  out["zero_primes"] =
      row["zero_primes"].is_null() ? "" : join_array(row["zero_primes"], ";");
  out["flags"] =
      row["stabilized"].get<bool>() ? "stabilized" : "inconclusive";
  return out;
}

void emit_table(const json& rows, Format format, std::ostream& os) {
  if (format == Format::Json) {
    json wrapped;
    wrapped["command"] = "table1";
    wrapped["rows"] = rows;
    os << wrapped.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    std::string header;
    for (const char* col : kTableColumns) {
      if (!header.empty()) header += ",";
      header += col;
    }
    os << header << "\n";
    for (const auto& row : rows) {
      json view = table_row_view(row);
      std::string line;
      for (const char* col : kTableColumns) {
        if (!line.empty()) line += ",";
        const json& v = view[col];
        line += v.is_string() ? v.get<std::string>() : v.dump();
      }
      os << line << "\n";
    }
    return;
  }
  // Text: fixed column layout.
  std::vector<size_t> widths;
  for (const char* col : kTableColumns) widths.push_back(std::strlen(col));
  std::vector<json> views;
  for (const auto& row : rows) {
    json view = table_row_view(row);
    size_t i = 0;
    for (const char* col : kTableColumns) {
      const json& v = view[col];
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      widths[i] = std::max(widths[i], s.size());
      ++i;
    }
    views.push_back(std::move(view));
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  std::string header;
  for (size_t i = 0; i < widths.size(); ++i) {
    header += pad(kTableColumns[i], widths[i]);
  }
  os << header << "\n";
  for (const auto& view : views) {
    std::string line;
    size_t i = 0;
    for (const char* col : kTableColumns) {
      const json& v = view[col];
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      line += pad(s, widths[i]);
      ++i;
    }
    os << line << "\n";
  }
}

// --------------------------------------------------------------------
// Subcommands
// --------------------------------------------------------------------

int cmd_rootsys(const std::string& type, int rank, Format format) {
  RootSystemHandle rs = open_root_system(type, rank);
  char* out = nullptr;
  check(tf_root_system_info_json(rs.rs, &out));
  json info = json::parse(take(out));
  json record;
  record["command"] = "rootsys";
  for (auto& [k, v] : info.items()) record[k] = v;
  emit(record, format, std::cout);
  return kExitOk;
}

int cmd_index(const std::string& type, int rank,
              const std::vector<std::string>& coords, Format format) {
  RootSystemHandle rs = open_root_system(type, rank);
  std::vector<int64_t> w = parse_coords(coords);
  char* orbit_index = nullptr;
  check(tf_orbit_index(rs.rs, w.data(), w.size(), &orbit_index));
  char* orbit_size = nullptr;
  check(tf_orbit_size(rs.rs, w.data(), w.size(), &orbit_size));
  json record;
  record["command"] = "index";
  record["root_system"] = type + std::to_string(rank);
  record["weight"] = w;
  record["orbit_size"] = take(orbit_size);
  record["orbit_index"] = take(orbit_index);
  emit(record, format, std::cout);
  return kExitOk;
}

int cmd_irrep(const std::string& type, int rank,
              const std::vector<std::string>& coords, Format format) {
  RootSystemHandle rs = open_root_system(type, rank);
  std::vector<int64_t> w = parse_coords(coords);
  const int64_t cap = dimension_cap_from_env();
  char* dim = nullptr;
  check(tf_irrep_dimension(rs.rs, w.data(), w.size(), &dim));
  char* index = nullptr;
  check(tf_irrep_index(rs.rs, w.data(), w.size(), cap, &index));
  json record;
  record["command"] = "irrep";
  record["root_system"] = type + std::to_string(rank);
  record["highest_weight"] = w;
  record["dimension"] = take(dim);
  record["index"] = take(index);
  emit(record, format, std::cout);
  return kExitOk;
}

int cmd_ng(const std::string& label, int bound, Format format) {
  GroupHandle g = open_group(label);
  char* value = nullptr;
  int stabilized = 0;
  check(tf_group_index(g.g, bound, &value, &stabilized));
  char* canonical = nullptr;
  check(tf_group_label(g.g, &canonical));
  json record;
  record["command"] = "ng";
  record["group"] = take(canonical);
  record["bound"] = bound <= 0 ? 4 : bound;
  record["group_index"] = take(value);
  record["stabilized"] = stabilized != 0;
  emit(record, format, std::cout);
  return stabilized != 0 ? kExitOk : kExitInconclusive;
}

int cmd_eg(const std::string& label, bool quadratic, Format format) {
  GroupHandle g = open_group(label);
  char* value = nullptr;
  check(quadratic ? tf_group_eq(g.g, &value) : tf_group_e(g.g, &value));
  char* canonical = nullptr;
  check(tf_group_label(g.g, &canonical));
  json record;
  record["command"] = "eg";
  record["group"] = take(canonical);
  record[quadratic ? "Eq" : "E"] = take(value);
  emit(record, format, std::cout);
  return kExitOk;
}

int cmd_classify(const std::string& label, const std::string& p, int twist,
                 Format format) {
  GroupHandle g = open_group(label);
  char* canonical = nullptr;
  check(tf_group_label(g.g, &canonical));
  const std::string group_label = take(canonical);

  if (twist != 0) {
    char* info_raw = nullptr;
    check(tf_group_info_json(g.g, &info_raw));
    json info = json::parse(take(info_raw));
    const std::string twisted_label =
        std::to_string(twist) + info["type"].get<std::string>() +
        std::to_string(info["rank"].get<int>());
    char* out = nullptr;
    check(tf_twisted_classify_json(twisted_label.c_str(), p.c_str(),
                                   info["simply_connected"].get<bool>() ? 1 : 0,
                                   &out));
    json verdict = json::parse(take(out));
    json record;
    record["command"] = "classify";
    record["group"] = group_label;
    record["char"] = p;
    record["twisted_type"] = twisted_label;
    record["simply_connected"] = verdict["simply_connected"];
    record["degenerate_always"] = verdict["degenerate_always"];
    record["zero_always"] = verdict["zero_always"];  // null = out of scope
    record["provenance"] = "published-table lookup";
    emit(record, format, std::cout);
    return kExitOk;
  }

  int zero_all = 0;
  check(tf_trace_zero_all(g.g, p.c_str(), 0, &zero_all));
  int nondeg = 0;
  check(tf_nondegenerate_exists(g.g, p.c_str(), &nondeg));
  char* cls_raw = nullptr;
  check(tf_group_classify_json(g.g, 0, &cls_raw));
  json cls = json::parse(take(cls_raw));
  json record;
  record["command"] = "classify";
  record["group"] = group_label;
  record["char"] = p;
  record["exists_nonzero"] = zero_all == 0;
  record["exists_nondegenerate"] = nondeg != 0;
  record["group_index"] = cls["group_index"];
  record["e"] = cls["e"];
  record["ratio"] = cls["ratio"];
  record["degenerate_primes"] = cls["degenerate_primes"];
  record["zero_primes"] = cls["zero_primes"];
  record["provenance"] = "computed";
  emit(record, format, std::cout);
  return kExitOk;
}

int cmd_table1(int max_rank, Format format) {
  char* out = nullptr;
  check(tf_table1_json(max_rank, 0, &out));
  json rows = json::parse(take(out));
  emit_table(rows, format, std::cout);
  for (const auto& row : rows) {
    if (!row["stabilized"].get<bool>()) return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, Format format) {
  char* out = nullptr;
  check(tf_verify_json(suite.c_str(), &out));
  json report = json::parse(take(out));
  if (format == Format::Text) {
    for (const auto& c : report["checks"]) {
      std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ")
                << c["name"].get<std::string>() << "\n";
    }
    std::cout << "suite " << report["suite"].get<std::string>() << ": "
              << (report["passed"].get<bool>() ? "all checks passed"
                                               : "CHECKS FAILED")
              << "\n";
  } else {
    json record;
    record["command"] = "verify";
    for (auto& [k, v] : report.items()) record[k] = v;
    emit(record, format, std::cout);
  }
  return report["passed"].get<bool>() ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "traceform: exact invariants and trace-form classification for split "
      "almost-simple algebraic groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  // rootsys
  std::string rs_type;
  int rs_rank = 0;
  auto* rootsys = app.add_subcommand("rootsys", "Root system summary");
  rootsys->add_option("type", rs_type, "Type letter A-G")->required();
  rootsys->add_option("rank", rs_rank, "Rank")->required();

  // index
  std::string ix_type;
  int ix_rank = 0;
  std::vector<std::string> ix_coords;
  auto* index = app.add_subcommand(
      "index", "Orbit index of a weight (fundamental-weight coordinates)");
  index->add_option("type", ix_type, "Type letter A-G")->required();
  index->add_option("rank", ix_rank, "Rank")->required();
  index->add_option("coords", ix_coords, "Weight coordinates")->required();

  // irrep
  std::string ir_type;
  int ir_rank = 0;
  std::vector<std::string> ir_coords;
  auto* irrep = app.add_subcommand(
      "irrep",
      "Dimension and index of the irreducible representation with the given "
      "highest weight (TRACEFORM_ORBIT_CAP overrides the search cap)");
  irrep->add_option("type", ir_type, "Type letter A-G")->required();
  irrep->add_option("rank", ir_rank, "Rank")->required();
  irrep->add_option("coords", ir_coords, "Highest weight coordinates")
      ->required();

  // ng
  std::string ng_label;
  int ng_bound = 0;
  auto* ng = app.add_subcommand(
      "ng", "Gcd of orbit indices over the character lattice (group index)");
  ng->add_option("group", ng_label,
                 "Group label, e.g. SL9/mu3, PSp10, Spin11, E6ad")
      ->required();
  ng->add_option("--bound", ng_bound, "Scan box bound (default 4)");

  // eg
  std::string eg_label;
  bool eg_quadratic = false;
  auto* eg = app.add_subcommand(
      "eg", "Normalization constant of the induced bilinear form");
  eg->add_option("group", eg_label, "Group label")->required();
  eg->add_flag("--quadratic", eg_quadratic,
               "Constant of the quadratic form instead");

  // classify
  std::string cl_label;
  std::string cl_char;
  int cl_twist = 0;
  auto* classify = app.add_subcommand(
      "classify",
      "Existence of nonzero / nondegenerate trace forms in characteristic p");
  classify->add_option("group", cl_label, "Group label")->required();
  classify->add_option("--char", cl_char, "Characteristic: 0 or a prime")
      ->required();
  classify->add_option(
      "--twist", cl_twist,
      "Galois twist order (1, 2, 3 or 6): answer from the published "
      "twisted-form table instead of computing");

  // table1
  int t1_max_rank = 12;
  auto* table1 = app.add_subcommand(
      "table1", "Classification table over the standard families");
  table1->add_option(
      "--max-rank", t1_max_rank,
      "Largest matrix-size parameter n for classical families (and rank "
      "cutoff for exceptional types)");

  // verify
  std::string vf_suite = "all";
  auto* verify = app.add_subcommand("verify", "Built-in self verification");
  verify->add_option("--suite", vf_suite, "all, trace or appendix")
      ->check(CLI::IsMember({"all", "trace", "appendix"}))
      ->capture_default_str();

  for (CLI::App* sub : {rootsys, index, irrep, ng, eg, classify, table1,
                        verify}) {
    sub->fallthrough();  // lets the global --format follow the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  Format format = format_name == "json"  ? Format::Json
                  : format_name == "csv" ? Format::Csv
                                         : Format::Text;
  try {
    if (rootsys->parsed()) return cmd_rootsys(rs_type, rs_rank, format);
    if (index->parsed()) return cmd_index(ix_type, ix_rank, ix_coords, format);
    if (irrep->parsed()) return cmd_irrep(ir_type, ir_rank, ir_coords, format);
    if (ng->parsed()) return cmd_ng(ng_label, ng_bound, format);
    if (eg->parsed()) return cmd_eg(eg_label, eg_quadratic, format);
    if (classify->parsed())
      return cmd_classify(cl_label, cl_char, cl_twist, format);
    if (table1->parsed()) return cmd_table1(t1_max_rank, format);
    if (verify->parsed()) return cmd_verify(vf_suite, format);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
