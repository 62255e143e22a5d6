// divtower: construct, lift, and verify generalized divisible CSS codes.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divtower/catalog.hpp"
#include "divtower/codefile.hpp"
#include "divtower/css_code.hpp"
#include "divtower/lifting.hpp"

namespace {

using nlohmann::json;
using namespace divtower;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

std::string fmt_bits(const Bits& v) {
  std::string s;
  s.reserve(v.size());
  for (std::uint8_t b : v) s.push_back(b ? '1' : '0');
  return s;
}

std::string fmt_cols(const std::vector<std::size_t>& cols) {
  std::string s = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(cols[i]);
  }
  return s + "}";
}

std::vector<std::string> matrix_rows(const BitMatrix& m) {
  std::vector<std::string> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(fmt_bits(m.row_bits(r)));
  return rows;
}

json checks_json(const PairReport& report) {
  json arr = json::array();
  for (const PairCheck& c : report.checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return arr;
}

void print_checks(std::ostream& out, const PairReport& report, const std::string& indent) {
  for (const PairCheck& c : report.checks) {
    out << indent << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.pass) out << " -- " << c.witness;
    out << "\n";
  }
}

struct LoadedCode {
  CodeFile file;
  OrthoPair pair;
};

// Parses the file and requires a coefficient vector; throws ParseError or
// std::invalid_argument (the latter is reported as a usage error too, since
// it means the file is unusable for this command).
LoadedCode load_code(const std::string& path) {
  CodeFile file = parse_codefile(read_file(path));
  if (!file.t)
    throw std::invalid_argument("'" + path + "' carries no coefficient vector (t= line)");
  OrthoPair pair = to_pair(file);
  return {std::move(file), std::move(pair)};
}

int run_verify(const std::string& path, std::size_t dimcap, bool as_json) {
  const LoadedCode loaded = load_code(path);
  const PairReport report = verify_pair(loaded.pair);

  bool pass = report.all_pass;
  std::optional<PhaseVerdict> phase;
  std::string phase_note;
  std::optional<bool> transversal_x;
  if (report.all_pass) {
    const CssCode code = build_css(loaded.pair);
    try {
      phase = verify_transversal_phase(code, dimcap);
      pass = pass && phase->ok;
    } catch (const std::invalid_argument& e) {
      phase_note = e.what();
    }
    transversal_x = has_transversal_x(code);
  }

  if (as_json) {
    json j{{"command", "verify"},
           {"file", path},
           {"checks", checks_json(report)},
           {"pass", pass}};
    if (phase) {
      j["phase"] = {{"pass", phase->ok},
                    {"codeword", fmt_bits(phase->codeword)},
                    {"norm", phase->norm},
                    {"expected", phase->expected}};
    } else {
      j["phase"] = nullptr;
      if (!phase_note.empty()) j["phase_note"] = phase_note;
    }
    if (transversal_x)
      j["transversal_x"] = *transversal_x;
    else
      j["transversal_x"] = nullptr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verify: " << path << "\n";
    print_checks(std::cout, report, "  ");
    if (phase) {
      std::cout << "  phase-identity: " << (phase->ok ? "PASS" : "FAIL");
      if (!phase->ok)
        std::cout << " -- codeword " << fmt_bits(phase->codeword) << " has norm " << phase->norm
                  << ", expected " << phase->expected;
      std::cout << "\n";
    } else if (!phase_note.empty()) {
      std::cout << "  phase-identity: SKIPPED (" << phase_note << ")\n";
    } else {
      std::cout << "  phase-identity: SKIPPED (pair checks failed)\n";
    }
    if (transversal_x)
      std::cout << "  transversal-x (informational): " << (*transversal_x ? "yes" : "no") << "\n";
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

int run_coeff(const std::string& path, unsigned nu_override, bool as_json) {
  const CodeFile file = parse_codefile(read_file(path));
  const unsigned nu = nu_override != 0 ? nu_override : file.nu;
  std::optional<CoeffVector> t;
  try {
    t = find_coefficient_vector(file.logical, file.stab, nu);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  if (as_json) {
    json j{{"command", "coeff"}, {"file", path}, {"nu", nu}};
    if (t)
      j["t"] = t->t;
    else
      j["t"] = nullptr;
    std::cout << j.dump(2) << "\n";
  } else if (t) {
    std::cout << "nu=" << nu << "\n";
    std::cout << "t=";
    for (std::uint64_t v : t->t) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << "no coefficient vector exists at level " << nu << "\n";
  }
  return t ? kExitPass : kExitFail;
}

int run_distance(const std::string& path, std::size_t wmax, std::size_t dimcap, bool as_json) {
  const LoadedCode loaded = load_code(path);
  CssCode code;
  try {
    code = build_css(loaded.pair);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  const std::optional<std::size_t> dz = distance_z(code, wmax);
  std::optional<std::size_t> dx;
  std::string dx_note;
  try {
    dx = distance_x(code, dimcap);
  } catch (const std::invalid_argument& e) {
    dx_note = e.what();
  }
  if (as_json) {
    json j{{"command", "distance"},
           {"file", path},
           {"n", code.n},
           {"k", code.k},
           {"nu", code.nu},
           {"wmax", wmax}};
    if (dz)
      j["d_z"] = *dz;
    else
      j["d_z"] = nullptr;
    if (dx)
      j["d_x"] = *dx;
    else {
      j["d_x"] = nullptr;
      j["d_x_note"] = dx_note;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "code: n=" << code.n << " k=" << code.k << " nu=" << code.nu << "\n";
    if (dz)
      std::cout << "d_Z = " << *dz << "\n";
    else
      std::cout << "d_Z > " << wmax << " (no representative up to wmax)\n";
    if (dx)
      std::cout << "d_X = " << *dx << "\n";
    else
      std::cout << "d_X: skipped (" << dx_note << ")\n";
  }
  return kExitPass;
}

int run_phase_check(const std::string& path, std::size_t dimcap, bool as_json) {
  const LoadedCode loaded = load_code(path);
  CssCode code;
  try {
    code = build_css(loaded.pair);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  PhaseVerdict verdict;
  try {
    verdict = verify_transversal_phase(code, dimcap);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (as_json) {
    json j{{"command", "phase-check"},
           {"file", path},
           {"pass", verdict.ok},
           {"codeword", fmt_bits(verdict.codeword)},
           {"norm", verdict.norm},
           {"expected", verdict.expected}};
    std::cout << j.dump(2) << "\n";
  } else if (verdict.ok) {
    std::cout << "phase-identity: PASS (all " << code.n << "-bit codewords)\n";
  } else {
    std::cout << "phase-identity: FAIL -- codeword " << fmt_bits(verdict.codeword)
              << " has norm " << verdict.norm << ", expected " << verdict.expected << "\n";
  }
  return verdict.ok ? kExitPass : kExitFail;
}

std::vector<InnerCodeSpec> load_inners(const std::vector<std::string>& paths) {
  std::vector<InnerCodeSpec> inners;
  std::optional<unsigned> level;
  for (const std::string& path : paths) {
    LoadedCode loaded = load_code(path);
    if (level && loaded.file.nu != *level)
      throw std::invalid_argument("'" + path + "' is at level " +
                                  std::to_string(loaded.file.nu) +
                                  " but earlier inputs are at level " + std::to_string(*level));
    level = loaded.file.nu;
    inners.push_back({loaded.pair.logical, loaded.pair.stab, loaded.pair.coeff});
  }
  return inners;
}

struct LiftReportOptions {
  std::size_t wmax = 6;
  std::size_t dimcap = 24;
};

json lift_report_json(const LiftResult& lift, const CssCode& code, const PairReport& report,
                      const PhaseVerdict& phase, const LiftReportOptions& opts,
                      const std::optional<std::size_t>& dz) {
  const auto& adj = lift.adjustment;
  json j{{"columns", lift.t_lift.t.size()},
         {"n_out", lift.layout.n_out},
         {"inner_cols", lift.layout.inner_cols},
         {"nu", lift.t_lift.nu},
         {"k", code.k},
         {"t", lift.t_lift.t},
         {"checks", checks_json(report)},
         {"phase_pass", phase.ok},
         {"coefficient_sum_identity", adj.furthermore_holds},
         {"triorthogonal", is_triorthogonal(BitMatrix::vstack(lift.c_ell, lift.c_out, lift.c_in)).ok},
         {"transversal_x", has_transversal_x(code)},
         {"wmax", opts.wmax},
         {"adjustment",
          {{"bumped_columns", adj.bumped_columns},
           {"parity_constraint_applied", adj.parity_constraint_applied},
           {"naive_bumped_columns", adj.naive_bumped_columns},
           {"naive_cout_only_valid", adj.naive_cout_only_valid}}}};
  if (dz)
    j["d_z"] = *dz;
  else
    j["d_z"] = nullptr;
  return j;
}

void print_lift_report(const LiftResult& lift, const CssCode& code, const PairReport& report,
                       const PhaseVerdict& phase, const LiftReportOptions& opts,
                       const std::optional<std::size_t>& dz) {
  const auto& adj = lift.adjustment;
  std::cout << "lifted to level " << lift.t_lift.nu << ": " << lift.t_lift.t.size()
            << " columns (output " << lift.layout.n_out;
  for (std::size_t n : lift.layout.inner_cols) std::cout << ", inner 2x" << n;
  std::cout << "), k=" << code.k << "\n";
  std::cout << "adjustment: bumped columns " << fmt_cols(adj.bumped_columns)
            << "; even-bump constraint applied: "
            << (adj.parity_constraint_applied ? "yes" : "no") << "\n";
  std::cout << "coefficient-sum identity: " << (adj.furthermore_holds ? "PASS" : "FAIL") << "\n";
  std::cout << "single-block adjustment for comparison: bumped columns "
            << fmt_cols(adj.naive_bumped_columns)
            << "; valid: " << (adj.naive_cout_only_valid ? "yes" : "no") << "\n";
  std::cout << "verification:\n";
  print_checks(std::cout, report, "  ");
  std::cout << "  phase-identity: " << (phase.ok ? "PASS" : "FAIL") << "\n";
  std::cout << "  triorthogonal (pairs and triples even): "
            << (is_triorthogonal(BitMatrix::vstack(lift.c_ell, lift.c_out, lift.c_in)).ok
                    ? "yes"
                    : "no")
            << "\n";
  std::cout << "  transversal-x: " << (has_transversal_x(code) ? "yes" : "no") << "\n";
  if (dz)
    std::cout << "d_Z = " << *dz << "\n";
  else
    std::cout << "d_Z > " << opts.wmax << " (no representative up to wmax)\n";
}

int run_lift(const std::vector<std::string>& paths, const std::string& out,
             const LiftReportOptions& opts, bool as_json) {
  const std::vector<InnerCodeSpec> inners = load_inners(paths);
  LiftResult lift;
  try {
    lift = assemble_lift(inners);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  const OrthoPair lifted{lift.c_ell, BitMatrix::vstack(lift.c_out, lift.c_in), lift.t_lift};
  const CssCode code = build_css(lifted);
  const PairReport report = verify_pair(lifted);
  const PhaseVerdict phase = verify_transversal_phase(code, opts.dimcap);
  const std::optional<std::size_t> dz = distance_z(code, opts.wmax);

  const std::string serialized = serialize_codefile(to_codefile(lifted));
  if (as_json) {
    json j = lift_report_json(lift, code, report, phase, opts, dz);
    j["command"] = "lift";
    j["codefile"] = serialized;
    std::cout << j.dump(2) << "\n";
  } else {
    print_lift_report(lift, code, report, phase, opts, dz);
  }
  if (!out.empty()) {
    write_file(out, serialized);
    if (!as_json) std::cout << "wrote: " << out << "\n";
  } else if (!as_json) {
    std::cout << "\n" << serialized;
  }
  return kExitPass;
}

int run_checkmat(const std::vector<std::string>& paths, const std::string& out, bool as_json) {
  const std::vector<InnerCodeSpec> inners = load_inners(paths);
  std::pair<BitMatrix, BitMatrix> mats;
  try {
    mats = complete_check_matrix(inners);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  if (as_json) {
    json j{{"command", "checkmat"},
           {"c0", matrix_rows(mats.first)},
           {"c1", matrix_rows(mats.second)}};
    std::cout << j.dump(2) << "\n";
    if (!out.empty()) write_file(out, mats.first.to_string() + "\n" + mats.second.to_string());
    return kExitPass;
  }
  const std::string text = mats.first.to_string() + "\n" + mats.second.to_string();
  if (!out.empty()) {
    write_file(out, text);
    std::cout << "wrote: " << out << "\n";
  } else {
    std::cout << text;
  }
  return kExitPass;
}

int run_tower(const std::string& path, unsigned target, const std::string& out_dir,
              const LiftReportOptions& opts, bool as_json) {
  const LoadedCode loaded = load_code(path);
  if (target < loaded.file.nu) {
    std::cerr << "error: target level " << target << " is below the input level "
              << loaded.file.nu << "\n";
    return kExitUsage;
  }
  CssCode code;
  try {
    code = build_css(loaded.pair);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }

  const std::string stem = std::filesystem::path(path).stem().string();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);

  struct LevelRow {
    unsigned nu;
    std::size_t n, k;
    std::optional<std::size_t> dz;
    bool tx;
    std::string file;
  };
  std::vector<LevelRow> rows;
  std::vector<std::string> written;

  const auto record = [&](const CssCode& c) {
    const std::string file =
        (std::filesystem::path(out_dir) / (stem + ".nu" + std::to_string(c.nu) + ".codefile"))
            .string();
    write_file(file, serialize_codefile(to_codefile(c.pair)));
    written.push_back(file);
    rows.push_back({c.nu, c.n, c.k, distance_z(c, opts.wmax), has_transversal_x(c), file});
  };

  record(code);
  while (code.nu < target) {
    if (!has_transversal_x(code)) {
      std::cerr << "error: transversal X fails at level " << code.nu
                << "; the lift hypothesis does not hold\n";
      return kExitFail;
    }
    const std::vector<InnerCodeSpec> inners{{code.pair.logical, code.pair.stab, code.pair.coeff}};
    LiftResult lift;
    try {
      lift = assemble_lift(inners);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitFail;
    }
    code = build_css({lift.c_ell, BitMatrix::vstack(lift.c_out, lift.c_in), lift.t_lift});
    record(code);
  }

  if (as_json) {
    json levels = json::array();
    for (const LevelRow& r : rows) {
      json row{{"nu", r.nu}, {"n", r.n}, {"k", r.k}, {"transversal_x", r.tx}, {"file", r.file}};
      if (r.dz)
        row["d_z"] = *r.dz;
      else
        row["d_z"] = nullptr;
      levels.push_back(row);
    }
    json j{{"command", "tower"}, {"levels", levels}, {"wmax", opts.wmax}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nu    n    k    d_Z  transversal-x\n";
    for (const LevelRow& r : rows) {
      std::ostringstream dz;
      if (r.dz)
        dz << *r.dz;
      else
        dz << ">" << opts.wmax;
      std::cout << r.nu << "    " << r.n << "    " << r.k << "    " << dz.str() << "    "
                << (r.tx ? "yes" : "no") << "\n";
    }
    for (const std::string& f : written) std::cout << "wrote: " << f << "\n";
  }
  return kExitPass;
}

int run_sensitivity(const std::string& path, std::size_t d, bool as_json) {
  const BitMatrix m = parse_matrix_text(read_file(path));
  SensitivityVerdict verdict;
  try {
    verdict = check_sensitivity(m, d);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (as_json) {
    json j{{"command", "sensitivity"}, {"d", d}, {"pass", verdict.ok}};
    if (!verdict.ok) {
      j["witness"] = fmt_bits(verdict.witness);
      j["witness_weight"] = verdict.witness_weight;
      j["syndrome_weight"] = verdict.syndrome_weight;
    }
    std::cout << j.dump(2) << "\n";
  } else if (verdict.ok) {
    std::cout << "sensitivity: PASS (|e| + 2|Me| >= " << d << " for every nonzero e)\n";
  } else {
    std::cout << "sensitivity: FAIL -- e=" << fmt_bits(verdict.witness) << ": "
              << verdict.witness_weight << " + 2*" << verdict.syndrome_weight << " = "
              << (verdict.witness_weight + 2 * verdict.syndrome_weight) << " < " << d << "\n";
  }
  return verdict.ok ? kExitPass : kExitFail;
}

int run_rate(long long n, long long k, long long s, unsigned mu, unsigned nu, bool as_json) {
  Rational rate;
  try {
    rate = tower_rate(n, k, s, mu, nu);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (as_json) {
    json j{{"command", "rate"},
           {"numerator", rate.numerator()},
           {"denominator", rate.denominator()}};
    std::cout << j.dump(2) << "\n";
  } else if (rate.denominator() == 1) {
    std::cout << "n/k at level " << nu << " = " << rate.numerator() << "\n";
  } else {
    std::cout << "n/k at level " << nu << " = " << rate.numerator() << "/" << rate.denominator()
              << "\n";
  }
  return kExitPass;
}

int run_catalog(const std::string& name, const std::vector<std::uint64_t>& params,
                const std::string& out, bool as_json) {
  const auto need = [&](std::size_t count, const std::string& usage) {
    if (params.size() != count)
      throw CLI::ValidationError("catalog " + name + " expects " + usage);
  };
  std::string content;
  bool is_matrix = false;
  if (name == "steane") {
    need(0, "no parameters");
    content = serialize_codefile(to_codefile(steane()));
  } else if (name == "hcode") {
    need(1, "<k>");
    content = serialize_codefile(to_codefile(hcode(params[0])));
  } else if (name == "rm") {
    need(1, "<m>");
    content = serialize_codefile(to_codefile(rm_code(static_cast<unsigned>(params[0])).pair));
  } else if (name == "bh-trio") {
    need(1, "<k>");
    content = bh_triorthogonal(params[0]).to_string();
    is_matrix = true;
  } else if (name == "random") {
    need(4, "<n> <k> <d> <seed>");
    const std::optional<OrthoPair> pair =
        random_weakly_selfdual(params[0], params[1], params[2], params[3]);
    if (!pair) {
      std::cout << "no code found within the attempt budget\n";
      return kExitFail;
    }
    content = serialize_codefile(to_codefile(*pair));
  } else {
    throw CLI::ValidationError("unknown catalog name '" + name +
                               "' (expected steane, hcode, rm, bh-trio, or random)");
  }
  if (as_json) {
    json j{{"command", "catalog"}, {"name", name}};
    if (is_matrix)
      j["matrix"] = content;
    else
      j["codefile"] = content;
    std::cout << j.dump(2) << "\n";
    if (!out.empty()) write_file(out, content);
    return kExitPass;
  }
  if (!out.empty()) {
    write_file(out, content);
    std::cout << "wrote: " << out << "\n";
  } else {
    std::cout << content;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, lift, and verify generalized divisible CSS codes"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  std::string verify_path;
  std::size_t verify_dimcap = 24;
  CLI::App* verify = app.add_subcommand("verify", "check every code predicate of a code file");
  verify->add_option("codefile", verify_path)->required();
  verify->add_option("--dimcap", verify_dimcap, "max rank for codeword enumeration");

  std::string coeff_path;
  unsigned coeff_nu = 0;
  CLI::App* coeff = app.add_subcommand("coeff", "synthesize a coefficient vector for L/S");
  coeff->add_option("codefile", coeff_path)->required();
  coeff->add_option("--nu", coeff_nu, "target level (defaults to the file's nu)")
      ->check(CLI::Range(2u, 61u));

  std::string dist_path;
  std::size_t dist_wmax = 6, dist_dimcap = 24;
  CLI::App* dist = app.add_subcommand("distance", "bounded d_Z and exact d_X");
  dist->add_option("codefile", dist_path)->required();
  dist->add_option("--wmax", dist_wmax, "max weight for the d_Z search");
  dist->add_option("--dimcap", dist_dimcap, "max rank for the d_X enumeration");

  std::string phase_path;
  std::size_t phase_dimcap = 24;
  CLI::App* phase = app.add_subcommand("phase-check", "verify the transversal-phase identity");
  phase->add_option("codefile", phase_path)->required();
  phase->add_option("--dimcap", phase_dimcap, "max rank for codeword enumeration");

  std::vector<std::string> lift_paths;
  std::string lift_out;
  LiftReportOptions lift_opts;
  CLI::App* lift = app.add_subcommand("lift", "lift inner codes one divisibility level up");
  lift->add_option("codefile", lift_paths)->required()->expected(-1);
  lift->add_option("--out", lift_out, "write the lifted code file here");
  lift->add_option("--wmax", lift_opts.wmax, "max weight for the d_Z search");
  lift->add_option("--dimcap", lift_opts.dimcap, "max rank for codeword enumeration");

  std::string tower_path, tower_dir = ".";
  unsigned tower_target = 0;
  LiftReportOptions tower_opts;
  CLI::App* tower = app.add_subcommand("tower", "iterate single-inner lifts up to a level");
  tower->add_option("codefile", tower_path)->required();
  tower->add_option("--target", tower_target, "target level")->required()->check(CLI::Range(2u, 61u));
  tower->add_option("--out-dir", tower_dir, "directory for per-level code files");
  tower->add_option("--wmax", tower_opts.wmax, "max weight for the d_Z search");
  tower->add_option("--dimcap", tower_opts.dimcap, "max rank for codeword enumeration");

  std::vector<std::string> cm_paths;
  std::string cm_out;
  CLI::App* checkmat = app.add_subcommand("checkmat", "emit the protocol check matrices C0/C1");
  checkmat->add_option("codefile", cm_paths)->required()->expected(-1);
  checkmat->add_option("--out", cm_out, "write the matrices here");

  std::string sens_path;
  std::size_t sens_d = 0;
  CLI::App* sens = app.add_subcommand("sensitivity", "check |e| + 2|Me| >= d for an outer code");
  sens->add_option("matrixfile", sens_path)->required();
  sens->add_option("--d", sens_d, "target distance")->required();

  long long rate_n = 0, rate_k = 0, rate_s = 0;
  unsigned rate_mu = 0, rate_nu = 0;
  CLI::App* rate = app.add_subcommand("rate", "exact inverse-rate of a tower of codes");
  rate->add_option("--n", rate_n)->required();
  rate->add_option("--k", rate_k)->required();
  rate->add_option("--s", rate_s)->required();
  rate->add_option("--mu", rate_mu)->required();
  rate->add_option("--nu", rate_nu)->required();

  std::string cat_name, cat_out;
  std::vector<std::uint64_t> cat_params;
  CLI::App* cat = app.add_subcommand("catalog", "emit a built-in code family member");
  cat->add_option("name", cat_name, "steane | hcode | rm | bh-trio | random")->required();
  cat->add_option("params", cat_params, "family parameters");
  cat->add_option("--out", cat_out, "write the output here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return run_verify(verify_path, verify_dimcap, as_json);
    if (*coeff) return run_coeff(coeff_path, coeff_nu, as_json);
    if (*dist) return run_distance(dist_path, dist_wmax, dist_dimcap, as_json);
    if (*phase) return run_phase_check(phase_path, phase_dimcap, as_json);
    if (*lift) return run_lift(lift_paths, lift_out, lift_opts, as_json);
    if (*tower) return run_tower(tower_path, tower_target, tower_dir, tower_opts, as_json);
    if (*checkmat) return run_checkmat(cm_paths, cm_out, as_json);
    if (*sens) return run_sensitivity(sens_path, sens_d, as_json);
    if (*rate) return run_rate(rate_n, rate_k, rate_s, rate_mu, rate_nu, as_json);
    if (*cat) return run_catalog(cat_name, cat_params, cat_out, as_json);
  } catch (const divtower::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
