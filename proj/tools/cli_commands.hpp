#pragma once

// Subcommands of the rmac command-line tool. Kept in a header so the test
// suite can drive them without spawning processes.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmac/rmac.hpp"

namespace rmac::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kIo = 3 };

enum class Format { Text, Json, Csv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks{"surface", "orient", "embed", "quotient", "rh", "necklace", "recurrence"};
  return checks;
}

struct RunConfig {
  int n_min = 3;
  int n_max = 10;
  std::vector<std::string> checks = known_checks();
  Format format = Format::Text;
  std::string out;         // export directory
  std::string input;       // face-complex fixture for verify
  std::string projection;  // JSON file with a 3 x n matrix for OFF export
  bool quotient = false;   // export the quotient as well
  std::int64_t k = 2;      // alphabet size for the necklace subcommand
  int brute_cap = kDefaultBruteCap;
  int ambient_cap = kDefaultAmbientCap;

  /// 3 <= n_min <= n_max <= ambient cap (lower bound 1 for the necklace command).
  void validate(int lower = 3) const {
    if (ambient_cap < 3 || ambient_cap > kMaxAmbient) throw UsageError("--ambient-cap must lie in 3..30");
    if (n_min < lower) throw UsageError("n must be at least " + std::to_string(lower));
    if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
    if (n_max > ambient_cap)
      throw UsageError("n=" + std::to_string(n_max) + " exceeds the ambient cap " + std::to_string(ambient_cap));
    for (const auto& c : checks)
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
        throw UsageError("unknown check '" + c + "'");
  }
};

// ---------------------------------------------------------------------------
// table

struct TableRow {
  int n = 0;
  std::int64_t vertices = 0, edges = 0, squares = 0;
  std::int64_t chi = 0;
  std::int64_t genus_direct = -1;
  std::int64_t genus_closed = 0;
  std::int64_t necklaces = 0;
  std::int64_t chi_quotient = 0;
  std::int64_t quotient_genus_direct = -1;
  std::int64_t quotient_genus_closed = 0;
  bool rh = false;
  bool agree = false;
};

inline TableRow table_row(int n, int ambient_cap) {
  TableRow row;
  row.n = n;
  const CubicalComplex z = build_real_mac(polygon_boundary(n), ambient_cap);
  row.vertices = static_cast<std::int64_t>(z.count(0));
  row.edges = static_cast<std::int64_t>(z.count(1));
  row.squares = static_cast<std::int64_t>(z.count(2));
  row.chi = euler_characteristic(z);
  if (const auto cert = certify_surface(as_face_complex(z)); cert.genus) row.genus_direct = *cert.genus;
  row.genus_closed = genus_closed_form(n);
  row.necklaces = necklace_total(2, n);
  const QuotientComplex q = quotient_complex(z, CyclicAction(n));
  row.chi_quotient = q.euler_characteristic();
  if (const auto cert = certify_surface(q.face_complex()); cert.genus) row.quotient_genus_direct = *cert.genus;
  row.quotient_genus_closed = quotient_genus_closed_form(n);
  row.rh = riemann_hurwitz_check(z, q).holds;
  row.agree = row.genus_direct == row.genus_closed && row.quotient_genus_direct == row.quotient_genus_closed && row.rh &&
              row.chi == row.vertices - row.edges + row.squares;
  return row;
}

inline json to_json(const TableRow& r) {
  json j;
  j["n"] = r.n;
  j["V"] = r.vertices;
  j["E"] = r.edges;
  j["F"] = r.squares;
  j["chi"] = r.chi;
  j["genus"] = r.genus_direct;
  j["genus_closed_form"] = r.genus_closed;
  j["necklaces"] = r.necklaces;
  j["chi_quotient"] = r.chi_quotient;
  j["quotient_genus"] = r.quotient_genus_direct;
  j["quotient_genus_closed_form"] = r.quotient_genus_closed;
  j["riemann_hurwitz"] = r.rh;
  j["agree"] = r.agree;
  return j;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  std::vector<TableRow> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) rows.push_back(table_row(n, cfg.ambient_cap));
  const bool all = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.agree; });

  switch (cfg.format) {
    case Format::Json: {
      json j;
      j["rows"] = json::array();
      for (const auto& r : rows) j["rows"].push_back(to_json(r));
      j["all_agree"] = all;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,V,E,F,chi,genus,genus_closed_form,necklaces,chi_quotient,quotient_genus,quotient_genus_closed_form,"
             "riemann_hurwitz,agree\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.vertices << ',' << r.edges << ',' << r.squares << ',' << r.chi << ',' << r.genus_direct << ','
            << r.genus_closed << ',' << r.necklaces << ',' << r.chi_quotient << ',' << r.quotient_genus_direct << ','
            << r.quotient_genus_closed << ',' << (r.rh ? "pass" : "fail") << ',' << (r.agree ? "yes" : "no") << '\n';
      }
      break;
    case Format::Text: {
      const char* headers[] = {"n", "V", "E", "F", "chi", "g", "g_formula", "necklaces", "chi_quot", "g_quot", "g_quot_formula", "RH", "agree"};
      const int widths[] = {3, 8, 9, 9, 9, 8, 10, 10, 9, 7, 15, 5, 6};
      for (std::size_t i = 0; i < 13; ++i) out << std::setw(widths[i]) << headers[i];
      out << '\n';
      for (const auto& r : rows) {
        out << std::setw(widths[0]) << r.n << std::setw(widths[1]) << r.vertices << std::setw(widths[2]) << r.edges
            << std::setw(widths[3]) << r.squares << std::setw(widths[4]) << r.chi << std::setw(widths[5]) << r.genus_direct
            << std::setw(widths[6]) << r.genus_closed << std::setw(widths[7]) << r.necklaces << std::setw(widths[8])
            << r.chi_quotient << std::setw(widths[9]) << r.quotient_genus_direct << std::setw(widths[10])
            << r.quotient_genus_closed << std::setw(widths[11]) << (r.rh ? "pass" : "FAIL") << std::setw(widths[12])
            << (r.agree ? "yes" : "NO") << '\n';
      }
      break;
    }
  }
  return all ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  int n = 0;  // 0 for fixture input
  std::string check;
  bool pass = false;
  json details;
};

inline CheckResult run_check(const std::string& check, int n, const RunConfig& cfg) {
  CheckResult r{n, check, false, json::object()};
  if (check == "surface") {
    const auto cert = check_closed_surface(as_face_complex(build_real_mac(polygon_boundary(n), cfg.ambient_cap)));
    r.pass = cert.closed && cert.connected;
    r.details = io::to_json(cert);
    r.details.erase("witness");
  } else if (check == "orient") {
    const auto f = as_face_complex(build_real_mac(polygon_boundary(n), cfg.ambient_cap));
    const auto cert = certify_surface(f);
    r.pass = cert.orientable && orientation_is_valid(f, cert.orientation);
    r.details["orientable"] = cert.orientable;
    r.details["genus"] = cert.genus ? json(*cert.genus) : json(nullptr);
    r.details["witness_valid"] = r.pass;
  } else if (check == "embed") {
    const auto z = build_real_mac(polygon_boundary(n), cfg.ambient_cap);
    const auto rot = rotation_from_complex(z);
    const auto trace = trace_faces(one_skeleton(z), rot);
    const bool quads = std::all_of(trace.walks.begin(), trace.walks.end(), [](const auto& w) { return w.size() == 4; });
    const bool bijection = verify_two_cell(z, rot);
    r.pass = quads && bijection && trace.genus == genus_closed_form(n);
    r.details["faces"] = trace.faces;
    r.details["all_quadrilaterals"] = quads;
    r.details["bijection_with_squares"] = bijection;
    r.details["genus"] = trace.genus;
  } else if (check == "quotient") {
    const auto q = quotient_complex(build_real_mac(polygon_boundary(n), cfg.ambient_cap), CyclicAction(n));
    const auto f = q.face_complex();
    const auto cert = certify_surface(f);
    const auto closed_form = quotient_genus_closed_form(n);
    r.pass = cert.genus.has_value() && *cert.genus == closed_form && orientation_is_valid(f, cert.orientation);
    r.details["vertex_orbits"] = q.vertices.size();
    r.details["edge_orbits"] = q.edges.size();
    r.details["square_orbits"] = q.squares.size();
    r.details["chi"] = q.euler_characteristic();
    r.details["closed"] = cert.closed;
    r.details["connected"] = cert.connected;
    r.details["orientable"] = cert.orientable;
    r.details["genus"] = cert.genus ? json(*cert.genus) : json(nullptr);
    r.details["genus_closed_form"] = closed_form;
  } else if (check == "rh") {
    const auto rh = riemann_hurwitz_check(n, cfg.ambient_cap);
    r.pass = rh.holds;
    r.details["chi_total"] = rh.chi_total;
    r.details["chi_quotient"] = rh.chi_quotient;
    r.details["branch_sum"] = rh.branch_sum;
    r.details["rhs"] = rh.rhs;
    json branches = json::array();
    for (const auto& b : rh.branches) branches.push_back({{"label", b.label}, {"period", b.period}, {"isotropy", b.isotropy}});
    r.details["branch_points"] = std::move(branches);
  } else if (check == "necklace") {
    const auto total = necklace_total(2, n);
    const auto aperiodic = moreau_aperiodic(2, n);
    std::int64_t partition = 0;
    for (auto d : divisors(n)) partition += d * moreau_aperiodic(2, static_cast<int>(d));
    r.pass = partition == pow2(n);
    r.details["total"] = total;
    r.details["aperiodic"] = aperiodic;
    r.details["word_partition_identity"] = partition == pow2(n);
    if (n <= cfg.brute_cap) {
      const auto classes = enumerate_necklaces(n, cfg.brute_cap);
      const auto primitive = std::count_if(classes.begin(), classes.end(), [n](const NecklaceClass& c) { return c.period == n; });
      r.pass = r.pass && static_cast<std::int64_t>(classes.size()) == total && primitive == aperiodic;
      r.details["enumerated_classes"] = classes.size();
      r.details["enumerated_aperiodic"] = primitive;
    } else {
      r.details["enumeration"] = "skipped: n above brute-force cap";
    }
  } else if (check == "recurrence") {
    if (n + 1 > cfg.ambient_cap) throw UsageError("recurrence at n=" + std::to_string(n) + " needs n+1 within the ambient cap");
    const auto lower = polygon_surface_genus(n, cfg.ambient_cap);
    const auto upper = polygon_surface_genus(n + 1, cfg.ambient_cap);
    r.pass = surgery_recurrence_check(n, cfg.ambient_cap);
    r.details["genus_n"] = lower;
    r.details["genus_n_plus_1"] = upper;
    r.details["predicted"] = 2 * lower + pow2(n - 2) - 1;
  } else {
    throw UsageError("unknown check '" + check + "'");
  }
  return r;
}

/// Surface and orientability checks on a face-complex fixture.
inline std::vector<CheckResult> run_fixture_checks(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw IoError("cannot read " + cfg.input);
  FaceComplex f;
  try {
    f = io::face_complex_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed fixture: ") + e.what());
  }
  std::vector<CheckResult> out;
  for (const auto& check : cfg.checks) {
    CheckResult r{0, check, false, json::object()};
    if (check == "surface") {
      const auto cert = check_closed_surface(f);
      r.pass = cert.closed && cert.connected;
      r.details = io::to_json(cert);
    } else if (check == "orient") {
      const auto closed = check_closed_surface(f);
      if (!closed.closed) {
        r.details = io::to_json(closed);
      } else {
        const auto cert = check_orientable(f);
        r.pass = cert.orientable;
        r.details = io::to_json(cert);
      }
    } else {
      throw UsageError("check '" + check + "' does not apply to --input fixtures (use surface or orient)");
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<CheckResult> results;
  if (!cfg.input.empty()) {
    for (const auto& c : cfg.checks)
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
        throw UsageError("unknown check '" + c + "'");
    results = run_fixture_checks(cfg);
  } else {
    cfg.validate();
    for (const auto& check : cfg.checks)
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) results.push_back(run_check(check, n, cfg));
  }
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });

  if (cfg.format == Format::Text) {
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.check;
      if (r.n > 0) out << " n=" << r.n;
      else out << ' ' << cfg.input;
      out << ' ' << r.details.dump() << '\n';
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  } else if (cfg.format == Format::Csv) {
    out << "check,n,pass\n";
    for (const auto& r : results) out << r.check << ',' << r.n << ',' << (r.pass ? "pass" : "fail") << '\n';
  } else {
    json j;
    j["results"] = json::array();
    for (const auto& r : results) {
      json x;
      x["check"] = r.check;
      if (r.n > 0) x["n"] = r.n;
      else x["input"] = cfg.input;
      x["pass"] = r.pass;
      x["details"] = r.details;
      j["results"].push_back(std::move(x));
    }
    j["all_pass"] = all;
    out << j.dump(2) << '\n';
  }
  return all ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// quotient

inline int cmd_quotient(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  json rows = json::array();
  bool all = true;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto z = build_real_mac(polygon_boundary(n), cfg.ambient_cap);
    const auto q = quotient_complex(z, CyclicAction(n));
    const auto cert = certify_surface(q.face_complex());
    const auto qg = quotient_graph(n, cfg.ambient_cap);
    const auto rh = riemann_hurwitz_check(z, q);
    json row;
    row["n"] = n;
    row["vertex_orbits"] = q.vertices.size();
    row["edge_orbits"] = q.edges.size();
    row["square_orbits"] = q.squares.size();
    row["chi"] = q.euler_characteristic();
    row["genus"] = cert.genus ? json(*cert.genus) : json(nullptr);
    row["genus_closed_form"] = quotient_genus_closed_form(n);
    row["branch_points"] = rh.branches.size();
    row["graph_vertices"] = qg.graph.vertex_count;
    row["graph_edges"] = qg.graph.edges.size();
    row["graph_loops"] = qg.loops;
    row["graph_parallel_edges"] = qg.parallel_edges;
    row["graph_matches_complex"] = qg.matches_complex;
    const bool ok = cert.genus && *cert.genus == quotient_genus_closed_form(n) && qg.matches_complex && rh.holds;
    row["pass"] = ok;
    all = all && ok;
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::Json) {
    out << json{{"rows", rows}, {"all_pass", all}}.dump(2) << '\n';
  } else {
    const char* cols[] = {"n", "vertex_orbits", "edge_orbits", "square_orbits", "chi", "genus", "genus_closed_form",
                          "branch_points", "graph_loops", "graph_parallel_edges", "pass"};
    const char sep = cfg.format == Format::Csv ? ',' : ' ';
    for (std::size_t i = 0; i < std::size(cols); ++i) out << (i ? std::string(1, sep) : "") << cols[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < std::size(cols); ++i) out << (i ? std::string(1, sep) : "") << row[cols[i]].dump();
      out << '\n';
    }
  }
  return all ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// necklace

inline int cmd_necklace(const RunConfig& cfg, std::ostream& out) {
  cfg.validate(1);
  if (cfg.k < 1) throw UsageError("--k must be positive");
  if (cfg.brute_cap < 1 || cfg.brute_cap > kMaxBruteLength) throw UsageError("--brute-cap must lie in 1..24");
  json rows = json::array();
  bool all = true;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto tally = necklace_tally(cfg.k, n);
    std::int64_t partition = 0;
    for (const auto& [d, m] : tally.aperiodic_by_divisor) partition += d * m;
    bool ok = partition == checked_pow(cfg.k, n);
    json row;
    row["n"] = n;
    row["k"] = cfg.k;
    row["total"] = tally.total;
    row["aperiodic"] = tally.aperiodic_by_divisor.at(n);
    row["word_partition_identity"] = ok;
    if (cfg.k == 2 && n <= cfg.brute_cap) {
      const auto classes = enumerate_necklaces(n, cfg.brute_cap);
      const auto primitive = std::count_if(classes.begin(), classes.end(), [n](const NecklaceClass& c) { return c.period == n; });
      row["enumerated"] = classes.size();
      row["enumerated_aperiodic"] = primitive;
      ok = ok && static_cast<std::int64_t>(classes.size()) == tally.total && primitive == tally.aperiodic_by_divisor.at(n);
    } else {
      row["enumerated"] = nullptr;
      row["enumerated_aperiodic"] = nullptr;
    }
    row["pass"] = ok;
    all = all && ok;
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::Json) {
    out << json{{"rows", rows}, {"all_pass", all}}.dump(2) << '\n';
  } else {
    const char* cols[] = {"n", "k", "total", "aperiodic", "enumerated", "enumerated_aperiodic", "word_partition_identity", "pass"};
    const char sep = cfg.format == Format::Csv ? ',' : ' ';
    for (std::size_t i = 0; i < std::size(cols); ++i) out << (i ? std::string(1, sep) : "") << cols[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < std::size(cols); ++i) out << (i ? std::string(1, sep) : "") << row[cols[i]].dump();
      out << '\n';
    }
  }
  return all ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// export

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << content;
  if (!f) throw IoError("write failed for " + path.string());
}

/// Writes, per n: z_n<n>.json, z_n<n>.off, z_n<n>.certificate.json,
/// hypercube_n<n>.edges and rotation_n<n>.json; with --quotient also
/// quotient_n<n>.json, quotient_n<n>.off, quotient_graph_n<n>.edges and
/// quotient_graph_n<n>.labels.
inline int cmd_export(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.out.empty()) throw UsageError("export needs --out <directory>");
  const std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + cfg.out);

  json projection_json;
  if (!cfg.projection.empty()) {
    std::ifstream in(cfg.projection);
    if (!in) throw IoError("cannot read " + cfg.projection);
    projection_json = json::parse(in);
  }

  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto proj = cfg.projection.empty() ? io::default_projection(n) : io::projection_from_json(projection_json, n);
    const std::string tag = "n" + std::to_string(n);
    const auto z = build_real_mac(polygon_boundary(n), cfg.ambient_cap);
    const auto f = as_face_complex(z);

    write_file(dir / ("z_" + tag + ".json"), io::to_json(z).dump() + "\n");
    write_file(dir / ("z_" + tag + ".certificate.json"), io::to_json(certify_surface(f)).dump() + "\n");
    {
      std::ostringstream os;
      io::write_off(os, triangulate(f), proj);
      write_file(dir / ("z_" + tag + ".off"), os.str());
    }
    {
      std::ostringstream os;
      io::write_edge_list(os, hypercube_graph(n));
      write_file(dir / ("hypercube_" + tag + ".edges"), os.str());
    }
    write_file(dir / ("rotation_" + tag + ".json"), io::to_json(rotation_from_complex(z)).dump() + "\n");

    if (cfg.quotient) {
      const auto q = quotient_complex(z, CyclicAction(n));
      write_file(dir / ("quotient_" + tag + ".json"), io::to_json(q).dump() + "\n");
      {
        std::ostringstream os;
        io::write_off(os, triangulate(q.face_complex()), proj);
        write_file(dir / ("quotient_" + tag + ".off"), os.str());
      }
      const auto qg = quotient_graph(n, cfg.ambient_cap);
      std::ostringstream edges, labels;
      io::write_edge_list(edges, qg.graph);
      for (const auto& l : qg.graph.labels) labels << l << '\n';
      write_file(dir / ("quotient_graph_" + tag + ".edges"), edges.str());
      write_file(dir / ("quotient_graph_" + tag + ".labels"), labels.str());
    }
    out << "exported n=" << n << " to " << dir.string() << '\n';
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real moment-angle complexes over polygon boundaries: genus, embeddings and cyclic quotients"};
  app.require_subcommand(1);
  RunConfig cfg;
  int single_n = 0;
  std::string checks, format = "text";

  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--n", single_n, "Single value of n");
    sub->add_option("--n-min", cfg.n_min, "Smallest n")->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
    sub->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--ambient-cap", cfg.ambient_cap, "Largest ambient dimension allowed")->capture_default_str();
    sub->add_option("--brute-cap", cfg.brute_cap, "Largest n for brute-force enumeration")->capture_default_str();
  };
  auto* table = app.add_subcommand("table", "Genus table for Z and its cyclic quotient");
  add_range(table);
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  add_range(verify);
  verify->add_option("--checks", checks, "Comma-separated subset of surface,orient,embed,quotient,rh,necklace,recurrence");
  verify->add_option("--input", cfg.input, "Face-complex JSON fixture to certify instead of Z");
  auto* quotient = app.add_subcommand("quotient", "Quotient complex and quotient graph summary");
  add_range(quotient);
  auto* necklace = app.add_subcommand("necklace", "Necklace counts and brute-force cross-check");
  add_range(necklace);
  necklace->add_option("--k", cfg.k, "Alphabet size")->capture_default_str();
  auto* exp = app.add_subcommand("export", "Write JSON, edge-list and OFF artifacts");
  add_range(exp);
  exp->add_option("--out", cfg.out, "Output directory");
  exp->add_flag("--quotient", cfg.quotient, "Also export the quotient complex and graph");
  exp->add_option("--projection", cfg.projection, "JSON file holding a 3 x n projection matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  if (single_n != 0) cfg.n_min = cfg.n_max = single_n;
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (!checks.empty()) {
    cfg.checks.clear();
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) cfg.checks.push_back(item);
  }

  try {
    if (table->parsed()) return cmd_table(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (quotient->parsed()) return cmd_quotient(cfg, out);
    if (necklace->parsed()) {
      if (single_n == 0 && necklace->count("--n-min") == 0) cfg.n_min = 1;
      return cmd_necklace(cfg, out);
    }
    if (exp->parsed()) return cmd_export(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace rmac::cli
