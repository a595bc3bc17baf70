// gbh: homology of unordered configuration spaces of graphs, graded module
// structure over the edge polynomial ring, and Betti stabilization scans
// for edge-linear FI-graph families.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gbh/blowup.hpp"
#include "gbh/fi_family.hpp"
#include "gbh/graded_module.hpp"
#include "gbh/homology.hpp"
#include "gbh/json_io.hpp"
#include "gbh/oracle.hpp"
#include "gbh/parallel.hpp"

namespace {

using namespace gbh;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;
constexpr int kExitConfig = 4;
constexpr int kExitVerification = 5;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::LoopEdge:
    case Errc::ParallelEdge:
    case Errc::UnknownEndpoint:
    case Errc::DuplicateId:
    case Errc::UnknownVertex:
    case Errc::UnknownEdge:
    case Errc::NotAdjacencyPreserving:
    case Errc::NotInjective:
      return kExitInput;
    case Errc::BadField:
    case Errc::WindowTooSmall:
    case Errc::InvalidK:
      return kExitConfig;
    case Errc::ExactnessFailure:
    case Errc::RegressionFailure:
      return kExitVerification;
    default:
      return kExitComputation;
  }
}

// data goes to --out or stdout; logs go to stderr
struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(Errc::ParseError, "cannot write '" + path + "'");
    f << text;
  }
};

std::pair<int, int> parse_window(const std::string& w) {
  auto dots = w.find("..");
  if (dots == std::string::npos) fail(Errc::WindowTooSmall, "window must look like a..b");
  try {
    int a = std::stoi(w.substr(0, dots));
    int b = std::stoi(w.substr(dots + 2));
    if (b < a) fail(Errc::WindowTooSmall, "window is empty");
    return {a, b};
  } catch (const std::invalid_argument&) {
    fail(Errc::WindowTooSmall, "window must look like a..b");
  } catch (const std::out_of_range&) {
    fail(Errc::WindowTooSmall, "window bounds out of range");
  }
}

std::string torsion_string(const AbelianGroup& g) {
  std::string t;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (i) t += ";";
    t += g.torsion[i].get_str();
  }
  return t;
}

struct HomologyArgs {
  std::string file;
  int q = 0, n = 0;
  bool all = false;
  int qmax = 1, nmax = 3;
  bool full = false;
  std::string format = "csv";
  Output out;
  unsigned jobs = default_jobs();
};

int run_homology(const HomologyArgs& a) {
  Graph g = load_graph(a.file);
  SwComplex complex(g, !a.full);
  if (!a.all) {
    AbelianGroup h = configuration_homology(complex, a.q, a.n);
    if (a.format == "json") {
      std::ostringstream os;
      os << "{\"q\":" << a.q << ",\"n\":" << a.n << ",\"group\":" << abelian_to_json_text(h)
         << "}\n";
      a.out.write(os.str());
    } else {
      a.out.write("H_" + std::to_string(a.q) + " = " + h.to_string() + "\n");
    }
    return kExitOk;
  }
  std::vector<std::pair<int, int>> grid;
  for (int q = 0; q <= a.qmax; ++q)
    for (int n = 0; n <= a.nmax; ++n) grid.push_back({q, n});
  std::vector<AbelianGroup> results(grid.size());
  parallel_for(grid.size(), a.jobs, [&](std::size_t i) {
    results[i] = configuration_homology(complex, grid[i].first, grid[i].second);
  });
  std::ostringstream os;
  if (a.format == "json") {
    os << "[";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i) os << ",";
      os << "\n  {\"q\":" << grid[i].first << ",\"n\":" << grid[i].second
         << ",\"group\":" << abelian_to_json_text(results[i]) << "}";
    }
    os << "\n]\n";
  } else {
    os << "q,n,free_rank,torsion\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      os << grid[i].first << "," << grid[i].second << "," << results[i].free_rank << ","
         << torsion_string(results[i]) << "\n";
  }
  a.out.write(os.str());
  return kExitOk;
}

struct BettiArgs {
  std::string file;
  int q = 1;
  int pmax = 1, jmax = 4;
  int trunc = -1;  // default jmax
  std::string field = "q";
  Output out;
};

int run_betti(const BettiArgs& a) {
  Graph g = load_graph(a.file);
  FieldTag tag = parse_field(a.field);
  int trunc = a.trunc < 0 ? a.jmax : a.trunc;
  BettiTable table;
  if (tag.rational) {
    auto m = truncated_module(g, a.q, trunc, /*reduced=*/true, RationalField{});
    table = betti_table(m, a.pmax, a.jmax);
  } else {
    auto m = truncated_module(g, a.q, trunc, /*reduced=*/true, PrimeField(tag.prime));
    table = betti_table(m, a.pmax, a.jmax);
  }
  a.out.write(betti_table_csv(table));
  return kExitOk;
}

struct ScanArgs {
  std::string file;
  int q = 1, p = 0;
  int j = -1;       // fixed-j polynomial scan when >= 0
  int jmax = 4;     // support scan range
  int maxdeg = 2;
  std::string window = "3..8";
  std::string field = "q";
  std::string format = "csv";
  std::string report_path;
  Output out;
  unsigned jobs = default_jobs();
};

int run_family_scan(const ScanArgs& a) {
  FIGraphFamily family = load_family(a.file);
  FieldTag tag = parse_field(a.field);
  auto [n0, n1] = parse_window(a.window);
  std::vector<int> ns;
  for (int n = n0; n <= n1; ++n) ns.push_back(n);

  StabilizationReport report;
  std::ostringstream csv;
  csv << "n,q,p,j,beta\n";
  if (a.j >= 0) {
    std::vector<long> seq = betti_sequence(family, a.q, a.p, a.j, ns, tag, a.jobs);
    report = detect_polynomial(seq, ns, a.maxdeg);
    report.target = "beta(q=" + std::to_string(a.q) + ",p=" + std::to_string(a.p) +
                    ",j=" + std::to_string(a.j) + ")";
    for (std::size_t i = 0; i < ns.size(); ++i)
      csv << ns[i] << "," << a.q << "," << a.p << "," << a.j << "," << seq[i] << "\n";
  } else {
    report = support_stabilization(family, a.q, a.p, ns, a.jmax, tag, a.jobs);
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (int j : report.supports[i]) csv << ns[i] << "," << a.q << "," << a.p << "," << j << ",1\n";
  }

  if (a.format == "json") {
    a.out.write(stabilization_report_to_json_text(report) + "\n");
  } else {
    a.out.write(csv.str());
  }
  if (!a.report_path.empty()) {
    std::ofstream f(a.report_path, std::ios::binary | std::ios::trunc);
    f << stabilization_report_to_json_text(report) << "\n";
  }
  std::cerr << "family-scan: " << report.target
            << (report.stabilized ? " stabilized" : " not stabilized in window") << "\n";
  return kExitOk;
}

struct CheckArgs {
  std::string file;
  int qmax = 2, nmax = 4;
  long budget = static_cast<long>(kDefaultCellBudget);
  std::string vertex;
  std::string field = "q";
  Output out;
  unsigned jobs = default_jobs();
};

int run_quasi_iso_check(const CheckArgs& a) {
  Graph g = load_graph(a.file);
  SwComplex reduced(g, true);
  SwComplex full(g, false);
  std::vector<std::pair<int, int>> grid;
  for (int q = 0; q <= a.qmax; ++q)
    for (int n = 0; n <= a.nmax; ++n) grid.push_back({q, n});
  std::vector<std::pair<AbelianGroup, AbelianGroup>> results(grid.size());
  parallel_for(grid.size(), a.jobs, [&](std::size_t i) {
    results[i] = {configuration_homology(reduced, grid[i].first, grid[i].second),
                  configuration_homology(full, grid[i].first, grid[i].second)};
  });
  bool ok = true;
  std::ostringstream os;
  os << "q,n,reduced,full,equal\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool eq = results[i].first == results[i].second;
    ok = ok && eq;
    os << grid[i].first << "," << grid[i].second << "," << results[i].first.to_string() << ","
       << results[i].second.to_string() << "," << (eq ? 1 : 0) << "\n";
  }
  a.out.write(os.str());
  return ok ? kExitOk : kExitVerification;
}

int run_oracle_check(const CheckArgs& a) {
  Graph g = load_graph(a.file);
  SwComplex complex(g, !g.has_isolated_vertex());
  std::vector<std::pair<int, int>> grid;
  for (int q = 0; q <= a.qmax; ++q)
    for (int n = 0; n <= a.nmax; ++n) grid.push_back({q, n});
  std::vector<std::pair<AbelianGroup, AbelianGroup>> results(grid.size());
  parallel_for(grid.size(), a.jobs, [&](std::size_t i) {
    results[i] = {configuration_homology(complex, grid[i].first, grid[i].second),
                  oracle_homology(g, grid[i].second, grid[i].first,
                                  static_cast<std::size_t>(a.budget))};
  });
  bool ok = true;
  std::ostringstream os;
  os << "q,n,swiatkowski,discretized,equal\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool eq = results[i].first == results[i].second;
    ok = ok && eq;
    os << grid[i].first << "," << grid[i].second << "," << results[i].first.to_string() << ","
       << results[i].second.to_string() << "," << (eq ? 1 : 0) << "\n";
  }
  a.out.write(os.str());
  return ok ? kExitOk : kExitVerification;
}

int run_blowup_verify(const CheckArgs& a) {
  Graph g = load_graph(a.file);
  LesReport rep = verify_les(g, a.vertex, a.qmax, a.nmax, parse_field(a.field));
  a.out.write(les_report_to_json_text(rep) + "\n");
  return rep.ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph braid group homology via the Swiatkowski complex"};
  app.require_subcommand(1);

  HomologyArgs ha;
  auto* homology = app.add_subcommand("homology", "H_q(UF_n(G)) for a graph file");
  homology->add_option("graph", ha.file, "graph JSON file")->required();
  homology->add_option("--q", ha.q);
  homology->add_option("--n", ha.n);
  homology->add_flag("--all", ha.all, "tabulate q <= qmax, n <= nmax");
  homology->add_option("--qmax", ha.qmax);
  homology->add_option("--nmax", ha.nmax);
  homology->add_flag("--full", ha.full, "use the unreduced complex");
  homology->add_option("--format", ha.format)->check(CLI::IsMember({"csv", "json"}));
  homology->add_option("--out", ha.out.path);
  homology->add_option("--jobs", ha.jobs);

  BettiArgs ba;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of H_q as an edge-ring module");
  betti->add_option("graph", ba.file)->required();
  betti->add_option("--q", ba.q);
  betti->add_option("--pmax", ba.pmax);
  betti->add_option("--jmax", ba.jmax);
  betti->add_option("--trunc", ba.trunc, "module truncation (default jmax)");
  betti->add_option("--field", ba.field, "q or f<prime>");
  betti->add_option("--out", ba.out.path);

  ScanArgs sa;
  auto* scan = app.add_subcommand("family-scan", "Betti stabilization scan over an FI-graph family");
  scan->add_option("family", sa.file)->required();
  scan->add_option("--q", sa.q);
  scan->add_option("--p", sa.p);
  scan->add_option("--j", sa.j, "fixed weight: fit a polynomial in n");
  scan->add_option("--jmax", sa.jmax, "support scan range (used when --j is absent)");
  scan->add_option("--maxdeg", sa.maxdeg, "polynomial fit degree bound");
  scan->add_option("--window", sa.window, "n window, e.g. 3..8");
  scan->add_option("--field", sa.field);
  scan->add_option("--format", sa.format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--report", sa.report_path, "also write the JSON report here");
  scan->add_option("--out", sa.out.path);
  scan->add_option("--jobs", sa.jobs);

  CheckArgs qa;
  auto* quasi = app.add_subcommand("quasi-iso-check", "reduced vs full integral homology");
  quasi->add_option("graph", qa.file)->required();
  quasi->add_option("--qmax", qa.qmax);
  quasi->add_option("--nmax", qa.nmax);
  quasi->add_option("--out", qa.out.path);
  quasi->add_option("--jobs", qa.jobs);

  CheckArgs oa;
  auto* oracle = app.add_subcommand("oracle-check", "Swiatkowski vs discretized-model homology");
  oracle->add_option("graph", oa.file)->required();
  oracle->add_option("--qmax", oa.qmax)->default_val(2);
  oracle->add_option("--nmax", oa.nmax)->default_val(3);
  oracle->add_option("--budget", oa.budget, "discretized cell budget");
  oracle->add_option("--out", oa.out.path);
  oracle->add_option("--jobs", oa.jobs);

  CheckArgs bva;
  auto* blow = app.add_subcommand("blowup-verify", "blow-up SES exactness and LES bookkeeping");
  blow->add_option("graph", bva.file)->required();
  blow->add_option("--vertex", bva.vertex)->required();
  blow->add_option("--qmax", bva.qmax);
  blow->add_option("--nmax", bva.nmax);
  blow->add_option("--field", bva.field);
  blow->add_option("--out", bva.out.path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (homology->parsed()) return run_homology(ha);
    if (betti->parsed()) return run_betti(ba);
    if (scan->parsed()) return run_family_scan(sa);
    if (quasi->parsed()) return run_quasi_iso_check(qa);
    if (oracle->parsed()) return run_oracle_check(oa);
    if (blow->parsed()) return run_blowup_verify(bva);
  } catch (const gbh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitConfig;
}
