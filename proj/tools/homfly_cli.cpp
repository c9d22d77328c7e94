// homfly: HOMFLYPT polynomials of braid closures, PD diagrams and their
// doubles / Whitehead doubles, plus the verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homfly/harness.hpp"

using namespace homfly;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InputFlags {
  std::string braid, pd_file, ka_file;
  bool dbl = false;
  std::string whitehead;
  std::optional<int> twists_to;
};

struct CommonFlags {
  std::string out = "text";
  std::string cache;
  std::optional<double> timeout;
  std::optional<std::uint64_t> nodes;
  bool timings = false;
  std::string check;
  unsigned threads = 1;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--braid", in.braid, "braid word, e.g. \"3: 2 -1 2 -1 2 -1\"");
  cmd->add_option("--pd", in.pd_file, "file holding PD[X(a,b,c,d;s), ...]");
  cmd->add_option("--k-a", in.ka_file, "r x 3 integer matrix, comma separated");
  cmd->add_flag("--double", in.dbl, "take the doubled link W2");
  cmd->add_option("--whitehead", in.whitehead, "take the Whitehead double with clasp sign")->check(CLI::IsMember({"+", "-"}));
  cmd->add_option("--twists-to", in.twists_to, "framing m of the double");
}

void add_common_flags(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--out", c.out, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--cache", c.cache, "polynomial cache file (default $HOMFLY_CACHE)");
  cmd->add_option("--timeout", c.timeout, "wall-clock budget per computation, seconds");
  cmd->add_option("--nodes", c.nodes, "skein node budget per computation");
  cmd->add_flag("--timings", c.timings, "report milliseconds (reports are no longer reproducible)");
  cmd->add_option("--check", c.check, "extra oracle check")->check(CLI::IsMember({"jones"}));
  cmd->add_option("--threads", c.threads, "worker threads");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<int>> read_matrix(const std::string& path) {
  std::vector<std::vector<int>> a;
  std::istringstream lines(read_file(path));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<int> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw usage_error("bad matrix entry '" + cell + "' in " + path);
      }
    }
    a.push_back(std::move(row));
  }
  return a;
}

struct Input {
  std::string descriptor;
  LinkDiagram diagram;
  std::optional<BraidWord> braid;  // set when the diagram is a plain closure
};

Input load_input(const InputFlags& f) {
  const int given = !f.braid.empty() + !f.pd_file.empty() + !f.ka_file.empty();
  if (given != 1) throw usage_error("give exactly one of --braid, --pd, --k-a");
  Input in;
  try {
    if (!f.braid.empty()) {
      BraidWord b = BraidWord::parse(f.braid);
      in.descriptor = b.to_string();
      in.diagram = from_braid_closure(b);
      in.braid = b;
    } else if (!f.pd_file.empty()) {
      in.diagram = parse_pd(read_file(f.pd_file));
      in.descriptor = "PD " + f.pd_file;
      if (!is_planar(in.diagram)) throw usage_error("PD code is not planar (check crossing signs and arc order)");
    } else {
      auto a = read_matrix(f.ka_file);
      BraidWord b = k_a_braid(a);
      in.descriptor = "K_A " + f.ka_file;
      in.diagram = from_braid_closure(b);
      in.braid = b;
    }
  } catch (const usage_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  if (f.dbl && !f.whitehead.empty()) throw usage_error("--double and --whitehead are exclusive");
  if (f.twists_to && !f.dbl && f.whitehead.empty()) throw usage_error("--twists-to needs --double or --whitehead");
  try {
    if (f.dbl) {
      in.diagram = f.twists_to ? canonical_double(in.diagram, *f.twists_to) : blackboard_double(in.diagram);
      in.descriptor = "W2(" + in.descriptor + (f.twists_to ? ", m=" + std::to_string(*f.twists_to) : "") + ")";
      in.braid.reset();
    } else if (!f.whitehead.empty()) {
      const int m = f.twists_to.value_or(in.diagram.writhe());
      in.diagram = canonical_whitehead(in.diagram, m, f.whitehead == "+" ? 1 : -1);
      in.descriptor = "W" + f.whitehead + "(" + in.descriptor + ", m=" + std::to_string(m) + ")";
      in.braid.reset();
    }
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  return in;
}

SkeinOptions skein_options(const CommonFlags& c) {
  SkeinOptions o;
  if (c.nodes) o.node_budget = *c.nodes;
  if (c.timeout) o.time_budget = std::chrono::milliseconds(static_cast<long long>(*c.timeout * 1000));
  o.threads = std::max(1u, c.threads);
  return o;
}

std::string cache_path(const CommonFlags& c) {
  if (!c.cache.empty()) return c.cache;
  if (const char* env = std::getenv("HOMFLY_CACHE")) return env;
  return {};
}

std::shared_ptr<SkeinMemo> open_cache(const std::string& path) {
  auto memo = std::make_shared<SkeinMemo>();
  if (!path.empty()) {
    try {
      memo->load_file(path);
    } catch (const std::exception& e) {
      throw usage_error("cache " + path + ": " + e.what());
    }
  }
  return memo;
}

void emit(const std::vector<InvariantReport>& reports, const std::string& format) {
  if (format == "json") std::cout << render_json(reports);
  else if (format == "csv") std::cout << render_csv(reports);
  else std::cout << render_text(reports);
}

int run_homfly(const InputFlags& inf, const CommonFlags& c, const std::string& engine, bool strict) {
  Input in = load_input(inf);
  if (engine != "skein" && !in.braid) throw usage_error("engine " + engine + " needs a braid closure as input");
  const std::string path = cache_path(c);
  HarnessOptions ho;
  ho.skein = skein_options(c);
  ho.memo = open_cache(path);
  ho.jones = c.check == "jones";
  ho.timings = c.timings;
  Harness h(ho);

  InvariantReport rep;
  rep.input = in.descriptor;
  rep.engine = engine;
  std::optional<LaurentPoly2> p;
  if (engine == "hecke") {
    const auto st = stats(in.diagram);
    rep.morton = st.morton_bound;
    rep.genus = st.canonical_genus;
    try {
      p = HeckeEngine().homfly_closed_braid(*in.braid);
      rep.polynomial = p;
      rep.max_z = p->is_zero() ? 0 : p->max_z_degree();
      rep.add("morton-bound", "max_z <= " + std::to_string(st.morton_bound), std::to_string(*rep.max_z),
              *rep.max_z <= st.morton_bound ? Status::Pass : Status::Fail);
      if (ho.jones) h.jones_check(in.diagram, *p, rep);
    } catch (const resource_exceeded& e) {
      rep.add("budget", "within budget", e.what(), Status::Skipped);
    }
  } else {
    p = h.compute(in.diagram, rep);
  }
  bool agree = true;
  if (engine == "both" && p) {
    try {
      const bool same = HeckeEngine().homfly_closed_braid(*in.braid) == *p;
      rep.add("engines-agree", "skein = hecke", same ? "equal" : "differs", same ? Status::Pass : Status::Fail);
      agree = same;
    } catch (const resource_exceeded& e) {
      rep.add("engines-agree", "skein = hecke", e.what(), Status::Skipped);
      agree = false;
    }
  }
  std::vector<InvariantReport> reports{rep};
  emit(reports, c.out);
  if (engine == "both" && c.out == "text" && p) std::cout << (agree ? "engines agree\n" : "engines DISAGREE\n");
  if (!path.empty() && engine != "hecke") ho.memo->save_file(path);
  std::cerr << "skein nodes: " << h.skein_nodes() << "\n";
  return reports_pass(reports, strict) ? kExitPass : kExitCheckFailed;
}

int run_verify(const std::string& suite, int r_max, bool stretch, bool strict, const CommonFlags& c) {
  const std::string path = cache_path(c);
  HarnessOptions ho;
  ho.skein = skein_options(c);
  ho.skein.threads = 1;
  ho.workers = std::max(1u, c.threads);
  ho.memo = open_cache(path);
  ho.stretch = stretch;
  ho.jones = c.check == "jones";
  ho.timings = c.timings;
  Harness h(ho);
  std::vector<InvariantReport> reports;
  try {
    reports = h.run_suite(suite, r_max);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  emit(reports, c.out);
  if (!path.empty()) ho.memo->save_file(path);
  std::cerr << "skein nodes: " << h.skein_nodes() << "\n";
  return reports_pass(reports, strict) ? kExitPass : kExitCheckFailed;
}

int run_stats(const InputFlags& inf, const std::string& format) {
  Input in = load_input(inf);
  const auto st = stats(in.diagram);
  if (format == "json") {
    nlohmann::json j{{"input", in.descriptor},        {"crossings", st.crossings}, {"seifert_circles", st.seifert_circles},
                     {"writhe", st.writhe},           {"components", st.components}, {"morton_bound", st.morton_bound},
                     {"genus", st.canonical_genus.to_string()}, {"planar", is_planar(in.diagram)}};
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "input,c,s,w,mu,bound,genus\n"
              << csv_field(in.descriptor) << "," << st.crossings << "," << st.seifert_circles << "," << st.writhe << ","
              << st.components << "," << st.morton_bound << "," << st.canonical_genus.to_string() << "\n";
  } else {
    std::cout << in.descriptor << "\n"
              << "c=" << st.crossings << " s=" << st.seifert_circles << " bound=" << st.morton_bound
              << " w=" << st.writhe << " mu=" << st.components << " genus=" << st.canonical_genus.to_string() << "\n";
  }
  return kExitPass;
}

int run_cache(const CommonFlags& c, bool compact) {
  const std::string path = cache_path(c);
  if (path.empty()) throw usage_error("no cache file: pass --cache or set HOMFLY_CACHE");
  auto memo = std::make_shared<SkeinMemo>();
  std::size_t lines = 0;
  {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read cache " + path);
    try {
      lines = memo->load(in);
    } catch (const std::exception& e) {
      std::cerr << "cache " << path << ": " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  std::cout << path << ": " << memo->size() << " entries";
  if (lines != memo->size()) std::cout << " (" << lines - memo->size() << " duplicate lines)";
  std::cout << "\n";
  if (compact) {
    memo->save_file(path);
    std::cout << "compacted\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLYPT polynomials of links, doubled links and Whitehead doubles"};
  app.require_subcommand(1);

  InputFlags hin, sin;
  CommonFlags hc, vc, cc;
  std::string engine = "skein";
  bool hstrict = false;
  auto* homfly_cmd = app.add_subcommand("homfly", "compute one polynomial");
  add_input_flags(homfly_cmd, hin);
  add_common_flags(homfly_cmd, hc);
  homfly_cmd->add_option("--engine", engine, "skein, hecke or both")->check(CLI::IsMember({"skein", "hecke", "both"}));
  homfly_cmd->add_flag("--strict", hstrict, "budget skips count as failures");

  std::string suite = "all";
  int r_max = 3;
  bool stretch = false, vstrict = false;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_common_flags(verify_cmd, vc);
  verify_cmd->add_option("--suite", suite, "main, borromean, family, props, structural, counts or all")
      ->check(CLI::IsMember({"main", "borromean", "family", "props", "structural", "counts", "all"}));
  verify_cmd->add_option("--r-max", r_max, "largest r for the main suite")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--stretch", stretch, "attempt r >= 3 in the main suite");
  verify_cmd->add_flag("--strict", vstrict, "budget skips count as failures");

  std::string sformat = "text";
  auto* stats_cmd = app.add_subcommand("stats", "diagram statistics");
  add_input_flags(stats_cmd, sin);
  stats_cmd->add_option("--out", sformat, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  bool compact = false;
  auto* cache_cmd = app.add_subcommand("cache", "inspect or compact a cache file");
  cache_cmd->add_option("--cache", cc.cache, "cache file (default $HOMFLY_CACHE)");
  cache_cmd->add_flag("--compact", compact, "rewrite sorted and deduplicated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*homfly_cmd) return run_homfly(hin, hc, engine, hstrict);
    if (*verify_cmd) return run_verify(suite, r_max, stretch, vstrict, vc);
    if (*stats_cmd) return run_stats(sin, sformat);
    if (*cache_cmd) return run_cache(cc, compact);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
