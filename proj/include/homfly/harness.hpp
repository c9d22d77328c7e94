#pragma once

// Verification suites and report rendering behind the command-line tool.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "braid.hpp"
#include "diagram.hpp"
#include "hecke.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "satellite.hpp"
#include "skein.hpp"

namespace homfly {

enum class Status { Pass, Fail, Skipped, Flagged };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    case Status::Flagged: return "FLAGGED";
  }
  return "?";
}

struct Check {
  std::string id;
  std::string expected;
  std::string got;
  Status status = Status::Pass;
  std::string note;
};

struct InvariantReport {
  std::string input;
  std::string engine;
  std::optional<LaurentPoly2> polynomial;
  std::optional<int> max_z;
  std::optional<int> morton;
  std::optional<HalfInt> genus;
  std::vector<Check> checks;
  std::int64_t ms = 0;

  void add(std::string id, std::string expected, std::string got, Status status, std::string note = {}) {
    checks.push_back(Check{std::move(id), std::move(expected), std::move(got), status, std::move(note)});
  }
  void expect_eq(const std::string& id, long long expected, long long got) {
    add(id, std::to_string(expected), std::to_string(got), expected == got ? Status::Pass : Status::Fail);
  }
  bool has(Status s) const {
    return std::any_of(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; });
  }
};

/// true iff nothing failed (and, with `strict`, nothing was skipped)
inline bool reports_pass(const std::vector<InvariantReport>& reports, bool strict = false) {
  for (const auto& r : reports) {
    if (r.has(Status::Fail)) return false;
    if (strict && r.has(Status::Skipped)) return false;
  }
  return true;
}

struct HarnessOptions {
  SkeinOptions skein;
  std::shared_ptr<SkeinMemo> memo = std::make_shared<SkeinMemo>();
  bool stretch = false;
  bool jones = false;
  bool timings = false;
  unsigned workers = 1;
};

/// A named knot diagram used as a satellite base.
struct FamilySample {
  std::string name;
  LinkDiagram diagram;
};

inline LinkDiagram trefoil_diagram() { return from_braid_closure(BraidWord(2, {1, 1, 1})); }

inline std::vector<FamilySample> default_family_samples() {
  return {
      {"trefoil", trefoil_diagram()},
      {"T(2,5)", replace_crossing_with_half_twists(trefoil_diagram(), {0, 3})},
  };
}

/// Knots built from the quasitoric closure with r = 2 by doubling crossings.
inline std::vector<FamilySample> beta2_knot_samples() {
  return {
      {"K_A[2,1,1;-2,-1,-1]", build_K_A({{2, 1, 1}, {-2, -1, -1}})},
      {"K_A[1,2,1;-1,-1,-2]", build_K_A({{1, 2, 1}, {-1, -1, -2}})},
  };
}

namespace detail {

struct Coefficient {
  int ez, ev;
  int c;
};

/// The printed polynomial of the doubled Borromean closure, row by row.
inline const std::vector<Coefficient>& borromean_table() {
  static const std::vector<Coefficient> table = {
      {-5, 5, -1},  {-5, 3, 5},    {-5, 1, -10}, {-5, -1, 10},  {-5, -3, -5},  {-5, -5, 1},
      {-1, 5, 8},   {-1, 3, -40},  {-1, 1, 80},  {-1, -1, -80}, {-1, -3, 40},  {-1, -5, -8},
      {1, 5, 12},   {1, 3, -68},   {1, 1, 144},  {1, -1, -144}, {1, -3, 68},   {1, -5, 12},
      {3, 5, 2},    {3, 3, -22},   {3, 1, 56},   {3, -1, -56},  {3, -3, 22},   {3, -5, -2},
      {5, 7, -1},   {5, 5, -5},    {5, 3, 13},   {5, 1, -7},    {5, -1, 7},    {5, -3, -13},
      {5, -5, 5},   {5, -7, 1},    {7, 5, -2},   {7, 3, 8},     {7, 1, 10},    {7, -1, -10},
      {7, -3, -8},  {7, -5, 2},    {9, 3, 1},    {9, 1, 11},    {9, -1, -11},  {9, -3, -1},
      {11, 1, 2},   {11, -1, -2},
  };
  return table;
}

template <class F>
auto parallel_map(std::size_t n, unsigned workers, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, n); ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i; (i = next++) < n;) out[i] = f(i);
    }));
  for (auto& p : pool) p.get();
  return out;
}

inline std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace detail

class Harness {
 public:
  explicit Harness(HarnessOptions opts = {}) : opts_(std::move(opts)) {
    if (!opts_.memo) opts_.memo = std::make_shared<SkeinMemo>();
  }

  const HarnessOptions& options() const { return opts_; }
  std::uint64_t skein_nodes() const { return nodes_.load(); }

  /// Skein evaluation recorded into `rep`.  Budget exhaustion leaves the
  /// report without a polynomial and adds a SKIPPED check.  Every polynomial
  /// is checked against the Morton bound and the parity rule.
  std::optional<LaurentPoly2> compute(const LinkDiagram& d, InvariantReport& rep) {
    const auto st = stats(d);
    rep.morton = st.morton_bound;
    rep.genus = st.canonical_genus;
    if (rep.engine.empty()) rep.engine = "skein";
    const auto t0 = std::chrono::steady_clock::now();
    SkeinEngine engine(opts_.skein, opts_.memo);
    std::optional<LaurentPoly2> p;
    try {
      p = engine.homfly(d);
    } catch (const budget_exceeded& e) {
      nodes_ += e.stats().nodes;
      rep.add("budget", "within budget", e.what(), Status::Skipped);
      return std::nullopt;
    }
    nodes_ += engine.stats().nodes;
    if (opts_.timings)
      rep.ms += std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    rep.polynomial = p;
    rep.max_z = p->is_zero() ? 0 : p->max_z_degree();
    rep.add("morton-bound", "max_z <= " + std::to_string(st.morton_bound), std::to_string(*rep.max_z),
            *rep.max_z <= st.morton_bound ? Status::Pass : Status::Fail);
    rep.add("parity", "exponents = " + std::to_string(st.components - 1) + " mod 2",
            satisfies_homfly_parity(*p, st.components) ? "holds" : "violated",
            satisfies_homfly_parity(*p, st.components) ? Status::Pass : Status::Fail);
    if (opts_.jones) jones_check(d, *p, rep);
    return p;
  }

  void jones_check(const LinkDiagram& d, const LaurentPoly2& p, InvariantReport& rep) const {
    try {
      auto j = jones_via_bracket(d);
      auto s = specialize_homfly_to_jones(p);
      rep.add("jones-oracle", j.to_string(), s.to_string(), j == s ? Status::Pass : Status::Fail);
    } catch (const std::runtime_error& e) {
      rep.add("jones-oracle", "bracket state sum", e.what(), Status::Skipped);
    } catch (const std::domain_error& e) {
      rep.add("jones-oracle", "bracket state sum", e.what(), Status::Fail);
    }
  }

  /// Degree of the doubled quasitoric closures, both top signs.
  std::vector<InvariantReport> verify_theorem_main(int r_max) {
    if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
    auto per_r = detail::parallel_map(static_cast<std::size_t>(r_max), opts_.workers, [&](std::size_t i) {
      const int r = static_cast<int>(i) + 1;
      std::vector<InvariantReport> out;
      std::optional<LaurentPoly2> top_plus;
      for (int top : {1, -1}) {
        const BraidWord b = quasitoric_beta(r, top);
        InvariantReport rep;
        rep.input = "W2(" + b.to_string() + ")";
        if (r >= 3 && !opts_.stretch) {
          rep.add("double-max-z", std::to_string(6 * r - 1), "not attempted", Status::Skipped,
                  "stretch input; rerun with --stretch");
          out.push_back(std::move(rep));
          continue;
        }
        const LinkDiagram w2 = blackboard_double(from_braid_closure(b));
        auto p = compute(w2, rep);
        if (p) {
          rep.expect_eq("double-max-z", 6 * r - 1, *rep.max_z);
          rep.expect_eq("morton-sharp", *rep.morton, *rep.max_z);
          if (top > 0) {
            top_plus = p;
          } else if (top_plus) {
            const bool ok = *p == mirror_homfly(*top_plus);
            rep.add("mirror-identity", "P(v^-1,-z) of the top-sign + double", ok ? "equal" : "differs",
                    ok ? Status::Pass : Status::Fail);
          }
        }
        out.push_back(std::move(rep));
      }
      return out;
    });
    std::vector<InvariantReport> all;
    for (auto& v : per_r)
      for (auto& r : v) all.push_back(std::move(r));
    return all;
  }

  /// Full coefficient comparison for the doubled Borromean closure.
  InvariantReport verify_example_borromean() {
    const BraidWord b = quasitoric_beta(2, 1);
    const LinkDiagram w2 = blackboard_double(from_braid_closure(b));
    InvariantReport rep;
    rep.input = "W2(" + b.to_string() + ")";
    auto p = compute(w2, rep);
    if (!p) return rep;
    rep.expect_eq("max-z", 11, *rep.max_z);

    LaurentPoly2 printed;
    for (const auto& t : detail::borromean_table()) printed += LaurentPoly2::monomial(t.c, t.ev, t.ez);
    std::vector<std::pair<int, int>> support;
    for (const auto& t : printed.terms()) support.emplace_back(t.ez, t.ev);
    for (const auto& t : p->terms()) support.emplace_back(t.ez, t.ev);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::string offenders;
    int matched = 0;
    for (auto [ez, ev] : support) {
      if (ez == 1 && ev == -5) continue;
      if (p->coeff(ev, ez) == printed.coeff(ev, ez)) {
        ++matched;
        continue;
      }
      if (!offenders.empty()) offenders += "; ";
      offenders += "(v^" + std::to_string(ev) + ",z^" + std::to_string(ez) + "): " + p->coeff(ev, ez).str() + " vs " +
                   printed.coeff(ev, ez).str();
    }
    rep.add("table-match", "all other coefficients as printed",
            offenders.empty() ? std::to_string(matched) + " coefficients match" : offenders,
            offenders.empty() ? Status::Pass : Status::Fail);

    const Integer disputed = p->coeff(-5, 1);
    const bool accepted = disputed == 12 || disputed == -12;
    rep.add("coefficient z^1*v^-5", "-12 (antisymmetry) or +12 (printed)", disputed.str(),
            accepted ? Status::Flagged : Status::Fail,
            "printed value is +12; the engine value " + disputed.str() +
                " keeps the z^1 row antisymmetric and vanishing at v=1 like every other row");
    jones_check(w2, *p, rep);
    return rep;
  }

  /// Whitehead doubles of knot samples over m in w-2..w+2, both clasp signs.
  std::vector<InvariantReport> verify_whitehead_family(const std::vector<FamilySample>& samples) {
    struct Job {
      std::size_t sample;
      int m;
      int sign;
    };
    std::vector<Job> jobs;
    std::vector<InvariantReport> out;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const LinkDiagram& d = samples[s].diagram;
      if (component_count(d) != 1) continue;
      for (int m = d.writhe() - 2; m <= d.writhe() + 2; ++m)
        for (int sign : {1, -1}) jobs.push_back({s, m, sign});
    }
    auto reports = detail::parallel_map(jobs.size(), opts_.workers, [&](std::size_t i) {
      const auto& job = jobs[i];
      return whitehead_report(samples[job.sample], job.m, job.sign, true);
    });
    std::size_t next = 0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const LinkDiagram& d = samples[s].diagram;
      const int mu = component_count(d);
      if (mu != 1) {
        InvariantReport rep;
        rep.input = "W(" + samples[s].name + ")";
        rep.add("sample-is-knot", "1 component", std::to_string(mu) + " components", Status::Skipped);
        out.push_back(std::move(rep));
        continue;
      }
      for (int k = 0; k < 10; ++k) out.push_back(std::move(reports[next++]));
    }
    return out;
  }

  /// Degree relations between doubles and Whitehead doubles on the trefoil
  /// for m = 0..5, and diagram genus of Whitehead doubles for m in [-5, 8].
  std::vector<InvariantReport> verify_props() {
    const FamilySample tre{"trefoil", trefoil_diagram()};
    std::vector<std::pair<int, int>> jobs;
    for (int m = 0; m <= 5; ++m)
      for (int sign : {1, -1}) jobs.emplace_back(m, sign);
    auto out = detail::parallel_map(jobs.size(), opts_.workers, [&](std::size_t i) {
      return whitehead_report(tre, jobs[i].first, jobs[i].second, false);
    });
    std::vector<FamilySample> genus_samples = default_family_samples();
    for (auto& s : beta2_knot_samples()) genus_samples.push_back(std::move(s));
    for (const auto& s : genus_samples) out.push_back(genus_report(s, -5, 8));
    return out;
  }

  InvariantReport genus_report(const FamilySample& s, int m_lo, int m_hi) const {
    InvariantReport rep;
    rep.input = "genus W(" + s.name + ", m=" + std::to_string(m_lo) + ".." + std::to_string(m_hi) + ")";
    rep.engine = "diagram";
    const int mu = component_count(s.diagram);
    if (mu != 1) {
      rep.add("sample-is-knot", "1 component", std::to_string(mu) + " components", Status::Skipped);
      return rep;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const int c = s.diagram.crossing_count();
    for (int m = m_lo; m <= m_hi; ++m)
      for (int sign : {1, -1}) {
        const HalfInt g = stats(canonical_whitehead(s.diagram, m, sign)).canonical_genus;
        rep.add("whitehead-genus[m=" + std::to_string(m) + "," + detail::sign_char(sign) + "]", std::to_string(c),
                g.to_string(), g.twice == 2 * c ? Status::Pass : Status::Fail);
      }
    if (opts_.timings)
      rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  /// Properties that need no printed values: mirror identity, engine
  /// agreement, Markov invariance, Morton bound and parity.
  std::vector<InvariantReport> verify_structural(int random_mirror = 100, int exhaustive_length = 6,
                                                 int markov_samples = 50) {
    std::vector<InvariantReport> out;
    out.push_back(mirror_report(random_mirror));
    out.push_back(engine_agreement_report(exhaustive_length));
    out.push_back(markov_report(markov_samples));
    return out;
  }

  /// Crossing, component, Seifert circle and bound counts for r = 1..r_max.
  std::vector<InvariantReport> verify_counts(int r_max = 6) {
    std::vector<InvariantReport> out;
    for (int r = 1; r <= r_max; ++r)
      for (int top : {1, -1}) {
        const BraidWord b = quasitoric_beta(r, top);
        const LinkDiagram base = from_braid_closure(b);
        const auto st = stats(blackboard_double(base));
        InvariantReport rep;
        rep.input = b.to_string();
        rep.engine = "diagram";
        rep.morton = st.morton_bound;
        rep.expect_eq("crossings", 3 * r, base.crossing_count());
        rep.expect_eq("quasitoric", 1, validate_quasitoric(b, r) ? 1 : 0);
        rep.expect_eq("components", r % 3 == 2 ? 3 : 1, closure_component_count(b));
        rep.expect_eq("components-diagram", closure_component_count(b), component_count(base));
        rep.expect_eq("double-crossings", 12 * r, st.crossings);
        rep.expect_eq("double-seifert-circles", 6 * r + 2, st.seifert_circles);
        rep.expect_eq("double-morton-bound", 6 * r - 1, st.morton_bound);
        out.push_back(std::move(rep));
      }
    return out;
  }

  /// Suite by name: main, borromean, family, props, structural, counts, all.
  std::vector<InvariantReport> run_suite(const std::string& name, int r_max = 2) {
    std::vector<InvariantReport> out;
    auto append = [&](std::vector<InvariantReport> v) {
      for (auto& r : v) out.push_back(std::move(r));
    };
    const bool all = name == "all";
    bool known = all;
    if (all || name == "main") known = true, append(verify_theorem_main(r_max));
    if (all || name == "borromean") known = true, out.push_back(verify_example_borromean());
    if (all || name == "family") {
      known = true;
      auto samples = default_family_samples();
      for (auto& s : beta2_knot_samples()) samples.push_back(std::move(s));
      append(verify_whitehead_family(samples));
    }
    if (all || name == "props") known = true, append(verify_props());
    if (all || name == "structural") known = true, append(verify_structural());
    if (all || name == "counts") known = true, append(verify_counts());
    if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
  }

 private:
  InvariantReport whitehead_report(const FamilySample& s, int m, int sign, bool degree_claim) {
    const LinkDiagram& d = s.diagram;
    const int w = d.writhe();
    InvariantReport rep;
    rep.input = "W" + detail::sign_char(sign) + "(" + s.name + ", m=" + std::to_string(m) + ")";
    const LinkDiagram wh = canonical_whitehead(d, m, sign);
    auto p = compute(wh, rep);
    if (degree_claim) {
      const HalfInt g = rep.genus.value_or(HalfInt{});
      rep.add("whitehead-genus", std::to_string(d.crossing_count()), g.to_string(),
              g.twice == 2 * d.crossing_count() ? Status::Pass : Status::Fail);
    }
    if (!p) return rep;
    if (degree_claim) rep.expect_eq("whitehead-max-z", 2 * d.crossing_count(), *rep.max_z);
    InvariantReport side;
    auto p_m = compute(canonical_double(d, m), side);
    auto p_w = compute(canonical_double(d, w), side);
    if (!p_m || !p_w) {
      rep.add("double-degrees", "computed", "budget exhausted", Status::Skipped);
      return rep;
    }
    rep.ms += side.ms;
    for (const auto& c : side.checks)
      if (c.status == Status::Fail) rep.checks.push_back(c);
    rep.expect_eq("double-vs-whitehead-degree", *rep.max_z - 1, p_m->max_z_degree());
    rep.expect_eq("double-degree-framing-independent", p_w->max_z_degree(), p_m->max_z_degree());
    return rep;
  }

  struct Tally {
    int total = 0, ok = 0;
    int morton_ok = 0, parity_ok = 0;
    std::string first_bad;
    void record(bool pass, const std::string& what) {
      ++total;
      if (pass) ++ok;
      else if (first_bad.empty()) first_bad = what;
    }
    void bounds(const LinkDiagram& d, const LaurentPoly2& p) {
      const auto st = stats(d);
      if ((p.is_zero() ? 0 : p.max_z_degree()) <= st.morton_bound) ++morton_ok;
      if (satisfies_homfly_parity(p, st.components)) ++parity_ok;
    }
    void emit(InvariantReport& rep, const std::string& id, int polys) const {
      rep.add(id, std::to_string(total) + "/" + std::to_string(total), std::to_string(ok) + "/" + std::to_string(total),
              ok == total ? Status::Pass : Status::Fail, first_bad.empty() ? "" : "first failure: " + first_bad);
      rep.add("morton-bound", std::to_string(polys) + "/" + std::to_string(polys),
              std::to_string(morton_ok) + "/" + std::to_string(polys), morton_ok == polys ? Status::Pass : Status::Fail);
      rep.add("parity", std::to_string(polys) + "/" + std::to_string(polys),
              std::to_string(parity_ok) + "/" + std::to_string(polys), parity_ok == polys ? Status::Pass : Status::Fail);
    }
  };

  static BraidWord random_braid(std::mt19937& rng, int max_strands, int max_length) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_strands - 1));
    const int len = static_cast<int>(rng() % static_cast<unsigned>(max_length + 1));
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      letters.push_back(rng() % 2 ? g : -g);
    }
    return BraidWord(n, std::move(letters));
  }

  LaurentPoly2 skein_of(const LinkDiagram& d) {
    SkeinEngine e(opts_.skein, opts_.memo);
    auto p = e.homfly(d);
    nodes_ += e.stats().nodes;
    return p;
  }

  InvariantReport mirror_report(int count) {
    InvariantReport rep;
    rep.input = "random braids (" + std::to_string(count) + ", <= 4 strands, length <= 10, seed 1)";
    rep.engine = "skein";
    std::mt19937 rng(1);
    Tally t;
    int odd = 0, odd_ok = 0, even = 0, even_differs = 0;
    for (int i = 0; i < count; ++i) {
      const BraidWord b = random_braid(rng, 4, 10);
      const LinkDiagram d = from_braid_closure(b);
      const auto p = skein_of(d);
      const LinkDiagram md = from_braid_closure(mirror(b));
      const auto q = skein_of(md);
      t.bounds(d, p);
      t.bounds(md, q);
      t.record(q == mirror_homfly(p) && skein_of(homfly::mirror(d)) == q, b.to_string());
      const bool v_only = q == p.substitute_v_inverse();
      if (component_count(d) % 2 == 1) ++odd, odd_ok += v_only;
      else ++even, even_differs += !v_only;
    }
    t.emit(rep, "mirror-identity", 2 * count);
    const bool pattern = odd_ok == odd && even_differs == even;
    rep.add("mirror-v-only", "P(v^-1,z) for all " + std::to_string(odd) + " odd-component closures, -P(v^-1,z) for all " +
                                 std::to_string(even) + " even ones",
            std::to_string(odd_ok) + "/" + std::to_string(odd) + " and " + std::to_string(even_differs) + "/" +
                std::to_string(even),
            pattern ? Status::Pass : Status::Fail);
    return rep;
  }

  InvariantReport engine_agreement_report(int max_length) {
    InvariantReport rep;
    rep.input = "all braid words of length <= " + std::to_string(max_length) + " on <= 3 strands";
    rep.engine = "skein+hecke";
    HeckeEngine hecke;
    Tally t;
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> alphabet;
      for (int g = 1; g < n; ++g) alphabet.insert(alphabet.end(), {g, -g});
      std::vector<std::vector<int>> words{{}};
      for (int len = 0; len <= max_length; ++len) {
        std::vector<std::vector<int>> longer;
        for (const auto& w : words) {
          const BraidWord b(n, w);
          const LinkDiagram d = from_braid_closure(b);
          const auto p = skein_of(d);
          t.bounds(d, p);
          t.record(p == hecke.homfly_closed_braid(b), b.to_string());
          if (len < max_length)
            for (int g : alphabet) {
              longer.push_back(w);
              longer.back().push_back(g);
            }
        }
        words = std::move(longer);
        if (alphabet.empty()) break;
      }
    }
    t.emit(rep, "engines-agree", t.total);
    return rep;
  }

  InvariantReport markov_report(int count) {
    InvariantReport rep;
    rep.input = "Markov moves on random braids (" + std::to_string(count) + ", seed 2)";
    rep.engine = "skein+hecke";
    std::mt19937 rng(2);
    HeckeEngine hecke;
    Tally t;
    int polys = 0;
    for (int i = 0; i < count; ++i) {
      const BraidWord b = random_braid(rng, 4, 10);
      const auto p = skein_of(from_braid_closure(b));
      // conjugation: rotate the word, then conjugate by a random generator
      std::vector<int> rot = b.letters();
      if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + static_cast<long>(rng() % rot.size()), rot.end());
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.strands() - 1));
      std::vector<int> conj{g};
      conj.insert(conj.end(), rot.begin(), rot.end());
      conj.push_back(-g);
      const BraidWord bc(b.strands(), conj);
      // stabilization with a random sign on a new strand
      std::vector<int> stab = b.letters();
      stab.push_back(rng() % 2 ? b.strands() : -b.strands());
      const BraidWord bs(b.strands() + 1, stab);
      const LinkDiagram dc = from_braid_closure(bc), ds = from_braid_closure(bs);
      const auto pc = skein_of(dc), ps = skein_of(ds);
      t.bounds(dc, pc);
      t.bounds(ds, ps);
      polys += 2;
      t.record(pc == p && ps == p && hecke.homfly_closed_braid(bc) == p && hecke.homfly_closed_braid(bs) == p,
               b.to_string());
    }
    t.emit(rep, "markov-invariance", polys);
    return rep;
  }

  HarnessOptions opts_;
  std::atomic<std::uint64_t> nodes_{0};
};

// ---- rendering ----

inline nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"id", c.id}, {"expected", c.expected}, {"got", c.got}, {"status", to_string(c.status)}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::json j;
  j["input"] = r.input;
  j["engine"] = r.engine;
  j["polynomial"] = r.polynomial ? r.polynomial->to_json() : nlohmann::json::array();
  j["max_z"] = r.max_z ? nlohmann::json(*r.max_z) : nlohmann::json();
  j["morton"] = r.morton ? nlohmann::json(*r.morton) : nlohmann::json();
  if (r.genus) j["genus"] = r.genus->to_string();
  j["checks"] = std::move(checks);
  j["ms"] = r.ms;
  return j;
}

inline std::string render_json(const std::vector<InvariantReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// One row per check; report-level columns repeat.
inline std::string render_csv(const std::vector<InvariantReport>& reports) {
  std::ostringstream os;
  os << "input,engine,polynomial,max_z,morton,ms,check,expected,got,status\n";
  for (const auto& r : reports) {
    const std::string head = csv_field(r.input) + "," + csv_field(r.engine) + "," +
                             csv_field(r.polynomial ? r.polynomial->to_string() : "") + "," +
                             (r.max_z ? std::to_string(*r.max_z) : "") + "," +
                             (r.morton ? std::to_string(*r.morton) : "") + "," + std::to_string(r.ms);
    if (r.checks.empty()) os << head << ",,,,\n";
    for (const auto& c : r.checks)
      os << head << "," << csv_field(c.id) << "," << csv_field(c.expected) << "," << csv_field(c.got) << ","
         << to_string(c.status) << "\n";
  }
  return os.str();
}

inline std::string render_text(const std::vector<InvariantReport>& reports) {
  std::ostringstream os;
  int counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) {
    os << r.input << "  [" << r.engine << "]";
    if (r.max_z) os << "  max_z=" << *r.max_z;
    if (r.morton) os << "  morton=" << *r.morton;
    if (r.genus) os << "  genus=" << r.genus->to_string();
    if (r.ms) os << "  " << r.ms << " ms";
    os << "\n";
    if (r.polynomial) os << "  P = " << r.polynomial->pretty() << "\n";
    for (const auto& c : r.checks) {
      ++counts[static_cast<int>(c.status)];
      os << "  " << to_string(c.status) << "  " << c.id << ": expected " << c.expected << ", got " << c.got << "\n";
      if (!c.note.empty()) os << "    note: " << c.note << "\n";
    }
  }
  os << "summary: " << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped, " << counts[3]
     << " flagged\n";
  return os.str();
}

}  // namespace homfly
