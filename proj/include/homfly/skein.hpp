#pragma once

// Memoized skein-tree evaluation of the HOMFLYPT polynomial
//   v^{-1} P(L+) - v P(L-) = z P(L0),  P(unknot) = 1,
// over arbitrary oriented diagrams.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <istream>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "poly.hpp"

namespace homfly {

struct SkeinStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
};

/// Thrown when the node or wall-clock budget runs out.  No partial
/// polynomial ever escapes; only the counters collected so far.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, SkeinStats stats) : std::runtime_error(what), stats_(stats) {}
  const SkeinStats& stats() const { return stats_; }

 private:
  SkeinStats stats_;
};

/// Canonical code -> polynomial, shared between engines and persisted as
/// `hex-code TAB canonical-polynomial` lines.
class SkeinMemo {
 public:
  std::optional<LaurentPoly2> find(const std::string& code) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(code);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// First write wins; a conflicting second write is an engine bug.
  void insert(const std::string& code, const LaurentPoly2& p) {
    std::unique_lock lock(mutex_);
    auto [it, fresh] = table_.emplace(code, p);
    if (!fresh && it->second != p) throw std::logic_error("memo conflict for code " + to_hex(code));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  /// Returns the number of entries read.  Malformed lines are an error.
  std::size_t load(std::istream& in) {
    std::size_t count = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos) throw std::invalid_argument("cache line " + std::to_string(lineno) + ": missing tab");
      insert(from_hex(line.substr(0, tab)), LaurentPoly2::parse(line.substr(tab + 1)));
      ++count;
    }
    return count;
  }

  /// Writes entries sorted by code so the file is reproducible.
  void save(std::ostream& out) const {
    std::vector<std::pair<std::string, std::string>> rows;
    {
      std::shared_lock lock(mutex_);
      rows.reserve(table_.size());
      for (const auto& [k, v] : table_) rows.emplace_back(to_hex(k), v.to_string());
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
  }

  bool load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    load(in);
    return true;
  }
  void save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    save(out);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPoly2> table_;
};

struct SkeinOptions {
  std::uint64_t node_budget = 100'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  unsigned threads = 1;
};

class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinOptions opts = {}, std::shared_ptr<SkeinMemo> memo = std::make_shared<SkeinMemo>())
      : opts_(opts), memo_(std::move(memo)) {
    if (!memo_) memo_ = std::make_shared<SkeinMemo>();
  }

  LaurentPoly2 homfly(const LinkDiagram& d) {
    start_ = std::chrono::steady_clock::now();
    int spawn_depth = 0;
    for (unsigned t = opts_.threads; t > 1; t >>= 1) ++spawn_depth;
    spawn_depth_ = spawn_depth;
    return evaluate(d, 0);
  }

  SkeinStats stats() const {
    return SkeinStats{nodes_.load(), hits_.load(), misses_.load()};
  }
  void reset_stats() {
    nodes_ = 0;
    hits_ = 0;
    misses_ = 0;
  }
  const std::shared_ptr<SkeinMemo>& memo() const { return memo_; }
  const SkeinOptions& options() const { return opts_; }

 private:
  void tick() {
    std::uint64_t n = ++nodes_;
    if (n > opts_.node_budget) throw budget_exceeded("skein node budget exhausted", stats());
    if (opts_.time_budget && (n & 1023u) == 0 && std::chrono::steady_clock::now() - start_ > *opts_.time_budget)
      throw budget_exceeded("skein time budget exhausted", stats());
  }

  LaurentPoly2 evaluate(const LinkDiagram& d, int depth) {
    tick();
    auto [s, removed] = simplify(d);
    if (s.crossing_count() == 0) return delta_power(removed + s.free_loops() - 1);
    auto split = split_pieces(s);
    LaurentPoly2 result = connected(split.pieces.front(), depth);
    for (std::size_t i = 1; i < split.pieces.size(); ++i) result *= connected(split.pieces[i], depth);
    int extra = removed + static_cast<int>(split.pieces.size()) - 1;
    if (extra > 0) result *= delta_power(extra);
    return result;
  }

  LaurentPoly2 connected(const LinkDiagram& d, int depth) {
    const std::string code = canonical_code(d);
    if (auto hit = memo_->find(code)) {
      ++hits_;
      return *hit;
    }
    ++misses_;
    LaurentPoly2 result;
    const int x = first_nondescending_crossing(d);
    if (x < 0) {
      result = delta_power(component_count(d) - 1);
    } else {
      LinkDiagram flipped = switch_crossing(d, x);
      LinkDiagram smoothed = smooth_crossing(d, x);
      LaurentPoly2 pf, ps;
      if (depth < spawn_depth_) {
        auto fut = std::async(std::launch::async, [&] { return evaluate(flipped, depth + 1); });
        ps = evaluate(smoothed, depth + 1);
        pf = fut.get();
      } else {
        pf = evaluate(flipped, depth + 1);
        ps = evaluate(smoothed, depth + 1);
      }
      if (d.crossing(x).sign > 0)
        result = pf.shifted(2, 0) + ps.shifted(1, 1);  // P+ = v^2 P- + v z P0
      else
        result = pf.shifted(-2, 0) - ps.shifted(-1, 1);  // P- = v^-2 P+ - v^-1 z P0
    }
    memo_->insert(code, result);
    return result;
  }

  SkeinOptions opts_;
  std::shared_ptr<SkeinMemo> memo_;
  std::atomic<std::uint64_t> nodes_{0}, hits_{0}, misses_{0};
  std::chrono::steady_clock::time_point start_{};
  int spawn_depth_ = 0;
};

/// One-shot evaluation with a private memo.
inline LaurentPoly2 homfly(const LinkDiagram& d, SkeinOptions opts = {}) { return SkeinEngine(opts).homfly(d); }

}  // namespace homfly
