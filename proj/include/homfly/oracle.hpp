#pragma once

// Jones polynomial from the Kauffman bracket, as an independent check on the
// HOMFLYPT engines through the specialization v -> a^2, z -> a - a^{-1}
// (a = t^{1/2}).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "poly.hpp"

namespace homfly {

/// Laurent polynomial in one variable.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  static LaurentPoly1 monomial(Integer c, int e) {
    LaurentPoly1 p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }
  static LaurentPoly1 one() { return monomial(1, 0); }

  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }
  Integer coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  LaurentPoly1 shifted(int e, const Integer& c = 1) const {
    LaurentPoly1 p;
    if (c == 0) return p;
    for (const auto& [k, v] : terms_) p.terms_.emplace(k + e, v * c);
    return p;
  }

  LaurentPoly1& operator+=(const LaurentPoly1& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a += b.shifted(0, -1); }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 p;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) p.add_term(i + j, x * y);
    return p;
  }
  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

  /// Exact quotient; throws std::domain_error when a remainder is left.
  LaurentPoly1 divide_exact(const LaurentPoly1& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly1 rem = *this, quot;
    const int dtop = divisor.max_degree();
    const int dlow = divisor.min_degree();
    const Integer& lead = divisor.terms_.rbegin()->second;
    while (!rem.is_zero()) {
      if (rem.max_degree() - dtop < rem.min_degree() - dlow) throw std::domain_error("inexact polynomial division");
      const Integer& top = rem.terms_.rbegin()->second;
      if (top % lead != 0) throw std::domain_error("inexact polynomial division");
      Integer q = top / lead;
      int e = rem.max_degree() - dtop;
      quot.add_term(e, q);
      rem = rem - divisor.shifted(e, q);
    }
    return quot;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += c.str() + "*a^" + std::to_string(e);
    }
    return s;
  }

 private:
  void add_term(int e, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, Integer> terms_;
};

struct BracketOptions {
  std::size_t max_states = 2'000'000;
};

namespace detail {

// Ends of arcs: 2*arc is the tail (at an out-port), 2*arc+1 the head.
inline int port_end(const Crossing& c, int port) { return 2 * c.arc[static_cast<std::size_t>(port)] + (is_in_port(port) ? 1 : 0); }
inline int opposite_end(int e) { return e ^ 1; }

/// Unnormalized bracket <D> (empty diagram 1, each loop a factor
/// d = -A^2 - A^{-2}), by contracting one crossing at a time into a table
/// keyed by how the boundary ends are joined inside the processed region.
inline LaurentPoly1 bracket_unnormalized(const LinkDiagram& d, const BracketOptions& opts) {
  const LaurentPoly1 loop = LaurentPoly1::monomial(-1, 2) + LaurentPoly1::monomial(-1, -2);
  const int n = d.crossing_count();
  const int ends = 2 * d.arc_count();
  std::vector<int> crossing_of_end(static_cast<std::size_t>(ends), -1);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < 4; ++p) crossing_of_end[static_cast<std::size_t>(port_end(d.crossing(i), p))] = i;

  // greedy order: next crossing shares the most ends with the processed set
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      int score = 0;
      for (int p = 0; p < 4; ++p) {
        int o = crossing_of_end[static_cast<std::size_t>(opposite_end(port_end(d.crossing(i), p)))];
        if (o != i && done[static_cast<std::size_t>(o)]) ++score;
      }
      if (score > best_score) best = i, best_score = score;
    }
    done[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }

  std::vector<bool> processed(static_cast<std::size_t>(n), false);
  // state: partner of each boundary end stored as a sorted list of pairs
  using State = std::vector<std::pair<int, int>>;
  std::map<State, LaurentPoly1> states;
  states.emplace(State{}, LaurentPoly1::one());

  for (int ci : order) {
    const Crossing& c = d.crossing(ci);
    processed[static_cast<std::size_t>(ci)] = true;
    auto is_processed_end = [&](int e) { return processed[static_cast<std::size_t>(crossing_of_end[static_cast<std::size_t>(e)])]; };
    const bool oriented_is_a = c.sign > 0;
    const std::array<std::array<int, 4>, 2> pairings{{
        {OverIn, UnderOut, UnderIn, OverOut},  // oriented smoothing
        {OverIn, UnderIn, OverOut, UnderOut},  // the other one
    }};
    std::map<State, LaurentPoly1> next;
    for (const auto& [state, poly] : states) {
      std::map<int, int> link;
      for (auto [x, y] : state) {
        link[x] = y;
        link[y] = x;
      }
      for (int s = 0; s < 2; ++s) {
        std::map<int, int> conn = link;
        const auto& pr = pairings[static_cast<std::size_t>(s)];
        for (int k = 0; k < 4; k += 2) {
          int e1 = port_end(c, pr[static_cast<std::size_t>(k)]);
          int e2 = port_end(c, pr[static_cast<std::size_t>(k + 1)]);
          conn[e1] = e2;
          conn[e2] = e1;
        }
        // walk from each boundary end to the boundary end it is joined to
        State ns;
        std::map<int, bool> seen;
        for (const auto& [e, partner] : conn) {
          if (seen[e]) continue;
          if (is_processed_end(opposite_end(e))) continue;  // not a boundary end
          int cur = e;
          seen[cur] = true;
          while (true) {
            int f = conn.at(cur);
            seen[f] = true;
            if (!is_processed_end(opposite_end(f))) {
              ns.emplace_back(std::min(e, f), std::max(e, f));
              break;
            }
            cur = opposite_end(f);
            seen[cur] = true;
          }
        }
        int loops = 0;
        for (const auto& [e, partner] : conn) {
          if (seen[e]) continue;
          ++loops;
          int cur = e;
          while (!seen[cur]) {
            seen[cur] = true;
            int f = conn.at(cur);
            seen[f] = true;
            cur = opposite_end(f);
          }
        }
        std::sort(ns.begin(), ns.end());
        const bool is_a = (s == 0) == oriented_is_a;
        LaurentPoly1 term = poly.shifted(is_a ? 1 : -1);
        for (int l = 0; l < loops; ++l) term = term * loop;
        next[ns] += term;
      }
    }
    states = std::move(next);
    if (states.size() > opts.max_states) throw std::runtime_error("bracket state budget exhausted");
  }
  LaurentPoly1 total;
  for (const auto& [state, poly] : states) total += poly;
  for (int l = 0; l < d.free_loops(); ++l) total = total * loop;
  return total;
}

}  // namespace detail

/// Jones polynomial V(t) written in a = t^{1/2}.
inline LaurentPoly1 jones_via_bracket(const LinkDiagram& d, const BracketOptions& opts = {}) {
  if (d.empty()) throw std::invalid_argument("Jones polynomial of the empty diagram");
  const LaurentPoly1 loop = LaurentPoly1::monomial(-1, 2) + LaurentPoly1::monomial(-1, -2);
  LaurentPoly1 br = detail::bracket_unnormalized(d, opts).divide_exact(loop);
  // (-A^3)^{-w} <D>, then A^e -> a^{-e/2}
  const int w = d.writhe();
  LaurentPoly1 f = br.shifted(-3 * w, (w % 2 == 0) ? 1 : -1);
  LaurentPoly1 out;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw std::logic_error("odd A-exponent after writhe normalization");
    out += LaurentPoly1::monomial(c, -e / 2);
  }
  return out;
}

/// v -> a^2, z -> a - a^{-1}.  Negative z powers are cleared first and then
/// divided out exactly; failure means p is not a genuine link polynomial.
inline LaurentPoly1 specialize_homfly_to_jones(const LaurentPoly2& p) {
  if (p.is_zero()) return {};
  const int clear = std::max(0, -p.min_z_degree());
  const LaurentPoly1 zsub = LaurentPoly1::monomial(1, 1) + LaurentPoly1::monomial(-1, -1);
  std::map<int, LaurentPoly1> zpow;
  auto zp = [&](int k) -> const LaurentPoly1& {
    auto it = zpow.find(k);
    if (it != zpow.end()) return it->second;
    LaurentPoly1 r = LaurentPoly1::one();
    for (int i = 0; i < k; ++i) r = r * zsub;
    return zpow.emplace(k, r).first->second;
  };
  LaurentPoly1 q;
  for (const auto& t : p.terms()) q += zp(t.ez + clear).shifted(2 * t.ev, t.c);
  if (clear == 0) return q;
  try {
    return q.divide_exact(zp(clear));
  } catch (const std::domain_error&) {
    throw std::domain_error("specialization is not a Laurent polynomial: input is not a link polynomial");
  }
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly1& p) { return os << p.to_string(); }

}  // namespace homfly
