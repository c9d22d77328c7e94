#pragma once

// Oriented planar link diagrams in PD form.
//
// A crossing stores four arc labels in the fixed port order
// (over-in, over-out, under-in, under-out) plus its sign.  The planar
// rotation at a crossing is implied by the sign: counterclockwise the ports
// read (under-in, over-out, under-out, over-in) for a positive crossing and
// (under-in, over-in, under-out, over-out) for a negative one.  A positive
// crossing is one where the over strand, rotated counterclockwise by less
// than a half turn, points along the under strand.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braid.hpp"

namespace homfly {

enum Port : int { OverIn = 0, OverOut = 1, UnderIn = 2, UnderOut = 3 };

inline constexpr bool is_in_port(int p) { return p == OverIn || p == UnderIn; }
inline constexpr bool is_over_port(int p) { return p == OverIn || p == OverOut; }

struct Crossing {
  int sign = 1;
  std::array<int, 4> arc{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PortRef {
  int crossing = -1;
  int port = -1;
};

/// A value that is an integer or a half-integer, stored doubled.
struct HalfInt {
  int twice = 0;

  std::string to_string() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return (twice < 0 ? "-" : "") + std::to_string(std::abs(twice) / 2) + ".5";
  }
  friend bool operator==(const HalfInt&, const HalfInt&) = default;
  friend std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.to_string(); }
};

class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Arc labels may be any non-negative integers, each used by exactly one
  /// in-port and one out-port.  They are renumbered to 0..2n-1 preserving
  /// their relative order.
  LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0)
      : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw std::invalid_argument("negative free loop count");
    normalize();
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
  }

  /// The in-port where an arc ends.
  PortRef head(int arc) const { return head_[static_cast<std::size_t>(arc)]; }
  /// The out-port where an arc starts.
  PortRef tail(int arc) const { return tail_[static_cast<std::size_t>(arc)]; }

  /// The arc that continues the same strand through the head crossing.
  int next_arc(int arc) const {
    PortRef h = head(arc);
    return crossings_[static_cast<std::size_t>(h.crossing)].arc[h.port == OverIn ? OverOut : UnderOut];
  }
  /// The arc followed after the oriented smoothing at the head crossing.
  int seifert_next(int arc) const {
    PortRef h = head(arc);
    return crossings_[static_cast<std::size_t>(h.crossing)].arc[h.port == OverIn ? UnderOut : OverOut];
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.free_loops_ == b.free_loops_ && a.crossings_ == b.crossings_;
  }

 private:
  void normalize() {
    std::vector<int> labels;
    labels.reserve(crossings_.size() * 4);
    for (const auto& c : crossings_) {
      if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
      for (int a : c.arc) {
        if (a < 0) throw std::invalid_argument("negative arc label");
        labels.push_back(a);
      }
    }
    std::sort(labels.begin(), labels.end());
    std::vector<int> uniq = labels;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() * 2 != labels.size())
      throw std::invalid_argument("every arc label must occur at exactly two ports");
    bool dense = !uniq.empty() && uniq.front() == 0 && uniq.back() == static_cast<int>(uniq.size()) - 1;
    if (!dense) {
      for (auto& c : crossings_)
        for (int& a : c.arc)
          a = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), a) - uniq.begin());
    }
    const std::size_t arcs = uniq.size();
    head_.assign(arcs, PortRef{});
    tail_.assign(arcs, PortRef{});
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      for (int p = 0; p < 4; ++p) {
        int a = crossings_[i].arc[static_cast<std::size_t>(p)];
        auto& slot = is_in_port(p) ? head_[static_cast<std::size_t>(a)] : tail_[static_cast<std::size_t>(a)];
        if (slot.crossing >= 0)
          throw std::invalid_argument("arc " + std::to_string(a) + " has two " +
                                      (is_in_port(p) ? "incoming" : "outgoing") + " ends");
        slot = PortRef{static_cast<int>(i), p};
      }
    }
  }

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<PortRef> head_;
  std::vector<PortRef> tail_;
};

// ---------------------------------------------------------------------------
// Construction

/// Closure of a braid with strands oriented upwards.  sigma_i takes the
/// strand at position i over to position i+1 (a positive crossing).
inline LinkDiagram from_braid_closure(const BraidWord& b) {
  const int n = b.strands();
  std::vector<int> initial(static_cast<std::size_t>(n));
  std::iota(initial.begin(), initial.end(), 0);
  std::vector<int> current = initial;
  int next_label = n;
  std::vector<Crossing> xs;
  xs.reserve(b.length());
  for (int k : b.letters()) {
    auto i = static_cast<std::size_t>(std::abs(k) - 1);
    Crossing c;
    c.sign = k > 0 ? 1 : -1;
    int left_out = next_label++;
    int right_out = next_label++;
    if (k > 0) {
      c.arc = {current[i], right_out, current[i + 1], left_out};
    } else {
      c.arc = {current[i + 1], left_out, current[i], right_out};
    }
    current[i] = left_out;
    current[i + 1] = right_out;
    xs.push_back(c);
  }
  std::map<int, int> alias;
  int loops = 0;
  for (std::size_t p = 0; p < initial.size(); ++p) {
    if (current[p] == initial[p])
      ++loops;
    else
      alias[current[p]] = initial[p];
  }
  for (auto& c : xs)
    for (int& a : c.arc)
      if (auto it = alias.find(a); it != alias.end()) a = it->second;
  return LinkDiagram(std::move(xs), loops);
}

// ---------------------------------------------------------------------------
// Traversal

struct Component {
  std::vector<int> arcs;  // in traversal order starting at the minimal arc; empty for a free loop
};

/// Components ordered by their minimal arc; free loops come last.
inline std::vector<Component> components(const LinkDiagram& d) {
  std::vector<Component> out;
  std::vector<bool> seen(static_cast<std::size_t>(d.arc_count()), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    Component comp;
    int x = a;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      comp.arcs.push_back(x);
      x = d.next_arc(x);
    } while (x != a);
    out.push_back(std::move(comp));
  }
  for (int i = 0; i < d.free_loops(); ++i) out.push_back(Component{});
  return out;
}

inline std::vector<int> component_of_arcs(const LinkDiagram& d) {
  std::vector<int> comp(static_cast<std::size_t>(d.arc_count()), -1);
  int idx = 0;
  for (const auto& c : components(d)) {
    for (int a : c.arcs) comp[static_cast<std::size_t>(a)] = idx;
    ++idx;
  }
  return comp;
}

inline int component_count(const LinkDiagram& d) {
  int count = d.free_loops();
  std::vector<bool> seen(static_cast<std::size_t>(d.arc_count()), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ++count;
    for (int x = a; !seen[static_cast<std::size_t>(x)]; x = d.next_arc(x)) seen[static_cast<std::size_t>(x)] = true;
  }
  return count;
}

inline int seifert_circle_count(const LinkDiagram& d) {
  int count = d.free_loops();
  std::vector<bool> seen(static_cast<std::size_t>(d.arc_count()), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ++count;
    for (int x = a; !seen[static_cast<std::size_t>(x)]; x = d.seifert_next(x)) seen[static_cast<std::size_t>(x)] = true;
  }
  return count;
}

struct DiagramStats {
  int crossings = 0;
  int seifert_circles = 0;
  int writhe = 0;
  int components = 0;
  int morton_bound = 0;
  HalfInt canonical_genus;

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

inline DiagramStats stats(const LinkDiagram& d) {
  DiagramStats s;
  s.crossings = d.crossing_count();
  s.seifert_circles = seifert_circle_count(d);
  s.writhe = d.writhe();
  s.components = component_count(d);
  s.morton_bound = s.crossings - s.seifert_circles + 1;
  s.canonical_genus.twice = 2 - s.components - s.seifert_circles + s.crossings;
  return s;
}

/// Half the signed count of crossings between components i and j (indices
/// as returned by components()).
inline HalfInt linking_number(const LinkDiagram& d, int i, int j) {
  const int mu = component_count(d);
  if (i == j) throw std::invalid_argument("linking number needs two distinct components");
  if (i < 0 || j < 0 || i >= mu || j >= mu) throw std::invalid_argument("component index out of range");
  auto comp = component_of_arcs(d);
  int twice = 0;
  for (const auto& c : d.crossings()) {
    int a = comp[static_cast<std::size_t>(c.arc[OverIn])];
    int b = comp[static_cast<std::size_t>(c.arc[UnderIn])];
    if ((a == i && b == j) || (a == j && b == i)) twice += c.sign;
  }
  return HalfInt{twice};
}

// ---------------------------------------------------------------------------
// Local moves

enum class Removal : std::uint8_t { Keep, PassThrough, Smooth };

/// Deletes every crossing whose mode is not Keep.  PassThrough joins each
/// strand straight through (over-in to over-out, under-in to under-out);
/// Smooth performs the oriented smoothing.  Closed strands left without
/// crossings become free loops.
inline LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<Removal>& mode) {
  const int arcs = d.arc_count();
  auto removed = [&](int c) { return mode[static_cast<std::size_t>(c)] != Removal::Keep; };
  auto continuation = [&](int a) {
    PortRef h = d.head(a);
    const auto& c = d.crossing(h.crossing);
    bool pass = mode[static_cast<std::size_t>(h.crossing)] == Removal::PassThrough;
    if (h.port == OverIn) return c.arc[pass ? OverOut : UnderOut];
    return c.arc[pass ? UnderOut : OverOut];
  };
  std::vector<int> in_label(static_cast<std::size_t>(arcs), -1);
  std::vector<bool> visited(static_cast<std::size_t>(arcs), false);
  for (int a = 0; a < arcs; ++a) {
    if (removed(d.tail(a).crossing)) continue;
    int b = a;
    visited[static_cast<std::size_t>(b)] = true;
    while (removed(d.head(b).crossing)) {
      b = continuation(b);
      visited[static_cast<std::size_t>(b)] = true;
    }
    in_label[static_cast<std::size_t>(b)] = a;
  }
  int loops = d.free_loops();
  for (int a = 0; a < arcs; ++a) {
    if (visited[static_cast<std::size_t>(a)]) continue;
    ++loops;
    for (int b = a; !visited[static_cast<std::size_t>(b)]; b = continuation(b)) visited[static_cast<std::size_t>(b)] = true;
  }
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (int i = 0; i < d.crossing_count(); ++i) {
    if (removed(i)) continue;
    Crossing c = d.crossing(i);
    c.arc[OverIn] = in_label[static_cast<std::size_t>(c.arc[OverIn])];
    c.arc[UnderIn] = in_label[static_cast<std::size_t>(c.arc[UnderIn])];
    xs.push_back(c);
  }
  return LinkDiagram(std::move(xs), loops);
}

inline void check_crossing_id(const LinkDiagram& d, int x) {
  if (x < 0 || x >= d.crossing_count())
    throw std::out_of_range("crossing id " + std::to_string(x) + " out of range");
}

inline Crossing switched(const Crossing& c) {
  return Crossing{-c.sign, {c.arc[UnderIn], c.arc[UnderOut], c.arc[OverIn], c.arc[OverOut]}};
}

/// Exchanges over and under at crossing x (and so its sign).
inline LinkDiagram switch_crossing(const LinkDiagram& d, int x) {
  check_crossing_id(d, x);
  auto xs = d.crossings();
  xs[static_cast<std::size_t>(x)] = switched(xs[static_cast<std::size_t>(x)]);
  return LinkDiagram(std::move(xs), d.free_loops());
}

/// Oriented smoothing of crossing x.
inline LinkDiagram smooth_crossing(const LinkDiagram& d, int x) {
  check_crossing_id(d, x);
  std::vector<Removal> mode(d.crossings().size(), Removal::Keep);
  mode[static_cast<std::size_t>(x)] = Removal::Smooth;
  return remove_crossings(d, mode);
}

inline LinkDiagram mirror(const LinkDiagram& d) {
  auto xs = d.crossings();
  for (auto& c : xs) c = switched(c);
  return LinkDiagram(std::move(xs), d.free_loops());
}

// ---------------------------------------------------------------------------
// Faces

inline constexpr std::array<int, 4> kCcwPositive{UnderIn, OverOut, UnderOut, OverIn};
inline constexpr std::array<int, 4> kCcwNegative{UnderIn, OverIn, UnderOut, OverOut};

inline int ccw_next_port(int sign, int port) {
  const auto& order = sign > 0 ? kCcwPositive : kCcwNegative;
  for (std::size_t i = 0; i < 4; ++i)
    if (order[i] == port) return order[(i + 1) % 4];
  return -1;
}

/// Boundary walks of the regions of the diagram (per connected piece).  A
/// face is listed as the ports (crossing, port) at which it leaves each
/// corner along an arc.
inline std::vector<std::vector<PortRef>> faces(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
  std::vector<std::vector<PortRef>> out;
  auto other_end = [&](PortRef r) {
    int a = d.crossing(r.crossing).arc[static_cast<std::size_t>(r.port)];
    return is_in_port(r.port) ? d.tail(a) : d.head(a);
  };
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      if (seen[static_cast<std::size_t>(4 * c + p)]) continue;
      std::vector<PortRef> face;
      PortRef r{c, p};
      while (!seen[static_cast<std::size_t>(4 * r.crossing + r.port)]) {
        seen[static_cast<std::size_t>(4 * r.crossing + r.port)] = true;
        face.push_back(r);
        PortRef e = other_end(r);
        r = PortRef{e.crossing, ccw_next_port(d.crossing(e.crossing).sign, e.port)};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

/// Connected pieces (by shared arcs) holding at least one crossing; free
/// loops are reported separately.
struct SplitResult {
  std::vector<LinkDiagram> pieces;
  int free_loops = 0;
};

inline std::vector<int> piece_labels(const LinkDiagram& d, int& count) {
  const int n = d.crossing_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int a = 0; a < d.arc_count(); ++a) {
    int x = find(d.tail(a).crossing), y = find(d.head(a).crossing);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> root_label(static_cast<std::size_t>(n), -1);
  count = 0;
  for (int c = 0; c < n; ++c) {
    int r = find(c);
    if (root_label[static_cast<std::size_t>(r)] < 0) root_label[static_cast<std::size_t>(r)] = count++;
    label[static_cast<std::size_t>(c)] = root_label[static_cast<std::size_t>(r)];
  }
  return label;
}

inline SplitResult split_pieces(const LinkDiagram& d) {
  SplitResult out;
  out.free_loops = d.free_loops();
  int count = 0;
  auto label = piece_labels(d, count);
  if (count <= 1) {
    if (count == 1) out.pieces.push_back(d.free_loops() == 0 ? d : LinkDiagram(d.crossings(), 0));
    return out;
  }
  std::vector<std::vector<Crossing>> groups(static_cast<std::size_t>(count));
  for (int c = 0; c < d.crossing_count(); ++c) groups[static_cast<std::size_t>(label[static_cast<std::size_t>(c)])].push_back(d.crossing(c));
  for (auto& g : groups) out.pieces.emplace_back(std::move(g), 0);
  return out;
}

/// Euler check on every connected piece: a planar 4-valent piece with n
/// crossings has exactly n + 2 faces.
inline bool is_planar(const LinkDiagram& d) {
  for (const auto& piece : split_pieces(d).pieces)
    if (static_cast<int>(faces(piece).size()) != piece.crossing_count() + 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Simplification

struct SimplifyResult {
  LinkDiagram diagram;
  int removed_loops = 0;
};

/// Index of a crossing carrying a Reidemeister I kink, or -1.
inline int find_kink(const LinkDiagram& d) {
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossing(i);
    if (c.arc[OverOut] == c.arc[UnderIn] || c.arc[UnderOut] == c.arc[OverIn]) return i;
  }
  return -1;
}

/// A bigon face whose one edge is over at both corners and whose other edge
/// is under at both corners.  Returns the two crossings or nullopt.
inline std::optional<std::pair<int, int>> find_reducible_bigon(const LinkDiagram& d) {
  for (const auto& f : faces(d)) {
    if (f.size() != 2) continue;
    const PortRef d1 = f[0], d2 = f[1];
    if (d1.crossing == d2.crossing) continue;
    int e1 = d.crossing(d1.crossing).arc[static_cast<std::size_t>(d1.port)];
    int e2 = d.crossing(d2.crossing).arc[static_cast<std::size_t>(d2.port)];
    auto port_at = [&](int arc, int crossing) {
      PortRef h = d.head(arc), t = d.tail(arc);
      return h.crossing == crossing ? h.port : t.port;
    };
    bool e1_over_x = is_over_port(d1.port);
    bool e1_over_y = is_over_port(port_at(e1, d2.crossing));
    bool e2_over_y = is_over_port(d2.port);
    bool e2_over_x = is_over_port(port_at(e2, d1.crossing));
    if (e1_over_x == e1_over_y && e2_over_x == e2_over_y && e1_over_x != e2_over_x)
      return std::pair{d1.crossing, d2.crossing};
  }
  return std::nullopt;
}

/// Applies crossing-reducing Reidemeister I and II moves until none apply,
/// then strips split crossing-free loops.  A diagram reduced to nothing keeps
/// one loop, so P(d) = delta^removed_loops * P(result) always.
inline SimplifyResult simplify(const LinkDiagram& d) {
  LinkDiagram cur = d;
  while (cur.crossing_count() > 0) {
    std::vector<Removal> mode(static_cast<std::size_t>(cur.crossing_count()), Removal::Keep);
    if (int k = find_kink(cur); k >= 0) {
      mode[static_cast<std::size_t>(k)] = Removal::PassThrough;
    } else if (auto bigon = find_reducible_bigon(cur)) {
      mode[static_cast<std::size_t>(bigon->first)] = Removal::PassThrough;
      mode[static_cast<std::size_t>(bigon->second)] = Removal::PassThrough;
    } else {
      break;
    }
    cur = remove_crossings(cur, mode);
  }
  SimplifyResult r;
  if (cur.crossing_count() == 0) {
    r.removed_loops = std::max(cur.free_loops() - 1, 0);
    r.diagram = LinkDiagram({}, std::min(cur.free_loops(), 1));
  } else {
    r.removed_loops = cur.free_loops();
    r.diagram = cur.free_loops() == 0 ? cur : LinkDiagram(cur.crossings(), 0);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Descending diagrams

/// Walks components in order of their minimal arc, each from its minimal
/// arc, and returns the first crossing whose first visit is along the under
/// strand; -1 if the diagram is descending.
inline int first_nondescending_crossing(const LinkDiagram& d) {
  std::vector<bool> met(static_cast<std::size_t>(d.crossing_count()), false);
  for (const auto& comp : components(d)) {
    for (int a : comp.arcs) {
      PortRef h = d.head(a);
      if (met[static_cast<std::size_t>(h.crossing)]) continue;
      met[static_cast<std::size_t>(h.crossing)] = true;
      if (h.port == UnderIn) return h.crossing;
    }
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Canonical encoding

namespace detail {

inline std::vector<int> connected_code_from(const LinkDiagram& d, int start, const std::vector<int>* best) {
  const int n = d.crossing_count();
  std::vector<int> arc_label(static_cast<std::size_t>(d.arc_count()), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> cnum(static_cast<std::size_t>(n), -1);
  int next = 0;
  auto run = [&](int s) {
    int a = s;
    do {
      arc_label[static_cast<std::size_t>(a)] = next++;
      int c = d.head(a).crossing;
      if (cnum[static_cast<std::size_t>(c)] < 0) {
        cnum[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
        order.push_back(c);
      }
      a = d.next_arc(a);
    } while (a != s);
  };
  run(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& c = d.crossing(order[i]);
    for (int p : {OverIn, UnderIn})
      if (arc_label[static_cast<std::size_t>(c.arc[static_cast<std::size_t>(p)])] < 0) run(c.arc[static_cast<std::size_t>(p)]);
  }
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(5 * n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& c = d.crossing(order[i]);
    code.push_back(c.sign > 0 ? 1 : 0);
    for (int a : c.arc) code.push_back(arc_label[static_cast<std::size_t>(a)]);
    if (best) {
      // abandon as soon as this prefix is already larger than the best
      auto m = std::mismatch(code.begin(), code.end(), best->begin());
      if (m.first != code.end() && *m.first > *m.second) return {};
    }
  }
  return code;
}

inline std::vector<int> connected_code(const LinkDiagram& d) {
  std::vector<int> best;
  for (int s = 0; s < d.arc_count(); ++s) {
    auto c = connected_code_from(d, s, best.empty() ? nullptr : &best);
    if (!c.empty() && (best.empty() || c < best)) best = std::move(c);
  }
  return best;
}

inline void put16(std::string& out, int x) {
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

}  // namespace detail

/// Byte string equal for diagrams that agree up to relabeling of arcs and
/// crossings: pieces are encoded by their lexicographically smallest
/// traversal over all starting arcs, then sorted.
inline std::string canonical_code(const LinkDiagram& d) {
  auto split = split_pieces(d);
  std::vector<std::vector<int>> codes;
  codes.reserve(split.pieces.size());
  for (const auto& p : split.pieces) codes.push_back(detail::connected_code(p));
  std::sort(codes.begin(), codes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::string out;
  detail::put16(out, split.free_loops);
  detail::put16(out, static_cast<int>(codes.size()));
  for (const auto& c : codes) {
    detail::put16(out, static_cast<int>(c.size() / 5));
    for (int x : c) detail::put16(out, x);
  }
  return out;
}

inline std::string to_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

inline std::string from_hex(std::string_view hex) {
  if (hex.size() % 2) throw std::invalid_argument("odd-length hex string");
  auto val = [](char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) out.push_back(static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1])));
  return out;
}

// ---------------------------------------------------------------------------
// PD text:  PD[X(a,b,c,d;s), ..., L(k)]

inline std::string to_pd(const LinkDiagram& d) {
  std::string s = "PD[";
  bool first = true;
  for (const auto& c : d.crossings()) {
    if (!first) s += ", ";
    first = false;
    s += "X(" + std::to_string(c.arc[0]) + "," + std::to_string(c.arc[1]) + "," + std::to_string(c.arc[2]) + "," +
         std::to_string(c.arc[3]) + ";" + (c.sign > 0 ? "+1" : "-1") + ")";
  }
  if (d.free_loops() > 0) {
    if (!first) s += ", ";
    s += "L(" + std::to_string(d.free_loops()) + ")";
  }
  return s + "]";
}

inline LinkDiagram parse_pd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&](const std::string& why) { return std::invalid_argument("malformed PD code: " + why); };
  if (s.rfind("PD[", 0) != 0 || s.empty() || s.back() != ']') throw fail("expected PD[...]");
  std::string body = s.substr(3, s.size() - 4);
  auto parse_int = [&](const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw fail("bad integer '" + tok + "'");
    }
    if (used != tok.size()) throw fail("bad integer '" + tok + "'");
    return v;
  };
  std::vector<Crossing> xs;
  int loops = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    char kind = body[pos];
    if ((kind != 'X' && kind != 'L') || pos + 1 >= body.size() || body[pos + 1] != '(') throw fail("expected X( or L(");
    auto close = body.find(')', pos);
    if (close == std::string::npos) throw fail("unterminated token");
    std::string inner = body.substr(pos + 2, close - pos - 2);
    if (kind == 'L') {
      int k = parse_int(inner);
      if (k < 0) throw fail("negative loop count");
      loops += k;
    } else {
      auto semi = inner.find(';');
      if (semi == std::string::npos) throw fail("crossing needs ;sign");
      std::vector<int> arcs;
      std::stringstream ss(inner.substr(0, semi));
      std::string tok;
      while (std::getline(ss, tok, ',')) arcs.push_back(parse_int(tok));
      if (arcs.size() != 4) throw fail("crossing needs four arcs");
      int sign = parse_int(inner.substr(semi + 1));
      if (sign != 1 && sign != -1) throw fail("sign must be +1 or -1");
      xs.push_back(Crossing{sign, {arcs[0], arcs[1], arcs[2], arcs[3]}});
    }
    pos = close + 1;
    if (pos < body.size()) {
      if (body[pos] != ',') throw fail("expected ','");
      ++pos;
    }
  }
  return LinkDiagram(std::move(xs), loops);
}

inline std::ostream& operator<<(std::ostream& os, const LinkDiagram& d) { return os << to_pd(d); }

}  // namespace homfly
