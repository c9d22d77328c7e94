#pragma once

// Doubled links W_2(D, m), Whitehead doubles W_+-(D, m), and the twist
// replacements that generate the sample families.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "diagram.hpp"

namespace homfly {

enum class Clasp { None, Positive, Negative };

/// Recipe for a satellite diagram built on a base diagram.
struct SatelliteSpec {
  LinkDiagram base;
  std::optional<int> framing;  // absent: blackboard double
  Clasp clasp = Clasp::None;
};

/// Replace one crossing by `half_twists` stacked crossings of its sign.
struct TwistSite {
  int crossing = 0;
  int half_twists = 1;
};

/// Linking number of the two components of W_2(D, m) is kPushoffLinkSign * m:
/// the push-off is reversed, so the parallel framing shows up negated.
inline constexpr int kPushoffLinkSign = -1;

namespace detail {

inline int max_label(const std::vector<Crossing>& xs) {
  int m = -1;
  for (const auto& c : xs)
    for (int a : c.arc) m = std::max(m, a);
  return m;
}

struct BandElement {
  bool clasp = false;
  int sign = 1;
  int count = 1;  // full twists; ignored for a clasp
};

/// Splices elements into the band formed by arc `fwd` and its reversed
/// push-off `bwd`, which runs along its left side.  Elements are listed in
/// the direction of `fwd`.  When `loop` is set the band is a pair of free
/// loops that the first and last boundaries close up.
inline void splice_band(std::vector<Crossing>& xs, int fwd, int bwd, bool loop, const std::vector<BandElement>& elems) {
  int next = max_label(xs) + 1;
  next = std::max({next, fwd + 1, bwd + 1});
  int end_fwd = fwd, end_bwd = bwd;
  if (!loop) {
    end_fwd = next++;
    end_bwd = next++;
    for (auto& c : xs) {
      if (c.arc[OverIn] == fwd) c.arc[OverIn] = end_fwd;
      else if (c.arc[UnderIn] == fwd) c.arc[UnderIn] = end_fwd;
      if (c.arc[OverIn] == bwd) c.arc[OverIn] = end_bwd;
      else if (c.arc[UnderIn] == bwd) c.arc[UnderIn] = end_bwd;
    }
  }
  // boundary k sits to the left of element k
  std::vector<BandElement> steps;
  for (const auto& e : elems) {
    if (e.clasp) {
      steps.push_back(e);
    } else {
      for (int i = 0; i < e.count; ++i) steps.push_back(BandElement{false, e.sign, 1});
    }
  }
  const std::size_t k = steps.size();
  std::vector<int> f(k + 1), b(k + 1);
  f[0] = fwd;
  b[0] = end_bwd;
  f[k] = end_fwd;
  b[k] = bwd;
  for (std::size_t i = 1; i < k; ++i) {
    f[i] = next++;
    b[i] = next++;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const int fL = f[i], bL = b[i], fR = f[i + 1], bR = b[i + 1];
    const int m1 = next++, m2 = next++;
    if (!steps[i].clasp) {
      // one full twist: two crossings of the given sign
      if (steps[i].sign > 0) {
        xs.push_back(Crossing{1, {fL, m1, m2, bL}});
        xs.push_back(Crossing{1, {bR, m2, m1, fR}});
      } else {
        xs.push_back(Crossing{-1, {m2, bL, fL, m1}});
        xs.push_back(Crossing{-1, {m1, fR, bR, m2}});
      }
    } else {
      // hook from the left (fL -> bL through m1) clasped with the hook from
      // the right (bR -> fR through m2)
      if (steps[i].sign > 0) {
        xs.push_back(Crossing{1, {m2, fR, fL, m1}});
        xs.push_back(Crossing{1, {m1, bL, bR, m2}});
      } else {
        xs.push_back(Crossing{-1, {fL, m1, m2, fR}});
        xs.push_back(Crossing{-1, {bR, m2, m1, bL}});
      }
    }
  }
}

/// Blackboard double with arc a mapped to 2a (same direction) and 2a+1
/// (reversed push-off); tangle-internal arcs get fresh labels above those.
inline std::vector<Crossing> double_crossings(const LinkDiagram& d) {
  const int A = d.arc_count();
  int next = 2 * A;
  auto c1 = [](int a) { return 2 * a; };
  auto c2 = [](int a) { return 2 * a + 1; };
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size() * 4);
  for (const auto& x : d.crossings()) {
    const int oi = x.arc[OverIn], oo = x.arc[OverOut], ui = x.arc[UnderIn], uo = x.arc[UnderOut];
    const int o1 = next++, o2 = next++, u1 = next++, u2 = next++;
    if (x.sign > 0) {
      xs.push_back(Crossing{-1, {c1(oi), o1, u2, c2(ui)}});
      xs.push_back(Crossing{1, {o1, c1(oo), c1(ui), u1}});
      xs.push_back(Crossing{-1, {c2(oo), o2, u1, c1(uo)}});
      xs.push_back(Crossing{1, {o2, c2(oi), c2(uo), u2}});
    } else {
      xs.push_back(Crossing{-1, {c1(oi), o1, u1, c1(uo)}});
      xs.push_back(Crossing{1, {o1, c1(oo), c2(uo), u2}});
      xs.push_back(Crossing{-1, {c2(oo), o2, u2, c2(ui)}});
      xs.push_back(Crossing{1, {o2, c2(oi), c1(ui), u1}});
    }
  }
  return xs;
}

inline void require_knot(const LinkDiagram& d, const char* what) {
  if (component_count(d) != 1) throw std::invalid_argument(std::string(what) + " needs a knot diagram");
}

inline LinkDiagram banded_double(const LinkDiagram& d, int m, std::optional<int> clasp_sign) {
  const int n = m - d.writhe();
  std::vector<BandElement> twists, clasp;
  if (n != 0) twists.push_back(BandElement{false, n > 0 ? -1 : 1, std::abs(n)});
  if (clasp_sign) clasp.push_back(BandElement{true, *clasp_sign, 1});
  if (d.crossing_count() == 0) {
    // the base is a single free loop
    auto elems = twists;
    elems.insert(elems.end(), clasp.begin(), clasp.end());
    if (elems.empty()) return LinkDiagram({}, 2);
    std::vector<Crossing> xs;
    splice_band(xs, 0, 1, true, elems);
    return LinkDiagram(std::move(xs), 0);
  }
  auto xs = double_crossings(d);
  // twists go on the over band inside the first tangle, between the two
  // under strands, where both copies share one Seifert circle
  const int inner = 2 * d.arc_count();
  if (!twists.empty()) splice_band(xs, inner, inner + 1, false, twists);
  if (!clasp.empty()) splice_band(xs, 0, 1, false, clasp);
  return LinkDiagram(std::move(xs), 2 * d.free_loops());
}

}  // namespace detail

/// Antiparallel 2-parallel: each arc gains a reversed copy pushed off to its
/// left; each crossing becomes four (copy-copy crossings keep the sign, mixed
/// ones flip it).
inline LinkDiagram blackboard_double(const LinkDiagram& d) {
  return LinkDiagram(detail::double_crossings(d), 2 * d.free_loops());
}

/// W_2(D, m): the blackboard double with |m - w(D)| full twists spliced into
/// the band where the first crossing's over strand passes between the
/// doubled under strands.  An increase of the framing by one adds a full twist
/// whose two crossings are negative on the antiparallel strands.
inline LinkDiagram canonical_double(const LinkDiagram& d, int m) {
  detail::require_knot(d, "canonical_double");
  return detail::banded_double(d, m, std::nullopt);
}

/// W_+-(D, m): W_2(D, m) with the band over arc 0 cut and closed by a clasp
/// whose two crossings both have sign `clasp_sign`.
inline LinkDiagram canonical_whitehead(const LinkDiagram& d, int m, int clasp_sign) {
  detail::require_knot(d, "canonical_whitehead");
  if (clasp_sign != 1 && clasp_sign != -1) throw std::invalid_argument("clasp sign must be +1 or -1");
  return detail::banded_double(d, m, clasp_sign);
}

inline LinkDiagram build_satellite(const SatelliteSpec& spec) {
  if (spec.clasp != Clasp::None) {
    int m = spec.framing.value_or(spec.base.writhe());
    return canonical_whitehead(spec.base, m, spec.clasp == Clasp::Positive ? 1 : -1);
  }
  if (spec.framing) return canonical_double(spec.base, *spec.framing);
  return blackboard_double(spec.base);
}

/// Replaces crossing `site.crossing` by `site.half_twists` crossings of the
/// same sign stacked along the direction both strands travel (as sigma^k in a
/// braid).  Odd counts keep the strand connectivity, even counts swap it.
inline LinkDiagram replace_crossing_with_half_twists(const LinkDiagram& d, const TwistSite& site) {
  check_crossing_id(d, site.crossing);
  const int k = site.half_twists;
  if (k < 1) throw std::invalid_argument("half-twist count must be at least 1");
  auto xs = d.crossings();
  const Crossing x = xs[static_cast<std::size_t>(site.crossing)];
  xs.erase(xs.begin() + site.crossing);
  int next = detail::max_label(d.crossings()) + 1;
  // bottom-left, bottom-right, top-left, top-right
  int bl, br, tl, tr;
  if (x.sign > 0) {
    bl = x.arc[OverIn], br = x.arc[UnderIn], tl = x.arc[UnderOut], tr = x.arc[OverOut];
  } else {
    bl = x.arc[UnderIn], br = x.arc[OverIn], tl = x.arc[OverOut], tr = x.arc[UnderOut];
  }
  int left = bl, right = br;
  for (int j = 0; j < k; ++j) {
    const bool last = j + 1 == k;
    int nl = last ? tl : next++;
    int nr = last ? tr : next++;
    if (x.sign > 0)
      xs.insert(xs.begin() + site.crossing + j, Crossing{1, {left, nr, right, nl}});
    else
      xs.insert(xs.begin() + site.crossing + j, Crossing{-1, {right, nl, left, nr}});
    left = nl;
    right = nr;
  }
  return LinkDiagram(std::move(xs), d.free_loops());
}

/// Braid word of the matrix-built diagram D_A: row i of A holds the exponents
/// of sigma_{r+1-i} in the three blocks, each entry n expanded to |n| letters.
inline BraidWord k_a_braid(const std::vector<std::vector<int>>& a) {
  const int r = static_cast<int>(a.size());
  if (r < 1) throw std::invalid_argument("matrix needs at least one row");
  for (const auto& row : a) {
    if (row.size() != 3) throw std::invalid_argument("matrix rows must have exactly three entries");
    for (int x : row)
      if (x == 0) throw std::invalid_argument("matrix entries must be non-zero");
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < 3; ++j) {
      const long long e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (j + 1 < 3 && e * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)] <= 0)
        throw std::invalid_argument("entries along a row must share a sign");
      if (i + 1 < r && e * a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] >= 0)
        throw std::invalid_argument("entries down a column must alternate in sign");
    }
  std::vector<int> letters;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < r; ++i) {
      int e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int t = 0; t < std::abs(e); ++t) letters.push_back((e > 0 ? 1 : -1) * (r - i));
    }
  return BraidWord(r + 1, std::move(letters));
}

inline LinkDiagram build_K_A(const std::vector<std::vector<int>>& a) { return from_braid_closure(k_a_braid(a)); }

}  // namespace homfly
