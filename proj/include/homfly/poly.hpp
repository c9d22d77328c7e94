#pragma once

// Sparse bivariate Laurent polynomials in v and z with arbitrary-precision
// integer coefficients.  This is the value type returned by every engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace homfly {

using Integer = boost::multiprecision::cpp_int;

struct Term {
  int ev = 0;  // exponent of v
  int ez = 0;  // exponent of z
  Integer c;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in Z[v^{+-1}, z^{+-1}].  Terms are kept sorted by (ez, ev)
/// ascending with no zero coefficient, so structural equality is equality.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;

  static LaurentPoly2 zero() { return {}; }
  static LaurentPoly2 one() { return monomial(1, 0, 0); }
  static LaurentPoly2 monomial(Integer c, int ev, int ez) {
    LaurentPoly2 p;
    if (c != 0) p.terms_.push_back(Term{ev, ez, std::move(c)});
    return p;
  }
  /// (v^{-1} - v) z^{-1}, the value of the two-component unlink.
  static LaurentPoly2 delta() {
    LaurentPoly2 p;
    p.terms_.push_back(Term{-1, -1, 1});
    p.terms_.push_back(Term{1, -1, -1});
    return p;
  }

  /// Build from arbitrary terms; sorts, merges equal exponents, drops zeros.
  static LaurentPoly2 from_terms(std::vector<Term> terms) {
    LaurentPoly2 p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(int ev, int ez) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{ez, ev},
                               [](const Term& t, const std::pair<int, int>& k) {
                                 return std::pair{t.ez, t.ev} < k;
                               });
    if (it != terms_.end() && it->ez == ez && it->ev == ev) return it->c;
    return 0;
  }

  int max_z_degree() const {
    if (is_zero()) throw std::domain_error("max_z_degree of the zero polynomial");
    return terms_.back().ez;
  }
  int min_z_degree() const {
    if (is_zero()) throw std::domain_error("min_z_degree of the zero polynomial");
    return terms_.front().ez;
  }

  /// The coefficient of z^ez as a map v-exponent -> coefficient.
  std::map<int, Integer> z_row(int ez) const {
    std::map<int, Integer> row;
    for (const auto& t : terms_)
      if (t.ez == ez) row.emplace(t.ev, t.c);
    return row;
  }

  /// p(v^{-1}, z).
  LaurentPoly2 substitute_v_inverse() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.ev = -t.ev;
    LaurentPoly2 p;
    p.terms_ = std::move(out);
    p.sort_only();
    return p;
  }

  /// Multiply by c * v^ev * z^ez.
  LaurentPoly2 shifted(int ev, int ez, const Integer& c = 1) const {
    if (c == 0) return {};
    LaurentPoly2 p = *this;
    for (auto& t : p.terms_) {
      t.ev += ev;
      t.ez += ez;
      if (c != 1) t.c *= c;
    }
    return p;
  }

  LaurentPoly2 operator-() const {
    LaurentPoly2 p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) { return *this = *this + o; }
  LaurentPoly2& operator-=(const LaurentPoly2& o) { return *this = *this - o; }
  LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

  friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
    return merge(a, b, false);
  }
  friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
    return merge(a, b, true);
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back(Term{x.ev + y.ev, x.ez + y.ez, x.c * y.c});
    return from_terms(std::move(out));
  }
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  LaurentPoly2 pow(unsigned k) const {
    LaurentPoly2 result = one();
    LaurentPoly2 base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  /// Canonical text: `c*v^a*z^b` terms joined by " + ", sorted by (b, a).
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      const auto& t = terms_[i];
      s += t.c.str();
      s += "*v^" + std::to_string(t.ev) + "*z^" + std::to_string(t.ez);
    }
    return s;
  }

  /// Inverse of to_string.  Accepts exactly the canonical grammar (terms in
  /// any order; the result is normalized).
  static LaurentPoly2 parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string x) {
      auto b = x.find_first_not_of(" \t\r\n");
      auto e = x.find_last_not_of(" \t\r\n");
      return b == std::string::npos ? std::string{} : x.substr(b, e - b + 1);
    };
    s = trim(s);
    if (s == "0") return {};
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find(" + ", pos);
      std::string tok = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
      auto p1 = tok.find("*v^");
      auto p2 = tok.find("*z^");
      if (p1 == std::string::npos || p2 == std::string::npos || p2 < p1)
        throw std::invalid_argument("malformed term '" + tok + "'");
      Term t;
      try {
        t.c = Integer(tok.substr(0, p1));
        std::size_t used = 0;
        std::string evs = tok.substr(p1 + 3, p2 - p1 - 3);
        t.ev = std::stoi(evs, &used);
        if (used != evs.size()) throw std::invalid_argument("v exponent");
        std::string ezs = tok.substr(p2 + 3);
        t.ez = std::stoi(ezs, &used);
        if (used != ezs.size()) throw std::invalid_argument("z exponent");
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed term '" + tok + "'");
      }
      terms.push_back(std::move(t));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return from_terms(std::move(terms));
  }

  /// Human-oriented rendering grouped by powers of z, e.g.
  /// `z^-1*(v^-1 - v) + z*(v)`.
  std::string pretty() const {
    if (is_zero()) return "0";
    std::string out;
    std::size_t i = 0;
    bool first_row = true;
    while (i < terms_.size()) {
      int ez = terms_[i].ez;
      std::string row;
      bool first = true;
      for (; i < terms_.size() && terms_[i].ez == ez; ++i) {
        const auto& t = terms_[i];
        Integer mag = t.c < 0 ? Integer(-t.c) : t.c;
        row += first ? (t.c < 0 ? "-" : "") : (t.c < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1;
        if (!unit || t.ev == 0) row += mag.str();
        if (t.ev != 0) {
          if (!unit) row += "*";
          row += t.ev == 1 ? std::string("v") : "v^" + std::to_string(t.ev);
        }
      }
      if (!first_row) out += " + ";
      first_row = false;
      std::string zs = ez == 0 ? "" : (ez == 1 ? "z" : "z^" + std::to_string(ez));
      out += zs.empty() ? "(" + row + ")" : zs + "*(" + row + ")";
    }
    return out;
  }

  /// JSON form: array of {"v": int, "z": int, "c": "decimal"} in canonical order.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms_) arr.push_back({{"v", t.ev}, {"z", t.ez}, {"c", t.c.str()}});
    return arr;
  }
  static LaurentPoly2 from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Term> terms;
    for (const auto& e : j) terms.push_back(Term{e.at("v").get<int>(), e.at("z").get<int>(),
                                                 Integer(e.at("c").get<std::string>())});
    return from_terms(std::move(terms));
  }

 private:
  void sort_only() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return std::tie(a.ez, a.ev) < std::tie(b.ez, b.ev);
    });
  }
  void normalize() {
    sort_only();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().ez == t.ez && out.back().ev == t.ev) {
        out.back().c += t.c;
        if (out.back().c == 0) out.pop_back();
      } else if (t.c != 0) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }
  static LaurentPoly2 merge(const LaurentPoly2& a, const LaurentPoly2& b, bool subtract) {
    LaurentPoly2 r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto key = [](const Term& t) { return std::pair{t.ez, t.ev}; };
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && key(*i) < key(*j))) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || key(*j) < key(*i)) {
        r.terms_.push_back(*j++);
        if (subtract) r.terms_.back().c = -r.terms_.back().c;
      } else {
        Integer c = subtract ? Integer(i->c - j->c) : Integer(i->c + j->c);
        if (c != 0) r.terms_.push_back(Term{i->ev, i->ez, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline int max_z_degree(const LaurentPoly2& p) { return p.max_z_degree(); }
inline int min_z_degree(const LaurentPoly2& p) { return p.min_z_degree(); }
inline LaurentPoly2 substitute_v_inverse(const LaurentPoly2& p) { return p.substitute_v_inverse(); }

/// Polynomial of the mirror image, p(v^{-1}, -z).  Agrees with
/// substitute_v_inverse exactly when the link has an odd number of components.
inline LaurentPoly2 mirror_homfly(const LaurentPoly2& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) {
    t.ev = -t.ev;
    if (t.ez % 2 != 0) t.c = -t.c;
  }
  return LaurentPoly2::from_terms(std::move(out));
}

/// delta^k: the HOMFLYPT polynomial of the (k+1)-component unlink.
inline LaurentPoly2 delta_power(int k) {
  if (k < 0) throw std::invalid_argument("delta_power: negative exponent");
  return LaurentPoly2::delta().pow(static_cast<unsigned>(k));
}

/// Standard HOMFLYPT parity for a mu-component link: every exponent of v and
/// of z is congruent to mu - 1 modulo 2.
inline bool satisfies_homfly_parity(const LaurentPoly2& p, int components) {
  int target = ((components - 1) % 2 + 2) % 2;
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) {
    return ((t.ev % 2 + 2) % 2) == target && ((t.ez % 2 + 2) % 2) == target;
  });
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) { return os << p.to_string(); }

}  // namespace homfly
