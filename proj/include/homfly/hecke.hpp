#pragma once

// HOMFLYPT of closed braids through the Hecke algebra quotient and its
// Markov trace.  Generators are normalized so that the quadratic relation
//   g^2 = v z g + v^2
// is the skein relation read on a single braid crossing, which makes the
// trace need no writhe correction: tr(x g_n) = tr(x g_n^{-1}) = tr(x) and
// tr(x) = delta * tr(x) when a free strand is added.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braid.hpp"
#include "poly.hpp"

namespace homfly {

/// Permutation of up to 16 symbols in one-line form, four bits per entry.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n) {
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.set(i, i);
    return p;
  }
  int size() const { return n_; }
  int operator[](int i) const { return static_cast<int>((bits_ >> (4 * i)) & 0xfu); }
  void set(int i, int value) {
    bits_ &= ~(std::uint64_t{0xf} << (4 * i));
    bits_ |= std::uint64_t(value) << (4 * i);
  }
  /// Right multiplication by s_i swaps positions i and i+1.
  Perm times_s(int i) const {
    Perm q = *this;
    int a = (*this)[i], b = (*this)[i + 1];
    q.set(i, b);
    q.set(i + 1, a);
    return q;
  }
  bool ascent(int i) const { return (*this)[i] < (*this)[i + 1]; }
  int position_of(int value) const {
    for (int i = 0; i < n_; ++i)
      if ((*this)[i] == value) return i;
    return -1;
  }
  /// Drop the entry at position k (its value must be the largest symbol).
  Perm without_position(int k) const {
    Perm q;
    q.n_ = static_cast<std::uint8_t>(n_ - 1);
    for (int i = 0, j = 0; i < n_; ++i)
      if (i != k) q.set(j++, (*this)[i]);
    return q;
  }
  std::uint64_t key() const { return bits_ | (std::uint64_t(n_) << 60); }

  friend bool operator<(const Perm& a, const Perm& b) { return a.key() < b.key(); }
  friend bool operator==(const Perm& a, const Perm& b) { return a.key() == b.key(); }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t n_ = 0;
};

/// Element of the Hecke algebra H_n in the positive-permutation-braid basis.
class HeckeElement {
 public:
  explicit HeckeElement(int strands) : n_(strands) { coeffs_[Perm::identity(strands)] = LaurentPoly2::one(); }
  HeckeElement(int strands, std::map<Perm, LaurentPoly2> coeffs) : n_(strands), coeffs_(std::move(coeffs)) {}

  int strands() const { return n_; }
  const std::map<Perm, LaurentPoly2>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Right multiplication by g_i (exponent +1) or g_i^{-1} (exponent -1),
  /// 0-based generator index.
  HeckeElement times_generator(int i, int exponent) const {
    std::map<Perm, LaurentPoly2> out;
    auto add = [&](const Perm& p, const LaurentPoly2& c) {
      if (c.is_zero()) return;
      auto [it, fresh] = out.emplace(p, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    };
    for (const auto& [perm, c] : coeffs_) {
      Perm next = perm.times_s(i);
      if (exponent > 0) {
        if (perm.ascent(i)) {
          add(next, c);
        } else {
          // T_w g = T_{ws} g^2 = v z T_w + v^2 T_{ws}
          add(perm, c.shifted(1, 1));
          add(next, c.shifted(2, 0));
        }
      } else {
        if (perm.ascent(i)) {
          // g^{-1} = v^{-2} g - v^{-1} z
          add(next, c.shifted(-2, 0));
          add(perm, -c.shifted(-1, 1));
        } else {
          add(next, c);
        }
      }
    }
    return HeckeElement(n_, std::move(out));
  }

 private:
  int n_;
  std::map<Perm, LaurentPoly2> coeffs_;
};

class resource_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HeckeOptions {
  int max_strands = 10;
  std::size_t max_basis_terms = 4'000'000;
};

class HeckeEngine {
 public:
  explicit HeckeEngine(HeckeOptions opts = {}) : opts_(opts) {}

  HeckeElement expand(const BraidWord& b) const {
    if (b.strands() > opts_.max_strands)
      throw resource_exceeded("Hecke basis for " + std::to_string(b.strands()) + " strands exceeds the " +
                              std::to_string(opts_.max_strands) + "-strand ceiling");
    HeckeElement e(b.strands());
    for (int k : b.letters()) {
      e = e.times_generator(std::abs(k) - 1, k > 0 ? 1 : -1);
      if (e.size() > opts_.max_basis_terms) throw resource_exceeded("Hecke element exceeds the basis-term budget");
    }
    return e;
  }

  /// Markov trace of a basis element T_w.
  LaurentPoly2 trace_basis(const Perm& w) {
    const int n = w.size();
    if (n <= 1) return LaurentPoly2::one();
    if (auto it = trace_memo_.find(w.key()); it != trace_memo_.end()) return it->second;
    LaurentPoly2 result;
    const int k = w.position_of(n - 1);
    Perm u = w.without_position(k);
    if (k == n - 1) {
      result = LaurentPoly2::delta() * trace_basis(u);
    } else {
      // T_w = T_u g_{n-2} g_{n-3} ... g_k with lengths adding; the trace
      // drops g_{n-2} and continues in H_{n-1}.
      HeckeElement x(n - 1, {{u, LaurentPoly2::one()}});
      for (int g = n - 3; g >= k; --g) x = x.times_generator(g, 1);
      result = trace(x);
    }
    trace_memo_.emplace(w.key(), result);
    return result;
  }

  LaurentPoly2 trace(const HeckeElement& e) {
    LaurentPoly2 sum;
    for (const auto& [perm, c] : e.coefficients()) sum += c * trace_basis(perm);
    return sum;
  }

  LaurentPoly2 homfly_closed_braid(const BraidWord& b) { return trace(expand(b)); }

 private:
  HeckeOptions opts_;
  std::unordered_map<std::uint64_t, LaurentPoly2> trace_memo_;
};

inline LaurentPoly2 homfly_closed_braid(const BraidWord& b) { return HeckeEngine().homfly_closed_braid(b); }

}  // namespace homfly
