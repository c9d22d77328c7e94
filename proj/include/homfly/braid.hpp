#pragma once

// Braid words, the toric and quasitoric families, and closure metadata.

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homfly {

/// A word in the Artin generators of B_n.  Letter k encodes sigma_{|k|} with
/// exponent sign(k).
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int k : letters_)
      if (k == 0 || std::abs(k) > strands_ - 1)
        throw std::invalid_argument("braid letter " + std::to_string(k) + " out of range for " +
                                    std::to_string(strands_) + " strands");
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// Underlying permutation in one-line form: perm[p] is the bottom position
  /// of the strand that ends at top position p.  Cycle structure is what
  /// matters for closures.
  std::vector<int> permutation() const {
    std::vector<int> at(strands_);
    std::iota(at.begin(), at.end(), 0);
    for (int k : letters_) {
      int i = std::abs(k) - 1;
      std::swap(at[i], at[i + 1]);
    }
    return at;
  }

  /// `n: k1 k2 ... km`
  std::string to_string() const {
    std::string s = std::to_string(strands_) + ":";
    for (int k : letters_) s += " " + std::to_string(k);
    return s;
  }

  static BraidWord parse(std::string_view text) {
    std::string s(text);
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("braid text must look like 'n: k1 k2 ...'");
    int n = 0;
    std::vector<int> letters;
    try {
      std::size_t used = 0;
      std::string head = s.substr(0, colon);
      n = std::stoi(head, &used);
      if (head.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("strands");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed strand count in braid '" + s + "'");
    }
    std::istringstream in(s.substr(colon + 1));
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("malformed braid letter '" + tok + "'");
      letters.push_back(k);
    }
    return BraidWord(n, std::move(letters));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// T(p, q) = (sigma_1 ... sigma_{p-1})^q.
inline BraidWord toric(int p, int q) {
  if (p < 2 || q < 1) throw std::invalid_argument("toric braid needs p >= 2 and q >= 1");
  std::vector<int> letters;
  for (int j = 0; j < q; ++j)
    for (int i = 1; i < p; ++i) letters.push_back(i);
  return BraidWord(p, std::move(letters));
}

/// Sign of the row-i entry (1-based) of the quasitoric sign matrix.  Rows
/// alternate in sign and each row is constant across the three blocks.
inline int quasitoric_row_sign(int row, int top_sign) { return (row % 2 == 1) ? top_sign : -top_sign; }

/// The quasitoric braid of type (r+1, 3): three identical blocks
/// sigma_r^e1 sigma_{r-1}^e2 ... sigma_1^er, with e1 = top_sign and the
/// signs alternating down the block.
inline BraidWord quasitoric_beta(int r, int top_sign) {
  if (r < 1) throw std::invalid_argument("quasitoric braid needs r >= 1");
  if (top_sign != 1 && top_sign != -1) throw std::invalid_argument("top_sign must be +1 or -1");
  std::vector<int> letters;
  for (int block = 0; block < 3; ++block)
    for (int row = 1; row <= r; ++row) letters.push_back(quasitoric_row_sign(row, top_sign) * (r + 1 - row));
  return BraidWord(r + 1, std::move(letters));
}

inline int exponent_sum(const BraidWord& b) {
  int w = 0;
  for (int k : b.letters()) w += k > 0 ? 1 : -1;
  return w;
}

inline int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

inline int closure_component_count(const BraidWord& b) { return cycle_count(b.permutation()); }

inline BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  for (int& k : letters) k = -k;
  return BraidWord(b.strands(), std::move(letters));
}

/// True iff b is the three-block quasitoric shape on r+1 strands and its sign
/// matrix is constant along rows and alternates down columns.
inline bool validate_quasitoric(const BraidWord& b, int r) {
  if (r < 1 || b.strands() != r + 1 || b.length() != static_cast<std::size_t>(3 * r)) return false;
  const auto& w = b.letters();
  auto eps = [&](int row, int block) { return w[static_cast<std::size_t>(block * r + row - 1)]; };
  for (int block = 0; block < 3; ++block)
    for (int row = 1; row <= r; ++row)
      if (std::abs(eps(row, block)) != r + 1 - row) return false;
  for (int row = 1; row <= r; ++row)
    for (int block = 0; block < 3; ++block) {
      int e = eps(row, block) > 0 ? 1 : -1;
      if (block + 1 < 3 && e * (eps(row, block + 1) > 0 ? 1 : -1) <= 0) return false;
      if (row + 1 <= r && e * (eps(row + 1, block) > 0 ? 1 : -1) >= 0) return false;
    }
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& b) { return os << b.to_string(); }

}  // namespace homfly
