#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "homfly/braid.hpp"

using namespace homfly;

namespace {

// cycle count of a permutation given as images, computed independently
int cycles_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return c;
}

// strand positions tracked letter by letter
std::vector<int> track(const BraidWord& b) {
  std::vector<int> pos(static_cast<std::size_t>(b.strands()));
  std::iota(pos.begin(), pos.end(), 0);
  for (int k : b.letters()) {
    auto i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(pos[i], pos[i + 1]);
  }
  return pos;
}

}  // namespace

TEST(Braid, WordValidation) {
  EXPECT_THROW(BraidWord(2, {2}), std::invalid_argument);
  EXPECT_THROW(BraidWord(3, {0}), std::invalid_argument);
  EXPECT_THROW(BraidWord(0, {}), std::invalid_argument);
  EXPECT_NO_THROW(BraidWord(1, {}));
}

TEST(Braid, TextForm) {
  auto b = BraidWord::parse("3: 2 -1 2 -1 2 -1");
  EXPECT_EQ(b.strands(), 3);
  EXPECT_EQ(b.letters(), (std::vector<int>{2, -1, 2, -1, 2, -1}));
  EXPECT_EQ(b.to_string(), "3: 2 -1 2 -1 2 -1");
  EXPECT_EQ(BraidWord::parse(b.to_string()), b);
  EXPECT_EQ(BraidWord::parse("1:").length(), 0u);
  EXPECT_THROW(BraidWord::parse("3 2 1"), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("x: 1"), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("3: 1 a"), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("3: 3"), std::invalid_argument);
}

TEST(Braid, Toric) {
  EXPECT_EQ(toric(2, 3), BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(toric(3, 3), BraidWord(3, {1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(toric(4, 5).length(), 15u);
  EXPECT_EQ(closure_component_count(toric(2, 3)), 1);
  EXPECT_EQ(closure_component_count(toric(2, 4)), 2);
  EXPECT_EQ(closure_component_count(toric(3, 3)), 3);
  EXPECT_THROW(toric(1, 3), std::invalid_argument);
  EXPECT_THROW(toric(2, 0), std::invalid_argument);
}

TEST(Braid, Quasitoric) {
  EXPECT_EQ(quasitoric_beta(1, 1), BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(quasitoric_beta(2, 1), BraidWord(3, {2, -1, 2, -1, 2, -1}));
  EXPECT_EQ(quasitoric_beta(3, 1), BraidWord(4, {3, -2, 1, 3, -2, 1, 3, -2, 1}));
  EXPECT_THROW(quasitoric_beta(0, 1), std::invalid_argument);
  EXPECT_THROW(quasitoric_beta(2, 0), std::invalid_argument);
}

TEST(Braid, ExponentSum) {
  EXPECT_EQ(exponent_sum(quasitoric_beta(2, 1)), 0);
  EXPECT_EQ(exponent_sum(quasitoric_beta(1, 1)), 3);
  for (int r = 1; r <= 12; ++r) EXPECT_EQ(exponent_sum(quasitoric_beta(r, 1)), r % 2 ? 3 : 0) << r;
}

TEST(Braid, ComponentCounts) {
  EXPECT_EQ(closure_component_count(quasitoric_beta(2, 1)), 3);
  EXPECT_EQ(closure_component_count(quasitoric_beta(1, 1)), 1);
  EXPECT_EQ(closure_component_count(quasitoric_beta(3, 1)), 1);
  for (int r = 1; r <= 30; ++r)
    for (int s : {1, -1}) {
      auto b = quasitoric_beta(r, s);
      EXPECT_EQ(closure_component_count(b), r % 3 == 2 ? 3 : 1) << r;
      EXPECT_EQ(b.length(), static_cast<std::size_t>(3 * r));
    }
}

TEST(Braid, PermutationIsCubeOfCycle) {
  for (int r = 1; r <= 12; ++r) {
    const auto b = quasitoric_beta(r, 1);
    auto perm = b.permutation();
    // one block sigma_r ... sigma_1 is an (r+1)-cycle
    auto block = BraidWord(r + 1, std::vector<int>(b.letters().begin(), b.letters().begin() + r)).permutation();
    EXPECT_EQ(cycles_of(block), 1);
    std::vector<int> cube(block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
      cube[i] = block[static_cast<std::size_t>(block[static_cast<std::size_t>(block[i])])];
    EXPECT_EQ(cycles_of(cube), cycles_of(perm));
  }
}

TEST(Braid, PermutationMatchesTracking) {
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int> w;
    for (int j = 0; j < 8; ++j) {
      int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      w.push_back(rng() % 2 ? g : -g);
    }
    BraidWord b(n, w);
    EXPECT_EQ(closure_component_count(b), cycles_of(track(b)));
  }
}

TEST(Braid, Mirror) {
  EXPECT_EQ(mirror(BraidWord(2, {1, 1, 1})), BraidWord(2, {-1, -1, -1}));
  for (int r = 1; r <= 6; ++r) {
    auto b = quasitoric_beta(r, 1);
    EXPECT_EQ(mirror(mirror(b)), b);
    EXPECT_EQ(mirror(b), quasitoric_beta(r, -1));
    EXPECT_EQ(exponent_sum(mirror(b)), -exponent_sum(b));
  }
}

TEST(Braid, ValidateQuasitoric) {
  EXPECT_TRUE(validate_quasitoric(BraidWord(3, {2, -1, 2, -1, 2, -1}), 2));
  EXPECT_FALSE(validate_quasitoric(BraidWord(3, {2, 1, 2, 1, 2, 1}), 2));
  EXPECT_TRUE(validate_quasitoric(BraidWord(2, {1, 1, 1}), 1));
  EXPECT_FALSE(validate_quasitoric(BraidWord(3, {2, -1, -2, -1, 2, -1}), 2));
  EXPECT_FALSE(validate_quasitoric(BraidWord(3, {1, -2, 1, -2, 1, -2}), 2));
  EXPECT_FALSE(validate_quasitoric(BraidWord(2, {1, 1, 1}), 2));
  for (int r = 1; r <= 8; ++r)
    for (int s : {1, -1}) EXPECT_TRUE(validate_quasitoric(quasitoric_beta(r, s), r));
}
