#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "homfly/oracle.hpp"
#include "homfly/satellite.hpp"
#include "homfly/skein.hpp"

using namespace homfly;

namespace {

LinkDiagram closure(int n, std::vector<int> w) { return from_braid_closure(BraidWord(n, std::move(w))); }

LaurentPoly2 P(const LinkDiagram& d) { return homfly::homfly(d); }

// T(2,n) by the two-term recursion in n
LaurentPoly2 torus_2n_oracle(int n) {
  LaurentPoly2 prev = LaurentPoly2::delta(), cur = LaurentPoly2::one();
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    LaurentPoly2 next = prev.shifted(2, 0) + cur.shifted(1, 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

BraidWord random_word(std::mt19937& rng, int max_strands, int max_len) {
  int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_strands - 1));
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  std::vector<int> w;
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    w.push_back(rng() % 2 ? g : -g);
  }
  return BraidWord(n, w);
}

}  // namespace

TEST(Skein, UnknotAndUnlinks) {
  EXPECT_EQ(P(LinkDiagram({}, 1)), LaurentPoly2::one());
  EXPECT_EQ(P(closure(1, {})), LaurentPoly2::one());
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(P(closure(k, {})), delta_power(k - 1));
  EXPECT_EQ(P(closure(2, {1})), LaurentPoly2::one());
  EXPECT_EQ(P(closure(2, {-1})), LaurentPoly2::one());
  EXPECT_EQ(P(closure(3, {1, -1, 2, 2, -2})), LaurentPoly2::delta());
}

TEST(Skein, TorusLinksMatchRecursion) {
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(P(from_braid_closure(BraidWord(2, std::vector<int>(n, 1)))), torus_2n_oracle(n)) << n;
}

TEST(Skein, KnownPolynomials) {
  auto trefoil = LaurentPoly2::from_terms({{2, 0, 2}, {4, 0, -1}, {2, 2, 1}});
  EXPECT_EQ(P(closure(2, {1, 1, 1})), trefoil);
  EXPECT_EQ(P(closure(2, {-1, -1, -1})), mirror_homfly(trefoil));
  auto fig8 = LaurentPoly2::from_terms({{-2, 0, 1}, {0, 0, -1}, {2, 0, 1}, {0, 2, -1}});
  EXPECT_EQ(P(closure(3, {1, -2, 1, -2})), fig8);
  auto hopf = P(closure(2, {1, 1}));
  EXPECT_EQ(max_z_degree(hopf), 1);
  EXPECT_EQ(hopf, LaurentPoly2::from_terms({{1, -1, 1}, {3, -1, -1}, {1, 1, 1}}));
}

TEST(Skein, SkeinRelationAtEveryCrossing) {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    auto d = from_braid_closure(random_word(rng, 4, 8));
    for (int x = 0; x < d.crossing_count(); ++x) {
      auto plus = d.crossing(x).sign > 0 ? d : switch_crossing(d, x);
      auto minus = d.crossing(x).sign > 0 ? switch_crossing(d, x) : d;
      EXPECT_EQ(P(plus).shifted(-1, 0) - P(minus).shifted(1, 0), P(smooth_crossing(d, x)).shifted(0, 1));
    }
  }
}

TEST(Skein, SplitUnionMultipliesWithDelta) {
  auto t = P(closure(2, {1, 1, 1}));
  auto h = P(closure(2, {1, 1}));
  EXPECT_EQ(P(closure(5, {1, 1, 1, 3, 3})), delta_power(2) * t * h);
  EXPECT_EQ(P(closure(4, {1, 1, 1, 3, 3, 3})), LaurentPoly2::delta() * t * t);
}

TEST(Skein, ConnectedSumMultiplies) {
  auto t = P(closure(2, {1, 1, 1}));
  auto f = P(closure(3, {1, -2, 1, -2}));
  EXPECT_EQ(P(closure(3, {1, 1, 1, 2, 2, 2})), t * t);
  EXPECT_EQ(P(closure(4, {1, 1, 1, 2, -3, 2, -3})), t * f);
}

TEST(Skein, BraidMoveInvariance) {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto b = random_word(rng, 4, 7);
    auto base = P(from_braid_closure(b));
    auto w = b.letters();
    std::rotate(w.begin(), w.begin() + 1, w.end());
    EXPECT_EQ(P(from_braid_closure(BraidWord(b.strands(), w))), base);
    for (int s : {1, -1}) {
      auto st = b.letters();
      st.push_back(s * b.strands());
      EXPECT_EQ(P(from_braid_closure(BraidWord(b.strands() + 1, st))), base);
    }
    auto r2 = b.letters();
    r2.insert(r2.begin(), {1, -1});
    EXPECT_EQ(P(from_braid_closure(BraidWord(b.strands(), r2))), base);
  }
}

TEST(Skein, MirrorIdentity) {
  std::mt19937 rng(8);
  for (int i = 0; i < 30; ++i) {
    auto d = from_braid_closure(random_word(rng, 4, 9));
    EXPECT_EQ(P(mirror(d)), mirror_homfly(P(d)));
  }
}

TEST(Skein, ParityAndJonesOnRandomClosures) {
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    auto d = from_braid_closure(random_word(rng, 4, 9));
    auto p = P(d);
    EXPECT_TRUE(satisfies_homfly_parity(p, component_count(d)));
    EXPECT_LE(max_z_degree(p), stats(d).morton_bound);
    EXPECT_EQ(specialize_homfly_to_jones(p), jones_via_bracket(d));
  }
}

TEST(Skein, DoubledTrefoilDegree) {
  auto t = closure(2, {1, 1, 1});
  for (int m : {-2, 0, 3, 5}) {
    auto d = canonical_double(t, m);
    EXPECT_EQ(max_z_degree(P(d)), 5) << m;
    EXPECT_EQ(stats(d).morton_bound, 5);
  }
}

TEST(Skein, MemoRoundTrip) {
  auto d = canonical_whitehead(closure(2, {1, 1, 1}), 1, 1);
  auto memo = std::make_shared<SkeinMemo>();
  SkeinEngine cold(SkeinOptions{}, memo);
  auto p = cold.homfly(d);
  ASSERT_GT(memo->size(), 0u);
  std::stringstream file;
  memo->save(file);
  auto loaded = std::make_shared<SkeinMemo>();
  EXPECT_EQ(loaded->load(file), memo->size());
  SkeinEngine warm(SkeinOptions{}, loaded);
  EXPECT_EQ(warm.homfly(d), p);
  EXPECT_GE(cold.stats().nodes, 10 * warm.stats().nodes);
  EXPECT_GT(warm.stats().memo_hits, 0u);
  std::stringstream again;
  loaded->save(again);
  std::stringstream first;
  memo->save(first);
  EXPECT_EQ(again.str(), first.str());
}

TEST(Skein, MemoRejectsBadInput) {
  SkeinMemo memo;
  std::stringstream no_tab("abcd 1*v^0*z^0\n");
  EXPECT_THROW(memo.load(no_tab), std::invalid_argument);
  std::stringstream bad_hex("xyz\t1*v^0*z^0\n");
  EXPECT_THROW(memo.load(bad_hex), std::invalid_argument);
  memo.insert("k", LaurentPoly2::one());
  EXPECT_NO_THROW(memo.insert("k", LaurentPoly2::one()));
  EXPECT_THROW(memo.insert("k", LaurentPoly2::delta()), std::logic_error);
  EXPECT_FALSE(memo.load_file("/nonexistent/dir/cache"));
}

TEST(Skein, NodeBudget) {
  SkeinOptions opts;
  opts.node_budget = 10;
  SkeinEngine e(opts);
  auto d = canonical_double(closure(2, {1, 1, 1}), 0);
  try {
    e.homfly(d);
    FAIL() << "budget not enforced";
  } catch (const budget_exceeded& ex) {
    EXPECT_EQ(ex.stats().nodes, 11u);
  }
}

TEST(Skein, ThreadsDoNotChangeResult) {
  auto d = canonical_whitehead(closure(3, {1, -2, 1, -2}), 0, -1);
  SkeinOptions opts;
  opts.threads = 4;
  EXPECT_EQ(SkeinEngine(opts).homfly(d), P(d));
}
