#include <gtest/gtest.h>

#include "homfly/satellite.hpp"
#include "homfly/skein.hpp"

using namespace homfly;

namespace {

LinkDiagram closure(int n, std::vector<int> w) { return from_braid_closure(BraidWord(n, std::move(w))); }
LinkDiagram trefoil() { return closure(2, {1, 1, 1}); }
LinkDiagram figure_eight() { return closure(3, {1, -2, 1, -2}); }

}  // namespace

TEST(Satellite, BlackboardDoubleCounts) {
  for (const auto& d : {trefoil(), figure_eight(), from_braid_closure(quasitoric_beta(2, -1))}) {
    auto w2 = blackboard_double(d);
    EXPECT_EQ(w2.crossing_count(), 4 * d.crossing_count());
    EXPECT_EQ(component_count(w2), 2 * component_count(d));
    EXPECT_EQ(w2.writhe(), 0);
  }
}

TEST(Satellite, FramedDoubleCounts) {
  for (const auto& d : {trefoil(), figure_eight()}) {
    const int c = d.crossing_count(), w = d.writhe();
    for (int m = -4; m <= 6; ++m) {
      auto w2 = canonical_double(d, m);
      EXPECT_EQ(w2.crossing_count(), 4 * c + 2 * std::abs(m - w)) << m;
      EXPECT_EQ(component_count(w2), 2);
      EXPECT_EQ(w2.writhe(), -2 * (m - w));
      EXPECT_EQ(linking_number(w2, 0, 1), HalfInt{2 * kPushoffLinkSign * m}) << m;
      EXPECT_TRUE(is_planar(w2));
      for (int s : {1, -1}) {
        auto wh = canonical_whitehead(d, m, s);
        EXPECT_EQ(wh.crossing_count(), 4 * c + 2 * std::abs(m - w) + 2);
        EXPECT_EQ(component_count(wh), 1);
        EXPECT_EQ(wh.writhe(), -2 * (m - w) + 2 * s);
        EXPECT_TRUE(is_planar(wh));
      }
    }
  }
}

TEST(Satellite, BlackboardFramingMatchesWrithe) {
  auto t = trefoil();
  EXPECT_EQ(canonical_double(t, t.writhe()), blackboard_double(t));
}

TEST(Satellite, WhiteheadGenusDoesNotDependOnFraming) {
  for (const auto& d : {trefoil(), figure_eight(), closure(2, {1, 1, 1, 1, 1})}) {
    for (int m = -5; m <= 8; ++m)
      for (int s : {1, -1})
        EXPECT_EQ(stats(canonical_whitehead(d, m, s)).canonical_genus, HalfInt{2 * d.crossing_count()})
            << "m=" << m << " s=" << s;
  }
}

TEST(Satellite, DoubleSeifertCountDoesNotDependOnFraming) {
  auto t = trefoil();
  const int base = seifert_circle_count(blackboard_double(t));
  for (int m = -5; m <= 8; ++m) {
    auto w2 = canonical_double(t, m);
    EXPECT_EQ(seifert_circle_count(w2), base + 2 * std::abs(m - t.writhe()));
    EXPECT_EQ(stats(w2).morton_bound, stats(blackboard_double(t)).morton_bound) << m;
  }
}

TEST(Satellite, ClaspSkeinIdentity) {
  // switching one clasp crossing of W_+ gives the unknot, smoothing it gives W_2
  const auto vinv_zinv = LaurentPoly2::monomial(1, -1, -1);
  const auto v_zinv = LaurentPoly2::monomial(1, 1, -1);
  for (const auto& d : {trefoil(), figure_eight()})
    for (int m : {-1, 0, 2, 3}) {
      auto p2 = homfly::homfly(canonical_double(d, m));
      auto pw = homfly::homfly(canonical_whitehead(d, m, 1));
      EXPECT_EQ(p2, vinv_zinv * pw - v_zinv) << m;
      auto pn = homfly::homfly(canonical_whitehead(d, m, -1));
      // v^-1 P(unknot) - v P(W_-) = z P(W_2)
      EXPECT_EQ(p2, v_zinv.shifted(-2, 0) - v_zinv * pn) << m;
    }
}

TEST(Satellite, UnknotBase) {
  LinkDiagram u({}, 1);
  EXPECT_EQ(canonical_double(u, 0).free_loops(), 2);
  EXPECT_EQ(canonical_double(u, 0).crossing_count(), 0);
  auto hopf_like = canonical_double(u, 1);
  EXPECT_EQ(hopf_like.crossing_count(), 2);
  EXPECT_EQ(linking_number(hopf_like, 0, 1), HalfInt{-2});
  EXPECT_EQ(homfly::homfly(canonical_whitehead(u, 0, 1)), LaurentPoly2::one());
}

TEST(Satellite, NonKnotBaseThrows) {
  auto hopf = closure(2, {1, 1});
  EXPECT_THROW(canonical_double(hopf, 0), std::invalid_argument);
  EXPECT_THROW(canonical_whitehead(hopf, 0, 1), std::invalid_argument);
  EXPECT_THROW(canonical_whitehead(trefoil(), 0, 2), std::invalid_argument);
  EXPECT_NO_THROW(blackboard_double(hopf));
}

TEST(Satellite, BuildSatellite) {
  auto t = trefoil();
  EXPECT_EQ(build_satellite({t, std::nullopt, Clasp::None}), blackboard_double(t));
  EXPECT_EQ(build_satellite({t, 1, Clasp::None}), canonical_double(t, 1));
  EXPECT_EQ(build_satellite({t, 1, Clasp::Negative}), canonical_whitehead(t, 1, -1));
  EXPECT_EQ(build_satellite({t, std::nullopt, Clasp::Positive}), canonical_whitehead(t, 3, 1));
}

TEST(Satellite, HalfTwistReplacement) {
  auto one = closure(2, {1});
  EXPECT_EQ(canonical_code(replace_crossing_with_half_twists(one, {0, 3})), canonical_code(trefoil()));
  EXPECT_EQ(canonical_code(replace_crossing_with_half_twists(one, {0, 2})), canonical_code(closure(2, {1, 1})));
  auto neg = closure(3, {1, -2});
  EXPECT_EQ(canonical_code(replace_crossing_with_half_twists(neg, {1, 3})), canonical_code(closure(3, {1, -2, -2, -2})));
  EXPECT_EQ(replace_crossing_with_half_twists(trefoil(), {2, 1}), trefoil());
  EXPECT_THROW(replace_crossing_with_half_twists(one, {0, 0}), std::invalid_argument);
  EXPECT_THROW(replace_crossing_with_half_twists(one, {1, 2}), std::out_of_range);
}

TEST(Satellite, MatrixBuiltClosures) {
  EXPECT_EQ(k_a_braid({{1, 1, 1}}), BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(k_a_braid({{1, 1, 1}, {-1, -1, -1}}), quasitoric_beta(2, 1));
  EXPECT_EQ(k_a_braid({{2, 1, 1}, {-2, -1, -1}}), BraidWord(3, {2, 2, -1, -1, 2, -1, 2, -1}));
  auto k = build_K_A({{2, 1, 1}, {-2, -1, -1}});
  EXPECT_EQ(k.crossing_count(), 8);
  EXPECT_EQ(component_count(k), 1);
  EXPECT_THROW(k_a_braid({}), std::invalid_argument);
  EXPECT_THROW(k_a_braid({{1, 1}}), std::invalid_argument);
  EXPECT_THROW(k_a_braid({{1, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(k_a_braid({{1, -1, 1}}), std::invalid_argument);
  EXPECT_THROW(k_a_braid({{1, 1, 1}, {1, 1, 1}}), std::invalid_argument);
}
