#include <gtest/gtest.h>

#include "circuit/families.hpp"

namespace circuit {
namespace {

// Builds lhs <= rhs as rhs - lhs >= 0 from (var, coeff) pairs on each side.
LinIneq le(std::vector<std::pair<VarId, Ratio>> lhs, Ratio lc, std::vector<std::pair<VarId, Ratio>> rhs, Ratio rc) {
  LinIneq q;
  for (auto& [v, c] : rhs) q.add(v, c);
  for (auto& [v, c] : lhs) q.add(v, -c);
  q.add_constant(rc - lc);
  return q;
}

const VarId T = VarId::t(), G = VarId::g(), R = VarId::r();
VarId E(int i) { return VarId::e(i); }
const Ratio h(1, 2);

TEST(PartA, SdZeroExpandsBothDs) {
  // gamma + r <= r/2 + e1 + e2/2 + 1
  auto want = le({{G, 1}, {R, 1}}, 0, {{R, h}, {E(1), 1}, {E(2), h}}, 1);
  EXPECT_EQ(gen_partA(PartAKind::kSd, 0), want);
  EXPECT_EQ(gen_partA(PartAKind::kSd, 0).label(), "sd(0)");
}

TEST(PartA, SdOneReachesE4) {
  // gamma + r + 2e1 <= d0 + d1 + d2 + d3
  auto want = le({{G, 1}, {R, 1}, {E(1), 2}}, 0, {{R, h}, {E(1), 1}, {E(2), 1}, {E(3), 1}, {E(4), h}}, 2);
  auto got = gen_partA(PartAKind::kSd, 1);
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.max_e_index(), 4);
}

TEST(PartA, SiCZeroIsEmptySum) {
  EXPECT_EQ(gen_partA(PartAKind::kSiC, 0), le({{G, 2}, {R, 1}}, -1, {{T, h}}, 0));
}

TEST(PartA, SiABAddsHalfROverflow) {
  auto want = le({{G, 2}, {R, Ratio(3, 2)}, {E(1), 1}, {E(2), 1}}, Ratio(-3, 2), {{T, h}}, 0);
  EXPECT_EQ(gen_partA(PartAKind::kSiAB, 2), want);
}

TEST(PartA, Gamm) {
  EXPECT_EQ(gen_partA(PartAKind::kGamm), le({{G, 1}}, 0, {{E(1), h}, {R, h}}, h));
  EXPECT_EQ(gen_partA(PartAKind::kGamm).str(), "-1*G + 1/2*R + 1/2*E1 + 1/2 >= 0");
}

TEST(PartA, IndexLimits) {
  EXPECT_THROW(gen_partA(PartAKind::kSd, kMaxFamilyIndex + 1), std::out_of_range);
  EXPECT_THROW(gen_partA(PartAKind::kSiC, -1), std::out_of_range);
  EXPECT_NO_THROW(gen_partA(PartAKind::kSd, kMaxFamilyIndex));
}

TEST(PartB, Cbd) {
  EXPECT_EQ(gen_partB(PartBKind::kCbd, 1), le({{E(1), h}, {E(2), -h}}, 0, {}, h));
  // e1 + 2e2 <= d1 + d2 + d3
  auto want = le({{E(1), 1}, {E(2), 2}}, 0, {{E(1), h}, {E(2), 1}, {E(3), 1}, {E(4), h}}, Ratio(3, 2));
  EXPECT_EQ(gen_partB(PartBKind::kCbd, 2), want);
}

TEST(PartB, Cbsi) {
  EXPECT_EQ(gen_partB(PartBKind::kCbsi, 1), le({{E(1), 1}}, 0, {{T, 1}}, -1));
  EXPECT_EQ(gen_partB(PartBKind::kCbsi, 3), le({{E(1), 1}, {E(2), 2}, {E(3), 2}}, 0, {{T, 1}}, -1));
  EXPECT_THROW(gen_partB(PartBKind::kCbd, 0), std::out_of_range);
}

TEST(RoundTrip, Rtd0) {
  EXPECT_EQ(gen_roundtrip(RoundTripKind::kRtd0), le({{G, 1}}, 0, {{E(2), h}, {R, h}}, 1));
}

TEST(RoundTrip, RtsiPrintedMatchesDisplayedForm) {
  EXPECT_EQ(gen_roundtrip(RoundTripKind::kRtsiPrinted, 2), le({{G, 1}, {R, 2}, {E(2), 2}}, -1, {{T, h}}, 0));
}

TEST(RoundTrip, RtsiCountsEachBoxOnce) {
  EXPECT_EQ(gen_roundtrip(RoundTripKind::kRtsi, 2), le({{G, 1}, {R, 2}, {E(2), 1}}, -1, {{T, h}}, 0));
  EXPECT_EQ(gen_roundtrip(RoundTripKind::kRtsi, 4),
            le({{G, 1}, {R, 2}, {E(2), 1}, {E(3), 1}, {E(4), 1}}, -1, {{T, h}}, 0));
}

TEST(RoundTrip, Rtd2Four) {
  // gamma + 2r - 1 + 2(e2+e3+e4) <= (e2 + r + 2)/2 + d2 + ... + d9
  LinIneq rhs_sum;
  rhs_sum.add(E(2), h).add(R, h).add_constant(1);
  for (int i = 2; i <= 9; ++i) rhs_sum.add(E(i), h).add(E(i + 1), h).add_constant(h);
  LinIneq want = rhs_sum;
  want.add(G, -1).add(R, -2).add_constant(1).add(E(2), -2).add(E(3), -2).add(E(4), -2);
  EXPECT_EQ(gen_roundtrip(RoundTripKind::kRtd2, 4), want);
  EXPECT_EQ(want.max_e_index(), 10);
}

TEST(RoundTrip, Rtd1) {
  // gamma + r + 2e2 <= (e2 + r + 2)/2 + d2 + d3 + d4
  auto want = le({{G, 1}, {R, 1}, {E(2), 2}}, 0, {{E(2), 1}, {R, h}, {E(3), 1}, {E(4), 1}, {E(5), h}}, Ratio(5, 2));
  EXPECT_EQ(gen_roundtrip(RoundTripKind::kRtd1, 2), want);
  EXPECT_THROW(gen_roundtrip(RoundTripKind::kRtd1, 1), std::out_of_range);
  EXPECT_THROW(gen_roundtrip(RoundTripKind::kRtsi, 1), std::out_of_range);
}

TEST(Ordering, Sizes) {
  auto o1 = ordering(1);
  ASSERT_EQ(o1.size(), 4u);
  EXPECT_EQ(o1[0], le({}, 0, {{E(1), 1}}, 0));
  auto o2 = ordering(2);
  ASSERT_EQ(o2.size(), 5u);
  EXPECT_EQ(o2[0], le({{E(2), 1}}, 0, {{E(1), 1}}, 0));
  EXPECT_EQ(o2[1], le({}, 0, {{E(2), 1}}, 0));
  auto o3 = ordering(3);
  EXPECT_EQ(o3.size(), 6u);
  EXPECT_THROW(ordering(0), std::out_of_range);
}

TEST(Ordering, WithOrderingCoversEveryE) {
  auto sys = with_ordering({gen_partA(PartAKind::kSd, 1)});
  EXPECT_EQ(sys.size(), 4u + 3u + 1u);
  EXPECT_EQ(sys.back().label(), "sd(1)");
}

TEST(FamilySpec, ParsesRanges) {
  auto s = parse_families("gamm,siC:2-4,sd:0-1");
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0].label(), "gamm");
  EXPECT_EQ(s[3].label(), "siC(4)");
  EXPECT_EQ(s[5].label(), "sd(1)");
  EXPECT_EQ(parse_families("pin").size(), 2u);
  EXPECT_EQ(parse_families("cbsi:6").size(), 1u);
}

TEST(FamilySpec, Rejects) {
  EXPECT_THROW(parse_families("siC"), std::invalid_argument);
  EXPECT_THROW(parse_families("bogus:1"), std::invalid_argument);
  EXPECT_THROW(parse_families("sd:3-1"), std::invalid_argument);
  EXPECT_THROW(parse_families("sd:x"), std::invalid_argument);
  EXPECT_THROW(parse_families("sd:40"), std::out_of_range);
}

TEST(Pin, FixesE1) {
  auto pin = pin_far_side();
  Point p{{G, Ratio(3, 2)}, {E(1), Ratio(5, 2)}};
  for (const auto& q : pin) EXPECT_TRUE(q.holds(p));
  p[E(1)] = Ratio(2);
  EXPECT_FALSE(pin[0].holds(p) && pin[1].holds(p));
}

}  // namespace
}  // namespace circuit
