#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace circuit {
namespace {

constexpr int kCases = 300;

TEST(Properties, LedgerConservation) { EXPECT_EQ(props::ledger_conservation(kCases), 0); }
TEST(Properties, MirrorSymmetry) { EXPECT_EQ(props::mirror_symmetry(kCases), 0); }
TEST(Properties, ScaleInvariance) { EXPECT_EQ(props::scale_invariance(kCases), 0); }
TEST(Properties, ParseFormatRoundTrip) { EXPECT_EQ(props::parse_format_roundtrip(kCases), 0); }
TEST(Properties, FmSoundness) { EXPECT_EQ(props::fm_soundness(kCases), 0); }
TEST(Properties, FmAgreesWithLp) { EXPECT_EQ(props::fm_lp_agreement(kCases), 0); }
TEST(Properties, CertificateSoundness) { EXPECT_EQ(props::certificate_soundness(kCases), 0); }

// Different seeds, so the acceptance run and this suite cover different cases.
TEST(Properties, SecondSeed) {
  EXPECT_EQ(props::ledger_conservation(kCases, 11), 0);
  EXPECT_EQ(props::mirror_symmetry(kCases, 12), 0);
  EXPECT_EQ(props::fm_lp_agreement(kCases, 16), 0);
  EXPECT_EQ(props::certificate_soundness(kCases, 17), 0);
}

}  // namespace
}  // namespace circuit
