#include <gtest/gtest.h>

#include <vector>

#include "circuit/builtins.hpp"
#include "circuit/simulator.hpp"

namespace circuit {
namespace {

Ratio mixed(long whole, long num = 0, long den = 1) { return Ratio(whole) + Ratio(num, den); }

struct StepTable {
  const char* name;
  std::vector<Ratio> end_mile;  // circuit mile where each numbered step ends
  std::vector<Ratio> days;      // stated duration of each step
};

// Transcribed from the three step lists (end point, day count in parentheses).
StepTable alg1_table() {
  return {"alg1",
          {0, 90, 90, 80, 80, 0, 0, 0, 10, 10, 20, 30, 70, 0},
          {5, 1, 1, 1, 1, 1, 1, 4, 1, 2, 1, 1, 2, Ratio(3, 2)}};
}
StepTable alg2_table() {
  return {"alg2",
          {0, 0, 0, 0, mixed(93, 3, 4), 90, mixed(82, 1, 2), 80, 0, 0, 10, 10, mixed(12, 1, 2), mixed(20, 5, 8),
           mixed(31, 1, 4), mixed(71, 1, 4), 0},
          {Ratio(1, 8), 1, 1, 2, 1, 1, 1, 1, 1, 5, 1, 1, 1, 1, 1, 2, Ratio(23, 16)}};
}
StepTable alg3_table() {
  return {"alg3",
          {0, 0, 0, 0, mixed(95, 25, 29), mixed(88, 28, 29), mixed(82, 12, 29), 0, 0, 0, mixed(9, 9, 29), 10, 10,
           mixed(12, 19, 58), mixed(19, 24, 29), mixed(23, 18, 29), mixed(35, 20, 29), mixed(75, 20, 29), 0},
          {Ratio(25, 29), Ratio(4, 29), 1, 1, 1, 1, 1, 1, 1, 5, 1, 1, 1, 1, 1, 1, 1, 2, Ratio(141, 116)}};
}

void check_steps(const StepTable& t) {
  auto s = builtin(t.name);
  Ratio at;
  Ratio walked;
  std::size_t step = 0;
  for (const auto& a : s.actions) {
    if (const auto* m = std::get_if<Move>(&a)) {
      at += m->miles;
      walked += m->miles.abs();
    }
    const auto* mk = std::get_if<Mark>(&a);
    if (mk == nullptr || mk->label.rfind("step-", 0) != 0) continue;
    ASSERT_LT(step, t.end_mile.size()) << t.name;
    EXPECT_EQ(mk->label, "step-" + std::to_string(step + 1));
    EXPECT_EQ(mod(at, Ratio(100)), t.end_mile[step]) << t.name << " step " << step + 1;
    ++step;
  }
  EXPECT_EQ(step, t.end_mile.size()) << t.name;

  // step durations from the simulator's mark clock
  auto rep = simulate(s, preset(Preset::kFree));
  Ratio prev;
  for (std::size_t i = 0; i < t.days.size(); ++i) {
    auto tm = rep.mark_time("step-" + std::to_string(i + 1));
    ASSERT_TRUE(tm.has_value());
    EXPECT_EQ(*tm - prev, t.days[i]) << t.name << " step " << i + 1;
    prev = *tm;
  }
}

TEST(BuiltinTest, Alg1StepsMatchStatedPositionsAndDays) { check_steps(alg1_table()); }
TEST(BuiltinTest, Alg2StepsMatchStatedPositionsAndDays) { check_steps(alg2_table()); }
TEST(BuiltinTest, Alg3StepsMatchStatedPositionsAndDays) { check_steps(alg3_table()); }

TEST(BuiltinTest, TotalDistances) {
  EXPECT_EQ(builtin("alg1").distance(), Ratio(470));
  EXPECT_EQ(builtin("alg1").distance(), Ratio(47, 2) * Ratio(20));
  EXPECT_EQ(builtin("alg2").distance(), Ratio(361, 16) * Ratio(20));
  EXPECT_EQ(builtin("alg3").distance(), Ratio(2693, 116) * Ratio(20));
}

TEST(BuiltinTest, Alg3StartsWithShortRoundTrip) {
  auto s = builtin("alg3");
  EXPECT_EQ(s.phase, Ratio(0));
  ASSERT_GE(s.actions.size(), 4u);
  EXPECT_EQ(std::get<Move>(s.actions[1]).miles, mixed(8, 18, 29));
  EXPECT_EQ(std::get<Move>(s.actions[3]).miles, -mixed(8, 18, 29));
  EXPECT_EQ(mixed(8, 18, 29) * 2 / Ratio(20), Ratio(25, 29));
}

TEST(BuiltinTest, Alg2LeavesCachesForPartC) {
  auto rep = simulate(builtin("alg2"), preset(Preset::kFree));
  const auto* m = rep.mark("partB-end");
  ASSERT_NE(m, nullptr);
  CacheMap expected{{mixed(71, 1, 4), 1}, {mixed(91, 1, 4), 1}};
  EXPECT_EQ(m->caches, expected);
  const auto* a = rep.mark("partA-end");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->caches, expected);
}

TEST(BuiltinTest, Alg1AndAlg3LeaveStatedCaches) {
  auto r1 = simulate(builtin("alg1"), preset(Preset::kDawn));
  EXPECT_EQ(r1.mark("partA-end")->caches, (CacheMap{{70, 1}, {90, 1}}));
  auto r3 = simulate(builtin("alg3"), preset(Preset::kDawn));
  EXPECT_EQ(r3.mark("step-8")->caches,
            (CacheMap{{mixed(8, 18, 29), 1}, {mixed(75, 20, 29), 1}, {mixed(95, 20, 29), 1}}));
}

TEST(BuiltinTest, UnknownName) { EXPECT_THROW(builtin("alg4"), std::invalid_argument); }

}  // namespace
}  // namespace circuit
