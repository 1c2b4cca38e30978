#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "circuit/ratio.hpp"
#include "circuit/schedule.hpp"

namespace circuit {

namespace detail {

/// Emits Move actions between absolute (unwrapped) mile positions. The far
/// side of the mountain is reached backwards, so the 90-mile point is -10.
class ScheduleBuilder {
 public:
  explicit ScheduleBuilder(Ratio phase = Ratio(0)) { s_.phase = std::move(phase); }

  ScheduleBuilder& to(const Ratio& target) {
    if (target != at_) s_.actions.emplace_back(Move{target - at_});
    at_ = target;
    return *this;
  }
  ScheduleBuilder& take(long n) { return push(Take{n}); }
  ScheduleBuilder& dump(long n) { return push(Dump{n}); }
  ScheduleBuilder& discard() { return push(Discard{}); }
  ScheduleBuilder& mark(std::string label) { return push(Mark{std::move(label)}); }
  ScheduleBuilder& step(int n) { return mark("step-" + std::to_string(n)); }

  Schedule build() && { return std::move(s_); }

 private:
  ScheduleBuilder& push(Action a) {
    s_.actions.push_back(std::move(a));
    return *this;
  }
  Schedule s_;
  Ratio at_;
};

/// Mile point `whole num/den` on the far side, as an unwrapped (negative) position.
inline Ratio far(long whole, long num = 0, long den = 1) { return Ratio(whole) + Ratio(num, den) - Ratio(100); }
/// Mile point `whole num/den` on the near side.
inline Ratio near(long whole, long num = 0, long den = 1) { return Ratio(whole) + Ratio(num, den); }

// Dudeney's 23 1/2 day solution. Every day starts with an unsealing at dawn.
inline Schedule alg1() {
  ScheduleBuilder b;
  const Ratio base(0);
  // Part A
  for (int i = 0; i < 5; ++i) b.take(2).to(far(90)).dump(1).to(base);
  b.step(1);
  b.take(2).to(far(85)).dump(1).to(far(90)).step(2);
  b.take(2).to(far(80)).dump(1).to(far(90)).step(3);
  b.take(2).to(far(80)).dump(1).to(far(85)).take(1).to(far(80)).dump(1).step(4);
  b.take(2).to(far(70)).dump(1).to(far(80)).step(5);
  b.take(1).to(base).step(6).mark("partA-end");
  // Part B; step 7 pads the half-day trip to 5 miles out to a full day by going on to 10.
  b.take(2).to(near(5)).dump(1).to(near(10)).to(base).step(7);
  for (int i = 0; i < 4; ++i) b.take(2).to(near(10)).dump(1).to(base);
  b.step(8);
  b.take(2).to(near(10)).dump(1).to(near(5)).take(1).to(near(10)).dump(1).step(9);
  for (int i = 0; i < 2; ++i) b.take(2).to(near(20)).dump(1).to(near(10));
  b.step(10);
  b.take(2).to(near(25)).dump(1).to(near(20)).step(11);
  b.take(2).to(near(30)).dump(1).to(near(25)).take(1).to(near(30)).dump(1).step(12);
  b.take(2).to(near(70)).step(13).mark("partB-end");
  // Part C
  b.take(1).to(near(90)).take(1).to(near(100)).step(14).mark("partC-end");
  return std::move(b).build();
}

// The 22 9/16 day solution. Phase 7/8 makes step 1 end at the first dusk, so
// all later full-day steps start at dawn.
inline Schedule alg2() {
  ScheduleBuilder b(Ratio(7, 8));
  const Ratio base(0);
  // Part A
  b.take(2).to(far(98, 3, 4)).dump(1).to(base).step(1);
  b.discard().take(2).to(far(97, 1, 2)).dump(1).to(far(98, 3, 4)).take(1).to(far(91, 1, 4)).dump(1).to(base).step(2);
  b.take(2).to(far(93, 3, 4)).dump(1).to(far(97, 1, 2)).take(1).to(far(93, 3, 4)).dump(1).to(base).step(3);
  for (int i = 0; i < 2; ++i) b.take(2).to(far(90)).dump(1).to(base);
  b.step(4);
  b.take(2).to(far(86, 7, 8)).dump(1).to(far(93, 3, 4)).step(5);
  b.take(2).to(far(82, 1, 2)).dump(1).to(far(86, 7, 8)).take(1).to(far(86, 1, 4)).dump(1).to(far(90)).step(6);
  b.take(2).to(far(80)).dump(1).to(far(86, 1, 4)).take(1).to(far(82, 1, 2)).step(7);
  b.take(1).to(far(71, 1, 4)).dump(1).to(far(80)).step(8);
  b.take(1).to(base).step(9).mark("partA-end");
  // Part B
  for (int i = 0; i < 5; ++i) b.take(2).to(near(10)).dump(1).to(base);
  b.step(10);
  b.take(2).to(near(12, 1, 2)).dump(1).to(near(10)).take(1).to(near(12, 1, 2)).dump(1).to(near(10)).step(11);
  b.take(2).to(near(20)).dump(1).to(near(10)).step(12);
  b.take(2).to(near(20, 5, 8)).dump(1).to(near(20)).take(1).to(near(20, 5, 8)).dump(1).to(near(12, 1, 2)).step(13);
  b.take(2).to(near(26, 9, 16)).dump(1).to(near(20, 5, 8)).step(14);
  b.take(2).to(near(31, 1, 4)).dump(1).to(near(26, 9, 16)).take(1).to(near(31, 1, 4)).step(15);
  b.take(1).to(near(71, 1, 4)).step(16).mark("partB-end");
  // Part C
  b.take(1).to(near(91, 1, 4)).take(1).to(near(100)).step(17).mark("partC-end");
  return std::move(b).build();
}

// The 23 25/116 day dawn-start solution.
inline Schedule alg3() {
  ScheduleBuilder b;
  const Ratio base(0);
  b.take(2).to(near(8, 18, 29)).dump(1).to(base).step(1);
  for (int i = 0; i < 2; ++i) b.take(1).to(far(99, 9, 29)).dump(1).to(base);
  b.step(2);
  b.take(2).to(far(96, 26, 29)).dump(1).to(far(99, 9, 29));
  b.take(1).to(far(95, 25, 29)).dump(1).to(far(99, 9, 29));
  b.take(1).to(far(95, 25, 29)).dump(1).to(base).step(3);
  b.take(2).to(far(90)).dump(1).to(base).step(4);
  b.take(2).to(far(88, 28, 29)).dump(1).to(far(90)).take(1).to(far(88, 28, 29)).dump(1).to(far(95, 25, 29)).step(5);
  b.take(2).to(far(82, 12, 29)).dump(1).to(far(88, 28, 29)).step(6);
  b.take(2).to(far(75, 20, 29)).dump(1).to(far(82, 12, 29)).step(7);
  b.take(1).to(far(96, 26, 29)).take(1).to(far(95, 20, 29)).dump(1).to(base).step(8).mark("partA-end");
  b.take(2).to(near(9, 9, 29)).dump(1).to(near(8, 18, 29)).take(1).to(near(9, 9, 29)).dump(1).to(base).step(9);
  for (int i = 0; i < 5; ++i) b.take(2).to(near(10)).dump(1).to(base);
  b.step(10);
  b.take(2).to(near(12, 19, 58)).dump(1).to(near(10)).take(1).to(near(12, 19, 58)).dump(1).to(near(9, 9, 29)).step(11);
  b.take(2).to(near(19, 19, 29)).dump(1).to(near(10)).step(12);
  b.take(2).to(near(19, 24, 29)).dump(1).to(near(19, 19, 29)).take(1).to(near(19, 24, 29)).dump(1).to(near(10)).step(13);
  b.take(2).to(near(21, 19, 116)).dump(1).to(near(12, 19, 58)).step(14);
  b.take(2).to(near(23, 18, 29)).dump(1).to(near(21, 19, 116)).take(1).to(near(23, 18, 29)).dump(1).to(near(19, 24, 29)).step(15);
  b.take(2).to(near(31, 21, 29)).dump(1).to(near(23, 18, 29)).step(16);
  b.take(2).to(near(35, 20, 29)).dump(1).to(near(31, 21, 29)).take(1).to(near(35, 20, 29)).step(17);
  b.take(1).to(near(75, 20, 29)).step(18).mark("partB-end");
  b.take(1).to(near(95, 20, 29)).take(1).to(near(100)).step(19).mark("partC-end");
  return std::move(b).build();
}

}  // namespace detail

struct BuiltinInfo {
  std::string_view name;
  std::string_view summary;
};

inline constexpr std::array<BuiltinInfo, 3> kBuiltins = {{
    {"alg1", "Dudeney's solution, 47/2 days; feasible under DAWN"},
    {"alg2", "caches at 71 1/4 and 91 1/4, 361/16 days; feasible under FREE and ANTS (phase 7/8)"},
    {"alg3", "dawn-start solution, 2693/116 days; feasible under DAWN"},
}};

inline Schedule builtin(std::string_view name) {
  if (name == "alg1") return detail::alg1();
  if (name == "alg2") return detail::alg2();
  if (name == "alg3") return detail::alg3();
  throw std::invalid_argument("unknown builtin '" + std::string(name) + "' (valid: alg1, alg2, alg3)");
}

}  // namespace circuit
