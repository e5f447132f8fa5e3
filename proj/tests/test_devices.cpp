#include <cmath>

#include <doctest.h>

#include "slm/devices.hpp"

using namespace slm;

TEST_CASE("source with degenerate p0 always picks the same channel") {
  RandomStream rng(1);
  SourceConfig all0{1.0, Angle::degrees(30.0), Angle::degrees(200.0), false};
  SourceConfig all1{0.0, Angle::degrees(30.0), Angle::degrees(200.0), false};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Event e0 = emit(all0, rng, i);
    CHECK(e0.channel == Channel::c0);
    CHECK(e0.message.y0 == doctest::Approx(std::cos(Angle::degrees(30.0).rad())));
    CHECK(e0.sequence == i);
    CHECK(emit(all1, rng, i).channel == Channel::c1);
  }
}

TEST_CASE("source channel frequency matches p0") {
  RandomStream rng(2);
  SourceConfig source{0.25, Angle{}, Angle{}, false};
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    if (emit(source, rng, static_cast<std::uint64_t>(i)).channel == Channel::c0) ++hits;
  }
  // Binomial standard error sqrt(0.25*0.75/1e5) ~= 0.0014.
  CHECK(std::abs(static_cast<double>(hits) / n - 0.25) < 0.006);
}

TEST_CASE("source config validation") {
  CHECK_THROWS_AS(validate(SourceConfig{-0.5, Angle{}, Angle{}, false}), ConfigError);
  CHECK_THROWS_AS(validate(SourceConfig{1.5, Angle{}, Angle{}, false}), ConfigError);
  CHECK_NOTHROW(validate(SourceConfig{}));
}

TEST_CASE("rotate reference angles") {
  const Message quarter = rotate(Message{1.0, 0.0}, Angle::degrees(90.0));
  CHECK(std::abs(quarter.y0) < 1e-15);
  CHECK(quarter.y1 == doctest::Approx(1.0).epsilon(1e-15));

  const Message m{0.6, -0.8};
  const Message same = rotate(m, Angle::degrees(0.0));
  CHECK(same.y0 == m.y0);
  CHECK(same.y1 == m.y1);
}

TEST_CASE("rotate is the angle-addition map") {
  RandomStream rng(3);
  for (int i = 0; i < 100; ++i) {
    const double psi = 360.0 * rng.next_uniform();
    const double phi = 720.0 * rng.next_uniform() - 360.0;
    const Message rotated = rotate(make_message(Angle::degrees(psi)), Angle::degrees(phi));
    const Message direct = make_message(Angle::degrees(psi + phi));
    CHECK(std::abs(rotated.y0 - direct.y0) <= 1e-12);
    CHECK(std::abs(rotated.y1 - direct.y1) <= 1e-12);
  }
}

TEST_CASE("rotate preserves norm and inverts cleanly") {
  RandomStream rng(4);
  for (int i = 0; i < 10000; ++i) {
    const Message m = make_message(Angle::degrees(360.0 * rng.next_uniform()));
    const Angle phi = Angle::degrees(1440.0 * rng.next_uniform() - 720.0);
    const Message out = rotate(m, phi);
    CHECK(out.is_unit());
    const Message back = rotate(out, -phi);
    CHECK(std::abs(back.y0 - m.y0) <= 1e-12);
    CHECK(std::abs(back.y1 - m.y1) <= 1e-12);
  }
}

TEST_CASE("tap counts without touching the event") {
  TapCounters tap;
  const Event e{Channel::c0, Message{0.6, 0.8}, 12};
  tap_count(tap, e);
  CHECK(tap.n0 == 1);
  CHECK(tap.n1 == 0);
  CHECK(e.message.y0 == 0.6);
  CHECK(e.message.y1 == 0.8);

  RandomStream rng(5);
  int total = 0;
  for (int i = 0; i < 5000; ++i) {
    const Channel ch = rng.next_uniform() < 0.5 ? Channel::c0 : Channel::c1;
    tap_count(tap, Event{ch, Message{}, static_cast<std::uint64_t>(i)});
    ++total;
  }
  CHECK(tap.total() == total + 1);
  CHECK(tap.n0 >= 1);
  CHECK(tap.n1 >= 0);
}
