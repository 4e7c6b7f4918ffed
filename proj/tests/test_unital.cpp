#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unitals/unital.hpp"

using namespace unitals;
using test::error_of;

TEST_CASE("plane order must be a square") {
  CHECK(unital_q(Plane{Field(3, 2)}) == 3);
  CHECK(unital_q(Plane{Field(2, 2)}) == 2);
  CHECK(unital_q(Plane{Field(2, 4)}) == 4);
  CHECK(error_of([] { unital_q(Plane{Field(3, 1)}); }) == ErrorCode::NotASquareOrder);
  CHECK(error_of([] { unital_q(Plane{Field(2, 3)}); }) == ErrorCode::NotASquareOrder);
}

TEST_CASE("Hermitian unitals") {
  for (auto [p, h] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{5u, 2u}}) {
    const Plane plane{Field(p, h)};
    const unsigned q = unital_q(plane);
    const PointSet s = hermitian_unital(plane);
    CHECK(s.size() == q * q * q + 1);
    const auto rep = is_unital(plane, s);
    CHECK(rep.is_unital);
    CHECK(rep.failures.empty());
    CHECK(rep.profile.size() == 2);
    CHECK(rep.profile.at(1) == q * q * q + 1);
    CHECK(rep.profile.at(q + 1) == plane.size() - (q * q * q + 1));
    REQUIRE(rep.tangents);
    CHECK(rep.tangents->uniform);
    CHECK(rep.tangents->matches_unital_counts);
    CHECK(rep.tangents->tangents_on == 1);
    CHECK(rep.tangents->secants_on == q * q);
    CHECK(rep.tangents->tangents_off == q + 1);
    CHECK(rep.tangents->secants_off == q * q - q);
  }
  const Plane p9{Field(3, 2)};
  const auto rep = is_unital(p9, hermitian_unital(p9), Exec::Serial);
  CHECK(rep.profile == std::map<std::uint32_t, std::uint32_t>{{1, 28}, {4, 63}});
}

TEST_CASE("BEHS unitals") {
  const Plane p9{Field(3, 2)};
  const Field& f = p9.field();
  const auto u = behs_unital(p9);
  CHECK(u.t == f.first_nonsquare());
  CHECK(u.points.size() == 28);
  REQUIRE(u.conics.size() == 3);
  PointSet seen = p9.empty_set();
  for (const auto& c : u.conics) {
    const auto pts = conic_point_indices(p9, c);
    CHECK(pts.size() == 10);
    CHECK(conic_eval(f, c, Vec3{0, 1, 0}) == 0);
    for (auto x : pts) seen.insert(x);
  }
  CHECK(seen == u.points);
  const auto ts = tangent_structure(p9, u.points);
  CHECK(ts.tangents_off == 4);
  CHECK(ts.secants_off == 6);
  CHECK(ts.matches_unital_counts);

  CHECK(behs_conic(f, 0).c == Vec6{f.neg(1), 0, 0, 0, 0, 1});
  for (Elem t = 1; t < 9; ++t) {
    if (f.is_nonsquare(t)) {
      CHECK(is_unital(p9, behs_unital(p9, t).points).is_unital);
    } else {
      CHECK(error_of([&] { behs_unital(p9, t); }) == ErrorCode::TIsSquare);
    }
  }
  const Plane p25{Field(5, 2)};
  const auto u5 = behs_unital(p25);
  CHECK(u5.points.size() == 126);
  CHECK(u5.conics.size() == 5);
  CHECK(is_unital(p25, u5.points).is_unital);
  CHECK(error_of([] { behs_unital(Plane{Field(2, 2)}); }) == ErrorCode::EvenQ);
}

TEST_CASE("negative control: random sets are not unitals") {
  const Plane p9{Field(3, 2)};
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet s = p9.empty_set();
    while (s.size() < 28) s.insert(static_cast<std::uint32_t>(rng() % p9.size()));
    const auto rep = is_unital(p9, s);
    CHECK_FALSE(rep.is_unital);
    CHECK_FALSE(rep.failures.empty());
    CHECK_FALSE(rep.tangents);
    CHECK(error_of([&] { tangent_structure(p9, s); }) == ErrorCode::NotAUnital);
  }
  PointSet small = p9.empty_set();
  small.insert(0);
  CHECK_FALSE(is_unital(p9, small).is_unital);
}

TEST_CASE("serial and parallel verification agree") {
  const Plane p25{Field(5, 2)};
  const auto s = hermitian_unital(p25);
  const auto a = is_unital(p25, s, Exec::Serial);
  const auto b = is_unital(p25, s, Exec::Parallel);
  CHECK(a.profile == b.profile);
  CHECK(a.failures == b.failures);
}
