#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "unitals/analysis.hpp"
#include "unitals/conic.hpp"
#include "unitals/geom.hpp"

using namespace unitals;
using test::error_of;

TEST_CASE("point enumeration") {
  CHECK(all_points(Field(3, 2), 2).size() == 91);
  CHECK(all_points(Field(3, 2), 5).size() == 66430);
  CHECK(all_points(Field(3, 1), 2).size() == 13);
  CHECK(error_of([] { all_points(Field(3, 1), 3); }) == ErrorCode::UnsupportedDimension);

  const Field f(5, 1);
  const auto pts = all_points(f, 2);
  std::set<std::vector<Elem>> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].index == i);
    const auto& c = pts[i].coords;
    const auto lead = std::find_if(c.begin(), c.end(), [](Elem e) { return e != 0; });
    REQUIRE(lead != c.end());
    CHECK(*lead == 1);
    seen.insert(c);
    if (i > 0) CHECK(pts[i - 1].coords < c);
  }
  CHECK(seen.size() == pts.size());
}

TEST_CASE("canonical index round trip") {
  for (unsigned n : {3u, 9u, 25u}) {
    for (std::uint64_t i = 0; i < projective_count(n, 2); ++i) CHECK(index_of(n, point_at<3>(n, i)) == i);
  }
  for (std::uint64_t i = 0; i < projective_count(3, 5); ++i) CHECK(index_of(3, point_at<6>(3, i)) == i);
  CHECK(point_at<3>(9, 0) == Vec3{0, 0, 1});
  CHECK(point_at<3>(9, 1) == Vec3{0, 1, 0});
  CHECK(point_at<3>(9, 10) == Vec3{1, 0, 0});
}

TEST_CASE("lines of PG(2,n)") {
  const Field f9(3, 2);
  CHECK(line_through(f9, Vec3{1, 0, 0}, Vec3{0, 1, 0}) == Vec3{0, 0, 1});
  CHECK(error_of([&] { line_through(f9, Vec3{1, 2, 0}, Vec3{2, 1, 0}); }) == ErrorCode::CoincidentPoints);

  const auto z0 = points_on_line(f9, Vec3{0, 0, 1});
  CHECK(z0.size() == 10);
  for (const auto& p : z0) CHECK(p[2] == 0);

  const Field f3(3, 1);
  CHECK(points_on_line(f3, line_through(f3, Vec3{1, 1, 1}, Vec3{1, 2, 0})).size() == 4);
}

TEST_CASE("incidence structure") {
  for (auto [p, h] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{5u, 2u}}) {
    const Plane plane{Field(p, h)};
    const unsigned n = plane.order();
    CHECK(plane.size() == n * n + n + 1);
    for (std::uint32_t x = 0; x < plane.size(); ++x) {
      CHECK(plane.lines_through(x).size() == n + 1);
      CHECK(plane.points_on_line(x).size() == n + 1);
      for (auto l : plane.lines_through(x)) CHECK(plane.incident(x, l));
    }
    if (n > 9) continue;
    for (std::uint32_t a = 0; a < plane.size(); ++a) {
      for (std::uint32_t b = a + 1; b < plane.size(); ++b) {
        const auto l = plane.line_through(a, b);
        CHECK(plane.incident(a, l));
        CHECK(plane.incident(b, l));
        const auto m = plane.meet(a, b);
        CHECK(plane.incident(m, a));
        CHECK(plane.incident(m, b));
      }
    }
  }
}

TEST_CASE("every pair of points on exactly one line, n=25") {
  const Plane plane{Field(5, 2)};
  std::vector<std::uint32_t> count(static_cast<std::size_t>(plane.size()) * plane.size(), 0);
  for (std::uint32_t l = 0; l < plane.size(); ++l) {
    const auto pts = plane.points_on_line(l);
    for (auto a : pts) {
      for (auto b : pts) {
        if (a < b) ++count[static_cast<std::size_t>(a) * plane.size() + b];
      }
    }
  }
  bool all_one = true;
  for (std::uint32_t a = 0; a < plane.size(); ++a) {
    for (std::uint32_t b = a + 1; b < plane.size(); ++b) all_one = all_one && count[std::size_t{a} * plane.size() + b] == 1;
  }
  CHECK(all_one);
}

TEST_CASE("lines of PG(5,n)") {
  const Field f9(3, 2);
  const Vec6 p{1, 0, 0, 0, 0, 0};
  const Vec6 q{0, 0, 1, 2, 0, 5};
  const auto line = line_through(f9, p, q);
  const auto pts = points_on_line(f9, line);
  CHECK(pts.size() == 10);
  CHECK(line.first == index_of(9, pts[0]));
  CHECK(line.second == index_of(9, pts[1]));
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(index_of(9, pts[i - 1]) < index_of(9, pts[i]));
  CHECK(points_on_line(f9, q, p) == pts);
  CHECK(error_of([&] { line_through(f9, p, Vec6{2, 0, 0, 0, 0, 0}); }) == ErrorCode::CoincidentPoints);
}

TEST_CASE("collineations") {
  const Field f(5, 2);
  const Plane plane{Field(5, 2)};
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    CHECK(apply_collineation(f, identity3(), plane.point(i)) == plane.point(i));
  }
  CHECK(error_of([&] { apply_collineation(f, Mat3{}, Vec3{0, 0, 1}); }) == ErrorCode::SingularMatrix);

  SUBCASE("sigma with b'=1 is the identity") {
    const Elem b = 1;
    const Mat3 sigma{Vec3{1, 0, 0}, Vec3{0, b, 0}, Vec3{0, 0, *f.sqrt(b)}};
    CHECK(sigma == identity3());
  }

  SUBCASE("sigma carries E_b' onto E_1") {
    const Elem k = 7;  // a Case 1 parameter in GF(25)
    auto e = [&](Elem b) { return case1_conic(f, k, b); };
    for (Elem b = 2; b < 25; ++b) {
      if (!f.is_nonzero_square(b)) continue;
      const Mat3 sigma{Vec3{1, 0, 0}, Vec3{0, b, 0}, Vec3{0, 0, *f.sqrt(b)}};
      PointSet image = plane.empty_set();
      for (auto p : conic_point_indices(plane, e(b))) image.insert(plane.index(apply_collineation(f, sigma, plane.point(p))));
      CHECK(image == conic_points(plane, e(1)));
    }
  }

  SUBCASE("collinearity is preserved") {
    std::mt19937_64 rng(11);
    const Plane p49{Field(7, 2)};
    const Field& g = p49.field();
    for (int trial = 0; trial < 200; ++trial) {
      Mat3 m;
      do {
        for (auto& row : m)
          for (auto& e : row) e = static_cast<Elem>(rng() % 49);
      } while (det(g, m) == 0);
      const auto l = static_cast<std::uint32_t>(rng() % p49.size());
      const auto pts = p49.points_on_line(l);
      const Vec3 a = apply_collineation(g, m, p49.point(pts[0]));
      const Vec3 b = apply_collineation(g, m, p49.point(pts[1]));
      const Vec3 c = apply_collineation(g, m, p49.point(pts[2]));
      CHECK(dot(g, cross(g, a, b), c) == 0);
    }
  }

  SUBCASE("inverse") {
    const Mat3 m{Vec3{1, 2, 3}, Vec3{0, 1, 4}, Vec3{5, 6, 0}};
    REQUIRE(det(f, m) != 0);
    CHECK(mul(f, m, inverse(f, m)) == identity3());
    CHECK(error_of([&] { inverse(f, Mat3{Vec3{1, 1, 0}, Vec3{1, 1, 0}, Vec3{0, 0, 1}}); }) == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("point sets") {
  PointSet s(130);
  CHECK(s.empty());
  s.insert(129);
  s.insert(3);
  s.insert(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(129));
  CHECK_FALSE(s.contains(4));
  CHECK(s.indices() == std::vector<std::uint32_t>{3, 129});
}
