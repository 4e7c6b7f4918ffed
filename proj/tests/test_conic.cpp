#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unitals/conic.hpp"

using namespace unitals;
using test::error_of;

namespace {

const Field& gf9() {
  static const Field f(3, 2);
  return f;
}

Conic hyperbola(const Field& f) { return canonical_pencil(f, PencilKind::Hyperbolic, 1); }
Conic parabola(const Field& f) { return canonical_pencil(f, PencilKind::Parabolic, 0); }

// Tangent lines through p, counted by intersection size.
unsigned tangents_through(const Plane& plane, const PointSet& on, std::uint32_t p) {
  unsigned t = 0;
  for (auto l : plane.lines_through(p)) {
    unsigned k = 0;
    for (auto x : plane.points_on_line(l)) k += on.contains(x);
    t += k == 1;
  }
  return t;
}

}  // namespace

TEST_CASE("evaluation") {
  const Field& f = gf9();
  CHECK(hyperbola(f).c == Vec6{0, 0, f.neg(1), 1, 0, 0});
  CHECK(conic_eval(f, hyperbola(f), Vec3{1, 0, 0}) == 0);
  CHECK(conic_eval(f, hyperbola(f), Vec3{0, 1, 0}) == 0);
  CHECK(conic_eval(f, hyperbola(f), Vec3{0, 0, 1}) == f.neg(1));
  CHECK(conic_eval(f, parabola(f), Vec3{0, 1, 0}) == 0);
  const Vec3 p{1, 2, 5};
  CHECK(conic_eval(f, Conic{{0, 0, 0, 1, 0, 0}}, p) == f.mul(f.two(), 2));
}

TEST_CASE("matrix, determinant and rank") {
  const Field& f = gf9();
  CHECK(conic_det(f, hyperbola(f)) == 1);
  CHECK(conic_rank(f, hyperbola(f)) == 3);
  const Elem alpha = f.first_nonsquare();
  CHECK(conic_det(f, canonical_pencil(f, PencilKind::Elliptic, 1)) == alpha);
  CHECK(conic_det(f, canonical_pencil(f, PencilKind::Elliptic, 4)) == f.mul(alpha, 4));
  CHECK(conic_rank(f, Conic{{0, 0, 1, 0, 0, 0}}) == 1);
  CHECK(conic_rank(f, Conic{{0, 0, 0, 1, 0, 0}}) == 2);
  CHECK(conic_rank(f, parabola(f)) == 3);
  CHECK(error_of([&] { conic_rank(f, Conic{}); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { conic_matrix(Field(2, 2), Conic{{1, 0, 0, 0, 0, 1}}); }) ==
        ErrorCode::EvenCharacteristicUnsupported);
  CHECK(error_of([&] { canonical_pencil(f, PencilKind::Elliptic, 1, Elem{1}); }) == ErrorCode::AlphaIsSquare);
}

TEST_CASE("point sets") {
  for (auto [p, h] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{5u, 2u}}) {
    const Plane plane{Field(p, h)};
    const Field& f = plane.field();
    const unsigned n = plane.order();
    CHECK(conic_point_indices(plane, hyperbola(f)).size() == n + 1);
    CHECK(conic_point_indices(plane, parabola(f)).size() == n + 1);
    CHECK(conic_point_indices(plane, canonical_pencil(f, PencilKind::Elliptic, 1)).size() == n + 1);

    const auto line = conic_point_indices(plane, Conic{{0, 0, 1, 0, 0, 0}});
    CHECK(line.size() == n + 1);
    for (auto i : line) CHECK(plane.point(i)[2] == 0);

    CHECK(conic_point_indices(plane, Conic{{0, 0, 0, 1, 0, 0}}).size() == 2 * n + 1);
    // x^2 - alpha y^2 is a pair of conjugate lines meeting in one point.
    CHECK(conic_point_indices(plane, Conic{{1, f.neg(f.first_nonsquare()), 0, 0, 0, 0}}).size() == 1);
  }
}

TEST_CASE("scaling and normalization") {
  const Field& f = gf9();
  const Conic c = hyperbola(f);
  Conic d = c;
  for (auto& e : d.c) e = f.mul(e, 5);
  CHECK(same_conic(f, c, d));
  CHECK(normalized(f, d) == normalized(f, c));
  CHECK(conic_index(f, c) == conic_index(f, d));
  CHECK(conic_det(f, d) == f.mul(f.pow(5, 3), conic_det(f, c)));
  const Plane plane{Field(3, 2)};
  CHECK(conic_points(plane, c) == conic_points(plane, d));
}

TEST_CASE("point classes agree with tangent counting") {
  const Plane plane{Field(3, 2)};
  const Field& f = plane.field();
  const Conic c = hyperbola(f);
  CHECK(classify_point(f, c, Vec3{0, 0, 1}) == PointClass::External);
  CHECK(classify_point(f, c, Vec3{1, 0, 0}) == PointClass::OnConic);

  std::mt19937_64 rng(3);
  std::vector<Conic> conics{c, parabola(f), canonical_pencil(f, PencilKind::Elliptic, 1)};
  while (conics.size() < 10) {
    Conic r;
    for (auto& e : r.c) e = static_cast<Elem>(rng() % 9);
    if (r.c != Vec6{} && is_irreducible(f, r)) conics.push_back(r);
  }
  for (const auto& k : conics) {
    const PointSet on = conic_points(plane, k);
    unsigned ext = 0, in = 0;
    for (std::uint32_t p = 0; p < plane.size(); ++p) {
      const PointClass cls = classify_point(f, k, plane.point(p));
      if (on.contains(p)) {
        CHECK(cls == PointClass::OnConic);
        continue;
      }
      const unsigned t = tangents_through(plane, on, p);
      CHECK(t != 1);
      CHECK((cls == PointClass::External) == (t == 2));
      ext += cls == PointClass::External;
      in += cls == PointClass::Internal;
    }
    CHECK(ext == 45);
    CHECK(in == 36);
  }
  CHECK(error_of([&] { classify_point(f, Conic{{0, 0, 1, 0, 0, 0}}, Vec3{1, 0, 0}); }) == ErrorCode::SingularConic);
}

TEST_CASE("tangents") {
  const Field& f = gf9();
  CHECK(tangent_line_at(f, hyperbola(f), Vec3{1, 0, 0}) == Vec3{0, 1, 0});
  CHECK(tangent_line_at(f, hyperbola(f), Vec3{0, 1, 0}) == Vec3{1, 0, 0});
  CHECK(tangent_line_at(f, parabola(f), Vec3{0, 1, 0}) == Vec3{0, 0, 1});
  CHECK(error_of([&] { tangent_line_at(f, hyperbola(f), Vec3{0, 0, 1}); }) == ErrorCode::PointNotOnConic);

  const Plane plane{Field(3, 2)};
  const auto pts = conic_point_indices(plane, hyperbola(f));
  const PointSet on = conic_points(plane, hyperbola(f));
  for (auto p : pts) {
    const std::uint32_t l = plane.index(tangent_line_at(f, hyperbola(f), plane.point(p)));
    unsigned k = 0;
    for (auto x : plane.points_on_line(l)) k += on.contains(x);
    CHECK(k == 1);
    CHECK(plane.incident(p, l));
  }
}

TEST_CASE("nucleus in even characteristic") {
  for (unsigned h : {1u, 2u, 3u}) {
    const Plane plane{Field(2, h)};
    const Field& f = plane.field();
    const Conic c{{1, 0, 0, 0, 0, 1}};  // x^2 + yz
    REQUIRE(is_irreducible(f, c));
    const auto pts = conic_point_indices(plane, c);
    CHECK(pts.size() == plane.order() + 1);
    const Vec3 nu = nucleus(f, c);
    CHECK(nu == Vec3{1, 0, 0});
    for (auto p : pts) CHECK(dot(f, tangent_line_at(f, c, plane.point(p)), nu) == 0);
    // pairwise intersections of tangents all give the nucleus
    const Vec3 t0 = tangent_line_at(f, c, plane.point(pts[0]));
    for (std::size_t i = 1; i < pts.size(); ++i) {
      CHECK(normalized(f, cross(f, t0, tangent_line_at(f, c, plane.point(pts[i])))) == nu);
    }
  }
  const Field f4(2, 2);
  CHECK_FALSE(is_irreducible(f4, Conic{{1, 0, 0, 0, 0, 0}}));
  CHECK_FALSE(is_irreducible(f4, Conic{{0, 0, 0, 1, 0, 0}}));
  CHECK(error_of([&] { nucleus(f4, Conic{{1, 0, 0, 0, 0, 0}}); }) == ErrorCode::NotIrreducible);
  CHECK(error_of([] { nucleus(gf9(), hyperbola(gf9())); }) == ErrorCode::OddCharacteristic);
}

TEST_CASE("canonical pencils") {
  const Plane plane{Field(3, 2)};
  const Field& f = plane.field();
  CHECK(same_conic(f, canonical_pencil(f, PencilKind::Hyperbolic, 1), Conic{{0, 0, 2, 1, 0, 0}}));
  CHECK(same_conic(f, canonical_pencil(f, PencilKind::Parabolic, 0), Conic{{f.neg(1), 0, 0, 0, 0, 1}}));

  SUBCASE("members of the elliptic pencil are disjoint") {
    PointSet seen = plane.empty_set();
    std::size_t total = 0;
    for (Elem k = 1; k < 9; ++k) {
      for (auto p : conic_point_indices(plane, canonical_pencil(f, PencilKind::Elliptic, k))) {
        CHECK_FALSE(seen.contains(p));
        seen.insert(p);
        ++total;
      }
    }
    CHECK(total == 8 * 10);
  }

  SUBCASE("admissible parameters") {
    for (auto kind : {PencilKind::Hyperbolic, PencilKind::Elliptic, PencilKind::Parabolic}) {
      const auto ks = admissible_ks(f, kind);
      CHECK_FALSE(ks.empty());
      for (auto k : ks) CHECK(f.quadratic_character(k) != QuadChar::Zero);
    }
    CHECK(admissible_ks(f, PencilKind::Parabolic).size() == 4);
  }
}

TEST_CASE("substitution and transforms") {
  const Plane plane{Field(5, 2)};
  const Field& f = plane.field();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Mat3 m;
    do {
      for (auto& row : m)
        for (auto& e : row) e = static_cast<Elem>(rng() % 25);
    } while (det(f, m) == 0);
    const Conic c = canonical_pencil(f, PencilKind::Elliptic, 3);
    PointSet image = plane.empty_set();
    for (auto p : conic_point_indices(plane, c)) image.insert(plane.index(apply_collineation(f, m, plane.point(p))));
    CHECK(conic_points(plane, transform(f, c, m)) == image);
  }
}

TEST_CASE("conics through points") {
  const Field& f = gf9();
  std::vector<Vec3> on;
  const Plane plane{Field(3, 2)};
  for (auto p : conic_point_indices(plane, hyperbola(f))) on.push_back(plane.point(p));
  const std::vector<Vec3> first5(on.begin(), on.begin() + 5);
  const auto basis = conics_through(f, first5);
  REQUIRE(basis.size() == 1);
  CHECK(same_conic(f, basis[0], hyperbola(f)));
  CHECK(conics_through(f, std::vector<Vec3>(on.begin(), on.begin() + 4)).size() == 2);
}
