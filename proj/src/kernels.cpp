#include "unitals/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "unitals/linalg.hpp"
#include "unitals/veronese.hpp"

namespace unitals {

void set_workers(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

int workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {

// Runs body(lo, hi, out) over [begin, end) in fixed-size chunks and
// concatenates the per-chunk outputs in chunk order.
template <class T, class Body>
std::vector<T> run_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk, Exec exec, Body&& body) {
  if (end <= begin) return {};
  const std::int64_t nchunks = static_cast<std::int64_t>((end - begin + chunk - 1) / chunk);
  std::vector<std::vector<T>> parts(nchunks);
  auto one = [&](std::int64_t i) {
    const std::uint64_t lo = begin + static_cast<std::uint64_t>(i) * chunk;
    body(lo, std::min(end, lo + chunk), parts[i]);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < nchunks; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < nchunks; ++i) one(i);
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Next normalized vector in canonical order.
template <std::size_t N>
void advance(Coords<N>& v, unsigned n) noexcept {
  std::size_t lead = 0;
  while (v[lead] == 0) ++lead;
  for (std::size_t j = N; j-- > lead + 1;) {
    if (++v[j] < n) return;
    v[j] = 0;
  }
  v[lead] = 0;
  if (lead > 0) v[lead - 1] = 1;
}

Elem dot6(const Field& f, const Vec6& a, const Vec6& b) noexcept {
  Elem s = f.mul(a[0], b[0]);
  for (std::size_t i = 1; i < 6; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::vector<Vec6> monomial_table(const Plane& plane, const std::vector<std::uint32_t>& pts) {
  std::vector<Vec6> out;
  out.reserve(pts.size());
  for (auto p : pts) out.push_back(monomials(plane.field(), plane.point(p)));
  return out;
}

bool vanishes_somewhere(const Field& f, const Vec6& c, const std::vector<Vec6>& mono) noexcept {
  for (const auto& m : mono) {
    if (dot6(f, c, m) == 0) return true;
  }
  return false;
}

void sort_conics(const Field& f, std::vector<Conic>& conics) {
  for (auto& c : conics) c = normalized(f, c);
  std::sort(conics.begin(), conics.end(), [&](const Conic& a, const Conic& b) {
    return index_of(f.order(), a.c) < index_of(f.order(), b.c);
  });
}

constexpr std::uint64_t kSweepChunk = 1u << 15;

}  // namespace

std::vector<std::uint32_t> line_counts(const Plane& plane, const PointSet& s, Exec exec) {
  std::vector<std::uint32_t> out(plane.size(), 0);
  const std::int64_t lines = plane.size();
  auto body = [&](std::int64_t l) {
    std::uint32_t k = 0;
    for (auto p : plane.points_on_line(static_cast<std::uint32_t>(l))) k += s.contains(p);
    out[l] = k;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t l = 0; l < lines; ++l) body(l);
  } else {
    for (std::int64_t l = 0; l < lines; ++l) body(l);
  }
  return out;
}

std::vector<Vec6> residual_sweep(const Field& f, const Conic& c, const Conic& d, std::uint64_t begin,
                                 std::uint64_t end, Exec exec) {
  const unsigned n = f.order();
  const ConeTest tc(f, c);
  const ConeTest td(f, d);
  const auto line = points_on_line(f, c.c, d.c);
  return run_chunks<Vec6>(begin, end, kSweepChunk, exec, [&](std::uint64_t lo, std::uint64_t hi, auto& out) {
    Vec6 v = point_at<6>(n, lo);
    for (std::uint64_t i = lo; i < hi; ++i, advance(v, n)) {
      if (!tc.contains(v) || is_on_veronese(f, v) || !td.contains(v)) continue;
      if (std::find(line.begin(), line.end(), v) != line.end()) continue;
      out.push_back(v);
    }
  });
}

std::vector<Vec6> residual_sweep_reference(const Field& f, const Conic& c, const Conic& d, std::uint64_t begin,
                                           std::uint64_t end) {
  const unsigned n = f.order();
  const auto line = points_on_line(f, c.c, d.c);
  std::vector<Vec6> out;
  for (std::uint64_t i = begin; i < end; ++i) {
    const Vec6 v = point_at<6>(n, i);
    if (is_on_veronese(f, v) || std::find(line.begin(), line.end(), v) != line.end()) continue;
    if (cone_contains(f, c, v) && cone_contains(f, d, v)) out.push_back(v);
  }
  return out;
}

std::vector<Conic> contained_conics_exhaustive(const Plane& plane, const PointSet& s, Exec exec) {
  const Field& f = plane.field();
  const unsigned n = f.order();
  std::vector<std::uint32_t> outside;
  for (std::uint32_t p = 0; p < plane.size(); ++p) {
    if (!s.contains(p)) outside.push_back(p);
  }
  if (s.size() < n + 1) return {};
  const auto mono = monomial_table(plane, outside);
  auto found = run_chunks<Conic>(0, projective_count(n, 5), kSweepChunk, exec,
                                 [&](std::uint64_t lo, std::uint64_t hi, auto& out) {
                                   Vec6 v = point_at<6>(n, lo);
                                   for (std::uint64_t i = lo; i < hi; ++i, advance(v, n)) {
                                     if (vanishes_somewhere(f, v, mono)) continue;
                                     const Conic c{v};
                                     if (is_irreducible(f, c)) out.push_back(c);
                                   }
                                 });
  sort_conics(f, found);
  return found;
}

std::vector<Conic> contained_conics_generator(const Plane& plane, const PointSet& s, Exec exec) {
  const Field& f = plane.field();
  const unsigned n = f.order();
  const auto pts = s.indices();
  const std::int64_t m = static_cast<std::int64_t>(pts.size());
  const std::uint32_t need = n - 2;
  if (pts.size() < n + 1) return {};
  const auto mono = monomial_table(plane, pts);

  std::vector<std::vector<Conic>> parts(m);
  auto outer = [&](std::int64_t i) {
    std::vector<std::uint32_t> stamp(plane.size(), 0);
    std::vector<std::uint32_t> count(plane.size(), 0);
    std::uint32_t gen = 0;
    std::vector<std::uint32_t> hits;
    const Vec3& a = plane.point(pts[i]);
    for (std::int64_t j = i + 1; j < m; ++j) {
      const Vec3& b = plane.point(pts[j]);
      const Vec3 ab = cross(f, a, b);
      for (std::int64_t k = j + 1; k < m; ++k) {
        if (static_cast<std::uint32_t>(m - k - 1) < need) break;
        const Vec3& c = plane.point(pts[k]);
        if (dot(f, ab, c) == 0) continue;
        std::vector<Row> rows{Row(mono[i].begin(), mono[i].end()), Row(mono[j].begin(), mono[j].end()),
                              Row(mono[k].begin(), mono[k].end())};
        const auto basis = null_space(f, std::move(rows), 6);
        Vec6 b0, b1, b2;
        std::copy(basis[0].begin(), basis[0].end(), b0.begin());
        std::copy(basis[1].begin(), basis[1].end(), b1.begin());
        std::copy(basis[2].begin(), basis[2].end(), b2.begin());
        ++gen;
        hits.clear();
        for (std::int64_t r = k + 1; r < m; ++r) {
          const Vec3 line{dot6(f, mono[r], b0), dot6(f, mono[r], b1), dot6(f, mono[r], b2)};
          for (auto mu : plane.points_on_line(plane.index_any(line))) {
            if (stamp[mu] != gen) {
              stamp[mu] = gen;
              count[mu] = 0;
            }
            if (++count[mu] == need) hits.push_back(mu);
          }
        }
        for (auto mu : hits) {
          const Vec3& w = plane.point(mu);
          Conic cand;
          for (std::size_t t = 0; t < 6; ++t) {
            cand.c[t] = f.add(f.add(f.mul(w[0], b0[t]), f.mul(w[1], b1[t])), f.mul(w[2], b2[t]));
          }
          if (is_irreducible(f, cand)) parts[i].push_back(cand);
        }
      }
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < m; ++i) outer(i);
  } else {
    for (std::int64_t i = 0; i < m; ++i) outer(i);
  }
  std::vector<Conic> found;
  for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
  sort_conics(f, found);
  return found;
}

std::vector<Conic> conics_through_avoiding(const Plane& plane, std::uint32_t p0,
                                           const std::vector<std::uint32_t>& forbidden, Exec exec) {
  const Field& f = plane.field();
  const unsigned n = f.order();
  const Vec6 w = monomials(f, plane.point(p0));
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  const Elem scale = f.neg(f.inv(w[pivot]));
  const auto mono = monomial_table(plane, forbidden);
  auto found = run_chunks<Conic>(0, projective_count(n, 4), kSweepChunk, exec,
                                 [&](std::uint64_t lo, std::uint64_t hi, auto& out) {
                                   Coords<5> u = point_at<5>(n, lo);
                                   for (std::uint64_t i = lo; i < hi; ++i, advance(u, n)) {
                                     Vec6 c;
                                     Elem acc = 0;
                                     for (std::size_t t = 0, s = 0; t < 6; ++t) {
                                       if (t == pivot) continue;
                                       c[t] = u[s++];
                                       acc = f.add(acc, f.mul(w[t], c[t]));
                                     }
                                     c[pivot] = f.mul(scale, acc);
                                     if (vanishes_somewhere(f, c, mono)) continue;
                                     const Conic cand{c};
                                     if (is_irreducible(f, cand)) out.push_back(cand);
                                   }
                                 });
  sort_conics(f, found);
  return found;
}

}  // namespace kernels
}  // namespace unitals
