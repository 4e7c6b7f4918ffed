#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unitals/conic.hpp"
#include "unitals/exec.hpp"
#include "unitals/geom.hpp"
#include "unitals/veronese.hpp"

namespace unitals {

// ---- conics inside a point set -------------------------------------------

enum class ContainMethod {
  Auto,        // exhaustive for tiny planes, generator otherwise
  Generator,   // output-sensitive search seeded by triples of the set
  Exhaustive,  // every point of PG(5,n); the oracle
};

/// Every irreducible conic whose point set lies in s, canonical order.
/// Generator and Auto need odd characteristic.
std::vector<Conic> conics_contained(const Plane& plane, const PointSet& s,
                                    ContainMethod method = ContainMethod::Auto, Exec exec = Exec::Parallel);

// ---- pairs of conics -----------------------------------------------------

enum class PencilType { BitangentReal, BitangentConjugate, Hyperosculating, Other };

std::string to_string(PencilType t);

struct PencilReport {
  Conic c;
  Conic d;
  std::vector<std::uint32_t> common_points;
  PencilType ptype = PencilType::Other;
  std::optional<Conic> rank1_member;
  std::optional<Vec3> rank1_line;  // dual coordinates of l with rank1_member = l^2
  bool hypothesis_holds = false;   // no point of D \ C is external to C
  bool converse_holds = false;     // every point of C \ D is internal to D
};

PencilReport classify_pair(const Plane& plane, const Conic& c, const Conic& d);

/// The canonical pair of each kind: members (1, k), or (0, k) for Parabolic.
std::pair<Conic, Conic> canonical_pair(const Field& f, PencilKind kind, Elem k,
                                       std::optional<Elem> alpha = std::nullopt);

struct AfklReport {
  unsigned n = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t candidates = 0;       // irreducible D through the base point avoiding E(C0)
  std::uint64_t pairs_checked = 0;
  std::uint64_t hypothesis_pairs = 0;
  std::map<PencilType, std::uint64_t> by_type;
  std::vector<PencilReport> violations;  // hypothesis pairs of type Other
  // Hypothesis pairs where some point of C \ D is not internal to D. The
  // symmetric statement fails in general (C: 2xy = z^2, D: 2xy = k z^2 with k
  // and k-1 non-squares), so these are counted separately from violations.
  std::uint64_t converse_failures = 0;
  std::vector<PencilReport> converse_examples;  // the first few, in enumeration order
};

/// Checks that every pair (C, D) of irreducible conics with D \ C free of
/// external points of C spans a bitangent or hyperosculating pencil, and
/// records whether C \ D lies among the internal points of D.
///
/// C is fixed to 2xy = z^2 and D runs over every irreducible conic through the
/// smallest internal point of C with no external point of C; since the
/// stabilizer of C is transitive on internal points this is every pair up to
/// collineation. With samples > 0, that many pairs are drawn from the list and
/// moved by random collineations (seeded) before classification.
AfklReport verify_afkl(const Plane& plane, std::uint64_t samples = 0, std::uint64_t seed = 0,
                       Exec exec = Exec::Parallel);

// ---- point classes vs tangent counting -----------------------------------

struct PointClassReport {
  std::uint64_t on = 0;
  std::uint64_t external = 0;
  std::uint64_t internal = 0;
  std::uint64_t mismatches = 0;  // classify_point disagreeing with the tangent count
  bool counts_ok = false;        // n(n+1)/2 external and n(n-1)/2 internal
};

PointClassReport check_point_classes(const Plane& plane, const Conic& c);

// ---- difference sets -----------------------------------------------------

enum class ElementClass { NonzeroSquares, NonSquares, NonSquaresWithZero };

std::string to_string(ElementClass c);

struct DiffSetReport {
  ElementClass cls = ElementClass::NonzeroSquares;
  std::size_t max_size = 0;
  std::vector<std::vector<Elem>> witnesses;  // every set of size max_size, sorted
  std::optional<bool> all_maximal_are_cosets;
};

/// Largest sets of nonzero squares of GF(q^2) with non-square pairwise
/// differences.
DiffSetReport lemma1_search(const Field& f);

/// Maximum cliques of the "difference is a non-square" graph on the given
/// elements, by branch and bound.
std::vector<std::vector<Elem>> maximum_nonsquare_difference_sets(const Field& f, const std::vector<Elem>& domain);

/// Sets of size exactly `size` in the domain with non-square pairwise differences.
std::vector<std::vector<Elem>> nonsquare_difference_sets(const Field& f, const std::vector<Elem>& domain,
                                                         std::size_t size);

/// t*GF(q) for some non-square t (with or without the zero element).
bool is_nonsquare_coset(const Field& f, unsigned q, const std::vector<Elem>& x, bool with_zero);

struct Lemma2Report {
  unsigned q = 0;
  DiffSetReport strict;        // X inside the non-squares
  DiffSetReport zero_allowed;  // X inside {0} and the non-squares
  std::size_t strict_size_q = 0;         // witnesses of size q in the strict domain
  std::size_t zero_allowed_size_q = 0;   // witnesses of size q with 0 allowed
  bool coset_with_zero_holds = false;    // every size-q witness equals t*GF(q)
  bool coset_without_zero_holds = false; // every size-q witness minus 0 equals t*GF(q)*
  std::string convention;                // which reading is witnessed
};

Lemma2Report lemma2_search(const Field& f);

// ---- union of conics -----------------------------------------------------

struct Certificate {
  unsigned q = 0;
  std::vector<Conic> conics;
  bool covered = false;
  bool q_odd = false;
  std::string signature;  // "BEHS", "none"
  std::optional<std::uint32_t> base_point;
  bool all_hyperosculating = false;
  bool hypothesis_holds = false;
  std::optional<Mat3> frame;
  std::vector<Elem> parameters;  // k of each conic in the form x^2 - 2yz + k z^2, sorted
  std::optional<Elem> t;
  bool parameters_form_coset = false;
  // Even q: for every contained conic, the number of lines through its
  // nucleus that are tangent to the set.
  std::vector<std::uint32_t> nucleus_tangents;
};

/// Throws NotAUnital when s fails is_unital.
Certificate certify_union_of_conics(const Plane& plane, const PointSet& s, Exec exec = Exec::Parallel);

struct NucleusReport {
  unsigned q = 0;
  std::uint64_t conics_inside = 0;
  std::vector<std::uint32_t> nucleus_tangents;
  bool obstruction_holds = false;  // no irreducible conic lies in the unital
};

/// Exhaustive search for irreducible conics inside the Hermitian unital, q even.
NucleusReport nucleus_obstruction(const Plane& plane, Exec exec = Exec::Parallel);

// ---- the Veronese side of Cases 1-3 --------------------------------------

/// Case 1 points (1-k, (1-k)b^2, 2kb, -(k+1)b, 0, 0), b != 0, normalized and sorted.
std::vector<Vec6> case1_closed_form(const Field& f, Elem k);

/// Case 2 points (alpha-kb^2, alpha(b^2-alpha k), k(b^2-alpha), alpha b(1-k), 0, 0),
/// b != 0, with (k,-alpha,-k,0,0,0) and P(x^2 - alpha k y^2 = k z^2), sorted.
std::vector<Vec6> case2_closed_form(const Field& f, Elem k, std::optional<Elem> alpha = std::nullopt);

/// The conic E_b of Case 1 for parameter b.
Conic case1_conic(const Field& f, Elem k, Elem b);

/// True when the line P(E_1)P(E_beta) of PG(5,n) misses V.
bool case1_line_misses_veronese(const Field& f, Elem k, Elem beta);

/// A point of E_b that is external to 2xy = z^2, if any.
std::optional<std::uint32_t> case1_external_point(const Plane& plane, Elem k, Elem b);

struct ResidualCheck {
  PencilKind kind = PencilKind::Hyperbolic;
  Elem k = 0;
  std::vector<Vec6> residual;
  std::vector<Vec6> expected;
  bool matches = false;
};

ResidualCheck check_residual(const Field& f, PencilKind kind, Elem k, std::optional<Elem> alpha = std::nullopt,
                             ResidualMethod method = ResidualMethod::Sweep, Exec exec = Exec::Parallel);

}  // namespace unitals
