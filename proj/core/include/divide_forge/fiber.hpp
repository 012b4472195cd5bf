#pragma once

// The regular fiber of the Lefschetz fibration of an admissible divide, built
// as a ribbon graph, with its ordered vanishing cycles and monodromy.
//
// Ribbon graph layout. Every dart d of the divide owns one node of the ribbon
// graph carrying three ribbon darts:
//
//   band(d)     = 3d      the twisted band along the divide edge of d
//   forward(d)  = 3d + 1  roundabout arc towards succ(d)
//   backward(d) = 3d + 2  roundabout arc towards pred(d)
//
// with pairings band(d) <-> band(pair(d)) and forward(d) <-> backward(succ(d)).
// The four forward arcs around a double point form its roundabout. The cyclic
// order at node d is (band, forward, backward) when the corner between d and
// succ(d) is black and (band, backward, forward) otherwise; since corner
// colors alternate, every band joins nodes of opposite order, which is what
// makes the bands twisted. Boundary walks then run straight through every
// double point, two per circle of the divide.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "divide_forge/divide.hpp"

namespace dforge {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

namespace ribbon {
constexpr Dart band(Dart d) { return 3 * d; }
constexpr Dart forward(Dart d) { return 3 * d + 1; }
constexpr Dart backward(Dart d) { return 3 * d + 2; }
}  // namespace ribbon

struct FiberComplex {
  /// Nodes are vertices, ribbons are edges; faces are boundary components.
  HalfEdgeMap ribbon;
  /// Per double point, the forward darts of its roundabout in rotation order.
  std::vector<std::array<Dart, 4>> roundabouts;
  /// Per divide edge, its two band darts.
  std::vector<std::pair<Dart, Dart>> bands;
  std::vector<std::vector<Dart>> boundary_cycles;
  /// Boundary component on each side of each ribbon dart.
  std::vector<std::uint32_t> boundary_of;

  int euler_characteristic() const;
  std::size_t boundary_count() const noexcept { return boundary_cycles.size(); }
  int genus() const;
  /// True for the bare annulus of the free loop.
  bool is_annulus() const noexcept { return roundabouts.empty(); }
};

/// Throws NotAdmissible.
FiberComplex build_fiber(const Divide& divide, const Coloring& coloring);

enum class CycleFamily : std::uint8_t { Alpha, Beta, Gamma };

/// A closed edge path on the ribbon graph: the dart used to leave each node.
struct VanishingCycle {
  CycleFamily family = CycleFamily::Alpha;
  /// White face (alpha), double point (beta) or black face (gamma) index.
  std::uint32_t source = 0;
  std::vector<Dart> walk;
};

struct VanishingCycleSet {
  std::vector<VanishingCycle> alphas;
  std::vector<VanishingCycle> betas;
  std::vector<VanishingCycle> gammas;

  /// alpha_1..alpha_m0, beta_1..beta_m1, gamma_1..gamma_m2
  std::vector<VanishingCycle> ordered() const;
  std::size_t size() const noexcept { return alphas.size() + betas.size() + gammas.size(); }
};

VanishingCycleSet vanishing_cycles(const Divide& divide, const Coloring& coloring);

enum class TwistConvention : std::uint8_t {
  Positive,  // monodromy on the unit cotangent bundle
  Negative,  // the achiral picture on the unit tangent bundle
};

struct Twist {
  std::uint32_t cycle = 0;  // index into VanishingCycleSet::ordered()
  int sign = 1;

  friend bool operator==(const Twist&, const Twist&) = default;
};

struct MonodromyWord {
  std::vector<Twist> twists;

  std::size_t length() const noexcept { return twists.size(); }
};

/// Throws NotAdmissible.
MonodromyWord monodromy_word(const Divide& divide,
                             TwistConvention convention = TwistConvention::Positive);

/// Algebraic intersection number of two closed walks on the ribbon surface.
std::int64_t intersection_number(const HalfEdgeMap& ribbon, std::span<const Dart> a,
                                 std::span<const Dart> b);

/// Intersection numbers among the ordered vanishing cycles.
IntMatrix intersection_matrix(const FiberComplex& fiber, const VanishingCycleSet& cycles);

/// Basis of H1 of the fiber: one fundamental cycle per non-tree ribbon of a
/// BFS spanning tree rooted at node 0.
struct HomologyBasis {
  /// Smaller dart of each non-tree ribbon; its direction is positive.
  std::vector<Dart> generators;
  std::vector<std::vector<Dart>> cycles;
  /// Intersection form on the basis.
  IntMatrix form;

  std::size_t rank() const noexcept { return generators.size(); }
  /// Throws BasisMismatch if the walk is not a closed walk on the ribbon graph.
  IntVector coordinates(const HalfEdgeMap& ribbon, std::span<const Dart> walk) const;

  std::vector<std::int64_t> generator_index;
};

HomologyBasis homology_basis(const FiberComplex& fiber);

/// Matrix of x -> x + sign * <x, c> c.
IntMatrix transvection(const HomologyBasis& basis, const IntVector& c, int sign = 1);

/// Product of the transvections of the word, first twist applied first.
/// Throws BasisMismatch when the word or cycles do not live on this fiber.
IntMatrix homological_monodromy(const FiberComplex& fiber, const VanishingCycleSet& cycles,
                                const MonodromyWord& word);
/// Same, reusing a basis computed by homology_basis(fiber).
IntMatrix homological_monodromy(const FiberComplex& fiber, const HomologyBasis& basis,
                                const VanishingCycleSet& cycles, const MonodromyWord& word);

}  // namespace dforge
