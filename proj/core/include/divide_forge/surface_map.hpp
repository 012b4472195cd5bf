#pragma once

// Combinatorial maps (rotation systems) on closed oriented surfaces.
//
// A map is given by two permutations of its darts: the rotation successor
// (counterclockwise order around each vertex) and a fixed-point-free
// involution pairing the two darts of every edge. Faces are the orbits of
//
//     face_next(d) = succ(pair(d)),
//
// i.e. cross the edge, then turn counterclockwise. Every other module that
// traces boundaries (divide regions, ribbon boundaries of the fiber) goes
// through this rule.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dforge {

using Dart = std::uint32_t;

class HalfEdgeMap {
 public:
  HalfEdgeMap() = default;

  /// Builds a map from counterclockwise vertex rotations and an edge
  /// involution indexed by dart. Darts must be labeled 0..n-1, each used once.
  /// Throws DuplicateDart, DartOutOfRange, UnpairedDart or FixedDart.
  static HalfEdgeMap build(std::span<const std::vector<Dart>> rotations,
                           std::span<const Dart> pairing);

  /// Same, with the serialized convention d <-> d ^ 1.
  static HalfEdgeMap build_xor_paired(std::span<const std::vector<Dart>> rotations);

  /// Builds a map from the rotation permutation itself. Vertices are numbered
  /// by their smallest dart.
  static HalfEdgeMap from_permutations(std::vector<Dart> rotation_successor,
                                       std::vector<Dart> pairing);

  std::size_t dart_count() const noexcept { return succ_.size(); }
  std::size_t vertex_count() const noexcept { return vertex_start_.size(); }
  std::size_t edge_count() const noexcept { return succ_.size() / 2; }

  Dart succ(Dart d) const { return succ_[d]; }
  Dart pred(Dart d) const { return pred_[d]; }
  Dart pair(Dart d) const { return pair_[d]; }
  Dart face_next(Dart d) const { return succ_[pair_[d]]; }
  std::uint32_t vertex_of(Dart d) const { return vertex_of_[d]; }
  std::size_t degree(std::uint32_t vertex) const;

  /// Rotation of one vertex, starting from the dart it was declared with.
  std::vector<Dart> rotation(std::uint32_t vertex) const;
  std::vector<std::vector<Dart>> rotations() const;

  std::span<const Dart> successors() const noexcept { return succ_; }
  std::span<const Dart> predecessors() const noexcept { return pred_; }
  std::span<const Dart> pairing() const noexcept { return pair_; }

  /// True when the pairing is d <-> d ^ 1 throughout.
  bool is_xor_paired() const noexcept;

  /// Orientation reversal: every rotation is read clockwise.
  HalfEdgeMap mirrored() const;

  /// Relabels dart d as new_label[d]; new_label must be a permutation.
  HalfEdgeMap relabeled(std::span<const Dart> new_label) const;

  std::size_t component_count() const;
  /// An empty map has no components and is reported as disconnected.
  bool connected() const { return component_count() == 1; }

  friend bool operator==(const HalfEdgeMap&, const HalfEdgeMap&) = default;

 private:
  std::vector<Dart> succ_;
  std::vector<Dart> pred_;
  std::vector<Dart> pair_;
  std::vector<std::uint32_t> vertex_of_;
  std::vector<Dart> vertex_start_;

  void index_vertices(std::span<const Dart> starts);
};

/// Face cycles plus the inverse lookup dart -> face index. Faces are ordered
/// by their smallest dart and each cycle starts at that dart.
struct FaceSet {
  std::vector<std::vector<Dart>> cycles;
  std::vector<std::uint32_t> face_of;

  std::size_t size() const noexcept { return cycles.size(); }
};

FaceSet trace_faces(const HalfEdgeMap& map);

/// Face cycles; throws Disconnected if require_connected and the map is not.
std::vector<std::vector<Dart>> faces(const HalfEdgeMap& map, bool require_connected = false);

/// V - E + F of a connected map. Throws Disconnected otherwise.
int euler_characteristic(const HalfEdgeMap& map);

/// (2 - chi) / 2. Throws Disconnected, or OddCharacteristic if chi is odd.
int genus(const HalfEdgeMap& map);

/// Byte encoding of a connected map that is minimal over all BFS relabelings
/// from every root dart in both orientations.
///
/// Layout: dart count (u16 big endian), then for each dart in BFS order the
/// labels of its rotation successor and its pair (u16 big endian each).
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& form) const noexcept;
};

CanonicalForm canonical_form(const HalfEdgeMap& map);

/// Inverse of the encoding above (returns the relabeled representative).
HalfEdgeMap decode(const CanonicalForm& form);

bool are_homeomorphic(const HalfEdgeMap& a, const HalfEdgeMap& b);

namespace detail {

/// Reusable scratch for computing minimal BFS codes without reallocating.
/// Used by the census hot loop; canonical_form() wraps it.
class BfsCoder {
 public:
  /// Minimal code over all roots; orientation_reversing adds mirrored roots.
  /// The result is written to `best` (2 * dart_count entries).
  void minimal_code(std::span<const Dart> succ, std::span<const Dart> pred,
                    std::span<const Dart> pair, bool orientation_reversing,
                    std::vector<std::uint16_t>& best);

  /// True when no root (orientation preserving) gives a code smaller than
  /// the one rooted at dart 0.
  bool root_is_minimal(std::span<const Dart> succ, std::span<const Dart> pair);

 private:
  std::vector<std::uint16_t> label_;
  std::vector<Dart> order_;
  std::vector<std::uint16_t> code_;

  // Returns -1, 0, +1 comparing the code rooted at `root` against `bound`;
  // when `bound` is empty the full code is written to code_.
  int encode(std::span<const Dart> rot, std::span<const Dart> pair, Dart root,
             std::span<const std::uint16_t> bound);
};

}  // namespace detail

}  // namespace dforge
