#pragma once

// Divides: generic immersions of circles, stored as 4-valent cellular maps.
//
// Strands go straight through a double point: a strand that enters a vertex
// at rotation position p leaves at position p + 2 (mod 4).

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divide_forge/surface_map.hpp"

namespace dforge {

/// One immersed circle. `darts` lists, in traversal order, the dart at which
/// the circle enters each double point it visits; it is empty for a
/// vertex-free (free) loop.
struct Circle {
  std::vector<Dart> darts;

  std::size_t double_point_visits() const noexcept { return darts.size(); }

  friend bool operator==(const Circle&, const Circle&) = default;
};

class Divide {
 public:
  /// Every vertex of `map` must have degree 4 (NotFourValent otherwise).
  explicit Divide(HalfEdgeMap map, std::uint32_t free_loops = 0);

  /// The single embedded circle on the sphere.
  static Divide free_loop() { return Divide(HalfEdgeMap{}, 1); }

  const HalfEdgeMap& map() const noexcept { return map_; }
  std::uint32_t free_loops() const noexcept { return free_loops_; }

  /// v(P)
  std::size_t double_points() const noexcept { return map_.vertex_count(); }
  /// c(P)
  std::size_t circle_count() const noexcept { return circles_.size(); }
  const std::vector<Circle>& circles() const noexcept { return circles_; }
  /// Circle through each dart (both directions of travel map to the same index).
  std::uint32_t circle_of(Dart d) const { return circle_of_[d]; }

  bool connected() const noexcept;

  /// Ambient surface genus; 0 for the free loop. Throws Disconnected.
  int ambient_genus() const;

  friend bool operator==(const Divide&, const Divide&) = default;

 private:
  HalfEdgeMap map_;
  std::uint32_t free_loops_ = 0;
  std::vector<Circle> circles_;
  std::vector<std::uint32_t> circle_of_;
};

/// Circles of the divide (strand orbits), free loops appended.
std::vector<Circle> trace_circles(const Divide& divide);

enum class Color : std::uint8_t { White, Black };

/// Black-and-white coloring of the regions of a divide.
struct Coloring {
  FaceSet faces;
  std::vector<Color> face_color;

  Color color_of_face(std::uint32_t face) const { return face_color[face]; }
  /// Color of the region containing the clockwise corner at d.
  Color color_of_dart(Dart d) const { return face_color[faces.face_of[d]]; }
  std::size_t count(Color c) const;
};

/// Two-colors the regions. The region containing dart 0 is white unless
/// swap_colors is set. For the free loop the outside (face 0) is white and the
/// inside (face 1) black. Throws NotBipartite.
Coloring checkerboard(const Divide& divide, bool swap_colors = false);

struct AdmissibilityReport {
  bool connected = false;
  /// Always true: a divide is stored by its cellular embedding.
  bool faces_are_disks = true;
  bool colorable = false;

  bool admissible() const noexcept { return connected && faces_are_disks && colorable; }
  /// Short failure list such as "disconnected" or "not colorable"; empty if admissible.
  std::string failures() const;
};

AdmissibilityReport validate_admissible(const Divide& divide);

/// Throws NotAdmissible with the report's failure list unless admissible.
void require_admissible(const Divide& divide);

/// Gamma(P): one vertex per circle, one edge per double point.
struct DualGraph {
  std::size_t vertex_count = 0;
  /// Edge i joins the circles through double point i (equal for self-crossings).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t degree(std::uint32_t circle) const;
  bool is_cycle() const;
};

DualGraph dual_graph(const Divide& divide);

/// Canonical form of the divide up to homeomorphism (relabeling and reflection).
/// First byte is the free loop count, the rest is the map's canonical form.
CanonicalForm canonical_form(const Divide& divide);
Divide decode_divide(const CanonicalForm& form);

bool are_homeomorphic(const Divide& a, const Divide& b);

}  // namespace dforge
