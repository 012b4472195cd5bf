#pragma once

// Exhaustive generation of rooted maps of every orientable genus, and the
// medial construction that turns a map into a checkerboard-colorable divide.

#include <cstdint>
#include <functional>
#include <span>

#include "divide_forge/surface_map.hpp"

namespace dforge {

using RootedMapVisitor = std::function<void(std::span<const Dart> succ, std::span<const Dart> pair)>;

/// Visits every connected rooted map with `edges` edges exactly once, in its
/// BFS labeling from the root (dart 0). The spans are only valid during the
/// call. Work is split into `shard_count` disjoint shards at a shallow depth
/// of the search tree; shard `shard` is visited.
void for_each_rooted_map(std::uint32_t edges, const RootedMapVisitor& visit,
                         std::uint32_t shard = 0, std::uint32_t shard_count = 1);

std::uint64_t count_rooted_maps(std::uint32_t edges);

/// Medial map: one 4-valent vertex per edge of `map`, strands turning around
/// the vertices and faces of `map`. The medial of a connected map is the
/// divide whose black regions are the vertices of `map` and whose white
/// regions are its faces. Writes 4 * map darts into the output spans.
void medial_permutations(std::span<const Dart> succ, std::span<const Dart> pair,
                         std::span<Dart> medial_succ, std::span<Dart> medial_pair);

HalfEdgeMap medial(const HalfEdgeMap& map);

}  // namespace dforge
