#include "divide_forge/map_generator.hpp"

#include <limits>
#include <vector>

#include "divide_forge/error.hpp"

namespace dforge {

namespace {

constexpr Dart kUnset = std::numeric_limits<Dart>::max();

// Builds maps directly in BFS-code order. Dart i is processed in two steps:
// choose succ(i) (an already labeled dart without a preimage, or the next new
// label), then pair(i) if still unset (a labeled, unprocessed, unpaired dart,
// or the next new label). Every labeling produced this way is the BFS
// labeling of its own root, so each rooted map appears exactly once.
class Generator {
 public:
  Generator(std::uint32_t edges, const RootedMapVisitor& visit, std::uint32_t shard,
            std::uint32_t shard_count)
      : n_(2 * edges),
        visit_(visit),
        shard_(shard),
        shard_count_(shard_count),
        split_depth_(3),
        succ_(n_, kUnset),
        pair_(n_, kUnset),
        has_pre_(n_, 0) {}

  void run() {
    // Small searches are not split; shard 0 takes them whole.
    if (n_ <= split_depth_ && shard_ != 0) return;
    next_ = 1;
    choose_succ(0);
  }

 private:
  std::uint32_t n_;
  const RootedMapVisitor& visit_;
  std::uint32_t shard_;
  std::uint32_t shard_count_;
  std::uint32_t split_depth_;
  std::uint64_t split_counter_ = 0;
  std::vector<Dart> succ_;
  std::vector<Dart> pair_;
  std::vector<std::uint8_t> has_pre_;
  Dart next_ = 0;

  void choose_succ(Dart i) {
    if (i == next_) {
      // Queue exhausted: complete only if every dart got a label.
      if (i == n_) visit_(succ_, pair_);
      return;
    }
    if (i == split_depth_ && n_ > split_depth_ && shard_count_ > 1) {
      if (split_counter_++ % shard_count_ != shard_) return;
    }
    for (Dart x = 0; x < next_; ++x) {
      if (has_pre_[x]) continue;
      succ_[i] = x;
      has_pre_[x] = 1;
      choose_pair(i);
      has_pre_[x] = 0;
    }
    if (next_ < n_) {
      const Dart x = next_++;
      succ_[i] = x;
      has_pre_[x] = 1;
      choose_pair(i);
      has_pre_[x] = 0;
      --next_;
    }
    succ_[i] = kUnset;
  }

  void choose_pair(Dart i) {
    if (pair_[i] != kUnset) {
      choose_succ(i + 1);
      return;
    }
    for (Dart x = i + 1; x < next_; ++x) {
      if (pair_[x] != kUnset) continue;
      pair_[i] = x;
      pair_[x] = i;
      choose_succ(i + 1);
      pair_[x] = kUnset;
    }
    if (next_ < n_) {
      const Dart x = next_++;
      pair_[i] = x;
      pair_[x] = i;
      choose_succ(i + 1);
      pair_[x] = kUnset;
      --next_;
    }
    pair_[i] = kUnset;
  }
};

}  // namespace

void for_each_rooted_map(std::uint32_t edges, const RootedMapVisitor& visit, std::uint32_t shard,
                         std::uint32_t shard_count) {
  if (shard_count == 0 || shard >= shard_count) {
    throw Error(Errc::InvalidArgument, "shard index out of range");
  }
  if (edges > 0x3FFF) throw Error(Errc::InvalidArgument, "too many edges");
  if (edges == 0) {
    // The vertex map: one vertex, no darts.
    if (shard == 0) visit({}, {});
    return;
  }
  Generator(edges, visit, shard, shard_count).run();
}

std::uint64_t count_rooted_maps(std::uint32_t edges) {
  std::uint64_t count = 0;
  for_each_rooted_map(edges, [&count](std::span<const Dart>, std::span<const Dart>) { ++count; });
  return count;
}

void medial_permutations(std::span<const Dart> succ, std::span<const Dart> pair,
                         std::span<Dart> medial_succ, std::span<Dart> medial_pair) {
  const std::size_t n = succ.size();
  if (medial_succ.size() != 2 * n || medial_pair.size() != 2 * n) {
    throw Error(Errc::InvalidArgument, "medial output has the wrong size");
  }
  // Medial darts (d, +) = 2d and (d, -) = 2d + 1. The medial vertex of the
  // edge {d, d'} has rotation (d', -), (d, +), (d, -), (d', +).
  auto plus = [](Dart d) { return 2 * d; };
  auto minus = [](Dart d) { return 2 * d + 1; };
  for (Dart d = 0; d < n; ++d) {
    const Dart e = pair[d];
    medial_succ[minus(e)] = plus(d);
    medial_succ[plus(d)] = minus(d);
    medial_pair[plus(d)] = minus(succ[d]);
    medial_pair[minus(succ[d])] = plus(d);
  }
}

HalfEdgeMap medial(const HalfEdgeMap& map) {
  const std::size_t n = map.dart_count();
  std::vector<Dart> s(2 * n), p(2 * n);
  medial_permutations(map.successors(), map.pairing(), s, p);
  return HalfEdgeMap::from_permutations(std::move(s), std::move(p));
}

}  // namespace dforge
