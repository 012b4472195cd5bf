#include "divide_forge/fiber.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "divide_forge/error.hpp"

namespace dforge {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

HalfEdgeMap annulus_ribbon() {
  const std::vector<std::vector<Dart>> rot{{0, 1}};
  const std::vector<Dart> pairing{1, 0};
  return HalfEdgeMap::build(rot, pairing);
}

void check_walk(const HalfEdgeMap& ribbon, std::span<const Dart> walk) {
  if (walk.empty()) throw Error(Errc::BasisMismatch, "empty walk");
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Dart d = walk[i];
    const Dart next = walk[(i + 1) % walk.size()];
    if (d >= ribbon.dart_count() || next >= ribbon.dart_count()) {
      throw Error(Errc::BasisMismatch, "walk uses a dart outside the fiber");
    }
    if (ribbon.vertex_of(ribbon.pair(d)) != ribbon.vertex_of(next)) {
      throw Error(Errc::BasisMismatch, "walk is not closed at step " + std::to_string(i));
    }
  }
}

}  // namespace

int FiberComplex::euler_characteristic() const {
  return static_cast<int>(ribbon.vertex_count()) - static_cast<int>(ribbon.edge_count());
}

int FiberComplex::genus() const {
  return (2 - euler_characteristic() - static_cast<int>(boundary_count())) / 2;
}

FiberComplex build_fiber(const Divide& divide, const Coloring& coloring) {
  require_admissible(divide);
  FiberComplex fiber;
  const HalfEdgeMap& m = divide.map();
  if (m.dart_count() == 0) {
    fiber.ribbon = annulus_ribbon();
  } else {
    const std::size_t n = m.dart_count();
    std::vector<Dart> succ(3 * n), pairing(3 * n);
    for (Dart d = 0; d < n; ++d) {
      const Dart b = ribbon::band(d);
      const Dart f = ribbon::forward(d);
      const Dart k = ribbon::backward(d);
      const bool black_ccw_corner = coloring.color_of_dart(m.succ(d)) == Color::Black;
      if (black_ccw_corner) {
        succ[b] = f;
        succ[f] = k;
        succ[k] = b;
      } else {
        succ[b] = k;
        succ[k] = f;
        succ[f] = b;
      }
      pairing[b] = ribbon::band(m.pair(d));
      pairing[f] = ribbon::backward(m.succ(d));
      pairing[k] = ribbon::forward(m.pred(d));
    }
    fiber.ribbon = HalfEdgeMap::from_permutations(std::move(succ), std::move(pairing));

    fiber.roundabouts.reserve(m.vertex_count());
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v) {
      const auto rot = m.rotation(v);
      fiber.roundabouts.push_back({ribbon::forward(rot[0]), ribbon::forward(rot[1]),
                                   ribbon::forward(rot[2]), ribbon::forward(rot[3])});
    }
    for (Dart d = 0; d < n; ++d) {
      if (d < m.pair(d)) fiber.bands.emplace_back(ribbon::band(d), ribbon::band(m.pair(d)));
    }
  }
  auto fs = trace_faces(fiber.ribbon);
  fiber.boundary_cycles = std::move(fs.cycles);
  fiber.boundary_of = std::move(fs.face_of);
  return fiber;
}

std::vector<VanishingCycle> VanishingCycleSet::ordered() const {
  std::vector<VanishingCycle> out;
  out.reserve(size());
  out.insert(out.end(), alphas.begin(), alphas.end());
  out.insert(out.end(), betas.begin(), betas.end());
  out.insert(out.end(), gammas.begin(), gammas.end());
  return out;
}

VanishingCycleSet vanishing_cycles(const Divide& divide, const Coloring& coloring) {
  VanishingCycleSet set;
  const HalfEdgeMap& m = divide.map();
  if (m.dart_count() == 0) {
    // Both regions of the free loop give the core of the annulus.
    for (std::uint32_t face = 0; face < coloring.face_color.size(); ++face) {
      const bool white = coloring.color_of_face(face) == Color::White;
      VanishingCycle c{white ? CycleFamily::Alpha : CycleFamily::Gamma, face, {0}};
      (white ? set.alphas : set.gammas).push_back(std::move(c));
    }
    return set;
  }

  for (std::uint32_t face = 0; face < coloring.faces.size(); ++face) {
    const bool white = coloring.color_of_face(face) == Color::White;
    VanishingCycle c{white ? CycleFamily::Alpha : CycleFamily::Gamma, face, {}};
    for (Dart x : coloring.faces.cycles[face]) {
      c.walk.push_back(ribbon::band(x));
      c.walk.push_back(ribbon::forward(m.pair(x)));
    }
    (white ? set.alphas : set.gammas).push_back(std::move(c));
  }
  for (std::uint32_t v = 0; v < m.vertex_count(); ++v) {
    VanishingCycle c{CycleFamily::Beta, v, {}};
    for (Dart d : m.rotation(v)) c.walk.push_back(ribbon::forward(d));
    set.betas.push_back(std::move(c));
  }
  return set;
}

MonodromyWord monodromy_word(const Divide& divide, TwistConvention convention) {
  const Coloring coloring = checkerboard(divide);
  require_admissible(divide);
  const std::size_t count = vanishing_cycles(divide, coloring).size();
  MonodromyWord word;
  word.twists.reserve(count);
  const int sign = convention == TwistConvention::Positive ? 1 : -1;
  for (std::uint32_t i = 0; i < count; ++i) word.twists.push_back({i, sign});
  return word;
}

// Intersections are counted inside the nodes. Curve a runs along the middle
// of each ribbon; curve b is pushed off to its own left. On the boundary
// circle of a node with k ribbons, ribbon slot i owns positions 3i (clockwise
// side), 3i + 1 (middle) and 3i + 2 (counterclockwise side). Entering along a
// ribbon, the left is the clockwise side; leaving, it is the counterclockwise
// side. Two chords cross iff their endpoints interleave, and the crossing is
// positive when b passes from the right of a to its left.
namespace {

struct Pass {
  std::uint32_t node = 0;
  std::int64_t in = 0;   // slot of the entering ribbon
  std::int64_t out = 0;  // slot of the leaving ribbon
  std::int64_t len = 0;  // 3 * degree
};

class ChordTable {
 public:
  explicit ChordTable(const HalfEdgeMap& ribbon) : ribbon_(ribbon), slot_(ribbon.dart_count()) {
    len_.resize(ribbon.vertex_count());
    for (std::uint32_t v = 0; v < ribbon.vertex_count(); ++v) {
      const auto rot = ribbon.rotation(v);
      for (std::uint32_t i = 0; i < rot.size(); ++i) slot_[rot[i]] = i;
      len_[v] = 3 * static_cast<std::int64_t>(rot.size());
    }
  }

  std::vector<Pass> passes(std::span<const Dart> walk) const {
    std::vector<Pass> out(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Dart in = ribbon_.pair(walk[(i + walk.size() - 1) % walk.size()]);
      const std::uint32_t node = ribbon_.vertex_of(walk[i]);
      out[i] = {node, slot_[in], slot_[walk[i]], len_[node]};
    }
    return out;
  }

 private:
  const HalfEdgeMap& ribbon_;
  std::vector<std::int64_t> slot_;
  std::vector<std::int64_t> len_;
};

std::int64_t crossings(const std::vector<Pass>& a, const std::vector<Pass>& b) {
  std::int64_t total = 0;
  for (const Pass& pa : a) {
    const std::int64_t len = pa.len;
    const std::int64_t p1 = 3 * pa.in + 1;
    const std::int64_t arc = ((3 * pa.out + 1 - p1) % len + len) % len;
    auto right_of_a = [&](std::int64_t q) { return ((q - p1) % len + len) % len < arc; };
    for (const Pass& pb : b) {
      if (pb.node != pa.node) continue;
      const bool q1 = right_of_a(3 * pb.in);
      const bool q2 = right_of_a(3 * pb.out + 2);
      if (q1 && !q2) ++total;
      if (!q1 && q2) --total;
    }
  }
  return total;
}

}  // namespace

std::int64_t intersection_number(const HalfEdgeMap& ribbon, std::span<const Dart> a,
                                 std::span<const Dart> b) {
  check_walk(ribbon, a);
  check_walk(ribbon, b);
  const ChordTable table(ribbon);
  return crossings(table.passes(a), table.passes(b));
}

IntMatrix intersection_matrix(const FiberComplex& fiber, const VanishingCycleSet& cycles) {
  const auto list = cycles.ordered();
  const ChordTable table(fiber.ribbon);
  std::vector<std::vector<Pass>> passes;
  passes.reserve(list.size());
  for (const auto& c : list) {
    check_walk(fiber.ribbon, c.walk);
    passes.push_back(table.passes(c.walk));
  }
  const auto m = static_cast<Eigen::Index>(list.size());
  IntMatrix out = IntMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const auto x = crossings(passes[i], passes[j]);
      out(i, j) = x;
      out(j, i) = -x;
    }
  }
  return out;
}

HomologyBasis homology_basis(const FiberComplex& fiber) {
  const HalfEdgeMap& r = fiber.ribbon;
  const std::size_t nodes = r.vertex_count();
  const std::size_t n = r.dart_count();

  // BFS tree; parent_dart[w] leaves the parent towards w.
  std::vector<Dart> parent_dart(nodes, kUnset);
  std::vector<std::uint32_t> depth(nodes, kUnset);
  std::vector<bool> tree(n, false);
  std::vector<std::uint32_t> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (Dart x : r.rotation(u)) {
      const std::uint32_t w = r.vertex_of(r.pair(x));
      if (depth[w] != kUnset) continue;
      depth[w] = depth[u] + 1;
      parent_dart[w] = x;
      tree[x] = tree[r.pair(x)] = true;
      queue.push_back(w);
    }
  }

  HomologyBasis basis;
  basis.generator_index.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (!tree[d] && d < r.pair(d)) {
      basis.generator_index[d] = static_cast<std::int64_t>(basis.generators.size());
      basis.generator_index[r.pair(d)] = basis.generator_index[d];
      basis.generators.push_back(d);
    }
  }

  for (Dart g : basis.generators) {
    std::uint32_t u = r.vertex_of(g);
    std::uint32_t w = r.vertex_of(r.pair(g));
    std::vector<Dart> up;    // from w towards the common ancestor
    std::vector<Dart> down;  // from u towards the common ancestor, reversed later
    while (u != w) {
      if (depth[w] >= depth[u]) {
        up.push_back(r.pair(parent_dart[w]));
        w = r.vertex_of(parent_dart[w]);
      } else {
        down.push_back(parent_dart[u]);
        u = r.vertex_of(parent_dart[u]);
      }
    }
    std::vector<Dart> walk{g};
    walk.insert(walk.end(), up.begin(), up.end());
    walk.insert(walk.end(), down.rbegin(), down.rend());
    basis.cycles.push_back(std::move(walk));
  }

  const ChordTable table(r);
  std::vector<std::vector<Pass>> passes;
  passes.reserve(basis.cycles.size());
  for (const auto& c : basis.cycles) passes.push_back(table.passes(c));
  const auto k = static_cast<Eigen::Index>(basis.rank());
  basis.form = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const auto x = crossings(passes[i], passes[j]);
      basis.form(i, j) = x;
      basis.form(j, i) = -x;
    }
  }
  return basis;
}

IntVector HomologyBasis::coordinates(const HalfEdgeMap& ribbon, std::span<const Dart> walk) const {
  check_walk(ribbon, walk);
  if (generator_index.size() != ribbon.dart_count()) {
    throw Error(Errc::BasisMismatch, "basis belongs to a different fiber");
  }
  IntVector c = IntVector::Zero(static_cast<Eigen::Index>(rank()));
  for (Dart t : walk) {
    const auto k = generator_index[t];
    if (k < 0) continue;
    c(k) += (t < ribbon.pair(t)) ? 1 : -1;
  }
  return c;
}

IntMatrix transvection(const HomologyBasis& basis, const IntVector& c, int sign) {
  if (c.size() != static_cast<Eigen::Index>(basis.rank())) {
    throw Error(Errc::BasisMismatch, "cycle has " + std::to_string(c.size()) +
                                         " coordinates, basis has rank " +
                                         std::to_string(basis.rank()));
  }
  // <x, c> = x^T J c, so T = I + sign * c (J c)^T.
  const IntVector jc = basis.form * c;
  IntMatrix t = IntMatrix::Identity(c.size(), c.size());
  t += sign * c * jc.transpose();
  return t;
}

IntMatrix homological_monodromy(const FiberComplex& fiber, const VanishingCycleSet& cycles,
                                const MonodromyWord& word) {
  return homological_monodromy(fiber, homology_basis(fiber), cycles, word);
}

IntMatrix homological_monodromy(const FiberComplex& fiber, const HomologyBasis& basis,
                                const VanishingCycleSet& cycles, const MonodromyWord& word) {
  const auto list = cycles.ordered();
  std::vector<IntVector> coords(list.size());
  const auto k = static_cast<Eigen::Index>(basis.rank());
  IntMatrix total = IntMatrix::Identity(k, k);
  for (const Twist& tw : word.twists) {
    if (tw.cycle >= list.size()) {
      throw Error(Errc::BasisMismatch, "twist refers to cycle " + std::to_string(tw.cycle) +
                                           " of " + std::to_string(list.size()));
    }
    IntVector& c = coords[tw.cycle];
    if (c.size() == 0) c = basis.coordinates(fiber.ribbon, list[tw.cycle].walk);
    // T * total with T = I + sign * c (J c)^T, without forming T.
    const IntVector jc = basis.form * c;
    const IntVector row = total.transpose() * jc;
    total += tw.sign * c * row.transpose();
  }
  return total;
}

}  // namespace dforge
