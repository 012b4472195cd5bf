#include "divide_forge/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "divide_forge/error.hpp"
#include "divide_forge/fiber.hpp"
#include "divide_forge/map_generator.hpp"
#include "divide_forge/openbook.hpp"

namespace dforge {

std::string_view to_string(GluingKind kind) {
  switch (kind) {
    case GluingKind::EvenSelf: return "EvenSelf";
    case GluingKind::EvenCross: return "EvenCross";
    case GluingKind::OddA: return "OddA";
    case GluingKind::OddB: return "OddB";
  }
  return "?";
}

Divide chain_divide(int k, GluingKind gluing) {
  if (k < 2) throw Error(Errc::InvalidArgument, "a chain needs at least 2 circles");
  const bool even_kind = gluing == GluingKind::EvenSelf || gluing == GluingKind::EvenCross;
  if (even_kind != (k % 2 == 0)) {
    throw Error(Errc::ParityMismatch, std::string(to_string(gluing)) + " gluing with k = " +
                                          std::to_string(k));
  }
  // Circle i is cut into a top arc and a bottom arc by its two double points;
  // each arc is one edge with darts (i, arc, -) and (i, arc, +), paired by ^1.
  auto top_minus = [](int i) { return static_cast<Dart>(4 * i); };
  auto top_plus = [](int i) { return static_cast<Dart>(4 * i + 1); };
  auto bot_minus = [](int i) { return static_cast<Dart>(4 * i + 2); };
  auto bot_plus = [](int i) { return static_cast<Dart>(4 * i + 3); };

  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i + 1 < k; ++i) {
    rotations.push_back({top_plus(i), top_minus(i + 1), bot_plus(i), bot_minus(i + 1)});
  }
  const bool crossed = gluing == GluingKind::EvenCross || gluing == GluingKind::OddB;
  if (crossed) {
    rotations.push_back({top_plus(k - 1), bot_minus(0), bot_plus(k - 1), top_minus(0)});
  } else {
    rotations.push_back({top_plus(k - 1), top_minus(0), bot_plus(k - 1), bot_minus(0)});
  }
  return Divide(HalfEdgeMap::build_xor_paired(rotations));
}

std::vector<int> ribbon_boundary_profile(int k, GluingKind gluing) {
  const Divide d = chain_divide(k, gluing);
  std::vector<int> lengths;
  for (const auto& cycle : trace_faces(d.map()).cycles) {
    lengths.push_back(static_cast<int>(cycle.size()));
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::BirkhoffFried: return "birkhoff-fried";
    case FamilyKind::Brunella: return "brunella";
    case FamilyKind::Minimal: return "minimal";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (auto kind : {FamilyKind::BirkhoffFried, FamilyKind::Brunella, FamilyKind::Minimal}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

Divide family(FamilyKind kind, int g) {
  if (g < 1) throw Error(Errc::InvalidArgument, "family genus must be at least 1");
  switch (kind) {
    case FamilyKind::BirkhoffFried: return chain_divide(2 * g + 2, GluingKind::EvenSelf);
    case FamilyKind::Brunella: return chain_divide(2 * g + 1, GluingKind::OddA);
    case FamilyKind::Minimal: return chain_divide(2 * g, GluingKind::EvenCross);
  }
  throw Error(Errc::InvalidArgument, "unknown family");
}

InvariantVector invariant_vector(const Divide& divide) {
  const PageInvariants p = page_invariants(divide);
  InvariantVector inv;
  inv.g = p.ambient_genus;
  inv.c = static_cast<int>(divide.circle_count());
  inv.v = static_cast<int>(divide.double_points());
  inv.k = p.binding_components;
  inv.h = p.genus;
  return inv;
}

namespace {

constexpr std::array kFamilies{FamilyKind::BirkhoffFried, FamilyKind::Brunella,
                               FamilyKind::Minimal};

std::optional<FamilyKind> recognize(const CanonicalForm& form, const InvariantVector& inv,
                                    std::map<int, std::array<CanonicalForm, 3>>& cache) {
  if (inv.h != 1 || inv.g < 1) return std::nullopt;
  auto it = cache.find(inv.g);
  if (it == cache.end()) {
    std::array<CanonicalForm, 3> forms;
    for (std::size_t i = 0; i < kFamilies.size(); ++i) {
      forms[i] = canonical_form(family(kFamilies[i], inv.g));
    }
    it = cache.emplace(inv.g, std::move(forms)).first;
  }
  for (std::size_t i = 0; i < kFamilies.size(); ++i) {
    if (it->second[i] == form) return kFamilies[i];
  }
  return std::nullopt;
}

void push_u16(std::string& out, std::uint32_t value) {
  out.push_back(static_cast<char>((value >> 8) & 0xFF));
  out.push_back(static_cast<char>(value & 0xFF));
}

// Canonical divide forms of the medials of all maps with `edges` edges in
// one shard of the generator.
class MedialCollector {
 public:
  explicit MedialCollector(std::uint32_t edges)
      : succ_(4 * edges), pred_(4 * edges), pair_(4 * edges) {}

  void operator()(std::span<const Dart> succ, std::span<const Dart> pair) {
    // Each unrooted map once: its medial does not depend on the root.
    if (!coder_.root_is_minimal(succ, pair)) return;
    medial_permutations(succ, pair, succ_, pair_);
    for (Dart d = 0; d < succ_.size(); ++d) pred_[succ_[d]] = d;
    coder_.minimal_code(succ_, pred_, pair_, true, best_);
    std::string bytes;
    bytes.reserve(3 + 2 * best_.size());
    bytes.push_back(0);  // no free loops
    push_u16(bytes, static_cast<std::uint32_t>(succ_.size()));
    for (auto v : best_) push_u16(bytes, v);
    forms.insert(std::move(bytes));
  }

  std::unordered_set<std::string> forms;

 private:
  detail::BfsCoder coder_;
  std::vector<Dart> succ_, pred_, pair_;
  std::vector<std::uint16_t> best_;
};

template <class Fn>
void run_parallel(unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0U);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&fn, t] { fn(t); });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<CensusEntry> enumerate_genus_one(int g) {
  if (g < 1) throw Error(Errc::InvalidArgument, "genus must be at least 1");
  std::vector<CensusEntry> out;
  // Ambient genus of a k-chain is at least (k - 2) / 2, so k <= 2g + 2.
  for (int k = 2; k <= 2 * g + 2; ++k) {
    const auto kinds = k % 2 == 0 ? std::array{GluingKind::EvenSelf, GluingKind::EvenCross}
                                  : std::array{GluingKind::OddA, GluingKind::OddB};
    for (auto kind : kinds) {
      const Divide d = chain_divide(k, kind);
      if (!validate_admissible(d).admissible() || d.ambient_genus() != g) continue;
      CensusEntry e;
      e.form = canonical_form(d);
      if (std::any_of(out.begin(), out.end(),
                      [&e](const CensusEntry& x) { return x.form == e.form; })) {
        continue;
      }
      e.invariants = invariant_vector(d);
      out.push_back(std::move(e));
    }
  }
  std::map<int, std::array<CanonicalForm, 3>> cache;
  for (auto& e : out) e.family = recognize(e.form, e.invariants, cache);
  // Family order, i.e. decreasing circle count.
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.invariants.c != b.invariants.c) return a.invariants.c > b.invariants.c;
    return a.form < b.form;
  });
  return out;
}

std::string verify_entry(const Divide& divide, const InvariantVector& inv) {
  const bool bare = divide.double_points() == 0;
  bool all_two = true;
  for (const auto& circle : divide.circles()) {
    if (circle.darts.size() % 2 != 0) return "circle with an odd double point count";
    if (circle.darts.size() != 2) all_two = false;
  }
  if (inv.h < 0) return "negative page genus";
  if (!bare) {
    if (inv.v < inv.c) return "fewer double points than circles";
    if ((inv.c == inv.v) != all_two) return "c = v does not match two double points per circle";
    if ((inv.h == 1) != (inv.c == inv.v)) return "page genus one does not match c = v";
  }
  const HeegaardData hd = heegaard_check(divide);
  if (!hd.consistent) return "Heegaard bound violated";
  if (inv.g >= 1 && inv.h == 1 && inv.k < 2 * inv.g) return "genus-one page with k < 2g";
  const FiberComplex fiber = build_fiber(divide, checkerboard(divide));
  if (fiber.euler_characteristic() != -2 * inv.v) return "fiber characteristic is not -2v";
  if (fiber.boundary_count() != static_cast<std::size_t>(2 * inv.c)) {
    return "fiber boundary count is not 2c";
  }
  if (fiber.genus() != inv.h) return "fiber genus differs from page genus";
  return {};
}

std::vector<CensusEntry> enumerate_divides(int max_v, const CensusOptions& options) {
  if (max_v < 0) throw Error(Errc::InvalidArgument, "max_v must be non-negative");
  if (max_v > options.cap) {
    throw Error(Errc::CapExceeded, "max_v = " + std::to_string(max_v) + " exceeds the cap " +
                                       std::to_string(options.cap));
  }
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  // Admissible divides with v >= 1 double points are exactly the medials of
  // connected maps with v edges: the black regions of the medial are the
  // vertices of the map, the white regions its faces.
  std::unordered_set<std::string> all;
  all.insert(std::string{'\x01', '\x00', '\x00'});  // free loop
  for (int v = 1; v <= max_v; ++v) {
    std::vector<std::unordered_set<std::string>> shards(threads);
    run_parallel(threads, [&](unsigned t) {
      MedialCollector collect(static_cast<std::uint32_t>(v));
      for_each_rooted_map(
          static_cast<std::uint32_t>(v),
          [&collect](std::span<const Dart> s, std::span<const Dart> p) { collect(s, p); }, t,
          threads);
      shards[t] = std::move(collect.forms);
    });
    for (auto& shard : shards) all.merge(shard);
  }

  std::vector<std::string> sorted(all.begin(), all.end());
  all.clear();
  std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
  });

  std::vector<CensusEntry> out(sorted.size());
  std::vector<std::string> failures(threads);
  run_parallel(threads, [&](unsigned t) {
    std::map<int, std::array<CanonicalForm, 3>> cache;
    for (std::size_t i = t; i < sorted.size(); i += threads) {
      CensusEntry& e = out[i];
      e.form = CanonicalForm(std::vector<std::uint8_t>(sorted[i].begin(), sorted[i].end()));
      try {
        const Divide d = e.divide();
        e.invariants = invariant_vector(d);
        e.family = recognize(e.form, e.invariants, cache);
        if (options.verify && failures[t].empty()) {
          auto why = verify_entry(d, e.invariants);
          if (!why.empty()) failures[t] = why + " for " + e.form.hex();
        }
      } catch (const Error& err) {
        if (failures[t].empty()) failures[t] = std::string(err.what()) + " for " + e.form.hex();
      }
    }
  });
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(Errc::InvariantMismatch, f);
  }
  return out;
}

}  // namespace dforge
