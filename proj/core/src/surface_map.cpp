#include "divide_forge/surface_map.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>

#include "divide_forge/error.hpp"

namespace dforge {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

void check_pairing(std::span<const Dart> pairing, std::size_t n) {
  if (pairing.size() != n) {
    throw Error(Errc::UnpairedDart, "pairing has " + std::to_string(pairing.size()) +
                                        " entries for " + std::to_string(n) + " darts");
  }
  for (Dart d = 0; d < n; ++d) {
    const Dart p = pairing[d];
    if (p >= n) {
      throw Error(Errc::UnpairedDart, "dart " + std::to_string(d) + " is paired with " +
                                          std::to_string(p) + ", which does not exist");
    }
    if (p == d) {
      throw Error(Errc::FixedDart, "dart " + std::to_string(d) + " is paired with itself");
    }
    if (pairing[p] != d) {
      throw Error(Errc::UnpairedDart, "pairing is not an involution at dart " + std::to_string(d));
    }
  }
}

}  // namespace

HalfEdgeMap HalfEdgeMap::build(std::span<const std::vector<Dart>> rotations,
                               std::span<const Dart> pairing) {
  std::size_t n = 0;
  for (const auto& r : rotations) n += r.size();

  std::vector<Dart> succ(n, kUnset);
  std::vector<Dart> starts;
  starts.reserve(rotations.size());
  std::vector<bool> seen(n, false);
  for (const auto& r : rotations) {
    if (r.empty()) continue;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Dart d = r[i];
      if (d >= n) {
        throw Error(Errc::DartOutOfRange,
                    "dart " + std::to_string(d) + " is outside 0.." + std::to_string(n - 1));
      }
      if (seen[d]) {
        throw Error(Errc::DuplicateDart, "dart " + std::to_string(d) + " appears twice");
      }
      seen[d] = true;
      succ[d] = r[(i + 1) % r.size()];
    }
    starts.push_back(r.front());
  }
  check_pairing(pairing, n);

  HalfEdgeMap m;
  m.succ_ = std::move(succ);
  m.pair_.assign(pairing.begin(), pairing.end());
  m.pred_.resize(n);
  for (Dart d = 0; d < n; ++d) m.pred_[m.succ_[d]] = d;
  m.index_vertices(starts);
  return m;
}

HalfEdgeMap HalfEdgeMap::build_xor_paired(std::span<const std::vector<Dart>> rotations) {
  std::size_t n = 0;
  for (const auto& r : rotations) n += r.size();
  if (n % 2 != 0) {
    throw Error(Errc::UnpairedDart, "odd dart count " + std::to_string(n));
  }
  std::vector<Dart> pairing(n);
  for (Dart d = 0; d < n; ++d) pairing[d] = d ^ 1U;
  return build(rotations, pairing);
}

HalfEdgeMap HalfEdgeMap::from_permutations(std::vector<Dart> rotation_successor,
                                           std::vector<Dart> pairing) {
  const std::size_t n = rotation_successor.size();
  std::vector<bool> hit(n, false);
  for (Dart d = 0; d < n; ++d) {
    const Dart s = rotation_successor[d];
    if (s >= n) throw Error(Errc::DartOutOfRange, "successor of " + std::to_string(d));
    if (hit[s]) throw Error(Errc::DuplicateDart, "dart " + std::to_string(s) + " has two predecessors");
    hit[s] = true;
  }
  check_pairing(pairing, n);

  HalfEdgeMap m;
  m.succ_ = std::move(rotation_successor);
  m.pair_ = std::move(pairing);
  m.pred_.resize(n);
  for (Dart d = 0; d < n; ++d) m.pred_[m.succ_[d]] = d;

  std::vector<Dart> starts;
  std::vector<bool> done(n, false);
  for (Dart d = 0; d < n; ++d) {
    if (done[d]) continue;
    starts.push_back(d);
    for (Dart x = d; !done[x]; x = m.succ_[x]) done[x] = true;
  }
  m.index_vertices(starts);
  return m;
}

void HalfEdgeMap::index_vertices(std::span<const Dart> starts) {
  vertex_start_.assign(starts.begin(), starts.end());
  vertex_of_.assign(succ_.size(), kUnset);
  for (std::uint32_t v = 0; v < vertex_start_.size(); ++v) {
    Dart x = vertex_start_[v];
    do {
      vertex_of_[x] = v;
      x = succ_[x];
    } while (x != vertex_start_[v]);
  }
}

std::size_t HalfEdgeMap::degree(std::uint32_t vertex) const {
  std::size_t k = 0;
  Dart x = vertex_start_.at(vertex);
  do {
    ++k;
    x = succ_[x];
  } while (x != vertex_start_[vertex]);
  return k;
}

std::vector<Dart> HalfEdgeMap::rotation(std::uint32_t vertex) const {
  std::vector<Dart> r;
  Dart x = vertex_start_.at(vertex);
  do {
    r.push_back(x);
    x = succ_[x];
  } while (x != vertex_start_[vertex]);
  return r;
}

std::vector<std::vector<Dart>> HalfEdgeMap::rotations() const {
  std::vector<std::vector<Dart>> out;
  out.reserve(vertex_count());
  for (std::uint32_t v = 0; v < vertex_count(); ++v) out.push_back(rotation(v));
  return out;
}

bool HalfEdgeMap::is_xor_paired() const noexcept {
  for (Dart d = 0; d < pair_.size(); ++d) {
    if (pair_[d] != (d ^ 1U)) return false;
  }
  return true;
}

HalfEdgeMap HalfEdgeMap::mirrored() const {
  HalfEdgeMap m = *this;
  std::swap(m.succ_, m.pred_);
  return m;
}

HalfEdgeMap HalfEdgeMap::relabeled(std::span<const Dart> new_label) const {
  const std::size_t n = dart_count();
  if (new_label.size() != n) {
    throw Error(Errc::DartOutOfRange, "relabeling has the wrong size");
  }
  std::vector<bool> hit(n, false);
  for (Dart x : new_label) {
    if (x >= n) throw Error(Errc::DartOutOfRange, "relabeling target " + std::to_string(x));
    if (hit[x]) throw Error(Errc::DuplicateDart, "relabeling is not a permutation");
    hit[x] = true;
  }
  std::vector<std::vector<Dart>> rots;
  rots.reserve(vertex_count());
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    auto r = rotation(v);
    for (auto& d : r) d = new_label[d];
    rots.push_back(std::move(r));
  }
  std::vector<Dart> pairing(n);
  for (Dart d = 0; d < n; ++d) pairing[new_label[d]] = new_label[pair_[d]];
  return build(rots, pairing);
}

std::size_t HalfEdgeMap::component_count() const {
  const std::size_t n = dart_count();
  std::vector<bool> seen(n, false);
  std::vector<Dart> stack;
  std::size_t components = 0;
  for (Dart root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++components;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      for (Dart nb : {succ_[d], pair_[d]}) {
        if (!seen[nb]) {
          seen[nb] = true;
          stack.push_back(nb);
        }
      }
    }
  }
  return components;
}

FaceSet trace_faces(const HalfEdgeMap& map) {
  FaceSet fs;
  const std::size_t n = map.dart_count();
  fs.face_of.assign(n, kUnset);
  for (Dart d = 0; d < n; ++d) {
    if (fs.face_of[d] != kUnset) continue;
    const auto index = static_cast<std::uint32_t>(fs.cycles.size());
    auto& cycle = fs.cycles.emplace_back();
    for (Dart x = d; fs.face_of[x] == kUnset; x = map.face_next(x)) {
      fs.face_of[x] = index;
      cycle.push_back(x);
    }
  }
  return fs;
}

std::vector<std::vector<Dart>> faces(const HalfEdgeMap& map, bool require_connected) {
  if (require_connected && !map.connected()) {
    throw Error(Errc::Disconnected, "map has " + std::to_string(map.component_count()) +
                                        " components");
  }
  return trace_faces(map).cycles;
}

int euler_characteristic(const HalfEdgeMap& map) {
  const auto f = faces(map, true).size();
  return static_cast<int>(map.vertex_count()) - static_cast<int>(map.edge_count()) +
         static_cast<int>(f);
}

int genus(const HalfEdgeMap& map) {
  const int chi = euler_characteristic(map);
  if (chi % 2 != 0) {
    throw Error(Errc::OddCharacteristic, "Euler characteristic " + std::to_string(chi));
  }
  return (2 - chi) / 2;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace detail {

int BfsCoder::encode(std::span<const Dart> rot, std::span<const Dart> pair, Dart root,
                     std::span<const std::uint16_t> bound) {
  const std::size_t n = rot.size();
  constexpr std::uint16_t kNone = std::numeric_limits<std::uint16_t>::max();
  label_.assign(n, kNone);
  order_.resize(n);
  code_.resize(2 * n);

  std::uint16_t next = 0;
  label_[root] = next;
  order_[next++] = root;
  int state = 0;  // 0: equal to bound so far, -1: already smaller
  for (std::size_t i = 0; i < n; ++i) {
    // Connected maps label every dart before the queue runs dry.
    const Dart d = order_[i];
    const Dart s = rot[d];
    if (label_[s] == kNone) {
      label_[s] = next;
      order_[next++] = s;
    }
    const Dart p = pair[d];
    if (label_[p] == kNone) {
      label_[p] = next;
      order_[next++] = p;
    }
    const std::uint16_t a = label_[s];
    const std::uint16_t b = label_[p];
    code_[2 * i] = a;
    code_[2 * i + 1] = b;
    if (state == 0 && !bound.empty()) {
      if (a != bound[2 * i]) {
        if (a > bound[2 * i]) return 1;
        state = -1;
      } else if (b != bound[2 * i + 1]) {
        if (b > bound[2 * i + 1]) return 1;
        state = -1;
      }
    }
  }
  return state;
}

void BfsCoder::minimal_code(std::span<const Dart> succ, std::span<const Dart> pred,
                            std::span<const Dart> pair, bool orientation_reversing,
                            std::vector<std::uint16_t>& best) {
  const std::size_t n = succ.size();
  best.clear();
  for (int mirror = 0; mirror < (orientation_reversing ? 2 : 1); ++mirror) {
    const auto rot = mirror ? pred : succ;
    for (Dart root = 0; root < n; ++root) {
      if (best.empty()) {
        encode(rot, pair, root, {});
        best = code_;
        continue;
      }
      if (encode(rot, pair, root, best) < 0) best = code_;
    }
  }
}

bool BfsCoder::root_is_minimal(std::span<const Dart> succ, std::span<const Dart> pair) {
  const std::size_t n = succ.size();
  if (n == 0) return true;
  encode(succ, pair, 0, {});
  const std::vector<std::uint16_t> reference = code_;
  for (Dart root = 1; root < n; ++root) {
    if (encode(succ, pair, root, reference) < 0) return false;
  }
  return true;
}

}  // namespace detail

namespace {

void push_u16(std::vector<std::uint8_t>& out, std::uint32_t value) {
  out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(value & 0xFF));
}

std::uint32_t read_u16(std::span<const std::uint8_t> in, std::size_t offset) {
  return (static_cast<std::uint32_t>(in[offset]) << 8) | in[offset + 1];
}

}  // namespace

std::string CanonicalForm::hex() const {
  std::string s;
  s.reserve(2 * bytes_.size());
  char buf[3];
  for (auto b : bytes_) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    s += buf;
  }
  return s;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& form) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (auto b : form.bytes()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

CanonicalForm canonical_form(const HalfEdgeMap& map) {
  if (!map.connected()) {
    throw Error(Errc::Disconnected, "canonical form needs a connected map");
  }
  if (map.dart_count() > 0xFFFF) {
    throw Error(Errc::DartOutOfRange, "map too large to encode");
  }
  detail::BfsCoder coder;
  std::vector<std::uint16_t> best;
  coder.minimal_code(map.successors(), map.predecessors(), map.pairing(), true, best);

  std::vector<std::uint8_t> bytes;
  bytes.reserve(2 + 2 * best.size());
  push_u16(bytes, static_cast<std::uint32_t>(map.dart_count()));
  for (auto v : best) push_u16(bytes, v);
  return CanonicalForm(std::move(bytes));
}

HalfEdgeMap decode(const CanonicalForm& form) {
  const auto& b = form.bytes();
  if (b.size() < 2) throw Error(Errc::SchemaError, "canonical form too short");
  const std::uint32_t n = read_u16(b, 0);
  if (b.size() != 2 + 4 * static_cast<std::size_t>(n)) {
    throw Error(Errc::SchemaError, "canonical form length does not match dart count");
  }
  std::vector<Dart> succ(n), pair(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    succ[i] = read_u16(b, 2 + 4 * i);
    pair[i] = read_u16(b, 2 + 4 * i + 2);
  }
  return HalfEdgeMap::from_permutations(std::move(succ), std::move(pair));
}

bool are_homeomorphic(const HalfEdgeMap& a, const HalfEdgeMap& b) {
  if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count()) {
    // Still validate connectivity so the error contract holds.
    if (!a.connected() || !b.connected()) {
      throw Error(Errc::Disconnected, "are_homeomorphic needs connected maps");
    }
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dforge
