#include "divide_forge/divide.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "divide_forge/error.hpp"

namespace dforge {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Next entry dart along a strand: leave through the opposite dart, cross the edge.
Dart strand_next(const HalfEdgeMap& m, Dart entry) { return m.pair(m.succ(m.succ(entry))); }

}  // namespace

Divide::Divide(HalfEdgeMap map, std::uint32_t free_loops)
    : map_(std::move(map)), free_loops_(free_loops) {
  for (std::uint32_t v = 0; v < map_.vertex_count(); ++v) {
    if (map_.degree(v) != 4) {
      throw Error(Errc::NotFourValent, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(map_.degree(v)));
    }
  }

  const std::size_t n = map_.dart_count();
  circle_of_.assign(n, kUnset);
  for (Dart d = 0; d < n; ++d) {
    if (circle_of_[d] != kUnset) continue;
    const auto index = static_cast<std::uint32_t>(circles_.size());
    Circle& c = circles_.emplace_back();
    Dart x = d;
    do {
      c.darts.push_back(x);
      circle_of_[x] = index;
      // The exit dart belongs to the same circle traversed backwards.
      circle_of_[map_.succ(map_.succ(x))] = index;
      x = strand_next(map_, x);
    } while (x != d);
  }
  for (std::uint32_t i = 0; i < free_loops_; ++i) circles_.emplace_back();
}

bool Divide::connected() const noexcept {
  if (map_.dart_count() == 0) return free_loops_ == 1;
  return free_loops_ == 0 && map_.connected();
}

int Divide::ambient_genus() const {
  if (!connected()) {
    throw Error(Errc::Disconnected, "divide is not connected");
  }
  if (map_.dart_count() == 0) return 0;
  return genus(map_);
}

std::vector<Circle> trace_circles(const Divide& divide) { return divide.circles(); }

std::size_t Coloring::count(Color c) const {
  return static_cast<std::size_t>(std::count(face_color.begin(), face_color.end(), c));
}

Coloring checkerboard(const Divide& divide, bool swap_colors) {
  const Color first = swap_colors ? Color::Black : Color::White;
  const Color second = swap_colors ? Color::White : Color::Black;
  Coloring col;
  const HalfEdgeMap& m = divide.map();
  if (m.dart_count() == 0) {
    // Each free loop bounds an inside disk; face 0 is the common outside.
    col.face_color.push_back(first);
    for (std::uint32_t i = 0; i < divide.free_loops(); ++i) col.face_color.push_back(second);
    return col;
  }

  col.faces = trace_faces(m);
  const std::size_t f = col.faces.size();
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> side(f, kNone);
  std::vector<std::uint32_t> queue;
  queue.reserve(f);
  for (std::uint32_t start = 0; start < f; ++start) {
    if (side[start] != kNone) continue;
    side[start] = 0;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t face = queue[head];
      for (Dart d : col.faces.cycles[face]) {
        const std::uint32_t across = col.faces.face_of[m.pair(d)];
        if (side[across] == kNone) {
          side[across] = side[face] ^ 1U;
          queue.push_back(across);
        } else if (side[across] == side[face]) {
          throw Error(Errc::NotBipartite, "regions " + std::to_string(face) + " and " +
                                              std::to_string(across) +
                                              " share an edge and cannot be colored apart");
        }
      }
    }
  }
  col.face_color.resize(f);
  for (std::uint32_t i = 0; i < f; ++i) col.face_color[i] = side[i] == 0 ? first : second;
  return col;
}

std::string AdmissibilityReport::failures() const {
  std::string out;
  auto add = [&out](const char* s) {
    if (!out.empty()) out += ", ";
    out += s;
  };
  if (!connected) add("disconnected");
  if (!faces_are_disks) add("non-disk region");
  if (!colorable) add("not colorable");
  return out;
}

AdmissibilityReport validate_admissible(const Divide& divide) {
  AdmissibilityReport r;
  r.connected = divide.connected();
  r.faces_are_disks = true;
  try {
    checkerboard(divide);
    r.colorable = true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotBipartite) throw;
    r.colorable = false;
  }
  return r;
}

void require_admissible(const Divide& divide) {
  const auto report = validate_admissible(divide);
  if (!report.admissible()) {
    throw Error(Errc::NotAdmissible, report.failures());
  }
}

std::size_t DualGraph::degree(std::uint32_t circle) const {
  std::size_t k = 0;
  for (const auto& [a, b] : edges) {
    if (a == circle) ++k;
    if (b == circle) ++k;
  }
  return k;
}

bool DualGraph::is_cycle() const {
  if (vertex_count == 0 || edges.size() != vertex_count) return false;
  for (std::uint32_t i = 0; i < vertex_count; ++i) {
    if (degree(i) != 2) return false;
  }
  // Connectivity by union-find.
  std::vector<std::uint32_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  for (std::uint32_t i = 1; i < vertex_count; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

DualGraph dual_graph(const Divide& divide) {
  DualGraph g;
  g.vertex_count = divide.circle_count();
  const HalfEdgeMap& m = divide.map();
  g.edges.reserve(m.vertex_count());
  for (std::uint32_t v = 0; v < m.vertex_count(); ++v) {
    const auto rot = m.rotation(v);
    const auto a = divide.circle_of(rot[0]);
    const auto b = divide.circle_of(rot[1]);
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return g;
}

CanonicalForm canonical_form(const Divide& divide) {
  if (!divide.connected()) {
    throw Error(Errc::Disconnected, "canonical form needs a connected divide");
  }
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(divide.free_loops())};
  if (divide.map().dart_count() == 0) {
    bytes.push_back(0);
    bytes.push_back(0);
  } else {
    const auto inner = canonical_form(divide.map());
    bytes.insert(bytes.end(), inner.bytes().begin(), inner.bytes().end());
  }
  return CanonicalForm(std::move(bytes));
}

Divide decode_divide(const CanonicalForm& form) {
  const auto& b = form.bytes();
  if (b.size() < 3) throw Error(Errc::SchemaError, "divide form too short");
  const std::uint32_t loops = b[0];
  if (b[1] == 0 && b[2] == 0) return Divide(HalfEdgeMap{}, loops);
  return Divide(decode(CanonicalForm(std::vector<std::uint8_t>(b.begin() + 1, b.end()))), loops);
}

bool are_homeomorphic(const Divide& a, const Divide& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dforge
