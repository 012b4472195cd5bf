#include "divide_forge/openbook.hpp"

#include <string>

#include "divide_forge/error.hpp"

namespace dforge {

namespace {

PageInvariants from_counts(int circles, int double_points, int ambient_genus) {
  PageInvariants p;
  p.binding_components = 2 * circles;
  p.euler_char = -2 * double_points;
  p.genus = 1 + double_points - circles;
  p.ambient_genus = ambient_genus;
  return p;
}

}  // namespace

PageInvariants page_invariants(const Divide& divide) {
  require_admissible(divide);
  return from_counts(static_cast<int>(divide.circle_count()),
                     static_cast<int>(divide.double_points()), divide.ambient_genus());
}

PageInvariants giroux_page_invariants(const Divide& divide) {
  require_admissible(divide);
  const int edges = static_cast<int>(divide.map().edge_count());
  PageInvariants p;
  p.binding_components = 2 * static_cast<int>(divide.circles().size());
  p.euler_char = -edges;
  p.genus = (2 - p.euler_char - p.binding_components) / 2;
  p.ambient_genus = divide.ambient_genus();
  return p;
}

HeegaardData heegaard_check(const Divide& divide) {
  const PageInvariants p = page_invariants(divide);
  HeegaardData h;
  h.from_openbook = 2 * p.genus + p.binding_components - 1;
  // Heegaard genus of the unit cotangent bundle; the sphere and torus cases
  // (RP^3 and T^3) follow the same formula.
  h.lower_bound = 2 * p.ambient_genus + 1;
  h.consistent = h.from_openbook >= h.lower_bound;
  return h;
}

std::pair<int, int> binding_number_bounds(int genus) {
  if (genus < 2) {
    throw Error(Errc::GenusTooSmall,
                "binding number bounds need genus >= 2, got " + std::to_string(genus));
  }
  return {2 * genus, 4 * genus};
}

}  // namespace dforge
