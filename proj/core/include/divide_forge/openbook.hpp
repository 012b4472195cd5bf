#pragma once

// Page topology of the open books built from an admissible divide, and the
// Heegaard-genus consistency checks that go with it.

#include <utility>

#include "divide_forge/divide.hpp"

namespace dforge {

struct PageInvariants {
  int binding_components = 0;  // k = 2 c(P)
  int euler_char = 0;          // -2 v(P)
  int genus = 0;               // h = 1 + v(P) - c(P)
  int ambient_genus = 0;       // g

  friend bool operator==(const PageInvariants&, const PageInvariants&) = default;
};

/// Closed-form page invariants. Throws NotAdmissible.
PageInvariants page_invariants(const Divide& divide);

/// The same counts read off the contact-geometric construction: two binding
/// components (cooriented normal lines) per circle, one rectangle of
/// characteristic -1 per edge.
PageInvariants giroux_page_invariants(const Divide& divide);

struct HeegaardData {
  int from_openbook = 0;  // 2h + k - 1
  int lower_bound = 0;    // 2g + 1
  bool consistent = false;
};

/// Throws NotAdmissible.
HeegaardData heegaard_check(const Divide& divide);

/// (2g, 4g). Throws GenusTooSmall for g < 2.
std::pair<int, int> binding_number_bounds(int genus);

}  // namespace dforge
