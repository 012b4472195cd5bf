#pragma once

// Chain divides, the three genus-one families, and the exhaustive census of
// admissible divides up to homeomorphism.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divide_forge/divide.hpp"

namespace dforge {

/// How the last ribbon of a chain is glued back to the first.
enum class GluingKind : std::uint8_t {
  EvenSelf,   // even k, straight closure
  EvenCross,  // even k, crossed closure
  OddA,       // odd k, straight closure
  OddB,       // odd k, crossed closure (the mirror image of OddA)
};

std::string_view to_string(GluingKind kind);

/// Cyclic chain of k >= 2 circles, consecutive circles crossing twice.
/// Throws ParityMismatch, or InvalidArgument for k < 2.
Divide chain_divide(int k, GluingKind gluing);

/// Boundary lengths of the ribbon surface of the chain, sorted ascending.
std::vector<int> ribbon_boundary_profile(int k, GluingKind gluing);

enum class FamilyKind : std::uint8_t { BirkhoffFried, Brunella, Minimal };

/// "birkhoff-fried", "brunella", "minimal"
std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Throws InvalidArgument for g < 1.
Divide family(FamilyKind kind, int g);

struct InvariantVector {
  int g = 0;  // ambient genus
  int c = 0;  // circles
  int v = 0;  // double points
  int k = 0;  // binding components
  int h = 0;  // page genus

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Throws NotAdmissible.
InvariantVector invariant_vector(const Divide& divide);

struct CensusEntry {
  CanonicalForm form;
  InvariantVector invariants;
  std::optional<FamilyKind> family;

  Divide divide() const { return decode_divide(form); }
};

/// The chain gluings of ambient genus g, deduplicated; one entry per family,
/// ordered Birkhoff-Fried, Brunella, minimal. Throws InvalidArgument for g < 1.
std::vector<CensusEntry> enumerate_genus_one(int g);

constexpr int kDefaultCensusCap = 8;

struct CensusOptions {
  int cap = kDefaultCensusCap;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Re-check every entry (parity of circles, genus-one iff c = v, Heegaard
  /// bound, fiber-traced characteristic and boundary count).
  bool verify = true;
};

/// All admissible divides with at most max_v double points up to
/// homeomorphism, sorted by canonical form. Throws CapExceeded when
/// max_v > options.cap, InvariantMismatch if verification fails.
std::vector<CensusEntry> enumerate_divides(int max_v, const CensusOptions& options = {});

/// The checks run by enumerate_divides on one entry; returns an empty string
/// or a description of the first failure.
std::string verify_entry(const Divide& divide, const InvariantVector& inv);

}  // namespace dforge
