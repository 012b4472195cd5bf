// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "divide_forge/census.hpp"
#include "divide_forge/fiber.hpp"
#include "divide_forge/openbook.hpp"
#include "support.hpp"

using namespace dforge;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits, in seconds.
constexpr double kFormulaLimit = 1.0;
constexpr double kCensusLimit = 300.0;

constexpr std::array kKinds{FamilyKind::BirkhoffFried, FamilyKind::Brunella, FamilyKind::Minimal};

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void criterion_page_formulas() {
  const auto t0 = Clock::now();
  bool ok = true;
  int checked = 0;
  for (int g = 1; g <= 5; ++g) {
    const int want[] = {4 * g + 4, 4 * g + 2, 4 * g};
    for (std::size_t i = 0; i < kKinds.size(); ++i) {
      const auto p = page_invariants(family(kKinds[i], g));
      ok = ok && p.genus == 1 && p.binding_components == want[i] && p.ambient_genus == g;
      ++checked;
    }
  }
  const double t = seconds_since(t0);
  report(1, ok && t < kFormulaLimit, "page-invariant formulas",
         std::to_string(checked) + " family divides, h=1 and k=4g+4/4g+2/4g, " + fmt_time(t) +
             " (limit " + fmt_time(kFormulaLimit) + ")");
}

void criterion_genus_one(const std::vector<CensusEntry>& census, double census_time) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (int g = 1; g <= 4; ++g) {
    const auto es = enumerate_genus_one(g);
    std::set<FamilyKind> kinds;
    for (const auto& e : es) {
      if (e.family) kinds.insert(*e.family);
    }
    ok = ok && es.size() == 3 && kinds.size() == 3;
    detail += "g=" + std::to_string(g) + ":" + std::to_string(es.size()) + " ";
  }
  for (int g = 1; g <= 2; ++g) {
    std::set<CanonicalForm> chains, brute;
    for (const auto& e : enumerate_genus_one(g)) chains.insert(e.form);
    for (const auto& e : census) {
      if (e.invariants.c == e.invariants.v && e.invariants.g == g && e.invariants.v > 0) {
        brute.insert(e.form);
      }
    }
    ok = ok && chains == brute;
    detail += "census g=" + std::to_string(g) + ":" + std::to_string(brute.size()) +
              (chains == brute ? " (same) " : " (DIFFERENT) ");
  }
  const double t = census_time + seconds_since(t0);
  report(2, ok && t < kCensusLimit, "genus-one classification",
         detail + fmt_time(t) + " incl. census (limit " + fmt_time(kCensusLimit) + ")");
}

void criterion_ribbon_profiles() {
  bool ok = true;
  int checked = 0;
  for (int k = 2; k <= 9; ++k) {
    if (k % 2 == 0) {
      ok = ok && ribbon_boundary_profile(k, GluingKind::EvenSelf) == std::vector<int>(4, k);
      ok = ok && ribbon_boundary_profile(k, GluingKind::EvenCross) == std::vector<int>(2, 2 * k);
      ok = ok && chain_divide(k, GluingKind::EvenSelf).ambient_genus() == (k - 2) / 2;
      ok = ok && chain_divide(k, GluingKind::EvenCross).ambient_genus() == k / 2;
      checked += 2;
    } else {
      for (auto kind : {GluingKind::OddA, GluingKind::OddB}) {
        ok = ok && ribbon_boundary_profile(k, kind) == std::vector<int>{k, k, 2 * k};
        ok = ok && chain_divide(k, kind).ambient_genus() == (k - 1) / 2;
        ++checked;
      }
    }
  }
  report(3, ok, "ribbon profiles", std::to_string(checked) + " chains, k = 2..9");
}

void criterion_free_loop() {
  const auto d = Divide::free_loop();
  const auto col = checkerboard(d);
  const auto p = page_invariants(d);
  const auto f = build_fiber(d, col);
  const auto cyc = vanishing_cycles(d, col).ordered();
  const auto word = monodromy_word(d);
  const auto basis = homology_basis(f);
  bool ok = p.binding_components == 2 && p.euler_char == 0 && p.genus == 0 && f.is_annulus() &&
            f.boundary_count() == 2 && f.euler_characteristic() == 0;
  // Twist squared along the core: two positive twists on the same curve,
  // which is the generator of H1 of the annulus.
  ok = ok && word.length() == 2 && cyc.size() == 2 && cyc[0].walk == cyc[1].walk;
  for (const auto& t : word.twists) ok = ok && t.sign == 1;
  ok = ok && basis.rank() == 1 && basis.coordinates(f.ribbon, cyc[0].walk) == IntVector::Ones(1);
  report(4, ok, "free loop", "annulus page, k=2, word = core twist squared");
}

void criterion_fiber_oracle(const std::vector<CensusEntry>& census, double census_time) {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  for (const auto& e : census) {
    const auto d = e.divide();
    const auto f = build_fiber(d, checkerboard(d));
    const std::size_t nodes = test_support::cycle_count(f.ribbon.successors());
    const std::size_t ribbons = f.ribbon.dart_count() / 2;
    const std::size_t boundaries = test_support::orbit_count(f.ribbon.successors(), f.ribbon.pairing());
    const long chi = static_cast<long>(nodes) - static_cast<long>(ribbons);
    if (chi != -2L * e.invariants.v || boundaries != 2U * static_cast<std::size_t>(e.invariants.c)) {
      ++bad;
    }
  }
  const double t = census_time + seconds_since(t0);
  report(5, bad == 0 && t < kCensusLimit, "fiber oracle",
         std::to_string(census.size()) + " census divides (v <= 8), " + std::to_string(bad) +
             " mismatches, " + fmt_time(t) + " incl. census (limit " + fmt_time(kCensusLimit) + ")");
}

void criterion_heegaard(const std::vector<CensusEntry>& census) {
  std::size_t bad = 0;
  for (const auto& e : census) {
    const auto& i = e.invariants;
    if (2 * i.h + i.k - 1 < 2 * i.g + 1) ++bad;
  }
  // The library check itself on a sample.
  for (std::size_t j = 0; j < census.size(); j += 997) {
    if (!heegaard_check(census[j].divide()).consistent) ++bad;
  }
  report(6, bad == 0, "Heegaard consistency",
         std::to_string(census.size()) + " census divides, " + std::to_string(bad) + " violations");
}

void criterion_monodromy(const std::vector<CensusEntry>& census) {
  const auto t0 = Clock::now();
  std::size_t bad_length = 0;
  std::size_t bad_form = 0;
  for (const auto& e : census) {
    const auto d = e.divide();
    const auto col = checkerboard(d);
    const auto f = build_fiber(d, col);
    const auto cyc = vanishing_cycles(d, col);
    const auto word = monodromy_word(d);
    const int chi = d.double_points() == 0 ? 2 : euler_characteristic(d.map());
    if (static_cast<int>(word.length()) != chi + 2 * e.invariants.v) ++bad_length;
    const auto basis = homology_basis(f);
    const IntMatrix m = homological_monodromy(f, basis, cyc, word);
    if (IntMatrix(m.transpose() * basis.form * m) != basis.form) ++bad_form;
  }
  report(7, bad_length == 0 && bad_form == 0, "monodromy properties",
         std::to_string(census.size()) + " census divides, " + std::to_string(bad_length) +
             " length and " + std::to_string(bad_form) + " form violations, " +
             fmt_time(seconds_since(t0)));
}

void criterion_canonical() {
  std::mt19937 rng(20261019);
  bool ok = true;
  int relabelings = 0;
  for (int g = 1; g <= 5; ++g) {
    for (auto kind : kKinds) {
      const auto d = family(kind, g);
      const auto form = canonical_form(d);
      for (int i = 0; i < 100; ++i) {
        ok = ok && canonical_form(test_support::random_relabel(d, rng)) == form;
        ++relabelings;
      }
    }
  }
  for (int k = 3; k <= 9; k += 2) {
    ok = ok && canonical_form(chain_divide(k, GluingKind::OddA)) ==
                   canonical_form(chain_divide(k, GluingKind::OddB));
  }
  report(8, ok, "canonicalization", std::to_string(relabelings) +
                                        " random relabelings of 15 family divides; OddA == OddB "
                                        "for k = 3..9");
}

}  // namespace

int main() {
  criterion_page_formulas();

  const auto t0 = Clock::now();
  CensusOptions opt;  // default cap, hardware threads, library verification on
  const auto census = enumerate_divides(kDefaultCensusCap, opt);
  const double census_time = seconds_since(t0);
  std::printf("census: %zu admissible divides with v <= %d in %s\n", census.size(),
              kDefaultCensusCap, fmt_time(census_time).c_str());

  criterion_genus_one(census, census_time);
  criterion_ribbon_profiles();
  criterion_free_loop();
  criterion_fiber_oracle(census, census_time);
  criterion_heegaard(census);
  criterion_monodromy(census);
  criterion_canonical();

  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
