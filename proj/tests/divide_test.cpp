#include <gtest/gtest.h>

#include <set>

#include "divide_forge/census.hpp"
#include "divide_forge/divide.hpp"
#include "divide_forge/error.hpp"

using namespace dforge;

namespace {

// One double point on the sphere, two loops of the same circle.
Divide figure_eight() {
  const std::vector<std::vector<Dart>> rot{{0, 1, 2, 3}};
  return Divide(HalfEdgeMap::build_xor_paired(rot));
}

}  // namespace

TEST(Divide, RequiresFourValentVertices) {
  const std::vector<std::vector<Dart>> rot{{0, 1}};
  try {
    Divide d(HalfEdgeMap::build_xor_paired(rot));
    FAIL() << "accepted a 2-valent vertex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFourValent);
  }
}

TEST(Divide, FreeLoop) {
  const auto d = Divide::free_loop();
  EXPECT_EQ(d.double_points(), 0U);
  EXPECT_EQ(d.circle_count(), 1U);
  EXPECT_TRUE(d.connected());
  EXPECT_EQ(d.ambient_genus(), 0);
  EXPECT_TRUE(validate_admissible(d).admissible());
  const auto col = checkerboard(d);
  EXPECT_EQ(col.count(Color::White), 1U);
  EXPECT_EQ(col.count(Color::Black), 1U);
}

TEST(Divide, TwoFreeLoopsAreDisconnected) {
  const Divide d(HalfEdgeMap{}, 2);
  EXPECT_FALSE(d.connected());
  const auto r = validate_admissible(d);
  EXPECT_FALSE(r.admissible());
  EXPECT_EQ(r.failures(), "disconnected");
  EXPECT_THROW(require_admissible(d), Error);
  EXPECT_THROW(d.ambient_genus(), Error);
}

TEST(Divide, FigureEightIsAdmissible) {
  const auto d = figure_eight();
  EXPECT_EQ(d.circle_count(), 1U);
  EXPECT_EQ(d.circles()[0].double_point_visits(), 2U);
  EXPECT_EQ(d.ambient_genus(), 0);
  EXPECT_TRUE(validate_admissible(d).admissible());
  const auto g = dual_graph(d);
  ASSERT_EQ(g.edges.size(), 1U);
  EXPECT_EQ(g.edges[0].first, g.edges[0].second);
}

TEST(Divide, ChainCirclesAndColoring) {
  for (int k = 2; k <= 9; ++k) {
    for (auto kind : {GluingKind::EvenSelf, GluingKind::EvenCross, GluingKind::OddA,
                      GluingKind::OddB}) {
      const bool even = kind == GluingKind::EvenSelf || kind == GluingKind::EvenCross;
      if (even != (k % 2 == 0)) continue;
      const auto d = chain_divide(k, kind);
      EXPECT_EQ(d.circle_count(), static_cast<std::size_t>(k));
      EXPECT_EQ(d.double_points(), static_cast<std::size_t>(k));
      for (const auto& c : d.circles()) EXPECT_EQ(c.double_point_visits(), 2U);
      EXPECT_TRUE(dual_graph(d).is_cycle()) << k;

      // Adjacent regions get opposite colors, and the swap flips every color.
      const auto col = checkerboard(d);
      const auto swapped = checkerboard(d, true);
      for (Dart x = 0; x < d.map().dart_count(); ++x) {
        EXPECT_NE(col.color_of_dart(x), col.color_of_dart(d.map().pair(x)));
        EXPECT_NE(col.color_of_dart(x), swapped.color_of_dart(x));
      }
    }
  }
}

TEST(Divide, CircleIndexIsSharedByBothDirections) {
  const auto d = family(FamilyKind::BirkhoffFried, 2);
  const auto& m = d.map();
  for (Dart x = 0; x < m.dart_count(); ++x) {
    EXPECT_EQ(d.circle_of(x), d.circle_of(m.succ(m.succ(x))));
    EXPECT_EQ(d.circle_of(x), d.circle_of(m.pair(x)));
  }
}

TEST(Divide, NonBipartiteRegionsAreNotColorable) {
  // Two loops through one double point on the torus: a single region that
  // borders itself.
  const std::vector<std::vector<Dart>> rot{{0, 2, 1, 3}};
  const Divide d(HalfEdgeMap::build_xor_paired(rot));
  const auto r = validate_admissible(d);
  EXPECT_TRUE(r.connected);
  EXPECT_FALSE(r.colorable);
  EXPECT_EQ(r.failures(), "not colorable");
  try {
    checkerboard(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotBipartite);
  }
}

TEST(Divide, HomeomorphismAndCanonicalForm) {
  EXPECT_TRUE(are_homeomorphic(chain_divide(5, GluingKind::OddA), chain_divide(5, GluingKind::OddB)));
  EXPECT_FALSE(are_homeomorphic(chain_divide(4, GluingKind::EvenSelf),
                                chain_divide(4, GluingKind::EvenCross)));
  const auto f = canonical_form(Divide::free_loop());
  EXPECT_EQ(decode_divide(f).free_loops(), 1U);
  const auto m = family(FamilyKind::Minimal, 1);
  EXPECT_TRUE(are_homeomorphic(decode_divide(canonical_form(m)), m));
}
