#include <gtest/gtest.h>

#include "divide_forge/census.hpp"
#include "divide_forge/error.hpp"
#include "divide_forge/openbook.hpp"

using namespace dforge;

TEST(OpenBook, FamilyPagesHaveGenusOne) {
  for (int g = 1; g <= 5; ++g) {
    const auto bf = page_invariants(family(FamilyKind::BirkhoffFried, g));
    const auto br = page_invariants(family(FamilyKind::Brunella, g));
    const auto mi = page_invariants(family(FamilyKind::Minimal, g));
    EXPECT_EQ(bf.genus, 1);
    EXPECT_EQ(br.genus, 1);
    EXPECT_EQ(mi.genus, 1);
    EXPECT_EQ(bf.binding_components, 4 * g + 4);
    EXPECT_EQ(br.binding_components, 4 * g + 2);
    EXPECT_EQ(mi.binding_components, 4 * g);
    EXPECT_EQ(bf.ambient_genus, g);
    EXPECT_EQ(br.ambient_genus, g);
    EXPECT_EQ(mi.ambient_genus, g);
  }
}

TEST(OpenBook, FamilyExamples) {
  const auto bf = family(FamilyKind::BirkhoffFried, 3);
  EXPECT_EQ(bf.circle_count(), 8U);
  EXPECT_EQ(bf.double_points(), 8U);
  EXPECT_EQ(page_invariants(bf).binding_components, 16);
  const auto br = family(FamilyKind::Brunella, 2);
  EXPECT_EQ(br.circle_count(), 5U);
  EXPECT_EQ(page_invariants(br).binding_components, 10);
  const auto mi = family(FamilyKind::Minimal, 1);
  EXPECT_EQ(mi.circle_count(), 2U);
  EXPECT_EQ(page_invariants(mi).binding_components, 4);
}

TEST(OpenBook, FreeLoopIsAnAnnulusPage) {
  const auto p = page_invariants(Divide::free_loop());
  EXPECT_EQ(p.binding_components, 2);
  EXPECT_EQ(p.euler_char, 0);
  EXPECT_EQ(p.genus, 0);
  EXPECT_EQ(p.ambient_genus, 0);
}

TEST(OpenBook, ContactCountAgreesWithFormula) {
  for (int k = 2; k <= 9; ++k) {
    for (auto kind : {GluingKind::EvenSelf, GluingKind::EvenCross, GluingKind::OddA,
                      GluingKind::OddB}) {
      const bool even = kind == GluingKind::EvenSelf || kind == GluingKind::EvenCross;
      if (even != (k % 2 == 0)) continue;
      const auto d = chain_divide(k, kind);
      EXPECT_EQ(giroux_page_invariants(d), page_invariants(d));
    }
  }
  EXPECT_EQ(giroux_page_invariants(Divide::free_loop()), page_invariants(Divide::free_loop()));
}

TEST(OpenBook, InadmissibleDividesAreRejected) {
  const Divide two(HalfEdgeMap{}, 2);
  try {
    page_invariants(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAdmissible);
  }
  EXPECT_THROW(heegaard_check(two), Error);
}

TEST(OpenBook, HeegaardBound) {
  for (int g = 1; g <= 4; ++g) {
    for (auto kind : {FamilyKind::BirkhoffFried, FamilyKind::Brunella, FamilyKind::Minimal}) {
      const auto h = heegaard_check(family(kind, g));
      EXPECT_EQ(h.lower_bound, 2 * g + 1);
      EXPECT_TRUE(h.consistent);
    }
    // The minimal family meets the bound: 2 + 4g - 1 = 2(2g + 1) - 1.
    EXPECT_EQ(heegaard_check(family(FamilyKind::Minimal, g)).from_openbook, 4 * g + 1);
  }
}

TEST(OpenBook, BindingNumberBounds) {
  EXPECT_EQ(binding_number_bounds(2), std::make_pair(4, 8));
  EXPECT_EQ(binding_number_bounds(7), std::make_pair(14, 28));
  try {
    binding_number_bounds(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GenusTooSmall);
  }
}
