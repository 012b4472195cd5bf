#include <gtest/gtest.h>

#include <random>

#include "divide_forge/census.hpp"
#include "divide_forge/error.hpp"
#include "divide_forge/surface_map.hpp"
#include "support.hpp"

using namespace dforge;

namespace {

// One vertex, two loops interleaved: the standard torus map.
HalfEdgeMap torus_map() {
  const std::vector<std::vector<Dart>> rot{{0, 2, 1, 3}};
  return HalfEdgeMap::build_xor_paired(rot);
}

// One vertex, two nested loops: a planar bouquet.
HalfEdgeMap planar_bouquet() {
  const std::vector<std::vector<Dart>> rot{{0, 1, 2, 3}};
  return HalfEdgeMap::build_xor_paired(rot);
}

Errc build_error(const std::vector<std::vector<Dart>>& rot, const std::vector<Dart>& pairing) {
  try {
    HalfEdgeMap::build(rot, pairing);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(SurfaceMap, BuildRejectsMalformedInput) {
  EXPECT_EQ(build_error({{0, 1}, {1, 2, 3}}, {1, 0, 3, 2}), Errc::DuplicateDart);
  EXPECT_EQ(build_error({{0, 1, 7}}, {1, 0, 2}), Errc::DartOutOfRange);
  EXPECT_EQ(build_error({{0, 1, 2, 3}}, {1, 0, 2, 2}), Errc::FixedDart);
  EXPECT_EQ(build_error({{0, 1, 2, 3}}, {1, 2, 3, 0}), Errc::UnpairedDart);
}

TEST(SurfaceMap, AccessorsAreConsistent) {
  const auto m = torus_map();
  EXPECT_EQ(m.dart_count(), 4U);
  EXPECT_EQ(m.vertex_count(), 1U);
  EXPECT_EQ(m.edge_count(), 2U);
  for (Dart d = 0; d < 4; ++d) {
    EXPECT_EQ(m.pred(m.succ(d)), d);
    EXPECT_EQ(m.pair(m.pair(d)), d);
    EXPECT_EQ(m.face_next(d), m.succ(m.pair(d)));
  }
  EXPECT_TRUE(m.is_xor_paired());
}

TEST(SurfaceMap, GenusOfSmallMaps) {
  EXPECT_EQ(genus(torus_map()), 1);
  EXPECT_EQ(faces(torus_map()).size(), 1U);
  EXPECT_EQ(genus(planar_bouquet()), 0);
  EXPECT_EQ(faces(planar_bouquet()).size(), 3U);
  // minimal(2): four circles, faces {8, 8}.
  EXPECT_EQ(genus(family(FamilyKind::Minimal, 2).map()), 2);
}

TEST(SurfaceMap, DisconnectedMapsAreRejected) {
  const std::vector<std::vector<Dart>> rot{{0, 1}, {2, 3}};
  const auto m = HalfEdgeMap::build_xor_paired(rot);
  EXPECT_EQ(m.component_count(), 2U);
  EXPECT_THROW(genus(m), Error);
  EXPECT_THROW(faces(m, true), Error);
  EXPECT_THROW(canonical_form(m), Error);
}

TEST(SurfaceMap, FaceCountMatchesOrbitOracle) {
  for (int k = 2; k <= 9; ++k) {
    const auto kind = k % 2 == 0 ? GluingKind::EvenCross : GluingKind::OddA;
    const auto m = chain_divide(k, kind).map();
    EXPECT_EQ(trace_faces(m).size(), test_support::orbit_count(m.successors(), m.pairing()));
  }
}

TEST(SurfaceMap, CanonicalFormIgnoresLabels) {
  std::mt19937 rng(12345);
  for (auto kind : {FamilyKind::BirkhoffFried, FamilyKind::Brunella, FamilyKind::Minimal}) {
    for (int g = 1; g <= 3; ++g) {
      const auto m = family(kind, g).map();
      const auto form = canonical_form(m);
      for (int i = 0; i < 20; ++i) {
        const auto label = test_support::random_permutation(m.dart_count(), rng);
        EXPECT_EQ(canonical_form(m.relabeled(label)), form);
      }
      EXPECT_EQ(canonical_form(m.mirrored()), form);
    }
  }
}

TEST(SurfaceMap, CanonicalFormIsIdempotent) {
  for (int k = 2; k <= 7; ++k) {
    const auto kind = k % 2 == 0 ? GluingKind::EvenSelf : GluingKind::OddB;
    const auto form = canonical_form(chain_divide(k, kind).map());
    const auto again = canonical_form(decode(form));
    EXPECT_EQ(form, again);
    EXPECT_EQ(form.hex(), again.hex());
  }
}

TEST(SurfaceMap, CanonicalFormSeparatesGluings) {
  for (int k = 2; k <= 8; k += 2) {
    EXPECT_NE(canonical_form(chain_divide(k, GluingKind::EvenSelf).map()),
              canonical_form(chain_divide(k, GluingKind::EvenCross).map()));
  }
  EXPECT_FALSE(are_homeomorphic(torus_map(), planar_bouquet()));
}

TEST(SurfaceMap, DecodedMapIsIsomorphic) {
  const auto m = family(FamilyKind::Brunella, 2).map();
  const auto d = decode(canonical_form(m));
  EXPECT_EQ(d.dart_count(), m.dart_count());
  EXPECT_EQ(d.vertex_count(), m.vertex_count());
  EXPECT_EQ(genus(d), genus(m));
  EXPECT_TRUE(are_homeomorphic(d, m));
}

TEST(SurfaceMap, MirrorReversesRotations) {
  const auto m = family(FamilyKind::Minimal, 1).map();
  const auto r = m.mirrored();
  for (Dart d = 0; d < m.dart_count(); ++d) {
    EXPECT_EQ(r.succ(d), m.pred(d));
    EXPECT_EQ(r.pair(d), m.pair(d));
  }
}
