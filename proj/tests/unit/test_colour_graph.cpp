#include <gtest/gtest.h>

#include <set>

#include "coxflag/colour_graph.hpp"
#include "coxflag/error.hpp"

using namespace coxflag;

namespace {
  ColourSet set_of(std::initializer_list<Colour> cs) {
    ColourSet s = 0;
    for (Colour c : cs) {
      s |= colours::single(c);
    }
    return s;
  }

  // Connectivity by repeated edge relaxation over explicit sets.
  bool slow_connected(ColourGraph const& g, ColourSet s) {
    auto members = colours::to_vector(s);
    if (members.empty()) {
      return false;
    }
    std::set<Colour> reached{members.front()};
    bool             grew = true;
    while (grew) {
      grew = false;
      for (Colour a : members) {
        for (Colour b : members) {
          if (reached.count(a) && !reached.count(b) && g.adjacent(a, b)) {
            reached.insert(b);
            grew = true;
          }
        }
      }
    }
    return reached.size() == members.size();
  }
}  // namespace

TEST(LetterOrder, ComparesSortedColourLists) {
  EXPECT_LT(Letter(set_of({0})), Letter(set_of({0, 1})));
  EXPECT_LT(Letter(set_of({0, 1})), Letter(set_of({0, 2})));
  EXPECT_LT(Letter(set_of({0, 1, 2})), Letter(set_of({0, 2})));
  EXPECT_LT(Letter(set_of({0, 2})), Letter(set_of({1})));
  EXPECT_EQ(Letter(set_of({3, 1})), Letter(set_of({1, 3})));
}

TEST(Components, PathExamples) {
  auto const p3 = ColourGraph::path(3);
  EXPECT_EQ(p3.components(set_of({0, 2})),
            (std::vector<Letter>{Letter(set_of({0})), Letter(set_of({2}))}));
  EXPECT_TRUE(p3.components(0).empty());
  EXPECT_EQ(p3.components(set_of({0, 1, 2})),
            (std::vector<Letter>{Letter(set_of({0, 1, 2}))}));
}

TEST(Components, PartitionIntoCommutingLetters) {
  auto const c5 = ColourGraph::cycle(5);
  for (ColourSet s = 0; s < 32; ++s) {
    auto const comps = c5.components(s);
    ColourSet  seen  = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EXPECT_EQ(seen & comps[i].support(), 0U);
      EXPECT_TRUE(slow_connected(c5, comps[i].support()));
      seen |= comps[i].support();
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        EXPECT_TRUE(c5.commute(comps[i], comps[j]));
      }
    }
    EXPECT_EQ(seen, s);
  }
}

TEST(Commute, Examples) {
  auto const p3 = ColourGraph::path(3);
  Letter const a(set_of({0})), b(set_of({1})), c(set_of({2}));
  EXPECT_TRUE(p3.commute(a, c));
  EXPECT_FALSE(p3.commute(a, a));
  EXPECT_FALSE(p3.commute(a, b));
}

TEST(Commute, SymmetricAndMatchesDisconnectedUnion) {
  for (auto const& g : {ColourGraph::path(4), ColourGraph::cycle(5),
                        ColourGraph::complete(3)}) {
    auto const letters = g.letters(g.size());
    for (Letter s : letters) {
      EXPECT_FALSE(g.commute(s, s));
      for (Letter t : letters) {
        EXPECT_EQ(g.commute(s, t), g.commute(t, s));
        bool const disjoint = (s.support() & t.support()) == 0;
        EXPECT_EQ(g.commute(s, t),
                  disjoint && !slow_connected(g, s.support() | t.support()));
      }
    }
  }
}

TEST(Boundary, Examples) {
  auto const p3 = ColourGraph::path(3);
  auto const p4 = ColourGraph::path(4);
  EXPECT_EQ(p3.boundary(Letter(set_of({1}))), set_of({0, 1, 2}));
  EXPECT_EQ(p3.boundary(Letter(set_of({0}))), set_of({0, 1}));
  EXPECT_EQ(p4.boundary(Letter(set_of({3}))), set_of({2, 3}));
}

TEST(Boundary, ComplementIsCommutingColours) {
  auto const g = ColourGraph::cycle(5);
  for (Letter s : g.letters(5)) {
    ColourSet commuting = 0;
    for (Colour c = 0; c < g.size(); ++c) {
      if (g.commute(Letter(colours::single(c)), s)) {
        commuting |= colours::single(c);
      }
    }
    EXPECT_EQ(g.all() & ~g.boundary(s), commuting);
  }
}

TEST(RemovablePair, Examples) {
  auto const p3 = ColourGraph::path(3);
  EXPECT_EQ(p3.removable_pair(Letter(set_of({0, 1, 2}))),
            (std::pair<Colour, Colour>{0, 2}));
  EXPECT_EQ(p3.removable_pair(Letter(set_of({0, 1}))),
            (std::pair<Colour, Colour>{0, 1}));
  try {
    p3.removable_pair(Letter(set_of({0})));
    FAIL() << "expected SingletonLetter";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::singleton_letter);
  }
}

TEST(RemovablePair, BothRemovalsStayConnected) {
  auto const g = ColourGraph::cycle(5);
  for (Letter s : g.letters(5)) {
    if (s.size() < 2) {
      continue;
    }
    auto const [a, b] = g.removable_pair(s);
    EXPECT_NE(a, b);
    for (Colour c : {a, b}) {
      ColourSet const rest = s.support() & ~colours::single(c);
      EXPECT_TRUE(slow_connected(g, rest));
    }
  }
}

TEST(Letters, Examples) {
  auto const p3 = ColourGraph::path(3);
  EXPECT_EQ(p3.letters(3),
            (std::vector<Letter>{Letter(set_of({0})),
                                 Letter(set_of({1})),
                                 Letter(set_of({2})),
                                 Letter(set_of({0, 1})),
                                 Letter(set_of({1, 2})),
                                 Letter(set_of({0, 1, 2}))}));
  EXPECT_EQ(p3.letters(1).size(), 3U);
  EXPECT_EQ(ColourGraph::edgeless(2).letters(2),
            (std::vector<Letter>{Letter(set_of({0})), Letter(set_of({1}))}));
}

TEST(Letters, MatchesSubsetEnumeration) {
  auto const g = ColourGraph::cycle(5);
  std::size_t connected = 0;
  for (ColourSet s = 1; s < 32; ++s) {
    connected += slow_connected(g, s) ? 1 : 0;
  }
  EXPECT_EQ(g.letters(5).size(), connected);
}

TEST(Invariants, PaperFixtures) {
  auto const k3 = ColourGraph::complete(3).invariants();
  EXPECT_EQ(k3.min_valency, 2U);
  EXPECT_EQ(k3.longest_induced_path, 1U);
  EXPECT_EQ(k3.largest_component, 3U);

  auto const p4 = ColourGraph::path(4).invariants();
  EXPECT_EQ(p4.min_valency, 1U);
  EXPECT_EQ(p4.longest_induced_path, 3U);
  EXPECT_EQ(p4.largest_component, 4U);

  auto const c5 = ColourGraph::cycle(5).invariants();
  EXPECT_EQ(c5.min_valency, 2U);
  EXPECT_EQ(c5.longest_induced_path, 3U);
  EXPECT_EQ(c5.largest_component, 5U);

  auto const e2 = ColourGraph::edgeless(2).invariants();
  EXPECT_FALSE(e2.min_valency.has_value());
  EXPECT_EQ(e2.longest_induced_path, 0U);
  EXPECT_EQ(e2.largest_component, 1U);
  EXPECT_EQ(e2.components.size(), 2U);
}

TEST(Invariants, PathAndCompleteFamilies) {
  for (unsigned n = 2; n <= 7; ++n) {
    auto const path = ColourGraph::path(n).invariants();
    EXPECT_EQ(path.min_valency, 1U);
    EXPECT_EQ(path.longest_induced_path, n - 1);
    auto const complete = ColourGraph::complete(n).invariants();
    EXPECT_EQ(complete.min_valency, n - 1);
    EXPECT_EQ(complete.longest_induced_path, 1U);
  }
}

TEST(Invariants, CutoffBoundsPathSearch) {
  EXPECT_EQ(ColourGraph::path(6).invariants(3).longest_induced_path, 2U);
}

TEST(ColourGraph, RejectsBadEdges) {
  EXPECT_THROW(ColourGraph({"0", "1"}, {{0, 0}}), Error);
  EXPECT_THROW(ColourGraph({"0", "1"}, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(ColourGraph({"0", "0"}, {}), Error);
}

TEST(ColourGraph, InducedSubgraphKeepsNamesAndEdges) {
  auto const p4  = ColourGraph::path(4);
  auto const sub = p4.induced(set_of({1, 2, 3}));
  EXPECT_EQ(sub.names(), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_TRUE(sub.adjacent(0, 1));
  EXPECT_TRUE(sub.adjacent(1, 2));
  EXPECT_FALSE(sub.adjacent(0, 2));
}
