#include <gtest/gtest.h>

#include <random>

#include "coxflag/error.hpp"
#include "coxflag/oracles.hpp"
#include "coxflag/words.hpp"

using namespace coxflag;

namespace {
  ColourGraph const p3 = ColourGraph::path(3);
  ColourGraph const p4 = ColourGraph::path(4);
  ColourGraph const k3 = ColourGraph::complete(3);

  Word W(ColourGraph const& g, char const* text) {
    return parse_word(g, text);
  }

  std::string S(ColourGraph const& g, Word const& u) {
    return to_string(g, u);
  }

  template <typename F>
  void expect_error(ErrorCode code, F&& f) {
    try {
      f();
      ADD_FAILURE() << "expected " << to_string(code);
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), code) << e.what();
    }
  }
}  // namespace

TEST(ParseWord, Grammar) {
  EXPECT_EQ(W(p3, "{0,1}.{2}").size(), 2U);
  EXPECT_TRUE(W(p3, "1").empty());
  EXPECT_EQ(S(p3, W(p3, "{1,0}.{2}")), "{0,1}.{2}");
  expect_error(ErrorCode::invalid_letter, [] { W(p3, "{0,2}"); });
  expect_error(ErrorCode::invalid_letter, [] { W(p3, "{7}"); });
  expect_error(ErrorCode::parse_error, [] { W(p3, "{0}."); });
  expect_error(ErrorCode::parse_error, [] { W(p3, "{0}{1}"); });
  expect_error(ErrorCode::parse_error, [] { W(p3, ""); });
  expect_error(ErrorCode::parse_error, [] { W(p3, "{0,0}"); });
}

TEST(CentWord, Examples) {
  EXPECT_EQ(S(p4, cent_word(p4, W(p4, "{1,2,3}"), Letter(1))), "{2,3}");
  EXPECT_EQ(S(p3, cent_word(p3, W(p3, "{0,1,2}"), Letter(2))), "1");
  EXPECT_TRUE(cent_word(p3, {}, Letter(1)).empty());
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(S(p3, normal_form(p3, W(p3, "{2}.{0}"))), "{0}.{2}");
  EXPECT_EQ(S(p3, normal_form(p3, W(p3, "{1}.{0}"))), "{1}.{0}");
  EXPECT_TRUE(normal_form(p3, {}).empty());
}

TEST(NormalForm, AgreesWithBruteForceCanonicalForm) {
  std::mt19937_64 rng(11);
  for (auto const* g : {&p3, &p4, &k3}) {
    auto const letters = g->letters(g->size());
    for (int i = 0; i < 300; ++i) {
      Word const u = oracle::random_word(letters, 6, rng);
      EXPECT_EQ(normal_form(*g, u), oracle::canonical(*g, u));
      Word const v = oracle::random_word(letters, 6, rng);
      EXPECT_EQ(equivalent(*g, u, v), oracle::equivalent(*g, u, v));
      auto lins = oracle::linearisations(*g, u);
      Word const other = *lins.rbegin();
      EXPECT_TRUE(equivalent(*g, u, other));
    }
  }
}

TEST(IsReduced, Examples) {
  EXPECT_FALSE(is_reduced(p3, W(p3, "{0}.{2}.{0}")));
  EXPECT_TRUE(is_reduced(p3, W(p3, "{0}.{1}.{0}")));
  EXPECT_TRUE(is_reduced(p3, {}));
}

TEST(IsReduced, AgreesWithAdjacentAbsorptionOverAllPermutations) {
  std::mt19937_64 rng(12);
  for (auto const* g : {&p3, &p4, &k3}) {
    auto const letters = g->letters(g->size());
    for (int i = 0; i < 300; ++i) {
      Word const u = oracle::random_word(letters, 6, rng);
      EXPECT_EQ(is_reduced(*g, u), oracle::is_reduced(*g, u)) << S(*g, u);
    }
  }
}

TEST(ReduceConcat, Examples) {
  EXPECT_EQ(S(p3, reduce_concat(p3, W(p3, "{0}"), W(p3, "{0}"))), "{0}");
  EXPECT_EQ(S(p3, reduce_concat(p3, W(p3, "{0,1}.{0}"), {})), "{0,1}");
  EXPECT_EQ(S(p3, reduce_concat(p3, W(p3, "{1}.{0}"), W(p3, "{2}"))),
            "{1}.{0}.{2}");
}

TEST(ReduceConcat, UniqueNonSplittingNormalForm) {
  std::mt19937_64 rng(13);
  for (auto const* g : {&p3, &p4, &k3}) {
    auto const letters = g->letters(g->size());
    for (int i = 0; i < 100; ++i) {
      Word const u     = oracle::random_word(letters, 5, rng);
      auto const forms = oracle::nonsplitting_normal_forms(*g, u);
      ASSERT_EQ(forms.size(), 1U) << S(*g, u);
      EXPECT_EQ(*forms.begin(), reduce(*g, u)) << S(*g, u);
      EXPECT_TRUE(is_reduced(*g, reduce(*g, u)));
    }
  }
}

TEST(Preceq, Examples) {
  EXPECT_TRUE(preceq(p3, W(p3, "{0}"), W(p3, "{0,1}")));
  EXPECT_FALSE(preceq(p3, W(p3, "{0,1}"), W(p3, "{0}")));
  Word const u = W(p3, "{0,1}.{2}");
  EXPECT_TRUE(preceq(p3, u, u));
  EXPECT_TRUE(preceq(p3, W(p3, "{2}.{0,1}.{0}"), W(p3, "{1,2}.{0,1}.{0,1,2}")));
  EXPECT_TRUE(prec(p3, W(p3, "{0}.{1}"), W(p3, "{0,1}")));
  EXPECT_FALSE(prec(p3, W(p3, "{0,1}"), W(p3, "{0,1}")));
}

TEST(Preceq, AgreesWithBruteForceOnSmallReducedWords) {
  for (auto const* g : {&p3, &k3}) {
    auto const words = oracle::reduced_words(*g, g->letters(g->size()), 3);
    for (Word const& u : words) {
      for (Word const& v : words) {
        EXPECT_EQ(preceq(*g, u, v), oracle::preceq(*g, u, v))
            << S(*g, u) << " vs " << S(*g, v);
      }
    }
  }
}

TEST(Preceq, MonotoneUnderNonSplittingReduction) {
  auto const words = oracle::reduced_words(p3, p3.letters(3), 2);
  for (Word const& u : words) {
    for (Word const& v : words) {
      EXPECT_TRUE(preceq(p3, u, reduce_concat(p3, u, v)));
      for (Word const& x : words) {
        if (preceq(p3, x, v)) {
          EXPECT_TRUE(preceq(p3, reduce_concat(p3, u, x), reduce_concat(p3, u, v)));
        }
      }
    }
  }
}

TEST(Absorption, Examples) {
  EXPECT_TRUE(absorbed(p3, W(p3, "{0}"), W(p3, "{1}.{0}"), Side::right));
  EXPECT_TRUE(absorbed(p3, W(p3, "{2}"), W(p3, "{1,2}.{0}"), Side::right));
  EXPECT_FALSE(absorbed(p3, W(p3, "{1}"), W(p3, "{1,2}.{0}"), Side::right));
  EXPECT_FALSE(absorbed(p3, W(p3, "{0}"), W(p3, "{1}.{0}"), Side::right, true));
  expect_error(ErrorCode::not_reduced, [] {
    absorbed(p3, W(p3, "{0}"), W(p3, "{0}.{0}"), Side::left);
  });
}

TEST(Absorption, EquivalentToStabilisation) {
  auto const words = oracle::reduced_words(p4, p4.letters(4), 2);
  for (Word const& t : words) {
    for (Word const& u : words) {
      bool const right = absorbed(p4, t, u, Side::right);
      EXPECT_EQ(right, equivalent(p4, reduce_concat(p4, u, t), u));
      EXPECT_EQ(right, oracle::absorbed(p4, t, u, Side::right, false));
      bool const left = absorbed(p4, t, u, Side::left);
      EXPECT_EQ(left, equivalent(p4, reduce_concat(p4, t, u), u));
    }
    // A reduced word is commuting iff it left-absorbs itself.
    EXPECT_EQ(is_commuting(p4, t), absorbed(p4, t, t, Side::left));
  }
}

TEST(Segments, Examples) {
  auto const a = segments(p3, W(p3, "{1}.{0}"));
  EXPECT_EQ(a.ends, (std::vector<Letter>{Letter(1)}));
  EXPECT_EQ(a.beginnings, (std::vector<Letter>{Letter(2)}));
  EXPECT_EQ(S(p3, a.final), "{0}");
  auto const b = segments(p3, W(p3, "{0}.{2}"));
  EXPECT_EQ(b.beginnings, b.ends);
  EXPECT_EQ(S(p3, b.initial), "{0}.{2}");
  EXPECT_EQ(S(p3, b.final), "{0}.{2}");
  auto const e = segments(p3, {});
  EXPECT_TRUE(e.beginnings.empty() && e.ends.empty() && e.initial.empty()
              && e.final.empty());
}

TEST(CommonAffix, Examples) {
  EXPECT_EQ(S(p3, common_affix(p3, W(p3, "{0}.{1}"), W(p3, "{0}.{2}"), Affix::initial)),
            "{0}");
  EXPECT_TRUE(common_affix(p3, W(p3, "{0}"), W(p3, "{1}"), Affix::initial).empty());
  Word const u = W(p3, "{1}.{0}.{2}");
  EXPECT_EQ(common_affix(p3, u, u, Affix::initial), normal_form(p3, u));
  EXPECT_EQ(common_affix(p3, u, u, Affix::final), normal_form(p3, u));
}

TEST(CommonAffix, IsTheLargestCommonPrefix) {
  auto const words = oracle::reduced_words(p4, p4.letters(2), 3);
  for (Word const& u : words) {
    for (Word const& v : words) {
      Word const c = common_affix(p4, u, v, Affix::initial);
      auto const a = strip_prefix(p4, u, c);
      auto const b = strip_prefix(p4, v, c);
      ASSERT_TRUE(a && b);
      // Every common prefix is a prefix of c.
      for (auto const& [p, rest] : factorisations(p4, u)) {
        if (strip_prefix(p4, v, p)) {
          EXPECT_TRUE(strip_prefix(p4, c, p).has_value());
        }
      }
    }
  }
}

TEST(Cancellation, LeftFactorIsCancellable) {
  auto const words = oracle::reduced_words(p3, p3.letters(3), 2);
  for (Word const& u : words) {
    for (Word const& a : words) {
      for (Word const& b : words) {
        if (equivalent(p3, concat(u, a), concat(u, b))) {
          EXPECT_TRUE(equivalent(p3, a, b));
        }
      }
    }
  }
}

TEST(SymmetricDecomposition, Examples) {
  auto const d1 = symmetric_decomposition(p3, W(p3, "{0}"), W(p3, "{0}.{1}"));
  EXPECT_EQ(d1, (SymDecomposition{{}, {}, W(p3, "{0}"), {}, W(p3, "{1}")}));
  EXPECT_EQ(S(p3, reduce_concat(p3, W(p3, "{0}"), W(p3, "{0}.{1}"))), "{0}.{1}");

  auto const d2 = symmetric_decomposition(p3, W(p3, "{1}.{0}"), W(p3, "{2}"));
  EXPECT_EQ(d2, (SymDecomposition{W(p3, "{1}.{0}"), {}, {}, {}, W(p3, "{2}")}));

  auto const d3 = symmetric_decomposition(p3, W(p3, "{0}"), W(p3, "{0,1}"));
  EXPECT_EQ(d3, (SymDecomposition{{}, W(p3, "{0}"), {}, {}, W(p3, "{0,1}")}));
  EXPECT_EQ(S(p3, reduce_concat(p3, W(p3, "{0}"), W(p3, "{0,1}"))), "{0,1}");

  expect_error(ErrorCode::not_reduced, [] {
    symmetric_decomposition(p3, W(p3, "{0}.{0}"), {});
  });
}

TEST(SymmetricDecomposition, ValidAndUniqueOnP4) {
  auto const words = oracle::reduced_words(p4, p4.letters(2), 2);
  for (Word const& u : words) {
    for (Word const& v : words) {
      auto const d = symmetric_decomposition(p4, u, v);
      EXPECT_EQ(check_symmetric_decomposition(p4, u, v, d), std::nullopt)
          << S(p4, u) << " | " << S(p4, v);
      auto const all = oracle::symmetric_decompositions(p4, u, v);
      ASSERT_EQ(all.size(), 1U) << S(p4, u) << " | " << S(p4, v);
      EXPECT_EQ(*all.begin(),
                (std::vector<Word>{d.u1, d.u_prime, d.w, d.v_prime, d.v1}));
    }
  }
}

TEST(Divide, Examples) {
  EXPECT_EQ(S(p3, divide(p3, W(p3, "{0,1,2}"), W(p3, "{0}"))), "{0,1,2}");
  EXPECT_EQ(S(p3, divide(p3, W(p3, "{0}"), W(p3, "{0}"))), "{0}");
  expect_error(ErrorCode::not_divisible,
               [] { divide(p3, W(p3, "{1}"), W(p3, "{0}")); });
}

TEST(Divide, ContractOnSmallWords) {
  auto const words = oracle::reduced_words(p3, p3.letters(3), 3);
  auto const xs    = oracle::reduced_words(p3, p3.letters(3), 3);
  for (Word const& v : words) {
    for (Word const& u : words) {
      if (!preceq(p3, u, v)) {
        continue;
      }
      Word const q = divide(p3, v, u);
      EXPECT_TRUE(is_reduced(p3, q));
      for (Word const& x : xs) {
        EXPECT_EQ(preceq(p3, reduce_concat(p3, x, u), v), preceq(p3, x, q))
            << "v=" << S(p3, v) << " u=" << S(p3, u) << " x=" << S(p3, x);
      }
    }
  }
}

TEST(Sr, Examples) {
  EXPECT_EQ(support(sr(p4, W(p4, "{1,2}.{0}"))), 0b101U);
  EXPECT_EQ(support(sr(p3, W(p3, "{0}.{2}"))), 0b101U);
  EXPECT_TRUE(sr(p3, {}).empty());
}

TEST(Sr, DualToRightAbsorption) {
  auto const words = oracle::reduced_words(p4, p4.letters(4), 2);
  auto const xs    = oracle::reduced_words(p4, p4.letters(4), 2);
  for (Word const& u : words) {
    Word const r = sr(p4, u);
    EXPECT_TRUE(is_commuting(p4, r));
    EXPECT_TRUE(preceq(p4, segments(p4, u).final, r));
    for (Word const& x : xs) {
      EXPECT_EQ(absorbed(p4, x, u, Side::right), preceq(p4, x, r))
          << S(p4, u) << " x=" << S(p4, x);
    }
  }
}

TEST(Wobbling, Examples) {
  EXPECT_EQ(wobbling(p4, W(p4, "{1,2}.{0}"), W(p4, "{2,3}")), 0b100U);
  EXPECT_EQ(wobbling(p3, W(p3, "{0}"), W(p3, "{1}")), 0U);
  EXPECT_EQ(wobbling(p3, W(p3, "{0}"), W(p3, "{1}.{0}")), 0U);
  expect_error(ErrorCode::not_reduced_concat,
               [] { wobbling(p3, W(p3, "{0}"), W(p3, "{0}")); });
}

TEST(Wobbling, NeverCoversEitherSide) {
  auto const words = oracle::reduced_words(p4, p4.letters(4), 2);
  for (Word const& u : words) {
    for (Word const& v : words) {
      if (u.empty() || v.empty() || !is_reduced(p4, concat(u, v))) {
        continue;
      }
      ColourSet const wob = wobbling(p4, u, v);
      EXPECT_NE(wob, support(u));
      EXPECT_NE(wob, support(v));
    }
  }
}

TEST(BackAndForth, Examples) {
  EXPECT_EQ(S(p3, back_and_forth(p3, W(p3, "{1}.{0}"))), "{1}.{0}.{1}");
  EXPECT_EQ(S(p3, back_and_forth(p3, W(p3, "{0}.{2}"))), "{0}.{2}");
  EXPECT_TRUE(back_and_forth(p3, {}).empty());
}

TEST(BackAndForth, MatchesFinalSegmentFormula) {
  auto const words = oracle::reduced_words(p4, p4.letters(4), 3);
  for (Word const& u : words) {
    Word const tail = segments(p4, u).final;
    auto const head = strip_suffix(p4, u, tail);
    ASSERT_TRUE(head);
    EXPECT_TRUE(equivalent(p4,
                           back_and_forth(p4, u),
                           concat(concat(*head, tail), inverse(*head))))
        << S(p4, u);
  }
}

TEST(PropertyE, Examples) {
  Letter const s01(0b11);
  EXPECT_TRUE(satisfies_E(p3, W(p3, "{0,1}"), s01, 1));
  EXPECT_FALSE(satisfies_E(p3, W(p3, "{0}.{1}"), s01, 2));
  EXPECT_TRUE(satisfies_E(p3, W(p3, "{0}.{1}"), s01, 1));
}

TEST(PropertyE, SpecialCases) {
  auto const words = oracle::reduced_words(p4, p4.letters(4), 3);
  for (Letter s : p4.letters(4)) {
    for (Word const& w : words) {
      bool const inside = colours::is_subset(support(w), s.support());
      EXPECT_EQ(satisfies_E(p4, w, s, 0), inside && !w.empty());
      EXPECT_EQ(satisfies_E(p4, w, s, 1), support(w) == s.support());
    }
  }
}

TEST(PropertyE, BlocksForceLongReducts) {
  // Words built from blocks with property E(s_i, n) over a reduced word
  // s_1...s_n keep length at least n under every reduction.
  std::mt19937_64 rng(14);
  auto const      letters = p4.letters(4);
  int             checked = 0;
  for (int trial = 0; trial < 4000 && checked < 150; ++trial) {
    Word const spine = oracle::random_reduced_word(p4, letters, 3, rng);
    if (spine.empty()) {
      continue;
    }
    unsigned const n = static_cast<unsigned>(spine.size());
    Word           whole;
    bool           ok = true;
    for (Letter s : spine) {
      std::vector<Letter> inside;
      for (Letter t : letters) {
        if (t.subset_of(s)) {
          inside.push_back(t);
        }
      }
      Word block;
      for (int attempt = 0; attempt < 50; ++attempt) {
        block = oracle::random_reduced_word(p4, inside, 4, rng);
        if (satisfies_E(p4, block, s, n)) {
          break;
        }
      }
      ok = ok && satisfies_E(p4, block, s, n);
      whole = concat(whole, block);
    }
    if (!ok) {
      continue;
    }
    ++checked;
    for (int r = 0; r < 5; ++r) {
      EXPECT_GE(oracle::random_reduction(p4, whole, rng).size(), n)
          << S(p4, whole);
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(p3, W(p3, "{0,1}.{1,2}.{0,1}")).to_string(), "w*3");
  EXPECT_EQ(rank(p3, W(p3, "{0}.{1}.{0}")), Ordinal::finite(3));
  EXPECT_TRUE(rank(p3, {}).is_zero());
  EXPECT_EQ(rank(p4, W(p4, "{0,1,2}.{1,2,3}")), Ordinal::omega_power(2, 2));
  expect_error(ErrorCode::unsupported_shape, [] { rank(p3, W(p3, "{0}.{1,2}")); });
}

TEST(Rank, InvariantUnderPermutationAndAdditive) {
  auto const words = oracle::reduced_words(p4, p4.letters(4), 3);
  for (Word const& u : words) {
    Ordinal r;
    try {
      r = rank(p4, u);
    } catch (Error const&) {
      continue;
    }
    for (Word const& lin : oracle::linearisations(p4, u)) {
      EXPECT_EQ(rank(p4, lin), r);
    }
  }
  Word const a = W(p4, "{0,1}");
  Word const b = W(p4, "{3}");
  EXPECT_EQ(rank(p4, concat(a, b)), rank(p4, a).natural_sum(rank(p4, b)));
}

TEST(Rank, SingletonWordsMatchFoundationRank) {
  auto const singles = p3.letters(1);
  auto const words   = oracle::reduced_words(p3, singles, 5);
  for (Word const& u : words) {
    EXPECT_EQ(rank(p3, u), Ordinal::finite(u.size()));
    EXPECT_EQ(oracle::singleton_foundation_rank(p3, u), u.size()) << S(p3, u);
  }
}

TEST(Triangle, Examples) {
  auto const t1 = triangle_decompose(p3, W(p3, "{0}"), W(p3, "{0}"), {});
  EXPECT_EQ(t1, (TriangleDecomposition{{}, {}, W(p3, "{0}"), {}, {}, {}}));

  auto const t2 = triangle_decompose(
      p3, W(p3, "{0,1}"), W(p3, "{0,1}"), W(p3, "{0}.{1}"));
  EXPECT_EQ(t2,
            (TriangleDecomposition{{}, {}, W(p3, "{0,1}"), W(p3, "{0}.{1}"), {}, {}}));

  auto const t3 = triangle_decompose(
      p3, W(p3, "{1}.{0}"), W(p3, "{2}"), W(p3, "{1}.{0}.{2}"));
  EXPECT_EQ(t3,
            (TriangleDecomposition{W(p3, "{1}.{0}"), W(p3, "{2}"), {}, {}, {}, {}}));

  expect_error(ErrorCode::not_a_reduct, [] {
    triangle_decompose(p3, W(p3, "{0}"), W(p3, "{1}"), W(p3, "{2}"));
  });
}

TEST(Triangle, DecompositionExistsExactlyForReducts) {
  auto const words = oracle::reduced_words(p3, p3.letters(3), 2);
  for (Word const& u : words) {
    for (Word const& v : words) {
      for (Word const& w : words) {
        auto const all = triangle_decompositions(p3, u, v, w);
        EXPECT_LE(all.size(), 1U);
        bool const reachable
            = oracle::is_reduct(p3, concat(u, v), w, 2, u.size() + v.size() + 1);
        EXPECT_EQ(!all.empty(), reachable)
            << S(p3, u) << " | " << S(p3, v) << " -> " << S(p3, w);
        for (auto const& d : all) {
          EXPECT_EQ(check_triangle_decomposition(p3, u, v, w, d), std::nullopt);
        }
      }
    }
  }
}

TEST(PairReduction, Examples) {
  auto const r1 = reduce_pair_flanked(p3, W(p3, "{0}"), {}, W(p3, "{0}"));
  EXPECT_EQ(S(p3, r1.v1), "{0}");
  EXPECT_EQ(S(p3, r1.v2), "{0}");
  EXPECT_TRUE(r1.x1.empty() || r1.x2.empty());
  EXPECT_TRUE(r1.u1.empty() && r1.u2.empty());

  auto const r2 = reduce_pair_flanked(p3, W(p3, "{1}"), W(p3, "{0}"), W(p3, "{2}"));
  EXPECT_EQ(S(p3, r2.u1), "{1}");
  EXPECT_EQ(S(p3, r2.u2), "{2}");
  EXPECT_TRUE(r2.v1.empty() && r2.v2.empty() && r2.x1.empty() && r2.x2.empty());

  auto const r3 = reduce_pair_flanked(p3, W(p3, "{0,1}"), {}, W(p3, "{0,1}"));
  EXPECT_EQ(S(p3, r3.v1), "{0,1}");
  EXPECT_EQ(S(p3, r3.v2), "{0,1}");
  EXPECT_TRUE(r3.x2.empty());
  EXPECT_TRUE(r3.u1.empty() && r3.u2.empty());
}

TEST(PairReduction, WitnessConditionsHold) {
  std::mt19937_64 rng(15);
  auto const      letters = p4.letters(4);
  Splitter const  halve   = [](Letter s) {
    Word y;
    for (Colour c : colours::to_vector(s.support())) {
      if (s.size() > 1) {
        y.push_back(Letter(colours::single(c)));
      }
    }
    if (y.size() > 1) {
      y.pop_back();
    }
    return y;
  };
  for (int i = 0; i < 400; ++i) {
    Word const w1 = oracle::random_reduced_word(p4, letters, 3, rng);
    Word const w  = oracle::random_word(letters, 1, rng);
    Word const w2 = oracle::random_reduced_word(p4, letters, 3, rng);
    for (Splitter const* sp : {static_cast<Splitter const*>(nullptr), &halve}) {
      auto const r = sp ? reduce_pair_flanked(p4, w1, w, w2, *sp)
                        : reduce_pair_flanked(p4, w1, w, w2);
      EXPECT_EQ(check_pair_reduction(p4, w1, w, w2, r), std::nullopt)
          << S(p4, w1) << " | " << S(p4, w) << " | " << S(p4, w2);
    }
  }
}
