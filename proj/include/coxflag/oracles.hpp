#ifndef COXFLAG_ORACLES_HPP_
#define COXFLAG_ORACLES_HPP_

// Brute-force reference implementations.  Everything here works on explicit
// sequences and definitions only, and is meant for small inputs.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "coxflag/colour_graph.hpp"
#include "coxflag/ordinal.hpp"
#include "coxflag/words.hpp"

namespace coxflag::oracle {

  // Trace equivalence via projections onto pairs of non-commuting letters.
  bool equivalent(ColourGraph const& g, Word const& u, Word const& v);

  // Every sequence reachable from u by swapping adjacent commuting letters.
  std::set<Word> linearisations(ColourGraph const& g, Word const& u);

  // Canonical representative: least linearisation under the letter order.
  Word canonical(ColourGraph const& g, Word const& u);

  bool is_reduced(ColourGraph const& g, Word const& u);

  bool absorbed(ColourGraph const& g,
                Word const&        t,
                Word const&        u,
                Side               side,
                bool               proper);

  // Canonical forms of all irreducible classes reachable from u by single
  // Commutation and Absorption steps.
  std::set<Word> nonsplitting_normal_forms(ColourGraph const& g, Word const& u);

  // u below v: some simultaneous replacement of letters of v by splittings
  // is equivalent to u.
  bool preceq(ColourGraph const& g, Word const& u, Word const& v);

  // All reduced words of length at most n over the given letters, one per
  // equivalence class, in canonical form.
  std::vector<Word> reduced_words(ColourGraph const&         g,
                                  std::vector<Letter> const& letters,
                                  std::size_t                max_length);

  // All ways u ~ a.b.c with a, b, c canonical.
  std::set<std::vector<Word>> three_part_splits(ColourGraph const& g,
                                                Word const&        u);

  // All symmetric decompositions (u1, u', w, v', v1) of (u, v) that satisfy
  // the defining conditions.
  std::set<std::vector<Word>> symmetric_decompositions(ColourGraph const& g,
                                                       Word const&        u,
                                                       Word const&        v);

  // Foundation rank of a reduced singleton word in the order of splittings.
  unsigned singleton_foundation_rank(ColourGraph const& g, Word const& u);

  // Whether target (reduced) is reachable from start under all rules, with
  // splittings of length at most max_split and words of length at most
  // max_length.
  bool is_reduct(ColourGraph const& g,
                 Word const&        start,
                 Word const&        target,
                 std::size_t        max_split,
                 std::size_t        max_length);

  // One random maximal reduction of u under all rules.
  Word random_reduction(ColourGraph const& g, Word u, std::mt19937_64& rng);

  Word random_word(std::vector<Letter> const& letters,
                   std::size_t                max_length,
                   std::mt19937_64&           rng);

  Word random_reduced_word(ColourGraph const&         g,
                           std::vector<Letter> const& letters,
                           std::size_t                max_length,
                           std::mt19937_64&           rng);

}  // namespace coxflag::oracle

#endif  // COXFLAG_ORACLES_HPP_
