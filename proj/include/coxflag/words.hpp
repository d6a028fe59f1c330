#ifndef COXFLAG_WORDS_HPP_
#define COXFLAG_WORDS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxflag/colour_graph.hpp"
#include "coxflag/ordinal.hpp"

namespace coxflag {

  using Word = std::vector<Letter>;

  // Text form: letters "{c1,c2}" joined by ".", the empty word is "1".
  std::string to_string(ColourGraph const& g, Letter s);
  std::string to_string(ColourGraph const& g, Word const& u);
  Word        parse_word(ColourGraph const& g, std::string_view text);

  ColourSet support(Word const& u);
  Word      inverse(Word const& u);
  Word      concat(Word const& u, Word const& v);
  Word      commuting_word(ColourGraph const& g, ColourSet s);
  bool      is_commuting(ColourGraph const& g, Word const& u);
  bool      words_commute(ColourGraph const& g, Word const& u, Word const& v);
  Word      cent_word(ColourGraph const& g, Word const& v, Letter s);

  Word normal_form(ColourGraph const& g, Word const& u);
  bool equivalent(ColourGraph const& g, Word const& u, Word const& v);
  bool is_reduced(ColourGraph const& g, Word const& u);
  void require_reduced(ColourGraph const& g, Word const& u);

  // The non-splitting reduct of an arbitrary word, in normal form.
  Word reduce(ColourGraph const& g, Word const& u);
  Word reduce_concat(ColourGraph const& g, Word const& u, Word const& v);

  bool preceq(ColourGraph const& g, Word const& u, Word const& v);
  bool prec(ColourGraph const& g, Word const& u, Word const& v);

  enum class Side { left, right };

  bool absorbed(ColourGraph const& g,
                Word const&        t,
                Word const&        u,
                Side               side,
                bool               proper = false);

  struct Segments {
    std::vector<Letter> beginnings;
    std::vector<Letter> ends;
    Word                initial;
    Word                final;
  };

  Segments segments(ColourGraph const& g, Word const& u);

  // rest with u ~ prefix.rest (resp. rest.suffix), if any.
  std::optional<Word> strip_prefix(ColourGraph const& g,
                                   Word const&        u,
                                   Word const&        prefix);
  std::optional<Word> strip_suffix(ColourGraph const& g,
                                   Word const&        u,
                                   Word const&        suffix);

  // All (a, b) with u ~ a.b, one per prefix of the trace of u.
  std::vector<std::pair<Word, Word>> factorisations(ColourGraph const& g,
                                                    Word const&        u);

  enum class Affix { initial, final };

  Word common_affix(ColourGraph const& g,
                    Word const&        u,
                    Word const&        v,
                    Affix              side);

  struct SymDecomposition {
    Word u1;
    Word u_prime;
    Word w;
    Word v_prime;
    Word v1;

    friend bool operator==(SymDecomposition const&, SymDecomposition const&)
        = default;
  };

  SymDecomposition symmetric_decomposition(ColourGraph const& g,
                                           Word const&        u,
                                           Word const&        v);

  // Empty when d satisfies every defining condition for (u, v).
  std::optional<std::string>
  check_symmetric_decomposition(ColourGraph const&      g,
                                Word const&             u,
                                Word const&             v,
                                SymDecomposition const& d);

  Word      divide(ColourGraph const& g, Word const& v, Word const& u);
  Word      sr(ColourGraph const& g, Word const& u);
  ColourSet wobbling(ColourGraph const& g, Word const& u, Word const& v);
  Word      back_and_forth(ColourGraph const& g, Word const& u);

  bool satisfies_E(ColourGraph const& g, Word const& w, Letter s, unsigned n);

  // Least number of consecutive blocks with support properly inside s that
  // some permutation of w splits into; nullopt when none exists.
  std::optional<unsigned> proper_block_count(ColourGraph const& g,
                                             Word const&        w,
                                             Letter             s);

  enum class RankKind { rd, rkl };

  Ordinal rank(ColourGraph const& g, Word const& u, RankKind kind = RankKind::rd);

  struct TriangleDecomposition {
    Word u1;
    Word v1;
    Word c;
    Word x;
    Word alpha;
    Word beta;

    friend bool operator==(TriangleDecomposition const&,
                           TriangleDecomposition const&)
        = default;
  };

  TriangleDecomposition triangle_decompose(ColourGraph const& g,
                                           Word const&        u,
                                           Word const&        v,
                                           Word const&        w);

  // Every decomposition of the triangle shape, one per class of parts.
  std::vector<TriangleDecomposition> triangle_decompositions(
      ColourGraph const& g,
      Word const&        u,
      Word const&        v,
      Word const&        w);

  std::optional<std::string>
  check_triangle_decomposition(ColourGraph const&           g,
                               Word const&                  u,
                               Word const&                  v,
                               Word const&                  w,
                               TriangleDecomposition const& d);

  struct PairReduction {
    Word u1;
    Word v1;
    Word x1;
    Word x2;
    Word v2;
    Word u2;
    Word w1_star;
    Word w2_star;
  };

  // Chooses the replacement when two equal letters meet; the default is the
  // empty splitting.
  using Splitter = std::function<Word(Letter)>;

  PairReduction reduce_pair_flanked(ColourGraph const& g,
                                    Word const&        w1,
                                    Word const&        w,
                                    Word const&        w2,
                                    Splitter const&    splitter = {});

  std::optional<std::string> check_pair_reduction(ColourGraph const&   g,
                                                  Word const&          w1,
                                                  Word const&          w,
                                                  Word const&          w2,
                                                  PairReduction const& r);

}  // namespace coxflag

#endif  // COXFLAG_WORDS_HPP_
