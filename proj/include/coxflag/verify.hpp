#ifndef COXFLAG_VERIFY_HPP_
#define COXFLAG_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxflag/chamber.hpp"
#include "coxflag/colour_graph.hpp"
#include "coxflag/gspace.hpp"
#include "coxflag/random.hpp"
#include "coxflag/words.hpp"

namespace coxflag::verify {

  // Each check returns a description of the failure, or nothing.
  using Outcome = std::optional<std::string>;

  // All rewrite sequences of u lead to one normal form, that of reduce_concat.
  Outcome check_confluence(ColourGraph const& g, Word const& u);
  // The decomposition is valid, matches [u.v] and is the only one.
  Outcome check_symmetric_case(ColourGraph const& g, Word const& u, Word const& v);
  // [x.u] below v iff x below divide(v, u), for every x in xs.
  Outcome check_division_case(ColourGraph const&       g,
                              Word const&              v,
                              Word const&              u,
                              std::vector<Word> const& xs);
  // Right absorption by u is the order ideal of sr(u).
  Outcome check_sr_case(ColourGraph const& g, Word const& u, std::vector<Word> const& xs);
  Outcome check_rank_case(ColourGraph const& g, Word const& u);

  // Axioms (b), (c), (d), the (†) identity and the dual properties.
  Outcome check_building(ChamberSystem const& x);
  // Both round trips of the bi-interpretation are isomorphisms.
  Outcome check_round_trips(ChamberSystem const& x);
  Outcome check_space_round_trip(GammaSpace const& m);

  // Same-word paths between the same flags agree off the wobbling sets.
  Outcome check_wobbling(ColourGraph const& g, FlagPath const& p, FlagPath const& q);
  // The hull of a is nice, rigid over a and incompressible.
  Outcome check_hull(FlagComplex const& m, VertexSet const& a);
  // The pairwise words of three flags decompose, and the base-point flag
  // occurs on a reduced path between the outer two.
  Outcome check_triangle(FlagComplex const& m, FlagId f, FlagId g, FlagId h);

  // The K2 space whose graph is a four-cycle.
  GammaSpace four_cycle_space();
  // Random towers of simple extensions with small letters, grown on a
  // realised word so that same-word paths can wobble.
  GammaSpace wobbling_space(ColourGraph const& g, Rng& rng);
  // A reduced word below v, or v itself when sampling fails.
  Word sample_below(ColourGraph const& g, Word const& v, Rng& rng);
  std::vector<ColourGraph> standard_graphs();

  enum class SuiteSize { small, medium, large };

  struct Failure {
    std::size_t   case_index = 0;
    std::uint64_t seed       = 0;
    std::string   message;
    // The smallest failing input found, in the external formats.
    std::string counterexample;
  };

  struct VerifyReport {
    std::string          suite;
    std::size_t          cases = 0;
    std::vector<Failure> failures;

    bool passed() const {
      return failures.empty();
    }
  };

  std::vector<std::string> const& suite_names();

  // Throws ParseError for an unknown suite name.
  VerifyReport run_verify_suite(std::string_view name, std::uint64_t seed, SuiteSize size);

}  // namespace coxflag::verify

#endif  // COXFLAG_VERIFY_HPP_
