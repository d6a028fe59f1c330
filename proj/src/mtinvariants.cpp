#include "coxflag/mtinvariants.hpp"

#include "coxflag/error.hpp"

namespace coxflag {

  Ordinal morley_rank(ColourGraph const& g) {
    if (g.size() == 0) {
      throw Error(ErrorCode::parse_error, "Morley rank needs a colour");
    }
    return Ordinal::omega_power(g.invariants(0).largest_component - 1);
  }

  AmpleBounds ample_bounds(ColourGraph const& g) {
    GraphInvariants const inv = g.invariants();
    if (!inv.min_valency) {
      throw Error(ErrorCode::no_edges, "edge-free theories are not 1-ample");
    }
    return AmpleBounds{inv.longest_induced_path, g.size() - *inv.min_valency + 1};
  }

  Ordinal type_rank(ColourGraph const& g, Word const& u) {
    return rank(g, u);
  }

}  // namespace coxflag
