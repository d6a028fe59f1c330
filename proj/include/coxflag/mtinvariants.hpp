#ifndef COXFLAG_MTINVARIANTS_HPP_
#define COXFLAG_MTINVARIANTS_HPP_

#include <cstddef>

#include "coxflag/colour_graph.hpp"
#include "coxflag/ordinal.hpp"
#include "coxflag/words.hpp"

namespace coxflag {

  struct AmpleBounds {
    // The theory is lower-ample but not strict_upper-ample.
    unsigned lower        = 0;
    unsigned strict_upper = 0;

    friend bool operator==(AmpleBounds const&, AmpleBounds const&) = default;
  };

  // omega^(K-1) for the largest component size K.
  Ordinal morley_rank(ColourGraph const& g);

  // Throws NoEdges on edge-free graphs.
  AmpleBounds ample_bounds(ColourGraph const& g);

  Ordinal type_rank(ColourGraph const& g, Word const& u);

}  // namespace coxflag

#endif  // COXFLAG_MTINVARIANTS_HPP_
