#ifndef COXFLAG_IO_HPP_
#define COXFLAG_IO_HPP_

#include <string>

#include <json.hpp>

#include "coxflag/chamber.hpp"
#include "coxflag/colour_graph.hpp"
#include "coxflag/gspace.hpp"

namespace coxflag::io {

  using Json = nlohmann::ordered_json;

  // Malformed JSON and unreadable files raise ParseError.
  Json read_json(std::string const& path);
  Json parse_json(std::string const& text);

  // {"colours": [...], "edges": [[a, b], ...]} with colours given by name.
  ColourGraph graph_from_json(Json const& j);
  Json        to_json(ColourGraph const& g);

  // {"chambers": n, "partitions": {"colour": [[ids], ...]}}
  ChamberSystem chambers_from_json(ColourGraph const& g, Json const& j);
  Json          to_json(ChamberSystem const& x);

  // {"colours": [...], "vertices": [{"id": k, "colour": "c"}], "edges": [[i, j], ...]}
  // The colour list must match the graph; ids must be 0..n-1.
  GammaSpace space_from_json(ColourGraph const& g, Json const& j);
  Json       to_json(GammaSpace const& m);

  // {"colour": vertex id} for every colour; NotAFlag unless it is a flag of m.
  Flag flag_from_json(GammaSpace const& m, Json const& j);
  Json flag_to_json(ColourGraph const& g, Flag const& f);

  Json to_json(ColourGraph const& g, FlagPath const& p);

}  // namespace coxflag::io

#endif  // COXFLAG_IO_HPP_
