#include "coxflag/colour_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coxflag/error.hpp"

namespace coxflag {

  namespace colours {
    std::vector<Colour> to_vector(ColourSet s) {
      std::vector<Colour> out;
      for (; s != 0; s &= s - 1) {
        out.push_back(lowest(s));
      }
      return out;
    }
  }  // namespace colours

  namespace {
    std::vector<std::string> default_names(unsigned n) {
      std::vector<std::string> names;
      for (unsigned i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return names;
    }
  }  // namespace

  ColourGraph::ColourGraph(std::vector<std::string>                    names,
                           std::vector<std::pair<Colour, Colour>> const& edges)
      : _names(std::move(names)), _adjacent(_names.size(), 0) {
    if (_names.size() > max_colours) {
      throw Error(ErrorCode::parse_error,
                  "at most " + std::to_string(max_colours) + " colours");
    }
    std::set<std::string> seen(_names.begin(), _names.end());
    if (seen.size() != _names.size()) {
      throw Error(ErrorCode::parse_error, "duplicate colour identifier");
    }
    for (auto [a, b] : edges) {
      if (a >= size() || b >= size()) {
        throw Error(ErrorCode::parse_error, "edge references unknown colour");
      }
      if (a == b) {
        throw Error(ErrorCode::parse_error,
                    "self edge on colour " + _names[a]);
      }
      if (adjacent(a, b)) {
        throw Error(ErrorCode::parse_error,
                    "duplicate edge " + _names[a] + "-" + _names[b]);
      }
      _adjacent[a] |= colours::single(b);
      _adjacent[b] |= colours::single(a);
    }
  }

  ColourGraph ColourGraph::path(unsigned n) {
    std::vector<std::pair<Colour, Colour>> edges;
    for (unsigned i = 0; i + 1 < n; ++i) {
      edges.emplace_back(i, i + 1);
    }
    return ColourGraph(default_names(n), edges);
  }

  ColourGraph ColourGraph::complete(unsigned n) {
    std::vector<std::pair<Colour, Colour>> edges;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) {
        edges.emplace_back(i, j);
      }
    }
    return ColourGraph(default_names(n), edges);
  }

  ColourGraph ColourGraph::cycle(unsigned n) {
    std::vector<std::pair<Colour, Colour>> edges;
    for (unsigned i = 0; i < n; ++i) {
      unsigned const j = (i + 1) % n;
      if (n > 2 || i < j) {
        edges.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
    return ColourGraph(default_names(n), edges);
  }

  ColourGraph ColourGraph::edgeless(unsigned n) {
    return ColourGraph(default_names(n), {});
  }

  std::string const& ColourGraph::name(Colour c) const {
    return _names.at(c);
  }

  std::optional<Colour> ColourGraph::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Colour>(it - _names.begin());
  }

  ColourSet ColourGraph::neighbours(ColourSet s) const {
    ColourSet out = 0;
    for (; s != 0; s &= s - 1) {
      out |= _adjacent[colours::lowest(s)];
    }
    return out;
  }

  std::vector<std::pair<Colour, Colour>> ColourGraph::edges() const {
    std::vector<std::pair<Colour, Colour>> out;
    for (Colour a = 0; a < size(); ++a) {
      for (Colour b = a + 1; b < size(); ++b) {
        if (adjacent(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  bool ColourGraph::has_edges() const {
    return std::any_of(
        _adjacent.begin(), _adjacent.end(), [](ColourSet n) { return n != 0; });
  }

  bool ColourGraph::is_connected(ColourSet s) const {
    if (s == 0) {
      return false;
    }
    ColourSet reached = colours::single(colours::lowest(s));
    ColourSet frontier = reached;
    while (frontier != 0) {
      frontier = neighbours(frontier) & s & ~reached;
      reached |= frontier;
    }
    return reached == s;
  }

  std::vector<Letter> ColourGraph::components(ColourSet s) const {
    std::vector<Letter> out;
    while (s != 0) {
      ColourSet reached  = colours::single(colours::lowest(s));
      ColourSet frontier = reached;
      while (frontier != 0) {
        frontier = neighbours(frontier) & s & ~reached;
        reached |= frontier;
      }
      out.emplace_back(reached);
      s &= ~reached;
    }
    return out;
  }

  bool ColourGraph::is_letter(ColourSet s) const {
    return colours::is_subset(s, all()) && is_connected(s);
  }

  Letter ColourGraph::letter(ColourSet s) const {
    if (!colours::is_subset(s, all())) {
      throw Error(ErrorCode::invalid_letter, "unknown colour in letter");
    }
    if (!is_connected(s)) {
      throw Error(ErrorCode::invalid_letter,
                  s == 0 ? "empty letter" : "disconnected colour set");
    }
    return Letter(s);
  }

  std::pair<Colour, Colour> ColourGraph::removable_pair(Letter s) const {
    if (s.size() < 2) {
      throw Error(ErrorCode::singleton_letter,
                  "a removable pair needs at least two colours");
    }
    std::vector<Colour> found;
    for (Colour c : colours::to_vector(s.support())) {
      if (is_connected(s.support() & ~colours::single(c))) {
        found.push_back(c);
        if (found.size() == 2) {
          break;
        }
      }
    }
    return {found.at(0), found.at(1)};
  }

  std::vector<Letter> ColourGraph::letters(unsigned max_size) const {
    std::set<ColourSet>    seen;
    std::vector<ColourSet> layer;
    for (Colour c = 0; c < size(); ++c) {
      layer.push_back(colours::single(c));
    }
    std::vector<ColourSet> found;
    for (unsigned k = 1; k <= max_size && !layer.empty(); ++k) {
      std::sort(layer.begin(), layer.end(), [](ColourSet a, ColourSet b) {
        return colours::lex_compare(a, b) < 0;
      });
      found.insert(found.end(), layer.begin(), layer.end());
      std::set<ColourSet> next;
      for (ColourSet s : layer) {
        for (ColourSet n = neighbours(s) & ~s; n != 0; n &= n - 1) {
          ColourSet const t = s | colours::single(colours::lowest(n));
          if (seen.insert(t).second) {
            next.insert(t);
          }
        }
      }
      layer.assign(next.begin(), next.end());
    }
    std::vector<Letter> out;
    for (ColourSet s : found) {
      out.emplace_back(s);
    }
    return out;
  }

  GraphInvariants ColourGraph::invariants(unsigned path_cutoff) const {
    GraphInvariants result;
    for (Colour c = 0; c < size(); ++c) {
      unsigned const degree = colours::size(_adjacent[c]);
      if (degree > 0
          && (!result.min_valency || degree < *result.min_valency)) {
        result.min_valency = degree;
      }
    }
    for (Letter comp : components(all())) {
      result.components.push_back(comp.support());
      result.largest_component
          = std::max(result.largest_component, comp.size());
    }
    // Depth-first search over induced paths, extended at the last vertex only.
    unsigned                                          best = 0;
    std::function<void(ColourSet, Colour, unsigned)> extend
        = [&](ColourSet path, Colour last, unsigned length) {
            best = std::max(best, length);
            if (length + 1 >= path_cutoff) {
              return;
            }
            ColourSet const inner = path & ~colours::single(last);
            ColourSet       next  = _adjacent[last] & ~path & ~neighbours(inner);
            for (; next != 0; next &= next - 1) {
              Colour const c = colours::lowest(next);
              extend(path | colours::single(c), c, length + 1);
            }
          };
    for (Colour c = 0; c < size(); ++c) {
      extend(colours::single(c), c, 0);
    }
    result.longest_induced_path = best;
    return result;
  }

  ColourGraph ColourGraph::induced(ColourSet subset) const {
    std::vector<Colour>      keep = colours::to_vector(subset & all());
    std::vector<std::string> names;
    for (Colour c : keep) {
      names.push_back(_names[c]);
    }
    std::vector<std::pair<Colour, Colour>> edges;
    for (Colour i = 0; i < keep.size(); ++i) {
      for (Colour j = i + 1; j < keep.size(); ++j) {
        if (adjacent(keep[i], keep[j])) {
          edges.emplace_back(i, j);
        }
      }
    }
    return ColourGraph(std::move(names), edges);
  }

}  // namespace coxflag
