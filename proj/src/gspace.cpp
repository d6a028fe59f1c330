#include "coxflag/gspace.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxflag/error.hpp"
#include "coxflag/random.hpp"

namespace coxflag {

  namespace {

    // Colours in breadth-first order, so that each colour after the first of
    // its component has an earlier neighbour.
    std::vector<Colour> search_order(ColourGraph const& g) {
      std::vector<Colour> order;
      std::vector<bool>   seen(g.size(), false);
      for (Colour root = 0; root < g.size(); ++root) {
        if (seen[root]) {
          continue;
        }
        seen[root] = true;
        std::deque<Colour> queue{root};
        while (!queue.empty()) {
          Colour const c = queue.front();
          queue.pop_front();
          order.push_back(c);
          for (Colour d : colours::to_vector(g.neighbours(c))) {
            if (!seen[d]) {
              seen[d] = true;
              queue.push_back(d);
            }
          }
        }
      }
      return order;
    }

    // Flags of m whose vertices all pass the filter.
    std::vector<Flag> enumerate_flags(GammaSpace const&        m,
                                      std::vector<bool> const& allowed) {
      ColourGraph const&                 g = m.graph();
      std::vector<std::vector<VertexId>> by_colour(g.size());
      for (VertexId v = 0; v < m.size(); ++v) {
        if (allowed[v]) {
          by_colour[m.colour(v)].push_back(v);
        }
      }
      std::vector<Colour> const order = search_order(g);
      std::vector<Flag>         out;
      if (g.size() == 0) {
        return out;
      }
      Flag flag(g.size(), 0);

      std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == order.size()) {
          out.push_back(flag);
          return;
        }
        Colour const c      = order[k];
        Colour       anchor = c;
        for (std::size_t j = 0; j < k; ++j) {
          if (g.adjacent(order[j], c)) {
            anchor = order[j];
            break;
          }
        }
        std::vector<VertexId> const* candidates = &by_colour[c];
        std::vector<VertexId>        near;
        if (anchor != c) {
          for (VertexId v : m.neighbours(flag[anchor])) {
            if (allowed[v] && m.colour(v) == c) {
              near.push_back(v);
            }
          }
          candidates = &near;
        }
        for (VertexId v : *candidates) {
          bool fits = true;
          for (std::size_t j = 0; j < k && fits; ++j) {
            Colour const d = order[j];
            fits           = g.adjacent(c, d) == m.adjacent(v, flag[d]);
          }
          if (fits) {
            flag[c] = v;
            place(k + 1);
          }
        }
      };
      place(0);
      std::sort(out.begin(), out.end());
      return out;
    }

    void require_vertex(GammaSpace const& m, VertexId v) {
      if (v >= m.size()) {
        throw Error(ErrorCode::parse_error,
                    "unknown vertex " + std::to_string(v));
      }
    }

  }  // namespace

  GammaSpace::GammaSpace(ColourGraph graph) : _graph(std::move(graph)) {}

  GammaSpace GammaSpace::single_flag(ColourGraph graph) {
    GammaSpace m(std::move(graph));
    for (Colour c = 0; c < m._graph.size(); ++c) {
      m.add_vertex(c);
    }
    for (auto [a, b] : m._graph.edges()) {
      m.add_edge(a, b);
    }
    return m;
  }

  bool GammaSpace::adjacent(VertexId a, VertexId b) const {
    auto const& list = _adjacent[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  VertexId GammaSpace::add_vertex(Colour c) {
    if (c >= _graph.size()) {
      throw Error(ErrorCode::parse_error, "unknown colour " + std::to_string(c));
    }
    _colour.push_back(c);
    _adjacent.emplace_back();
    return static_cast<VertexId>(_colour.size() - 1);
  }

  void GammaSpace::add_edge(VertexId a, VertexId b) {
    require_vertex(*this, a);
    require_vertex(*this, b);
    if (a == b) {
      throw Error(ErrorCode::parse_error, "loop at vertex " + std::to_string(a));
    }
    if (adjacent(a, b)) {
      throw Error(ErrorCode::parse_error,
                  "repeated edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    auto insert = [](std::vector<VertexId>& list, VertexId v) {
      list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    };
    insert(_adjacent[a], b);
    insert(_adjacent[b], a);
  }

  std::vector<std::pair<VertexId, VertexId>> GammaSpace::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < size(); ++a) {
      for (VertexId b : _adjacent[a]) {
        if (a < b) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  bool is_flag(GammaSpace const& m, Flag const& f) {
    ColourGraph const& g = m.graph();
    if (f.size() != g.size()) {
      return false;
    }
    for (Colour c = 0; c < g.size(); ++c) {
      if (f[c] >= m.size() || m.colour(f[c]) != c) {
        return false;
      }
      for (Colour d = c + 1; d < g.size(); ++d) {
        if (g.adjacent(c, d) != m.adjacent(f[c], f[d])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Flag> flags(GammaSpace const& m) {
    return enumerate_flags(m, std::vector<bool>(m.size(), true));
  }

  std::vector<Flag> flags_within(GammaSpace const& m, VertexSet const& d) {
    std::vector<bool> allowed(m.size(), false);
    for (VertexId v : d) {
      require_vertex(m, v);
      allowed[v] = true;
    }
    return enumerate_flags(m, allowed);
  }

  VertexSet vertices_of(std::vector<Flag> const& fs) {
    VertexSet out;
    for (Flag const& f : fs) {
      out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  SpaceReport validate_space(GammaSpace const& m) {
    SpaceReport        report;
    ColourGraph const& g = m.graph();
    std::vector<bool>  covered(m.size(), false);
    std::set<std::pair<VertexId, VertexId>> flag_edges;
    for (Flag const& f : flags(m)) {
      for (Colour c = 0; c < g.size(); ++c) {
        covered[f[c]] = true;
        for (Colour d = c + 1; d < g.size(); ++d) {
          if (g.adjacent(c, d)) {
            flag_edges.emplace(std::min(f[c], f[d]), std::max(f[c], f[d]));
          }
        }
      }
    }
    for (VertexId v = 0; v < m.size(); ++v) {
      if (!covered[v]) {
        report.vertices_without_flag.push_back(v);
      }
    }
    for (auto e : m.edges()) {
      if (!g.adjacent(m.colour(e.first), m.colour(e.second))) {
        report.bad_edges.push_back(e);
      } else if (!flag_edges.contains(e)) {
        report.edges_without_flag.push_back(e);
      }
    }
    return report;
  }

  GammaSpace induced(GammaSpace const& m, VertexSet const& d) {
    GammaSpace                                out(m.graph());
    std::vector<std::optional<VertexId>>      index(m.size());
    for (VertexId v : d) {
      require_vertex(m, v);
      index[v] = out.add_vertex(m.colour(v));
    }
    for (VertexId v : d) {
      for (VertexId w : m.neighbours(v)) {
        if (v < w && index[w]) {
          out.add_edge(*index[v], *index[w]);
        }
      }
    }
    return out;
  }

  namespace {

    std::vector<VertexId> class_offsets(ChamberSystem const& dual) {
      std::vector<VertexId> offset;
      VertexId              next = 0;
      for (Colour c = 0; c < dual.graph().size(); ++c) {
        offset.push_back(next);
        next += static_cast<VertexId>(dual.class_count(c));
      }
      return offset;
    }

    Flag flag_of_chamber(ChamberSystem const&         dual,
                         std::vector<VertexId> const& offset,
                         ChamberId                    x) {
      Flag f;
      for (Colour c = 0; c < dual.graph().size(); ++c) {
        f.push_back(offset[c] + dual.class_of(c, x));
      }
      return f;
    }

  }  // namespace

  GammaSpace to_space_from_dual(ChamberSystem const& dual) {
    ColourGraph const&          g      = dual.graph();
    std::vector<VertexId> const offset = class_offsets(dual);
    GammaSpace                  m(g);
    for (Colour c = 0; c < g.size(); ++c) {
      for (std::size_t k = 0; k < dual.class_count(c); ++k) {
        m.add_vertex(c);
      }
    }
    std::set<std::pair<VertexId, VertexId>> edges;
    for (ChamberId x = 0; x < dual.size(); ++x) {
      Flag const f = flag_of_chamber(dual, offset, x);
      for (auto [c, d] : g.edges()) {
        edges.emplace(std::min(f[c], f[d]), std::max(f[c], f[d]));
      }
    }
    for (auto [a, b] : edges) {
      m.add_edge(a, b);
    }
    return m;
  }

  GammaSpace to_space(ChamberSystem const& x) {
    return to_space_from_dual(dualize(x));
  }

  ChamberSystem to_chambers(GammaSpace const& m) {
    if (!validate_space(m).valid()) {
      throw Error(ErrorCode::not_a_gamma_space, "space fails validation");
    }
    std::vector<Flag> const            fs = flags(m);
    std::vector<std::vector<unsigned>> labels(m.graph().size());
    for (Colour c = 0; c < m.graph().size(); ++c) {
      for (Flag const& f : fs) {
        labels[c].push_back(f[c]);
      }
    }
    return ChamberSystem::from_labels(m.graph(), labels);
  }

  std::vector<ChamberId> chamber_round_trip(ChamberSystem const& dual) {
    GammaSpace const              m      = to_space_from_dual(dual);
    std::vector<Flag> const       fs     = flags(m);
    std::vector<VertexId> const   offset = class_offsets(dual);
    std::vector<ChamberId>        map;
    for (ChamberId x = 0; x < dual.size(); ++x) {
      Flag const f  = flag_of_chamber(dual, offset, x);
      auto const it = std::lower_bound(fs.begin(), fs.end(), f);
      map.push_back(static_cast<ChamberId>(it - fs.begin()));
    }
    return map;
  }

  std::vector<VertexId> space_round_trip(GammaSpace const& m) {
    ChamberSystem const     y  = to_chambers(m);
    std::vector<Flag> const fs = flags(m);
    std::vector<VertexId>   map;
    for (Colour c = 0; c < m.graph().size(); ++c) {
      for (unsigned k = 0; k < y.class_count(c); ++k) {
        map.push_back(fs[y.members(c, k).front()][c]);
      }
    }
    return map;
  }

  bool is_homomorphism(GammaSpace const&            a,
                       GammaSpace const&            b,
                       std::vector<VertexId> const& map) {
    if (map.size() != a.size() || !(a.graph() == b.graph())) {
      return false;
    }
    for (VertexId v = 0; v < a.size(); ++v) {
      if (map[v] >= b.size() || b.colour(map[v]) != a.colour(v)) {
        return false;
      }
    }
    for (auto [v, w] : a.edges()) {
      if (!b.adjacent(map[v], map[w])) {
        return false;
      }
    }
    return true;
  }

  bool is_isomorphism(GammaSpace const&            a,
                      GammaSpace const&            b,
                      std::vector<VertexId> const& map) {
    if (a.size() != b.size() || !is_homomorphism(a, b, map)) {
      return false;
    }
    std::vector<VertexId> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
    return a.edges().size() == b.edges().size();
  }

  void for_each_homomorphism(GammaSpace const&                           source,
                             GammaSpace const&                           target,
                             std::vector<std::optional<VertexId>> const& fixed,
                             HomVisitor const&                           visit) {
    if (fixed.size() != source.size()) {
      throw Error(ErrorCode::parse_error, "partial map has the wrong size");
    }
    std::vector<std::vector<VertexId>> by_colour(target.graph().size());
    for (VertexId v = 0; v < target.size(); ++v) {
      by_colour[target.colour(v)].push_back(v);
    }
    // Fixed vertices first, then breadth-first from them.
    std::vector<VertexId> order;
    std::vector<bool>     queued(source.size(), false);
    for (VertexId v = 0; v < source.size(); ++v) {
      if (fixed[v]) {
        order.push_back(v);
        queued[v] = true;
      }
    }
    for (std::size_t head = 0;; ++head) {
      if (head == order.size()) {
        auto const it = std::find(queued.begin(), queued.end(), false);
        if (it == queued.end()) {
          break;
        }
        auto const v = static_cast<VertexId>(it - queued.begin());
        order.push_back(v);
        queued[v] = true;
      }
      for (VertexId w : source.neighbours(order[head])) {
        if (!queued[w]) {
          queued[w] = true;
          order.push_back(w);
        }
      }
    }
    std::vector<std::size_t> position(source.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      position[order[k]] = k;
    }

    std::vector<VertexId> image(source.size(), 0);
    bool                  running = true;

    std::function<void(std::size_t)> place = [&](std::size_t k) {
      if (!running) {
        return;
      }
      if (k == order.size()) {
        running = visit(image);
        return;
      }
      VertexId const v = order[k];
      auto fits = [&](VertexId x) {
        if (target.colour(x) != source.colour(v)) {
          return false;
        }
        for (VertexId w : source.neighbours(v)) {
          if (position[w] < k && !target.adjacent(x, image[w])) {
            return false;
          }
        }
        return true;
      };
      auto try_image = [&](VertexId x) {
        if (running && fits(x)) {
          image[v] = x;
          place(k + 1);
        }
      };
      if (fixed[v]) {
        try_image(*fixed[v]);
        return;
      }
      for (VertexId w : source.neighbours(v)) {
        if (position[w] < k) {
          std::vector<VertexId> const candidates = target.neighbours(image[w]);
          for (VertexId x : candidates) {
            try_image(x);
          }
          return;
        }
      }
      for (VertexId x : by_colour[source.colour(v)]) {
        try_image(x);
      }
    };
    for (VertexId v = 0; v < source.size(); ++v) {
      if (fixed[v] && *fixed[v] >= target.size()) {
        return;
      }
    }
    place(0);
  }

  Difference difference(ColourGraph const& g, Flag const& f, Flag const& h) {
    if (f.size() != g.size() || h.size() != g.size()) {
      throw Error(ErrorCode::not_a_flag, "flag has the wrong number of colours");
    }
    Difference out;
    for (Colour c = 0; c < g.size(); ++c) {
      if (f[c] != h[c]) {
        out.colours |= colours::single(c);
      }
    }
    out.word = g.components(out.colours);
    return out;
  }

  SpaceExtension simple_extension(GammaSpace const& a, Flag const& f, Letter s) {
    ColourGraph const& g = a.graph();
    if (!is_flag(a, f)) {
      throw Error(ErrorCode::not_a_flag, "extension needs a flag of the space");
    }
    if ((s.support() & ~g.all()) != 0) {
      throw Error(ErrorCode::invalid_letter, "letter has colours outside the graph");
    }
    if (!g.is_letter(s.support())) {
      throw Error(ErrorCode::invalid_letter, to_string(g, s));
    }
    SpaceExtension out{a, f};
    for (Colour c : colours::to_vector(s.support())) {
      out.new_flag[c] = out.space.add_vertex(c);
    }
    for (auto [c, d] : g.edges()) {
      if (colours::contains(s.support(), c) || colours::contains(s.support(), d)) {
        out.space.add_edge(out.new_flag[c], out.new_flag[d]);
      }
    }
    return out;
  }

  Residue restrict_residue(GammaSpace const& m, Flag const& f, ColourSet sub) {
    ColourGraph const& g = m.graph();
    if (!is_flag(m, f)) {
      throw Error(ErrorCode::not_a_flag, "residue needs a flag of the space");
    }
    sub &= g.all();
    std::vector<Colour> const kept = colours::to_vector(sub);
    std::vector<Colour>       rank(g.size(), 0);
    for (Colour k = 0; k < kept.size(); ++k) {
      rank[kept[k]] = k;
    }
    VertexSet chosen;
    for (Flag const& h : flags(m)) {
      if (colours::is_subset(difference(g, f, h).colours, sub)) {
        for (Colour c : kept) {
          chosen.push_back(h[c]);
        }
      }
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

    Residue                              out{GammaSpace(g.induced(sub)), chosen};
    std::vector<std::optional<VertexId>> index(m.size());
    for (VertexId v : chosen) {
      index[v] = out.space.add_vertex(rank[m.colour(v)]);
    }
    for (VertexId v : chosen) {
      for (VertexId w : m.neighbours(v)) {
        if (v < w && index[w]) {
          out.space.add_edge(*index[v], *index[w]);
        }
      }
    }
    return out;
  }

  GammaSpace generate_space(ColourGraph const& g,
                            std::size_t        steps,
                            std::uint64_t      seed,
                            unsigned           max_letter_size) {
    Rng                       rng(seed);
    GammaSpace                m       = GammaSpace::single_flag(g);
    std::vector<Letter> const letters = g.letters(std::max(1U, max_letter_size));
    for (std::size_t k = 0; k < steps && !letters.empty(); ++k) {
      std::vector<Flag> const fs = flags(m);
      Flag const&             f  = fs[rng.below(fs.size())];
      Letter const            s  = letters[rng.below(letters.size())];
      m                          = simple_extension(m, f, s).space;
    }
    if (!is_simply_connected(FlagComplex(m)).simply_connected) {
      throw Error(ErrorCode::not_simply_connected, "generated space is not simply connected");
    }
    return m;
  }

}  // namespace coxflag
