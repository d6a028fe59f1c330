#include "coxflag/chamber.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "coxflag/error.hpp"
#include "coxflag/random.hpp"

namespace coxflag {

  namespace {

    std::size_t const unreachable = std::numeric_limits<std::size_t>::max();

    // Maps a key sequence to dense labels in order of first occurrence.
    template <typename Key>
    class Labeller {
     public:
      unsigned operator()(Key const& key) {
        auto [it, fresh] = _labels.try_emplace(key, _next);
        if (fresh) {
          ++_next;
        }
        return it->second;
      }

     private:
      std::map<Key, unsigned> _labels;
      unsigned                _next = 0;
    };

    // Labels x by its classes for every colour in the mask.
    std::vector<unsigned> tuple_of(ChamberSystem const& x,
                                   ChamberId            z,
                                   ColourSet            mask) {
      std::vector<unsigned> key;
      for (Colour c : colours::to_vector(mask)) {
        key.push_back(x.class_of(c, z));
      }
      return key;
    }

  }  // namespace

  ChamberSystem::ChamberSystem(ColourGraph graph, std::size_t chambers)
      : _graph(std::move(graph)), _size(chambers) {
    _class.assign(_graph.size(), {});
    _members.assign(_graph.size(), {});
    for (Colour c = 0; c < _graph.size(); ++c) {
      for (ChamberId x = 0; x < chambers; ++x) {
        _class[c].push_back(x);
        _members[c].push_back({x});
      }
    }
  }

  ChamberSystem ChamberSystem::from_labels(
      ColourGraph graph, std::vector<std::vector<unsigned>> const& labels) {
    if (labels.size() != graph.size()) {
      throw Error(ErrorCode::parse_error, "one labelling per colour expected");
    }
    std::size_t const n = labels.empty() ? 0 : labels.front().size();
    ChamberSystem     out(std::move(graph), 0);
    out._size = n;
    for (Colour c = 0; c < out._graph.size(); ++c) {
      if (labels[c].size() != n) {
        throw Error(ErrorCode::parse_error, "labellings differ in length");
      }
      Labeller<unsigned> dense;
      for (ChamberId x = 0; x < n; ++x) {
        unsigned const cls = dense(labels[c][x]);
        out._class[c].push_back(cls);
        if (cls == out._members[c].size()) {
          out._members[c].emplace_back();
        }
        out._members[c][cls].push_back(x);
      }
    }
    return out;
  }

  ChamberSystem::ChamberSystem(ColourGraph                   graph,
                               std::size_t                   chambers,
                               std::vector<Partition> const& partitions) {
    if (partitions.size() != graph.size()) {
      throw Error(ErrorCode::parse_error, "one partition per colour expected");
    }
    unsigned const                     unset = ~0U;
    std::vector<std::vector<unsigned>> labels(graph.size());
    for (Colour c = 0; c < graph.size(); ++c) {
      labels[c].assign(chambers, unset);
      for (std::size_t k = 0; k < partitions[c].size(); ++k) {
        if (partitions[c][k].empty()) {
          throw Error(ErrorCode::parse_error, "empty class");
        }
        for (ChamberId x : partitions[c][k]) {
          if (x >= chambers || labels[c][x] != unset) {
            throw Error(ErrorCode::parse_error,
                        "partition of colour " + graph.name(c)
                            + " is not a partition of the chambers");
          }
          labels[c][x] = static_cast<unsigned>(k);
        }
      }
      if (std::find(labels[c].begin(), labels[c].end(), unset)
          != labels[c].end()) {
        throw Error(ErrorCode::parse_error,
                    "partition of colour " + graph.name(c) + " misses a chamber");
      }
    }
    *this = from_labels(std::move(graph), labels);
  }

  ChamberSystem ChamberSystem::singleton(ColourGraph graph) {
    return ChamberSystem(std::move(graph), 1);
  }

  Partition ChamberSystem::partition(Colour c) const {
    return _members[c];
  }

  void ChamberSystem::require_chamber(ChamberId x) const {
    if (x >= _size) {
      throw Error(ErrorCode::unknown_chamber,
                  "chamber " + std::to_string(x) + " of "
                      + std::to_string(_size));
    }
  }

  ChamberId ChamberSystem::add_chamber(std::vector<unsigned> const& classes) {
    auto const x = static_cast<ChamberId>(_size);
    for (Colour c = 0; c < _graph.size(); ++c) {
      unsigned cls = classes[c];
      if (cls == new_class) {
        cls = static_cast<unsigned>(_members[c].size());
        _members[c].emplace_back();
      }
      _class[c].push_back(cls);
      _members[c][cls].push_back(x);
    }
    ++_size;
    return x;
  }

  bool operator==(ChamberSystem const& a, ChamberSystem const& b) {
    return a._graph == b._graph && a._size == b._size && a._class == b._class;
  }

  std::vector<ChamberId> residue(ChamberSystem const& x,
                                 ChamberId            start,
                                 ColourSet            s) {
    x.require_chamber(start);
    std::vector<bool>      seen(x.size(), false);
    std::vector<ChamberId> out{start};
    seen[start] = true;
    auto const cols = colours::to_vector(s & x.graph().all());
    for (std::size_t k = 0; k < out.size(); ++k) {
      ChamberId const y = out[k];
      for (Colour c : cols) {
        for (ChamberId z : x.panel(c, y)) {
          if (!seen[z]) {
            seen[z] = true;
            out.push_back(z);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ChamberSystem dualize(ChamberSystem const& x) {
    ColourGraph const&                 g = x.graph();
    std::vector<std::vector<unsigned>> labels(g.size());
    for (Colour c = 0; c < g.size(); ++c) {
      labels[c].assign(x.size(), ~0U);
      unsigned next = 0;
      for (ChamberId z = 0; z < x.size(); ++z) {
        if (labels[c][z] != ~0U) {
          continue;
        }
        for (ChamberId y : residue(x, z, g.all() & ~colours::single(c))) {
          labels[c][y] = next;
        }
        ++next;
      }
    }
    return ChamberSystem::from_labels(g, labels);
  }

  std::vector<ChamberId> ends_of_type(ChamberSystem const&       x,
                                      ChamberId                  start,
                                      std::vector<Colour> const& type) {
    x.require_chamber(start);
    std::vector<ChamberId> layer{start};
    for (Colour c : type) {
      std::vector<bool>      seen(x.size(), false);
      std::vector<ChamberId> next;
      for (ChamberId y : layer) {
        for (ChamberId z : x.panel(c, y)) {
          if (z != y && !seen[z]) {
            seen[z] = true;
            next.push_back(z);
          }
        }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }
    return layer;
  }

  AxiomCheck check_exchange(ChamberSystem const& x) {
    ColourGraph const& g = x.graph();
    for (ChamberId a = 0; a < x.size(); ++a) {
      for (Colour c = 0; c < g.size(); ++c) {
        for (Colour d = 0; d < g.size(); ++d) {
          if (c == d || g.adjacent(c, d)) {
            continue;
          }
          for (ChamberId mid : x.panel(c, a)) {
            if (mid == a) {
              continue;
            }
            for (ChamberId b : x.panel(d, mid)) {
              if (b == mid) {
                continue;
              }
              bool found = false;
              for (ChamberId alt : x.panel(d, a)) {
                if (alt != a && alt != b && x.related(c, alt, b)) {
                  found = true;
                  break;
                }
              }
              if (!found) {
                return {false, Witness{{a, mid, b}, {c, d}}};
              }
            }
          }
        }
      }
    }
    return {};
  }

  AxiomCheck check_no_closed_reduced_path(ChamberSystem const& x) {
    // A singleton word stays reduced under appending c exactly when c is not
    // among the colours the word can end with; that set is the search state.
    ColourGraph const& g = x.graph();
    struct State {
      ChamberId   chamber;
      ColourSet   ends;
      std::size_t parent;
      Colour      colour;
    };
    for (ChamberId start = 0; start < x.size(); ++start) {
      std::vector<State> states{{start, 0, 0, 0}};
      std::set<std::pair<ChamberId, ColourSet>> visited{{start, 0}};
      for (std::size_t k = 0; k < states.size(); ++k) {
        State const cur = states[k];
        for (Colour c = 0; c < g.size(); ++c) {
          if (colours::contains(cur.ends, c)) {
            continue;
          }
          ColourSet const ends
              = (cur.ends & ~g.boundary(colours::single(c))) | colours::single(c);
          for (ChamberId z : x.panel(c, cur.chamber)) {
            if (z == cur.chamber) {
              continue;
            }
            if (z == start) {
              Witness w;
              w.chambers.push_back(start);
              w.colours.push_back(c);
              for (std::size_t i = k; i != 0; i = states[i].parent) {
                w.chambers.push_back(states[i].chamber);
                w.colours.push_back(states[i].colour);
              }
              w.chambers.push_back(start);
              std::reverse(w.chambers.begin(), w.chambers.end());
              std::reverse(w.colours.begin(), w.colours.end());
              return {false, std::move(w)};
            }
            if (visited.emplace(z, ends).second) {
              states.push_back({z, ends, k, c});
            }
          }
        }
      }
    }
    return {};
  }

  AxiomCheck check_dual_coherent(ChamberSystem const& dual) {
    ColourGraph const& g = dual.graph();
    unsigned const     n = g.size();
    if (n > dual_check_colour_cap) {
      throw Error(ErrorCode::size_cap_exceeded,
                  "coherent sequence check is limited to "
                      + std::to_string(dual_check_colour_cap) + " colours");
    }
    if (dual.size() == 0) {
      return {};
    }
    // meets[c][d][k]: the d-classes meeting the c-class k.
    std::vector<std::vector<std::vector<std::vector<unsigned>>>> meets(
        n, std::vector<std::vector<std::vector<unsigned>>>(n));
    for (Colour c = 0; c < n; ++c) {
      for (Colour d = 0; d < n; ++d) {
        if (!g.adjacent(c, d)) {
          continue;
        }
        meets[c][d].resize(dual.class_count(c));
        for (ChamberId z = 0; z < dual.size(); ++z) {
          meets[c][d][dual.class_of(c, z)].push_back(dual.class_of(d, z));
        }
        for (auto& list : meets[c][d]) {
          std::sort(list.begin(), list.end());
          list.erase(std::unique(list.begin(), list.end()), list.end());
        }
      }
    }
    std::map<std::vector<unsigned>, ChamberId> realised;
    for (ChamberId z = 0; z < dual.size(); ++z) {
      realised.emplace(tuple_of(dual, z, g.all()), z);
    }
    std::vector<unsigned>  chosen(n);
    std::optional<Witness> failure;
    auto                   meet = [&](Colour c, Colour d) {
      auto const& list = meets[c][d][chosen[c]];
      return std::binary_search(list.begin(), list.end(), chosen[d]);
    };
    std::function<void(Colour)> search = [&](Colour c) {
      if (failure) {
        return;
      }
      if (c == n) {
        if (!realised.contains(chosen)) {
          Witness w;
          for (Colour d = 0; d < n; ++d) {
            w.chambers.push_back(dual.members(d, chosen[d]).front());
            w.colours.push_back(d);
          }
          failure = std::move(w);
        }
        return;
      }
      std::optional<Colour> anchor;
      for (Colour d = 0; d < c; ++d) {
        if (g.adjacent(c, d)) {
          anchor = d;
          break;
        }
      }
      std::vector<unsigned> candidates;
      if (anchor) {
        candidates = meets[*anchor][c][chosen[*anchor]];
      } else {
        for (unsigned k = 0; k < dual.class_count(c); ++k) {
          candidates.push_back(k);
        }
      }
      for (unsigned k : candidates) {
        chosen[c] = k;
        bool ok   = true;
        for (Colour d = 0; d < c && ok; ++d) {
          ok = !g.adjacent(c, d) || meet(d, c);
        }
        if (ok) {
          search(c + 1);
        }
        if (failure) {
          return;
        }
      }
    };
    search(0);
    if (failure) {
      return {false, std::move(failure)};
    }
    return {};
  }

  AxiomCheck check_dagger(ChamberSystem const& x) {
    ChamberSystem const dual = dualize(x);
    ColourGraph const&  g    = x.graph();
    for (Colour c = 0; c < g.size(); ++c) {
      ColourSet const others = g.all() & ~colours::single(c);
      std::map<std::vector<unsigned>, ChamberId> by_key;
      std::vector<ChamberId>                     first_of_class(x.class_count(c),
                                                                ~0U);
      for (ChamberId z = 0; z < x.size(); ++z) {
        auto const it      = by_key.emplace(tuple_of(dual, z, others), z).first;
        unsigned const cls = x.class_of(c, z);
        if (first_of_class[cls] == ~0U) {
          first_of_class[cls] = z;
        }
        if (!x.related(c, it->second, z)) {
          return {false, Witness{{it->second, z}, {c}}};
        }
        ChamberId const rep = first_of_class[cls];
        if (tuple_of(dual, rep, others) != it->first) {
          return {false, Witness{{rep, z}, {c}}};
        }
      }
    }
    return {};
  }

  AxiomReport check_axioms(ChamberSystem const& x, bool dual) {
    ColourGraph const& g = x.graph();
    if (dual && g.size() > dual_check_colour_cap) {
      throw Error(ErrorCode::size_cap_exceeded,
                  "dual checks are limited to "
                      + std::to_string(dual_check_colour_cap) + " colours");
    }
    AxiomReport report;
    report.min_class_size = x.size();
    for (Colour c = 0; c < g.size(); ++c) {
      for (unsigned k = 0; k < x.class_count(c); ++k) {
        std::size_t const size = x.members(c, k).size();
        if (size < report.min_class_size) {
          report.min_class_size = size;
        }
        if (size < 2 && report.large_classes.holds) {
          report.large_classes = {false, Witness{{x.members(c, k).front()}, {c}}};
        }
      }
    }
    if (x.size() > 0) {
      auto const reach = residue(x, 0, g.all());
      if (reach.size() != x.size()) {
        ChamberId missing = 0;
        while (std::binary_search(reach.begin(), reach.end(), missing)) {
          ++missing;
        }
        report.connected = {false, Witness{{0, missing}, {}}};
      }
    }
    report.exchange               = check_exchange(x);
    report.no_closed_reduced_path = check_no_closed_reduced_path(x);
    if (dual) {
      ChamberSystem const d = dualize(x);
      std::map<std::vector<unsigned>, ChamberId> seen;
      for (ChamberId z = 0; z < d.size(); ++z) {
        auto const [it, fresh] = seen.emplace(tuple_of(d, z, g.all()), z);
        if (!fresh) {
          report.dual_separating = {false, Witness{{it->second, z}, {}}};
          break;
        }
      }
      report.dual_coherent = check_dual_coherent(d);
      report.dagger        = check_dagger(x);
    }
    return report;
  }

  std::vector<ChamberId> extension_base(ChamberSystem const& x,
                                        ChamberId            a,
                                        Colour               lambda) {
    ColourGraph const& g = x.graph();
    return residue(x, a, g.all() & ~g.boundary(colours::single(lambda)));
  }

  Extension simple_extend(ChamberSystem const& x,
                          ChamberId            a,
                          Colour               lambda,
                          Precheck             precheck) {
    x.require_chamber(a);
    ColourGraph const& g = x.graph();
    if (lambda >= g.size()) {
      throw Error(ErrorCode::invalid_letter,
                  "colour index " + std::to_string(lambda) + " out of range");
    }
    if (precheck == Precheck::verify
        && !check_axioms(x, false).quasi_building()) {
      throw Error(ErrorCode::not_quasi_building,
                  "simple extension needs a quasi-building");
    }
    Extension out;
    out.system = x;
    std::vector<std::unordered_map<unsigned, unsigned>> copied(g.size());
    for (ChamberId b : extension_base(x, a, lambda)) {
      std::vector<unsigned> classes(g.size());
      for (Colour c = 0; c < g.size(); ++c) {
        unsigned const cls = x.class_of(c, b);
        if (c == lambda) {
          classes[c] = cls;
          continue;
        }
        auto const it = copied[c].find(cls);
        classes[c] = it == copied[c].end() ? ChamberSystem::new_class : it->second;
      }
      ChamberId const star = out.system.add_chamber(classes);
      for (Colour c = 0; c < g.size(); ++c) {
        if (c != lambda) {
          copied[c].emplace(x.class_of(c, b), out.system.class_of(c, star));
        }
      }
      out.copy_of.push_back(b);
      if (b == a) {
        out.new_chamber = star;
      }
    }
    return out;
  }

  std::vector<std::size_t> distances(ChamberSystem const& x, ChamberId start) {
    x.require_chamber(start);
    std::vector<std::size_t> dist(x.size(), unreachable);
    std::deque<ChamberId>    queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
      ChamberId const y = queue.front();
      queue.pop_front();
      for (Colour c = 0; c < x.graph().size(); ++c) {
        for (ChamberId z : x.panel(c, y)) {
          if (dist[z] == unreachable) {
            dist[z] = dist[y] + 1;
            queue.push_back(z);
          }
        }
      }
    }
    return dist;
  }

  std::vector<ChamberId> strong_hull(ChamberSystem const&          x,
                                     std::vector<ChamberId> const& seed) {
    if (seed.empty()) {
      throw Error(ErrorCode::empty_seed, "strong hull of the empty set");
    }
    // Every strongly connected subset holds all minimal galleries between
    // its points, and adding them repeatedly reaches the hull.
    std::vector<bool>                     inside(x.size(), false);
    std::vector<ChamberId>                order;
    std::vector<std::vector<std::size_t>> dist;
    auto                                  add = [&](ChamberId z) {
      if (!inside[z]) {
        inside[z] = true;
        order.push_back(z);
      }
    };
    for (ChamberId z : seed) {
      x.require_chamber(z);
      add(z);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      dist.push_back(distances(x, order[i]));
      for (std::size_t j = 0; j < i; ++j) {
        std::size_t const total = dist[i][order[j]];
        if (total == unreachable) {
          continue;
        }
        for (ChamberId z = 0; z < x.size(); ++z) {
          if (!inside[z] && dist[i][z] != unreachable
              && dist[i][z] + dist[j][z] == total) {
            add(z);
          }
        }
      }
    }
    std::sort(order.begin(), order.end());
    return order;
  }

  ChamberSystem generate_quasi_building(ColourGraph const&               g,
                                        std::vector<ScheduleStep> const& schedule) {
    ChamberSystem x = ChamberSystem::singleton(g);
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      ScheduleStep const step = schedule[k];
      if (step.chamber >= x.size() || step.colour >= g.size()) {
        throw Error(ErrorCode::bad_schedule,
                    "step " + std::to_string(k) + " refers to chamber "
                        + std::to_string(step.chamber) + " colour "
                        + std::to_string(step.colour));
      }
      x = simple_extend(x, step.chamber, step.colour, Precheck::assume).system;
    }
    return x;
  }

  ChamberSystem generate_quasi_building(ColourGraph const& g,
                                        unsigned           depth,
                                        unsigned           fanout) {
    ChamberSystem          x = ChamberSystem::singleton(g);
    std::vector<ChamberId> frontier{0};
    for (unsigned round = 0; round < depth; ++round) {
      std::vector<ChamberId> next;
      for (ChamberId a : frontier) {
        for (Colour c = 0; c < g.size(); ++c) {
          while (x.panel(c, a).size() < fanout) {
            Extension e = simple_extend(x, a, c, Precheck::assume);
            next.push_back(e.new_chamber);
            x = std::move(e.system);
          }
        }
      }
      frontier = std::move(next);
    }
    return x;
  }

  ChamberSystem generate_random_quasi_building(ColourGraph const& g,
                                               std::size_t        steps,
                                               std::uint64_t      seed) {
    Rng           rng(seed);
    ChamberSystem x = ChamberSystem::singleton(g);
    for (std::size_t k = 0; k < steps && g.size() > 0; ++k) {
      auto const a = static_cast<ChamberId>(rng.below(x.size()));
      auto const c = static_cast<Colour>(rng.below(g.size()));
      x            = simple_extend(x, a, c, Precheck::assume).system;
    }
    return x;
  }

  ChamberSystem induced(ChamberSystem const&          x,
                        std::vector<ChamberId> const& subset) {
    std::vector<std::vector<unsigned>> labels(x.graph().size());
    for (Colour c = 0; c < x.graph().size(); ++c) {
      for (ChamberId z : subset) {
        x.require_chamber(z);
        labels[c].push_back(x.class_of(c, z));
      }
    }
    return ChamberSystem::from_labels(x.graph(), labels);
  }

  Gallery reduced_gallery(ChamberSystem const& x, ChamberId from, ChamberId to) {
    x.require_chamber(from);
    x.require_chamber(to);
    std::vector<ChamberId> parent(x.size(), ~0U);
    std::vector<Colour>    via(x.size(), 0);
    std::deque<ChamberId>  queue{from};
    parent[from] = from;
    while (!queue.empty() && parent[to] == ~0U) {
      ChamberId const y = queue.front();
      queue.pop_front();
      for (Colour c = 0; c < x.graph().size(); ++c) {
        for (ChamberId z : x.panel(c, y)) {
          if (parent[z] == ~0U) {
            parent[z] = y;
            via[z]    = c;
            queue.push_back(z);
          }
        }
      }
    }
    if (parent[to] == ~0U) {
      throw Error(ErrorCode::disconnected,
                  "no gallery from " + std::to_string(from) + " to "
                      + std::to_string(to));
    }
    Gallery out;
    for (ChamberId z = to; z != from; z = parent[z]) {
      out.chambers.push_back(z);
      out.word.push_back(Letter(colours::single(via[z])));
    }
    out.chambers.push_back(from);
    std::reverse(out.chambers.begin(), out.chambers.end());
    std::reverse(out.word.begin(), out.word.end());
    return out;
  }

  bool is_isomorphism(ChamberSystem const&          x,
                      ChamberSystem const&          y,
                      std::vector<ChamberId> const& map) {
    if (x.size() != y.size() || map.size() != x.size()
        || !(x.graph() == y.graph())) {
      return false;
    }
    std::vector<bool> hit(y.size(), false);
    for (ChamberId image : map) {
      if (image >= y.size() || hit[image]) {
        return false;
      }
      hit[image] = true;
    }
    for (Colour c = 0; c < x.graph().size(); ++c) {
      if (x.class_count(c) != y.class_count(c)) {
        return false;
      }
      std::vector<unsigned> image(x.class_count(c), ~0U);
      std::vector<bool>     used(y.class_count(c), false);
      for (ChamberId z = 0; z < x.size(); ++z) {
        unsigned const from = x.class_of(c, z);
        unsigned const to   = y.class_of(c, map[z]);
        if (image[from] == ~0U) {
          if (used[to]) {
            return false;
          }
          image[from] = to;
          used[to]    = true;
        } else if (image[from] != to) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace coxflag
