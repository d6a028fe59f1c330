#include <algorithm>

#include "coxflag/error.hpp"
#include "coxflag/gspace.hpp"

namespace coxflag {

  namespace {

    VertexSet sorted_set(VertexSet d) {
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      return d;
    }

    bool contains(VertexSet const& d, VertexId v) {
      return std::binary_search(d.begin(), d.end(), v);
    }

    struct Choice {
      FlagId target;
      Word   word;
    };

    // The flag of targets with a least connecting word from the tree root.
    std::optional<Choice> least_word(ColourGraph const&         g,
                                     PathTree const&            tree,
                                     std::vector<FlagId> const& targets) {
      std::vector<Word> words;
      for (FlagId t : targets) {
        if (!tree.reaches(t)) {
          return std::nullopt;
        }
        words.push_back(tree.word(t));
      }
      for (std::size_t i = 0; i < targets.size(); ++i) {
        bool least = true;
        for (std::size_t j = 0; j < targets.size() && least; ++j) {
          least = preceq(g, words[i], words[j]);
        }
        if (least) {
          return Choice{targets[i], words[i]};
        }
      }
      return std::nullopt;
    }

  }  // namespace

  bool is_nice(FlagComplex const& m, VertexSet const& d_in) {
    VertexSet const   d = sorted_set(d_in);
    FlagComplex const sub(induced(m.space(), d));
    std::vector<bool> covered(d.size(), false);
    std::vector<FlagId> image(sub.size());
    for (FlagId a = 0; a < sub.size(); ++a) {
      Flag f = sub.flag(a);
      for (VertexId& v : f) {
        covered[v] = true;
        v          = d[v];
      }
      image[a] = m.id(f);
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
      return false;
    }
    for (FlagId a = 0; a < sub.size(); ++a) {
      for (FlagComplex::Step const& step : sub.op_steps(a)) {
        if (!m.op(image[a], image[step.to], step.letter)) {
          return false;
        }
      }
    }
    return true;
  }

  BasePoint base_point(FlagComplex const& m, Flag const& f, VertexSet const& d_in) {
    ColourGraph const&        g       = m.graph();
    VertexSet const           d       = sorted_set(d_in);
    std::vector<FlagId> const targets = m.ids_within(d);
    if (targets.empty()) {
      throw Error(ErrorCode::not_nice, "the set contains no flag");
    }
    PathTree const tree(m, m.id(f));
    auto const     choice = least_word(g, tree, targets);
    if (!choice) {
      throw Error(ErrorCode::not_nice, "no least connecting word");
    }
    PathTree const from_base(m, choice->target);
    for (FlagId t : targets) {
      Word const through = reduce_concat(g, choice->word, from_base.word(t));
      if (!equivalent(g, tree.word(t), through)) {
        throw Error(ErrorCode::not_nice,
                    "connecting word " + to_string(g, tree.word(t))
                        + " does not factor through the base point");
      }
    }
    return BasePoint{m.flag(choice->target), choice->word};
  }

  std::vector<VertexId> canonical_base(ColourGraph const& g, Flag const& f, Word const& u) {
    if (f.size() != g.size()) {
      throw Error(ErrorCode::not_a_flag, "flag has the wrong number of colours");
    }
    ColourSet const       moved = support(sr(g, u));
    std::vector<VertexId> out;
    for (Colour c = 0; c < g.size(); ++c) {
      if (!colours::contains(moved, c)) {
        out.push_back(f[c]);
      }
    }
    return out;
  }

  Realization realize_type(GammaSpace const& m, Flag const& g, Word const& u) {
    require_reduced(m.graph(), u);
    if (!is_flag(m, g)) {
      throw Error(ErrorCode::not_a_flag, "realisation needs a flag of the space");
    }
    Realization out{m, g};
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      SpaceExtension e = simple_extension(out.space, out.flag, *it);
      out.space        = std::move(e.space);
      out.flag         = std::move(e.new_flag);
    }
    return out;
  }

  VertexSet nice_hull(FlagComplex const&         m,
                      VertexSet const&           a_in,
                      std::optional<std::size_t> budget) {
    ColourGraph const& g = m.graph();
    if (!is_simply_connected(m, budget).simply_connected) {
      throw Error(ErrorCode::not_simply_connected, "hulls need a simply connected space");
    }
    VertexSet const a = sorted_set(a_in);
    for (VertexId v : a) {
      if (v >= m.space().size()) {
        throw Error(ErrorCode::parse_error, "unknown vertex " + std::to_string(v));
      }
    }
    if (m.size() == 0) {
      throw Error(ErrorCode::not_a_gamma_space, "the space has no flag");
    }
    if (a.empty()) {
      return sorted_set(m.flag(0));
    }
    auto through = [&](VertexId v) {
      std::vector<FlagId> out = m.flags_through(v);
      if (out.empty()) {
        throw Error(ErrorCode::not_a_gamma_space,
                    "vertex " + std::to_string(v) + " lies in no flag");
      }
      return out;
    };
    VertexSet hull = sorted_set(m.flag(through(a.front()).front()));

    for (std::size_t k = 1; k < a.size(); ++k) {
      VertexId const point = a[k];
      if (contains(hull, point)) {
        continue;
      }
      GammaSpace const                     part = induced(m.space(), hull);
      std::vector<std::optional<VertexId>> fixed(hull.size());
      for (std::size_t i = 0; i < hull.size(); ++i) {
        if (std::binary_search(a.begin(), a.begin() + static_cast<long>(k), hull[i])) {
          fixed[i] = hull[i];
        }
      }
      std::vector<VertexSet> copies;
      for_each_homomorphism(part, m.space(), fixed, [&](std::vector<VertexId> const& map) {
        copies.push_back(sorted_set(map));
        return true;
      });
      std::sort(copies.begin(), copies.end());
      copies.erase(std::unique(copies.begin(), copies.end()), copies.end());

      struct Candidate {
        std::size_t copy;
        FlagId      from;
        Choice      base;
      };
      std::vector<Candidate> candidates;
      for (FlagId f : through(point)) {
        PathTree const tree(m, f);
        for (std::size_t c = 0; c < copies.size(); ++c) {
          if (auto choice = least_word(g, tree, m.ids_within(copies[c]))) {
            candidates.push_back({c, f, std::move(*choice)});
          }
        }
      }
      auto const best = std::find_if(candidates.begin(), candidates.end(), [&](Candidate const& x) {
        return std::none_of(candidates.begin(), candidates.end(), [&](Candidate const& y) {
          return prec(g, y.base.word, x.base.word);
        });
      });
      if (best == candidates.end()) {
        throw Error(ErrorCode::not_nice, "no least base point for the hull");
      }
      VertexSet next = copies[best->copy];
      for (FlagId f : PathTree(m, best->from).path(best->base.target)) {
        next.insert(next.end(), m.flag(f).begin(), m.flag(f).end());
      }
      hull = sorted_set(std::move(next));
    }
    return hull;
  }

  std::vector<VertexId> specialise(FlagComplex const& m, VertexSet const& d_in) {
    GammaSpace const&                    space = m.space();
    VertexSet const                      d     = sorted_set(d_in);
    std::vector<bool>                    inside(space.size(), false);
    std::vector<std::optional<VertexId>> image(space.size());
    for (VertexId v : d) {
      if (v >= space.size()) {
        throw Error(ErrorCode::parse_error, "unknown vertex " + std::to_string(v));
      }
      inside[v] = true;
      image[v]  = v;
    }
    auto flag_inside = [&](FlagId f) {
      return std::all_of(m.flag(f).begin(), m.flag(f).end(),
                         [&](VertexId v) { return inside[v]; });
    };
    std::size_t covered = d.size();
    // Peel simple extensions off the covered part: a flag one step outside,
    // whose new vertices are all fresh and which no splitting joins to it,
    // collapses onto the flag it steps to.
    while (covered < space.size()) {
      std::vector<FlagId> core;
      for (FlagId f = 0; f < m.size(); ++f) {
        if (flag_inside(f)) {
          core.push_back(f);
        }
      }
      bool grown = false;
      for (FlagId h = 0; h < m.size() && !grown; ++h) {
        if (flag_inside(h)) {
          continue;
        }
        for (FlagComplex::Step const& step : m.op_steps(h)) {
          if (!flag_inside(step.to)) {
            continue;
          }
          std::vector<Colour> const moved = colours::to_vector(step.letter.support());
          bool const fresh = std::none_of(moved.begin(), moved.end(),
                                          [&](Colour c) { return inside[m.flag(h)[c]]; });
          bool const split = std::any_of(core.begin(), core.end(), [&](FlagId x) {
            return m.split_connected(step.letter, h, x);
          });
          if (!fresh || split) {
            continue;
          }
          for (Colour c : moved) {
            VertexId const v = m.flag(h)[c];
            image[v]         = image[m.flag(step.to)[c]];
            inside[v]        = true;
            ++covered;
          }
          grown = true;
          break;
        }
      }
      if (!grown) {
        throw Error(ErrorCode::not_nice, "no simple extension leads out of the set");
      }
    }
    std::vector<VertexId> out;
    for (auto const& v : image) {
      out.push_back(*v);
    }
    if (!is_homomorphism(space, space, out)) {
      throw Error(ErrorCode::not_nice, "collapse is not a homomorphism");
    }
    return out;
  }

}  // namespace coxflag
