#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "coxflag/error.hpp"
#include "coxflag/gspace.hpp"

namespace coxflag {

  namespace {

    // A letter of the word so far that a later letter could still cancel
    // against: blocked holds its colours in the boundary of later letters.
    struct Entry {
      ColourSet letter;
      ColourSet blocked;
    };

    using History = std::vector<Entry>;

    // The history after appending t, or nothing if the word stops being
    // reduced.
    std::optional<History> append(ColourGraph const& g, History const& h, Letter t) {
      ColourSet const ts = t.support();
      for (Entry const& e : h) {
        if (colours::is_subset(e.letter, ts) && e.blocked == 0) {
          return std::nullopt;
        }
        if (colours::is_subset(ts, e.letter) && (ts & e.blocked) == 0) {
          return std::nullopt;
        }
      }
      ColourSet const bt = g.boundary(ts);
      History         out;
      for (Entry const& e : h) {
        ColourSet const blocked = (e.blocked | bt) & e.letter;
        if (blocked != e.letter && e.letter != ts) {
          out.push_back({e.letter, blocked});
        }
      }
      out.push_back({ts, 0});
      std::sort(out.begin(), out.end(), [](Entry const& a, Entry const& b) {
        return a.letter < b.letter;
      });
      return out;
    }

    using StateKey = std::vector<std::uint64_t>;

    StateKey key_of(FlagId f, History const& h) {
      StateKey key{f};
      for (Entry const& e : h) {
        key.push_back(e.letter);
        key.push_back(e.blocked);
      }
      return key;
    }

    struct KeyHash {
      std::size_t operator()(StateKey const& key) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t x : key) {
          h = (h ^ x) * 0x100000001b3ULL;
          h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
      }
    };

    using StateIndex = std::unordered_map<StateKey, std::size_t, KeyHash>;

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0U);
      }

      unsigned find(unsigned x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(unsigned a, unsigned b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<unsigned> _parent;
    };

  }  // namespace

  FlagComplex::FlagComplex(GammaSpace space)
      : _space(std::move(space)),
        _flags(flags(_space)),
        _weak(_flags.size()),
        _op(_flags.size()),
        _cache(std::make_shared<ComponentCache>()) {
    ColourGraph const& g = graph();
    for (FlagId a = 0; a < size(); ++a) {
      for (FlagId b = a + 1; b < size(); ++b) {
        ColourSet const d = diff(a, b);
        if (g.is_letter(d)) {
          _weak[a].push_back({Letter(d), b});
          _weak[b].push_back({Letter(d), a});
        }
      }
    }
    for (FlagId a = 0; a < size(); ++a) {
      std::sort(_weak[a].begin(), _weak[a].end(), [](Step x, Step y) {
        return x.letter != y.letter ? x.letter < y.letter : x.to < y.to;
      });
      for (Step const& s : _weak[a]) {
        auto const& comp = components(s.letter);
        if (comp[a] != comp[s.to]) {
          _op[a].push_back(s);
        }
      }
    }
  }

  std::optional<FlagId> FlagComplex::find(Flag const& f) const {
    auto const it = std::lower_bound(_flags.begin(), _flags.end(), f);
    if (it == _flags.end() || *it != f) {
      return std::nullopt;
    }
    return static_cast<FlagId>(it - _flags.begin());
  }

  FlagId FlagComplex::id(Flag const& f) const {
    if (auto const found = find(f)) {
      return *found;
    }
    throw Error(ErrorCode::not_a_flag, "not a flag of the space");
  }

  ColourSet FlagComplex::diff(FlagId a, FlagId b) const {
    ColourSet out = 0;
    for (Colour c = 0; c < graph().size(); ++c) {
      if (_flags[a][c] != _flags[b][c]) {
        out |= colours::single(c);
      }
    }
    return out;
  }

  std::vector<unsigned> const& FlagComplex::components(Letter s) const {
    std::lock_guard<std::mutex> guard(_cache->lock);
    auto& slot = _cache->by_letter[s.support()];
    if (!slot) {
      UnionFind sets(size());
      for (FlagId a = 0; a < size(); ++a) {
        for (Step const& step : _weak[a]) {
          if (step.letter.proper_subset_of(s)) {
            sets.unite(a, step.to);
          }
        }
      }
      auto comp = std::make_unique<std::vector<unsigned>>(size());
      for (FlagId a = 0; a < size(); ++a) {
        (*comp)[a] = sets.find(a);
      }
      slot = std::move(comp);
    }
    return *slot;
  }

  bool FlagComplex::split_connected(Letter s, FlagId a, FlagId b) const {
    auto const& comp = components(s);
    return comp[a] == comp[b];
  }

  std::vector<FlagId> FlagComplex::split_path(Letter s, FlagId a, FlagId b) const {
    std::vector<FlagId> parent(size(), ~0U);
    std::deque<FlagId>  queue{a};
    parent[a] = a;
    while (!queue.empty() && parent[b] == ~0U) {
      FlagId const x = queue.front();
      queue.pop_front();
      for (Step const& step : _weak[x]) {
        if (step.letter.proper_subset_of(s) && parent[step.to] == ~0U) {
          parent[step.to] = x;
          queue.push_back(step.to);
        }
      }
    }
    if (parent[b] == ~0U) {
      return {};
    }
    std::vector<FlagId> out{b};
    while (out.back() != a) {
      out.push_back(parent[out.back()]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool FlagComplex::op(FlagId a, FlagId b, Letter s) const {
    if (!colours::is_subset(diff(a, b), s.support())) {
      throw Error(ErrorCode::not_equivalent,
                  "flags differ outside " + to_string(graph(), s));
    }
    return !split_connected(s, a, b);
  }

  FlagPath FlagComplex::to_path(std::vector<FlagId> const& ids) const {
    FlagPath out;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      out.flags.push_back(_flags[ids[k]]);
      if (k > 0) {
        out.word.push_back(graph().letter(diff(ids[k - 1], ids[k])));
      }
    }
    return out;
  }

  std::vector<FlagId> FlagComplex::flags_through(VertexId v) const {
    std::vector<FlagId> out;
    for (FlagId a = 0; a < size(); ++a) {
      if (std::find(_flags[a].begin(), _flags[a].end(), v) != _flags[a].end()) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<FlagId> FlagComplex::ids_within(VertexSet const& d) const {
    std::vector<FlagId> out;
    for (FlagId a = 0; a < size(); ++a) {
      bool inside = true;
      for (VertexId v : _flags[a]) {
        inside = inside && std::binary_search(d.begin(), d.end(), v);
      }
      if (inside) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool op_letter(FlagComplex const& m, Flag const& f, Flag const& h, Letter s) {
    return m.op(m.id(f), m.id(h), s);
  }

  namespace {

    // Replaces the move a -> b, nominally of letter s, by a flag path.
    void refine(FlagComplex const&   m,
                FlagId               a,
                FlagId               b,
                Letter               s,
                std::vector<FlagId>& ids,
                Word&                word) {
      if (a == b) {
        return;
      }
      ColourSet const d = m.diff(a, b);
      if (!colours::is_subset(d, s.support())) {
        throw Error(ErrorCode::no_path, "move leaves its letter");
      }
      if (d == s.support() && m.op(a, b, s)) {
        ids.push_back(b);
        word.push_back(s);
        return;
      }
      std::vector<FlagId> const split = m.split_path(s, a, b);
      if (split.empty()) {
        throw Error(ErrorCode::no_path, "no splitting path");
      }
      for (std::size_t k = 1; k < split.size(); ++k) {
        refine(m, split[k - 1], split[k], m.graph().letter(m.diff(split[k - 1], split[k])),
               ids, word);
      }
    }

    // Swaps the commuting steps k and k+1 of the path.
    void swap_steps(FlagComplex const& m, std::vector<FlagId>& ids, Word& word, std::size_t k) {
      Flag middle = m.flag(ids[k]);
      Flag const& after = m.flag(ids[k + 2]);
      for (Colour c : colours::to_vector(word[k + 1].support())) {
        middle[c] = after[c];
      }
      ids[k + 1] = m.id(middle);
      std::swap(word[k], word[k + 1]);
    }

    bool commutes_with_range(ColourGraph const& g,
                             Word const&        word,
                             Letter             s,
                             std::size_t        from,
                             std::size_t        to) {
      for (std::size_t k = from; k < to; ++k) {
        if (!g.commute(s, word[k])) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  FlagPath find_reduced_path(FlagComplex const& m, Flag const& f, Flag const& h) {
    ColourGraph const&  g    = m.graph();
    FlagId const        from = m.id(f);
    FlagId const        to   = m.id(h);
    std::vector<FlagId> ids{from};
    Word                word;
    Flag                current = f;
    for (Letter s : difference(g, f, h).word) {
      Flag next = current;
      for (Colour c : colours::to_vector(s.support())) {
        next[c] = h[c];
      }
      refine(m, m.id(current), m.id(next), s, ids, word);
      current = std::move(next);
    }

    for (;;) {
      std::optional<std::size_t> join;
      for (std::size_t j = 1; j < word.size() && !join; ++j) {
        for (std::size_t i = 0; i < j && !join; ++i) {
          if (word[i].subset_of(word[j])
              && commutes_with_range(g, word, word[i], i + 1, j)) {
            for (std::size_t k = i; k + 1 < j; ++k) {
              swap_steps(m, ids, word, k);
            }
            join = j - 1;
          } else if (word[j].subset_of(word[i])
                     && commutes_with_range(g, word, word[j], i + 1, j)) {
            for (std::size_t k = j; k > i + 1; --k) {
              swap_steps(m, ids, word, k - 1);
            }
            join = i;
          }
        }
      }
      if (!join) {
        break;
      }
      std::size_t const   k     = *join;
      Letter const        outer = word[k].subset_of(word[k + 1]) ? word[k + 1] : word[k];
      std::vector<FlagId> ids_out(ids.begin(), ids.begin() + static_cast<long>(k) + 1);
      Word                word_out(word.begin(), word.begin() + static_cast<long>(k));
      refine(m, ids[k], ids[k + 2], outer, ids_out, word_out);
      ids_out.insert(ids_out.end(), ids.begin() + static_cast<long>(k) + 3, ids.end());
      word_out.insert(word_out.end(), word.begin() + static_cast<long>(k) + 2, word.end());
      ids  = std::move(ids_out);
      word = std::move(word_out);
    }
    if (ids.back() != to) {
      throw Error(ErrorCode::no_path, "reduction lost the end flag");
    }
    FlagPath out = m.to_path(ids);
    out.word     = word;
    return out;
  }

  FlagPath permute_path(ColourGraph const& g, FlagPath const& p, Word const& target) {
    if (p.flags.size() != p.word.size() + 1 || target.size() != p.word.size()) {
      throw Error(ErrorCode::not_a_permutation, "lengths differ");
    }
    FlagPath out = p;
    for (std::size_t k = 0; k < target.size(); ++k) {
      std::size_t j = k;
      while (j < out.word.size() && out.word[j] != target[k]) {
        ++j;
      }
      if (j == out.word.size() || !commutes_with_range(g, out.word, target[k], k, j)) {
        throw Error(ErrorCode::not_a_permutation,
                    to_string(g, target) + " is not a permutation of "
                        + to_string(g, p.word));
      }
      for (; j > k; --j) {
        Flag&       middle = out.flags[j];
        Flag const& before = out.flags[j - 1];
        Flag const& after  = out.flags[j + 1];
        for (Colour c : colours::to_vector(out.word[j].support())) {
          middle[c] = after[c];
        }
        for (Colour c : colours::to_vector(out.word[j - 1].support())) {
          middle[c] = before[c];
        }
        std::swap(out.word[j - 1], out.word[j]);
      }
    }
    return out;
  }

  PathTree::PathTree(FlagComplex const& m, FlagId from)
      : _state_of(m.size(), none) {
    std::vector<History> histories{{}};
    StateIndex           index;
    _nodes.push_back({from, none, Letter(0)});
    index.emplace(key_of(from, {}), 0);
    _state_of[from] = 0;
    for (std::size_t head = 0; head < _nodes.size(); ++head) {
      FlagId const x = _nodes[head].flag;
      for (FlagComplex::Step const& step : m.op_steps(x)) {
        auto next = append(m.graph(), histories[head], step.letter);
        if (!next) {
          continue;
        }
        auto [it, fresh] = index.try_emplace(key_of(step.to, *next), _nodes.size());
        if (!fresh) {
          continue;
        }
        _nodes.push_back({step.to, head, step.letter});
        histories.push_back(std::move(*next));
        if (_state_of[step.to] == none) {
          _state_of[step.to] = it->second;
        }
      }
    }
  }

  std::vector<FlagId> PathTree::path(FlagId to) const {
    if (!reaches(to)) {
      throw Error(ErrorCode::no_path, "flag not reached by a reduced path");
    }
    std::vector<FlagId> out;
    for (std::size_t n = _state_of[to]; n != none; n = _nodes[n].parent) {
      out.push_back(_nodes[n].flag);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  Word PathTree::word(FlagId to) const {
    if (!reaches(to)) {
      throw Error(ErrorCode::no_path, "flag not reached by a reduced path");
    }
    Word out;
    for (std::size_t n = _state_of[to]; _nodes[n].parent != none; n = _nodes[n].parent) {
      out.push_back(_nodes[n].letter);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  ScVerdict is_simply_connected(FlagComplex const& m, std::optional<std::size_t> budget) {
    std::size_t const limit = budget.value_or(std::max<std::size_t>(m.size() * m.size(), 64));
    ScVerdict         verdict;
    for (FlagId start = 0; start < m.size(); ++start) {
      struct Node {
        FlagId      flag;
        std::size_t parent;
      };
      std::vector<Node>    nodes{{start, 0}};
      std::vector<History> histories{{}};
      StateIndex           index;
      index.emplace(key_of(start, {}), 0);
      for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (FlagComplex::Step const& step : m.op_steps(nodes[head].flag)) {
          auto next = append(m.graph(), histories[head], step.letter);
          if (!next) {
            continue;
          }
          if (step.to == start) {
            std::vector<FlagId> ids{start};
            for (std::size_t n = head; n != 0; n = nodes[n].parent) {
              ids.push_back(nodes[n].flag);
            }
            ids.push_back(start);
            std::reverse(ids.begin(), ids.end());
            verdict.simply_connected = false;
            verdict.certificate      = m.to_path(ids);
            verdict.states += nodes.size();
            return verdict;
          }
          if (index.try_emplace(key_of(step.to, *next), nodes.size()).second) {
            nodes.push_back({step.to, head});
            histories.push_back(std::move(*next));
            if (nodes.size() > limit) {
              throw Error(ErrorCode::budget_exceeded,
                          "simple connectedness search exceeded "
                              + std::to_string(limit) + " states");
            }
          }
        }
      }
      verdict.states += nodes.size();
    }
    return verdict;
  }

  namespace {

    // Least number of moves a -> b, each changing a proper subset of s,
    // capped at cap + 1.
    std::size_t inner_distance(FlagComplex const& m,
                               FlagId             a,
                               FlagId             b,
                               Letter             s,
                               std::size_t        cap) {
      std::vector<FlagId> cls;
      for (FlagId x = 0; x < m.size(); ++x) {
        if (colours::is_subset(m.diff(a, x), s.support())) {
          cls.push_back(x);
        }
      }
      std::vector<std::size_t> dist(m.size(), std::numeric_limits<std::size_t>::max());
      std::deque<FlagId>       queue{a};
      dist[a] = 0;
      while (!queue.empty()) {
        FlagId const x = queue.front();
        queue.pop_front();
        if (x == b || dist[x] > cap) {
          break;
        }
        for (FlagId y : cls) {
          ColourSet const d = m.diff(x, y);
          if (dist[y] == std::numeric_limits<std::size_t>::max() && d != 0
              && colours::is_proper_subset(d, s.support())) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
      return std::min(dist[b], cap + 1);
    }

  }  // namespace

  bool op_sn(FlagComplex const& m, FlagId a, FlagId b, Letter s, std::size_t n) {
    if (!colours::is_subset(m.diff(a, b), s.support())) {
      throw Error(ErrorCode::not_equivalent,
                  "flags differ outside " + to_string(m.graph(), s));
    }
    return inner_distance(m, a, b, s, n) > n;
  }

  std::optional<FlagPath> elementary_cycle(FlagComplex const&         m,
                                           std::optional<std::size_t> max_n,
                                           std::optional<std::size_t> budget) {
    std::size_t const top   = max_n.value_or(m.size());
    std::size_t const limit = budget.value_or(1'000'000);
    // A step F op^{s,n} G needs the difference to be exactly s, since a
    // smaller difference is one move inside a proper subset.
    struct Move {
      Letter      letter;
      FlagId      to;
      std::size_t distance;
    };
    std::vector<std::vector<Move>> moves(m.size());
    for (FlagId a = 0; a < m.size(); ++a) {
      for (FlagComplex::Step const& step : m.weak_steps(a)) {
        moves[a].push_back(
            {step.letter, step.to, inner_distance(m, a, step.to, step.letter, top)});
      }
    }
    std::size_t states = 0;
    for (std::size_t n = 1; n <= top; ++n) {
      for (FlagId start = 0; start < m.size(); ++start) {
        std::vector<FlagId>                    ids{start};
        std::vector<std::unordered_map<StateKey, bool, KeyHash>> dead(n + 1);

        std::function<bool(History const&)> search = [&](History const& h) {
          std::size_t const depth = ids.size() - 1;
          FlagId const      x     = ids.back();
          if (depth == n) {
            return x == start;
          }
          StateKey const key = key_of(x, h);
          if (dead[depth].contains(key)) {
            return false;
          }
          if (++states > limit) {
            throw Error(ErrorCode::budget_exceeded,
                        "elementary cycle search exceeded " + std::to_string(limit)
                            + " states");
          }
          for (Move const& mv : moves[x]) {
            if (mv.distance <= n) {
              continue;
            }
            auto next = append(m.graph(), h, mv.letter);
            if (!next) {
              continue;
            }
            ids.push_back(mv.to);
            if (search(*next)) {
              return true;
            }
            ids.pop_back();
          }
          dead[depth].emplace(key, true);
          return false;
        };
        if (search({})) {
          return m.to_path(ids);
        }
      }
    }
    return std::nullopt;
  }

  bool check_P_u(FlagComplex const& m, Flag const& f, Flag const& h, Word const& u) {
    FlagId const      target = m.id(h);
    std::vector<bool> reached(m.size(), false);
    reached[m.id(f)] = true;
    for (Letter s : u) {
      std::vector<bool> next(m.size(), false);
      for (FlagId a = 0; a < m.size(); ++a) {
        if (!reached[a]) {
          continue;
        }
        for (FlagId b = 0; b < m.size(); ++b) {
          if (!next[b] && colours::is_subset(m.diff(a, b), s.support())) {
            next[b] = true;
          }
        }
      }
      reached = std::move(next);
    }
    return reached[target];
  }

  std::vector<FlagPath> paths_with_word(FlagComplex const& m,
                                        Flag const&        f,
                                        Flag const&        h,
                                        Word const&        u,
                                        std::size_t        limit) {
    FlagId const          target = m.id(h);
    std::vector<FlagPath> out;
    std::vector<FlagId>   ids{m.id(f)};

    std::function<void()> extend = [&]() {
      if (out.size() >= limit) {
        return;
      }
      std::size_t const k = ids.size() - 1;
      if (k == u.size()) {
        if (ids.back() == target) {
          out.push_back(m.to_path(ids));
        }
        return;
      }
      for (FlagComplex::Step const& step : m.op_steps(ids.back())) {
        if (step.letter == u[k]) {
          ids.push_back(step.to);
          extend();
          ids.pop_back();
        }
      }
    };
    extend();
    return out;
  }

}  // namespace coxflag
