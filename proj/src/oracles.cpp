#include "coxflag/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace coxflag::oracle {

  namespace {
    Word project(Word const& u, Letter a, Letter b) {
      Word out;
      for (Letter s : u) {
        if (s == a || s == b) {
          out.push_back(s);
        }
      }
      return out;
    }

    bool comparable(Letter s, Letter t) {
      return s.subset_of(t) || t.subset_of(s);
    }

    bool all_commute(ColourGraph const& g, Word const& a, Word const& b) {
      for (Letter s : a) {
        for (Letter t : b) {
          if (!g.commute(s, t)) {
            return false;
          }
        }
      }
      return true;
    }

    bool pairwise_commuting(ColourGraph const& g, Word const& u) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
          if (!g.commute(u[i], u[j])) {
            return false;
          }
        }
      }
      return true;
    }

    Word join(std::initializer_list<Word const*> parts) {
      Word out;
      for (Word const* p : parts) {
        out.insert(out.end(), p->begin(), p->end());
      }
      return out;
    }

    std::vector<Letter> proper_subletters(ColourGraph const& g, Letter s) {
      std::vector<Letter> out;
      for (Letter t : g.letters(s.size())) {
        if (t.proper_subset_of(s)) {
          out.push_back(t);
        }
      }
      return out;
    }
  }  // namespace

  bool equivalent(ColourGraph const& g, Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return false;
    }
    std::set<Letter> alphabet(u.begin(), u.end());
    alphabet.insert(v.begin(), v.end());
    for (Letter a : alphabet) {
      for (Letter b : alphabet) {
        if (b < a || g.commute(a, b)) {
          continue;
        }
        if (project(u, a, b) != project(v, a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  std::set<Word> linearisations(ColourGraph const& g, Word const& u) {
    std::set<Word>   seen{u};
    std::deque<Word> queue{u};
    while (!queue.empty()) {
      Word const cur = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (g.commute(cur[i], cur[i + 1])) {
          Word next = cur;
          std::swap(next[i], next[i + 1]);
          if (seen.insert(next).second) {
            queue.push_back(std::move(next));
          }
        }
      }
    }
    return seen;
  }

  Word canonical(ColourGraph const& g, Word const& u) {
    return *linearisations(g, u).begin();
  }

  bool is_reduced(ColourGraph const& g, Word const& u) {
    for (Word const& lin : linearisations(g, u)) {
      for (std::size_t i = 0; i + 1 < lin.size(); ++i) {
        if (comparable(lin[i], lin[i + 1])) {
          return false;
        }
      }
    }
    return true;
  }

  bool absorbed(ColourGraph const& g,
                Word const&        t,
                Word const&        u,
                Side               side,
                bool               proper) {
    for (Letter x : t) {
      bool found = false;
      for (std::size_t i = 0; i < u.size() && !found; ++i) {
        bool const contained
            = proper ? x.proper_subset_of(u[i]) : x.subset_of(u[i]);
        if (!contained) {
          continue;
        }
        bool flank_commutes = true;
        std::size_t const lo = side == Side::left ? 0 : i + 1;
        std::size_t const hi = side == Side::left ? i : u.size();
        for (std::size_t j = lo; j < hi; ++j) {
          flank_commutes = flank_commutes && g.commute(x, u[j]);
        }
        found = flank_commutes;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::set<Word> nonsplitting_normal_forms(ColourGraph const& g,
                                           Word const&        u) {
    std::set<Word>   seen{u};
    std::deque<Word> queue{u};
    std::set<Word>   stuck;
    while (!queue.empty()) {
      Word const cur = queue.front();
      queue.pop_front();
      bool absorbable = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        std::vector<Word> nexts;
        if (g.commute(cur[i], cur[i + 1])) {
          Word next = cur;
          std::swap(next[i], next[i + 1]);
          nexts.push_back(std::move(next));
        }
        if (comparable(cur[i], cur[i + 1])) {
          absorbable = true;
          Word         next  = cur;
          std::size_t const drop
              = cur[i].subset_of(cur[i + 1]) ? i : i + 1;
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(drop));
          nexts.push_back(std::move(next));
        }
        for (Word& next : nexts) {
          if (seen.insert(next).second) {
            queue.push_back(std::move(next));
          }
        }
      }
      if (!absorbable) {
        stuck.insert(cur);
      }
    }
    // A class is terminal when none of its members admits Absorption.
    std::set<Word> out;
    for (Word const& w : stuck) {
      auto const lins     = linearisations(g, w);
      bool const terminal = std::all_of(
          lins.begin(), lins.end(), [&](Word const& l) { return stuck.count(l) > 0; });
      if (terminal) {
        out.insert(*lins.begin());
      }
    }
    return out;
  }

  bool preceq(ColourGraph const& g, Word const& u, Word const& v) {
    std::map<Letter, int> budget;
    for (Letter s : u) {
      ++budget[s];
    }
    std::vector<Letter> alphabet;
    for (auto const& [s, n] : budget) {
      alphabet.push_back(s);
    }
    Word                                  built;
    std::function<bool(std::size_t)>      assign;
    std::function<bool(std::size_t, Letter)> replace;
    assign = [&](std::size_t k) -> bool {
      if (k == v.size()) {
        return built.size() == u.size() && oracle::equivalent(g, built, u);
      }
      Letter const t = v[k];
      if (budget[t] > 0) {
        --budget[t];
        built.push_back(t);
        bool const ok = assign(k + 1);
        built.pop_back();
        ++budget[t];
        if (ok) {
          return true;
        }
      }
      return replace(k, t);
    };
    // Extend the replacement of v[k] by one more letter, or close it.
    replace = [&](std::size_t k, Letter t) -> bool {
      if (assign(k + 1)) {
        return true;
      }
      for (Letter s : alphabet) {
        if (!s.proper_subset_of(t) || budget[s] == 0) {
          continue;
        }
        --budget[s];
        built.push_back(s);
        bool const ok = replace(k, t);
        built.pop_back();
        ++budget[s];
        if (ok) {
          return true;
        }
      }
      return false;
    };
    return assign(0);
  }

  std::vector<Word> reduced_words(ColourGraph const&         g,
                                  std::vector<Letter> const& letters,
                                  std::size_t                max_length) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t k = 1; k <= max_length; ++k) {
      std::set<Word> next;
      for (Word const& w : layer) {
        for (Letter s : letters) {
          Word cand = w;
          cand.push_back(s);
          if (oracle::is_reduced(g, cand)) {
            next.insert(canonical(g, cand));
          }
        }
      }
      layer.assign(next.begin(), next.end());
      out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
  }

  std::set<std::vector<Word>> three_part_splits(ColourGraph const& g,
                                                Word const&        u) {
    std::map<Word, Word>        canon;
    auto                        key = [&](Word const& w) -> Word const& {
      auto it = canon.find(w);
      if (it == canon.end()) {
        it = canon.emplace(w, canonical(g, w)).first;
      }
      return it->second;
    };
    std::set<std::vector<Word>> out;
    for (Word const& lin : linearisations(g, u)) {
      for (std::size_t i = 0; i <= lin.size(); ++i) {
        for (std::size_t j = i; j <= lin.size(); ++j) {
          Word const a(lin.begin(), lin.begin() + static_cast<std::ptrdiff_t>(i));
          Word const b(lin.begin() + static_cast<std::ptrdiff_t>(i),
                       lin.begin() + static_cast<std::ptrdiff_t>(j));
          Word const c(lin.begin() + static_cast<std::ptrdiff_t>(j), lin.end());
          out.insert({key(a), key(b), key(c)});
        }
      }
    }
    return out;
  }

  std::set<std::vector<Word>> symmetric_decompositions(ColourGraph const& g,
                                                       Word const&        u,
                                                       Word const&        v) {
    std::set<std::vector<Word>> out;
    auto const                  us = three_part_splits(g, u);
    auto const                  vs = three_part_splits(g, v);
    for (auto const& su : us) {
      Word const& u1 = su[0];
      Word const& up = su[1];
      Word const& w  = su[2];
      if (!pairwise_commuting(g, w)) {
        continue;
      }
      for (auto const& sv : vs) {
        if (sv[0] != w) {
          continue;
        }
        Word const& vp = sv[1];
        Word const& v1 = sv[2];
        if (oracle::absorbed(g, up, v1, Side::left, true)
            && oracle::absorbed(g, vp, u1, Side::right, true)
            && all_commute(g, up, w) && all_commute(g, up, vp)
            && all_commute(g, w, vp) && oracle::is_reduced(g, join({&u1, &w, &v1}))) {
          out.insert({u1, up, w, vp, v1});
        }
      }
    }
    return out;
  }

  unsigned singleton_foundation_rank(ColourGraph const& g, Word const& u) {
    std::map<Word, unsigned>                 memo;
    std::function<unsigned(Word const&)> rank = [&](Word const& w) -> unsigned {
      Word const key = canonical(g, w);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      unsigned          best = 0;
      std::size_t const n    = w.size();
      for (std::uint64_t drop = 1; drop < (std::uint64_t(1) << n); ++drop) {
        Word rest;
        for (std::size_t i = 0; i < n; ++i) {
          if (((drop >> i) & 1U) == 0) {
            rest.push_back(w[i]);
          }
        }
        if (oracle::is_reduced(g, rest)) {
          best = std::max(best, rank(rest) + 1);
        }
      }
      memo.emplace(key, best);
      return best;
    };
    return rank(u);
  }

  bool is_reduct(ColourGraph const& g,
                 Word const&        start,
                 Word const&        target,
                 std::size_t        max_split,
                 std::size_t        max_length) {
    Word const       goal = canonical(g, target);
    std::set<Word>   seen{canonical(g, start)};
    std::deque<Word> queue{*seen.begin()};
    std::map<Letter, std::vector<Word>> splittings;
    auto splittings_of = [&](Letter s) -> std::vector<Word> const& {
      auto it = splittings.find(s);
      if (it != splittings.end()) {
        return it->second;
      }
      auto const        subs = proper_subletters(g, s);
      std::vector<Word> all{Word{}};
      std::vector<Word> layer{Word{}};
      for (std::size_t k = 0; k < max_split; ++k) {
        std::vector<Word> next;
        for (Word const& w : layer) {
          for (Letter t : subs) {
            Word x = w;
            x.push_back(t);
            next.push_back(x);
          }
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return splittings.emplace(s, std::move(all)).first->second;
    };
    while (!queue.empty()) {
      Word const cur = queue.front();
      queue.pop_front();
      if (cur == goal) {
        return true;
      }
      for (Word const& lin : linearisations(g, cur)) {
        for (std::size_t i = 0; i + 1 < lin.size(); ++i) {
          if (!comparable(lin[i], lin[i + 1])) {
            continue;
          }
          std::vector<Word> nexts;
          Word              absorbed_word = lin;
          absorbed_word.erase(absorbed_word.begin()
                              + static_cast<std::ptrdiff_t>(
                                  lin[i].subset_of(lin[i + 1]) ? i : i + 1));
          nexts.push_back(absorbed_word);
          if (lin[i] == lin[i + 1]) {
            for (Word const& y : splittings_of(lin[i])) {
              Word next(lin.begin(), lin.begin() + static_cast<std::ptrdiff_t>(i));
              next.insert(next.end(), y.begin(), y.end());
              next.insert(next.end(),
                          lin.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                          lin.end());
              nexts.push_back(std::move(next));
            }
          }
          for (Word const& next : nexts) {
            if (next.size() > max_length || !coxflag::preceq(g, target, next)) {
              continue;
            }
            Word key = canonical(g, next);
            if (seen.insert(key).second) {
              queue.push_back(std::move(key));
            }
          }
        }
      }
    }
    return false;
  }

  Word random_reduction(ColourGraph const& g, Word u, std::mt19937_64& rng) {
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
          if (!comparable(u[i], u[j])) {
            continue;
          }
          Letter const small = u[i].subset_of(u[j]) ? u[i] : u[j];
          bool         free  = true;
          for (std::size_t k = i + 1; k < j; ++k) {
            free = free && g.commute(small, u[k]);
          }
          if (free) {
            pairs.emplace_back(i, j);
          }
        }
      }
      if (pairs.empty()) {
        return u;
      }
      auto const [i, j] = pairs[std::uniform_int_distribution<std::size_t>(
          0, pairs.size() - 1)(rng)];
      if (u[i] != u[j]) {
        u.erase(u.begin()
                + static_cast<std::ptrdiff_t>(u[i].subset_of(u[j]) ? i : j));
        continue;
      }
      Letter const s = u[i];
      u.erase(u.begin() + static_cast<std::ptrdiff_t>(j));
      if (std::bernoulli_distribution(0.5)(rng)) {
        continue;
      }
      auto const subs = proper_subletters(g, s);
      Word       y;
      if (!subs.empty()) {
        std::size_t const len
            = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        for (std::size_t k = 0; k < len; ++k) {
          y.push_back(subs[std::uniform_int_distribution<std::size_t>(
              0, subs.size() - 1)(rng)]);
        }
      }
      u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
      u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), y.begin(), y.end());
    }
  }

  Word random_word(std::vector<Letter> const& letters,
                   std::size_t                max_length,
                   std::mt19937_64&           rng) {
    std::size_t const len
        = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
    Word out;
    for (std::size_t k = 0; k < len; ++k) {
      out.push_back(letters[std::uniform_int_distribution<std::size_t>(
          0, letters.size() - 1)(rng)]);
    }
    return out;
  }

  Word random_reduced_word(ColourGraph const&         g,
                           std::vector<Letter> const& letters,
                           std::size_t                max_length,
                           std::mt19937_64&           rng) {
    std::size_t const len
        = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
    Word out;
    for (std::size_t attempt = 0; out.size() < len && attempt < 8 * len;
         ++attempt) {
      out.push_back(letters[std::uniform_int_distribution<std::size_t>(
          0, letters.size() - 1)(rng)]);
      if (!coxflag::is_reduced(g, out)) {
        out.pop_back();
      }
    }
    return out;
  }

}  // namespace coxflag::oracle
