#include "coxflag/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "coxflag/error.hpp"

namespace coxflag {

  namespace {
    using Mask = std::uint64_t;

    constexpr Mask bit(std::size_t i) noexcept {
      return Mask(1) << i;
    }

    // The dependency order of the letter occurrences of a word.  Prefixes of
    // the trace are exactly the downward closed masks.
    class Heap {
     public:
      Heap(ColourGraph const& g, Word const& u) : _word(u), _pred(u.size(), 0) {
        if (u.size() > 64) {
          throw Error(ErrorCode::size_cap_exceeded,
                      "words are limited to 64 letters");
        }
        for (std::size_t i = 0; i < u.size(); ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            if (!g.commute(u[j], u[i])) {
              _pred[i] |= bit(j);
            }
          }
        }
      }

      std::size_t size() const noexcept {
        return _word.size();
      }

      Mask full() const noexcept {
        return size() == 64 ? ~Mask(0) : bit(size()) - 1;
      }

      Letter letter(std::size_t i) const {
        return _word[i];
      }

      Mask minimal(Mask done) const {
        Mask out = 0;
        for (Mask rest = full() & ~done; rest != 0; rest &= rest - 1) {
          auto const i = static_cast<std::size_t>(std::countr_zero(rest));
          if ((_pred[i] & ~done) == 0) {
            out |= bit(i);
          }
        }
        return out;
      }

      std::optional<std::size_t> minimal_equal(Mask done, Letter s) const {
        for (Mask m = minimal(done); m != 0; m &= m - 1) {
          auto const i = static_cast<std::size_t>(std::countr_zero(m));
          if (_word[i] == s) {
            return i;
          }
        }
        return std::nullopt;
      }

      Word word(Mask m) const {
        Word out;
        for (; m != 0; m &= m - 1) {
          out.push_back(_word[static_cast<std::size_t>(std::countr_zero(m))]);
        }
        return out;
      }

      std::vector<Mask> ideals() const {
        std::vector<Mask>        out{0};
        std::unordered_set<Mask> seen{0};
        for (std::size_t k = 0; k < out.size(); ++k) {
          for (Mask m = minimal(out[k]); m != 0; m &= m - 1) {
            Mask const next = out[k] | (m & -m);
            if (seen.insert(next).second) {
              out.push_back(next);
            }
          }
        }
        return out;
      }

     private:
      Word              _word;
      std::vector<Mask> _pred;
    };

    // Index of a letter that generalised Absorption may delete, if any.
    std::optional<std::size_t> absorbable_index(ColourGraph const& g,
                                                Word const&        u) {
      std::size_t const n = u.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (u[i].subset_of(u[j])) {
            return i;
          }
          if (!g.commute(u[i], u[j])) {
            break;
          }
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i-- > 0;) {
          if (u[j].subset_of(u[i])) {
            return j;
          }
          if (!g.commute(u[j], u[i])) {
            break;
          }
        }
      }
      return std::nullopt;
    }

    bool commutes_with_all(ColourGraph const& g,
                           Letter             s,
                           Word::const_iterator first,
                           Word::const_iterator last) {
      return std::all_of(
          first, last, [&](Letter t) { return g.commute(s, t); });
    }

    Word normalised(ColourGraph const& g, Word const& u) {
      return normal_form(g, u);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(ColourGraph const& g, Letter s) {
    std::string out = "{";
    bool        first = true;
    for (Colour c : colours::to_vector(s.support())) {
      if (!first) {
        out += ",";
      }
      out += g.name(c);
      first = false;
    }
    return out + "}";
  }

  std::string to_string(ColourGraph const& g, Word const& u) {
    if (u.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i > 0) {
        out += ".";
      }
      out += to_string(g, u[i]);
    }
    return out;
  }

  Word parse_word(ColourGraph const& g, std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.remove_suffix(1);
    }
    auto fail = [&](std::size_t pos, std::string const& reason) {
      throw Error(ErrorCode::parse_error,
                  "position " + std::to_string(pos) + ": " + reason);
    };
    if (text == "1") {
      return {};
    }
    if (text.empty()) {
      fail(0, "empty input (the empty word is written 1)");
    }
    Word        out;
    std::size_t pos = 0;
    while (true) {
      if (pos >= text.size() || text[pos] != '{') {
        fail(pos, "expected '{'");
      }
      ++pos;
      ColourSet letter = 0;
      while (true) {
        std::size_t const start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != '}'
               && text[pos] != '{' && text[pos] != '.') {
          ++pos;
        }
        if (pos == start) {
          fail(pos, "expected a colour");
        }
        std::string_view const name = text.substr(start, pos - start);
        auto const             c    = g.find(name);
        if (!c) {
          throw Error(ErrorCode::invalid_letter,
                      "unknown colour '" + std::string(name) + "'");
        }
        if (colours::contains(letter, *c)) {
          fail(start, "repeated colour '" + std::string(name) + "'");
        }
        letter |= colours::single(*c);
        if (pos >= text.size()) {
          fail(pos, "unterminated letter");
        }
        if (text[pos] == '}') {
          ++pos;
          break;
        }
        if (text[pos] != ',') {
          fail(pos, "expected ',' or '}'");
        }
        ++pos;
      }
      out.push_back(g.letter(letter));
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != '.') {
        fail(pos, "expected '.'");
      }
      ++pos;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Basic operations
  ////////////////////////////////////////////////////////////////////////

  ColourSet support(Word const& u) {
    ColourSet out = 0;
    for (Letter s : u) {
      out |= s.support();
    }
    return out;
  }

  Word inverse(Word const& u) {
    return Word(u.rbegin(), u.rend());
  }

  Word concat(Word const& u, Word const& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  Word commuting_word(ColourGraph const& g, ColourSet s) {
    return g.components(s);
  }

  bool is_commuting(ColourGraph const& g, Word const& u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (!g.commute(u[i], u[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool words_commute(ColourGraph const& g, Word const& u, Word const& v) {
    return (g.boundary(support(u)) & support(v)) == 0;
  }

  Word cent_word(ColourGraph const& g, Word const& v, Letter s) {
    ColourSet const bd = g.boundary(s);
    Word            out;
    for (Letter t : v) {
      for (Letter c : g.components(t.support() & ~bd)) {
        out.push_back(c);
      }
    }
    return out;
  }

  Word normal_form(ColourGraph const& g, Word const& u) {
    Heap const h(g, u);
    Word       out;
    Mask       done = 0;
    while (done != h.full()) {
      Mask        m    = h.minimal(done);
      std::size_t best = static_cast<std::size_t>(std::countr_zero(m));
      for (m &= m - 1; m != 0; m &= m - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(m));
        if (h.letter(i) < h.letter(best)) {
          best = i;
        }
      }
      out.push_back(h.letter(best));
      done |= bit(best);
    }
    return out;
  }

  bool equivalent(ColourGraph const& g, Word const& u, Word const& v) {
    return u.size() == v.size() && normal_form(g, u) == normal_form(g, v);
  }

  bool is_reduced(ColourGraph const& g, Word const& u) {
    return !absorbable_index(g, u).has_value();
  }

  void require_reduced(ColourGraph const& g, Word const& u) {
    if (!is_reduced(g, u)) {
      throw Error(ErrorCode::not_reduced, to_string(g, u) + " is not reduced");
    }
  }

  Word reduce(ColourGraph const& g, Word const& u) {
    Word out = u;
    while (auto i = absorbable_index(g, out)) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(*i));
    }
    return normal_form(g, out);
  }

  Word reduce_concat(ColourGraph const& g, Word const& u, Word const& v) {
    return reduce(g, concat(u, v));
  }

  ////////////////////////////////////////////////////////////////////////
  // The order of splittings
  ////////////////////////////////////////////////////////////////////////

  // u is below v iff the letters of v can be read left to right, each either
  // matched by one equal letter of u or replaced by a word of smaller letters
  // of u, consuming u as a linearisation of its trace.
  bool preceq(ColourGraph const& g, Word const& u, Word const& v) {
    if (!colours::is_subset(support(u), support(v))) {
      return false;
    }
    Heap const        h(g, u);
    std::size_t const m = v.size();
    std::vector<Mask> coverable(m + 1, 0);
    for (std::size_t k = m; k-- > 0;) {
      coverable[k] = coverable[k + 1];
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].subset_of(v[k])) {
          coverable[k] |= bit(i);
        }
      }
    }
    std::vector<Mask> layer{0};
    if ((h.full() & ~coverable[0]) != 0) {
      return false;
    }
    std::unordered_set<Mask> next;
    std::unordered_set<Mask> expanded;
    std::vector<Mask>        stack;
    for (std::size_t k = 0; k < m; ++k) {
      Letter const t = v[k];
      next.clear();
      expanded.clear();
      for (Mask ideal : layer) {
        if (auto i = h.minimal_equal(ideal, t)) {
          next.insert(ideal | bit(*i));
        }
        if (!expanded.insert(ideal).second) {
          continue;
        }
        stack.assign(1, ideal);
        while (!stack.empty()) {
          Mask const cur = stack.back();
          stack.pop_back();
          next.insert(cur);
          for (Mask mm = h.minimal(cur); mm != 0; mm &= mm - 1) {
            auto const i = static_cast<std::size_t>(std::countr_zero(mm));
            if (h.letter(i).proper_subset_of(t)
                && expanded.insert(cur | bit(i)).second) {
              stack.push_back(cur | bit(i));
            }
          }
        }
      }
      layer.clear();
      for (Mask ideal : next) {
        if ((h.full() & ~ideal & ~coverable[k + 1]) == 0) {
          layer.push_back(ideal);
        }
      }
      if (layer.empty()) {
        return false;
      }
    }
    return std::find(layer.begin(), layer.end(), h.full()) != layer.end();
  }

  bool prec(ColourGraph const& g, Word const& u, Word const& v) {
    return preceq(g, u, v) && !equivalent(g, u, v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Absorption and segments
  ////////////////////////////////////////////////////////////////////////

  bool absorbed(ColourGraph const& g,
                Word const&        t,
                Word const&        u,
                Side               side,
                bool               proper) {
    require_reduced(g, u);
    Word const  oriented = side == Side::left ? u : inverse(u);
    auto const  contains = [proper](Letter x, Letter s) {
      return proper ? x.proper_subset_of(s) : x.subset_of(s);
    };
    for (Letter x : t) {
      bool found = false;
      for (Letter s : oriented) {
        if (contains(x, s)) {
          found = true;
          break;
        }
        if (!g.commute(x, s)) {
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Segments segments(ColourGraph const& g, Word const& u) {
    Segments out;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (commutes_with_all(g, u[i], u.begin(), u.begin() + i)) {
        out.beginnings.push_back(u[i]);
      }
      if (commutes_with_all(g, u[i], u.begin() + i + 1, u.end())) {
        out.ends.push_back(u[i]);
      }
    }
    std::sort(out.beginnings.begin(), out.beginnings.end());
    std::sort(out.ends.begin(), out.ends.end());
    out.initial = out.beginnings;
    out.final   = out.ends;
    return out;
  }

  std::optional<Word> strip_prefix(ColourGraph const& g,
                                   Word const&        u,
                                   Word const&        prefix) {
    if (prefix.size() > u.size()) {
      return std::nullopt;
    }
    Heap const h(g, u);
    Mask       done = 0;
    for (Letter s : prefix) {
      auto const i = h.minimal_equal(done, s);
      if (!i) {
        return std::nullopt;
      }
      done |= bit(*i);
    }
    return h.word(h.full() & ~done);
  }

  std::optional<Word> strip_suffix(ColourGraph const& g,
                                   Word const&        u,
                                   Word const&        suffix) {
    auto rest = strip_prefix(g, inverse(u), inverse(suffix));
    if (!rest) {
      return std::nullopt;
    }
    return inverse(*rest);
  }

  std::vector<std::pair<Word, Word>> factorisations(ColourGraph const& g,
                                                    Word const&        u) {
    Heap const                         h(g, u);
    std::vector<std::pair<Word, Word>> out;
    for (Mask ideal : h.ideals()) {
      out.emplace_back(h.word(ideal), h.word(h.full() & ~ideal));
    }
    return out;
  }

  Word common_affix(ColourGraph const& g,
                    Word const&        u,
                    Word const&        v,
                    Affix              side) {
    if (side == Affix::final) {
      return normal_form(
          g, inverse(common_affix(g, inverse(u), inverse(v), Affix::initial)));
    }
    Word a = u;
    Word b = v;
    Word out;
    while (true) {
      auto const ba = segments(g, a).beginnings;
      auto const bb = segments(g, b).beginnings;
      auto const it = std::find_first_of(ba.begin(), ba.end(), bb.begin(), bb.end());
      if (it == ba.end()) {
        break;
      }
      out.push_back(*it);
      a = *strip_prefix(g, a, {*it});
      b = *strip_prefix(g, b, {*it});
    }
    return normal_form(g, out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Symmetric decomposition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    SymDecomposition decompose(ColourGraph const& g,
                               Word const&        u,
                               Word const&        v) {
      if (is_reduced(g, concat(u, v))) {
        return {u, {}, {}, {}, v};
      }
      for (Letter s : segments(g, u).ends) {
        if (!absorbed(g, {s}, v, Side::left)) {
          continue;
        }
        SymDecomposition d = decompose(g, *strip_suffix(g, u, {s}), v);
        if (absorbed(g, {s}, d.v1, Side::left, true)) {
          d.u_prime.push_back(s);
        } else {
          auto rest = strip_prefix(g, d.v1, {s});
          if (!rest) {
            throw std::logic_error("symmetric decomposition: lost beginning");
          }
          d.w.push_back(s);
          d.v1 = *rest;
        }
        return d;
      }
      SymDecomposition const m = decompose(g, inverse(v), inverse(u));
      return {inverse(m.v1),
              inverse(m.v_prime),
              inverse(m.w),
              inverse(m.u_prime),
              inverse(m.u1)};
    }
  }  // namespace

  SymDecomposition symmetric_decomposition(ColourGraph const& g,
                                           Word const&        u,
                                           Word const&        v) {
    require_reduced(g, u);
    require_reduced(g, v);
    SymDecomposition d = decompose(g, u, v);
    return {normalised(g, d.u1),
            normalised(g, d.u_prime),
            normalised(g, d.w),
            normalised(g, d.v_prime),
            normalised(g, d.v1)};
  }

  std::optional<std::string>
  check_symmetric_decomposition(ColourGraph const&      g,
                                Word const&             u,
                                Word const&             v,
                                SymDecomposition const& d) {
    if (!equivalent(g, u, concat(concat(d.u1, d.u_prime), d.w))) {
      return "u is not u1.u'.w";
    }
    if (!equivalent(g, v, concat(concat(d.w, d.v_prime), d.v1))) {
      return "v is not w.v'.v1";
    }
    if (!is_commuting(g, d.w)) {
      return "w is not commuting";
    }
    if (!absorbed(g, d.u_prime, d.v1, Side::left, true)) {
      return "u' is not properly left-absorbed by v1";
    }
    if (!absorbed(g, d.v_prime, d.u1, Side::right, true)) {
      return "v' is not properly right-absorbed by u1";
    }
    if (!words_commute(g, d.u_prime, d.w) || !words_commute(g, d.u_prime, d.v_prime)
        || !words_commute(g, d.w, d.v_prime)) {
      return "u', w, v' do not pairwise commute";
    }
    Word const middle = concat(concat(d.u1, d.w), d.v1);
    if (!is_reduced(g, middle)) {
      return "u1.w.v1 is not reduced";
    }
    if (!equivalent(g, reduce_concat(g, u, v), middle)) {
      return "[u.v] differs from u1.w.v1";
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Division, sr, wobbling
  ////////////////////////////////////////////////////////////////////////

  Word divide(ColourGraph const& g, Word const& v, Word const& u) {
    require_reduced(g, v);
    require_reduced(g, u);
    if (!preceq(g, u, v)) {
      throw Error(ErrorCode::not_divisible,
                  to_string(g, u) + " is not below " + to_string(g, v));
    }
    Word cur = v;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      Letter const s = *it;
      auto const   last
          = std::find_if(cur.rbegin(), cur.rend(), [s](Letter t) {
              return s.subset_of(t);
            });
      if (last == cur.rend()) {
        throw Error(ErrorCode::not_divisible,
                    "no letter contains " + to_string(g, s));
      }
      auto const pos  = cur.size() - 1 - static_cast<std::size_t>(last - cur.rbegin());
      Word       next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      Word const tail(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end());
      Word const cent = cent_word(g, tail, s);
      next.insert(next.end(), cent.begin(), cent.end());
      cur = reduce(g, next);
    }
    return normal_form(g, cur);
  }

  Word sr(ColourGraph const& g, Word const& u) {
    require_reduced(g, u);
    ColourSet supp = 0;
    for (Colour c : colours::to_vector(support(u))) {
      if (absorbed(g, {Letter(colours::single(c))}, u, Side::right)) {
        supp |= colours::single(c);
      }
    }
    return commuting_word(g, supp);
  }

  ColourSet wobbling(ColourGraph const& g, Word const& u, Word const& v) {
    if (!is_reduced(g, concat(u, v))) {
      throw Error(ErrorCode::not_reduced_concat,
                  to_string(g, u) + " . " + to_string(g, v)
                      + " is not reduced");
    }
    return support(sr(g, u)) & support(sr(g, inverse(v)));
  }

  Word back_and_forth(ColourGraph const& g, Word const& u) {
    require_reduced(g, u);
    return reduce_concat(g, u, inverse(u));
  }

  ////////////////////////////////////////////////////////////////////////
  // Property E and ranks
  ////////////////////////////////////////////////////////////////////////

  std::optional<unsigned> proper_block_count(ColourGraph const& g,
                                             Word const&        w,
                                             Letter             s) {
    if (!colours::is_subset(support(w), s.support())) {
      return std::nullopt;
    }
    Heap const                     h(g, w);
    std::unordered_map<Mask, unsigned> dist{{0, 0}};
    std::deque<Mask>                   queue{0};
    while (!queue.empty()) {
      Mask const ideal = queue.front();
      queue.pop_front();
      unsigned const d = dist[ideal];
      if (ideal == h.full()) {
        return d;
      }
      for (Colour c : colours::to_vector(s.support())) {
        ColourSet const allowed = s.support() & ~colours::single(c);
        Mask            grown   = ideal;
        while (true) {
          Mask add = 0;
          for (Mask m = h.minimal(grown); m != 0; m &= m - 1) {
            auto const i = static_cast<std::size_t>(std::countr_zero(m));
            if (colours::is_subset(h.letter(i).support(), allowed)) {
              add |= bit(i);
            }
          }
          if (add == 0) {
            break;
          }
          grown |= add;
        }
        if (grown != ideal && dist.emplace(grown, d + 1).second) {
          queue.push_back(grown);
        }
      }
    }
    return std::nullopt;
  }

  bool satisfies_E(ColourGraph const& g, Word const& w, Letter s, unsigned n) {
    require_reduced(g, w);
    if (!colours::is_subset(support(w), s.support())) {
      return false;
    }
    auto const blocks = proper_block_count(g, w, s);
    return !blocks || *blocks > n;
  }

  Ordinal rank(ColourGraph const& g, Word const& u, RankKind) {
    require_reduced(g, u);
    Heap const h(g, u);
    Mask       done = 0;
    unsigned   last = max_colours + 1;
    Ordinal    out;
    while (done != h.full()) {
      std::size_t best = 0;
      unsigned    size = 0;
      for (Mask m = h.minimal(done); m != 0; m &= m - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(m));
        if (h.letter(i).size() > size) {
          size = h.letter(i).size();
          best = i;
        }
      }
      if (size > last) {
        throw Error(ErrorCode::unsupported_shape,
                    to_string(g, u) + " has no size-descending permutation");
      }
      last = size;
      done |= bit(best);
      out = out + Ordinal::omega_power(size - 1);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Triangles
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool triangle_conditions(ColourGraph const&           g,
                             TriangleDecomposition const& d) {
      return words_commute(g, d.alpha, d.beta) && words_commute(g, d.alpha, d.x)
             && words_commute(g, d.beta, d.x)
             && absorbed(g, d.x, d.c, Side::right, true)
             && absorbed(g, d.alpha, d.v1, Side::left, true)
             && absorbed(g, d.beta, d.u1, Side::right, false);
    }
  }  // namespace

  std::vector<TriangleDecomposition> triangle_decompositions(
      ColourGraph const& g,
      Word const&        u,
      Word const&        v,
      Word const&        w) {
    require_reduced(g, u);
    require_reduced(g, v);
    require_reduced(g, w);
    std::vector<TriangleDecomposition> out;
    Heap const                         hv(g, v);
    for (Mask ideal : hv.ideals()) {
      Word const c    = hv.word(ideal);
      Word const rest = hv.word(hv.full() & ~ideal);
      auto const p    = strip_suffix(g, u, inverse(c));
      if (!p) {
        continue;
      }
      for (auto const& [u1, alpha_inv] : factorisations(g, *p)) {
        auto const t = strip_prefix(g, w, u1);
        if (!t) {
          continue;
        }
        for (auto const& [beta, v1] : factorisations(g, rest)) {
          auto const x = strip_suffix(g, *t, v1);
          if (!x) {
            continue;
          }
          TriangleDecomposition d{normal_form(g, u1),
                                  normal_form(g, v1),
                                  normal_form(g, c),
                                  normal_form(g, *x),
                                  normal_form(g, inverse(alpha_inv)),
                                  normal_form(g, beta)};
          if (triangle_conditions(g, d)
              && std::find(out.begin(), out.end(), d) == out.end()) {
            out.push_back(std::move(d));
          }
        }
      }
    }
    return out;
  }

  TriangleDecomposition triangle_decompose(ColourGraph const& g,
                                           Word const&        u,
                                           Word const&        v,
                                           Word const&        w) {
    auto all = triangle_decompositions(g, u, v, w);
    if (all.empty()) {
      throw Error(ErrorCode::not_a_reduct,
                  to_string(g, w) + " is not a reduct of " + to_string(g, u)
                      + " . " + to_string(g, v));
    }
    return all.front();
  }

  std::optional<std::string>
  check_triangle_decomposition(ColourGraph const&           g,
                               Word const&                  u,
                               Word const&                  v,
                               Word const&                  w,
                               TriangleDecomposition const& d) {
    if (!equivalent(g, u, concat(concat(d.u1, inverse(d.alpha)), inverse(d.c)))) {
      return "u is not u1.alpha^-1.c^-1";
    }
    if (!equivalent(g, v, concat(concat(d.c, d.beta), d.v1))) {
      return "v is not c.beta.v1";
    }
    if (!equivalent(g, w, concat(concat(d.u1, d.x), d.v1))) {
      return "w is not u1.x.v1";
    }
    if (!triangle_conditions(g, d)) {
      return "commutation or absorption condition fails";
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction of a flanked pair
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Item {
      Letter      letter;
      bool        original;
      std::size_t origin;
    };

    Word letters_of(std::vector<Item> const& items) {
      Word out;
      for (Item const& it : items) {
        out.push_back(it.letter);
      }
      return out;
    }

    // Non-splitting reduction inside one side; only replacement letters may
    // disappear.
    void absorb_within(ColourGraph const& g, std::vector<Item>& items) {
      while (true) {
        Word const word = letters_of(items);
        auto       i    = absorbable_index(g, word);
        if (!i) {
          return;
        }
        if (items[*i].original) {
          // An equal derived partner may be deleted instead.
          auto partner = std::find_if(items.begin(), items.end(), [&](Item const& it) {
            return !it.original && it.letter == items[*i].letter;
          });
          if (partner == items.end()) {
            throw std::logic_error("flanked reduction deleted an original letter");
          }
          items.erase(partner);
        } else {
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(*i));
        }
      }
    }
  }  // namespace

  PairReduction reduce_pair_flanked(ColourGraph const& g,
                                    Word const&        w1,
                                    Word const&        w,
                                    Word const&        w2,
                                    Splitter const&    splitter) {
    require_reduced(g, w1);
    require_reduced(g, w2);
    std::vector<Item> left;
    std::vector<Item> right;
    for (std::size_t i = 0; i < w1.size(); ++i) {
      left.push_back({w1[i], true, i});
    }
    for (std::size_t i = 0; i < w2.size(); ++i) {
      right.push_back({w2[i], true, i});
    }
    std::vector<bool> touched_left(w1.size(), false);
    std::vector<bool> touched_right(w2.size(), false);

    auto eligible = [&](std::size_t a, std::size_t b) {
      Letter const s = left[a].letter;
      Letter const t = right[b].letter;
      if (!s.subset_of(t) && !t.subset_of(s)) {
        return false;
      }
      Letter const small = s.subset_of(t) ? s : t;
      for (std::size_t k = a + 1; k < left.size(); ++k) {
        if (!g.commute(small, left[k].letter)) {
          return false;
        }
      }
      if (!commutes_with_all(g, small, w.begin(), w.end())) {
        return false;
      }
      for (std::size_t k = 0; k < b; ++k) {
        if (!g.commute(small, right[k].letter)) {
          return false;
        }
      }
      return true;
    };

    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (std::size_t a = 0; a < left.size() && !pair; ++a) {
        for (std::size_t b = 0; b < right.size(); ++b) {
          if (eligible(a, b)) {
            pair.emplace(a, b);
            break;
          }
        }
      }
      if (!pair) {
        break;
      }
      auto const [a, b] = *pair;
      Letter const s    = left[a].letter;
      Letter const t    = right[b].letter;
      if (s.proper_subset_of(t) || s == t) {
        if (left[a].original) {
          touched_left[left[a].origin] = true;
        }
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(a));
      }
      if (t.proper_subset_of(s)) {
        if (right[b].original) {
          touched_right[right[b].origin] = true;
        }
        right.erase(right.begin() + static_cast<std::ptrdiff_t>(b));
      } else if (s == t) {
        Word const y = splitter ? splitter(s) : Word{};
        for (Letter r : y) {
          if (!r.subset_of(s)) {
            throw std::invalid_argument("splitter returned a letter outside "
                                        + to_string(g, s));
          }
        }
        Item const old = right[b];
        if (old.original) {
          touched_right[old.origin] = true;
        }
        right.erase(right.begin() + static_cast<std::ptrdiff_t>(b));
        std::vector<Item> inserted;
        for (Letter r : y) {
          inserted.push_back({r, false, old.origin});
        }
        right.insert(right.begin() + static_cast<std::ptrdiff_t>(b),
                     inserted.begin(),
                     inserted.end());
        absorb_within(g, right);
      }
    }

    PairReduction out;
    for (Item const& it : left) {
      (it.original ? out.u1 : out.x1).push_back(it.letter);
    }
    for (Item const& it : right) {
      (it.original ? out.u2 : out.x2).push_back(it.letter);
    }
    for (std::size_t i = 0; i < w1.size(); ++i) {
      if (touched_left[i]) {
        out.v1.push_back(w1[i]);
      }
    }
    for (std::size_t i = 0; i < w2.size(); ++i) {
      if (touched_right[i]) {
        out.v2.push_back(w2[i]);
      }
    }
    out.w1_star = letters_of(left);
    out.w2_star = letters_of(right);
    return out;
  }

  std::optional<std::string> check_pair_reduction(ColourGraph const&   g,
                                                  Word const&          w1,
                                                  Word const&          w,
                                                  Word const&          w2,
                                                  PairReduction const& r) {
    if (!equivalent(g, w1, concat(r.u1, r.v1))) {
      return "w1 is not u1.v1";
    }
    if (!equivalent(g, w2, concat(r.v2, r.u2))) {
      return "w2 is not v2.u2";
    }
    if (!equivalent(g, r.w1_star, concat(r.u1, r.x1))
        || !equivalent(g, r.w2_star, concat(r.x2, r.u2))) {
      return "reduced sides are not u1.x1 and x2.u2";
    }
    if (!preceq(g, r.x1, r.v1) || !preceq(g, r.x2, r.v2)) {
      return "replacements are not below the replaced letters";
    }
    if (!words_commute(g, r.v1, w) || !words_commute(g, r.v2, w)) {
      return "replaced letters do not commute with the middle word";
    }
    ColourSet const common = support(w1) & support(w2);
    if (!colours::is_subset(support(r.v1), common)
        || !colours::is_subset(support(r.v2), common)) {
      return "replaced letters leave the common support";
    }
    Word const a = r.w1_star;
    Word const b = r.w2_star;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!a[i].subset_of(b[j]) && !b[j].subset_of(a[i])) {
          continue;
        }
        Letter const small = a[i].subset_of(b[j]) ? a[i] : b[j];
        if (commutes_with_all(g, small, a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end())
            && commutes_with_all(g, small, w.begin(), w.end())
            && commutes_with_all(g, small, b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j))) {
          return "an eligible pair remains";
        }
      }
    }
    return std::nullopt;
  }

}  // namespace coxflag
