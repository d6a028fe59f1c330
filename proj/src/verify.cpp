#include "coxflag/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "coxflag/error.hpp"
#include "coxflag/io.hpp"
#include "coxflag/mtinvariants.hpp"
#include "coxflag/oracles.hpp"

namespace coxflag::verify {

  namespace {

    std::string words_text(ColourGraph const& g, std::vector<Word> const& ws) {
      std::string out;
      for (Word const& w : ws) {
        out += (out.empty() ? "" : " ") + to_string(g, w);
      }
      return out;
    }

    Word slice(Word const& u, std::size_t from, std::size_t to) {
      return Word(u.begin() + static_cast<long>(from), u.begin() + static_cast<long>(to));
    }

    // Runs a check, turning library errors into failures.
    Outcome guarded(std::function<Outcome()> const& check) {
      try {
        return check();
      } catch (Error const& e) {
        return std::string(to_string(e.code())) + ": " + e.what();
      }
    }

  }  // namespace

  Outcome check_confluence(ColourGraph const& g, Word const& u) {
    return guarded([&]() -> Outcome {
      std::set<Word> const forms = oracle::nonsplitting_normal_forms(g, u);
      std::size_t const    half  = u.size() / 2;
      Word const expected = reduce_concat(g, slice(u, 0, half), slice(u, half, u.size()));
      if (forms.size() != 1) {
        return std::to_string(forms.size()) + " normal forms for " + to_string(g, u);
      }
      if (!equivalent(g, *forms.begin(), expected)) {
        return "rewriting gives " + to_string(g, *forms.begin()) + ", reduce_concat gives "
               + to_string(g, expected);
      }
      return std::nullopt;
    });
  }

  Outcome check_symmetric_case(ColourGraph const& g, Word const& u, Word const& v) {
    return guarded([&]() -> Outcome {
      SymDecomposition const d = symmetric_decomposition(g, u, v);
      if (auto why = check_symmetric_decomposition(g, u, v, d)) {
        return why;
      }
      Word const joined = concat(concat(d.u1, d.w), d.v1);
      if (!equivalent(g, reduce_concat(g, u, v), joined)) {
        return "[u.v] differs from u1.w.v1 = " + to_string(g, joined);
      }
      auto const all = oracle::symmetric_decompositions(g, u, v);
      if (all.size() != 1) {
        return std::to_string(all.size()) + " decompositions exist";
      }
      return std::nullopt;
    });
  }

  Outcome check_division_case(ColourGraph const&       g,
                              Word const&              v,
                              Word const&              u,
                              std::vector<Word> const& xs) {
    return guarded([&]() -> Outcome {
      Word const q = divide(g, v, u);
      for (Word const& x : xs) {
        bool const lhs = preceq(g, reduce_concat(g, x, u), v);
        bool const rhs = preceq(g, x, q);
        if (lhs != rhs) {
          return "x = " + to_string(g, x) + ": [x.u] below v is " + (lhs ? "true" : "false")
                 + " but x below " + to_string(g, q) + " is " + (rhs ? "true" : "false");
        }
      }
      return std::nullopt;
    });
  }

  Outcome check_sr_case(ColourGraph const& g, Word const& u, std::vector<Word> const& xs) {
    return guarded([&]() -> Outcome {
      Word const r = sr(g, u);
      if (!is_commuting(g, r)) {
        return "sr = " + to_string(g, r) + " is not commuting";
      }
      if (!preceq(g, segments(g, u).final, r)) {
        return "final segment not below sr = " + to_string(g, r);
      }
      for (Word const& x : xs) {
        if (absorbed(g, x, u, Side::right) != preceq(g, x, r)) {
          return "x = " + to_string(g, x) + " breaks the duality with sr = " + to_string(g, r);
        }
      }
      return std::nullopt;
    });
  }

  Outcome check_rank_case(ColourGraph const& g, Word const& u) {
    return guarded([&]() -> Outcome {
      Ordinal const r = rank(g, u);
      if (r != Ordinal::finite(u.size())) {
        return "rank " + r.to_string() + " for length " + std::to_string(u.size());
      }
      unsigned const brute = oracle::singleton_foundation_rank(g, u);
      if (r != Ordinal::finite(brute)) {
        return "rank " + r.to_string() + ", foundation rank " + std::to_string(brute);
      }
      return std::nullopt;
    });
  }

  Outcome check_building(ChamberSystem const& x) {
    return guarded([&]() -> Outcome {
      AxiomReport const r = check_axioms(x, true);
      std::vector<std::pair<char const*, AxiomCheck const*>> const parts{
          {"(b) connected", &r.connected},
          {"(c) exchange", &r.exchange},
          {"(d) no closed reduced path", &r.no_closed_reduced_path},
          {"dual (1) separating", &r.dual_separating},
          {"dual (2) coherent", &r.dual_coherent},
          {"dagger identity", &r.dagger}};
      for (auto const& [name, check] : parts) {
        if (!check->holds) {
          return std::string(name) + " fails";
        }
      }
      return std::nullopt;
    });
  }

  Outcome check_space_round_trip(GammaSpace const& m) {
    return guarded([&]() -> Outcome {
      if (!validate_space(m).valid()) {
        return std::string("not a Γ-space");
      }
      GammaSpace const back = to_space_from_dual(to_chambers(m));
      if (!is_isomorphism(back, m, space_round_trip(m))) {
        return std::string("space round trip is not an isomorphism");
      }
      return std::nullopt;
    });
  }

  Outcome check_round_trips(ChamberSystem const& x) {
    return guarded([&]() -> Outcome {
      ChamberSystem const dual = dualize(x);
      ChamberSystem const back = to_chambers(to_space_from_dual(dual));
      if (!is_isomorphism(dual, back, chamber_round_trip(dual))) {
        return std::string("chamber round trip is not an isomorphism");
      }
      return check_space_round_trip(to_space(x));
    });
  }

  Outcome check_wobbling(ColourGraph const& g, FlagPath const& p, FlagPath const& q) {
    if (p.word != q.word || p.flags.front() != q.flags.front()
        || p.flags.back() != q.flags.back()) {
      return std::string("paths do not share ends and word");
    }
    for (std::size_t i = 1; i + 1 < p.flags.size(); ++i) {
      ColourSet const wob = wobbling(g, slice(p.word, 0, i), slice(p.word, i, p.word.size()));
      ColourSet const d   = difference(g, p.flags[i], q.flags[i]).colours;
      if (!colours::is_subset(d, wob)) {
        return "flags " + std::to_string(i) + " differ outside the wobbling set of "
               + to_string(g, p.word);
      }
    }
    return std::nullopt;
  }

  Outcome check_hull(FlagComplex const& m, VertexSet const& a_in) {
    return guarded([&]() -> Outcome {
      VertexSet a = a_in;
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      VertexSet const hull = nice_hull(m, a);
      if (!std::includes(hull.begin(), hull.end(), a.begin(), a.end())) {
        return std::string("hull misses a point");
      }
      if (!is_nice(m, hull)) {
        return std::string("hull is not nice");
      }
      GammaSpace const                     part = induced(m.space(), hull);
      std::vector<std::optional<VertexId>> self(hull.size());
      std::vector<std::optional<VertexId>> ambient(hull.size());
      for (std::size_t i = 0; i < hull.size(); ++i) {
        if (std::binary_search(a.begin(), a.end(), hull[i])) {
          self[i]    = static_cast<VertexId>(i);
          ambient[i] = hull[i];
        }
      }
      std::size_t automorphisms = 0;
      for_each_homomorphism(part, part, self, [&](std::vector<VertexId> const& map) {
        automorphisms += is_isomorphism(part, part, map) ? 1 : 0;
        return true;
      });
      if (automorphisms != 1) {
        return std::to_string(automorphisms) + " automorphisms fix the points";
      }
      bool injective = true;
      for_each_homomorphism(part, m.space(), ambient, [&](std::vector<VertexId> const& map) {
        std::vector<VertexId> image = map;
        std::sort(image.begin(), image.end());
        injective = std::adjacent_find(image.begin(), image.end()) == image.end();
        return injective;
      });
      if (!injective) {
        return std::string("a homomorphism fixing the points is not injective");
      }
      return std::nullopt;
    });
  }

  Outcome check_triangle(FlagComplex const& m, FlagId f, FlagId g_id, FlagId h) {
    return guarded([&]() -> Outcome {
      ColourGraph const& g = m.graph();
      PathTree const     from_g(m, g_id);
      PathTree const     from_f(m, f);
      Word const         u = from_g.word(f);
      Word const         v = from_f.word(h);
      Word const         w = from_g.word(h);
      TriangleDecomposition const d = triangle_decompose(g, u, v, w);
      if (auto why = check_triangle_decomposition(g, u, v, w, d)) {
        return why;
      }
      Word const to_base = concat(concat(d.c, d.alpha), d.beta);
      Word const route   = concat(concat(d.u1, d.x), d.v1);
      for (FlagPath const& p : paths_with_word(m, m.flag(g_id), m.flag(h), route)) {
        FlagId const k = m.id(p.flags[d.u1.size()]);
        if (!equivalent(g, from_f.word(k), to_base)) {
          continue;
        }
        bool least = true;
        for (FlagId other : m.ids_within(vertices_of(p.flags))) {
          least = least && preceq(g, from_f.word(k), from_f.word(other));
        }
        if (least) {
          return std::nullopt;
        }
      }
      return "no base point with word " + to_string(g, to_base) + " on a path of word "
             + to_string(g, route);
    });
  }

  GammaSpace four_cycle_space() {
    GammaSpace m(ColourGraph::path(2));
    for (Colour c : {0U, 1U, 0U, 1U}) {
      m.add_vertex(c);
    }
    m.add_edge(0, 1);
    m.add_edge(1, 2);
    m.add_edge(2, 3);
    m.add_edge(3, 0);
    return m;
  }

  GammaSpace wobbling_space(ColourGraph const& g, Rng& rng) {
    std::vector<Letter> const letters = g.letters(g.size());
    std::vector<Letter> const small   = g.letters(2);
    GammaSpace                m       = GammaSpace::single_flag(g);
    Flag const                base    = flags(m).front();
    Word                      u;
    for (int attempt = 0; attempt < 50 && u.size() < 2; ++attempt) {
      u = oracle::random_reduced_word(g, letters, 4, rng.engine());
    }
    Realization const r = realize_type(m, base, u);
    m                   = r.space;
    // Duplicate intermediate flags of the realised path along letters inside
    // their wobbling sets, so the path gets same-word siblings.
    std::vector<Flag> along;
    {
      FlagComplex const c(m);
      for (FlagId id : PathTree(c, c.id(r.flag)).path(c.id(base))) {
        along.push_back(c.flag(id));
      }
    }
    for (std::size_t i = 1; i + 1 < along.size(); ++i) {
      ColourSet const wob = wobbling(g, slice(u, 0, i), slice(u, i, u.size()));
      std::vector<Letter> inside;
      for (Letter s : letters) {
        if (colours::is_subset(s.support(), wob)) {
          inside.push_back(s);
        }
      }
      for (std::size_t k = inside.empty() ? 0 : 1 + rng.below(2); k > 0; --k) {
        m = simple_extension(m, along[i], inside[rng.below(inside.size())]).space;
      }
    }
    for (std::size_t k = rng.below(3); k > 0; --k) {
      std::vector<Flag> const fs = flags(m);
      m = simple_extension(m, fs[rng.below(fs.size())], small[rng.below(small.size())]).space;
    }
    return m;
  }

  // A reduced word below v, made by replacing letters with short words of
  // smaller letters.
  Word sample_below(ColourGraph const& g, Word const& v, Rng& rng) {
    std::vector<Letter> const letters = g.letters(g.size());
    for (int attempt = 0; attempt < 20; ++attempt) {
      Word u;
      for (Letter s : v) {
        if (rng.coin()) {
          u.push_back(s);
          continue;
        }
        std::vector<Letter> inner;
        for (Letter t : letters) {
          if (t.proper_subset_of(s)) {
            inner.push_back(t);
          }
        }
        std::size_t const n = inner.empty() ? 0 : rng.below(3);
        for (std::size_t k = 0; k < n; ++k) {
          u.push_back(inner[rng.below(inner.size())]);
        }
      }
      if (is_reduced(g, u) && preceq(g, u, v)) {
        return u;
      }
    }
    return v;
  }

  std::vector<ColourGraph> standard_graphs() {
    return {ColourGraph::path(3), ColourGraph::path(4), ColourGraph::complete(3)};
  }

  namespace {

    std::size_t scale(SuiteSize size) {
      switch (size) {
        case SuiteSize::small:
          return 1;
        case SuiteSize::medium:
          return 4;
        case SuiteSize::large:
          return 16;
      }
      return 1;
    }

    // Collects results, shrinking failing word inputs by dropping letters
    // while the failure persists and the input stays admissible.
    class Recorder {
     public:
      Recorder(std::string suite, std::uint64_t seed) : _seed(seed) {
        _report.suite = std::move(suite);
      }

      std::uint64_t case_seed() const {
        return splitmix64(_seed ^ splitmix64(_report.cases + 1));
      }

      void record(Outcome const& outcome, std::string counterexample) {
        if (outcome) {
          _report.failures.push_back(
              {_report.cases, case_seed(), *outcome, std::move(counterexample)});
        }
        ++_report.cases;
      }

      using WordCheck = std::function<Outcome(std::vector<Word> const&)>;
      using Admissible = std::function<bool(std::vector<Word> const&)>;

      void record_words(ColourGraph const&       g,
                        std::vector<Word> const& input,
                        WordCheck const&         check,
                        Admissible const&        admissible) {
        Outcome outcome = check(input);
        if (!outcome) {
          record(outcome, {});
          return;
        }
        std::vector<Word> smallest = input;
        for (bool shrunk = true; shrunk;) {
          shrunk = false;
          for (std::size_t i = 0; i < smallest.size() && !shrunk; ++i) {
            for (std::size_t k = 0; k < smallest[i].size() && !shrunk; ++k) {
              std::vector<Word> candidate = smallest;
              candidate[i].erase(candidate[i].begin() + static_cast<long>(k));
              if (admissible(candidate) && check(candidate)) {
                smallest = std::move(candidate);
                shrunk   = true;
              }
            }
          }
        }
        record(outcome, words_text(g, smallest));
      }

      VerifyReport take() {
        return std::move(_report);
      }

     private:
      std::uint64_t _seed;
      VerifyReport  _report;
    };

    bool all_reduced(ColourGraph const& g, std::vector<Word> const& ws) {
      return std::all_of(ws.begin(), ws.end(), [&](Word const& w) { return is_reduced(g, w); });
    }

    VerifyReport words_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("words", seed);
      Rng      rng(seed);
      for (ColourGraph const& g : standard_graphs()) {
        std::vector<Letter> const letters = g.letters(g.size());
        for (std::size_t k = 0; k < 50 * n; ++k) {
          Word const u = oracle::random_word(letters, 6, rng.engine());
          rec.record_words(
              g, {u}, [&](auto const& ws) { return check_confluence(g, ws[0]); },
              [](auto const&) { return true; });
        }
      }
      return rec.take();
    }

    VerifyReport decomposition_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("decomposition", seed);
      Rng      rng(seed);
      for (ColourGraph const& g : standard_graphs()) {
        std::vector<Letter> const letters = g.letters(g.size());
        for (std::size_t k = 0; k < 30 * n; ++k) {
          Word const u = oracle::random_reduced_word(g, letters, 3, rng.engine());
          Word const v = oracle::random_reduced_word(g, letters, 3, rng.engine());
          rec.record_words(
              g, {u, v}, [&](auto const& ws) { return check_symmetric_case(g, ws[0], ws[1]); },
              [&](auto const& ws) { return all_reduced(g, ws); });
        }
      }
      return rec.take();
    }

    VerifyReport division_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("division", seed);
      Rng      rng(seed);
      for (ColourGraph const& g : standard_graphs()) {
        std::vector<Letter> const letters = g.letters(g.size());
        std::vector<Word> const   xs      = oracle::reduced_words(g, letters, 3);
        for (std::size_t k = 0; k < 10 * n; ++k) {
          Word const v = oracle::random_reduced_word(g, letters, 4, rng.engine());
          Word const u = sample_below(g, v, rng);
          rec.record(check_division_case(g, v, u, xs),
                     "v = " + to_string(g, v) + ", u = " + to_string(g, u));
          rec.record(check_sr_case(g, v, xs), "u = " + to_string(g, v));
        }
      }
      return rec.take();
    }

    VerifyReport chamber_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("chamber", seed);
      for (ColourGraph const& g : standard_graphs()) {
        for (unsigned depth = 1; depth <= (n > 1 ? 3U : 2U); ++depth) {
          for (unsigned fanout = 1; fanout <= 3; ++fanout) {
            ChamberSystem const x = generate_quasi_building(g, depth, fanout);
            rec.record(check_building(x), io::to_json(x).dump());
          }
        }
        for (std::size_t k = 0; k < 4 * n; ++k) {
          ChamberSystem const x = generate_random_quasi_building(g, 8 + 2 * k, rec.case_seed());
          rec.record(check_building(x), io::to_json(x).dump());
        }
      }
      return rec.take();
    }

    VerifyReport bi_interp_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("bi-interp", seed);
      for (ColourGraph const& g : standard_graphs()) {
        for (unsigned depth = 1; depth <= 2; ++depth) {
          for (unsigned fanout = 1; fanout <= 3; ++fanout) {
            ChamberSystem const x = generate_quasi_building(g, depth, fanout);
            rec.record(check_round_trips(x), io::to_json(x).dump());
          }
        }
        for (std::size_t k = 0; k < 4 * n; ++k) {
          GammaSpace const m = generate_space(g, 6 + k, rec.case_seed(), 2);
          rec.record(check_space_round_trip(m), io::to_json(m).dump());
        }
      }
      return rec.take();
    }

    VerifyReport sc_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("sc", seed);
      {
        GammaSpace const  cycle = four_cycle_space();
        FlagComplex const m(cycle);
        ScVerdict const   v = is_simply_connected(m);
        Outcome           outcome;
        if (v.simply_connected || v.certificate->word.size() != 4) {
          outcome = "the four-cycle space must fail with a closed path of length 4";
        }
        rec.record(outcome, io::to_json(cycle).dump());
      }
      auto expect_sc = [&](GammaSpace const& space) {
        Outcome outcome = guarded([&]() -> Outcome {
          ScVerdict const v = is_simply_connected(FlagComplex(space));
          if (!v.simply_connected) {
            return "closed reduced path of word " + to_string(space.graph(), v.certificate->word);
          }
          return std::nullopt;
        });
        rec.record(outcome, io::to_json(space).dump());
      };
      for (ColourGraph const& g : standard_graphs()) {
        for (unsigned depth = 1; depth <= (n > 1 ? 3U : 2U); ++depth) {
          for (unsigned fanout = 1; fanout <= 3; ++fanout) {
            expect_sc(to_space(generate_quasi_building(g, depth, fanout)));
          }
        }
        for (std::size_t k = 0; k < 4 * n; ++k) {
          expect_sc(generate_space(g, 6 + k, rec.case_seed(), g.size()));
        }
      }
      return rec.take();
    }

    VerifyReport wobbling_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("wobbling", seed);
      Rng      rng(seed);
      for (ColourGraph const& g : standard_graphs()) {
        for (std::size_t k = 0; k < 2 * n; ++k) {
          FlagComplex const m(wobbling_space(g, rng));
          for (FlagId a = 0; a < m.size(); ++a) {
            PathTree const tree(m, a);
            for (FlagId b = 0; b < m.size(); ++b) {
              auto const paths = paths_with_word(m, m.flag(a), m.flag(b), tree.word(b), 20);
              for (std::size_t i = 1; i < paths.size(); ++i) {
                rec.record(check_wobbling(g, paths[0], paths[i]),
                           io::to_json(g, paths[0]).dump() + " " + io::to_json(g, paths[i]).dump());
              }
            }
          }
        }
      }
      return rec.take();
    }

    VerifyReport hulls_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("hulls", seed);
      Rng      rng(seed);
      for (ColourGraph const& g : standard_graphs()) {
        for (std::size_t k = 0; k < 2 * n; ++k) {
          GammaSpace const space = k % 2 == 0 ? generate_space(g, 8, rng.next(), 2)
                                              : to_space(generate_random_quasi_building(g, 12, rng.next()));
          FlagComplex const m(space);
          for (int t = 0; t < 4; ++t) {
            VertexSet a;
            for (std::size_t p = 1 + rng.below(3); p > 0; --p) {
              a.push_back(static_cast<VertexId>(rng.below(space.size())));
            }
            std::string points;
            for (VertexId v : a) {
              points += " " + std::to_string(v);
            }
            rec.record(check_hull(m, a), io::to_json(space).dump() + " points" + points);
          }
          for (int t = 0; t < 8; ++t) {
            auto const f = static_cast<FlagId>(rng.below(m.size()));
            auto const x = static_cast<FlagId>(rng.below(m.size()));
            auto const h = static_cast<FlagId>(rng.below(m.size()));
            rec.record(check_triangle(m, f, x, h),
                       io::to_json(space).dump() + " flags " + std::to_string(f) + " "
                           + std::to_string(x) + " " + std::to_string(h));
          }
        }
      }
      return rec.take();
    }

    VerifyReport ranks_suite(std::uint64_t seed, std::size_t n) {
      Recorder rec("ranks", seed);
      ColourGraph const p3 = ColourGraph::path(3);
      rec.record(guarded([&]() -> Outcome {
                   Ordinal const r = rank(p3, parse_word(p3, "{0,1}.{1,2}.{0,1}"));
                   if (r != Ordinal::omega_power(1, 3)) {
                     return "rank " + r.to_string() + ", expected w*3";
                   }
                   return std::nullopt;
                 }),
                 "{0,1}.{1,2}.{0,1}");
      rec.record(morley_rank(p3) == Ordinal::omega_power(2) ? Outcome{}
                                                            : Outcome{"morley rank of P3"},
                 io::to_json(p3).dump());
      for (ColourGraph const& g : standard_graphs()) {
        std::vector<Letter> const singles = g.letters(1);
        std::size_t const         top     = n > 1 ? 5 : 4;
        for (Word const& u : oracle::reduced_words(g, singles, top)) {
          rec.record_words(
              g, {u}, [&](auto const& ws) { return check_rank_case(g, ws[0]); },
              [&](auto const& ws) { return all_reduced(g, ws); });
        }
      }
      return rec.take();
    }

    using Suite = VerifyReport (*)(std::uint64_t, std::size_t);

    std::vector<std::pair<std::string, Suite>> const& suites() {
      static std::vector<std::pair<std::string, Suite>> const table{
          {"words", words_suite},       {"decomposition", decomposition_suite},
          {"division", division_suite}, {"chamber", chamber_suite},
          {"bi-interp", bi_interp_suite}, {"sc", sc_suite},
          {"wobbling", wobbling_suite}, {"hulls", hulls_suite},
          {"ranks", ranks_suite}};
      return table;
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& entry : suites()) {
        out.push_back(entry.first);
      }
      out.emplace_back("all");
      return out;
    }();
    return names;
  }

  VerifyReport run_verify_suite(std::string_view name, std::uint64_t seed, SuiteSize size) {
    std::size_t const n = scale(size);
    if (name == "all") {
      VerifyReport total{"all", 0, {}};
      for (auto const& [suite_name, run] : suites()) {
        VerifyReport part = run(seed, n);
        for (Failure& f : part.failures) {
          f.case_index += total.cases;
          f.message = suite_name + ": " + f.message;
          total.failures.push_back(std::move(f));
        }
        total.cases += part.cases;
      }
      return total;
    }
    for (auto const& [suite_name, run] : suites()) {
      if (suite_name == name) {
        return run(seed, n);
      }
    }
    throw Error(ErrorCode::parse_error, "unknown suite \"" + std::string(name) + "\"");
  }

}  // namespace coxflag::verify
