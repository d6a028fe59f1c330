// Acceptance criteria 1-11, one result line each. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coxflag/chamber.hpp"
#include "coxflag/gspace.hpp"
#include "coxflag/mtinvariants.hpp"
#include "coxflag/oracles.hpp"
#include "coxflag/random.hpp"
#include "coxflag/verify.hpp"
#include "coxflag/words.hpp"

using namespace coxflag;
using verify::Outcome;

namespace {

  struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void add(Outcome const& outcome, std::string const& input = {}) {
      ++cases;
      if (outcome) {
        if (failures == 0) {
          first_failure = *outcome + (input.empty() ? "" : " [" + input + "]");
        }
        ++failures;
      }
    }
  };

  struct Result {
    bool        passed;
    std::string detail;
  };

  Result summary(Tally const& t, std::size_t required, double seconds, double limit) {
    bool const enough  = t.cases >= required;
    bool const in_time = limit <= 0 || seconds < limit;
    std::string detail =
        std::to_string(t.cases) + " cases, " + std::to_string(t.failures) + " failures";
    if (limit > 0) {
      detail += ", " + std::to_string(seconds).substr(0, 6) + " s";
    }
    if (!enough) {
      detail += "; needs " + std::to_string(required) + " cases";
    }
    if (!in_time) {
      detail += "; over the limit of " + std::to_string(static_cast<int>(limit)) + " s";
    }
    if (t.failures > 0) {
      detail += "; first: " + t.first_failure;
    }
    return {enough && in_time && t.failures == 0, detail};
  }

  Word random_word_of_length(std::vector<Letter> const& letters, std::size_t n, Rng& rng) {
    Word out;
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(letters[rng.below(letters.size())]);
    }
    return out;
  }

  Word random_reduced(ColourGraph const& g, std::vector<Letter> const& letters, std::size_t n,
                      Rng& rng) {
    Word out;
    for (std::size_t attempt = 0; out.size() < n && attempt < 20 * n; ++attempt) {
      out.push_back(letters[rng.below(letters.size())]);
      if (!is_reduced(g, out)) {
        out.pop_back();
      }
    }
    return out;
  }

  std::vector<ColourGraph> const graphs = verify::standard_graphs();

  Result confluence(double& seconds, double limit) {
    auto const start = std::chrono::steady_clock::now();
    Tally      t;
    Rng        rng(101);
    for (std::size_t k = 0; k < 10'002; ++k) {
      ColourGraph const& g = graphs[k % graphs.size()];
      Word const u = random_word_of_length(g.letters(g.size()), 1 + rng.below(6), rng);
      t.add(verify::check_confluence(g, u), to_string(g, u));
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary(t, 10'000, seconds, limit);
  }

  Result symmetric(double& seconds, double limit) {
    auto const          start = std::chrono::steady_clock::now();
    ColourGraph const   g     = ColourGraph::path(3);
    std::vector<Word> const all = oracle::reduced_words(g, g.letters(g.size()), 6);
    Tally t;
    for (Word const& u : all) {
      for (Word const& v : all) {
        if (u.size() + v.size() <= 6) {
          t.add(verify::check_symmetric_case(g, u, v), to_string(g, u) + " " + to_string(g, v));
        }
      }
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary(t, 1, seconds, limit);
  }

  Result division() {
    Tally t;
    Rng   rng(303);
    for (ColourGraph const& g : graphs) {
      std::vector<Letter> const letters = g.letters(g.size());
      std::vector<Word> const   xs      = oracle::reduced_words(g, letters, 4);
      for (std::size_t k = 0; k < 340; ++k) {
        Word const v = random_reduced(g, letters, 1 + rng.below(4), rng);
        Word const u = verify::sample_below(g, v, rng);
        t.add(verify::check_division_case(g, v, u, xs), to_string(g, v) + " / " + to_string(g, u));
      }
    }
    return summary(t, 1000, 0, 0);
  }

  Result sr_duality() {
    Tally t;
    Rng   rng(404);
    for (ColourGraph const& g : graphs) {
      std::vector<Letter> const letters = g.letters(g.size());
      std::vector<Word> const   xs      = oracle::reduced_words(g, letters, 3);
      for (std::size_t k = 0; k < 340; ++k) {
        Word const u = random_reduced(g, letters, rng.below(6), rng);
        t.add(verify::check_sr_case(g, u, xs), to_string(g, u));
      }
    }
    return summary(t, 1000, 0, 0);
  }

  Result ranks() {
    Tally             t;
    ColourGraph const p3 = ColourGraph::path(3);
    Ordinal const     r  = rank(p3, parse_word(p3, "{0,1}.{1,2}.{0,1}"));
    t.add(r == Ordinal::omega_power(1, 3) ? Outcome{} : Outcome{"rank " + r.to_string()});
    Ordinal const mr = morley_rank(p3);
    t.add(mr == Ordinal::omega_power(2) ? Outcome{} : Outcome{"Morley rank " + mr.to_string()});
    for (ColourGraph const& g : graphs) {
      for (Word const& u : oracle::reduced_words(g, g.letters(1), 5)) {
        t.add(verify::check_rank_case(g, u), to_string(g, u));
      }
    }
    return summary(t, 3, 0, 0);
  }

  std::vector<ChamberSystem> pipeline() {
    std::vector<ChamberSystem> out;
    for (ColourGraph const& g : graphs) {
      for (unsigned depth = 1; depth <= 3; ++depth) {
        for (unsigned fanout = 1; fanout <= 3; ++fanout) {
          out.push_back(generate_quasi_building(g, depth, fanout));
        }
      }
    }
    return out;
  }

  Result buildings(double& seconds, double limit) {
    auto const start = std::chrono::steady_clock::now();
    Tally      t;
    for (ChamberSystem const& x : pipeline()) {
      t.add(verify::check_building(x), std::to_string(x.size()) + " chambers");
      t.add(verify::check_round_trips(x), std::to_string(x.size()) + " chambers");
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary(t, 54, seconds, limit);
  }

  Result simple_connectedness() {
    Tally t;
    for (ChamberSystem const& x : pipeline()) {
      ScVerdict const v = is_simply_connected(FlagComplex(to_space(x)));
      t.add(v.simply_connected ? Outcome{} : Outcome{"pipeline space not simply connected"},
            std::to_string(x.size()) + " chambers");
    }
    GammaSpace const cycle = verify::four_cycle_space();
    ScVerdict const  v     = is_simply_connected(FlagComplex(cycle));
    bool const       exact = !v.simply_connected && v.certificate->flags.size() == 5
                       && to_string(cycle.graph(), v.certificate->word) == "{0}.{1}.{0}.{1}";
    t.add(exact ? Outcome{} : Outcome{"four-cycle verdict or certificate wrong"});
    return summary(t, 28, 0, 0);
  }

  Result ample() {
    Tally t;
    auto expect = [&](ColourGraph const& g, AmpleBounds want, std::string const& name) {
      AmpleBounds const got = ample_bounds(g);
      t.add(got == want ? Outcome{}
                        : Outcome{name + " gives (" + std::to_string(got.lower) + ","
                                  + std::to_string(got.strict_upper) + ")"});
    };
    expect(ColourGraph::path(4), {3, 4}, "P4");
    expect(ColourGraph::complete(3), {1, 2}, "K3");
    expect(ColourGraph::cycle(5), {3, 4}, "C5");
    Ordinal const m = morley_rank(ColourGraph::edgeless(2));
    t.add(m == Ordinal::finite(1) ? Outcome{} : Outcome{"edge-free Morley rank " + m.to_string()});
    return summary(t, 4, 0, 0);
  }

  Result wobbling() {
    Tally t;
    Rng   rng(909);
    for (std::size_t round = 0; t.cases < 240 && round < 400; ++round) {
      ColourGraph const& g = graphs[round % graphs.size()];
      FlagComplex const  m(verify::wobbling_space(g, rng));
      for (FlagId a = 0; a < m.size(); ++a) {
        PathTree const tree(m, a);
        for (FlagId b = 0; b < m.size(); ++b) {
          auto const paths = paths_with_word(m, m.flag(a), m.flag(b), tree.word(b), 20);
          for (std::size_t i = 1; i < paths.size(); ++i) {
            t.add(verify::check_wobbling(g, paths[0], paths[i]), to_string(g, paths[0].word));
          }
        }
      }
    }
    return summary(t, 200, 0, 0);
  }

  GammaSpace sample_space(ColourGraph const& g, std::size_t k, Rng& rng) {
    switch (k % 3) {
      case 0:
        return generate_space(g, 8, rng.next(), 2);
      case 1:
        return to_space(generate_random_quasi_building(g, 12, rng.next()));
      default:
        return verify::wobbling_space(g, rng);
    }
  }

  Result hulls() {
    Tally t;
    Rng   rng(1010);
    for (std::size_t k = 0; k < 20; ++k) {
      ColourGraph const& g = graphs[k % graphs.size()];
      FlagComplex const  m(sample_space(g, k, rng));
      for (int n = 0; n < 3; ++n) {
        VertexSet a;
        for (std::size_t p = 1 + rng.below(3); p > 0; --p) {
          a.push_back(static_cast<VertexId>(rng.below(m.space().size())));
        }
        t.add(verify::check_hull(m, a));
      }
    }
    return summary(t, 50, 0, 0);
  }

  Result triangles() {
    Tally t;
    Rng   rng(1111);
    for (std::size_t k = 0; k < 21; ++k) {
      ColourGraph const& g = graphs[k % graphs.size()];
      FlagComplex const  m(sample_space(g, k, rng));
      for (int n = 0; n < 10; ++n) {
        auto const f = static_cast<FlagId>(rng.below(m.size()));
        auto const x = static_cast<FlagId>(rng.below(m.size()));
        auto const h = static_cast<FlagId>(rng.below(m.size()));
        t.add(verify::check_triangle(m, f, x, h));
      }
    }
    return summary(t, 200, 0, 0);
  }

}  // namespace

int main() {
  double confluence_time = 0;
  double symmetric_time  = 0;
  double building_time   = 0;

  struct Criterion {
    char const*             name;
    std::function<Result()> run;
  };
  std::vector<Criterion> const criteria{
      {"non-splitting confluence", [&] { return confluence(confluence_time, 60); }},
      {"symmetric decomposition", [&] { return symmetric(symmetric_time, 120); }},
      {"division lemma", [] { return division(); }},
      {"sr duality", [] { return sr_duality(); }},
      {"rank values", [] { return ranks(); }},
      {"building pipeline", [&] { return buildings(building_time, 300); }},
      {"simple connectedness", [] { return simple_connectedness(); }},
      {"ample and Morley fixtures", [] { return ample(); }},
      {"wobbling lemma", [] { return wobbling(); }},
      {"hull rigidity", [] { return hulls(); }},
      {"triangle determination", [] { return triangles(); }}};

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].run();
    } catch (std::exception const& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all = all && r.passed;
    std::printf("criterion %zu (%s): %s  %s\n", i + 1, criteria[i].name,
                r.passed ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
