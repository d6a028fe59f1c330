#include <charconv>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxflag/chamber.hpp"
#include "coxflag/error.hpp"
#include "coxflag/gspace.hpp"
#include "coxflag/io.hpp"
#include "coxflag/mtinvariants.hpp"
#include "coxflag/verify.hpp"
#include "coxflag/words.hpp"

using namespace coxflag;
using io::Json;

namespace {

  constexpr int exit_ok        = 0;
  constexpr int exit_negative  = 1;
  constexpr int exit_bad_input = 2;

  struct Options {
    std::string              graph_path;
    std::string              space_path;
    std::string              word;
    std::vector<std::string> words;
    std::uint64_t            seed = 1;
    bool                     json = false;
    std::optional<std::size_t> budget;

    std::string from;
    std::string to;
    std::string flag;
    std::string points;
    std::string kind  = "rd";
    std::string size  = "small";
    std::string suite = "all";
    unsigned    depth   = 2;
    unsigned    fanout  = 2;
    std::size_t steps   = 0;
    unsigned    max_letter = 2;
  };

  // What a subcommand prints: the JSON form, the text form and the exit code.
  struct Output {
    Json        json;
    std::string text;
    int         code = exit_ok;
  };

  ColourGraph load_graph(Options const& o) {
    if (o.graph_path.empty()) {
      throw Error(ErrorCode::parse_error, "a graph is required (-g)");
    }
    return io::graph_from_json(io::read_json(o.graph_path));
  }

  GammaSpace load_space(ColourGraph const& g, Options const& o) {
    if (o.space_path.empty()) {
      throw Error(ErrorCode::parse_error, "a space is required (-s)");
    }
    return io::space_from_json(g, io::read_json(o.space_path));
  }

  std::vector<Word> word_arguments(ColourGraph const& g, Options const& o, std::size_t count) {
    std::vector<std::string> texts;
    if (!o.word.empty()) {
      texts.push_back(o.word);
    }
    texts.insert(texts.end(), o.words.begin(), o.words.end());
    if (texts.size() != count) {
      throw Error(ErrorCode::parse_error, "expected " + std::to_string(count) + " word(s), got "
                                              + std::to_string(texts.size()));
    }
    std::vector<Word> out;
    for (std::string const& t : texts) {
      out.push_back(parse_word(g, t));
    }
    return out;
  }

  // Comma-separated vertex ids, e.g. "0,4,7".
  std::vector<VertexId> parse_ids(std::string const& text, char const* what) {
    std::vector<VertexId> out;
    if (text.empty()) {
      return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t const end = std::min(text.find(',', pos), text.size());
      VertexId          v   = 0;
      auto const [ptr, ec]  = std::from_chars(text.data() + pos, text.data() + end, v);
      if (ec != std::errc{} || ptr != text.data() + end || end == pos) {
        throw Error(ErrorCode::parse_error, std::string("bad vertex list for ") + what
                                                + " at position " + std::to_string(pos));
      }
      out.push_back(v);
      pos = end + 1;
    }
    return out;
  }

  Flag parse_flag(GammaSpace const& m, std::string const& text, char const* what) {
    Flag const f = parse_ids(text, what);
    if (!is_flag(m, f)) {
      throw Error(ErrorCode::not_a_flag, std::string(what) + " is not a flag of the space");
    }
    return f;
  }

  Json word_json(ColourGraph const& g, Word const& u) {
    return to_string(g, u);
  }

  Json colours_json(ColourGraph const& g, ColourSet s) {
    Json out = Json::array();
    for (Colour c : colours::to_vector(s)) {
      out.push_back(g.name(c));
    }
    return out;
  }

  std::string colours_text(ColourGraph const& g, ColourSet s) {
    std::string out = "{";
    for (Colour c : colours::to_vector(s)) {
      out += (out.size() > 1 ? "," : "") + g.name(c);
    }
    return out + "}";
  }

  std::string ids_text(std::vector<VertexId> const& ids) {
    std::string out;
    for (VertexId v : ids) {
      out += (out.empty() ? "" : ",") + std::to_string(v);
    }
    return out;
  }

  Output word_output(ColourGraph const& g, Word const& u) {
    return {word_json(g, u), to_string(g, u)};
  }

  Output bool_output(bool value) {
    return {value, value ? "true" : "false"};
  }

  Output ordinal_output(Ordinal const& r) {
    return {r.to_string(), r.to_string()};
  }

  Output path_output(ColourGraph const& g, FlagPath const& p) {
    std::string text = to_string(g, p.word) + "\n";
    for (Flag const& f : p.flags) {
      text += ids_text(f) + "\n";
    }
    text.pop_back();
    return {io::to_json(g, p), text};
  }

  verify::SuiteSize parse_size(std::string const& s) {
    if (s == "small") {
      return verify::SuiteSize::small;
    }
    if (s == "medium") {
      return verify::SuiteSize::medium;
    }
    if (s == "large") {
      return verify::SuiteSize::large;
    }
    throw Error(ErrorCode::parse_error, "unknown size " + s);
  }

  Output run_verify(Options const& o) {
    verify::VerifyReport const r = verify::run_verify_suite(o.suite, o.seed, parse_size(o.size));
    Json failures = Json::array();
    std::string text = r.suite + ": " + std::to_string(r.cases) + " cases, "
                       + std::to_string(r.failures.size()) + " failures";
    for (verify::Failure const& f : r.failures) {
      failures.push_back({{"case", f.case_index},
                          {"seed", f.seed},
                          {"message", f.message},
                          {"counterexample", f.counterexample}});
      text += "\n  case " + std::to_string(f.case_index) + " seed " + std::to_string(f.seed)
              + ": " + f.message + "\n    " + f.counterexample;
    }
    Json j{{"suite", r.suite}, {"cases", r.cases}, {"failures", failures}};
    return {j, text, r.passed() ? exit_ok : exit_negative};
  }

  Output run_decompose(Options const& o) {
    ColourGraph const      g = load_graph(o);
    auto const             w = word_arguments(g, o, 2);
    SymDecomposition const d = symmetric_decomposition(g, w[0], w[1]);
    Json j{{"u1", word_json(g, d.u1)},
           {"u_prime", word_json(g, d.u_prime)},
           {"w", word_json(g, d.w)},
           {"v_prime", word_json(g, d.v_prime)},
           {"v1", word_json(g, d.v1)}};
    std::string const text = "u1 = " + to_string(g, d.u1) + "\nu' = " + to_string(g, d.u_prime)
                             + "\nw  = " + to_string(g, d.w) + "\nv' = " + to_string(g, d.v_prime)
                             + "\nv1 = " + to_string(g, d.v1);
    return {j, text};
  }

  Output run_triangle(Options const& o) {
    ColourGraph const           g = load_graph(o);
    auto const                  w = word_arguments(g, o, 3);
    TriangleDecomposition const d = triangle_decompose(g, w[0], w[1], w[2]);
    std::vector<std::pair<char const*, Word const*>> const parts{
        {"u1", &d.u1}, {"v1", &d.v1},    {"c", &d.c},
        {"x", &d.x},   {"alpha", &d.alpha}, {"beta", &d.beta}};
    Json        j;
    std::string text;
    for (auto const& [name, part] : parts) {
      j[name] = word_json(g, *part);
      text += (text.empty() ? "" : "\n") + std::string(name) + " = " + to_string(g, *part);
    }
    return {j, text};
  }

  Output run_graph_invariants(Options const& o) {
    ColourGraph const     g   = load_graph(o);
    GraphInvariants const inv = g.invariants();
    Json components = Json::array();
    std::string listed;
    for (ColourSet c : inv.components) {
      components.push_back(colours_json(g, c));
      listed += (listed.empty() ? "" : " ") + colours_text(g, c);
    }
    Json j{{"min_valency", inv.min_valency ? Json(*inv.min_valency) : Json(nullptr)},
           {"longest_induced_path", inv.longest_induced_path},
           {"largest_component", inv.largest_component},
           {"components", components}};
    std::string const text
        = "min valency: " + (inv.min_valency ? std::to_string(*inv.min_valency) : "none")
          + "\nlongest induced path: " + std::to_string(inv.longest_induced_path)
          + "\nlargest component: " + std::to_string(inv.largest_component)
          + "\ncomponents: " + listed;
    return {j, text};
  }

  Output run_ample(Options const& o) {
    AmpleBounds const b = ample_bounds(load_graph(o));
    return {Json{{"lower", b.lower}, {"strict_upper", b.strict_upper}},
            std::to_string(b.lower) + "-ample, not " + std::to_string(b.strict_upper) + "-ample"};
  }

  Output run_gen_building(Options const& o) {
    ColourGraph const   g = load_graph(o);
    ChamberSystem const x = o.steps > 0 ? generate_random_quasi_building(g, o.steps, o.seed)
                                        : generate_quasi_building(g, o.depth, o.fanout);
    Json const j = io::to_json(x);
    return {j, j.dump(2)};
  }

  Output run_gen_space(Options const& o) {
    ColourGraph const g = load_graph(o);
    GammaSpace const  m = generate_space(g, o.steps, o.seed, o.max_letter);
    Json const        j = io::to_json(m);
    return {j, j.dump(2)};
  }

  Output run_sc_check(Options const& o) {
    ColourGraph const g = load_graph(o);
    FlagComplex const m(load_space(g, o));
    ScVerdict const   v = is_simply_connected(m, o.budget);
    Json j{{"simply_connected", v.simply_connected}, {"states", v.states}};
    std::string text = v.simply_connected ? "simply connected" : "not simply connected";
    if (v.certificate) {
      j["certificate"] = io::to_json(g, *v.certificate);
      text += "\ncertificate: " + path_output(g, *v.certificate).text;
    }
    return {j, text, v.simply_connected ? exit_ok : exit_negative};
  }

  Output run_path(Options const& o) {
    ColourGraph const g = load_graph(o);
    FlagComplex const m(load_space(g, o));
    Flag const        from = parse_flag(m.space(), o.from, "--from");
    Flag const        to   = parse_flag(m.space(), o.to, "--to");
    return path_output(g, find_reduced_path(m, from, to));
  }

  Output run_basepoint(Options const& o) {
    ColourGraph const g = load_graph(o);
    FlagComplex const m(load_space(g, o));
    Flag const        f = parse_flag(m.space(), o.flag, "--flag");
    BasePoint const   b = base_point(m, f, parse_ids(o.points, "--points"));
    Json j{{"flag", io::flag_to_json(g, b.flag)}, {"word", word_json(g, b.word)}};
    return {j, ids_text(b.flag) + "\n" + to_string(g, b.word)};
  }

  Output run_nicehull(Options const& o) {
    ColourGraph const g = load_graph(o);
    FlagComplex const m(load_space(g, o));
    VertexSet const   hull = nice_hull(m, parse_ids(o.points, "--points"), o.budget);
    return {Json(hull), ids_text(hull)};
  }

  Output run_cb(Options const& o) {
    ColourGraph const           g    = load_graph(o);
    Word const                  u    = word_arguments(g, o, 1).front();
    std::vector<VertexId> const base = canonical_base(g, parse_ids(o.flag, "--flag"), u);
    return {Json(base), ids_text(base)};
  }

  int code_for(ErrorCode code) {
    switch (code) {
      case ErrorCode::parse_error:
      case ErrorCode::invalid_letter:
      case ErrorCode::singleton_letter:
      case ErrorCode::not_a_flag:
        return exit_bad_input;
      default:
        return exit_negative;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled Coxeter words, chamber systems and flag spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", o.graph_path, "colour graph JSON")->required();
  };
  auto add_words = [&](CLI::App* sub) {
    sub->add_option("-w,--word", o.word, "word, e.g. {0,1}.{2}");
    sub->add_option("words", o.words, "further words");
  };

  std::vector<std::pair<CLI::App*, std::function<Output()>>> commands;
  auto command = [&](char const* name, char const* help, std::function<Output()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--seed", o.seed, "generator seed");
    sub->add_flag("--json", o.json, "print JSON");
    sub->add_option("--budget", o.budget, "search budget");
    commands.emplace_back(sub, std::move(run));
    return sub;
  };
  auto word_command = [&](char const* name, char const* help, std::size_t count,
                          std::function<Output(ColourGraph const&, std::vector<Word> const&)> run) {
    CLI::App* sub = command(name, help, [&o, count, run] {
      ColourGraph const g = load_graph(o);
      return run(g, word_arguments(g, o, count));
    });
    add_graph(sub);
    add_words(sub);
    return sub;
  };

  word_command("nf", "normal form", 1, [](ColourGraph const& g, std::vector<Word> const& w) {
    return word_output(g, normal_form(g, w[0]));
  });
  word_command("reduce", "non-splitting reduct", 1,
               [](ColourGraph const& g, std::vector<Word> const& w) {
                 return word_output(g, reduce(g, w[0]));
               });
  word_command("equiv", "equivalence of two words", 2,
               [](ColourGraph const& g, std::vector<Word> const& w) {
                 return bool_output(equivalent(g, w[0], w[1]));
               });
  word_command("divide", "quotient v/u", 2, [](ColourGraph const& g, std::vector<Word> const& w) {
    return word_output(g, divide(g, w[0], w[1]));
  });
  word_command("sr", "largest right-absorbed commuting word", 1,
               [](ColourGraph const& g, std::vector<Word> const& w) {
                 return word_output(g, sr(g, w[0]));
               });
  word_command("wob", "wobbling colours of u.v", 2,
               [](ColourGraph const& g, std::vector<Word> const& w) {
                 ColourSet const s = wobbling(g, w[0], w[1]);
                 return Output{colours_json(g, s), colours_text(g, s)};
               });
  CLI::App* rank_cmd = word_command("rank", "foundation rank", 1,
                                    [&o](ColourGraph const& g, std::vector<Word> const& w) {
                                      return ordinal_output(
                                          rank(g, w[0], o.kind == "rkl" ? RankKind::rkl
                                                                        : RankKind::rd));
                                    });
  rank_cmd->add_option("--kind", o.kind, "rd or rkl")->check(CLI::IsMember({"rd", "rkl"}));

  add_graph(command("decompose", "symmetric decomposition of u.v", [&] { return run_decompose(o); }));
  add_words(app.get_subcommand("decompose"));
  add_graph(command("triangle", "decompose the words of a flag triangle",
                    [&] { return run_triangle(o); }));
  add_words(app.get_subcommand("triangle"));
  add_graph(command("graph-invariants", "valency, paths and components",
                    [&] { return run_graph_invariants(o); }));
  add_graph(command("ample", "ampleness bounds", [&] { return run_ample(o); }));
  add_graph(command("morley", "Morley rank", [&] { return ordinal_output(morley_rank(load_graph(o))); }));

  CLI::App* building = command("gen-building", "generate a quasi-building",
                               [&] { return run_gen_building(o); });
  add_graph(building);
  building->add_option("--depth", o.depth, "round-robin depth");
  building->add_option("--fanout", o.fanout, "chambers per panel");
  building->add_option("--steps", o.steps, "random extensions instead of round robin");

  CLI::App* space = command("gen-space", "generate a space by simple extensions",
                            [&] { return run_gen_space(o); });
  add_graph(space);
  space->add_option("--steps", o.steps, "number of extensions");
  space->add_option("--max-letter", o.max_letter, "largest letter size");

  auto space_command = [&](char const* name, char const* help, std::function<Output()> run) {
    CLI::App* sub = command(name, help, std::move(run));
    add_graph(sub);
    sub->add_option("-s,--space", o.space_path, "space JSON")->required();
    return sub;
  };
  space_command("sc-check", "simple connectedness", [&] { return run_sc_check(o); });
  CLI::App* path = space_command("path", "reduced flag path", [&] { return run_path(o); });
  path->add_option("--from", o.from, "vertex ids by colour")->required();
  path->add_option("--to", o.to, "vertex ids by colour")->required();
  CLI::App* basepoint
      = space_command("basepoint", "base point of a flag", [&] { return run_basepoint(o); });
  basepoint->add_option("--flag", o.flag, "vertex ids by colour")->required();
  basepoint->add_option("--points", o.points, "vertex ids of the nice set")->required();
  CLI::App* hull = space_command("nicehull", "nice hull of points", [&] { return run_nicehull(o); });
  hull->add_option("--points", o.points, "vertex ids")->required();

  CLI::App* cb = command("cb", "canonical base of a flag", [&] { return run_cb(o); });
  add_graph(cb);
  add_words(cb);
  cb->add_option("--flag", o.flag, "vertex ids by colour")->required();

  CLI::App* verify_cmd = command("verify", "property suites", [&] { return run_verify(o); });
  verify_cmd->add_option("suite", o.suite, "suite name");
  verify_cmd->add_option("--size", o.size, "small, medium or large");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_input;
  }

  for (auto const& [sub, run] : commands) {
    if (!sub->parsed()) {
      continue;
    }
    try {
      Output const out = run();
      std::cout << (o.json ? out.json.dump() : out.text) << "\n";
      return out.code;
    } catch (Error const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return code_for(e.code());
    }
  }
  return exit_bad_input;
}
