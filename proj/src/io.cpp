#include "coxflag/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "coxflag/error.hpp"
#include "coxflag/words.hpp"

namespace coxflag::io {

  namespace {

    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorCode::parse_error, what);
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    Colour colour_named(ColourGraph const& g, Json const& name) {
      if (!name.is_string()) {
        fail("colour names must be strings");
      }
      auto const c = g.find(name.get<std::string>());
      if (!c) {
        fail("unknown colour \"" + name.get<std::string>() + "\"");
      }
      return *c;
    }

    unsigned index_of(Json const& j) {
      if (!j.is_number_unsigned()) {
        fail("expected a non-negative integer, got " + j.dump());
      }
      return j.get<unsigned>();
    }

  }  // namespace

  Json parse_json(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      fail(e.what());
    }
  }

  Json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail("cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
  }

  ColourGraph graph_from_json(Json const& j) {
    Json const& names = field(j, "colours");
    if (!names.is_array()) {
      fail("\"colours\" must be an array");
    }
    std::vector<std::string> list;
    for (Json const& n : names) {
      if (!n.is_string()) {
        fail("colour names must be strings");
      }
      list.push_back(n.get<std::string>());
    }
    std::set<std::string> const distinct(list.begin(), list.end());
    if (distinct.size() != list.size()) {
      fail("repeated colour name");
    }
    ColourGraph const bare(list, {});
    std::vector<std::pair<Colour, Colour>> edges;
    std::set<std::pair<Colour, Colour>>    seen;
    Json const& edge_list = field(j, "edges");
    if (!edge_list.is_array()) {
      fail("\"edges\" must be an array");
    }
    for (Json const& e : edge_list) {
      if (!e.is_array() || e.size() != 2) {
        fail("edges are pairs of colour names");
      }
      Colour const a = colour_named(bare, e[0]);
      Colour const b = colour_named(bare, e[1]);
      if (a == b) {
        fail("self edge at colour \"" + bare.name(a) + "\"");
      }
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
        fail("duplicate edge " + bare.name(a) + "-" + bare.name(b));
      }
      edges.emplace_back(a, b);
    }
    return ColourGraph(list, edges);
  }

  Json to_json(ColourGraph const& g) {
    Json j;
    j["colours"] = g.names();
    j["edges"]   = Json::array();
    for (auto [a, b] : g.edges()) {
      j["edges"].push_back({g.name(a), g.name(b)});
    }
    return j;
  }

  ChamberSystem chambers_from_json(ColourGraph const& g, Json const& j) {
    std::size_t const      n     = index_of(field(j, "chambers"));
    Json const&            parts = field(j, "partitions");
    std::vector<Partition> partitions(g.size());
    std::vector<bool>      given(g.size(), false);
    if (!parts.is_object()) {
      fail("\"partitions\" must be an object");
    }
    for (auto const& [name, classes] : parts.items()) {
      Colour const c = colour_named(g, Json(name));
      given[c]       = true;
      if (!classes.is_array()) {
        fail("a partition is an array of classes");
      }
      for (Json const& cls : classes) {
        if (!cls.is_array()) {
          fail("a class is an array of chamber ids");
        }
        std::vector<ChamberId> members;
        for (Json const& x : cls) {
          members.push_back(index_of(x));
        }
        partitions[c].push_back(std::move(members));
      }
    }
    for (Colour c = 0; c < g.size(); ++c) {
      if (!given[c]) {
        // A missing colour means the discrete partition.
        for (ChamberId x = 0; x < n; ++x) {
          partitions[c].push_back({x});
        }
      }
    }
    return ChamberSystem(g, n, partitions);
  }

  Json to_json(ChamberSystem const& x) {
    Json j;
    j["chambers"]   = x.size();
    j["partitions"] = Json::object();
    for (Colour c = 0; c < x.graph().size(); ++c) {
      j["partitions"][x.graph().name(c)] = x.partition(c);
    }
    return j;
  }

  GammaSpace space_from_json(ColourGraph const& g, Json const& j) {
    Json const& names = field(j, "colours");
    if (!names.is_array() || names.size() != g.size()) {
      fail("space colours do not match the graph");
    }
    for (Colour c = 0; c < g.size(); ++c) {
      if (!names[c].is_string() || names[c].get<std::string>() != g.name(c)) {
        fail("space colours do not match the graph");
      }
    }
    Json const& vertices = field(j, "vertices");
    if (!vertices.is_array()) {
      fail("\"vertices\" must be an array");
    }
    std::vector<std::optional<Colour>> colour_of(vertices.size());
    for (Json const& v : vertices) {
      unsigned const id = index_of(field(v, "id"));
      if (id >= vertices.size() || colour_of[id]) {
        fail("vertex ids must be 0..n-1 without repeats");
      }
      colour_of[id] = colour_named(g, field(v, "colour"));
    }
    GammaSpace m(g);
    for (auto const& c : colour_of) {
      m.add_vertex(*c);
    }
    Json const& edges = field(j, "edges");
    if (!edges.is_array()) {
      fail("\"edges\" must be an array");
    }
    for (Json const& e : edges) {
      if (!e.is_array() || e.size() != 2) {
        fail("edges are pairs of vertex ids");
      }
      m.add_edge(index_of(e[0]), index_of(e[1]));
    }
    return m;
  }

  Json to_json(GammaSpace const& m) {
    Json j;
    j["colours"]  = m.graph().names();
    j["vertices"] = Json::array();
    for (VertexId v = 0; v < m.size(); ++v) {
      j["vertices"].push_back({{"id", v}, {"colour", m.graph().name(m.colour(v))}});
    }
    j["edges"] = Json::array();
    for (auto [a, b] : m.edges()) {
      j["edges"].push_back({a, b});
    }
    return j;
  }

  Flag flag_from_json(GammaSpace const& m, Json const& j) {
    ColourGraph const& g = m.graph();
    if (!j.is_object()) {
      fail("a flag is an object from colour names to vertex ids");
    }
    std::vector<std::optional<VertexId>> chosen(g.size());
    for (auto const& [name, id] : j.items()) {
      chosen[colour_named(g, Json(name))] = index_of(id);
    }
    Flag f;
    for (Colour c = 0; c < g.size(); ++c) {
      if (!chosen[c]) {
        fail("flag misses colour \"" + g.name(c) + "\"");
      }
      f.push_back(*chosen[c]);
    }
    if (!is_flag(m, f)) {
      throw Error(ErrorCode::not_a_flag, "vertices do not form a flag");
    }
    return f;
  }

  Json flag_to_json(ColourGraph const& g, Flag const& f) {
    Json j = Json::object();
    for (Colour c = 0; c < g.size(); ++c) {
      j[g.name(c)] = f[c];
    }
    return j;
  }

  Json to_json(ColourGraph const& g, FlagPath const& p) {
    Json j;
    j["word"]  = to_string(g, p.word);
    j["flags"] = Json::array();
    for (Flag const& f : p.flags) {
      j["flags"].push_back(flag_to_json(g, f));
    }
    return j;
  }

}  // namespace coxflag::io
