#ifndef COXFLAG_GSPACE_HPP_
#define COXFLAG_GSPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "coxflag/chamber.hpp"
#include "coxflag/colour_graph.hpp"
#include "coxflag/words.hpp"

namespace coxflag {

  using VertexId = unsigned;
  // A flag lists its vertex for every colour, in colour order.
  using Flag      = std::vector<VertexId>;
  using VertexSet = std::vector<VertexId>;

  class GammaSpace {
   public:
    GammaSpace() = default;
    explicit GammaSpace(ColourGraph graph);

    // One vertex per colour joined along the edges of the graph.
    static GammaSpace single_flag(ColourGraph graph);

    ColourGraph const& graph() const noexcept {
      return _graph;
    }

    std::size_t size() const noexcept {
      return _colour.size();
    }

    Colour colour(VertexId v) const {
      return _colour[v];
    }

    std::vector<VertexId> const& neighbours(VertexId v) const {
      return _adjacent[v];
    }

    bool adjacent(VertexId a, VertexId b) const;

    VertexId add_vertex(Colour c);
    // Rejects unknown vertices, loops and repeated edges with ParseError.
    void add_edge(VertexId a, VertexId b);

    std::vector<std::pair<VertexId, VertexId>> edges() const;

    friend bool operator==(GammaSpace const&, GammaSpace const&) = default;

   private:
    ColourGraph                        _graph;
    std::vector<Colour>                _colour;
    std::vector<std::vector<VertexId>> _adjacent;
  };

  bool              is_flag(GammaSpace const& m, Flag const& f);
  std::vector<Flag> flags(GammaSpace const& m);
  // Flags of m all of whose vertices lie in d (sorted).
  std::vector<Flag> flags_within(GammaSpace const& m, VertexSet const& d);
  VertexSet         vertices_of(std::vector<Flag> const& fs);

  struct SpaceReport {
    // Edges between equal or non-adjacent colours.
    std::vector<std::pair<VertexId, VertexId>> bad_edges;
    std::vector<VertexId>                      vertices_without_flag;
    std::vector<std::pair<VertexId, VertexId>> edges_without_flag;

    bool valid() const {
      return bad_edges.empty() && vertices_without_flag.empty()
             && edges_without_flag.empty();
    }
  };

  SpaceReport validate_space(GammaSpace const& m);

  // The subgraph on d; vertex k of the result is d[k].
  GammaSpace induced(GammaSpace const& m, VertexSet const& d);

  // Vertices are the classes of each colour, colour by colour.
  GammaSpace to_space_from_dual(ChamberSystem const& dual);
  GammaSpace to_space(ChamberSystem const& x);
  // Chambers are the flags in sorted order; the result is the dual system
  // in which flags are related for a colour when they share that vertex.
  ChamberSystem to_chambers(GammaSpace const& m);

  // The chamber of to_chambers(to_space_from_dual(dual)) for each chamber.
  std::vector<ChamberId> chamber_round_trip(ChamberSystem const& dual);
  // The vertex of m for each vertex of to_space_from_dual(to_chambers(m)).
  std::vector<VertexId> space_round_trip(GammaSpace const& m);

  // map sends vertex k of a to map[k] in b.
  bool is_homomorphism(GammaSpace const&            a,
                       GammaSpace const&            b,
                       std::vector<VertexId> const& map);
  bool is_isomorphism(GammaSpace const&            a,
                      GammaSpace const&            b,
                      std::vector<VertexId> const& map);

  // Enumerates colour-preserving graph homomorphisms source -> target that
  // extend the partial map fixed; the visitor returns false to stop.
  using HomVisitor = std::function<bool(std::vector<VertexId> const&)>;
  void for_each_homomorphism(GammaSpace const&                           source,
                             GammaSpace const&                           target,
                             std::vector<std::optional<VertexId>> const& fixed,
                             HomVisitor const&                           visit);

  struct Difference {
    ColourSet colours = 0;
    Word      word;
  };

  Difference difference(ColourGraph const& g, Flag const& f, Flag const& h);

  struct SpaceExtension {
    GammaSpace space;
    Flag       new_flag;
  };

  SpaceExtension simple_extension(GammaSpace const& a, Flag const& f, Letter s);

  struct Residue {
    GammaSpace space;
    // Vertex k of space is vertex_of[k] in the original space.
    std::vector<VertexId> vertex_of;
  };

  Residue restrict_residue(GammaSpace const& m, Flag const& f, ColourSet sub);

  // Towers of random simple extensions with letters of at most
  // max_letter_size colours, starting from a single flag. The result is
  // checked to be simply connected (NotSimplyConnected otherwise).
  GammaSpace generate_space(ColourGraph const& g,
                            std::size_t        steps,
                            std::uint64_t      seed,
                            unsigned           max_letter_size);

  using FlagId = unsigned;

  struct FlagPath {
    std::vector<Flag> flags;
    Word              word;
  };

  // All flags of a space with the weak steps between them and the
  // relations needed for flag paths.
  class FlagComplex {
   public:
    struct Step {
      Letter letter;
      FlagId to;
    };

    explicit FlagComplex(GammaSpace space);

    GammaSpace const& space() const noexcept {
      return _space;
    }

    ColourGraph const& graph() const noexcept {
      return _space.graph();
    }

    std::size_t size() const noexcept {
      return _flags.size();
    }

    Flag const& flag(FlagId id) const {
      return _flags[id];
    }

    std::vector<Flag> const& all() const noexcept {
      return _flags;
    }

    std::optional<FlagId> find(Flag const& f) const;
    // Throws NotAFlag.
    FlagId id(Flag const& f) const;

    ColourSet diff(FlagId a, FlagId b) const;

    std::vector<Step> const& weak_steps(FlagId a) const {
      return _weak[a];
    }

    // Weak steps a -> b with letter s such that a op s b.
    std::vector<Step> const& op_steps(FlagId a) const {
      return _op[a];
    }

    // Joined by a weak path whose letters are proper subsets of s.
    bool split_connected(Letter s, FlagId a, FlagId b) const;
    // Shortest such path as flag ids, a first; empty if none.
    std::vector<FlagId> split_path(Letter s, FlagId a, FlagId b) const;

    // Requires diff(a, b) inside s, otherwise NotEquivalent.
    bool op(FlagId a, FlagId b, Letter s) const;

    FlagPath to_path(std::vector<FlagId> const& ids) const;

    std::vector<FlagId> flags_through(VertexId v) const;
    std::vector<FlagId> ids_within(VertexSet const& d) const;

   private:
    std::vector<unsigned> const& components(Letter s) const;

    struct ComponentCache {
      std::mutex                                                    lock;
      std::map<ColourSet, std::unique_ptr<std::vector<unsigned>>> by_letter;
    };

    GammaSpace                      _space;
    std::vector<Flag>               _flags;
    std::vector<std::vector<Step>>  _weak;
    std::vector<std::vector<Step>>  _op;
    std::shared_ptr<ComponentCache> _cache;
  };

  bool op_letter(FlagComplex const& m, Flag const& f, Flag const& h, Letter s);

  // Canonical weak path refined into a flag path, then reduced by proper
  // absorption, absorption and splitting until its word is reduced.
  FlagPath find_reduced_path(FlagComplex const& m, Flag const& f, Flag const& h);

  // The permutation of p with the given word; NotAPermutation otherwise.
  FlagPath permute_path(ColourGraph const& g, FlagPath const& p, Word const& target);

  // Reduced flag paths from one flag, one per reachable flag, found by a
  // breadth-first search over flag paths that stay reduced.
  class PathTree {
   public:
    PathTree(FlagComplex const& m, FlagId from);

    bool reaches(FlagId to) const {
      return _state_of[to] != none;
    }

    std::vector<FlagId> path(FlagId to) const;
    Word                word(FlagId to) const;

   private:
    static constexpr std::size_t none = ~std::size_t(0);

    struct Node {
      FlagId      flag;
      std::size_t parent;
      Letter      letter;
    };

    std::vector<Node>        _nodes;
    std::vector<std::size_t> _state_of;
  };

  struct ScVerdict {
    bool                    simply_connected = true;
    std::optional<FlagPath> certificate;
    std::size_t             states = 0;
  };

  // Exhaustive search for a closed reduced flag path. budget bounds the
  // search states per start flag (default: flags squared); BudgetExceeded
  // is thrown when it runs out.
  ScVerdict is_simply_connected(FlagComplex const&         m,
                                std::optional<std::size_t> budget = {});

  // F op^{s,n} G: F ~s G, but no chain of n steps inside proper subsets of s.
  bool op_sn(FlagComplex const& m, FlagId a, FlagId b, Letter s, std::size_t n);

  // Searches closed paths F0 op^{s1,n} F1 ... op^{sn,n} F0 with s1...sn
  // reduced and non-trivial, for n = 1..max_n (default: number of flags).
  std::optional<FlagPath> elementary_cycle(FlagComplex const&         m,
                                           std::optional<std::size_t> max_n  = {},
                                           std::optional<std::size_t> budget = {});

  bool check_P_u(FlagComplex const& m, Flag const& f, Flag const& h, Word const& u);

  // Every flag path from f to h with exactly the word u.
  std::vector<FlagPath> paths_with_word(FlagComplex const& m,
                                        Flag const&        f,
                                        Flag const&        h,
                                        Word const&        u,
                                        std::size_t        limit = 1000);

  bool is_nice(FlagComplex const& m, VertexSet const& d);

  struct BasePoint {
    Flag flag;
    Word word;
  };

  BasePoint base_point(FlagComplex const& m, Flag const& f, VertexSet const& d);

  std::vector<VertexId> canonical_base(ColourGraph const& g,
                                       Flag const&        f,
                                       Word const&        u);

  struct Realization {
    GammaSpace space;
    Flag       flag;
  };

  Realization realize_type(GammaSpace const& m, Flag const& g, Word const& u);

  VertexSet nice_hull(FlagComplex const&         m,
                      VertexSet const&           a,
                      std::optional<std::size_t> budget = {});

  // A homomorphism m -> d fixing d, as the image of every vertex.
  std::vector<VertexId> specialise(FlagComplex const& m, VertexSet const& d);

}  // namespace coxflag

#endif  // COXFLAG_GSPACE_HPP_
