#ifndef COXFLAG_COLOUR_GRAPH_HPP_
#define COXFLAG_COLOUR_GRAPH_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxflag {

  using Colour    = unsigned;
  using ColourSet = std::uint64_t;

  inline constexpr unsigned max_colours = 64;

  namespace colours {

    constexpr ColourSet single(Colour c) noexcept {
      return ColourSet(1) << c;
    }

    constexpr bool contains(ColourSet s, Colour c) noexcept {
      return (s >> c) & 1U;
    }

    constexpr bool is_subset(ColourSet a, ColourSet b) noexcept {
      return (a & ~b) == 0;
    }

    constexpr bool is_proper_subset(ColourSet a, ColourSet b) noexcept {
      return is_subset(a, b) && a != b;
    }

    constexpr unsigned size(ColourSet s) noexcept {
      return static_cast<unsigned>(std::popcount(s));
    }

    constexpr Colour lowest(ColourSet s) noexcept {
      return static_cast<Colour>(std::countr_zero(s));
    }

    // Lexicographic comparison of the ascending colour lists of a and b.
    constexpr std::strong_ordering lex_compare(ColourSet a,
                                               ColourSet b) noexcept {
      ColourSet const diff = a ^ b;
      if (diff == 0) {
        return std::strong_ordering::equal;
      }
      Colour const    c     = lowest(diff);
      ColourSet const above = ~((single(c) << 1) - 1);
      if (contains(a, c)) {
        return (b & above) == 0 ? std::strong_ordering::greater
                                : std::strong_ordering::less;
      }
      return (a & above) == 0 ? std::strong_ordering::less
                              : std::strong_ordering::greater;
    }

    std::vector<Colour> to_vector(ColourSet s);

  }  // namespace colours

  class Letter {
   public:
    constexpr explicit Letter(ColourSet support) noexcept
        : _support(support) {}

    constexpr ColourSet support() const noexcept {
      return _support;
    }

    constexpr unsigned size() const noexcept {
      return colours::size(_support);
    }

    constexpr bool subset_of(Letter t) const noexcept {
      return colours::is_subset(_support, t._support);
    }

    constexpr bool proper_subset_of(Letter t) const noexcept {
      return colours::is_proper_subset(_support, t._support);
    }

    friend constexpr bool operator==(Letter, Letter) noexcept = default;

    friend constexpr std::strong_ordering operator<=>(Letter a,
                                                      Letter b) noexcept {
      return colours::lex_compare(a._support, b._support);
    }

   private:
    ColourSet _support;
  };

  struct GraphInvariants {
    std::optional<unsigned> min_valency;
    unsigned                longest_induced_path = 0;
    unsigned                largest_component    = 0;
    std::vector<ColourSet>  components;
  };

  class ColourGraph {
   public:
    ColourGraph() = default;
    ColourGraph(std::vector<std::string>                    names,
                std::vector<std::pair<Colour, Colour>> const& edges);

    static ColourGraph path(unsigned n);
    static ColourGraph complete(unsigned n);
    static ColourGraph cycle(unsigned n);
    static ColourGraph edgeless(unsigned n);

    unsigned size() const noexcept {
      return static_cast<unsigned>(_names.size());
    }

    ColourSet all() const noexcept {
      return size() == max_colours ? ~ColourSet(0)
                                   : colours::single(size()) - 1;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const&    name(Colour c) const;
    std::optional<Colour> find(std::string_view name) const;

    ColourSet neighbours(Colour c) const {
      return _adjacent[c];
    }

    ColourSet neighbours(ColourSet s) const;

    bool adjacent(Colour a, Colour b) const {
      return colours::contains(_adjacent[a], b);
    }

    std::vector<std::pair<Colour, Colour>> edges() const;
    bool                                   has_edges() const;

    bool                is_connected(ColourSet s) const;
    std::vector<Letter> components(ColourSet s) const;
    bool                is_letter(ColourSet s) const;
    Letter              letter(ColourSet s) const;

    bool commute(Letter s, Letter t) const {
      return (s.support() & boundary(t.support())) == 0;
    }

    ColourSet boundary(ColourSet s) const {
      return s | neighbours(s);
    }

    ColourSet boundary(Letter s) const {
      return boundary(s.support());
    }

    std::pair<Colour, Colour> removable_pair(Letter s) const;
    std::vector<Letter>       letters(unsigned max_size) const;
    GraphInvariants           invariants(unsigned path_cutoff
                                         = max_colours) const;

    ColourGraph induced(ColourSet subset) const;

    friend bool operator==(ColourGraph const&, ColourGraph const&) = default;

   private:
    std::vector<std::string> _names;
    std::vector<ColourSet>   _adjacent;
  };

}  // namespace coxflag

#endif  // COXFLAG_COLOUR_GRAPH_HPP_
