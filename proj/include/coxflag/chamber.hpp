#ifndef COXFLAG_CHAMBER_HPP_
#define COXFLAG_CHAMBER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxflag/colour_graph.hpp"
#include "coxflag/words.hpp"

namespace coxflag {

  using ChamberId = unsigned;
  using Partition = std::vector<std::vector<ChamberId>>;

  // Chambers 0..n-1 with one equivalence relation per colour, stored as a
  // class index per chamber. Class indices are dense and ordered by the
  // least member.
  class ChamberSystem {
   public:
    ChamberSystem() = default;
    ChamberSystem(ColourGraph graph, std::size_t chambers);
    ChamberSystem(ColourGraph graph,
                  std::size_t chambers,
                  std::vector<Partition> const& partitions);

    static ChamberSystem singleton(ColourGraph graph);
    // labels[c][x] is any class label of x for colour c.
    static ChamberSystem from_labels(
        ColourGraph                                    graph,
        std::vector<std::vector<unsigned>> const& labels);

    ColourGraph const& graph() const noexcept {
      return _graph;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    unsigned class_of(Colour c, ChamberId x) const {
      return _class[c][x];
    }

    std::vector<ChamberId> const& members(Colour c, unsigned cls) const {
      return _members[c][cls];
    }

    std::vector<ChamberId> const& panel(Colour c, ChamberId x) const {
      return _members[c][_class[c][x]];
    }

    std::size_t class_count(Colour c) const {
      return _members[c].size();
    }

    bool related(Colour c, ChamberId x, ChamberId y) const {
      return _class[c][x] == _class[c][y];
    }

    Partition partition(Colour c) const;

    void require_chamber(ChamberId x) const;

    static constexpr unsigned new_class = ~0U;

    // Appends a chamber; classes[c] is an existing class index or new_class.
    ChamberId add_chamber(std::vector<unsigned> const& classes);

    friend bool operator==(ChamberSystem const&, ChamberSystem const&);

   private:
    ColourGraph                                     _graph;
    std::size_t                                     _size = 0;
    std::vector<std::vector<unsigned>>              _class;
    std::vector<std::vector<std::vector<ChamberId>>> _members;
  };

  std::vector<ChamberId> residue(ChamberSystem const& x,
                                 ChamberId            start,
                                 ColourSet            s);

  // Partition by residues of the complement of each colour.
  ChamberSystem dualize(ChamberSystem const& x);

  // Chambers reachable from start by a path of the given type of singleton
  // letters, consecutive chambers distinct.
  std::vector<ChamberId> ends_of_type(ChamberSystem const&       x,
                                      ChamberId                  start,
                                      std::vector<Colour> const& type);

  struct Witness {
    std::vector<ChamberId> chambers;
    std::vector<Colour>    colours;
  };

  struct AxiomCheck {
    bool                   holds = true;
    std::optional<Witness> witness;
  };

  struct AxiomReport {
    AxiomCheck large_classes;
    AxiomCheck connected;
    AxiomCheck exchange;
    AxiomCheck no_closed_reduced_path;
    AxiomCheck dual_separating;
    AxiomCheck dual_coherent;
    AxiomCheck dagger;
    // Smallest class size over all colours; stands in for (a) on truncations.
    std::size_t min_class_size = 0;

    bool strongly_connected() const {
      return connected.holds && exchange.holds;
    }

    bool quasi_building() const {
      return strongly_connected() && no_closed_reduced_path.holds;
    }

    bool building() const {
      return quasi_building() && large_classes.holds;
    }
  };

  inline constexpr unsigned dual_check_colour_cap = 8;

  // With dual = true the dual properties and the (†) identity are checked
  // too; that part throws SizeCapExceeded above dual_check_colour_cap.
  AxiomReport check_axioms(ChamberSystem const& x, bool dual = true);

  // Separate entry points for the individual axioms.
  AxiomCheck check_exchange(ChamberSystem const& x);
  AxiomCheck check_no_closed_reduced_path(ChamberSystem const& x);
  AxiomCheck check_dual_coherent(ChamberSystem const& dual);
  AxiomCheck check_dagger(ChamberSystem const& x);

  // The chambers joined to a by paths whose colours commute with lambda.
  std::vector<ChamberId> extension_base(ChamberSystem const& x,
                                        ChamberId            a,
                                        Colour               lambda);

  enum class Precheck { verify, assume };

  struct Extension {
    ChamberSystem system;
    // copy_of[k] is the chamber duplicated by chamber old_size + k.
    std::vector<ChamberId> copy_of;
    ChamberId              new_chamber = 0;
  };

  Extension simple_extend(ChamberSystem const& x,
                          ChamberId            a,
                          Colour               lambda,
                          Precheck             precheck = Precheck::verify);

  std::vector<ChamberId> strong_hull(ChamberSystem const&          x,
                                     std::vector<ChamberId> const& seed);

  // The subsystem on the listed chambers; chamber k is subset[k].
  ChamberSystem induced(ChamberSystem const&          x,
                        std::vector<ChamberId> const& subset);

  struct ScheduleStep {
    ChamberId chamber;
    Colour    colour;
  };

  ChamberSystem generate_quasi_building(ColourGraph const&               g,
                                        std::vector<ScheduleStep> const& schedule);

  // Round-robin growth: every chamber created within depth - 1 rounds gets
  // each of its panels filled up to fanout chambers.
  ChamberSystem generate_quasi_building(ColourGraph const& g,
                                        unsigned           depth,
                                        unsigned           fanout);

  ChamberSystem generate_random_quasi_building(ColourGraph const& g,
                                               std::size_t        steps,
                                               std::uint64_t      seed);

  struct Gallery {
    std::vector<ChamberId> chambers;
    Word                   word;
  };

  Gallery reduced_gallery(ChamberSystem const& x, ChamberId from, ChamberId to);

  // Gallery distances from start; unreachable chambers get SIZE_MAX.
  std::vector<std::size_t> distances(ChamberSystem const& x, ChamberId start);

  // True if map is a bijection carrying every relation of x onto that of y.
  bool is_isomorphism(ChamberSystem const&          x,
                      ChamberSystem const&          y,
                      std::vector<ChamberId> const& map);

}  // namespace coxflag

#endif  // COXFLAG_CHAMBER_HPP_
