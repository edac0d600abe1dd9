#pragma once

#include "secantq/geometry.hpp"

#include <vector>

namespace secantq {

// Combinatorial secant bookkeeping: for every ordered strand pair (i, j),
// [0,1] is split at exactly the events with surface {i, j}; each maximal
// interval is one secant homotopy class with its own id.
struct SecantTrace {
  int strands = 0;
  int class_count = 0;
  // classes[pair_index(i,j)][k] = class id of the k-th interval
  std::vector<std::vector<int>> classes;

  // Per event, the six incident directed classes (a = outer_a, b = middle,
  // c = outer_c): (a,b) and (c,b) are unchanged across the event; (a,c) and
  // (c,a) change from pre to post.
  struct EventClasses {
    int ab, ba, cb, bc;
    int pre_ac, post_ac, pre_ca, post_ca;
    int surface_ordinal;  // position among the events on surface {a,c}
  };
  std::vector<EventClasses> event_classes;

  // reverse lookup: class id -> (i, j, interval)
  struct ClassInfo {
    int from, to, interval;
  };
  std::vector<ClassInfo> class_info;

  int pair_index(int i, int j) const { return (i - 1) * strands + (j - 1); }
  int class_at(int i, int j, int interval) const {
    return classes[pair_index(i, j)][interval];
  }
  int first_class(int i, int j) const { return class_at(i, j, 0); }
  int last_class(int i, int j) const {
    return classes[pair_index(i, j)].back();
  }
};

SecantTrace build_secant_trace(const std::vector<TrisecantEvent>& events,
                               int strands);

// A maximal gap between consecutive events on one ruled surface, bounded by
// event indices (-1 marks an end of [0,1]).
struct FilmFrame {
  int after_event = -1;
  int before_event = -1;
};

std::vector<FilmFrame> film_frames(const std::vector<TrisecantEvent>& events,
                                   int a, int c);

enum class TrivialKind { None, Type1, Type2Pair };

struct TrivialityMark {
  TrivialKind kind = TrivialKind::None;
  int event0 = -1;
  int event1 = -1;         // second event of a Type2 pair
  int witness_class = -1;  // the class in the E-set (or shared-middle pair id)
};

// Type 1: the (outer_a, middle) or (middle, outer_c) class at the event lies
// in e_set. Type 2: consecutive events on one surface with the same middle
// strand, or with distinct middles whose connecting secant class over the gap
// lies in e_set. Marks are emitted per event (Type1/None) followed by the
// detected pairs; e_set holds class ids and may be empty (braids).
std::vector<TrivialityMark> classify_trivial(
    const std::vector<TrisecantEvent>& events, const SecantTrace& trace,
    const std::vector<int>& e_set);

}  // namespace secantq
