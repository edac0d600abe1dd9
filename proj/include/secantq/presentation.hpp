#pragma once

#include "secantq/braid_word.hpp"
#include "secantq/free_quandle.hpp"
#include "secantq/secant_trace.hpp"

#include <string>
#include <vector>

namespace secantq {

struct UnionFind {
  std::vector<int> parent;

  UnionFind() = default;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller id as representative
    return true;
  }
};

// target = left (o|/) right, sourced from one trisecant event.
struct Relation {
  int target = -1;
  int left = -1;
  int right = -1;
  QOp op = QOp::Conj;
  int event_index = -1;
};

// Relations per event, both directed readings: with effective sign s
// (geometric sign times the middle strand's orientation factor),
// s > 0 gives post_ac = pre_ac o ab and post_ca = pre_ca / cb;
// s < 0 interchanges the operations.
std::vector<Relation> event_relations(const SecantTrace& trace,
                                      const std::vector<TrisecantEvent>& events,
                                      const std::vector<int>& middle_factor);

// Compute the value of every class reachable from `base_values` through the
// relations (in order). Unreached classes keep base == -1.
std::vector<FreeQuandleWord> propagate_words(
    int class_count,
    const std::vector<std::pair<int, FreeQuandleWord>>& base_values,
    const std::vector<Relation>& relations);

// SQ of a braid: free-quandle values of every secant class over the t=0
// generators, one base generator per ordered strand pair. The top map sends
// each directed pair to the value of its t=1-adjacent class; base generator
// ids are pair indices (i-1)*n + (j-1), stable across realizations.
struct BraidSQ {
  int strands = 0;
  SecantTrace trace;
  std::vector<Relation> relations;
  std::vector<FreeQuandleWord> values;   // per class id
  std::vector<FreeQuandleWord> top_map;  // per pair index, diagonal unused
};

BraidSQ build_braid_sq(const SecantTrace& trace,
                       const std::vector<TrisecantEvent>& events);

// Finite presentation of SQ for a plat closure: generators are the secant
// classes modulo the cap identifications, relations come from events with
// orientation-adjusted signs, e_set lists the cap-adjacent classes.
struct QuandlePresentation {
  int strands = 0;
  int class_count = 0;
  UnionFind ident;
  std::vector<std::pair<int, int>> top_idents;     // raw merge pairs at t=0
  std::vector<std::pair<int, int>> bottom_idents;  // raw merge pairs at t=1
  std::vector<Relation> relations;                 // live, event order
  std::vector<int> e_set;                          // raw class ids
  std::vector<char> alive;                         // per raw class id
  std::vector<char> is_first_interval;             // per raw class id
  std::vector<SecantTrace::EventClasses> event_classes;
  std::vector<TrivialityMark> trivial_marks;

  int canonical(int cls) const { return ident.find(cls); }
  bool canonical_in_e(int cls) const;
  std::vector<int> generators() const;       // alive canonical reps
  std::vector<int> base_generators() const;  // reps with no defining relation
};

QuandlePresentation build_plat_presentation(
    const SecantTrace& trace, const std::vector<TrisecantEvent>& events,
    const PlatStructure& plat);

// Tietze reduction: collapse Type-1 events and Type-2 pairs recorded in the
// presentation, then drop determined generators nothing else refers to.
// Coloring counts into every finite quandle are unchanged.
QuandlePresentation simplify(const QuandlePresentation& p);

std::string presentation_text(const QuandlePresentation& p);

}  // namespace secantq
