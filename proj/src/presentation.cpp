#include "secantq/presentation.hpp"

#include "secantq/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace secantq {

std::vector<Relation> event_relations(const SecantTrace& trace,
                                      const std::vector<TrisecantEvent>& events,
                                      const std::vector<int>& middle_factor) {
  std::vector<Relation> rels;
  for (int k = 0; k < static_cast<int>(events.size()); ++k) {
    const TrisecantEvent& e = events[k];
    const SecantTrace::EventClasses& ec = trace.event_classes[k];
    int s = e.sign * middle_factor[e.middle - 1];
    QOp ac_op = s > 0 ? QOp::Conj : QOp::ConjInv;
    rels.push_back({ec.post_ac, ec.pre_ac, ec.ab, ac_op, k});
    rels.push_back({ec.post_ca, ec.pre_ca, ec.cb, opposite(ac_op), k});
  }
  return rels;
}

std::vector<FreeQuandleWord> propagate_words(
    int class_count,
    const std::vector<std::pair<int, FreeQuandleWord>>& base_values,
    const std::vector<Relation>& relations) {
  std::vector<FreeQuandleWord> values(class_count, FreeQuandleWord{-1, {}});
  for (const auto& [cls, w] : base_values) values[cls] = w;
  for (const Relation& r : relations) {
    if (values[r.left].base < 0 || values[r.right].base < 0)
      throw SqError("propagate_words: operand class has no value");
    values[r.target] = fq_op(values[r.left], values[r.right], r.op);
  }
  return values;
}

BraidSQ build_braid_sq(const SecantTrace& trace,
                       const std::vector<TrisecantEvent>& events) {
  BraidSQ sq;
  sq.strands = trace.strands;
  sq.trace = trace;
  sq.relations = event_relations(trace, events,
                                 std::vector<int>(trace.strands, 1));
  std::vector<std::pair<int, FreeQuandleWord>> base;
  for (int i = 1; i <= trace.strands; ++i)
    for (int j = 1; j <= trace.strands; ++j)
      if (i != j)
        base.emplace_back(trace.first_class(i, j),
                          fq_generator(trace.pair_index(i, j)));
  sq.values = propagate_words(trace.class_count, base, sq.relations);
  sq.top_map.assign(trace.strands * trace.strands, FreeQuandleWord{-1, {}});
  for (int i = 1; i <= trace.strands; ++i)
    for (int j = 1; j <= trace.strands; ++j)
      if (i != j)
        sq.top_map[trace.pair_index(i, j)] = sq.values[trace.last_class(i, j)];
  return sq;
}

bool QuandlePresentation::canonical_in_e(int cls) const {
  int rep = canonical(cls);
  for (int e : e_set)
    if (canonical(e) == rep) return true;
  return false;
}

std::vector<int> QuandlePresentation::generators() const {
  std::set<int> reps;
  for (int c = 0; c < class_count; ++c)
    if (alive[c]) reps.insert(canonical(c));
  return {reps.begin(), reps.end()};
}

std::vector<int> QuandlePresentation::base_generators() const {
  std::set<int> defined;
  for (const Relation& r : relations) defined.insert(canonical(r.target));
  std::vector<int> base;
  for (int rep : generators())
    if (!defined.count(rep)) base.push_back(rep);
  return base;
}

QuandlePresentation build_plat_presentation(
    const SecantTrace& trace, const std::vector<TrisecantEvent>& events,
    const PlatStructure& plat) {
  if (plat.strands != trace.strands)
    throw ParityError("plat structure does not match the trace");
  QuandlePresentation p;
  p.strands = trace.strands;
  p.class_count = trace.class_count;
  p.ident = UnionFind(trace.class_count);
  p.alive.assign(trace.class_count, 1);
  p.event_classes = trace.event_classes;
  p.is_first_interval.assign(trace.class_count, 0);
  for (int i = 1; i <= trace.strands; ++i)
    for (int j = 1; j <= trace.strands; ++j)
      if (i != j) p.is_first_interval[trace.first_class(i, j)] = 1;

  std::vector<int> factor(trace.strands, 1);
  for (int s = 1; s <= trace.strands; ++s)
    if (plat.orientation[s - 1] == StrandDir::Down) factor[s - 1] = -1;
  p.relations = event_relations(trace, events, factor);

  int caps = plat.strands / 2;
  // Top identifications: for distinct caps, the four t=0-adjacent classes
  // with one leg in each pair merge, per direction.
  for (int A = 1; A <= caps; ++A)
    for (int B = 1; B <= caps; ++B) {
      if (A == B) continue;
      int legs_a[2] = {2 * A - 1, 2 * A};
      int legs_b[2] = {2 * B - 1, 2 * B};
      int head = trace.first_class(legs_a[0], legs_b[0]);
      for (int i : legs_a)
        for (int j : legs_b) {
          int cls = trace.first_class(i, j);
          if (cls == head) continue;
          p.top_idents.emplace_back(head, cls);
          p.ident.merge(head, cls);
        }
    }

  // Bottom: same pattern through the strands occupying the bottom positions.
  auto bottom_strand = [&plat](int pos) { return plat.strand_at_bottom[pos - 1]; };
  for (int A = 1; A <= caps; ++A)
    for (int B = 1; B <= caps; ++B) {
      if (A == B) continue;
      int legs_a[2] = {bottom_strand(2 * A - 1), bottom_strand(2 * A)};
      int legs_b[2] = {bottom_strand(2 * B - 1), bottom_strand(2 * B)};
      int head = trace.last_class(legs_a[0], legs_b[0]);
      for (int i : legs_a)
        for (int j : legs_b) {
          int cls = trace.last_class(i, j);
          if (cls == head) continue;
          p.bottom_idents.emplace_back(head, cls);
          p.ident.merge(head, cls);
        }
    }

  // E: both directed cap-adjacent classes, top and bottom.
  std::set<int> e_raw;
  for (int A = 1; A <= caps; ++A) {
    e_raw.insert(trace.first_class(2 * A - 1, 2 * A));
    e_raw.insert(trace.first_class(2 * A, 2 * A - 1));
    int u = bottom_strand(2 * A - 1), v = bottom_strand(2 * A);
    e_raw.insert(trace.last_class(u, v));
    e_raw.insert(trace.last_class(v, u));
  }
  p.e_set.assign(e_raw.begin(), e_raw.end());

  // Saturate E through the identifications before classifying events.
  std::set<int> e_reps;
  for (int e : p.e_set) e_reps.insert(p.ident.find(e));
  std::vector<int> e_saturated;
  for (int c = 0; c < p.class_count; ++c)
    if (e_reps.count(p.ident.find(c))) e_saturated.push_back(c);
  p.trivial_marks = classify_trivial(events, trace, e_saturated);
  return p;
}

QuandlePresentation simplify(const QuandlePresentation& input) {
  QuandlePresentation p = input;
  int rel_count = static_cast<int>(p.relations.size());
  std::vector<char> live(rel_count, 1);

  std::map<int, std::vector<int>> rels_of_event;
  for (int r = 0; r < rel_count; ++r)
    rels_of_event[p.relations[r].event_index].push_back(r);

  auto member_count = [&p](int cls) {
    int rep = p.ident.find(cls);
    int count = 0;
    for (int c = 0; c < p.class_count; ++c)
      if (p.alive[c] && p.ident.find(c) == rep) ++count;
    return count;
  };

  // Collapse Type-1 events: drop both relations, glue post to pre.
  for (const TrivialityMark& mark : p.trivial_marks) {
    if (mark.kind != TrivialKind::Type1) continue;
    auto it = rels_of_event.find(mark.event0);
    if (it == rels_of_event.end()) continue;
    bool all_live = true;
    for (int r : it->second) all_live = all_live && live[r];
    if (!all_live) continue;
    for (int r : it->second) {
      live[r] = 0;
      p.ident.merge(p.relations[r].left, p.relations[r].target);
    }
  }

  // Collapse disjoint Type-2 pairs when the middle classes are private.
  std::set<int> used_events;
  for (const TrivialityMark& mark : p.trivial_marks) {
    if (mark.kind != TrivialKind::Type2Pair) continue;
    if (used_events.count(mark.event0) || used_events.count(mark.event1))
      continue;
    auto it0 = rels_of_event.find(mark.event0);
    auto it1 = rels_of_event.find(mark.event1);
    if (it0 == rels_of_event.end() || it1 == rels_of_event.end()) continue;
    bool all_live = true;
    for (int r : it0->second) all_live = all_live && live[r];
    for (int r : it1->second) all_live = all_live && live[r];
    if (!all_live) continue;
    const SecantTrace::EventClasses& ec0 = p.event_classes[mark.event0];
    const SecantTrace::EventClasses& ec1 = p.event_classes[mark.event1];
    // Middle classes: interval between the two events, both directions.
    int mid_ac = ec0.post_ac, mid_ca = ec0.post_ca;
    if (mid_ac != ec1.pre_ac || mid_ca != ec1.pre_ca) continue;
    bool mid_free = member_count(mid_ac) == 1 && member_count(mid_ca) == 1 &&
                    !p.canonical_in_e(mid_ac) && !p.canonical_in_e(mid_ca);
    if (mid_free)
      for (int r = 0; r < rel_count; ++r) {
        if (!live[r]) continue;
        const Relation& rel = p.relations[r];
        bool involved = rel.event_index == mark.event0 ||
                        rel.event_index == mark.event1;
        if (involved) continue;
        int reps[3] = {p.ident.find(rel.target), p.ident.find(rel.left),
                       p.ident.find(rel.right)};
        for (int rep : reps)
          if (rep == p.ident.find(mid_ac) || rep == p.ident.find(mid_ca))
            mid_free = false;
      }
    if (!mid_free) continue;
    for (int r : it0->second) live[r] = 0;
    for (int r : it1->second) live[r] = 0;
    p.ident.merge(ec0.pre_ac, ec1.post_ac);
    p.ident.merge(ec0.pre_ca, ec1.post_ca);
    p.alive[mid_ac] = 0;
    p.alive[mid_ca] = 0;
    used_events.insert(mark.event0);
    used_events.insert(mark.event1);
  }

  // Tietze sweep: drop determined generators nothing refers to.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> defined_by;   // rep -> count of live defining relations
    std::map<int, int> referenced;   // rep -> operand references
    for (int r = 0; r < rel_count; ++r) {
      if (!live[r]) continue;
      defined_by[p.ident.find(p.relations[r].target)]++;
      referenced[p.ident.find(p.relations[r].left)]++;
      referenced[p.ident.find(p.relations[r].right)]++;
    }
    std::set<int> protected_reps;
    for (int e : p.e_set) protected_reps.insert(p.ident.find(e));
    for (int c = 0; c < p.class_count; ++c)
      if (p.alive[c] && p.is_first_interval[c])
        protected_reps.insert(p.ident.find(c));
    for (int r = 0; r < rel_count; ++r) {
      if (!live[r]) continue;
      int rep = p.ident.find(p.relations[r].target);
      if (defined_by[rep] != 1 || referenced.count(rep) ||
          protected_reps.count(rep))
        continue;
      live[r] = 0;
      for (int c = 0; c < p.class_count; ++c)
        if (p.alive[c] && p.ident.find(c) == rep) p.alive[c] = 0;
      changed = true;
    }
  }

  std::vector<Relation> kept;
  for (int r = 0; r < rel_count; ++r)
    if (live[r]) kept.push_back(p.relations[r]);
  p.relations = std::move(kept);
  return p;
}

std::string presentation_text(const QuandlePresentation& p) {
  std::ostringstream os;
  for (int rep : p.generators()) os << "GEN " << rep << "\n";
  std::set<int> e_reps;
  for (int e : p.e_set) e_reps.insert(p.canonical(e));
  for (int rep : e_reps) os << "E " << rep << "\n";
  for (const auto& [a, b] : p.top_idents) os << "IDENT " << a << " " << b << "\n";
  for (const auto& [a, b] : p.bottom_idents)
    os << "IDENT " << a << " " << b << "\n";
  for (const Relation& r : p.relations)
    os << "REL " << p.canonical(r.target) << " = " << p.canonical(r.left)
       << (r.op == QOp::Conj ? " o " : " / ") << p.canonical(r.right) << "\n";
  return os.str();
}

}  // namespace secantq
