#include "secantq/secant_trace.hpp"

#include "secantq/errors.hpp"

#include <algorithm>
#include <string>

namespace secantq {

SecantTrace build_secant_trace(const std::vector<TrisecantEvent>& events,
                               int strands) {
  SecantTrace trace;
  trace.strands = strands;
  std::vector<int> surface_events(strands * strands, 0);
  for (const TrisecantEvent& e : events) {
    for (int s : {e.outer_a, e.middle, e.outer_c})
      if (s < 1 || s > strands)
        throw InconsistentEventsError("event references strand " +
                                      std::to_string(s));
    if (e.outer_a == e.middle || e.middle == e.outer_c ||
        e.outer_a == e.outer_c)
      throw InconsistentEventsError("event with repeated strand");
    surface_events[trace.pair_index(e.outer_a, e.outer_c)]++;
    surface_events[trace.pair_index(e.outer_c, e.outer_a)]++;
  }

  trace.classes.assign(strands * strands, {});
  for (int i = 1; i <= strands; ++i)
    for (int j = 1; j <= strands; ++j) {
      if (i == j) continue;
      int idx = trace.pair_index(i, j);
      for (int k = 0; k <= surface_events[idx]; ++k) {
        trace.classes[idx].push_back(trace.class_count);
        trace.class_info.push_back({i, j, k});
        trace.class_count++;
      }
    }

  std::vector<int> seen(strands * strands, 0);
  for (const TrisecantEvent& e : events) {
    SecantTrace::EventClasses ec;
    int a = e.outer_a, b = e.middle, c = e.outer_c;
    auto current = [&](int i, int j) {
      return trace.class_at(i, j, seen[trace.pair_index(i, j)]);
    };
    ec.ab = current(a, b);
    ec.ba = current(b, a);
    ec.cb = current(c, b);
    ec.bc = current(b, c);
    int k = seen[trace.pair_index(a, c)];
    ec.surface_ordinal = k;
    ec.pre_ac = trace.class_at(a, c, k);
    ec.post_ac = trace.class_at(a, c, k + 1);
    ec.pre_ca = trace.class_at(c, a, k);
    ec.post_ca = trace.class_at(c, a, k + 1);
    seen[trace.pair_index(a, c)]++;
    seen[trace.pair_index(c, a)]++;
    trace.event_classes.push_back(ec);
  }
  return trace;
}

std::vector<FilmFrame> film_frames(const std::vector<TrisecantEvent>& events,
                                   int a, int c) {
  std::vector<FilmFrame> frames;
  int last = -1;
  for (int k = 0; k < static_cast<int>(events.size()); ++k) {
    const TrisecantEvent& e = events[k];
    if (std::min(e.outer_a, e.outer_c) == std::min(a, c) &&
        std::max(e.outer_a, e.outer_c) == std::max(a, c)) {
      frames.push_back({last, k});
      last = k;
    }
  }
  frames.push_back({last, -1});
  return frames;
}

namespace {

bool in_set(const std::vector<int>& set, int value) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

}  // namespace

std::vector<TrivialityMark> classify_trivial(
    const std::vector<TrisecantEvent>& events, const SecantTrace& trace,
    const std::vector<int>& e_set) {
  std::vector<TrivialityMark> marks;
  for (int k = 0; k < static_cast<int>(events.size()); ++k) {
    const SecantTrace::EventClasses& ec = trace.event_classes[k];
    TrivialityMark mark;
    mark.event0 = k;
    if (in_set(e_set, ec.ab)) {
      mark.kind = TrivialKind::Type1;
      mark.witness_class = ec.ab;
    } else if (in_set(e_set, ec.bc)) {
      mark.kind = TrivialKind::Type1;
      mark.witness_class = ec.bc;
    }
    marks.push_back(mark);
  }

  // Consecutive events on one surface: same middle, or middles joined by an
  // e-class secant spanning the whole gap.
  int n = trace.strands;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int prev = -1;
      for (int k = 0; k < static_cast<int>(events.size()); ++k) {
        const TrisecantEvent& e = events[k];
        if (e.outer_a != i || e.outer_c != j) continue;
        if (prev >= 0) {
          const TrisecantEvent& e0 = events[prev];
          TrivialityMark mark;
          mark.kind = TrivialKind::Type2Pair;
          mark.event0 = prev;
          mark.event1 = k;
          if (e0.middle == e.middle) {
            mark.witness_class = -1;
            marks.push_back(mark);
          } else {
            int b0 = e0.middle, b1 = e.middle;
            bool split = false;
            for (int t = prev + 1; t < k; ++t) {
              const TrisecantEvent& mid = events[t];
              if (std::min(mid.outer_a, mid.outer_c) == std::min(b0, b1) &&
                  std::max(mid.outer_a, mid.outer_c) == std::max(b0, b1))
                split = true;
            }
            if (!split) {
              int before = 0;
              for (int t = 0; t <= prev; ++t) {
                const TrisecantEvent& past = events[t];
                if (std::min(past.outer_a, past.outer_c) == std::min(b0, b1) &&
                    std::max(past.outer_a, past.outer_c) == std::max(b0, b1))
                  before++;
              }
              int cls01 = trace.class_at(b0, b1, before);
              int cls10 = trace.class_at(b1, b0, before);
              if (in_set(e_set, cls01) || in_set(e_set, cls10)) {
                mark.witness_class = in_set(e_set, cls01) ? cls01 : cls10;
                marks.push_back(mark);
              }
            }
          }
        }
        prev = k;
      }
    }
  return marks;
}

}  // namespace secantq
