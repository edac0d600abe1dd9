#include "secantq/geometry.hpp"

#include "secantq/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

namespace secantq {

LayoutParams default_layout(int strands) {
  LayoutParams layout;
  for (int k = 1; k <= strands; ++k) layout.abscissas.emplace_back(k);
  return layout;
}

LayoutParams jittered_layout(int strands, std::uint64_t seed, int attempt) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL +
                      static_cast<std::uint64_t>(attempt));
  LayoutParams layout;
  for (int k = 1; k <= strands; ++k) {
    long j = static_cast<long>(rng() % 129) - 64;  // +-1/16 of the spacing
    layout.abscissas.push_back(Rat(k) + Rat(j, 1024));
  }
  long j = static_cast<long>(rng() % 65) - 32;
  layout.detour = Rat(1, 4) * (Rat(1) + Rat(j, 256));
  return layout;
}

GeometricBraid::Affine GeometricBraid::piece_fn(int strand, int piece) const {
  const Vec2& p0 = path[strand - 1][piece];
  const Vec2& p1 = path[strand - 1][piece + 1];
  Rat dt = grid[piece + 1] - grid[piece];
  Affine fn;
  fn.slope = {(p1.x - p0.x) / dt, (p1.y - p0.y) / dt};
  fn.base = {p0.x - fn.slope.x * grid[piece], p0.y - fn.slope.y * grid[piece]};
  return fn;
}

Vec2 GeometricBraid::velocity(int strand, int piece) const {
  return piece_fn(strand, piece).slope;
}

Vec2 GeometricBraid::position_at_breakpoint(int strand, int k) const {
  return path[strand - 1][k];
}

ExtVec2 GeometricBraid::position_ext(int strand, int piece,
                                     const QuadReal& t) const {
  Affine fn = piece_fn(strand, piece);
  ExtScalar tt = t.as_ext();
  return {tt * fn.slope.x + ExtScalar(fn.base.x),
          tt * fn.slope.y + ExtScalar(fn.base.y)};
}

namespace {

std::vector<Vec2> layout_points(int strands, const LayoutParams& layout) {
  if (layout.explicit_points) {
    const auto& pts = *layout.explicit_points;
    if (static_cast<int>(pts.size()) != strands)
      throw DegenerateLayoutError("explicit point count mismatch");
    return pts;
  }
  if (static_cast<int>(layout.abscissas.size()) != strands)
    throw DegenerateLayoutError("abscissa count mismatch");
  std::vector<Vec2> pts;
  for (const Rat& x : layout.abscissas) pts.push_back({x, x * x});
  return pts;
}

void check_initial_points(const std::vector<Vec2>& pts) {
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j])
        throw DegenerateLayoutError("coincident initial points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (det2(pts[j] - pts[i], pts[k] - pts[i]) == 0)
          throw DegenerateLayoutError("three initial points collinear");
  for (int i = 0; i + 1 < n; ++i)
    if (!(pts[i].x < pts[i + 1].x))
      throw DegenerateLayoutError("slot abscissas not increasing");
}

// Two affine paths coincide somewhere on [t0, t1]?
bool affine_paths_touch(const GeometricBraid::Affine& f,
                        const GeometricBraid::Affine& g, const Rat& t0,
                        const Rat& t1) {
  Vec2 b = f.base - g.base;
  Vec2 s = f.slope - g.slope;
  if (s.x == 0 && s.y == 0) return b.is_zero();
  Rat t;
  if (s.x != 0) {
    t = -b.x / s.x;
    if (b.y + s.y * t != 0) return false;
  } else {
    if (b.x != 0) return false;
    t = -b.y / s.y;
  }
  return t0 <= t && t <= t1;
}

}  // namespace

GeometricBraid realize_braid(const BraidWord& w, const LayoutParams& layout) {
  validate(w);
  std::vector<Vec2> pts = layout_points(w.strands, layout);
  check_initial_points(pts);

  GeometricBraid g;
  g.strands = w.strands;
  int L = static_cast<int>(w.letters.size());
  int breakpoints = L == 0 ? 2 : 2 * L + 1;
  g.grid.resize(breakpoints);
  for (int k = 0; k < breakpoints; ++k)
    g.grid[k] = L == 0 ? Rat(k) : Rat(k, 2 * L);

  g.path.assign(w.strands, std::vector<Vec2>(breakpoints));
  std::vector<int> strand_at(w.strands);
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int s = 1; s <= w.strands; ++s) {
    g.path[s - 1][0] = pts[s - 1];
    if (L == 0) g.path[s - 1][1] = pts[s - 1];
  }

  for (int j = 0; j < L; ++j) {
    int letter = w.letters[j];
    int i = std::abs(letter);
    int a = strand_at[i - 1];
    int b = strand_at[i];
    const Vec2& pa = pts[i - 1];
    const Vec2& pb = pts[i];
    Vec2 mid = (pa + pb) * Rat(1, 2);
    Vec2 offset = perp(pb - pa) * layout.detour;
    // Positive letters turn the pair counterclockwise about the midpoint.
    Vec2 wp_a = letter > 0 ? mid - offset : mid + offset;
    Vec2 wp_b = letter > 0 ? mid + offset : mid - offset;

    int k_mid = 2 * j + 1, k_end = 2 * j + 2;
    for (int s = 1; s <= w.strands; ++s) {
      g.path[s - 1][k_mid] = g.path[s - 1][k_mid - 1];
      g.path[s - 1][k_end] = g.path[s - 1][k_mid - 1];
    }
    g.path[a - 1][k_mid] = wp_a;
    g.path[a - 1][k_end] = pb;
    g.path[b - 1][k_mid] = wp_b;
    g.path[b - 1][k_end] = pa;
    std::swap(strand_at[i - 1], strand_at[i]);
  }

  // Strands must stay pairwise disjoint on every closed piece.
  for (int p = 0; p < g.piece_count(); ++p)
    for (int s = 1; s <= w.strands; ++s)
      for (int u = s + 1; u <= w.strands; ++u)
        if (affine_paths_touch(g.piece_fn(s, p), g.piece_fn(u, p), g.grid[p],
                               g.grid[p + 1]))
          throw DegenerateLayoutError("strands " + std::to_string(s) + "," +
                                      std::to_string(u) +
                                      " coincide in piece " +
                                      std::to_string(p));

  std::vector<int> perm = braid_permutation(w);
  for (int s = 1; s <= w.strands; ++s)
    if (!(g.path[s - 1].back() == pts[perm[s - 1] - 1]))
      throw SqError("internal: endpoint permutation mismatch");
  return g;
}

int event_sign(const Vec2& ac, const Vec2& b_velocity) {
  if (ac.is_zero()) throw TangencyError("zero AC vector");
  // det(AC, Oz, T_B) with rows (ac.x, ac.y, 0), (0, 0, 1),
  // (vel.x, vel.y, 1); cofactor expansion along the last column leaves
  // ac.y*vel.x - ac.x*vel.y.
  Rat reduced = ac.y * b_velocity.x - ac.x * b_velocity.y;
  int s = sign_of(reduced);
  if (s == 0) throw TangencyError("middle strand tangent to the surface");
  return s;
}

namespace {

struct TripleQuadratic {
  Rat a2, a1, a0;
};

TripleQuadratic collinearity_poly(const GeometricBraid& g, int piece, int a,
                                  int b, int c) {
  auto fa = g.piece_fn(a, piece), fb = g.piece_fn(b, piece),
       fc = g.piece_fn(c, piece);
  Vec2 ub = fb.base - fa.base, us = fb.slope - fa.slope;
  Vec2 wb = fc.base - fa.base, ws = fc.slope - fa.slope;
  return {det2(us, ws), det2(ub, ws) + det2(us, wb), det2(ub, wb)};
}

std::string triple_str(int a, int b, int c, int piece) {
  std::ostringstream os;
  os << "triple {" << a << "," << b << "," << c << "} piece " << piece;
  return os.str();
}

// middle strand of three exactly-collinear distinct points, or -1
int find_middle(const ExtVec2& pa, const ExtVec2& pb, const ExtVec2& pc,
                int a, int b, int c) {
  const ExtVec2* pos[3] = {&pa, &pb, &pc};
  int label[3] = {a, b, c};
  int middle = -1;
  for (int m = 0; m < 3; ++m) {
    const ExtVec2& pm = *pos[m];
    const ExtVec2& po1 = *pos[(m + 1) % 3];
    const ExtVec2& po2 = *pos[(m + 2) % 3];
    int s = ext_dot2(po1 - pm, po2 - pm).sign();
    if (s == 0) return -1;  // coincident points
    if (s < 0) {
      if (middle != -1) return -1;
      middle = label[m];
    }
  }
  return middle;
}

}  // namespace

std::vector<TrisecantEvent> enumerate_trisecants(const GeometricBraid& g) {
  std::vector<TrisecantEvent> events;
  for (int p = 0; p < g.piece_count(); ++p) {
    const Rat& t0 = g.grid[p];
    const Rat& t1 = g.grid[p + 1];
    for (int a = 1; a <= g.strands; ++a)
      for (int b = a + 1; b <= g.strands; ++b)
        for (int c = b + 1; c <= g.strands; ++c) {
          TripleQuadratic q = collinearity_poly(g, p, a, b, c);
          QuadraticRoots roots = solve_quadratic(q.a2, q.a1, q.a0);
          using Kind = QuadraticRoots::Kind;
          if (roots.kind == Kind::IdenticallyZero)
            throw GenericityFailure("identically collinear " +
                                    triple_str(a, b, c, p));
          if (roots.kind == Kind::NoRoot) continue;
          std::vector<QuadReal> candidates{roots.first};
          if (roots.kind == Kind::TwoRoots) candidates.push_back(roots.second);
          for (const QuadReal& t : candidates) {
            int lo = t.cmp(t0), hi = t.cmp(t1);
            if (lo < 0 || hi > 0) continue;
            if (lo == 0 || hi == 0)
              throw GenericityFailure("root at piece boundary, " +
                                      triple_str(a, b, c, p));
            if (roots.kind == Kind::DoubleRoot)
              throw GenericityFailure("tangency (double root) in " +
                                      triple_str(a, b, c, p));
            ExtVec2 pa = g.position_ext(a, p, t);
            ExtVec2 pb = g.position_ext(b, p, t);
            ExtVec2 pc = g.position_ext(c, p, t);
            int middle = find_middle(pa, pb, pc, a, b, c);
            if (middle < 0)
              throw GenericityFailure("degenerate betweenness in " +
                                      triple_str(a, b, c, p));
            TrisecantEvent e;
            e.time = t;
            e.piece = p;
            e.middle = middle;
            e.outer_a = middle == a ? b : a;
            e.outer_c = middle == c ? b : c;
            if (e.outer_a > e.outer_c) std::swap(e.outer_a, e.outer_c);
            // Crossing direction of the middle strand through the moving
            // surface: the derivative of the ordered collinearity
            // determinant det(B - A, C - A) at its simple root. Equals
            // det(AC, Oz, T_B) whenever the outer strands are at rest.
            int orient = middle == b ? 1 : -1;  // reorder (a,b,c) -> (A,B,C)
            int slope_sign = eval_quadratic(Rat(0), 2 * q.a2, q.a1, t).sign();
            e.sign = orient * slope_sign;
            if (e.sign == 0)
              throw GenericityFailure("tangency (vanishing crossing slope) in " +
                                      triple_str(a, b, c, p));
            events.push_back(std::move(e));
          }
        }
  }
  std::sort(events.begin(), events.end(),
            [](const TrisecantEvent& x, const TrisecantEvent& y) {
              return x.time.cmp(y.time) < 0;
            });
  for (size_t i = 0; i + 1 < events.size(); ++i)
    if (events[i].time == events[i + 1].time)
      throw GenericityFailure("equal event times: " + format_event(events[i]) +
                              " and " + format_event(events[i + 1]));
  return events;
}

GenericityReport check_genericity(const GeometricBraid& g,
                                  const std::vector<TrisecantEvent>& events) {
  GenericityReport report;
  auto flag = [&report](const std::string& msg) {
    report.pass = false;
    report.violations.push_back(msg);
  };
  for (size_t i = 0; i < events.size(); ++i)
    for (size_t j = i + 1; j < events.size(); ++j)
      if (events[i].time == events[j].time)
        flag("equal-time events: " + format_event(events[i]) + " / " +
             format_event(events[j]));
  for (const TrisecantEvent& e : events) {
    for (const Rat& bp : g.grid)
      if (e.time.cmp(bp) == 0) flag("event at slab boundary: " + format_event(e));
    int lo = std::min({e.outer_a, e.middle, e.outer_c});
    int hi = std::max({e.outer_a, e.middle, e.outer_c});
    int md = e.outer_a + e.middle + e.outer_c - lo - hi;
    TripleQuadratic q = collinearity_poly(g, e.piece, lo, md, hi);
    if (!eval_quadratic(q.a2, q.a1, q.a0, e.time).is_zero())
      flag("event time does not satisfy its quadratic: " + format_event(e));
    if (eval_quadratic(Rat(0), 2 * q.a2, q.a1, e.time).sign() == 0)
      flag("non-simple root: " + format_event(e));
    ExtVec2 plo = g.position_ext(e.outer_a, e.piece, e.time);
    ExtVec2 phi = g.position_ext(e.outer_c, e.piece, e.time);
    ExtVec2 pm = g.position_ext(e.middle, e.piece, e.time);
    if (ext_dot2(plo - pm, phi - pm).sign() >= 0)
      flag("middle not strictly between outers: " + format_event(e));
    ExtVec2 ac = phi - plo;
    for (int x = 1; x <= g.strands; ++x) {
      if (x == e.outer_a || x == e.outer_c || x == e.middle) continue;
      ExtVec2 px = g.position_ext(x, e.piece, e.time);
      if (ext_det2(ac, px - plo).sign() == 0)
        flag("quadrisecant: strand " + std::to_string(x) + " on the line of " +
             format_event(e));
    }
    if (e.sign != 1 && e.sign != -1) flag("bad sign: " + format_event(e));
  }
  return report;
}

Realized realize_generic(const BraidWord& w, std::uint64_t seed, int retries,
                         const LayoutParams* initial) {
  std::string last_failure;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    LayoutParams layout = (attempt == 0 && initial)
                              ? *initial
                              : jittered_layout(w.strands, seed, attempt);
    try {
      Realized out;
      out.braid = realize_braid(w, layout);
      out.events = enumerate_trisecants(out.braid);
      GenericityReport report = check_genericity(out.braid, out.events);
      if (!report.pass)
        throw GenericityFailure(report.violations.front());
      out.attempts = attempt + 1;
      return out;
    } catch (const DegenerateLayoutError& err) {
      last_failure = err.what();
    } catch (const GenericityFailure& err) {
      last_failure = err.what();
    }
  }
  throw GenericityExhausted("no generic realization of '" +
                            format_braid_word(w) + "' within " +
                            std::to_string(retries) + " retries; last: " +
                            last_failure);
}

GeometricBraid perturb_and_retry(const BraidWord& w, std::uint64_t seed,
                                 int retries, const LayoutParams* initial) {
  return realize_generic(w, seed, retries, initial).braid;
}

std::string format_event(const TrisecantEvent& e) {
  std::ostringstream os;
  os << "t=" << e.time.to_string() << " piece=" << e.piece << " triple=("
     << e.outer_a << "," << e.middle << "," << e.outer_c << ") sign="
     << (e.sign > 0 ? "+1" : "-1") << " surface={" << e.outer_a << ","
     << e.outer_c << "}";
  return os.str();
}

}  // namespace secantq
