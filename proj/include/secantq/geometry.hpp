#pragma once

#include "secantq/braid_word.hpp"
#include "secantq/numeric.hpp"
#include "secantq/quad_real.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace secantq {

// Layout of the realization: initial points (x_k, x_k^2) on a parabola arc
// (strictly convex, rational, no three collinear) and the detour magnitude
// as a fraction of the slot spacing. `explicit_points` overrides the
// parabola when set.
struct LayoutParams {
  std::vector<Rat> abscissas;
  Rat detour = Rat(1, 4);
  std::optional<std::vector<Vec2>> explicit_points;
};

LayoutParams default_layout(int strands);
LayoutParams jittered_layout(int strands, std::uint64_t seed, int attempt);

// Piecewise-linear motion of the strand points over a shared breakpoint
// grid. Each word letter occupies one slab split at its midpoint, so every
// strand is affine in t on every piece.
struct GeometricBraid {
  int strands = 0;
  std::vector<Rat> grid;                // 2L+1 breakpoints (or {0,1})
  std::vector<std::vector<Vec2>> path;  // [strand-1][grid index]

  int piece_count() const { return static_cast<int>(grid.size()) - 1; }

  struct Affine {
    Vec2 base;
    Vec2 slope;  // position(t) = base + slope*t, velocity = slope
  };
  Affine piece_fn(int strand, int piece) const;
  Vec2 velocity(int strand, int piece) const;
  Vec2 position_at_breakpoint(int strand, int k) const;
  ExtVec2 position_ext(int strand, int piece, const QuadReal& t) const;
};

GeometricBraid realize_braid(const BraidWord& w, const LayoutParams& layout);

// One transverse collinearity: at `time` the middle strand lies strictly
// between the two outer strands; `sign` is for the reading outer_a -> outer_c
// with the middle tangent taken along increasing t.
struct TrisecantEvent {
  QuadReal time;
  int piece = 0;
  int outer_a = 0;  // outer_a < outer_c
  int middle = 0;
  int outer_c = 0;
  int sign = 0;
};

// Sign of det(AC, Oz, T_B) with T_B = (b_velocity, 1), reduced to two
// dimensions; throws TangencyError when it vanishes.
int event_sign(const Vec2& ac, const Vec2& b_velocity);

std::vector<TrisecantEvent> enumerate_trisecants(const GeometricBraid& g);

struct GenericityReport {
  bool pass = true;
  std::vector<std::string> violations;
};

GenericityReport check_genericity(const GeometricBraid& g,
                                  const std::vector<TrisecantEvent>& events);

struct Realized {
  GeometricBraid braid;
  std::vector<TrisecantEvent> events;
  int attempts = 1;
};

// Realize with deterministic seed-driven layouts, retrying on genericity
// failures up to `retries` extra attempts.
Realized realize_generic(const BraidWord& w, std::uint64_t seed,
                         int retries = 5,
                         const LayoutParams* initial = nullptr);

GeometricBraid perturb_and_retry(const BraidWord& w, std::uint64_t seed,
                                 int retries = 5,
                                 const LayoutParams* initial = nullptr);

std::string format_event(const TrisecantEvent& e);

}  // namespace secantq
