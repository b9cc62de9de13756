#include "d3twist/actions.hpp"

#include <algorithm>
#include <sstream>

namespace d3twist {
namespace {

Integer max3(const Integer& x, const Integer& y, const Integer& z) { return std::max({x, y, z}); }

Integer pos(const Integer& x) { return x > 0 ? x : Integer(0); }

// Closed forms of t_c and its inverse. t_d is conjugate to t_c by the
// central symmetry: t_d(v) = -t_c(-v).
DynnikovCoord tc(const DynnikovCoord& d) {
  const auto& [a, b] = d;
  switch (tc_region(d)) {
    case Region::A: return {b - a, -b};
    case Region::B: return {b - a, b - 2 * a};
    case Region::C: return {a, b - 2 * a};
    case Region::D: return {a + b, -2 * a - b};
  }
  return d;
}

// Each branch inverts the matching branch of tc() on its image region.
DynnikovCoord tc_inv(const DynnikovCoord& d) {
  const auto& [a, b] = d;
  switch (tc_image_region(d)) {
    case Region::A: return {-a - b, -b};
    case Region::B: return {a - b, 2 * a - b};
    case Region::C: return {a, b + 2 * a};
    case Region::D: return {-a - b, 2 * a + b};
  }
  return d;
}

// Clockwise motion along O^c_n for n > 0. The track is the ray a = n (b >= 0)
// going down, the V through (n,0), (0,-n), (-n,0), then the ray a = -n
// going up. A piece is the linear stretch d sits on: the unit step and how
// many steps fit before the next corner.
struct Piece {
  Integer room;  // 0: unbounded
  Integer da, db;
};

Piece clockwise_piece_c(const DynnikovCoord& d, const Integer& n) {
  const auto& [a, b] = d;
  if (a == n && b > 0) return {b, 0, -1};
  if (b <= 0 && a > 0) return {a, -1, -1};
  if (b <= 0 && a <= 0 && a > -n) return {a + n, -1, 1};
  return {0, 0, 1};  // a == -n, b >= 0
}

// Mirroring a -> -a maps O^c_n onto itself with the orientation reversed.
DynnikovCoord mirror(const DynnikovCoord& d) { return {-d.a, d.b}; }

DynnikovCoord jump_along_c(DynnikovCoord d, bool clockwise, Integer count) {
  const Integer n = track_index(d, TrackFamily::C);
  if (n == 0) return d;
  if (!clockwise) return mirror(jump_along_c(mirror(d), true, count));
  while (count > 0) {
    Piece piece = clockwise_piece_c(d, n);
    Integer k = (piece.room == 0) ? count : std::min(count, piece.room);
    d.a += k * piece.da;
    d.b += k * piece.db;
    count -= k;
  }
  return d;
}

}  // namespace

Generator inverse(Generator g) {
  switch (g) {
    case Generator::Tc: return Generator::TcInv;
    case Generator::TcInv: return Generator::Tc;
    case Generator::Td: return Generator::TdInv;
    case Generator::TdInv: return Generator::Td;
  }
  return g;
}

BraidLetter inverse(BraidLetter l) {
  switch (l) {
    case BraidLetter::S1: return BraidLetter::S1Inv;
    case BraidLetter::S1Inv: return BraidLetter::S1;
    case BraidLetter::S2: return BraidLetter::S2Inv;
    case BraidLetter::S2Inv: return BraidLetter::S2;
  }
  return l;
}

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::Tc: return "tc";
    case Generator::TcInv: return "tc-";
    case Generator::Td: return "td";
    case Generator::TdInv: return "td-";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  for (Generator g : kGenerators) {
    if (to_string(g) == text) return g;
  }
  throw InvalidInput("unknown generator '" + std::string(text) + "' (expected tc, tc-, td or td-)");
}

std::string_view to_string(BraidLetter l) {
  switch (l) {
    case BraidLetter::S1: return "s1";
    case BraidLetter::S1Inv: return "s1-";
    case BraidLetter::S2: return "s2";
    case BraidLetter::S2Inv: return "s2-";
  }
  return "?";
}

TwistWord TwistWord::inverse() const {
  TwistWord w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(d3twist::inverse(*it));
  return w;
}

bool TwistWord::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == d3twist::inverse(letters[i - 1])) return false;
  }
  return true;
}

std::string to_string(const TwistWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w.letters[i]);
  }
  return out;
}

DynnikovCoord apply_braid(BraidLetter l, const DynnikovCoord& d) {
  require_nonzero(d, "apply_braid");
  const auto& [a, b] = d;
  switch (l) {
    case BraidLetter::S1: return {a + b - max3(0, a, b), pos(b) - a};
    case BraidLetter::S1Inv: return {pos(a + pos(b)) - b, a + pos(b)};
    case BraidLetter::S2: return {std::max<Integer>(a + pos(b), b), b - (a + pos(b))};
    case BraidLetter::S2Inv: return {a - max3(a + b, 0, b), a + b - pos(b)};
  }
  return d;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::D: return "D";
  }
  return "?";
}

Region tc_region(const DynnikovCoord& d) {
  const auto& [a, b] = d;
  if (a >= 0 && b <= a) return Region::A;
  if (a >= 0 && a <= b && b <= 2 * a) return Region::B;
  if (2 * a <= b && b >= 0) return Region::C;
  return Region::D;  // a <= 0, b <= 0
}

Region tc_image_region(const DynnikovCoord& d) {
  const auto& [a, b] = d;
  if (a <= 0 && a + b <= 0) return Region::A;
  if (a >= 0 && b <= 0) return Region::B;
  if (b >= 0 && b + 2 * a >= 0) return Region::C;
  return Region::D;  // a + b >= 0, 2a + b <= 0
}

DynnikovCoord apply_twist(Generator g, const DynnikovCoord& d) {
  require_nonzero(d, "apply_twist");
  switch (g) {
    case Generator::Tc: return tc(d);
    case Generator::TcInv: return tc_inv(d);
    case Generator::Td: return -tc(-d);
    case Generator::TdInv: return -tc_inv(-d);
  }
  return d;
}

DynnikovCoord apply_word(const TwistWord& w, const DynnikovCoord& d) {
  require_nonzero(d, "apply_word");
  DynnikovCoord cur = d;
  for (Generator g : w.letters) cur = apply_twist(g, cur);
  return cur;
}

std::string_view to_string(TrackFamily f) { return f == TrackFamily::C ? "c" : "d"; }

TrackFamily family_of(Generator g) {
  return (g == Generator::Tc || g == Generator::TcInv) ? TrackFamily::C : TrackFamily::D;
}

Integer track_index(const DynnikovCoord& d, TrackFamily family) {
  if (family == TrackFamily::D) return track_index(-d, TrackFamily::C);
  return d.b >= 0 ? abs(d.a) : abs(d.a) - d.b;
}

Track track_of(const DynnikovCoord& d, TrackFamily family, const Integer& window) {
  require_nonzero(d, "track_of");
  if (window < 0) throw InvalidInput("track_of: window must be nonnegative");
  TorusCoord lift = phi_inverse(d);
  Integer n = abs(family == TrackFamily::C ? lift.q : lift.p);
  Track track{family, n, {}};
  if (n == 0) {
    track.points.push_back(d);
    return track;
  }
  auto inside = [&](const DynnikovCoord& x) { return abs(x.a) <= window && abs(x.b) <= window; };
  // t_c adds 2n to p on the line q = n; t_d subtracts 2n from q on p = n.
  const Integer span = n + window;
  for (Integer s = -span; s <= span; ++s) {
    DynnikovCoord x = family == TrackFamily::C ? phi({s, n}) : phi({n, -s});
    if (inside(x)) track.points.push_back(std::move(x));
  }
  return track;
}

DynnikovCoord jump(const DynnikovCoord& d, TrackFamily family, bool clockwise) {
  return jump_along(d, family, clockwise, 1);
}

DynnikovCoord jump_along(const DynnikovCoord& d, TrackFamily family, bool clockwise, Integer count) {
  require_nonzero(d, "jump_along");
  if (count < 0) throw InvalidInput("jump_along: negative jump count");
  if (family == TrackFamily::D) return -jump_along_c(-d, clockwise, std::move(count));
  return jump_along_c(d, clockwise, std::move(count));
}

DynnikovCoord twist_via_jumps(Generator g, const DynnikovCoord& d) {
  require_nonzero(d, "twist_via_jumps");
  TrackFamily family = family_of(g);
  Integer n = track_index(d, family);
  bool clockwise = g == Generator::Tc || g == Generator::Td;
  return jump_along(d, family, clockwise, 2 * n);
}

}  // namespace d3twist
