#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d3twist/coords.hpp"

namespace d3twist {

/// Generators of PMod(D3): the Dehn twists about c and d and their inverses.
enum class Generator { Tc, TcInv, Td, TdInv };

/// Half twists of B3 acting through the update rules.
enum class BraidLetter { S1, S1Inv, S2, S2Inv };

inline constexpr Generator kGenerators[] = {Generator::Tc, Generator::TcInv, Generator::Td, Generator::TdInv};
inline constexpr BraidLetter kBraidLetters[] = {BraidLetter::S1, BraidLetter::S1Inv, BraidLetter::S2,
                                                BraidLetter::S2Inv};

Generator inverse(Generator g);
BraidLetter inverse(BraidLetter l);

// "tc", "tc-", "td", "td-".
std::string_view to_string(Generator g);
Generator parse_generator(std::string_view text);
std::string_view to_string(BraidLetter l);

/// Sequence of generators in application order: letters[0] acts first.
/// The mapping class it names is the reversed composition.
struct TwistWord {
  std::vector<Generator> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  TwistWord inverse() const;
  bool is_freely_reduced() const;
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

std::string to_string(const TwistWord& w);

DynnikovCoord apply_braid(BraidLetter l, const DynnikovCoord& d);
DynnikovCoord apply_twist(Generator g, const DynnikovCoord& d);
DynnikovCoord apply_word(const TwistWord& w, const DynnikovCoord& d);

// Signature shared by apply_twist and the substitutes verification runs
// are allowed to plug in.
using TwistFn = std::function<DynnikovCoord(Generator, const DynnikovCoord&)>;

// Linearity regions of t_c. The same labels name the regions of t_d after
// the central symmetry d -> -d. Points on a boundary get the first
// matching label in the order A, B, C, D.
enum class Region { A, B, C, D };

std::string_view to_string(Region r);
Region tc_region(const DynnikovCoord& d);
// Region of t_c^{-1}'s input, i.e. which image region A'..D' contains d.
Region tc_image_region(const DynnikovCoord& d);

/// Tracks: broken lines O^c_n, O^d_n carrying the orbits of t_c and t_d.
enum class TrackFamily { C, D };

std::string_view to_string(TrackFamily f);
TrackFamily family_of(Generator g);

struct Track {
  TrackFamily family;
  Integer index;  // n; 0 for the degenerate track of a fixed point
  std::vector<DynnikovCoord> points;  // clockwise
};

/// Index n of the track of the given family through d, read off the
/// broken line shape: n = |a| on the flat side, |a| + |b| on the V side.
Integer track_index(const DynnikovCoord& d, TrackFamily family);

/// Points of the track through d as the image of the line q = n (family C)
/// or p = n (family D) under phi, clockwise, restricted to
/// max(|a|,|b|) <= window. A fixed point of the family's twist yields a
/// degenerate track holding only d.
Track track_of(const DynnikovCoord& d, TrackFamily family, const Integer& window);

/// One lattice jump along the track through d, clockwise or not. Fixed
/// points are returned unchanged.
DynnikovCoord jump(const DynnikovCoord& d, TrackFamily family, bool clockwise);

/// Moves `count` jumps along the track through d, a linear piece at a time.
DynnikovCoord jump_along(const DynnikovCoord& d, TrackFamily family, bool clockwise, Integer count);

/// The twist as 2n jumps along its track, clockwise for t_c and t_d,
/// counterclockwise for the inverses.
DynnikovCoord twist_via_jumps(Generator g, const DynnikovCoord& d);

}  // namespace d3twist
