#pragma once

#include <array>
#include <stdexcept>

#include "swfcheck/rational.hpp"

namespace swf {

// Pairwise verdict between two candidates, ordered W > T > L.
// Stored as the sign it corresponds to, so negation and comparison are free.
enum class RelOutcome : int { L = -1, T = 0, W = 1 };

constexpr RelOutcome negate(RelOutcome r) { return RelOutcome(-int(r)); }
constexpr bool rel_ge(RelOutcome a, RelOutcome b) { return int(a) >= int(b); }

constexpr char to_char(RelOutcome r) {
  return r == RelOutcome::W ? 'W' : (r == RelOutcome::T ? 'T' : 'L');
}

inline RelOutcome rel_from_char(char c) {
  switch (c) {
    case 'W': return RelOutcome::W;
    case 'T': return RelOutcome::T;
    case 'L': return RelOutcome::L;
    default: throw parse_error(std::string("bad outcome character '") + c + "'");
  }
}

// Sign map: W for positive, T for zero, L for negative.
inline RelOutcome phi(const Rat& x) { return RelOutcome(x.sign()); }

// A size-3 multiset of verdicts is consistent when some weak order on three
// candidates realises it around the triangle. The four consistent shapes are
// {W,W,L}, {W,T,L}, {W,L,L} and {T,T,T}; canonicalising by descending sort
// makes membership a handful of comparisons.
inline bool is_consistent(RelOutcome a, RelOutcome b, RelOutcome c) {
  std::array<int, 3> m{int(a), int(b), int(c)};
  if (m[0] < m[1]) std::swap(m[0], m[1]);
  if (m[1] < m[2]) std::swap(m[1], m[2]);
  if (m[0] < m[1]) std::swap(m[0], m[1]);
  const int W = 1, T = 0, L = -1;
  if (m[0] == W && m[1] == W && m[2] == L) return true;
  if (m[0] == W && m[1] == T && m[2] == L) return true;
  if (m[0] == W && m[1] == L && m[2] == L) return true;
  if (m[0] == T && m[1] == T && m[2] == T) return true;
  return false;
}

}  // namespace swf
