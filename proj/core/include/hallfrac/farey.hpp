#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hallfrac/rational.hpp"

namespace hallfrac {

/// Farey series F_n: every reduced p/q in [0, 1] with q <= n, ascending.
struct FareySequence {
  std::uint32_t order = 0;
  std::vector<Fraction> elements;
};

/// Builds F_n with the next-term recurrence seeded by (0/1, 1/n).
/// Throws Error(InvalidOrder) for n == 0.
FareySequence generate_farey(std::uint32_t n);

/// First failing adjacent pair (P1) or triple (P2). `index` is the
/// position of the first element of the pair/triple.
struct Violation {
  std::size_t index = 0;
  std::vector<Fraction> values;
};

struct PropertyCheck {
  bool holds = true;
  std::size_t checked = 0;     ///< pairs or triples examined
  std::size_t violations = 0;  ///< total failures, not just the first
  std::optional<Violation> first;
};

/// P1: |p2*q1 - q2*p1| == 1 for every adjacent pair.
PropertyCheck verify_p1(std::span<const Fraction> seq);
inline PropertyCheck verify_p1(const FareySequence& seq) { return verify_p1(seq.elements); }

/// P2: the middle of every consecutive triple is the mediant of its
/// neighbours. Sequences shorter than three hold vacuously.
PropertyCheck verify_p2(std::span<const Fraction> seq);
inline PropertyCheck verify_p2(const FareySequence& seq) { return verify_p2(seq.elements); }

/// P3: returns the mediant of the neighbours a and b of `seq` after
/// certifying, by scanning every denominator up to q1 + q2, that nothing
/// strictly between them has a smaller denominator and that the mediant is
/// the only fraction there with denominator q1 + q2.
///
/// Throws Error(NotAdjacent) if a and b are not consecutive in `seq` (in
/// either order) or the certificate fails.
Fraction verify_p3(const FareySequence& seq, const Fraction& a, const Fraction& b);

}  // namespace hallfrac
