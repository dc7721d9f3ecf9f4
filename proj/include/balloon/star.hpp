#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balloon/errors.hpp"

namespace balloon {

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Tolerance used for the "normalized" flag and for evenness checks.
inline constexpr double kAngleTol = 1e-9;

// The two sub-wedges on either side of the ray to one child.
struct SubWedgePair {
    double w0 = 0.0;
    double w1 = 0.0;

    double sum() const { return w0 + w1; }
    double side(int s) const { return s == 0 ? w0 : w1; }
    bool even(double tol = kAngleTol) const {
        double d = w0 - w1;
        return d <= tol && d >= -tol;
    }
};

// The four optimization settings. C1: unordered, even sub-wedges (flips are
// no-ops). C2: child order fixed, flips free. C3: order free, flips fixed
// (the stored w0/w1 orientation is the given one, i.e. t = all-zero).
// C4: both free.
enum class CaseTag { C1, C2, C3, C4 };

const char* to_string(CaseTag c);
std::optional<CaseTag> case_from_string(std::string_view s);

// One internal node's children with their sub-wedge pairs.
struct StarInstance {
    std::vector<SubWedgePair> children;
    CaseTag case_tag = CaseTag::C4;
    bool normalized = false;  // sum of all sub-wedges == 2*pi within kAngleTol

    int n() const { return static_cast<int>(children.size()); }
    double total() const;
    double wedge(int child, int s) const { return children[child].side(s); }
    bool all_even(double tol = kAngleTol) const;
};

// Throws InvalidArgumentError unless the instance satisfies its case's
// structural invariants (n >= 1, nonnegative wedges, C1 evenness,
// normalized flag consistent with the actual total).
void validate_star(const StarInstance& star);

// Uniformly rescales so the sub-wedges sum to exactly 2*pi. Scaling does not
// change any argmin/argmax of the four metrics, so optimal solutions carry
// over. Throws DegenerateInstanceError when the total is zero.
StarInstance normalize(const StarInstance& star);

// Circular ordering of the children: order[p] is the child drawn at position
// p, counterclockwise, with position n-1 adjacent to position 0.
struct CircularOrdering {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    int at(int pos) const { return order[pos]; }
    static CircularOrdering identity(int n);
};

// True iff `order` is a permutation of 0..n-1.
bool is_permutation(const CircularOrdering& sigma, int n);

// Per-child flip bits: bit(c) picks which of child c's sub-wedges comes first
// in the counterclockwise traversal. Indexed by child, not by position.
struct FlipAssignment {
    std::vector<std::uint8_t> bits;

    int size() const { return static_cast<int>(bits.size()); }
    int bit(int child) const { return bits[child]; }
    int flipped(int child) const { return 1 - bits[child]; }
    static FlipAssignment zeros(int n);
};

// Rewrites (sigma, t) into the canonical representative of its symmetry
// class: sigma rotated to start at child 0, and (for cases whose metrics are
// reflection-invariant: C1, C4) reflected with t complemented when that is
// lexicographically smaller. C2 keeps the identity ordering; C3 only rotates.
void canonicalize(CaseTag case_tag, CircularOrdering& sigma, FlipAssignment& t);

// Lexicographic (sigma, then t) comparison used for deterministic tie-breaks.
bool lex_less(const CircularOrdering& sa, const FlipAssignment& ta,
              const CircularOrdering& sb, const FlipAssignment& tb);

}  // namespace balloon
