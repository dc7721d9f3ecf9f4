#pragma once

#include "balloon/bipartite.hpp"
#include "balloon/metrics.hpp"

namespace balloon {

// Ascending multiset view with the m_i / M_i / mid labelling used by the
// solvers: m(i) is the i-th minimum, M(i) the i-th maximum (both 1-based),
// mid the median when the count is odd. Entries keep their provenance;
// duplicates are ordered by child then side, so labels are deterministic.
struct SortedWedgeView {
    struct Entry {
        double value;
        int child;
        int side;  // -1 for whole-wedge sums
    };
    std::vector<Entry> ascending;

    int count() const { return static_cast<int>(ascending.size()); }
    int pairs() const { return count() / 2; }
    const Entry& m(int i) const { return ascending[i - 1]; }
    const Entry& M(int i) const { return ascending[count() - i]; }
    const Entry& mid() const { return ascending[count() / 2]; }
};

// One entry per child, valued by its wedge sum w0+w1 (for even instances).
SortedWedgeView sorted_wedge_sums(const StarInstance& star);

// All 2n sub-wedges.
SortedWedgeView sorted_sub_wedges(const StarInstance& star);

// Standard-deviation optimum for even unordered stars (C1), via the zigzag
// ordering that interleaves large and small wedges: grow the sequence
// S_1 = (m_1, M_1), S_i = (M_i, S_{i-1}, m_i) for even i and
// (m_i, S_{i-1}, M_i) for odd i, append the median for odd n. O(n log n).
Solution solve_de1(const StarInstance& star);

// Angular resolution with the child order fixed and only flips free (C2).
// Linear DP over the chain with the four (first flip, current flip) boundary
// states.
Solution solve_re2(const StarInstance& star);

// Aspect ratio for C2: tries each of the <= 4n candidate largest angles and
// runs the RE2-style DP constrained to never exceed the candidate; infeasible
// candidates are skipped. O(n^2).
Solution solve_ra2(const StarInstance& star);

// Standard deviation for C2 via the minimum sum of adjacent sub-wedge
// products (same DP shape as RE2 with min-plus-product transitions). O(n).
Solution solve_de2(const StarInstance& star);

// Angular resolution for unordered cases (C3, C4, and even C1 instances)
// via the bipartite sorted-merge matching. O(n log n).
Solution solve_re3_re4(const StarInstance& star);

}  // namespace balloon
