#include "balloon/star.hpp"

#include <algorithm>
#include <cmath>

namespace balloon {

const char* to_string(CaseTag c) {
    switch (c) {
        case CaseTag::C1: return "C1";
        case CaseTag::C2: return "C2";
        case CaseTag::C3: return "C3";
        case CaseTag::C4: return "C4";
    }
    return "?";
}

std::optional<CaseTag> case_from_string(std::string_view s) {
    if (s == "C1" || s == "c1") return CaseTag::C1;
    if (s == "C2" || s == "c2") return CaseTag::C2;
    if (s == "C3" || s == "c3") return CaseTag::C3;
    if (s == "C4" || s == "c4") return CaseTag::C4;
    return std::nullopt;
}

double StarInstance::total() const {
    double s = 0.0;
    for (const auto& c : children) s += c.sum();
    return s;
}

bool StarInstance::all_even(double tol) const {
    return std::all_of(children.begin(), children.end(),
                       [tol](const SubWedgePair& p) { return p.even(tol); });
}

void validate_star(const StarInstance& star) {
    if (star.children.empty())
        throw InvalidArgumentError("star instance needs at least one child");
    for (int i = 0; i < star.n(); ++i) {
        const auto& p = star.children[i];
        if (!(p.w0 >= 0.0) || !(p.w1 >= 0.0) || !std::isfinite(p.w0) ||
            !std::isfinite(p.w1))
            throw InvalidArgumentError("sub-wedges of child " +
                                       std::to_string(i) +
                                       " must be finite and >= 0");
    }
    if (star.case_tag == CaseTag::C1 && !star.all_even())
        throw InvalidArgumentError("C1 instance has an uneven sub-wedge pair");
    if (star.normalized && std::abs(star.total() - kTwoPi) > kAngleTol)
        throw InvalidArgumentError(
            "instance flagged normalized but sub-wedges do not sum to 2*pi");
}

StarInstance normalize(const StarInstance& star) {
    double total = star.total();
    if (!(total > 0.0))
        throw DegenerateInstanceError("cannot normalize: total wedge size is zero");
    StarInstance out = star;
    const double scale = kTwoPi / total;
    for (auto& c : out.children) {
        c.w0 *= scale;
        c.w1 *= scale;
    }
    out.normalized = true;
    return out;
}

CircularOrdering CircularOrdering::identity(int n) {
    CircularOrdering s;
    s.order.resize(n);
    for (int i = 0; i < n; ++i) s.order[i] = i;
    return s;
}

bool is_permutation(const CircularOrdering& sigma, int n) {
    if (sigma.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int c : sigma.order) {
        if (c < 0 || c >= n || seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

FlipAssignment FlipAssignment::zeros(int n) {
    FlipAssignment t;
    t.bits.assign(n, 0);
    return t;
}

bool lex_less(const CircularOrdering& sa, const FlipAssignment& ta,
              const CircularOrdering& sb, const FlipAssignment& tb) {
    if (sa.order != sb.order) return sa.order < sb.order;
    return ta.bits < tb.bits;
}

namespace {

// Rotate so child 0 sits at position 0.
void rotate_to_zero(CircularOrdering& sigma) {
    auto it = std::find(sigma.order.begin(), sigma.order.end(), 0);
    if (it != sigma.order.end())
        std::rotate(sigma.order.begin(), it, sigma.order.end());
}

}  // namespace

void canonicalize(CaseTag case_tag, CircularOrdering& sigma, FlipAssignment& t) {
    if (case_tag == CaseTag::C2) return;  // ordering is fixed to the identity
    rotate_to_zero(sigma);
    if (case_tag == CaseTag::C3) return;  // flips fixed: reflection not free

    // C1/C4: the mirror drawing is (sigma reversed, t complemented); pick the
    // lexicographically smaller representative. For C1 flips are no-ops and
    // are normalized to zero instead.
    CircularOrdering refl = sigma;
    std::reverse(refl.order.begin() + 1, refl.order.end());
    FlipAssignment trefl = t;
    if (case_tag == CaseTag::C1) {
        t = FlipAssignment::zeros(t.size());
        trefl = t;
    } else {
        for (auto& b : trefl.bits) b = static_cast<std::uint8_t>(1 - b);
    }
    if (lex_less(refl, trefl, sigma, t)) {
        sigma = std::move(refl);
        t = std::move(trefl);
    }
}

}  // namespace balloon
