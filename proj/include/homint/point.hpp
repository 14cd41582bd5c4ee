#pragma once

#include <cstddef>
#include <vector>

#include "homint/integer.hpp"

namespace homint {

// Integer point. Interpolation inputs additionally require the
// coordinates to have gcd 1 (primitive vector).
struct Point {
    std::vector<Int> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    bool has_coprime_entries() const;
    Point negated() const;

    bool operator==(const Point& other) const = default;
};

// A finite set of points of equal dimension, canonicalized for witness
// construction: each representative has its first nonzero coordinate
// positive, and no two representatives are equal (over Z with coprime
// entries, scalar multiples are exactly +-v). dedup_map records, for
// each original point, its representative and the sign that relates
// them.
class PointSet {
  public:
    struct OriginRef {
        std::size_t rep_index;
        int sign;  // +1 or -1: original == sign * representative
    };

    // Builds the canonical set. Requires every point to have the same
    // dimension n >= 1 and coprime entries.
    static PointSet canonicalize(std::vector<Point> points, int n);

    int dim() const { return n_; }
    const std::vector<Point>& representatives() const { return reps_; }
    const std::vector<Point>& originals() const { return originals_; }
    const std::vector<OriginRef>& dedup_map() const { return dedup_; }
    bool empty() const { return originals_.empty(); }

    // True when some original point is the negative of its
    // representative (forces even witness degree).
    bool has_negated_original() const;

  private:
    int n_ = 1;
    std::vector<Point> originals_;
    std::vector<Point> reps_;
    std::vector<OriginRef> dedup_;
};

}  // namespace homint
