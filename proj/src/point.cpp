#include "homint/point.hpp"

#include <stdexcept>

namespace homint {

bool Point::is_zero() const {
    for (const Int& c : coords)
        if (c != 0) return false;
    return true;
}

bool Point::has_coprime_entries() const {
    return gcd_all(coords) == 1;
}

Point Point::negated() const {
    Point p;
    p.coords.reserve(coords.size());
    for (const Int& c : coords) p.coords.push_back(-c);
    return p;
}

PointSet PointSet::canonicalize(std::vector<Point> points, int n) {
    if (n < 1) throw std::invalid_argument("point set dimension must be >= 1");
    PointSet s;
    s.n_ = n;
    for (const Point& p : points) {
        if (p.dim() != n)
            throw std::invalid_argument("point set has mixed dimensions");
        if (!p.has_coprime_entries())
            throw std::invalid_argument("point entries are not coprime");
    }
    s.originals_ = std::move(points);
    for (const Point& p : s.originals_) {
        int sign = 1;
        for (const Int& c : p.coords) {
            if (c != 0) {
                if (c < 0) sign = -1;
                break;
            }
        }
        Point rep = sign == 1 ? p : p.negated();
        std::size_t idx = s.reps_.size();
        for (std::size_t i = 0; i < s.reps_.size(); ++i) {
            if (s.reps_[i] == rep) {
                idx = i;
                break;
            }
        }
        if (idx == s.reps_.size()) s.reps_.push_back(std::move(rep));
        s.dedup_.push_back(OriginRef{idx, sign});
    }
    return s;
}

bool PointSet::has_negated_original() const {
    for (const auto& ref : dedup_)
        if (ref.sign == -1) return true;
    return false;
}

}  // namespace homint
