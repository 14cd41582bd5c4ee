#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "homint/modular.hpp"
#include "homint/point.hpp"
#include "homint/poly.hpp"
#include "homint/snf.hpp"

namespace homint {

// Points P_1..P_s (coprime entries) with target values a_1..a_s.
struct InterpolationInstance {
    PointSet points;
    std::vector<Int> targets;

    static InterpolationInstance make(std::vector<Point> pts, int n,
                                      std::vector<Int> targets);
    static InterpolationInstance all_ones(std::vector<Point> pts, int n);
    std::size_t size() const { return targets.size(); }
};

enum class Verdict {
    feasible,
    infeasible_at_degree,
    infeasible_all_degrees,
    unknown,
};

// Replayable evidence that a target is outside the image of M_d: the
// SNF diagonal together with the transformed target U*b and the index
// where the divisibility test fails.
struct SnfCertificate {
    std::uint64_t degree = 0;
    std::vector<Int> diagonal;
    std::vector<Int> transformed_target;
    long failure_index = -1;
};

// Evidence that the target is outside the image of M_d mod p for every
// degree d >= 1: the column set of M_d mod p is periodic in d with
// period T once d >= stabilization_degree, each residue class of d is
// checked through a representative, and smaller degrees are checked
// one by one.
struct PeriodicCertificate {
    Int prime;
    std::uint64_t period = 0;
    std::uint64_t stabilization_degree = 0;
    // (degree checked, target in image mod p) - all false by construction.
    std::vector<std::pair<std::uint64_t, bool>> class_checks;
    std::vector<std::pair<std::uint64_t, bool>> low_degree_checks;
};

struct Certificate {
    std::variant<SnfCertificate, PeriodicCertificate> body;

    bool is_snf() const { return std::holds_alternative<SnfCertificate>(body); }
    const SnfCertificate& snf() const { return std::get<SnfCertificate>(body); }
    const PeriodicCertificate& periodic() const {
        return std::get<PeriodicCertificate>(body);
    }
};

struct FeasibilityResult {
    Verdict verdict = Verdict::unknown;
    std::optional<std::uint64_t> degree;
    std::optional<HomogeneousPoly> witness;
    std::optional<Certificate> certificate;
};

// s x C(n+d-1, n-1) matrix; entry (i, alpha) is the degree-d monomial
// alpha evaluated at P_i, columns in graded-lex order.
IntMatrix eval_matrix(const std::vector<Point>& points, std::uint64_t d,
                      const std::optional<Int>& modulus = std::nullopt);

// Exact degree-d decision: a witness from the Diophantine solution, or
// an SNF non-membership certificate.
FeasibilityResult feasible_degree(const InterpolationInstance& inst,
                                  std::uint64_t d);

// Least feasible degree <= max_degree, with witness; unknown when the
// budget is exhausted. Per-degree certificates are collected when a
// sink is supplied.
FeasibilityResult min_degree(const InterpolationInstance& inst,
                             std::uint64_t max_degree,
                             std::vector<Certificate>* per_degree = nullptr);

// Searches the given primes for an all-degree modular obstruction.
// Absent means "no tested prime obstructs", never an unsound verdict.
std::optional<Certificate> periodic_obstruction(
    const InterpolationInstance& inst, const std::vector<Int>& primes,
    std::uint64_t stabilization_budget);

// Independent re-check of an emitted certificate (re-derivation from
// scratch).
bool replay_certificate(const InterpolationInstance& inst,
                        const Certificate& cert);

// Degree-1 form L with L(w) = 0 and L(v) != 0. Errors when v, w are
// scalar multiples.
HomogeneousPoly separating_form(const Point& v, const Point& w);

// f_v: product of separating forms, zero at every point of `others`,
// nonzero at v. Empty `others` degenerates to a degree-1 form with
// value 1 at v.
HomogeneousPoly vanishing_poly(const Point& v, const std::vector<Point>& others);

// Linear L with L(v) = 1, from iterated extended gcd. Requires coprime
// entries.
HomogeneousPoly unit_linear_form(const Point& v);

// Homogeneous U of the given degree with U(v) = 1 exactly and small
// coefficients; the high-degree replacement for powering L_v.
HomogeneousPoly unit_value_poly(const Point& v, std::uint64_t degree);

// Lower bound on the degree of any homogeneous f with f(v) = 1 on all
// points: lcm of the multiplicative orders of the ratios lambda, over
// prime powers q where two points satisfy v = lambda * w (mod q).
Int forced_degree_lower_bound(const PointSet& S);

class WitnessBudgetExceeded : public std::runtime_error {
  public:
    WitnessBudgetExceeded(const Int& required, std::uint64_t budget)
        : std::runtime_error("witness degree " + required.get_str() +
                             " exceeds budget " + std::to_string(budget)),
          required_degree_(required),
          budget_(budget) {}
    const Int& required_degree() const { return required_degree_; }
    std::uint64_t budget() const { return budget_; }

  private:
    Int required_degree_;
    std::uint64_t budget_;
};

struct WitnessOptions {
    // Hard cap on the degree of the returned polynomial. Some
    // coprime-point instances force astronomically large minimal
    // degrees; the cap turns those into a clean error instead of an
    // intractable computation.
    std::uint64_t degree_budget = 50000;
};

// The full constructive all-ones witness: nonconstant homogeneous f
// with f(Q) = 1 for every original point of S.
HomogeneousPoly construct_witness(const PointSet& S,
                                  const WitnessOptions& opts = {});

}  // namespace homint
