#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vcmax/conditions.hpp"
#include "vcmax/set_system.hpp"

namespace vcmax {

/// Dual hyperplane of a sample point: sample point x_i lies in the
/// positivity set of parameter a exactly when <normal, a> < offset, with
/// normal = (f1(x_i), ..., fn(x_i)) and offset = f0(x_i).
template <typename T>
struct DualHyperplane {
    std::vector<T> normal;
    T offset{};
    std::size_t source_index = 0;
};

using QHyperplane = DualHyperplane<Rational>;
using DHyperplane = DualHyperplane<double>;

std::vector<QHyperplane> dualize_exact(const DesignMatrix& dm);
std::vector<DHyperplane> dualize_approx(const DesignMatrix& dm);

/// One strict linear constraint: <normal, a> < offset when positive,
/// <normal, a> > offset otherwise.
template <typename T>
struct SignedConstraint {
    std::vector<T> normal;
    T offset{};
    bool positive = true;
};

enum class LpOutcome {
    Witness,       // a point satisfying every constraint strictly
    Empty,         // no such point
    Indeterminate  // approximate mode only: optimum too close to zero to call
};

template <typename T>
struct StrictFeasibility {
    LpOutcome outcome = LpOutcome::Empty;
    std::vector<T> witness;  // valid when outcome == Witness
    T margin{};              // solved slack bound t, capped at 1
};

/// Decides whether the open region cut out by the constraints is nonempty by
/// maximizing the common slack t (capped at 1) over (a, t).  Exact rational
/// simplex for T = Rational; the double instantiation reports Indeterminate
/// when the optimum lands inside the tolerance band.
template <typename T>
StrictFeasibility<T> strict_feasible(std::span<const SignedConstraint<T>> constraints,
                                     std::size_t dimension);

template <typename T>
struct Cell {
    std::uint64_t mask = 0;  // bit i = point i in the positivity set
    std::vector<T> witness;
    T margin{};
};

template <typename T>
struct CellEnumeration {
    std::size_t n_points = 0;
    std::size_t dimension = 0;
    std::vector<Cell<T>> cells;  // sorted lexicographically by sign vector
    bool certified = false;      // exact arithmetic and no indeterminate LP
    std::vector<std::size_t> degenerate_points;  // zero normal and zero offset

    SetSystem to_set_system() const;
};

/// Incremental insertion: each hyperplane splits exactly those cells whose
/// opposite side is strictly feasible.  Points whose dual hyperplane has a
/// zero normal get a constant side (never positive when the offset is zero
/// too; such points are reported as degenerate).
template <typename T>
CellEnumeration<T> enumerate_cells(std::span<const DualHyperplane<T>> hyperplanes);

/// Independent oracle: tries all 2^N sign vectors.  Refuses N > cap.
template <typename T>
CellEnumeration<T> brute_force_cells(std::span<const DualHyperplane<T>> hyperplanes,
                                     std::size_t cap = 15);

extern template StrictFeasibility<Rational> strict_feasible<Rational>(
    std::span<const SignedConstraint<Rational>>, std::size_t);
extern template StrictFeasibility<double> strict_feasible<double>(
    std::span<const SignedConstraint<double>>, std::size_t);
extern template CellEnumeration<Rational> enumerate_cells<Rational>(std::span<const QHyperplane>);
extern template CellEnumeration<double> enumerate_cells<double>(std::span<const DHyperplane>);
extern template CellEnumeration<Rational> brute_force_cells<Rational>(std::span<const QHyperplane>,
                                                                      std::size_t);
extern template CellEnumeration<double> brute_force_cells<double>(std::span<const DHyperplane>,
                                                                  std::size_t);
extern template struct CellEnumeration<Rational>;
extern template struct CellEnumeration<double>;

}  // namespace vcmax
