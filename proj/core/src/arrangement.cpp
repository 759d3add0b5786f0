#include "vcmax/arrangement.hpp"

#include <algorithm>

#include "vcmax/errors.hpp"
#include "vcmax/lp.hpp"

namespace vcmax {

std::vector<QHyperplane> dualize_exact(const DesignMatrix& dm) {
    if (dm.mode != Mode::Exact) throw InvalidInputError("exact dualization needs an exact design matrix");
    std::vector<QHyperplane> out(dm.sample_size);
    for (std::size_t i = 0; i < dm.sample_size; ++i) {
        out[i].normal.resize(dm.basis_size);
        for (std::size_t j = 0; j < dm.basis_size; ++j) out[i].normal[j] = dm.exact.at(i, j);
        out[i].offset = dm.exact.at(i, dm.basis_size);
        out[i].source_index = i;
    }
    return out;
}

std::vector<DHyperplane> dualize_approx(const DesignMatrix& dm) {
    std::vector<DHyperplane> out(dm.sample_size);
    for (std::size_t i = 0; i < dm.sample_size; ++i) {
        out[i].normal.resize(dm.basis_size);
        for (std::size_t j = 0; j < dm.basis_size; ++j) {
            out[i].normal[j] =
                dm.mode == Mode::Exact ? dm.exact.at(i, j).to_double() : dm.approx.at(i, j);
        }
        out[i].offset = dm.mode == Mode::Exact ? dm.exact.at(i, dm.basis_size).to_double()
                                               : dm.approx.at(i, dm.basis_size);
        out[i].source_index = i;
    }
    return out;
}

namespace {

// Indeterminate band for the double LP: optima below kEmptyTol are treated
// as empty, above kWitnessTol as witnesses, anything between is undecidable
// at floating precision.
constexpr double kEmptyTol = 1e-10;
constexpr double kWitnessTol = 1e-7;

template <typename T>
bool all_zero_normal(const DualHyperplane<T>& h) {
    for (const T& v : h.normal) {
        if (!LpTraits<T>::is_zero(v)) return false;
    }
    return true;
}

// Rescales each hyperplane by a positive rational so its coefficients become
// coprime integers; the cell structure is scale-invariant and the integer
// simplex runs much faster on small coprime inputs.
template <typename T>
std::vector<DualHyperplane<T>> normalize_planes(std::span<const DualHyperplane<T>> hs) {
    std::vector<DualHyperplane<T>> out(hs.begin(), hs.end());
    if constexpr (std::is_same_v<T, Rational>) {
        for (auto& h : out) {
            BigInt l = h.offset.denominator();
            for (const Rational& w : h.normal) l = boost::multiprecision::lcm(l, w.denominator());
            BigInt g = 0;
            auto scaled = [&](const Rational& v) { return v.numerator() * (l / v.denominator()); };
            for (const Rational& w : h.normal) g = boost::multiprecision::gcd(g, scaled(w));
            g = boost::multiprecision::gcd(g, scaled(h.offset));
            if (g == 0) g = 1;
            for (Rational& w : h.normal) w = Rational(scaled(w) / g);
            h.offset = Rational(scaled(h.offset) / g);
        }
    }
    return out;
}

// Classifies the LP optimum t*: strictly positive -> witness.
template <typename T>
StrictFeasibility<T> classify(const LpResult<T>& lp, std::size_t dimension);

template <>
StrictFeasibility<Rational> classify(const LpResult<Rational>& lp, std::size_t dimension) {
    StrictFeasibility<Rational> out;
    if (lp.status == LpStatus::Infeasible) return out;
    if (lp.status == LpStatus::Unbounded) {
        throw std::logic_error("slack LP cannot be unbounded (t is capped)");
    }
    if (lp.objective.sign() <= 0) return out;
    out.outcome = LpOutcome::Witness;
    out.margin = lp.objective;
    out.witness.resize(dimension);
    for (std::size_t j = 0; j < dimension; ++j) {
        out.witness[j] = lp.solution[j] - lp.solution[dimension + j];
    }
    return out;
}

template <>
StrictFeasibility<double> classify(const LpResult<double>& lp, std::size_t dimension) {
    StrictFeasibility<double> out;
    if (lp.status == LpStatus::Infeasible) return out;
    if (lp.status == LpStatus::Unbounded) {
        out.outcome = LpOutcome::Indeterminate;
        return out;
    }
    if (lp.objective <= kEmptyTol) return out;
    if (lp.objective < kWitnessTol) {
        out.outcome = LpOutcome::Indeterminate;
        return out;
    }
    out.outcome = LpOutcome::Witness;
    out.margin = lp.objective;
    out.witness.resize(dimension);
    for (std::size_t j = 0; j < dimension; ++j) {
        out.witness[j] = lp.solution[j] - lp.solution[dimension + j];
    }
    return out;
}

}  // namespace

template <typename T>
StrictFeasibility<T> strict_feasible(std::span<const SignedConstraint<T>> constraints,
                                     std::size_t dimension) {
    // Variables: a = u - v with u, v >= 0, plus the slack bound t >= 0.
    // positive constraint:  <w, a> + t <= offset
    // negative constraint: -<w, a> + t <= -offset
    // and t <= 1 caps the objective.
    const std::size_t n_vars = 2 * dimension + 1;
    const std::size_t m = constraints.size() + 1;
    Matrix<T> A(m, n_vars);
    std::vector<T> b(m);
    std::vector<T> c(n_vars, T{});
    c[2 * dimension] = T(1);

    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const SignedConstraint<T>& sc = constraints[i];
        if (sc.normal.size() != dimension) throw DimensionError("constraint dimension mismatch");
        for (std::size_t j = 0; j < dimension; ++j) {
            const T w = sc.positive ? sc.normal[j] : -sc.normal[j];
            A.at(i, j) = w;
            A.at(i, dimension + j) = -w;
        }
        A.at(i, 2 * dimension) = T(1);
        b[i] = sc.positive ? sc.offset : -sc.offset;
    }
    A.at(m - 1, 2 * dimension) = T(1);
    b[m - 1] = T(1);

    return classify<T>(simplex_max(A, b, c), dimension);
}

namespace {

template <typename T>
std::vector<SignedConstraint<T>> cell_constraints(std::span<const DualHyperplane<T>> hs,
                                                  std::span<const std::size_t> active,
                                                  std::uint64_t mask) {
    std::vector<SignedConstraint<T>> cs;
    cs.reserve(active.size());
    for (std::size_t idx : active) {
        SignedConstraint<T> sc;
        sc.normal = hs[idx].normal;
        sc.offset = hs[idx].offset;
        sc.positive = ((mask >> idx) & 1u) != 0;
        cs.push_back(std::move(sc));
    }
    return cs;
}

template <typename T>
void sort_cells(std::vector<Cell<T>>& cells) {
    std::sort(cells.begin(), cells.end(),
              [](const Cell<T>& a, const Cell<T>& b) { return lex_mask_less(a.mask, b.mask); });
}

}  // namespace

template <typename T>
SetSystem CellEnumeration<T>::to_set_system() const {
    std::vector<std::uint64_t> masks;
    masks.reserve(cells.size());
    for (const Cell<T>& c : cells) masks.push_back(c.mask);
    return SetSystem(n_points, std::move(masks));
}

template <typename T>
CellEnumeration<T> enumerate_cells(std::span<const DualHyperplane<T>> hs) {
    if (hs.empty()) throw InvalidInputError("cell enumeration needs at least one hyperplane");
    const std::size_t n = hs[0].normal.size();
    if (n == 0) throw InvalidInputError("hyperplanes need at least one parameter dimension");
    if (n > 8) throw InvalidInputError("cell enumeration limited to parameter dimension 8");
    for (const auto& h : hs) {
        if (h.normal.size() != n) throw DimensionError("hyperplanes disagree on dimension");
    }

    const std::vector<DualHyperplane<T>> planes = normalize_planes(hs);

    CellEnumeration<T> result;
    result.n_points = planes.size();
    result.dimension = n;
    result.certified = std::is_same_v<T, Rational>;

    std::vector<Cell<T>> cells(1);
    cells[0].witness.assign(n, T{});
    cells[0].margin = T(1);

    std::vector<std::size_t> active;  // hyperplanes that actually constrain the parameter

    for (std::size_t idx = 0; idx < planes.size(); ++idx) {
        const DualHyperplane<T>& h = planes[idx];

        if (all_zero_normal(h)) {
            // Constant side for every parameter choice: the point is in the
            // positivity set iff offset > 0; offset == 0 never counts as
            // positive and is flagged as degenerate.
            if (LpTraits<T>::is_pos(h.offset)) {
                for (Cell<T>& c : cells) c.mask |= std::uint64_t(1) << idx;
            } else if (LpTraits<T>::is_zero(h.offset)) {
                result.degenerate_points.push_back(idx);
            }
            continue;
        }

        std::vector<Cell<T>> next;
        next.reserve(cells.size() * 2);
        for (Cell<T>& cell : cells) {
            T slack = h.offset;
            for (std::size_t j = 0; j < n; ++j) slack -= h.normal[j] * cell.witness[j];

            const bool on_boundary = LpTraits<T>::is_zero(slack);
            if (on_boundary) {
                // The stored witness sits on the new hyperplane; re-solve both
                // sides from scratch.
                for (const bool side : {false, true}) {
                    const std::uint64_t mask = cell.mask | (std::uint64_t(side ? 1 : 0) << idx);
                    auto cs = cell_constraints<T>(planes, active, mask);
                    SignedConstraint<T> extra{h.normal, h.offset, side};
                    cs.push_back(std::move(extra));
                    auto feas = strict_feasible<T>(cs, n);
                    if (feas.outcome == LpOutcome::Witness) {
                        next.push_back(Cell<T>{mask, std::move(feas.witness), feas.margin});
                    } else if (feas.outcome == LpOutcome::Indeterminate) {
                        result.certified = false;
                    }
                }
                continue;
            }

            const bool sure_side = LpTraits<T>::is_pos(slack);
            const T sure_slack = sure_side ? slack : -slack;
            const bool opposite = !sure_side;
            const std::uint64_t opp_mask = cell.mask | (std::uint64_t(opposite ? 1 : 0) << idx);

            auto cs = cell_constraints<T>(planes, active, cell.mask);
            SignedConstraint<T> extra{h.normal, h.offset, opposite};
            cs.push_back(std::move(extra));
            auto feas = strict_feasible<T>(cs, n);

            Cell<T> kept;
            kept.mask = cell.mask | (std::uint64_t(sure_side ? 1 : 0) << idx);
            kept.witness = std::move(cell.witness);
            kept.margin = std::min(cell.margin, sure_slack);

            if (feas.outcome == LpOutcome::Witness) {
                // Deterministic insertion order: negative side first.
                Cell<T> split{opp_mask, std::move(feas.witness), feas.margin};
                if (!sure_side) {
                    next.push_back(std::move(kept));
                    next.push_back(std::move(split));
                } else {
                    next.push_back(std::move(split));
                    next.push_back(std::move(kept));
                }
            } else {
                if (feas.outcome == LpOutcome::Indeterminate) result.certified = false;
                next.push_back(std::move(kept));
            }
        }
        cells = std::move(next);
        active.push_back(idx);
    }

    sort_cells(cells);
    result.cells = std::move(cells);
    return result;
}

template <typename T>
CellEnumeration<T> brute_force_cells(std::span<const DualHyperplane<T>> hs, std::size_t cap) {
    if (hs.empty()) throw InvalidInputError("cell enumeration needs at least one hyperplane");
    if (hs.size() > cap) {
        throw InvalidInputError("brute-force enumeration refused: " + std::to_string(hs.size()) +
                                " hyperplanes exceed the cap of " + std::to_string(cap));
    }
    const std::size_t n = hs[0].normal.size();
    for (const auto& h : hs) {
        if (h.normal.size() != n) throw DimensionError("hyperplanes disagree on dimension");
    }

    const std::vector<DualHyperplane<T>> planes = normalize_planes(hs);

    CellEnumeration<T> result;
    result.n_points = planes.size();
    result.dimension = n;
    result.certified = std::is_same_v<T, Rational>;

    // Degenerate points (zero normal, zero offset) have a forced 0 bit: the
    // value is identically zero, never strictly positive.
    std::uint64_t forced_zero = 0;
    std::vector<std::size_t> lp_planes;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        if (all_zero_normal(planes[i]) && LpTraits<T>::is_zero(planes[i].offset)) {
            forced_zero |= std::uint64_t(1) << i;
            result.degenerate_points.push_back(i);
        } else {
            lp_planes.push_back(i);
        }
    }

    const std::uint64_t limit = std::uint64_t(1) << planes.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if ((mask & forced_zero) != 0) continue;
        auto cs = cell_constraints<T>(planes, lp_planes, mask);
        auto feas = strict_feasible<T>(cs, n);
        if (feas.outcome == LpOutcome::Witness) {
            result.cells.push_back(Cell<T>{mask, std::move(feas.witness), feas.margin});
        } else if (feas.outcome == LpOutcome::Indeterminate) {
            result.certified = false;
        }
    }

    sort_cells(result.cells);
    return result;
}

template struct CellEnumeration<Rational>;
template struct CellEnumeration<double>;
template StrictFeasibility<Rational> strict_feasible<Rational>(
    std::span<const SignedConstraint<Rational>>, std::size_t);
template StrictFeasibility<double> strict_feasible<double>(std::span<const SignedConstraint<double>>,
                                                           std::size_t);
template CellEnumeration<Rational> enumerate_cells<Rational>(std::span<const QHyperplane>);
template CellEnumeration<double> enumerate_cells<double>(std::span<const DHyperplane>);
template CellEnumeration<Rational> brute_force_cells<Rational>(std::span<const QHyperplane>,
                                                               std::size_t);
template CellEnumeration<double> brute_force_cells<double>(std::span<const DHyperplane>, std::size_t);

}  // namespace vcmax
