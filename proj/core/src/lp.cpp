#include "vcmax/lp.hpp"

#include <stdexcept>

namespace vcmax {

namespace {

// ---------------------------------------------------------------------------
// Exact path: integer tableau with a positive scalar determinant.
//
// The true (rational) tableau is row[i][j] / det.  A pivot updates every
// nonbasic entry as (a_ij * p - a_is * a_rj) / det, which divides exactly
// (the entries are basis minors of the integer input), keeps every entry an
// integer, and bounds growth without any gcd work.  Basic columns are unit
// columns scaled by det and are maintained directly instead of being swept.
// ---------------------------------------------------------------------------
class IntSimplex {
public:
    IntSimplex(const QMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c)
        : m_(A.rows()), n_(A.cols()) {
        if (b.size() != m_ || c.size() != n_) throw DimensionError("simplex input sizes disagree");

        // Scale each constraint row to integers (positive factors keep the
        // feasible set intact).
        std::vector<BigInt> ia(m_ * n_);
        std::vector<BigInt> ib(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            BigInt l = b[i].denominator();
            for (std::size_t j = 0; j < n_; ++j) {
                l = boost::multiprecision::lcm(l, A.at(i, j).denominator());
            }
            for (std::size_t j = 0; j < n_; ++j) {
                ia[i * n_ + j] = A.at(i, j).numerator() * (l / A.at(i, j).denominator());
            }
            ib[i] = b[i].numerator() * (l / b[i].denominator());
        }

        // Scale the cost row by a single positive factor (objective values
        // are divided back on extraction).
        cost_scale_ = 1;
        for (std::size_t j = 0; j < n_; ++j) {
            cost_scale_ = boost::multiprecision::lcm(cost_scale_, c[j].denominator());
        }
        std::vector<BigInt> ic(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            ic[j] = c[j].numerator() * (cost_scale_ / c[j].denominator());
        }

        std::size_t n_art = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (ib[i] < 0) ++n_art;
        }
        art_start_ = n_ + m_;
        total_ = art_start_ + n_art;

        row_.assign(m_, std::vector<BigInt>(total_ + 1));
        z_.assign(total_ + 1, BigInt(0));
        basis_.resize(m_);
        basic_row_.assign(total_, std::size_t(-1));
        cost_.assign(total_, BigInt(0));
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = ic[j];

        std::size_t next_art = art_start_;
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = ib[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) {
                row_[i][j] = flip ? -ia[i * n_ + j] : ia[i * n_ + j];
            }
            row_[i][n_ + i] = flip ? -1 : 1;
            row_[i][total_] = flip ? -ib[i] : ib[i];
            if (flip) {
                row_[i][next_art] = 1;
                set_basis(i, next_art++);
            } else {
                set_basis(i, n_ + i);
            }
        }
    }

    LpResult<Rational> solve() {
        LpResult<Rational> result;
        if (total_ > art_start_) {  // phase 1: drive the artificials to zero
            std::vector<BigInt> phase1(total_, BigInt(0));
            for (std::size_t j = art_start_; j < total_; ++j) phase1[j] = -1;
            rebuild_objective(phase1);
            if (run(total_) == LpStatus::Unbounded) {
                throw std::logic_error("phase-1 simplex cannot be unbounded");
            }
            if (z_[total_] < 0) return result;  // infeasible

            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] < art_start_) continue;
                std::size_t col = art_start_;
                for (std::size_t j = 0; j < art_start_; ++j) {
                    if (basic_row_[j] == std::size_t(-1) && row_[i][j] != 0) {
                        col = j;
                        break;
                    }
                }
                if (col < art_start_) pivot(i, col);
                // Otherwise the row is redundant; its artificial stays basic
                // at value zero and never re-enters.
            }
        }

        rebuild_objective(cost_);
        const LpStatus status = run(art_start_);
        if (status == LpStatus::Unbounded) {
            result.status = LpStatus::Unbounded;
            return result;
        }

        result.status = LpStatus::Optimal;
        result.objective = Rational(z_[total_], det_ * cost_scale_);
        result.solution.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) result.solution[basis_[i]] = Rational(row_[i][total_], det_);
        }
        return result;
    }

private:
    void set_basis(std::size_t r, std::size_t col) {
        basis_[r] = col;
        basic_row_[col] = r;
    }

    // z_j = sum_i cost[basis_i] * row[i][j] - det * cost_j  (times 1/det is
    // the true reduced cost); the rhs cell carries det * objective.
    void rebuild_objective(const std::vector<BigInt>& cost) {
        for (std::size_t j = 0; j <= total_; ++j) {
            z_[j] = j < total_ ? -det_ * cost[j] : BigInt(0);
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const BigInt& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= total_; ++j) {
                if (j < total_ && basic_row_[j] != std::size_t(-1)) continue;
                z_[j] += cb * row_[i][j];
            }
        }
        for (std::size_t j = 0; j < total_; ++j) {
            if (basic_row_[j] != std::size_t(-1)) z_[j] = 0;
        }
    }

    void pivot(std::size_t r, std::size_t s) {
        const BigInt p = row_[r][s];
        const bool neg = p < 0;
        const BigInt absp = neg ? BigInt(-p) : p;
        const std::size_t leaving = basis_[r];

        // The leaving column materializes from the old entering column.
        for (std::size_t i = 0; i < m_; ++i) {
            if (i != r) row_[i][leaving] = neg ? row_[i][s] : -row_[i][s];
        }
        row_[r][leaving] = neg ? -det_ : det_;
        z_[leaving] = neg ? z_[s] : -z_[s];
        basic_row_[leaving] = std::size_t(-1);

        // General update over nonbasic columns and the rhs.
        for (std::size_t j = 0; j <= total_; ++j) {
            if (j == s || j == leaving) continue;
            if (j < total_ && basic_row_[j] != std::size_t(-1)) continue;
            const BigInt& arj = row_[r][j];
            if (arj == 0) {
                // Column untouched by the pivot row: entries just rescale.
                for (std::size_t i = 0; i < m_; ++i) {
                    if (i == r || row_[i][j] == 0) continue;
                    row_[i][j] = neg ? BigInt(-row_[i][j] * p / det_) : BigInt(row_[i][j] * p / det_);
                }
                if (z_[j] != 0) z_[j] = neg ? BigInt(-z_[j] * p / det_) : BigInt(z_[j] * p / det_);
                continue;
            }
            for (std::size_t i = 0; i < m_; ++i) {
                if (i == r) continue;
                BigInt v = row_[i][j] * p - row_[i][s] * arj;
                if (neg) v = -v;
                row_[i][j] = v / det_;
            }
            BigInt vz = z_[j] * p - z_[s] * arj;
            if (neg) vz = -vz;
            z_[j] = vz / det_;
            row_[r][j] = neg ? -arj : arj;
        }
        // Entering column becomes the unit column of row r.
        for (std::size_t i = 0; i < m_; ++i) row_[i][s] = 0;
        row_[r][s] = absp;
        z_[s] = 0;

        // Remaining basic columns carry det as their single entry.
        det_ = absp;
        for (std::size_t j = 0; j < total_; ++j) {
            if (basic_row_[j] != std::size_t(-1) && j != s) row_[basic_row_[j]][j] = det_;
        }
        set_basis(r, s);
    }

    LpStatus run(std::size_t col_limit) {
        for (;;) {
            std::size_t enter = total_;
            for (std::size_t j = 0; j < col_limit; ++j) {
                if (basic_row_[j] != std::size_t(-1)) continue;
                if (z_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_) return LpStatus::Optimal;

            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (row_[i][enter] <= 0) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                const BigInt lhs = row_[i][total_] * row_[leave][enter];
                const BigInt rhs = row_[leave][total_] * row_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }

    std::size_t m_, n_, art_start_ = 0, total_ = 0;
    std::vector<std::vector<BigInt>> row_;
    std::vector<BigInt> z_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> basic_row_;  // column -> row, or size_t(-1) when nonbasic
    std::vector<BigInt> cost_;
    BigInt det_ = 1;
    BigInt cost_scale_ = 1;
};

// ---------------------------------------------------------------------------
// Floating path: ordinary dense tableau with tolerance-based pivoting.
// ---------------------------------------------------------------------------
LpResult<double> simplex_double(const DMatrix& A, const std::vector<double>& b,
                                const std::vector<double>& c) {
    using Tr = LpTraits<double>;
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    if (b.size() != m || c.size() != n) throw DimensionError("simplex input sizes disagree");

    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (Tr::is_neg(b[i])) ++n_art;
    }
    const std::size_t art_start = n + m;
    const std::size_t total = n + m + n_art;

    std::vector<std::vector<double>> tab(m, std::vector<double>(total + 1, 0.0));
    std::vector<std::size_t> basis(m);
    std::size_t next_art = art_start;
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = Tr::is_neg(b[i]);
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? -A.at(i, j) : A.at(i, j);
        tab[i][n + i] = flip ? -1.0 : 1.0;
        tab[i][total] = flip ? -b[i] : b[i];
        if (flip) {
            tab[i][next_art] = 1.0;
            basis[i] = next_art++;
        } else {
            basis[i] = n + i;
        }
    }

    std::vector<double> z(total + 1, 0.0);
    auto rebuild_objective = [&](const std::vector<double>& cost) {
        for (std::size_t j = 0; j < total; ++j) z[j] = -cost[j];
        z[total] = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double cb = cost[basis[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j <= total; ++j) z[j] += cb * tab[i][j];
        }
    };
    auto pivot = [&](std::size_t r, std::size_t col) {
        const double p = tab[r][col];
        for (std::size_t j = 0; j <= total; ++j) tab[r][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || tab[i][col] == 0.0) continue;
            const double f = tab[i][col];
            for (std::size_t j = 0; j <= total; ++j) tab[i][j] -= f * tab[r][j];
            tab[i][col] = 0.0;
        }
        if (z[col] != 0.0) {
            const double f = z[col];
            for (std::size_t j = 0; j <= total; ++j) z[j] -= f * tab[r][j];
            z[col] = 0.0;
        }
        basis[r] = col;
    };
    auto run = [&](std::size_t col_limit) -> LpStatus {
        for (;;) {
            std::size_t enter = total;
            for (std::size_t j = 0; j < col_limit; ++j) {
                if (Tr::is_neg(z[j])) {
                    enter = j;
                    break;
                }
            }
            if (enter == total) return LpStatus::Optimal;
            std::size_t leave = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (!Tr::is_pos(tab[i][enter])) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                const double lhs = tab[i][total] * tab[leave][enter];
                const double rhs = tab[leave][total] * tab[i][enter];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    };

    LpResult<double> result;
    if (n_art > 0) {
        std::vector<double> phase1(total, 0.0);
        for (std::size_t j = art_start; j < total; ++j) phase1[j] = -1.0;
        rebuild_objective(phase1);
        if (run(total) == LpStatus::Unbounded) {
            // Phase 1 is bounded by construction; hitting this means every
            // pivot candidate fell inside the tolerance band.  Surface it as
            // Unbounded so the caller classifies the outcome as indeterminate.
            result.status = LpStatus::Unbounded;
            return result;
        }
        if (Tr::is_neg(z[total])) return result;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < art_start) continue;
            for (std::size_t j = 0; j < art_start; ++j) {
                if (!Tr::is_zero(tab[i][j])) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<double> cost(total, 0.0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    rebuild_objective(cost);
    const LpStatus status = run(art_start);
    if (status == LpStatus::Unbounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.solution.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) result.solution[basis[i]] = tab[i][total];
    }
    result.objective = z[total];
    return result;
}

}  // namespace

LpResult<Rational> simplex_max(const QMatrix& A, const std::vector<Rational>& b,
                               const std::vector<Rational>& c) {
    return IntSimplex(A, b, c).solve();
}

LpResult<double> simplex_max(const DMatrix& A, const std::vector<double>& b,
                             const std::vector<double>& c) {
    return simplex_double(A, b, c);
}

}  // namespace vcmax
