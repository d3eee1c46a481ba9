#include "qface/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace qface {

namespace {

// Dense phase-1 simplex tableau. Columns: the structural variables split
// into positive and negative parts, one surplus variable per inequality,
// one artificial variable per row; artificials start as the basis.
class Phase1Tableau {
public:
    Phase1Tableau(const LPProblem& p) {
        const int v = p.num_vars;
        const int n_ge = static_cast<int>(p.ge_lhs.size());
        const int n_rows = n_ge + static_cast<int>(p.eq_lhs.size());
        split_ = 2 * v;
        surplus_ = n_ge;
        cols_ = split_ + surplus_ + n_rows;
        rows_ = n_rows;
        a_.assign(static_cast<size_t>(rows_), std::vector<Rational>(static_cast<size_t>(cols_) + 1, Rational(0)));
        basis_.resize(static_cast<size_t>(rows_));

        int r = 0;
        auto load_row = [&](const std::vector<Rational>& lhs, const Rational& rhs, int surplus_col) {
            auto& row = a_[static_cast<size_t>(r)];
            for (int j = 0; j < v; ++j) {
                row[static_cast<size_t>(j)] = lhs[static_cast<size_t>(j)];
                row[static_cast<size_t>(v + j)] = -lhs[static_cast<size_t>(j)];
            }
            if (surplus_col >= 0) row[static_cast<size_t>(surplus_col)] = -1;
            row[static_cast<size_t>(cols_)] = rhs;
            if (row[static_cast<size_t>(cols_)] < 0)
                for (auto& x : row) x = -x;
            int art = split_ + surplus_ + r;
            row[static_cast<size_t>(art)] = 1;
            basis_[static_cast<size_t>(r)] = art;
            ++r;
        };
        for (size_t i = 0; i < p.ge_lhs.size(); ++i)
            load_row(p.ge_lhs[i], p.ge_rhs[i], split_ + static_cast<int>(i));
        for (size_t i = 0; i < p.eq_lhs.size(); ++i) load_row(p.eq_lhs[i], p.eq_rhs[i], -1);

        // objective: minimize the sum of artificials, expressed in the
        // nonbasic variables
        obj_.assign(static_cast<size_t>(cols_) + 1, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j <= cols_; ++j)
                obj_[static_cast<size_t>(j)] -= a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int i = 0; i < rows_; ++i) obj_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = 0;
    }

    // Runs simplex; returns true when the artificial objective reaches zero.
    bool solve() {
        long long guard = 4096ll + 64ll * rows_ * cols_;
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (obj_[static_cast<size_t>(j)] < 0) { // Bland: first improving column
                    enter = j;
                    break;
                }
            }
            if (enter < 0) break;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows_; ++i) {
                const Rational& coef = a_[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (coef <= 0) continue;
                Rational ratio = a_[static_cast<size_t>(i)][static_cast<size_t>(cols_)] / coef;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                throw std::logic_error("phase-1 objective unbounded"); // cannot happen: bounded below by 0
            pivot(leave, enter);
            if (--guard < 0) throw std::logic_error("simplex iteration guard tripped");
        }
        return -obj_[static_cast<size_t>(cols_)] == 0;
    }

    std::vector<Rational> structural_solution(int num_vars) const {
        std::vector<Rational> value(static_cast<size_t>(cols_), Rational(0));
        for (int i = 0; i < rows_; ++i)
            value[static_cast<size_t>(basis_[static_cast<size_t>(i)])] =
                a_[static_cast<size_t>(i)][static_cast<size_t>(cols_)];
        std::vector<Rational> x(static_cast<size_t>(num_vars));
        for (int j = 0; j < num_vars; ++j)
            x[static_cast<size_t>(j)] =
                value[static_cast<size_t>(j)] - value[static_cast<size_t>(num_vars + j)];
        return x;
    }

private:
    void pivot(int leave, int enter) {
        auto& prow = a_[static_cast<size_t>(leave)];
        Rational p = prow[static_cast<size_t>(enter)];
        for (auto& x : prow) x /= p;
        for (int i = 0; i < rows_; ++i) {
            if (i == leave) continue;
            Rational f = a_[static_cast<size_t>(i)][static_cast<size_t>(enter)];
            if (f == 0) continue;
            auto& row = a_[static_cast<size_t>(i)];
            for (int j = 0; j <= cols_; ++j) row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        Rational f = obj_[static_cast<size_t>(enter)];
        if (f != 0)
            for (int j = 0; j <= cols_; ++j) obj_[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        basis_[static_cast<size_t>(leave)] = enter;
    }

    int rows_ = 0, cols_ = 0, split_ = 0, surplus_ = 0;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> obj_;
    std::vector<int> basis_;
};

} // namespace

std::optional<std::vector<Rational>> lp_feasible_point(const LPProblem& p) {
    if (p.num_vars < 0 || p.eq_lhs.size() != p.eq_rhs.size() || p.ge_lhs.size() != p.ge_rhs.size())
        throw std::logic_error("malformed LP problem");
    for (const auto& row : p.eq_lhs)
        if (row.size() != static_cast<size_t>(p.num_vars)) throw std::logic_error("ragged LP row");
    for (const auto& row : p.ge_lhs)
        if (row.size() != static_cast<size_t>(p.num_vars)) throw std::logic_error("ragged LP row");
    if (p.eq_lhs.empty() && p.ge_lhs.empty())
        return std::vector<Rational>(static_cast<size_t>(p.num_vars), Rational(0));
    Phase1Tableau t(p);
    if (!t.solve()) return std::nullopt;
    return t.structural_solution(p.num_vars);
}

} // namespace qface
