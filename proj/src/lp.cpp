#include "encap/lp.hpp"

#include "encap/errors.hpp"

namespace encap {

std::string_view relation_token(Relation r) {
    switch (r) {
        case Relation::Lt: return "lt";
        case Relation::Le: return "le";
        case Relation::Eq: return "eq";
    }
    return "?";
}

bool relation_holds(Relation r, const Rational& lhs, const Rational& rhs) {
    switch (r) {
        case Relation::Lt: return lhs < rhs;
        case Relation::Le: return lhs <= rhs;
        case Relation::Eq: return lhs == rhs;
    }
    return false;
}

LinConstraint lt(RVector normal, Rational offset) { return {std::move(normal), std::move(offset), Relation::Lt}; }
LinConstraint le(RVector normal, Rational offset) { return {std::move(normal), std::move(offset), Relation::Le}; }
LinConstraint eq(RVector normal, Rational offset) { return {std::move(normal), std::move(offset), Relation::Eq}; }
LinConstraint gt(RVector normal, Rational offset) { return lt(scale(normal, -1), -offset); }
LinConstraint ge(RVector normal, Rational offset) { return le(scale(normal, -1), -offset); }

namespace {

thread_local std::size_t g_lp_calls = 0;

// Dense tableau simplex for: maximize c.z subject to A z <= b, z >= 0.
// Bland's rule on both entering and leaving choices, so it terminates on
// degenerate problems under exact arithmetic.
class Simplex {
public:
    Simplex(const RMatrix& a, const RVector& b, const RVector& c)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())),
          basic_(m_), nonbasic_(n_ + 1), d_(m_ + 2, RVector(n_ + 2)) {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
            d_[i][n_] = -1;
            d_[i][n_ + 1] = b[i];
            basic_[i] = n_ + i;
        }
        for (int j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
            d_[m_][j] = -c[j];
        }
        nonbasic_[n_] = -1;
        d_[m_ + 1][n_] = 1;
    }

    enum class Outcome { Optimal, Infeasible, Unbounded };

    Outcome solve(RVector& z) {
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
        if (m_ > 0 && d_[r][n_ + 1].sign() < 0) {
            pivot(r, n_);
            if (!run(1) || d_[m_ + 1][n_ + 1].sign() < 0) return Outcome::Infeasible;
            for (int i = 0; i < m_; ++i) {
                if (basic_[i] != -1) continue;
                int s = -1;
                for (int j = 0; j <= n_; ++j)
                    if (!d_[i][j].is_zero() && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
                if (s != -1) pivot(i, s);
            }
        }
        if (!run(2)) return Outcome::Unbounded;
        z.assign(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basic_[i] >= 0 && basic_[i] < n_) z[basic_[i]] = d_[i][n_ + 1];
        return Outcome::Optimal;
    }

private:
    void pivot(int r, int s) {
        const Rational inv = Rational(1) / d_[r][s];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || d_[i][s].is_zero()) continue;
            const Rational f = d_[i][s] * inv;
            for (int j = 0; j < n_ + 2; ++j)
                if (j != s && !d_[r][j].is_zero()) d_[i][j] -= d_[r][j] * f;
        }
        for (int j = 0; j < n_ + 2; ++j)
            if (j != s) d_[r][j] *= inv;
        for (int i = 0; i < m_ + 2; ++i)
            if (i != r) d_[i][s] *= -inv;
        d_[r][s] = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    bool run(int phase) {
        const int x = phase == 1 ? m_ + 1 : m_;
        while (true) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasic_[j] == -1) continue;
                if (d_[x][j].sign() < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
            }
            if (s == -1) return true;
            int r = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (d_[i][s].sign() <= 0) continue;
                Rational ratio = d_[i][n_ + 1] / d_[i][s];
                if (r == -1 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
                    r = i;
                    best = std::move(ratio);
                }
            }
            if (r == -1) return false;
            pivot(r, s);
        }
    }

    int m_, n_;
    std::vector<int> basic_, nonbasic_;
    RMatrix d_;
};

}  // namespace

std::size_t lp_call_count() { return g_lp_calls; }

LpResult lp_feasible(std::span<const LinConstraint> constraints, std::size_t d) {
    ++g_lp_calls;
    RMatrix eq_rows;
    RVector eq_rhs;
    for (const auto& c : constraints) {
        if (c.normal.size() != d) throw InputError("constraint dimension does not match ambient dimension");
        if (is_zero(c.normal)) throw InputError("constraint with zero normal vector");
        if (c.rel == Relation::Eq) {
            eq_rows.push_back(c.normal);
            eq_rhs.push_back(c.offset);
        }
    }

    // Equalities: x = x0 + K y.
    auto affine = solve_affine(eq_rows, eq_rhs, d);
    if (!affine) return {};
    const RVector& x0 = affine->particular;
    const RMatrix& kernel = affine->kernel;
    const std::size_t k = kernel.size();

    RMatrix rows;   // reduced normals in y
    RVector rhs;
    std::vector<bool> strict;
    for (const auto& c : constraints) {
        if (c.rel == Relation::Eq) continue;
        RVector red(k);
        for (std::size_t j = 0; j < k; ++j) red[j] = dot(c.normal, kernel[j]);
        Rational slack = c.offset - dot(c.normal, x0);
        if (is_zero(red)) {
            const bool ok = c.rel == Relation::Lt ? slack.sign() > 0 : slack.sign() >= 0;
            if (!ok) return {};
            continue;
        }
        rows.push_back(std::move(red));
        rhs.push_back(std::move(slack));
        strict.push_back(c.rel == Relation::Lt);
    }

    RVector y = zeros(k);
    if (!rows.empty()) {
        bool any_strict = false;
        for (bool s : strict) any_strict = any_strict || s;
        // Variables: y+ (k), y- (k), optional t in [0,1] added to strict rows.
        const std::size_t nv = 2 * k + (any_strict ? 1 : 0);
        RMatrix a;
        RVector b, c(nv, Rational(0));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            RVector row(nv, Rational(0));
            for (std::size_t j = 0; j < k; ++j) {
                row[j] = rows[i][j];
                row[k + j] = -rows[i][j];
            }
            if (strict[i]) row[2 * k] = 1;
            a.push_back(std::move(row));
            b.push_back(rhs[i]);
        }
        if (any_strict) {
            RVector cap(nv, Rational(0));
            cap[2 * k] = 1;
            a.push_back(std::move(cap));
            b.push_back(1);
            c[2 * k] = 1;
        }
        Simplex lp(a, b, c);
        RVector z;
        if (lp.solve(z) != Simplex::Outcome::Optimal) return {};
        if (any_strict && z[2 * k].sign() <= 0) return {};
        for (std::size_t j = 0; j < k; ++j) y[j] = z[j] - z[k + j];
    }

    RVector x = x0;
    for (std::size_t j = 0; j < k; ++j)
        if (!y[j].is_zero()) x = axpy(x, y[j], kernel[j]);
    for (const auto& c : constraints)
        if (!c.satisfied_by(x)) throw InvariantError("lp_feasible produced a witness violating a constraint");
    return {true, std::move(x)};
}

}  // namespace encap
