#include "encap/bounds.hpp"

#include <map>
#include <mutex>

#include "encap/errors.hpp"

namespace encap {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer f_three(long d) {
    if (d < 0) throw InputError("dimension must be nonnegative");
    if (d == 0) throw InputError("f_three(0) is undefined: the zero-dimensional base case is inconsistent");
    return Integer(3 * d / 2 + 1);
}

namespace {

Integer f_upper_memo(long d, long n, std::map<std::pair<long, long>, Integer>& memo) {
    if (d == 0) return 0;
    if (d == 1) return Integer(n - 1);
    if (n == 1) return 0;
    if (n == 2) return 1;
    if (n == 3) return f_three(d);
    auto it = memo.find({d, n});
    if (it != memo.end()) return it->second;
    Integer sum = f_upper_memo(d - 2, n, memo);
    for (long i = 2; i <= n - 1; ++i) sum += binomial(n, i) * f_upper_memo(d, i, memo);
    memo.emplace(std::make_pair(d, n), sum);
    return sum;
}

}  // namespace

Integer f_upper(long d, long n) {
    if (d < 0 || n < 1) throw InputError("f_upper needs d >= 0 and n >= 1");
    static std::map<std::pair<long, long>, Integer> memo;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    return f_upper_memo(d, n, memo);
}

Integer f_closed(long d, long n) {
    if (d < 2 || n < 2) throw InputError("f_closed needs d >= 2 and n >= 2");
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n - 2));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    return 2 * p * fact;
}

Integer turan_t(long n) {
    if (n < 1) throw InputError("turan_t needs n >= 1");
    Integer sq = 0;
    for (long i = 0; i < 4; ++i) {
        const long part = n / 4 + (i < n % 4 ? 1 : 0);
        sq += Integer(part) * part;
    }
    return (Integer(n) * n - sq) / 2;
}

std::pair<Integer, Integer> lm_bounds(long n, long d) {
    if (n < 1 || d < 1) throw InputError("lm_bounds needs n >= 1 and d >= 1");
    Integer pw;
    const Integer base = binomial(n, n / 2);
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d - 1));
    return {binomial(n - 1, d), Integer(n - 1) * pw};
}

Integer disjoint_planar_bound(long n) {
    if (n < 3) throw InputError("disjoint_planar_bound needs n >= 3");
    return Integer(5 * n - 11);
}

std::vector<BoundRow> bound_table(long d_lo, long d_hi, long n_lo, long n_hi) {
    if (d_lo < 0 || n_lo < 1 || d_lo > d_hi || n_lo > n_hi) throw InputError("bad bound table ranges");
    std::vector<BoundRow> rows;
    for (long d = d_lo; d <= d_hi; ++d)
        for (long n = n_lo; n <= n_hi; ++n) {
            BoundRow r;
            r.d = d;
            r.n = n;
            if (d >= 1) r.f_three = f_three(d);
            r.f_upper = f_upper(d, n);
            if (d >= 2 && n >= 2) r.f_closed = f_closed(d, n);
            if (d >= 1) {
                auto [open, general] = lm_bounds(n, d);
                r.lm_open = open;
                r.lm_general = general;
            }
            if (d == 2) {
                r.turan4 = turan_t(n);
                if (n >= 3) r.disjoint_planar = disjoint_planar_bound(n);
            }
            rows.push_back(std::move(r));
        }
    return rows;
}

}  // namespace encap
