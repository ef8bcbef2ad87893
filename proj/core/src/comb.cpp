#include "ballvol/comb.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>
#include <vector>

namespace ballvol {

namespace {

std::mutex table_mutex;
// Row n holds C(n,0..n). A deque keeps built rows at stable addresses while
// later rows are appended, so readers never race with growth.
std::deque<std::vector<BigCount>> pascal;
std::atomic<int> cache_rows{512};
std::atomic<int> built_rows{0};  // rows filled so far; guarded by table_mutex for writes

void build_rows(int upto) {
    std::lock_guard<std::mutex> lock(table_mutex);
    int have = built_rows.load(std::memory_order_relaxed);
    if (have > upto) return;
    pascal.resize(upto + 1);
    for (int n = have; n <= upto; ++n) {
        pascal[n].resize(n + 1);
        pascal[n][0] = 1;
        pascal[n][n] = 1;
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    built_rows.store(upto + 1, std::memory_order_release);
}

std::mutex der_mutex;
std::vector<BigCount> der_table;  // D_0, D_1, ...

}  // namespace

void set_binomial_cache_rows(int rows) {
    int cur = cache_rows.load();
    while (rows > cur && !cache_rows.compare_exchange_weak(cur, rows)) {
    }
}

BigCount binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    int cap = cache_rows.load(std::memory_order_relaxed);
    if (n < cap) {
        if (built_rows.load(std::memory_order_acquire) <= n) build_rows(cap - 1);
        return pascal[n][k];
    }
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigCount factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigCount derangements(long m) {
    if (m < 0) throw std::invalid_argument("derangements: m must be nonnegative");
    std::lock_guard<std::mutex> lock(der_mutex);
    if (der_table.empty()) {
        der_table.push_back(1);  // D_0
        der_table.push_back(0);  // D_1
    }
    // D_m = (m-1)(D_{m-1} + D_{m-2})
    for (long i = static_cast<long>(der_table.size()); i <= m; ++i)
        der_table.push_back(BigCount(i - 1) * (der_table[i - 1] + der_table[i - 2]));
    return der_table[m];
}

double q_ary_entropy(int q, double x) {
    if (q < 2) throw std::domain_error("q_ary_entropy: q must be >= 2");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("q_ary_entropy: x must be in [0,1]");
    double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q - 1)) / lq;
    if (x > 0.0) h -= x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

}  // namespace ballvol
