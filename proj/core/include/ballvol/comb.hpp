#pragma once

#include "ballvol/exact.hpp"

namespace ballvol {

// C(n,k); zero outside 0 <= k <= n. Values with n below the cache cap
// come from a lazily built Pascal table shared by all threads.
BigCount binomial(long n, long k);

// Cache cap for the Pascal table (number of rows). Call before first use;
// later calls with a smaller value are ignored.
void set_binomial_cache_rows(int rows);

BigCount factorial(long n);

// Fixed-point-free permutations of m elements. D_0 = 1, D_1 = 0.
BigCount derangements(long m);

// h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0.
double q_ary_entropy(int q, double x);

}  // namespace ballvol
