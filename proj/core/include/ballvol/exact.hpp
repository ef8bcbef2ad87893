#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ballvol {

inline constexpr const char* version_string = "0.1.0";

// Counts are plain GMP integers; callers must keep them nonnegative.
using BigCount = mpz_class;

// Always in lowest terms with positive denominator (make_ratio enforces it).
using ExactRatio = mpq_class;

ExactRatio make_ratio(const BigCount& num, const BigCount& den);

// Thrown when an enumeration/sampling/memory cap would be exceeded.
// The CLI maps this to its own exit code.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { pass, fail, indeterminate };

const char* to_string(Verdict v);

// Result of comparing an exact rational against a transcendental bound.
enum class BoundCheck { below, above, indeterminate };

// Decides ratio <= coeff * e^{exponent} with outward-rounded interval
// arithmetic; retries once at higher precision before giving up.
// "below" and "above" are certified, "indeterminate" means the interval
// straddled the value at both precisions.
BoundCheck compare_to_exp_bound(const ExactRatio& ratio, double coeff, double exponent);

std::string to_decimal_string(const BigCount& v);

// Natural log of a positive rational, immune to overflow/underflow of the
// operands (the operands may have thousands of digits).
double log_exact(const ExactRatio& r);

}  // namespace ballvol
