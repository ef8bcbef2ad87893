#include "ballvol/exact.hpp"

#include <mpfr.h>

namespace ballvol {

ExactRatio make_ratio(const BigCount& num, const BigCount& den) {
    if (den <= 0) throw std::invalid_argument("make_ratio: denominator must be positive");
    ExactRatio r(num, den);
    r.canonicalize();
    return r;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "indeterminate";
    }
}

namespace {

// One directed-rounding evaluation pass at the given precision.
BoundCheck compare_at_precision(const ExactRatio& ratio, double coeff, double exponent,
                                mpfr_prec_t prec) {
    mpfr_t lo, hi, r_lo, r_hi;
    mpfr_inits2(prec, lo, hi, r_lo, r_hi, (mpfr_ptr) nullptr);

    // bound_lo <= coeff * e^x <= bound_hi (coeff >= 0 assumed)
    mpfr_set_d(lo, exponent, MPFR_RNDD);
    mpfr_exp(lo, lo, MPFR_RNDD);
    mpfr_mul_d(lo, lo, coeff, MPFR_RNDD);
    mpfr_set_d(hi, exponent, MPFR_RNDU);
    mpfr_exp(hi, hi, MPFR_RNDU);
    mpfr_mul_d(hi, hi, coeff, MPFR_RNDU);

    mpfr_set_q(r_lo, ratio.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r_hi, ratio.get_mpq_t(), MPFR_RNDU);

    BoundCheck out = BoundCheck::indeterminate;
    if (mpfr_cmp(r_hi, lo) <= 0) out = BoundCheck::below;
    else if (mpfr_cmp(r_lo, hi) > 0) out = BoundCheck::above;

    mpfr_clears(lo, hi, r_lo, r_hi, (mpfr_ptr) nullptr);
    return out;
}

}  // namespace

BoundCheck compare_to_exp_bound(const ExactRatio& ratio, double coeff, double exponent) {
    if (coeff < 0) throw std::invalid_argument("compare_to_exp_bound: coeff must be >= 0");
    BoundCheck c = compare_at_precision(ratio, coeff, exponent, 128);
    if (c != BoundCheck::indeterminate) return c;
    return compare_at_precision(ratio, coeff, exponent, 1024);
}

std::string to_decimal_string(const BigCount& v) { return v.get_str(10); }

double log_exact(const ExactRatio& r) {
    if (r <= 0) throw std::domain_error("log_exact: argument must be positive");
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

}  // namespace ballvol
