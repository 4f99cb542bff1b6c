#ifndef DEFPOW_BUDGET_HPP
#define DEFPOW_BUDGET_HPP

namespace defpow {

// Search budgets shared by every bounded procedure. Defaults are the CLI
// defaults; suites finish comfortably inside them.
struct Budget {
    int deg_box = 3;        // --deg-box: quantifier polynomial degree bound
    int coeff_bound = 3;    // --coeff-box: coefficients range over [-coeff_bound, coeff_bound]
    int exp_cap = 8;        // --exp-cap: exponent searches for powers
    int int_bound = 6;      // --int-box: ring element boxes range over [-int_bound, int_bound]
    long long step_limit = 2000000;  // candidate cap for one bounded search
    int divisor_slack = 2;  // extra degrees allowed for divisor boxes
    int nil_slack = 4;      // extra quotient degrees over non-reduced finite bases
};

}  // namespace defpow

#endif
