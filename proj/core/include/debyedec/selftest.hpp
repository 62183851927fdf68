#ifndef DEBYEDEC_SELFTEST_HPP
#define DEBYEDEC_SELFTEST_HPP

#include <string>
#include <vector>

namespace debyedec {

/// One aggregated comparison group against the frozen reference tables.
struct SelftestCheck {
    std::string name;
    int cases = 0;           // comparisons folded into this group
    double max_error = 0.0;  // worst |computed - reference|
    double tolerance = 0.0;
    bool passed = false;     // max_error <= tolerance
};

/// Recomputes the distribution CDFs and the residual-diagnostic statistics
/// on the bundled reference fixtures and compares against values frozen
/// from an independent implementation. Groups: normal_cdf, t_cdf, f_cdf
/// (20 points each), then per-quantity aggregates over the 10 diagnostic
/// samples (statistics at 1e-6, closed-form p-values at 1e-4).
std::vector<SelftestCheck> run_selftest();

} // namespace debyedec

#endif
