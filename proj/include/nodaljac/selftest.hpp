#ifndef NODALJAC_SELFTEST_HPP
#define NODALJAC_SELFTEST_HPP

#include <iosfwd>

namespace nodaljac {

/// Exhaustive small-curve group-axiom checks plus the divisor-pair
/// oracle-equivalence suite. Quick mode restricts to the curve
/// (p = 7, f = x^2 + 1). Logs one line per check; returns true when
/// every check passes.
bool selftest(bool quick, std::ostream& log);

} // namespace nodaljac

#endif
