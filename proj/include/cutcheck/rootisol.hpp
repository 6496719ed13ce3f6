#pragma once

#include <vector>

#include "cutcheck/rational.hpp"
#include "cutcheck/upoly.hpp"

namespace cutcheck {

// One isolated real root: either an exact rational value, or an open interval
// (lo, hi) with rational endpoints containing exactly one root of the
// squarefree part, with neither endpoint a root.
struct IsolatedRoot {
    bool exact = false;
    Rat value;   // when exact
    RatIv iv;    // when !exact
};

// Distinct real roots of p (p != 0), ascending. Descartes/VCA bisection on the
// primitive squarefree part; fully exact.
std::vector<IsolatedRoot> isolate_real_roots(const UP& p);

// Same, restricted to roots strictly inside (a, b).
std::vector<IsolatedRoot> isolate_real_roots_in(const UP& p, const Rat& a, const Rat& b);

}  // namespace cutcheck
