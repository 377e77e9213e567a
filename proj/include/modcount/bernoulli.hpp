#pragma once

#include "modcount/rational.hpp"

namespace modcount {

// Bernoulli number B_m (B_1 = -1/2 convention), from the defining
// recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0.
Rational bernoulli(int m);

// zeta(1-2g) = -B_{2g}/(2g), exact, for g >= 1.
Rational zeta_neg(int g);

} // namespace modcount
