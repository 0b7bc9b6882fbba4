#pragma once

#include <gmpxx.h>

#include "dtuple/errors.hpp"

namespace dtuple {

enum class MnRegime { small, above400, huge };

// M_n <= a_part + b_part + c_part, against the published headline bound.
// The small-regime 21 + 5 + 5 split is informative, non-normative; only
// the published 31 is a stated result.
struct BoundBreakdown {
    mpz_class n;
    MnRegime regime = MnRegime::small;
    double a_part = 0.0;    // 21, imported
    double b_part = 0.0;
    double c_part = 0.0;
    double combined = 0.0;
    double published = 0.0;
    double margin = 0.0;    // published - combined, extended precision
    bool informative_small_breakdown = false;
};

// published: 31 for |n| <= 400, 15.476 log|n| for 400 < |n| < 10^100,
// 9.078 log|n| for |n| >= 10^100. Throws ZeroN.
BoundBreakdown mn_bound(const mpz_class& n);

// 2 + 1/log((5 + sqrt(29))/2), the large-|n| coefficient.
double asymptotic_coefficient();

}  // namespace dtuple
