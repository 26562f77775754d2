#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mixdom {

enum class FormulaKind { Exact, UpperBound };

std::string_view kind_name(FormulaKind kind);

struct FormulaResult {
    long value = 0;
    FormulaKind kind = FormulaKind::Exact;
    std::string source;  // case label, e.g. "k1 r=3"
};

// gamma_md(P(n,1)); table values for 3 <= n <= 7, block-8 case table above.
FormulaResult gamma_k1(long n);

// gamma_md(P(n,2)) = 3m + r with m = n / 4, r = n mod 4, for n >= 5.
FormulaResult gamma_k2(long n);

// Size of the alternate 8-block pattern for k = 2 (n >= 8). One above
// gamma_k2 when n mod 8 is 1 or 4.
FormulaResult gamma_k2_remark(long n);

// Upper bound for k >= 3, k < n/2.
FormulaResult upper_bound_general(long n, long k);

// The formula that applies to (n, k): gamma_k1, gamma_k2 or the general bound.
FormulaResult formula_for(long n, long k);

}  // namespace mixdom
