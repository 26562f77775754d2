#include "mixdom/formulas.hpp"

#include <array>
#include <string>

#include "mixdom/errors.hpp"

namespace mixdom {

namespace {

// gamma_md(P(n,1)) for n = 3..7, found by exhaustive search.
constexpr std::array<long, 5> kSmallK1 = {3, 4, 4, 5, 6};

// Extra elements beyond 6m for r = n mod 8, shared by k = 1 and the k = 2
// block-8 pattern.
constexpr std::array<long, 8> kBlock8Extra = {0, 2, 2, 3, 4, 4, 5, 6};

std::string r_label(const char* prefix, long r) { return std::string(prefix) + " r=" + std::to_string(r); }

}  // namespace

std::string_view kind_name(FormulaKind kind) {
    return kind == FormulaKind::Exact ? "Exact" : "UpperBound";
}

FormulaResult gamma_k1(long n) {
    if (n < 3) throw OutOfRange("gamma_k1 needs n >= 3, got " + std::to_string(n));
    if (n < 8) return {kSmallK1[static_cast<std::size_t>(n - 3)], FormulaKind::Exact, "k1 small n=" + std::to_string(n)};
    const long m = n / 8;
    const long r = n % 8;
    return {6 * m + kBlock8Extra[static_cast<std::size_t>(r)], FormulaKind::Exact, r_label("k1", r)};
}

FormulaResult gamma_k2(long n) {
    if (n < 5) throw OutOfRange("gamma_k2 needs n >= 5, got " + std::to_string(n));
    const long m = n / 4;
    const long r = n % 4;
    long value = 0;
    switch (r) {
    case 0: value = 3 * m; break;
    case 1: value = 3 * m + 1; break;
    case 2: value = 3 * m + 2; break;
    default: value = 3 * m + 3; break;
    }
    return {value, FormulaKind::Exact, r_label("k2", r)};
}

FormulaResult gamma_k2_remark(long n) {
    if (n < 8) throw OutOfRange("gamma_k2_remark needs n >= 8, got " + std::to_string(n));
    const long m = n / 8;
    const long r = n % 8;
    return {6 * m + kBlock8Extra[static_cast<std::size_t>(r)], FormulaKind::UpperBound,
            r_label("k2-block8", r)};
}

FormulaResult upper_bound_general(long n, long k) {
    if (k < 3 || 2 * k >= n)
        throw OutOfRange("upper_bound_general needs k >= 3 and k < n/2, got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k));
    const long half = k / 2;
    const long period = 4 * half + 1;
    const long m = n / period;
    const long r = n % period;
    const long per_block = 3 * half + 1;
    const long value = r % 2 == 0 ? per_block * m + r : per_block * m + half + (r + 1) / 2;
    return {value, FormulaKind::UpperBound,
            "general T=" + std::to_string(period) + " r=" + std::to_string(r) + (r % 2 == 0 ? " even" : " odd")};
}

FormulaResult formula_for(long n, long k) {
    switch (k) {
    case 1: return gamma_k1(n);
    case 2: return gamma_k2(n);
    default: return upper_bound_general(n, k);
    }
}

}  // namespace mixdom
