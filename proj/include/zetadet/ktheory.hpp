#pragma once

#include <cstdint>
#include <vector>

#include "zetadet/number_field.hpp"
#include "zetadet/special_fn.hpp"

namespace zetadet {

// Exact rational, kept unreduced; here always denominator 2.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    ComplexScalar to_complex() const noexcept { return {value(), 0.0}; }

    bool operator==(const Rational&) const = default;
};

// One eigenvalue (1-n)/2 of the operator together with its multiplicity,
// the rank of the n-th K-group.
struct SpectrumSlice {
    std::int64_t n = 0;
    Rational eigenvalue{1, 2};
    std::int64_t multiplicity = 0;
};

// Largest n_max accepted by spectrum(), bounding memory.
inline constexpr std::int64_t kMaxSpectrumIndex = 1'000'000;

// Rank of K_n for the integer ring of a field with the given signature:
// 1 at n=0; r1+r2-1 at n=1; r1+r2 for n>1, n = 1 mod 4; r2 for n = 3 mod 4;
// 0 otherwise.
std::int64_t borel_rank(std::int64_t n, const Signature& sig);

// Slices for n = 0..n_max, eigenvalue (1-n)/2 exactly, multiplicity
// borel_rank(n, sig). Zero-multiplicity slices are included.
std::vector<SpectrumSlice> spectrum(const Signature& sig, std::int64_t n_max);

}  // namespace zetadet
