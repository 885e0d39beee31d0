#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetadet/errors.hpp"

namespace zetadet {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer-coefficient polynomial, ascending degree order.
// Invariants: degree >= 1, leading coefficient nonzero.
class IntPolynomial {
public:
    // Trims trailing zeros; throws DegreeError if the result is constant.
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }

    // Expression form, e.g. "x^3-2". Parsing it back yields the same polynomial.
    std::string to_string() const;
    // Bracketed ascending coefficient list, e.g. "[-2,0,0,1]".
    std::string to_coeff_list() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

// Signature (r1, r2) of the field defined by a degree-n polynomial:
// r1 real embeddings, r2 conjugate pairs, r1 + 2 r2 = degree.
struct Signature {
    int r1 = 0;
    int r2 = 0;
    int degree = 0;

    bool operator==(const Signature&) const = default;
};

// Parses either a bracketed ascending coefficient list ("[-2,0,0,1]") or an
// expression in one variable x with integer coefficients, +, -, ^ and
// implicit coefficient-power multiplication ("x^3-2", "2x^2+3x-1").
// Exact; no floating point. Throws ParseError / DegreeError.
IntPolynomial parse_polynomial(const std::string& text);

// Exact count of distinct real roots via the Sturm sequence with
// fraction-free integer arithmetic; signs at +-infinity come from the
// leading terms. Throws NotSquarefreeError if gcd(p, p') is non-constant.
int sturm_real_root_count(const IntPolynomial& p);

// r1 = real root count, r2 = (degree - r1)/2. Irreducibility of p is not
// checked; for reducible squarefree p this is the etale-algebra signature.
Signature signature(const IntPolynomial& p);

}  // namespace zetadet
