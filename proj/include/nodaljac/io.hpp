#ifndef NODALJAC_IO_HPP
#define NODALJAC_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "nodaljac/cantor.hpp"
#include "nodaljac/nodal.hpp"

namespace nodaljac {

/// Filesystem-level failure (open/read/write); format problems inside
/// the data throw std::invalid_argument instead.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial text: comma-separated decimal coefficients, ascending
// powers ("1,0,1" is x^2 + 1). The zero polynomial is "0". Parsing is
// strict: plain decimal digits only, every value canonical (below p).
std::string poly_to_string(const Poly& f);
Poly poly_from_string(const PrimeModulus& m, std::string_view text);

// Curve file, line-oriented:
//   p=<decimal prime>
//   f=<c0,c1,...,cd>
std::string curve_to_string(const NodalCurve& C);
NodalCurve curve_from_string(std::string_view text);
void write_curve_file(const NodalCurve& C, const std::filesystem::path& path);
NodalCurve read_curve_file(const std::filesystem::path& path);

// Element text: "identity", or "h=<c0,...,c_{d-1}>" with exactly d
// zero-padded canonical coefficients.
std::string element_to_string(const NodalCurve& C, const JacElement& D);

/// Syntax-level parse: checks shape, entry count and canonical range but
/// not class validity (the validate command reports that separately).
struct ParsedElement {
    bool identity = false;
    Poly rep;
};
ParsedElement parse_element_text(const NodalCurve& C, std::string_view text);

/// Full parse: syntax plus class validity; throws std::invalid_argument.
JacElement element_from_string(const NodalCurve& C, std::string_view text);

// Divisor text: "u=<coeffs>;v=<coeffs>".
std::string divisor_to_string(const MumfordDivisor& D);
MumfordDivisor divisor_from_string(const PrimeModulus& m, std::string_view text);

} // namespace nodaljac

#endif
