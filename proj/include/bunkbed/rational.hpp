#ifndef BUNKBED_RATIONAL_HPP
#define BUNKBED_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bunkbed/errors.hpp"

namespace bunkbed {

// All counting and polynomial coefficients use arbitrary-precision integers;
// all probabilities are exact rationals. No floating point anywhere near a
// "does this equal zero" question.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form "num/den", lowest terms, den >= 1. Used in all JSON.
inline std::string rat_str(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "a/b" or a bare integer. Exact; no decimals.
inline Rat parse_rat(const std::string& text) {
    auto bad = [&] { throw ValidationError("not a rational: '" + text + "' (expected 'a/b' or integer)"); };
    if (text.empty()) bad();
    std::string::size_type slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(); // unreachable
}

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

} // namespace bunkbed

#endif
