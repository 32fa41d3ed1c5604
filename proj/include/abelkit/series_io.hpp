#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "abelkit/abel_form.hpp"
#include "abelkit/power_series.hpp"

namespace abelkit {

// Canonical text: terms in increasing exponent as "c x^n" joined by " + " /
// " - ", followed by "+ O(x^(N+1))" when truncated. Example:
//   -1 x^2 - 1/2 x^3 - 5/12 x^4 + O(x^5)
std::string to_text(const RationalSeries &s, std::string_view var = "x");
std::string to_text(const LaurentSeries &s, std::string_view var = "x");
std::string to_text(const AbelForm &g, std::string_view var = "x");

// CSV rows "exponent,numerator,denominator" after a header line and a
// "# order=N" line ("# order=exact" for polynomials).
std::string to_csv(const RationalSeries &s);
std::string to_csv(const LaurentSeries &s);
RationalSeries series_from_csv(std::string_view csv);
LaurentSeries laurent_from_csv(std::string_view csv);

} // namespace abelkit
