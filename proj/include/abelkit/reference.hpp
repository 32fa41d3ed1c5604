#pragma once

#include <string>
#include <vector>

#include "abelkit/bigfloat.hpp"

namespace abelkit::reference {

// Published series listings used as regression data.
enum class SeriesKind { Lambda, AbelDerivative, Abel };

struct SeriesTerm {
    int exponent; // ignored for the log term
    std::string value;
    bool is_log = false;
};

struct PublishedSeries {
    std::string id;
    std::string function;
    SeriesKind kind;
    // Listing equals sign * (internal series).
    int sign = 1;
    std::vector<SeriesTerm> terms;
};

const std::vector<PublishedSeries> &series();

// How a published constant is reproduced.
enum class ConstantKind {
    Abel,          // G(x)
    Principal,     // G(x) - delta
    XexpHalf,      // square root of x e^x
    XplusinvHalf,  // square root of x + 1/x
    HalfIterate,   // theta^[1/2](x)
};

struct PublishedConstant {
    std::string id;
    ConstantKind kind;
    std::string function; // catalog name (unused for the composite kinds)
    std::string argument; // rational, decimal or "pi/2"
    std::string digits;   // published decimal expansion
};

const std::vector<PublishedConstant> &constants();

// Parses a constant's argument, including the token "pi/2".
BigFloat argument_value(const std::string &argument, Precision p);

} // namespace abelkit::reference
