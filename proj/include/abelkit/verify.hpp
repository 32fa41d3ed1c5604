#pragma once

#include <string>
#include <vector>

#include "abelkit/bigfloat.hpp"
#include "abelkit/catalog.hpp"
#include "abelkit/reference.hpp"

namespace abelkit {

struct VerifyRow {
    std::string category; // "series" or "constant"
    std::string id;
    std::string expected;
    std::string computed;
    int matched = 0;  // agreeing digits, or agreeing coefficients for series rows
    int required = 0;
    bool pass = false;
};

// Truncation used when comparing against published listings.
inline constexpr int kVerifySeriesK = 20;

// Exact comparison of a listing against the EJ output for `fn` (normally the catalog entry).
VerifyRow verify_series(const reference::PublishedSeries &s, const BaseFunction &fn);
VerifyRow verify_series(const reference::PublishedSeries &s);

// The constant recomputed to `digits` places past the decimal point.
BigFloat compute_constant(const reference::PublishedConstant &c, int digits);
VerifyRow verify_constant(const reference::PublishedConstant &c, int digits);

// Worker count from ABELKIT_THREADS, else the hardware concurrency.
unsigned verify_threads();

// Every series row, then every constant row, in table order. digits <= 60.
std::vector<VerifyRow> verify_all(int digits, unsigned threads = 0);

} // namespace abelkit
