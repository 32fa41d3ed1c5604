#include "abelkit/series_io.hpp"

#include <sstream>
#include <vector>

#include "abelkit/error.hpp"

namespace abelkit {

namespace {

void append_term(std::string &out, const Rational &c, const std::string &monomial)
{
    if (out.empty())
        out = (c.sign() < 0 ? "-" : "") + c.abs().str();
    else
        out += (c.sign() < 0 ? " - " : " + ") + c.abs().str();
    if (!monomial.empty())
        out += " " + monomial;
}

std::string power(std::string_view var, int n)
{
    if (n == 0)
        return "";
    return std::string(var) + "^" + std::to_string(n);
}

std::string big_o(std::string_view var, int order)
{
    if (order >= kExactOrder)
        return "";
    return "O(" + std::string(var) + "^" + std::to_string(order + 1) + ")";
}

std::string join_tail(std::string body, const std::string &tail)
{
    if (tail.empty())
        return body.empty() ? "0" : body;
    return body.empty() ? tail : body + " + " + tail;
}

std::string order_line(int order)
{
    return "# order=" + (order >= kExactOrder ? std::string("exact") : std::to_string(order)) + "\n";
}

struct CsvRows {
    std::map<int, Rational> terms;
    int order = kExactOrder;
};

CsvRows parse_csv(std::string_view csv)
{
    CsvRows rows;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.rfind("# order=", 0) == 0) {
            std::string v = line.substr(8);
            if (v == "exact")
                rows.order = kExactOrder;
            else
                rows.order = static_cast<int>(Rational::parse(v).numerator().get_si());
            continue;
        }
        if (line.front() == '#')
            continue;
        if (!header_seen && line == "exponent,numerator,denominator") {
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ','))
            fields.push_back(f);
        if (fields.size() != 3)
            throw ParseError("expected 3 CSV fields in '" + line + "'");
        Rational e = Rational::parse(fields[0]);
        if (!e.is_integer() || !e.numerator().fits_sint_p())
            throw ParseError("bad exponent '" + fields[0] + "'");
        Rational num = Rational::parse(fields[1]), den = Rational::parse(fields[2]);
        if (!num.is_integer() || !den.is_integer() || den.sign() <= 0)
            throw ParseError("bad fraction in '" + line + "'");
        rows.terms[static_cast<int>(e.numerator().get_si())] += num / den;
    }
    return rows;
}

} // namespace

std::string to_text(const RationalSeries &s, std::string_view var)
{
    std::string out;
    for (const auto &[n, c] : s.terms())
        append_term(out, c, power(var, n));
    return join_tail(out, big_o(var, s.order()));
}

std::string to_text(const LaurentSeries &s, std::string_view var)
{
    std::string out;
    for (const auto &[n, c] : s.terms())
        append_term(out, c, power(var, n));
    return join_tail(out, big_o(var, s.order()));
}

std::string to_text(const AbelForm &g, std::string_view var)
{
    std::string out;
    if (!g.pole.is_zero())
        append_term(out, g.pole, power(var, -g.tau));
    if (!g.log.is_zero())
        append_term(out, g.log, "ln(" + std::string(var) + ")");
    for (const auto &[n, c] : g.taylor.terms())
        append_term(out, c, power(var, n));
    return join_tail(out, big_o(var, g.taylor.order()));
}

std::string to_csv(const RationalSeries &s)
{
    std::string out = "exponent,numerator,denominator\n" + order_line(s.order());
    for (const auto &[n, c] : s.terms())
        out += std::to_string(n) + "," + c.numerator().get_str() + "," + c.denominator().get_str() + "\n";
    return out;
}

std::string to_csv(const LaurentSeries &s)
{
    std::string out = "exponent,numerator,denominator\n" + order_line(s.order());
    for (const auto &[n, c] : s.terms())
        out += std::to_string(n) + "," + c.numerator().get_str() + "," + c.denominator().get_str() + "\n";
    return out;
}

RationalSeries series_from_csv(std::string_view csv)
{
    CsvRows rows = parse_csv(csv);
    return RationalSeries(RationalSeries::term_map(rows.terms.begin(), rows.terms.end()), rows.order);
}

LaurentSeries laurent_from_csv(std::string_view csv)
{
    CsvRows rows = parse_csv(csv);
    return LaurentSeries(std::move(rows.terms), rows.order);
}

} // namespace abelkit
