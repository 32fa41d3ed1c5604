#include "abelkit/linear_form.hpp"

#include "abelkit/error.hpp"

namespace abelkit {

std::string LinearForm::str() const
{
    if (!is_symbolic())
        return constant_.str();
    std::string s;
    if (!constant_.is_zero())
        s = constant_.str() + (slope_.sign() < 0 ? " - " : " + ");
    else if (slope_.sign() < 0)
        s = "-";
    Rational m = slope_.abs();
    if (m != Rational(1))
        s += m.str() + "*";
    return s + "u";
}

LinearForm &LinearForm::operator+=(const LinearForm &o)
{
    constant_ += o.constant_;
    slope_ += o.slope_;
    return *this;
}

LinearForm &LinearForm::operator-=(const LinearForm &o)
{
    constant_ -= o.constant_;
    slope_ -= o.slope_;
    return *this;
}

LinearForm &LinearForm::operator*=(const Rational &r)
{
    constant_ *= r;
    slope_ *= r;
    return *this;
}

LinearForm &LinearForm::operator*=(const LinearForm &o)
{
    if (is_symbolic() && o.is_symbolic())
        throw BothSymbolic("product " + str() + " * " + o.str() + " is quadratic in u");
    // (c + s u)(d + t u) with s*t = 0
    Rational slope = constant_ * o.slope_ + slope_ * o.constant_;
    constant_ *= o.constant_;
    slope_ = std::move(slope);
    return *this;
}

Rational solve_linear(const LinearForm &form)
{
    if (!form.is_symbolic())
        throw DegenerateSolve("equation " + form.str() + " = 0 has no u term");
    return -form.constant() / form.slope();
}

} // namespace abelkit
