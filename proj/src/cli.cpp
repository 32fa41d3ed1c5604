#include "abelkit/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "abelkit/abel_eval.hpp"
#include "abelkit/catalog.hpp"
#include "abelkit/ej_solver.hpp"
#include "abelkit/error.hpp"
#include "abelkit/ml_limit.hpp"
#include "abelkit/series_io.hpp"
#include "abelkit/verify.hpp"

namespace abelkit::cli {

namespace {

// Names handled outside the catalog: x e^x on the whole line and x + 1/x.
constexpr const char *kXexp = "xexp";
constexpr const char *kXplusinv = "x-plus-inv";

struct Options {
    std::string fn;
    std::string x_positional;
    std::string x;
    std::string y;
    std::string t;
    std::string p;
    std::string from;
    std::string to;
    std::string series = "lambda";
    std::string out_path;
    int digits = 50;
    int terms = 16;
    int count = 40;
    long nmax = 1L << 16;
    bool csv = false;
    bool abel = false;
};

bool is_composite(const std::string &name)
{
    return name == kXexp || name == kXplusinv;
}

BaseFunctionPtr resolve_function(const Options &o)
{
    std::optional<Rational> p;
    if (!o.p.empty())
        p = Rational::parse(o.p);
    return catalog::resolve(o.fn, p);
}

// Rationals, decimals, "pi" and "pi/k".
BigFloat parse_real(const std::string &text, Precision prec)
{
    std::string s = text;
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.erase(0, 1);
    }
    BigFloat v(prec);
    if (s == "pi")
        v = BigFloat::pi(prec);
    else if (s.rfind("pi/", 0) == 0)
        v = BigFloat::pi(prec) / BigFloat(Rational::parse(s.substr(3)), prec);
    else
        return BigFloat::parse(text, prec);
    return neg ? -v : v;
}

std::string required_x(const Options &o)
{
    if (!o.x.empty())
        return o.x;
    if (!o.x_positional.empty())
        return o.x_positional;
    throw CLI::RequiredError("--x");
}

Precision input_precision(int digits)
{
    return Precision::from_digits(digits + 40);
}

int cmd_list(const Options &o, std::ostream &out)
{
    auto end_text = [](const BigFloat &v) { return v.is_finite() ? v.to_fixed(6) : std::string("inf"); };
    const Precision p{64};
    if (o.csv)
        out << "name,tau,gamma,basin_end,delta_conjecture,formula\n";
    for (const auto &fn : catalog::entries()) {
        const std::string delta = fn->delta_conjecture ? fn->delta_conjecture->str() : "-";
        if (o.csv) {
            out << fn->name << ',' << fn->tau << ',' << fn->gamma << ',' << end_text(fn->basin_end(p)) << ','
                << delta << ",\"" << fn->formula << "\"\n";
        } else {
            out << std::left << std::setw(18) << fn->name << " tau=" << fn->tau << "  gamma=" << std::setw(6)
                << fn->gamma.str() << "  basin=(0, " << end_text(fn->basin_end(p)) << ")  delta=" << std::setw(16)
                << delta << "  " << fn->formula << '\n';
        }
    }
    if (!o.csv) {
        out << std::left << std::setw(18) << "pow-p" << " theta(x) = x/(1+x)^p, choose p with --p\n";
        out << std::left << std::setw(18) << kXexp << " x*exp(x) on the real line (eval, half, plot)\n";
        out << std::left << std::setw(18) << kXplusinv << " x + 1/x for x > 0 (eval, half, plot)\n";
    }
    return kOk;
}

int cmd_expand(const Options &o, std::ostream &out)
{
    const auto fn = resolve_function(o);
    const auto ej = julia_series_cached(*fn, o.terms);
    if (o.csv) {
        if (o.series == "lambda")
            out << to_csv(ej->lambda);
        else if (o.series == "derivative")
            out << to_csv(ej->abel_derivative);
        else
            throw CLI::ValidationError("--series", "expected lambda or derivative");
        return kOk;
    }
    const bool flip = fn->presentation_sign < 0;
    out << "lambda(x) = " << to_text(ej->lambda) << '\n';
    out << (flip ? "-g'(x) = " : "g'(x) = ") << to_text(ej->abel_derivative) << '\n';
    out << (flip ? "-g(x) = " : "g(x) = ") << to_text(ej->abel) << '\n';
    return kOk;
}

void print_value(std::ostream &out, const BigFloat &v, int digits)
{
    out << v.to_fixed(digits) << '\n';
}

int cmd_eval(const Options &o, std::ostream &out)
{
    const BigFloat x = parse_real(required_x(o), input_precision(o.digits));
    if (o.fn == kXexp) {
        print_value(out, f67(x, o.digits), o.digits);
        return kOk;
    }
    if (o.fn == kXplusinv) {
        if (x.sign() <= 0)
            throw OutOfBasin("x + 1/x needs x > 0");
        const auto r = abel_value(*catalog::lookup("x-over-1px2"), 1L / x, o.digits);
        print_value(out, r.value, o.digits);
        out << "error_estimate=" << r.error_estimate.to_sci(3) << " orbit=" << r.n_used << " K=" << r.K_used << '\n';
        return kOk;
    }
    const auto r = abel_value(*resolve_function(o), x, o.digits);
    print_value(out, r.value, o.digits);
    out << "error_estimate=" << r.error_estimate.to_sci(3) << " orbit=" << r.n_used << " K=" << r.K_used << '\n';
    return kOk;
}

int cmd_inverse(const Options &o, std::ostream &out)
{
    if (o.y.empty())
        throw CLI::RequiredError("--y");
    const BigFloat y = parse_real(o.y, input_precision(o.digits));
    print_value(out, abel_inverse(*resolve_function(o), y, o.digits), o.digits);
    return kOk;
}

BigFloat half_iterate(const std::string &name, const Options &o, const BigFloat &x)
{
    if (name == kXexp)
        return xexp_half(x, o.digits);
    if (name == kXplusinv)
        return xplusinv_half(x, o.digits);
    return fractional_iterate(*resolve_function(o), Rational(1, 2), x, o.digits);
}

int cmd_half(const Options &o, std::ostream &out)
{
    const BigFloat x = parse_real(required_x(o), input_precision(o.digits));
    print_value(out, half_iterate(o.fn, o, x), o.digits);
    return kOk;
}

int cmd_iterate(const Options &o, std::ostream &out)
{
    if (o.t.empty())
        throw CLI::RequiredError("--t");
    const Rational t = Rational::parse(o.t);
    const BigFloat x = parse_real(required_x(o), input_precision(o.digits));
    print_value(out, fractional_iterate(*resolve_function(o), t, x, o.digits), o.digits);
    return kOk;
}

int cmd_ml(const Options &o, std::ostream &out)
{
    const std::string xs = o.x.empty() && o.x_positional.empty() ? "1" : required_x(o);
    const BigFloat x = parse_real(xs, Precision::from_digits(90));
    const MLEstimate e = o.fn == kXplusinv ? ml_value_xplusinv(x, o.nmax) : ml_value(*resolve_function(o), x, o.nmax);
    if (o.fn != kXplusinv)
        out << "formula: " << MLFormula::for_function(*resolve_function(o)).str() << '\n';
    out << e.value.to_fixed(std::min(o.digits, 30)) << " +/- " << e.error_bar.to_sci(3) << '\n';
    out << "n_max=" << e.n_max << " samples=" << e.samples << " model_order=" << e.model_order << '\n';
    return kOk;
}

int cmd_delta(const Options &o, std::ostream &out)
{
    const std::string xs = o.x.empty() && o.x_positional.empty() ? "1" : required_x(o);
    const auto fn = resolve_function(o);
    const BigFloat x = parse_real(xs, Precision::from_digits(90));
    const DeltaReport r = delta_estimate(*fn, x, o.nmax);
    const int shown = 25;
    auto line = [&](const std::string &key, const std::string &value) {
        out << std::left << std::setw(26) << key << value << '\n';
    };
    line("function", r.function);
    line("x", xs);
    line("n_max", std::to_string(r.n_max));
    line("ej_value", r.ej_value.to_fixed(shown));
    line("ml_value", r.ml.value.to_fixed(shown) + " +/- " + r.ml.error_bar.to_sci(3));
    line("delta_estimate", r.delta_estimate.to_fixed(shown) + " +/- " + r.ml.error_bar.to_sci(3));
    if (r.conjectured) {
        line("delta_conjectured", r.conjectured->str() + " = " + r.delta_conjectured->to_fixed(shown));
        line("|estimate-conjectured|", r.discrepancy_conjectured->to_sci(3));
    } else {
        line("delta_conjectured", "-");
    }
    line("delta_hypothesis", r.hypothesis.str() + " = " + r.delta_hypothesis.to_fixed(shown));
    line("|estimate-hypothesis|", r.discrepancy_hypothesis.to_sci(3));
    return kOk;
}

int cmd_plot(const Options &o, std::ostream &default_out)
{
    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file)
            throw CLI::ValidationError("--out", "cannot open " + o.out_path);
    }
    std::ostream &out = o.out_path.empty() ? default_out : file;
    const Precision p = input_precision(o.digits);

    BigFloat lo(0L, p), hi(0L, p);
    bool include_zero = false;
    BaseFunctionPtr fn;
    if (o.fn == kXexp) {
        lo = BigFloat(-2L, p);
        hi = BigFloat(2L, p);
        include_zero = !o.abel;
    } else if (o.fn == kXplusinv) {
        hi = BigFloat(4L, p);
    } else {
        fn = resolve_function(o);
        hi = min(fn->branch_end(p), BigFloat(3L, p));
    }
    if (!o.from.empty())
        lo = parse_real(o.from, p);
    if (!o.to.empty())
        hi = parse_real(o.to, p);
    if (o.count < 1 || !(lo < hi))
        throw CLI::ValidationError("plot", "need --from < --to and --count >= 1");

    // lo is excluded when it is a pole or the fixed point
    std::vector<BigFloat> xs;
    for (int i = 0; i <= o.count; ++i) {
        BigFloat x = lo + (hi - lo) * static_cast<long>(i) / static_cast<long>(o.count);
        if (x.is_zero() && !include_zero)
            continue;
        if (i == 0 && lo.is_zero())
            continue;
        xs.push_back(std::move(x));
    }

    const int shown = std::min(o.digits, 20);
    if (o.abel) {
        out << "x,abel\n";
        for (const auto &x : xs) {
            BigFloat g(p);
            if (o.fn == kXexp)
                g = f67(x, o.digits);
            else if (o.fn == kXplusinv)
                g = abel_value(*catalog::lookup("x-over-1px2"), 1L / x, o.digits).value;
            else
                g = abel_value(*fn, x, o.digits).value;
            out << x.to_fixed(shown) << ',' << g.to_fixed(shown) << '\n';
        }
        return kOk;
    }
    out << "x,theta,half_iterate\n";
    for (const auto &x : xs) {
        BigFloat theta(p);
        if (o.fn == kXexp)
            theta = x * exp(x);
        else if (o.fn == kXplusinv)
            theta = x + 1L / x;
        else
            theta = eval_forward(*fn, x);
        out << x.to_fixed(shown) << ',' << theta.to_fixed(shown) << ',' << half_iterate(o.fn, o, x).to_fixed(shown)
            << '\n';
    }
    return kOk;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const auto rows = verify_all(o.digits);
    bool all = true;
    for (const auto &r : rows) {
        all = all && r.pass;
        out << std::left << std::setw(9) << r.category << std::setw(18) << r.id << std::right << std::setw(4)
            << r.matched << '/' << std::left << std::setw(4) << r.required << (r.pass ? "PASS" : "FAIL") << "  "
            << r.computed << '\n';
        if (!r.pass)
            out << std::setw(36) << "" << "expected " << r.expected << '\n';
    }
    out << (all ? "all rows PASS" : "some rows FAIL") << '\n';
    return all ? kOk : kNumeric;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"abelkit"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Abel functions, fractional iterates and normalization constants", "abelkit"};
    app.require_subcommand(1);
    Options o;

    auto add_fn = [&](CLI::App *sub) {
        sub->add_option("fn", o.fn, "function name (see `list`)")->required();
        sub->add_option("--p", o.p, "exponent p for pow-p");
    };
    auto add_digits = [&](CLI::App *sub) {
        sub->add_option("--digits", o.digits, "decimal places")->check(CLI::Range(1, 2000));
    };
    auto add_x = [&](CLI::App *sub) {
        sub->add_option("point", o.x_positional, "argument (same as --x)");
        sub->add_option("--x", o.x, "argument (rational, decimal, pi/k)");
    };

    auto *list = app.add_subcommand("list", "catalog of base functions");
    list->add_flag("--csv", o.csv, "CSV output");

    auto *expand = app.add_subcommand("expand", "exact lambda, g' and g series");
    add_fn(expand);
    expand->add_option("--terms", o.terms, "truncation K")->check(CLI::Range(4, 400));
    expand->add_flag("--csv", o.csv, "CSV output");
    expand->add_option("--series", o.series, "with --csv: lambda or derivative");

    auto *eval = app.add_subcommand("eval", "Abel function value");
    add_fn(eval);
    add_x(eval);
    add_digits(eval);

    auto *inverse = app.add_subcommand("inverse", "solve G(z) = y");
    add_fn(inverse);
    inverse->add_option("--y", o.y, "Abel value");
    add_digits(inverse);

    auto *iterate = app.add_subcommand("iterate", "fractional iterate theta^[t](x)");
    add_fn(iterate);
    add_x(iterate);
    iterate->add_option("--t", o.t, "rational iteration count");
    add_digits(iterate);

    auto *half = app.add_subcommand("half", "half-iterate theta^[1/2](x)");
    add_fn(half);
    add_x(half);
    add_digits(half);

    auto *delta = app.add_subcommand("delta", "EJ versus ML normalization offset");
    add_fn(delta);
    add_x(delta);
    delta->add_option("--nmax", o.nmax, "orbit length for ML")->check(CLI::Range(64L, 1L << 24));

    auto *ml = app.add_subcommand("ml", "ML limit with extrapolation");
    add_fn(ml);
    add_x(ml);
    ml->add_option("--nmax", o.nmax, "orbit length")->check(CLI::Range(64L, 1L << 24));
    add_digits(ml);

    auto *plot = app.add_subcommand("plot", "CSV samples of theta and its half-iterate");
    add_fn(plot);
    plot->add_option("--from", o.from, "left end");
    plot->add_option("--to", o.to, "right end");
    plot->add_option("--count", o.count, "number of intervals");
    plot->add_option("--out", o.out_path, "write CSV to this path");
    plot->add_flag("--abel", o.abel, "sample the Abel function instead");
    int plot_digits = 20;
    plot->add_option("--digits", plot_digits, "working decimal places")->check(CLI::Range(5, 200));

    auto *verify = app.add_subcommand("verify", "recompute every published series and constant");
    verify->add_option("--digits", o.digits, "decimal places")->check(CLI::Range(1, 60));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        CLI::App *sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "plot")
            o.digits = plot_digits;
        const bool function_command = name != "list" && name != "verify";
        const bool composite_ok = name == "eval" || name == "half" || name == "plot" ||
                                  (name == "ml" && o.fn == kXplusinv);
        if (function_command && is_composite(o.fn) && !composite_ok)
            throw CLI::ValidationError("fn", o.fn + " only supports eval, half and plot");
        if (name == "list")
            return cmd_list(o, out);
        if (name == "expand")
            return cmd_expand(o, out);
        if (name == "eval")
            return cmd_eval(o, out);
        if (name == "inverse")
            return cmd_inverse(o, out);
        if (name == "iterate")
            return cmd_iterate(o, out);
        if (name == "half")
            return cmd_half(o, out);
        if (name == "delta")
            return cmd_delta(o, out);
        if (name == "ml")
            return cmd_ml(o, out);
        if (name == "plot")
            return cmd_plot(o, out);
        return cmd_verify(o, out);
    } catch (const CLI::Error &e) {
        err << "abelkit: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericError &e) {
        err << "abelkit: " << e.what() << '\n';
        return kNumeric;
    } catch (const Error &e) {
        err << "abelkit: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace abelkit::cli
