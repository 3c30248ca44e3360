// qu - command line front end for the qu library
//
// Every subcommand reads QU notation from its positional arguments ("-" or
// a missing argument means standard input) and writes canonical notation,
// a number, points or a rendering to standard output. Exit codes: 0 ok,
// 1 bad notation or usage, 2 violated precondition, 3 I/O failure.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qu/qu.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

// Positional QU-notation argument; "-" pulls the text from standard input.
std::string input_text(const std::string& arg) { return arg == "-" ? read_stdin() : arg; }

qu::Rational parse_rational(const std::string& text) {
    try {
        const std::size_t slash = text.find('/');
        if (slash == std::string::npos) return qu::Rational(std::stoll(text));
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + text + "'");
        return qu::Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw UsageError("invalid rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("rational out of range '" + text + "'");
    }
}

qu::MetricConfig metric_config(const std::string& unit, const std::string& weights,
                               qu::Dimension dim) {
    qu::MetricConfig cfg;
    cfg.unit = parse_rational(unit);
    if (!weights.empty()) {
        std::vector<qu::Rational> per_axis;
        std::stringstream stream(weights);
        std::string part;
        while (std::getline(stream, part, ',')) per_axis.push_back(parse_rational(part));
        cfg.per_axis = std::move(per_axis);
    }
    cfg.validate(dim);
    return cfg;
}

qu::Digit single_digit(const std::string& flag, const std::string& token, qu::Dimension dim) {
    const qu::QuString s = qu::parse(token, dim);
    if (s.size() != 1 || s.has_origin())
        throw UsageError(flag + " expects a single digit token such as 1+ or 2-o");
    return s.digits().front();
}

qu::LatticeSample read_samples(const std::string& path) {
    std::string content;
    if (path == "-") {
        content = read_stdin();
    } else {
        std::ifstream file(path);
        if (!file) throw IoError("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        content = buffer.str();
    }
    qu::LatticeSample samples;
    std::stringstream stream(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long long x = 0, y = 0;
        std::string rest;
        if (!(fields >> x >> y) || (fields >> rest))
            throw qu::ParseError(
                {0, "line " + std::to_string(line_no) + ": expected two integers"});
        samples.points.push_back({x, y});
    }
    return samples;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    file << text;
    if (!file) throw IoError("write to '" + out_path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-unary taxicab path strings"};
    app.require_subcommand(1);

    int dim_n = 2;
    std::string unit = "1";
    std::string weights;
    app.add_option("--dim", dim_n, "number of axes (alphabet size 4n+1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--unit", unit, "step length, integer or p/q (default 1)");
    app.add_option("--weights", weights, "per-axis step lengths, comma separated");

    std::string text = "-", text_b, pattern, sign = "+", format = "ascii", out_path;
    std::string digit_i, digit_j;
    long long factor = 1, dist = 0, q = 1, r = 0, m = 1, n = 1, periods = 1;
    long long cell = 20, margin = 10;
    int axis = 1, angle = 0;
    bool remove_prefix = false, arc = false, gap = false;
    bool show_grid = true, show_origin = true;

    CLI::App* cmd_parse = app.add_subcommand("parse", "echo the canonical form");
    cmd_parse->add_option("text", text, "QU notation or -");

    CLI::App* cmd_normalize = app.add_subcommand("normalize", "reduce to the normal form");
    cmd_normalize->add_option("text", text, "QU notation or -");

    CLI::App* cmd_concat = app.add_subcommand("concat", "concatenate two strings");
    cmd_concat->add_option("a", text, "left operand")->required();
    cmd_concat->add_option("b", text_b, "right operand")->required();

    CLI::App* cmd_sub = app.add_subcommand("sub", "remove a suffix (or prefix) from a string");
    cmd_sub->add_option("total", text, "string to subtract from")->required();
    cmd_sub->add_option("part", text_b, "suffix (or prefix) to remove")->required();
    cmd_sub->add_flag("--prefix", remove_prefix, "remove from the front instead of the back");

    CLI::App* cmd_scale = app.add_subcommand("scale", "repeat every digit in place");
    cmd_scale->add_option("text", text, "QU notation or -");
    cmd_scale->add_option("--factor", factor, "integer factor, at least 1")->required();

    CLI::App* cmd_len = app.add_subcommand("len", "taxicab length (or --arc / --gap)");
    cmd_len->add_option("text", text, "QU notation or -");
    CLI::Option* arc_flag = cmd_len->add_flag("--arc", arc, "total pen-down ink instead");
    cmd_len->add_flag("--gap", gap, "total pen-up gap instead")->excludes(arc_flag);

    CLI::App* cmd_dot = app.add_subcommand("dot", "inner product of two strings");
    cmd_dot->add_option("a", text, "left operand")->required();
    cmd_dot->add_option("b", text_b, "right operand")->required();

    CLI::App* cmd_translate = app.add_subcommand("translate", "prefix with pen-up digits");
    cmd_translate->add_option("text", text, "QU notation or -");
    cmd_translate->add_option("--axis", axis, "axis to move along")->required();
    cmd_translate->add_option("--sign", sign, "+ or - (default +)")
        ->check(CLI::IsMember({"+", "-"}));
    cmd_translate->add_option("--dist", dist, "number of units")->required();

    CLI::App* cmd_rotate = app.add_subcommand("rotate", "rotate a single-digit run");
    cmd_rotate->add_option("text", text, "QU notation or -");
    CLI::Option* opt_angle =
        cmd_rotate->add_option("--angle", angle, "named angle: a multiple of 45 in 45..315");
    cmd_rotate->add_option("--i", digit_i, "first target digit")->excludes(opt_angle);
    cmd_rotate->add_option("--q", q, "multiplicity of --i (default 1)")->excludes(opt_angle);
    cmd_rotate->add_option("--j", digit_j, "second target digit")->excludes(opt_angle);
    cmd_rotate->add_option("--r", r, "multiplicity of --j (default 0)")->excludes(opt_angle);

    CLI::App* cmd_st = app.add_subcommand("st", "shape-transform a single-digit run");
    cmd_st->add_option("text", text, "QU notation or -");
    cmd_st->add_option("--pattern", pattern, "dotless QU string; run lengths are multiplicities")
        ->required();

    CLI::App* cmd_fn_line = app.add_subcommand("fn-line", "encode the line y = (m/n) x");
    cmd_fn_line->add_option("--m", m, "rise per period")->required();
    cmd_fn_line->add_option("--n", n, "run per period")->required();
    cmd_fn_line->add_option("--periods", periods, "periods to emit (default 1)");

    CLI::App* cmd_fn_points =
        app.add_subcommand("fn-points", "encode \"x y\" sample lines from a file");
    cmd_fn_points->add_option("file", text, "path or -")->required();

    CLI::App* cmd_fn_decode =
        app.add_subcommand("fn-decode", "decode a graph string back to sample points");
    cmd_fn_decode->add_option("text", text, "QU notation or -");

    CLI::App* cmd_render = app.add_subcommand("render", "draw a string as ascii or svg");
    cmd_render->add_option("text", text, "QU notation or -");
    cmd_render->add_option("--format", format, "ascii (default) or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    cmd_render->add_option("--out", out_path, "write to a file instead of standard output");
    cmd_render->add_option("--cell", cell, "svg pixels per lattice unit (default 20)");
    cmd_render->add_option("--margin", margin, "svg margin in pixels (default 10)");
    cmd_render->add_flag("--grid,!--no-grid", show_grid, "svg background grid (default on)");
    cmd_render->add_flag("--origin,!--no-origin", show_origin, "svg origin dot (default on)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        const qu::Dimension dim(dim_n);
        std::string output;

        if (cmd_parse->parsed()) {
            output = qu::print(qu::parse(input_text(text), dim)) + "\n";
        } else if (cmd_normalize->parsed()) {
            output = qu::print(qu::normalize(qu::parse(input_text(text), dim))) + "\n";
        } else if (cmd_concat->parsed()) {
            output = qu::print(qu::concat(qu::parse(input_text(text), dim),
                                          qu::parse(input_text(text_b), dim))) +
                     "\n";
        } else if (cmd_sub->parsed()) {
            const qu::QuString total = qu::parse(input_text(text), dim);
            const qu::QuString part = qu::parse(input_text(text_b), dim);
            output = qu::print(remove_prefix ? qu::subtract_prefix(part, total)
                                             : qu::subtract_suffix(total, part)) +
                     "\n";
        } else if (cmd_scale->parsed()) {
            output = qu::print(qu::scalar_mul(factor, qu::parse(input_text(text), dim))) + "\n";
        } else if (cmd_len->parsed()) {
            const qu::QuString s = qu::parse(input_text(text), dim);
            const qu::MetricConfig cfg = metric_config(unit, weights, dim);
            const qu::Rational value = arc   ? qu::arc_length(s, cfg)
                                       : gap ? qu::gap_length(s, cfg)
                                             : qu::taxicab_length(s, cfg);
            output = qu::format_rational(value) + "\n";
        } else if (cmd_dot->parsed()) {
            const qu::MetricConfig cfg = metric_config(unit, weights, dim);
            output = qu::format_rational(qu::inner_product(qu::parse(input_text(text), dim),
                                                           qu::parse(input_text(text_b), dim),
                                                           cfg)) +
                     "\n";
        } else if (cmd_translate->parsed()) {
            output = qu::print(qu::translate(qu::parse(input_text(text), dim), axis,
                                             sign == "+" ? qu::Sign::plus : qu::Sign::minus,
                                             dist)) +
                     "\n";
        } else if (cmd_rotate->parsed()) {
            const qu::QuString s = qu::parse(input_text(text), dim);
            if (*opt_angle) {
                if (dim.n() != 2) throw UsageError("--angle requires --dim 2");
                output = qu::print(qu::rotate_degrees(s, angle)) + "\n";
            } else {
                if (digit_i.empty()) throw UsageError("rotate needs --angle or --i/--q/--j/--r");
                const qu::Digit di = single_digit("--i", digit_i, dim);
                const qu::Digit dj =
                    digit_j.empty() ? di : single_digit("--j", digit_j, dim);
                output = qu::print(qu::rotate(s, di, q, dj, r)) + "\n";
            }
        } else if (cmd_st->parsed()) {
            output = qu::print(qu::shape_transform(
                         qu::parse(input_text(text), dim),
                         qu::TransformPattern::from_text(pattern, dim))) +
                     "\n";
        } else if (cmd_fn_line->parsed()) {
            output = qu::print(qu::encode_linear(m, n, periods)) + "\n";
        } else if (cmd_fn_points->parsed()) {
            output = qu::print(qu::encode_samples(read_samples(text))) + "\n";
        } else if (cmd_fn_decode->parsed()) {
            const qu::LatticeSample points =
                qu::decode_to_points(qu::parse(input_text(text), dim));
            for (const auto& p : points.points)
                output += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
        } else if (cmd_render->parsed()) {
            const qu::DrawnShape shape = qu::to_shape(qu::trace(qu::parse(input_text(text), dim)));
            if (format == "svg") {
                const qu::RenderConfig cfg{cell, show_grid, show_origin, margin};
                write_output(qu::render_svg(shape, cfg), out_path);
            } else {
                write_output(qu::render_ascii(shape), out_path);
            }
            return 0;
        }

        std::cout << output;
        return 0;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const qu::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const qu::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
