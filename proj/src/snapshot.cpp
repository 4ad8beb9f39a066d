#include "schro/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "schro/errors.hpp"
#include "text_impl.hpp"

namespace schro {
namespace {

using detail::format_double;

double parse_double(std::string_view text, int line) {
    double v = 0.0;
    if (!detail::try_parse_double(text, v))
        throw ParseError("snapshot: malformed number '" + std::string(text) +
                             "'",
                         line);
    return v;
}

std::string_view next_field(std::string_view& rest, int line) {
    if (rest.empty())
        throw ParseError("snapshot: missing column", line);
    const size_t comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    return field;
}

}  // namespace

void snapshot_write(const WaveFunction& u, const GridCircle& grid, double time,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("snapshot: cannot open " + path);
    out << "# n_intervals=" << grid.n_intervals
        << " length=" << format_double(grid.length)
        << " time=" << format_double(time) << " representation="
        << (u.rep == Representation::interface ? "interface" : "periodic")
        << '\n';
    out << "x,re,im,abs2\n";
    for (size_t j = 0; j < u.values.size(); ++j) {
        const std::complex<double> z = u.values[j];
        out << format_double(grid.x(static_cast<int>(j))) << ','
            << format_double(z.real()) << ',' << format_double(z.imag()) << ','
            << format_double(std::norm(z)) << '\n';
    }
    if (!out) throw UsageError("snapshot: write failed for " + path);
}

Snapshot snapshot_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("snapshot: cannot open " + path);

    std::string line;
    int lineno = 1;
    if (!std::getline(in, line))
        throw ParseError("snapshot: empty file", lineno);

    int n = 0;
    double length = 0.0, time = 0.0;
    std::string rep_name;
    {
        std::istringstream header(line);
        std::string tag;
        header >> tag;
        if (tag != "#") throw ParseError("snapshot: missing header line", lineno);
        std::string kv;
        while (header >> kv) {
            const size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParseError("snapshot: malformed header field '" + kv + "'",
                                 lineno);
            const std::string key = kv.substr(0, eq);
            const std::string val = kv.substr(eq + 1);
            if (key == "n_intervals")
                n = static_cast<int>(parse_double(val, lineno));
            else if (key == "length")
                length = parse_double(val, lineno);
            else if (key == "time")
                time = parse_double(val, lineno);
            else if (key == "representation")
                rep_name = val;
            else
                throw ParseError("snapshot: unknown header key '" + key + "'",
                                 lineno);
        }
    }
    Representation rep;
    if (rep_name == "interface")
        rep = Representation::interface;
    else if (rep_name == "periodic")
        rep = Representation::periodic;
    else
        throw ParseError("snapshot: bad representation '" + rep_name + "'",
                         lineno);

    ++lineno;
    if (!std::getline(in, line) || line != "x,re,im,abs2")
        throw ParseError("snapshot: missing column header", lineno);

    Snapshot snap;
    snap.grid = make_grid(length, n);
    snap.time = time;
    snap.u.rep = rep;
    const size_t expected = static_cast<size_t>(snap.grid.n_values(rep));
    snap.u.values.reserve(expected);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string_view rest(line);
        next_field(rest, lineno);  // x column: informational
        const double re = parse_double(next_field(rest, lineno), lineno);
        const double im = parse_double(next_field(rest, lineno), lineno);
        next_field(rest, lineno);  // |u|^2 column: derived
        if (!rest.empty())
            throw ParseError("snapshot: trailing columns", lineno);
        snap.u.values.emplace_back(re, im);
    }
    if (snap.u.values.size() != expected)
        throw ParseError("snapshot: expected " + std::to_string(expected) +
                             " rows, found " + std::to_string(snap.u.values.size()),
                         lineno);
    return snap;
}

Snapshot snapshot_read(const std::string& path, const GridCircle& expected,
                       Representation expected_rep) {
    Snapshot snap = snapshot_read(path);
    if (snap.grid.n_intervals != expected.n_intervals ||
        snap.grid.length != expected.length || snap.u.rep != expected_rep)
        throw UsageError("snapshot: stored grid does not match the requested "
                         "grid: " + path);
    return snap;
}

}  // namespace schro
