#include "striphom/io.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace striphom {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("parse error at line " + std::to_string(line) + ": " + what);
}

/// Strips comments and splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

Rat parse_rat(const std::string& s, int line) {
    try {
        return rat_from_string(s);
    } catch (const std::exception&) {
        parse_fail(line, "bad rational '" + s + "'");
    }
}

long parse_long(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        parse_fail(line, "bad integer '" + s + "'");
    }
}

StripPoint parse_point(const std::vector<std::string>& toks, std::size_t at, int line) {
    return StripPoint(parse_long(toks[at], line), parse_long(toks[at + 1], line),
                      parse_rat(toks[at + 2], line), parse_rat(toks[at + 3], line));
}

void write_point(std::ostream& out, const StripPoint& p) {
    out << p.k1() << ' ' << p.k2() << ' ' << rat_to_string(p.c1()) << ' '
        << rat_to_string(p.c2());
}

}  // namespace

PLPair read_complex(std::istream& in) {
    PLPair p;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "v") {
            if (toks.size() != 3) parse_fail(ln, "expected 'v <id> <rational>'");
            if (p.values.count(toks[1])) parse_fail(ln, "duplicate vertex '" + toks[1] + "'");
            p.values[toks[1]] = parse_rat(toks[2], ln);
            p.complex.add_closed({toks[1]});
        } else if (toks[0] == "s" || toks[0] == "a") {
            if (toks.size() < 2) parse_fail(ln, "empty simplex");
            std::vector<VertexId> vs(toks.begin() + 1, toks.end());
            for (const auto& v : vs)
                if (!p.values.count(v)) parse_fail(ln, "unknown vertex '" + v + "'");
            Simplex s;
            try {
                s = make_simplex(vs);
            } catch (const std::exception& e) {
                parse_fail(ln, e.what());
            }
            if (toks[0] == "s") p.complex.add_closed(s);
            else p.sub.add_closed(s);
        } else {
            parse_fail(ln, "unknown directive '" + toks[0] + "'");
        }
    }
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("invalid complex: ") + e.what());
    }
    return p;
}

void write_complex(std::ostream& out, const PLPair& p) {
    for (const auto& v : p.complex.vertices())
        out << "v " << v << ' ' << rat_to_string(p.values.at(v)) << '\n';
    auto is_maximal = [](const Complex& c, const Simplex& s) {
        for (const auto& t : c.simplices())
            if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                return false;
        return true;
    };
    for (const auto& s : p.complex.simplices()) {
        if (s.size() == 1 || !is_maximal(p.complex, s)) continue;
        out << 's';
        for (const auto& v : s) out << ' ' << v;
        out << '\n';
    }
    for (const auto& s : p.sub.simplices()) {
        if (!is_maximal(p.sub, s)) continue;
        out << 'a';
        for (const auto& v : s) out << ' ' << v;
        out << '\n';
    }
}

Diagram read_diagram(std::istream& in) {
    Diagram d;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 5) parse_fail(ln, "expected 'k1 k2 c1 c2 mult'");
        long mult = parse_long(toks[4], ln);
        if (mult <= 0) parse_fail(ln, "multiplicity must be positive");
        StripPoint p = [&] {
            try {
                return parse_point(toks, 0, ln);
            } catch (const std::invalid_argument& e) {
                parse_fail(ln, e.what());
            }
        }();
        d[p] += mult;
    }
    return d;
}

void write_diagram(std::ostream& out, const Diagram& d) {
    for (const auto& [p, m] : d) {  // map order is the lexicographic order
        write_point(out, p);
        out << ' ' << m << '\n';
    }
}

Matching read_matching(std::istream& in) {
    Matching m;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 11 || (toks[0] != "P" && toks[0] != "B") ||
            (toks[5] != "P" && toks[5] != "B"))
            parse_fail(ln, "expected '<P|B> k1 k2 c1 c2 <P|B> k1 k2 c1 c2 mult'");
        long mult = parse_long(toks[10], ln);
        if (mult <= 0) parse_fail(ln, "multiplicity must be positive");
        try {
            m.entries.push_back({{parse_point(toks, 1, ln), toks[0] == "B"},
                                 {parse_point(toks, 6, ln), toks[5] == "B"},
                                 mult});
        } catch (const std::invalid_argument& e) {
            parse_fail(ln, e.what());
        }
    }
    return m;
}

void write_matching(std::ostream& out, const Matching& m) {
    for (const auto& e : m.entries) {
        out << (e.left.boundary ? 'B' : 'P') << ' ';
        write_point(out, e.left.point);
        out << ' ' << (e.right.boundary ? 'B' : 'P') << ' ';
        write_point(out, e.right.point);
        out << ' ' << e.mult << '\n';
    }
}

std::map<VertexId, Rat> read_values(std::istream& in) {
    std::map<VertexId, Rat> values;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] != "v" || toks.size() != 3) parse_fail(ln, "expected 'v <id> <rational>'");
        if (values.count(toks[1])) parse_fail(ln, "duplicate vertex '" + toks[1] + "'");
        values[toks[1]] = parse_rat(toks[2], ln);
    }
    return values;
}

void write_values(std::ostream& out, const std::map<VertexId, Rat>& values) {
    for (const auto& [v, r] : values) out << "v " << v << ' ' << rat_to_string(r) << '\n';
}

void write_pages(std::ostream& out, const Booklet& b) {
    for (std::size_t s = 0; s < b.pages.size(); ++s) {
        out << "page " << s << ' ';
        write_point(out, b.pages[s].point);
        out << '\n';
    }
}

void write_diagram_svg(std::ostream& out, const Diagram& d) {
    const double pi = 3.14159265358979323846;
    auto coord = [&](long k, const Rat& c) {
        return (double)k * pi + std::atan((double)c);
    };
    // adaptive window around the support, at least one tile wide
    double x0 = -1.5 * pi, x1 = 1.5 * pi, y0 = -1.5 * pi, y1 = 1.5 * pi;
    for (const auto& [p, m] : d) {
        x0 = std::min(x0, coord(p.k1(), p.c1()) - pi);
        x1 = std::max(x1, coord(p.k1(), p.c1()) + pi);
        y0 = std::min(y0, coord(p.k2(), p.c2()) - pi);
        y1 = std::max(y1, coord(p.k2(), p.c2()) + pi);
    }
    const double scale = 60.0;
    double w = (x1 - x0) * scale, h = (y1 - y0) * scale;
    auto X = [&](double x) { return (x - x0) * scale; };
    auto Y = [&](double y) { return (y1 - y) * scale; };  // flip: y up

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "'>\n";
    out << "<rect width='" << w << "' height='" << h << "' fill='white'/>\n";
    // tessellation grid at integer multiples of pi
    for (long k = (long)std::floor(x0 / pi); k <= (long)std::ceil(x1 / pi); ++k)
        out << "<line x1='" << X(k * pi) << "' y1='0' x2='" << X(k * pi) << "' y2='" << h
            << "' stroke='#ddd'/>\n";
    for (long k = (long)std::floor(y0 / pi); k <= (long)std::ceil(y1 / pi); ++k)
        out << "<line x1='0' y1='" << Y(k * pi) << "' x2='" << w << "' y2='" << Y(k * pi)
            << "' stroke='#ddd'/>\n";
    // strip boundary: the two slope -1 lines x + y = +-pi
    for (int s : {-1, 1}) {
        double xa = x0, xb = x1;
        out << "<line x1='" << X(xa) << "' y1='" << Y(s * pi - xa) << "' x2='" << X(xb)
            << "' y2='" << Y(s * pi - xb) << "' stroke='black' stroke-width='1.5'/>\n";
    }
    for (const auto& [p, m] : d) {
        double x = coord(p.k1(), p.c1()), y = coord(p.k2(), p.c2());
        out << "<circle cx='" << X(x) << "' cy='" << Y(y)
            << "' r='4' fill='crimson'/>\n";
        if (m > 1)
            out << "<text x='" << X(x) + 6 << "' y='" << Y(y) - 6
                << "' font-size='12'>" << m << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace striphom
