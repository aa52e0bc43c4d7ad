#include <CLI11.hpp>

#include "striphom/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace striphom;

namespace {

unsigned default_field() {
    if (const char* env = std::getenv("STRIP_FIELD")) {
        int v = std::atoi(env);
        if (v >= 2) return (unsigned)v;
    }
    return 2;
}

PLPair load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_complex(in);
}

Diagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_diagram(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    return out;
}

/// Value-threshold cover of a complex for the axiom suite: X0 holds the
/// simplices reaching below the median vertex value, X1 those reaching above.
void median_cover(const PLPair& p, Complex& X0, Complex& X1) {
    std::vector<Rat> vals;
    for (const auto& [v, r] : p.values) vals.push_back(r);
    std::sort(vals.begin(), vals.end());
    Rat median = vals.empty() ? Rat(0) : vals[vals.size() / 2];
    for (const auto& s : p.complex.simplices()) {
        Rat lo = p.values.at(s[0]), hi = lo;
        for (const auto& v : s) {
            lo = std::min(lo, p.values.at(v));
            hi = std::max(hi, p.values.at(v));
        }
        if (lo <= median) X0.add_closed(s);
        if (hi >= median) X1.add_closed(s);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Extended persistence on the strip: diagrams, distances, realizations"};
    app.require_subcommand(1);

    std::string complex_path, out_path, a_path, b_path, matching_path, prefix;
    bool use_sub = false, do_axioms = false, do_roundtrip = false;
    unsigned field = default_field();

    auto* dgm = app.add_subcommand("dgm", "compute the diagram of a complex file");
    dgm->add_option("-c,--complex", complex_path, "complex file")->required();
    dgm->add_flag("-a,--relative", use_sub, "use the subcomplex lines (relative diagram)");
    dgm->add_option("--field", field, "coefficient field prime");
    dgm->add_option("-o,--output", out_path, "output diagram file")->required();

    auto* dist = app.add_subcommand("dist", "bottleneck distance between two diagrams");
    dist->add_option("a", a_path, "first diagram")->required();
    dist->add_option("b", b_path, "second diagram")->required();
    dist->add_option("--matching", matching_path, "write an optimal matching here");

    auto* realize = app.add_subcommand("realize", "build a complex realizing a diagram");
    realize->add_option("diagram", a_path, "admissible diagram")->required();
    realize->add_option("-o,--output", out_path, "output complex file")->required();

    auto* rm = app.add_subcommand("realize-matching",
                                  "realize two diagrams at bottleneck distance");
    rm->add_option("a", a_path, "first diagram")->required();
    rm->add_option("b", b_path, "second diagram")->required();
    rm->add_option("-o,--output", prefix, "output file prefix")->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_flag("--axioms", do_axioms, "axiom suite on a complex file");
    verify->add_flag("--roundtrip", do_roundtrip, "realization round trip on a diagram");
    verify->add_option("input", a_path, "complex or diagram file")->required();
    verify->add_option("--field", field, "coefficient field prime");

    auto* plot = app.add_subcommand("plot", "render a diagram as SVG (decorative)");
    plot->add_option("diagram", a_path, "diagram file")->required();
    plot->add_option("-o,--output", out_path, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (dgm->parsed()) {
        PLPair p = load_complex(complex_path);
        if (!use_sub) p.sub = Complex{};
        Diagram d = extract_diagram(build_context(p, field));
        auto out = open_out(out_path);
        write_diagram(out, d);
        return 0;
    }
    if (dist->parsed()) {
        BottleneckResult r = bottleneck_distance(load_diagram(a_path), load_diagram(b_path));
        if (!r.value) {
            std::cout << "inf\n";
            return 0;
        }
        Rat v = *r.value;
        std::cout << boost::multiprecision::numerator(v).str() << "/"
                  << boost::multiprecision::denominator(v).str() << "\n";
        if (!matching_path.empty()) {
            auto out = open_out(matching_path);
            write_matching(out, *r.matching);
        }
        return 0;
    }
    if (realize->parsed()) {
        Booklet b = build_booklet(represent(load_diagram(a_path)));
        auto out = open_out(out_path);
        write_complex(out, b.pair);
        auto pages = open_out(out_path + ".pages");
        write_pages(pages, b);
        return 0;
    }
    if (rm->parsed()) {
        Diagram mu = load_diagram(a_path), nu = load_diagram(b_path);
        RealizeResult r = realize_matching(mu, nu);
        auto cx = open_out(prefix + ".cplx");
        write_complex(cx, PLPair{r.complex, Complex{}, r.f});
        auto f = open_out(prefix + ".f");
        write_values(f, r.f);
        auto g = open_out(prefix + ".g");
        write_values(g, r.g);
        std::cout << "d_bottleneck " << rat_to_string(r.d_bottleneck) << "\n"
                  << "sup_norm " << rat_to_string(r.norm_fg) << "\n"
                  << "certified " << (r.certified ? "yes" : "no") << "\n";
        return r.certified ? 0 : 1;
    }
    if (verify->parsed()) {
        if (do_axioms == do_roundtrip)
            throw std::invalid_argument("verify: pass exactly one of --axioms, --roundtrip");
        if (do_roundtrip) {
            RoundtripReport rep = verify_roundtrip(load_diagram(a_path));
            std::cout << rep.summary();
            return rep.pass() ? 0 : 1;
        }
        AxiomInput input;
        input.pair = load_complex(a_path);
        median_cover(input.pair, input.X0, input.X1);
        input.A0 = Complex::intersection(input.pair.sub, input.X0);
        input.A1 = Complex::intersection(input.pair.sub, input.X1);
        AxiomReport rep = axiom_suite(input, field);
        std::cout << rep.summary();
        return rep.all_pass() ? 0 : 1;
    }
    if (plot->parsed()) {
        auto out = open_out(out_path);
        write_diagram_svg(out, load_diagram(a_path));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
