// Compares the OpenMP candidate sweep against the serial reference on a
// family of booklet complexes of growing size.
#include "striphom/realize.hpp"

#include <chrono>
#include <iostream>

using namespace striphom;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Repeated support points keep the critical values (and so the candidate
// grid) fixed while the realized complex grows linearly with `pages`.
Diagram workload(int pages) {
    Diagram d;
    d[StripPoint(0, 0, Rat(2), Rat(-2))] = 1;
    d[StripPoint(1, -1, Rat(-1), Rat(1))] = pages;
    d[StripPoint(1, 0, Rat(-1, 2), Rat(1, 4))] = pages;
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    int max_pages = argc > 1 ? std::atoi(argv[1]) : 2;
    std::cout << "pages  candidates  serial_ms  parallel_ms  speedup  equal\n";
    for (int pages = 1; pages <= max_pages; ++pages) {
        Booklet b = build_booklet(represent(workload(pages)));
        RishContext ctx = build_context(b.pair);
        std::size_t cands = diagram_candidates(ctx).size();

        auto t0 = Clock::now();
        Diagram serial = extract_diagram_serial(ctx);
        double ts = ms_since(t0);

        // fresh context: the evaluator cache must not carry over
        RishContext ctx2 = build_context(b.pair);
        auto t1 = Clock::now();
        Diagram parallel = extract_diagram(ctx2);
        double tp = ms_since(t1);

        std::cout << pages << "  " << cands << "  " << ts << "  " << tp << "  "
                  << (tp > 0 ? ts / tp : 0.0) << "  "
                  << (serial == parallel ? "yes" : "NO") << "\n";
        if (!(serial == parallel)) return 1;
    }
    return 0;
}
