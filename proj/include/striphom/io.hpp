#ifndef STRIPHOM_IO_HPP
#define STRIPHOM_IO_HPP

#include "striphom/matching.hpp"
#include "striphom/realize.hpp"

#include <iosfwd>
#include <string>

namespace striphom {

/// Text formats.  All rationals are reduced `p` or `p/q`; `inf`/`-inf` for
/// extended values; `#` starts a comment.  Output is canonical: sorted,
/// normalized, identical bytes for identical inputs.
///
/// Complex file: `v <id> <rational>` per vertex, `s <id>...` per maximal
/// simplex, `a <id>...` per maximal simplex of the subcomplex.
PLPair read_complex(std::istream& in);
void write_complex(std::ostream& out, const PLPair& p);

/// Diagram file: `k1 k2 c1 c2 mult` per support point, lexicographic order.
Diagram read_diagram(std::istream& in);
void write_diagram(std::ostream& out, const Diagram& d);

/// Matching file: `<L-tag> k1 k2 c1 c2 <R-tag> k1 k2 c1 c2 mult` per entry,
/// tag `P` for a diagram point and `B` for an explicit boundary point.
Matching read_matching(std::istream& in);
void write_matching(std::ostream& out, const Matching& m);

/// Value file: `v <id> <rational>` per vertex, sorted by id.
std::map<VertexId, Rat> read_values(std::istream& in);
void write_values(std::ostream& out, const std::map<VertexId, Rat>& values);

/// Sidecar page table of a realization: `page <index> <k1 k2 c1 c2>`.
void write_pages(std::ostream& out, const Booklet& b);

/// Decorative SVG rendering of a diagram on the strip (float precision).
void write_diagram_svg(std::ostream& out, const Diagram& d);

}  // namespace striphom

#endif
