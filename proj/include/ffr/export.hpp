// Deterministic serializations of canonical elements: a versioned JSON
// object and a DOT digraph (plain edges solid, bar edges dashed, the point
// double-circled).  Both emit vertices and edges in sorted order, so the
// output is byte-identical across runs.

#ifndef FFR_EXPORT_HPP_
#define FFR_EXPORT_HPP_

#include <string>

#include "ffr/semigroup.hpp"

namespace ffr {

// {"format":1,"variety":...,"point":...,"vertices":[...],"edges":[{src,
// label,dst}...]} with words as plain strings ("" for the empty word) and
// labels in the "~"-encoding.
std::string to_json(Element const& e);

std::string to_dot(Element const& e);

}  // namespace ffr

#endif  // FFR_EXPORT_HPP_
