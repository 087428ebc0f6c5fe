#pragma once

// Small hand-made schemes used by the tests, the CLI examples and the docs.

#include <string>
#include <vector>

#include "bitprobe/model.hpp"

namespace bitprobe::fixtures {

/// Builds a scheme over single-letter blocks. layout_b[k - 1] describes the
/// sets of index k in table B as groups of letters separated by '|', for
/// example "ab|cde". Bits are numbered in order of appearance per table.
Scheme from_layout(const std::string& blocks, const std::vector<std::string>& layout_b,
                   const std::vector<std::string>& layout_c);

/// Three blocks a, b, c of size 4; every index triple is one set in each table.
Scheme toy3();

/// Blocks a..h of size 8 around the arrangement with sets
/// V = {a1, b1}, W = {c3, f3}, X = {d3, e3, g3} in B and
/// Y = {b2, c2, d2, e2}, Z = {g4, h4} in C; every other index is paired up
/// in block order, a leftover third element joining the last pair.
Scheme fig1c();

/// fig1c with table B at index 3 regrouped so every index-1 element is
/// 2-good w.r.t. B.
Scheme fig1c_good();

/// Five blocks of size 8. Block a is 1-bad w.r.t. B at index 1 and 1-bad
/// w.r.t. C at index 3, so the scheme cannot store every 4-subset.
Scheme dbl();

}  // namespace bitprobe::fixtures
