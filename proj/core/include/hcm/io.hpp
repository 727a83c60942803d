#ifndef HCM_IO_HPP
#define HCM_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hcm/decomposition.hpp"
#include "hcm/linear_map.hpp"

namespace hcm {

/// Text formats. Rationals print as "p" (denominator 1) or "p/q" with
/// q >= 2 and the fraction in lowest terms; parsing accepts exactly that
/// grammar. All parse failures throw ParseError carrying a 1-based line
/// number.
///
/// Map block:
///   HCM1 map
///   n=<integer>
///   2n-3 lines, each with 2n-3 space-separated rationals (row k holds
///   output coordinate k across inputs E_1..E_{2n-3})
///
/// Decomposition block:
///   HCM1 decomposition
///   n=<integer>
///   "A" then n lines of n rationals, "B" and "C" likewise, then "zeta"
///   and one line of 2n-3 rationals.
///
/// Multi-map files are consecutive map blocks separated by single blank
/// lines.

std::string serialize(const LinearMap& f);
std::string serialize(const CanonicalDecomposition& d);
std::string serialize_maps(const std::vector<LinearMap>& maps);

/// Dense n x n block shared by the decomposition format: n lines of n
/// space-separated rationals.
std::string format_matrix_block(const Matrix& m);

/// Parses exactly one map block.
LinearMap parse_map(std::string_view text);

/// Parses one or more blank-line-separated map blocks.
std::vector<LinearMap> parse_maps(std::string_view text);

CanonicalDecomposition parse_decomposition(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hcm

#endif
