#ifndef DORMANT_POLY_CACHE_HPP
#define DORMANT_POLY_CACHE_HPP

#include "dormant/polynomial.hpp"

#include <cstddef>
#include <filesystem>
#include <map>

namespace dormant {

/*
 * On-disk cache of the degree polynomials, one JSON object per genus:
 *
 *   { "2": { "g": 2, "indeterminate": "p", "den": "24",
 *            "coeffs": { "1": "-1", "3": "1" } }, ... }
 *
 * `den` is the common denominator and `coeffs` maps exponent to the integer
 * numerator of den * coefficient.  Both are decimal strings: the g = 10
 * denominator already exceeds 64 bits, and JSON numbers would round-trip
 * through doubles.  Keys are sorted, so rewriting identical content is
 * byte-identical.
 */

// Write the polynomials for g = 2 .. max_genus (max_genus >= 2);
// returns the number written.
std::size_t cache_polynomials(const std::filesystem::path& path, unsigned max_genus);

// Parse a cache file back into exact polynomials keyed by genus.
// Round-trips exactly: load(cache(path, m))[g] == degree_polynomial(g).
std::map<unsigned, Polynomial> load_polynomial_cache(const std::filesystem::path& path);

} // namespace dormant

#endif
