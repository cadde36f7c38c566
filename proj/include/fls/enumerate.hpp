#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fls/incidence.hpp"

namespace fls {

/// Isomorphism-class representatives of all finite linear spaces on v points.
struct SpaceCensus {
  int v = 0;
  std::vector<FiniteLinearSpace> representatives;
  std::size_t count() const { return representatives.size(); }
};

/// All spaces on v points (3 <= v <= 9) up to isomorphism. Each class on v
/// points arises by adding one point to a class on v-1 points along a partial
/// parallel class; candidates are deduplicated by invariant hash and
/// isomorphism test. Deterministic order. Throws std::out_of_range outside 3..9.
SpaceCensus all_spaces(int v);

/// Censuses for 3..v_max, each built from the previous one.
std::vector<SpaceCensus> all_spaces_up_to(int v_max);

/// Independent generator: enumerates every labelled space on v points as a
/// partition of the point pairs into lines (branching on the smallest uncovered
/// pair), then deduplicates. Practical for v <= 7.
struct NaiveCensus {
  int v = 0;
  std::uint64_t labelled = 0;
  std::vector<FiniteLinearSpace> representatives;
  std::size_t count() const { return representatives.size(); }
};

NaiveCensus naive_spaces(int v);

/// Sum over classes of v!/|Aut|, the number of labelled spaces the census stands for.
std::uint64_t labelled_count(const SpaceCensus& census);

struct BlockingSliceRow {
  int v = 0;
  std::size_t spaces = 0;
  std::size_t with_blocking_set = 0;
};

struct BlockingSliceReport {
  std::vector<BlockingSliceRow> rows;
  bool all_clear() const;
  std::string summary() const;
};

/// Blocking-set scan of every census space on 3..v_max points (v_max <= 9).
BlockingSliceReport no_blocking_set_below(int v_max);

/// Multiset of line sizes: size -> number of lines.
using LineSizeProfile = std::map<int, int>;
LineSizeProfile line_size_profile(const FiniteLinearSpace& s);
/// Parses "3^6,2^3". Throws std::invalid_argument.
LineSizeProfile parse_line_size_profile(const std::string& text);
std::string format_line_size_profile(const LineSizeProfile& p);

/// Green classes of all proper colourings, by scanning all 2^v colourings, in
/// increasing bitmask order. v <= 24.
std::vector<PointSet> proper_colourings_serial(const FiniteLinearSpace& s);
std::vector<PointSet> proper_colourings_parallel(const FiniteLinearSpace& s);

struct ColouringCensus {
  std::uint64_t raw = 0;
  /// Lexicographically least green class per orbit under automorphisms and colour swap.
  std::vector<PointSet> class_representatives;
  std::size_t classes() const { return class_representatives.size(); }
};

ColouringCensus colouring_census(const FiniteLinearSpace& s);

}  // namespace fls
