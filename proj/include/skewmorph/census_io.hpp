#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skewmorph/census.hpp"

// Text format, one file per modulus named n<value>.sm:
//
//   skewmorph-census 1 n=<n> count=<k>
//   <img0>,<img1>,...,<img_{n-1}>      (k lines)
//
// Body lines are sorted by image array (numeric lexicographic order), every
// line ends with LF and there is no trailing blank line.
namespace skewmorph {

/// File name for Z_n, e.g. "n12.sm".
std::string census_file_name(int n);

/// Contents of the file for Z_n.
std::string format_stratum(const Census& census, int n);

/// Parses one file. Throws Error(kFormatError) on a malformed header or body
/// line, a count mismatch, unsorted or duplicate lines, or an entry that is
/// not a skew morphism of Z_n.
std::vector<SkewMorphism> parse_stratum(std::string_view text, int expected_n);

/// Writes n1.sm, ..., n<max_n>.sm into `directory`, creating it if needed.
/// Throws Error(kIoFailure).
void save_census(const Census& census, const std::filesystem::path& directory);

/// Reads n1.sm, n2.sm, ... up to the first missing file. Throws
/// Error(kIoFailure) if the directory or n1.sm cannot be read and
/// Error(kFormatError) for malformed contents.
Census load_census(const std::filesystem::path& directory);

}  // namespace skewmorph
