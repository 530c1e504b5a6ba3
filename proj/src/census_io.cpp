#include "skewmorph/census_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "skewmorph/error.hpp"

namespace skewmorph {

namespace {

constexpr std::string_view kMagic = "skewmorph-census 1 ";

[[noreturn]] void format_error(int n, const std::string& what) {
  throw Error(ErrorCode::kFormatError, census_file_name(n) + ": " + what);
}

bool parse_int(std::string_view text, int& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string census_file_name(int n) { return "n" + std::to_string(n) + ".sm"; }

std::string format_stratum(const Census& census, int n) {
  const Stratum& s = census.stratum(n);
  std::string out = std::string(kMagic) + "n=" + std::to_string(n) + " count=" +
                    std::to_string(s.size()) + "\n";
  for (const CensusEntry& e : s.entries()) {
    out += format_images(e.phi.images());
    out += '\n';
  }
  return out;
}

std::vector<SkewMorphism> parse_stratum(std::string_view text, int expected_n) {
  const int n = expected_n;
  if (text.empty() || text.back() != '\n') format_error(n, "missing final line feed");
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    const std::size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  const std::string_view header = lines.front();
  if (!header.starts_with(kMagic)) format_error(n, "bad header '" + std::string(header) + "'");
  const std::string_view fields = header.substr(kMagic.size());
  const std::size_t space = fields.find(' ');
  if (space == std::string_view::npos) format_error(n, "bad header '" + std::string(header) + "'");
  const std::string_view n_field = fields.substr(0, space);
  const std::string_view count_field = fields.substr(space + 1);
  int header_n = 0;
  int count = 0;
  if (!n_field.starts_with("n=") || !parse_int(n_field.substr(2), header_n) ||
      !count_field.starts_with("count=") || !parse_int(count_field.substr(6), count) || count < 0)
    format_error(n, "bad header '" + std::string(header) + "'");
  if (header_n != n) format_error(n, "header names n=" + std::to_string(header_n));
  if (lines.size() - 1 != static_cast<std::size_t>(count))
    format_error(n, "header count " + std::to_string(count) + " but " +
                        std::to_string(lines.size() - 1) + " body lines");

  std::vector<SkewMorphism> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<int> images;
    try {
      images = parse_images(lines[i]);
      out.push_back(SkewMorphism::validate(n, images));
    } catch (const Error& e) {
      format_error(n, "line " + std::to_string(i + 1) + ": " + e.what());
    }
    if (out.size() >= 2 && !(out[out.size() - 2] < out.back()))
      format_error(n, "line " + std::to_string(i + 1) + " is out of order or duplicated");
  }
  return out;
}

void save_census(const Census& census, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + directory.string() + ": " + ec.message());
  for (int n = 1; n <= census.max_n(); ++n) {
    const std::filesystem::path path = directory / census_file_name(n);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
    const std::string text = format_stratum(census, n);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorCode::kIoFailure, "write failed for " + path.string());
  }
}

Census load_census(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory))
    throw Error(ErrorCode::kIoFailure, directory.string() + " is not a directory");
  std::vector<std::vector<SkewMorphism>> lists;
  for (int n = 1;; ++n) {
    const std::filesystem::path path = directory / census_file_name(n);
    if (!std::filesystem::exists(path)) break;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    lists.push_back(parse_stratum(buffer.str(), n));
  }
  if (lists.empty()) throw Error(ErrorCode::kIoFailure, "no census files in " + directory.string());
  return Census::from_lists(std::move(lists));
}

}  // namespace skewmorph
