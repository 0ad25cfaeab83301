#include "rwg/read_input.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include "rwg/error.hpp"

namespace rwg {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string clean(std::string_view line, const Alphabet& alphabet, std::string_view source, std::size_t line_no) {
  std::string out;
  out.reserve(line.size());
  for (char ch : line) {
    if (ch == ' ' || ch == '\t') continue;
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (!alphabet.contains(up))
      throw DataError(std::string(source) + ":" + std::to_string(line_no) + ": symbol '" + std::string(1, ch) +
                      "' is not in the alphabet " + std::string(alphabet.symbols()));
    out.push_back(up);
  }
  return out;
}

bool is_fasta(const std::vector<std::string_view>& lines) {
  for (auto line : lines)
    if (!line.empty()) return line.front() == '>';
  return false;
}

}  // namespace

std::vector<std::string> parse_reads(std::string_view text, const Alphabet& alphabet, std::string_view source) {
  const auto lines = split_lines(text);
  std::vector<std::string> reads;
  if (is_fasta(lines)) {
    bool open = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!lines[i].empty() && lines[i].front() == '>') {
        if (open && reads.back().empty()) throw DataError(std::string(source) + ":" + std::to_string(i) + ": empty FASTA record");
        reads.emplace_back();
        open = true;
        continue;
      }
      reads.back() += clean(lines[i], alphabet, source, i + 1);
    }
    if (open && reads.back().empty()) throw DataError(std::string(source) + ": empty FASTA record at end of file");
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::string read = clean(lines[i], alphabet, source, i + 1);
      if (!read.empty()) reads.push_back(std::move(read));
    }
  }
  if (reads.empty()) throw DataError(std::string(source) + ": no reads found");
  return reads;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::vector<std::string> read_reads(const std::filesystem::path& path, const Alphabet& alphabet) {
  return parse_reads(read_file(path), alphabet, path.string());
}

std::string read_genome(const std::filesystem::path& path, const Alphabet& alphabet) {
  std::string genome;
  for (const auto& part : parse_reads(read_file(path), alphabet, path.string())) genome += part;
  return genome;
}

std::vector<std::string> read_context_lines(const std::filesystem::path& path, const Alphabet& alphabet) {
  const std::string text = read_file(path);
  auto lines = split_lines(text);
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(clean(lines[i], alphabet, path.string(), i + 1));
  return out;
}

}  // namespace rwg
