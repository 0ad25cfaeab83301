#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rwg/alphabet.hpp"

namespace rwg {

/// Plain text (one read per line, blank lines skipped) or FASTA (detected by
/// a leading '>'; headers dropped, sequence lines joined). Sequences are
/// upcased; foreign symbols and empty inputs raise DataError.
std::vector<std::string> parse_reads(std::string_view text, const Alphabet& alphabet, std::string_view source = "input");
std::vector<std::string> read_reads(const std::filesystem::path& path, const Alphabet& alphabet);

/// A single sequence: FASTA records or plain lines, all concatenated.
std::string read_genome(const std::filesystem::path& path, const Alphabet& alphabet);

/// One context per line, empty lines kept as empty contexts.
std::vector<std::string> read_context_lines(const std::filesystem::path& path, const Alphabet& alphabet);

std::string read_file(const std::filesystem::path& path);

}  // namespace rwg
