#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Brute-force references for tests. Plain strings only, nothing shared with
// the index code; characters compare by their char value.
namespace rwg::oracle {

struct OracleMatch {
  std::size_t read_id = 0;
  std::size_t start = 0;  // 1-based, inclusive
  std::size_t end = 0;

  bool operator==(const OracleMatch&) const = default;
  auto operator<=>(const OracleMatch&) const = default;
};

std::vector<OracleMatch> naive_find_all(const std::vector<std::string>& reads, const std::string& pattern);

/// Rotation (read, 1-based start offset) of every row of the eBWT matrix.
std::vector<std::pair<std::size_t, std::size_t>> naive_ebwt_rows(const std::vector<std::string>& reads);
std::string naive_ebwt(const std::vector<std::string>& reads);

/// BCR BWT as tokens: single characters, or "$k" for the terminator of the
/// read owning rank k in `terminator_order` (read ids, smallest first).
std::vector<std::string> naive_bcr(const std::vector<std::string>& reads, const std::vector<std::size_t>& terminator_order);
std::vector<std::size_t> naive_colex_order(const std::vector<std::string>& reads);
std::string join(const std::vector<std::string>& tokens);
std::string strip_dollars(const std::vector<std::string>& tokens);

struct RelaxedBWT {
  std::string bwt;
  std::vector<std::size_t> source_ranks;
  std::vector<std::size_t> sink_ranks;
};

/// Sorts every node of every context+read path by its full string
/// (colexicographic), ties by the lexicographic rank of the read.
RelaxedBWT naive_relaxed_bwt(const std::vector<std::string>& reads, const std::vector<std::string>& contexts);

std::size_t run_count(const std::string& s);

}  // namespace rwg::oracle
