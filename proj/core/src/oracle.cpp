#include "rwg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace rwg::oracle {

std::vector<OracleMatch> naive_find_all(const std::vector<std::string>& reads, const std::string& pattern) {
  std::vector<OracleMatch> out;
  if (pattern.empty()) return out;
  for (std::size_t r = 0; r < reads.size(); ++r) {
    const std::string& s = reads[r];
    for (std::size_t i = 0; i + pattern.size() <= s.size(); ++i)
      if (s.compare(i, pattern.size(), pattern) == 0) out.push_back({r, i + 1, i + pattern.size()});
  }
  return out;
}

namespace {

std::string rotation(const std::string& s, std::size_t start) {
  return s.substr(start) + s.substr(0, start);
}

// compare the infinite repetitions; |u| * |v| symbols always suffice
bool omega_less(const std::string& u, const std::string& v) {
  const std::size_t limit = 2 * u.size() * v.size() + u.size() + v.size();
  for (std::size_t i = 0; i < limit; ++i) {
    const char a = u[i % u.size()];
    const char b = v[i % v.size()];
    if (a != b) return a < b;
  }
  return false;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> naive_ebwt_rows(const std::vector<std::string>& reads) {
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> rot;
  for (std::size_t r = 0; r < reads.size(); ++r)
    for (std::size_t i = 0; i < reads[r].size(); ++i) rot.emplace_back(rotation(reads[r], i), r, i + 1);
  std::stable_sort(rot.begin(), rot.end(), [](const auto& a, const auto& b) {
    if (omega_less(std::get<0>(a), std::get<0>(b))) return true;
    if (omega_less(std::get<0>(b), std::get<0>(a))) return false;
    return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
  });
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (const auto& [s, r, o] : rot) rows.emplace_back(r, o);
  return rows;
}

std::string naive_ebwt(const std::vector<std::string>& reads) {
  std::string out;
  for (const auto& [r, o] : naive_ebwt_rows(reads)) {
    const std::string& s = reads[r];
    out.push_back(s[(o + s.size() - 2) % s.size()]);
  }
  return out;
}

std::vector<std::size_t> naive_colex_order(const std::vector<std::string>& reads) {
  std::vector<std::size_t> ids(reads.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return std::string(reads[a].rbegin(), reads[a].rend()) < std::string(reads[b].rbegin(), reads[b].rend());
  });
  return ids;
}

std::vector<std::string> naive_bcr(const std::vector<std::string>& reads, const std::vector<std::size_t>& terminator_order) {
  // token: (0, k) for $k, (1, char) otherwise
  using Token = std::pair<int, int>;
  std::vector<std::vector<Token>> words(reads.size());
  for (std::size_t k = 0; k < terminator_order.size(); ++k) {
    const std::size_t r = terminator_order[k];
    for (char c : reads[r]) words[r].emplace_back(1, static_cast<unsigned char>(c));
    words[r].emplace_back(0, static_cast<int>(k + 1));
  }
  std::vector<std::vector<Token>> rot;
  for (const auto& w : words)
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<Token> x(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
      x.insert(x.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      rot.push_back(std::move(x));
    }
  // every rotation holds exactly one distinct terminator, so plain
  // lexicographic comparison decides before either side runs out
  std::sort(rot.begin(), rot.end());
  std::vector<std::string> out;
  for (const auto& x : rot) {
    const Token& t = x.back();
    out.push_back(t.first == 0 ? "$" + std::to_string(t.second) : std::string(1, static_cast<char>(t.second)));
  }
  return out;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

std::string strip_dollars(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens)
    if (t[0] != '$') out += t;
  return out;
}

RelaxedBWT naive_relaxed_bwt(const std::vector<std::string>& reads, const std::vector<std::string>& contexts) {
  std::vector<std::size_t> lex(reads.size());
  std::iota(lex.begin(), lex.end(), 0);
  std::stable_sort(lex.begin(), lex.end(), [&](std::size_t a, std::size_t b) { return reads[a] < reads[b]; });
  std::vector<std::size_t> tie(reads.size());
  for (std::size_t i = 0; i < lex.size(); ++i) tie[lex[i]] = i;

  struct Node {
    std::string reversed_key;
    std::size_t tie;
    std::size_t read;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  for (std::size_t r = 0; r < reads.size(); ++r)
    for (std::size_t k = 0; k <= reads[r].size(); ++k) {
      std::string key = contexts[r] + reads[r].substr(0, k);
      std::reverse(key.begin(), key.end());
      nodes.push_back({key, tie[r], r, k});
    }
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return std::tie(a.reversed_key, a.tie) < std::tie(b.reversed_key, b.tie);
  });
  RelaxedBWT out;
  for (std::size_t rank = 1; rank <= nodes.size(); ++rank) {
    const Node& v = nodes[rank - 1];
    if (v.depth == 0) out.source_ranks.push_back(rank);
    if (v.depth == reads[v.read].size())
      out.sink_ranks.push_back(rank);
    else
      out.bwt.push_back(reads[v.read][v.depth]);
  }
  return out;
}

std::size_t run_count(const std::string& s) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i == 0 || s[i] != s[i - 1]) ++runs;
  return runs;
}

}  // namespace rwg::oracle
