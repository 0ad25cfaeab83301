#include "rwg/omega.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace rwg {
namespace {

template <typename Seq>
std::weak_ordering compare_repetitions(const Seq& u, const Seq& v, std::size_t* comparisons) {
  if (u.empty() || v.empty()) throw std::invalid_argument("omega_compare needs non-empty strings");
  const std::size_t bound = fine_wilf_bound(u.size(), v.size());
  std::size_t done = 0;
  auto result = std::weak_ordering::equivalent;
  for (std::size_t i = 0; i < bound; ++i) {
    const auto a = u[i % u.size()];
    const auto b = v[i % v.size()];
    ++done;
    if (a != b) {
      result = a < b ? std::weak_ordering::less : std::weak_ordering::greater;
      break;
    }
  }
  if (comparisons != nullptr) *comparisons = done;
  return result;
}

}  // namespace

std::size_t fine_wilf_bound(std::size_t u_len, std::size_t v_len) { return u_len + v_len - std::gcd(u_len, v_len); }

std::weak_ordering omega_compare(std::span<const Symbol> u, std::span<const Symbol> v, std::size_t* comparisons) {
  return compare_repetitions(u, v, comparisons);
}

std::weak_ordering omega_compare(std::string_view u, std::string_view v, std::size_t* comparisons) {
  return compare_repetitions(u, v, comparisons);
}

bool is_primitive(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  if (n == 0) return false;
  // KMP border of the whole string gives its smallest period
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k];
    if (s[i] == s[k]) ++k;
    border[i + 1] = k;
  }
  const std::size_t period = n - border[n];
  return period == n || n % period != 0;
}

}  // namespace rwg
