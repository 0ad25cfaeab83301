#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string_view>

#include "rwg/alphabet.hpp"

namespace rwg {

/// Compares u^ω with v^ω (the infinite repetitions of u and v).
///
/// Decides after at most |u| + |v| - gcd(|u|, |v|) symbol comparisons; if
/// that many symbols agree the two infinite words are equal (Fine and Wilf).
/// When `comparisons` is non-null it receives the number of symbol
/// comparisons performed. Throws std::invalid_argument on empty input.
std::weak_ordering omega_compare(std::span<const Symbol> u, std::span<const Symbol> v,
                                 std::size_t* comparisons = nullptr);
std::weak_ordering omega_compare(std::string_view u, std::string_view v, std::size_t* comparisons = nullptr);

/// Comparison bound |u| + |v| - gcd(|u|, |v|).
std::size_t fine_wilf_bound(std::size_t u_len, std::size_t v_len);

/// True if s is not a proper power of a shorter string.
bool is_primitive(std::span<const Symbol> s);

}  // namespace rwg
