#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwg {

/// Integer code of a symbol. Codes are ordered exactly like the symbols they
/// stand for: terminators $_1 < $_2 < ... occupy [0, terminator_count), the
/// regular symbols follow in alphabet order.
using Symbol = std::uint32_t;

/// Ordered symbol set, optionally extended with per-read terminators that
/// sort below every regular symbol.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view symbols, std::size_t terminators = 0);

  static Alphabet dna() { return Alphabet("ACGT"); }

  Alphabet with_terminators(std::size_t count) const { return Alphabet(symbols_, count); }
  Alphabet without_terminators() const { return Alphabet(symbols_, 0); }

  std::size_t terminator_count() const noexcept { return terminators_; }
  std::size_t regular_count() const noexcept { return symbols_.size(); }
  std::size_t size() const noexcept { return terminators_ + symbols_.size(); }
  std::string_view symbols() const noexcept { return symbols_; }

  bool contains(char c) const noexcept { return rank_[static_cast<unsigned char>(c)] >= 0; }

  /// Throws DataError for characters outside the alphabet.
  Symbol encode(char c) const;
  std::vector<Symbol> encode(std::string_view text) const;

  /// Code of $_k, k 1-based.
  Symbol terminator(std::size_t k) const;
  bool is_terminator(Symbol s) const noexcept { return s < terminators_; }

  char to_char(Symbol s) const;
  std::string render(Symbol s) const;
  std::string render(std::span<const Symbol> text) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_ && terminators_ == other.terminators_;
  }

 private:
  std::string symbols_;
  std::size_t terminators_ = 0;
  std::array<std::int16_t, 256> rank_{};
};

}  // namespace rwg
