#include "rwg/alphabet.hpp"

#include <stdexcept>

#include "rwg/error.hpp"

namespace rwg {

Alphabet::Alphabet() : Alphabet("ACGT") {}

Alphabet::Alphabet(std::string_view symbols, std::size_t terminators)
    : symbols_(symbols), terminators_(terminators) {
  rank_.fill(-1);
  if (symbols_.empty()) throw std::invalid_argument("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = rank_[static_cast<unsigned char>(symbols_[i])];
    if (slot >= 0) throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    if (symbols_[i] == '$') throw std::invalid_argument("'$' is reserved for terminators");
    slot = static_cast<std::int16_t>(i);
  }
}

Symbol Alphabet::encode(char c) const {
  const auto r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) throw DataError(std::string("symbol '") + c + "' is not in alphabet " + symbols_);
  return static_cast<Symbol>(terminators_ + static_cast<std::size_t>(r));
}

std::vector<Symbol> Alphabet::encode(std::string_view text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(encode(c));
  return out;
}

Symbol Alphabet::terminator(std::size_t k) const {
  if (k == 0 || k > terminators_) throw std::out_of_range("terminator subscript out of range");
  return static_cast<Symbol>(k - 1);
}

char Alphabet::to_char(Symbol s) const {
  if (s < terminators_ || s >= size()) throw std::out_of_range("not a regular symbol code");
  return symbols_[s - terminators_];
}

std::string Alphabet::render(Symbol s) const {
  if (is_terminator(s)) return "$" + std::to_string(s + 1);
  return std::string(1, to_char(s));
}

std::string Alphabet::render(std::span<const Symbol> text) const {
  std::string out;
  for (Symbol s : text) out += render(s);
  return out;
}

}  // namespace rwg
