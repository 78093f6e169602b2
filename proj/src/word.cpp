#include "ybsegre/word.hpp"

#include <algorithm>

namespace ybsegre {

Word::Word(std::uint32_t alphabet, std::vector<std::uint32_t> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (std::uint32_t c : letters_) {
    if (c >= alphabet_)
      throw ValidationError("word letter " + std::to_string(c) +
                            " out of range for alphabet of size " + std::to_string(alphabet_));
  }
}

Word Word::operator*(const Word& rhs) const {
  if (alphabet_ != rhs.alphabet_)
    throw PreconditionError("cannot concatenate words over different alphabets");
  std::vector<std::uint32_t> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size())
    throw PreconditionError("subword range out of bounds");
  return Word(alphabet_,
              std::vector<std::uint32_t>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::optional<std::size_t> Word::find(const Word& pattern) const {
  if (alphabet_ != pattern.alphabet_)
    throw PreconditionError("cannot search a pattern over a different alphabet");
  if (pattern.empty()) return 0;
  if (pattern.size() > letters_.size()) return std::nullopt;
  auto it = std::search(letters_.begin(), letters_.end(),
                        pattern.letters_.begin(), pattern.letters_.end());
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

std::string Word::str(std::span<const std::string> labels) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += "*";
    out += labels[letters_[k]];
  }
  return out;
}

int compare_deglex(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet())
    throw PreconditionError("deg-lex comparison across different alphabets");
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const auto& u = a.letters();
  const auto& v = b.letters();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != v[k]) return u[k] < v[k] ? -1 : 1;
  }
  return 0;
}

std::vector<Word> words_of_degree(std::uint32_t alphabet, std::size_t length) {
  std::vector<Word> out;
  if (alphabet == 0) {
    if (length == 0) out.push_back(Word::unit(0));
    return out;
  }
  std::vector<std::uint32_t> cur(length, 0);
  while (true) {
    out.emplace_back(alphabet, cur);
    // increment cur as a base-`alphabet` counter, most significant first
    std::size_t k = length;
    while (k > 0) {
      if (++cur[k - 1] < alphabet) break;
      cur[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

std::size_t word_rank(const Word& w) {
  std::size_t rank = 0;
  for (std::uint32_t c : w.letters()) rank = rank * w.alphabet() + c;
  return rank;
}

} // namespace ybsegre
