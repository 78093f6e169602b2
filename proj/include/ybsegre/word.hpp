#pragma once

#include "ybsegre/errors.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ybsegre {

// A word in the free monoid on generators x_0 .. x_{alphabet-1}, stored as
// the sequence of generator indices. The empty word is the monoid unit.
class Word {
public:
  Word() = default;
  Word(std::uint32_t alphabet, std::vector<std::uint32_t> letters);

  static Word unit(std::uint32_t alphabet) { return Word(alphabet, {}); }

  std::uint32_t alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<std::uint32_t>& letters() const { return letters_; }

  // Concatenation. Alphabets must agree.
  Word operator*(const Word& rhs) const;

  Word subword(std::size_t pos, std::size_t len) const;

  // Leftmost position where `pattern` occurs as a factor, if any.
  std::optional<std::size_t> find(const Word& pattern) const;
  bool contains(const Word& pattern) const { return find(pattern).has_value(); }

  bool operator==(const Word& rhs) const {
    return alphabet_ == rhs.alphabet_ && letters_ == rhs.letters_;
  }
  bool operator!=(const Word& rhs) const { return !(*this == rhs); }

  std::string str(std::span<const std::string> labels) const;

private:
  std::uint32_t alphabet_ = 0;
  std::vector<std::uint32_t> letters_;
};

// Degree-lexicographic comparison: shorter words first, words of equal
// length compared lexicographically by generator index. Returns <0, 0, >0.
// Comparing words over different alphabets is a programming error and throws.
int compare_deglex(const Word& a, const Word& b);

struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_deglex(a, b) < 0;
  }
};

// All words of the given length, emitted in deg-lex (here: plain lex) order.
std::vector<Word> words_of_degree(std::uint32_t alphabet, std::size_t length);

// Position of `w` inside words_of_degree(alphabet, w.size()), i.e. the value
// of the letter string read as a base-`alphabet` numeral.
std::size_t word_rank(const Word& w);

} // namespace ybsegre
