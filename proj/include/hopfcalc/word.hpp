#pragma once

#include <string>
#include <vector>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

// Finite ordered set of distinct single-character letters.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(const std::string& letters);

  static Alphabet full();  // a..z

  bool contains(char c) const;
  std::size_t size() const { return letters_.size(); }
  char at(std::size_t i) const { return letters_.at(i); }
  const std::string& letters() const { return letters_; }
  void require(char c) const {
    if (!contains(c))
      throw UnknownLetterError(std::string("UnknownLetter: '") + c + "'");
  }

private:
  std::string letters_;
};

// Word over an alphabet. Total order is length-then-lexicographic, so the
// empty word (the algebra unit in the word-based instances) comes first and
// enumeration by degree matches enumeration by order.
struct Word {
  std::string letters;

  Word() = default;
  explicit Word(std::string s) : letters(std::move(s)) {}

  static Word empty() { return Word(); }
  std::size_t size() const { return letters.size(); }
  bool is_empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
};

inline Word concat(const Word& a, const Word& b) {
  return Word(a.letters + b.letters);
}

// Letters of w at the 1-based positions in idx, in the order given.
// Positions must be within [1, |w|].
Word subword(const Word& w, const std::vector<int>& idx);

// All words over `a` of length 0..max_len, in length-lex order.
std::vector<Word> words_up_to(const Alphabet& a, int max_len);

}  // namespace hopfcalc
