#include "hopfcalc/word.hpp"

#include <algorithm>

namespace hopfcalc {

Alphabet::Alphabet(const std::string& letters) : letters_(letters) {
  std::string sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError("alphabet letters must be distinct: " + letters);
}

Alphabet Alphabet::full() {
  return Alphabet("abcdefghijklmnopqrstuvwxyz");
}

bool Alphabet::contains(char c) const {
  return letters_.find(c) != std::string::npos;
}

Word subword(const Word& w, const std::vector<int>& idx) {
  std::string out;
  out.reserve(idx.size());
  for (int i : idx) {
    if (i < 1 || static_cast<std::size_t>(i) > w.size())
      throw IndexOutOfRangeError();
    out.push_back(w.letters[static_cast<std::size_t>(i) - 1]);
  }
  return Word(out);
}

std::vector<Word> words_up_to(const Alphabet& a, int max_len) {
  std::vector<Word> out{Word::empty()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        out.push_back(Word(out[i].letters + a.at(j)));
    level_begin = level_end;
  }
  return out;
}

}  // namespace hopfcalc
