#include "hopfcalc/trace.hpp"

#include <algorithm>

namespace hopfcalc {

namespace {
std::pair<char, char> norm_pair(char x, char y) {
  return {std::min(x, y), std::max(x, y)};
}
}  // namespace

CommutationGraph::CommutationGraph(const std::set<std::pair<char, char>>& pairs) {
  for (auto [x, y] : pairs) {
    if (x == y) throw UsageError("commutation graph is irreflexive");
    pairs_.insert(norm_pair(x, y));
  }
}

CommutationGraph CommutationGraph::parse(const std::string& text) {
  std::set<std::pair<char, char>> pairs;
  std::string cur;
  auto flush = [&](const std::string& p) {
    if (p.empty()) return;
    if (p.size() != 2) throw UsageError("commutation pair must be two letters: " + p);
    pairs.insert({p[0], p[1]});
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  flush(cur);
  return CommutationGraph(pairs);
}

CommutationGraph CommutationGraph::complete(const Alphabet& a) {
  std::set<std::pair<char, char>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      pairs.insert(norm_pair(a.at(i), a.at(j)));
  return CommutationGraph(pairs);
}

bool CommutationGraph::commutes(char x, char y) const {
  return pairs_.count(norm_pair(x, y)) > 0;
}

TraceWord trace_normal_form(const Word& w, const CommutationGraph& theta) {
  std::string rest = w.letters;
  std::string out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // Position of the smallest letter movable to the front, i.e. commuting
    // with every letter before it; ties broken by earliest occurrence.
    std::size_t best = std::string::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j)
        movable = theta.commutes(rest[i], rest[j]);
      if (movable && (best == std::string::npos || rest[i] < rest[best]))
        best = i;
    }
    out.push_back(rest[best]);
    rest.erase(best, 1);
  }
  return TraceWord{Word(out)};
}

}  // namespace hopfcalc
