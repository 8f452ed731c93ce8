#include "hopfcalc/format.hpp"

namespace hopfcalc {

std::string basis_str(const Word& w) {
  return w.is_empty() ? "1" : w.letters;
}

std::string basis_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents) {
    out += v.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string basis_str(const TraceWord& t) { return basis_str(t.normal_form); }

std::string basis_str(const GroupElem& g) { return g.group->name_of(g.index); }

std::string basis_str(const LabelledDiagram& d) {
  if (d.is_empty()) return "1";
  std::string out = "[";
  for (int r = 0; r < d.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (int c = 0; c < d.cols(); ++c) {
      if (c) out += ",";
      out += std::to_string(d.at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string basis_str(const Diagram& d) { return basis_str(d.canon); }

std::string multi_index_str(const MultiIndex& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out += ", ";
    out += std::to_string(k) + ":" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace hopfcalc
