// Independent brute-force matrix-consequence oracle used to cross-check the
// semantic closure computed through the institution machinery. It shares only
// the LogicPresentation *data* with the library: parsing, evaluation and the
// valuation sweep are reimplemented here from scratch.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "instkit/proplogic.hpp"

namespace oracle {

struct Node {
  std::string head;
  std::vector<Node> kids;
};

inline Node parse(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
         text[pos] != ',')
    ++pos;
  Node n{text.substr(start, pos - start), {}};
  if (n.head.empty()) throw std::runtime_error("oracle: empty token");
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      return n;
    }
    while (true) {
      n.kids.push_back(parse(text, pos));
      if (pos >= text.size())
        throw std::runtime_error("oracle: unterminated argument list");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::runtime_error("oracle: bad character in argument list");
    }
  }
  return n;
}

inline Node parse(const std::string& text) {
  std::size_t pos = 0;
  Node n = parse(text, pos);
  if (pos != text.size()) throw std::runtime_error("oracle: trailing input");
  return n;
}

inline std::string eval(const instkit::LogicPresentation& l,
                        const std::map<std::string, std::string>& valuation,
                        const Node& n) {
  if (n.kids.empty() && valuation.count(n.head)) return valuation.at(n.head);
  std::vector<std::string> args;
  for (const auto& k : n.kids) args.push_back(eval(l, valuation, k));
  return l.matrix.interp.at(n.head).at(args);
}

// All valuations of l's variables, generated by an odometer over the value
// set in sorted order.
inline std::vector<std::map<std::string, std::string>> valuations(
    const instkit::LogicPresentation& l) {
  std::vector<std::string> values(l.matrix.values.begin(),
                                  l.matrix.values.end());
  std::vector<std::size_t> digits(l.variables.size(), 0);
  std::vector<std::map<std::string, std::string>> out;
  while (true) {
    std::map<std::string, std::string> v;
    for (std::size_t i = 0; i < l.variables.size(); ++i)
      v[l.variables[i]] = values[digits[i]];
    out.push_back(v);
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < values.size()) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return out;
}

// The matrix-consequence closure of `premises` inside `universe`: every
// member of the universe designated under all valuations that designate all
// premises.
inline std::set<std::string> closure(const instkit::LogicPresentation& l,
                                     const std::set<std::string>& universe,
                                     const std::set<std::string>& premises) {
  std::vector<Node> parsed_premises;
  for (const auto& s : premises) parsed_premises.push_back(parse(s));
  std::set<std::string> out;
  for (const auto& candidate : universe) {
    Node target = parse(candidate);
    bool follows = true;
    for (const auto& v : valuations(l)) {
      bool all_designated = true;
      for (const auto& g : parsed_premises)
        if (!l.matrix.designated.count(eval(l, v, g))) {
          all_designated = false;
          break;
        }
      if (all_designated && !l.matrix.designated.count(eval(l, v, target))) {
        follows = false;
        break;
      }
    }
    if (follows) out.insert(candidate);
  }
  return out;
}

}  // namespace oracle
