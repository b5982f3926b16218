#include "rw/relations.hpp"

#include <cctype>

#include "rw/errors.hpp"

namespace rw {
namespace {

class WordParser {
 public:
  WordParser(const std::string& text, const SymbolAssignment& assignment, int degree)
      : text_(text), assignment_(assignment), degree_(degree) {}

  Permutation parse() {
    Permutation result = parse_word(false);
    if (pos_ != text_.size()) {
      throw WordError("unexpected ')' at position " + std::to_string(pos_) + " in \"" + text_ +
                      "\"");
    }
    return result;
  }

 private:
  Permutation parse_word(bool inside_parens) {
    Permutation acc = Permutation::identity(degree_);
    skip_separators();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      acc = compose(acc, parse_factor());
      skip_separators();
    }
    if (inside_parens && (pos_ >= text_.size() || text_[pos_] != ')')) {
      throw WordError("unbalanced '(' in \"" + text_ + "\"");
    }
    return acc;
  }

  Permutation parse_factor() {
    Permutation base;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = parse_word(true);
      ++pos_; // consume ')'
    } else if (c == '1') {
      ++pos_;
      base = Permutation::identity(degree_);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      const auto it = assignment_.find(name);
      if (it == assignment_.end()) {
        throw WordError("unbound symbol \"" + name + "\" in \"" + text_ + "\"");
      }
      if (it->second.degree() != degree_) {
        throw DegreeMismatchError("symbol \"" + name + "\" has degree " +
                                  std::to_string(it->second.degree()) + ", expected " +
                                  std::to_string(degree_));
      }
      base = it->second;
    } else {
      throw WordError("unexpected character '" + std::string(1, c) + "' at position " +
                      std::to_string(pos_) + " in \"" + text_ + "\"");
    }
    skip_separators();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_separators();
      base = power(base, parse_exponent());
    }
    return base;
  }

  long long parse_exponent() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw WordError("missing exponent digits in \"" + text_ + "\"");
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000'000LL) {
        throw WordError("exponent too large in \"" + text_ + "\"");
      }
    }
    return negative ? -value : value;
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  const std::string& text_;
  const SymbolAssignment& assignment_;
  int degree_;
  std::size_t pos_ = 0;
};

int assignment_degree(const SymbolAssignment& assignment) {
  if (assignment.empty()) {
    throw WordError("cannot evaluate a word over an empty assignment");
  }
  return assignment.begin()->second.degree();
}

} // namespace

Permutation evaluate_word(const std::string& word, const SymbolAssignment& assignment) {
  return WordParser(word, assignment, assignment_degree(assignment)).parse();
}

bool check_relation(const std::string& equation, const SymbolAssignment& assignment) {
  const auto eq = equation.find('=');
  if (eq == std::string::npos || equation.find('=', eq + 1) != std::string::npos) {
    throw WordError("relation must contain exactly one '=': \"" + equation + "\"");
  }
  const std::string lhs = equation.substr(0, eq);
  const std::string rhs = equation.substr(eq + 1);
  return evaluate_word(lhs, assignment) == evaluate_word(rhs, assignment);
}

} // namespace rw
