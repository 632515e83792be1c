#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opid/errors.hpp"

namespace opid {

// Ordered set of indeterminates. Declaration order doubles as the variable
// precedence of the degree-lexicographic monomial order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  std::optional<int> id_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// A monomial of the free monoid: a finite sequence of variable ids, stored
// left to right as displayed. The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::int32_t> letters) : letters_(std::move(letters)) {}
  static Word letter(std::int32_t id) { return Word({id}); }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const std::int32_t> letters() const { return letters_; }
  std::int32_t operator[](std::size_t i) const { return letters_[i]; }

  Word prefix(std::size_t k) const;
  Word suffix(std::size_t k) const;             // last k letters
  Word subword(std::size_t pos, std::size_t len) const;
  Word pow(unsigned n) const;

  friend Word operator*(const Word& u, const Word& v);  // concatenation
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  // "1" for the empty word, otherwise names joined with '*'.
  std::string str(const Alphabet& alphabet) const;

 private:
  std::vector<std::int32_t> letters_;
};

// Degree-lexicographic order: shorter words first, ties broken letterwise by
// variable id (declaration order). Total, multiplicative, 1-minimal.
bool deglex_less(const Word& a, const Word& b);

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

// All factorizations m = a*d*b, ordered by increasing start position of the
// occurrence of d; overlapping occurrences are included. d must be nonempty.
std::vector<std::pair<Word, Word>> word_divisions(const Word& m, const Word& d);

// First factorization in word_divisions order, if any. An empty divisor is
// admitted here and splits at position 0: (1, m).
std::optional<std::pair<Word, Word>> leftmost_division(const Word& m, const Word& d);

}  // namespace opid
