#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hlpg {

// A concrete token value: the black token, a number from a range set, a
// tuple over a product set, or a finite set over a powerset. Tokens are
// immutable and totally ordered; the order fixes every canonical
// enumeration in the library (valuations, markings, instantiation).
//
// Order: Black < Num < Tup < Set; numbers ascending; tuples and sets
// lexicographic, sets compared on their sorted element sequence.
class Token {
public:
  enum class Kind { Black, Num, Tup, Set };

  Token() : rep_(BlackRep{}) {}

  static Token black() { return Token(); }
  static Token num(std::int64_t n) { return Token(NumRep{n}); }
  // pre: parts.size() >= 2
  static Token tup(std::vector<Token> parts);
  // Sorts and deduplicates; accepts any order, may be empty.
  static Token set(std::vector<Token> elems);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_black() const { return kind() == Kind::Black; }
  bool is_num() const { return kind() == Kind::Num; }
  bool is_tup() const { return kind() == Kind::Tup; }
  bool is_set() const { return kind() == Kind::Set; }

  std::int64_t value() const;                  // pre: is_num()
  const std::vector<Token>& parts() const;     // pre: is_tup()
  const std::vector<Token>& elements() const;  // pre: is_set()

  bool operator==(const Token& other) const = default;
  std::strong_ordering operator<=>(const Token& other) const;

  // Compact canonical rendering: ".", "3", "(1,2)", "{1,3}". No spaces.
  std::string text() const;

private:
  struct BlackRep {
    bool operator==(const BlackRep&) const = default;
    std::strong_ordering operator<=>(const BlackRep&) const = default;
  };
  struct NumRep {
    std::int64_t v;
    bool operator==(const NumRep&) const = default;
    std::strong_ordering operator<=>(const NumRep&) const = default;
  };
  struct TupRep {
    std::vector<Token> parts;
    bool operator==(const TupRep&) const = default;
  };
  struct SetRep {
    std::vector<Token> elems; // sorted, unique
    bool operator==(const SetRep&) const = default;
  };
  using Rep = std::variant<BlackRep, NumRep, TupRep, SetRep>;

  explicit Token(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

std::ostream& operator<<(std::ostream& os, const Token& t);

} // namespace hlpg
