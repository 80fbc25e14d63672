#include "hlpg/token.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace hlpg {

Token Token::tup(std::vector<Token> parts) {
  assert(parts.size() >= 2 && "tuples have arity >= 2");
  return Token(TupRep{std::move(parts)});
}

Token Token::set(std::vector<Token> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Token(SetRep{std::move(elems)});
}

std::int64_t Token::value() const { return std::get<NumRep>(rep_).v; }

const std::vector<Token>& Token::parts() const {
  return std::get<TupRep>(rep_).parts;
}

const std::vector<Token>& Token::elements() const {
  return std::get<SetRep>(rep_).elems;
}

static std::strong_ordering compare_seq(const std::vector<Token>& a,
                                        const std::vector<Token>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a[i] <=> b[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering Token::operator<=>(const Token& other) const {
  if (auto c = rep_.index() <=> other.rep_.index();
      c != std::strong_ordering::equal)
    return c;
  switch (kind()) {
  case Kind::Black:
    return std::strong_ordering::equal;
  case Kind::Num:
    return value() <=> other.value();
  case Kind::Tup:
    return compare_seq(parts(), other.parts());
  case Kind::Set:
    return compare_seq(elements(), other.elements());
  }
  return std::strong_ordering::equal;
}

std::string Token::text() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Token& t) {
  switch (t.kind()) {
  case Token::Kind::Black:
    return os << '.';
  case Token::Kind::Num:
    return os << t.value();
  case Token::Kind::Tup: {
    os << '(';
    bool first = true;
    for (const auto& p : t.parts()) {
      if (!first) os << ',';
      first = false;
      os << p;
    }
    return os << ')';
  }
  case Token::Kind::Set: {
    os << '{';
    bool first = true;
    for (const auto& e : t.elements()) {
      if (!first) os << ',';
      first = false;
      os << e;
    }
    return os << '}';
  }
  }
  return os;
}

} // namespace hlpg
