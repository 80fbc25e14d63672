#include "doctest.h"

#include "hlpg/token.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

using namespace hlpg;

TEST_SUITE("token") {

TEST_CASE("kinds and accessors") {
  CHECK(Token::black().is_black());
  CHECK(Token::num(3).is_num());
  CHECK(Token::num(3).value() == 3);

  auto t = Token::tup({Token::num(1), Token::num(2)});
  CHECK(t.is_tup());
  REQUIRE(t.parts().size() == 2);
  CHECK(t.parts()[0] == Token::num(1));
  CHECK(t.parts()[1] == Token::num(2));

  auto s = Token::set({Token::num(2), Token::num(1)});
  CHECK(s.is_set());
  REQUIRE(s.elements().size() == 2);
  CHECK(s.elements()[0] == Token::num(1));
}

TEST_CASE("set construction sorts and deduplicates") {
  auto s = Token::set({Token::num(3), Token::num(1), Token::num(3),
                       Token::num(2), Token::num(1)});
  std::vector<Token> expect{Token::num(1), Token::num(2), Token::num(3)};
  CHECK(s.elements() == expect);
  CHECK(Token::set({}) == Token::set({}));
  CHECK(Token::set({}).elements().empty());
}

TEST_CASE("order ranks kinds Black < Num < Tup < Set") {
  auto b = Token::black();
  auto n = Token::num(1);
  auto t = Token::tup({Token::num(1), Token::num(1)});
  auto s = Token::set({});
  CHECK(b < n);
  CHECK(n < t);
  CHECK(t < s);
  CHECK(b < s);
}

TEST_CASE("numbers order by value, tuples and sets lexicographically") {
  CHECK(Token::num(1) < Token::num(2));
  CHECK(Token::num(-4) < Token::num(0));

  auto t12 = Token::tup({Token::num(1), Token::num(2)});
  auto t21 = Token::tup({Token::num(2), Token::num(1)});
  auto t121 = Token::tup({Token::num(1), Token::num(2), Token::num(1)});
  CHECK(t12 < t21);
  CHECK(t12 < t121); // shorter prefix first

  auto s1 = Token::set({Token::num(1)});
  auto s13 = Token::set({Token::num(1), Token::num(3)});
  auto s2 = Token::set({Token::num(2)});
  CHECK(Token::set({}) < s1);
  CHECK(s1 < s13);
  CHECK(s13 < s2);
}

TEST_CASE("equality is structural") {
  CHECK(Token::num(5) == Token::num(5));
  CHECK(Token::num(5) != Token::num(6));
  CHECK(Token::black() == Token());
  CHECK(Token::tup({Token::num(1), Token::num(2)}) ==
        Token::tup({Token::num(1), Token::num(2)}));
  CHECK(Token::set({Token::num(1), Token::num(2)}) ==
        Token::set({Token::num(2), Token::num(1)}));
  CHECK(Token::black() != Token::num(0));
  CHECK(Token::set({}) != Token::tup({Token::num(1), Token::num(1)}));
}

TEST_CASE("text renders compact canonical forms") {
  CHECK(Token::black().text() == ".");
  CHECK(Token::num(3).text() == "3");
  CHECK(Token::tup({Token::num(1), Token::num(2)}).text() == "(1,2)");
  CHECK(Token::set({Token::num(3), Token::num(1)}).text() == "{1,3}");
  CHECK(Token::set({}).text() == "{}");
  auto nested = Token::set({Token::tup({Token::num(2), Token::black()})});
  CHECK(nested.text() == "{(2,.)}");

  std::ostringstream os;
  os << Token::num(7);
  CHECK(os.str() == "7");
}

TEST_CASE("order is total: sorting mixed tokens is stable and canonical") {
  std::vector<Token> v{Token::set({Token::num(1)}),
                       Token::num(2),
                       Token::tup({Token::num(1), Token::num(1)}),
                       Token::black(),
                       Token::num(1)};
  std::sort(v.begin(), v.end(), [](const Token& a, const Token& b) {
    return a < b;
  });
  CHECK(v[0] == Token::black());
  CHECK(v[1] == Token::num(1));
  CHECK(v[2] == Token::num(2));
  CHECK(v[3].is_tup());
  CHECK(v[4].is_set());
}

} // TEST_SUITE
