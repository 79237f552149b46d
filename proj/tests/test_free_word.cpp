#include <algorithm>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "ybfox/errors.hpp"
#include "ybfox/free_word.hpp"

using namespace ybfox;
using ybfox::testing::random_letters;
using ybfox::testing::random_word;

namespace {

const AlphabetPtr& a2() { return Alphabet::rank2(); }
const AlphabetPtr& a3() { return Alphabet::rank3(); }

FreeWord w(const std::string& text) { return parse_word(text, a2()); }

/// Cancellation oracle: removes one adjacent inverse pair at a random
/// position until none remains. Free reduction is confluent, so any
/// removal order must land on the same word.
FreeWord random_order_reduce(std::mt19937& rng, const AlphabetPtr& alphabet,
                             std::vector<Letter> raw) {
  for (;;) {
    std::vector<size_t> sites;
    for (size_t i = 0; i + 1 < raw.size(); ++i)
      if (raw[i].gen == raw[i + 1].gen && raw[i].exp == -raw[i + 1].exp) sites.push_back(i);
    if (sites.empty()) break;
    const size_t at = sites[rng() % sites.size()];
    raw.erase(raw.begin() + static_cast<long>(at), raw.begin() + static_cast<long>(at) + 2);
  }
  // raw is now reduced; feed it through the constructor unchanged
  return reduce(alphabet, raw);
}

}  // namespace

TEST_CASE("alphabet construction and validation") {
  const auto custom = Alphabet::make({"a", "b", "c"});
  CHECK(custom->size() == 3);
  CHECK(custom->name(1) == "b");
  CHECK(custom->index_of("c") == 2);
  CHECK(custom->index_of("x") == -1);

  CHECK(a2()->size() == 2);
  CHECK(a3()->size() == 3);
  CHECK(a2()->name(0) == "x");
  CHECK(a3()->name(2) == "z");

  CHECK_THROWS_AS(Alphabet::make({}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({"x", "x"}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({"3x"}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({""}), AlphabetError);
}

TEST_CASE("free reduction cancels inverse pairs") {
  CHECK(w("x x^-1").is_identity());
  CHECK(w("x^-1 x").is_identity());
  CHECK(w("y x x^-1 y") == w("y^2"));
  CHECK(w("x y y^-1 x^-1").is_identity());
  // cascade: the middle collapses and exposes a new pair
  CHECK(w("x y x^-1 x y^-1 x^-1").is_identity());
  CHECK(format_word(w("y^3 y^-1")) == "y^2");
}

TEST_CASE("reduction is confluent: random cancellation order agrees") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 200; ++i) {
    const auto& alphabet = i % 2 ? a2() : a3();
    const auto raw = random_letters(rng, alphabet->size(), static_cast<int>(rng() % 40));
    const FreeWord direct = reduce(alphabet, raw);
    const FreeWord shuffled = random_order_reduce(rng, alphabet, raw);
    CHECK(direct == shuffled);
  }
}

TEST_CASE("group axioms on random words") {
  std::mt19937 rng(7341);
  const FreeWord e = FreeWord::identity(a2());
  for (int i = 0; i < 200; ++i) {
    const FreeWord a = random_word(rng, a2(), 12);
    const FreeWord b = random_word(rng, a2(), 12);
    const FreeWord c = random_word(rng, a2(), 12);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, e) == a);
    CHECK(multiply(e, a) == a);
    CHECK(multiply(a, a.inverse()).is_identity());
    CHECK(multiply(a.inverse(), a).is_identity());
    CHECK(multiply(a, b).inverse() == multiply(b.inverse(), a.inverse()));
  }
}

TEST_CASE("powers") {
  const FreeWord v = w("x y");
  CHECK(power(v, 0).is_identity());
  CHECK(power(v, 1) == v);
  CHECK(power(v, 3) == multiply(multiply(v, v), v));
  CHECK(power(v, -2) == multiply(v, v).inverse());
  CHECK(power(w("x"), 5) == w("x^5"));
  CHECK(power(w("x"), -5) == w("x^-5"));
}

TEST_CASE("substitution is a homomorphism") {
  std::mt19937 rng(9182);
  for (int i = 0; i < 200; ++i) {
    const std::vector<FreeWord> images{random_word(rng, a3(), 8), random_word(rng, a3(), 8)};
    const FreeWord a = random_word(rng, a2(), 10);
    const FreeWord b = random_word(rng, a2(), 10);
    CHECK(substitute(multiply(a, b), images) ==
          multiply(substitute(a, images), substitute(b, images)));
    CHECK(substitute(a.inverse(), images) == substitute(a, images).inverse());
  }
  CHECK(substitute(FreeWord::identity(a2()),
                   {FreeWord::generator(a3(), 0), FreeWord::generator(a3(), 1)})
            .is_identity());
}

TEST_CASE("substitution concrete values") {
  // x -> zy, y -> x over the rank-3 target
  const std::vector<FreeWord> images{parse_word("z y", a3()), parse_word("x", a3())};
  CHECK(substitute(w("x y"), images) == parse_word("z y x", a3()));
  CHECK(substitute(w("x^-1"), images) == parse_word("y^-1 z^-1", a3()));
  // the image can cancel even when the input is reduced
  const std::vector<FreeWord> collapsing{parse_word("z", a3()), parse_word("z^-1", a3())};
  CHECK(substitute(w("x y"), collapsing).is_identity());
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(w("1"), w("x")));
  CHECK(shortlex_less(w("x"), w("y")));
  CHECK(shortlex_less(w("x"), w("x^-1")));       // +1 sorts before -1
  CHECK(shortlex_less(w("y^-1"), w("x y")));     // length dominates
  CHECK(shortlex_less(w("x y"), w("y x")));
  CHECK(shortlex_less(w("x^2"), w("x y")));
  CHECK(!shortlex_less(w("x"), w("x")));

  // total order: sorting is stable under permutation of input
  std::mt19937 rng(5150);
  std::vector<FreeWord> words;
  for (int i = 0; i < 50; ++i) words.push_back(random_word(rng, a2(), 6));
  auto sorted = words;
  std::sort(sorted.begin(), sorted.end(), ShortlexLess{});
  std::shuffle(words.begin(), words.end(), rng);
  std::sort(words.begin(), words.end(), ShortlexLess{});
  CHECK(words == sorted);
}

TEST_CASE("parse and format round trip") {
  CHECK(format_word(w("1")) == "1");
  CHECK(format_word(w("y^2 x")) == "y^2 x");
  CHECK(format_word(w("x^-1 y^-1 x")) == "x^-1 y^-1 x");
  CHECK(format_word(w("yxy")) == "y x y");       // juxtaposed names split
  CHECK(format_word(w("y x y")) == "y x y");
  CHECK(format_word(w("x^+2")) == "x^2");
  CHECK(format_word(w("  y  ")) == "y");

  std::mt19937 rng(3771);
  for (int i = 0; i < 500; ++i) {
    const auto& alphabet = i % 2 ? a2() : a3();
    const FreeWord original = random_word(rng, alphabet, 15);
    CHECK(parse_word(format_word(original), alphabet) == original);
  }
}

TEST_CASE("longest declared name wins tokenization") {
  const auto names = Alphabet::make({"a", "ab", "b"});
  const FreeWord both = parse_word("ab", names);
  CHECK(both.length() == 1);
  CHECK(both == FreeWord::generator(names, 1));
  CHECK(parse_word("a b", names) ==
        multiply(FreeWord::generator(names, 0), FreeWord::generator(names, 2)));
  CHECK(format_word(parse_word("ab^2 a", names)) == "ab^2 a");
}

TEST_CASE("parse diagnostics carry byte offsets") {
  CHECK_THROWS_AS(w("q"), ParseError);
  CHECK_THROWS_AS(w("x q"), ParseError);
  CHECK_THROWS_AS(w("x^0"), ParseError);
  CHECK_THROWS_AS(w("x^"), ParseError);
  CHECK_THROWS_AS(w("^2"), ParseError);
  CHECK_THROWS_AS(w(""), ParseError);
  CHECK_THROWS_AS(w("1 x"), ParseError);
  CHECK_THROWS_AS(w("x^9999999"), ParseError);

  try {
    w("x y q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(std::string(e.what()).find("at byte 4") != std::string::npos);
  }
}

TEST_CASE("words remember their alphabet") {
  const FreeWord over2 = w("x y");
  const FreeWord over3 = parse_word("x y", a3());
  CHECK(over2 != over3);  // same spelling, different alphabets
  CHECK_THROWS_AS(multiply(over2, over3), AlphabetError);
}
