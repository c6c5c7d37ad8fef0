#include <wordeq/word.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>

using namespace wordeq;

namespace {

// Letter-string oracles, independent of the exponent-vector implementation.
std::string oracle_compose(const std::string& u, const std::string& w) {
  std::string out;
  for (char c : u) {
    if (c == 'X')
      out += w;
    else
      out += c;
  }
  return out;
}

std::string oracle_apply(const Morphism& phi, const std::string& w) {
  switch (phi.kind) {
    case Morphism::Kind::L: return "A" + w;
    case Morphism::Kind::R: return w + "A";
    default: {
      std::string block = w + std::string(static_cast<std::size_t>(phi.k), 'A');
      std::string out;
      for (int i = 0; i < phi.m; ++i) out += block;
      return out + w;
    }
  }
}

}  // namespace

TEST_CASE("parse_word produces exponent vectors") {
  CHECK(parse_word("X^2AX") == Word({0, 0, 1, 0}));
  CHECK(parse_word("X") == Word({0, 0}));
  CHECK(parse_word("XAX^2AXAXAX^2AX") == Word({0, 1, 0, 1, 1, 1, 0, 1, 0}));
  CHECK(parse_word("A^3") == Word({3}));
  CHECK(parse_word("") == Word({0}));
  CHECK(parse_word(" X A X ") == Word({0, 1, 0}));
  CHECK(parse_word("X^2AX").x_count() == 3);
  CHECK(parse_word("XAX^2AXAXAX^2AX").x_count() == 8);
}

TEST_CASE("parse_word rejects bad input with positions") {
  CHECK_THROWS_AS(parse_word("X^0"), WordParseError);
  CHECK_THROWS_AS(parse_word("XY"), WordParseError);
  CHECK_THROWS_AS(parse_word("X^"), WordParseError);
  CHECK_THROWS_AS(parse_word("^2"), WordParseError);
  try {
    parse_word("XAB");
  } catch (const WordParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("render round-trips and is compact") {
  CHECK(render(parse_word("X^2AX")) == "X^2AX");
  CHECK(render(parse_word("XXAX")) == "X^2AX");
  CHECK(render(Word({0, 1, 0, 1, 1, 1, 0, 1, 0})) == "XAX^2AXAXAX^2AX");
  CHECK(render(Word({0})) == "");
  CHECK(render(Word({2})) == "A^2");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> len(0, 12);
    std::string letters;
    for (int i = 0, L = len(rng); i < L; ++i) letters += (rng() & 1) ? 'A' : 'X';
    const Word w = from_letters(letters);
    CHECK(parse_word(render(w)) == w);
    CHECK(to_letters(w) == letters);
  }
}

TEST_CASE("compose matches the string oracle") {
  const Word u = parse_word("XX"), w = parse_word("XAX");
  CHECK(render(compose(u, w)) == "XAX^2AX");
  CHECK(compose(u, w) == from_letters(oracle_compose("XX", "XAX")));
  CHECK(compose(parse_word("X"), w) == w);
  CHECK(compose(w, parse_word("X")) == w);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 6);
  auto random_letters = [&] {
    std::string s;
    for (int i = 0, L = len(rng); i < L; ++i) s += (rng() & 1) ? 'A' : 'X';
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const std::string su = random_letters(), sw = random_letters();
    CHECK(compose(from_letters(su), from_letters(sw)) == from_letters(oracle_compose(su, sw)));
  }
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> len(0, 5);
  auto random_word = [&] {
    std::string s;
    for (int i = 0, L = len(rng); i < L; ++i) s += (rng() & 1) ? 'A' : 'X';
    return from_letters(s);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_word(), v = random_word(), w = random_word();
    CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
  }
}

TEST_CASE("apply_morphism implements l, r, pi") {
  CHECK(render(apply_morphism(Morphism::pi(1, 1), parse_word("X"))) == "XAX");
  CHECK(render(apply_morphism(Morphism::pi(1, 0), parse_word("XAX"))) == "XAX^2AX");
  CHECK(render(apply_morphism(Morphism::pi(1, 1), parse_word("XAX^2AX"))) == "XAX^2AXAXAX^2AX");
  CHECK(render(apply_morphism(Morphism::l(), parse_word("X"))) == "AX");
  CHECK(render(apply_morphism(Morphism::r(), parse_word("X"))) == "XA");
  CHECK(render(apply_morphism(Morphism::pi(1, 2), parse_word("X"))) == "XA^2X");

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(0, 6), mm(1, 3), kk(0, 3), kind(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::string s;
    for (int i = 0, L = len(rng); i < L; ++i) s += (rng() & 1) ? 'A' : 'X';
    Morphism phi = Morphism::l();
    switch (kind(rng)) {
      case 0: phi = Morphism::l(); break;
      case 1: phi = Morphism::r(); break;
      default: phi = Morphism::pi(mm(rng), kk(rng)); break;
    }
    CHECK(apply_morphism(phi, from_letters(s)) == from_letters(oracle_apply(phi, s)));
  }
}

TEST_CASE("morphism parameter validation") {
  CHECK_THROWS_AS(Morphism::pi(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::pi(1, -1), std::invalid_argument);
}

TEST_CASE("decompose finds the paper witness chain") {
  const Word w = parse_word("XAX^2AXAXAX^2AX");
  auto witness = decompose(w);
  REQUIRE(witness.has_value());
  CHECK(replay(*witness) == w);
  // the fixed branch order recovers exactly the chain pi(1,1), pi(1,0), pi(1,1)
  CHECK(witness->morphisms ==
        std::vector<Morphism>{Morphism::pi(1, 1), Morphism::pi(1, 0), Morphism::pi(1, 1)});
}

TEST_CASE("decompose rejects non-decomposable words") {
  CHECK_FALSE(decompose(parse_word("X^2AX")).has_value());
  CHECK_FALSE(decompose(parse_word("XAXX")).has_value());
  CHECK_FALSE(decompose(parse_word("A")).has_value());
  CHECK_FALSE(decompose(parse_word("")).has_value());
  CHECK_FALSE(decompose(parse_word("A^5")).has_value());
  CHECK_FALSE(decompose(parse_word("XAX^3AX")).has_value());
}

TEST_CASE("decompose handles X^nAX^n") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> exps(static_cast<std::size_t>(2 * n) + 1, 0);
    exps[static_cast<std::size_t>(n)] = 1;
    const Word w{exps};
    auto witness = decompose(w);
    REQUIRE(witness.has_value());
    CHECK(replay(*witness) == w);
  }
}

TEST_CASE("decompose base and small cases") {
  CHECK(decompose(parse_word("X"))->morphisms.empty());
  CHECK(decompose(parse_word("XX")).has_value());
  CHECK(decompose(parse_word("XAX")).has_value());
  CHECK(decompose(parse_word("XAXAX")).has_value());
  CHECK(decompose(parse_word("XAAX")).has_value());
  CHECK(decompose(parse_word("AXA")).has_value());
}

TEST_CASE("random witnesses replay and decompose (closure)") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> wlen(1, 6), mm(1, 3), kk(0, 3), kind(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    DecompositionWitness witness;
    Word w = Word::letter_x();
    const int target = wlen(rng);
    for (int i = 0; i < target; ++i) {
      Morphism phi = Morphism::l();
      switch (kind(rng)) {
        case 0: phi = Morphism::l(); break;
        case 1: phi = Morphism::r(); break;
        default: phi = Morphism::pi(mm(rng), kk(rng)); break;
      }
      const Word next = apply_morphism(phi, w);
      if (next.length() > 120) break;  // keep the search cheap
      witness.morphisms.push_back(phi);
      w = next;
    }
    CHECK(replay(witness) == w);
    auto found = decompose(w, 128);
    REQUIRE(found.has_value());
    CHECK(replay(*found) == w);
  }
}

TEST_CASE("decomposability is invariant under stripping boundary A's") {
  for (const Word& w : enumerate_words(7, false)) {
    const bool base = decompose(w).has_value();
    CHECK(decompose(apply_morphism(Morphism::l(), w)).has_value() == base);
    CHECK(decompose(apply_morphism(Morphism::r(), w)).has_value() == base);
  }
}

TEST_CASE("enumerate_words yields the documented sets") {
  auto render_all = [](const std::vector<Word>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(render(w));
    return out;
  };
  CHECK(render_all(enumerate_words(2, true)) == std::set<std::string>{"X", "X^2"});
  CHECK(render_all(enumerate_words(3, true)) == std::set<std::string>{"X", "X^2", "X^3", "XAX"});
  CHECK(enumerate_words(10, false).size() == 2046);
  CHECK(enumerate_words(10, true).size() == 512);
  // deterministic order: by length, then lexicographic with X < A
  const auto words = enumerate_words(3, true);
  CHECK(render(words[0]) == "X");
  CHECK(render(words[1]) == "X^2");
  CHECK(render(words[2]) == "X^3");
  CHECK(render(words[3]) == "XAX");
}

TEST_CASE("length and counts") {
  const Word w = parse_word("XAX^2AXAXAX^2AX");
  CHECK(w.length() == 13);
  CHECK(w.x_count() == 8);
  CHECK(w.a_count() == 5);
}
