#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "silab/word.hpp"
#include "test_helpers.hpp"

using namespace silab;
using silab::testing::m;

namespace {

Word w(const std::string& s) { return parse_word(s); }

std::vector<Word> all_words_up_to(size_t max_len) {
  std::vector<Word> out;
  for (size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (1ULL << len); ++bits) {
      Word word;
      for (size_t i = 0; i < len; ++i)
        word.letters.push_back((bits >> i) & 1 ? Letter::Xstar : Letter::X);
      out.push_back(word);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("reduce_rank_one") {
  RankOneProfile generic{parse_entry("3/5"), Rational(1), 2};
  RankOneProfile nilpotent{GaussianRational(0), Rational(1), 2};

  // T T* T = s T.
  CHECK(reduce_rank_one(w("TtT"), generic) == ScaledMonomial{0, 0, 1, MonomialBase::T});
  CHECK(reduce_rank_one(w("TtT"), nilpotent) == ScaledMonomial{0, 0, 1, MonomialBase::T});

  // T^2 = (tr T) T, which is 0 for trace zero.
  CHECK(reduce_rank_one(w("TT"), nilpotent) == ScaledMonomial{0, 0, 0, MonomialBase::Zero});
  CHECK(reduce_rank_one(w("TT"), generic) == ScaledMonomial{1, 0, 0, MonomialBase::T});

  CHECK(reduce_rank_one(w("tT"), generic) == ScaledMonomial{0, 0, 0, MonomialBase::TstarT});
}

TEST_CASE("evaluate_word") {
  ExactMatrix e12 = m({{"0", "1"}, {"0", "0"}});
  CHECK(evaluate_word(w("T"), e12) == e12);
  CHECK(evaluate_word(w("Tt"), e12) == m({{"1", "0"}, {"0", "0"}}));

  // T* T T* = T* on partial isometries.
  for (const auto& rows : {std::vector<std::vector<std::string>>{{"0", "1"}, {"0", "0"}},
                           {{"3/5", "4/5"}, {"0", "0"}}}) {
    ExactMatrix t = m(rows);
    CHECK(evaluate_word(w("tTt"), t) == adjoint(t));
  }
}

TEST_CASE("monomial_value") {
  ExactMatrix e12 = m({{"0", "1"}, {"0", "0"}});
  CHECK(monomial_value({0, 0, 1, MonomialBase::T}, e12) == e12);

  ExactMatrix t = m({{"3/5", "4/5"}, {"0", "0"}});
  CHECK(monomial_value({1, 0, 0, MonomialBase::T}, t) == t.scaled(parse_entry("3/5")));

  CHECK(monomial_value({0, 0, 0, MonomialBase::Zero}, t).is_zero());
  CHECK_THROWS_AS(monomial_value({0, 0, 0, MonomialBase::T}, ExactMatrix::identity(2)),
                  NotRankOneError);
}

TEST_CASE("word and monomial adjoints") {
  CHECK(word_adjoint(w("TtT")) == w("tTt"));
  CHECK(word_adjoint(w("TT")) == w("tt"));
  CHECK(monomial_adjoint({2, 1, 3, MonomialBase::T}) ==
        ScaledMonomial{1, 2, 3, MonomialBase::Tstar});
  // TT* and T*T are selfadjoint values, so they are fixed points.
  CHECK(monomial_adjoint({2, 1, 3, MonomialBase::TTstar}) ==
        ScaledMonomial{1, 2, 3, MonomialBase::TTstar});
}

TEST_CASE("reduction soundness against direct evaluation") {
  const std::vector<std::vector<std::vector<std::string>>> matrices = {
      {{"0", "1"}, {"0", "0"}},            // trace 0, s = 1
      {{"0", "2"}, {"0", "0"}},            // trace 0, s = 4
      {{"3/5", "4/5"}, {"0", "0"}},        // real trace, s = 1
      {{"4/5", "3/5+3/4i"}, {"0", "0"}},   // trace-norm witness profile
      {{"3/13+4/13i", "12/13"}, {"0", "0"}}};
  auto words = all_words_up_to(8);
  for (const auto& rows : matrices) {
    ExactMatrix t = m(rows);
    RankOneProfile prof = profile(t);
    for (const auto& word : words) {
      ScaledMonomial sm = reduce_rank_one(word, prof);
      CHECK(evaluate_word(word, t) == monomial_value(sm, t));
    }
  }
}

TEST_CASE("involution compatibility") {
  RankOneProfile generic{parse_entry("3/5+1/5i"), Rational(2), 2};
  RankOneProfile nilpotent{GaussianRational(0), Rational(4), 2};
  for (const auto& prof : {generic, nilpotent}) {
    for (const auto& word : all_words_up_to(7)) {
      CHECK(reduce_rank_one(word_adjoint(word), prof) ==
            monomial_adjoint(reduce_rank_one(word, prof)));
    }
  }
}

TEST_CASE("reduced shapes stay inside the monomial lists") {
  RankOneProfile generic{parse_entry("3/5"), Rational(1), 2};
  RankOneProfile nilpotent{GaussianRational(0), Rational(4), 2};
  for (const auto& word : all_words_up_to(9)) {
    CHECK(monomial_shape_in_list(reduce_rank_one(word, generic), false));
    CHECK(monomial_shape_in_list(reduce_rank_one(word, nilpotent), true));
  }
}

TEST_CASE("enumerate_monomials") {
  // Trace zero, s = 1: the seven shapes collapse to five operator values.
  ExactMatrix e12 = m({{"0", "1"}, {"0", "0"}});
  RankOneProfile nil = profile(e12);
  auto monomials = enumerate_monomials(nil, 2);
  std::set<std::string> values;
  for (const auto& sm : monomials) values.insert(canonical_key(monomial_value(sm, e12)));
  CHECK(values.size() == 5);

  // Bound 0 with nonzero trace: exactly the four bases.
  RankOneProfile generic{parse_entry("3/5"), Rational(1), 2};
  auto deg0 = enumerate_monomials(generic, 0);
  CHECK(deg0.size() == 4);
  for (const auto& sm : deg0) {
    CHECK(sm.p == 0);
    CHECK(sm.q == 0);
    CHECK(sm.k == 0);
    CHECK(sm.base != MonomialBase::Zero);
  }

  // Bound 1 with nonzero trace: a T, conj(a) T*, s-scaled bases and the
  // four degree-0 bases; zero is absent.
  auto deg1 = enumerate_monomials(generic, 1);
  CHECK(deg1.size() == 14);
  for (const auto& sm : deg1) CHECK(sm.base != MonomialBase::Zero);
  CHECK(std::count(deg1.begin(), deg1.end(), ScaledMonomial{1, 0, 0, MonomialBase::T}) == 1);
  CHECK(std::count(deg1.begin(), deg1.end(), ScaledMonomial{0, 1, 0, MonomialBase::T}) == 0);

  // Every reduced word lands in the enumerated set (symbolically) once the
  // degree bound is large enough.
  auto big = enumerate_monomials(generic, 10);
  for (const auto& word : all_words_up_to(8)) {
    ScaledMonomial sm = reduce_rank_one(word, generic);
    CHECK(std::count(big.begin(), big.end(), sm) == 1);
  }
}

TEST_CASE("word literal parsing") {
  CHECK(word_str(w("TtT")) == "TtT");
  CHECK_THROWS_AS(parse_word("TxT"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
}
