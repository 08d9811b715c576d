#include <doctest.h>

#include "helpers.hpp"

using namespace testing_support;

namespace {

GeneratorSet two_letter() { return GeneratorSet({el(1, 1), el(lp({{-1, -1}}), -1)}); }

}  // namespace

TEST_CASE("group verdicts") {
  CHECK(decide_group(two_letter()).answer);
  CHECK_FALSE(decide_group(GeneratorSet({el(1, 1), el(0, -1)})).answer);
  CHECK(decide_group(GeneratorSet({el(0, 6), el(0, -4), el(0, 0)})).answer);
  CHECK(decide_group(GeneratorSet({el(1, 0), el(-1, 0)})).answer);
  CHECK_FALSE(decide_group(GeneratorSet({el(1, 0)})).answer);
  CHECK_FALSE(decide_group(GeneratorSet({el(0, 1), el(0, 2)})).answer);
  CHECK(decide_group(GeneratorSet({el(0, 1), el(0, -1)})).answer);
  // A loop whose y cannot be cancelled.
  CHECK_FALSE(decide_group(GeneratorSet({el(1, 1), el(lp({{-1, -1}}), -1), el(5, 0)})).answer);
  CHECK(throws_kind([] { (void)decide_group(GeneratorSet()); }, ErrorKind::InvalidInput));
  CHECK(throws_kind([] { (void)decide_group(GeneratorSet({{RatFunc(lp({{Rational(1, 2), 0}})), 1}})); },
                    ErrorKind::InvalidInput));
}

TEST_CASE("identity verdicts") {
  auto v = decide_identity(GeneratorSet({el(1, 1), el(lp({{-1, -1}}), -1), el(5, 0)}));
  CHECK(v.answer);
  REQUIRE(v.evidence.subset);
  CHECK(*v.evidence.subset == std::vector<std::size_t>{0, 1});
  CHECK(decide_identity(GeneratorSet({el(0, 0)})).answer);
  CHECK_FALSE(decide_identity(GeneratorSet({el(1, 0)})).answer);
}

TEST_CASE("double-full sets") {
  CHECK(enumerate_double_full({0}, {1}) == std::vector<PairSet>{{{0, 1}}});
  CHECK(enumerate_double_full({0, 1}, {2}) == std::vector<PairSet>{{{0, 2}, {1, 2}}});
  auto s = enumerate_double_full({0, 1}, {2, 3});
  CHECK(s.size() == 7);
  for (std::size_t t = 1; t < s.size(); ++t) CHECK(s[t - 1].size() <= s[t].size());
}

TEST_CASE("witnesses") {
  auto w = find_witness(two_letter(), {{0, 1}}, 2);
  REQUIRE(w);
  CHECK(eval_word(two_letter(), *w).is_identity());
  CHECK(is_full_image(two_letter(), *w));
  GeneratorSet shifts({el(0, 1), el(0, -1)});
  auto w2 = find_witness(shifts, {{0, 1}}, 1);
  REQUIRE(w2);
  CHECK(eval_word(shifts, *w2).is_identity());
  CHECK(is_full_image(shifts, *w2));

  DeciderOptions opt;
  opt.witness = true;
  for (auto G : {two_letter(), GeneratorSet({el(0, 6), el(0, -4), el(0, 0)}), GeneratorSet({el(1, 0), el(-1, 0)}),
                 GeneratorSet({el(1, 2), el(lp({{-1, -2}}), -2)})}) {
    auto v = decide_group(G, opt);
    REQUIRE(v.answer);
    REQUIRE(v.evidence.witness);
    CHECK(eval_word(G, *v.evidence.witness).is_identity());
    CHECK(is_full_image(G, *v.evidence.witness));
  }
}

TEST_CASE("breadth-first oracle") {
  auto r = bfs_oracle(two_letter(), 2);
  REQUIRE(r.found_word);
  CHECK(*r.found_word == Word{0, 1});
  auto none = bfs_oracle(GeneratorSet({el(1, 0)}), 6);
  CHECK_FALSE(none.found_word);
  CHECK(none.exhausted);
  auto six = bfs_oracle(GeneratorSet({el(0, 6), el(0, -4), el(0, 0)}), 6);
  REQUIRE(six.found_word);
  CHECK(six.found_word->size() == 6);
}

TEST_CASE("identity verdict is the OR over subsets of group verdicts") {
  std::vector<WreathElem> alphabet{el(1, 1), el(lp({{-1, -1}}), -1), el(0, -2), el(1, 0), el(-1, 0), el(X(), 2)};
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    for (std::size_t b = a + 1; b < alphabet.size(); ++b)
      for (std::size_t c = b + 1; c < alphabet.size(); ++c) {
        GeneratorSet G({alphabet[a], alphabet[b], alphabet[c]});
        bool any = false;
        for (unsigned mask = 1; mask < 8; ++mask) {
          std::vector<std::size_t> idx;
          for (std::size_t t = 0; t < 3; ++t)
            if (mask >> t & 1) idx.push_back(t);
          any = any || decide_group(G.subset(idx)).answer;
        }
        CHECK(decide_identity(G).answer == any);
        // Adding a generator to a group keeps the identity reachable.
        if (decide_group(G.subset({0, 1})).answer) CHECK(decide_identity(G).answer);
      }
}

TEST_CASE("output is deterministic") {
  DeciderOptions opt;
  opt.witness = true;
  auto G = GeneratorSet({el(0, 6), el(0, -4), el(0, 0)});
  CHECK(to_json(decide_group(G, opt)).dump() == to_json(decide_group(G, opt)).dump());
  CHECK(to_json(decide_identity(G, opt)).dump() == to_json(decide_identity(G, opt)).dump());
}

TEST_CASE("verdict serialization") {
  auto j = to_json(decide_group(two_letter()));
  CHECK(j["problem"] == "group");
  CHECK(j["verdict"] == true);
  CHECK(j["stats"].contains("lp_calls"));
  CHECK(to_text(decide_group(two_letter())).rfind("group: true", 0) == 0);
}
