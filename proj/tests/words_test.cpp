#include "doctest.h"

#include <map>

#include "bgdc/scalar.hpp"
#include "bgdc/trees.hpp"
#include "bgdc/words.hpp"

using namespace bgdc;

namespace {

// Word expansion of a formal sum of trees, for comparing Lie-algebra elements
// by their image in the free associative algebra.
template <class F>
std::map<Word, long long> expand_trees(const std::vector<std::pair<BracketTree, long long>>& ts) {
  std::map<Word, long long> out;
  for (const auto& [t, c] : ts)
    for (const auto& [w, cw] : tree_word_expansion(t)) {
      out[w] += c * cw;
      if (out[w] == 0) out.erase(w);
    }
  return out;
}

}  // namespace

TEST_CASE("word string forms") {
  CHECK(Word{1, 2, 3}.str() == "123");
  CHECK(Word::parse("123") == Word{1, 2, 3});
  Word big{1, 2, 12};
  CHECK(big.str() == "1,2,12");
  CHECK(Word::parse("1,2,12") == big);
  CHECK_THROWS_AS(Word::parse("a1"), std::invalid_argument);
  CHECK(Word{}.str().empty());
}

TEST_CASE("word predicates") {
  CHECK(Word{1, 3, 7}.strictly_increasing());
  CHECK_FALSE(Word{1, 3, 2}.strictly_increasing());
  CHECK(Word{3, 1, 2}.sorted() == Word{1, 2, 3});
  CHECK(Word{3, 1, 2}.is_permutation_of(Word{1, 2, 3}));
  CHECK_FALSE(Word{1, 1}.distinct_letters());
  CHECK(transpose(Word{1, 2, 3}) == Word{3, 2, 1});
  CHECK(Word{1, 2}.concat(Word{3}) == Word{1, 2, 3});
}

TEST_CASE("word_range and permutations_of") {
  CHECK(word_range(1, 3) == Word{1, 2, 3});
  CHECK(word_range(4, 3) == Word{});
  auto perms = permutations_of(Word{3, 1, 2});
  REQUIRE(perms.size() == 6);
  CHECK(perms.front() == Word{1, 2, 3});  // lexicographic from sorted
  CHECK(perms.back() == Word{3, 2, 1});
  CHECK(permutations_of(Word{}).size() == 1);
}

TEST_CASE("shuffle product") {
  auto sh = shuffle(Word{1}, Word{2});
  REQUIRE(sh.size() == 2);
  CHECK(sh.at(Word{1, 2}) == 1);
  CHECK(sh.at(Word{2, 1}) == 1);

  auto sh2 = shuffle(Word{1, 2}, Word{3});
  REQUIRE(sh2.size() == 3);
  CHECK(sh2.at(Word{1, 2, 3}) == 1);
  CHECK(sh2.at(Word{1, 3, 2}) == 1);
  CHECK(sh2.at(Word{3, 1, 2}) == 1);

  // Repeated letters accumulate multiplicity: 1 sh 1 = 2 * 11.
  auto shm = shuffle(Word{1}, Word{1});
  REQUIRE(shm.size() == 1);
  CHECK(shm.at(Word{1, 1}) == 2);

  // Total multiplicity is binomial(|P|+|Q|, |P|).
  long long total = 0;
  for (const auto& [w, c] : shuffle(Word{1, 2, 3}, Word{4, 5})) total += c;
  CHECK(total == 10);
}

TEST_CASE("deconcatenations") {
  auto dec = deconcatenations(Word{1, 2, 3});
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == std::pair{Word{1}, Word{2, 3}});
  CHECK(dec[1] == std::pair{Word{1, 2}, Word{3}});
  CHECK(deconcatenations(Word{1}).empty());
}

TEST_CASE("ordered partitions") {
  auto parts = ordered_partitions(Word{1, 2, 3});
  CHECK(parts.size() == 6);  // 2^3 - 2 ordered pairs of complementary subsets

  auto unord = ordered_partitions(Word{1, 2, 3}, /*unordered=*/true);
  REQUIRE(unord.size() == 3);
  // Canonical representative: the part holding the smallest letter first.
  for (const auto& [Q, R] : unord) CHECK(Q.contains(1));

  CHECK_THROWS_AS(ordered_partitions(Word{2, 1}), std::invalid_argument);
}

TEST_CASE("left bracketing and word expansion") {
  BracketTree t = left_bracketing(Word{1, 2, 3});
  CHECK(t.str() == "[[1,2],3]");
  CHECK(t.word() == Word{1, 2, 3});

  auto words = tree_word_expansion(t);
  // [[1,2],3] = 123 - 213 - 312 + 321
  REQUIRE(words.size() == 4);
  CHECK(words.at(Word{1, 2, 3}) == 1);
  CHECK(words.at(Word{2, 1, 3}) == -1);
  CHECK(words.at(Word{3, 1, 2}) == -1);
  CHECK(words.at(Word{3, 2, 1}) == 1);

  CHECK(tree_word_expansion(BracketTree::leaf(4)).at(Word{4}) == 1);
}

TEST_CASE("lie_normalize maps to the anchored left-nested basis") {
  using F = ExactScalar;

  // [2,1] = -[1,2].
  FormalSum<BracketTree, F> in;
  in.add(BracketTree::node(BracketTree::leaf(2), BracketTree::leaf(1)), F(1));
  auto nz = lie_normalize(in, 1);
  REQUIRE(nz.size() == 1);
  CHECK(nz.coeff(Word{1, 2}) == F(-1));

  // [1,2] + [2,1] = 0.
  FormalSum<BracketTree, F> zero_sum;
  zero_sum.add(BracketTree::node(BracketTree::leaf(1), BracketTree::leaf(2)), F(1));
  zero_sum.add(BracketTree::node(BracketTree::leaf(2), BracketTree::leaf(1)), F(1));
  CHECK(lie_normalize(zero_sum, 1).is_zero());
}

TEST_CASE("lie_normalize preserves the word expansion") {
  using F = ExactScalar;
  // Oracle: sum_P c_P l[P] must expand to the same associative-algebra element
  // as the input tree, for every planar tree on <= 5 distinct letters.
  std::vector<BracketTree> inputs = {
      BracketTree::node(BracketTree::leaf(2), BracketTree::leaf(1)),
      BracketTree::node(BracketTree::leaf(2),
                        BracketTree::node(BracketTree::leaf(1), BracketTree::leaf(3))),
      BracketTree::node(BracketTree::node(BracketTree::leaf(3), BracketTree::leaf(1)),
                        BracketTree::node(BracketTree::leaf(4), BracketTree::leaf(2))),
      BracketTree::node(
          BracketTree::node(BracketTree::leaf(5), BracketTree::leaf(2)),
          BracketTree::node(BracketTree::leaf(1),
                            BracketTree::node(BracketTree::leaf(4), BracketTree::leaf(3)))),
  };
  for (const auto& t : inputs) {
    FormalSum<BracketTree, F> in;
    in.add(t, F(1));
    auto nz = lie_normalize(in, 1);

    std::map<Word, long long> lhs;
    for (const auto& [w, c] : tree_word_expansion(t)) lhs[w] += c;

    std::map<Word, long long> rhs;
    for (const auto& [P, c] : nz.terms()) {
      REQUIRE(P[0] == 1);  // anchored basis: every word starts with the anchor
      // Coefficients of the normalized form are integers for integer input.
      REQUIRE(c.im == 0);
      REQUIRE(boost::multiprecision::denominator(c.re) == 1);
      long long ci = c.re.convert_to<long long>();
      for (const auto& [w, cw] : tree_word_expansion(left_bracketing(P))) {
        rhs[w] += ci * cw;
        if (rhs[w] == 0) rhs.erase(w);
      }
    }
    for (auto it = lhs.begin(); it != lhs.end();)
      it = (it->second == 0) ? lhs.erase(it) : std::next(it);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lie_normalize input validation") {
  using F = ExactScalar;
  FormalSum<BracketTree, F> in;
  in.add(BracketTree::node(BracketTree::leaf(2), BracketTree::leaf(3)), F(1));
  CHECK_THROWS_AS(lie_normalize(in, 1), std::invalid_argument);  // anchor absent
  FormalSum<BracketTree, F> rep;
  rep.add(BracketTree::node(BracketTree::leaf(1), BracketTree::leaf(1)), F(1));
  CHECK_THROWS_AS(lie_normalize(rep, 1), std::invalid_argument);  // repeated letter
}

TEST_CASE("word inner product") {
  using F = ExactScalar;
  FormalSum<Word, F> a, b;
  a.add(Word{1, 2}, F(2));
  a.add(Word{2, 1}, F(3));
  b.add(Word{1, 2}, F(5));
  b.add(Word{3, 1}, F(7));
  CHECK(word_inner(a, b) == F(10));
}

TEST_CASE("formal sums prune zero coefficients") {
  using F = ExactScalar;
  FormalSum<Word, F> s;
  s.add(Word{1}, F(1));
  s.add(Word{1}, F(-1));
  CHECK(s.is_zero());
  CHECK(s.size() == 0);
  s.add(Word{2}, F(4));
  CHECK(s.scaled(F(1) / F(2)).coeff(Word{2}) == F(2));
}

TEST_CASE("generalized Jacobi constraints vanish in the free Lie algebra") {
  // Order 2 over {1,2}: the single constraint is antisymmetry [1,2]+[2,1]=0.
  auto c2 = gen_jacobi_constraints(2, {1, 2});
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].Q == Word{1});
  CHECK(c2[0].R == Word{2});

  // Every constraint's lhs+rhs must word-expand to zero: the identities hold
  // identically in the free Lie algebra, before any evaluation.
  for (int k = 2; k <= 4; ++k) {
    auto cs = gen_jacobi_constraints(k, {1, 2, 3, 4});
    CHECK(!cs.empty());
    for (const auto& jc : cs) {
      auto lhs = expand_trees<ExactScalar>(jc.lhs);
      for (const auto& [t, c] : jc.rhs)
        for (const auto& [w, cw] : tree_word_expansion(t)) {
          lhs[w] += c * cw;
          if (lhs[w] == 0) lhs.erase(w);
        }
      CHECK(lhs.empty());
    }
  }

  // Order 3 over three letters: 6 constraints (3 splits x internal orderings).
  CHECK(gen_jacobi_constraints(3, {1, 2, 3}).size() == 6);
  CHECK_THROWS_AS(gen_jacobi_constraints(1, {1, 2}), std::invalid_argument);
}
