#pragma once

// Planar binary bracket trees and Lie-polynomial manipulation.
//
// Trees are NOT identified up to antisymmetry/Jacobi: the Berends-Giele maps
// are formal sums of planar trees, and Lie reduction is a separate, explicit
// operation (lie_normalize).  Mirroring a tree flips the sign of a genuine
// Lie element but leaves quadratic replacements like c_t * eps_t invariant,
// so the two notions must not be conflated.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgdc/words.hpp"

namespace bgdc {

class BracketTree {
 public:
  static BracketTree leaf(Letter p) {
    if (p < 1) throw std::invalid_argument("letters must be >= 1");
    BracketTree t;
    t.n_ = std::make_shared<const NodeRep>(NodeRep{p, nullptr, nullptr});
    return t;
  }
  static BracketTree node(const BracketTree& l, const BracketTree& r) {
    BracketTree t;
    t.n_ = std::make_shared<const NodeRep>(NodeRep{0, l.n_, r.n_});
    return t;
  }

  bool is_leaf() const { return n_->left == nullptr; }
  Letter letter() const {
    if (!is_leaf()) throw std::logic_error("letter() on an inner node");
    return n_->letter;
  }
  BracketTree left() const { return wrap(n_->left); }
  BracketTree right() const { return wrap(n_->right); }

  // Leaves in left-to-right order.
  Word word() const {
    std::vector<Letter> v;
    collect(n_.get(), v);
    return Word(std::move(v));
  }
  std::size_t size() const { return word().size(); }
  bool contains(Letter p) const { return contains(n_.get(), p); }

  std::string str() const {
    std::string out;
    print(n_.get(), out);
    return out;
  }

  friend bool operator<(const BracketTree& a, const BracketTree& b) {
    return cmp(a.n_.get(), b.n_.get()) < 0;
  }
  friend bool operator==(const BracketTree& a, const BracketTree& b) {
    return cmp(a.n_.get(), b.n_.get()) == 0;
  }

 private:
  struct NodeRep {
    Letter letter;
    std::shared_ptr<const NodeRep> left, right;
  };
  static BracketTree wrap(std::shared_ptr<const NodeRep> n) {
    if (!n) throw std::logic_error("child of a leaf");
    BracketTree t;
    t.n_ = std::move(n);
    return t;
  }
  static void collect(const NodeRep* n, std::vector<Letter>& v) {
    if (!n->left) {
      v.push_back(n->letter);
      return;
    }
    collect(n->left.get(), v);
    collect(n->right.get(), v);
  }
  static bool contains(const NodeRep* n, Letter p) {
    if (!n->left) return n->letter == p;
    return contains(n->left.get(), p) || contains(n->right.get(), p);
  }
  static void print(const NodeRep* n, std::string& out) {
    if (!n->left) {
      out += std::to_string(n->letter);
      return;
    }
    out += '[';
    print(n->left.get(), out);
    out += ',';
    print(n->right.get(), out);
    out += ']';
  }
  static int cmp(const NodeRep* a, const NodeRep* b) {
    const bool la = !a->left, lb = !b->left;
    if (la != lb) return la ? -1 : 1;  // leaves order before inner nodes
    if (la) return a->letter < b->letter ? -1 : (a->letter > b->letter ? 1 : 0);
    if (int c = cmp(a->left.get(), b->left.get())) return c;
    return cmp(a->right.get(), b->right.get());
  }

  std::shared_ptr<const NodeRep> n_;
};

// l[p1 p2 ... pk] = [[...[[p1,p2],p3],...],pk]
inline BracketTree left_bracketing(const Word& P) {
  if (P.empty()) throw std::invalid_argument("left_bracketing of the empty word");
  BracketTree t = BracketTree::leaf(P[0]);
  for (std::size_t i = 1; i < P.size(); ++i)
    t = BracketTree::node(t, BracketTree::leaf(P[i]));
  return t;
}

// Expansion of a tree in the tensor algebra: [A,B] -> AB - BA with
// concatenation products.  Integer coefficients (multilinear trees give +-1).
inline std::map<Word, long long> tree_word_expansion(const BracketTree& t) {
  std::map<Word, long long> out;
  if (t.is_leaf()) {
    out[Word::single(t.letter())] = 1;
    return out;
  }
  auto L = tree_word_expansion(t.left());
  auto R = tree_word_expansion(t.right());
  for (const auto& [wa, ca] : L)
    for (const auto& [wb, cb] : R) {
      out[wa.concat(wb)] += ca * cb;
      out[wb.concat(wa)] -= ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace detail {

// Expansion of [l[u], l[v]] in the left-nested basis; every output word keeps
// u's first letter in front.  Recursive Jacobi rewriting on the last letter
// of v:  [l[u], [l[v'], m]] = [l[u v'-combed] m] - [l[u m], l[v']].
inline void comb_bracket(const Word& u, const Word& v,
                         long long coeff, std::map<Word, long long>& out) {
  if (v.size() == 1) {
    out[u.append(v[0])] += coeff;
    return;
  }
  Word vp = v.subword(0, v.size() - 1);
  Letter m = v[v.size() - 1];
  std::map<Word, long long> inner;
  comb_bracket(u, vp, 1, inner);
  for (const auto& [w, c] : inner) out[w.append(m)] += coeff * c;
  comb_bracket(u.append(m), vp, -coeff, out);
}

// Left-nested expansion of a tree with no anchor requirement; output words
// start with the letter of the leftmost leaf.
inline std::map<Word, long long> comb_tree(const BracketTree& t) {
  std::map<Word, long long> out;
  if (t.is_leaf()) {
    out[Word::single(t.letter())] = 1;
    return out;
  }
  auto L = comb_tree(t.left());
  auto R = comb_tree(t.right());
  for (const auto& [wa, ca] : L)
    for (const auto& [wb, cb] : R) comb_bracket(wa, wb, ca * cb, out);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Anchored variant: steers the anchor into the left argument with
// antisymmetry, so every output word starts with the anchor.
inline void comb_anchored(const BracketTree& t, Letter anchor, long long coeff,
                          std::map<Word, long long>& out) {
  if (t.is_leaf()) {
    if (t.letter() != anchor) throw std::invalid_argument("anchor missing from tree");
    out[Word::single(anchor)] += coeff;
    return;
  }
  if (t.right().contains(anchor)) {
    comb_anchored(BracketTree::node(t.right(), t.left()), anchor, -coeff, out);
    return;
  }
  std::map<Word, long long> L;
  comb_anchored(t.left(), anchor, 1, L);
  auto R = comb_tree(t.right());
  for (const auto& [wa, ca] : L)
    for (const auto& [wb, cb] : R) comb_bracket(wa, wb, coeff * ca * cb, out);
}

}  // namespace detail

// Coefficients of a Lie polynomial in the left-nested basis anchored at
// `anchor`: Gamma = sum_P coeff(anchor P) * l[anchor P].  Each tree must be
// multilinear and contain the anchor exactly once.
template <class F>
FormalSum<Word, F> lie_normalize(const FormalSum<BracketTree, F>& gamma, Letter anchor) {
  FormalSum<Word, F> out;
  for (const auto& [t, c] : gamma.terms()) {
    Word w = t.word();
    if (!w.distinct_letters()) throw std::invalid_argument("repeated letters in tree");
    std::size_t hits = 0;
    for (Letter p : w)
      if (p == anchor) ++hits;
    if (hits != 1) throw std::invalid_argument("anchor must occur exactly once");
    std::map<Word, long long> basis;
    detail::comb_anchored(t, anchor, 1, basis);
    for (const auto& [bw, bc] : basis) out.add(bw, c * field_traits<F>::from_int(bc));
  }
  return out;
}

// One generalized Jacobi constraint of order |Q|+|R|: the values of the two
// sides must cancel for any tree-labelled object built from a genuine Lie
// bracket.  Each side realizes the mixed label Q l[R] as the word expansion
// of l[R] concatenated onto Q, each term taken as a left-nested tree.
struct JacobiConstraint {
  Word Q, R;
  std::vector<std::pair<BracketTree, long long>> lhs;  // Q l[R]
  std::vector<std::pair<BracketTree, long long>> rhs;  // R l[Q]
};

namespace detail {

inline std::vector<std::pair<BracketTree, long long>> mixed_label(const Word& Q,
                                                                  const Word& R) {
  std::vector<std::pair<BracketTree, long long>> out;
  for (const auto& [w, c] : tree_word_expansion(left_bracketing(R)))
    out.emplace_back(left_bracketing(Q.concat(w)), c);
  return out;
}

}  // namespace detail

// All order-k constraints over the alphabet, one per unordered {Q-set, R-set}
// with every internal ordering of Q and R; the set containing the smallest
// letter is listed as Q.
inline std::vector<JacobiConstraint> gen_jacobi_constraints(
    int k, const std::vector<Letter>& alphabet) {
  if (k < 2) throw std::invalid_argument("generalized Jacobi needs order >= 2");
  std::vector<JacobiConstraint> out;
  std::vector<Letter> alpha = alphabet;
  std::sort(alpha.begin(), alpha.end());
  const std::size_t n = alpha.size();
  if (std::size_t(k) > n) return out;

  // Choose the k support letters, then the Q/R split, then orderings.
  std::vector<std::size_t> idx(k);
  std::vector<Letter> support(k);
  auto choose = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == k) {
      for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        if (!(mask & 1u)) continue;  // smallest support letter stays in Q
        std::vector<Letter> qs, rs;
        for (int i = 0; i < k; ++i) ((mask >> i) & 1u ? qs : rs).push_back(support[i]);
        std::sort(qs.begin(), qs.end());
        std::sort(rs.begin(), rs.end());
        do {
          std::vector<Letter> rcopy = rs;
          std::sort(rcopy.begin(), rcopy.end());
          do {
            JacobiConstraint jc;
            jc.Q = Word(qs);
            jc.R = Word(rcopy);
            jc.lhs = detail::mixed_label(jc.Q, jc.R);
            jc.rhs = detail::mixed_label(jc.R, jc.Q);
            out.push_back(std::move(jc));
          } while (std::next_permutation(rcopy.begin(), rcopy.end()));
        } while (std::next_permutation(qs.begin(), qs.end()));
      }
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      support[depth] = alpha[i];
      self(self, i + 1, depth + 1);
    }
  };
  choose(choose, 0, 0);
  return out;
}

}  // namespace bgdc
