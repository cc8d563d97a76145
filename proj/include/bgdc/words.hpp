#pragma once

// Words over positive-integer particle labels and the elementary word
// combinatorics every recursion is built on: shuffles, deconcatenations,
// ordered partitions, transposition, and the word scalar product.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgdc/scalar.hpp"

namespace bgdc {

using Letter = int;  // particle label, >= 1

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : ls_(std::move(ls)) { check(); }
  Word(std::initializer_list<Letter> ls) : ls_(ls) { check(); }

  static Word single(Letter p) { return Word({p}); }

  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }
  Letter operator[](std::size_t i) const { return ls_[i]; }
  const std::vector<Letter>& letters() const { return ls_; }
  auto begin() const { return ls_.begin(); }
  auto end() const { return ls_.end(); }

  Word concat(const Word& o) const {
    std::vector<Letter> v = ls_;
    v.insert(v.end(), o.ls_.begin(), o.ls_.end());
    return Word(std::move(v));
  }
  Word prepend(Letter p) const {
    std::vector<Letter> v;
    v.reserve(ls_.size() + 1);
    v.push_back(p);
    v.insert(v.end(), ls_.begin(), ls_.end());
    return Word(std::move(v));
  }
  Word append(Letter p) const {
    std::vector<Letter> v = ls_;
    v.push_back(p);
    return Word(std::move(v));
  }
  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(ls_.begin() + pos, ls_.begin() + pos + len));
  }

  bool distinct_letters() const {
    std::set<Letter> seen(ls_.begin(), ls_.end());
    return seen.size() == ls_.size();
  }
  bool strictly_increasing() const {
    for (std::size_t i = 1; i < ls_.size(); ++i)
      if (ls_[i - 1] >= ls_[i]) return false;
    return true;
  }
  Word sorted() const {
    std::vector<Letter> v = ls_;
    std::sort(v.begin(), v.end());
    return Word(std::move(v));
  }
  bool contains(Letter p) const {
    return std::find(ls_.begin(), ls_.end(), p) != ls_.end();
  }
  bool is_permutation_of(const Word& o) const {
    return sorted() == o.sorted();
  }

  // Letters <= 9 print as a digit string, otherwise comma-joined.
  std::string str() const {
    bool digits = std::all_of(ls_.begin(), ls_.end(),
                              [](Letter p) { return p >= 1 && p <= 9; });
    std::string out;
    for (std::size_t i = 0; i < ls_.size(); ++i) {
      if (!digits && i) out += ',';
      out += std::to_string(ls_[i]);
    }
    return out;
  }
  static Word parse(const std::string& s) {
    std::vector<Letter> v;
    if (s.find(',') != std::string::npos) {
      std::stringstream ss(s);
      std::string tok;
      while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    } else {
      for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad word literal: " + s);
        v.push_back(c - '0');
      }
    }
    return Word(std::move(v));
  }

  auto operator<=>(const Word&) const = default;

 private:
  void check() const {
    for (Letter p : ls_)
      if (p < 1) throw std::invalid_argument("letters must be >= 1");
  }
  std::vector<Letter> ls_;
};

inline Word transpose(const Word& P) {
  std::vector<Letter> v(P.letters().rbegin(), P.letters().rend());
  return Word(std::move(v));
}

// The word lo (lo+1) ... hi; empty when lo > hi.
inline Word word_range(Letter lo, Letter hi) {
  std::vector<Letter> v;
  for (Letter p = lo; p <= hi; ++p) v.push_back(p);
  return Word(std::move(v));
}

// All |P|! orderings of P's letters, lexicographically ascending.
inline std::vector<Word> permutations_of(const Word& P) {
  std::vector<Letter> v = P.sorted().letters();
  std::vector<Word> out;
  do {
    out.push_back(Word(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// All |P|-1 splits P = QR with Q, R non-empty.
inline std::vector<std::pair<Word, Word>> deconcatenations(const Word& P) {
  std::vector<std::pair<Word, Word>> out;
  if (P.size() < 2) return out;
  for (std::size_t cut = 1; cut < P.size(); ++cut)
    out.emplace_back(P.subword(0, cut), P.subword(cut, P.size() - cut));
  return out;
}

// All 2^|P|-2 ordered pairs (Q,R) of complementary non-empty subwords of an
// ordered word P.  With unordered=true, each set partition appears once, the
// part containing the smallest letter of P listed first.
inline std::vector<std::pair<Word, Word>> ordered_partitions(const Word& P,
                                                             bool unordered = false) {
  if (!P.strictly_increasing())
    throw std::invalid_argument("ordered_partitions requires a strictly increasing word");
  std::vector<std::pair<Word, Word>> out;
  const std::size_t m = P.size();
  if (m < 2) return out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<Letter> q, r;
    for (std::size_t i = 0; i < m; ++i)
      ((mask >> i) & 1u ? q : r).push_back(P[i]);
    if (unordered && !((mask >> 0) & 1u)) continue;  // smallest letter goes in Q
    out.emplace_back(Word(std::move(q)), Word(std::move(r)));
  }
  return out;
}

// Finite formal linear combination of terms with scalar coefficients.
// Zero coefficients are pruned eagerly.
template <class T, class F>
class FormalSum {
 public:
  FormalSum() = default;

  void add(const T& t, const F& c) {
    if (field_traits<F>::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (field_traits<F>::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const FormalSum& o, const F& scale) {
    for (const auto& [t, c] : o.terms_) add(t, c * scale);
  }
  void add(const FormalSum& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
  }
  FormalSum scaled(const F& s) const {
    FormalSum out;
    for (const auto& [t, c] : terms_) out.add(t, c * s);
    return out;
  }

  F coeff(const T& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? field_traits<F>::zero() : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<T, F>& terms() const { return terms_; }

 private:
  std::map<T, F> terms_;
};

// Shuffle product.  Coefficients are integer multiplicities (all 1 when the
// combined letters are distinct); term count is C(|P|+|Q|, |P|) in that case.
inline void shuffle_into(std::map<Word, long long>& out, std::vector<Letter>& prefix,
                         const Word& P, std::size_t i, const Word& Q, std::size_t j) {
  if (i == P.size() && j == Q.size()) {
    ++out[Word(prefix)];
    return;
  }
  if (i < P.size()) {
    prefix.push_back(P[i]);
    shuffle_into(out, prefix, P, i + 1, Q, j);
    prefix.pop_back();
  }
  if (j < Q.size()) {
    prefix.push_back(Q[j]);
    shuffle_into(out, prefix, P, i, Q, j + 1);
    prefix.pop_back();
  }
}

inline std::map<Word, long long> shuffle(const Word& P, const Word& Q) {
  std::map<Word, long long> out;
  std::vector<Letter> prefix;
  prefix.reserve(P.size() + Q.size());
  shuffle_into(out, prefix, P, 0, Q, 0);
  return out;
}

// Scalar product of words, (P,Q) = delta_{P,Q}, extended bilinearly.
template <class F>
F word_inner(const FormalSum<Word, F>& X, const FormalSum<Word, F>& Y) {
  F acc = field_traits<F>::zero();
  const auto& a = X.terms();
  const auto& b = Y.terms();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

}  // namespace bgdc
