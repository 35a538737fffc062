#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qfock/common.hpp"

namespace qfock {

/// Element of the symmetric group S_n in one-line notation.
/// Positions and images are 1-based: images()[i-1] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The adjacent transposition (j, j+1) in S_n, 1 <= j <= n-1.
  static Permutation transposition(int n, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All n! elements of S_n, lexicographic in one-line notation. Capped at n = 8.
std::vector<Permutation> all_permutations(int n);

/// Pairs (i, j) with i < j and pi(i) > pi(j), 1-based, lexicographic.
std::vector<std::pair<int, int>> inversions(const Permutation& pi);

/// Coxeter length |pi|, equal to the number of inversions.
int length(const Permutation& pi);

/// Letters j_1..j_m with pi = s_{j_1} ... s_{j_m}, m = |pi|, where s_j is the
/// adjacent transposition (j, j+1) and composition maps i to s_{j_1}(...s_{j_m}(i)).
/// Bubble-sort schedule: repeatedly clear the leftmost descent, then reverse
/// the collected letters. Deterministic.
std::vector<int> reduced_word(const Permutation& pi);

/// i -> pi(rho(i)). Degrees must agree.
Permutation compose(const Permutation& pi, const Permutation& rho);

Permutation inverse(const Permutation& pi);

/// Tuple reshuffle t -> t_pi, i.e. out[i-1] = t[pi(i)-1].
std::vector<int> permute_tuple(const Permutation& pi, std::span<const int> t);

}  // namespace qfock
