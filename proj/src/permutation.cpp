#include "qfock/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qfock {

namespace {

constexpr int kMaxEnumerationDegree = 8;

void validate_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) {
    throw ValidationError("permutation degree must be at least 1");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images) {
    if (v < 1 || v > n) {
      throw ValidationError("permutation image " + std::to_string(v) +
                            " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw ValidationError("permutation repeats image " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  validate_images(images_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int j) {
  if (j < 1 || j > n - 1) {
    throw ValidationError("adjacent transposition index " + std::to_string(j) +
                          " out of range 1.." + std::to_string(n - 1));
  }
  Permutation pi = identity(n);
  std::swap(pi.images_[static_cast<std::size_t>(j - 1)],
            pi.images_[static_cast<std::size_t>(j)]);
  return pi;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > kMaxEnumerationDegree) {
    throw SizeLimitError("all_permutations requires 1 <= n <= " +
                         std::to_string(kMaxEnumerationDegree) + ", got " +
                         std::to_string(n));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<std::pair<int, int>> inversions(const Permutation& pi) {
  std::vector<std::pair<int, int>> out;
  const int n = pi.degree();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi(i) > pi(j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int length(const Permutation& pi) {
  return static_cast<int>(inversions(pi).size());
}

std::vector<int> reduced_word(const Permutation& pi) {
  // Right-multiplying by s_j swaps the images at positions j, j+1 and, when
  // j is a descent, shortens the permutation by exactly one inversion.
  std::vector<int> images = pi.images();
  const int n = pi.degree();
  std::vector<int> peeled;
  for (;;) {
    int j = 0;
    for (int i = 1; i < n; ++i) {
      if (images[static_cast<std::size_t>(i - 1)] > images[static_cast<std::size_t>(i)]) {
        j = i;
        break;
      }
    }
    if (j == 0) break;
    std::swap(images[static_cast<std::size_t>(j - 1)], images[static_cast<std::size_t>(j)]);
    peeled.push_back(j);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Permutation compose(const Permutation& pi, const Permutation& rho) {
  if (pi.degree() != rho.degree()) {
    throw DimensionError("compose: degree mismatch " + std::to_string(pi.degree()) +
                         " vs " + std::to_string(rho.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(pi.degree()));
  for (int i = 1; i <= pi.degree(); ++i) {
    images[static_cast<std::size_t>(i - 1)] = pi(rho(i));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> images(static_cast<std::size_t>(pi.degree()));
  for (int i = 1; i <= pi.degree(); ++i) {
    images[static_cast<std::size_t>(pi(i) - 1)] = i;
  }
  return Permutation(std::move(images));
}

std::vector<int> permute_tuple(const Permutation& pi, std::span<const int> t) {
  if (static_cast<int>(t.size()) != pi.degree()) {
    throw DimensionError("permute_tuple: tuple length does not match degree");
  }
  std::vector<int> out(t.size());
  for (int i = 1; i <= pi.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = t[static_cast<std::size_t>(pi(i) - 1)];
  }
  return out;
}

}  // namespace qfock
