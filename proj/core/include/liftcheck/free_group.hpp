#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

// Letter i > 0 is the i-th generator, -i its inverse.
using Letter = int;

// Freely reduced word over the free group of a given rank.
class FreeWord {
 public:
  FreeWord() = default;
  // Reduces `letters`; throws InvariantError on an index outside 1..rank.
  FreeWord(std::size_t rank, std::vector<Letter> letters);

  static FreeWord generator(std::size_t rank, std::size_t index);  // 1-based

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  std::string to_string() const;  // "1 -2 3"; "" for the empty word

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Stack-based free reduction.
FreeWord reduce(std::size_t rank, const std::vector<Letter>& letters);
FreeWord parse_word(std::size_t rank, std::string_view text);

// Automorphism of F_n carried with its inverse so invertibility is certified at
// construction.
class FreeAutomorphism {
 public:
  FreeAutomorphism(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);

  static FreeAutomorphism identity(std::size_t rank);
  // x -> w x w^-1 on every generator.
  static FreeAutomorphism conjugation(const FreeWord& w);

  std::size_t rank() const { return images_.size(); }
  const std::vector<FreeWord>& images() const { return images_; }
  const std::vector<FreeWord>& inverse_images() const { return inverse_images_; }

  FreeWord apply(const FreeWord& w) const;
  FreeAutomorphism inverse() const { return FreeAutomorphism(inverse_images_, images_); }
  FreeAutomorphism pow(long k) const;

  friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) { return a.images_ == b.images_; }

 private:
  struct Unchecked {};
  FreeAutomorphism(Unchecked, std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
      : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {}
  friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&);

  std::vector<FreeWord> images_;
  std::vector<FreeWord> inverse_images_;
};

// compose(a, b) applies b first, then a.
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

// True iff psi(x) = w x w^-1 for every generator x.
bool is_inner(const FreeAutomorphism& psi, const FreeWord& w);

// Column j holds the exponent sums of psi(x_j).
IntMatrix abelianize(const FreeAutomorphism& psi);

// Conjugation by a on the kernel of F_2 = <a, b> -> Z_m (a -> 1, b -> 0), in the
// free basis b_0, ..., b_{m-1}, z with b_i = a^i b a^-i and z = a^m:
//   b_i -> b_{i+1} (i < m-1),  b_{m-1} -> z b_0 z^-1,  z -> z.
// Generator index of b_i is i+1, of z is m+1. Requires m >= 2.
FreeAutomorphism conjugation_witness(unsigned m);

// Automorphism files: n image lines followed by n inverse-image lines, each a
// word of space-separated signed letters (an empty line is the empty word).
// The rank is the number of lines / 2.
FreeAutomorphism read_automorphism(std::string_view text);
std::string write_automorphism(const FreeAutomorphism& psi);

std::ostream& operator<<(std::ostream& os, const FreeWord& w);

}  // namespace liftcheck
