#include "liftcheck/free_group.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "liftcheck/error.hpp"

namespace liftcheck {

FreeWord reduce(std::size_t rank, const std::vector<Letter>& letters) { return FreeWord(rank, letters); }

FreeWord::FreeWord(std::size_t rank, std::vector<Letter> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > rank)
      throw InvariantError("FreeWord: letter " + std::to_string(x) + " outside 1.." + std::to_string(rank));
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

FreeWord FreeWord::generator(std::size_t rank, std::size_t index) {
  return FreeWord(rank, {static_cast<Letter>(index)});
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.rank_ = rank_;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (auto& x : out.letters_) x = -x;
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw InvariantError("FreeWord product: rank mismatch");
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(a.rank_, std::move(joined));
}

std::string FreeWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

FreeWord parse_word(std::size_t rank, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    long x = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') throw ParseError("word: malformed letter '" + tok + "'");
    letters.push_back(static_cast<Letter>(x));
  }
  return FreeWord(rank, std::move(letters));
}

std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << '[' << w.to_string() << ']'; }

namespace {

FreeWord substitute(const std::vector<FreeWord>& images, std::size_t rank, const FreeWord& w) {
  if (w.rank() != images.size()) throw InvariantError("apply: rank mismatch between automorphism and word");
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const FreeWord& img = images[static_cast<std::size_t>(std::abs(x)) - 1];
    if (x > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(-*it);
    }
  }
  return FreeWord(rank, std::move(out));
}

}  // namespace

FreeAutomorphism::FreeAutomorphism(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const std::size_t n = images_.size();
  if (inverse_images_.size() != n)
    throw InvariantError("FreeAutomorphism: images and inverse images must have the same length");
  for (std::size_t i = 0; i < n; ++i) {
    if (images_[i].rank() != n || inverse_images_[i].rank() != n)
      throw InvariantError("FreeAutomorphism: every image must be a word of rank " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    FreeWord x = FreeWord::generator(n, i + 1);
    if (substitute(images_, n, inverse_images_[i]) != x || substitute(inverse_images_, n, images_[i]) != x)
      throw InvariantError("FreeAutomorphism: inverse images do not invert the images (generator " +
                           std::to_string(i + 1) + ")");
  }
}

FreeAutomorphism FreeAutomorphism::identity(std::size_t rank) {
  std::vector<FreeWord> gens;
  for (std::size_t i = 1; i <= rank; ++i) gens.push_back(FreeWord::generator(rank, i));
  return FreeAutomorphism(Unchecked{}, gens, gens);
}

FreeAutomorphism FreeAutomorphism::conjugation(const FreeWord& w) {
  const std::size_t n = w.rank();
  std::vector<FreeWord> img, inv;
  for (std::size_t i = 1; i <= n; ++i) {
    FreeWord x = FreeWord::generator(n, i);
    img.push_back(w * x * w.inverse());
    inv.push_back(w.inverse() * x * w);
  }
  return FreeAutomorphism(Unchecked{}, std::move(img), std::move(inv));
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const { return substitute(images_, rank(), w); }

FreeAutomorphism FreeAutomorphism::pow(long k) const {
  FreeAutomorphism base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  FreeAutomorphism result = identity(rank());
  while (e > 0) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw InvariantError("compose: rank mismatch");
  const std::size_t n = a.rank();
  std::vector<FreeWord> img, inv;
  img.reserve(n);
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    img.push_back(a.apply(b.images_[i]));
    inv.push_back(substitute(b.inverse_images_, n, a.inverse_images_[i]));
  }
  return FreeAutomorphism(FreeAutomorphism::Unchecked{}, std::move(img), std::move(inv));
}

bool is_inner(const FreeAutomorphism& psi, const FreeWord& w) {
  if (w.rank() != psi.rank()) throw InvariantError("is_inner: rank mismatch");
  for (std::size_t i = 1; i <= psi.rank(); ++i) {
    FreeWord x = FreeWord::generator(psi.rank(), i);
    if (psi.images()[i - 1] != w * x * w.inverse()) return false;
  }
  return true;
}

IntMatrix abelianize(const FreeAutomorphism& psi) {
  const std::size_t n = psi.rank();
  std::vector<Integer> e(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (Letter x : psi.images()[j].letters()) {
      std::size_t i = static_cast<std::size_t>(std::abs(x)) - 1;
      e[i * n + j] += x > 0 ? 1 : -1;
    }
  }
  return IntMatrix(n, n, std::move(e));
}

FreeAutomorphism conjugation_witness(unsigned m) {
  if (m < 2) throw InvariantError("conjugation_witness: requires m >= 2");
  const std::size_t n = m + 1;
  const Letter z = static_cast<Letter>(m + 1);
  auto b = [](unsigned i) { return static_cast<Letter>(i + 1); };
  std::vector<FreeWord> img, inv;
  for (unsigned i = 0; i < m; ++i) {
    if (i + 1 < m)
      img.emplace_back(n, std::vector<Letter>{b(i + 1)});
    else
      img.emplace_back(n, std::vector<Letter>{z, b(0), -z});
  }
  img.emplace_back(n, std::vector<Letter>{z});
  for (unsigned i = 0; i < m; ++i) {
    if (i == 0)
      inv.emplace_back(n, std::vector<Letter>{-z, b(m - 1), z});
    else
      inv.emplace_back(n, std::vector<Letter>{b(i - 1)});
  }
  inv.emplace_back(n, std::vector<Letter>{z});
  return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism read_automorphism(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  if (lines.empty() || lines.size() % 2 != 0)
    throw ParseError("automorphism file: expected n image lines followed by n inverse-image lines");
  const std::size_t n = lines.size() / 2;
  std::vector<FreeWord> img, inv;
  for (std::size_t i = 0; i < n; ++i) img.push_back(parse_word(n, lines[i]));
  for (std::size_t i = 0; i < n; ++i) inv.push_back(parse_word(n, lines[n + i]));
  return FreeAutomorphism(std::move(img), std::move(inv));
}

std::string write_automorphism(const FreeAutomorphism& psi) {
  std::string out;
  for (const auto& w : psi.images()) out += w.to_string() + "\n";
  for (const auto& w : psi.inverse_images()) out += w.to_string() + "\n";
  return out;
}

}  // namespace liftcheck
