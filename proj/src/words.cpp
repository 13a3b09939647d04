#include "fixsub/words.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "fixsub/errors.hpp"

namespace fixsub {

namespace {

void check_letter(std::size_t rank, Letter x) {
  if (x.code() == 0 || x.generator() > rank)
    throw std::out_of_range("letter " + std::to_string(x.code()) +
                            " outside rank " + std::to_string(rank));
}

void check_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("word rank mismatch: " +
                                std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
}

}  // namespace

Word reduce_unchecked(std::size_t rank, std::vector<Letter>&& letters) {
  // In-place stack reduction.
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1] == letters[i].inverse())
      --top;
    else
      letters[top++] = letters[i];
  }
  letters.resize(top);
  Word w(rank);
  w.letters_ = std::move(letters);
  return w;
}

Word reduce(std::size_t rank, std::span<const Letter> letters) {
  for (Letter x : letters) check_letter(rank, x);
  return reduce_unchecked(rank, std::vector<Letter>(letters.begin(), letters.end()));
}

Word Word::generator(std::size_t rank, std::uint32_t index, int sign) {
  Letter x(index, sign);
  check_letter(rank, x);
  Word w(rank);
  w.letters_.push_back(x);
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.letters_.size(); ++i)
    if (auto c = a.letters_[i].order_key() <=> b.letters_[i].order_key(); c != 0)
      return c;
  return std::strong_ordering::equal;
}

Word multiply(const Word& u, const Word& v) {
  check_same_rank(u, v);
  auto lu = u.letters();
  auto lv = v.letters();
  std::size_t cancel = 0;
  while (cancel < lu.size() && cancel < lv.size() &&
         lu[lu.size() - 1 - cancel] == lv[cancel].inverse())
    ++cancel;
  std::vector<Letter> out;
  out.reserve(lu.size() + lv.size() - 2 * cancel);
  out.insert(out.end(), lu.begin(), lu.end() - cancel);
  out.insert(out.end(), lv.begin() + cancel, lv.end());
  // Both halves are reduced and the junction no longer cancels.
  return reduce_unchecked(u.rank(), std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(it->inverse());
  return reduce_unchecked(u.rank(), std::move(out));
}

Word power(const Word& u, long n) {
  Word base = n < 0 ? invert(u) : u;
  Word acc(u.rank());
  for (long i = 0; i < std::labs(n); ++i) acc = multiply(acc, base);
  return acc;
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Integer exponent_sum(const Word& u, std::uint32_t generator) {
  if (generator == 0 || generator > u.rank())
    throw std::out_of_range("generator index " + std::to_string(generator) +
                            " outside rank " + std::to_string(u.rank()));
  long total = 0;
  for (Letter x : u.letters())
    if (x.generator() == generator) total += x.sign();
  return Integer(total);
}

IntVector abelianize(const Word& u) {
  std::vector<long> counts(u.rank(), 0);
  for (Letter x : u.letters()) counts[x.generator() - 1] += x.sign();
  IntVector out(u.rank());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = counts[i];
  return out;
}

Word apply_map(std::span<const Word> images, const Word& u) {
  if (images.size() != u.rank())
    throw std::invalid_argument("image list has " +
                                std::to_string(images.size()) +
                                " entries, word rank is " +
                                std::to_string(u.rank()));
  std::size_t target = images.empty() ? 0 : images[0].rank();
  for (const auto& w : images)
    if (w.rank() != target)
      throw std::invalid_argument("images do not share a target rank");
  std::vector<Letter> out;
  for (Letter x : u.letters()) {
    auto img = images[x.generator() - 1].letters();
    if (x.sign() > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return reduce_unchecked(target, std::move(out));
}

std::vector<Word> compose_maps(std::span<const Word> outer,
                               std::span<const Word> inner) {
  std::vector<Word> out;
  out.reserve(inner.size());
  for (const auto& w : inner) out.push_back(apply_map(outer, w));
  return out;
}

std::vector<Word> identity_map(std::size_t rank) {
  std::vector<Word> out;
  for (std::uint32_t i = 1; i <= rank; ++i)
    out.push_back(Word::generator(rank, i));
  return out;
}

std::string to_string(const Word& u, Alphabet alphabet) {
  std::string out;
  for (Letter x : u.letters()) {
    if (!out.empty()) out += ' ';
    std::uint32_t index = x.generator();
    char name = 'a';
    if (alphabet == Alphabet::surface) {
      name = index % 2 ? 'a' : 'b';
      index = (index + 1) / 2;
    }
    if (x.sign() < 0) name = static_cast<char>(std::toupper(name));
    out += name;
    out += std::to_string(index);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t rank, Alphabet alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    bool ok_name = lower == 'a' || (alphabet == Alphabet::surface && lower == 'b');
    if (!ok_name)
      throw ParseError("unexpected character '" + std::string(1, c) +
                       "' in word \"" + std::string(text) + "\"");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1 || (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))))
      throw ParseError("malformed token in word \"" + std::string(text) + "\"");
    unsigned long index = std::stoul(std::string(text.substr(i + 1, j - i - 1)));
    if (index == 0) throw ParseError("generator index 0 in \"" + std::string(text) + "\"");
    if (alphabet == Alphabet::surface) index = 2 * index - (lower == 'a' ? 1 : 0);
    if (index > rank)
      throw ParseError("generator out of range in \"" + std::string(text) + "\"");
    letters.emplace_back(static_cast<std::uint32_t>(index), std::isupper(static_cast<unsigned char>(c)) ? -1 : 1);
    i = j;
  }
  return reduce(rank, letters);
}

}  // namespace fixsub
