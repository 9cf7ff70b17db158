#ifndef SCLCERT_WORDS_HPP
#define SCLCERT_WORDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace sclcert {

// Generators are small non-negative ids into some alphabet. The two-letter
// alphabet of alternating words always uses GEN_A = 0 and GEN_B = 1.
inline constexpr int GEN_A = 0;
inline constexpr int GEN_B = 1;

struct Letter {
  int gen = 0;
  int sign = +1;  // +1 or -1

  Letter() = default;
  Letter(int g, int s) : gen(g), sign(s) {}
  Letter inverse() const { return Letter(gen, -sign); }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word. Construction reduces; all operations keep the
// invariant.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce_inplace(); }
  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](size_t i) const { return letters_[i]; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word subword(size_t begin, size_t end) const;  // [begin, end)
  Word pow(int n) const;

  int max_gen() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void reduce_inplace();
  std::vector<Letter> letters_;
};

Word reduce(const std::vector<Letter>& letters);
Word concat(const Word& w1, const Word& w2);

bool is_reduced(const std::vector<Letter>& letters);

// True iff w lies in the set of alternating words over {a, b}: generators
// alternate between GEN_A and GEN_B (signs free). The empty word counts.
// Throws AlphabetMismatch if w uses generators outside {a, b}.
bool is_alternating(const Word& w);

// Alternating and stays alternating under cyclic rotation; equivalently the
// square of w is reduced and alternating. Forces even length (or empty).
bool is_cyclically_alternating(const Word& w);

// Compact serialization: a..z positive letters, A..Z inverses, "1" = empty.
// Generators beyond 26 are not supported by the text form.
std::string to_string(const Word& w);
std::string to_string(const Letter& l);
Word parse_word(const std::string& text);           // over letters a..z
Word parse_word(const std::string& text, int alphabet_size);  // range-checked

// The geodesic-triangle decomposition behind the letter-quasimorphism
// condition. For alternating p, q, r it finds u, v, w (and in the
// non-degenerate case single letters x1, x2, x3 of one generator whose
// product reduces to a single letter of the same generator) with
//   p = u^-1 v,      q = v^-1 w,      r = w^-1 u        (degenerate), or
//   p = u^-1 x1 v,   q = v^-1 x2 w,   r = w^-1 x3 u     (non-degenerate),
// all concatenations reduced as written. Ties are broken by maximal |v|,
// then maximal |u|.
struct TriangleDecomposition {
  bool degenerate = true;
  Word u, v, w;
  Letter x1, x2, x3;  // meaningful iff !degenerate
};

std::optional<TriangleDecomposition> try_triangle_decompose(const Word& p, const Word& q,
                                                            const Word& r);
// Throws NoDecomposition when the triple violates the pattern.
TriangleDecomposition triangle_decompose(const Word& p, const Word& q, const Word& r);

// Recompose a decomposition and check it reproduces (p, q, r) exactly.
bool decomposition_matches(const TriangleDecomposition& d, const Word& p, const Word& q,
                           const Word& r);

}  // namespace sclcert

#endif
