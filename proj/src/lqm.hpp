#ifndef SCLCERT_LQM_HPP
#define SCLCERT_LQM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "words.hpp"

namespace sclcert {

// Sign-compression on F(a, b): each maximal syllable a^m or b^n collapses to
// a single letter carrying the sign of the exponent.
Word sign_compress(const Word& w);

// A letter-quasimorphism as a value: either the built-in sign-compression
// rule, or a finite table of explicit images. Both may be precomposed with a
// substitution sending the domain alphabet into F(a, b); this is how group
// elements of a triangle base (whose edges are words in a, b) are evaluated,
// and it also provides table-free maps with longer letter images for tests.
class LetterQM {
 public:
  static LetterQM sign();
  // subst[i] = image of domain generator i in F(a, b)
  static LetterQM sign_with_substitution(std::vector<Word> subst);
  static LetterQM table(std::vector<std::pair<Word, Word>> entries, int alphabet_size);
  // Text format: one "<element-word> <image-word>" pair per line; '#' starts
  // a comment. Missing inverses are an error at load time.
  static LetterQM load_table(const std::string& text);

  // Phi(g). Throws PhiUnevaluable for table maps on elements outside the table.
  Word eval(const Word& g) const;

  bool is_table() const { return kind_ == Kind::Table; }
  int domain_alphabet_size() const { return alphabet_size_; }
  // Applies the substitution only (identity for plain maps).
  Word represent(const Word& g) const;

  // Exchanges the roles of a and b in every image; used when Phi(g) starts
  // with a b-type letter.
  LetterQM swapped() const;

 private:
  enum class Kind { Sign, Table };
  Kind kind_ = Kind::Sign;
  int alphabet_size_ = 2;
  bool swap_roles_ = false;
  std::vector<Word> subst_;              // empty = identity on {a, b}
  std::map<Word, Word> table_;
};

struct Violation {
  enum class Kind { NotAlternating, Inverse, Triangle, MissingImage } kind;
  Word g, h;  // h meaningful for Triangle only
  std::string detail;
};

struct VerificationReport {
  int radius = 0;
  long long elements_checked = 0;
  long long pairs_checked = 0;
  long long degenerate = 0;
  long long nondegenerate = 0;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

// Checks Definition-style axioms over the ball of the given radius in the
// domain: images alternate, Phi(g^-1) = Phi(g)^-1, and every pair (g, h)
// admits a triangle decomposition of (Phi(g), Phi(h), Phi(gh)^-1). Also
// asserts, for every degenerate decomposition met, that one of u, v, w is
// empty. All violations are collected, none aborts the sweep.
VerificationReport verify_axioms(const LetterQM& phi, int radius);

// Enumerates all reduced words of length <= radius over an alphabet.
std::vector<Word> enumerate_ball(int alphabet_size, int radius);

// Phi(g) certified compatible with taking powers, normalized so the image
// starts with an a-type letter (recording the swap).
struct StableImage {
  Word g;
  Word phi_g;                  // raw image, before any role swap
  std::vector<Letter> letters; // a1 b1 ... a_l b_l, after normalization
  int ell = 0;
  bool swapped = false;
};

// Verifies Phi(g^n) = Phi(g)^n for all |n| <= n_max and that the image is
// nonempty, of even length and cyclically alternating; normalizes to the
// a-first form. Throws TrivialImage / PowerIncompatible / InvalidStableImage.
StableImage stabilize(const LetterQM& phi, const Word& g, int n_max = 4);

}  // namespace sclcert

#endif
