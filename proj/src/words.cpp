#include "words.hpp"

#include <algorithm>

namespace sclcert {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::AlphabetMismatch: return "ALPHABET_MISMATCH";
    case Errc::NoDecomposition: return "NO_DECOMPOSITION";
    case Errc::DomainNotEnumerable: return "DOMAIN_NOT_ENUMERABLE";
    case Errc::TrivialImage: return "TRIVIAL_IMAGE";
    case Errc::PowerIncompatible: return "POWER_INCOMPATIBLE";
    case Errc::InvalidStableImage: return "INVALID_STABLE_IMAGE";
    case Errc::MalformedGluing: return "MALFORMED_GLUING";
    case Errc::MalformedComplex: return "MALFORMED_COMPLEX";
    case Errc::UnknownFace: return "UNKNOWN_FACE";
    case Errc::UnknownVertex: return "UNKNOWN_VERTEX";
    case Errc::InvalidSubsurface: return "INVALID_SUBSURFACE";
    case Errc::BadRepresentation: return "BAD_REPRESENTATION";
    case Errc::PhiUnevaluable: return "PHI_UNEVALUABLE";
    case Errc::NonpositivePower: return "NONPOSITIVE_POWER";
    case Errc::NonterminationGuard: return "NONTERMINATION_GUARD";
    case Errc::UnindexedArc: return "UNINDEXED_ARC";
    case Errc::ClaimViolation: return "CLAIM_VIOLATION";
    case Errc::WitnessNotFound: return "WITNESS_NOT_FOUND";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

void Word::reduce_inplace() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l.sign = -l.sign;
  Word w;
  w.letters_ = std::move(out);  // reversal of a reduced word is reduced
  return w;
}

Word Word::subword(size_t begin, size_t end) const {
  Word w;
  w.letters_.assign(letters_.begin() + begin, letters_.begin() + end);
  return w;  // subword of a reduced word is reduced
}

Word Word::pow(int n) const {
  Word base = n < 0 ? inverse() : *this;
  int k = n < 0 ? -n : n;
  Word acc;
  for (int i = 0; i < k; ++i) acc = concat(acc, base);
  return acc;
}

int Word::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word reduce(const std::vector<Letter>& letters) { return Word(letters); }

Word concat(const Word& w1, const Word& w2) {
  std::vector<Letter> all = w1.letters();
  all.insert(all.end(), w2.letters().begin(), w2.letters().end());
  return Word(std::move(all));
}

bool is_reduced(const std::vector<Letter>& letters) {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i].gen == letters[i + 1].gen && letters[i].sign == -letters[i + 1].sign)
      return false;
  return true;
}

bool is_alternating(const Word& w) {
  for (const Letter& l : w.letters())
    check(l.gen == GEN_A || l.gen == GEN_B, Errc::AlphabetMismatch,
          "alternating words live over {a, b}; saw generator #" + std::to_string(l.gen));
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen == w[i + 1].gen) return false;
  return true;
}

bool is_cyclically_alternating(const Word& w) {
  if (!is_alternating(w)) return false;
  if (w.empty()) return true;
  return w.size() % 2 == 0 && w[0].gen != w[w.size() - 1].gen;
}

std::string to_string(const Letter& l) {
  char c = char('a' + l.gen);
  if (l.sign < 0) c = char(c - 'a' + 'A');
  return std::string(1, c);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters()) s += to_string(l);
  return s;
}

Word parse_word(const std::string& text) { return parse_word(text, 26); }

Word parse_word(const std::string& text, int alphabet_size) {
  if (text == "1") return Word();
  std::vector<Letter> ls;
  for (char c : text) {
    int gen, sign;
    if (c >= 'a' && c <= 'z') { gen = c - 'a'; sign = +1; }
    else if (c >= 'A' && c <= 'Z') { gen = c - 'A'; sign = -1; }
    else fail(Errc::ParseError, "bad letter '" + std::string(1, c) + "' in word \"" + text + "\"");
    check(gen < alphabet_size, Errc::AlphabetMismatch,
          "letter '" + std::string(1, c) + "' outside the declared alphabet");
    ls.emplace_back(gen, sign);
  }
  return Word(std::move(ls));
}

namespace {

// Does q start with v^-1, where v is the length-s suffix of p?
bool cancels(const Word& p, const Word& q, size_t s) {
  if (s > p.size() || s > q.size()) return false;
  for (size_t i = 0; i < s; ++i)
    if (q[i] != p[p.size() - 1 - i].inverse()) return false;
  return true;
}

}  // namespace

std::optional<TriangleDecomposition> try_triangle_decompose(const Word& p, const Word& q,
                                                            const Word& r) {
  check(is_alternating(p) && is_alternating(q) && is_alternating(r), Errc::AlphabetMismatch,
        "triangle_decompose expects alternating inputs");

  // Degenerate: p = u^-1 v, q = v^-1 w, r = w^-1 u with all junctions reduced.
  // For fixed |v| everything is forced, so maximal |v| is the only tie-break
  // that can fire here.
  size_t smax = std::min(p.size(), q.size());
  for (size_t s = smax + 1; s-- > 0;) {
    if (!cancels(p, q, s)) continue;
    Word u = p.subword(0, p.size() - s).inverse();
    Word v = p.subword(p.size() - s, p.size());
    Word w = q.subword(s, q.size());
    Word r_expect = concat(w.inverse(), u);
    if (r_expect.size() != w.size() + u.size()) continue;  // junction must not cancel
    if (r != r_expect) continue;
    TriangleDecomposition d;
    d.degenerate = true;
    d.u = u; d.v = v; d.w = w;
    return d;
  }

  // Non-degenerate: p = u^-1 x1 v, q = v^-1 x2 w, r = w^-1 x3 u; the x_i and
  // the reduced product x1 x2 x3 share one generator. Maximal |v|, then
  // maximal |u|.
  if (p.empty() || q.empty() || r.empty()) return std::nullopt;
  for (size_t s = std::min(p.size() - 1, q.size() - 1) + 1; s-- > 0;) {
    if (!cancels(p, q, s)) continue;
    // |v| = s: x1 = p[|p|-1-s], x2 = q[s]
    Letter x1 = p[p.size() - 1 - s];
    Letter x2 = q[s];
    if (x1.gen != x2.gen) continue;
    Word u = p.subword(0, p.size() - 1 - s).inverse();
    Word w = q.subword(s + 1, q.size());
    if (r.size() != w.size() + 1 + u.size()) continue;
    // r must spell w^-1, then x3, then u
    bool ok = true;
    for (size_t i = 0; i < w.size() && ok; ++i)
      if (r[i] != w[w.size() - 1 - i].inverse()) ok = false;
    for (size_t i = 0; i < u.size() && ok; ++i)
      if (r[w.size() + 1 + i] != u[i]) ok = false;
    if (!ok) continue;
    Letter x3 = r[w.size()];
    if (x3.gen != x1.gen) continue;
    if (std::abs(x1.sign + x2.sign + x3.sign) != 1) continue;  // x1x2x3 one letter
    TriangleDecomposition d;
    d.degenerate = false;
    d.u = u;
    d.v = p.subword(p.size() - s, p.size());
    d.w = w;
    d.x1 = x1; d.x2 = x2; d.x3 = x3;
    return d;
  }
  return std::nullopt;
}

TriangleDecomposition triangle_decompose(const Word& p, const Word& q, const Word& r) {
  auto d = try_triangle_decompose(p, q, r);
  if (!d)
    fail(Errc::NoDecomposition, "(" + to_string(p) + ", " + to_string(q) + ", " + to_string(r) +
                                    ") violates the letter-quasimorphism pattern");
  return *d;
}

bool decomposition_matches(const TriangleDecomposition& d, const Word& p, const Word& q,
                           const Word& r) {
  auto join = [](const Word& a, std::optional<Letter> x, const Word& b) {
    std::vector<Letter> ls = a.inverse().letters();
    if (x) ls.push_back(*x);
    ls.insert(ls.end(), b.letters().begin(), b.letters().end());
    if (!is_reduced(ls)) return std::optional<Word>();
    return std::optional<Word>(Word(std::move(ls)));
  };
  std::optional<Letter> x1, x2, x3;
  if (!d.degenerate) { x1 = d.x1; x2 = d.x2; x3 = d.x3; }
  auto pp = join(d.u, x1, d.v);
  auto qq = join(d.v, x2, d.w);
  auto rr = join(d.w, x3, d.u);
  return pp && qq && rr && *pp == p && *qq == q && *rr == r;
}

}  // namespace sclcert
