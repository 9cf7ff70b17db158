#include "lqm.hpp"

#include <sstream>

namespace sclcert {

Word sign_compress(const Word& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen) continue;  // same syllable
    out.push_back(l);
  }
  // syllables of a reduced word never cancel across, so `out` is reduced
  return Word(std::move(out));
}

namespace {

Word swap_ab(const Word& w) {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) l.gen = l.gen == GEN_A ? GEN_B : GEN_A;
  return Word(std::move(ls));
}

}  // namespace

LetterQM LetterQM::sign() { return LetterQM(); }

LetterQM LetterQM::sign_with_substitution(std::vector<Word> subst) {
  LetterQM m;
  m.alphabet_size_ = (int)subst.size();
  for (const Word& w : subst)
    check(w.max_gen() <= GEN_B, Errc::BadRepresentation,
          "substitution images must lie in F(a, b)");
  m.subst_ = std::move(subst);
  return m;
}

LetterQM LetterQM::table(std::vector<std::pair<Word, Word>> entries, int alphabet_size) {
  LetterQM m;
  m.kind_ = Kind::Table;
  m.alphabet_size_ = alphabet_size;
  for (auto& [g, img] : entries) m.table_[g] = img;
  m.table_[Word()] = Word();  // Phi(1) = 1 is forced by the inverse condition
  for (auto& [g, img] : m.table_)
    check(m.table_.count(g.inverse()) > 0, Errc::ParseError,
          "table misses the inverse of " + to_string(g));
  return m;
}

LetterQM LetterQM::load_table(const std::string& text) {
  std::vector<std::pair<Word, Word>> entries;
  int max_gen = GEN_B;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string gs, is;
    if (!(ls >> gs)) continue;
    check(bool(ls >> is), Errc::ParseError,
          "table line " + std::to_string(lineno) + ": expected \"<element> <image>\"");
    Word g = parse_word(gs);
    Word img = parse_word(is);
    check(img.max_gen() <= GEN_B, Errc::ParseError,
          "table line " + std::to_string(lineno) + ": image must lie in F(a, b)");
    max_gen = std::max(max_gen, g.max_gen());
    entries.emplace_back(g, img);
  }
  return table(std::move(entries), max_gen + 1);
}

Word LetterQM::represent(const Word& g) const {
  if (subst_.empty()) return g;
  Word acc;
  for (const Letter& l : g.letters()) {
    check(l.gen < (int)subst_.size(), Errc::AlphabetMismatch,
          "generator #" + std::to_string(l.gen) + " outside the substitution domain");
    Word im = subst_[l.gen];
    acc = concat(acc, l.sign > 0 ? im : im.inverse());
  }
  return acc;
}

Word LetterQM::eval(const Word& g) const {
  Word img;
  if (kind_ == Kind::Sign) {
    img = sign_compress(represent(g));
  } else {
    auto it = table_.find(g);
    if (it == table_.end())
      fail(Errc::PhiUnevaluable, "table has no image for " + to_string(g));
    img = it->second;
  }
  return swap_roles_ ? swap_ab(img) : img;
}

LetterQM LetterQM::swapped() const {
  LetterQM m = *this;
  m.swap_roles_ = !m.swap_roles_;
  return m;
}

std::vector<Word> enumerate_ball(int alphabet_size, int radius) {
  std::vector<Word> out{Word()};
  size_t level_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      for (int g = 0; g < alphabet_size; ++g) {
        for (int s : {+1, -1}) {
          const Word& w = out[i];
          if (!w.empty() && w[w.size() - 1].gen == g && w[w.size() - 1].sign == -s) continue;
          std::vector<Letter> ls = w.letters();
          ls.emplace_back(g, s);
          Word next;
          next = Word(std::move(ls));
          out.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

VerificationReport verify_axioms(const LetterQM& phi, int radius) {
  check(radius >= 0, Errc::DomainNotEnumerable, "radius must be non-negative");
  VerificationReport rep;
  rep.radius = radius;
  std::vector<Word> ball = enumerate_ball(phi.domain_alphabet_size(), radius);
  rep.elements_checked = (long long)ball.size();

  // cache images; a missing table image is itself a violation
  std::vector<Word> images(ball.size());
  std::vector<char> have(ball.size(), 0);
  auto image_of = [&](const Word& g, Word& out) {
    try {
      out = phi.eval(g);
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::PhiUnevaluable) return false;
      throw;
    }
  };

  for (size_t i = 0; i < ball.size(); ++i) {
    if (!image_of(ball[i], images[i])) {
      rep.violations.push_back({Violation::Kind::MissingImage, ball[i], Word(), "no image"});
      continue;
    }
    have[i] = 1;
    if (!is_alternating(images[i])) {
      rep.violations.push_back({Violation::Kind::NotAlternating, ball[i], Word(),
                                "Phi(g) = " + to_string(images[i]) + " is not alternating"});
      have[i] = 0;
      continue;
    }
    Word inv_img;
    if (image_of(ball[i].inverse(), inv_img)) {
      if (inv_img != images[i].inverse())
        rep.violations.push_back({Violation::Kind::Inverse, ball[i], Word(),
                                  "Phi(g^-1) = " + to_string(inv_img) + " but Phi(g)^-1 = " +
                                      to_string(images[i].inverse())});
    }
  }

  for (size_t i = 0; i < ball.size(); ++i) {
    if (!have[i]) continue;
    for (size_t j = 0; j < ball.size(); ++j) {
      if (!have[j]) continue;
      Word gh = concat(ball[i], ball[j]);
      Word img_gh;
      if (!image_of(gh, img_gh)) {
        rep.violations.push_back({Violation::Kind::MissingImage, ball[i], ball[j],
                                  "no image for gh = " + to_string(gh)});
        continue;
      }
      if (!is_alternating(img_gh)) {
        rep.violations.push_back({Violation::Kind::NotAlternating, gh, Word(),
                                  "Phi(gh) = " + to_string(img_gh) + " is not alternating"});
        continue;
      }
      ++rep.pairs_checked;
      auto d = try_triangle_decompose(images[i], images[j], img_gh.inverse());
      if (!d) {
        rep.violations.push_back({Violation::Kind::Triangle, ball[i], ball[j],
                                  "no decomposition of (" + to_string(images[i]) + ", " +
                                      to_string(images[j]) + ", " +
                                      to_string(img_gh.inverse()) + ")"});
        continue;
      }
      if (d->degenerate) {
        ++rep.degenerate;
        if (!d->u.empty() && !d->v.empty() && !d->w.empty())
          rep.violations.push_back({Violation::Kind::Triangle, ball[i], ball[j],
                                    "degenerate decomposition with u, v, w all nonempty"});
      } else {
        ++rep.nondegenerate;
      }
    }
  }
  return rep;
}

StableImage stabilize(const LetterQM& phi, const Word& g, int n_max) {
  check(!g.empty(), Errc::TrivialImage, "stabilize expects g != 1");
  StableImage s;
  s.g = g;
  s.phi_g = phi.eval(g);
  if (s.phi_g.empty()) fail(Errc::TrivialImage, "Phi(" + to_string(g) + ") = 1");
  if (!is_cyclically_alternating(s.phi_g))
    fail(Errc::InvalidStableImage,
         "Phi(" + to_string(g) + ") = " + to_string(s.phi_g) +
             " is not cyclically alternating of even length");
  for (int n = -n_max; n <= n_max; ++n) {
    if (n == 0) continue;
    Word lhs = phi.eval(g.pow(n));
    Word rhs = s.phi_g.pow(n);
    if (lhs != rhs)
      fail(Errc::PowerIncompatible, "Phi(g^" + std::to_string(n) + ") = " + to_string(lhs) +
                                        " != Phi(g)^" + std::to_string(n) + " = " +
                                        to_string(rhs));
  }
  s.swapped = s.phi_g[0].gen == GEN_B;
  s.letters = s.swapped ? swap_ab(s.phi_g).letters() : s.phi_g.letters();
  s.ell = (int)s.letters.size() / 2;
  return s;
}

}  // namespace sclcert
