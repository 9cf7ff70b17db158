#ifndef SCLCERT_ERROR_HPP
#define SCLCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sclcert {

enum class Errc {
  AlphabetMismatch,
  NoDecomposition,
  DomainNotEnumerable,
  TrivialImage,
  PowerIncompatible,
  InvalidStableImage,
  MalformedGluing,
  MalformedComplex,
  UnknownFace,
  UnknownVertex,
  InvalidSubsurface,
  BadRepresentation,
  PhiUnevaluable,
  NonpositivePower,
  NonterminationGuard,
  UnindexedArc,
  ClaimViolation,
  WitnessNotFound,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

// Core error type: a code plus a locus string naming the offending object.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string locus)
      : std::runtime_error(std::string(errc_name(code)) + ": " + locus),
        code_(code),
        locus_(std::move(locus)) {}

  Errc code() const { return code_; }
  const std::string& locus() const { return locus_; }

 private:
  Errc code_;
  std::string locus_;
};

[[noreturn]] inline void fail(Errc code, const std::string& locus) { throw Error(code, locus); }

inline void check(bool ok, Errc code, const std::string& locus) {
  if (!ok) fail(code, locus);
}

}  // namespace sclcert

#endif
