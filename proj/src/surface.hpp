#ifndef SCLCERT_SURFACE_HPP
#define SCLCERT_SURFACE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tiles.hpp"
#include "words.hpp"

namespace sclcert {

// One-vertex base 2-complex: every edge is a loop, every 2-cell a triangle.
// Each edge carries its image in F(a, b) under the chosen identification of
// pi_1 with a subgroup of F(a, b) (the identity for the wedge of two
// circles); triangle boundary words must die under that map.
struct BaseComplex {
  std::vector<std::string> edge_names;  // single lowercase letters
  std::vector<Word> edge_images;        // in F(a, b)
  struct Triangle {
    std::string name;
    std::array<Letter, 3> boundary;  // gen indexes edge_names
  };
  std::vector<Triangle> triangles;

  int edge_index(const std::string& name) const;
  int triangle_index(const std::string& name) const;
  Word represent(const Word& edge_word) const;  // apply edge images
  static BaseComplex wedge_ab();
};

enum class PieceKind : uint8_t { VertexDisc, Handle, CellDisc };
enum class DiscPort : uint8_t { Side, Free, Seam };

// Handle ports in cyclic order; end0 reads edge^sign, end1 reads edge^-sign.
inline constexpr int H_LONG0 = 0, H_END0 = 1, H_LONG1 = 2, H_END1 = 3;

struct Piece {
  PieceKind kind;
  std::string name;
  std::vector<DiscPort> disc_ports;  // vertex discs only
  int edge = -1;                     // handles
  int edge_sign = +1;
  int triangle = -1;                 // cell discs
  int num_ports() const;
};

struct PortRef {
  int piece = -1;
  int port = -1;
  bool valid() const { return piece >= 0; }
  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

// An admissible surface in transverse position: vertex discs, 1-handles over
// base edges, triangular cellular discs, glued port-to-port. Handle long
// sides attach to vertex-disc sides, handle ends attach to cell-disc sides
// or lie on the surface boundary.
struct TransverseSurface {
  BaseComplex base;
  std::vector<Piece> pieces;
  std::vector<std::vector<PortRef>> glue;  // [piece][port], invalid = exposed
  Word target;                             // attaching word of g over base edges
  int declared_n = -1;                     // -1 = unspecified

  int piece_index(const std::string& name) const;
  PortRef mate(PortRef p) const { return glue[p.piece][p.port]; }
};

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct SurfaceCheckReport {
  std::vector<CheckItem> items;
  long long chi = 0;
  long long chi_minus = 0;
  int components = 0;
  std::vector<long long> component_chis;
  std::vector<Word> circuit_words;
  std::vector<int> circuit_degrees;
  int n = 0;
  std::string incompressible = "asserted-by-input";
  bool pass() const;
  std::string text() const;
};

// Structural gluing problems (double gluing, incompatible kinds, unglued
// mandatory ports) throw MalformedGluing; everything else lands in the
// report as a verdict.
SurfaceCheckReport validate(const TransverseSurface& s);
SurfaceCheckReport validate(const TransverseSurface& s, const Word& g);

long long euler_characteristic(const TransverseSurface& s);
std::vector<long long> component_euler_characteristics(const TransverseSurface& s);
std::vector<Word> boundary_words(const TransverseSurface& s);

// Piece-level tile complex: tile i = piece i, slot j = port j.
TileComplex piece_tiles(const TransverseSurface& s);

// Text format with sections base: / pieces: / glue: / target:.
TransverseSurface parse_surface(const std::string& text);
std::string to_text(const TransverseSurface& s);

// True iff `word` equals some cyclic rotation of base^k for a positive k;
// returns k via out parameter.
bool is_positive_power_rotation(const std::vector<Letter>& word, const Word& base, int* k_out);

}  // namespace sclcert

#endif
