#ifndef SCLCERT_TILES_HPP
#define SCLCERT_TILES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "angled.hpp"
#include "words.hpp"

namespace sclcert {

// Material of a tile in a stripe pattern: vertex-disc material, a-material,
// b-material. Tiles of a pre-stripe transverse surface also live here, with
// handles and cell discs carrying materials that are ignored until the
// pattern is built.
enum class Mat : uint8_t { D, A, B };

enum class SlotKind : uint8_t {
  Dir,   // directed edge: carries a letter (gen + tile-reading sign)
  Cut,   // interface edge (transition candidates, ports, seams)
  Free,  // vertex-disc boundary arc on the surface boundary
};

enum class TileRole : uint8_t {
  VertexDisc,
  Handle,
  CellDisc,
  Stripe,
  ApexStripe,
  Hexagon,
  DCap,
  DFlap,
  DStrip,
  AbsorbedHandle,
  AbsorbedCell,
};

struct Slot {
  SlotKind kind = SlotKind::Cut;
  int gen = -1;  // Dir: generator id (base edge at surface level, a/b in patterns)
  int sgn = 0;   // Dir: sign of the letter as read along the tile's own traversal
  int index = 0; // boundary arc index in {1..ell}, 0 = unassigned
  int mate_tile = -1;
  int mate_slot = -1;
  bool glued() const { return mate_tile >= 0; }
  Letter letter() const { return Letter(gen, sgn); }
};

struct Tile {
  Mat mat = Mat::D;
  TileRole role = TileRole::VertexDisc;
  int src = -1;  // index of the originating surface piece, -1 for new material
  std::vector<Slot> slots;
};

struct SlotRef {
  int tile = -1;
  int slot = -1;
  bool valid() const { return tile >= 0; }
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

// A closed oriented combinatorial surface-with-boundary given as polygons
// glued along matching sides. Every tile lists its sides in the positive
// traversal order; gluing a pair identifies the sides with reversed
// traversal, so the result is always oriented. Corners are addressed as
// (tile, i) = the corner at the tail of slot i.
class TileComplex {
 public:
  int add_tile(Tile t);
  void kill_tile(int t);
  bool alive(int t) const { return alive_[t]; }
  int num_tiles() const { return (int)tiles_.size(); }
  Tile& tile(int t) { return tiles_[t]; }
  const Tile& tile(int t) const { return tiles_[t]; }
  Slot& at(SlotRef r) { return tiles_[r.tile].slots[r.slot]; }
  const Slot& at(SlotRef r) const { return tiles_[r.tile].slots[r.slot]; }
  SlotRef mate(SlotRef r) const {
    const Slot& s = at(r);
    return {s.mate_tile, s.mate_slot};
  }

  void glue(SlotRef a, SlotRef b);
  void unglue_pair(SlotRef a);

  // Inserts a slot at position pos of tile t (shifting later slots) and
  // repairs the back-references of their mates.
  void insert_slot(int t, int pos, Slot s);

  // Subdivides the glued edge at r into two consecutive glued edges. The new
  // slots copy the metadata of the old ones. Returns the ref of the first
  // half on r's side.
  SlotRef split_glued_edge(SlotRef r);

  // --- derived structure (recomputed on demand) ---

  // Vertex id per corner; corners of dead tiles get -1.
  struct Vertices {
    std::vector<std::vector<int>> corner_vertex;  // [tile][slot] -> vertex id
    std::vector<std::vector<SlotRef>> orbits;     // vertex id -> corners
    std::vector<char> on_boundary;                // vertex id -> bool
    int count() const { return (int)orbits.size(); }
  };
  Vertices vertices() const;

  SlotRef head_corner(SlotRef s) const;  // corner at the head of slot s
  SlotRef tail_corner(SlotRef s) const { return s; }

  // Next exposed slot along the surface boundary after s (s must be exposed).
  SlotRef boundary_next(SlotRef s) const;
  std::vector<std::vector<SlotRef>> boundary_circuits() const;

  long long euler_characteristic() const;
  // Component id per alive tile (connected through gluings), -1 for dead.
  std::vector<int> components() const;
  int num_alive() const;
  long long component_chi(const std::vector<int>& comp, int which) const;

  // Structural audit: symmetric mates, compatible kinds, Dir gluings with
  // equal generator and opposite signs. Throws MalformedGluing.
  void check_integrity() const;

  // Honest angled complex on the tile cellulation. corner_map[t][i] gives
  // (face, corner) of tile t's corner i; faces are indexed by alive tiles in
  // order (face_of[t]).
  struct AngledView {
    AngledComplex X;
    std::vector<int> face_of;                    // tile -> face id (-1 dead)
    std::vector<std::vector<int>> vertex_of;     // [tile][slot] -> vertex id
    std::vector<int> edge_of_exposed_dummy;      // unused placeholder
  };
  AngledView angled_view() const;

 private:
  std::vector<Tile> tiles_;
  std::vector<char> alive_;
};

}  // namespace sclcert

#endif
