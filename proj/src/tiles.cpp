#include "tiles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sclcert {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int TileComplex::add_tile(Tile t) {
  tiles_.push_back(std::move(t));
  alive_.push_back(1);
  return (int)tiles_.size() - 1;
}

void TileComplex::kill_tile(int t) {
  for (Slot& s : tiles_[t].slots)
    check(!s.glued(), Errc::Internal, "killing a tile with glued slots");
  alive_[t] = 0;
}

void TileComplex::glue(SlotRef a, SlotRef b) {
  check(a.valid() && b.valid() && !(a == b), Errc::MalformedGluing, "bad glue refs");
  check(!at(a).glued() && !at(b).glued(), Errc::MalformedGluing, "port already glued");
  at(a).mate_tile = b.tile;
  at(a).mate_slot = b.slot;
  at(b).mate_tile = a.tile;
  at(b).mate_slot = a.slot;
}

void TileComplex::unglue_pair(SlotRef a) {
  SlotRef b = mate(a);
  check(b.valid(), Errc::Internal, "unglue on an exposed slot");
  at(a).mate_tile = at(a).mate_slot = -1;
  at(b).mate_tile = at(b).mate_slot = -1;
}

void TileComplex::insert_slot(int t, int pos, Slot s) {
  check(!s.glued(), Errc::Internal, "insert_slot expects an unglued slot");
  // Mate back-references store positions, so bump everything pointing into
  // tile t at or after pos before the vector shifts.
  for (size_t u = 0; u < tiles_.size(); ++u) {
    if (!alive_[u]) continue;
    for (Slot& sl : tiles_[u].slots)
      if (sl.mate_tile == t && sl.mate_slot >= pos) ++sl.mate_slot;
  }
  tiles_[t].slots.insert(tiles_[t].slots.begin() + pos, s);
}

SlotRef TileComplex::split_glued_edge(SlotRef r) {
  SlotRef m = mate(r);
  unglue_pair(r);
  Slot cr = at(r);
  Slot cm = at(m);
  insert_slot(r.tile, r.slot + 1, cr);
  if (m.tile == r.tile && m.slot > r.slot) ++m.slot;
  insert_slot(m.tile, m.slot + 1, cm);
  if (r.tile == m.tile && r.slot > m.slot) ++r.slot;
  // first half of one traversal meets the second half of the other
  glue({r.tile, r.slot}, {m.tile, m.slot + 1});
  glue({r.tile, r.slot + 1}, {m.tile, m.slot});
  return r;
}

SlotRef TileComplex::head_corner(SlotRef s) const {
  int n = (int)tiles_[s.tile].slots.size();
  return {s.tile, (s.slot + 1) % n};
}

TileComplex::Vertices TileComplex::vertices() const {
  std::vector<int> base(tiles_.size(), 0);
  int total = 0;
  for (size_t t = 0; t < tiles_.size(); ++t) {
    base[t] = total;
    if (alive_[t]) total += (int)tiles_[t].slots.size();
  }
  UnionFind uf(total);
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    int n = (int)tiles_[t].slots.size();
    for (int i = 0; i < n; ++i) {
      const Slot& s = tiles_[t].slots[i];
      if (!s.glued()) continue;
      // crossing slot (t,i): its tail corner meets corner (mate, mate_slot+1)
      int mt = s.mate_tile, ms = s.mate_slot;
      int mn = (int)tiles_[mt].slots.size();
      uf.unite(base[t] + i, base[mt] + (ms + 1) % mn);
    }
  }
  Vertices V;
  V.corner_vertex.resize(tiles_.size());
  std::vector<int> id(total, -1);
  for (size_t t = 0; t < tiles_.size(); ++t) {
    V.corner_vertex[t].assign(tiles_[t].slots.size(), -1);
    if (!alive_[t]) continue;
    int n = (int)tiles_[t].slots.size();
    for (int i = 0; i < n; ++i) {
      int root = uf.find(base[t] + i);
      if (id[root] < 0) {
        id[root] = (int)V.orbits.size();
        V.orbits.emplace_back();
        V.on_boundary.push_back(0);
      }
      int v = id[root];
      V.corner_vertex[t][i] = v;
      V.orbits[v].push_back({(int)t, i});
      int prev = (i + n - 1) % n;
      if (!tiles_[t].slots[i].glued() || !tiles_[t].slots[prev].glued()) V.on_boundary[v] = 1;
    }
  }
  return V;
}

SlotRef TileComplex::boundary_next(SlotRef s) const {
  check(!at(s).glued(), Errc::Internal, "boundary_next on a glued slot");
  int t = s.tile;
  int i = (s.slot + 1) % (int)tiles_[t].slots.size();
  while (tiles_[t].slots[i].glued()) {
    const Slot& sl = tiles_[t].slots[i];
    int mt = sl.mate_tile, ms = sl.mate_slot;
    t = mt;
    i = (ms + 1) % (int)tiles_[mt].slots.size();
  }
  return {t, i};
}

std::vector<std::vector<SlotRef>> TileComplex::boundary_circuits() const {
  std::vector<std::vector<SlotRef>> out;
  std::set<std::pair<int, int>> seen;
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    for (int i = 0; i < (int)tiles_[t].slots.size(); ++i) {
      if (tiles_[t].slots[i].glued() || seen.count({(int)t, i})) continue;
      std::vector<SlotRef> circuit;
      SlotRef cur{(int)t, i};
      do {
        circuit.push_back(cur);
        seen.insert({cur.tile, cur.slot});
        cur = boundary_next(cur);
      } while (!(cur.tile == (int)t && cur.slot == i));
      out.push_back(std::move(circuit));
    }
  }
  return out;
}

long long TileComplex::euler_characteristic() const {
  long long F = 0, incidences = 0, exposed = 0;
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    ++F;
    for (const Slot& s : tiles_[t].slots) {
      ++incidences;
      if (!s.glued()) ++exposed;
    }
  }
  long long E = (incidences - exposed) / 2 + exposed;
  long long V = vertices().count();
  return V - E + F;
}

std::vector<int> TileComplex::components() const {
  UnionFind uf(tiles_.size());
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    for (const Slot& s : tiles_[t].slots)
      if (s.glued()) uf.unite((int)t, s.mate_tile);
  }
  std::vector<int> comp(tiles_.size(), -1);
  std::map<int, int> id;
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    int root = uf.find((int)t);
    auto it = id.emplace(root, (int)id.size()).first;
    comp[t] = it->second;
  }
  return comp;
}

int TileComplex::num_alive() const {
  int n = 0;
  for (char a : alive_) n += a;
  return n;
}

long long TileComplex::component_chi(const std::vector<int>& comp, int which) const {
  Vertices V = vertices();
  std::vector<char> vseen(V.count(), 0);
  long long F = 0, incidences = 0, exposed = 0, vcount = 0;
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t] || comp[t] != which) continue;
    ++F;
    for (int i = 0; i < (int)tiles_[t].slots.size(); ++i) {
      ++incidences;
      if (!tiles_[t].slots[i].glued()) ++exposed;
      int v = V.corner_vertex[t][i];
      if (!vseen[v]) {
        vseen[v] = 1;
        ++vcount;
      }
    }
  }
  long long E = (incidences - exposed) / 2 + exposed;
  return vcount - E + F;
}

void TileComplex::check_integrity() const {
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    check(!tiles_[t].slots.empty(), Errc::MalformedGluing,
          "tile #" + std::to_string(t) + " has no sides");
    for (int i = 0; i < (int)tiles_[t].slots.size(); ++i) {
      const Slot& s = tiles_[t].slots[i];
      if (!s.glued()) continue;
      check(s.mate_tile < (int)tiles_.size() && alive_[s.mate_tile], Errc::MalformedGluing,
            "gluing into a dead tile");
      check(s.mate_slot < (int)tiles_[s.mate_tile].slots.size(), Errc::MalformedGluing,
            "gluing out of range");
      const Slot& m = tiles_[s.mate_tile].slots[s.mate_slot];
      check(m.mate_tile == (int)t && m.mate_slot == i, Errc::MalformedGluing,
            "asymmetric gluing at tile #" + std::to_string(t));
      check(m.kind == s.kind, Errc::MalformedGluing, "gluing of mismatched slot kinds");
      if (s.kind == SlotKind::Dir)
        check(s.gen == m.gen && s.sgn == -m.sgn, Errc::MalformedGluing,
              "directed edges must glue with matching letter and opposite traversal");
      check(s.kind != SlotKind::Free, Errc::MalformedGluing, "free arcs cannot be glued");
    }
  }
}

TileComplex::AngledView TileComplex::angled_view() const {
  AngledView view;
  Vertices V = vertices();
  view.vertex_of = V.corner_vertex;
  view.X = AngledComplex();
  for (int v = 0; v < V.count(); ++v) view.X.add_vertex();

  std::map<std::pair<int, int>, int> edge_id;
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    int n = (int)tiles_[t].slots.size();
    for (int i = 0; i < n; ++i) {
      const Slot& s = tiles_[t].slots[i];
      std::pair<int, int> key{(int)t, i};
      if (s.glued() && std::pair<int, int>{s.mate_tile, s.mate_slot} < key) continue;
      int from = V.corner_vertex[t][i];
      int to = V.corner_vertex[t][(i + 1) % n];
      edge_id[key] = view.X.add_edge(from, to);
    }
  }
  view.face_of.assign(tiles_.size(), -1);
  for (size_t t = 0; t < tiles_.size(); ++t) {
    if (!alive_[t]) continue;
    std::vector<int> cycle;
    int n = (int)tiles_[t].slots.size();
    for (int i = 0; i < n; ++i) {
      const Slot& s = tiles_[t].slots[i];
      auto it = edge_id.find({(int)t, i});
      if (it != edge_id.end())
        cycle.push_back(it->second);
      else
        cycle.push_back(~edge_id.at({s.mate_tile, s.mate_slot}));
    }
    view.face_of[t] = view.X.add_face(cycle);
  }
  return view;
}

}  // namespace sclcert
