#include "surface.hpp"

#include <algorithm>
#include <sstream>

namespace sclcert {

int BaseComplex::edge_index(const std::string& name) const {
  for (size_t i = 0; i < edge_names.size(); ++i)
    if (edge_names[i] == name) return (int)i;
  return -1;
}

int BaseComplex::triangle_index(const std::string& name) const {
  for (size_t i = 0; i < triangles.size(); ++i)
    if (triangles[i].name == name) return (int)i;
  return -1;
}

Word BaseComplex::represent(const Word& edge_word) const {
  Word acc;
  for (const Letter& l : edge_word.letters()) {
    check(l.gen < (int)edge_images.size(), Errc::AlphabetMismatch,
          "edge id out of range in represent()");
    const Word& im = edge_images[l.gen];
    acc = concat(acc, l.sign > 0 ? im : im.inverse());
  }
  return acc;
}

BaseComplex BaseComplex::wedge_ab() {
  BaseComplex b;
  b.edge_names = {"a", "b"};
  b.edge_images = {Word::single({GEN_A, +1}), Word::single({GEN_B, +1})};
  return b;
}

int Piece::num_ports() const {
  switch (kind) {
    case PieceKind::VertexDisc: return (int)disc_ports.size();
    case PieceKind::Handle: return 4;
    case PieceKind::CellDisc: return 3;
  }
  return 0;
}

int TransverseSurface::piece_index(const std::string& name) const {
  for (size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].name == name) return (int)i;
  return -1;
}

TileComplex piece_tiles(const TransverseSurface& s) {
  TileComplex tc;
  for (size_t p = 0; p < s.pieces.size(); ++p) {
    const Piece& pc = s.pieces[p];
    Tile t;
    t.src = (int)p;
    switch (pc.kind) {
      case PieceKind::VertexDisc: {
        t.mat = Mat::D;
        t.role = TileRole::VertexDisc;
        for (DiscPort dp : pc.disc_ports) {
          Slot sl;
          sl.kind = dp == DiscPort::Free ? SlotKind::Free : SlotKind::Cut;
          t.slots.push_back(sl);
        }
        break;
      }
      case PieceKind::Handle: {
        t.role = TileRole::Handle;
        Slot l0, e0, l1, e1;
        l0.kind = l1.kind = SlotKind::Cut;
        e0.kind = e1.kind = SlotKind::Dir;
        e0.gen = e1.gen = pc.edge;
        e0.sgn = pc.edge_sign;
        e1.sgn = -pc.edge_sign;
        t.slots = {l0, e0, l1, e1};
        break;
      }
      case PieceKind::CellDisc: {
        t.role = TileRole::CellDisc;
        t.slots.assign(3, Slot{});
        for (Slot& sl : t.slots) sl.kind = SlotKind::Dir;
        // letters filled below from the glued handle ends
        break;
      }
    }
    tc.add_tile(std::move(t));
  }
  // transfer gluings; fill induced cell side letters first
  for (size_t p = 0; p < s.pieces.size(); ++p) {
    if (s.pieces[p].kind != PieceKind::CellDisc) continue;
    for (int k = 0; k < 3; ++k) {
      PortRef m = s.glue[p][k];
      check(m.valid(), Errc::MalformedGluing,
            "cell disc " + s.pieces[p].name + " side " + std::to_string(k) + " is unglued");
      const Piece& h = s.pieces[m.piece];
      check(h.kind == PieceKind::Handle && (m.port == H_END0 || m.port == H_END1),
            Errc::MalformedGluing, "cell disc side must glue to a handle end");
      int end_sign = m.port == H_END0 ? h.edge_sign : -h.edge_sign;
      Slot& sl = tc.tile((int)p).slots[k];
      sl.gen = h.edge;
      sl.sgn = -end_sign;  // reversed traversal across the gluing
    }
  }
  for (size_t p = 0; p < s.pieces.size(); ++p)
    for (int k = 0; k < s.pieces[p].num_ports(); ++k) {
      PortRef m = s.glue[p][k];
      if (!m.valid()) continue;
      if (std::pair{(int)p, k} < std::pair{m.piece, m.port})
        tc.glue({(int)p, k}, {m.piece, m.port});
    }
  tc.check_integrity();
  return tc;
}

long long euler_characteristic(const TransverseSurface& s) {
  return piece_tiles(s).euler_characteristic();
}

std::vector<long long> component_euler_characteristics(const TransverseSurface& s) {
  TileComplex tc = piece_tiles(s);
  std::vector<int> comp = tc.components();
  int nc = 0;
  for (int c : comp) nc = std::max(nc, c + 1);
  std::vector<long long> out;
  for (int c = 0; c < nc; ++c) out.push_back(tc.component_chi(comp, c));
  return out;
}

std::vector<Word> boundary_words(const TransverseSurface& s) {
  TileComplex tc = piece_tiles(s);
  std::vector<Word> out;
  for (const auto& circuit : tc.boundary_circuits()) {
    std::vector<Letter> ls;
    for (SlotRef r : circuit) {
      const Slot& sl = tc.at(r);
      if (sl.kind == SlotKind::Dir) ls.emplace_back(sl.gen, sl.sgn);
    }
    Word w;
    if (!ls.empty()) w = Word(std::move(ls));
    out.push_back(w);
  }
  return out;
}

bool is_positive_power_rotation(const std::vector<Letter>& word, const Word& base, int* k_out) {
  size_t m = base.size();
  if (m == 0 || word.empty() || word.size() % m != 0) return false;
  int k = (int)(word.size() / m);
  for (size_t r = 0; r < word.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < word.size() && ok; ++i)
      if (word[(r + i) % word.size()] != base[i % m]) ok = false;
    if (ok) {
      if (k_out) *k_out = k;
      return true;
    }
  }
  return false;
}

namespace {

bool word_is_cyclically_reduced(const Word& w) {
  if (w.size() < 2) return true;
  const Letter& first = w[0];
  const Letter& last = w[w.size() - 1];
  return !(first.gen == last.gen && first.sign == -last.sign);
}

void structural_checks(const TransverseSurface& s) {
  check(s.pieces.size() == s.glue.size(), Errc::MalformedGluing, "glue table size mismatch");
  for (size_t p = 0; p < s.pieces.size(); ++p) {
    const Piece& pc = s.pieces[p];
    check((int)s.glue[p].size() == pc.num_ports(), Errc::MalformedGluing,
          "glue row size mismatch at " + pc.name);
    for (int k = 0; k < pc.num_ports(); ++k) {
      PortRef m = s.glue[p][k];
      if (!m.valid()) continue;
      check(m.piece >= 0 && m.piece < (int)s.pieces.size() && m.port >= 0 &&
                m.port < s.pieces[m.piece].num_ports(),
            Errc::MalformedGluing, "gluing out of range at " + pc.name);
      PortRef back = s.glue[m.piece][m.port];
      check(back == PortRef{(int)p, k}, Errc::MalformedGluing,
            "gluing not an involution at " + pc.name + "." + std::to_string(k));
      check(!(m.piece == (int)p && m.port == k), Errc::MalformedGluing,
            "port glued to itself at " + pc.name);
    }
  }
  auto port_class = [&](PortRef r) -> int {
    const Piece& pc = s.pieces[r.piece];
    switch (pc.kind) {
      case PieceKind::VertexDisc:
        switch (pc.disc_ports[r.port]) {
          case DiscPort::Side: return 0;
          case DiscPort::Seam: return 1;
          case DiscPort::Free: return 2;
        }
        return 2;
      case PieceKind::Handle: return (r.port == H_LONG0 || r.port == H_LONG1) ? 3 : 4;
      case PieceKind::CellDisc: return 5;
    }
    return -1;
  };
  for (size_t p = 0; p < s.pieces.size(); ++p) {
    const Piece& pc = s.pieces[p];
    for (int k = 0; k < pc.num_ports(); ++k) {
      PortRef self{(int)p, k};
      PortRef m = s.glue[p][k];
      int cls = port_class(self);
      std::string at = pc.name + "." + std::to_string(k);
      switch (cls) {
        case 0:  // disc side <-> handle long, mandatory? no: sides must be glued
          check(m.valid() && port_class(m) == 3, Errc::MalformedGluing,
                "vertex-disc side must glue to a handle long side (" + at + ")");
          break;
        case 1:  // seam <-> seam
          check(m.valid() && port_class(m) == 1, Errc::MalformedGluing,
                "seam must glue to a seam (" + at + ")");
          break;
        case 2:  // free: never glued
          check(!m.valid(), Errc::MalformedGluing, "free arc cannot be glued (" + at + ")");
          break;
        case 3:  // handle long <-> disc side, mandatory
          check(m.valid() && port_class(m) == 0, Errc::MalformedGluing,
                "handle long side must glue to a vertex-disc side (" + at + ")");
          break;
        case 4:  // handle end <-> cell side or exposed
          check(!m.valid() || port_class(m) == 5, Errc::MalformedGluing,
                "handle end may only glue to a cell-disc side (" + at + ")");
          break;
        case 5:  // cell side <-> handle end, mandatory
          check(m.valid() && port_class(m) == 4, Errc::MalformedGluing,
                "cell-disc side must glue to a handle end (" + at + ")");
          break;
      }
    }
  }
}

}  // namespace

bool SurfaceCheckReport::pass() const {
  for (const CheckItem& c : items)
    if (!c.pass) return false;
  return true;
}

std::string SurfaceCheckReport::text() const {
  std::ostringstream out;
  for (const CheckItem& c : items) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "chi = " << chi << ", chi^- = " << chi_minus << ", components = " << components
      << ", n = " << n << "\n";
  out << "incompressible: " << incompressible << "\n";
  return out.str();
}

SurfaceCheckReport validate(const TransverseSurface& s) { return validate(s, s.target); }

SurfaceCheckReport validate(const TransverseSurface& s, const Word& g) {
  structural_checks(s);
  TileComplex tc = piece_tiles(s);

  SurfaceCheckReport rep;
  auto add = [&rep](const std::string& name, bool pass, std::string detail = "") {
    rep.items.push_back({name, pass, std::move(detail)});
  };

  add("target word nonempty and cyclically reduced",
      !g.empty() && word_is_cyclically_reduced(g), to_string(g));

  // triangle relators die in F(a, b)
  {
    bool ok = true;
    std::string detail;
    for (const auto& tri : s.base.triangles) {
      Word w;
      for (const Letter& l : tri.boundary) w = concat(w, Word::single(l));
      if (!s.base.represent(w).empty()) {
        ok = false;
        detail = "triangle " + tri.name + " does not die under the edge representation";
        break;
      }
    }
    add("triangle relators vanish under edge representation", ok, detail);
  }

  // cell-disc sides spell the base triangle boundary
  {
    bool ok = true;
    std::string detail;
    for (size_t p = 0; p < s.pieces.size() && ok; ++p) {
      if (s.pieces[p].kind != PieceKind::CellDisc) continue;
      const auto& tri = s.base.triangles[s.pieces[p].triangle];
      std::vector<Letter> induced;
      for (int k = 0; k < 3; ++k) induced.push_back(tc.tile((int)p).slots[k].letter());
      Word tw;
      for (const Letter& l : tri.boundary) tw = concat(tw, Word::single(l));
      int kk = 0;
      bool match = is_positive_power_rotation(induced, tw, &kk) && kk == 1;
      if (!match) {
        std::vector<Letter> rev(induced.rbegin(), induced.rend());
        for (Letter& l : rev) l.sign = -l.sign;
        match = is_positive_power_rotation(rev, tw, &kk) && kk == 1;
      }
      if (!match) {
        ok = false;
        detail = s.pieces[p].name + " sides spell " + to_string(Word(std::move(induced))) +
                 ", triangle wants " + to_string(tw);
      }
    }
    add("cell-disc sides spell their base triangle", ok, detail);
  }

  // free arcs separate boundary sections
  {
    TileComplex::Vertices V = tc.vertices();
    bool ok = true;
    std::string detail;
    for (int v = 0; v < V.count() && ok; ++v) {
      if (!V.on_boundary[v]) continue;
      int exposed_dir = 0;
      for (SlotRef c : V.orbits[v]) {
        const Tile& t = tc.tile(c.tile);
        int n = (int)t.slots.size();
        const Slot& out_slot = t.slots[c.slot];
        const Slot& in_slot = t.slots[(c.slot + n - 1) % n];
        if (!out_slot.glued() && out_slot.kind == SlotKind::Dir) ++exposed_dir;
        if (!in_slot.glued() && in_slot.kind == SlotKind::Dir) ++exposed_dir;
      }
      if (exposed_dir > 1) {
        ok = false;
        detail = "two handle ends meet on the boundary with no free arc between";
      }
    }
    add("free arcs separate boundary sections", ok, detail);
  }

  // boundary circuits: monotone, degrees, n
  {
    bool ok = true;
    std::string detail;
    int n = 0;
    for (const auto& circuit : tc.boundary_circuits()) {
      std::vector<Letter> ls;
      for (SlotRef r : circuit)
        if (tc.at(r).kind == SlotKind::Dir) ls.push_back(tc.at(r).letter());
      Word w = ls.empty() ? Word() : Word(std::vector<Letter>(ls));
      rep.circuit_words.push_back(w);
      int k = 0;
      if (!is_positive_power_rotation(ls, g, &k)) {
        ok = false;
        detail = "circuit reads " + (ls.empty() ? std::string("1") : to_string(Word(ls))) +
                 ", not a positive power of " + to_string(g);
        rep.circuit_degrees.push_back(0);
        continue;
      }
      rep.circuit_degrees.push_back(k);
      n += k;
    }
    rep.n = n;
    add("monotone: circuits read positive powers of the target", ok, detail);
    add("boundary degree n >= 1", n >= 1, "n = " + std::to_string(n));
    if (s.declared_n >= 0)
      add("declared n matches", n == s.declared_n,
          "declared " + std::to_string(s.declared_n) + ", computed " + std::to_string(n));
  }

  // Euler characteristics, disc- and sphere-freeness
  {
    std::vector<int> comp = tc.components();
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);
    rep.components = nc;
    bool ok = true;
    std::string detail;
    for (int c = 0; c < nc; ++c) {
      long long chi = tc.component_chi(comp, c);
      rep.component_chis.push_back(chi);
      rep.chi += chi;
      rep.chi_minus += std::min(0ll, chi);
      if (chi == 1 || chi == 2) {
        ok = false;
        detail = "component #" + std::to_string(c) + " has chi = " + std::to_string(chi);
      }
    }
    add("disc- and sphere-free", ok, detail);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// text format

namespace {

PortRef parse_port_ref(const TransverseSurface& s, const std::string& tok) {
  auto dot = tok.find('.');
  check(dot != std::string::npos, Errc::ParseError, "port ref \"" + tok + "\" needs a dot");
  std::string pname = tok.substr(0, dot);
  std::string port = tok.substr(dot + 1);
  int p = s.piece_index(pname);
  check(p >= 0, Errc::ParseError, "unknown piece \"" + pname + "\"");
  const Piece& pc = s.pieces[p];
  int k = -1;
  if (port == "long0") k = H_LONG0;
  else if (port == "end0") k = H_END0;
  else if (port == "long1") k = H_LONG1;
  else if (port == "end1") k = H_END1;
  else if (port == "side0") k = 0;
  else if (port == "side1") k = 1;
  else if (port == "side2") k = 2;
  else {
    try {
      k = std::stoi(port);
    } catch (...) {
      fail(Errc::ParseError, "bad port \"" + port + "\" in \"" + tok + "\"");
    }
  }
  check(k >= 0 && k < pc.num_ports(), Errc::ParseError,
        "port out of range in \"" + tok + "\"");
  return {p, k};
}

}  // namespace

TransverseSurface parse_surface(const std::string& text) {
  TransverseSurface s;
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> glue_lines;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string where = "line " + std::to_string(lineno);
    if (key == "base:" || key == "pieces:" || key == "glue:") continue;
    if (key == "edges:") {
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        std::string name = eq == std::string::npos ? tok : tok.substr(0, eq);
        check(name.size() == 1 && name[0] >= 'a' && name[0] <= 'z', Errc::ParseError,
              where + ": edge names are single lowercase letters");
        check(s.base.edge_index(name) < 0, Errc::ParseError, where + ": duplicate edge " + name);
        s.base.edge_names.push_back(name);
        if (eq == std::string::npos) {
          check(name == "a" || name == "b", Errc::ParseError,
                where + ": edge " + name + " needs an =image in F(a, b)");
          s.base.edge_images.push_back(parse_word(name, 2));
        } else {
          s.base.edge_images.push_back(parse_word(tok.substr(eq + 1), 2));
        }
      }
    } else if (key == "triangle:") {
      std::string name, w;
      check(bool(ls >> name >> w), Errc::ParseError, where + ": triangle: <name> <word>");
      check(w.size() == 3, Errc::ParseError, where + ": triangle boundary must have length 3");
      BaseComplex::Triangle tri;
      tri.name = name;
      for (int i = 0; i < 3; ++i) {
        char c = w[i];
        int sign = (c >= 'a' && c <= 'z') ? +1 : -1;
        std::string en(1, (char)std::tolower(c));
        int e = s.base.edge_index(en);
        check(e >= 0, Errc::ParseError, where + ": unknown edge " + en);
        tri.boundary[i] = Letter(e, sign);
      }
      s.base.triangles.push_back(tri);
    } else if (key == "vertex_disc") {
      std::string name;
      check(bool(ls >> name), Errc::ParseError, where + ": vertex_disc <name> ports...");
      if (!name.empty() && name.back() == ':') name.pop_back();
      Piece p;
      p.kind = PieceKind::VertexDisc;
      p.name = name;
      std::string tok;
      while (ls >> tok) {
        if (tok == "side") p.disc_ports.push_back(DiscPort::Side);
        else if (tok == "free") p.disc_ports.push_back(DiscPort::Free);
        else if (tok == "seam") p.disc_ports.push_back(DiscPort::Seam);
        else fail(Errc::ParseError, where + ": bad port kind \"" + tok + "\"");
      }
      check(!p.disc_ports.empty(), Errc::ParseError, where + ": vertex disc with no ports");
      s.pieces.push_back(std::move(p));
    } else if (key == "handle") {
      std::string name, label;
      check(bool(ls >> name >> label), Errc::ParseError, where + ": handle <name> <edge>");
      if (!name.empty() && name.back() == ':') name.pop_back();
      Piece p;
      p.kind = PieceKind::Handle;
      p.name = name;
      check(label.size() == 1, Errc::ParseError, where + ": handle edge is a single letter");
      p.edge_sign = std::isupper((unsigned char)label[0]) ? -1 : +1;
      std::string en(1, (char)std::tolower(label[0]));
      p.edge = s.base.edge_index(en);
      check(p.edge >= 0, Errc::ParseError, where + ": unknown edge " + en);
      s.pieces.push_back(std::move(p));
    } else if (key == "cell_disc") {
      std::string name, tri;
      check(bool(ls >> name >> tri), Errc::ParseError, where + ": cell_disc <name> <triangle>");
      if (!name.empty() && name.back() == ':') name.pop_back();
      Piece p;
      p.kind = PieceKind::CellDisc;
      p.name = name;
      p.triangle = s.base.triangle_index(tri);
      check(p.triangle >= 0, Errc::ParseError, where + ": unknown triangle " + tri);
      s.pieces.push_back(std::move(p));
    } else if (key == "target:") {
      std::string w, ntok;
      check(bool(ls >> w), Errc::ParseError, where + ": target: <word> [n=<int>]");
      s.target = parse_word(w, (int)std::max<size_t>(s.base.edge_names.size(), 26));
      check(s.target.max_gen() < (int)s.base.edge_names.size(), Errc::AlphabetMismatch,
            where + ": target uses unknown edges");
      if (ls >> ntok) {
        check(ntok.rfind("n=", 0) == 0, Errc::ParseError, where + ": expected n=<int>");
        s.declared_n = std::stoi(ntok.substr(2));
      }
    } else {
      // glue line: two port refs
      std::string second;
      check(bool(ls >> second), Errc::ParseError,
            where + ": expected \"<piece>.<port> <piece>.<port>\"");
      glue_lines.emplace_back(key, second);
    }
  }
  s.glue.resize(s.pieces.size());
  for (size_t p = 0; p < s.pieces.size(); ++p) s.glue[p].resize(s.pieces[p].num_ports());
  for (auto& [a, b] : glue_lines) {
    PortRef ra = parse_port_ref(s, a);
    PortRef rb = parse_port_ref(s, b);
    check(!s.glue[ra.piece][ra.port].valid() && !s.glue[rb.piece][rb.port].valid(),
          Errc::MalformedGluing, "port glued twice: " + a + " " + b);
    check(!(ra == rb), Errc::MalformedGluing, "port glued to itself: " + a);
    s.glue[ra.piece][ra.port] = rb;
    s.glue[rb.piece][rb.port] = ra;
  }
  return s;
}

std::string to_text(const TransverseSurface& s) {
  std::ostringstream out;
  out << "base:\n  edges:";
  for (size_t e = 0; e < s.base.edge_names.size(); ++e) {
    out << " " << s.base.edge_names[e];
    Word id = parse_word(s.base.edge_names[e], 26);
    if (!(s.base.edge_images[e] == id)) out << "=" << to_string(s.base.edge_images[e]);
  }
  out << "\n";
  for (const auto& tri : s.base.triangles) {
    out << "  triangle: " << tri.name << " ";
    for (const Letter& l : tri.boundary) {
      char c = s.base.edge_names[l.gen][0];
      out << (l.sign > 0 ? c : (char)std::toupper(c));
    }
    out << "\n";
  }
  out << "pieces:\n";
  for (const Piece& p : s.pieces) {
    switch (p.kind) {
      case PieceKind::VertexDisc: {
        out << "  vertex_disc " << p.name << ":";
        for (DiscPort dp : p.disc_ports)
          out << " " << (dp == DiscPort::Side ? "side" : dp == DiscPort::Free ? "free" : "seam");
        out << "\n";
        break;
      }
      case PieceKind::Handle: {
        char c = s.base.edge_names[p.edge][0];
        out << "  handle " << p.name << ": " << (p.edge_sign > 0 ? c : (char)std::toupper(c))
            << "\n";
        break;
      }
      case PieceKind::CellDisc:
        out << "  cell_disc " << p.name << ": " << s.base.triangles[p.triangle].name << "\n";
        break;
    }
  }
  out << "glue:\n";
  auto port_name = [&](PortRef r) {
    const Piece& pc = s.pieces[r.piece];
    std::string base = pc.name + ".";
    if (pc.kind == PieceKind::Handle) {
      const char* names[4] = {"long0", "end0", "long1", "end1"};
      return base + names[r.port];
    }
    if (pc.kind == PieceKind::CellDisc) return base + "side" + std::to_string(r.port);
    return base + std::to_string(r.port);
  };
  for (size_t p = 0; p < s.pieces.size(); ++p)
    for (int k = 0; k < s.pieces[p].num_ports(); ++k) {
      PortRef m = s.glue[p][k];
      if (m.valid() && std::pair{(int)p, k} < std::pair{m.piece, m.port})
        out << "  " << port_name({(int)p, k}) << " " << port_name(m) << "\n";
    }
  out << "target: " << to_string(s.target);
  if (s.declared_n >= 0) out << " n=" << s.declared_n;
  out << "\n";
  return out.str();
}

}  // namespace sclcert
