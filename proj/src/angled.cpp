#include "angled.hpp"

#include <map>
#include <sstream>

namespace sclcert {

int AngledComplex::add_vertex() { return (int)vertex_count_++; }

int AngledComplex::add_edge(int v_from, int v_to) {
  check(v_from >= 0 && v_from < (int)vertex_count_ && v_to >= 0 && v_to < (int)vertex_count_,
        Errc::MalformedComplex, "edge endpoint out of range");
  edges_.emplace_back(v_from, v_to);
  return (int)edges_.size() - 1;
}

int AngledComplex::add_face(const std::vector<int>& signed_edges) {
  check(!signed_edges.empty(), Errc::MalformedComplex, "face needs at least one side");
  Face f;
  for (int se : signed_edges) {
    int e = se >= 0 ? se : ~se;
    check(e < (int)edges_.size(), Errc::MalformedComplex, "face references unknown edge");
    f.boundary.push_back({e, se >= 0});
  }
  auto head = [&](DirEdge d) { return d.forward ? edges_[d.edge].second : edges_[d.edge].first; };
  auto tail = [&](DirEdge d) { return d.forward ? edges_[d.edge].first : edges_[d.edge].second; };
  size_t n = f.boundary.size();
  for (size_t i = 0; i < n; ++i) {
    DirEdge prev = f.boundary[(i + n - 1) % n];
    DirEdge cur = f.boundary[i];
    check(head(prev) == tail(cur), Errc::MalformedComplex, "face boundary is not a closed path");
    Corner c;
    c.vertex = tail(cur);
    c.in_halfedge = 2 * prev.edge + (prev.forward ? 1 : 0);
    c.out_halfedge = 2 * cur.edge + (cur.forward ? 0 : 1);
    c.angle = Rat(0);
    f.corners.push_back(c);
  }
  faces_.push_back(std::move(f));
  return (int)faces_.size() - 1;
}

void AngledComplex::set_angle(int face, int corner, Rat a) {
  check(face >= 0 && face < (int)faces_.size(), Errc::UnknownFace,
        "face #" + std::to_string(face));
  check(corner >= 0 && corner < (int)faces_[face].corners.size(), Errc::MalformedComplex,
        "corner index out of range");
  faces_[face].corners[corner].angle = a;
}

long long AngledComplex::euler_characteristic() const {
  return (long long)vertex_count_ - (long long)edges_.size() + (long long)faces_.size();
}

Rat AngledComplex::face_curvature(int f) const {
  check(f >= 0 && f < (int)faces_.size(), Errc::UnknownFace, "face #" + std::to_string(f));
  Rat k(2);
  for (const Corner& c : faces_[f].corners) k += c.angle - Rat(1);
  return k;
}

int AngledComplex::halfedges_at(int v) const {
  int n = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v) ++n;
    if (b == v) ++n;
  }
  return n;
}

int AngledComplex::corners_at(int v) const {
  int n = 0;
  for (const Face& f : faces_)
    for (const Corner& c : f.corners)
      if (c.vertex == v) ++n;
  return n;
}

int AngledComplex::link_euler_characteristic(int v) const {
  return halfedges_at(v) - corners_at(v);
}

Rat AngledComplex::angle_sum_at(int v) const {
  Rat s(0);
  for (const Face& f : faces_)
    for (const Corner& c : f.corners)
      if (c.vertex == v) s += c.angle;
  return s;
}

Rat AngledComplex::angle_sum_at(int v, const std::set<int>& faces) const {
  Rat s(0);
  for (int fi : faces)
    for (const Corner& c : faces_[fi].corners)
      if (c.vertex == v) s += c.angle;
  return s;
}

Rat AngledComplex::vertex_curvature(int v) const {
  check(v >= 0 && v < (int)vertex_count_, Errc::UnknownVertex, "vertex #" + std::to_string(v));
  return Rat(2) - Rat(link_euler_characteristic(v)) - angle_sum_at(v);
}

Rat AngledComplex::total_curvature() const {
  Rat k(0);
  for (int f = 0; f < (int)faces_.size(); ++f) k += face_curvature(f);
  for (int v = 0; v < (int)vertex_count_; ++v) k += vertex_curvature(v);
  return k;
}

bool AngledComplex::check_gauss_bonnet() const {
  return total_curvature() == Rat(2 * euler_characteristic());
}

Rat interior_curvature(const AngledComplex& X, const SubsurfaceSpec& spec) {
  for (int f : spec.faces)
    check(f >= 0 && f < X.num_faces(), Errc::InvalidSubsurface,
          "unknown face #" + std::to_string(f));
  for (int v : spec.vertices)
    check(v >= 0 && v < X.num_vertices(), Errc::InvalidSubsurface,
          "unknown vertex #" + std::to_string(v));

  // Boundary of the face subset: edge sides covered an odd number of times
  // count as boundary; a spec vertex must touch a boundary edge or carry a
  // free half-edge (an edge end not consumed by the subset's corners).
  std::map<int, int> cover;
  for (int fi : spec.faces)
    for (const auto& d : X.face(fi).boundary) cover[d.edge]++;
  std::set<int> boundary_vertices;
  for (auto [e, c] : cover) {
    if (c % 2 == 1) {
      boundary_vertices.insert(X.edge_from(e));
      boundary_vertices.insert(X.edge_to(e));
    }
  }
  for (int v : spec.vertices)
    check(boundary_vertices.count(v) > 0, Errc::InvalidSubsurface,
          "vertex #" + std::to_string(v) + " is not on the subsurface boundary");

  Rat k(2 * spec.chi);
  for (int v : spec.vertices) k += X.angle_sum_at(v, spec.faces) - Rat(1);
  return k;
}

std::string to_text(const AngledComplex& X) {
  std::ostringstream out;
  out << "vertices:";
  for (int v = 0; v < X.num_vertices(); ++v) out << " v" << v;
  out << "\n";
  for (int e = 0; e < X.num_edges(); ++e)
    out << "edges: e" << e << " v" << X.edge_from(e) << " v" << X.edge_to(e) << "\n";
  for (int f = 0; f < X.num_faces(); ++f) {
    out << "faces: f" << f;
    for (const auto& d : X.face(f).boundary)
      out << " " << (d.forward ? "e" : "-e") << d.edge;
    out << "\n";
  }
  for (int f = 0; f < X.num_faces(); ++f) {
    const auto& corners = X.face(f).corners;
    for (size_t c = 0; c < corners.size(); ++c)
      out << "angles: f" << f << " " << c << " " << corners[c].angle.num() << "/"
          << corners[c].angle.den() << "\n";
  }
  return out.str();
}

namespace {

int parse_id(const std::string& tok, char prefix, const char* what) {
  check(tok.size() > 1 && tok[0] == prefix, Errc::ParseError,
        std::string("expected ") + what + ", got \"" + tok + "\"");
  try {
    return std::stoi(tok.substr(1));
  } catch (...) {
    fail(Errc::ParseError, std::string("bad ") + what + " \"" + tok + "\"");
  }
}

}  // namespace

AngledComplex parse_angled_complex(const std::string& text) {
  AngledComplex X;
  std::istringstream in(text);
  std::string line;
  std::map<int, int> vmap, emap, fmap;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string where = "line " + std::to_string(lineno);
    if (key == "vertices:") {
      std::string tok;
      while (ls >> tok) vmap[parse_id(tok, 'v', "vertex id")] = X.add_vertex();
    } else if (key == "edges:") {
      std::string id, a, b;
      check(bool(ls >> id >> a >> b), Errc::ParseError, where + ": edges: <id> <from> <to>");
      int va = vmap.at(parse_id(a, 'v', "vertex id"));
      int vb = vmap.at(parse_id(b, 'v', "vertex id"));
      emap[parse_id(id, 'e', "edge id")] = X.add_edge(va, vb);
    } else if (key == "faces:") {
      std::string id;
      check(bool(ls >> id), Errc::ParseError, where + ": faces: <id> <cycle>");
      std::vector<int> cycle;
      std::string tok;
      while (ls >> tok) {
        bool neg = tok.size() > 1 && tok[0] == '-';
        int e = emap.at(parse_id(neg ? tok.substr(1) : tok, 'e', "edge id"));
        cycle.push_back(neg ? ~e : e);
      }
      fmap[parse_id(id, 'f', "face id")] = X.add_face(cycle);
    } else if (key == "angles:") {
      std::string fid, cs, rs;
      check(bool(ls >> fid >> cs >> rs), Errc::ParseError,
            where + ": angles: <face> <corner> <p>/<q>");
      auto slash = rs.find('/');
      long long p, q = 1;
      try {
        p = std::stoll(rs.substr(0, slash));
        if (slash != std::string::npos) q = std::stoll(rs.substr(slash + 1));
      } catch (...) {
        fail(Errc::ParseError, where + ": bad rational \"" + rs + "\"");
      }
      X.set_angle(fmap.at(parse_id(fid, 'f', "face id")), std::stoi(cs), Rat(p, q));
    } else {
      fail(Errc::ParseError, where + ": unknown section \"" + key + "\"");
    }
  }
  return X;
}

}  // namespace sclcert
