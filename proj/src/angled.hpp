#ifndef SCLCERT_ANGLED_HPP
#define SCLCERT_ANGLED_HPP

#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace sclcert {

// A combinatorial angled 2-complex. Angles live in units of pi as exact
// rationals; every curvature below is exact. Faces are combinatorial
// polygons with >= 1 side; monogons and bigons are fine. The complex is not
// required to be a surface: curvature and the Gauss-Bonnet identity make
// sense for any 2-complex, and the identity holds for every angle
// assignment.
class AngledComplex {
 public:
  struct DirEdge {
    int edge;
    bool forward;
  };
  struct Corner {
    int vertex;
    int in_halfedge;   // 2*edge + (arriving end)
    int out_halfedge;  // 2*edge + (leaving end)
    Rat angle;
  };
  struct Face {
    std::vector<DirEdge> boundary;  // closed edge path
    std::vector<Corner> corners;    // corner i sits between boundary[i-1] and boundary[i]
  };

  int add_vertex();
  int add_edge(int v_from, int v_to);
  // Boundary as signed edge indices: e >= 0 traverses edge e forward,
  // ~e (i.e. -e-1) traverses it backward. The path must be closed.
  int add_face(const std::vector<int>& signed_edges);

  void set_angle(int face, int corner, Rat a);

  int num_vertices() const { return (int)vertex_count_; }
  int num_edges() const { return (int)edges_.size(); }
  int num_faces() const { return (int)faces_.size(); }
  const Face& face(int f) const { return faces_[f]; }
  int edge_from(int e) const { return edges_[e].first; }
  int edge_to(int e) const { return edges_[e].second; }

  long long euler_characteristic() const;

  // kappa(f) = 2 + sum(angle - 1), in units of pi.
  Rat face_curvature(int f) const;
  // kappa(v) = 2 - chi(link) - sum of angles at v, in units of pi. The link
  // is the graph whose vertices are half-edges at v and whose edges are the
  // corners at v; its Euler characteristic is computed from those counts.
  Rat vertex_curvature(int v) const;
  Rat total_curvature() const;
  // Exact identity kappa(X) = 2 chi(X); returns the verdict.
  bool check_gauss_bonnet() const;

  int link_euler_characteristic(int v) const;
  int corners_at(int v) const;
  int halfedges_at(int v) const;
  Rat angle_sum_at(int v) const;

  // Sum of corner angles of the given faces at v.
  Rat angle_sum_at(int v, const std::set<int>& faces) const;

 private:
  size_t vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Face> faces_;
};

// A compact subsurface given by a face subset with its vertex set on the
// boundary, plus the declared Euler characteristic of the closed-up
// subsurface.
struct SubsurfaceSpec {
  std::set<int> faces;
  std::set<int> vertices;
  long long chi = 1;
};

// kappa_int(Lambda) = 2 chi + sum over the spec vertices of (total angle in
// the spec faces - 1), in units of pi. Verifies that the spec is sane:
// faces/vertices exist and every spec vertex lies on the boundary of the
// face subset.
Rat interior_curvature(const AngledComplex& X, const SubsurfaceSpec& spec);

// Textual format:
//   vertices: v0 v1 ...
//   edges: <id> <v_from> <v_to>
//   faces: <id> <signed edge cycle>     (e.g. f e0 e1 -e2)
//   angles: <face> <corner-index> <p>/<q>
std::string to_text(const AngledComplex& X);
AngledComplex parse_angled_complex(const std::string& text);

}  // namespace sclcert

#endif
