#include "colorcode/sectors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

int sign_of(bool commute) { return commute ? 1 : -1; }

std::array<PauliOperator, 9> loop_operators(const std::array<WindingLoop, 3>& loops, std::size_t n) {
  std::array<PauliOperator, 9> out;
  for (Color c : kAllColors) {
    for (PauliKind k : kAllKinds) {
      out[static_cast<std::size_t>(3 * color_index(c) + static_cast<int>(k))] =
          string_operator(loops[static_cast<std::size_t>(color_index(c))].loop, k, n);
    }
  }
  return out;
}

DetectorSignature signature_from(const std::array<PauliOperator, 9>& loops, const PauliOperator& p) {
  DetectorSignature sig;
  for (std::size_t i = 0; i < 9; ++i) sig.signs[i] = sign_of(commutes(loops[i], p));
  return sig;
}

std::array<WindingLoop, 3> loops_around(const ColoredLattice& lattice, const Region& region) {
  return {find_winding_loop(lattice, region, Color::Red), find_winding_loop(lattice, region, Color::Green),
          find_winding_loop(lattice, region, Color::Blue)};
}

std::vector<char> enclosed_union(const ColoredLattice& lattice, const std::array<WindingLoop, 3>& loops) {
  std::vector<char> out(static_cast<std::size_t>(lattice.num_faces()), 0);
  for (const WindingLoop& w : loops) {
    for (int f : w.enclosed) out[static_cast<std::size_t>(f)] = 1;
  }
  return out;
}

void check_excitations(const StabilizerGroup& group, const PauliOperator& p, const Region& region,
                       const std::vector<char>& enclosed) {
  for (const FaceSyndrome& s : group.syndrome(p)) {
    if (!region.contains(s.face) && enclosed[static_cast<std::size_t>(s.face)]) {
      throw GeometryUnrealizable("excitation at face " + std::to_string(s.face) +
                                 " sits between the region and its detector loops");
    }
  }
}

std::vector<int> face_distances(const ColoredLattice& lattice, int source) {
  std::vector<int> dist(static_cast<std::size_t>(lattice.num_faces()), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : lattice.face_neighbors(f)) {
      if (dist[static_cast<std::size_t>(g)] < 0) {
        dist[static_cast<std::size_t>(g)] = dist[static_cast<std::size_t>(f)] + 1;
        queue.push(g);
      }
    }
  }
  return dist;
}

std::vector<int> color_distances(const ColorFaceGraph& graph, std::size_t num_faces, int source) {
  std::vector<int> dist(num_faces, -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (const ColorLink& link : graph.adjacency[static_cast<std::size_t>(f)]) {
      if (dist[static_cast<std::size_t>(link.face)] < 0) {
        dist[static_cast<std::size_t>(link.face)] = dist[static_cast<std::size_t>(f)] + 1;
        queue.push(link.face);
      }
    }
  }
  return dist;
}

int middle_face(const ColoredLattice& lattice) {
  const auto f = lattice.face_at_brick(lattice.geometry().bricks_x / 2, lattice.geometry().rows / 2);
  if (!f) throw GeometryUnrealizable("lattice has no middle face");
  return *f;
}

// Face at half-brick offset x0 in row j.
int face_at_offset(const ColoredLattice& lattice, int x0, int row) {
  if (((x0 - row) % 2 + 2) % 2 != 0) throw GeometryUnrealizable("offset and row parity disagree");
  const auto f = lattice.face_at_brick((x0 - (row & 1)) / 2, row);
  if (!f) {
    throw GeometryUnrealizable("lattice too small: no face at offset " + std::to_string(x0) + " row " +
                               std::to_string(row));
  }
  return *f;
}

ColorString column_string(const ColoredLattice& lattice, Color color, int x0, int first_row, int faces) {
  std::vector<int> ids;
  for (int s = 0; s < faces; ++s) ids.push_back(face_at_offset(lattice, x0, first_row + 2 * s));
  return string_through(lattice, color, ids);
}

PauliOperator product_over(const std::vector<std::pair<Color, PauliKind>>& parts, std::size_t n,
                           const std::function<const ColorString&(Color)>& string_of) {
  PauliOperator out(n);
  for (const auto& [c, k] : parts) out = multiply(out, string_operator(string_of(c), k, n));
  return out;
}

}  // namespace

bool DetectorSignature::is_vacuum() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

DetectorSignature DetectorSignature::operator*(const DetectorSignature& other) const {
  DetectorSignature out;
  for (std::size_t i = 0; i < 9; ++i) out.signs[i] = signs[i] * other.signs[i];
  return out;
}

std::string to_string(const DetectorSignature& sig) {
  std::string out;
  for (std::size_t i = 0; i < 9; ++i) {
    if (i > 0 && i % 3 == 0) out.push_back('|');
    out.push_back(sig.signs[i] > 0 ? '+' : '-');
  }
  return out;
}

DetectorSignature detector_signature(const ColoredLattice& lattice, const StabilizerGroup& group,
                                     const PauliOperator& p, const Region& region) {
  const auto loops = loops_around(lattice, region);
  check_excitations(group, p, region, enclosed_union(lattice, loops));
  return signature_from(loop_operators(loops, group.num_qubits()), p);
}

std::vector<std::pair<Color, PauliKind>> reference_constituents(SectorLabel a) {
  using C = Color;
  using K = PauliKind;
  switch (a) {
    case SectorLabel::One:
      return {};
    case SectorLabel::F1:
      return {{C::Red, K::X}, {C::Blue, K::Z}};
    case SectorLabel::F2:
      return {{C::Red, K::Z}, {C::Blue, K::X}};
    case SectorLabel::F3:
      return {{C::Blue, K::Z}, {C::Green, K::Y}};
    case SectorLabel::F4:
      return {{C::Red, K::Z}, {C::Green, K::Y}};
    case SectorLabel::F5:
      return {{C::Blue, K::X}, {C::Green, K::Z}};
    case SectorLabel::F6:
      return {{C::Blue, K::X}, {C::Green, K::Y}};
    default:
      return {{label_color(a), label_kind(a)}};
  }
}

SectorLab::SectorLab(const ColoredLattice& lattice, const StabilizerGroup& group, DetectorOptions options)
    : lattice_(&lattice), group_(&group) {
  const int center = options.center_face >= 0 ? options.center_face : middle_face(lattice);
  region_ = disk_region(lattice, center, options.region_radius);
  loops_ = loops_around(lattice, region_);
  enclosed_any_ = enclosed_union(lattice, loops_);

  const std::vector<int> from_center = face_distances(lattice, center);
  const auto num_faces = static_cast<std::size_t>(lattice.num_faces());
  for (Color c : kAllColors) {
    int start = -1;
    for (int f : region_.faces()) {
      if (lattice.face(f).color != c) continue;
      if (start < 0 || from_center[static_cast<std::size_t>(f)] < from_center[static_cast<std::size_t>(start)]) {
        start = f;
      }
    }
    if (start < 0) {
      throw GeometryUnrealizable("detector region holds no " + std::string(color_name(c)) + " face");
    }
    const ColorFaceGraph graph = same_color_face_graph(lattice, c);
    const std::vector<int> dist = color_distances(graph, num_faces, start);
    int far = -1;
    for (int f : graph.nodes) {
      if (enclosed_any_[static_cast<std::size_t>(f)] || dist[static_cast<std::size_t>(f)] < 0) continue;
      if (far < 0 || dist[static_cast<std::size_t>(f)] > dist[static_cast<std::size_t>(far)]) far = f;
    }
    if (far < 0) throw GeometryUnrealizable("no face outside the detector loops");
    reference_strings_[static_cast<std::size_t>(color_index(c))] = find_string(lattice, graph, start, far);
  }

  const auto ops = loop_operators(loops_, group.num_qubits());
  for (SectorLabel a : all_labels()) {
    const PauliOperator p = reference(a);
    check_excitations(group, p, region_, enclosed_any_);
    reference_signatures_[static_cast<std::size_t>(label_index(a))] = signature_from(ops, p);
    table_.emplace(reference_signatures_[static_cast<std::size_t>(label_index(a))], a);
  }
}

PauliOperator SectorLab::reference(SectorLabel a) const {
  return product_over(reference_constituents(a), group_->num_qubits(),
                      [this](Color c) -> const ColorString& { return reference_string(c); });
}

DetectorSignature SectorLab::signature(const PauliOperator& p) const {
  check_excitations(*group_, p, region_, enclosed_any_);
  return signature_from(loop_operators(loops_, group_->num_qubits()), p);
}

SectorLabel SectorLab::classify(const DetectorSignature& sig) const {
  const auto it = table_.find(sig);
  if (it == table_.end()) throw UnrealizableSignature("no sector has signature " + to_string(sig));
  return it->second;
}

SectorLabel SectorLab::fuse_measure(SectorLabel a, SectorLabel b) const {
  return classify(signature(multiply(reference(a), reference(b))));
}

Orientation parse_orientation(std::string_view s) {
  if (s == "left" || s == "LeftOf") return Orientation::LeftOf;
  if (s == "right" || s == "RightOf") return Orientation::RightOf;
  throw ParseError("orientation must be left or right, got '" + std::string(s) + "'");
}

std::string_view orientation_name(Orientation o) { return o == Orientation::LeftOf ? "left" : "right"; }

namespace {

constexpr int kAnchorOffset[3] = {12, 13, 14};  // red, green, blue columns
constexpr int kAnchorRow[3] = {0, 1, 0};
constexpr int kAnchorFaces = 5;
constexpr int kLegFaces = 3;

}  // namespace

BraidingGeometry::BraidingGeometry(const ColoredLattice& lattice, int separation)
    : n_(static_cast<std::size_t>(lattice.num_vertices())) {
  if (separation % 6 != 0 || separation < 6 || separation > 12) {
    throw GeometryUnrealizable("braiding separation must be 6 or 12, got " + std::to_string(separation));
  }
  const Geometry& g = lattice.geometry();
  if (g.bricks_x < 12 || g.rows < 12 || 2 * g.bricks_x < 17 + separation) {
    throw GeometryUnrealizable("lattice " + std::to_string(g.bricks_x) + "x" + std::to_string(g.rows) +
                               " too small for braiding at separation " + std::to_string(separation));
  }
  for (Color c : kAllColors) {
    const auto i = static_cast<std::size_t>(color_index(c));
    const int x0 = kAnchorOffset[i];
    const int row = kAnchorRow[i];
    anchors_[i] = column_string(lattice, c, x0, row, kAnchorFaces);
    const ColorString leg = column_string(lattice, c, x0, row, kLegFaces);
    for (int side = 0; side < 2; ++side) {
      const int target = side == 0 ? x0 - separation : x0 + separation;
      const ColorString target_leg = column_string(lattice, c, target, row, kLegFaces);
      const ColorString connector = find_string(lattice, c, leg.end(), target_leg.end());
      transports_[i][static_cast<std::size_t>(side)] = concat(concat(leg, connector), reversed(target_leg));
    }
  }
}

PauliOperator BraidingGeometry::anchor_operator(SectorLabel a) const {
  return product_over(reference_constituents(a), n_, [this](Color c) -> const ColorString& { return anchor(c); });
}

PauliOperator BraidingGeometry::transport_operator(SectorLabel b, Orientation o) const {
  return product_over(reference_constituents(b), n_,
                      [this, o](Color c) -> const ColorString& { return transport(c, o); });
}

int braiding_sign(const BraidingGeometry& geometry, Color c1, PauliKind k1, Color c2, PauliKind k2,
                  Orientation orientation) {
  return braiding_sign(geometry, boson_label(c1, k1), boson_label(c2, k2), orientation);
}

int braiding_sign(const BraidingGeometry& geometry, SectorLabel a, SectorLabel b, Orientation orientation) {
  return sign_of(commutes(geometry.anchor_operator(a), geometry.transport_operator(b, orientation)));
}

int monodromy_measure(const BraidingGeometry& geometry, SectorLabel a, SectorLabel b) {
  return braiding_sign(geometry, a, b, Orientation::LeftOf) * braiding_sign(geometry, a, b, Orientation::RightOf);
}

namespace {

constexpr int kFermionOffset[3] = {12, 13, 11};  // red, green, blue
constexpr int kFermionRow[3] = {0, 1, 1};

}  // namespace

FermionGeometry::FermionGeometry(const ColoredLattice& lattice, int truncation)
    : lattice_(&lattice), truncation_(truncation) {
  if (truncation < 2) throw GeometryUnrealizable("truncation must be at least 2");
  const Geometry& g = lattice.geometry();
  if (g.bricks_x < 8 || g.rows < 2 * truncation + 4) {
    throw GeometryUnrealizable("lattice too small for truncation " + std::to_string(truncation));
  }
  for (Color c : kAllColors) {
    const auto i = static_cast<std::size_t>(color_index(c));
    columns_[i] = column_string(lattice, c, kFermionOffset[i], kFermionRow[i], truncation + 1);
  }
}

ColorString FermionGeometry::shortened(Color c) const {
  const ColorString& full = column(c);
  ColorString out = full;
  out.faces.erase(out.faces.begin());
  out.vertices.erase(out.vertices.begin(), out.vertices.begin() + 2);
  return out;
}

PauliOperator FermionGeometry::column_stabilizer(const StabilizerGroup& group, Color c, bool k, bool j) const {
  PauliOperator out(group.num_qubits());
  const ColorString& s = column(c);
  for (std::size_t idx = 1; idx < s.faces.size(); ++idx) {
    const auto slot = group.slot_of_face(s.faces[idx]);
    if (!slot) throw InvalidLattice("column face has no stabilizer");
    if (k) out = multiply(out, group.generators()[static_cast<std::size_t>(group.k_index(*slot))]);
    if (j) out = multiply(out, group.generators()[static_cast<std::size_t>(group.j_index(*slot))]);
  }
  return out;
}

int FermionGeometry::vertex_at(int x, int y) const {
  if (lattice_->is_torus()) {
    const int width = 2 * lattice_->geometry().bricks_x;
    x = ((x % width) + width) % width;
    y = ((y % lattice_->geometry().rows) + lattice_->geometry().rows) % lattice_->geometry().rows;
  }
  for (int v = 0; v < lattice_->num_vertices(); ++v) {
    if (lattice_->vertex(v).x == x && lattice_->vertex(v).y == y) return v;
  }
  throw GeometryUnrealizable("no vertex at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}

bool rx_bz_identity_holds(const ColoredLattice& lattice, const StabilizerGroup& group, int truncation,
                          bool with_stabilizers) {
  const FermionGeometry geo(lattice, truncation);
  const std::size_t n = group.num_qubits();
  PauliOperator lhs = multiply(string_operator(geo.column(Color::Red), PauliKind::X, n),
                               string_operator(geo.column(Color::Blue), PauliKind::Z, n));
  if (with_stabilizers) lhs = multiply(lhs, geo.column_stabilizer(group, Color::Red, false, true));

  const ColorString& red = geo.column(Color::Red);
  const int v0 = red.vertices[0];
  const int v1 = red.vertices[1];
  const int top = geo.vertex_at(lattice.vertex(v0).x, kFermionRow[0] + 2 * truncation + 1);
  PauliOperator sigma = multiply(PauliOperator::single(static_cast<std::size_t>(v0), PauliKind::X, n),
                                 PauliOperator::single(static_cast<std::size_t>(v1), PauliKind::X, n));
  sigma = multiply(sigma, PauliOperator::single(static_cast<std::size_t>(v1), PauliKind::Z, n));
  sigma = multiply(sigma, PauliOperator::single(static_cast<std::size_t>(top), PauliKind::Z, n));

  const PauliOperator rhs = multiply(multiply(sigma, string_operator(geo.shortened(Color::Red), PauliKind::Y, n)),
                                     string_operator(geo.column(Color::Green), PauliKind::Z, n));
  return lhs == rhs;
}

std::vector<std::pair<SectorLabel, SectorLabel>> fermion_alternatives(SectorLabel fermion) {
  using L = SectorLabel;
  switch (fermion) {
    case L::F1:
      return {{L::RY, L::GZ}, {L::GX, L::BY}};
    case L::F2:
      return {{L::RY, L::GX}, {L::GZ, L::BY}};
    case L::F3:
      return {{L::GX, L::RZ}, {L::BX, L::RY}};
    case L::F4:
      return {{L::GX, L::BZ}, {L::RX, L::BY}};
    case L::F5:
      return {{L::RX, L::GY}, {L::BY, L::RZ}};
    case L::F6:
      return {{L::RX, L::GZ}, {L::RY, L::BZ}};
    default:
      throw ParseError("label " + std::string(label_name(fermion)) + " is not a fermion");
  }
}

std::vector<FermionIdentity> fermion_equivalence_check(const ColoredLattice& lattice, const StabilizerGroup& group,
                                                       int truncation) {
  const FermionGeometry geo(lattice, truncation);
  const std::size_t n = group.num_qubits();
  const int top_row = 2 * truncation + 1;
  auto is_local = [&](const PauliOperator& p) {
    const std::vector<int> supp = support(p);
    if (supp.size() > 4) return false;
    return std::all_of(supp.begin(), supp.end(), [&](int v) {
      const int y = lattice.vertex(v).y;
      return y <= 2 || y >= top_row;
    });
  };
  auto pair_operator = [&](SectorLabel a, SectorLabel b, int variant) {
    const ColorString sa = (variant & 1) ? geo.shortened(label_color(a)) : geo.column(label_color(a));
    const ColorString sb = (variant & 2) ? geo.shortened(label_color(b)) : geo.column(label_color(b));
    return multiply(string_operator(sa, label_kind(a), n), string_operator(sb, label_kind(b), n));
  };

  std::vector<FermionIdentity> out;
  for (SectorLabel f : {SectorLabel::F1, SectorLabel::F2, SectorLabel::F3, SectorLabel::F4, SectorLabel::F5,
                        SectorLabel::F6}) {
    const auto parts = reference_constituents(f);
    const std::pair<SectorLabel, SectorLabel> lhs_pair{boson_label(parts[0].first, parts[0].second),
                                                       boson_label(parts[1].first, parts[1].second)};
    for (const auto& rhs_pair : fermion_alternatives(f)) {
      FermionIdentity best;
      best.fermion = f;
      best.lhs = lhs_pair;
      best.rhs = rhs_pair;
      std::size_t best_size = std::numeric_limits<std::size_t>::max();
      for (Color column : kAllColors) {
        for (int kj = 0; kj < 4; ++kj) {
          const PauliOperator m = geo.column_stabilizer(group, column, (kj & 1) != 0, (kj & 2) != 0);
          for (int variant = 0; variant < 16; ++variant) {
            const PauliOperator lhs = pair_operator(lhs_pair.first, lhs_pair.second, variant & 3);
            const PauliOperator rhs = pair_operator(rhs_pair.first, rhs_pair.second, variant >> 2);
            const PauliOperator residual = multiply(multiply(lhs, m), inverse(rhs));
            if (!is_local(residual)) continue;
            const std::size_t size = support(residual).size();
            if (size >= best_size) continue;
            best_size = size;
            best.stabilizer_column = column;
            best.uses_k = (kj & 1) != 0;
            best.uses_j = (kj & 2) != 0;
            best.lhs_operator = lhs;
            best.rhs_operator = rhs;
            best.deformation = m;
            best.residual = residual;
            best.residual_support = support(residual);
            best.holds = multiply(lhs, m) == multiply(residual, rhs);
          }
        }
      }
      out.push_back(std::move(best));
    }
  }
  return out;
}

NonTracialityWitness nontraciality_witness(const ColoredLattice& lattice, const StabilizerGroup& group) {
  const std::size_t n = group.num_qubits();
  const int center = middle_face(lattice);
  int f0 = -1;
  const std::vector<int> dist = face_distances(lattice, center);
  for (int f = 0; f < lattice.num_faces(); ++f) {
    if (lattice.face(f).color != Color::Green) continue;
    if (f0 < 0 || dist[static_cast<std::size_t>(f)] < dist[static_cast<std::size_t>(f0)]) f0 = f;
  }
  const WindingLoop loop = find_winding_loop(lattice, disk_region(lattice, f0, 1), Color::Red);
  std::vector<char> enclosed(static_cast<std::size_t>(lattice.num_faces()), 0);
  for (int f : loop.enclosed) enclosed[static_cast<std::size_t>(f)] = 1;

  const ColorFaceGraph green = same_color_face_graph(lattice, Color::Green);
  const std::vector<int> gdist = color_distances(green, static_cast<std::size_t>(lattice.num_faces()), f0);
  int f1 = -1;
  for (int f : green.nodes) {
    if (enclosed[static_cast<std::size_t>(f)]) continue;
    if (f1 < 0 || gdist[static_cast<std::size_t>(f)] < gdist[static_cast<std::size_t>(f1)]) f1 = f;
  }
  const ColorString out_path = find_string(lattice, green, f0, f1);
  // Return through a different neighbour of f1 so the two strings are distinct paths.
  const int came_from = out_path.faces[out_path.faces.size() - 2];
  int via = -1;
  for (const ColorLink& link : green.adjacency[static_cast<std::size_t>(f1)]) {
    if (link.face == came_from) continue;
    if (via < 0 || gdist[static_cast<std::size_t>(link.face)] < gdist[static_cast<std::size_t>(via)]) via = link.face;
  }
  const ColorString back_path = concat(string_through(lattice, Color::Green, {f1, via}), find_string(lattice, green, via, f0));

  NonTracialityWitness w;
  w.loop = string_operator(loop.loop, PauliKind::X, n);
  w.first = string_operator(out_path, PauliKind::Z, n);
  w.second = string_operator(back_path, PauliKind::Z, n);
  const PauliOperator ordered = multiply(multiply(w.loop, w.first), w.second);
  const PauliOperator reordered = multiply(multiply(w.second, w.loop), w.first);
  w.value = group.omega0(ordered);
  w.reorder_negates = reordered == ordered.scaled(2);
  return w;
}

}  // namespace colorcode
