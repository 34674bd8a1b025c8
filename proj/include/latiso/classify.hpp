#pragma once

// Per-set classifiers: saturation, forbidden configurations, cone cover of the
// complement, excess, minimality (three equivalent routes), efficiency,
// dead / mortal / uniquely minimal.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latiso/boxes.hpp"
#include "latiso/lattice.hpp"
#include "latiso/symmetry.hpp"
#include "latiso/wangwang.hpp"

namespace latiso {

// ---------------------------------------------------------------------------
// Saturation

/// Vertices outside A that can change |boundary| by less than 4 when added:
/// everything within l1-distance 2 of A.
inline VertexSet saturation_candidates(const VertexSet& a) {
  return set_difference(closed_neighborhood(closed_neighborhood(a)), a);
}

/// |boundary(A + v)| - |boundary(A)| for v outside A, given N(A) = A + boundary(A).
inline std::int64_t boundary_delta(const VertexSet& closed_nbhd, const Vertex& v) {
  std::int64_t delta = closed_nbhd.contains(v) ? -1 : 0;
  for (const auto& s : kL1Steps) {
    if (!closed_nbhd.contains(v + s)) ++delta;
  }
  return delta;
}

inline bool is_saturated(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_saturated of empty set");
  const VertexSet nb = closed_neighborhood(a);
  for (const auto& v : saturation_candidates(a)) {
    if (boundary_delta(nb, v) <= 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Forbidden configurations

/// A pattern (F, N): F must lie in A and N must avoid A.
struct Configuration {
  char id;
  std::vector<Vertex> filled;
  std::vector<Vertex> empty;
};

/// Four patterns no saturated set contains. For each, adding any vertex of N
/// to a set containing the pattern leaves the boundary size unchanged or
/// smaller, since at least three of its four neighbors are already in the
/// closed neighborhood of F.
inline const std::array<Configuration, 4>& forbidden_configurations() {
  static const std::array<Configuration, 4> kConfigs{{
      // Two vertices diagonal to (0,0) on the same side; the middle is missing.
      {'a', {{0, 0}, {1, 1}, {1, -1}}, {{1, 0}}},
      // A horizontal domino with a diagonal neighbor of one end.
      {'b', {{0, 0}, {1, 0}, {-1, 1}}, {{0, 1}}},
      // Three in a row with a gap beside the middle.
      {'c', {{0, 1}, {0, 0}, {0, -1}}, {{1, 0}}},
      // Two vertices at distance two in a row, one with a neighbor above.
      {'d', {{-1, 0}, {1, 0}, {-1, 1}}, {{0, 0}}},
  }};
  return kConfigs;
}

struct ForbiddenWitness {
  char configuration;
  Isometry placement;  // maps the pattern into A
};

inline std::optional<ForbiddenWitness> find_forbidden_configuration(const VertexSet& a) {
  for (const auto& cfg : forbidden_configurations()) {
    for (const auto& sym : kPointSymmetries) {
      const Vertex base = sym(cfg.filled.front());
      for (const auto& anchor : a) {
        const Isometry g{sym, anchor - base};
        bool ok = true;
        for (const auto& f : cfg.filled) {
          if (!a.contains(g(f))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (const auto& e : cfg.empty) {
          if (a.contains(g(e))) {
            ok = false;
            break;
          }
        }
        if (ok) return ForbiddenWitness{cfg.id, g};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cones

enum class ConeOrientation { Above, Below, Left, Right };

inline constexpr std::array<ConeOrientation, 4> kConeOrientations{
    ConeOrientation::Above, ConeOrientation::Below, ConeOrientation::Left,
    ConeOrientation::Right};

inline const char* to_string(ConeOrientation o) {
  switch (o) {
    case ConeOrientation::Above: return "above";
    case ConeOrientation::Below: return "below";
    case ConeOrientation::Left: return "left";
    case ConeOrientation::Right: return "right";
  }
  return "?";
}

/// The cone above (0,0) is {y - x >= 0, y + x >= 0}; the others are its
/// quarter turns, placed at the apex by translation.
struct Cone {
  Vertex apex;
  ConeOrientation orientation;

  bool contains(const Vertex& p) const {
    const Coord du = p.u() - apex.u();
    const Coord dv = p.v() - apex.v();
    switch (orientation) {
      case ConeOrientation::Above: return du >= 0 && dv >= 0;
      case ConeOrientation::Below: return du <= 0 && dv <= 0;
      case ConeOrientation::Left: return du >= 0 && dv <= 0;
      case ConeOrientation::Right: return du <= 0 && dv >= 0;
    }
    return false;
  }
};

/// A cone at v disjoint from A, if one exists.
inline std::optional<Cone> free_cone_at(const VertexSet& a, const Vertex& v) {
  for (auto o : kConeOrientations) {
    const Cone cone{v, o};
    bool hit = false;
    for (const auto& p : a) {
      if (cone.contains(p)) {
        hit = true;
        break;
      }
    }
    if (!hit) return cone;
  }
  return std::nullopt;
}

/// Whether the complement of A is a union of cones. Vertices outside enc(A)
/// lie in one of the four cones bounding enc(A), so only holes of enc(A) are
/// checked.
inline bool complement_is_union_of_cones(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "complement_is_union_of_cones of empty set");
  const VertexSet holes = set_difference(box_to_set(enclosing_box(a)), a);
  for (const auto& h : holes) {
    if (!free_cone_at(a, h)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Excess and minimality

/// |A| minus the size of the smallest minimal set with the same boundary size.
inline std::int64_t excess_of_set(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "excess_of_set of empty set");
  const auto b = static_cast<std::int64_t>(boundary_size(a));
  try {
    return static_cast<std::int64_t>(a.size()) - min_size_for_boundary(b);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoSuchBoundary) {
      throw std::logic_error("nonempty set with unrealizable boundary size " + std::to_string(b));
    }
    throw;
  }
}

struct MinimalityCertificate {
  std::int64_t input_size = 0;
  std::int64_t boundary_size = 0;
  Box enc = Box::normalize(0, 0, 0, 0);
  std::int64_t enc_boundary_size = 0;
  std::int64_t n_removed = 0;   // |enc(A) \ A|
  std::int64_t enc_excess = 0;  // Exc(enc(A))
  bool cone_check = false;
  bool verdict = false;
};

enum class Verify { Off, On };

/// Boundary of A equals that of enc(A) and enc(A) has room for the holes.
inline bool is_minimal_by_enclosing_box(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_minimal of empty set");
  const Box enc = enclosing_box(a);
  const StandardForm f = standard_form(enc);
  const std::int64_t holes = box_size(f) - static_cast<std::int64_t>(a.size());
  if (holes > box_excess(f)) return false;
  return static_cast<std::int64_t>(boundary_size(a)) == box_boundary_size(f);
}

/// Complement is a union of cones and enc(A) has room for the holes.
inline bool is_minimal_by_cones(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_minimal of empty set");
  const Box enc = enclosing_box(a);
  const StandardForm f = standard_form(enc);
  const std::int64_t holes = box_size(f) - static_cast<std::int64_t>(a.size());
  if (holes > box_excess(f)) return false;
  return complement_is_union_of_cones(a);
}

inline bool is_minimal_by_excess(const VertexSet& a) { return excess_of_set(a) >= 0; }

/// Minimality through the enclosing box. With Verify::On the cone route and the
/// excess route are evaluated too and any disagreement throws std::logic_error.
inline bool is_minimal(const VertexSet& a, Verify verify = Verify::Off) {
  const bool verdict = is_minimal_by_enclosing_box(a);
  if (verify == Verify::On) {
    const bool by_cones = is_minimal_by_cones(a);
    const bool by_excess = is_minimal_by_excess(a);
    if (by_cones != verdict || by_excess != verdict) {
      std::ostringstream os;
      os << "minimality routes disagree on " << a << ": enc=" << verdict
         << " cones=" << by_cones << " excess=" << by_excess;
      throw std::logic_error(os.str());
    }
  }
  return verdict;
}

inline MinimalityCertificate minimality_certificate(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "minimality_certificate of empty set");
  MinimalityCertificate c;
  c.input_size = static_cast<std::int64_t>(a.size());
  c.boundary_size = static_cast<std::int64_t>(boundary_size(a));
  c.enc = enclosing_box(a);
  const StandardForm f = standard_form(c.enc);
  c.enc_boundary_size = box_boundary_size(f);
  c.n_removed = box_size(f) - c.input_size;
  c.enc_excess = box_excess(f);
  c.cone_check = complement_is_union_of_cones(a);
  c.verdict = c.boundary_size == c.enc_boundary_size && c.n_removed <= c.enc_excess;
  return c;
}

inline std::ostream& operator<<(std::ostream& os, const MinimalityCertificate& c) {
  return os << "size " << c.input_size << ", boundary " << c.boundary_size << ", enc "
            << standard_form(c.enc) << " boundary " << c.enc_boundary_size << ", N = "
            << c.n_removed << ", E = " << c.enc_excess << ", cones "
            << (c.cone_check ? "yes" : "no") << ", " << (c.verdict ? "minimal" : "not minimal");
}

// ---------------------------------------------------------------------------
// Efficient, dead, mortal, uniquely minimal

/// Wang-Wang boxes B(n,n), B(n,n+1) and B(m-1,m+1) for odd m.
inline bool is_efficient_form(const StandardForm& f) {
  if (f.kind != BoxKind::B) return false;
  const auto gap = f.beta - f.alpha;
  return gap == 0 || gap == 1 || (gap == 2 && f.alpha % 2 == 0);
}

inline bool is_efficient(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_efficient of empty set");
  return is_box(a) && is_efficient_form(standard_form(enclosing_box(a)));
}

namespace detail {

inline void require_minimal(const VertexSet& a, const char* what) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, std::string(what) + " of empty set");
  if (!is_minimal(a)) throw Error(ErrorKind::NotMinimal, std::string(what) + " needs a minimal set");
}

}  // namespace detail

/// A minimal set with no minimal one-vertex extension: an inefficient box.
inline bool is_dead(const VertexSet& a) {
  detail::require_minimal(a, "is_dead");
  return is_box(a) && !is_efficient_form(standard_form(enclosing_box(a)));
}

/// Finite life expectancy: decided by whether the enclosing box is dead.
inline bool is_mortal(const VertexSet& a) {
  detail::require_minimal(a, "is_mortal");
  // enc(A) of a minimal set is minimal and a box, so it is dead iff inefficient.
  return !is_efficient_form(standard_form(enclosing_box(a)));
}

inline bool is_uniquely_minimal_form(const StandardForm& f) {
  if (f.kind != BoxKind::B) return false;
  return (f.alpha == f.beta && f.alpha % 2 == 0) || f.beta == f.alpha + 1;
}

inline bool is_uniquely_minimal(const VertexSet& a) {
  detail::require_minimal(a, "is_uniquely_minimal");
  return is_box(a) && is_uniquely_minimal_form(standard_form(enclosing_box(a)));
}

}  // namespace latiso
