#pragma once

// Boxes: lattice points cut out by two diagonal bands
//   a <= y - x <= b,  c <= y + x <= d.
// A Box is always stored normalized: each bound is attained by some point of
// the box, which makes the quadruple unique for a given point set.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <vector>

#include "latiso/lattice.hpp"

namespace latiso {

/// Mathematical floor of num / den for den > 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

constexpr bool same_parity(std::int64_t p, std::int64_t q) { return ((p - q) & 1) == 0; }

/// Number of integers in [lo, hi] with the parity of p.
constexpr std::int64_t count_with_parity(std::int64_t lo, std::int64_t hi, std::int64_t p) {
  if (lo > hi) return 0;
  const std::int64_t first = same_parity(lo, p) ? lo : lo + 1;
  const std::int64_t last = same_parity(hi, p) ? hi : hi - 1;
  return first > last ? 0 : (last - first) / 2 + 1;
}

enum class BoxKind { B, Bhat };

inline const char* to_string(BoxKind k) { return k == BoxKind::B ? "B" : "Bhat"; }

/// Congruence class of a box: kind plus modulus with alpha <= beta.
struct StandardForm {
  BoxKind kind = BoxKind::B;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend constexpr bool operator==(const StandardForm&, const StandardForm&) = default;
  friend constexpr auto operator<=>(const StandardForm&, const StandardForm&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const StandardForm& f) {
  return os << to_string(f.kind) << '(' << f.alpha << ',' << f.beta << ')';
}

class Box {
 public:
  /// Tightens the bounds to the attained ones; throws EmptyBox when no lattice
  /// point satisfies both bands.
  static Box normalize(Coord a, Coord b, Coord c, Coord d) {
    for (Coord v : {a, b, c, d}) {
      if (v > 4 * kMaxCoord || v < -4 * kMaxCoord) {
        throw Error(ErrorKind::CoordinateOverflow, "box bound out of range");
      }
    }
    if (a > b || c > d) throw Error(ErrorKind::EmptyBox, "inverted bounds");
    // A single line in one direction fixes the parity in the other.
    for (int pass = 0; pass < 2; ++pass) {
      if (a == b) {
        if (!same_parity(c, a)) ++c;
        if (!same_parity(d, a)) --d;
      }
      if (c == d) {
        if (!same_parity(a, c)) ++a;
        if (!same_parity(b, c)) --b;
      }
      if (a > b || c > d) throw Error(ErrorKind::EmptyBox, "no lattice point in box");
    }
    return Box(a, b, c, d);
  }

  Coord a() const noexcept { return a_; }
  Coord b() const noexcept { return b_; }
  Coord c() const noexcept { return c_; }
  Coord d() const noexcept { return d_; }

  /// Width of the y - x band.
  std::int64_t alpha() const noexcept { return b_ - a_; }
  /// Width of the y + x band.
  std::int64_t beta() const noexcept { return d_ - c_; }

  bool contains(const Vertex& p) const {
    const Coord u = p.u(), v = p.v();
    return a_ <= u && u <= b_ && c_ <= v && v <= d_ && same_parity(u, v);
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Box(Coord a, Coord b, Coord c, Coord d) : a_(a), b_(b), c_(c), d_(d) {}
  Coord a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const Box& B) {
  return os << "B(" << B.a() << ',' << B.b() << ',' << B.c() << ',' << B.d() << ')';
}

/// B(alpha, beta) = B(0, alpha, 0, beta).
inline Box standard_box(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 0 || beta < 0) throw Error(ErrorKind::EmptyBox, "negative modulus");
  return Box::normalize(0, alpha, 0, beta);
}

/// Bhat(alpha, beta) = B(0, alpha, -1, beta - 1), alpha and beta even.
inline Box standard_box_hat(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 0 || beta < 0 || alpha % 2 != 0 || beta % 2 != 0) {
    throw Error(ErrorKind::EmptyBox, "Bhat needs even nonnegative modulus");
  }
  return Box::normalize(0, alpha, -1, beta - 1);
}

inline Box standard_box(const StandardForm& f) {
  return f.kind == BoxKind::B ? standard_box(f.alpha, f.beta)
                              : standard_box_hat(f.alpha, f.beta);
}

inline VertexSet box_to_set(const Box& B) {
  std::vector<Vertex> out;
  for (Coord u = B.a(); u <= B.b(); ++u) {
    const Coord v0 = same_parity(B.c(), u) ? B.c() : B.c() + 1;
    for (Coord v = v0; v <= B.d(); v += 2) out.push_back({(v - u) / 2, (u + v) / 2});
  }
  return VertexSet(std::move(out));
}

/// Points of B on two distinct extremal lines.
inline VertexSet corners(const Box& B) {
  std::vector<Vertex> out;
  for (Coord u : {B.a(), B.b()}) {
    for (Coord v : {B.c(), B.d()}) {
      if (same_parity(u, v)) out.push_back({(v - u) / 2, (u + v) / 2});
    }
  }
  return VertexSet(std::move(out));
}

inline StandardForm standard_form(const Box& B) {
  const BoxKind kind = corners(B).empty() ? BoxKind::Bhat : BoxKind::B;
  return {kind, std::min(B.alpha(), B.beta()), std::max(B.alpha(), B.beta())};
}

namespace detail {

inline std::int64_t narrow_checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorKind::CoordinateOverflow, "box quantity exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline __int128 floor_div128(__int128 num, __int128 den) {
  __int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace detail

inline std::int64_t box_size(const StandardForm& f) {
  const __int128 al = f.alpha, be = f.beta;
  if (f.kind == BoxKind::B) return detail::narrow_checked(detail::floor_div128(al * be + al + be + 2, 2));
  return detail::narrow_checked((al * be + al + be) / 2);
}

inline std::int64_t box_size(const Box& B) { return box_size(standard_form(B)); }

inline std::int64_t box_boundary_size(const StandardForm& f) { return f.alpha + f.beta + 4; }

inline std::int64_t box_boundary_size(const Box& B) { return B.alpha() + B.beta() + 4; }

/// Closed-form excess. With r = (alpha + beta)/2 and k = |beta - alpha|/2:
///   B:    floor((floor(r) - k^2) / 2)
///   Bhat: (r - k^2 - 2) / 2
/// Both are evaluated over a common denominator of 8 so no rounding occurs.
inline std::int64_t box_excess(const StandardForm& f) {
  const __int128 gap = f.beta - f.alpha;
  if (f.kind == BoxKind::B) {
    const __int128 floor_r = floor_div(f.alpha + f.beta, 2);
    return detail::narrow_checked(detail::floor_div128(4 * floor_r - gap * gap, 8));
  }
  return detail::narrow_checked(
      detail::floor_div128(2 * __int128{f.alpha + f.beta} - gap * gap - 8, 8));
}

inline std::int64_t box_excess(const Box& B) { return box_excess(standard_form(B)); }

/// Smallest box containing A.
inline Box enclosing_box(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "enclosing_box of empty set");
  Coord umin = a[0].u(), umax = umin, vmin = a[0].v(), vmax = vmin;
  for (const auto& p : a) {
    umin = std::min(umin, p.u());
    umax = std::max(umax, p.u());
    vmin = std::min(vmin, p.v());
    vmax = std::max(vmax, p.v());
  }
  return Box::normalize(umin, umax, vmin, vmax);
}

inline bool is_box(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_box of empty set");
  return static_cast<std::int64_t>(a.size()) == box_size(enclosing_box(a));
}

/// Sizes of B intersected with each standard line that meets it: first the
/// lines y - x = w for w in [a, b], then y + x = w for w in [c, d].
inline std::vector<std::int64_t> standard_line_counts(const Box& B) {
  std::vector<std::int64_t> out;
  for (Coord w = B.a(); w <= B.b(); ++w) {
    if (auto n = count_with_parity(B.c(), B.d(), w); n > 0) out.push_back(n);
  }
  for (Coord w = B.c(); w <= B.d(); ++w) {
    if (auto n = count_with_parity(B.a(), B.b(), w); n > 0) out.push_back(n);
  }
  return out;
}

/// |B ∩ L| for the four extremal lines, in the order a, b, c, d.
inline std::array<std::int64_t, 4> extremal_line_counts(const Box& B) {
  return {count_with_parity(B.c(), B.d(), B.a()), count_with_parity(B.c(), B.d(), B.b()),
          count_with_parity(B.a(), B.b(), B.c()), count_with_parity(B.a(), B.b(), B.d())};
}

/// Every normalized standard form with alpha <= beta <= max_modulus.
inline std::vector<StandardForm> standard_forms_up_to(std::int64_t max_modulus) {
  std::vector<StandardForm> out;
  for (std::int64_t al = 0; al <= max_modulus; ++al) {
    for (std::int64_t be = al; be <= max_modulus; ++be) {
      // B(0, beta) with beta odd collapses to B(0, beta - 1).
      if (al == 0 && be % 2 == 1) continue;
      out.push_back({BoxKind::B, al, be});
      if (al >= 2 && al % 2 == 0 && be % 2 == 0) out.push_back({BoxKind::Bhat, al, be});
    }
  }
  return out;
}

}  // namespace latiso
