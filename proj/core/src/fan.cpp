#include "toric/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

std::vector<int> members(RaySet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

RaySet make_set(const std::vector<int>& indices) {
  RaySet s = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32) throw InputError("InvalidIndex", "ray index " + std::to_string(i));
    s |= RaySet{1} << i;
  }
  return s;
}

Fan::Fan(std::vector<std::vector<long>> rays, std::vector<std::vector<int>> max_cones,
         std::string name)
    : dim_(rays.empty() ? 0 : static_cast<int>(rays[0].size())),
      rays_(std::move(rays)),
      max_cones_(std::move(max_cones)),
      name_(std::move(name)) {
  if (rays_.size() > 32) throw InputError("InvalidFan", "at most 32 rays are supported");
  std::set<RaySet> all{0};
  for (const auto& c : max_cones_) {
    RaySet m = 0;
    for (int i : c)
      if (i >= 0 && i < num_rays()) m |= RaySet{1} << i;
    max_masks_.push_back(m);
    // all faces of m
    for (RaySet s = m;; s = (s - 1) & m) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  cones_.assign(all.begin(), all.end());
  std::set<RaySet> prim;
  for (RaySet c : cones_) {
    int top = c ? 31 - __builtin_clz(c) : -1;
    for (int j = top + 1; j < num_rays(); ++j) {
      RaySet s = c | (RaySet{1} << j);
      if (is_cone_rayset(s)) continue;
      bool minimal = true;
      for (int i : members(s))
        if (!is_cone_rayset(s & ~(RaySet{1} << i))) {
          minimal = false;
          break;
        }
      if (minimal) prim.insert(s);
    }
  }
  primitive_.assign(prim.begin(), prim.end());
}

bool Fan::is_cone_rayset(RaySet I) const {
  if (I == 0) return true;
  return std::any_of(max_masks_.begin(), max_masks_.end(),
                     [I](RaySet m) { return (I & ~m) == 0; });
}

namespace {

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

}  // namespace

FanDiagnostics validate_fan(const Fan& f) {
  FanDiagnostics d;
  const int n = f.dim();
  const int k = f.num_rays();
  if (n < 1 || k == 0) {
    d.dimensions_ok = false;
    d.problems.push_back("fan needs at least one ray of positive dimension");
    return d;
  }
  for (int i = 0; i < k; ++i) {
    const auto& v = f.rays()[i];
    if (static_cast<int>(v.size()) != n) {
      d.dimensions_ok = false;
      d.problems.push_back("ray " + std::to_string(i) + " has wrong dimension");
      continue;
    }
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    if (g != 1) {
      d.primitive = false;
      d.problems.push_back("primitivity failure at ray " + std::to_string(i));
    }
    for (int j = 0; j < i; ++j)
      if (f.rays()[j] == v) {
        d.distinct_rays = false;
        d.problems.push_back("ray " + std::to_string(i) + " repeats ray " + std::to_string(j));
      }
  }
  if (!d.dimensions_ok) return d;
  if (f.max_cones().empty()) {
    d.complete = false;
    d.problems.push_back("no maximal cones");
    return d;
  }

  std::vector<RaySet> masks;
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    const auto& cone = f.max_cones()[c];
    std::set<int> uniq(cone.begin(), cone.end());
    bool idx_ok = uniq.size() == cone.size();
    for (int i : cone) idx_ok = idx_ok && i >= 0 && i < k;
    if (!idx_ok) {
      d.indices_ok = false;
      d.problems.push_back("malformed cone index in cone " + show(cone));
      masks.push_back(0);
      continue;
    }
    masks.push_back(make_set(cone));
    if (static_cast<int>(cone.size()) != n) {
      d.smooth = false;
      d.problems.push_back("cone " + show(cone) + " is not full-dimensional simplicial");
      continue;
    }
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = f.rays()[cone[j]][i];
    BigInt det = determinant(m);
    if (abs(det) != 1) {
      d.smooth = false;
      d.problems.push_back("smoothness failure at cone " + show(cone));
    }
  }
  if (!d.indices_ok || !d.smooth) return d;

  // ridge pairing: each ridge in exactly two maximal cones, on opposite sides
  std::set<RaySet> reported;
  for (std::size_t c = 0; c < masks.size(); ++c) {
    for (int drop : members(masks[c])) {
      RaySet ridge = masks[c] & ~(RaySet{1} << drop);
      if (reported.count(ridge)) continue;
      std::vector<std::size_t> owners;
      for (std::size_t o = 0; o < masks.size(); ++o)
        if ((ridge & ~masks[o]) == 0) owners.push_back(o);
      bool ok = owners.size() == 2;
      if (ok) {
        linalg::RatMatrix rows;
        for (int i : members(ridge)) {
          RatVector r;
          for (long x : f.rays()[i]) r.emplace_back(x);
          rows.push_back(r);
        }
        auto normal = linalg::nullspace(rows, n);
        int sides[2];
        for (int s = 0; s < 2; ++s) {
          int apex = members(masks[owners[s]] & ~ridge)[0];
          Rational p = 0;
          for (int i = 0; i < n; ++i) p += normal[0][i] * Rational(f.rays()[apex][i]);
          sides[s] = p > 0 ? 1 : (p < 0 ? -1 : 0);
        }
        ok = sides[0] * sides[1] == -1;
      }
      if (!ok) {
        reported.insert(ridge);
        d.complete = false;
        d.problems.push_back("completeness failure at facet " + show(members(ridge)) + " of cone " +
                             show(f.max_cones()[c]));
      }
    }
  }
  return d;
}

void require_valid(const Fan& f) {
  FanDiagnostics d = validate_fan(f);
  if (d.ok()) return;
  std::string msg;
  for (const auto& p : d.problems) msg += (msg.empty() ? "" : "; ") + p;
  throw InputError("InvalidFan", msg);
}

Fan projective_line() { return Fan({{1}, {-1}}, {{0}, {1}}, "P1"); }

Fan projective_plane() {
  return Fan({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}, "P2");
}

Fan p1_times_p1() {
  return Fan({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}, "P1xP1");
}

Fan hirzebruch_f1() {
  return Fan({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 3}, {3, 1}, {1, 2}, {2, 0}}, "F1");
}

}  // namespace toric
