#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

// Ray subsets are bitmasks over the ray indices; fans up to 32 rays are supported.
using RaySet = std::uint32_t;

std::vector<int> members(RaySet s);
RaySet make_set(const std::vector<int>& indices);
inline int cardinality(RaySet s) { return __builtin_popcount(s); }

class Fan {
 public:
  Fan() = default;
  Fan(std::vector<std::vector<long>> rays, std::vector<std::vector<int>> max_cones,
      std::string name = "");

  int dim() const { return dim_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }
  const std::vector<std::vector<long>>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
  const std::string& name() const { return name_; }
  RaySet all_rays() const { return num_rays() == 32 ? ~RaySet{0} : (RaySet{1} << num_rays()) - 1; }

  // True iff the rays in I lie in a common maximal cone (faces of simplicial cones are cones).
  bool is_cone_rayset(RaySet I) const;
  bool is_cone_rayset(const std::vector<int>& I) const { return is_cone_rayset(make_set(I)); }

  // Every cone (including the zero cone) as a ray set, in increasing numeric order.
  const std::vector<RaySet>& cones() const { return cones_; }
  // Minimal ray subsets that are not cones.
  const std::vector<RaySet>& primitive_collections() const { return primitive_; }

 private:
  int dim_ = 0;
  std::vector<std::vector<long>> rays_;
  std::vector<std::vector<int>> max_cones_;
  std::vector<RaySet> max_masks_;
  std::vector<RaySet> cones_;
  std::vector<RaySet> primitive_;
  std::string name_;
};

struct FanDiagnostics {
  bool dimensions_ok = true;
  bool primitive = true;
  bool distinct_rays = true;
  bool indices_ok = true;
  bool smooth = true;
  bool complete = true;
  std::vector<std::string> problems;

  bool ok() const {
    return dimensions_ok && primitive && distinct_rays && indices_ok && smooth && complete;
  }
};

FanDiagnostics validate_fan(const Fan& f);
// Throws InputError("InvalidFan") listing every problem if validation fails.
void require_valid(const Fan& f);

// Bundled reference fans.
Fan projective_line();
Fan projective_plane();
Fan p1_times_p1();
Fan hirzebruch_f1();

}  // namespace toric
