#ifndef COMMFAM_VARID_HPP
#define COMMFAM_VARID_HPP

#include <compare>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace commfam {

enum class VarKind : uint8_t { Coordinate = 0, Parameter = 1 };

/// Identifier of a variable of the polynomial ring. Coordinate variables are
/// linear functions on g* (one per basis vector of g); parameter variables
/// generate the coefficient field K = Q(t1,...,tm). The packed ordering puts
/// all coordinates before all parameters, each namespace ordered by index.
struct VarId {
  uint32_t raw = 0;

  static constexpr VarId coordinate(uint32_t index) { return VarId{index}; }
  static constexpr VarId parameter(uint32_t index) {
    return VarId{index | 0x80000000u};
  }
  constexpr VarKind kind() const {
    return (raw & 0x80000000u) ? VarKind::Parameter : VarKind::Coordinate;
  }
  constexpr uint32_t index() const { return raw & 0x7fffffffu; }
  auto operator<=>(const VarId&) const = default;
};

/// Global append-only table of variable labels. Coordinate labels are supplied
/// at allocation (basis labels of the owning algebra); parameter k prints as
/// "t<k+1>".
class VarRegistry {
 public:
  static VarRegistry& instance();

  VarId fresh_coordinate(const std::string& label);
  VarId fresh_parameter();
  /// Ensures parameters t1..t<index+1> exist and returns parameter(index).
  VarId parameter(uint32_t index);
  std::string label(VarId v) const;
  uint32_t coordinate_count() const;
  uint32_t parameter_count() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> coord_labels_;
  uint32_t n_params_ = 0;
};

}  // namespace commfam

#endif
