#include "commfam/varid.hpp"

#include "commfam/errors.hpp"

namespace commfam {

VarRegistry& VarRegistry::instance() {
  static VarRegistry reg;
  return reg;
}

VarId VarRegistry::fresh_coordinate(const std::string& label) {
  std::lock_guard<std::mutex> lock(mu_);
  coord_labels_.push_back(label);
  return VarId::coordinate(static_cast<uint32_t>(coord_labels_.size() - 1));
}

VarId VarRegistry::fresh_parameter() {
  std::lock_guard<std::mutex> lock(mu_);
  return VarId::parameter(n_params_++);
}

VarId VarRegistry::parameter(uint32_t index) {
  std::lock_guard<std::mutex> lock(mu_);
  if (index >= n_params_) n_params_ = index + 1;
  return VarId::parameter(index);
}

std::string VarRegistry::label(VarId v) const {
  if (v.kind() == VarKind::Parameter) {
    return "t" + std::to_string(v.index() + 1);
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (v.index() >= coord_labels_.size())
    fail(ErrorCode::Internal, "unregistered coordinate variable");
  return coord_labels_[v.index()];
}

uint32_t VarRegistry::coordinate_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<uint32_t>(coord_labels_.size());
}

uint32_t VarRegistry::parameter_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return n_params_;
}

}  // namespace commfam
