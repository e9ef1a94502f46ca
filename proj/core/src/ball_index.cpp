#include "rahecke/coxeter.hpp"

namespace rahecke {

BallIndex::BallIndex(const CoxeterSystem& sys, std::size_t radius, std::size_t cap)
    : radius_(radius), rank_(sys.rank()), elems_(sys.ball(radius, cap)) {
  ids_.reserve(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) ids_.emplace(elems_[i], i);
  sphere_begin_.assign(radius + 2, elems_.size());
  for (std::size_t i = elems_.size(); i-- > 0;) sphere_begin_[elems_[i].length()] = i;
  for (std::size_t k = radius + 1; k-- > 0;) {
    if (sphere_begin_[k] > sphere_begin_[k + 1]) sphere_begin_[k] = sphere_begin_[k + 1];
  }

  left_.assign(elems_.size() * rank_, -1);
  descent_.assign(elems_.size(), 0);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const Elem& x = elems_[i];
    descent_[i] = sys.initial_letters(x);
    for (std::size_t s = 0; s < rank_; ++s) {
      auto g = static_cast<GeneratorId>(s);
      bool down = (descent_[i] >> s) & 1U;
      if (!down && x.length() == radius_) continue;
      auto it = ids_.find(sys.left_multiply(g, x));
      if (it != ids_.end()) left_[i * rank_ + s] = static_cast<std::int32_t>(it->second);
    }
  }
}

std::optional<std::size_t> BallIndex::find(const Elem& g) const {
  auto it = ids_.find(g);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rahecke
