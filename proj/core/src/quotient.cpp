#include "chieftain/quotient.hpp"

#include <algorithm>

namespace chieftain {

Epimorphism Epimorphism::quotient(GroupPtr source, const Subgroup& kernel) {
  if (kernel.parent() != source) throw DomainError("kernel lives in a different universe");
  if (!kernel.is_normal()) throw DomainError("quotient by a non-normal subgroup");

  Epimorphism e(source, kernel);

  if (kernel.is_trivial()) {
    e.identity_ = true;
    e.target_ = source;
    e.gen_images_ = source->generators();
    return e;
  }

  const std::uint64_t index = source->order() / kernel.order();
  if (index > source->config().max_degree)
    throw CapExceeded("quotient index " + std::to_string(index) + " exceeds degree cap");

  e.coset_of_.assign(source->order(), UINT32_MAX);
  for (std::uint32_t id = 0; id < source->order(); ++id) {
    if (e.coset_of_[id] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(e.coset_rep_.size());
    e.coset_rep_.push_back(id);
    for (std::uint32_t n : kernel.ids()) e.coset_of_[source->mul(n, id)] = c;
  }

  const auto deg = static_cast<std::uint32_t>(e.coset_rep_.size());
  for (const Perm& g : source->generators()) {
    std::vector<std::uint32_t> img(deg);
    const std::uint32_t gid = source->id_of(g);
    for (std::uint32_t c = 0; c < deg; ++c)
      img[c] = e.coset_of_[source->mul(e.coset_rep_[c], gid)];
    e.gen_images_.push_back(Perm::from_images(std::move(img)));
  }
  e.target_ = Group::generate(deg, e.gen_images_, source->config());
  return e;
}

Perm Epimorphism::image_of(const Perm& g) const {
  if (identity_) return g;
  const std::uint32_t gid = source_->id_of(g);
  const auto deg = static_cast<std::uint32_t>(coset_rep_.size());
  std::vector<std::uint32_t> img(deg);
  for (std::uint32_t c = 0; c < deg; ++c)
    img[c] = coset_of_[source_->mul(coset_rep_[c], gid)];
  return Perm::from_images(std::move(img));
}

std::uint32_t Epimorphism::image_id(std::uint32_t source_id) const {
  if (identity_) return source_id;
  return target_->id_of(image_of(source_->elem(source_id)));
}

Subgroup Epimorphism::image_subgroup(const Subgroup& h) const {
  if (h.parent() != source_) throw DomainError("subgroup lives in a different universe");
  if (identity_) return h;
  std::vector<std::uint32_t> ids;
  std::vector<bool> seen(target_->order(), false);
  // The image is constant on cosets of the kernel, so map one rep per coset.
  std::vector<bool> coset_done(coset_rep_.size(), false);
  for (std::uint32_t id : h.ids()) {
    const std::uint32_t c = coset_of_[id];
    if (coset_done[c]) continue;
    coset_done[c] = true;
    std::uint32_t t = image_id(id);
    if (!seen[t]) {
      seen[t] = true;
      ids.push_back(t);
    }
  }
  std::sort(ids.begin(), ids.end());
  return Subgroup::from_ids(target_, std::move(ids));
}

Subgroup Epimorphism::preimage_subgroup(const Subgroup& s) const {
  if (s.parent() != target_) throw DomainError("subgroup lives outside the target universe");
  if (identity_) return s;
  std::vector<std::uint32_t> ids;
  for (std::uint32_t c = 0; c < coset_rep_.size(); ++c) {
    if (!s.contains_id(image_id(coset_rep_[c]))) continue;
    for (std::uint32_t id = 0; id < source_->order(); ++id)
      if (coset_of_[id] == c) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return Subgroup::from_ids(source_, std::move(ids));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::uint32_t deg = a->degree() + b->degree();
  std::vector<Perm> gens;
  for (const Perm& g : a->generators()) {
    std::vector<std::uint32_t> img(deg);
    for (std::uint32_t i = 0; i < a->degree(); ++i) img[i] = g[i];
    for (std::uint32_t i = 0; i < b->degree(); ++i) img[a->degree() + i] = a->degree() + i;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  for (const Perm& g : b->generators()) {
    std::vector<std::uint32_t> img(deg);
    for (std::uint32_t i = 0; i < a->degree(); ++i) img[i] = i;
    for (std::uint32_t i = 0; i < b->degree(); ++i) img[a->degree() + i] = a->degree() + g[i];
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return Group::generate(deg, std::move(gens), a->config());
}

}  // namespace chieftain
