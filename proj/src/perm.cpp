#include "og4/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace og4 {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& q) const {
  if (degree() != q.degree())
    throw std::invalid_argument("Perm: domain size mismatch in composition");
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[x] = q.img_[static_cast<std::size_t>(img_[x])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return Perm(std::move(img));
}

Perm Perm::conjugate_by(const Perm& g) const { return g.inverse().then(*this).then(g); }

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p.then(*this);
    ++k;
  }
  return k;
}

}  // namespace og4
