#ifndef OG4_PERM_HPP
#define OG4_PERM_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace og4 {

/// A permutation of {0, ..., n-1}, stored as its image table.
///
/// Composition is read left to right: (p.then(q))(x) == q(p(x)).
class Perm {
public:
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  /// Left-to-right composition: result(x) = q(p(x)).
  Perm then(const Perm& q) const;
  Perm inverse() const;
  /// Conjugate p^g = g^-1 p g (left-to-right convention).
  Perm conjugate_by(const Perm& g) const;

  bool is_identity() const;
  int order() const;

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> img_;
};

inline Perm operator*(const Perm& p, const Perm& q) { return p.then(q); }

}  // namespace og4

#endif
