#include <stdexcept>

#include "doctest.h"
#include "og4/perm.hpp"

using og4::Perm;

TEST_CASE("identity and validation") {
  Perm id = Perm::identity(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);
  CHECK(id.order() == 1);
  CHECK_THROWS_AS((Perm({0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS((Perm({0, 3})), std::invalid_argument);
}

TEST_CASE("composition reads left to right") {
  // p = (0 1 2), q = (0 1).
  Perm p({1, 2, 0}), q({1, 0, 2});
  CHECK((p.then(q))(0) == q(p(0)));
  CHECK((p * q)(0) == 0);  // 0 -> 1 -> 0
  CHECK((q * p)(0) == 2);  // 0 -> 1 -> 2
  CHECK(p * q != q * p);
}

TEST_CASE("inverse, order, conjugation") {
  Perm p({1, 2, 3, 0});
  CHECK(p.order() == 4);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.inverse().order() == 4);

  Perm g({1, 0, 2, 3});
  Perm c = p.conjugate_by(g);
  // p^g = g^-1 p g under the left-to-right convention.
  CHECK(c == g.inverse().then(p).then(g));
  CHECK(c.order() == p.order());
}

TEST_CASE("total order is consistent") {
  Perm a({0, 1, 2}), b({1, 2, 0});
  CHECK(a < b);
  CHECK(a == Perm::identity(3));
}
