#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "surfenc/pauli.hpp"
#include "surfenc/rng.hpp"

using namespace surfenc;

namespace {

PauliString random_pauli(int n, SplitRng& rng, bool hermitian = true) {
  PauliString p(n);
  for (int q = 0; q < n; ++q) {
    const auto kind = rng.below(4);
    if (kind == 1 || kind == 2) p.toggle_x(q);
    if (kind == 2 || kind == 3) p.toggle_z(q);
  }
  p.phase = static_cast<std::uint8_t>(rng.below(4));
  if (hermitian) {
    p.phase = static_cast<std::uint8_t>((p.y_count() + 2 * rng.below(2)) & 3);
  }
  return p;
}

}  // namespace

TEST_CASE("single-qubit products reproduce the Pauli group table") {
  const auto X = PauliString::single(1, 0, 'X');
  const auto Y = PauliString::single(1, 0, 'Y');
  const auto Z = PauliString::single(1, 0, 'Z');
  const auto I = PauliString::identity(1);

  CHECK(X.phase == 0);
  CHECK(Y.phase == 1);  // Y stored as i*X*Z
  CHECK(Z.phase == 0);

  // X*Z = -iY: bit pattern of Y with phase 0 (= i^{-1} * iXZ).
  auto xz = X * Z;
  CHECK(xz.x_bit(0));
  CHECK(xz.z_bit(0));
  CHECK(xz.phase == 0);
  CHECK_FALSE(xz.is_hermitian());

  // Z*X = +iY.
  auto zx = Z * X;
  CHECK(zx.phase == 2);
  CHECK_FALSE(zx.is_hermitian());

  CHECK(Y * Y == I);
  CHECK(X * X == I);
  CHECK(Z * Z == I);

  // X*Y = iZ, Y*X = -iZ.
  auto xy = X * Y;
  CHECK_FALSE(xy.x_bit(0));
  CHECK(xy.z_bit(0));
  CHECK(xy.phase == 1);
  auto yx = Y * X;
  CHECK(yx.phase == 3);

  // Y*Z = iX, Z*Y = -iX.
  auto yz = Y * Z;
  CHECK(yz.x_bit(0));
  CHECK_FALSE(yz.z_bit(0));
  CHECK(yz.phase == 1);
  auto zy = Z * Y;
  CHECK(zy.phase == 3);
}

TEST_CASE("commutation matches anticommutation of X/Z overlaps") {
  const auto X = PauliString::single(1, 0, 'X');
  const auto Y = PauliString::single(1, 0, 'Y');
  const auto Z = PauliString::single(1, 0, 'Z');
  CHECK_FALSE(X.commutes_with(Z));
  CHECK_FALSE(X.commutes_with(Y));
  CHECK_FALSE(Y.commutes_with(Z));
  CHECK(X.commutes_with(X));

  auto xx = pauli_from_label("X1X2", 2);
  auto zz = pauli_from_label("Z1Z2", 2);
  auto zi = pauli_from_label("Z1", 2);
  CHECK(xx.commutes_with(zz));
  CHECK_FALSE(xx.commutes_with(zi));
}

TEST_CASE("product is associative and tracks phases exactly") {
  SplitRng rng(11, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_pauli(7, rng, false);
    auto b = random_pauli(7, rng, false);
    auto c = random_pauli(7, rng, false);
    CHECK((a * b) * c == a * (b * c));
    // ab and ba agree up to the commutation sign.
    auto ab = a * b;
    auto ba = b * a;
    const int delta = (ab.phase - ba.phase) & 3;
    CHECK(delta == (a.commutes_with(b) ? 0 : 2));
  }
}

TEST_CASE("hermiticity, sign, weight, y_count") {
  auto p = pauli_from_label("-Z3", 4);
  CHECK(p.is_hermitian());
  CHECK(p.sign() == -1);
  CHECK(p.weight() == 1);
  p.negate();
  CHECK(p.sign() == +1);

  auto y = pauli_from_label("Y2Y5X1", 5);
  CHECK(y.y_count() == 2);
  CHECK(y.weight() == 3);
  CHECK(y.is_hermitian());
  CHECK(y.sign() == +1);

  // A bare i*X is not Hermitian and sign() refuses it.
  PauliString ix = PauliString::single(1, 0, 'X');
  ix.phase = 1;
  CHECK_FALSE(ix.is_hermitian());
  CHECK_THROWS_AS((void)ix.sign(), std::logic_error);
}

TEST_CASE("set_sign flips only the sign") {
  auto p = pauli_from_label("X1Y4", 5);
  p.set_sign(-1);
  CHECK(p.sign() == -1);
  CHECK(p.str() == "-X1Y4");
  p.set_sign(+1);
  CHECK(p.str() == "+X1Y4");
}

TEST_CASE("label round-trip") {
  SplitRng rng(13, 1, 0);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_pauli(9, rng);
    auto q = pauli_from_label(p.str(), 9);
    CHECK(p == q);
  }
  CHECK(PauliString::identity(3).str() == "+I");
  CHECK(pauli_from_label("+I", 3) == PauliString::identity(3));
  CHECK(pauli_from_label("Z1Z2Z3", 9).str() == "+Z1Z2Z3");
  // Order within the label does not matter.
  CHECK(pauli_from_label("Z4X1", 4) == pauli_from_label("X1Z4", 4));
}

TEST_CASE("label parsing rejects malformed input") {
  CHECK_THROWS_AS(pauli_from_label("X0", 4), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_label("X5", 4), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_label("X1X1", 4), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_label("Q3", 4), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_label("X", 4), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_label("", 4), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_label("+-X1", 4), std::invalid_argument);
}

TEST_CASE("conjugation by H swaps X and Z") {
  auto p = pauli_from_label("X1", 2);
  p.conj_h(0);
  CHECK(p == pauli_from_label("Z1", 2));
  p.conj_h(0);
  CHECK(p == pauli_from_label("X1", 2));

  auto y = pauli_from_label("Y1", 1);
  y.conj_h(0);
  CHECK(y == pauli_from_label("-Y1", 1));
}

TEST_CASE("conjugation by X and Z flips anticommuting signs") {
  auto z = pauli_from_label("Z1", 1);
  z.conj_x(0);
  CHECK(z == pauli_from_label("-Z1", 1));

  auto x = pauli_from_label("X1", 1);
  x.conj_z(0);
  CHECK(x == pauli_from_label("-X1", 1));
  x.conj_x(0);  // X commutes with itself
  CHECK(x == pauli_from_label("-X1", 1));

  auto y = pauli_from_label("Y1", 1);
  y.conj_x(0);
  CHECK(y == pauli_from_label("-Y1", 1));
  y.conj_z(0);
  CHECK(y == pauli_from_label("Y1", 1));
}

TEST_CASE("conjugation by CNOT copies X forward and Z backward") {
  auto xc = pauli_from_label("X1", 2);
  xc.conj_cnot(0, 1);
  CHECK(xc == pauli_from_label("X1X2", 2));

  auto zt = pauli_from_label("Z2", 2);
  zt.conj_cnot(0, 1);
  CHECK(zt == pauli_from_label("Z1Z2", 2));

  auto xt = pauli_from_label("X2", 2);
  xt.conj_cnot(0, 1);
  CHECK(xt == pauli_from_label("X2", 2));

  auto zc = pauli_from_label("Z1", 2);
  zc.conj_cnot(0, 1);
  CHECK(zc == pauli_from_label("Z1", 2));

  // Y_c Y_t -> (Y X)(Y Z) = -X_c Z_t ... verified against the group algebra:
  // CNOT (Yc Yt) CNOT = (Yc Xt·Yt... ) — assert via homomorphism instead.
  SplitRng rng(17, 2, 0);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_pauli(4, rng, false);
    auto b = random_pauli(4, rng, false);
    auto ab = a * b;
    int c = static_cast<int>(rng.below(4));
    int t = static_cast<int>(rng.below(3));
    if (t >= c) ++t;
    a.conj_cnot(c, t);
    b.conj_cnot(c, t);
    ab.conj_cnot(c, t);
    CHECK(ab == a * b);  // conjugation is a group homomorphism
    auto ha = a;
    auto hb = b;
    auto hab = ab;
    // follow with an H to also exercise its homomorphism property
    ha.conj_h(t);
    hb.conj_h(t);
    hab.conj_h(t);
    CHECK(hab == ha * hb);
  }
}

TEST_CASE("conjugation preserves hermiticity") {
  SplitRng rng(19, 3, 0);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_pauli(6, rng);
    REQUIRE(p.is_hermitian());
    p.conj_h(static_cast<int>(rng.below(6)));
    p.conj_cnot(0, 1 + static_cast<int>(rng.below(5)));
    p.conj_x(static_cast<int>(rng.below(6)));
    p.conj_z(static_cast<int>(rng.below(6)));
    CHECK(p.is_hermitian());
  }
}

TEST_CASE("Y conjugated through CNOT keeps a consistent sign") {
  // CNOT (Y ⊗ Y) CNOT† = -(X ⊗ Z): check the sign is tracked, not dropped.
  auto yy = pauli_from_label("Y1Y2", 2);
  yy.conj_cnot(0, 1);
  CHECK(yy.is_hermitian());
  auto expect = pauli_from_label("-X1Z2", 2);
  CHECK(yy == expect);
}
