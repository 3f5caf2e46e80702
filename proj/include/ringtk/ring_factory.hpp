#ifndef RINGTK_RING_FACTORY_HPP
#define RINGTK_RING_FACTORY_HPP

#include "ringtk/finite_ring.hpp"

namespace ringtk {

/// Integers mod n. Throws std::invalid_argument for n < 1 or n > kMaxOrder.
FiniteRing zn_ring(int n);

/// The noncommutative ring of order p^2 presented by generators a, b with
/// pa = pb = 0, a^2 = a, b^2 = b, ab = a, ba = b. Element i*a + j*b has
/// index i*p + j; multiplication follows from distributivity:
/// (i,j)*(k,l) = (i*(k+l), j*(k+l)) mod p. Tables are re-validated after
/// generation. Throws if p is not prime.
FiniteRing e_ring(int p);

/// The companion order-p^2 ring with xy = y, yx = x; generators named x, y.
/// (i,j)*(k,l) = ((i+j)*k, (i+j)*l) mod p.
FiniteRing f_ring(int p);

/// Componentwise direct product; element (u, v) has index u*|R2| + v.
FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2);

/// Full 2x2 matrix ring over Z_p, order p^4. Throws if p is not prime or
/// p^4 exceeds kMaxOrder.
FiniteRing matrix_ring_2x2(int p);

/// Upper triangular 2x2 matrices over Z_p, order p^3.
FiniteRing upper_triangular_2x2(int p);

bool is_prime(int n);

} // namespace ringtk

#endif
