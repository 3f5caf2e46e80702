#include "ringtk/ring_factory.hpp"

#include <stdexcept>
#include <string>

namespace ringtk {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteRing zn_ring(int n) {
    if (n < 1) throw std::invalid_argument("zn_ring: n must be >= 1");
    if (n > FiniteRing::kMaxOrder)
        throw std::invalid_argument("zn_ring: n exceeds order cap");
    CayleyTable add(n), mul(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            add.at(i, j) = (i + j) % n;
            mul.at(i, j) = (i * j) % n;
        }
    return FiniteRing("Z" + std::to_string(n), std::move(add), std::move(mul));
}

namespace {

// "0", "a", "2a+b", ... for the element i*g1 + j*g2 mod p.
std::string pair_name(int i, int j, const char* g1, const char* g2) {
    std::string s;
    if (i == 1) s += g1;
    else if (i > 1) s += std::to_string(i) + g1;
    if (j >= 1) {
        if (!s.empty()) s += "+";
        if (j == 1) s += g2;
        else s += std::to_string(j) + g2;
    }
    if (s.empty()) s = "0";
    return s;
}

FiniteRing two_generator_ring(int p, const char* family, const char* g1, const char* g2,
                              bool left_absorbs) {
    if (!is_prime(p)) throw std::invalid_argument("ring family needs a prime p");
    const int n = p * p;
    if (n > FiniteRing::kMaxOrder)
        throw std::invalid_argument("ring order exceeds cap");
    CayleyTable add(n), mul(n);
    std::vector<std::string> names(n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const int u = i * p + j;
            names[u] = pair_name(i, j, g1, g2);
            for (int k = 0; k < p; ++k)
                for (int l = 0; l < p; ++l) {
                    const int v = k * p + l;
                    add.at(u, v) = ((i + k) % p) * p + (j + l) % p;
                    if (left_absorbs) {
                        // (i,j)*(k,l) = (i(k+l), j(k+l))
                        const int s = (k + l) % p;
                        mul.at(u, v) = (i * s % p) * p + j * s % p;
                    } else {
                        // (i,j)*(k,l) = ((i+j)k, (i+j)l)
                        const int s = (i + j) % p;
                        mul.at(u, v) = (s * k % p) * p + s * l % p;
                    }
                }
        }
    // closed forms above are derived, not axiomatic: the validating
    // constructor re-checks them
    return FiniteRing(std::string(family) + std::to_string(n), std::move(add),
                      std::move(mul), std::move(names));
}

} // namespace

FiniteRing e_ring(int p) { return two_generator_ring(p, "E", "a", "b", true); }
FiniteRing f_ring(int p) { return two_generator_ring(p, "F", "x", "y", false); }

FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2) {
    const int n1 = r1.order(), n2 = r2.order();
    const int n = n1 * n2;
    if (n > FiniteRing::kMaxOrder)
        throw std::invalid_argument("direct_product: order exceeds cap");
    CayleyTable add(n), mul(n);
    std::vector<std::string> names(n);
    for (int u1 = 0; u1 < n1; ++u1)
        for (int u2 = 0; u2 < n2; ++u2) {
            const int u = u1 * n2 + u2;
            names[u] = "(" + r1.element_name(u1) + "," + r2.element_name(u2) + ")";
            for (int v1 = 0; v1 < n1; ++v1)
                for (int v2 = 0; v2 < n2; ++v2) {
                    const int v = v1 * n2 + v2;
                    add.at(u, v) = r1.add(u1, v1) * n2 + r2.add(u2, v2);
                    mul.at(u, v) = r1.mul(u1, v1) * n2 + r2.mul(u2, v2);
                }
        }
    return FiniteRing(r1.name() + "x" + r2.name(), std::move(add), std::move(mul),
                      std::move(names));
}

namespace {

std::string matrix_name(int a, int b, int c, int d) {
    return "[" + std::to_string(a) + "," + std::to_string(b) + ";" +
           std::to_string(c) + "," + std::to_string(d) + "]";
}

} // namespace

FiniteRing matrix_ring_2x2(int p) {
    if (!is_prime(p)) throw std::invalid_argument("matrix_ring_2x2: p must be prime");
    const long long n = 1LL * p * p * p * p;
    if (n > FiniteRing::kMaxOrder)
        throw std::invalid_argument("matrix_ring_2x2: order exceeds cap");
    const int order = int(n);
    auto idx = [p](int a, int b, int c, int d) {
        return ((a * p + b) * p + c) * p + d;
    };
    CayleyTable add(order), mul(order);
    std::vector<std::string> names(order);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    const int u = idx(a, b, c, d);
                    names[u] = matrix_name(a, b, c, d);
                    for (int e = 0; e < p; ++e)
                        for (int f = 0; f < p; ++f)
                            for (int g = 0; g < p; ++g)
                                for (int h = 0; h < p; ++h) {
                                    const int v = idx(e, f, g, h);
                                    add.at(u, v) = idx((a + e) % p, (b + f) % p,
                                                       (c + g) % p, (d + h) % p);
                                    mul.at(u, v) = idx((a * e + b * g) % p, (a * f + b * h) % p,
                                                       (c * e + d * g) % p, (c * f + d * h) % p);
                                }
                }
    return FiniteRing("M2_Z" + std::to_string(p), std::move(add), std::move(mul),
                      std::move(names));
}

FiniteRing upper_triangular_2x2(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("upper_triangular_2x2: p must be prime");
    const long long n = 1LL * p * p * p;
    if (n > FiniteRing::kMaxOrder)
        throw std::invalid_argument("upper_triangular_2x2: order exceeds cap");
    const int order = int(n);
    auto idx = [p](int a, int b, int d) { return (a * p + b) * p + d; };
    CayleyTable add(order), mul(order);
    std::vector<std::string> names(order);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int d = 0; d < p; ++d) {
                const int u = idx(a, b, d);
                names[u] = matrix_name(a, b, 0, d);
                for (int e = 0; e < p; ++e)
                    for (int f = 0; f < p; ++f)
                        for (int h = 0; h < p; ++h) {
                            const int v = idx(e, f, h);
                            add.at(u, v) = idx((a + e) % p, (b + f) % p, (d + h) % p);
                            mul.at(u, v) = idx(a * e % p, (a * f + b * h) % p, d * h % p);
                        }
            }
    return FiniteRing("UT2_Z" + std::to_string(p), std::move(add), std::move(mul),
                      std::move(names));
}

} // namespace ringtk
