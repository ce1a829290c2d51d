#include "vfc/tower.hpp"

#include <numeric>
#include <stdexcept>

namespace vfc {

bool hom_validity(const CyclicHom& hom, const OrbifoldSurface& base) {
    if (hom.cone_images.size() != base.cone_orders.size()) return false;
    if (hom.modulus < 1) return false;
    Int d = hom.modulus;
    Int sum = 0;
    for (size_t i = 0; i < hom.cone_images.size(); i++) {
        Int t = hom.cone_images[i];
        if (t < 0 || t >= d) return false;
        Int ord = d / std::gcd(t, d);  // additive order of t in Z/d
        if (base.cone_orders[i] % ord != 0) return false;
        sum = (sum + t) % d;
    }
    return sum == 0;  // commutators contribute nothing
}

OrbifoldSurface riemann_hurwitz(const OrbifoldSurface& base, const CyclicHom& hom) {
    if (!hom_validity(hom, base))
        throw std::invalid_argument("homomorphism invalid for this orbifold (relator or lift orders)");
    Int d = hom.modulus;
    Int g = d;  // gcd of d and all images; cover connected iff it is 1
    for (Int t : hom.cone_images) g = std::gcd(g, t);
    if (g != 1)
        throw std::invalid_argument("homomorphism not surjective; cover would be disconnected");

    OrbifoldSurface cover;
    Rat chi_smooth = Rat(d) * base.chi_orb();  // 2 - 2g of the cover, before re-adding cone defects
    for (size_t i = 0; i < base.cone_orders.size(); i++) {
        Int o = base.cone_orders[i];
        Int t = hom.cone_images[i];
        Int fib = std::gcd(t, d);  // number of lifted points
        Int ord = d / fib;
        Int new_o = o / ord;
        for (Int c = 0; c < fib; c++) {
            if (new_o > 1) cover.cone_orders.push_back(new_o);
            chi_smooth += Rat(new_o - 1, new_o);
        }
    }
    if (chi_smooth.denominator() != 1 || chi_smooth.numerator() % 2 != 0)
        throw std::logic_error("cover Euler characteristic is not an even integer");
    cover.genus = (2 - chi_smooth.numerator()) / 2;
    if (cover.genus < 0) throw std::logic_error("negative cover genus");
    return cover;
}

CoverTower case1_tower(Int p, Int r, Int k, Int n) {
    if (p < 3 || p % 2 == 0 || r < 3 || r % 2 == 0)
        throw std::invalid_argument("case I needs odd p, r >= 3");
    if (k <= 0 || k >= n || k % p != 0 || (n - k) % p != 0 || (n - k) % r != 0)
        throw std::invalid_argument("case I divisibility conditions fail");

    CoverTower t;
    t.d1 = r;
    t.d2 = p;
    for (Int i = 0; i < k; i++) t.base.cone_orders.push_back(p);
    for (Int i = k; i < n; i++) t.base.cone_orders.push_back(p * r);

    t.hom1.modulus = r;
    t.hom1.cone_images.assign((size_t)n, 0);
    for (Int i = k; i < n; i++) t.hom1.cone_images[(size_t)i] = 1;
    t.mid = riemann_hurwitz(t.base, t.hom1);

    t.hom2.modulus = p;
    t.hom2.cone_images.assign(t.mid.cone_orders.size(), 1);
    t.hom2.handle_count = 2 * t.mid.genus;
    t.hom2_signs.assign(t.mid.cone_orders.size(), 1);
    t.top = riemann_hurwitz(t.mid, t.hom2);
    return t;
}

namespace {

// sign table for the second hom in case II: for i in 1..n/2 the sign is +1 when
// i = 1,2 mod 4 and -1 when i = 3,0 mod 4; the upper half mirrors with a sign flip
std::vector<Int> case2_sign_table(Int n) {
    std::vector<Int> s((size_t)n, 0);
    for (Int i = 1; i <= n / 2; i++) {
        Int rest = i % 4;
        s[(size_t)(i - 1)] = (rest == 1 || rest == 2) ? 1 : -1;
    }
    for (Int i = n / 2 + 1; i <= n; i++) s[(size_t)(i - 1)] = -s[(size_t)(n - i)];
    return s;
}

}  // namespace

CoverTower case2_tower(Int p, Int m, Int n) {
    if (m < 1 || m % 2 == 0 || p != 2 * m)
        throw std::invalid_argument("case II needs p = 2m with m odd");
    if (n < 4 || n % 2 != 0 || (p == 2 && n == 4))
        throw std::invalid_argument("case II needs n >= 4 even and (p,n) != (2,4)");

    CoverTower t;
    t.d1 = 2;
    t.d2 = m;
    t.base.cone_orders.assign((size_t)n, p);

    t.hom1.modulus = 2;
    t.hom1.cone_images.assign((size_t)n, 1);
    t.mid = riemann_hurwitz(t.base, t.hom1);

    t.hom2_signs = case2_sign_table(n);
    t.hom2.modulus = m;
    t.hom2.handle_count = 2 * t.mid.genus;
    for (Int s : t.hom2_signs) t.hom2.cone_images.push_back(((s % m) + m) % m);
    if (m == 1) {
        // order-1 cone points vanished in the mid surface; the trivial hom is on no points
        t.hom2.cone_images.clear();
        t.top = t.mid;
    } else {
        t.top = riemann_hurwitz(t.mid, t.hom2);
    }
    return t;
}

}
