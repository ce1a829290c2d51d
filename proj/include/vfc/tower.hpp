// two-step cyclic covering towers of the base orbifold, with Riemann-Hurwitz bookkeeping
#pragma once

#include "vfc/rational.hpp"

#include <vector>

namespace vfc {

struct OrbifoldSurface {
    Int genus = 0;
    std::vector<Int> cone_orders;  // each >= 2, one per cone point
    Rat chi_orb() const {
        Rat x = Rat(2 - 2 * genus);
        for (Int o : cone_orders) x -= Rat(o - 1, o);
        return x;
    }
};

struct CyclicHom {
    Int modulus = 1;               // d >= 1
    std::vector<Int> cone_images;  // canonical residues in [0, d)
    Int handle_count = 0;          // handle generators a_i, b_i; images are always 0 here
    // the odd-modulus residues 1 and d-1 viewed as +1/-1 (rotation sense downstream)
    Int sign_view(size_t i) const {
        Int t = cone_images[i];
        return (t != 0 && t == modulus - 1) ? -1 : 1;
    }
};

struct CoverTower {
    OrbifoldSurface base, mid, top;
    CyclicHom hom1, hom2;           // hom1 on base -> mid cover, hom2 on mid -> top
    Int d1 = 1, d2 = 1;
    std::vector<Int> hom2_signs;    // formal +-1 per mid cone position (survives m=1)
};

// true iff the relator maps to 0 mod d and every cone image's multiplicative order divides
// its cone order (so the lift orders are well defined)
bool hom_validity(const CyclicHom& hom, const OrbifoldSurface& base);

// quotient-free cover data: cone point of order o with image of additive order t lifts to
// gcd(image, d) points of order o/t; requires a valid, surjective hom so the cover is connected
OrbifoldSurface riemann_hurwitz(const OrbifoldSurface& base, const CyclicHom& hom);

// case I: base sphere with k points of order p and n-k of order pr;
// hom1 to Z/r kills the first k cone generators, hom2 to Z/p is all ones
CoverTower case1_tower(Int p, Int r, Int k, Int n);

// case II: base sphere with n points of order p = 2m; hom1 to Z/2 is all ones,
// hom2 to Z/m follows the alternating-sign table (antisymmetric across n/2)
CoverTower case2_tower(Int p, Int m, Int n);

}
