#pragma once

#include <numeric>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/group.hpp"
#include "symcay/perm.hpp"

namespace symcay {

/// Z_n acting regularly on n points.
inline GeneratedGroup cyclic_group(int n) {
    if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
    if (n == 1) return GeneratedGroup(1);
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
    return GeneratedGroup(n, {Permutation::from_images(std::move(images))});
}

/// S_n in its natural action.
inline GeneratedGroup symmetric_group(int n) {
    if (n < 1) throw InvalidParameter("symmetric group needs n >= 1");
    if (n == 1) return GeneratedGroup(1);
    std::vector<Permutation> gens{parse_cycles("(1,2)", n)};
    if (n >= 3) {
        std::vector<int> cycle(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
        gens.push_back(Permutation::from_images(std::move(cycle)));
    }
    return GeneratedGroup(n, std::move(gens));
}

/// A_n in its natural action: a 3-cycle together with an even long cycle
/// (the full n-cycle for odd n, an (n-1)-cycle fixing the first point for
/// even n).
inline GeneratedGroup alternating_group(int n) {
    if (n < 1) throw InvalidParameter("alternating group needs n >= 1");
    if (n <= 2) return GeneratedGroup(n);
    std::vector<Permutation> gens{parse_cycles("(1,2,3)", n)};
    if (n >= 4) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 0);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
        } else {
            for (int i = 1; i < n; ++i)
                images[static_cast<std::size_t>(i)] = i == n - 1 ? 1 : i + 1;
        }
        gens.push_back(Permutation::from_images(std::move(images)));
    }
    return GeneratedGroup(n, std::move(gens));
}

/// Dihedral group of order 2m acting on the m corners of a regular m-gon.
inline GeneratedGroup dihedral_group(int m) {
    if (m < 3) throw InvalidParameter("dihedral group needs m >= 3");
    std::vector<int> rot(static_cast<std::size_t>(m)), refl(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rot[static_cast<std::size_t>(i)] = (i + 1) % m;
        refl[static_cast<std::size_t>(i)] = (m - i) % m;
    }
    return GeneratedGroup(m, {Permutation::from_images(std::move(rot)),
                              Permutation::from_images(std::move(refl))});
}

/// Frobenius group of order 13k on 13 points (k dividing 12): the affine
/// maps x -> ax + b over the field with 13 elements, where a ranges over
/// the order-k subgroup of the multiplicative group.  Generated by the
/// translation x -> x+1 and the multiplication by a = 2^(12/k) (2 is a
/// primitive root mod 13).
inline GeneratedGroup frobenius_13k(int k) {
    if (k < 1 || 12 % k != 0) throw InvalidParameter("frobenius_13k needs k dividing 12");
    std::vector<int> trans(13);
    for (int i = 0; i < 13; ++i) trans[static_cast<std::size_t>(i)] = (i + 1) % 13;
    std::vector<Permutation> gens{Permutation::from_images(std::move(trans))};
    if (k > 1) {
        long a = 1;
        for (int e = 0; e < 12 / k; ++e) a = (a * 2) % 13;
        std::vector<int> mult(13);
        for (int i = 0; i < 13; ++i)
            mult[static_cast<std::size_t>(i)] = static_cast<int>((a * i) % 13);
        gens.push_back(Permutation::from_images(std::move(mult)));
    }
    return GeneratedGroup(13, std::move(gens));
}

/// A x B acting on the disjoint union of their domains.
inline GeneratedGroup direct_product(const GeneratedGroup& A, const GeneratedGroup& B) {
    int da = A.degree(), db = B.degree();
    std::vector<Permutation> gens;
    for (const Permutation& g : A.generators()) {
        std::vector<int> images(static_cast<std::size_t>(da + db));
        for (int i = 0; i < da; ++i) images[static_cast<std::size_t>(i)] = g(i);
        for (int i = 0; i < db; ++i) images[static_cast<std::size_t>(da + i)] = da + i;
        gens.push_back(Permutation::from_images(std::move(images)));
    }
    for (const Permutation& g : B.generators()) {
        std::vector<int> images(static_cast<std::size_t>(da + db));
        for (int i = 0; i < da; ++i) images[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < db; ++i) images[static_cast<std::size_t>(da + i)] = da + g(i);
        gens.push_back(Permutation::from_images(std::move(images)));
    }
    return GeneratedGroup(da + db, std::move(gens));
}

}  // namespace symcay
