// group.hpp
//
// Algebraic structure of G = (Z/qZ)^x: units, exponent, the list of cyclic
// subgroups, the lattice-invariant classes (sets of units generating the
// same cyclic subgroup), the character group in exact root-of-unity exponent
// form, per-subgroup annihilators, and the closed counting formulas for the
// number of cyclic subgroups.

#ifndef EUPROD_GROUP_HPP
#define EUPROD_GROUP_HPP

#include <euprod/errors.hpp>
#include <euprod/primes.hpp>
#include <euprod/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace euprod {

struct CyclicSubgroup {
    std::vector<std::uint32_t> elements;  // sorted residues mod q
    std::uint64_t order = 0;              // == elements.size()
};

struct LatticeClass {
    std::vector<std::uint32_t> elements;  // sorted residues mod q
    std::size_t generated_subgroup = 0;   // index into GroupStructure::subgroups
};

/// chi(a) = zeta_E^{e(a)} with zeta_E = exp(2*pi*i/E), E = exp G.
struct DirichletCharacter {
    std::uint32_t modulus = 0;
    std::vector<std::uint32_t> exponents;  // aligned with GroupStructure::units
    bool real = false;                     // all exponents in {0, E/2}

    std::uint32_t exponent_on(std::size_t unit_index) const { return exponents[unit_index]; }
};

struct GroupStructure {
    std::uint32_t q = 0;
    std::vector<std::uint32_t> units;  // sorted residues coprime to q
    std::uint64_t exponent = 0;        // exp G = maximal element order
    std::vector<CyclicSubgroup> subgroups;  // ascending (order, elements)
    std::vector<LatticeClass> classes;      // classes[i] generates subgroups[i]
    std::vector<DirichletCharacter> characters;       // chi0 first, lexicographic tuples
    std::vector<std::vector<std::size_t>> annihilators;  // per subgroup
    std::vector<std::size_t> conjugate_index;            // per character

    std::vector<std::int32_t> unit_pos;  // residue -> index into units, -1 otherwise

    std::size_t phi() const { return units.size(); }
    std::size_t n_classes() const { return classes.size(); }

    std::size_t unit_index(std::uint32_t a) const {
        std::int32_t i = unit_pos[a % q];
        if (i < 0) throw std::domain_error("residue is not a unit");
        return static_cast<std::size_t>(i);
    }

    /// Index of the lattice-invariant class containing unit a.
    std::size_t class_of(std::uint32_t a) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (std::binary_search(classes[i].elements.begin(), classes[i].elements.end(), a % q))
                return i;
        throw std::domain_error("residue is not in any class");
    }
};

namespace detail {

inline std::uint64_t element_order(std::uint64_t a, std::uint64_t q, std::uint64_t phi,
                                   const std::vector<std::pair<std::uint64_t, unsigned>>& phi_factors) {
    std::uint64_t t = phi;
    for (auto [p, e] : phi_factors) {
        (void)e;
        while (t % p == 0 && pow_mod(a, t / p, q) == 1) t /= p;
    }
    return t;
}

// One cyclic factor of the unit group decomposition, with a discrete-log
// table indexed by residues modulo the local prime power.
struct CyclicFactor {
    std::uint64_t order = 1;
    std::uint64_t prime_power = 1;   // local modulus
    std::vector<std::int64_t> dlog;  // residue mod prime_power -> exponent, -1 if n/a
};

inline std::uint64_t find_primitive_root(std::uint64_t pa, std::uint64_t phi_pa,
                                         const std::vector<std::pair<std::uint64_t, unsigned>>& fac) {
    for (std::uint64_t g = 2; g < pa; ++g) {
        if (gcd_u64(g, pa) != 1) continue;
        bool ok = true;
        for (auto [p, e] : fac) {
            (void)e;
            if (pow_mod(g, phi_pa / p, pa) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace detail

/// Builds the full structure.  Supported range: 3 <= q <= 10^4.
inline GroupStructure build_structure(std::uint32_t q) {
    if (q < 3) throw std::domain_error("build_structure: q must be >= 3");
    if (q > 10000) throw UnsupportedInput("build_structure: q > 10^4 unsupported");

    GroupStructure S;
    S.q = q;
    S.unit_pos.assign(q, -1);
    for (std::uint32_t a = 1; a < q; ++a)
        if (gcd_u64(a, q) == 1) {
            S.unit_pos[a] = static_cast<std::int32_t>(S.units.size());
            S.units.push_back(a);
        }
    const std::uint64_t phi = S.units.size();
    const auto phi_factors = factorize(phi);

    // element orders and the group exponent
    std::vector<std::uint64_t> order_of(S.units.size());
    std::uint64_t expg = 1;
    for (std::size_t i = 0; i < S.units.size(); ++i) {
        order_of[i] = detail::element_order(S.units[i], q, phi, phi_factors);
        expg = std::lcm(expg, order_of[i]);
    }
    S.exponent = expg;

    // cyclic subgroups and their generator classes, one pass per subgroup
    std::vector<int> assigned(S.units.size(), -1);
    std::vector<CyclicSubgroup> subs;
    std::vector<LatticeClass> cls;
    for (std::size_t i = 0; i < S.units.size(); ++i) {
        if (assigned[i] >= 0) continue;
        std::uint64_t a = S.units[i], d = order_of[i];
        std::vector<std::uint32_t> elems;
        std::vector<std::uint64_t> powers;  // a^1 .. a^d
        std::uint64_t x = a;
        for (std::uint64_t k = 1; k <= d; ++k) {
            powers.push_back(x);
            elems.push_back(static_cast<std::uint32_t>(x));
            x = x * a % q;
        }
        std::sort(elems.begin(), elems.end());
        std::vector<std::uint32_t> gens;
        for (std::uint64_t k = 1; k <= d; ++k)
            if (gcd_u64(k, d) == 1) {
                gens.push_back(static_cast<std::uint32_t>(powers[k - 1]));
                assigned[S.unit_index(static_cast<std::uint32_t>(powers[k - 1]))] =
                    static_cast<int>(subs.size());
            }
        std::sort(gens.begin(), gens.end());
        subs.push_back(CyclicSubgroup{std::move(elems), d});
        cls.push_back(LatticeClass{std::move(gens), 0});
    }

    // order by (subgroup order, lexicographic element list)
    std::vector<std::size_t> perm(subs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (subs[a].order != subs[b].order) return subs[a].order < subs[b].order;
        return subs[a].elements < subs[b].elements;
    });
    for (std::size_t k = 0; k < perm.size(); ++k) {
        S.subgroups.push_back(std::move(subs[perm[k]]));
        LatticeClass c = std::move(cls[perm[k]]);
        c.generated_subgroup = k;
        S.classes.push_back(std::move(c));
    }

    // character group via the cyclic decomposition of (Z/qZ)^x
    std::vector<detail::CyclicFactor> factors;
    for (auto [p, e] : factorize(q)) {
        std::uint64_t pa = 1;
        for (unsigned k = 0; k < e; ++k) pa *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial factor
            if (e == 2) {
                detail::CyclicFactor f;
                f.order = 2;
                f.prime_power = pa;
                f.dlog.assign(pa, -1);
                f.dlog[1] = 0;
                f.dlog[3] = 1;
                factors.push_back(std::move(f));
            } else {
                // (Z/2^e)^x = <-1> x <3>
                detail::CyclicFactor f1;
                f1.order = 2;
                f1.prime_power = pa;
                f1.dlog.assign(pa, -1);
                detail::CyclicFactor f2;
                f2.order = pa / 4;
                f2.prime_power = pa;
                f2.dlog.assign(pa, -1);
                std::uint64_t three = 1;
                for (std::uint64_t k = 0; k < pa / 4; ++k) {
                    f1.dlog[three] = 0;
                    f1.dlog[pa - three] = 1;
                    f2.dlog[three] = static_cast<std::int64_t>(k);
                    f2.dlog[pa - three] = static_cast<std::int64_t>(k);
                    three = three * 3 % pa;
                }
                factors.push_back(std::move(f1));
                factors.push_back(std::move(f2));
            }
        } else {
            std::uint64_t phi_pa = pa / p * (p - 1);
            auto fac = factorize(phi_pa);
            std::uint64_t g = detail::find_primitive_root(pa, phi_pa, fac);
            detail::CyclicFactor f;
            f.order = phi_pa;
            f.prime_power = pa;
            f.dlog.assign(pa, -1);
            std::uint64_t x = 1;
            for (std::uint64_t k = 0; k < phi_pa; ++k) {
                f.dlog[x] = static_cast<std::int64_t>(k);
                x = x * g % pa;
            }
            factors.push_back(std::move(f));
        }
    }

    // exponent vectors of every unit in the decomposition
    std::vector<std::vector<std::uint64_t>> unit_exps(S.units.size(),
                                                      std::vector<std::uint64_t>(factors.size()));
    for (std::size_t i = 0; i < S.units.size(); ++i)
        for (std::size_t c = 0; c < factors.size(); ++c) {
            std::int64_t e = factors[c].dlog[S.units[i] % factors[c].prime_power];
            if (e < 0) throw std::logic_error("discrete log table incomplete");
            unit_exps[i][c] = static_cast<std::uint64_t>(e);
        }

    // characters: tuples (c_0, ..., c_{k-1}), lexicographic, chi0 first
    std::uint64_t n_chars = 1;
    for (const auto& f : factors) n_chars *= f.order;
    if (n_chars != phi) throw std::logic_error("character count mismatch");

    std::map<std::vector<std::uint64_t>, std::size_t> tuple_index;
    std::vector<std::vector<std::uint64_t>> tuples;
    std::vector<std::uint64_t> tup(factors.size(), 0);
    for (std::uint64_t n = 0; n < n_chars; ++n) {
        tuples.push_back(tup);
        tuple_index[tup] = n;
        // lexicographic successor: increment the rightmost coordinate
        for (std::size_t c = factors.size(); c-- > 0;) {
            if (++tup[c] < factors[c].order) break;
            tup[c] = 0;
        }
    }

    for (std::uint64_t n = 0; n < n_chars; ++n) {
        DirichletCharacter chi;
        chi.modulus = q;
        chi.exponents.resize(S.units.size());
        bool real = true;
        for (std::size_t i = 0; i < S.units.size(); ++i) {
            std::uint64_t e = 0;
            for (std::size_t c = 0; c < factors.size(); ++c)
                e = (e + tuples[n][c] * unit_exps[i][c] % expg * (expg / factors[c].order)) % expg;
            chi.exponents[i] = static_cast<std::uint32_t>(e);
            if (e != 0 && 2 * e != expg) real = false;
        }
        chi.real = real;
        S.characters.push_back(std::move(chi));
    }
    S.conjugate_index.resize(n_chars);
    for (std::uint64_t n = 0; n < n_chars; ++n) {
        std::vector<std::uint64_t> conj(tuples[n].size());
        for (std::size_t c = 0; c < factors.size(); ++c)
            conj[c] = tuples[n][c] == 0 ? 0 : factors[c].order - tuples[n][c];
        S.conjugate_index[n] = tuple_index.at(conj);
    }

    // annihilators: chi is trivial on a cyclic subgroup iff it is trivial on
    // one of its generators
    S.annihilators.resize(S.subgroups.size());
    for (std::size_t i = 0; i < S.subgroups.size(); ++i) {
        std::size_t gen = S.unit_index(S.classes[i].elements.front());
        for (std::size_t n = 0; n < S.characters.size(); ++n)
            if (S.characters[n].exponents[gen] == 0) S.annihilators[i].push_back(n);
        if (S.annihilators[i].size() * S.subgroups[i].order != phi)
            throw std::logic_error("annihilator size mismatch");
    }

    return S;
}

/// Number of solutions of x^d == 1 mod q, by the multiplicative formula.
inline std::uint64_t rho(std::uint64_t q, std::uint64_t d) {
    if (q < 1 || d < 1) throw std::domain_error("rho: q, d must be >= 1");
    std::uint64_t r = 1;
    for (auto [p, a] : factorize(q)) {
        std::uint64_t pa1 = 1;  // p^(a-1)
        for (unsigned k = 1; k < a; ++k) pa1 *= p;
        if (p != 2) {
            r *= gcd_u64(d, pa1 * (p - 1));
        } else if (a == 1) {
            // one solution
        } else if (d % 2 == 1) {
            // one solution
        } else {
            r *= 2 * gcd_u64(d, pa1 / 2);  // 2 * gcd(d, 2^(a-2))
        }
    }
    return r;
}

/// Number of units of exact order d, by Moebius inversion of rho.
inline std::int64_t rho_star(std::uint64_t q, std::uint64_t d) {
    if (q < 1 || d < 1) throw std::domain_error("rho_star: q, d must be >= 1");
    std::int64_t s = 0;
    for (std::uint64_t l : divisors(d))
        s += mobius(static_cast<long long>(d / l)) * static_cast<std::int64_t>(rho(q, l));
    return s;
}

/// |set of cyclic subgroups| via the closed multiplicative expression.
inline std::uint64_t count_cyclic_subgroups(std::uint64_t q) {
    if (q < 3) throw std::domain_error("count_cyclic_subgroups: q must be >= 3");
    std::uint64_t phi = totient(q);
    auto phi_fac = factorize(phi);

    mpq_class prefactor(1);
    for (auto [p, e] : phi_fac) {
        (void)e;
        if (p != 2) prefactor *= mpq_class(p - 2, p - 1);
    }

    mpq_class total(0);
    for (std::uint64_t d : divisors(phi)) {
        if (d % 2) continue;
        mpq_class term(rho(q, d), totient(d));
        term.canonicalize();
        std::uint64_t cod = phi / d;
        for (auto [p, e] : factorize(d)) {
            (void)e;
            if (p == 2) continue;
            if (cod % p == 0)
                term *= mpq_class((p - 1) * (p - 1), p * (p - 2));
            else
                term *= mpq_class(p - 1, p - 2);
        }
        if (cod % 2 == 0) term /= 2;
        total += term;
    }
    total *= prefactor;
    total.canonicalize();
    if (total.get_den() != 1 || total < 1)
        throw std::logic_error("cyclic subgroup count did not reduce to a positive integer");
    return total.get_num().get_ui();
}

/// Same count via sum over element orders (used as a cross-check).
inline std::uint64_t count_cyclic_subgroups_by_orders(std::uint64_t q) {
    if (q < 3) throw std::domain_error("count_cyclic_subgroups_by_orders: q must be >= 3");
    std::uint64_t phi = totient(q);
    std::int64_t total = 0;
    for (std::uint64_t d : divisors(phi)) {
        std::int64_t rs = rho_star(q, d);
        std::uint64_t ph = totient(d);
        if (rs % static_cast<std::int64_t>(ph) != 0)
            throw std::logic_error("rho* not divisible by phi(d)");
        total += rs / static_cast<std::int64_t>(ph);
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace euprod

#endif  // EUPROD_GROUP_HPP
