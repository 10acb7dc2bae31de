// matrices.hpp
//
// The exact rational/integer matrices that drive the recursion between the
// subgroup-indexed log-L aggregates and the class-indexed log-zeta values:
// M_1 and its closed-form inverse, the divisor matrices M_d, and
// N_d = d * M_1^{-1} * M_d, together with the Moebius function of the
// subgroup lattice.  Everything here is exact; balls only appear when a
// matrix is applied to a vector of enclosures.

#ifndef EUPROD_MATRICES_HPP
#define EUPROD_MATRICES_HPP

#include <euprod/ball.hpp>
#include <euprod/group.hpp>

#include <map>
#include <vector>

namespace euprod {

/// Small dense matrix of exact rationals.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpq_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::domain_error("matrix dimension mismatch");
        RatMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const mpq_class& v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    RatMatrix operator*(const mpq_class& c) const {
        RatMatrix r(*this);
        for (auto& v : r.a_) v *= c;
        return r;
    }

    bool is_integer() const {
        for (const auto& v : a_)
            if (v.get_den() != 1) return false;
        return true;
    }

    mpq_class max_abs() const {
        mpq_class m(0);
        for (const auto& v : a_) {
            mpq_class av = v >= 0 ? v : mpq_class(-v);
            if (av > m) m = av;
        }
        return m;
    }

    /// Exact-coefficient matrix applied to a vector of balls.
    std::vector<BallReal> apply(const std::vector<BallReal>& v, mpfr_prec_t prec) const {
        if (v.size() != cols_) throw std::domain_error("matrix/vector dimension mismatch");
        std::vector<BallReal> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            BallReal acc(prec);
            for (std::size_t j = 0; j < cols_; ++j) {
                const mpq_class& c = at(i, j);
                if (c == 0) continue;
                acc = add(acc, mul_q(v[j], c));
            }
            out.push_back(std::move(acc));
        }
        return out;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

namespace detail {

inline bool subgroup_subset(const CyclicSubgroup& a, const CyclicSubgroup& b) {
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

// |K . H| for subgroups of the abelian unit group: the product set itself.
inline std::size_t product_order(const CyclicSubgroup& a, const CyclicSubgroup& b, std::uint32_t q) {
    std::vector<std::uint32_t> prod;
    prod.reserve(a.elements.size() * b.elements.size());
    for (std::uint32_t x : a.elements)
        for (std::uint32_t y : b.elements)
            prod.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % q));
    std::sort(prod.begin(), prod.end());
    prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
    return prod.size();
}

inline std::size_t intersection_order(const CyclicSubgroup& a, const CyclicSubgroup& b) {
    std::vector<std::uint32_t> tmp;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(tmp));
    return tmp.size();
}

}  // namespace detail

/// Moebius function of the cyclic-subgroup lattice: mu(K, B) = mu(|B|/|K|).
inline int lattice_mobius(const CyclicSubgroup& K, const CyclicSubgroup& B) {
    if (!detail::subgroup_subset(K, B))
        throw std::domain_error("lattice_mobius: K is not contained in B");
    return mobius(static_cast<long long>(B.order / K.order));
}

/// Rows: cyclic subgroups G0.  Columns: classes A.  Entry |G/G0| when A is
/// contained in G0.  Lower triangular under the inclusion-compatible order.
inline RatMatrix build_m1(const GroupStructure& S) {
    std::size_t n = S.subgroups.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (detail::subgroup_subset(S.subgroups[j], S.subgroups[i]))
                m.at(i, j) = mpq_class(S.phi() / S.subgroups[i].order);
    return m;
}

/// Rows: classes A.  Columns: subgroups K.  Entry mu(|<A>|/|K|)/|G/K| when
/// K is contained in <A>.
inline RatMatrix build_m1_inverse(const GroupStructure& S) {
    std::size_t n = S.subgroups.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const CyclicSubgroup& gen = S.subgroups[S.classes[i].generated_subgroup];
        for (std::size_t j = 0; j < n; ++j) {
            const CyclicSubgroup& K = S.subgroups[j];
            if (!detail::subgroup_subset(K, gen)) continue;
            m.at(i, j) = mpq_class(static_cast<long>(lattice_mobius(K, gen) * static_cast<long long>(K.order)),
                                   static_cast<unsigned long>(S.phi()));
            m.at(i, j).canonicalize();
        }
    }
    return m;
}

/// Rows: subgroups G0.  Columns: classes A.  Entry |G/(A.G0)| when
/// |A.G0| / |G0| = d.
inline RatMatrix build_m_d(const GroupStructure& S, std::uint64_t d) {
    if (d <= 1 || S.exponent % d != 0)
        throw std::domain_error("build_m_d: d must be a divisor of exp G larger than 1");
    std::size_t n = S.subgroups.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t prod = detail::product_order(S.subgroups[j], S.subgroups[i], S.q);
            if (prod == d * S.subgroups[i].order) m.at(i, j) = mpq_class(S.phi() / prod);
        }
    return m;
}

/// Entry (B0, B1) = sum over subgroups K of B0 with |B1|/|K cap B1| = d of
/// mu(|B0|/|K|).  Equals d * M1^{-1} * M_d.
inline RatMatrix build_n_d(const GroupStructure& S, std::uint64_t d) {
    if (d <= 1 || S.exponent % d != 0)
        throw std::domain_error("build_n_d: d must be a divisor of exp G larger than 1");
    std::size_t n = S.subgroups.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long e = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (!detail::subgroup_subset(S.subgroups[k], S.subgroups[i])) continue;
                std::size_t cap = detail::intersection_order(S.subgroups[k], S.subgroups[j]);
                if (S.subgroups[j].order == d * cap)
                    e += lattice_mobius(S.subgroups[k], S.subgroups[i]);
            }
            m.at(i, j) = static_cast<long>(e);
        }
    return m;
}

/// All recursion matrices for one modulus.
struct RecursionMatrices {
    RatMatrix m1;
    RatMatrix m1_inverse;
    std::map<std::uint64_t, RatMatrix> nd;  // d > 1, d | exp G
};

inline RecursionMatrices build_recursion_matrices(const GroupStructure& S) {
    RecursionMatrices rm;
    rm.m1 = build_m1(S);
    rm.m1_inverse = build_m1_inverse(S);
    if (rm.m1 * rm.m1_inverse != RatMatrix::identity(S.subgroups.size()))
        throw std::logic_error("M1 * M1^{-1} is not the identity");
    for (std::uint64_t d : divisors(S.exponent))
        if (d > 1) rm.nd.emplace(d, build_n_d(S, d));
    return rm;
}

}  // namespace euprod

#endif  // EUPROD_MATRICES_HPP
