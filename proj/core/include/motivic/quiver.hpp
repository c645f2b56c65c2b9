#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/rational_fn.hpp"
#include "motivic/report.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Finite quiver: vertices 0..k-1 and a multiset of arrows (loops allowed).
class Quiver {
public:
    using Arrow = std::pair<std::size_t, std::size_t>;

    Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

    /// One vertex with one loop.
    static Quiver jordan();

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

private:
    std::size_t vertex_count_;
    std::vector<Arrow> arrows_;
};

/// Non-negative integer per vertex (dimension or framing vector).
class DimVector {
public:
    DimVector() = default;
    DimVector(std::initializer_list<int> entries);
    explicit DimVector(std::vector<int> entries);

    static DimVector zero(std::size_t size) { return DimVector(std::vector<int>(size, 0)); }

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int total() const;

    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    std::vector<int> entries_;
};

/// Integer partition, parts weakly decreasing and positive.
using Partition = std::vector<int>;

/// All partitions of every size 0..max_size, by size then reverse-lex.
std::vector<Partition> partitions_up_to(int max_size);

/// One partition per quiver vertex.
class PartitionCollection {
public:
    explicit PartitionCollection(std::vector<Partition> parts);

    std::size_t vertex_count() const noexcept { return parts_.size(); }
    const std::vector<Partition>& parts() const noexcept { return parts_; }

    /// Vector of k-th parts (k >= 1), zero where a partition is shorter.
    std::vector<int> theta(std::size_t k) const;

    /// Length of the longest partition.
    std::size_t max_length() const;

    /// (|theta^i|)_i, the z-degree this collection contributes to.
    std::vector<int> sizes() const;

private:
    std::vector<Partition> parts_;
};

/// Every collection with sum_i |theta^i| <= max_total.
std::vector<PartitionCollection> partition_collections(std::size_t vertex_count, int max_total);

/// Euler-Ringel form chi(v, w) = sum_i v_i w_i - sum_{a: i->j} v_i w_j.
long euler_form(const Quiver& quiver, const std::vector<int>& v, const std::vector<int>& w);
long euler_form(const Quiver& quiver, const DimVector& v, const DimVector& w);

/// dim M(v, w) = 2 (v.w - chi(v, v)).
long nakajima_dimension(const Quiver& quiver, const DimVector& v, const DimVector& w);

/// (q;q)_n = prod_{k=0}^{n-1} (1 - q^{k+1}) as a dense integer polynomial.
RationalFn::ZPoly q_pochhammer_poly(int n);

/// (q;q)_n.
RationalFn q_pochhammer(int n);

/// (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k).
RationalFn pochhammer(const RationalFn& a, int n);

/// (t;q)_v = prod_i (t;q)_{v_i} for the monomial t = z^monomial, as a series.
TruncatedSeries<RationalFn> pochhammer_series(const Exponents& monomial, const DimVector& v, int order);

/// r(w, q^{-1}, z) = sum_theta q^{-w.theta_1} prod_k q^{chi(theta_k, theta_k)}
///                   z^{theta_k} / (q;q)_{theta_k - theta_{k+1}},
/// summed over all partition collections of total size <= order, so the result
/// is exact up to total z-degree `order`.
TruncatedSeries<RationalFn> nakajima_numerator(const Quiver& quiver, const DimVector& w, int order);

/// sum_v [M(v, w)] z^v, from r(w)/r(0) with q = L^{-1}, each z^v coefficient
/// rescaled by L^{dim M(v,w)/2}. Coefficients are checked to be polynomials
/// in L with non-negative integer coefficients.
TruncatedSeries<LaurentPoly> nakajima_motive_series(const Quiver& quiver, const DimVector& w, int order);

/// sum_v [L(v, w)] z^v via [L(v,w)]^dual = L^{-dim M(v,w)} [M(v,w)].
TruncatedSeries<LaurentPoly> nilpotent_motive_series(const Quiver& quiver, const DimVector& w, int order);

/// Converts the M-series to the L-series coefficientwise (exposed for reuse
/// with series obtained from closed forms).
TruncatedSeries<LaurentPoly> nilpotent_from_motive(const Quiver& quiver, const DimVector& w,
                                                   const TruncatedSeries<LaurentPoly>& m_series);

/// q-binomial identity sum_{n<=N} t^n / (q;q)_n = Exp(t / (1 - q)) over Q(q),
/// the right side evaluated through the rational-coefficient Exp path.
IdentityReport verify_heine(int order);

} // namespace motivic
