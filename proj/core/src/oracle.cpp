#include "motivic/oracle.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "motivic/quot.hpp"
#include "motivic/specialization.hpp"
#include "parallel.hpp"

namespace motivic {

namespace {

constexpr int kMaxN = 4;
constexpr double kMaxLog2Instances = 34.0;

using Vec = std::array<std::uint8_t, kMaxN>;
using Mat = std::array<std::uint8_t, kMaxN * kMaxN>;

struct Field {
    int q;
    std::array<std::uint8_t, 8> inverse{};

    explicit Field(int q_) : q(q_)
    {
        for (int a = 1; a < q; ++a) {
            for (int b = 1; b < q; ++b) {
                if (a * b % q == 1) {
                    inverse[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
                }
            }
        }
    }
};

Mat decode(std::uint64_t index, int n, int q)
{
    Mat m{};
    // Row-major base-q digits, most significant digit first.
    for (int pos = n * n - 1; pos >= 0; --pos) {
        m[static_cast<std::size_t>((pos / n) * kMaxN + pos % n)] = static_cast<std::uint8_t>(index % q);
        index /= static_cast<std::uint64_t>(q);
    }
    return m;
}

Mat multiply(const Mat& a, const Mat& b, int n, int q)
{
    Mat c{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) {
                s += a[static_cast<std::size_t>(i * kMaxN + k)] * b[static_cast<std::size_t>(k * kMaxN + j)];
            }
            c[static_cast<std::size_t>(i * kMaxN + j)] = static_cast<std::uint8_t>(s % q);
        }
    }
    return c;
}

bool is_zero_matrix(const Mat& m)
{
    for (auto x : m) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

bool is_nilpotent(const Mat& m, int n, int q)
{
    if (n == 0) {
        return true;
    }
    Mat p = m;
    for (int k = 1; k < n; ++k) {
        p = multiply(p, m, n, q);
    }
    return is_zero_matrix(p);
}

Vec apply(const Mat& m, const Vec& v, int n, int q)
{
    Vec out{};
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int k = 0; k < n; ++k) {
            s += m[static_cast<std::size_t>(i * kMaxN + k)] * v[static_cast<std::size_t>(k)];
        }
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s % q);
    }
    return out;
}

// Incremental row-echelon span over F_q.
class Span {
public:
    Span(int n, const Field& field) : n_(n), field_(field) {}

    int rank() const { return rank_; }

    // Returns true and records the reduced vector if v is not yet in the span.
    bool insert(Vec v)
    {
        const int q = field_.q;
        for (int b = 0; b < rank_; ++b) {
            const int p = pivots_[static_cast<std::size_t>(b)];
            const int c = v[static_cast<std::size_t>(p)];
            if (c == 0) {
                continue;
            }
            const auto& row = basis_[static_cast<std::size_t>(b)];
            for (int i = 0; i < n_; ++i) {
                v[static_cast<std::size_t>(i)] =
                    static_cast<std::uint8_t>((v[static_cast<std::size_t>(i)] + (q - c) * row[static_cast<std::size_t>(i)]) % q);
            }
        }
        int pivot = -1;
        for (int i = 0; i < n_; ++i) {
            if (v[static_cast<std::size_t>(i)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            return false;
        }
        const int inv = field_.inverse[v[static_cast<std::size_t>(pivot)]];
        for (int i = 0; i < n_; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v[static_cast<std::size_t>(i)] * inv % q);
        }
        // Keep rows fully reduced so later reductions stay single-pass.
        for (int b = 0; b < rank_; ++b) {
            auto& row = basis_[static_cast<std::size_t>(b)];
            const int c = row[static_cast<std::size_t>(pivot)];
            if (c == 0) {
                continue;
            }
            for (int i = 0; i < n_; ++i) {
                row[static_cast<std::size_t>(i)] =
                    static_cast<std::uint8_t>((row[static_cast<std::size_t>(i)] + (q - c) * v[static_cast<std::size_t>(i)]) % q);
            }
        }
        basis_[static_cast<std::size_t>(rank_)] = v;
        added_[static_cast<std::size_t>(rank_)] = v;
        pivots_[static_cast<std::size_t>(rank_)] = pivot;
        ++rank_;
        return true;
    }

    /// b-th accepted vector as it was when inserted; these span the same
    /// space as the (later back-substituted) echelon rows.
    const Vec& added(int b) const { return added_[static_cast<std::size_t>(b)]; }

private:
    int n_;
    const Field& field_;
    int rank_ = 0;
    std::array<Vec, kMaxN> basis_{};
    std::array<Vec, kMaxN> added_{};
    std::array<int, kMaxN> pivots_{};
};

bool framing_generates(const std::vector<Mat>& ops, const std::vector<Vec>& columns, int n, const Field& field)
{
    Span span(n, field);
    for (const auto& c : columns) {
        span.insert(c);
        if (span.rank() == n) {
            return true;
        }
    }
    // The accepted vectors span the current subspace, so applying every
    // operator to each of them once yields the invariant closure.
    for (int processed = 0; processed < span.rank(); ++processed) {
        const Vec v = span.added(processed);
        for (const auto& op : ops) {
            span.insert(apply(op, v, n, field.q));
            if (span.rank() == n) {
                return true;
            }
        }
    }
    return span.rank() == n;
}

std::uint64_t ipow(std::uint64_t base, int e)
{
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

void check_budget(int n, int r, int q, int d)
{
    if (d != 1 && d != 2) {
        throw UnsupportedDimension(d);
    }
    require(n >= 0 && r >= 0, "oracle: n and r must be non-negative");
    if (q != 2 && q != 3 && q != 5) {
        throw BudgetExceeded("oracle: q must be a prime <= 5 (got " + std::to_string(q) + ")");
    }
    const int n_cap = d == 1 ? 4 : 3;
    if (n > n_cap) {
        throw BudgetExceeded("oracle: n=" + std::to_string(n) + " exceeds the cap " + std::to_string(n_cap) +
                             " for d=" + std::to_string(d));
    }
    const double log2_space = (d * n * n + n * r) * std::log2(static_cast<double>(q));
    if (log2_space > kMaxLog2Instances) {
        throw BudgetExceeded("oracle: instance space q^(d n^2 + n r) = 2^" + std::to_string(log2_space) +
                             " exceeds 2^34");
    }
}

// Every word of length n in the operators vanishes (joint nilpotency).
bool words_vanish(const std::vector<Mat>& ops, int n, int q)
{
    if (n == 0) {
        return true;
    }
    std::vector<Mat> words = ops;
    for (int len = 1; len < n; ++len) {
        std::vector<Mat> next;
        next.reserve(words.size() * ops.size());
        for (const auto& w : words) {
            for (const auto& op : ops) {
                next.push_back(multiply(op, w, n, q));
            }
        }
        words = std::move(next);
    }
    for (const auto& w : words) {
        if (!is_zero_matrix(w)) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Mat>> operator_tuples(int n, int q, int d, bool nilpotent)
{
    const std::uint64_t space = ipow(static_cast<std::uint64_t>(q), n * n);
    std::vector<Mat> singles;
    for (std::uint64_t i = 0; i < space; ++i) {
        Mat m = decode(i, n, q);
        if (!nilpotent || is_nilpotent(m, n, q)) {
            singles.push_back(m);
        }
    }
    std::vector<std::vector<Mat>> out;
    if (d == 1) {
        for (const auto& m : singles) {
            out.push_back({m});
        }
        return out;
    }
    for (const auto& a : singles) {
        for (const auto& b : singles) {
            if (multiply(a, b, n, q) != multiply(b, a, n, q)) {
                continue;
            }
            if (nilpotent) {
                ensure(words_vanish({a, b}, n, q),
                       "oracle: commuting nilpotent pair with a nonvanishing word of length n");
            }
            out.push_back({a, b});
        }
    }
    return out;
}

OracleCount count_instances(int n, int r, int q, int d, bool nilpotent)
{
    check_budget(n, r, q, d);
    const Field field(q);
    const auto tuples = operator_tuples(n, q, d, nilpotent);
    const std::uint64_t framings = ipow(static_cast<std::uint64_t>(q), n * r);

    std::vector<std::uint64_t> partial(tuples.size(), 0);
    detail::parallel_for(tuples.size(), [&](std::size_t t) {
        std::uint64_t stable = 0;
        std::vector<Vec> columns(static_cast<std::size_t>(r));
        for (std::uint64_t f = 0; f < framings; ++f) {
            // Row-major n x r digits, most significant first.
            std::uint64_t index = f;
            for (int pos = n * r - 1; pos >= 0; --pos) {
                columns[static_cast<std::size_t>(pos % r)][static_cast<std::size_t>(pos / r)] =
                    static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(q));
                index /= static_cast<std::uint64_t>(q);
            }
            if (framing_generates(tuples[t], columns, n, field)) {
                ++stable;
            }
        }
        partial[t] = stable;
    });

    OracleCount out;
    out.raw_stable = 0;
    for (auto s : partial) {
        out.raw_stable += Integer(static_cast<unsigned long>(s));
    }
    out.group_order = gl_order(n, q);
    ensure(mpz_divisible_p(out.raw_stable.get_mpz_t(), out.group_order.get_mpz_t()) != 0,
           "oracle: stable instance count " + out.raw_stable.get_str() + " not divisible by |GL_n| = " +
               out.group_order.get_str());
    mpz_divexact(out.orbits.get_mpz_t(), out.raw_stable.get_mpz_t(), out.group_order.get_mpz_t());
    out.tuples = tuples.size();
    return out;
}

} // namespace

Integer gl_order(int n, int q)
{
    require(n >= 0 && q >= 2, "gl_order: n >= 0 and q >= 2 required");
    Integer qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    Integer out = 1;
    Integer qi = 1;
    for (int i = 0; i < n; ++i) {
        out *= qn - qi;
        qi *= q;
    }
    return out;
}

bool is_stable(const MatrixTupleInstance& instance)
{
    const int n = instance.n;
    require(n >= 0 && n <= kMaxN, "is_stable: n must be in [0, 4]");
    require(instance.q == 2 || instance.q == 3 || instance.q == 5, "is_stable: q must be 2, 3 or 5");
    require(instance.framing.rows == n && instance.framing.cols == instance.r,
            "is_stable: framing must be n x r");
    const Field field(instance.q);
    std::vector<Mat> ops;
    for (const auto& x : instance.operators) {
        require(x.rows == n && x.cols == n, "is_stable: operators must be n x n");
        Mat m{};
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m[static_cast<std::size_t>(i * kMaxN + j)] = static_cast<std::uint8_t>(x.at(i, j) % instance.q);
            }
        }
        ops.push_back(m);
    }
    std::vector<Vec> columns(static_cast<std::size_t>(instance.r));
    for (int j = 0; j < instance.r; ++j) {
        for (int i = 0; i < n; ++i) {
            columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(instance.framing.at(i, j) % instance.q);
        }
    }
    return framing_generates(ops, columns, n, field);
}

OracleCount count_punctual_detailed(int n, int r, int q, int d)
{
    return count_instances(n, r, q, d, true);
}

Integer count_punctual(int n, int r, int q, int d)
{
    return count_punctual_detailed(n, r, q, d).orbits;
}

OracleCount count_global_affine_detailed(int n, int r, int q, int d)
{
    return count_instances(n, r, q, d, false);
}

Integer count_global_affine(int n, int r, int q, int d)
{
    return count_global_affine_detailed(n, r, q, d).orbits;
}

OracleComparison compare_with_formula(int n, int r, int q, int d, bool punctual)
{
    OracleComparison out;
    out.n = n;
    out.r = r;
    out.q = q;
    out.d = d;
    out.punctual = punctual;
    out.count = punctual ? count_punctual_detailed(n, r, q, d) : count_global_affine_detailed(n, r, q, d);
    const auto series = punctual ? punctual_quot_series(r, d, n) : quot_series(affine_class(d), d, r, n);
    out.formula = point_count_series(series, Integer(q))[static_cast<std::size_t>(n)];
    out.matches = out.formula == out.count.orbits;
    return out;
}

std::string oracle_csv(const std::vector<OracleComparison>& rows)
{
    std::ostringstream out;
    out << "# format: motivic-oracle/1\n";
    out << "n,rank,q,dim,punctual,raw_stable,gl_order,orbit_count,formula,status\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.r << ',' << row.q << ',' << row.d << ',' << (row.punctual ? 1 : 0) << ','
            << row.count.raw_stable.get_str() << ',' << row.count.group_order.get_str() << ','
            << row.count.orbits.get_str() << ',' << row.formula.get_str() << ','
            << (row.matches ? "pass" : "fail") << '\n';
    }
    return out.str();
}

} // namespace motivic
