#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

/// Dense matrix over F_q (q prime), entries in [0, q), row-major.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries;

    FqMatrix() = default;
    FqMatrix(int rows, int cols) : rows(rows), cols(cols), entries(static_cast<std::size_t>(rows * cols), 0) {}

    std::uint8_t at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
    std::uint8_t& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
};

/// A d-tuple of n x n operators with an n x r framing over F_q. Operators act
/// on column vectors; the instance is stable when the columns of the framing
/// generate F_q^n under the operators.
struct MatrixTupleInstance {
    int q = 2;
    int n = 0;
    int r = 0;
    int d = 1;
    std::vector<FqMatrix> operators;
    FqMatrix framing;
};

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
Integer gl_order(int n, int q);

/// Closure test: does the framing's column span, saturated under the
/// operators, fill F_q^n?
bool is_stable(const MatrixTupleInstance& instance);

struct OracleCount {
    Integer raw_stable;      // stable instances enumerated
    Integer group_order;     // |GL_n(F_q)|
    Integer orbits;          // raw_stable / group_order
    std::uint64_t tuples = 0; // operator tuples passing the nilpotency/commutation filter
};

/// #Quot(O^r_{A^d}, n)_0 (F_q) by enumerating stable framed tuples of
/// commuting nilpotent operators. Budget: n <= 4 (d = 1), n <= 3 (d = 2), q
/// a prime <= 5 and q^{d n^2 + n r} <= 2^34; otherwise BudgetExceeded.
OracleCount count_punctual_detailed(int n, int r, int q, int d);
Integer count_punctual(int n, int r, int q, int d);

/// #Quot(O^r_{A^d}, n)(F_q): as above without the nilpotency condition.
OracleCount count_global_affine_detailed(int n, int r, int q, int d);
Integer count_global_affine(int n, int r, int q, int d);

/// One oracle-vs-formula comparison.
struct OracleComparison {
    int n = 0;
    int r = 0;
    int q = 2;
    int d = 1;
    bool punctual = false;
    OracleCount count;
    Integer formula;
    bool matches = false;
};

/// Runs the oracle and evaluates the closed-form coefficient of t^n at L = q.
OracleComparison compare_with_formula(int n, int r, int q, int d, bool punctual);

/// CSV with a format comment line, header and one row per comparison.
std::string oracle_csv(const std::vector<OracleComparison>& rows);

} // namespace motivic
