#include "test_support.hpp"

#include "motivic/errors.hpp"
#include "motivic/oracle.hpp"
#include "motivic/quot.hpp"
#include "motivic/specialization.hpp"

using namespace motivic;

namespace {

FqMatrix matrix(int rows, int cols, std::initializer_list<int> entries)
{
    FqMatrix m(rows, cols);
    std::size_t i = 0;
    for (int e : entries) {
        m.entries[i++] = static_cast<std::uint8_t>(e);
    }
    return m;
}

MatrixTupleInstance instance(int q, std::vector<FqMatrix> ops, FqMatrix framing)
{
    MatrixTupleInstance out;
    out.q = q;
    out.n = framing.rows;
    out.r = framing.cols;
    out.d = static_cast<int>(ops.size());
    out.operators = std::move(ops);
    out.framing = std::move(framing);
    return out;
}

} // namespace

TEST_CASE("general linear group orders")
{
    CHECK(gl_order(0, 2) == 1);
    CHECK(gl_order(1, 2) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(3, 2) == 168);
    CHECK_THROWS_AS(gl_order(2, 1), PreconditionError);
}

TEST_CASE("stability by invariant-subspace closure")
{
    CHECK(is_stable(instance(2, {matrix(1, 1, {0})}, matrix(1, 1, {1}))));
    CHECK_FALSE(is_stable(instance(3, {matrix(2, 2, {0, 0, 0, 0})}, matrix(2, 1, {0, 0}))));
    // Jordan block X e_2 = e_1: e_2 is cyclic, e_1 is not.
    const FqMatrix jordan_block = matrix(2, 2, {0, 1, 0, 0});
    CHECK(is_stable(instance(2, {jordan_block}, matrix(2, 1, {0, 1}))));
    CHECK_FALSE(is_stable(instance(2, {jordan_block}, matrix(2, 1, {1, 0}))));
    // Two framing vectors spanning directly.
    CHECK(is_stable(instance(5, {matrix(2, 2, {0, 0, 0, 0})}, matrix(2, 2, {1, 2, 3, 4}))));
    // Needs two rounds of closure: X e_3 = e_2, X e_2 = e_1.
    const FqMatrix shift3 = matrix(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(is_stable(instance(3, {shift3}, matrix(3, 1, {0, 0, 2}))));
    CHECK_FALSE(is_stable(instance(3, {shift3}, matrix(3, 1, {1, 1, 0}))));
    // Pair of operators generating from e_1 only together.
    const FqMatrix x = matrix(3, 3, {0, 0, 0, 1, 0, 0, 0, 0, 0});
    const FqMatrix y = matrix(3, 3, {0, 0, 0, 0, 0, 0, 1, 0, 0});
    CHECK(is_stable(instance(2, {x, y}, matrix(3, 1, {1, 0, 0}))));
    CHECK_FALSE(is_stable(instance(2, {x}, matrix(3, 1, {1, 0, 0}))));
    CHECK(is_stable(instance(2, {}, matrix(0, 2, {}))));
    CHECK_THROWS_AS(is_stable(instance(4, {}, matrix(1, 1, {1}))), PreconditionError);
}

TEST_CASE("punctual counts")
{
    CHECK(count_punctual(0, 3, 2, 1) == 1);
    CHECK(count_punctual(1, 2, 2, 1) == 3);
    CHECK(count_punctual(2, 1, 2, 2) == 3);
    const auto detail = count_punctual_detailed(2, 1, 2, 2);
    CHECK(detail.group_order == 6);
    CHECK(detail.raw_stable == 18);
    // rank zero framings never generate a nonzero space
    CHECK(count_punctual(2, 0, 2, 1) == 0);
}

TEST_CASE("global affine counts")
{
    CHECK(count_global_affine(1, 1, 2, 1) == 2);
    CHECK(count_global_affine(2, 2, 2, 1) == 28);
    CHECK(count_global_affine(1, 1, 3, 2) == 9);
    CHECK(count_global_affine(0, 3, 5, 1) == 1);
}

TEST_CASE("budget and dimension limits are hard errors")
{
    CHECK_THROWS_AS(count_punctual(5, 1, 2, 1), BudgetExceeded);
    CHECK_THROWS_AS(count_punctual(4, 1, 2, 2), BudgetExceeded);
    CHECK_THROWS_AS(count_punctual(1, 1, 7, 1), BudgetExceeded);
    CHECK_THROWS_AS(count_punctual(1, 1, 4, 1), BudgetExceeded);
    CHECK_THROWS_AS(count_global_affine(4, 3, 5, 1), BudgetExceeded);
    CHECK_THROWS_AS(count_punctual(1, 1, 2, 3), UnsupportedDimension);
    CHECK_THROWS_AS(count_punctual(-1, 1, 2, 1), PreconditionError);
}

TEST_CASE("oracle agrees with formulas on a small grid")
{
    for (int d = 1; d <= 2; ++d) {
        for (int n = 0; n <= 2; ++n) {
            for (int r = 1; r <= 2; ++r) {
                for (bool punctual : {true, false}) {
                    CAPTURE(d);
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(punctual);
                    const auto c = compare_with_formula(n, r, 2, d, punctual);
                    CHECK(c.matches);
                    CHECK(c.count.raw_stable == c.count.orbits * c.count.group_order);
                }
            }
        }
    }
}

TEST_CASE("oracle CSV")
{
    const auto row = compare_with_formula(2, 1, 2, 2, true);
    CHECK(oracle_csv({row}) ==
          "# format: motivic-oracle/1\n"
          "n,rank,q,dim,punctual,raw_stable,gl_order,orbit_count,formula,status\n"
          "2,1,2,2,1,18,6,3,3,pass\n");
}
