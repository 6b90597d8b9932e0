#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbf/schofield.hpp"
#include "qbf/weyl.hpp"

using namespace qbf;

namespace {

Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(i);
    int k = 0;
    for (auto [t, h] : arrows) q.arrows.push_back({"a" + std::to_string(++k), t - 1, h - 1});
    return q;
}

Quiver a2() { return make_quiver(2, {{1, 2}}); }
Quiver d4() { return make_quiver(4, {{1, 4}, {2, 4}, {3, 4}}); }

SparsePoly generic_det(int n) {
    // det of the n x n generic matrix, via the A_2 Schofield construction
    Representation V;
    V.dims = {1, 0};
    V.mats.push_back(IntMat(0, 1));
    DimVector beta{(int64_t)n, (int64_t)n};
    return build_schofield(a2(), beta, V).f;
}

} // namespace

TEST_CASE("build_schofield shapes and vanishing") {
    // A_2 with alpha = S_1: f is the generic n x n determinant
    SparsePoly f2 = generic_det(2);
    CHECK(f2.total_degree() == 2);
    CHECK(f2.term_count() == 2);
    SparsePoly f3 = generic_det(3);
    CHECK(f3.total_degree() == 3);
    CHECK(f3.term_count() == 6);

    // D4 block determinant at beta=(1,1,2,2)
    Representation V;
    V.dims = {1, 1, 1, 1};
    for (int i = 0; i < 3; ++i) {
        IntMat m(1, 1);
        m(0, 0) = 1;
        V.mats.push_back(m);
    }
    SchofieldSystem sys = build_schofield(d4(), {1, 1, 2, 2}, V);
    CHECK_FALSE(sys.f.is_zero());
    CHECK(sys.f.total_degree() == 4);

    // beta violating beta_i <= beta_4 kills the semi-invariant
    SchofieldSystem bad = build_schofield(d4(), {3, 0, 1, 2}, V);
    CHECK(bad.f.is_zero());

    CHECK_THROWS_AS(build_schofield(d4(), {1, 1, 1, 2}, V), input_error);
}

TEST_CASE("random_exceptional") {
    // simple root: no arrows can be nonzero
    Representation s1 = random_exceptional(d4(), {1, 0, 0, 0}, 42);
    CHECK(hom_dim(d4(), s1, s1) == 1);
    Representation v = random_exceptional(d4(), {1, 1, 1, 1}, 42);
    for (const auto& m : v.mats) CHECK(m(0, 0) != 0);
    Quiver kr = make_quiver(2, {{1, 2}, {1, 2}});
    CHECK_THROWS_AS(random_exceptional(kr, {1, 1}, 42), input_error);
}

TEST_CASE("bfunction_oracle univariate") {
    // f = x
    SparsePoly x = SparsePoly::variable(1, 0);
    SparsePoly b = bfunction_oracle({x}, {1});
    SparsePoly s = SparsePoly::variable(1, 0);
    CHECK(b == s + SparsePoly::constant(1, 1));

    // f = det_2 -> (s+1)(s+2); check b(1) = 6 (the f*(d)f^2 = 6f identity)
    SparsePoly f2 = generic_det(2);
    SparsePoly b2 = bfunction_oracle({f2}, {1});
    CHECK(b2.eval({Rat(1)}) == 6);
    Rat lam;
    CHECK(equal_up_to_scalar(bracket({1}, {1}, 2, 2).expand(), b2, &lam));
    CHECK(lam == 1);

    // f = det_3 -> (s+1)(s+2)(s+3)
    SparsePoly b3 = bfunction_oracle({generic_det(3)}, {1});
    CHECK(equal_up_to_scalar(bracket({1}, {1}, 3, 3).expand(), b3, &lam));

    // roots are negative rationals
    auto roots = rational_roots(b3);
    for (const auto& r : roots) CHECK(r < 0);
}

TEST_CASE("bfunction_oracle respects the degree identity") {
    SparsePoly f2 = generic_det(2);
    SparsePoly b = bfunction_oracle({f2}, {2}); // m = 2
    CHECK(b.total_degree() == 2 * f2.total_degree());
}

TEST_CASE("oracle budget") {
    SparsePoly f3 = generic_det(3);
    CHECK_THROWS_AS(bfunction_oracle({f3}, {100}), not_applicable);
}

TEST_CASE("afunction") {
    SparsePoly x = SparsePoly::variable(1, 0);
    auto a = afunction({x}, {Rat(1)});
    CHECK(a.size() == 1);
    CHECK(a[0] == SparsePoly::variable(1, 0));

    // det_2 at the identity matrix: a(s) = s^2
    SparsePoly f2 = generic_det(2);
    // variable order for A_2, beta=(2,2): x_{11},x_{12},x_{21},x_{22} row-major
    std::vector<Rat> id{Rat(1), Rat(0), Rat(0), Rat(1)};
    auto a2v = afunction({f2}, id);
    SparsePoly s = SparsePoly::variable(1, 0);
    CHECK(a2v[0] == s * s);

    CHECK_THROWS_AS(afunction({f2}, std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)}),
                    input_error);
}

TEST_CASE("verify_against_oracle") {
    SparsePoly f3 = generic_det(3);
    FactorProduct cayley = bracket({1}, {1}, 3, 3);
    auto rep = verify_against_oracle(cayley, {f3}, {1});
    CHECK(rep.match);
    CHECK(rep.scalar == 1);
    // perturbed product must mismatch and report detail
    FactorProduct bad = bracket({1}, {1}, 3, 3);
    bad = bad / bracket({1}, {1}, 1, 1);
    bad.mul_factor({1}, Rat(5), 1);
    auto rep2 = verify_against_oracle(bad, {f3}, {1});
    CHECK_FALSE(rep2.match);
    CHECK(rep2.detail.find("mismatch") != std::string::npos);
}

TEST_CASE("oracle is seed independent through c^V") {
    // two random exceptional V of the same root give the same b
    Quiver q = d4();
    DimVector beta{1, 1, 2, 2};
    SparsePoly b1, b2;
    {
        Representation V = random_exceptional(q, {1, 1, 1, 1}, 1);
        b1 = bfunction_oracle({build_schofield(q, beta, V).f}, {1});
    }
    {
        Representation V = random_exceptional(q, {1, 1, 1, 1}, 2);
        b2 = bfunction_oracle({build_schofield(q, beta, V).f}, {1});
    }
    Rat lam;
    CHECK(equal_up_to_scalar(b1, b2, &lam));
}

TEST_CASE("multi-variable oracle: D4 structure pair at n=1") {
    // f1 = det(Y Z), f2 = det(Z X) on beta = (1,1,1,2)
    Quiver q = d4();
    DimVector beta{1, 1, 1, 2};
    Representation V1 = random_exceptional(q, {0, 1, 1, 1}, 42);
    Representation V2 = random_exceptional(q, {1, 0, 1, 1}, 42);
    SparsePoly f1 = build_schofield(q, beta, V1).f;
    SparsePoly f2 = build_schofield(q, beta, V2).f;
    CHECK(f1.total_degree() == 2);
    CHECK(f2.total_degree() == 2);
    SparsePoly b = bfunction_oracle({f1, f2}, {1, 1});
    // (s1+s2+2)(s1+s2+3)(s1+1)(s2+1)
    FactorProduct want(2);
    want.mul_factor({1, 1}, 2, 1);
    want.mul_factor({1, 1}, 3, 1);
    want.mul_factor({1, 0}, 1, 1);
    want.mul_factor({0, 1}, 1, 1);
    Rat lam;
    CHECK(equal_up_to_scalar(want.expand(), b, &lam));
}
