#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "swc/field.hpp"
#include "swc/mat.hpp"
#include "swc/smith.hpp"
#include "swc/subspace.hpp"

using namespace swc;

TEST_CASE("field tables: F_2, F_4, F_3, F_16") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {2, 4}, {3, 2}}) {
        auto F = Field::make(p, k);
        int q = F->q();
        /* field axioms by exhaustion */
        for (int a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                    CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(Field({4, 1, {0, 1}}), PreconditionError);          // 4 not prime
    CHECK_THROWS_AS(Field({2, 2, {0, 0, 1}}), PreconditionError);       // x^2 reducible
    CHECK_THROWS_AS(Field({2, 5, {1, 0, 1, 0, 0, 1}}), CapacityError);  // q = 32 > 16
}

TEST_CASE("rref_rank_kernel examples") {
    auto F2 = Field::make(2, 1);
    Mat id = Mat::identity(F2, 2);
    auto [r1, k1] = rref_rank_kernel(id);
    CHECK(r1 == 2);
    CHECK(k1.rows() == 0);

    Mat z(F2, 2, 3);
    auto [r2, k2] = rref_rank_kernel(z);
    CHECK(r2 == 0);
    CHECK(k2.rows() == 3);

    Mat m(F2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    auto [r3, k3] = rref_rank_kernel(m);
    CHECK(r3 == 1);
    CHECK(k3.rows() == 1);
}

TEST_CASE("rank-nullity on random matrices over several fields") {
    std::mt19937 rng(12345);
    for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        auto F = Field::make(p, k);
        for (int trial = 0; trial < 60; ++trial) {
            int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
            Mat m(F, r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<uint8_t>(rng() % F->q());
            auto [rank, ker] = rref_rank_kernel(m);
            CHECK(rank + ker.rows() == c);
            /* kernel rows really are in the kernel */
            Mat prod = m * ker.transpose();
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("solve_left and inverse") {
    auto F4 = Field::make(2, 2);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Mat a(F4, 3, 3);
        for (int i = 0; i < 9; ++i) a.at(i / 3, i % 3) = static_cast<uint8_t>(rng() % 4);
        Mat x(F4, 1, 3);
        for (int j = 0; j < 3; ++j) x.at(0, j) = static_cast<uint8_t>(rng() % 4);
        Mat b = x * a;
        Mat sol;
        CHECK(a.solve_left(b, &sol));
        CHECK(sol * a == b);
        if (a.is_invertible()) CHECK(a * a.inverse() == Mat::identity(F4, 3));
    }
}

TEST_CASE("enumerate_subspaces counts") {
    auto F2 = Field::make(2, 1);
    CHECK(enumerate_subspaces(2, F2, {}).size() == 5);  // 1 + 3 + 1
    CHECK(enumerate_subspaces(1, F2, {}).size() == 2);
    CHECK(enumerate_subspaces(3, F2, {}).size() == 16);  // 1+7+7+1
    auto F3 = Field::make(3, 1);
    CHECK(enumerate_subspaces(2, F3, {}).size() == 6);  // 1 + 4 + 1

    /* F_4-structure on F_2^2: J with J^2 + J + 1 = 0 leaves only 0 and all */
    Mat J(F2, 2, 2);
    J.at(0, 1) = 1;
    J.at(1, 0) = 1;
    J.at(1, 1) = 1;
    auto inv = enumerate_subspaces(2, F2, {J});
    CHECK(inv.size() == 2);
    CHECK(inv[0].dim() == 0);
    CHECK(inv[1].dim() == 2);

    CHECK_THROWS_AS(enumerate_subspaces(9, F2, {}), CapacityError);
}

TEST_CASE("subspace lattice closure under sum and intersection") {
    auto F2 = Field::make(2, 1);
    auto all = enumerate_subspaces(4, F2, {});
    CHECK(all.size() == 67);  // Gaussian binomial sum for n=4, q=2
    std::set<std::vector<uint8_t>> keys;
    for (auto& s : all) keys.insert(s.key());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Subspace& a = all[rng() % all.size()];
        const Subspace& b = all[rng() % all.size()];
        Subspace s = a.sum(b), i = a.intersect(b);
        CHECK(keys.count(s.key()) == 1);
        CHECK(keys.count(i.key()) == 1);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        CHECK(s.contains(a));
        CHECK(a.contains(i));
    }
}

TEST_CASE("action invariance is honest") {
    auto F2 = Field::make(2, 1);
    std::mt19937 rng(21);
    Mat A(F2, 3, 3);
    for (int i = 0; i < 9; ++i) A.at(i / 3, i % 3) = static_cast<uint8_t>(rng() % 2);
    auto inv = enumerate_subspaces(3, F2, {A});
    for (auto& s : inv) {
        Mat img = s.basis() * A.transpose();
        CHECK(s.basis().solve_left(img));
    }
    /* complement check: every non-returned subspace violates invariance */
    auto all = enumerate_subspaces(3, F2, {});
    std::set<std::vector<uint8_t>> good;
    for (auto& s : inv) good.insert(s.key());
    for (auto& s : all) {
        if (good.count(s.key())) continue;
        Mat img = s.basis() * A.transpose();
        CHECK(!s.basis().solve_left(img));
    }
}

TEST_CASE("smith normal form examples") {
    SmithResult r1 = smith_normal_form(IntMat::identity(3));
    CHECK(r1.diag == std::vector<long long>{1, 1, 1});

    IntMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    SmithResult r2 = smith_normal_form(m);
    CHECK(r2.diag == std::vector<long long>{1, 6});

    SmithResult r3 = smith_normal_form(IntMat(2, 2));
    CHECK(r3.diag == std::vector<long long>{0, 0});
}

TEST_CASE("smith transforms are unimodular inverses and reproduce the diagonal") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        IntMat m(r, c);
        for (auto& x : m.e) x = static_cast<long long>(rng() % 13) - 6;
        SmithResult s = smith_normal_form(m);
        CHECK(s.U * s.Uinv == IntMat::identity(r));
        CHECK(s.V * s.Vinv == IntMat::identity(c));
        IntMat d = s.U * m * s.V;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                CHECK(d.at(i, j) == (i == j && i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0));
        for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
            CHECK(s.diag[i] >= 0);
            if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
            else CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
    }
}
