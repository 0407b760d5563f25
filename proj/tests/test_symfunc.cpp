#include <doctest.h>

#include <theta/symfunc.hpp>

#include <random>

using namespace theta;

namespace {

const QTPoly kq = QTPoly::var_q();
const QTPoly kt = QTPoly::var_t();

SymF elem(const Partition& mu) { return SymF::single(Basis::e, mu); }
SymF comp(const Partition& mu) { return SymF::single(Basis::h, mu); }
SymF mono(const Partition& mu) { return SymF::single(Basis::m, mu); }
SymF pow_sum(const Partition& mu) { return SymF::single(Basis::p, mu); }
SymF schur(const Partition& mu) { return SymF::single(Basis::s, mu); }

long z_of(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    long z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

SymF random_symf(int degree, Basis basis, std::mt19937& rng) {
    SymF f(degree, basis);
    std::uniform_int_distribution<int> coin(0, 3), val(-3, 3), ex(0, 1);
    for (const Partition& mu : partitions_of(degree)) {
        if (coin(rng) == 0) continue;
        QTPoly c(val(rng));
        c += QTPoly::monomial(ex(rng), ex(rng), val(rng));
        f.set_coeff(mu, QTRatio(c));
    }
    return f;
}

}  // namespace

TEST_CASE("basis conversions match classical expansions") {
    CHECK(convert(elem(Partition({2})), Basis::m) == mono(Partition({1, 1})));
    CHECK(convert(comp(Partition({2})), Basis::m) ==
          mono(Partition({2})) + mono(Partition({1, 1})));
    CHECK(convert(schur(Partition({1, 1})), Basis::e) == elem(Partition({2})));

    CHECK(convert(pow_sum(Partition({2})), Basis::m) == mono(Partition({2})));
    CHECK(convert(pow_sum(Partition({1, 1})), Basis::m) ==
          mono(Partition({2})) + QTRatio(2) * mono(Partition({1, 1})));
    CHECK(convert(schur(Partition({2, 1})), Basis::m) ==
          mono(Partition({2, 1})) + QTRatio(2) * mono(Partition({1, 1, 1})));
    CHECK(convert(elem(Partition({3})), Basis::m) == mono(Partition({1, 1, 1})));
    CHECK(convert(comp(Partition({3})), Basis::m) ==
          mono(Partition({3})) + mono(Partition({2, 1})) + mono(Partition({1, 1, 1})));
    CHECK(convert(schur(Partition({3})), Basis::h) == comp(Partition({3})));

    // Degree-0 and empty-support cases.
    CHECK(convert(SymF::one(Basis::e), Basis::m) == SymF::one());
    CHECK(convert(SymF(3, Basis::e), Basis::s).is_zero());
}

TEST_CASE("conversion round trips") {
    const Basis all[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
    std::mt19937 rng(7);
    for (int d = 1; d <= 6; ++d) {
        SymF f = random_symf(d, Basis::m, rng);
        for (Basis b : all)
            for (Basis c : all) CHECK(convert(convert(convert(f, b), c), Basis::m) == f);
    }
    for (const Partition& mu : partitions_of(7))
        for (Basis b : all) CHECK(convert(convert(schur(mu), b), Basis::s) == schur(mu));
}

TEST_CASE("hall scalar product") {
    CHECK(hall(schur(Partition({2})), schur(Partition({2}))) == QTRatio(1));
    CHECK(hall(schur(Partition({2})), schur(Partition({1, 1}))) == QTRatio(0));
    CHECK(hall(comp(Partition({2})), mono(Partition({2}))) == QTRatio(1));

    for (int d = 1; d <= 6; ++d)
        for (const Partition& la : partitions_of(d))
            for (const Partition& mu : partitions_of(d)) {
                QTRatio expect(la == mu ? 1 : 0);
                CHECK(hall(schur(la), schur(mu)) == expect);
                CHECK(hall(comp(la), mono(mu)) == expect);
                CHECK(hall(pow_sum(la), pow_sum(mu)) ==
                      (la == mu ? QTRatio(z_of(la)) : QTRatio(0)));
            }

    // m-coefficient extraction via duality with h.
    std::mt19937 rng(11);
    for (int d = 1; d <= 6; ++d) {
        SymF f = random_symf(d, Basis::s, rng);
        SymF fm = convert(f, Basis::m);
        for (const Partition& mu : partitions_of(d))
            CHECK(hall(f, comp(mu)) == fm.coeff(mu));
    }

    CHECK(hall(schur(Partition({2})), schur(Partition({1}))) == QTRatio(0));
}

TEST_CASE("omega involution") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(omega(elem(Partition({n}))) == comp(Partition({n})));
        CHECK(omega(comp(Partition({n}))) == elem(Partition({n})));
    }
    CHECK(omega(schur(Partition({2, 1}))) == schur(Partition({2, 1})));
    for (int d = 1; d <= 6; ++d)
        for (const Partition& mu : partitions_of(d))
            CHECK(omega(schur(mu)) == schur(mu.conjugate()));

    std::mt19937 rng(13);
    for (int d = 1; d <= 6; ++d) {
        SymF f = random_symf(d, Basis::h, rng);
        CHECK(omega(omega(f)) == f);
    }
}

TEST_CASE("plethystic alphabet scaling") {
    QTRatio M = qt_m();
    SymF e1_scaled = pleth_scale(elem(Partition({1})), M.inv());
    CHECK(e1_scaled.coeff(Partition({1})) == M.inv());

    SymF p2_scaled = pleth_scale(pow_sum(Partition({2})), M);
    QTRatio expect = QTRatio((QTPoly(1) - kq * kq) * (QTPoly(1) - kt * kt));
    CHECK(p2_scaled.coeff(Partition({2})) == expect);

    QTRatio one_minus_q_inv(QTPoly(1), QTPoly(1) - kq);
    SymF h2_scaled = convert(pleth_scale(comp(Partition({2})), one_minus_q_inv), Basis::p);
    CHECK(h2_scaled.coeff(Partition({1, 1})) ==
          QTRatio(QTPoly(1), (QTPoly(1) - kq) * (QTPoly(1) - kq) * QTPoly(2)));
    CHECK(h2_scaled.coeff(Partition({2})) ==
          QTRatio(QTPoly(1), (QTPoly(1) - kq * kq) * QTPoly(2)));

    // Scaling by M and then by 1/M is the identity.
    std::mt19937 rng(17);
    for (int d = 1; d <= 5; ++d) {
        SymF f = random_symf(d, Basis::m, rng);
        CHECK(pleth_scale(pleth_scale(f, M), M.inv()) == f);
    }
}

TEST_CASE("star scalar product") {
    QTRatio M = qt_m();
    CHECK(star(elem(Partition({1})), elem(Partition({1}))) == M);

    std::mt19937 rng(19);
    for (int d = 1; d <= 5; ++d) {
        SymF f = random_symf(d, Basis::m, rng);
        SymF g = random_symf(d, Basis::m, rng);
        CHECK(star(f, g) == star(g, f));
    }
}

TEST_CASE("multiplication") {
    CHECK(multiply(elem(Partition({1})), elem(Partition({1}))) ==
          mono(Partition({2})) + QTRatio(2) * mono(Partition({1, 1})));
    CHECK(multiply(comp(Partition({1})), comp(Partition({2}))) == comp(Partition({2, 1})));
    CHECK(multiply(elem(Partition({2})), elem(Partition({3}))) == elem(Partition({3, 2})));

    std::mt19937 rng(23);
    SymF f = random_symf(3, Basis::m, rng);
    CHECK(multiply(f, SymF::one()) == f);
    CHECK(multiply(SymF::one(), f) == f);

    // Pieri rule spot checks through the Schur basis.
    CHECK(multiply(schur(Partition({1})), schur(Partition({1}))) ==
          schur(Partition({2})) + schur(Partition({1, 1})));
    CHECK(multiply(schur(Partition({1})), schur(Partition({2, 1}))) ==
          schur(Partition({3, 1})) + schur(Partition({2, 2})) + schur(Partition({2, 1, 1})));
    CHECK(multiply(comp(Partition({1})), schur(Partition({2}))) ==
          schur(Partition({3})) + schur(Partition({2, 1})));

    // Result carries the left basis tag.
    CHECK(multiply(comp(Partition({1})), elem(Partition({2}))).basis() == Basis::h);
}

TEST_CASE("perp operators") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(perp(comp(Partition({1})), comp(Partition({n}))) == comp(Partition({n - 1})));
        CHECK(perp(elem(Partition({1})), elem(Partition({n}))) == elem(Partition({n - 1})));
    }
    CHECK(perp(pow_sum(Partition({1})), pow_sum(Partition({1, 1}))) ==
          QTRatio(2) * pow_sum(Partition({1})));

    std::mt19937 rng(29);
    for (int iter = 0; iter < 20; ++iter) {
        int df = 1 + iter % 2, dg = 2 + iter % 3;
        SymF f = random_symf(df, Basis::m, rng);
        SymF F = random_symf(df + dg, Basis::m, rng);
        SymF g = random_symf(dg, Basis::m, rng);
        CHECK(hall(perp(f, F), g) == hall(F, multiply(f, g)));
    }

    CHECK_THROWS_AS(perp(comp(Partition({2})), comp(Partition({1}))), std::invalid_argument);
}

TEST_CASE("fundamental quasi-symmetric coefficients") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(fundamental_content({n, {}}, Composition(std::vector<int>{n})) == 1);
        if (n >= 2) {
            std::set<int> full;
            for (int i = 1; i < n; ++i) full.insert(i);
            CHECK(fundamental_content({n, full}, Composition(std::vector<int>{n})) == 0);
            // Q with a full mask is e_n: only the all-ones content survives.
            for (const Partition& la : partitions_of(n)) {
                int expect = la.length() == n ? 1 : 0;
                CHECK(fundamental_content({n, full}, Composition(la.parts())) == expect);
            }
        }
        // Q with the empty mask is h_n: every content gives 1.
        for (const Partition& la : partitions_of(n))
            CHECK(fundamental_content({n, {}}, Composition(la.parts())) == 1);
    }
    CHECK(fundamental_content({2, {1}}, Composition({1, 1})) == 1);
    CHECK(fundamental_content({3, {2}}, Composition({1, 2})) == 0);
    CHECK(fundamental_content({3, {1}}, Composition({1, 2})) == 1);
    CHECK_THROWS_AS(fundamental_content({3, {1}}, Composition({1, 1})), std::invalid_argument);
}

TEST_CASE("symmetric function rendering") {
    SymF f(2, Basis::m);
    f.set_coeff(Partition({2}), QTRatio(1));
    f.set_coeff(Partition({1, 1}), QTRatio(QTPoly(1) + kq));
    CHECK(f.str() == "m[2] + (q+1)*m[1,1]");

    CHECK(SymF(4, Basis::s).str() == "0");
    CHECK(SymF::one().str() == "m[]");

    SymF g(3, Basis::m);
    g.set_coeff(Partition({3}), QTRatio(1));
    g.set_coeff(Partition({2, 1}), QTRatio(-2));
    g.set_coeff(Partition({1, 1, 1}), QTRatio(kq + kt));
    CHECK(g.str() == "m[3] - 2*m[2,1] + (q+t)*m[1,1,1]");

    SymF h(2, Basis::h);
    h.set_coeff(Partition({1, 1}), QTRatio(-1));
    CHECK(h.str() == "-h[1,1]");
    h.set_coeff(Partition({2}), QTRatio(QTPoly::monomial(1, 0, -3)));
    CHECK(h.str() == "-3*q*h[2] - h[1,1]");
}

TEST_CASE("degree cap") {
    CHECK(degree_cap() == 8);
    CHECK_THROWS_AS(convert(elem(Partition({9})), Basis::m), std::invalid_argument);
    set_degree_cap(9);
    CHECK(convert(elem(Partition({9})), Basis::m) ==
          mono(Partition({1, 1, 1, 1, 1, 1, 1, 1, 1})));
    set_degree_cap(8);
}
