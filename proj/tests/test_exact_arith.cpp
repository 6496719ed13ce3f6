#include <random>
#include <vector>

#include "cutcheck/algnum.hpp"
#include "cutcheck/rational.hpp"
#include "cutcheck/rootisol.hpp"
#include "cutcheck/upoly.hpp"
#include "doctest.h"

using namespace cutcheck;

namespace {

UP up_from(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UP::from_coeffs(std::move(c));
}

UP random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-6, 6);
    std::vector<Rat> c(deg(rng) + 1);
    for (auto& ci : c) ci = Rat(coef(rng));
    UP p = UP::from_coeffs(std::move(c));
    return p;
}

}  // namespace

TEST_CASE("simplest rational between prefers small denominators") {
    Rat r = simplest_rational_between(Rat(31, 100), Rat(35, 100));
    CHECK(r == Rat(1, 3));
    Rat s = simplest_rational_between(Rat(-5, 2), Rat(7, 3));
    CHECK(s.get_den() == 1);
    CHECK(Rat(-5, 2) < s);
    CHECK(s < Rat(7, 3));
    // degenerate-width interval still yields an interior point
    Rat t = simplest_rational_between(Rat(355, 113), Rat(356, 113));
    CHECK(Rat(355, 113) < t);
    CHECK(t < Rat(356, 113));
}

TEST_CASE("decimal literals convert exactly") {
    CHECK(rat_from_decimal("1.25") == Rat(5, 4));
    CHECK(rat_from_decimal("0.1") == Rat(1, 10));
    CHECK(rat_from_decimal("12") == Rat(12));
}

TEST_CASE("division invariant holds on random polynomials") {
    std::mt19937 rng(7);
    int tried = 0;
    while (tried < 60) {
        UP a = random_poly(rng, 6), b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        ++tried;
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd recovers a planted common factor") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        UP h = random_poly(rng, 3);
        if (h.degree() < 1) continue;
        UP a = random_poly(rng, 3), b = random_poly(rng, 3);
        if (a.is_zero() || b.is_zero()) continue;
        UP g = upoly_gcd(a * h, b * h);
        // h divides the gcd of its multiples
        CHECK((g % h.monic()).is_zero());
    }
}

TEST_CASE("squarefree part keeps the root set and drops multiplicity") {
    UP p = up_from({-1, 1});          // x - 1
    UP q = up_from({2, 1});           // x + 2
    UP full = p * p * p * q * q;
    UP sf = squarefree_part(full);
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rat(1)) == Rat(0));
    CHECK(sf.eval(Rat(-2)) == Rat(0));
}

TEST_CASE("sturm count and VCA isolation agree on planted roots") {
    // roots at -2, -1/2, 1, 3; double root should not inflate the count
    UP p = up_from({2, 1}) * up_from({1, 2}) * up_from({-1, 1}) * up_from({-3, 1}) *
           up_from({-3, 1});
    CHECK(up_sturm_count_rat(p, Rat(-10), Rat(10)) == 4);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 4);
    std::vector<Rat> expected = {Rat(-2), Rat(-1, 2), Rat(1), Rat(3)};
    for (size_t i = 0; i < 4; ++i) {
        if (roots[i].exact) {
            CHECK(roots[i].value == expected[i]);
        } else {
            CHECK(roots[i].iv.lo < expected[i]);
            CHECK(expected[i] < roots[i].iv.hi);
        }
    }
}

TEST_CASE("isolation count matches sturm on random products of linear factors") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 4), cnt(1, 5);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Rat> roots;
        UP p = UP(Rat(1));
        int k = cnt(rng);
        for (int i = 0; i < k; ++i) {
            Rat r(num(rng), den(rng));
            bool dup = false;
            for (const auto& s : roots) dup = dup || s == r;
            if (dup) continue;
            roots.push_back(r);
            p = p * UP::from_coeffs({-r, Rat(1)});
        }
        auto iso = isolate_real_roots(p);
        CHECK(iso.size() == roots.size());
        Rat bound = up_root_bound(p);
        CHECK((int)iso.size() == up_sturm_count_rat(p, -bound, bound));
    }
}

TEST_CASE("isolating intervals bracket irrational roots") {
    UP p = up_from({-2, 0, 1});  // x^2 - 2
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        REQUIRE_FALSE(r.exact);
        // p changes sign across the interval
        CHECK(sign(p.eval(r.iv.lo)) * sign(p.eval(r.iv.hi)) < 0);
    }
    CHECK(roots[0].iv.hi <= Rat(0));
    CHECK(roots[1].iv.lo >= Rat(0));
}

TEST_CASE("algebraic comparison separates close values") {
    UP f = up_from({-2, 0, 1});
    AlgNum sqrt2 = AlgNum::from_root(f, RatIv(Rat(1), Rat(2)));
    // 1.41421356 < sqrt(2) < 1.41421357
    CHECK(AlgNum::compare(sqrt2, AlgNum(Rat(141421356, 100000000))) > 0);
    CHECK(AlgNum::compare(sqrt2, AlgNum(Rat(141421357, 100000000))) < 0);
    AlgNum same = AlgNum::from_root(f, RatIv(Rat(0), Rat(3, 2) + Rat(1, 7)));
    CHECK(AlgNum::compare(sqrt2, same) == 0);
    AlgNum neg = AlgNum::from_root(f, RatIv(Rat(-2), Rat(-1)));
    CHECK(AlgNum::compare(neg, sqrt2) < 0);
}

TEST_CASE("field arithmetic over Q(sqrt2)") {
    UP f = up_from({-2, 0, 1});
    auto ctx = std::make_shared<AlgCtx>(f, Rat(1), Rat(2));
    AFElem alpha(ctx, UP::from_coeffs({Rat(0), Rat(1)}));
    AFElem two(2);
    CHECK(kis_zero(alpha * alpha - two));
    CHECK(ksign(alpha) > 0);
    // 1/(1+alpha) = alpha - 1 since (1+alpha)(alpha-1) = alpha^2 - 1 = 1
    AFElem inv = kdiv(AFElem(1), AFElem(1) + alpha);
    CHECK(kis_zero(inv - (alpha - AFElem(1))));
    RatIv box = (alpha * alpha * alpha).enclosure(Rat(1, 1000));
    // alpha^3 = 2*sqrt(2) ~ 2.8284
    CHECK(box.lo < Rat(28285, 10000));
    CHECK(box.hi > Rat(28284, 10000));
}

TEST_CASE("fiber isolation works over an extension") {
    UP f = up_from({-2, 0, 1});
    auto ctx = std::make_shared<AlgCtx>(f, Rat(1), Rat(2));
    AFElem alpha(ctx, UP::from_coeffs({Rat(0), Rat(1)}));
    // y^2 - alpha: two real fourth roots of 2
    UPA p = UPA::from_coeffs({-alpha, AFElem(0), AFElem(1)});
    auto roots = isolate_fiber_roots(p);
    CHECK(roots.size() == 2);
    // y^2 + alpha has no real roots
    UPA q = UPA::from_coeffs({alpha, AFElem(0), AFElem(1)});
    CHECK(isolate_fiber_roots(q).empty());
}

TEST_CASE("tarski query gives signed root counts") {
    UPA p = upa_from_up(up_from({-2, 0, 1}));  // roots +-sqrt(2)
    UPA one = upa_from_up(UP(Rat(1)));
    UPA x = upa_from_up(UP::from_coeffs({Rat(0), Rat(1)}));
    CHECK(tarski_query(p, one, Rat(-2), Rat(2)) == 2);
    CHECK(tarski_query(p, x, Rat(-2), Rat(2)) == 0);
    CHECK(tarski_query(p, x, Rat(0), Rat(2)) == 1);
    CHECK(tarski_query(p, x, Rat(-2), Rat(0)) == -1);
}
