#include <doctest.h>

#include <set>

#include "tcat/simplex.hpp"

using namespace tcat;

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("generators") {
    CHECK(SimplexMap::face(1, 0).values() == std::vector<int>{1, 2});
    CHECK(SimplexMap::degeneracy(1, 0).values() == std::vector<int>{0, 0, 1});
    CHECK(SimplexMap::face(0, 1).values() == std::vector<int>{0});
    CHECK_THROWS(SimplexMap::face(2, 4));
    CHECK_THROWS(SimplexMap::degeneracy(2, 3));

    // faces injective, degeneracies surjective
    for (int n = 0; n <= 4; ++n) {
        for (int i = 0; i <= n + 1; ++i) CHECK(SimplexMap::face(n, i).is_injective());
        for (int i = 0; i <= n; ++i) {
            const auto s = SimplexMap::degeneracy(n, i);
            std::set<int> image(s.values().begin(), s.values().end());
            CHECK(image.size() == static_cast<std::size_t>(n + 1));
        }
    }
}

TEST_CASE("composition") {
    auto s0 = SimplexMap::degeneracy(0, 0);  // [1]->[0]
    auto d0 = SimplexMap::face(0, 0);        // [0]->[1]
    CHECK(compose(s0, d0).is_identity());
    CHECK(compose(SimplexMap::face(1, 1), SimplexMap::face(0, 0)).values() ==
          std::vector<int>{2});
    CHECK(compose(SimplexMap::face(1, 1), SimplexMap::face(0, 0)) ==
          compose(SimplexMap::face(1, 0), SimplexMap::face(0, 0)));
    auto f = SimplexMap(2, 3, {0, 2, 2});
    CHECK(compose(SimplexMap::identity(3), f) == f);
    CHECK(compose(f, SimplexMap::identity(2)) == f);
    CHECK_THROWS(compose(f, f));
}

TEST_CASE("associativity and units on all small composables") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (const auto& f : enumerate_hom(a, b, HomKind::Delta))
                    for (const auto& g : enumerate_hom(b, c, HomKind::Delta))
                        for (const auto& h : enumerate_hom(c, 2, HomKind::Delta))
                            CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
}

TEST_CASE("simplicial identities among generators") {
    const int bound = 5;
    for (int n = 0; n <= bound; ++n) {
        // d_j d_i = d_i d_{j-1} for i < j (as maps [n] -> [n+2])
        for (int i = 0; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 2; ++j)
                CHECK(compose(SimplexMap::face(n + 1, j), SimplexMap::face(n, i)) ==
                      compose(SimplexMap::face(n + 1, i), SimplexMap::face(n, j - 1)));
        // s_j s_i = s_i s_{j+1} for i <= j (as maps [n+2] -> [n])
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                CHECK(compose(SimplexMap::degeneracy(n, i), SimplexMap::degeneracy(n + 1, j + 1)) ==
                      compose(SimplexMap::degeneracy(n, j), SimplexMap::degeneracy(n + 1, i)));
        // mixed relations
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j) {
                auto lhs = compose(SimplexMap::degeneracy(n, j), SimplexMap::face(n, i));
                if (i < j)
                    CHECK(lhs == compose(SimplexMap::face(n - 1, i),
                                         SimplexMap::degeneracy(n - 1, j - 1)));
                else if (i == j || i == j + 1)
                    CHECK(lhs.is_identity());
                else
                    CHECK(lhs == compose(SimplexMap::face(n - 1, i - 1),
                                         SimplexMap::degeneracy(n - 1, j)));
            }
    }
}

TEST_CASE("top preserving") {
    CHECK(SimplexMap::degeneracy(0, 0).is_top_preserving());
    CHECK_FALSE(SimplexMap::face(0, 1).is_top_preserving());
    CHECK(SimplexMap::chi(2, 1).is_top_preserving());
    // closed under composition, contains identities
    for (int a = 0; a <= 3; ++a) {
        CHECK(SimplexMap::identity(a).is_top_preserving());
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& f : enumerate_hom(a, b, HomKind::DeltaR))
                    for (const auto& g : enumerate_hom(b, c, HomKind::DeltaR))
                        CHECK(compose(g, f).is_top_preserving());
    }
}

TEST_CASE("chi maps") {
    CHECK(SimplexMap::chi(2, 1).values() == std::vector<int>{0, 1, 1});
    CHECK(SimplexMap::chi(2, 0).values() == std::vector<int>{1, 1, 1});
    CHECK(SimplexMap::chi(2, 3).values() == std::vector<int>{0, 0, 0});
    CHECK_THROWS(SimplexMap::chi(2, 4));
    for (int m = 0; m <= 4; ++m)
        for (int j = 0; j <= m + 1; ++j)
            CHECK(SimplexMap::chi(m, j).is_top_preserving() == (j <= m));
    // chi_h . delta_j = chi_h (h <= j), chi_{h-1} otherwise
    for (int m = 1; m <= 4; ++m)
        for (int h = 0; h <= m + 1; ++h)
            for (int j = 0; j <= m; ++j) {
                auto lhs = compose(SimplexMap::chi(m, h), SimplexMap::face(m - 1, j));
                CHECK(lhs == (h <= j ? SimplexMap::chi(m - 1, h) : SimplexMap::chi(m - 1, h - 1)));
            }
    // every map into [1] is a chi
    for (int m = 0; m <= 4; ++m) {
        auto all = enumerate_hom(m, 1, HomKind::Delta);
        std::set<SimplexMap> chis;
        for (int j = 0; j <= m + 1; ++j) chis.insert(SimplexMap::chi(m, j));
        CHECK(chis.size() == all.size());
    }
}

TEST_CASE("factorization") {
    {
        auto fac = factorize(SimplexMap(1, 2, {0, 1}));
        CHECK(fac.k == 1);
        CHECK(fac.top.is_identity());
    }
    {
        auto fac = factorize(SimplexMap(0, 2, {0}));
        CHECK(fac.k == 0);
        CHECK(fac.top.is_identity());
    }
    // phi = incl . top with top top-preserving, exhaustively; and the pair
    // map (k, psi) -> incl.psi is inverse to factorize
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            std::set<SimplexMap> seen;
            for (const auto& phi : enumerate_hom(m, n, HomKind::Delta)) {
                auto fac = factorize(phi);
                CHECK(fac.top.is_top_preserving());
                CHECK(compose(fac.incl, fac.top) == phi);
                CHECK(seen.insert(phi).second);
            }
            std::size_t rebuilt = 0;
            for (int k = 0; k <= n; ++k) {
                for (const auto& psi : enumerate_hom(m, k, HomKind::DeltaR)) {
                    std::vector<int> incl(k + 1);
                    for (int t = 0; t <= k; ++t) incl[t] = t;
                    auto phi = compose(SimplexMap(k, n, incl), psi);
                    CHECK(seen.count(phi) == 1);
                    ++rebuilt;
                }
            }
            CHECK(rebuilt == seen.size());
        }
}

TEST_CASE("R and U_R") {
    CHECK(apply_R(SimplexMap::degeneracy(0, 0)) == SimplexMap::degeneracy(1, 0));
    CHECK(apply_UR(SimplexMap::face(0, 1)).values() == std::vector<int>{0, 2});
    for (int n = 0; n <= 4; ++n)
        CHECK(apply_UR(SimplexMap::identity(n)) == SimplexMap::identity(n + 1));
    CHECK_THROWS(apply_R(SimplexMap::face(0, 1)));
    // R delta_i = delta_i, R sigma_i = sigma_i one level up
    for (int n = 0; n <= 3; ++n) {
        for (int i = 0; i <= n; ++i) {
            CHECK(apply_R(SimplexMap::face(n, i)) == SimplexMap::face(n + 1, i));
            CHECK(apply_R(SimplexMap::degeneracy(n, i)) == SimplexMap::degeneracy(n + 1, i));
        }
    }
    // functoriality of U_R
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& f : enumerate_hom(a, b, HomKind::Delta))
                    for (const auto& g : enumerate_hom(b, c, HomKind::Delta))
                        CHECK(apply_UR(compose(g, f)) == compose(apply_UR(g), apply_UR(f)));
}

TEST_CASE("top extension") {
    CHECK(top_extension(SimplexMap(0, 1, {0})).values() == std::vector<int>{0, 1});
    CHECK(top_extension(SimplexMap::face(0, 0)).values() == std::vector<int>{1, 1});
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (const auto& theta : enumerate_hom(m, n, HomKind::Delta)) {
                auto ext = top_extension(theta);
                CHECK(ext.is_top_preserving());
                CHECK(compose(ext, SimplexMap::face(m, m + 1)) == theta);
            }
}

TEST_CASE("hom enumeration counts") {
    CHECK(enumerate_hom(1, 1, HomKind::Delta).size() == 3);
    CHECK(enumerate_hom(1, 1, HomKind::DeltaR).size() == 2);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            CHECK(enumerate_hom(m, n, HomKind::Delta).size() ==
                  static_cast<std::size_t>(binomial(m + n + 1, m + 1)));
            CHECK(enumerate_hom(m, n, HomKind::DeltaR).size() ==
                  static_cast<std::size_t>(binomial(m + n, m)));
            // hockey stick: sum_k |Delta_r(m,k)| = |Delta(m,n)|
            std::size_t total = 0;
            for (int k = 0; k <= n; ++k) total += enumerate_hom(m, k, HomKind::DeltaR).size();
            CHECK(total == enumerate_hom(m, n, HomKind::Delta).size());
        }
}

TEST_CASE("last-level decomposition bijection") {
    // [sigma_n . R(-), U_R(-)] : Delta_r(m,n) + Delta(m,n-1) -> Delta_r(m+1,n)
    for (int m = 0; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            std::set<SimplexMap> image;
            for (const auto& psi : enumerate_hom(m, n, HomKind::DeltaR)) {
                auto mapped = compose(SimplexMap::degeneracy(n, n), apply_R(psi));
                CHECK(mapped.is_top_preserving());
                CHECK(image.insert(mapped).second);
            }
            for (const auto& phi : enumerate_hom(m, n - 1, HomKind::Delta))
                CHECK(image.insert(apply_UR(phi)).second);
            CHECK(image.size() == enumerate_hom(m + 1, n, HomKind::DeltaR).size());
        }
}
