#include "support.hpp"

#include "oracles.hpp"

#include <charfact/characters.hpp>

using namespace charfact;

namespace {

LaurentPoly x(int arity, int i, int e = 1, int t = 1) { return LaurentPoly::variable(arity, t, i - 1, e); }
LaurentPoly one(int arity, int t = 1) { return LaurentPoly::one(arity, t); }

}  // namespace

TEST_CASE("schur basics") {
    auto X1 = ValueTuple::base(1);
    CHECK(schur(Partition{}, X1) == one(1));
    CHECK(schur(Partition{2}, twist(X1, 2)) == x(1, 1, 2, 2));
    CHECK(schur(Partition{2}, twist(X1, 2)).to_string() == "x1^2");
    for (int n = 1; n <= 3; ++n) {
        auto v = ValueTuple::base(n);
        for (int k = 0; k <= 3; ++k) {
            std::vector<int> col(static_cast<std::size_t>(k), 1);
            CHECK(schur(Partition(col), v) == oracle::elementary(k, v));
        }
    }
}

TEST_CASE("schur agrees with tableau enumeration") {
    for (int n = 1; n <= 3; ++n) {
        auto v = ValueTuple::base(n);
        for (const auto& lambda : partitions_up_to(6))
            CHECK(schur(lambda, v) == oracle::schur_by_tableaux(lambda, v));
    }
    // Also on a specialization with roots of unity and constants.
    auto tw = append_constant(twist(ValueTuple::base(1), 3), 1);
    for (const auto& lambda : partitions_up_to(5))
        CHECK(schur(lambda, tw) == oracle::schur_by_tableaux(lambda, tw));
}

TEST_CASE("skew schur") {
    auto v = ValueTuple::base(2);
    CHECK(skew_schur(Partition{2, 1}, Partition{2, 1}, v) == one(2));
    CHECK(skew_schur(Partition{2, 1}, Partition{2, 2}, v).is_zero());
    auto s = x(2, 1) + x(2, 2);
    CHECK(skew_schur(Partition{2, 1}, Partition{1}, v) == s * s);
    for (const auto& lambda : partitions_up_to(5)) {
        CHECK(skew_schur(lambda, Partition{}, v) == schur(lambda, v));
        for (const auto& mu : subpartitions(lambda))
            CHECK(skew_schur(lambda, mu, v) == oracle::schur_by_tableaux(lambda, mu, v));
    }
}

TEST_CASE("padding does not change the determinant") {
    auto v = append_constant(ValueTuple::base(2), -1);
    for (const auto& lambda : partitions_up_to(5)) {
        int n = std::max(lambda.length(), 1);
        HSeries h(v, lambda[1] + n + 2);
        auto base = schur(lambda, h);
        for (int extra = 1; extra <= 2; ++extra) {
            int size = n + extra;
            PolyMatrix m(static_cast<std::size_t>(size));
            for (int i = 1; i <= size; ++i)
                for (int j = 1; j <= size; ++j)
                    m[static_cast<std::size_t>(i - 1)].push_back(h(lambda[i] - i + j));
            CHECK(det(m, v.arity(), v.modulus()) == base);
            // Same for the orthogonal and symplectic shapes.
            PolyMatrix o(static_cast<std::size_t>(size)), sp(static_cast<std::size_t>(size)),
                so(static_cast<std::size_t>(size));
            for (int i = 1; i <= size; ++i)
                for (int j = 1; j <= size; ++j) {
                    int a = lambda[i] - i;
                    o[static_cast<std::size_t>(i - 1)].push_back(h(a + j) - h(a - j));
                    sp[static_cast<std::size_t>(i - 1)].push_back(h(a + j) + h(a - j + 2));
                    so[static_cast<std::size_t>(i - 1)].push_back(h(a + j) + h(a - j + 1));
                }
            CHECK(det(o, v.arity(), v.modulus()) == univ_o(lambda, v));
            CHECK(exact_div_int(det(sp, v.arity(), v.modulus()), 2) == univ_sp(lambda, v));
            CHECK(det(so, v.arity(), v.modulus()) == univ_so(lambda, v));
        }
    }
}

TEST_CASE("classical characters, small cases") {
    auto X1 = ValueTuple::base(1);
    auto X2 = ValueTuple::base(2);
    CHECK(odd_orth(Partition{}, X1) == one(1));
    CHECK(odd_orth(Partition{1}, X1).to_string() == "x1 + 1 + x1^-1");
    CHECK(symplectic(Partition{}, X2) == one(2));
    CHECK(even_orth(Partition{}, X2) == one(2));
    CHECK(symplectic(Partition{1}, X1) == x(1, 1) + x(1, 1, -1));
    CHECK(even_orth(Partition{1}, X1) == x(1, 1) + x(1, 1, -1));
    CHECK(univ_o(Partition{}, X2) == one(2));
    CHECK(univ_sp(Partition{}, X2) == one(2));
    CHECK(univ_so(Partition{}, X2) == one(2));
    CHECK(univ_so_minus(Partition{}, X2) == one(2));
    // oo of a single row at 1 is 2*l + 1.
    auto at_one = ValueTuple(0, 1);
    at_one.push_back({CycInt(1, 1), Monomial{}});
    for (int l = 0; l <= 4; ++l)
        CHECK(odd_orth(Partition{l}, at_one) == LaurentPoly::constant(0, 1, 2 * l + 1));
}

TEST_CASE("classical characters are symmetric under inversion and permutation") {
    for (int n = 1; n <= 3; ++n) {
        auto X = ValueTuple::base(n);
        for (const auto& lambda : partitions_up_to(n == 3 ? 4 : 5, n)) {
            auto s = schur(lambda, X);
            auto sp = symplectic(lambda, X);
            auto oe = even_orth(lambda, X);
            auto oo = odd_orth(lambda, X);
            for (int i = 0; i < n; ++i) {
                CHECK(invert_var(sp, i) == sp);
                CHECK(invert_var(oe, i) == oe);
                CHECK(invert_var(oo, i) == oo);
            }
            if (n >= 2) {
                std::vector<int> perm(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    perm[static_cast<std::size_t>(i)] = (i + 1) % n;
                CHECK(permute_vars(s, perm) == s);
                CHECK(permute_vars(sp, perm) == sp);
                CHECK(permute_vars(oe, perm) == oe);
                CHECK(permute_vars(oo, perm) == oo);
            }
        }
    }
}

TEST_CASE("universal characters specialize to classical ones") {
    auto X = ValueTuple::base(2);
    auto XX = with_bars(X);
    for (const auto& lambda : partitions_up_to(5, 2)) {
        CHECK(univ_o(lambda, XX) == even_orth(lambda, X));
        CHECK(univ_sp(lambda, XX) == symplectic(lambda, X));
        CHECK(univ_so(lambda, XX) == odd_orth(lambda, X));
    }
}

TEST_CASE("so-minus is a signed so at negated arguments") {
    // The relation needs -V on one side: for lambda = (1), V = (x) the
    // unsigned-argument form would compare x - 1 with -x - 1.
    auto x1 = ValueTuple::base(1);
    CHECK_FALSE(univ_so_minus(Partition{1}, x1) == -univ_so(Partition{1}, x1));
    for (int arity = 1; arity <= 2; ++arity) {
        auto v = ValueTuple::base(arity);
        for (const auto& lambda : partitions_up_to(6)) {
            auto so = univ_so(lambda, neg(v));
            CHECK(univ_so_minus(lambda, v) == (lambda.size() % 2 ? -so : so));
        }
    }
}

TEST_CASE("branching rules") {
    // Split X = (x1, x2), Y = (x3, x4) inside one ring.
    auto X = ValueTuple::variables(4, 0, 2);
    auto Y = ValueTuple::variables(4, 2, 2);
    auto XY = concat(X, Y);
    for (const auto& lambda : partitions_up_to(5)) {
        LaurentPoly s(4, 1), o(4, 1), sp(4, 1);
        for (const auto& mu : subpartitions(lambda)) {
            auto skew = skew_schur(lambda, mu, Y);
            s += schur(mu, X) * skew;
            o += univ_o(mu, X) * skew;
            sp += univ_sp(mu, X) * skew;
        }
        CHECK(schur(lambda, XY) == s);
        CHECK(univ_o(lambda, XY) == o);
        CHECK(univ_sp(lambda, XY) == sp);
    }
}

namespace {

/// Product of all atoms of V.
LaurentPoly atom_product(const ValueTuple& v) {
    LaurentPoly p = LaurentPoly::one(v.arity(), v.modulus());
    for (const auto& a : v.atoms())
        p = p.times_term(a.coeff, a.mono);
    return p;
}

}  // namespace

TEST_CASE("mixed universal characters") {
    auto X1 = ValueTuple::base(1);
    CHECK(rs(Partition{}, Partition{}, X1) == one(1));
    // One alphabet throughout: rs_{(1),(1)}(x) = x^2 - 1, which vanishes at x = 1.
    CHECK(rs(Partition{1}, Partition{1}, X1) == x(1, 1, 2) - one(1));
    ValueTuple at_one(0, 1);
    at_one.push_back({CycInt(1, 1), Monomial{}});
    CHECK(rs(Partition{1}, Partition{1}, at_one).is_zero());
    CHECK(rs(Partition{2}, Partition{}, at_one) == LaurentPoly::one(0, 1));
}

TEST_CASE("littlewood expansion of (lambda, -mu)_n") {
    // With V-bar in the second factor and the mu_1 shift made explicit, the
    // expansion holds for any tuple of n atoms.
    for (int n = 1; n <= 4; ++n) {
        auto v = ValueTuple::base(n);
        auto vb = bars(v);
        int bound = n >= 3 ? 5 : 6;
        for (const auto& lambda : partitions_up_to(bound))
            for (const auto& mu : partitions_up_to(bound - lambda.size())) {
                if (lambda.length() + mu.length() > n)
                    continue;
                LaurentPoly sum(n, 1);
                for (const auto& nu : subpartitions(lambda)) {
                    auto term = skew_schur(lambda, nu, v) * skew_schur(mu, conjugate(nu), vb);
                    sum += nu.size() % 2 ? -term : term;
                }
                CHECK(sum * atom_product(v).pow(mu[1]) == schur(concat_neg(lambda, mu, n), v));
            }
    }
}

TEST_CASE("rs equals the mixed Schur polynomial on inverse-closed tuples") {
    // (X, X-bar) and (X, X-bar, 1) are closed under inversion with atom
    // product 1, which is where the one-alphabet rs meets s_{(lambda,-mu)_n}.
    for (int k = 1; k <= 2; ++k) {
        for (bool with_one : {false, true}) {
            auto v = with_bars(ValueTuple::base(k));
            if (with_one)
                v = append_constant(v, 1);
            int n = static_cast<int>(v.size());
            for (const auto& lambda : partitions_up_to(4))
                for (const auto& mu : partitions_up_to(4 - lambda.size())) {
                    if (lambda.length() + mu.length() > n)
                        continue;
                    CHECK(rs(lambda, mu, v) == schur(concat_neg(lambda, mu, n), v));
                }
        }
    }
}

TEST_CASE("hook schur") {
    auto x1 = ValueTuple::variables(2, 0, 1);
    auto y1 = ValueTuple::variables(2, 1, 1);
    CHECK(hook_schur(Partition{}, x1, y1) == one(2));
    CHECK(hook_schur(Partition{1}, x1, y1) == x(2, 1) + x(2, 2));
    // Setting x_n = u, y_m = -u removes u.
    auto X = ValueTuple::variables(3, 0, 2);
    // Y = (x3, -x2): x2 plays u.
    auto Yneg = ValueTuple(3, 1);
    Yneg.push_back({CycInt(1, 1), Monomial::variable(2)});
    Yneg.push_back({CycInt(1, -1), Monomial::variable(1)});
    for (const auto& lambda : partitions_up_to(5)) {
        auto hs = hook_schur(lambda, X, Yneg);
        for (const auto& term : hs.terms())
            CHECK(term.mono[1] == 0);
    }
}

TEST_CASE("character kinds by name") {
    CHECK(parse_character_kind("so-odd") == CharacterKind::OddOrth);
    CHECK(parse_character_kind("univ-so-minus") == CharacterKind::UnivSoMinus);
    CHECK_FALSE(parse_character_kind("nope").has_value());
    auto v = parse_tuple("X(1)");
    CHECK(evaluate_character(CharacterKind::OddOrth, Partition{1}, v).to_string() == "x1 + 1 + x1^-1");
    CHECK(evaluate_character(CharacterKind::Symplectic, Partition{}, parse_tuple("X(2)")).to_string() == "1");
}
