#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsv/cylinder.hpp"
#include "lsv/derivation.hpp"
#include "lsv/models.hpp"
#include "lsv/morphism.hpp"
#include "lsv/series.hpp"

using namespace lsv;

namespace {

AlphabetPtr yx() { return Alphabet::make({{"y", -1}, {"x", 0}}); }

Series gen(const AlphabetPtr& a, int order, std::string_view name) {
  return Series::generator(a, order, name);
}

// Random sparse series over `alphabet` with words of length <= maxlen.
Series random_series(const AlphabetPtr& alphabet, int order, int maxlen,
                     std::mt19937_64& rng, bool constant_free = true) {
  std::uniform_int_distribution<int> len(constant_free ? 1 : 0, maxlen);
  std::uniform_int_distribution<int> letter(0, int(alphabet->size()) - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  std::map<Word, Rational> terms;
  for (int t = 0; t < 6; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w = w + Word::single(Letter(letter(rng)));
    terms[w] += rational(num(rng), den(rng));
  }
  return Series::from_terms(alphabet, order, std::move(terms));
}

}  // namespace

TEST_CASE("word ordering is length-first then lexicographic") {
  Word e;
  Word x0 = Word::single(0), x1 = Word::single(1);
  CHECK(e < x0);
  CHECK(x0 < x1);
  CHECK(x1 < x0 + x0);
  CHECK(x0 + x1 < x1 + x0);
}

TEST_CASE("product: unit, letters, binomial example") {
  auto a = yx();
  Series one = Series::unit(a, 4);
  Series y = gen(a, 4, "y"), x = gen(a, 4, "x");
  CHECK(product(one + y, one + x) == one + y + x + product(y, x));
  Series s = product(y, product(x, y));
  CHECK(product(s, one) == s);
  auto u_alpha = Alphabet::make({{"u", -1}});
  Series u = Series::generator(u_alpha, 2, "u");
  Series uu = product(u, u);
  CHECK(uu.term_count() == 1);
  CHECK(uu.coeff(Word::single(0) + Word::single(0)) == rational(1));
}

TEST_CASE("product discards words beyond the common order") {
  auto a = yx();
  Series x2 = gen(a, 2, "x");
  Series x3 = gen(a, 3, "x");
  Series p = product(product(x2, x2), x3);  // order 2, x³ truncated away
  CHECK(p.order() == 2);
  CHECK(p.is_zero());
}

TEST_CASE("bracket Koszul signs") {
  auto ls = ls_alphabet();
  Series a = gen(ls, 4, "a"), b = gen(ls, 4, "b"), z = gen(ls, 4, "z");
  // odd self-bracket doubles
  CHECK(bracket(a, a) == product(a, a).scaled(rational(2)));
  // even self-commutator vanishes
  CHECK(bracket(z, z).is_zero());
  // mixed degrees 0,-1: [z,b] = z⊗b - b⊗z
  CHECK(bracket(z, b) == product(z, b) - product(b, z));
  // odd-odd: [a,b] = a⊗b + b⊗a
  CHECK(bracket(a, b) == product(a, b) + product(b, a));
}

TEST_CASE("graded antisymmetry on homogeneous inputs") {
  auto ls = ls_alphabet();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Series s = random_series(ls, 6, 3, rng);
    Series t = random_series(ls, 6, 3, rng);
    for (int ds = -3; ds <= 0; ++ds)
      for (int dt = -3; dt <= 0; ++dt) {
        Series sh(ls, 6), th(ls, 6);
        for (const auto& [w, c] : s.terms())
          if (w.degree(*ls) == ds) sh += Series::monomial(ls, 6, w, c);
        for (const auto& [w, c] : t.terms())
          if (w.degree(*ls) == dt) th += Series::monomial(ls, 6, w, c);
        if (sh.is_zero() || th.is_zero()) continue;
        Series sum = bracket(sh, th);
        Series flipped = bracket(th, sh);
        // [s,t] + (-1)^{|s||t|} [t,s] = 0
        Series anti = (ds * dt) % 2 != 0 ? sum - flipped : sum + flipped;
        CHECK(anti.is_zero());
      }
  }
}

TEST_CASE("graded Jacobi identity on generator triples") {
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (const auto& alphabet : {ls_alphabet(), cylinder_alphabet()}) {
    int n = int(alphabet->size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Series x = Series::generator(alphabet, 6, Letter(i));
          Series y = Series::generator(alphabet, 6, Letter(j));
          Series z = Series::generator(alphabet, 6, Letter(k));
          Series lhs = bracket(x, bracket(y, z));
          Series rhs = bracket(bracket(x, y), z);
          Series tail = bracket(y, bracket(x, z));
          bool neg = (alphabet->degree(Letter(i)) % 2 != 0) &&
                     (alphabet->degree(Letter(j)) % 2 != 0);
          CHECK((lhs - rhs - (neg ? -tail : tail)).is_zero());
        }
  }
}

TEST_CASE("associativity on randomized sparse inputs") {
  auto cyl = cylinder_alphabet();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    Series r = random_series(cyl, 7, 3, rng, false);
    Series s = random_series(cyl, 7, 3, rng, false);
    Series t = random_series(cyl, 7, 3, rng, false);
    CHECK(product(product(r, s), t) == product(r, product(s, t)));
  }
}

TEST_CASE("brackets of constant-free series never produce the empty word") {
  auto ls = ls_alphabet();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Series s = random_series(ls, 5, 3, rng);
    Series t = random_series(ls, 5, 3, rng);
    CHECK(is_zero(bracket(s, t).constant_term()));
  }
}

TEST_CASE("exp: unit, truncation, product of exponentials") {
  auto a = yx();
  Series zero(a, 6);
  CHECK(exp(zero) == Series::unit(a, 6));
  Series x = gen(a, 2, "x");
  Series one2 = Series::unit(a, 2);
  CHECK(exp(x) == one2 + x + product(x, x).scaled(rational(1, 2)));
  // direct product oracle at order 2
  Series y = gen(a, 2, "y");
  Series expected = one2 + y + x + product(y, y).scaled(rational(1, 2)) +
                    product(y, x) + product(x, x).scaled(rational(1, 2));
  CHECK(product(exp(y), exp(x)) == expected);
  CHECK_THROWS_AS(exp(Series::unit(a, 3)), std::invalid_argument);
}

TEST_CASE("log1p inverts exp - 1") {
  auto a = yx();
  CHECK(log1p(Series(a, 5)).is_zero());
  Series x = gen(a, 6, "x");
  CHECK(log1p(exp(x) - Series::unit(a, 6)) == x);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Series s = random_series(a, 5, 3, rng);
    CHECK(exp(log1p(s)) - Series::unit(a, 5) == s);
    CHECK(log1p(exp(s) - Series::unit(a, 5)) == s);
  }
  CHECK_THROWS_AS(log1p(Series::unit(a, 3)), std::invalid_argument);
}

TEST_CASE("ad_pow basics and even-parameter binomial expansion") {
  auto ls = ls_alphabet();
  Series z = gen(ls, 7, "z"), b = gen(ls, 7, "b"), a = gen(ls, 7, "a");
  CHECK(ad_pow(z, 0, b) == b);
  CHECK(ad_pow(z, 1, b) == product(z, b) - product(b, z));
  // ad_z^n(a) = sum_k (-1)^k C(n,k) z^{n-k} a z^k for the even letter z
  Letter zl = ls->letter("z"), al = ls->letter("a");
  for (unsigned n = 0; n <= 6; ++n) {
    Series expected(ls, 7);
    for (unsigned k = 0; k <= n; ++k) {
      Rational c = binomial(n, long(k));
      if (k % 2 != 0) c = -c;
      expected += Series::monomial(
          ls, 7, word_power(zl, n - k) + Word::single(al) + word_power(zl, k),
          c);
    }
    CHECK(ad_pow(z, n, a) == expected);
  }
}

TEST_CASE("truncation coherence for product, bracket, exp and derive") {
  auto ls = ls_alphabet();
  std::mt19937_64 rng(23);
  DifferentialModel full = model_ls(8);
  for (int trial = 0; trial < 10; ++trial) {
    Series s = random_series(ls, 8, 4, rng);
    Series t = random_series(ls, 8, 4, rng);
    for (int m : {3, 5}) {
      CHECK(product(s, t).truncated(m) ==
            product(s.truncated(m), t.truncated(m)));
      CHECK(bracket(s, t).truncated(m) ==
            bracket(s.truncated(m), t.truncated(m)));
      CHECK(exp(s).truncated(m) == exp(s.truncated(m)));
      CHECK(derive(full.differential, s).truncated(m) ==
            derive(model_ls(m).differential, s.truncated(m)));
    }
  }
}

TEST_CASE("derivation: flat generator and Leibniz signs") {
  DifferentialModel ls = model_ls(6);
  Series a = ls.generator("a");
  Series da = derive(ls.differential, a);
  CHECK(da == -product(a, a));
  // d(a⊗a) = (da)⊗a - a⊗(da): Koszul sign (-1)^{(-1)(-1)} = -1
  CHECK(derive(ls.differential, product(a, a)) ==
        product(da, a) - product(a, da));
  CHECK(derive(ls.differential, da).is_zero());  // d²a = 0
}

TEST_CASE("derivation Leibniz rule on homogeneous randomized inputs") {
  auto ls = ls_alphabet();
  DifferentialModel model = model_ls(7);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    Series s = random_series(ls, 7, 3, rng);
    Series t = random_series(ls, 7, 3, rng);
    for (int ds = -3; ds <= 0; ++ds) {
      Series sh(ls, 7);
      for (const auto& [w, c] : s.terms())
        if (w.degree(*ls) == ds) sh += Series::monomial(ls, 7, w, c);
      if (sh.is_zero()) continue;
      Series lhs = derive(model.differential, product(sh, t));
      Series rhs = product(derive(model.differential, sh), t);
      Series tail = product(sh, derive(model.differential, t));
      rhs += (ds % 2 != 0) ? -tail : tail;  // deg(D) = -1
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("derivation requires matching alphabet and sufficient order") {
  DifferentialModel ls = model_ls(4);
  Series foreign = Series::generator(cylinder_alphabet(), 4, "u");
  CHECK_THROWS_AS(derive(ls.differential, foreign), std::invalid_argument);
  Series deep = Series::generator(ls_alphabet(), 9, "a");
  CHECK_THROWS_AS(derive(ls.differential, deep), std::invalid_argument);
}

TEST_CASE("morphism: identity, substitution, annihilation") {
  auto ls = ls_alphabet();
  auto cyl = cylinder_alphabet();
  std::mt19937_64 rng(31);
  AlgebraMorphism id = identity_morphism(ls, 6);
  for (int trial = 0; trial < 6; ++trial) {
    Series s = random_series(ls, 6, 3, rng, false);
    CHECK(morph(id, s) == s);
  }
  // a |-> u, b |-> u', z |-> su applied to [z,b]
  AlgebraMorphism phi(ls, cyl,
                      {Series::generator(cyl, 6, "u"),
                       Series::generator(cyl, 6, "u'"),
                       Series::generator(cyl, 6, "su")});
  Series z = gen(ls, 6, "z"), b = gen(ls, 6, "b");
  Series su = Series::generator(cyl, 6, "su");
  Series u1 = Series::generator(cyl, 6, "u'");
  CHECK(morph(phi, bracket(z, b)) == product(su, u1) - product(u1, su));
  // u,u' |-> u, su |-> 0 kills words containing su
  auto s0 = s0_alphabet();
  Series u = Series::generator(s0, 6, "u");
  AlgebraMorphism proj(cyl, s0, {u, u, Series(s0, 6)});
  CHECK(morph(proj, product(su, u1)).is_zero());
}

TEST_CASE("morphism construction rejects degree violations") {
  auto ls = ls_alphabet();
  // a has degree -1; z (degree 0) is not a legal image for it
  CHECK_THROWS_AS(AlgebraMorphism(ls, ls,
                                  {Series::generator(ls, 4, "z"),
                                   Series::generator(ls, 4, "b"),
                                   Series::generator(ls, 4, "z")}),
                  std::invalid_argument);
  // the zero series is homogeneous of every degree
  CHECK_NOTHROW(AlgebraMorphism(ls, ls,
                                {Series(ls, 4), Series(ls, 4),
                                 Series::generator(ls, 4, "z")}));
}

TEST_CASE("alphabet mismatch is rejected") {
  Series s = Series::generator(ls_alphabet(), 4, "a");
  Series t = Series::generator(cylinder_alphabet(), 4, "u");
  CHECK_THROWS_AS(product(s, t), std::invalid_argument);
  CHECK_THROWS_AS(bracket(s, t), std::invalid_argument);
  CHECK_THROWS_AS(s + t, std::invalid_argument);
}

TEST_CASE("structural alphabet equality makes rebuilt alphabets compatible") {
  auto a1 = Alphabet::make({{"a", -1}, {"b", -1}, {"z", 0}});
  Series s = Series::generator(a1, 4, "a");
  Series t = Series::generator(ls_alphabet(), 4, "b");
  CHECK_NOTHROW(product(s, t));
}

TEST_CASE("series equality is through-order coefficient equality") {
  auto a = yx();
  Series x6 = gen(a, 6, "x"), x4 = gen(a, 6, "x");
  Series cube = product(product(x6, x6), x6);
  CHECK(equal_through(x6 + cube, x4, 2));
  CHECK_FALSE(equal_through(x6 + cube, x4, 3));
  CHECK_THROWS_AS(equal_through(x6, x6.truncated(3), 5), std::invalid_argument);
}

TEST_CASE("from_terms validates and strips zeros") {
  auto a = yx();
  std::map<Word, Rational> terms;
  terms[Word::single(0)] = rational(0);
  terms[Word::single(1)] = rational(2, 4);
  Series s = Series::from_terms(a, 3, std::move(terms));
  CHECK(s.term_count() == 1);
  CHECK(to_string(s.coeff(Word::single(1))) == "1/2");

  std::map<Word, Rational> too_long;
  too_long[word_power(0, 5)] = rational(1);
  CHECK_THROWS_AS(Series::from_terms(a, 3, std::move(too_long)),
                  std::invalid_argument);
  std::map<Word, Rational> bad_letter;
  bad_letter[Word::single(7)] = rational(1);
  CHECK_THROWS_AS(Series::from_terms(a, 3, std::move(bad_letter)),
                  std::invalid_argument);
}

TEST_CASE("homogeneity queries") {
  auto ls = ls_alphabet();
  Series a = gen(ls, 4, "a"), b = gen(ls, 4, "b"), z = gen(ls, 4, "z");
  CHECK(a.is_homogeneous_of(-1));
  CHECK((a + b).is_homogeneous_of(-1));
  CHECK((a + b).homogeneous_degree() == -1);
  CHECK_FALSE((a + z).homogeneous_degree().has_value());
  CHECK(Series(ls, 4).is_homogeneous_of(-1));
  CHECK(Series(ls, 4).is_homogeneous_of(0));
  CHECK(product(z, b).is_homogeneous_of(-1));
}

TEST_CASE("canonical text rendering is length-lex with exact coefficients") {
  auto ls = ls_alphabet();
  Series a = gen(ls, 3, "a"), b = gen(ls, 3, "b"), z = gen(ls, 3, "z");
  CHECK(Series(ls, 3).to_text() == "0");
  CHECK(Series::unit(ls, 3).to_text() == "1");
  Series s = product(z, b).scaled(rational(-1, 2)) + a +
             Series::unit(ls, 3).scaled(rational(3));
  CHECK(s.to_text() == "3 + 1·a + -1/2·z⊗b");
}

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  using detail::ParallelMode;
  auto cyl = cylinder_alphabet();
  std::mt19937_64 rng(37);
  DifferentialModel model = cyl_perturbed(8);
  for (int trial = 0; trial < 8; ++trial) {
    Series s = random_series(cyl, 8, 4, rng, false);
    Series t = random_series(cyl, 8, 4, rng, false);
    CHECK(detail::product_serial(s, t) == detail::product_parallel(s, t));
    CHECK(detail::bracket_serial(s, t) == detail::bracket_parallel(s, t));
    CHECK(detail::derive_serial(model.differential, s) ==
          detail::derive_parallel(model.differential, s));
  }
  // forced modes through the public entry points
  Series dsu = model.differential.image(cyl->letter("su"));
  detail::set_parallel_mode(ParallelMode::ForceParallel);
  Series forced = derive(model.differential, dsu);
  detail::set_parallel_mode(ParallelMode::ForceSerial);
  Series reference = derive(model.differential, dsu);
  detail::set_parallel_mode(ParallelMode::Auto);
  CHECK(forced == reference);
}
