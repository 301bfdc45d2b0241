#include "properties.hpp"

#include <memory>

#include "wres/clifford/gamma.hpp"
#include "wres/clifford/trace.hpp"
#include "wres/error.hpp"
#include "wres/symb/context.hpp"

namespace wres::testing {

namespace {

const AlphabetPtr& st_alphabet() {
  static const AlphabetPtr a = std::make_shared<const Alphabet>(std::vector<std::string>{"s", "t"});
  return a;
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

GaussianRational factorial(unsigned k) {
  GaussianRational f(1);
  for (unsigned j = 2; j <= k; ++j) f *= GaussianRational(static_cast<long>(j));
  return f;
}

void expect(PropertyResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok && r.failures.size() < 10) r.failures.push_back(what);
}

}  // namespace

std::string PropertyResult::describe() const {
  std::string s = std::to_string(checked - failures.size()) + "/" + std::to_string(checked) + " checks hold";
  for (const auto& f : failures) s += "; " + f;
  return s;
}

GaussianRational random_rational(std::mt19937_64& rng) {
  const GaussianRational re = GaussianRational::fraction(uniform(rng, -9, 9), uniform(rng, 1, 6));
  const GaussianRational im = GaussianRational::fraction(uniform(rng, -9, 9), uniform(rng, 1, 6));
  return uniform(rng, 0, 2) == 0 ? re : re + im * GaussianRational::i();
}

ScalarPoly random_scalar(std::mt19937_64& rng) {
  ScalarPoly p(random_rational(rng));
  if (uniform(rng, 0, 1)) p += ScalarPoly::symbol(st_alphabet(), "s") * random_rational(rng);
  if (uniform(rng, 0, 2) == 0) p += ScalarPoly::symbol(st_alphabet(), "t") * random_rational(rng);
  return p;
}

RatFun random_ratfun(std::mt19937_64& rng, unsigned max_pole) {
  const unsigned plus = static_cast<unsigned>(uniform(rng, 0, max_pole));
  const unsigned minus = static_cast<unsigned>(uniform(rng, plus == 0 ? 1 : 0, max_pole));
  const long total = static_cast<long>(plus + minus);
  const long deg = uniform(rng, 0, std::min<long>(total - 1, 6));
  std::vector<ScalarPoly> c;
  for (long k = 0; k <= deg; ++k) c.push_back(uniform(rng, 0, 3) == 0 ? ScalarPoly() : random_scalar(rng));
  c.back() = random_scalar(rng);
  return RatFun(XiPoly(std::move(c)), plus, minus);
}

RatFun random_minus_ratfun(std::mt19937_64& rng, unsigned max_pole) {
  const unsigned minus = static_cast<unsigned>(uniform(rng, 1, max_pole));
  const long deg = uniform(rng, 0, std::min<long>(minus - 1, 6));
  std::vector<ScalarPoly> c;
  for (long k = 0; k <= deg; ++k) c.push_back(random_scalar(rng));
  return RatFun(XiPoly(std::move(c)), 0, minus);
}

PropertyResult check_cauchy(std::size_t samples, std::uint64_t seed, unsigned max_pole) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const GaussianRational two_i(mpq_class(0), mpq_class(2));
  for (std::size_t t = 0; t < samples; ++t) {
    const RatFun f = random_ratfun(rng, max_pole);
    const unsigned p = f.pole_order_plus();
    ScalarPoly formula;
    if (p > 0) {
      // res_{+i} f = [(x-i)^p f]^{(p-1)}(i) / (p-1)!
      const RatFun g(f.numerator(), 0, f.pole_order_minus());
      formula = rf_deriv_at(g, p - 1, GaussianRational::i()) * (two_i / factorial(p - 1));
    }
    expect(r, rf_contour_plus_over_pi(f) == formula, "contour of " + f.str());
    expect(r, rf_contour_plus_over_pi(rf_deriv(f)).is_zero(), "contour of derivative of " + f.str());
  }
  return r;
}

PropertyResult check_projection(std::size_t samples, std::uint64_t seed, unsigned max_pole) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (std::size_t t = 0; t < samples; ++t) {
    const RatFun f = random_ratfun(rng, max_pole);
    const RatFun g = random_ratfun(rng, max_pole);
    const ScalarPoly a = random_scalar(rng);
    const ScalarPoly b = random_scalar(rng);
    const RatFun pf = rf_pi_plus(f);
    expect(r, rf_pi_plus(pf) == pf, "idempotence on " + f.str());
    expect(r, rf_pi_plus(f * a + g * b) == pf * a + rf_pi_plus(g) * b, "linearity on " + f.str());
    expect(r, (f - pf).pole_order_plus() == 0, "complement pole at +i for " + f.str());
    expect(r, rf_pi_plus(rf_deriv(f)) == rf_deriv(pf), "derivative commutation on " + f.str());
    expect(r, rf_pi_prime(random_minus_ratfun(rng, max_pole)).is_zero(), "pi' on H-");
  }
  return r;
}

PropertyResult check_trace_oracle(unsigned n, std::size_t samples, std::uint64_t seed, unsigned max_len) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  CliffordContext cc = make_context((n - 1) / 2)->cliff;
  cc.unit_xi = false;
  std::vector<Letter> pool{Letter::of(LetterKind::Z), Letter::of(LetterKind::Xi)};
  for (unsigned k = 1; k <= n; ++k) pool.push_back(Letter::gen(k));
  for (std::size_t t = 0; t < samples; ++t) {
    CliffWord w;
    const long len = uniform(rng, 0, max_len);
    for (long j = 0; j < len; ++j) w.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, pool.size() - 1))]);
    ScalarPoly rules;
    bool volume = false;
    for (const auto& [rw, c] : cw_reduce(w, cc)) {
      // The rules refuse odd words that may carry the volume element.
      if (rw.size() % 2 == 1 && rw.size() >= n) {
        volume = true;
        break;
      }
      rules += c * cw_trace_word(rw, cc);
    }
    if (volume) continue;
    expect(r, rules == oracle_trace_word(w, cc), "n=" + std::to_string(n) + " word " + word_str(w, n));
  }
  return r;
}

PropertyResult check_gamma_rep(unsigned n) {
  PropertyResult r;
  const GammaRep& rep = gamma_cached(n);
  const std::size_t dim = rep.dim();
  expect(r, dim == (std::size_t{1} << rep.m()), "dimension 2^m");
  expect(r, MonomialMatrix::identity(dim).trace() == GaussianRational(static_cast<long>(dim)), "tr[id] = 2^m");
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      const MonomialMatrix ab = rep.gammas[a] * rep.gammas[b];
      const MonomialMatrix ba = rep.gammas[b] * rep.gammas[a];
      bool ok = true;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          const GaussianRational want = (a == b && i == j) ? GaussianRational(-2) : GaussianRational();
          ok = ok && ab.entry(i, j) + ba.entry(i, j) == want;
        }
      expect(r, ok, "anticommutator of e" + std::to_string(a + 1) + ", e" + std::to_string(b + 1));
    }
  return r;
}

}  // namespace wres::testing
