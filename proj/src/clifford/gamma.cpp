#include "wres/clifford/gamma.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "wres/error.hpp"

namespace wres {

MonomialMatrix MonomialMatrix::identity(std::size_t dim) {
  MonomialMatrix r;
  r.col_.resize(dim);
  r.val_.assign(dim, GaussianRational(1));
  for (std::size_t k = 0; k < dim; ++k) r.col_[k] = k;
  return r;
}

GaussianRational MonomialMatrix::trace() const {
  GaussianRational t;
  for (std::size_t r = 0; r < col_.size(); ++r)
    if (col_[r] == r) t += val_[r];
  return t;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix r;
  r.col_.resize(a.dim());
  r.val_.resize(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const std::size_t mid = a.col_[k];
    r.col_[k] = b.col_[mid];
    r.val_[k] = a.val_[k] * b.val_[mid];
  }
  return r;
}

MonomialMatrix operator*(MonomialMatrix a, const GaussianRational& s) {
  for (auto& v : a.val_) v *= s;
  return a;
}

namespace {

// Pauli matrices: sigma1, sigma2, sigma3, identity
MonomialMatrix pauli(int which) {
  MonomialMatrix p;
  const GaussianRational i = GaussianRational::i();
  switch (which) {
    case 1:
      p.col_ = {1, 0};
      p.val_ = {GaussianRational(1), GaussianRational(1)};
      break;
    case 2:
      p.col_ = {1, 0};
      p.val_ = {-i, i};
      break;
    case 3:
      p.col_ = {0, 1};
      p.val_ = {GaussianRational(1), GaussianRational(-1)};
      break;
    default:
      p = MonomialMatrix::identity(2);
  }
  return p;
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix r;
  const std::size_t db = b.dim();
  r.col_.resize(a.dim() * db);
  r.val_.resize(a.dim() * db);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < db; ++j) {
      r.col_[i * db + j] = a.col_[i] * db + b.col_[j];
      r.val_[i * db + j] = a.val_[i] * b.val_[j];
    }
  return r;
}

MonomialMatrix tensor(const std::vector<int>& factors) {
  MonomialMatrix acc = MonomialMatrix::identity(1);
  for (int f : factors) acc = kron(acc, pauli(f));
  return acc;
}

}  // namespace

GammaRep gamma_build(unsigned n) {
  if (n % 2 == 0 || n < 3 || n > 13) throw Error("gamma_build: n must be odd with 3 <= n <= 13");
  const unsigned m = (n - 1) / 2;
  GammaRep rep;
  rep.n = n;
  const GaussianRational minus_i = -GaussianRational::i();
  for (unsigned k = 1; k <= m; ++k) {
    for (int p : {1, 2}) {
      std::vector<int> f(m, 0);
      for (unsigned j = 0; j + 1 < k; ++j) f[j] = 3;
      f[k - 1] = p;
      rep.gammas.push_back(tensor(f) * minus_i);
    }
  }
  rep.gammas.push_back(tensor(std::vector<int>(m, 3)) * minus_i);
  return rep;
}

const GammaRep& gamma_cached(unsigned n) {
  static std::array<std::unique_ptr<GammaRep>, 14> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (n >= cache.size()) throw Error("gamma_cached: n too large");
  if (!cache[n]) cache[n] = std::make_unique<GammaRep>(gamma_build(n));
  return *cache[n];
}

GaussianRational gamma_trace_oracle(const std::vector<unsigned>& word, const GammaRep& rep) {
  MonomialMatrix acc = MonomialMatrix::identity(rep.dim());
  for (unsigned k : word) {
    if (k < 1 || k > rep.n) throw Error("gamma_trace_oracle: generator index out of range");
    acc = acc * rep.gammas[k - 1];
  }
  return acc.trace();
}

std::map<std::vector<unsigned>, ScalarPoly> expand_to_generators(const CliffWord& w, const CliffordContext& ctx) {
  std::map<std::vector<unsigned>, ScalarPoly> acc{{{}, ScalarPoly(1)}};
  for (const auto& l : w) {
    std::vector<std::pair<unsigned, ScalarPoly>> parts;
    switch (l.kind) {
      case LetterKind::Gen:
        parts.emplace_back(l.index, ScalarPoly(1));
        break;
      case LetterKind::Z:
        for (unsigned k = 1; k <= ctx.n; ++k) parts.emplace_back(k, ctx.comp("Z", k));
        break;
      case LetterKind::Xi:
        for (unsigned k = 1; k < ctx.n; ++k) parts.emplace_back(k, ctx.comp("xi", k));
        break;
      default:
        throw Error("expand_to_generators: token letters have no generator expansion");
    }
    std::map<std::vector<unsigned>, ScalarPoly> next;
    for (const auto& [gw, c] : acc)
      for (const auto& [k, pc] : parts) {
        auto key = gw;
        key.push_back(k);
        next[key] += c * pc;
      }
    acc = std::move(next);
  }
  return acc;
}

ScalarPoly oracle_trace_word(const CliffWord& w, const CliffordContext& ctx) {
  const GammaRep& rep = gamma_cached(ctx.n);
  ScalarPoly acc;
  for (const auto& [gw, c] : expand_to_generators(w, ctx)) {
    GaussianRational t = gamma_trace_oracle(gw, rep);
    if (!t.is_zero()) acc += c * t;
  }
  return acc * GaussianRational(static_cast<long>(rep.dim())).inverse();
}

}  // namespace wres
