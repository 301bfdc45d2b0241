#include "wres/clifford/word.hpp"

#include "wres/error.hpp"

namespace wres {

unsigned Letter::rank() const {
  switch (kind) {
    case LetterKind::Z:
      return 0;
    case LetterKind::Xi:
      return 1;
    case LetterKind::Gen:
      return 1u + index;
    default:
      throw Error("rank of a token letter");
  }
}

std::string component(std::string_view base, unsigned k, unsigned n) {
  return std::string(base) + (k == n ? std::string("n") : std::to_string(k));
}

ScalarPoly CliffordContext::pairing(const Letter& u, const Letter& v) const {
  if (u.kind > v.kind) return pairing(v, u);
  using K = LetterKind;
  if (u.kind == K::Gen && v.kind == K::Gen) return ScalarPoly(u.index == v.index ? 1 : 0);
  ScalarPoly r;
  if (u.kind == K::Z && v.kind == K::Z) {
    for (unsigned k = 1; k <= n; ++k) r += comp("Z", k).pow(2);
  } else if (u.kind == K::Z && v.kind == K::Xi) {
    for (unsigned k = 1; k < n; ++k) r += comp("Z", k) * comp("xi", k);
  } else if (u.kind == K::Z && v.kind == K::Gen) {
    r = comp("Z", v.index);
  } else if (u.kind == K::Xi && v.kind == K::Xi) {
    if (unit_xi) return ScalarPoly(1);
    for (unsigned k = 1; k < n; ++k) r += comp("xi", k).pow(2);
  } else if (u.kind == K::Xi && v.kind == K::Gen) {
    if (v.index < n) r = comp("xi", v.index);
  } else {
    throw Error("pairing of a token letter");
  }
  return r;
}

void cexpr_add(CliffExpr& e, const CliffWord& w, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

namespace {

bool out_of_order(const CliffWord& w, std::size_t p) {
  return w[p].is_vector() && w[p + 1].is_vector() && w[p].rank() >= w[p + 1].rank();
}

void reduce_into(const CliffWord& w, const ScalarPoly& c, const CliffordContext& ctx, ReduceOrder order,
                 CliffExpr& out) {
  if (c.is_zero()) return;
  std::size_t p = w.size();
  if (w.size() >= 2) {
    if (order == ReduceOrder::left_to_right) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (out_of_order(w, k)) {
          p = k;
          break;
        }
    } else {
      for (std::size_t k = w.size() - 1; k-- > 0;)
        if (out_of_order(w, k)) {
          p = k;
          break;
        }
    }
  }
  if (p == w.size()) {
    cexpr_add(out, w, c);
    return;
  }
  const Letter u = w[p];
  const Letter v = w[p + 1];
  CliffWord shorter;
  shorter.reserve(w.size() - 2);
  shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(p));
  shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
  if (u.rank() == v.rank()) {
    reduce_into(shorter, c * -ctx.pairing(u, u), ctx, order, out);
    return;
  }
  CliffWord swapped = w;
  std::swap(swapped[p], swapped[p + 1]);
  reduce_into(swapped, -c, ctx, order, out);
  ScalarPoly g = ctx.pairing(u, v);
  if (!g.is_zero()) reduce_into(shorter, c * g * GaussianRational(-2), ctx, order, out);
}

}  // namespace

CliffExpr cw_reduce(const CliffWord& raw, const CliffordContext& ctx, ReduceOrder order) {
  CliffExpr out;
  reduce_into(raw, ScalarPoly(1), ctx, order, out);
  return out;
}

CliffExpr cw_reduce(const CliffExpr& raw, const CliffordContext& ctx, ReduceOrder order) {
  CliffExpr out;
  for (const auto& [w, c] : raw) reduce_into(w, c, ctx, order, out);
  return out;
}

CliffExpr cexpr_mul(const CliffExpr& a, const CliffExpr& b, const CliffordContext& ctx) {
  CliffExpr out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      CliffWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      reduce_into(w, ca * cb, ctx, ReduceOrder::left_to_right, out);
    }
  return out;
}

std::string letter_str(const Letter& l, unsigned n) {
  switch (l.kind) {
    case LetterKind::Z:
      return "c(Z)";
    case LetterKind::Xi:
      return "c(xi')";
    case LetterKind::Gen:
      return l.index == n ? "c(dxn)" : "c(e" + std::to_string(l.index) + ")";
    case LetterKind::DXi:
      return "dxn[c(xi')]";
    case LetterKind::DZ:
      return "dxn[c(Z)]";
    case LetterKind::AX:
      return "A(X)";
    case LetterKind::AY:
      return "A(Y)";
    case LetterKind::Sigma0D:
      return "sigma0(D)";
  }
  return "?";
}

std::string word_str(const CliffWord& w, unsigned n) {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w) s += letter_str(l, n);
  return s;
}

}  // namespace wres
