#pragma once

// Brute-force reference for the test suite. Plain vectors, maps and
// boost::rational only; nothing from the library is used here.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Q = boost::rational<std::int64_t>;
using Vec = std::vector<int>;

struct Val {
  Q r{0};
  Q w{0};  // phase over pi
  friend bool operator==(const Val&, const Val&) = default;
};

inline bool ge(const Val& a, const Val& b) { return a.r >= b.r && a.w >= b.w; }
inline Val lo(const Val& a, const Val& b) { return {std::min(a.r, b.r), std::min(a.w, b.w)}; }
inline Val hi(const Val& a, const Val& b) { return {std::max(a.r, b.r), std::max(a.w, b.w)}; }

struct Alg {
  int p = 2;
  int n = 1;
  std::vector<int> c;  // c[(i*n + j)*n + k]
  int at(int i, int j, int k) const { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
};

inline int md(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline std::vector<Vec> all_vectors(int p, int n) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == p - 1) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

inline Vec plus(const Alg& L, const Vec& x, const Vec& y) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = md(x[i] + y[i], L.p);
  return z;
}

inline Vec times(const Alg& L, int a, const Vec& x) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = md(static_cast<long long>(a) * x[i], L.p);
  return z;
}

inline Vec br(const Alg& L, const Vec& x, const Vec& y) {
  Vec z(static_cast<std::size_t>(L.n), 0);
  for (int k = 0; k < L.n; ++k) {
    long long s = 0;
    for (int i = 0; i < L.n; ++i)
      for (int j = 0; j < L.n; ++j) s += static_cast<long long>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(j)] * L.at(i, j, k);
    z[static_cast<std::size_t>(k)] = md(s, L.p);
  }
  return z;
}

inline bool is_lie(const Alg& L) {
  for (int i = 0; i < L.n; ++i)
    for (int k = 0; k < L.n; ++k)
      if (md(L.at(i, i, k), L.p) != 0) return false;
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j)
      for (int k = 0; k < L.n; ++k)
        if (md(L.at(i, j, k) + L.at(j, i, k), L.p) != 0) return false;
  const auto all = all_vectors(L.p, L.n);
  Vec e(static_cast<std::size_t>(L.n), 0);
  auto basis = [&](int i) {
    Vec b(static_cast<std::size_t>(L.n), 0);
    b[static_cast<std::size_t>(i)] = 1;
    return b;
  };
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j)
      for (int k = 0; k < L.n; ++k) {
        const auto x = basis(i), y = basis(j), z = basis(k);
        const auto s = plus(L, plus(L, br(L, x, br(L, y, z)), br(L, y, br(L, z, x))), br(L, z, br(L, x, y)));
        if (s != e) return false;
      }
  return true;
}

using Fuzzy = std::map<Vec, Val>;
using Crisp = std::set<Vec>;

enum class Verdict { ok, fail, not_homogeneous };

inline bool homogeneous(const Fuzzy& A) {
  for (const auto& [x, a] : A)
    for (const auto& [y, b] : A)
      if ((a.r <= b.r) != (a.w <= b.w)) return false;
  return true;
}

inline bool mutually_homogeneous(const Fuzzy& A, const Fuzzy& B) {
  for (const auto& [x, a] : A)
    for (const auto& [y, b] : B)
      if ((a.r <= b.r) != (a.w <= b.w)) return false;
  return true;
}

inline Verdict fuzzy_closed(const Alg& L, const Fuzzy& A, bool ideal) {
  if (!homogeneous(A)) return Verdict::not_homogeneous;
  for (const auto& [x, mx] : A) {
    for (int a = 0; a < L.p; ++a)
      if (!ge(A.at(times(L, a, x)), mx)) return Verdict::fail;
    for (const auto& [y, my] : A) {
      if (!ge(A.at(plus(L, x, y)), lo(mx, my))) return Verdict::fail;
      const auto bound = ideal ? hi(mx, my) : lo(mx, my);
      if (!ge(A.at(br(L, x, y)), bound)) return Verdict::fail;
    }
  }
  return Verdict::ok;
}

// Scalar fuzzy sets are handled as Val with both components equal.
inline bool scalar_closed(const Alg& L, const std::map<Vec, Q>& F, bool ideal) {
  for (const auto& [x, fx] : F) {
    for (int a = 0; a < L.p; ++a)
      if (F.at(times(L, a, x)) < fx) return false;
    for (const auto& [y, fy] : F) {
      if (F.at(plus(L, x, y)) < std::min(fx, fy)) return false;
      if (F.at(br(L, x, y)) < (ideal ? std::max(fx, fy) : std::min(fx, fy))) return false;
    }
  }
  return true;
}

inline bool crisp_closed(const Alg& L, const Crisp& S, bool ideal) {
  const auto all = all_vectors(L.p, L.n);
  for (const auto& x : S) {
    for (int a = 0; a < L.p; ++a)
      if (!S.count(times(L, a, x))) return false;
    for (const auto& y : S)
      if (!S.count(plus(L, x, y))) return false;
    for (const auto& y : ideal ? all : std::vector<Vec>(S.begin(), S.end()))
      if (!S.count(br(L, x, y))) return false;
  }
  return true;
}

inline Crisp upper(const Fuzzy& A, const Val& t, bool strong) {
  Crisp out;
  for (const auto& [x, v] : A)
    if (ge(v, t) && !(strong && v == t)) out.insert(x);
  return out;
}

inline std::vector<Val> image(const Fuzzy& A) {
  std::vector<Val> out;
  for (const auto& [x, v] : A)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// "Every level at t in Im(A) is a crisp subalgebra (ideal)".
inline bool levels_closed(const Alg& L, const Fuzzy& A, bool ideal, bool strong) {
  for (const auto& t : image(A))
    if (!crisp_closed(L, upper(A, t, strong), ideal)) return false;
  return true;
}

inline Crisp cut(const Fuzzy& A, const Q& alpha, const Q& beta, bool strict_r, bool strict_w) {
  Crisp out;
  for (const auto& [x, v] : A) {
    const bool r_ok = strict_r ? v.r > alpha : v.r >= alpha;
    const bool w_ok = strict_w ? v.w > beta : v.w >= beta;
    if (r_ok && w_ok) out.insert(x);
  }
  return out;
}

inline Fuzzy sum(const Alg& L, const Fuzzy& A, const Fuzzy& B) {
  Fuzzy out;
  for (const auto& [x, unused] : A) out[x] = Val{};
  for (const auto& [a, va] : A)
    for (const auto& [b, vb] : B) {
      auto& slot = out[plus(L, a, b)];
      slot = hi(slot, lo(va, vb));
    }
  return out;
}

inline Fuzzy meet_all(const std::vector<Fuzzy>& sets) {
  Fuzzy out = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i)
    for (auto& [x, v] : out) v = lo(v, sets[i].at(x));
  return out;
}

// m rows, n columns: phi(x)_i = sum_j M[i][j] x_j.
inline Vec apply(const std::vector<std::vector<int>>& M, int p, const Vec& x) {
  Vec y(M.size(), 0);
  for (std::size_t i = 0; i < M.size(); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<long long>(M[i][j]) * x[j];
    y[i] = md(s, p);
  }
  return y;
}

inline bool preserves_bracket(const Alg& S, const Alg& T, const std::vector<std::vector<int>>& M) {
  for (const auto& x : all_vectors(S.p, S.n))
    for (const auto& y : all_vectors(S.p, S.n))
      if (apply(M, S.p, br(S, x, y)) != br(T, apply(M, S.p, x), apply(M, S.p, y))) return false;
  return true;
}

inline Fuzzy preimage(const Alg& S, const std::vector<std::vector<int>>& M, const Fuzzy& B) {
  Fuzzy out;
  for (const auto& x : all_vectors(S.p, S.n)) out[x] = B.at(apply(M, S.p, x));
  return out;
}

inline Fuzzy image_of(const Alg& S, const Alg& T, const std::vector<std::vector<int>>& M, const Fuzzy& A) {
  Fuzzy out;
  for (const auto& y : all_vectors(T.p, T.n)) out[y] = Val{};
  for (const auto& [x, v] : A) {
    auto& slot = out[apply(M, S.p, x)];
    slot = hi(slot, v);
  }
  return out;
}

inline bool surjective(const Alg& S, const Alg& T, const std::vector<std::vector<int>>& M) {
  Crisp hit;
  for (const auto& x : all_vectors(S.p, S.n)) hit.insert(apply(M, S.p, x));
  return hit.size() == all_vectors(T.p, T.n).size();
}

inline std::vector<Crisp> subspaces(const Alg& L) {
  // Every subset closed under + and scalars, found by closing spans of vector sets.
  const auto all = all_vectors(L.p, L.n);
  auto close = [&](Crisp s) {
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<Vec> cur(s.begin(), s.end());
      for (const auto& x : cur) {
        for (int a = 0; a < L.p; ++a) grew |= s.insert(times(L, a, x)).second;
        for (const auto& y : cur) grew |= s.insert(plus(L, x, y)).second;
      }
    }
    return s;
  };
  std::set<Crisp> found{close({Vec(static_cast<std::size_t>(L.n), 0)})};
  std::vector<Crisp> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Crisp> next;
    for (const auto& s : frontier)
      for (const auto& v : all)
        if (!s.count(v)) {
          auto t = s;
          t.insert(v);
          t = close(t);
          if (found.insert(t).second) next.push_back(t);
        }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace oracle
