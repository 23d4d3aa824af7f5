#pragma once

// Brute-force linear algebra over the p-element field: reduced row echelon
// bases, exhaustive subspace enumeration, flag enumeration, and chain
// counting. This is the independent oracle side of the house; nothing here
// knows about q-brackets or Gaussian binomials.

#include <cstdint>
#include <map>
#include <vector>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"

namespace btq::fp {

using Vec = std::vector<uint32_t>;    // entries reduced mod p
using Basis = std::vector<Vec>;       // RREF rows; the canonical name of a subspace

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
  // p is a small prime, a != 0
  uint32_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1u) r = static_cast<uint32_t>((static_cast<uint64_t>(r) * b) % p);
    b = static_cast<uint32_t>((static_cast<uint64_t>(b) * b) % p);
    e >>= 1u;
  }
  return r;
}

// Reduced row echelon form; zero rows dropped. The result is the canonical
// basis of the row space.
inline Basis rref(Basis m, uint32_t p) {
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    uint32_t inv = inv_mod(m[rank][col] % p, p);
    for (auto& x : m[rank]) x = static_cast<uint32_t>((static_cast<uint64_t>(x) * inv) % p);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] % p == 0) continue;
      uint32_t f = m[r][col] % p;
      for (size_t c = 0; c < cols; ++c)
        m[r][c] = static_cast<uint32_t>((m[r][c] + static_cast<uint64_t>(p - f) * m[rank][c]) % p);
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

// All rank-k RREF matrices with n columns, i.e. all k-dimensional subspaces
// of F_p^n, each exactly once. Deterministic order: pivot-column sets in
// lexicographic order, then free entries as a base-p odometer.
inline std::vector<Basis> all_rref(int n, int k, uint32_t p) {
  std::vector<Basis> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> piv(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
  auto emit = [&]() {
    // free positions: (row i, col j) with j > piv[i], j not a pivot column
    std::vector<std::pair<int, int>> free_pos;
    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    for (int i = 0; i < k; ++i)
      for (int j = piv[static_cast<size_t>(i)] + 1; j < n; ++j)
        if (!is_piv[static_cast<size_t>(j)]) free_pos.emplace_back(i, j);
    std::vector<uint32_t> digits(free_pos.size(), 0);
    while (true) {
      Basis b(static_cast<size_t>(k), Vec(static_cast<size_t>(n), 0));
      for (int i = 0; i < k; ++i) b[static_cast<size_t>(i)][static_cast<size_t>(piv[static_cast<size_t>(i)])] = 1;
      for (size_t t = 0; t < free_pos.size(); ++t)
        b[static_cast<size_t>(free_pos[t].first)][static_cast<size_t>(free_pos[t].second)] = digits[t];
      out.push_back(std::move(b));
      size_t t = 0;
      while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
      if (t == digits.size() && !digits.empty()) break;
      if (digits.empty()) break;
    }
  };
  // iterate pivot-column combinations in lexicographic order
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

// Proper nonzero subspaces of F_p^n, dimension 1 first.
inline std::vector<Basis> proper_nonzero_subspaces(int n, uint32_t p) {
  std::vector<Basis> out;
  for (int k = 1; k <= n - 1; ++k) {
    auto part = all_rref(n, k, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Proper nonzero subspaces of the row space of `ambient` (a rank-k basis,
// not necessarily reduced), returned as ambient-coordinate RREF bases.
inline std::vector<Basis> proper_nonzero_subspaces_of(const Basis& ambient, uint32_t p) {
  const int k = static_cast<int>(ambient.size());
  const size_t n = ambient.empty() ? 0 : ambient[0].size();
  std::vector<Basis> out;
  for (int kk = 1; kk <= k - 1; ++kk) {
    for (const auto& local : all_rref(k, kk, p)) {
      Basis rows(static_cast<size_t>(kk), Vec(n, 0));
      for (int i = 0; i < kk; ++i)
        for (int j = 0; j < k; ++j) {
          uint32_t c = local[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (c == 0) continue;
          for (size_t t = 0; t < n; ++t)
            rows[static_cast<size_t>(i)][t] = static_cast<uint32_t>(
                (rows[static_cast<size_t>(i)][t] + static_cast<uint64_t>(c) * ambient[static_cast<size_t>(j)][t]) % p);
        }
      out.push_back(rref(std::move(rows), p));
    }
  }
  return out;
}

inline std::vector<uint32_t> key(const Basis& b) {
  std::vector<uint32_t> k;
  k.push_back(static_cast<uint32_t>(b.size()));
  for (const auto& row : b) k.insert(k.end(), row.begin(), row.end());
  return k;
}

}  // namespace btq::fp

namespace btq {

namespace oracle_limits {
// p^n guard from the operation contract, plus internal workload caps so a
// configuration inside the p^n guard but outside desk scale fails fast
// instead of grinding.
inline constexpr long long kMaxFieldPoints = 4096;
inline constexpr size_t kMaxSubspaces = 200000;
inline constexpr size_t kMaxLinks = 5000000;
}  // namespace oracle_limits

namespace detail {
inline void check_oracle_guard(int n, uint32_t p) {
  if (n < 1) fail(errc::invalid_parameter, "oracle needs n >= 1");
  if (!is_prime(p)) fail(errc::unsupported_field, "oracle needs a prime p");
  BigInt points = big_pow(BigInt(p), static_cast<unsigned>(n));
  if (points > oracle_limits::kMaxFieldPoints)
    fail(errc::too_large, "p^n exceeds the oracle guard");
}
}  // namespace detail

// Number of k-dimensional subspaces of F_p^n by exhaustive enumeration.
inline BigInt subspace_count_oracle(int n, int k, uint32_t p) {
  detail::check_oracle_guard(n, p);
  if (k < 0 || k > n) return BigInt(0);
  auto subs = fp::all_rref(n, k, p);
  if (subs.size() > oracle_limits::kMaxSubspaces)
    fail(errc::too_large, "subspace enumeration exceeds the workload cap");
  return BigInt(subs.size());
}

// Number of chains V != F_1 > F_2 > ... > F_i != 0 of subspaces of F_p^n,
// counted by dynamic programming over the exhaustively enumerated subspace
// containment structure.
inline BigInt flag_count_oracle(int n, int i, uint32_t p) {
  detail::check_oracle_guard(n, p);
  if (i < 1 || i > n - 1) fail(errc::invalid_parameter, "flag_count_oracle needs 1 <= i <= n-1");
  auto subs = fp::proper_nonzero_subspaces(n, p);
  if (subs.size() > oracle_limits::kMaxSubspaces)
    fail(errc::too_large, "subspace enumeration exceeds the workload cap");
  std::map<std::vector<uint32_t>, size_t> index;
  for (size_t s = 0; s < subs.size(); ++s) index[fp::key(subs[s])] = s;
  // children[s] = indices of proper nonzero subspaces of subs[s]
  std::vector<std::vector<size_t>> children(subs.size());
  size_t links = 0;
  for (size_t s = 0; s < subs.size(); ++s) {
    for (const auto& sub : fp::proper_nonzero_subspaces_of(subs[s], p)) {
      children[s].push_back(index.at(fp::key(sub)));
      if (++links > oracle_limits::kMaxLinks)
        fail(errc::too_large, "containment structure exceeds the workload cap");
    }
  }
  std::vector<BigInt> f(subs.size(), BigInt(1));  // chains of length 1 topped at s
  for (int t = 2; t <= i; ++t) {
    std::vector<BigInt> g(subs.size(), BigInt(0));
    for (size_t s = 0; s < subs.size(); ++s)
      for (size_t c : children[s]) g[s] += f[c];
    f = std::move(g);
  }
  BigInt total(0);
  for (const auto& x : f) total += x;
  return total;
}

// All chains S_1 > S_2 > ... > S_i of proper nonzero subspaces of F_p^n, in
// deterministic enumeration order. Used by the building layer, where each
// chain lifts to one i-simplex at a vertex.
inline std::vector<std::vector<fp::Basis>> enumerate_flags(int n, uint32_t p, int i) {
  detail::check_oracle_guard(n, p);
  if (i < 1 || i > n - 1) fail(errc::invalid_parameter, "enumerate_flags needs 1 <= i <= n-1");
  std::vector<std::vector<fp::Basis>> out;
  std::vector<fp::Basis> chain;
  auto rec = [&](auto&& self, const fp::Basis& top, int depth) -> void {
    if (depth == i) {
      out.push_back(chain);
      return;
    }
    for (const auto& sub : fp::proper_nonzero_subspaces_of(top, p)) {
      if (static_cast<int>(sub.size()) < i - depth) continue;  // cannot reach length i
      chain.push_back(sub);
      self(self, sub, depth + 1);
      chain.pop_back();
    }
  };
  for (const auto& s : fp::proper_nonzero_subspaces(n, p)) {
    if (static_cast<int>(s.size()) < i) continue;
    chain.push_back(s);
    rec(rec, s, 1);
    chain.pop_back();
  }
  return out;
}

}  // namespace btq
