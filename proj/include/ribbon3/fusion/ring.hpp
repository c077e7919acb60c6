#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ribbon3/errors.hpp"

namespace ribbon3::fusion {

inline constexpr int kRank = 3;

// N[i][j][k]: multiplicity of b_k in b_i * b_j.
using Tensor = std::array<std::array<std::array<long, kRank>, kRank>, kRank>;
using Involution = std::array<int, kRank>;

// Parameters of the self-dual family K(k,l,m,n):
//   X^2 = 1 + mX + kY,  Y^2 = 1 + lX + nY,  XY = YX = kX + lY.
struct Rank3Params {
  long k = 0, l = 0, m = 0, n = 0;

  bool nonnegative() const { return k >= 0 && l >= 0 && m >= 0 && n >= 0; }
  bool satisfies_star() const { return k * k + l * l == l * m + k * n + 1; }

  // The same ring with X and Y relabeled.
  Rank3Params swapped() const { return {l, k, n, m}; }

  std::array<long, 4> as_array() const { return {k, l, m, n}; }
  std::string to_string() const {
    return "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  std::string name() const { return "K" + to_string(); }

  friend bool operator==(const Rank3Params&, const Rank3Params&) = default;
  friend auto operator<=>(const Rank3Params&, const Rank3Params&) = default;
};

// Lexicographic minimum over the swap orbit.
inline Rank3Params canonicalize(const Rank3Params& p) { return std::min(p, p.swapped()); }

struct AxiomReport {
  bool unit = true;
  bool duality = true;
  bool involution = true;
  bool associativity = true;
  std::string first_failure;                        // axiom name, empty if none
  std::optional<std::array<int, 4>> first_violation;  // offending index tuple

  bool all_pass() const { return unit && duality && involution && associativity; }
};

namespace detail {

inline void record(AxiomReport& r, bool& flag, const char* name, std::array<int, 4> where) {
  if (!flag) return;
  flag = false;
  if (r.first_failure.empty()) {
    r.first_failure = name;
    r.first_violation = where;
  }
}

}  // namespace detail

inline AxiomReport check_based_axioms(const Tensor& N, const Involution& dual) {
  AxiomReport r;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j)
      for (int k = 0; k < kRank; ++k)
        if (N[i][j][k] < 0) detail::record(r, r.unit, "nonnegativity", {i, j, k, -1});

  for (int j = 0; j < kRank; ++j)
    for (int k = 0; k < kRank; ++k) {
      const long delta = j == k ? 1 : 0;
      if (N[0][j][k] != delta) detail::record(r, r.unit, "unit", {0, j, k, -1});
      if (N[j][0][k] != delta) detail::record(r, r.unit, "unit", {j, 0, k, -1});
    }

  bool dual_valid = true;
  for (int i = 0; i < kRank; ++i) dual_valid = dual_valid && dual[i] >= 0 && dual[i] < kRank;
  if (!dual_valid || dual[0] != 0) {
    detail::record(r, r.involution, "involution", {0, dual_valid ? dual[0] : -1, -1, -1});
  } else {
    for (int i = 0; i < kRank; ++i)
      if (dual[dual[i]] != i) detail::record(r, r.involution, "involution", {i, dual[i], -1, -1});
  }

  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      const long expected = dual_valid && j == dual[i] ? 1 : 0;
      if (N[i][j][0] != expected) detail::record(r, r.duality, "duality", {i, j, 0, -1});
    }

  // Duality reverses products: N_ij^k = N_{j* i*}^{k*}.
  if (r.involution)
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        for (int k = 0; k < kRank; ++k)
          if (N[i][j][k] != N[dual[j]][dual[i]][dual[k]]) detail::record(r, r.involution, "involution", {i, j, k, -1});

  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j)
      for (int k = 0; k < kRank; ++k)
        for (int s = 0; s < kRank; ++s) {
          long lhs = 0, rhs = 0;
          for (int t = 0; t < kRank; ++t) {
            lhs += N[i][j][t] * N[t][k][s];
            rhs += N[j][k][t] * N[i][t][s];
          }
          if (lhs != rhs) detail::record(r, r.associativity, "associativity", {i, j, k, s});
        }
  return r;
}

inline Tensor rank3_table(const Rank3Params& p) {
  Tensor N{};
  for (int j = 0; j < kRank; ++j) {
    N[0][j][j] = 1;
    N[j][0][j] = 1;
  }
  N[1][1] = {1, p.m, p.k};
  N[2][2] = {1, p.l, p.n};
  N[1][2] = {0, p.k, p.l};
  N[2][1] = {0, p.k, p.l};
  return N;
}

class FusionRing {
 public:
  FusionRing(std::vector<std::string> labels, Involution dual, Tensor N,
             std::optional<Rank3Params> params = std::nullopt, bool cyclic = false)
      : labels_(std::move(labels)), dual_(dual), N_(N), params_(params), cyclic_(cyclic) {}

  int rank() const { return kRank; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Involution& dual() const { return dual_; }
  int dual(int i) const { return dual_[static_cast<std::size_t>(i)]; }
  long N(int i, int j, int k) const { return N_[i][j][k]; }
  const Tensor& tensor() const { return N_; }

  // Family parameters as constructed (not canonicalized); empty for Z/3.
  const std::optional<Rank3Params>& params() const { return params_; }
  bool is_z3() const { return cyclic_; }
  bool self_dual() const { return dual_ == Involution{0, 1, 2}; }

  // Matrix A with A[j][k] = N_{ij}^k; a character's value vector is an
  // eigenvector of A with eigenvalue its value on b_i.
  std::array<std::array<long, kRank>, kRank> left_matrix(int i) const { return N_[i]; }

  std::string name() const { return cyclic_ ? "Z/3" : params_ ? params_->name() : "ring"; }

  friend bool operator==(const FusionRing& a, const FusionRing& b) { return a.dual_ == b.dual_ && a.N_ == b.N_; }

 private:
  std::vector<std::string> labels_;
  Involution dual_;
  Tensor N_;
  std::optional<Rank3Params> params_;
  bool cyclic_ = false;
};

inline FusionRing make_rank3_ring(const Rank3Params& p) {
  if (!p.nonnegative()) throw DomainError("structure constants must be nonnegative: " + p.to_string());
  if (!p.satisfies_star()) {
    throw StarViolation("k^2+l^2 = " + std::to_string(p.k * p.k + p.l * p.l) + " but lm+kn+1 = " +
                        std::to_string(p.l * p.m + p.k * p.n + 1) + " for " + p.to_string());
  }
  return FusionRing({"1", "X", "Y"}, {0, 1, 2}, rank3_table(p), p);
}

inline FusionRing make_z3_ring() {
  Tensor N{};
  for (int a = 0; a < kRank; ++a)
    for (int b = 0; b < kRank; ++b) N[a][b][(a + b) % kRank] = 1;
  return FusionRing({"1", "g", "g2"}, {0, 2, 1}, N, std::nullopt, true);
}

// The tensor with X and Y interchanged.
inline Tensor relabel(const Tensor& N) {
  constexpr int perm[kRank] = {0, 2, 1};
  Tensor out{};
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j)
      for (int k = 0; k < kRank; ++k) out[perm[i]][perm[j]][perm[k]] = N[i][j][k];
  return out;
}

inline Involution relabel(const Involution& d) {
  constexpr int perm[kRank] = {0, 2, 1};
  Involution out{};
  for (int i = 0; i < kRank; ++i) out[perm[i]] = perm[d[i]];
  return out;
}

// Recognize a tensor as Z/3 or a member of the K family, up to relabeling.
inline std::optional<FusionRing> identify(const Tensor& N, const Involution& dual) {
  const FusionRing z3 = make_z3_ring();
  if (dual == z3.dual() && (N == z3.tensor() || relabel(N) == z3.tensor())) return z3;
  if (dual != Involution{0, 1, 2}) return std::nullopt;
  const Rank3Params p{N[1][1][2], N[2][2][1], N[1][1][1], N[2][2][2]};
  if (!p.nonnegative() || !p.satisfies_star()) return std::nullopt;
  if (rank3_table(p) != N) return std::nullopt;
  return make_rank3_ring(canonicalize(p));
}

// All based rings of rank 3 with structure constants <= coeff_bound, one per
// class under X <-> Y relabeling. Results are sorted by (dual, tensor).
inline std::vector<FusionRing> enumerate_rank3_based_rings(long coeff_bound, unsigned threads = 1) {
  if (coeff_bound < 0) throw DomainError("coefficient bound must be nonnegative");
  if (coeff_bound > 3) throw DomainError("coefficient bound above 3 is outside the supported range");
  struct Found {
    Involution dual;
    Tensor N;
  };
  // Free entries: N[i][j][k] for i, j, k in {1, 2}.
  const long base = coeff_bound + 1;
  long total = 1;
  for (int e = 0; e < 8; ++e) total *= base;
  const std::array<Involution, 2> involutions{Involution{0, 1, 2}, Involution{0, 2, 1}};

  auto scan = [&](long begin, long end, std::vector<Found>& out) {
    for (const auto& dual : involutions) {
      for (long code = begin; code < end; ++code) {
        Tensor N{};
        for (int j = 0; j < kRank; ++j) {
          N[0][j][j] = 1;
          N[j][0][j] = 1;
        }
        long c = code;
        for (int i = 1; i < kRank; ++i)
          for (int j = 1; j < kRank; ++j) {
            N[i][j][0] = j == dual[i] ? 1 : 0;
            for (int k = 1; k < kRank; ++k) {
              N[i][j][k] = c % base;
              c /= base;
            }
          }
        if (!check_based_axioms(N, dual).all_pass()) continue;
        const Tensor other = relabel(N);
        if (other < N) continue;  // keep the smaller representative
        out.push_back({dual, N});
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, 64));
  std::vector<std::vector<Found>> parts(workers);
  if (workers == 1) {
    scan(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const long b = total * w / workers, e = total * (w + 1) / workers;
      pool.emplace_back([&, b, e, w] { scan(b, e, parts[w]); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Found> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) {
    return std::tie(a.dual, a.N) < std::tie(b.dual, b.N);
  });

  std::vector<FusionRing> out;
  for (const auto& f : all) {
    if (auto known = identify(f.N, f.dual)) {
      out.push_back(*known);
    } else {
      out.emplace_back(std::vector<std::string>{"1", "X", "Y"}, f.dual, f.N);
    }
  }
  return out;
}

}  // namespace ribbon3::fusion
