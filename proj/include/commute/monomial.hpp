// Copyright 2026 The Commute Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive search for swap decompositions S = (1/n) I + (1/n) sum s_i kron s_i
// whose s_i are unitary monomial matrices with root-of-unity phases.
//
// A monomial s with pattern p (column c -> row p[c]) makes s kron s a phased
// permutation with pattern p x p, so entry (row, col) of sum s_i kron s_i only
// receives contributions from the patterns whose p x p covers it. Each
// contribution has unit modulus, which gives a pattern-level necessary
// condition checked before any phase is enumerated: the number of covering
// matrices k must admit k roots of unity summing to the target entry.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commute/core.hpp"
#include "commute/permutation.hpp"

namespace commute {

struct MonomialConfig {
  std::size_t dim = 3;
  std::size_t phase_order = 3;            // phases are powers of exp(2 pi i / phase_order)
  std::uint64_t node_bound = 10'000'000;  // phase assignments visited before giving up
  std::size_t max_solutions = 64;         // solutions kept (all are counted)
  double tol = 1e-9;

  void validate() const {
    if (dim < 2 || dim > 4) throw InvalidArgument("monomial: dim must be in 2..4");
    if (phase_order < 1 || phase_order > 12) {
      throw InvalidArgument("monomial: phase_order must be in 1..12");
    }
    if (node_bound < 1) throw InvalidArgument("monomial: node_bound must be >= 1");
  }
};

/// Monomial matrix: column c carries root^phases[c] in row pattern[c].
struct MonomialMatrix {
  std::vector<std::size_t> pattern;
  std::vector<std::size_t> phases;

  ComplexMatrix to_matrix(std::size_t phase_order) const {
    const std::size_t n = pattern.size();
    ComplexMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      m.set(pattern[c], c, std::polar(1.0, 2.0 * std::numbers::pi *
                                               static_cast<double>(phases[c]) /
                                               static_cast<double>(phase_order)));
    }
    return m;
  }
};

enum class EnumerationStatus { solutions_found, exhausted_none, inconclusive };

inline std::string_view to_string(EnumerationStatus s) {
  switch (s) {
    case EnumerationStatus::solutions_found: return "solutions-found";
    case EnumerationStatus::exhausted_none: return "exhausted-none";
    case EnumerationStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct MonomialSearchResult {
  EnumerationStatus status = EnumerationStatus::inconclusive;
  std::size_t dim = 0;
  std::size_t phase_order = 0;
  std::size_t family_size = 0;
  std::size_t monomial_matrices = 0;  // n! * order^n
  std::uint64_t pattern_multisets = 0;
  std::uint64_t pattern_multisets_pruned = 0;
  std::uint64_t phase_nodes = 0;
  std::uint64_t solutions_total = 0;
  std::vector<std::vector<MonomialMatrix>> solutions;  // first max_solutions
  std::string certificate;
};

/// Result of testing one concrete family against the monomial model.
struct MonomialCandidateCheck {
  bool monomial = false;          // every element is monomial with allowed phases
  bool passes_pattern_prune = false;
  std::vector<std::size_t> pattern_counts;  // per pattern, in enumeration order
  double residual = 0.0;          // squared Frobenius swap residual
  bool solution = false;
};

namespace monomial_detail {

inline std::vector<std::vector<std::size_t>> all_patterns(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Everything the enumeration needs for a given (dim, phase order).
class Model {
 public:
  explicit Model(const MonomialConfig& cfg)
      : n_(cfg.dim), order_(cfg.phase_order), big_(n_ * n_), tol_(cfg.tol),
        patterns_(all_patterns(n_)) {
    for (std::size_t e = 0; e < order_; ++e) {
      roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                           static_cast<double>(order_)));
    }
    // target = n S - I
    target_.assign(big_ * big_, Complex{});
    const PermutationMatrix s = build_tcm(n_, n_);
    for (std::size_t k = 0; k < big_; ++k) {
      target_[s[k] * big_ + k] += static_cast<double>(n_);
      target_[k * big_ + k] -= 1.0;
    }
    // pattern p covers (row (p[a], p[b]), col (a, b))
    cover_.assign(patterns_.size(), std::vector<std::size_t>(big_));
    for (std::size_t q = 0; q < patterns_.size(); ++q)
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          cover_[q][a * n_ + b] = patterns_[q][a] * n_ + patterns_[q][b];
  }

  std::size_t dim() const { return n_; }
  std::size_t order() const { return order_; }
  std::size_t big() const { return big_; }
  const std::vector<std::vector<std::size_t>>& patterns() const { return patterns_; }
  const std::vector<Complex>& target() const { return target_; }
  const std::vector<Complex>& roots() const { return roots_; }
  /// Row of the entry pattern q puts in column col of s kron s.
  std::size_t cover_row(std::size_t q, std::size_t col) const { return cover_[q][col]; }

  /// Can k roots of unity sum to t?
  bool feasible(std::size_t k, Complex t) {
    const auto key = std::make_pair(k, std::make_pair(std::llround(t.real() * 1e6),
                                                      std::llround(t.imag() * 1e6)));
    if (auto it = feasible_cache_.find(key); it != feasible_cache_.end()) return it->second;
    std::vector<std::size_t> counts(order_, 0);
    const bool ok = compositions(k, 0, counts, t);
    feasible_cache_[key] = ok;
    return ok;
  }

  /// Pattern-level necessary condition for multiplicities `counts`.
  bool passes_prune(const std::vector<std::size_t>& counts) {
    std::vector<std::size_t> k(big_ * big_, 0);
    for (std::size_t q = 0; q < patterns_.size(); ++q) {
      if (!counts[q]) continue;
      for (std::size_t col = 0; col < big_; ++col) k[cover_[q][col] * big_ + col] += counts[q];
    }
    for (std::size_t pos = 0; pos < k.size(); ++pos)
      if (!feasible(k[pos], target_[pos])) return false;
    return true;
  }

  double tol() const { return tol_; }

 private:
  bool compositions(std::size_t remaining, std::size_t e, std::vector<std::size_t>& counts,
                    Complex t) const {
    if (e + 1 == order_) {
      counts[e] = remaining;
      Complex sum{};
      for (std::size_t i = 0; i < order_; ++i) sum += static_cast<double>(counts[i]) * roots_[i];
      return std::abs(sum - t) <= 1e-9;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
      counts[e] = c;
      if (compositions(remaining - c, e + 1, counts, t)) return true;
    }
    return false;
  }

  std::size_t n_, order_, big_;
  double tol_;
  std::vector<std::vector<std::size_t>> patterns_;
  std::vector<Complex> roots_;
  std::vector<Complex> target_;
  std::vector<std::vector<std::size_t>> cover_;
  std::map<std::pair<std::size_t, std::pair<long long, long long>>, bool> feasible_cache_;
};

/// Phase backtracking over one pattern multiset.
class PhaseSearch {
 public:
  PhaseSearch(Model& model, const std::vector<std::size_t>& counts, const MonomialConfig& cfg,
              MonomialSearchResult& out)
      : model_(model), cfg_(cfg), out_(out) {
    for (std::size_t q = 0; q < counts.size(); ++q)
      for (std::size_t c = 0; c < counts[q]; ++c) slots_.push_back(q);
    const std::size_t big = model_.big();
    std::size_t vectors = 1;
    for (std::size_t i = 0; i < model_.dim(); ++i) vectors *= model_.order();
    phase_vectors_ = vectors;
    // positions are checked once the last pattern covering them is fully assigned
    std::vector<std::optional<std::size_t>> last(big * big);
    for (std::size_t q = 0; q < counts.size(); ++q) {
      if (!counts[q]) continue;
      for (std::size_t col = 0; col < big; ++col) last[model_.cover_row(q, col) * big + col] = q;
    }
    check_after_.assign(counts.size(), {});
    for (std::size_t pos = 0; pos < last.size(); ++pos)
      if (last[pos]) check_after_[*last[pos]].push_back(pos);
    sum_.assign(big * big, Complex{});
    chosen_.assign(slots_.size(), 0);
  }

  /// False when the node bound was hit.
  bool run() { return descend(0); }

 private:
  std::vector<std::size_t> phases_of(std::size_t v) const {
    std::vector<std::size_t> ph(model_.dim());
    for (std::size_t c = 0; c < ph.size(); ++c) {
      ph[c] = v % model_.order();
      v /= model_.order();
    }
    return ph;
  }

  void apply(std::size_t slot, std::size_t v, double sign) {
    const std::size_t q = slots_[slot];
    const auto ph = phases_of(v);
    const std::size_t n = model_.dim(), big = model_.big();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t col = a * n + b;
        const std::size_t e = (ph[a] + ph[b]) % model_.order();
        sum_[model_.cover_row(q, col) * big + col] += sign * model_.roots()[e];
      }
  }

  bool positions_ok(std::size_t q) const {
    for (std::size_t pos : check_after_[q])
      if (std::abs(sum_[pos] - model_.target()[pos]) > model_.tol()) return false;
    return true;
  }

  bool descend(std::size_t slot) {
    if (slot == slots_.size()) {
      record();
      return true;
    }
    const std::size_t q = slots_[slot];
    const bool same_as_prev = slot > 0 && slots_[slot - 1] == q;
    const std::size_t start = same_as_prev ? chosen_[slot - 1] : 0;
    const bool closes_group = slot + 1 == slots_.size() || slots_[slot + 1] != q;
    for (std::size_t v = start; v < phase_vectors_; ++v) {
      if (++out_.phase_nodes > cfg_.node_bound) return false;
      chosen_[slot] = v;
      apply(slot, v, 1.0);
      bool keep_going = true;
      if (!closes_group || positions_ok(q)) keep_going = descend(slot + 1);
      apply(slot, v, -1.0);
      if (!keep_going) return false;
    }
    return true;
  }

  void record() {
    ++out_.solutions_total;
    if (out_.solutions.size() >= cfg_.max_solutions) return;
    std::vector<MonomialMatrix> sol;
    for (std::size_t s = 0; s < slots_.size(); ++s)
      sol.push_back({model_.patterns()[slots_[s]], phases_of(chosen_[s])});
    out_.solutions.push_back(std::move(sol));
  }

  Model& model_;
  const MonomialConfig& cfg_;
  MonomialSearchResult& out_;
  std::vector<std::size_t> slots_;
  std::vector<std::size_t> chosen_;
  std::size_t phase_vectors_ = 0;
  std::vector<std::vector<std::size_t>> check_after_;
  std::vector<Complex> sum_;
};

}  // namespace monomial_detail

/// Enumerates every multiset of dim^2 - 1 unitary monomial matrices with
/// phases from the configured roots of unity. Pattern multisets failing the
/// coverage condition are cut before phase enumeration; the survivors are
/// searched by backtracking, checking each entry once all patterns covering
/// it are assigned. Exceeding node_bound yields `inconclusive`, never a
/// truncated answer.
inline MonomialSearchResult monomial_enumeration(const MonomialConfig& cfg = {}) {
  cfg.validate();
  monomial_detail::Model model(cfg);
  MonomialSearchResult out;
  out.dim = cfg.dim;
  out.phase_order = cfg.phase_order;
  out.family_size = cfg.dim * cfg.dim - 1;
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < cfg.dim; ++i) vectors *= cfg.phase_order;
  out.monomial_matrices = model.patterns().size() * vectors;

  const std::size_t np = model.patterns().size();
  std::vector<std::size_t> counts(np, 0);
  bool bounded_out = false;

  // multisets of patterns as multiplicity vectors summing to family_size
  auto visit = [&](auto&& self, std::size_t q, std::size_t remaining) -> void {
    if (bounded_out) return;
    if (q + 1 == np) {
      counts[q] = remaining;
      ++out.pattern_multisets;
      if (!model.passes_prune(counts)) {
        ++out.pattern_multisets_pruned;
        return;
      }
      monomial_detail::PhaseSearch search(model, counts, cfg, out);
      if (!search.run()) bounded_out = true;
      return;
    }
    for (std::size_t c = remaining + 1; c-- > 0;) {
      counts[q] = c;
      self(self, q + 1, remaining - c);
      if (bounded_out) return;
    }
    counts[q] = 0;
  };
  visit(visit, 0, out.family_size);

  if (bounded_out) {
    out.status = EnumerationStatus::inconclusive;
    out.certificate = "node bound " + std::to_string(cfg.node_bound) +
                      " exceeded; search space not exhausted";
  } else if (out.solutions_total > 0) {
    out.status = EnumerationStatus::solutions_found;
    out.certificate = std::to_string(out.solutions_total) + " solution multisets found";
  } else {
    out.status = EnumerationStatus::exhausted_none;
    out.certificate = "all " + std::to_string(out.pattern_multisets) +
                      " pattern multisets examined: " +
                      std::to_string(out.pattern_multisets_pruned) +
                      " fail the coverage condition, the remaining " +
                      std::to_string(out.pattern_multisets - out.pattern_multisets_pruned) +
                      " have no phase assignment (" + std::to_string(out.phase_nodes) +
                      " phase nodes)";
  }
  return out;
}

/// Tests a concrete family against the monomial model used by the enumeration.
inline MonomialCandidateCheck check_monomial_candidate(const std::vector<ComplexMatrix>& family,
                                                      const MonomialConfig& cfg = {}) {
  cfg.validate();
  monomial_detail::Model model(cfg);
  MonomialCandidateCheck out;
  out.pattern_counts.assign(model.patterns().size(), 0);
  const std::size_t n = cfg.dim;
  if (family.size() != n * n - 1) throw ShapeError("check_monomial_candidate: wrong family size");

  ComplexMatrix sum(n * n, n * n);
  for (std::size_t k = 0; k < n * n; ++k) sum.set(k, k, 1.0 / static_cast<double>(n));
  out.monomial = true;
  for (const ComplexMatrix& m : family) {
    if (m.rows() != n || m.cols() != n) throw ShapeError("check_monomial_candidate: bad size");
    sum.add_kron(1.0 / static_cast<double>(n), m, m);
    std::vector<std::size_t> pattern(n, n);
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      for (std::size_t r = 0; r < n; ++r) {
        if (std::abs(m(r, c)) < cfg.tol) continue;
        if (pattern[c] != n) ok = false;  // second nonzero in the column
        pattern[c] = r;
        bool is_root = false;
        for (const Complex& root : model.roots()) is_root = is_root || std::abs(m(r, c) - root) <= cfg.tol;
        ok = ok && is_root;
      }
      ok = ok && pattern[c] != n;
    }
    const auto it = std::find(model.patterns().begin(), model.patterns().end(), pattern);
    if (!ok || it == model.patterns().end()) {
      out.monomial = false;
      continue;
    }
    ++out.pattern_counts[static_cast<std::size_t>(it - model.patterns().begin())];
  }
  out.passes_pattern_prune = out.monomial && model.passes_prune(out.pattern_counts);
  out.residual = std::pow(frob_dist(sum, to_dense(build_tcm(n, n))), 2);
  out.solution = out.residual <= cfg.tol;
  return out;
}

}  // namespace commute
