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

// Command-line front end. Requires CLI11.hpp and json.hpp on the include path.
//
//   commute gen <family> [--n N] [--p P] [--out DIR]
//   commute verify [--suite NAME] [--n N] [--trials T]
//   commute expand --matrix FILE --basis FAMILY|DIR [--n N] [--pair] [--with-identity] [--out FILE]
//   commute search [--family F] [--dim D] [--restarts R] [--bound small|medium|large|N] [--out DIR]
//   commute bench --n N [--p P] [--trials T]
//
// Global flags: --tol, --json PATH, --seed. Exit codes: 0 ok, 1 identity-failed,
// 2 invalid-input, 3 inconclusive.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "commute/bases.hpp"
#include "commute/bench.hpp"
#include "commute/core.hpp"
#include "commute/expansion.hpp"
#include "commute/hollow.hpp"
#include "commute/identities.hpp"
#include "commute/matc.hpp"
#include "commute/monomial.hpp"
#include "commute/permutation.hpp"
#include "commute/report.hpp"
#include "commute/search.hpp"

namespace commute::cli {

using Json = nlohmann::ordered_json;

enum class ExitStatus { ok = 0, identity_failed = 1, invalid_input = 2, inconclusive = 3 };

inline std::string_view to_string(ExitStatus s) {
  switch (s) {
    case ExitStatus::ok: return "ok";
    case ExitStatus::identity_failed: return "identity-failed";
    case ExitStatus::invalid_input: return "invalid-input";
    case ExitStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

/// One report line: a JSON object, a table row and its verdict.
struct Record {
  Json data;
  std::vector<std::string> row;
  bool ok = true;
  bool inconclusive = false;
  std::vector<std::string> notes;  // printed under the table
};

struct RunReport {
  std::string command;
  std::vector<std::string> header;
  std::vector<Record> records;
  std::optional<std::string> error;

  ExitStatus status() const {
    if (error) return ExitStatus::invalid_input;
    bool inconclusive = false;
    for (const Record& r : records) {
      if (!r.ok) return ExitStatus::identity_failed;
      inconclusive = inconclusive || r.inconclusive;
    }
    return inconclusive ? ExitStatus::inconclusive : ExitStatus::ok;
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["records"] = Json::array();
    for (const Record& r : records) j["records"].push_back(r.data);
    j["exit_status"] = std::string(to_string(status()));
    if (error) j["error"] = *error;
    return j;
  }
};

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline std::string complex_text(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Record verification_record(const VerificationReport& v) {
  Record r;
  r.data = Json{{"type", "verification"},
                {"identity", v.identity_name},
                {"dim", v.dim},
                {"max_abs_dev", v.max_abs_dev},
                {"frob_dev", v.frob_dev},
                {"tolerance", v.tolerance},
                {"pass", v.pass},
                {"expected_pass", v.expected_pass},
                {"outcome", std::string(v.outcome())},
                {"detail", v.detail}};
  r.row = {std::string(v.outcome()), v.identity_name, sci(v.max_abs_dev), sci(v.tolerance),
           v.detail};
  r.ok = v.as_expected();
  return r;
}

inline const std::vector<std::string> kVerifyHeader = {"outcome", "identity", "max_abs_dev",
                                                      "tol", "detail"};

inline void print_table(std::ostream& out, const RunReport& rep) {
  std::vector<std::size_t> width(rep.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  };
  widen(rep.header);
  for (const Record& r : rep.records) widen(r.row);
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  if (!rep.header.empty()) emit(rep.header);
  for (const Record& r : rep.records) emit(r.row);
  for (const Record& r : rep.records)
    for (const std::string& note : r.notes) out << note << '\n';
}

/// Count of entries where a and b differ by more than tol.
inline std::size_t differing_entries(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_shape(a, b, "differing_entries");
  std::size_t k = 0;
  const auto x = a.entries();
  const auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) k += std::abs(x[i] - y[i]) > tol ? 1 : 0;
  return k;
}

/// Which family-level properties hold by construction. Only the n = 2
/// Gell-Mann families coincide with the Paulis and are unitary involutions.
inline bool property_expected(std::string_view family, std::size_t n, std::string_view prop) {
  const bool cube_root = family == "kibler" || family == "nonions";
  const bool paulilike = family == "pauli" || family == "pauli-strings" ||
                         ((family == "gell-mann" || family == "scaled-gell-mann") && n == 2);
  if (prop == "hermitian") return !cube_root;
  if (prop == "unitary") return paulilike || cube_root;
  if (prop == "involutory") return paulilike;
  return true;  // traceless, orthogonal
}

inline std::vector<VerificationReport> property_reports(const MatrixBasis& b, std::string_view family,
                                                        std::size_t n, Tolerance tol) {
  const PropertyReport p = check_properties(b, tol);
  double herm = 0.0, inv = 0.0, uni = 0.0, tr = 0.0;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const ElementProperties& e = p.elements[i];
    herm = std::max(herm, e.hermitian_dev);
    inv = std::max(inv, e.involution_dev);
    uni = std::max(uni, e.unitarity_dev);
    if (!b.is_identity_element(i)) tr = std::max(tr, e.trace_abs);
  }
  std::vector<VerificationReport> out;
  auto add = [&](std::string_view prop, double dev, bool pass, std::string detail) {
    VerificationReport v;
    v.identity_name = b.name + ": " + std::string(prop);
    v.dim = b.dim;
    v.max_abs_dev = dev;
    v.tolerance = tol.atol;
    v.pass = pass;
    v.expected_pass = property_expected(family, n, prop);
    v.detail = std::move(detail);
    out.push_back(std::move(v));
  };
  add("hermitian", herm, p.hermitian, "max |B - B^dagger|");
  add("involutory", inv, p.involutory, "max |B^2 - I|");
  add("unitary", uni, p.unitary, "max |B^dagger B - I|");
  add("traceless", tr, p.traceless, "non-identity elements");
  add("orthogonal", p.orthogonality_dev, p.orthogonal,
      "HS norm " + io_detail::format_double(b.hs_norm));
  return out;
}

inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

/// Every *.matc file of a directory, in natural file-name order.
inline MatrixBasis load_basis_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidArgument("basis '" + dir + "' is neither a family nor a directory");
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".matc")
      names.push_back(entry.path().filename().string());
  if (names.empty()) throw InvalidArgument("no .matc files in '" + dir + "'");
  std::sort(names.begin(), names.end(), natural_less);
  MatrixBasis b;
  b.name = dir;
  for (const std::string& name : names) {
    ComplexMatrix m = load_matc((fs::path(dir) / name).string());
    if (!m.is_square()) throw ShapeError("basis element '" + name + "' is not square");
    if (b.elements.empty()) b.dim = m.rows();
    if (m.rows() != b.dim) throw ShapeError("basis element '" + name + "' has a different size");
    if (!b.identity_index && max_abs_dev(m, ComplexMatrix::identity(b.dim)) == 0.0)
      b.identity_index = b.elements.size();
    b.elements.push_back(std::move(m));
  }
  return b;
}

struct Globals {
  double tol = 1e-10;
  std::string json_path;
  std::uint64_t seed = 0;
};

inline void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir + "': " + ec.message());
}

inline std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

// --------------------------------------------------------------------- gen

struct GenOptions {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::string out_dir = ".";
};

inline void run_gen(const GenOptions& o, RunReport& rep) {
  rep.header = {"file", "rows", "cols"};
  auto manifest = [&](const std::string& path, std::size_t rows, std::size_t cols, const char* kind) {
    Record r;
    r.data = Json{{"type", "file"}, {"path", path}, {"format", kind}, {"rows", rows}, {"cols", cols}};
    r.row = {path, std::to_string(rows), std::to_string(cols)};
    rep.records.push_back(std::move(r));
  };
  if (o.family == "tcm") {
    if (!o.n) throw InvalidArgument("gen tcm requires --n");
    const std::size_t n = *o.n, p = o.p.value_or(n);
    if (n == 0 || p == 0) throw InvalidArgument("gen tcm: n and p must be >= 1");
    if (n * p > 4096) throw DimensionError("gen tcm: n*p > 4096 is too large for a dense file");
    const PermutationMatrix s = build_tcm(n, p);
    ensure_dir(o.out_dir);
    const std::string stem = "tcm_" + std::to_string(n) + "x" + std::to_string(p);
    const std::string perm_path = join_path(o.out_dir, stem + ".perm");
    const std::string matc_path = join_path(o.out_dir, stem + ".matc");
    save_perm(perm_path, s);
    manifest(perm_path, n * p, n * p, "PERM");
    save_matc(matc_path, to_dense(s));
    manifest(matc_path, n * p, n * p, "MATC");
    return;
  }
  if (std::find(family_names().begin(), family_names().end(), o.family) == family_names().end()) {
    throw InvalidArgument("unknown family '" + o.family + "'");
  }
  if (o.p) throw InvalidArgument("--p only applies to tcm");
  if (o.n && !family_is_parametric(o.family)) {
    throw InvalidArgument("family '" + o.family + "' takes no --n");
  }
  const MatrixBasis b = family_by_name(o.family, o.n);
  ensure_dir(o.out_dir);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string path = join_path(o.out_dir, o.family + "_" + std::to_string(i) + ".matc");
    save_matc(path, b.elements[i]);
    manifest(path, b.dim, b.dim, "MATC");
  }
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::size_t> n;
  std::size_t trials = 100;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",     "eq1",         "eq2",   "eq5",       "kibler",
                                                 "nonions", "proposition", "lemma", "properties"};
  return names;
}

inline void cube_root_records(const MatrixBasis& b, Tolerance tol, RunReport& rep) {
  rep.records.push_back(verification_record(verify_cube_root_family(b, tol)));
  const double third = 1.0 / 3.0;
  const ComplexMatrix sum = sum_formula(b, third, third);
  const ComplexMatrix s = swap_matrix(3);
  VerificationReport v = compare_matrices(b.name + "-sum == S(3x3)", sum, s, tol);
  v.expected_pass = false;
  v.detail = "differing entries: " + std::to_string(differing_entries(sum, s, 1e-9));
  rep.records.push_back(verification_record(v));
}

inline void run_verify(const VerifyOptions& o, const Globals& g, RunReport& rep) {
  if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + o.suite + "'");
  }
  const Tolerance tol(g.tol);
  rep.header = kVerifyHeader;
  const bool all = o.suite == "all";
  auto push = [&](const VerificationReport& v) { rep.records.push_back(verification_record(v)); };
  auto range = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> ns;
    if (o.n) {
      ns.push_back(*o.n);
    } else {
      for (std::size_t k = lo; k <= hi; ++k) ns.push_back(k);
    }
    return ns;
  };

  if (all || o.suite == "eq1") push(verify_eq1(tol));
  if (all || o.suite == "eq2")
    for (std::size_t n : range(2, 6)) push(verify_eq2(n, tol));
  if (all || o.suite == "eq5") {
    if (o.n) {
      const std::size_t n = *o.n;
      if (n >= 2 && (n & (n - 1)) == 0) {
        std::size_t q = 0;
        while ((std::size_t{1} << q) < n) ++q;
        push(verify_eq5(pauli_strings(q), n, tol));
      }
      push(verify_eq5(scaled_gell_mann(n), n, tol));
    } else {
      for (std::size_t q = 2; q <= 3; ++q) push(verify_eq5(pauli_strings(q), std::size_t{1} << q, tol));
      for (std::size_t n = 2; n <= 5; ++n) push(verify_eq5(scaled_gell_mann(n), n, tol));
    }
  }
  if (all || o.suite == "kibler") cube_root_records(kibler(), tol, rep);
  if (all || o.suite == "nonions") cube_root_records(nonions(), tol, rep);
  if (all || o.suite == "proposition")
    for (std::size_t n : range(1, 3)) push(verify_proposition(n, tol));
  if (all || o.suite == "lemma") {
    if (o.trials == 0) throw InvalidArgument("--trials must be >= 1");
    const LemmaSuiteSummary s = run_lemma_trials(o.trials, g.seed, tol);
    VerificationReport v;
    v.identity_name = "middle-insertion";
    v.max_abs_dev = s.worst_dev;
    v.tolerance = s.tolerance;
    v.pass = s.failures == 0;
    v.detail = std::to_string(s.trials) + " trials, " + std::to_string(s.failures) +
               " failures, seed " + std::to_string(g.seed);
    push(v);
  }
  if (all || o.suite == "properties") {
    struct Entry {
      std::string family;
      std::size_t n;
    };
    std::vector<Entry> entries;
    for (std::string_view f : family_names()) {
      if (!family_is_parametric(f)) {
        if (!o.n) entries.push_back({std::string(f), 0});
        continue;
      }
      if (o.n) {
        entries.push_back({std::string(f), *o.n});
      } else if (f == "pauli-strings") {
        for (std::size_t q = 1; q <= 3; ++q) entries.push_back({std::string(f), q});
      } else {
        for (std::size_t n = 2; n <= 5; ++n) entries.push_back({std::string(f), n});
      }
    }
    for (const Entry& e : entries) {
      const MatrixBasis b = family_is_parametric(e.family) ? family_by_name(e.family, e.n)
                                                           : family_by_name(e.family);
      MatrixBasis named = b;
      if (family_is_parametric(e.family)) named.name = e.family + "(" + std::to_string(e.n) + ")";
      for (const auto& v : property_reports(named, e.family, e.n, tol)) push(v);
    }
  }
}

// ------------------------------------------------------------------ expand

struct ExpandOptions {
  std::string matrix;
  std::string basis;
  std::optional<std::size_t> n;
  bool pair = false;
  bool with_identity = false;
  std::string out;
};

inline void run_expand(const ExpandOptions& o, const Globals& g, RunReport& rep) {
  const ComplexMatrix m = load_matc(o.matrix);
  MatrixBasis b;
  const bool named = std::find(family_names().begin(), family_names().end(), o.basis) !=
                     family_names().end();
  if (named) {
    if (o.n && !family_is_parametric(o.basis)) {
      throw InvalidArgument("family '" + o.basis + "' takes no --n");
    }
    b = family_by_name(o.basis, o.n);
  } else {
    if (o.n) throw InvalidArgument("--n only applies to a named family");
    b = load_basis_dir(o.basis);
  }
  if (o.with_identity) b = with_identity(std::move(b));

  rep.header = {"outcome", "basis", "size", "rank", "residual", "tol"};
  Record r;
  r.data = Json{{"type", "expansion"},
                {"matrix", o.matrix},
                {"basis", b.name},
                {"basis_size", b.size()},
                {"mode", o.pair ? "pair" : "single"}};
  double residual = 0.0;
  std::size_t rank = 0;
  ComplexMatrix coeffs(1, 1);
  if (o.pair) {
    const KronPairExpansion e = expand_kron_pair(m, b);
    residual = e.residual_frob;
    rank = b.size() * b.size();
    r.data["singular"] = e.singular;
    r.data["diagonal"] = e.is_diagonal(g.tol);
    r.data["coefficients"] = matrix_json(e.coefficients);
    coeffs = e.coefficients;
    for (std::size_t a = 0; a < b.size(); ++a)
      for (std::size_t c = 0; c < b.size(); ++c)
        if (std::abs(e.coefficients(a, c)) > g.tol)
          r.notes.push_back("C[" + std::to_string(a) + "][" + std::to_string(c) +
                            "] = " + complex_text(e.coefficients(a, c)));
  } else {
    const ExpansionResult e = expand(m, b);
    residual = e.residual_frob;
    rank = e.rank;
    r.data["rank"] = e.rank;
    r.data["singular"] = e.singular;
    r.data["orthogonal"] = e.orthogonal;
    r.data["gram_condition_estimate"] = e.gram_condition_estimate;
    Json cs = Json::array();
    for (const Complex& c : e.coefficients) cs.push_back(complex_json(c));
    r.data["coefficients"] = std::move(cs);
    coeffs = ComplexMatrix(e.coefficients.size(), 1, e.coefficients);
    for (std::size_t a = 0; a < e.coefficients.size(); ++a)
      if (std::abs(e.coefficients[a]) > g.tol)
        r.notes.push_back("c[" + std::to_string(a) + "] = " + complex_text(e.coefficients[a]));
  }
  r.ok = residual <= g.tol;
  r.data["residual_frob"] = residual;
  r.data["tolerance"] = g.tol;
  r.data["pass"] = r.ok;
  r.row = {r.ok ? "pass" : "FAIL", b.name, std::to_string(b.size()), std::to_string(rank),
           sci(residual), sci(g.tol)};
  if (!o.out.empty()) {
    save_matc(o.out, coeffs);
    r.data["coefficients_file"] = o.out;
  }
  rep.records.push_back(std::move(r));
}

// ------------------------------------------------------------------ search

struct SearchOptions {
  std::string family = "hermitian";
  std::size_t dim = 3;
  std::size_t restarts = 50;
  std::size_t max_iters = 5000;
  double step_init = 0.1;
  std::optional<double> grad_tol;
  std::size_t threads = 1;
  std::string bound = "small";
  std::size_t phase_order = 3;
  std::size_t max_solutions = 64;
  double floor = 0.9;
  std::string out_dir;
};

inline std::uint64_t parse_bound(const std::string& s) {
  if (s == "small") return 1'000'000;
  if (s == "medium") return 100'000'000;
  if (s == "large") return 10'000'000'000ULL;
  const auto v = io_detail::parse_size(s);
  if (!v || *v == 0) throw InvalidArgument("--bound must be small, medium, large or a positive count");
  return *v;
}

inline Json flags_json(const MatrixFlags& f) {
  return Json{{"hermitian", f.hermitian},
              {"unitary", f.unitary},
              {"involutory", f.involutory},
              {"traceless", f.traceless}};
}

inline void search_multistart(const SearchOptions& o, const Globals& g, SearchFamily family,
                              RunReport& rep) {
  SearchConfig cfg;
  cfg.dim = o.dim;
  cfg.restarts = o.restarts;
  cfg.max_iters = o.max_iters;
  cfg.seed = g.seed;
  cfg.step_init = o.step_init;
  if (o.grad_tol) cfg.grad_tol = *o.grad_tol;
  cfg.family = family;
  cfg.threads = o.threads;
  const MultistartResult res = multistart(cfg);

  Record r;
  r.ok = res.best.objective < cfg.success_threshold;
  Json flags = Json::array();
  for (const MatrixFlags& f : res.best.flags) flags.push_back(flags_json(f));
  Json mats = Json::array();
  for (const ComplexMatrix& m : res.best.matrices) mats.push_back(matrix_json(m));
  r.data = Json{{"type", "search"},
                {"family", std::string(to_string(family))},
                {"dim", cfg.dim},
                {"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"max_iters", cfg.max_iters},
                {"step_init", cfg.step_init},
                {"grad_tol", cfg.grad_tol},
                {"success_threshold", cfg.success_threshold},
                {"best_objective", res.best.objective},
                {"best_restart", res.best.restart_index},
                {"best_iterations", res.best.iterations},
                {"best_grad_norm", res.best.grad_norm},
                {"best_converged", res.best.converged},
                {"successes", res.successes},
                {"objective_quantiles", Json{{"min", res.summary.min},
                                             {"q25", res.summary.q25},
                                             {"median", res.summary.median},
                                             {"q75", res.summary.q75},
                                             {"max", res.summary.max}}},
                {"objectives", res.objectives},
                {"iterations", res.iterations},
                {"property_flags", flags},
                {"matrices", mats},
                {"pass", r.ok}};
  rep.header = {"outcome", "family", "best_objective", "restart", "iterations", "successes"};
  r.row = {r.ok ? "pass" : "FAIL", std::string(to_string(family)), sci(res.best.objective),
           std::to_string(res.best.restart_index), std::to_string(res.best.iterations),
           std::to_string(res.successes) + "/" + std::to_string(cfg.restarts)};
  for (std::size_t i = 0; i < res.best.flags.size(); ++i) {
    const MatrixFlags& f = res.best.flags[i];
    r.notes.push_back("s_" + std::to_string(i + 1) + ": hermitian=" + (f.hermitian ? "yes" : "no") +
                      " unitary=" + (f.unitary ? "yes" : "no") +
                      " involutory=" + (f.involutory ? "yes" : "no") +
                      " traceless=" + (f.traceless ? "yes" : "no"));
  }
  if (!o.out_dir.empty()) {
    ensure_dir(o.out_dir);
    for (std::size_t i = 0; i < res.best.matrices.size(); ++i)
      save_matc(join_path(o.out_dir, "s_" + std::to_string(i + 1) + ".matc"), res.best.matrices[i]);
  }
  rep.records.push_back(std::move(r));
}

inline void search_monomial(const SearchOptions& o, RunReport& rep) {
  MonomialConfig cfg;
  cfg.dim = o.dim;
  cfg.phase_order = o.phase_order;
  cfg.node_bound = parse_bound(o.bound);
  cfg.max_solutions = o.max_solutions;
  const MonomialSearchResult res = monomial_enumeration(cfg);

  Record r;
  r.inconclusive = res.status == EnumerationStatus::inconclusive;
  Json sols = Json::array();
  for (const auto& sol : res.solutions) {
    Json set = Json::array();
    for (const MonomialMatrix& m : sol) set.push_back(Json{{"pattern", m.pattern}, {"phases", m.phases}});
    sols.push_back(std::move(set));
  }
  r.data = Json{{"type", "monomial-enumeration"},
                {"dim", res.dim},
                {"phase_order", res.phase_order},
                {"family_size", res.family_size},
                {"monomial_matrices", res.monomial_matrices},
                {"node_bound", cfg.node_bound},
                {"status", std::string(to_string(res.status))},
                {"pattern_multisets", res.pattern_multisets},
                {"pattern_multisets_pruned", res.pattern_multisets_pruned},
                {"phase_nodes", res.phase_nodes},
                {"solutions_total", res.solutions_total},
                {"solutions", sols},
                {"certificate", res.certificate}};
  rep.header = {"status", "dim", "phase_order", "multisets", "pruned", "phase_nodes", "solutions"};
  r.row = {std::string(to_string(res.status)), std::to_string(res.dim), std::to_string(res.phase_order),
           std::to_string(res.pattern_multisets), std::to_string(res.pattern_multisets_pruned),
           std::to_string(res.phase_nodes), std::to_string(res.solutions_total)};
  r.notes.push_back(res.certificate);
  if (!o.out_dir.empty() && !res.solutions.empty()) {
    ensure_dir(o.out_dir);
    const auto& first = res.solutions.front();
    for (std::size_t i = 0; i < first.size(); ++i)
      save_matc(join_path(o.out_dir, "s_" + std::to_string(i + 1) + ".matc"),
                first[i].to_matrix(res.phase_order));
  }
  rep.records.push_back(std::move(r));
}

inline void search_hollow(const SearchOptions& o, const Globals& g, RunReport& rep) {
  HollowConfig cfg;
  cfg.dim = o.dim;
  cfg.restarts = o.restarts;
  cfg.seed = g.seed;
  cfg.max_iters = o.max_iters;
  cfg.step_init = o.step_init;
  if (o.grad_tol) cfg.grad_tol = *o.grad_tol;
  cfg.floor = o.floor;
  const HollowReport res = hollow_involution(cfg);
  const bool odd = cfg.dim % 2 == 1;

  Record r;
  r.ok = res.parity.parity_matches && res.parity.max_integer_dev <= 1e-9 &&
         (odd ? res.gap_holds : res.hollow_found);
  r.data = Json{{"type", "hollow-involution"},
                {"dim", cfg.dim},
                {"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"parity_samples", res.parity.samples},
                {"parity_matches", res.parity.parity_matches},
                {"max_trace_integer_dev", res.parity.max_integer_dev},
                {"max_involution_dev", res.parity.max_involution_dev},
                {"min_abs_trace", res.parity.min_abs_trace},
                {"min_objective", res.scan.min_objective},
                {"best_restart", res.scan.best_restart},
                {"objectives", res.scan.objectives},
                {"floor", cfg.floor},
                {"gap_holds", res.gap_holds},
                {"hollow_found", res.hollow_found},
                {"best", matrix_json(res.scan.best)},
                {"pass", r.ok}};
  rep.header = {"outcome", "dim", "min_objective", "floor", "parity", "hollow_found"};
  r.row = {r.ok ? "pass" : "FAIL", std::to_string(cfg.dim), sci(res.scan.min_objective),
           odd ? sci(cfg.floor) : "-", res.parity.parity_matches ? "ok" : "broken",
           res.hollow_found ? "yes" : "no"};
  if (!o.out_dir.empty()) {
    ensure_dir(o.out_dir);
    save_matc(join_path(o.out_dir, "hollow_best.matc"), res.scan.best);
  }
  rep.records.push_back(std::move(r));
}

inline void run_search(const SearchOptions& o, const Globals& g, RunReport& rep) {
  if (o.family == "hollow-involution") return search_hollow(o, g, rep);
  const auto family = parse_search_family(o.family);
  if (!family) throw InvalidArgument("unknown search family '" + o.family + "'");
  if (*family == SearchFamily::monomial_cube_root) return search_monomial(o, rep);
  search_multistart(o, g, *family, rep);
}

// ------------------------------------------------------------------- bench

struct BenchOptions {
  std::size_t n = 0;
  std::optional<std::size_t> p;
  std::size_t trials = 5;
};

inline void run_bench(const BenchOptions& o, const Globals& g, RunReport& rep) {
  if (o.n == 0) throw InvalidArgument("bench: --n must be >= 1");
  const std::size_t p = o.p.value_or(o.n);
  if (p == 0) throw InvalidArgument("bench: --p must be >= 1");
  if (o.n * p > 8192) throw DimensionError("bench: n*p > 8192 makes the dense reference too large");
  const BenchReport b = bench_swap(o.n, p, o.trials, g.seed);
  Record r;
  r.ok = b.valid;
  r.data = Json{{"type", "bench"},
                {"n", b.n},
                {"p", b.p},
                {"trials", b.trials},
                {"seed", b.seed},
                {"perm_apply_ns", b.perm_apply_ns},
                {"dense_apply_ns", b.dense_apply_ns},
                {"speedup", b.speedup},
                {"correctness_max_dev", b.correctness_max_dev},
                {"atol", b.atol},
                {"valid", b.valid}};
  rep.header = {"outcome", "n", "p", "perm_ns", "dense_ns", "speedup", "max_dev"};
  r.row = {b.valid ? "pass" : "FAIL", std::to_string(b.n), std::to_string(b.p), sci(b.perm_apply_ns),
           sci(b.dense_apply_ns), sci(b.speedup), sci(b.correctness_max_dev)};
  rep.records.push_back(std::move(r));
}

inline void write_json(const RunReport& rep, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << rep.to_json().dump(2) << '\n';
  if (!f) throw Error("write to '" + path + "' failed");
}

}  // namespace detail

/// Parses argv, runs one subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Tensor commutation matrices, operator families and swap identities", "commute"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "absolute tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--json", g.json_path, "write a machine-readable report to this path");
  app.add_option("--seed", g.seed, "RNG seed");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a family (or a TCM) to files");
  gen_cmd->add_option("family", gen.family, "pauli, gell-mann, scaled-gell-mann, kibler, nonions, pauli-strings or tcm")
      ->required();
  gen_cmd->add_option("--n", gen.n, "size parameter");
  gen_cmd->add_option("--p", gen.p, "second TCM factor size (defaults to n)");
  gen_cmd->add_option("--out", gen.out_dir, "output directory");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "run identity verifiers");
  ver_cmd->add_option("--suite", ver.suite, "all, eq1, eq2, eq5, kibler, nonions, proposition, lemma, properties");
  ver_cmd->add_option("--n", ver.n, "restrict parametric checks to this n");
  ver_cmd->add_option("--trials", ver.trials, "lemma trials");

  ExpandOptions exp;
  auto* exp_cmd = app.add_subcommand("expand", "expand a MATC matrix over a family");
  exp_cmd->add_option("--matrix", exp.matrix, "input MATC file")->required();
  exp_cmd->add_option("--basis", exp.basis, "family name or directory of MATC files")->required();
  exp_cmd->add_option("--n", exp.n, "size parameter of a parametric family");
  exp_cmd->add_flag("--pair", exp.pair, "expand over products B_a kron B_c");
  exp_cmd->add_flag("--with-identity", exp.with_identity, "prepend the identity to the family");
  exp_cmd->add_option("--out", exp.out, "write coefficients as MATC");

  SearchOptions se;
  auto* se_cmd = app.add_subcommand("search", "search for swap decompositions");
  se_cmd->add_option("--family", se.family, "unconstrained, hermitian, monomial-cube-root or hollow-involution");
  se_cmd->add_option("--dim", se.dim, "matrix size");
  se_cmd->add_option("--restarts", se.restarts, "multistart restarts");
  se_cmd->add_option("--max-iters", se.max_iters, "iterations per restart");
  se_cmd->add_option("--step-init", se.step_init, "initial step");
  se_cmd->add_option("--grad-tol", se.grad_tol, "gradient norm stop");
  se_cmd->add_option("--threads", se.threads, "worker threads for restarts");
  se_cmd->add_option("--bound", se.bound, "monomial node bound: small, medium, large or a count");
  se_cmd->add_option("--phase-order", se.phase_order, "monomial phases are roots of this order");
  se_cmd->add_option("--max-solutions", se.max_solutions, "monomial solutions kept");
  se_cmd->add_option("--floor", se.floor, "hollow-involution lower bound in odd dimension");
  se_cmd->add_option("--out", se.out_dir, "write the best candidate as MATC files");

  BenchOptions be;
  auto* be_cmd = app.add_subcommand("bench", "time permutation against dense application");
  be_cmd->add_option("--n", be.n, "first factor size")->required();
  be_cmd->add_option("--p", be.p, "second factor size (defaults to n)");
  be_cmd->add_option("--trials", be.trials, "timed trials")->check(CLI::PositiveNumber);

  for (CLI::App* sub : {gen_cmd, ver_cmd, exp_cmd, se_cmd, be_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitStatus::invalid_input);
  }

  RunReport rep;
  try {
    if (gen_cmd->parsed()) {
      rep.command = "gen";
      run_gen(gen, rep);
    } else if (ver_cmd->parsed()) {
      rep.command = "verify";
      run_verify(ver, g, rep);
    } else if (exp_cmd->parsed()) {
      rep.command = "expand";
      run_expand(exp, g, rep);
    } else if (se_cmd->parsed()) {
      rep.command = "search";
      run_search(se, g, rep);
    } else {
      rep.command = "bench";
      run_bench(be, g, rep);
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.records.clear();
    err << "error: " << e.what() << '\n';
  }

  if (!rep.error) print_table(out, rep);
  const ExitStatus status = rep.status();
  out << "exit_status: " << to_string(status) << '\n';
  if (!g.json_path.empty()) {
    try {
      write_json(rep, g.json_path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return static_cast<int>(ExitStatus::invalid_input);
    }
  }
  return static_cast<int>(status);
}

}  // namespace commute::cli
