#pragma once

// Subcommand bodies of the squig CLI. Each writes its payload to `out` and
// returns the process exit code.

#include "squig/squig.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace squig::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_verify_failed = 3;

/// printf-style %.<digits>g, independent of the global locale.
inline std::string fmt(double v, int digits = 16) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

/// %.<decimals>f, for columns that keep trailing zeros.
inline std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "a:b" (inclusive) or a single "a".
inline IntRange parse_range(const std::string& text) {
  std::size_t used = 0;
  IntRange r;
  const auto colon = text.find(':');
  try {
    r.lo = std::stoi(text.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? text.size() : colon)) throw std::invalid_argument(text);
    r.hi = r.lo;
    if (colon != std::string::npos) {
      const std::string tail = text.substr(colon + 1);
      r.hi = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected a:b");
  }
  if (r.hi < r.lo) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

/// "start:stop:step", inclusive of stop up to rounding.
inline std::vector<double> parse_grid(const std::string& text) {
  double v[3];
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  char c1 = 0, c2 = 0;
  if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw std::invalid_argument("bad grid '" + text + "', expected start:stop:step");
  }
  if (!(v[2] > 0.0) || !(v[1] >= v[0]) || !std::isfinite(v[0]) || !std::isfinite(v[1])) {
    throw std::invalid_argument("bad grid '" + text + "'");
  }
  const auto count = static_cast<long long>(std::floor((v[1] - v[0]) / v[2] * (1.0 + 1e-12))) + 1;
  if (count > 10'000'000) throw std::invalid_argument("grid too large");
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) ts.push_back(v[0] + static_cast<double>(i) * v[2]);
  return ts;
}

/// MacLaurin coefficients of cq and sq for p = 4, powers up to
/// 128 and 129.
inline int table1(std::ostream& out) {
  const int p = 4;
  const int J = 32;
  const MacLaurinTable c = maclaurin(cosquine_params(p), J);
  const MacLaurinTable s = maclaurin(squine_params(p), J);
  out << "k_c,c_k,k_s,s_k\n";
  for (int j = 0; j <= c.J; ++j) {
    out << c.power(j) << ',' << fmt(c.coefficient(j)) << ',' << s.power(j) << ','
        << fmt(s.coefficient(j)) << '\n';
  }
  return exit_ok;
}

/// pi_p and the number of nonzero MacLaurin terms.
inline int pi(std::ostream& out, IntRange range, double eps = default_epsilon) {
  if (range.lo < 2) throw invalid_params("pi: p must be >= 2");
  out << "p,pi_p,nnz_maclaurin,newton_iterations\n";
  for (int p = range.lo; p <= range.hi; ++p) {
    const PiRecord r = compute_pi(p, eps);
    out << p << ',' << fmt_fixed(r.value, 15) << ',' << r.J_used << ',' << r.iterations << '\n';
  }
  return exit_ok;
}

inline int beta(std::ostream& out, int p, int m, int n, double eps = default_epsilon) {
  const double value = beta_rational(p, m, n, eps);
  const double quad = beta_quadrature(make_context(p, eps), m, n);
  out << "p,m,n,beta,quadrature_delta\n"
      << p << ',' << m << ',' << n << ',' << fmt(value, 17) << ',' << fmt(value - quad, 3) << '\n';
  return exit_ok;
}

inline int eval(std::ostream& out, int p, const std::string& func, int m, int n,
                const std::vector<double>& ts, double eps = default_epsilon) {
  if (func != "sq" && func != "cq" && func != "tq" && func != "pow") {
    throw std::invalid_argument("eval: --func must be one of sq, cq, tq, pow");
  }
  const EvalContext ctx = make_context(p, eps);
  out << "t,value\n";
  for (double t : ts) {
    double v = 0.0;
    if (func == "sq") {
      v = sq(ctx, t);
    } else if (func == "cq") {
      v = cq(ctx, t);
    } else if (func == "tq") {
      v = tq(ctx, t);
    } else {
      v = pow_general(ctx, m, n, t);
    }
    out << fmt(t, 17) << ',' << fmt(v, 17) << '\n';
  }
  return exit_ok;
}

inline int plotdata(std::ostream& out, int p, const std::optional<std::string>& grid,
                    double eps = default_epsilon) {
  const EvalContext ctx = make_context(p, eps);
  const std::vector<double> ts =
      grid ? parse_grid(*grid) : parse_grid("0:" + fmt(2.0 * ctx.pi_p(), 17) + ":0.01");
  out << "t,sq,cq\n";
  for (double t : ts) {
    const auto [s, c] = sq_cq(ctx, t);
    out << fmt(t, 17) << ',' << fmt(s, 17) << ',' << fmt(c, 17) << '\n';
  }
  return exit_ok;
}

inline int triangle(std::ostream& out, SquigParams s, int K, bool csv) {
  if (K < 0) throw std::invalid_argument("triangle: K must be >= 0");
  const CoeffTriangle tri = build_triangle(s, K);
  if (!csv) {
    out << to_json(tri).dump() << '\n';
    return exit_ok;
  }
  out << "k,j,value\n";
  for (int k = 0; k <= K; ++k) {
    for (const auto& [j, v] : tri.row(k)) out << k << ',' << j << ',' << to_decimal(v) << '\n';
  }
  return exit_ok;
}

inline int roots(std::ostream& out, SquigParams s, int K) {
  if (K < 0) throw std::invalid_argument("roots: K must be >= 0");
  const auto chain = root_chain(s, K);
  out << "k,zero_multiplicity,index,root,cq,sq\n";
  for (const RootSet& r : chain) {
    if (r.negative_roots.empty()) {
      out << r.k << ',' << r.zero_multiplicity << ",,,,\n";
      continue;
    }
    for (std::size_t i = 0; i < r.negative_roots.size(); ++i) {
      const double u = r.negative_roots[i];
      const AlgebraicValues av = algebraic_values(u, s.p);
      out << r.k << ',' << r.zero_multiplicity << ',' << i << ',' << fmt(u, 17) << ','
          << fmt(av.cq, 17) << ',' << fmt(av.sq, 17) << '\n';
    }
  }
  return exit_ok;
}

inline int factors(std::ostream& out, SquigParams s, int J, double eps = default_epsilon) {
  if (J < 0) throw std::invalid_argument("factors: J must be >= 0");
  const FactorSequence fs = factor_sequence(s, J);
  const double rp = std::pow(radius(s.p, compute_pi(s.p, eps).value), s.p);
  out << "j,a_j,value,limit_gap\n";
  for (int j = 0; j <= fs.J(); ++j) {
    const auto& a = fs.exact[static_cast<std::size_t>(j)];
    const double v = fs.values[static_cast<std::size_t>(j)];
    out << j << ',' << to_decimal(numerator(a)) << '/' << to_decimal(denominator(a)) << ','
        << fmt(v, 17) << ',' << (std::isfinite(rp) ? fmt(std::abs(v * rp - 1.0), 6) : "inf") << '\n';
  }
  return exit_ok;
}

inline int maclaurin_cmd(std::ostream& out, SquigParams s, std::optional<int> J_opt, bool as_json,
                         double eps = default_epsilon) {
  const int J = J_opt ? *J_opt : required_terms(s.p, compute_pi(s.p, eps).value, eps);
  if (J < 0) throw std::invalid_argument("maclaurin: J must be >= 0");
  const MacLaurinTable t = maclaurin(s, J, as_json);
  if (as_json) {
    out << to_json(t).dump() << '\n';
    return exit_ok;
  }
  out << "k,coefficient\n";
  for (int j = 0; j <= t.J; ++j) out << t.power(j) << ',' << fmt(t.coefficient(j), 17) << '\n';
  return exit_ok;
}

inline int verify(std::ostream& out) {
  bool all = true;
  out << "check,result,detail\n";
  for (const CheckResult& r : run_all_checks()) {
    all = all && r.passed;
    out << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << r.detail << '\n';
  }
  return all ? exit_ok : exit_verify_failed;
}

inline int cache_save(std::ostream& out, IntRange range, double eps, const std::filesystem::path& path) {
  if (range.lo < 2) throw invalid_params("cache: p must be >= 2");
  CacheFile cache;
  for (int p = range.lo; p <= range.hi; ++p) {
    CacheFile one = cache_for(p, compute_pi(p, eps).value, eps);
    for (auto& e : one.entries) cache.entries.push_back(std::move(e));
  }
  save_cache(cache, path);
  out << "saved " << cache.entries.size() << " tables to " << path.string() << '\n';
  return exit_ok;
}

/// Loads a cache, rebuilds every table and compares bit for bit, then checks
/// that evaluation through the cached tables is bit-identical on 100 points.
inline int cache_load(std::ostream& out, const std::filesystem::path& path) {
  const CacheFile cache = load_cache(path);
  bool all = true;
  out << "p,m,n,J,tables_identical,evaluation_identical\n";
  for (const CacheEntry& e : cache.entries) {
    const SquigParams s = e.table.params;
    const MacLaurinTable fresh = maclaurin(s, e.table.J, !e.table.numerators.empty());
    const bool same_table = fresh.floats == e.table.floats && fresh.numerators == e.table.numerators;
    bool same_eval = true;
    const CacheEntry* sq_entry = cache.find(squine_params(s.p), e.epsilon);
    const CacheEntry* cq_entry = cache.find(cosquine_params(s.p), e.epsilon);
    if (sq_entry != nullptr && cq_entry != nullptr) {
      const EvalContext cached(s.p, e.pi_p, e.epsilon, sq_entry->table, cq_entry->table);
      const EvalContext built(s.p, e.pi_p, e.epsilon);
      for (int i = 0; i < 100; ++i) {
        const double t = -10.0 + 0.2 * i + 0.013;
        if (sq_cq(cached, t) != sq_cq(built, t)) same_eval = false;
      }
    }
    all = all && same_table && same_eval;
    out << s.p << ',' << s.m << ',' << s.n << ',' << e.table.J << ',' << (same_table ? "yes" : "no") << ','
        << (same_eval ? "yes" : "no") << '\n';
  }
  return all ? exit_ok : exit_verify_failed;
}

}  // namespace squig::cli
