#include "rperm_cli/app.hpp"

#include <CLI11.hpp>

#include <climits>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rperm/chebyshev.hpp"
#include "rperm/closed_forms.hpp"
#include "rperm/decomposition.hpp"
#include "rperm/engine.hpp"
#include "rperm/json_io.hpp"
#include "rperm/oracle.hpp"
#include "rperm_cli/verify.hpp"

namespace rperm::cli {

namespace {

using nlohmann::json;

enum class Format { kJson, kCsv, kText };

struct Limits {
  int max_n = kDefaultOracleBound;
  int max_pattern = 9;
  int max_order = 30;
  int max_index = 100;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void check_range(const std::string& what, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw UsageError(what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "] (use --unsafe-bounds to lift the upper limit)");
}

Perm pattern_arg(const std::string& text, const Limits& limits) {
  Perm p = Perm::parse(text);
  check_range("pattern length", p.size(), 0, limits.max_pattern);
  return p;
}

ParityFilter parity_arg(const std::string& s) {
  if (s == "even") return ParityFilter::kEven;
  if (s == "odd") return ParityFilter::kOdd;
  return ParityFilter::kBoth;
}

Statistic statistic_arg(const std::string& s, const Limits& limits) {
  if (s == "rlm") return Statistic::rlm();
  if (s.rfind("inc:", 0) == 0) {
    const int j = std::stoi(s.substr(4));
    if (j < 1) throw UsageError("inc:J needs J >= 1");
    return Statistic::inc(j);
  }
  if (s.rfind("occ:", 0) == 0) return Statistic::occurrences_of(pattern_arg(s.substr(4), limits));
  throw UsageError("unknown statistic: " + s + " (expected rlm, inc:J or occ:PATTERN)");
}

ContainSpec contain_arg(const std::string& s, const Limits& limits) {
  const auto colon = s.rfind(':');
  if (colon == std::string::npos) throw UsageError("--contain expects PATTERN:COUNT");
  const long count = std::stol(s.substr(colon + 1));
  if (count < 0) throw UsageError("--contain count must be non-negative");
  return {pattern_arg(s.substr(0, colon), limits), count};
}

void put_counts(json& j, const ParityCounts& c, ParityFilter parity) {
  if (parity != ParityFilter::kOdd) j["even"] = c.even;
  if (parity != ParityFilter::kEven) j["odd"] = c.odd;
  if (parity == ParityFilter::kBoth) j["total"] = c.total();
}

std::string series_csv_value(const Series& s, int n) { return s[n].get_str(); }

std::string parity_name(ParityFilter p) {
  switch (p) {
    case ParityFilter::kEven: return "even";
    case ParityFilter::kOdd: return "odd";
    case ParityFilter::kBoth: break;
  }
  return "both";
}

// --- oracle -----------------------------------------------------------------

struct OracleArgs {
  int n = 0;
  std::vector<std::string> avoid;
  std::string contain;
  std::string parity = "both";
  std::string stat;
};

void do_oracle(const OracleArgs& a, const Limits& limits, Format format, std::ostream& out) {
  check_range("--n", a.n, 0, limits.max_n);
  OracleQuery q;
  q.n = a.n;
  std::vector<std::string> avoid_names{"132"};
  for (const std::string& s : a.avoid) {
    Perm p = pattern_arg(s, limits);
    if (p != Perm({1, 3, 2})) avoid_names.push_back(p.to_string());
    q.avoid.push_back(std::move(p));
  }
  if (!a.contain.empty()) q.contain = contain_arg(a.contain, limits);
  q.parity = parity_arg(a.parity);
  if (!a.stat.empty()) q.statistic = statistic_arg(a.stat, limits);
  const OracleResult res = oracle_count(q, limits.max_n);

  if (format == Format::kJson) {
    json constraints{{"avoid", avoid_names}, {"parity", parity_name(q.parity)}};
    if (q.contain) constraints["contain"] = {{"pattern", q.contain->pattern.to_string()}, {"count", q.contain->count}};
    json j{{"n", q.n}, {"constraints", constraints}};
    put_counts(j, res.counts, q.parity);
    if (q.statistic) {
      j["statistic"] = to_string(*q.statistic);
      auto rows = json::array();
      for (const auto& [value, c] : res.distribution) {
        json row{{"value", value}};
        put_counts(row, c, q.parity);
        rows.push_back(row);
      }
      j["distribution"] = rows;
    }
    out << j.dump(2) << '\n';
  } else if (format == Format::kCsv) {
    if (q.statistic) {
      out << "value,even,odd,total\n";
      for (const auto& [value, c] : res.distribution)
        out << value << ',' << c.even << ',' << c.odd << ',' << c.total() << '\n';
    } else {
      out << "n,even,odd,total\n" << q.n << ',' << res.counts.even << ',' << res.counts.odd << ','
          << res.counts.total() << '\n';
    }
  } else {
    out << "n=" << q.n << " even=" << res.counts.even << " odd=" << res.counts.odd << " total=" << res.counts.total()
        << '\n';
    for (const auto& [value, c] : res.distribution)
      out << "  " << to_string(*q.statistic) << '=' << value << ": even=" << c.even << " odd=" << c.odd << '\n';
  }
}

// --- genfun -----------------------------------------------------------------

void do_genfun(const std::string& tau_text, const std::string& parity_text, int order, const Limits& limits,
               Format format, std::ostream& out) {
  check_range("--order", order, 0, limits.max_order);
  const Perm tau = pattern_arg(tau_text, limits);
  if (tau.empty()) throw UsageError("--tau must be nonempty");
  const ParityFilter parity = parity_arg(parity_text);
  const GFTriple t = gftriple(tau);
  std::vector<std::pair<std::string, const RatFunc*>> parts{{"F", &t.F}, {"M", &t.M}};
  if (parity != ParityFilter::kOdd) parts.emplace_back("E", &t.E);
  if (parity != ParityFilter::kEven) parts.emplace_back("O", &t.O);

  std::vector<Series> expansions;
  for (const auto& [name, f] : parts) expansions.push_back(series_expand(*f, order));

  if (format == Format::kJson) {
    json j{{"tau", tau.to_string()}, {"order", order}};
    json series;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      j[parts[i].first] = to_json(*parts[i].second);
      series[parts[i].first] = to_json(expansions[i]);
    }
    j["series"] = series;
    out << j.dump(2) << '\n';
  } else if (format == Format::kCsv) {
    out << "n";
    for (const auto& [name, f] : parts) out << ',' << name;
    out << '\n';
    for (int n = 0; n <= order; ++n) {
      out << n;
      for (const Series& s : expansions) out << ',' << series_csv_value(s, n);
      out << '\n';
    }
  } else {
    out << "tau = " << tau.to_string() << '\n';
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << parts[i].first << " = " << parts[i].second->to_string() << '\n';
      out << "  ";
      for (int n = 0; n <= order; ++n) out << expansions[i][n].get_str() << (n < order ? " " : "\n");
    }
  }
}

// --- decompose --------------------------------------------------------------

void do_decompose(const std::string& tau_text, const Limits& limits, Format format, std::ostream& out) {
  const Perm tau = pattern_arg(tau_text, limits);
  const CanonicalDecomposition dec(tau);
  if (format == Format::kJson) {
    auto blocks = json::array();
    for (const Block& b : dec.blocks()) blocks.push_back({{"segment", b.segment}, {"max", b.maximum}});
    auto prefixes = json::array(), suffixes = json::array();
    for (int i = -1; i <= dec.r(); ++i) prefixes.push_back(dec.prefix(i).to_string());
    for (int i = 0; i <= dec.r() + 1; ++i) suffixes.push_back(dec.suffix(i).to_string());
    out << json{{"tau", tau.to_string()}, {"r", dec.r()}, {"blocks", blocks}, {"prefixes", prefixes},
                {"suffixes", suffixes}}
               .dump(2)
        << '\n';
    return;
  }
  if (format == Format::kCsv) {
    out << "index,segment,max,prefix,suffix\n";
    for (int i = 0; i <= dec.r(); ++i) {
      const Block& b = dec.blocks()[static_cast<std::size_t>(i)];
      std::string seg;
      for (int v : b.segment) seg += (seg.empty() ? "" : " ") + std::to_string(v);
      out << i << ',' << seg << ',' << b.maximum << ',' << dec.prefix(i).to_string() << ','
          << dec.suffix(i).to_string() << '\n';
    }
    return;
  }
  out << "tau = " << tau.to_string() << ", r = " << dec.r() << '\n';
  for (int i = 0; i <= dec.r(); ++i) {
    const Block& b = dec.blocks()[static_cast<std::size_t>(i)];
    out << "  block " << i << ": (";
    for (std::size_t j = 0; j < b.segment.size(); ++j) out << (j ? " " : "") << b.segment[j];
    out << ") " << b.maximum << "   prefix " << dec.prefix(i).to_string() << "   suffix "
        << dec.suffix(i).to_string() << '\n';
  }
}

// --- chebyshev --------------------------------------------------------------

void do_chebyshev(int n, int k, const Limits& limits, Format format, std::ostream& out) {
  check_range("--n", n, 0, limits.max_index);
  check_range("--k", k, 0, limits.max_index);
  const Poly u = chebyshev_U(n), w = cleared_W(n), uc = cleared_U(n);
  const RatFunc r = R(k);
  if (format == Format::kJson) {
    out << json{{"n", n}, {"U", to_json(u)}, {"W", to_json(w)}, {"U_cleared", to_json(uc)}, {"k", k}, {"R", to_json(r)}}
               .dump(2)
        << '\n';
  } else if (format == Format::kCsv) {
    out << "name,value\n"
        << "U_" << n << ',' << u.to_string("t") << '\n'
        << "W_" << n << ',' << w.to_string() << '\n'
        << "U_cleared_" << n << ',' << uc.to_string() << '\n'
        << "R_" << k << ',' << r.to_string() << '\n';
  } else {
    out << "U_" << n << "(t) = " << u.to_string("t") << '\n'
        << "W_" << n << "(x) = " << w.to_string() << '\n'
        << "x^" << n << " U_" << n << "(1/(2x)) = " << uc.to_string() << '\n'
        << "R_" << k << "(x) = " << r.to_string() << '\n';
  }
}

// --- reports ----------------------------------------------------------------

int emit_report(const Report& report, Format format, bool timings, const std::string& seed_file, std::ostream& out) {
  if (!seed_file.empty()) {
    std::ofstream f(seed_file);
    if (!f) throw UsageError("cannot write " + seed_file);
    f << report.to_json(true).dump(2) << '\n';
  }
  switch (format) {
    case Format::kJson: out << report.to_json(timings).dump(2) << '\n'; break;
    case Format::kCsv: out << report.to_csv(timings); break;
    case Format::kText: out << report.to_text(); break;
  }
  return exit_code_for(report);
}

// --- series -----------------------------------------------------------------

Poly poly_arg(const std::string& s) {
  std::vector<Rational> coeffs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Rational c;
    if (c.set_str(tok, 10) != 0) throw UsageError("bad coefficient: " + tok);
    c.canonicalize();
    coeffs.push_back(c);
  }
  return Poly(std::move(coeffs));
}

void do_series(const std::string& of, int order, const std::string& num, const std::string& den,
               const Limits& limits, Format format, std::ostream& out) {
  check_range("--order", order, 0, limits.max_order);
  std::vector<std::pair<std::string, Series>> columns;
  if (of == "catalan") {
    columns.emplace_back("C", catalan_series(order));
  } else if (of == "unrestricted") {
    const ParitySeries s = closed_unrestricted(order);
    columns.emplace_back("E", s.even);
    columns.emplace_back("O", s.odd);
  } else if (of == "ratfunc") {
    if (num.empty()) throw UsageError("--of ratfunc needs --num (and optionally --den)");
    const RatFunc f(poly_arg(num), den.empty() ? Poly{1} : poly_arg(den));
    columns.emplace_back("f", series_expand(f, order));
  } else if (of == "rlm") {
    const ParityBiSeries s = rlm_distribution(order);
    if (format == Format::kJson) {
      out << json{{"of", of}, {"order", order}, {"even", to_json(s.even)}, {"odd", to_json(s.odd)}}.dump(2) << '\n';
    } else {
      out << (format == Format::kCsv ? "n,even,odd\n" : "");
      for (int n = 0; n <= order; ++n) {
        if (format == Format::kCsv)
          out << n << ',' << s.even[n].to_string("y") << ',' << s.odd[n].to_string("y") << '\n';
        else
          out << "x^" << n << ": even " << s.even[n].to_string("y") << ", odd " << s.odd[n].to_string("y") << '\n';
      }
    }
    return;
  } else {
    throw UsageError("--of must be catalan, unrestricted, rlm or ratfunc");
  }
  if (format == Format::kJson) {
    json j{{"of", of}, {"order", order}};
    for (const auto& [name, s] : columns) j[name] = to_json(s);
    out << j.dump(2) << '\n';
  } else if (format == Format::kCsv) {
    out << "n";
    for (const auto& [name, s] : columns) out << ',' << name;
    out << '\n';
    for (int n = 0; n <= order; ++n) {
      out << n;
      for (const auto& [name, s] : columns) out << ',' << s[n].get_str();
      out << '\n';
    }
  } else {
    for (const auto& [name, s] : columns) {
      out << name << ":";
      for (int n = 0; n <= order; ++n) out << ' ' << s[n].get_str();
      out << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity-refined generating functions for 132-avoiding permutations", "rperm"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "json";
  bool unsafe = false;
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--unsafe-bounds", unsafe, "Lift the default size limits");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Count 132-avoiders by brute-force enumeration");
  oracle->add_option("--n", oa.n, "Permutation length")->required();
  oracle->add_option("--avoid", oa.avoid, "Pattern to avoid (repeatable)");
  oracle->add_option("--contain", oa.contain, "PATTERN:COUNT, exact number of occurrences");
  oracle->add_option("--parity", oa.parity)->check(CLI::IsMember({"even", "odd", "both"}));
  oracle->add_option("--stat", oa.stat, "rlm, inc:J or occ:PATTERN");

  std::string tau, parity = "both";
  int order = 10;
  auto* genfun = app.add_subcommand("genfun", "Generating functions F, M, E, O for one pattern");
  genfun->add_option("--tau", tau, "Pattern avoiding 132")->required();
  genfun->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "both"}));
  genfun->add_option("--order", order, "Number of series terms to print");

  auto* decompose = app.add_subcommand("decompose", "Blocks, prefixes and suffixes along right-to-left maxima");
  decompose->add_option("--tau", tau, "Pattern avoiding 132")->required();

  int cheb_n = 5, cheb_k = -1, max_pq = 20;
  auto* cheb = app.add_subcommand("chebyshev", "Chebyshev polynomials and R_k");
  cheb->add_option("--n", cheb_n, "Index of U_n and W_n");
  cheb->add_option("--k", cheb_k, "Index of R_k (defaults to n)");
  int cheb_max_k = 50;
  auto* cheb_verify = cheb->add_subcommand("verify", "Run the identity suite");
  cheb_verify->add_option("--max-k", cheb_max_k, "Largest single index");
  cheb_verify->add_option("--max-pq", max_pq, "Largest index in the two-index identities");

  std::string family = "all", seed_file;
  int max_k = -1, max_n = 12;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the engine and enumeration");
  verify->add_option("--family", family)->check(CLI::IsMember([] {
    std::vector<std::string> v = family_names();
    v.push_back("all");
    return v;
  }()));
  verify->add_option("--max-k", max_k, "Family size limit");
  verify->add_option("--max-n", max_n, "Largest enumerated length");
  verify->add_option("--seed-report", seed_file, "Also write the full report (with timings) to FILE");
  verify->add_flag("--timings", timings, "Include per-check runtimes");
  cheb_verify->add_option("--seed-report", seed_file, "Also write the full report to FILE");
  cheb_verify->add_flag("--timings", timings, "Include per-check runtimes");

  std::string of = "catalan", num, den;
  auto* series = app.add_subcommand("series", "Truncated series expansions");
  series->add_option("--of", of, "catalan, unrestricted, rlm or ratfunc");
  series->add_option("--order", order, "Truncation order");
  series->add_option("--num", num, "Numerator coefficients, lowest power first (ratfunc)");
  series->add_option("--den", den, "Denominator coefficients (ratfunc)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = format_text == "csv" ? Format::kCsv : format_text == "text" ? Format::kText : Format::kJson;
  Limits limits;
  if (unsafe) limits = Limits{INT_MAX / 2, 16, INT_MAX / 2, INT_MAX / 2};

  try {
    if (*oracle) {
      do_oracle(oa, limits, format, out);
    } else if (*genfun) {
      do_genfun(tau, parity, order, limits, format, out);
    } else if (*decompose) {
      do_decompose(tau, limits, format, out);
    } else if (*cheb) {
      if (*cheb_verify) {
        check_range("--max-k", cheb_max_k, 1, limits.max_index);
        check_range("--max-pq", max_pq, 0, limits.max_index);
        return emit_report(chebyshev_report(cheb_max_k, max_pq), format, timings, seed_file, out);
      }
      do_chebyshev(cheb_n, cheb_k < 0 ? cheb_n : cheb_k, limits, format, out);
    } else if (*verify) {
      check_range("--max-n", max_n, 0, limits.max_n);
      VerifyOptions o;
      if (max_k >= 0) o.max_k = max_k;
      o.max_n = max_n;
      o.bound = limits.max_n;
      return emit_report(run_verification(family, o), format, timings, seed_file, out);
    } else if (*series) {
      do_series(of, order, num, den, limits, format, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rperm::cli
