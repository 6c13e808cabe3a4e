#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "permclass/gf_engine.hpp"
#include "permclass/json_io.hpp"
#include "permclass/septree.hpp"

namespace permclass::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Permutation permArg(const std::string& text) {
  try {
    return parsePermutation(trim(text));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

// Containment only depends on relative order, so `contain` also accepts
// sequences of distinct integers that are not permutations of 1..n.
Permutation rankReducedArg(const std::string& text, std::ostream& err) {
  try {
    return parsePermutation(trim(text));
  } catch (const ParseError&) {
  }
  try {
    Permutation pi = parseRankReduced(trim(text));
    err << "note: '" << trim(text) << "' rank-reduced to " << pi.commaStr() << "\n";
    return pi;
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

ClassSpec basisArg(const std::string& text) {
  try {
    return parseBasis(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid basis '") + text + "': " + e.what());
  }
}

Poly polyArg(const std::string& text, const char* flag) {
  std::vector<Rational> coeffs;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    Rational q;
    if (token.empty() || q.set_str(token, 10) != 0 ||
        (token.find('/') != std::string::npos && q.get_den() == 0))
      throw UsageError(std::string("invalid coefficient '") + token + "' in " + flag);
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Poly(std::move(coeffs));
}

std::string coeffList(const Poly& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) out += ",";
    out += p.coeffs()[k].get_str();
  }
  return out;
}

json seriesJson(const PowerSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(rationalToJson(c));
  return arr;
}

std::string seriesText(const PowerSeries& s) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (k) out += ",";
    out += s[k].get_str();
  }
  return out;
}

EnumerationOptions enumerationOptions(bool keepMembers) {
  EnumerationOptions opts;
  opts.keepMembers = keepMembers;
  try {
    opts.maxMembersPerLevel = memberCapFromEnvironment(opts.maxMembersPerLevel);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return opts;
}

void printCountCsv(std::ostream& out, const CountTable& table) {
  out << (table.members ? "n,count,members\n" : "n,count\n");
  for (std::size_t n = 1; n <= table.maxN(); ++n) {
    out << n << "," << table.count(n);
    if (table.members) {
      out << ",\"";
      const auto& level = (*table.members)[n - 1];
      for (std::size_t i = 0; i < level.size(); ++i)
        out << (i ? ";" : "") << level[i].str();
      out << "\"";
    }
    out << "\n";
  }
}

}  // namespace

USpec parseUSpec(std::string_view text, std::ostream& err) {
  const std::string t = trim(text);
  if (t == "trivial") return USpec::trivial();
  if (t == "inc") return USpec::increasing();
  if (t == "dec") return USpec::decreasing();
  if (t.rfind("file:", 0) == 0) {
    const std::string path = t.substr(5);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open U file '" + path + "'");
    std::set<Permutation> members;
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      members.insert(permArg(line));
    }
    if (members.empty()) throw UsageError("U file '" + path + "' lists no permutations");
    if (closure(members) != members)
      err << "warning: U file '" << path
          << "' is not downward closed; using its closure\n";
    try {
      return USpec::finite(std::move(members), USpec::Completion::Complete);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("invalid U '" + t + "': expected trivial, inc, dec or file:PATH");
}

std::optional<std::size_t> firstMismatch(const PowerSeries& series,
                                         const CountTable& counts) {
  for (std::size_t n = 1; n <= counts.maxN(); ++n) {
    if (n > series.order()) return n;
    if (series[n] != Rational(std::to_string(counts.count(n)))) return n;
  }
  return std::nullopt;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and generating functions for permutation classes",
               "permclass"};
  app.require_subcommand(1);
  app.fallthrough();
  bool asJson = false;
  app.add_flag("--json", asJson, "Emit JSON instead of text");

  std::string piText, sigmaText;
  auto* contain = app.add_subcommand("contain", "Test whether PI contains SIGMA");
  contain->add_option("PI", piText)->required();
  contain->add_option("SIGMA", sigmaText)->required();

  std::string decomposeText;
  auto* decompose = app.add_subcommand("decompose", "Print the separating tree of PI");
  decompose->add_option("PI", decomposeText)->required();

  std::string basisText, uText;
  std::size_t maxN = 0;
  bool members = false;
  auto* count = app.add_subcommand("count", "Count a class by length");
  count->add_option("--basis", basisText, "Semicolon-separated basis");
  count->add_option("--max", maxN, "Largest length")->required()->check(CLI::PositiveNumber);
  count->add_option("--in-x-u", uText, "Restrict to X[U]: trivial|inc|dec|file:PATH");
  count->add_flag("--members", members, "Also list the members of each length");

  std::size_t seriesOrder = 10;
  auto* gf = app.add_subcommand("gf", "Rational generating function of X[U] ∩ Av(B)");
  gf->add_option("--u", uText, "trivial|inc|dec|file:PATH")->required();
  gf->add_option("--basis", basisText, "Semicolon-separated basis");
  gf->add_option("--series", seriesOrder, "Number of series terms")->check(CLI::NonNegativeNumber);

  std::string numText, denText;
  auto* series = app.add_subcommand("series", "Expand a rational function");
  series->add_option("--num", numText, "Numerator coefficients, ascending")->required();
  series->add_option("--den", denText, "Denominator coefficients, ascending")->required();
  series->add_option("--max", maxN, "Largest exponent")->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Compare the engine against enumeration");
  verify->add_option("--u", uText, "trivial|inc|dec|file:PATH")->required();
  verify->add_option("--basis", basisText, "Semicolon-separated basis");
  verify->add_option("--max", maxN, "Largest length")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (contain->parsed()) {
      const Permutation pi = rankReducedArg(piText, err);
      const Permutation sigma = rankReducedArg(sigmaText, err);
      const bool result = contains(pi, sigma);
      if (asJson)
        out << json{{"pi", pi}, {"sigma", sigma}, {"contains", result}}.dump() << "\n";
      else
        out << (result ? "true" : "false") << "\n";
      return kSuccess;
    }

    if (decompose->parsed()) {
      const Permutation pi = permArg(decomposeText);
      if (pi.empty()) throw UsageError("decompose needs a nonempty permutation");
      const auto tree = buildTree(pi);
      if (asJson) {
        json j{{"pi", pi}, {"separable", tree.has_value()}};
        if (tree) j["tree"] = tree->str();
        out << j.dump() << "\n";
      } else {
        out << (tree ? tree->str() : std::string("not separable")) << "\n";
      }
      return kSuccess;
    }

    if (count->parsed()) {
      const ClassSpec spec = basisArg(basisText);
      std::optional<USpec> u;
      if (!uText.empty()) u = parseUSpec(uText, err);
      const EnumerationOptions opts = enumerationOptions(members);
      const CountTable table =
          u ? enumerateXU(*u, spec, maxN, opts) : enumerateAv(spec, maxN, opts);
      if (asJson) {
        json j = table;
        j["basis"] = spec.basis();
        if (u) j["u"] = u->name();
        out << j.dump() << "\n";
      } else {
        printCountCsv(out, table);
      }
      return kSuccess;
    }

    if (gf->parsed()) {
      const USpec u = parseUSpec(uText, err);
      const ClassSpec spec = basisArg(basisText);
      const RationalFunction g = classGF(u, spec);
      const PowerSeries s = seriesExpand(g, seriesOrder);
      if (asJson) {
        out << json{{"u", u.name()}, {"basis", spec.basis()}, {"gf", g},
                    {"series", seriesJson(s)}}
                   .dump()
            << "\n";
      } else {
        const auto [num, den] = g.gfForm();
        out << "gf: " << g.str() << "\n"
            << "num: " << coeffList(num) << "\n"
            << "den: " << coeffList(den) << "\n"
            << "series: " << seriesText(s) << "\n";
      }
      return kSuccess;
    }

    if (series->parsed()) {
      const Poly num = polyArg(numText, "--num");
      const Poly den = polyArg(denText, "--den");
      if (den.isZero()) throw UsageError("--den must be a nonzero polynomial");
      const PowerSeries s = seriesExpand(RationalFunction(num, den), maxN);
      if (asJson) {
        out << json{{"coefficients", seriesJson(s)}}.dump() << "\n";
      } else {
        out << "n,coefficient\n";
        for (std::size_t k = 0; k <= s.order(); ++k) out << k << "," << s[k].get_str() << "\n";
      }
      return kSuccess;
    }

    if (verify->parsed()) {
      const USpec u = parseUSpec(uText, err);
      const ClassSpec spec = basisArg(basisText);
      const EnumerationOptions opts = enumerationOptions(false);
      const RationalFunction g = classGF(u, spec);
      const PowerSeries s = seriesExpand(g, maxN);
      const CountTable oracle = enumerateXU(u, spec, maxN, opts);
      const auto bad = firstMismatch(s, oracle);
      if (asJson) {
        json rows = json::array();
        for (std::size_t n = 1; n <= maxN; ++n)
          rows.push_back({{"n", n}, {"engine", rationalToJson(s[n])},
                          {"oracle", oracle.count(n)}});
        json j{{"u", u.name()}, {"basis", spec.basis()}, {"gf", g},
               {"rows", rows}, {"match", !bad.has_value()}};
        if (bad) j["firstMismatch"] = *bad;
        out << j.dump() << "\n";
      } else {
        out << "n,engine,oracle\n";
        for (std::size_t n = 1; n <= maxN; ++n)
          out << n << "," << s[n].get_str() << "," << oracle.count(n) << "\n";
      }
      if (bad) {
        err << "mismatch at n=" << *bad << ": engine=" << s[*bad].get_str()
            << " oracle=" << oracle.count(*bad) << "\n";
        return kMismatch;
      }
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace permclass::cli
