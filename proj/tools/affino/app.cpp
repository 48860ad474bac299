// SPDX-License-Identifier: Apache-2.0
#include "affino/app.hpp"

#include "affino/chromatic.hpp"
#include "affino/document.hpp"
#include "affino/errors.hpp"
#include "affino/families.hpp"
#include "affino/geometry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace affino::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string input;
  Gain m = 0;
  Gain m_max = 8;
  std::string method;
  std::size_t limit_flats = 1'000'000;
  std::uint64_t limit_points = 100'000'000;
  std::string family;
  int n = 0;
  Gain a = 0;
  Gain b = 0;
  Gain s = 1;
};

std::string read_input(const Settings& settings, std::istream& in) {
  if (settings.input.empty() || settings.input == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(settings.input);
  if (!file) throw InvalidInput("cannot open input file " + settings.input);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

FlatOptions flat_options(const Settings& s) { return {s.limit_flats, 0}; }
OracleOptions oracle_options(const Settings& s) { return {s.limit_points}; }

Json terms_json(const TermSum& terms) {
  Json out;
  out["n"] = terms.order;
  out["terms"] = Json::array();
  for (const Term& t : terms.terms) {
    Json term;
    term["sign"] = t.sign;
    term["mu"] = t.mu;
    term["roots"] = t.roots;
    out["terms"].push_back(std::move(term));
  }
  return out;
}

BigInt integral_by(const std::string& method, const LoadedGraph& g, Gain m, const Settings& s) {
  const RootedGainGraph rooted = g.as_rooted();
  if (method == "mobius") return integral_chromatic(rooted, m, flat_options(s));
  if (method == "dc") return integral_chromatic_dc(rooted, m);
  return oracle_rooted(rooted, m, oracle_options(s));
}

Json cmd_eval(const Settings& s, const LoadedGraph& g) {
  Json out;
  out["m"] = s.m;
  out["count"] = to_decimal(integral_by(s.method, g, s.m, s));
  return out;
}

Json cmd_modular(const Settings& s, const LoadedGraph& g) {
  if (s.m < 1) throw InvalidInput("--m must be positive for modular coloring");
  Json out;
  out["m"] = s.m;
  if (s.method == "oracle") {
    out["count"] = to_decimal(oracle_modular(g.graph, s.m, oracle_options(s)));
    return out;
  }
  const BigInt flats = modular_chromatic(g.graph, s.m, flat_options(s));
  out["count"] = to_decimal(flats);
  if (s.method == "paper") {
    const BigInt rule = modular_paper_rule(g.graph, s.m, flat_options(s));
    out["paper_rule"] = to_decimal(rule);
    out["agrees"] = rule == flats;
  }
  return out;
}

Json cmd_charpoly(const Settings& s, const LoadedGraph& g) {
  const Polynomial p = balanced_chromatic_polynomial(g.graph, flat_options(s));
  Json out;
  out["coefficients"] = Json::array();
  for (const BigInt& c : p.coefficients()) out["coefficients"].push_back(to_decimal(c));
  return out;
}

Json cmd_regions(const Settings& s, const LoadedGraph& g) {
  Json out;
  out["regions"] = to_decimal(region_count(g.graph, flat_options(s)));
  return out;
}

Json cmd_family(const Settings& s) {
  const auto family = parse_family(s.family);
  if (!family) throw InvalidInput("unknown family '" + s.family + "'");
  const FamilySpec spec{*family, s.n, s.a, s.b, s.s};
  const GainGraph graph = family_graph(spec);

  Json out;
  out["name"] = std::string(family_name(spec.name));
  out["n"] = spec.n;
  out["graph"] = Json::parse(document_text(graph));
  return out;
}

Json cmd_verify(const Settings& s, const LoadedGraph& g, bool& ok) {
  Json failures = Json::array();
  const RootedGainGraph rooted = g.as_rooted();
  const TermSum terms = integral_terms(rooted, flat_options(s));

  for (Gain m = 0; m <= s.m_max; ++m) {
    const BigInt mobius = eval_terms(terms, m);
    const BigInt dc = integral_chromatic_dc(rooted, m);
    const BigInt oracle = oracle_rooted(rooted, m, oracle_options(s));
    if (mobius != dc || mobius != oracle) {
      Json f;
      f["check"] = "integral";
      f["m"] = m;
      f["mobius"] = to_decimal(mobius);
      f["dc"] = to_decimal(dc);
      f["oracle"] = to_decimal(oracle);
      failures.push_back(std::move(f));
      break;
    }
  }
  for (Gain m = 1; m <= s.m_max; ++m) {
    const BigInt flats = modular_chromatic(g.graph, m, flat_options(s));
    const BigInt oracle = oracle_modular(g.graph, m, oracle_options(s));
    if (flats != oracle) {
      Json f;
      f["check"] = "modular";
      f["m"] = m;
      f["flats"] = to_decimal(flats);
      f["oracle"] = to_decimal(oracle);
      failures.push_back(std::move(f));
      break;
    }
  }
  ok = failures.empty();
  Json out;
  out["ok"] = ok;
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact colouring counts for integral gain graphs and affinographic arrangements",
               "affino"};
  app.require_subcommand(1);

  auto add_common = [&s](CLI::App* sub) {
    sub->add_option("--input", s.input, "Graph document (JSON); standard input when omitted");
    sub->add_option("--limit-flats", s.limit_flats, "Maximum number of balanced flats")
        ->capture_default_str();
  };
  auto add_points = [&s](CLI::App* sub) {
    sub->add_option("--limit-points", s.limit_points, "Oracle enumeration budget in points")
        ->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "Integral chromatic count at m");
  add_common(eval);
  add_points(eval);
  eval->add_option("--m", s.m, "Number of colors")->required();
  eval->add_option("--method", s.method, "mobius | dc | oracle")
      ->default_str("mobius")
      ->check(CLI::IsMember({"mobius", "dc", "oracle"}));

  auto* pieces = app.add_subcommand("pieces", "Piecewise-polynomial term list");
  add_common(pieces);

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial, ascending coefficients");
  add_common(charpoly);

  auto* regions = app.add_subcommand("regions", "Number of regions of the arrangement");
  add_common(regions);

  auto* modular = app.add_subcommand("modular", "Modular chromatic count at m");
  add_common(modular);
  add_points(modular);
  modular->add_option("--m", s.m, "Modulus")->required();
  modular->add_option("--method", s.method, "flats | paper | oracle")
      ->default_str("flats")
      ->check(CLI::IsMember({"flats", "paper", "oracle"}));

  auto* family = app.add_subcommand("family", "Closed-form counts for [a,b]K_n, Shi, extended Shi, Linial");
  family->add_option("--name", s.family, "interval-Kn | shi | ext-shi | linial")->required();
  family->add_option("--n", s.n, "Order")->required();
  family->add_option("--a", s.a, "Lowest gain (interval-Kn)");
  family->add_option("--b", s.b, "Highest gain (interval-Kn)");
  family->add_option("--s", s.s, "Extension parameter (ext-shi)");
  auto* family_m = family->add_option("--m", s.m, "Number of colors");
  family->add_option("--limit-flats", s.limit_flats, "Maximum number of balanced flats");

  auto* verify = app.add_subcommand("verify", "Cross-check every counting method against brute force");
  add_common(verify);
  add_points(verify);
  verify->add_option("--m-max", s.m_max, "Largest m checked")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "affino: " << e.what() << "\n";
    return kInputError;
  }
  if (s.method.empty()) s.method = modular->parsed() ? "flats" : "mobius";

  try {
    Json result;
    int code = kOk;
    if (family->parsed()) {
      result = cmd_family(s);
      if (family_m->count() > 0) {
        const FamilySpec spec{*parse_family(s.family), s.n, s.a, s.b, s.s};
        result["m"] = s.m;
        if (auto closed = family_closed_form(spec, s.m)) {
          result["count"] = to_decimal(*closed);
          result["source"] = "closed-form";
        } else {
          result["count"] = to_decimal(integral_chromatic(family_graph(spec), s.m, flat_options(s)));
          result["source"] = "engine";
        }
      }
    } else {
      const LoadedGraph g = parse_graph(read_input(s, in));
      if (eval->parsed()) result = cmd_eval(s, g);
      else if (pieces->parsed()) result = terms_json(integral_terms(g.as_rooted(), flat_options(s)));
      else if (charpoly->parsed()) result = cmd_charpoly(s, g);
      else if (regions->parsed()) result = cmd_regions(s, g);
      else if (modular->parsed()) result = cmd_modular(s, g);
      else if (verify->parsed()) {
        bool ok = false;
        result = cmd_verify(s, g, ok);
        code = ok ? kOk : kCheckFailed;
      }
    }
    out << result.dump() << "\n";
    return code;
  } catch (const ResourceLimit& e) {
    err << "affino: resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "affino: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace affino::cli
