// deodhar-lab: exact Coxeter / Hecke / Kazhdan-Lusztig / Bott-Samelson
// calculator with machine-readable output and a persistent KL table cache.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>

#include "dlab/bottsamelson.hpp"
#include "dlab/deodhar.hpp"
#include "dlab/errors.hpp"
#include "dlab/hecke.hpp"
#include "dlab/klcache.hpp"

using json = nlohmann::ordered_json;
using namespace dlab;

namespace {

struct Options {
  std::string group;
  std::string format = "table";
  std::string cache;
  bool verify_cache = false;
  std::size_t max_subexpr = 24;
  std::size_t max_bs_length = 10;
  std::size_t max_sweep_len = 12;
  std::size_t max_elements = 1000000;

  std::string x_word, y_word, word;
  int max_len = 4;
};

struct CheckList {
  json entries = json::array();
  bool all_ok = true;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    json e;
    e["name"] = name;
    e["ok"] = ok;
    if (!detail.empty()) e["detail"] = detail;
    entries.push_back(std::move(e));
    all_ok = all_ok && ok;
  }
};

std::vector<GroupElement> elements_up_to(const CoxeterSystem& sys, int max_len,
                                         std::size_t cap) {
  std::vector<GroupElement> out;
  for (const auto& stratum : enumerate_elements(sys, max_len, cap))
    out.insert(out.end(), stratum.begin(), stratum.end());
  return out;
}

void for_each_expression(const CoxeterSystem& sys, std::size_t len,
                         const std::function<void(const Expression&)>& fn) {
  std::vector<int> letters(len, 0);
  while (true) {
    fn(Expression(sys, letters));
    std::size_t i = len;
    while (i > 0 && letters[i - 1] == sys.rank() - 1) letters[--i] = 0;
    if (i == 0) break;
    ++letters[i - 1];
  }
}

json subexpr_row(const DecoratedSubexpr& d, std::size_t m) {
  json row;
  row["bits"] = d.bits_string(m);
  row["decorations"] = d.steps_string();
  row["expresses"] = d.expressed.to_string();
  row["defect"] = d.defect;
  return row;
}

// ---- subcommand bodies; each fills result and checks ----

void run_klpoly(const Options& opt, KLTable& table, json& result, CheckList& checks) {
  const CoxeterSystem& sys = table.system();
  GroupElement x = parse_element(sys, opt.x_word);
  GroupElement y = parse_element(sys, opt.y_word);
  auto kl = table.kl_poly(x, y);
  result["h"] = kl.h.to_string();
  result["p"] = kl.p.to_string();
  result["mu"] = kl.mu.get_str();
  checks.add("h-coefficients-nonnegative", kl.h.all_coeffs_nonneg());
  bool coset_ok = x == y ? kl.h.is_one()
                         : (bruhat_leq(x, y) ? kl.h.in_v_zv() && !kl.h.is_zero()
                                             : kl.h.is_zero());
  checks.add("h-in-expected-coset", coset_ok);
}

void run_deodhar(const Options& opt, KLTable& table, json& result, CheckList& checks) {
  const CoxeterSystem& sys = table.system();
  Expression ybar = Expression::parse(sys, opt.word);
  GroupElement x = parse_element(sys, opt.x_word);

  result["word"] = ybar.to_string();
  result["reduced"] = ybar.is_reduced();
  result["x"] = x.to_string();

  json rows = json::array();
  LaurentPoly gdim;
  for_each_subexpr(
      ybar, x,
      [&](const DecoratedSubexpr& d) {
        rows.push_back(subexpr_row(d, ybar.size()));
        gdim += LaurentPoly::v(d.defect);
      },
      opt.max_subexpr);
  result["subexpressions"] = std::move(rows);
  result["gdim"] = gdim.to_string();
  checks.add("gdim-matches-character", gdim == bs_character(ybar).coeff(x));

  if (ybar.is_reduced()) {
    auto census = subset_solutions(x, ybar, table, opt.max_subexpr);
    json c;
    c["h"] = census.h.to_string();
    json tbl = json::array();
    bool feasible = true;
    for (const auto& [d, stat] : census.table) {
      json row;
      row["defect"] = d;
      row["n"] = stat.n;
      row["c"] = stat.c;
      tbl.push_back(std::move(row));
      feasible = feasible && stat.c <= stat.n;
    }
    c["table"] = std::move(tbl);
    c["count"] = census.count.get_str();
    c["forced"] = census.forced;
    json wit = json::array();
    for (std::uint32_t bits : census.witness) {
      DecoratedSubexpr d;
      d.bits = bits;
      wit.push_back(d.bits_string(ybar.size()));
    }
    c["witness"] = std::move(wit);
    result["census"] = std::move(c);
    checks.add("census-feasible", feasible);
  } else {
    result["census"] = nullptr;
  }
}

void run_identity_check(const Options& opt, const CoxeterSystem& sys, json& result,
                        CheckList& checks) {
  std::size_t expressions = 0, subexpressions = 0;
  json mismatches = json::array();
  for (std::size_t len = 0; len <= static_cast<std::size_t>(opt.max_len); ++len)
    for_each_expression(sys, len, [&](const Expression& ybar) {
      auto rep = verify_deodhar_identity(ybar, opt.max_subexpr);
      ++expressions;
      subexpressions += rep.subexpr_count;
      if (!rep.ok) {
        json m;
        m["word"] = ybar.to_string();
        json diffs = json::array();
        for (const auto& [z, lhs, rhs] : rep.mismatches) {
          json d;
          d["element"] = z.to_string();
          d["product-side"] = lhs.to_string();
          d["defect-side"] = rhs.to_string();
          diffs.push_back(std::move(d));
        }
        m["diffs"] = std::move(diffs);
        mismatches.push_back(std::move(m));
      }
    });
  result["expressions-checked"] = expressions;
  result["subexpressions-checked"] = subexpressions;
  result["mismatches"] = mismatches;
  checks.add("defect-identity", mismatches.empty(),
             std::to_string(expressions) + " expressions");
}

void run_lemma_hom(const Options& opt, KLTable& table, json& result, CheckList& checks) {
  const CoxeterSystem& sys = table.system();
  std::size_t pairs = 0;
  json failures = json::array();
  for (const auto& x : elements_up_to(sys, opt.max_len, opt.max_elements))
    for (int s = 0; s < sys.rank(); ++s) {
      if (x.is_right_descent(s)) continue;
      auto rep = verify_lemma_hom(x, s, table);
      ++pairs;
      if (!rep.ok) {
        json f;
        f["x"] = x.to_string();
        f["s"] = s + 1;
        f["deg0"] = rep.deg0_product.get_str();
        f["deg-1"] = rep.degm1_through.get_str();
        f["deg1"] = rep.deg1_down.get_str();
        failures.push_back(std::move(f));
      }
    }
  result["pairs-checked"] = pairs;
  result["failures"] = failures;
  checks.add("one-dimensionality", failures.empty(), std::to_string(pairs) + " pairs");
}

void run_classify(const Options& opt, KLTable& table, json& result, CheckList& checks) {
  const CoxeterSystem& sys = table.system();
  auto elems = elements_up_to(sys, opt.max_len, opt.max_elements);
  std::size_t pairs = 0, smooth = 0;
  json rough = json::array();
  for (const auto& y : elems)
    for (const auto& x : elems) {
      if (!bruhat_leq(x, y)) continue;
      ++pairs;
      auto cls = classify(x, y, table);
      if (cls.rationally_smooth) {
        ++smooth;
      } else {
        json r;
        r["x"] = x.to_string();
        r["y"] = y.to_string();
        r["h"] = table.kl_poly(x, y).h.to_string();
        rough.push_back(std::move(r));
      }
    }
  result["pairs"] = pairs;
  result["rationally-smooth"] = smooth;
  result["non-smooth"] = rough;
  if (sys.is_dihedral() || sys.is_universal())
    checks.add("all-pairs-smooth", smooth == pairs);
}

void run_bs(const Options& opt, const CoxeterSystem& sys, json& result,
            CheckList& checks) {
  Expression ybar = Expression::parse(sys, opt.word);
  BSModule mod(ybar, opt.max_bs_length);
  result["word"] = ybar.to_string();
  result["length"] = mod.length();
  result["graded-rank"] = mod.graded_rank().to_string();
  Poly image = mod.multiply_out(mod.bottom());
  result["bottom-multiplied-out"] = image.to_string();

  json tbl = json::array();
  bool degrees_ok = true;
  for_each_subexpr(
      ybar, std::nullopt,
      [&](const DecoratedSubexpr& d) {
        json row = subexpr_row(d, ybar.size());
        int deg = cll_degree(ybar, d.bits);
        row["degree"] = deg;
        degrees_ok = degrees_ok && deg == d.defect;
        tbl.push_back(std::move(row));
      },
      opt.max_bs_length);
  result["chain-table"] = std::move(tbl);

  checks.add("bottom-maps-to-one", image == mod.ring().one());
  checks.add("chain-degree-equals-defect", degrees_ok);
  LaurentPoly expect(1);
  LaurentPoly factor = LaurentPoly::v(1) + LaurentPoly::v(-1);
  for (std::size_t i = 0; i < mod.length(); ++i) expect *= factor;
  checks.add("graded-rank-binomial", mod.graded_rank() == expect);
}

// ---- output ----

void print_table(std::ostream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      print_table(os, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array()) {
    if (j.empty()) {
      os << prefix << " = (none)\n";
      return;
    }
    std::size_t i = 0;
    for (const auto& v : j) {
      if (v.is_object()) {
        std::string row;
        for (const auto& [k, u] : v.items()) {
          if (!row.empty()) row += "  ";
          row += k + "=" + (u.is_string() ? u.get<std::string>() : u.dump());
        }
        os << prefix << "[" << i << "]  " << row << '\n';
      } else {
        print_table(os, v, prefix + "[" + std::to_string(i) + "]");
      }
      ++i;
    }
  } else if (j.is_string()) {
    os << prefix << " = " << j.get<std::string>() << '\n';
  } else {
    os << prefix << " = " << j.dump() << '\n';
  }
}

bool command_uses_kl(const std::string& cmd) {
  return cmd == "klpoly" || cmd == "deodhar" || cmd == "lemma-hom" || cmd == "classify";
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();

  CLI::App app{"exact Kazhdan-Lusztig / Deodhar / Bott-Samelson calculator"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group, "group descriptor, e.g. A3, B2, At2, I2(7), U3")
        ->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    sub->add_option("--cache", opt.cache, "KL table cache file")
        ->envname("DEODHAR_LAB_CACHE");
    sub->add_flag("--verify-cache", opt.verify_cache,
                  "re-check loaded cache entries against the defining conditions");
    sub->add_option("--max-subexpr", opt.max_subexpr,
                    "cap on expression length for subexpression enumeration")
        ->capture_default_str();
    sub->add_option("--max-bs-length", opt.max_bs_length, "cap on tensor length")
        ->capture_default_str();
    sub->add_option("--max-sweep-len", opt.max_sweep_len, "cap on sweep length")
        ->capture_default_str();
    sub->add_option("--max-elements", opt.max_elements, "cap on group enumeration")
        ->capture_default_str();
    return sub;
  };

  CLI::App* klpoly = add_common(app.add_subcommand("klpoly", "one KL polynomial h, p, mu"));
  klpoly->add_option("--x", opt.x_word, "element x as a word, or \"e\"")->required();
  klpoly->add_option("--y", opt.y_word, "element y as a word, or \"e\"")->required();

  CLI::App* deodhar =
      add_common(app.add_subcommand("deodhar", "subexpression table and subset census"));
  deodhar->add_option("--word", opt.word, "expression, e.g. \"1 2 1\"")->required();
  deodhar->add_option("--x", opt.x_word, "expressed element")->required();

  CLI::App* identity = add_common(app.add_subcommand(
      "identity-check", "defect identity sweep over all expressions"));
  identity->add_option("--max-len", opt.max_len, "sweep expressions up to this length")
      ->capture_default_str();

  CLI::App* lemma = add_common(
      app.add_subcommand("lemma-hom", "one-dimensionality sweep over pairs x < xs"));
  lemma->add_option("--max-len", opt.max_len, "sweep elements up to this length")
      ->capture_default_str();

  CLI::App* classify_cmd =
      add_common(app.add_subcommand("classify", "rational smoothness census"));
  classify_cmd->add_option("--max-len", opt.max_len, "sweep elements up to this length")
      ->capture_default_str();

  CLI::App* bs = add_common(
      app.add_subcommand("bs", "Bott-Samelson module: rank, bottom image, chain table"));
  bs->add_option("--word", opt.word, "expression, e.g. \"1 2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string command = sub->get_name();

  json out;
  CheckList checks;
  int code = 0;
  try {
    if (static_cast<std::size_t>(opt.max_len) > opt.max_sweep_len)
      throw resource_limit_error("sweep length " + std::to_string(opt.max_len) +
                                 " exceeds the cap " + std::to_string(opt.max_sweep_len));

    CoxeterSystem sys = CoxeterSystem::from_descriptor(opt.group);
    out["group"] = sys.descriptor();
    out["command"] = command;
    json inputs;
    if (sub == klpoly) {
      inputs["x"] = opt.x_word;
      inputs["y"] = opt.y_word;
    } else if (sub == deodhar) {
      inputs["word"] = opt.word;
      inputs["x"] = opt.x_word;
    } else if (sub == bs) {
      inputs["word"] = opt.word;
    } else {
      inputs["max-len"] = opt.max_len;
    }
    inputs["format"] = opt.format;
    if (!opt.cache.empty()) inputs["cache"] = opt.cache;
    out["inputs"] = std::move(inputs);

    KLTable table(sys, opt.max_elements);
    bool use_cache = command_uses_kl(command) && !opt.cache.empty();
    if (use_cache && std::filesystem::exists(opt.cache))
      load_kl_cache(opt.cache, table, opt.verify_cache);

    json result;
    if (sub == klpoly)
      run_klpoly(opt, table, result, checks);
    else if (sub == deodhar)
      run_deodhar(opt, table, result, checks);
    else if (sub == identity)
      run_identity_check(opt, sys, result, checks);
    else if (sub == lemma)
      run_lemma_hom(opt, table, result, checks);
    else if (sub == classify_cmd)
      run_classify(opt, table, result, checks);
    else
      run_bs(opt, sys, result, checks);

    out["result"] = std::move(result);
    out["checks"] = checks.entries;
    if (use_cache) save_kl_cache(opt.cache, table);
    code = checks.all_ok ? 0 : 1;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const cache_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  out["elapsed_ms"] = elapsed.count();

  if (opt.format == "json")
    std::cout << out.dump(2) << '\n';
  else
    print_table(std::cout, out, "");
  return code;
}
