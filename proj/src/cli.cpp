#include "help/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "help/engine.hpp"
#include "help/fixtures.hpp"
#include "help/numtheory.hpp"
#include "help/oracle.hpp"
#include "help/psl2.hpp"

namespace help::cli {

namespace {

struct Style {
  bool on = false;
  std::string wrap(const std::string& s, const char* code) const { return on ? std::string("\033[") + code + "m" + s + "\033[0m" : s; }
  std::string good(const std::string& s) const { return wrap(s, "32"); }
  std::string bad(const std::string& s) const { return wrap(s, "31"); }
  std::string warn(const std::string& s) const { return wrap(s, "33"); }
  std::string bold(const std::string& s) const { return wrap(s, "1"); }
};

struct InputOptions {
  std::string path;
  std::string fixture;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("table", in.path, "character table JSON file");
  cmd->add_option("--fixture", in.fixture, "builtin table (s5)");
}

CharacterTable load_input(const InputOptions& in) {
  if (in.path.empty() == in.fixture.empty()) throw InputError("give exactly one of a table file or --fixture");
  return in.fixture.empty() ? load_table(in.path) : load_fixture(in.fixture);
}

std::string status_text(OrderStatus s, const Style& st) {
  switch (s) {
    case OrderStatus::infeasible: return st.good("infeasible");
    case OrderStatus::trivial_only: return st.good("trivial_only");
    case OrderStatus::undecided: return st.bad("undecided");
  }
  return "?";
}

std::string tuple_text(const CharacterTable& table, const PartialAugmentationTuple& tuple) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t x = 0; x < tuple.entries.size(); ++x) {
    if (tuple.entries[x] == 0) continue;
    os << (first ? "" : ", ") << table.classes[x].id << "=" << tuple.entries[x];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string tower_text(const CharacterTable& table, const Tower& tower) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, tuple] : tower.tuples) {
    os << (first ? "" : "; ") << "[" << m << "] " << tuple_text(table, tuple);
    first = false;
  }
  return os.str();
}

void write_json(const nlohmann::ordered_json& doc, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << doc.dump(2) << "\n";
}

int cmd_verify(const InputOptions& in, const std::vector<long>& orders, bool no_brauer, const std::string& report_path,
               const std::string& format, bool audit, std::ostream& out, std::ostream& err, const Style& st) {
  const CharacterTable table = load_input(in);
  if (audit) {
    const auto a = oracle::mu_group_element_audit(table);
    if (!a.ok()) {
      for (const auto& v : a.violations) err << "audit: " << v.class_id << " " << v.character << " t=" << v.residue << ": " << v.message << "\n";
      return kInputError;
    }
    err << "audit: " << a.checked << " multiplicities checked\n";
  }
  EngineOptions options;
  options.use_brauer = !no_brauer;
  if (!orders.empty()) {
    std::set<long> filter;
    for (long n : orders) {
      if (n < 2 || table.exponent % n != 0)
        throw InputError("order " + std::to_string(n) + " does not divide the exponent " + std::to_string(table.exponent));
      filter.insert(n);
    }
    options.orders = std::move(filter);
  }
  const Report report = verify_group(table, options);
  const auto doc = report_to_json(table, report);
  if (!report_path.empty()) write_json(doc, report_path);
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << st.bold(table.name) << "  order " << table.order << ", exponent " << table.exponent << "\n";
    for (const auto& r : report.orders) {
      out << "  n=" << r.n << "  " << status_text(r.status, st);
      if (!r.towers.empty()) out << "  (" << r.towers.size() << (r.towers.size() == 1 ? " tower, " : " towers, ") << r.trivial_count << " trivial)";
      out << "\n";
      if (r.status == OrderStatus::undecided)
        for (const auto& t : r.towers)
          if (!t.is_trivial()) out << "      " << tower_text(table, t) << "\n";
    }
    for (const auto& id : unrealized_classes(table, report)) out << "  " << st.warn("element tower of " + id + " not admissible") << "\n";
    out << "verdict: " << (report.verified() ? st.good(report.verdict) : st.bad(report.verdict)) << "\n";
  }
  return report.verified() ? kOk : kUndecided;
}

int cmd_gen_psl2(long p, long f, bool brauer, const std::string& output, std::ostream& out) {
  if (p % 2 == 0) throw InputError("q must be odd; even characteristic is not supported");
  if (brauer && f != 1) throw InputError("--brauer is only available for f = 1 (prime fields)");
  CharacterTable table;
  try {
    table = generate_psl2(p, f, brauer);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto doc = serialize_table(table);
  if (output.empty())
    out << doc.dump(2) << "\n";
  else
    write_json(doc, output);
  return kOk;
}

int cmd_tuples(const InputOptions& in, long n, bool no_brauer, const std::string& format, std::ostream& out, const Style& st) {
  const CharacterTable table = load_input(in);
  if (n < 2) throw InputError("--order must be at least 2");
  EngineOptions options;
  options.use_brauer = !no_brauer;
  const auto towers = admissible_towers(table, n, options);
  const auto primes = usable_brauer_primes(table, n, options.use_brauer);
  LutharPassi lp(table);
  const auto chars = lp.characters(n, primes);

  auto mu_values = [&](const Character& psi, const Tower& tower) {
    std::vector<Rational> mu;
    for (long t = 0; t < n; ++t) mu.push_back(make_rational(lp.scaled_mu(psi, tower, t), n));
    return mu;
  };

  if (format == "json") {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& tower : towers) {
      auto j = tower_to_json(table, tower);
      nlohmann::ordered_json mu = nlohmann::ordered_json::object();
      for (const Character* psi : chars) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& v : mu_values(*psi, tower)) row.push_back(to_int64(v));
        mu[psi->name + (psi->kind == CharacterKind::brauer ? " mod " + std::to_string(psi->prime) : "")] = std::move(row);
      }
      j["mu"] = std::move(mu);
      list.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["group"] = table.name;
    doc["n"] = n;
    doc["status"] = towers.empty() ? "infeasible"
                    : std::all_of(towers.begin(), towers.end(), [](const Tower& t) { return t.is_trivial(); })
                        ? "trivial_only"
                        : "undecided";
    doc["towers"] = std::move(list);
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << st.bold(table.name) << "  units of order " << n << "\n";
  if (towers.empty()) {
    out << st.good("infeasible") << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < towers.size(); ++i) {
    const auto& tower = towers[i];
    out << "tower " << i + 1 << (tower.is_trivial() ? " (trivial)" : st.warn(" (non-trivial)")) << ": " << tower_text(table, tower) << "\n";
    for (const Character* psi : chars) {
      out << "  mu " << psi->name;
      if (psi->kind == CharacterKind::brauer) out << " mod " << psi->prime;
      out << ":";
      for (const auto& v : mu_values(*psi, tower)) out << " " << v;
      out << "\n";
    }
  }
  return kOk;
}

int cmd_validate(const InputOptions& in, bool audit, std::ostream& out, std::ostream& err, const Style& st) {
  const CharacterTable table = load_input(in);
  out << st.bold(table.name) << ": " << table.class_count() << " classes, " << table.ordinary.size()
      << " ordinary characters, orthogonality " << st.good("ok") << "\n";
  bool ok = true;
  for (const auto& block : table.brauer) {
    out << "  mod " << block.prime << ": " << block.characters.size() << " Brauer characters";
    if (!block.decomposition) {
      out << ", no decomposition matrix\n";
      continue;
    }
    const auto rep = validate_decomposition(table, block);
    out << ", decomposition " << (rep.ok() ? st.good("ok") : st.bad("FAILED")) << " (" << rep.checked << " entries)\n";
    for (const auto& f : rep.failures)
      err << "    " << f.ordinary << " at " << f.class_id << ": expected " << f.expected.to_string() << ", got "
          << f.actual.to_string() << "\n";
    ok = ok && rep.ok();
  }
  if (audit) {
    const auto a = oracle::mu_group_element_audit(table);
    out << "  audit: " << a.checked << " multiplicities, " << (a.ok() ? st.good("ok") : st.bad("FAILED")) << "\n";
    for (const auto& v : a.violations) err << "    " << v.class_id << " " << v.character << " t=" << v.residue << ": " << v.message << "\n";
    ok = ok && a.ok();
  }
  return ok ? kOk : kInputError;
}

}  // namespace

bool color_wanted() { return std::getenv("HELP_NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  const Style st{color};
  CLI::App app{"Torsion units of integral group rings: partial augmentation constraints", "helpzc"};
  app.require_subcommand(1);

  InputOptions in;
  std::vector<long> orders;
  bool no_brauer = false;
  bool audit = false;
  std::string report_path;
  std::string format = "text";

  auto* verify = app.add_subcommand("verify", "check every candidate unit order of a group");
  add_input(verify, in);
  verify->add_option("--orders", orders, "restrict the report to these orders")->delimiter(',');
  verify->add_flag("--no-brauer", no_brauer, "use ordinary characters only");
  verify->add_option("--report", report_path, "write the JSON report to this file");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--audit", audit)->group("");

  long p = 0, f = 1;
  bool brauer = false;
  std::string output;
  auto* gen = app.add_subcommand("gen-psl2", "write the character table of PSL(2,p^f), p odd");
  gen->add_option("p", p, "odd prime")->required();
  gen->add_option("f", f, "exponent, q = p^f");
  gen->add_flag("--brauer", brauer, "add the Brauer characters in characteristic p (f = 1)");
  gen->add_option("-o,--output", output, "output file (default stdout)");

  long n = 0;
  auto* tuples = app.add_subcommand("tuples", "list admissible partial augmentations for one order");
  add_input(tuples, in);
  tuples->add_option("--order", n, "unit order")->required();
  tuples->add_flag("--no-brauer", no_brauer, "use ordinary characters only");
  tuples->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* validate = app.add_subcommand("validate", "check a table and its decomposition matrices");
  add_input(validate, in);
  validate->add_flag("--audit", audit)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(in, orders, no_brauer, report_path, format, audit, out, err, st);
    if (gen->parsed()) return cmd_gen_psl2(p, f, brauer, output, out);
    if (tuples->parsed()) return cmd_tuples(in, n, no_brauer, format, out, st);
    if (validate->parsed()) return cmd_validate(in, audit, out, err, st);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace help::cli
