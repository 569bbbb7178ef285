#include "klwv/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "klwv/embedcheck.hpp"
#include "klwv/extension.hpp"
#include "klwv/freefield.hpp"
#include "klwv/lie.hpp"
#include "klwv/parse.hpp"
#include "klwv/qhreduce.hpp"
#include "klwv/qseries.hpp"
#include "klwv/suites.hpp"

namespace klwv {

namespace {

using json = nlohmann::ordered_json;

struct Flags {
  std::string format = "json";
  int m = 4;
  std::string a, b, mu, nu, j0 = "0", i = "0";
  std::string order = "20";
  int range = 50;
  std::string charge_window;
  int denom = 0;
  int N = 0;
  std::string k, lambda;
  std::string lambda1 = "0", lambda_last = "0";
  std::string module;
  std::string kind;
};

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_rows(const json& rows) {
  if (rows.empty()) return "";
  std::string out;
  bool first = true;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    out += (first ? "" : ",") + it.key();
    first = false;
  }
  out += "\n";
  for (const auto& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      out += (first ? "" : ",") + csv_cell(it.value());
      first = false;
    }
    out += "\n";
  }
  return out;
}

// Result of one command: a JSON document, its CSV rendering and the exit code.
struct Output {
  json doc;
  std::string csv;
  int code = 0;
};

Output value_output(json doc) {
  json rows = json::array({doc});
  return {doc, csv_rows(rows), 0};
}

Output report_output(const Report& r) { return {r.to_json(), r.to_csv(), r.passed() ? 0 : 1}; }

Output reports_output(const std::vector<Report>& reports) {
  json doc;
  doc["suites"] = json::array();
  std::string csv;
  std::size_t pass = 0, fail = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    doc["suites"].push_back(reports[k].to_json());
    csv += reports[k].to_csv(k == 0);
    pass += reports[k].pass_count();
    fail += reports[k].fail_count();
  }
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"total", pass + fail}};
  return {doc, csv, fail == 0 ? 0 : 1};
}

json opt_rat(const std::optional<Rat>& r) { return r ? json(r->str()) : json(nullptr); }

json argmin_json(const std::vector<std::int64_t>& v) { return json(v); }

json module_json(const GenInduced& g) {
  json j;
  j["module"] = g.str();
  j["m"] = g.m;
  j["j0"] = g.j0;
  if (g.is_typical()) {
    j["mu"] = g.a.str();
    j["nu"] = g.nu().str();
  } else {
    j["a"] = g.a.str();
    j["b"] = g.b();
  }
  return j;
}

GenInduced module_from(const Flags& f) {
  const std::int64_t j0 = parse_int(f.j0);
  if (!f.nu.empty()) {
    const std::string& mu = f.mu.empty() ? f.a : f.mu;
    if (mu.empty()) throw Error("typical module needs --mu");
    return GenInduced::typical(f.m, j0, Rat::parse(mu), Rat::parse(f.nu));
  }
  if (f.a.empty() || f.b.empty()) throw Error("atypical module needs --a and --b (or --mu and --nu)");
  return GenInduced::atypical(f.m, j0, Rat::parse(f.a), parse_int(f.b));
}

Output cmd_delta(const Flags& f) {
  json doc;
  if (f.kind == "atypical") {
    if (f.a.empty() || f.b.empty()) throw Error("delta atypical needs --a and --b");
    doc["delta"] = delta_atypical(f.m, Rat::parse(f.a), parse_int(f.b), parse_int(f.i)).str();
  } else if (f.kind == "typical") {
    if (f.mu.empty() || f.nu.empty()) throw Error("delta typical needs --mu and --nu");
    doc["delta"] = delta_typical(f.m, Rat::parse(f.mu), Rat::parse(f.nu), parse_int(f.i)).str();
  } else {
    if (f.module.empty()) throw Error("delta " + f.kind + " needs --module");
    const ModuleLabel label = parse_module_label(f.module);
    if (const auto* fock = std::get_if<FockModule>(&label)) {
      if (f.kind != "fock") throw Error("label " + f.module + " is a Fock module");
      doc["delta"] = fock_delta(*fock).str();
    } else {
      if (f.kind != "singlet") throw Error("label " + f.module + " is a singlet module");
      doc["delta"] = singlet_delta(std::get<SingletModule>(label)).str();
    }
  }
  return value_output(doc);
}

Output cmd_classify(const Flags& f) {
  const GenInduced g = module_from(f);
  const Classification c = classify(g);
  json doc = module_json(g);
  doc["local"] = c.local;
  doc["lower_bounded"] = c.lower_bounded;
  doc["class"] = to_string(c.label);
  doc["argmin"] = argmin_json(c.argmin);
  doc["delta_min"] = opt_rat(c.delta_min);
  doc["monodromy"] = opt_rat(c.monodromy);
  doc["reducible"] = c.reducible;
  doc["notes"] = c.notes;
  return value_output(doc);
}

Output cmd_enumerate(const Flags& f) {
  const int denom = f.denom > 0 ? f.denom : f.m + 2;
  const auto list = enumerate_ordinary(f.m, denom, f.range);
  json rows = json::array();
  for (const auto& e : list) {
    json row;
    row["class"] = to_string(e.label);
    row["module"] = e.module.str();
    row["j0"] = e.module.j0;
    row["a"] = e.module.a.str();
    row["singlet"] = e.module.singlet_parameter().str();
    rows.push_back(row);
  }
  json doc;
  doc["m"] = f.m;
  doc["denom_bound"] = denom;
  doc["range_bound"] = f.range;
  doc["count"] = list.size();
  doc["modules"] = rows;
  return {doc, csv_rows(rows), 0};
}

Output cmd_sugawara(const Flags& f) {
  if (f.lambda.empty() || f.k.empty()) throw Error("sugawara needs --k and --lambda");
  const WeightVec w = WeightVec::parse(f.lambda);
  if (f.N != 0 && f.N != w.N) throw Error("--N does not match the length of --lambda");
  const LieLevel level{w.N, Rat::parse(f.k)};
  json doc;
  doc["N"] = w.N;
  doc["k"] = level.k.str();
  doc["lambda"] = w.str();
  doc["delta"] = sugawara_weight(level, w).str();
  doc["minimal_reduction"] = minimal_reduction_weight(level, w).str();
  doc["weyl_dim"] = w.dominant_integral() ? json(weyl_dim(w).get_str()) : json(nullptr);
  return value_output(doc);
}

Output cmd_qhr(const Flags& f) {
  if (f.kind == "sos") return report_output(sos_certificate(f.m));
  if (f.kind == "theta") return report_output(theta_consistency(f.m));
  if (f.kind == "eq1") {
    Report r("qhreduce.eq1");
    json sols = json::array();
    for (const auto& [l1, lL] : eq1_solutions(f.m)) {
      sols.push_back({l1, lL});
      const Rat a = Rat(f.m) * (l1 - lL) / (f.m + 2);
      r.check("eq1.reverify", {{"m", std::to_string(f.m)}, {"l1", std::to_string(l1)}, {"lL", std::to_string(lL)}},
              delta_theta(f.m, l1, lL).str(), delta_atypical(f.m, a, l1 - lL + 1, 0).str());
    }
    Output o = report_output(r);
    json doc;
    doc["m"] = f.m;
    doc["solutions"] = sols;
    doc["report"] = o.doc;
    o.doc = doc;
    return o;
  }
  if (f.kind == "match") {
    if (f.a.empty() || f.b.empty()) throw Error("qhr match needs --a and --b");
    const auto res = match_reduction(f.m, Rat::parse(f.a), parse_int(f.b));
    json doc;
    doc["matched"] = res.has_value();
    if (res) {
      doc["lambda"] = res->lambda.str();
      doc["delta_theta"] = res->delta_theta.str();
      doc["delta_induced"] = res->delta_induced.str();
      doc["mu"] = res->mu.str();
    }
    Output o = value_output(doc);
    o.code = res ? 0 : 1;
    return o;
  }
  if (!f.kind.empty() && f.kind != "top") throw Error("unknown qhr mode '" + f.kind + "'");
  const std::int64_t l1 = parse_int(f.lambda1), lL = parse_int(f.lambda_last);
  WeightVec w = WeightVec::zero(f.m + 2);
  w[1] = l1;
  w[f.m + 1] = lL;
  const QhrData data = qhr_top_data(f.m, w);
  json top;
  top["lambda"] = data.lambda.str();
  top["mu"] = data.mu.str();
  top["lambda_bar"] = data.bar.str();
  top["delta"] = data.delta.str();
  top["delta_theta"] = delta_theta(f.m, l1, lL).str();
  Output o = report_output(pieri_obstruction(f.m, l1, lL));
  json doc;
  doc["top"] = top;
  doc["report"] = o.doc;
  o.doc = doc;
  return o;
}

Output cmd_embed(const Flags& f) {
  std::vector<Report> reports{ce_summand_check(f.m, f.range)};
  if (f.m % 2 == 0) reports.push_back(wdecomp_check(f.m, f.range));
  reports.push_back(fock_basis_identity(f.m));
  return reports_output(reports);
}

Output cmd_gram(const Flags& f) { return reports_output({gram_check(f.m), fock_basis_identity(f.m)}); }

HalfInt order_of(const Flags& f) {
  const HalfInt o = HalfInt::from_rat(Rat::parse(f.order));
  if (o.doubled < 0) throw Error("--order must be non-negative");
  return o;
}

Output cmd_char(const Flags& f) {
  const HalfInt order = order_of(f);
  if (f.kind == "sympf" || f.kind == "bg") {
    std::int64_t window = 0;
    if (!f.charge_window.empty()) {
      window = parse_int(f.charge_window);
    } else if (f.kind == "bg") {
      window = order.doubled;
    } else {
      while (Rat((window + 1) * (window + 2), 2) <= order.to_rat()) ++window;
    }
    return report_output(f.kind == "bg" ? verify_bg_decomposition(order, window) : verify_sympfermion(order, window));
  }
  if (!f.kind.empty() && f.kind != "module") throw Error("unknown char mode '" + f.kind + "'");
  if (f.module.empty()) throw Error("char needs --module");
  const ModuleLabel label = parse_module_label(f.module);
  const CharSeries s = std::holds_alternative<FockModule>(label) ? fock_char(std::get<FockModule>(label), order)
                                                                   : singlet_char(std::get<SingletModule>(label), order);
  json doc;
  doc["module"] = f.module;
  doc["order"] = order.str();
  doc["series"] = s.to_json();
  json rows = json::array();
  for (const auto& t : doc["series"]) rows.push_back({{"charge", t[0]}, {"q", t[1]}, {"coeff", t[2]}});
  return {doc, csv_rows(rows), 0};
}

Output cmd_report(const Flags& f) {
  SuiteOptions opts;
  opts.m = f.m;
  opts.order = order_of(f);
  opts.range = f.range;
  if (!f.charge_window.empty()) opts.charge_window = parse_int(f.charge_window);
  return reports_output(run_all_suites(opts));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"klwv: exact checks for induced W-algebra modules, free-field characters and reduction weights"};
  app.name("klwv");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto add_m = [&](CLI::App* s) { s->add_option("--m", f.m, "rank parameter m"); };

  auto* delta = app.add_subcommand("delta", "conformal weights");
  delta->add_option("kind", f.kind, "atypical | typical | singlet | fock")
      ->required()
      ->check(CLI::IsMember({"atypical", "typical", "singlet", "fock"}));
  add_m(delta);
  delta->add_option("--a", f.a);
  delta->add_option("--b", f.b);
  delta->add_option("--mu", f.mu);
  delta->add_option("--nu", f.nu);
  delta->add_option("--i", f.i, "sector index");
  delta->add_option("--module", f.module, "M:i, V:p/q or F:l=p/q,a=p/q");

  auto* cls = app.add_subcommand("classify", "locality, lower bound and class of an induced module");
  add_m(cls);
  cls->add_option("--j0", f.j0);
  cls->add_option("--a", f.a);
  cls->add_option("--b", f.b);
  cls->add_option("--mu", f.mu);
  cls->add_option("--nu", f.nu);

  auto* en = app.add_subcommand("enumerate", "ordinary modules within bounds");
  add_m(en);
  en->add_option("--range", f.range, "bound on |b| and |nu|")->default_val(10);
  en->add_option("--denom", f.denom, "denominator bound (default m+2)");

  auto* sug = app.add_subcommand("sugawara", "Sugawara and minimal-reduction weights");
  sug->add_option("--N", f.N);
  sug->add_option("--k", f.k);
  sug->add_option("--lambda", f.lambda, "l1,...,l_{N-1}");

  auto* qhr = app.add_subcommand("qhr", "reduction matching");
  qhr->add_option("kind", f.kind, "top | sos | theta | eq1 | match")
      ->check(CLI::IsMember({"top", "sos", "theta", "eq1", "match"}));
  add_m(qhr);
  qhr->add_option("--lambda1", f.lambda1);
  qhr->add_option("--lambda-last", f.lambda_last);
  qhr->add_option("--a", f.a);
  qhr->add_option("--b", f.b);

  auto* emb = app.add_subcommand("embed-check", "conformal-embedding top weights");
  add_m(emb);
  emb->add_option("--range", f.range);

  auto* gram = app.add_subcommand("gram", "h / h-bar Gram matrix");
  add_m(gram);

  auto* chr = app.add_subcommand("char", "characters and character identities");
  chr->add_option("kind", f.kind, "module | sympf | bg")->check(CLI::IsMember({"module", "sympf", "bg"}));
  chr->add_option("--module", f.module);
  chr->add_option("--order", f.order)->default_val("10");
  chr->add_option("--charge-window", f.charge_window);

  auto* rep = app.add_subcommand("report", "all module suites");
  add_m(rep);
  rep->add_option("--order", f.order);
  rep->add_option("--range", f.range);
  rep->add_option("--charge-window", f.charge_window);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "klwv: " << e.what() << "\n";
    return 2;
  }

  try {
    Output o;
    if (*delta) o = cmd_delta(f);
    else if (*cls) o = cmd_classify(f);
    else if (*en) o = cmd_enumerate(f);
    else if (*sug) o = cmd_sugawara(f);
    else if (*qhr) o = cmd_qhr(f);
    else if (*emb) o = cmd_embed(f);
    else if (*gram) o = cmd_gram(f);
    else if (*chr) o = cmd_char(f);
    else o = cmd_report(f);
    if (f.format == "csv") out << o.csv;
    else out << o.doc.dump() << "\n";
    return o.code;
  } catch (const Error& e) {
    err << "klwv: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace klwv
