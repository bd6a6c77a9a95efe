#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperdec/hyperdec.hpp"

namespace hyperdec::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Report {
  Report() = default;
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  Json inputs = Json::object();
  Json result;
  std::optional<Json> classification;
  std::optional<Json> threshold;
  std::optional<Json> witnesses;
  std::vector<std::string> lines;
  int code = kOk;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    if (classification) j["classification"] = *classification;
    if (threshold) j["threshold"] = *threshold;
    if (witnesses) j["witnesses"] = *witnesses;
    return j;
  }
};

/// Raised when an ultrafilter-dependent answer is requested without --uncertified.
struct UndecidedDigit {
  std::string message;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::InvalidArgument, "empty item in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty list");
  return out;
}

Json classification_json(const HyperReal& x) {
  const Classification c = classify(x);
  return Json{{"kind", std::string(magnitude_name(c.kind))}, {"sign", c.sign}};
}

std::string sign_word(int s) { return s > 0 ? "positive" : s < 0 ? "negative" : "zero"; }

std::string power_text(const Rank& r) {
  const std::string k = r.to_string();
  return k == "H" ? "10^-H" : "10^-(" + k + ")";
}

std::string atom_form_text(const DecimalAtomForm& f) {
  std::string out = to_string(f.base_value);
  bool first = f.base_value == 0;
  if (first) out.clear();
  for (const auto& c : f.corrections) {
    const bool neg = c.coeff < 0;
    const Rational mag = abs(c.coeff);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += power_text(c.rank);
  }
  return out.empty() ? "0" : out;
}

Json digit_json(const Rank& r, const DigitAnswer& a) {
  Json j{{"rank", r.to_string()}, {"digit", std::string(1, a.symbol())}, {"certified", a.certified}};
  if (!a.is_digit()) j["cycle"] = a.cycle;
  if (r.is_infinite()) {
    j["probe_start"] = a.probe_start;
    j["period"] = a.period;
  }
  return j;
}

std::string cycle_text(const std::vector<int>& cycle) {
  std::string s;
  for (int d : cycle) s += static_cast<char>('0' + d);
  return s;
}

struct Options {
  bool json = false;
  std::string expr, expr2, text, fn, poly;
  std::string rank = "H", ranks, mode, at, probes, from, to, upper, candidates;
  long window = 0;
  long finite = 0;
  long width = 1;
  long render_finite = 3;
  bool uncertified = false;
  bool repeat9 = false;
};

Report cmd_eval(const Options& o) {
  Report r("eval");
  r.inputs["expr"] = o.expr;
  const HyperReal x = elaborate(o.expr);
  const Classification c = classify(x);
  r.classification = classification_json(x);
  Json res{{"value", x.to_string()}};
  r.lines.push_back("value: " + x.to_string());
  r.lines.push_back("class: " + std::string(magnitude_name(c.kind)) + ", " + sign_word(c.sign));
  if (c.kind != Magnitude::Infinite) {
    res["st"] = to_string(st(x));
    r.lines.push_back("st: " + to_string(st(x)));
  } else {
    res["st"] = nullptr;
    r.lines.push_back("st: none (infinite)");
  }
  if (const auto form = try_atom_form(x)) {
    res["atom_form"] = atom_form_text(*form);
    r.lines.push_back("atom form: " + atom_form_text(*form));
  } else {
    res["atom_form"] = nullptr;
    r.lines.push_back("atom form: none");
  }
  r.result = res;
  return r;
}

Report cmd_compare(const Options& o) {
  Report r("compare");
  r.inputs = {{"lhs", o.expr}, {"rhs", o.expr2}};
  const HyperReal a = elaborate(o.expr);
  const HyperReal b = elaborate(o.expr2);
  const SignReport rep = compare_report(a, b);
  const Ordering ord = rep.sign < 0 ? Ordering::Less : rep.sign > 0 ? Ordering::Greater : Ordering::Equal;
  r.result = std::string(ordering_name(ord));
  r.threshold = rep.threshold;
  r.lines.push_back(std::string(ordering_name(ord)));
  return r;
}

Report cmd_digits(const Options& o) {
  Report r("digits");
  r.inputs = {{"expr", o.expr}, {"rank", o.rank}, {"window", o.window}, {"finite", o.finite},
              {"uncertified", o.uncertified}};
  if (o.window < 0) throw Error(Errc::InvalidArgument, "--window must be >= 0");
  if (o.finite < 0) throw Error(Errc::InvalidArgument, "--finite must be >= 0");
  const HyperReal x = elaborate(o.expr);
  if (x < HyperReal()) throw Error(Errc::NonnegativityViolation, "digits are defined for non-negative values");
  const Rank center = Rank::parse(o.rank);
  r.classification = classification_json(x);

  Json finite_json = Json::array();
  if (o.finite > 0) {
    std::string line = "finite: " + to_string(floor_limited(x)) + ".";
    for (long k = 1; k <= o.finite; ++k) {
      const int d = digit_finite(x, k);
      finite_json.push_back(d);
      line += static_cast<char>('0' + d);
    }
    r.lines.push_back(line);
  }

  std::optional<DecimalAtomForm> form;
  if (center.is_infinite()) {
    form = try_atom_form(x);
    if (!form && !o.uncertified) {
      throw Error(Errc::NotInAtomForm, "no certified digits for " + x.to_string() + "; use --uncertified to probe");
    }
  }

  Json digits = Json::array();
  std::optional<unsigned long> threshold;
  for (long off = -o.window; off <= o.window; ++off) {
    const Rank k = center.shifted(off);
    if (!k.is_infinite() && k.beta() < 1) continue;
    DigitAnswer a;
    if (!k.is_infinite()) {
      a.digit = digit_finite(x, k.beta());
    } else {
      a = form ? digit_at(*form, k) : probe_digit(x, k);
      threshold = std::max(threshold.value_or(0), a.probe_start);
    }
    if (!a.is_digit() && !o.uncertified) {
      throw UndecidedDigit{"digit at rank " + k.to_string() + " depends on the ultrafilter (cycle " +
                           cycle_text(a.cycle) + "); use --uncertified to print it"};
    }
    std::string line = k.to_string() + ": " + std::string(1, a.symbol());
    if (!a.is_digit()) line += " (cycle " + cycle_text(a.cycle) + ")";
    if (!a.certified) line += " (uncertified)";
    r.lines.push_back(line);
    digits.push_back(digit_json(k, a));
  }
  r.result = Json{{"digits", digits}};
  if (o.finite > 0) r.result["finite"] = finite_json;
  if (threshold) r.threshold = *threshold;
  return r;
}

Report cmd_render(const Options& o) {
  Report r("render");
  r.inputs = {{"expr", o.expr}, {"finite", o.render_finite}, {"ranks", o.ranks}, {"width", o.width},
              {"repeat9", o.repeat9}};
  if (o.render_finite < 1) throw Error(Errc::InvalidArgument, "--finite must be >= 1");
  if (o.width < 0) throw Error(Errc::InvalidArgument, "--width must be >= 0");
  const HyperReal x = elaborate(o.expr);
  RenderSpec spec;
  spec.finite_window = static_cast<unsigned long>(o.render_finite);
  spec.repeat9 = o.repeat9;
  if (!o.ranks.empty()) {
    for (const auto& item : split_list(o.ranks)) {
      spec.rank_windows.push_back({Rank::parse(item), static_cast<unsigned long>(o.width)});
    }
  }
  const std::string text = render(x, spec);
  r.result = text;
  r.classification = classification_json(x);
  r.lines.push_back(text);
  if (x.as_rational()) r.lines.push_back("note: exact rational");
  return r;
}

Report cmd_symbol(const Options& o) {
  Report r("symbol");
  r.inputs = {{"symbol", o.text}, {"mode", o.mode}};
  const DecimalSymbol sym = parse_symbol(o.text);
  std::string text;
  if (o.mode == "unital") {
    text = to_string(unital_value(sym));
  } else if (o.mode == "natural") {
    const HyperReal v = natural_string_value(sym);
    text = v.to_string();
    r.classification = classification_json(v);
  } else {
    const HyperReal v = gap_from_unital(sym);
    text = v.to_string();
    r.classification = classification_json(v);
  }
  r.result = text;
  r.lines.push_back(text);
  return r;
}

Report cmd_derive(const Options& o) {
  Report r("derive");
  r.inputs = {{"fn", o.fn}, {"at", o.at}, {"probes", o.probes}};
  const RationalFunction f = elaborate_function(o.fn);
  const Rational q = elaborate_rational(o.at);
  ProbeSet probes = ProbeSet::defaults();
  if (!o.probes.empty()) {
    std::vector<HyperReal> ps;
    for (const auto& item : split_list(o.probes)) ps.push_back(elaborate(item));
    probes = ProbeSet(std::move(ps));
  }
  const Rational d = derivative(f, q, probes);
  Json used = Json::array();
  for (const auto& p : probes.probes()) used.push_back(p.to_string());
  r.result = to_string(d);
  r.witnesses = used;
  r.lines.push_back(to_string(d));
  return r;
}

Report cmd_integrate(const Options& o) {
  Report r("integrate");
  r.inputs = {{"poly", o.poly}, {"from", o.from}, {"to", o.to}};
  const Rational v = integral(elaborate_polynomial(o.poly), elaborate_rational(o.from), elaborate_rational(o.to));
  r.result = to_string(v);
  r.lines.push_back(to_string(v));
  return r;
}

Report cmd_limit(const Options& o) {
  Report r("limit");
  r.inputs["expr"] = o.expr;
  const HyperReal x = elaborate(o.expr);
  r.classification = classification_json(x);
  const Rational v = limit_of(x);
  r.result = to_string(v);
  r.lines.push_back(to_string(v));
  return r;
}

Report cmd_sum(const Options& o) {
  Report r("sum");
  r.inputs = {{"poly", o.poly}, {"upper", o.upper}};
  const HyperReal v = hyperfinite_sum(elaborate_polynomial(o.poly, "i"), Rank::parse(o.upper));
  r.result = v.to_string();
  r.classification = classification_json(v);
  r.lines.push_back(v.to_string());
  return r;
}

Report cmd_evt(const Options& o) {
  Report r("evt");
  r.inputs = {{"poly", o.poly}, {"candidates", o.candidates}};
  const Polynomial f = elaborate_polynomial(o.poly);
  std::vector<Rational> cands;
  if (!o.candidates.empty()) {
    for (const auto& item : split_list(o.candidates)) cands.push_back(elaborate_rational(item));
  }
  const EvtResult e = evt_demo(f, cands);
  r.result = Json{{"argmax", to_string(e.argmax)}, {"max", to_string(e.max)}};
  Json parts = Json::array();
  for (const auto& [n, best] : e.partition_maxima) parts.push_back(Json{{"n", n}, {"max", to_string(best)}});
  r.witnesses = parts;
  r.lines.push_back("argmax: " + to_string(e.argmax));
  r.lines.push_back("max: " + to_string(e.max));
  for (const auto& [n, best] : e.partition_maxima) {
    r.lines.push_back("partition n=" + std::to_string(n) + ": " + to_string(best));
  }
  return r;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::InvalidArgument:
    case Errc::InvalidTerm:
      return kUsage;
    default:
      return kDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperreal arithmetic over sequence classes"};
  app.name("hyperdec");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON document instead of text");

  auto* eval = app.add_subcommand("eval", "Classify an expression, with its standard part and atom form");
  eval->add_option("expr", o.expr)->required();

  auto* cmp = app.add_subcommand("compare", "Order two expressions");
  cmp->add_option("lhs", o.expr)->required();
  cmp->add_option("rhs", o.expr2)->required();

  auto* dig = app.add_subcommand("digits", "Decimal digits at a rank");
  dig->add_option("expr", o.expr)->required();
  dig->add_option("--rank", o.rank, "H, H+3, 2H-1 or a positive integer")->required();
  dig->add_option("--window", o.window, "Also print ranks within this distance");
  dig->add_option("--finite", o.finite, "Print this many leading digits");
  dig->add_flag("--uncertified", o.uncertified, "Allow probed or ultrafilter-dependent answers");

  auto* ren = app.add_subcommand("render", "Semicolon decimal rendering");
  ren->add_option("expr", o.expr)->required();
  ren->add_option("--finite", o.render_finite, "Leading digits")->required();
  ren->add_option("--ranks", o.ranks, "Comma-separated infinite ranks");
  ren->add_option("--width", o.width, "Digits on each side of a rank");
  ren->add_flag("--repeat9", o.repeat9, "Write terminating values with trailing 9s");

  auto* sym = app.add_subcommand("symbol", "Value of a repeating-decimal symbol");
  sym->add_option("text", o.text)->required();
  sym->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"unital", "natural", "gap"}));

  auto* der = app.add_subcommand("derive", "Derivative of a rational function of x at a rational point");
  der->add_option("fn", o.fn)->required();
  der->add_option("--at", o.at)->required();
  der->add_option("--probes", o.probes, "Comma-separated nonzero infinitesimals");

  auto* itg = app.add_subcommand("integrate", "Definite integral of a polynomial in x");
  itg->add_option("poly", o.poly)->required();
  itg->add_option("--from", o.from)->required();
  itg->add_option("--to", o.to)->required();

  auto* lim = app.add_subcommand("limit", "Limit of the sequence given by an expression in H");
  lim->add_option("expr", o.expr)->required();

  auto* sum = app.add_subcommand("sum", "Sum of a polynomial in i for i = 0..RANK");
  sum->add_option("poly", o.poly)->required();
  sum->add_option("--upper", o.upper)->required();

  auto* evt = app.add_subcommand("evt", "Maximum of a polynomial in x on [0, 1]");
  evt->add_option("poly", o.poly)->required();
  evt->add_option("--candidates", o.candidates, "Comma-separated points of [0, 1]");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Report r;
    if (eval->parsed()) r = cmd_eval(o);
    else if (cmp->parsed()) r = cmd_compare(o);
    else if (dig->parsed()) r = cmd_digits(o);
    else if (ren->parsed()) r = cmd_render(o);
    else if (sym->parsed()) r = cmd_symbol(o);
    else if (der->parsed()) r = cmd_derive(o);
    else if (itg->parsed()) r = cmd_integrate(o);
    else if (lim->parsed()) r = cmd_limit(o);
    else if (sum->parsed()) r = cmd_sum(o);
    else r = cmd_evt(o);

    if (o.json) {
      out << r.to_json().dump(2) << "\n";
    } else {
      for (const auto& line : r.lines) out << line << "\n";
    }
    return r.code;
  } catch (const UndecidedDigit& u) {
    err << "error: " << u.message << "\n";
    return kUltrafilterDependent;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace hyperdec::cli
