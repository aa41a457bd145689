#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "apery/apery_table.hpp"
#include "apery/families.hpp"
#include "apery/ladder.hpp"
#include "apery/oracle.hpp"
#include "apery/semigroup.hpp"

namespace apery::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Value parse_value(const std::string& text, const std::string& what) {
  Value v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) {
    throw Error(Errc::Overflow, what + " '" + text + "' does not fit in a signed 64-bit integer");
  }
  if (ec != std::errc{} || ptr != last || first == last) throw UsageError(what + " '" + text + "' is not an integer");
  return v;
}

NumericalSemigroup parse_semigroup(const std::vector<std::string>& gens) {
  if (gens.empty()) throw UsageError("expected at least one generator");
  std::vector<Value> values;
  for (const auto& g : gens) values.push_back(parse_value(g, "generator"));
  return new_semigroup(values);
}

std::pair<Value, Value> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range '" + text + "' must look like lo..hi");
  const Value lo = parse_value(text.substr(0, dots), "range bound");
  const Value hi = parse_value(text.substr(dots + 2), "range bound");
  if (lo > hi) throw UsageError("range '" + text + "' is empty");
  return {lo, hi};
}

FamilyParams make_family(const std::string& name, Value param) {
  if (name == "bresinsky") return BresinskyParams::make(param);
  if (name == "arslan") return ArslanParams::make(param);
  throw UsageError("unknown family '" + name + "' (expected bresinsky or arslan)");
}

// ---------------------------------------------------------------------------
// Document builders. Text output is rendered from the same documents, so both
// formats always carry the same numbers.

Json header(const std::string& command, const NumericalSemigroup& s) {
  Json doc;
  doc["command"] = command;
  doc["generators"] = s.generators();
  doc["multiplicity"] = s.multiplicity();
  return doc;
}

Json series_json(const HilbertSeries& hs, Value count) {
  Json j;
  j["numerator"] = hs.numerator;
  j["denominator_exponent"] = hs.denominator_exponent;
  std::vector<Value> values;
  for (Value n = 0; n < count; ++n) values.push_back(hilbert_function_from_series(hs, n));
  j["values"] = values;
  return j;
}

Json decomposition_json(const ConeDecomposition& dec) {
  Json j;
  j["free_shifts"] = dec.free_shifts;
  Json torsion = Json::array();
  for (const auto& t : dec.torsion) torsion.push_back({t.shift, t.length});
  j["torsion"] = torsion;
  return j;
}

Json apery_doc(const NumericalSemigroup& s, std::optional<Value> modulus) {
  const Value a = modulus.value_or(s.multiplicity());
  const AperySet ap = apery_set(s, a);
  Json doc = header("apery", s);
  doc["modulus"] = a;
  if (!s.is_naturals()) doc["frobenius"] = s.frobenius();
  OrderTable orders(s);
  Json elems = Json::array();
  for (Value w : ap.elements) elems.push_back({{"element", w}, {"order", orders.order(w)}});
  doc["apery"] = elems;
  return doc;
}

Json table_doc(const NumericalSemigroup& s, bool block_order) {
  Json doc = header("table", s);
  if (!block_order) {
    const AperyTable t = apery_table(s);
    doc["reduction_number"] = t.reduction_number();
    doc["layout"] = "ascending";
    doc["column_keys"] = std::vector<Value>(t.column_keys().begin(), t.column_keys().end());
    doc["table"] = t.rows();
    return doc;
  }
  const auto family = identify_family(s);
  if (!family) throw Error(Errc::NotAFamilyMember, "--block-order needs a Bresinsky or Arslan semigroup");
  const FamilyTable ft = family_table_closed_form(*family);
  // The block layout is a presentation of the generic table; refuse to print
  // it if the two ever disagree.
  if (!(ft.to_apery_table() == apery_table(s))) throw std::logic_error("closed-form table differs from generic table");
  doc["reduction_number"] = static_cast<Value>(ft.rows.size()) - 1;
  doc["layout"] = "block";
  doc["family"] = family_name(*family);
  doc["parameter"] = family_parameter(*family);
  doc["column_keys"] = ft.rows.front();
  Json blocks = Json::array();
  for (const auto& b : ft.blocks) {
    blocks.push_back({{"caption", b.caption},
                      {"columns", std::vector<Value>(ft.rows.front().begin() + static_cast<std::ptrdiff_t>(b.first_column),
                                                     ft.rows.front().begin() +
                                                         static_cast<std::ptrdiff_t>(b.first_column + b.width))}});
  }
  doc["blocks"] = blocks;
  doc["table"] = ft.rows;
  return doc;
}

Json ladders_doc(const NumericalSemigroup& s) {
  const AperyTable t = apery_table(s);
  Json doc = header("ladders", s);
  doc["reduction_number"] = t.reduction_number();
  Json profiles = Json::array();
  for (const auto& prof : ladder_profiles(t)) {
    Json landings = Json::array();
    for (const auto& l : prof.landings) landings.push_back({l.start, l.end});
    profiles.push_back({{"column", prof.column_key},
                        {"values", prof.values},
                        {"landings", landings},
                        {"p", prof.p},
                        {"d", prof.d},
                        {"b", prof.b_list},
                        {"c", prof.c_list}});
  }
  doc["profiles"] = profiles;
  return doc;
}

Json cone_doc(const NumericalSemigroup& s) {
  const AperyTable t = apery_table(s);
  const ConeDecomposition dec = cone_decomposition(t);
  Json doc = header("cone", s);
  doc["reduction_number"] = t.reduction_number();
  doc["decomposition"] = decomposition_json(dec);
  doc["free"] = dec.is_free();
  doc["cohen_macaulay"] = dec.is_free();
  return doc;
}

Json hilbert_doc(const NumericalSemigroup& s) {
  const AperyTable t = apery_table(s);
  const ConeDecomposition dec = cone_decomposition(t);
  Json doc = header("hilbert", s);
  doc["reduction_number"] = t.reduction_number();
  doc["hilbert"] = series_json(hilbert_series(dec), t.reduction_number() + 5);
  doc["cohen_macaulay"] = dec.is_free();
  return doc;
}

Json family_doc(const FamilyParams& params) {
  const NumericalSemigroup s = family_semigroup(params);
  const FamilyTable ft = family_table_closed_form(params);
  const ConeDecomposition dec = cone_decomposition(ft.to_apery_table());

  Json doc = header("family", s);
  doc["family"] = family_name(params);
  doc["parameter"] = family_parameter(params);
  doc["reduction_number"] = family_reduction_number(params);
  Json blocks = Json::array();
  for (const auto& b : closed_form_blocks(params)) {
    blocks.push_back({{"caption", b.caption}, {"elements", b.elements}, {"orders", b.orders}});
  }
  doc["apery_blocks"] = blocks;
  Json census = Json::array();
  for (const auto& [k, c] : order_census_closed_form(params).counts) census.push_back({{"order", k}, {"count", c}});
  doc["census"] = census;
  doc["unique_factorizations"] = verify_uniqueness(params);
  doc["column_keys"] = ft.rows.front();
  doc["table"] = ft.rows;
  doc["decomposition"] = decomposition_json(dec);
  doc["free"] = dec.is_free();
  doc["cohen_macaulay"] = dec.is_free();
  doc["hilbert"] = series_json(hilbert_series(dec), family_reduction_number(params) + 5);
  return doc;
}

Json report_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"subject", rep.subject},
          {"free", rep.free},
          {"cohen_macaulay", rep.cohen_macaulay},
          {"checks", checks},
          {"formula_deltas", rep.formula_deltas},
          {"failed", rep.failures()}};
}

Json verify_doc(const std::vector<VerificationReport>& reports) {
  Json doc;
  doc["command"] = "verify";
  Json arr = Json::array();
  std::size_t total = 0, failed = 0;
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    total += r.checks.size();
    failed += r.failures();
  }
  doc["reports"] = arr;
  doc["total_checks"] = total;
  doc["failed"] = failed;
  return doc;
}

// ---------------------------------------------------------------------------
// Text rendering.

std::string join(const Json& arr, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + arr[i].dump();
  return out;
}

std::string poly_text(const Json& numerator) {
  std::string out;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const auto c = numerator[k].get<Value>();
    if (c == 0) continue;
    std::string term = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string coeff = (c == 1 && k != 0) ? "" : (c == -1 && k != 0) ? "-" : std::to_string(c);
    std::string piece = coeff + term;
    if (!out.empty()) {
      if (piece.front() == '-') {
        out += " - " + piece.substr(1);
        continue;
      }
      out += " + ";
    }
    out += piece;
  }
  return out.empty() ? "0" : out;
}

void print_matrix(std::ostream& out, const Json& rows, std::size_t first, std::size_t width) {
  std::size_t cell = 1;
  for (const auto& r : rows) {
    for (std::size_t i = first; i < first + width; ++i) cell = std::max(cell, r[i].dump().size());
  }
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out << "  " << std::setw(3) << n << " |";
    for (std::size_t i = first; i < first + width; ++i) out << ' ' << std::setw(static_cast<int>(cell)) << rows[n][i].dump();
    out << '\n';
  }
}

void print_generators(std::ostream& out, const Json& doc) {
  out << "semigroup <" << join(doc["generators"], ",") << ">, multiplicity " << doc["multiplicity"].dump();
  if (doc.contains("reduction_number")) out << ", reduction number " << doc["reduction_number"].dump();
  out << '\n';
}

void print_decomposition(std::ostream& out, const Json& dec) {
  out << "free shifts: " << join(dec["free_shifts"]) << '\n';
  out << "torsion (b,c):";
  if (dec["torsion"].empty()) out << " none";
  for (const auto& t : dec["torsion"]) out << " (" << t[0].dump() << "," << t[1].dump() << ")";
  out << '\n';
}

void print_hilbert(std::ostream& out, const Json& h) {
  out << "Hilbert series: (" << poly_text(h["numerator"]) << ") / (1 - x)\n";
  out << "numerator coefficients: " << join(h["numerator"]) << '\n';
  out << "H(n), n = 0.." << h["values"].size() - 1 << ": " << join(h["values"]) << '\n';
}

void render_text(std::ostream& out, const Json& doc) {
  const std::string cmd = doc["command"];
  if (cmd == "verify") {
    for (const auto& rep : doc["reports"]) {
      out << "== " << rep["subject"].get<std::string>() << '\n';
      for (const auto& c : rep["checks"]) {
        if (c["pass"].get<bool>()) {
          out << "  PASS " << c["name"].get<std::string>() << '\n';
        } else {
          out << "  FAIL " << c["name"].get<std::string>() << ": expected " << c["expected"].get<std::string>()
              << ", actual " << c["actual"].get<std::string>() << '\n';
        }
      }
      out << "  free: " << rep["free"].dump() << ", cohen-macaulay: " << rep["cohen_macaulay"].dump() << '\n';
      for (const auto& d : rep["formula_deltas"]) out << "  note: " << d.get<std::string>() << '\n';
    }
    out << doc["total_checks"].dump() << " checks, " << doc["failed"].dump() << " failed\n";
    return;
  }

  print_generators(out, doc);
  if (cmd == "apery") {
    if (doc.contains("frobenius")) out << "Frobenius number " << doc["frobenius"].dump() << '\n';
    out << "Apery set w.r.t. " << doc["modulus"].dump() << " (" << doc["apery"].size() << " elements):\n";
    for (const auto& e : doc["apery"]) out << "  " << e["element"].dump() << "  order " << e["order"].dump() << '\n';
  } else if (cmd == "table") {
    const auto& rows = doc["table"];
    if (doc["layout"] == "block") {
      for (const auto& b : doc["blocks"]) {
        const auto first = static_cast<std::size_t>(
            std::find(doc["column_keys"].begin(), doc["column_keys"].end(), b["columns"][0]) - doc["column_keys"].begin());
        out << b["caption"].get<std::string>() << ":\n";
        print_matrix(out, rows, first, b["columns"].size());
      }
    } else {
      print_matrix(out, rows, 0, rows[0].size());
    }
  } else if (cmd == "ladders") {
    for (const auto& p : doc["profiles"]) {
      out << "column " << p["column"].dump() << ": values " << join(p["values"]) << "; landings";
      for (const auto& l : p["landings"]) out << " [" << l[0].dump() << "," << l[1].dump() << "]";
      out << "; p=" << p["p"].dump() << " d=" << p["d"].dump() << " b=" << p["b"].dump() << " c=" << p["c"].dump()
          << '\n';
    }
  } else if (cmd == "cone") {
    print_decomposition(out, doc["decomposition"]);
    out << "free over the fiber cone: " << (doc["free"].get<bool>() ? "yes" : "no") << '\n';
    out << "Cohen-Macaulay tangent cone: " << (doc["cohen_macaulay"].get<bool>() ? "yes" : "no") << '\n';
  } else if (cmd == "hilbert") {
    print_hilbert(out, doc["hilbert"]);
    out << "Cohen-Macaulay tangent cone: " << (doc["cohen_macaulay"].get<bool>() ? "yes" : "no") << '\n';
  } else if (cmd == "family") {
    out << doc["family"].get<std::string>() << " family, parameter " << doc["parameter"].dump() << '\n';
    out << "closed-form Apery set blocks:\n";
    for (const auto& b : doc["apery_blocks"]) {
      out << "  " << b["caption"].get<std::string>() << ": " << join(b["elements"]) << "  (orders "
          << join(b["orders"]) << ")\n";
    }
    out << "order census:";
    for (const auto& c : doc["census"]) out << ' ' << c["order"].dump() << ':' << c["count"].dump();
    out << '\n';
    out << "unique factorizations: " << (doc["unique_factorizations"].get<bool>() ? "yes" : "no") << '\n';
    out << "Apery table (block order):\n";
    print_matrix(out, doc["table"], 0, doc["table"][0].size());
    print_decomposition(out, doc["decomposition"]);
    out << "Cohen-Macaulay tangent cone: " << (doc["cohen_macaulay"].get<bool>() ? "yes" : "no") << '\n';
    print_hilbert(out, doc["hilbert"]);
  }
}

std::vector<VerificationReport> run_verify(const std::string& family, const std::string& range,
                                           const std::vector<std::string>& gens) {
  if (!family.empty()) {
    if (!gens.empty()) throw UsageError("verify takes either --family or generators, not both");
    if (range.empty()) throw UsageError("verify --family needs --range lo..hi");
    const auto [lo, hi] = parse_range(range);
    std::vector<FamilyParams> params;
    for (Value p = lo; p <= hi; ++p) params.push_back(make_family(family, p));
    // Parameters are independent; results are collected in parameter order.
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& p : params) {
      jobs.push_back(std::async(std::launch::async, [p] { return full_verify(family_semigroup(p)); }));
    }
    std::vector<VerificationReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
  }
  if (!range.empty()) throw UsageError("--range only applies together with --family");
  if (gens.empty()) throw UsageError("verify needs --family with --range, or generators");
  return {full_verify(parse_semigroup(gens))};
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Apery sets, Apery tables and tangent cones of numerical semigroups", "aptab"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string apery_rep;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--apery-rep", apery_rep, "Apery modulus for the apery subcommand (default: multiplicity)");

  std::vector<std::string> gens;
  auto* apery = app.add_subcommand("apery", "Apery set and the order of each element");
  apery->add_option("generators", gens, "Semigroup generators")->required();
  auto* table = app.add_subcommand("table", "Apery table of the powers of the maximal ideal");
  table->add_option("generators", gens, "Semigroup generators")->required();
  bool block_order = false;
  table->add_flag("--block-order", block_order, "Lay out a Bresinsky/Arslan table block by block");
  auto* ladders = app.add_subcommand("ladders", "Landings and ladder invariants per column");
  ladders->add_option("generators", gens, "Semigroup generators")->required();
  auto* cone = app.add_subcommand("cone", "Tangent cone decomposition and Cohen-Macaulay verdict");
  cone->add_option("generators", gens, "Semigroup generators")->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and Hilbert function");
  hilbert->add_option("generators", gens, "Semigroup generators")->required();

  auto* family = app.add_subcommand("family", "Closed-form data for the Bresinsky and Arslan families");
  family->require_subcommand(1);
  std::string family_param;
  auto* bres = family->add_subcommand("bresinsky", "Gamma_h");
  bres->add_option("param", family_param, "Parameter h >= 2")->required();
  auto* ars = family->add_subcommand("arslan", "S_m");
  ars->add_option("param", family_param, "Parameter m >= 2")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check against brute force and closed forms");
  std::string verify_family, verify_range;
  verify->add_option("--family", verify_family, "bresinsky or arslan")->check(CLI::IsMember({"bresinsky", "arslan"}));
  verify->add_option("--range", verify_range, "Parameter range lo..hi");
  verify->add_option("generators", gens, "Semigroup generators");

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
    err << "aptab: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (!apery_rep.empty() && !apery->parsed()) throw UsageError("--apery-rep applies to the apery subcommand only");
    Json doc;
    int code = kOk;
    if (apery->parsed()) {
      std::optional<Value> modulus;
      if (!apery_rep.empty()) modulus = parse_value(apery_rep, "--apery-rep");
      doc = apery_doc(parse_semigroup(gens), modulus);
    } else if (table->parsed()) {
      doc = table_doc(parse_semigroup(gens), block_order);
    } else if (ladders->parsed()) {
      doc = ladders_doc(parse_semigroup(gens));
    } else if (cone->parsed()) {
      doc = cone_doc(parse_semigroup(gens));
    } else if (hilbert->parsed()) {
      doc = hilbert_doc(parse_semigroup(gens));
    } else if (family->parsed()) {
      const std::string name = bres->parsed() ? "bresinsky" : "arslan";
      doc = family_doc(make_family(name, parse_value(family_param, "family parameter")));
    } else if (verify->parsed()) {
      const auto reports = run_verify(verify_family, verify_range, gens);
      doc = verify_doc(reports);
      if (doc["failed"].get<std::size_t>() != 0) code = kVerificationFailed;
    }

    if (json) {
      out << doc.dump(2) << '\n';
    } else {
      render_text(out, doc);
    }
    return code;
  } catch (const UsageError& e) {
    err << "aptab: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "aptab: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace apery::cli
