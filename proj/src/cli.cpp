#include "k3gon/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3gon/errors.hpp"
#include "k3gon/verifier.hpp"

namespace k3gon::cli {

namespace {

using nlohmann::json;

// Integers go through decimal strings in JSON and CSV so consumers need not
// assume any particular integer width.
std::string dec(i64 v) { return std::to_string(v); }

std::string render_classes(const std::vector<DivClass>& cs) {
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ";";
    out += "(" + dec(cs[i].m) + " " + dec(cs[i].n) + ")";
  }
  return out;
}

json classes_to_json(const std::vector<DivClass>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back({{"m", dec(c.m)}, {"n", dec(c.n)}});
  return arr;
}

json flags_to_json(const HypothesisReport& rep) {
  json obj = json::object();
  for (const auto& f : rep.flags) obj[f.name] = f.ok;
  return obj;
}

// Inclusive integer range parsed from "A..B" or a single "A".
struct Range {
  i64 lo = 0;
  i64 hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoll(text);
    } else {
      r.lo = std::stoll(text.substr(0, pos));
      r.hi = std::stoll(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range: " + text);
  }
  if (r.lo > r.hi) throw std::invalid_argument("descending range: " + text);
  return r;
}

// Output goes through a temp file and an atomic rename so a failing run
// never leaves partial output behind.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::string tmp = path + ".tmp";
  try {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + tmp);
    f << text;
    f.flush();
    if (!f) throw std::invalid_argument("write failed for " + tmp);
    f.close();
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

struct ScanRow {
  i64 d, g, r;
  i64 rho;
  i64 exp_gon;
  HypothesisReport thm3;
  std::optional<i64> alpha;
  std::vector<DivClass> minimizers;
  std::optional<bool> h1;  // r = 3 only
  Theorem1Report thm1;
};

ScanRow compute_row(const Params& p, bool strict_a) {
  ScanRow row{p.d, p.g, p.r, brill_noether_number(p), expected_gonality(p),
              theorem3_applicable(p), std::nullopt, {}, std::nullopt,
              theorem1_applicable(p.d, p.g)};
  try {
    AlphaReport rep = compute_alpha(p, strict_a, /*require_applicable=*/false);
    row.alpha = rep.alpha;
    row.minimizers = rep.minimizers;
  } catch (const std::domain_error&) {
    // termination precondition failed; alpha stays absent
  }
  if (p.r == 3) row.h1 = h1_normal_vanishes(p.d, p.g);
  return row;
}

const char* kCsvHeader = "d,g,r,rho,expected_gonality,thm3_ok,alpha,minimizers,h1_vanishes,thm1_ok";

std::string row_to_csv(const ScanRow& row) {
  std::string s;
  s += dec(row.d) + "," + dec(row.g) + "," + dec(row.r) + ",";
  s += dec(row.rho) + "," + dec(row.exp_gon) + ",";
  s += row.thm3.all_ok() ? "true" : "false";
  s += ",";
  if (row.alpha) s += dec(*row.alpha);
  s += ",";
  s += render_classes(row.minimizers);
  s += ",";
  if (row.h1) s += *row.h1 ? "true" : "false";
  s += ",";
  s += row.thm1.applicable() ? "true" : "false";
  return s;
}

json row_to_json(const ScanRow& row) {
  json j;
  j["d"] = dec(row.d);
  j["g"] = dec(row.g);
  j["r"] = dec(row.r);
  j["rho"] = dec(row.rho);
  j["expected_gonality"] = dec(row.exp_gon);
  j["thm3_flags"] = flags_to_json(row.thm3);
  j["thm3_ok"] = row.thm3.all_ok();
  j["alpha"] = row.alpha ? json(dec(*row.alpha)) : json(nullptr);
  j["minimizers"] = row.alpha ? classes_to_json(row.minimizers) : json(nullptr);
  j["h1_vanishes"] = row.h1 ? json(*row.h1) : json(nullptr);
  j["thm1_ok"] = row.thm1.applicable();
  if (row.thm1.applicable()) {
    json pairs = json::array();
    for (const auto& pr : row.thm1.pairs)
      pairs.push_back({{"d", dec(pr.d)},
                       {"g", dec(pr.g)},
                       {"expected_gonality", dec(pr.expected_gonality)}});
    j["derived_pairs"] = pairs;
  } else {
    j["derived_pairs"] = nullptr;
  }
  return j;
}

std::string row_to_table(const ScanRow& row) {
  std::ostringstream os;
  os << "d=" << row.d << " g=" << row.g << " r=" << row.r << "\n";
  os << "  rho                " << row.rho << "\n";
  os << "  expected_gonality  " << row.exp_gon << "\n";
  for (const auto& f : row.thm3.flags)
    os << "  thm3." << f.name << (f.ok ? "  true" : "  false") << "\n";
  os << "  thm3_ok            " << (row.thm3.all_ok() ? "true" : "false") << "\n";
  os << "  alpha              " << (row.alpha ? dec(*row.alpha) : "-") << "\n";
  os << "  minimizers         "
     << (row.alpha ? render_classes(row.minimizers) : "-") << "\n";
  if (row.h1) os << "  h1_vanishes        " << (*row.h1 ? "true" : "false") << "\n";
  os << "  thm1_ok            " << (row.thm1.applicable() ? "true" : "false") << "\n";
  if (row.thm1.applicable()) {
    os << "  derived_pairs      ";
    for (size_t i = 0; i < row.thm1.pairs.size(); ++i) {
      const auto& pr = row.thm1.pairs[i];
      os << (i ? ";" : "") << "(" << pr.d << " " << pr.g << " -> "
         << pr.expected_gonality << ")";
    }
    os << "\n";
  }
  return os.str();
}

int cmd_check(i64 d, i64 g, i64 r, const std::string& format,
              const std::string& out_path, bool strict_a, std::ostream& out) {
  Params p(d, g, r);
  ScanRow row = compute_row(p, strict_a);
  // Per-report extra: alpha only when the theorem guarantees it, plus the
  // very-ampleness verdict at k = d-2r-1.
  if (!row.thm3.all_ok()) {
    row.alpha.reset();
    row.minimizers.clear();
  }
  i64 k = d - 2 * r - 1;
  std::string va_verdict;
  std::optional<DivClass> va_witness;
  try {
    VeryAmpleResult res = check_very_ample_order(p, k);
    va_verdict = res.no_violator_found() ? "NoViolatorFound" : "ViolatorFound";
    va_witness = res.violator;
  } catch (const UncertifiedLattice&) {
    va_verdict = "unavailable";
  } catch (const std::domain_error&) {
    va_verdict = "unavailable";
  }

  std::string text;
  if (format == "json") {
    json j = row_to_json(row);
    j["very_ample_k"] = dec(k);
    j["very_ample"] = va_verdict;
    if (va_witness)
      j["very_ample_witness"] = {{"m", dec(va_witness->m)}, {"n", dec(va_witness->n)}};
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << row_to_table(row);
    os << "  very_ample[k=" << k << "]  " << va_verdict;
    if (va_witness) os << " " << render_classes({*va_witness});
    os << "\n";
    text = os.str();
  }
  emit(text, out_path, out);
  return 0;
}

int cmd_scan(const Range& dr, const Range& gr, const Range& rr, bool thm1_only,
             const std::string& format, const std::string& out_path, bool strict_a,
             std::ostream& out) {
  std::vector<ScanRow> rows;
  for (i64 d = dr.lo; d <= dr.hi; ++d)
    for (i64 g = gr.lo; g <= gr.hi; ++g)
      for (i64 r = rr.lo; r <= rr.hi; ++r) {
        ScanRow row = compute_row(Params(d, g, r), strict_a);
        if (thm1_only && !row.thm1.applicable()) continue;
        rows.push_back(std::move(row));
      }

  std::string text;
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(row_to_json(row));
    text = arr.dump() + "\n";
  } else if (format == "csv") {
    text = std::string(kCsvHeader) + "\n";
    for (const auto& row : rows) text += row_to_csv(row) + "\n";
  } else {
    for (const auto& row : rows) text += row_to_table(row);
  }
  emit(text, out_path, out);
  return 0;
}

int cmd_bn_divisors(i64 g, const std::string& format, const std::string& out_path,
                    std::ostream& out) {
  auto sols = bn_divisor_solutions(g);
  std::string text;
  if (format == "json") {
    json arr = json::array();
    for (const auto& s : sols) {
      i64 rho = brill_noether_number(Params(s.d, g, s.r));
      arr.push_back({{"r", dec(s.r)}, {"d", dec(s.d)}, {"rho", dec(rho)}});
    }
    text = arr.dump() + "\n";
  } else {
    for (const auto& s : sols) {
      i64 rho = brill_noether_number(Params(s.d, g, s.r));
      text += "(" + dec(s.r) + "," + dec(s.d) + ") rho=" + dec(rho) + "\n";
    }
  }
  emit(text, out_path, out);
  return 0;
}

int cmd_qform(i64 d, i64 g, i64 r, i64 target, i64 bound, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  Params p(d, g, r);
  BinaryQuadForm f = BinaryQuadForm::from_params(p);
  ReprResult res = represents(f, target, bound);
  i64 disc = f.discriminant();
  bool square = is_perfect_square(disc);

  std::string verdict;
  switch (res.verdict) {
    case ReprResult::Verdict::Yes:
      verdict = "Yes(" + dec(res.witness->m) + "," + dec(res.witness->n) + ")";
      break;
    case ReprResult::Verdict::NoParity:
      verdict = "No(parity)";
      break;
    case ReprResult::Verdict::NoSquareTest:
      verdict = "No(square-test)";
      break;
    case ReprResult::Verdict::Unknown:
      verdict = "Unknown(" + dec(res.bound) + ")";
      break;
  }

  std::string text;
  if (format == "json") {
    json j;
    j["verdict"] = verdict;
    j["discriminant"] = dec(disc);
    j["discriminant_square"] = square;
    if (res.witness)
      j["witness"] = {{"m", dec(res.witness->m)}, {"n", dec(res.witness->n)}};
    text = j.dump() + "\n";
  } else {
    text = verdict + ", D=" + dec(disc) + ", square=" + (square ? "true" : "false") + "\n";
  }
  emit(text, out_path, out);
  return 0;
}

int cmd_alpha(i64 d, i64 g, i64 r, bool strict_a, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  Params p(d, g, r);
  AlphaReport rep = compute_alpha(p, strict_a, /*require_applicable=*/false);
  std::string text;
  if (format == "json") {
    json j;
    j["alpha"] = rep.alpha ? json(dec(*rep.alpha)) : json(nullptr);
    j["minimizers"] = classes_to_json(rep.minimizers);
    j["enumerated"] = classes_to_json(rep.enumerated);
    j["n_min"] = dec(rep.n_min);
    j["n_max"] = dec(rep.n_max);
    j["guaranteed"] = rep.guaranteed;
    j["hypotheses"] = flags_to_json(rep.hypotheses);
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "alpha       " << (rep.alpha ? dec(*rep.alpha) : "-") << "\n";
    os << "minimizers  " << render_classes(rep.minimizers) << "\n";
    os << "enumerated  " << render_classes(rep.enumerated) << "\n";
    os << "n_range     [" << rep.n_min << "," << rep.n_max << "]\n";
    os << "guaranteed  " << (rep.guaranteed ? "true" : "false") << "\n";
    text = os.str();
  }
  emit(text, out_path, out);
  return 0;
}

int cmd_h1(i64 d, i64 g, const std::string& out_path, std::ostream& out) {
  if (d < 1 || g < 0) throw std::invalid_argument("h1: requires d >= 1, g >= 0");
  emit(std::string(h1_normal_vanishes(d, g) ? "true" : "false") + "\n", out_path, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice arithmetic and gonality verification for space curves"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  bool strict_a = false;
  i64 bound = 1000;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", out_path, "Output path (default stdout)");
  app.add_flag("--strict-a", strict_a, "Also require (C-D)^2 > 0 in the A constraints");
  app.add_option("--bound", bound, "Search bound for representability queries");

  i64 d = 0, g = 0, r = 3, target = -1, k_genus = 0;
  std::string d_range, g_range, r_range = "3";
  bool thm1_only = false;

  auto* check = app.add_subcommand("check", "Full report for one (d, g, r)");
  check->fallthrough();
  check->add_option("d", d)->required();
  check->add_option("g", g)->required();
  check->add_option("r", r)->required();

  auto* scan = app.add_subcommand("scan", "Sweep a (d, g, r) box");
  scan->fallthrough();
  scan->add_option("--d", d_range, "Degree range A..B")->required();
  scan->add_option("--g", g_range, "Genus range A..B")->required();
  scan->add_option("--r", r_range, "Ambient dimension or range");
  scan->add_flag("--filter-thm1", thm1_only, "Keep only rows where the main theorem applies");

  auto* bn = app.add_subcommand("bn-divisors", "Solutions of rho(g, r, d) = -1 with r+1 <= d <= g-1");
  bn->fallthrough();
  bn->add_option("g", k_genus)->required();

  auto* qf = app.add_subcommand("qform", "Representability of the form (r-1)m^2 + dmn + (g-1)n^2");
  qf->fallthrough();
  qf->add_option("d", d)->required();
  qf->add_option("g", g)->required();
  qf->add_option("r", r)->required();
  qf->add_option("--target", target, "Target value (default -1)");

  auto* al = app.add_subcommand("alpha", "Enumerate A and minimize D.C - D^2");
  al->fallthrough();
  al->add_option("d", d)->required();
  al->add_option("g", g)->required();
  al->add_option("r", r)->required();

  auto* h1 = app.add_subcommand("h1", "Normal-bundle H^1 vanishing test (r = 3)");
  h1->fallthrough();
  h1->add_option("d", d)->required();
  h1->add_option("g", g)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(d, g, r, format, out_path, strict_a, out);
    if (scan->parsed())
      return cmd_scan(parse_range(d_range), parse_range(g_range), parse_range(r_range),
                      thm1_only, format, out_path, strict_a, out);
    if (bn->parsed()) return cmd_bn_divisors(k_genus, format, out_path, out);
    if (qf->parsed()) return cmd_qform(d, g, r, target, bound, format, out_path, out);
    if (al->parsed()) return cmd_alpha(d, g, r, strict_a, format, out_path, out);
    if (h1->parsed()) return cmd_h1(d, g, out_path, out);
  } catch (const InternalInvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace k3gon::cli
