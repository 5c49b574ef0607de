#include "gfano/cli.hpp"

#include "gfano/errors.hpp"
#include "gfano/hauptmodul.hpp"
#include "gfano/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gfano::cli {

namespace {

std::string text_line(const IdentityReport& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << ' ' << r.identity << ' ' << r.family << " g=" << r.hauptmodul
    << " s=" << to_string(r.s) << " c=" << to_string(r.c) << " order=" << r.order;
  if (r.reduced_to) s << " via=" << *r.reduced_to;
  if (r.first_mismatch) {
    s << " first_mismatch=q^" << r.first_mismatch->index << " lhs=" << to_string(r.first_mismatch->left)
      << " rhs=" << to_string(r.first_mismatch->right);
  }
  return s.str();
}

void emit_reports(const std::vector<IdentityReport>& reports, const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  for (const auto& r : reports) {
    const std::string line = config.json ? report_to_json(r).dump() : text_line(r);
    out << line << '\n';
    if (!r.pass) err << line << '\n';
  }
}

int exit_code(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<IdentityReport> reports;
  if (config.family == "ALL") {
    if (config.s || config.c) throw ConfigError("--s/--c overrides need a single --family");
    reports = verify_all(config.order);
  } else if (config.family == "KV") {
    reports.push_back(verify_kachru_vafa(config.order));
  } else if (config.family == "DELTA") {
    reports.push_back(verify_delta(config.order));
  } else {
    const auto& d = descriptor(parse_family(config.family));
    const Rational s = config.s.value_or(Rational(d.default_shift));
    Rational c = config.c.value_or(Rational(d.default_constant));
    if (config.s && !config.c && !d.table_shift) c = d.constant_for_shift(s);
    reports.push_back(verify_identity(d.key, s, c, config.order));
  }
  emit_reports(reports, config, out, err);
  return exit_code(reports);
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.sweep_first > config.sweep_last) throw ConfigError("empty --sweep-range");
  const FamilyKey key = parse_family(config.family);
  if (descriptor(key).table_shift || descriptor(key).reduces_to) {
    throw ConfigError("sweep needs a family with a free shift (Y28 or Y30)");
  }
  const auto reports = sweep_free_shift(key, config.sweep_first, config.sweep_last, config.order);
  emit_reports(reports, config, out, err);
  return exit_code(reports);
}

Json series_payload(const RunConfig& config) {
  if (config.family == "ALL") throw ConfigError("series needs a single --family");
  const auto& d = descriptor(parse_family(config.family));
  const int k = config.order;
  Json j{{"schema", kReportSchema}, {"family", std::string(to_string(d.key))}, {"kind", config.kind}};
  if (config.kind == "iseries") {
    TruncatedSeries s = iseries(d.key, k);
    if (config.s) s = regular_shift(s, *config.s - d.series_shift.value_or(0));
    j["series"] = series_to_json(s);
  } else if (config.kind == "gseries") {
    j["series"] = series_to_json(gseries(d.key, k));
  } else if (config.kind == "normalized") {
    j["series"] = series_to_json(normalize(iseries(d.key, k)));
  } else if (config.kind == "d3") {
    if (!d.d3_key) throw ConfigError("family " + config.family + " has no D3 operator");
    j["operator"] = operator_to_json(catalog_operator(*d.d3_key));
    j["operator_key"] = std::string(*d.d3_key);
    j["series"] = series_to_json(holomorphic_solution(catalog_operator(*d.d3_key), k));
  } else if (config.kind == "hauptmodul" || config.kind == "mirror-map") {
    const Rational c = config.c.value_or(Rational(d.default_constant));
    const QExpansion h = hauptmodul({std::string(d.hauptmodul), c}, k);
    if (config.kind == "hauptmodul") {
      j["series"] = qexpansion_to_json(h, d.hauptmodul);
    } else {
      j["series"] = series_to_json(mirror_map(h));
    }
  } else {
    throw ConfigError("unknown --kind " + config.kind);
  }
  return j;
}

int run_series(const RunConfig& config, std::ostream& out) {
  const Json j = series_payload(config);
  if (config.json) {
    out << j.dump() << '\n';
    return 0;
  }
  const Json& s = j["series"];
  out << j["family"].get<std::string>() << ' ' << config.kind;
  if (s.contains("offset")) out << " offset=" << s["offset"].get<std::string>();
  out << " order=" << s["order"].get<int>() << '\n';
  for (const auto& c : s["coeffs"]) out << c.get<std::string>() << '\n';
  return 0;
}

int run_tables(const RunConfig& config, std::ostream& out) {
  const auto fm = frobenius_mukai_check();
  if (config.json) {
    Json j{{"schema", kReportSchema}};
    for (const auto& [name, table] :
         {std::pair{"m23", &m23_shapes()}, {"m24_extra", &m24_extra_shapes()}, {"s24_extra", &s24_extra_shapes()}}) {
      Json arr = Json::array();
      for (const auto& e : *table) arr.push_back(shape_entry_to_json(e));
      j[name] = arr;
    }
    Json corr = Json::array();
    for (const auto& r : correspondence_report()) corr.push_back(correspondence_to_json(r));
    j["correspondence"] = corr;
    Json iotas = Json::array();
    for (const auto& c : iota_table_check()) {
      iotas.push_back({{"N", c.n},
                       {"printed", to_string(c.printed) + (c.starred ? "*" : "")},
                       {"divided", to_string(c.divided)},
                       {"undivided", to_string(c.undivided)},
                       {"matches", c.matches()}});
    }
    j["iota"] = iotas;
    j["frobenius_mukai"] = frobenius_mukai_to_json(fm);
    out << j.dump() << '\n';
    return 0;
  }
  auto print_shapes = [&out](const char* title, const std::vector<ShapeTableEntry>& table) {
    out << title << '\n';
    out << "  " << std::left << std::setw(20) << "shape" << std::setw(7) << "n" << std::setw(7) << "N"
        << std::setw(5) << "w" << '\n';
    for (const auto& e : table) {
      out << "  " << std::setw(20) << e.shape.to_string() << std::setw(7) << e.shape.order() << std::setw(7)
          << e.shape.level() << std::setw(5) << to_string(e.shape.weight()) << '\n';
    }
  };
  print_shapes("M23 Frame shapes", m23_shapes());
  print_shapes("M24 extra Frame shapes", m24_extra_shapes());
  print_shapes("S24 extra integer-weight Frame shapes", s24_extra_shapes());
  out << "Modularity table\n";
  out << "  " << std::setw(5) << "N" << std::setw(7) << "eps" << std::setw(7) << "iota" << std::setw(7) << "s"
      << std::setw(7) << "c" << std::setw(6) << "g" << std::setw(5) << "rho" << std::setw(8) << "family"
      << "rational\n";
  for (const auto& r : correspondence_report()) {
    const std::string s = r.row.s ? std::to_string(*r.row.s) : "*";
    const std::string c = r.row.c ? std::to_string(*r.row.c) : "s+" + std::to_string(r.row.c_minus_s);
    out << "  " << std::setw(5) << r.row.n << std::setw(7) << to_string(r.epsilon) << std::setw(7)
        << (to_string(r.row.printed_iota) + (r.row.iota_starred ? "*" : "")) << std::setw(7) << s << std::setw(7)
        << c << std::setw(6) << r.row.g << std::setw(5) << r.row.rho << std::setw(8)
        << (r.row.family ? std::string(to_string(*r.row.family)) : "-") << (r.rational_type ? "yes" : "no")
        << '\n';
  }
  out << "iota: printed vs (sum phi*eps)/N\n";
  for (const auto& c : iota_table_check()) {
    out << "  N=" << c.n << " printed=" << to_string(c.printed) << (c.starred ? "*" : "")
        << " computed=" << to_string(c.divided) << (c.matches() ? "" : "  <- differs") << '\n';
  }
  out << "Frobenius-Mukai (a1 = eps(n), sum a = iota(n)) on M23: " << (fm.holds() ? "holds" : "FAILS") << '\n';
  for (const auto& e : fm.flagged) {
    out << "  flagged " << e.shape.to_string() << ": sum a = " << e.cycle_count << ", printed iota("
        << e.order << ") = " << to_string(e.iota) << "*\n";
  }
  return 0;
}

int run_families(const RunConfig& config, std::ostream& out) {
  if (config.json) {
    Json arr = Json::array();
    for (const auto& d : families()) arr.push_back(descriptor_to_json(d));
    out << Json{{"schema", kReportSchema}, {"families", arr}}.dump() << '\n';
    return 0;
  }
  for (const auto& d : families()) out << descriptor_to_json(d).dump() << '\n';
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.order < 1) {
    err << "error: --order must be at least 1\n";
    return 2;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out_path.empty()) {
    file.open(config.out_path);
    if (!file) {
      err << "error: cannot open " << config.out_path << '\n';
      return 2;
    }
    sink = &file;
  }
  try {
    switch (config.command) {
      case Command::Verify:
        return run_verify(config, *sink, err);
      case Command::Sweep:
        return run_sweep(config, *sink, err);
      case Command::Series:
        return run_series(config, *sink);
      case Command::Tables:
        return run_tables(config, *sink);
      case Command::Families:
        return run_families(config, *sink);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownFamily& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FreeShift& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series checks for G-Fano threefold quantum periods"};
  app.require_subcommand(1);
  RunConfig config;
  std::string s_text, c_text, range_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--order", config.order, "truncation order (default 60)");
    sub->add_flag("--json", config.json, "emit JSON");
    sub->add_option("--out", config.out_path, "write output to a file");
  };
  auto* verify = app.add_subcommand("verify", "check the modular identities");
  verify->add_option("--family", config.family, "family key, KV, DELTA or ALL");
  verify->add_option("--s", s_text, "shift override");
  verify->add_option("--c", c_text, "Hauptmodul constant override");
  add_common(verify);

  auto* series = app.add_subcommand("series", "print a series");
  series->add_option("--family", config.family, "family key")->required();
  series->add_option("--kind", config.kind, "iseries|gseries|normalized|d3|hauptmodul|mirror-map");
  series->add_option("--s", s_text, "shift for iseries");
  series->add_option("--c", c_text, "constant for hauptmodul/mirror-map");
  add_common(series);

  auto* sweep = app.add_subcommand("sweep", "verify a free-shift family over a range of s with c = s + 1");
  sweep->add_option("--family", config.family, "Y28 or Y30")->required();
  sweep->add_option("--sweep-range", range_text, "first:last (default 0:3)");
  add_common(sweep);

  auto* tables = app.add_subcommand("tables", "Frame shape and modularity tables");
  add_common(tables);
  auto* fams = app.add_subcommand("families", "list family descriptors");
  add_common(fams);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (!s_text.empty()) config.s = parse_rational(s_text);
    if (!c_text.empty()) config.c = parse_rational(c_text);
    if (!range_text.empty()) {
      const auto colon = range_text.find(':');
      if (colon == std::string::npos) throw ConfigError("--sweep-range expects first:last");
      config.sweep_first = std::stol(range_text.substr(0, colon));
      config.sweep_last = std::stol(range_text.substr(colon + 1));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (verify->parsed()) {
    config.command = Command::Verify;
  } else if (series->parsed()) {
    config.command = Command::Series;
  } else if (sweep->parsed()) {
    config.command = Command::Sweep;
  } else if (tables->parsed()) {
    config.command = Command::Tables;
  } else {
    config.command = Command::Families;
  }
  return run(config, out, err);
}

}  // namespace gfano::cli
