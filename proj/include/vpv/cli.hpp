#pragma once

// Command-line front end. One subcommand per invocation:
//
//   verify2 verify3 catalog scan probe audit ez31 visible polylog
//
// Exit codes: 0 success, 1 usage or domain error, 2 tolerance not
// reachable or series did not converge, 3 internal error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vpv/config.hpp"
#include "vpv/errors.hpp"
#include "vpv/explorer.hpp"
#include "vpv/io.hpp"
#include "vpv/lattice.hpp"
#include "vpv/oracle.hpp"
#include "vpv/polylog.hpp"
#include "vpv/products.hpp"

namespace vpv::cli {

enum class output_format { json, csv, human };

enum exit_code : int { ok = 0, usage = 1, unreachable = 2, internal = 3 };

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A complex flag given either as `a+bi` or as separate -re/-im parts.
struct complex_arg {
  std::string joined;
  std::string re;
  std::string im;
  bool given() const { return !joined.empty() || !re.empty() || !im.empty(); }
};

struct run_config {
  std::string command;
  complex_arg s, t, x, y, z;
  std::string T_list;
  std::string delta_list;
  std::string tol = "1e-8";
  std::string series_tol = "1e-13";
  int degree_cap_max = 4000;
  std::string precision = "double";
  output_format format = output_format::human;
  std::string output_path;
  unsigned threads = 1;
  int order = 3;
  int dim = 2;
  int cap = 10;
};

template <class Real>
Real parse_real(const std::string& text, const std::string& what) {
  if (text.empty()) throw usage_error(what + ": empty number");
  if constexpr (std::is_floating_point_v<Real>) {
    char* end = nullptr;
    errno = 0;
    long double v = std::strtold(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE)
      throw usage_error(what + ": not a number: '" + text + "'");
    return static_cast<Real>(v);
  } else {
    try {
      return Real(text);
    } catch (const std::exception&) {
      throw usage_error(what + ": not a number: '" + text + "'");
    }
  }
}

// Splits `a`, `bi`, `a+bi`, `a-bi` (also with `j`) into real and imaginary text.
inline std::pair<std::string, std::string> split_complex(std::string text) {
  std::string compact;
  for (char c : text)
    if (c != ' ') compact += c;
  if (compact.empty()) throw usage_error("empty complex number");
  const char last = compact.back();
  if (last != 'i' && last != 'j') return {compact, "0"};
  compact.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = compact.size(); i-- > 1;) {
    if ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != 'e' && compact[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : compact.substr(0, split);
  std::string im = split == std::string::npos ? compact : compact.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re, im};
}

template <class Real>
std::optional<basic_complex<Real>> parse_complex(const complex_arg& arg, const std::string& name) {
  if (!arg.given()) return std::nullopt;
  basic_complex<Real> v;
  if (!arg.joined.empty()) {
    auto [re, im] = split_complex(arg.joined);
    v = {parse_real<Real>(re, "--" + name), parse_real<Real>(im, "--" + name)};
  }
  if (!arg.re.empty()) v.re = parse_real<Real>(arg.re, "--" + name + "-re");
  if (!arg.im.empty()) v.im = parse_real<Real>(arg.im, "--" + name + "-im");
  return v;
}

template <class Real>
basic_complex<Real> require_complex(const complex_arg& arg, const std::string& name) {
  auto v = parse_complex<Real>(arg, name);
  if (!v) throw usage_error("missing required --" + name);
  return *v;
}

template <class Real>
std::vector<Real> parse_list(const std::string& text, const std::string& name) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_real<Real>(item, "--" + name));
  }
  if (out.empty()) throw usage_error("--" + name + " needs at least one value");
  return out;
}

template <class Real>
std::string human(const Real& v) {
  if constexpr (std::is_same_v<Real, double>) return io::shortest(v);
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<Real>::max_digits10) << v;
  return os.str();
}

template <class Real>
std::string human(const basic_complex<Real>& z) {
  if (z.im == 0) return human(z.re);
  return human(z.re) + (z.im < 0 ? " - " : " + ") + human(z.im < 0 ? Real(-z.im) : z.im) + "i";
}

template <class Real>
void print_report_human(std::ostream& os, const identity_report<Real>& r) {
  os << "lhs_log    " << human(r.lhs_log) << '\n'
     << "rhs_log    " << human(r.rhs_log) << '\n'
     << "abs_err    " << human(r.abs_err) << '\n'
     << "rel_err    " << human(r.rel_err) << '\n'
     << "degree_cap " << r.truncation.degree_cap << '\n'
     << "tail_bound " << human(r.truncation.tail_bound) << '\n'
     << "terms      " << r.terms << '\n';
}

template <class Real>
void print_series_human(std::ostream& os, const series_result<Real>& r) {
  os << "value      " << human(r.value) << '\n'
     << "terms_used " << r.terms_used << '\n'
     << "tail_bound " << human(r.tail_bound) << '\n';
}

template <class Real>
int execute(const run_config& rc, std::ostream& out, std::ostream& err) {
  using C = basic_complex<Real>;
  numeric_config cfg;
  cfg.degree_cap_max = rc.degree_cap_max;
  cfg.threads = rc.threads;
  const Real tol = parse_real<Real>(rc.tol, "--tol");
  if (!(tol > 0)) throw usage_error("--tol must be positive");
  const auto fmt = rc.format;

  if (rc.command == "verify2" || rc.command == "verify3") {
    identity_case<Real> c;
    if (rc.command == "verify2") {
      C x = require_complex<Real>(rc.x, "x");
      c = make_case_2d<Real>(require_complex<Real>(rc.s, "s"), x, require_complex<Real>(rc.y, "y"));
      c.unit_x = x.re == 1 && x.im == 0;
    } else {
      c = make_case_3d<Real>(require_complex<Real>(rc.s, "s"), require_complex<Real>(rc.t, "t"),
                             require_complex<Real>(rc.x, "x"), require_complex<Real>(rc.y, "y"),
                             require_complex<Real>(rc.z, "z"));
    }
    auto rep = verify(c, tol, cfg);
    if (fmt == output_format::json) out << io::to_json(rep).dump(2) << '\n';
    else if (fmt == output_format::csv) out << io::report_csv_header() << '\n' << io::csv_row(rep) << '\n';
    else print_report_human(out, rep);
    return ok;
  }

  if (rc.command == "catalog") {
    catalog_defaults<Real> d;
    if (auto x = parse_complex<Real>(rc.x, "x")) d.x = *x;
    if (auto y = parse_complex<Real>(rc.y, "y")) d.y = *y;
    if (!rc.T_list.empty()) d.T = parse_list<Real>(rc.T_list, "T").front();
    auto entries = catalog<Real>(d);
    io::json arr = io::json::array();
    if (fmt == output_format::csv) out << "name," << io::report_csv_header() << '\n';
    for (const auto& e : entries) {
      auto rep = verify(e.instance, tol, cfg);
      if (fmt == output_format::json) {
        auto j = io::to_json(rep);
        j["name"] = e.instance.name;
        j["rhs"] = e.rhs_description;
        j["audited_constant"] = e.audited_constant ? io::json(*e.audited_constant) : io::json(nullptr);
        arr.push_back(std::move(j));
      } else if (fmt == output_format::csv) {
        out << e.instance.name << ',' << io::csv_row(rep) << '\n';
      } else {
        out << std::left << std::setw(20) << e.instance.name << " rel_err " << human(rep.rel_err)
            << "  lhs " << human(rep.lhs_log) << "  rhs " << human(rep.rhs_log) << "  ["
            << e.rhs_description << "]\n";
      }
    }
    if (fmt == output_format::json) out << arr.dump(2) << '\n';
    return ok;
  }

  if (rc.command == "scan") {
    auto rows = critical_line_scan<Real>(parse_list<Real>(rc.T_list, "T"),
                                         require_complex<Real>(rc.x, "x"),
                                         require_complex<Real>(rc.y, "y"), tol, cfg);
    if (fmt == output_format::json) {
      out << io::to_json_array(rows).dump(2) << '\n';
    } else if (fmt == output_format::csv) {
      out << io::scan_csv_header() << '\n';
      for (const auto& r : rows) out << io::csv_row(r) << '\n';
    } else {
      for (const auto& r : rows)
        out << "T " << human(r.T) << "  abs_err " << human(r.abs_err) << "  lhs "
            << human(r.lhs_log) << "  rhs " << human(r.rhs_log) << '\n';
    }
    return ok;
  }

  if (rc.command == "probe") {
    auto rep = trivial_zero_probe<Real>(rc.order, require_complex<Real>(rc.x, "x"),
                                        parse_list<Real>(rc.delta_list, "delta"), tol, cfg);
    if (fmt == output_format::json) {
      out << io::to_json_array(rep.rows).dump(2) << '\n';
      err << "note: " << rep.note << '\n';
    } else if (fmt == output_format::csv) {
      out << io::probe_csv_header() << '\n';
      for (const auto& r : rep.rows) out << io::csv_row(r) << '\n';
      err << "note: " << rep.note << '\n';
    } else {
      for (const auto& r : rep.rows) {
        out << "delta " << human(r.delta);
        if (r.error) {
          out << "  error: " << *r.error << '\n';
          continue;
        }
        out << "  abs_err " << human(r.abs_err) << "  |rhs_log| "
            << human(r.rhs_exponent_magnitude) << "  Li_" << (1 - rc.order) << "(1-delta) "
            << human(r.rational_factor) << '\n';
      }
      out << "note: " << rep.note << '\n';
    }
    bool any_error = false;
    for (const auto& r : rep.rows) any_error = any_error || r.error.has_value();
    return any_error ? unreachable : ok;
  }

  if (rc.command == "audit") {
    audit_tolerances at;
    at.series = static_cast<double>(parse_real<Real>(rc.series_tol, "--series-tol"));
    auto recs = audit_special_values<Real>(at, cfg);
    if (fmt == output_format::json) {
      out << io::to_json_array(recs).dump(2) << '\n';
    } else if (fmt == output_format::csv) {
      out << io::audit_csv_header() << '\n';
      for (const auto& r : recs) out << io::csv_row(r) << '\n';
    } else {
      for (const auto& r : recs) {
        out << r.name << "  " << to_string(r.result) << "\n  printed   " << r.printed_form
            << " = " << human(r.printed_form_value) << "\n  series    " << human(r.series_value)
            << "\n  |diff|    " << human(r.discrepancy) << '\n';
        if (r.corrected_form)
          out << "  corrected " << *r.corrected_form << " = " << human(*r.candidate_corrected_value)
              << '\n';
      }
    }
    return ok;
  }

  if (rc.command == "ez31" || rc.command == "polylog") {
    series_result<Real> r = rc.command == "ez31"
                                ? euler_zagier_31<Real>(tol, cfg)
                                : polylog<Real>(require_complex<Real>(rc.s, "s"),
                                                require_complex<Real>(rc.z, "z"), tol, cfg);
    if (fmt == output_format::json) out << io::to_json(r).dump(2) << '\n';
    else if (fmt == output_format::csv) out << io::series_csv_header() << '\n' << io::csv_row(r) << '\n';
    else print_series_human(out, r);
    return ok;
  }

  throw usage_error("unknown command " + rc.command);
}

namespace detail {

inline void add_complex(CLI::App* sub, const std::string& name, complex_arg& target,
                        const std::string& help) {
  sub->add_option("--" + name, target.joined, help + " (a, a+bi)");
  sub->add_option("--" + name + "-re", target.re, "real part of " + name);
  sub->add_option("--" + name + "-im", target.im, "imaginary part of " + name);
}

inline std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read config file " + path);
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  run_config rc;
  CLI::App app{"Visible-point product identities: verification, scans and audits", "vpv"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value file; command-line flags take precedence");

  std::map<std::string, output_format> formats{
      {"json", output_format::json}, {"csv", output_format::csv}, {"human", output_format::human}};
  auto common = [&](CLI::App* sub, bool with_tol) {
    if (with_tol) sub->add_option("--tol", rc.tol, "target tolerance")->capture_default_str();
    sub->add_option("--format", rc.format, "json, csv or human")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", rc.output_path, "write results to this file");
    sub->add_option("--precision", rc.precision, "double or extended:<digits>")->capture_default_str();
    sub->add_option("--degree-cap-max", rc.degree_cap_max, "largest lattice degree cap")
        ->capture_default_str();
    sub->add_option("--threads", rc.threads, "worker threads for lattice sums")
        ->check(CLI::Range(1u, 256u));
    sub->callback([&rc, sub] { rc.command = sub->get_name(); });
  };

  auto* v2 = app.add_subcommand("verify2", "verify the two-variable identity with t = 1 - s");
  detail::add_complex(v2, "s", rc.s, "order s");
  detail::add_complex(v2, "x", rc.x, "first argument (x = 1 selects the zeta-constant form)");
  detail::add_complex(v2, "y", rc.y, "second argument");
  common(v2, true);

  auto* v3 = app.add_subcommand("verify3", "verify the three-variable identity with u = 1 - s - t");
  detail::add_complex(v3, "s", rc.s, "order s");
  detail::add_complex(v3, "t", rc.t, "order t");
  detail::add_complex(v3, "x", rc.x, "first argument");
  detail::add_complex(v3, "y", rc.y, "second argument");
  detail::add_complex(v3, "z", rc.z, "third argument");
  common(v3, true);

  auto* cat = app.add_subcommand("catalog", "verify every named identity instance");
  detail::add_complex(cat, "x", rc.x, "free x (default 0.3)");
  detail::add_complex(cat, "y", rc.y, "free y (default 0.3)");
  cat->add_option("--T", rc.T_list, "T for the critical-line instance (default 0)");
  common(cat, true);

  auto* scan = app.add_subcommand("scan", "critical-line scan over T with s = 1/2 + iT");
  detail::add_complex(scan, "x", rc.x, "first argument");
  detail::add_complex(scan, "y", rc.y, "second argument");
  scan->add_option("--T", rc.T_list, "comma-separated T values")->required();
  common(scan, true);

  auto* probe = app.add_subcommand("probe", "trivial-zero probe at y = 1 - delta");
  probe->add_option("--order", rc.order, "order s in {2, 3, 4}")->capture_default_str();
  detail::add_complex(probe, "x", rc.x, "first argument");
  probe->add_option("--delta", rc.delta_list, "comma-separated delta values in (0, 1)")->required();
  common(probe, true);

  auto* audit = app.add_subcommand("audit", "audit the closed forms of Li_k(1/2), k = 1..4");
  audit->add_option("--series-tol", rc.series_tol, "tolerance of the series oracles")
      ->capture_default_str();
  common(audit, false);

  auto* ez = app.add_subcommand("ez31", "alternating double sum zeta(-3,-1)");
  common(ez, true);

  auto* vis = app.add_subcommand("visible", "dump visible lattice points as CSV");
  vis->add_option("--dim", rc.dim, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  vis->add_option("--cap", rc.cap, "largest coordinate sum")->capture_default_str();
  vis->add_option("--output", rc.output_path, "write results to this file");
  vis->callback([&rc] { rc.command = "visible"; });

  auto* pl = app.add_subcommand("polylog", "evaluate Li_s(z)");
  detail::add_complex(pl, "s", rc.s, "order s");
  detail::add_complex(pl, "z", rc.z, "argument z");
  common(pl, true);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    // Config file keys are injected right after the subcommand name, so
    // later command-line flags override them.
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) {
        config_path = args[i + 1];
        args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
        break;
      }
      if (args[i].rfind("--config=", 0) == 0) {
        config_path = args[i].substr(9);
        args.erase(args.begin() + static_cast<long>(i));
        break;
      }
    }
    if (!config_path.empty()) {
      auto kv = detail::read_config_file(config_path);
      auto sub_it = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
        return a.empty() || a[0] != '-' ? app.get_subcommand_no_throw(a) != nullptr : false;
      });
      std::vector<std::string> injected;
      for (const auto& [key, value] : kv) {
        const std::string flag = "--" + key;
        bool known_anywhere = false;
        for (const auto* sub : {v2, v3, cat, scan, probe, audit, ez, vis, pl})
          if (sub->get_option_no_throw(flag)) known_anywhere = true;
        if (!known_anywhere) throw usage_error("config file: unknown key '" + key + "'");
        if (sub_it != args.end() && app.get_subcommand(*sub_it)->get_option_no_throw(flag)) {
          injected.push_back(flag);
          injected.push_back(value);
        }
      }
      if (sub_it != args.end()) args.insert(sub_it + 1, injected.begin(), injected.end());
    }

    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) cargv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : usage;
    }
    if (rc.degree_cap_max < 2) throw usage_error("--degree-cap-max must be at least 2");

    std::ofstream file;
    std::ostream* sink = &out;
    if (!rc.output_path.empty()) {
      file.open(rc.output_path);
      if (!file) throw usage_error("cannot write " + rc.output_path);
      sink = &file;
    }

    if (rc.command == "visible") {
      if (rc.cap < rc.dim) throw usage_error("--cap must be at least --dim");
      io::write_visible_csv(*sink, rc.dim, static_cast<lattice_int>(rc.cap));
      return ok;
    }

    if (rc.precision == "double") return execute<double>(rc, *sink, err);
    if (rc.precision.rfind("extended:", 0) == 0) {
      int digits = 0;
      try {
        digits = std::stoi(rc.precision.substr(9));
      } catch (const std::exception&) {
        throw usage_error("--precision extended:<digits> needs an integer");
      }
      if (digits <= 0) throw usage_error("--precision digits must be positive");
      if (digits <= 30) return execute<extended30>(rc, *sink, err);
      if (digits <= 50) return execute<extended50>(rc, *sink, err);
      throw usage_error("--precision: at most 50 digits are supported");
    }
    throw usage_error("--precision must be 'double' or 'extended:<digits>'");
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const vpv::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return usage;
  } catch (const tail_bound_exceeds_tol& e) {
    err << "tolerance not reachable: " << e.what() << '\n';
    return unreachable;
  } catch (const non_convergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return unreachable;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
}

}  // namespace vpv::cli
