// glsm: command-line front end for the I-function engine.
//
// Exit codes: 0 success, 1 validation failure or unmet precondition,
// 2 input error, 3 internal assertion.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "glsm/cache.hpp"
#include "glsm/glsm.hpp"

using namespace glsm;

namespace {

struct Options {
  std::string file;
  std::string file_b;
  std::string kind;
  std::string qbound;
  int torder = 0;
  std::vector<std::string> inserts;
  std::vector<std::string> maps;
  std::string rho;
  std::string method = "multiplication";
  std::string out;
  std::string format = "json";
  bool no_cache = false;
  bool direct = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Rational require_qbound(const Options& o) {
  if (o.qbound.empty()) throw InputError("--qbound is required");
  return parse_rational(o.qbound);
}

std::string render(const GradedSeries& s, const std::string& format) {
  if (format == "latex") return render_latex(s) + "\n";
  if (format == "text") return render_text(s);
  return serialize_series(s);
}

InsertionSet with_inserts(InsertionSet ins, const Options& o) {
  for (const auto& spec : o.inserts) add_insertion(ins, spec);
  return ins;
}

std::string cached(const Options& o, const JobKey& key, const std::function<std::string()>& produce) {
  if (o.no_cache) return produce();
  auto cache = ResultCache::from_environment();
  if (auto hit = cache.lookup(key)) return *hit;
  std::string bytes = produce();
  if (!cache.store(key, bytes)) std::cerr << "warning: could not write cache entry in " << cache.dir() << "\n";
  return bytes;
}

// "x1;p" or "1,0;0,1": characters separated by ';', each a variable name or integer entries
std::vector<IntVector> parse_characters(const std::string& text, const GLSMModel& m) {
  std::vector<IntVector> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    if (item.empty()) continue;
    auto it = std::find(m.variable_names.begin(), m.variable_names.end(), item);
    if (it != m.variable_names.end()) {
      out.push_back(m.column(static_cast<int>(it - m.variable_names.begin())));
      continue;
    }
    IntVector xi;
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ',')) {
      try {
        std::size_t used = 0;
        xi.push_back(std::stol(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw InputError("character '" + item + "' is neither a variable name nor a list of integers");
      }
    }
    if (static_cast<int>(xi.size()) != m.k) throw InputError("character '" + item + "' must have " + std::to_string(m.k) + " entries");
    out.push_back(xi);
  }
  if (out.empty()) throw InputError("--rho needs at least one character");
  return out;
}

std::map<std::string, std::string> parse_map(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& spec : items) {
    std::stringstream ss(spec);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      auto eq = pair.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
        throw InputError("--map entries must look like NAME_IN_B=NAME_IN_A: '" + pair + "'");
      out[pair.substr(0, eq)] = pair.substr(eq + 1);
    }
  }
  return out;
}

int cmd_validate(const Options& o) {
  auto m = parse_model(read_file(o.file));
  auto rep = validate_model(m);
  if (o.format == "text") {
    std::string t;
    for (const auto& c : rep.checks) t += (c.passed ? "ok    " : "FAIL  ") + c.name + ": " + c.detail + "\n";
    for (const auto& c : rep.warnings) t += (c.passed ? "note  " : "warn  ") + c.name + ": " + c.detail + "\n";
    emit(o, t);
  } else {
    emit(o, json_text(validation_json(rep)));
  }
  return rep.overall() ? 0 : 1;
}

int cmd_series(const Options& o, SeriesState state) {
  auto m = parse_model(read_file(o.file));
  auto q = require_qbound(o);
  auto ins = with_inserts(default_insertions(m), o);
  std::string command = std::string(state == SeriesState::glsm ? "glsm-ifun" : "ifun") + "|" + o.format;
  emit(o, cached(o, job_key(m, command, q, o.torder, ins), [&] {
         return render(state == SeriesState::glsm ? glsm_I(m, ins, q, o.torder) : big_I(m, ins, q, o.torder), o.format);
       }));
  return 0;
}

int cmd_dz(const Options& o) {
  const std::string text = read_file(o.file);
  auto j = detail::parse_json_text(text);
  GradedSeries s;
  if (j.contains("format")) {
    s = series_from_json(j);
  } else {
    auto m = model_from_json(j);
    auto ins = with_inserts(default_insertions(m), o);
    s = big_I(m, ins, require_qbound(o), o.torder);
  }
  DzMethod method;
  if (o.method == "multiplication") method = DzMethod::by_multiplication;
  else if (o.method == "insertion") method = DzMethod::by_insertion;
  else throw InputError("--method must be multiplication or insertion");
  auto rhos = parse_characters(o.rho, s.model);
  std::string command = "dz|" + o.method + "|" + o.rho + "|" + o.format + "|" + sha256_hex(serialize_series(s));
  emit(o, cached(o, job_key(s.model, command, s.q_bound, s.t_order, s.insertions),
                 [&] { return render(z_partial(s, rhos, method), o.format); }));
  return 0;
}

int cmd_check_ct(const Options& o) {
  auto s = parse_series(read_file(o.file));
  auto rep = compact_type_report(s, s.model);
  emit(o, json_text(compact_type_json(rep)));
  return rep.passed() ? 0 : 1;
}

int cmd_compare(const Options& o) {
  auto a = parse_series(read_file(o.file));
  auto b = parse_series(read_file(o.file_b));
  auto rep = series_compare(a, b, parse_map(o.maps));
  if (o.format == "text") {
    std::string t = std::string(rep.equal() ? "equal" : "differ") + " on common truncation (q_bound " + rep.q_bound.get_str() +
                    ", t_order " + std::to_string(rep.t_order) + ", " + std::to_string(rep.compared) + " terms)\n";
    for (const auto& e : rep.entries)
      t += "  d=(" + join_strings(to_strings(e.degree.value), ",") + ") z^" + std::to_string(e.z_power) + " " + e.monomial +
           ": " + e.value_a + " vs " + e.value_b + "\n";
    emit(o, t);
  } else {
    emit(o, json_text(diff_json(rep)));
  }
  return rep.equal() ? 0 : 1;
}

int cmd_specialize(const Options& o) {
  auto root = detail::parse_json_text(read_file(o.file));
  if (o.kind == "ci") {
    auto spec = ci_spec_from_json(root);
    auto m = ci_build(spec);
    if (o.qbound.empty()) {
      emit(o, serialize_model(m));
      return 0;
    }
    auto q = require_qbound(o);
    auto ins = with_inserts(default_insertions(m), o);
    auto rep = ci_compare(spec, ins, q, o.torder);
    emit(o, json_text(ci_json(rep)));
    return rep.passed() ? 0 : 1;
  }

  GLSMModel m;
  InsertionSet ins;
  std::function<GradedSeries(const Rational&)> direct;
  if (o.kind == "fjrw") {
    auto spec = fjrw_spec_from_json(root);
    m = fjrw_build(spec);
    ins = fjrw_insertions(m);
    direct = [spec, &o](const Rational& q) { return fjrw_I_direct(spec, q, o.torder); };
  } else if (o.kind == "hybrid") {
    auto spec = hybrid_spec_from_json(root);
    m = hybrid_build(spec);
    ins = hybrid_insertions(m, spec.n());
    direct = [spec, &o](const Rational& q) { return hybrid_I_direct(spec, q, o.torder); };
  } else {
    throw InputError("specialize kind must be fjrw, hybrid or ci");
  }
  if (o.qbound.empty()) {
    emit(o, serialize_model(m));
    return 0;
  }
  auto q = require_qbound(o);
  if (o.direct) {
    if (!o.inserts.empty()) throw InputError("--direct uses the fixed specialization insertions");
    emit(o, render(direct(q), o.format));
    return 0;
  }
  ins = with_inserts(ins, o);
  emit(o, cached(o, job_key(m, "specialize|" + o.kind + "|" + o.format, q, o.torder, ins),
                 [&] { return render(glsm_I(m, ins, q, o.torder), o.format); }));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact I-functions of torus gauged linear sigma models"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", o.out, "write the artifact here instead of standard output");
    c->add_option("--format", o.format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
    c->add_flag("--no-cache", o.no_cache, "bypass the result cache");
  };
  auto add_truncation = [&](CLI::App* c, bool required) {
    auto* q = c->add_option("--qbound", o.qbound, "bound on the theta-degree <d, theta>");
    if (required) q->required();
    c->add_option("--torder", o.torder, "total order in the insertion parameters")->check(CLI::NonNegativeNumber);
    c->add_option("--insert", o.inserts, "extra insertion NAME=POLY in the character names");
  };

  auto* validate = app.add_subcommand("validate", "check the model axioms");
  validate->add_option("FILE", o.file)->required();
  add_output(validate);

  auto* sectors = app.add_subcommand("sectors", "list inertia sectors and their rings");
  sectors->add_option("FILE", o.file)->required();
  add_output(sectors);

  auto* effective = app.add_subcommand("effective", "list effective degrees");
  effective->add_option("FILE", o.file)->required();
  effective->add_option("--qbound", o.qbound)->required();
  add_output(effective);

  auto* ifun = app.add_subcommand("ifun", "ambient big I-function");
  ifun->add_option("FILE", o.file)->required();
  add_truncation(ifun, true);
  add_output(ifun);

  auto* gifun = app.add_subcommand("glsm-ifun", "GLSM I-function");
  gifun->add_option("FILE", o.file)->required();
  add_truncation(gifun, true);
  add_output(gifun);

  auto* dz = app.add_subcommand("dz", "apply prod z d/d(rho) to an ambient series (or a model, computed first)");
  dz->add_option("FILE", o.file)->required();
  dz->add_option("--rho", o.rho, "characters: names or comma lists, separated by ';'")->required();
  dz->add_option("--method", o.method, "multiplication or insertion");
  add_truncation(dz, false);
  add_output(dz);

  auto* ct = app.add_subcommand("check-ct", "compact-type divisibility report");
  ct->add_option("SERIES", o.file)->required();
  add_output(ct);

  auto* spec = app.add_subcommand("specialize", "build a specialized model, or its series with --qbound");
  spec->add_option("KIND", o.kind, "fjrw, hybrid or ci")->required()->check(CLI::IsMember({"fjrw", "hybrid", "ci"}));
  spec->add_option("FILE", o.file)->required();
  spec->add_flag("--direct", o.direct, "closed-form series instead of the engine (fjrw, hybrid)");
  add_truncation(spec, false);
  add_output(spec);

  auto* compare = app.add_subcommand("compare", "diff two series on their common truncation");
  compare->add_option("A", o.file)->required();
  compare->add_option("B", o.file_b)->required();
  compare->add_option("--map", o.maps, "insertion renaming NAME_IN_B=NAME_IN_A[,...]");
  add_output(compare);

  auto* latex = app.add_subcommand("render-latex", "LaTeX view of a series");
  latex->add_option("SERIES", o.file)->required();
  latex->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    engine_threads();  // reject a malformed GLSM_THREADS even when the answer comes from the cache
    if (*validate) return cmd_validate(o);
    if (*sectors) {
      emit(o, json_text(sectors_json(parse_model(read_file(o.file)))));
      return 0;
    }
    if (*effective) {
      emit(o, json_text(effective_json(parse_model(read_file(o.file)), require_qbound(o))));
      return 0;
    }
    if (*ifun) return cmd_series(o, SeriesState::ambient);
    if (*gifun) return cmd_series(o, SeriesState::glsm);
    if (*dz) return cmd_dz(o);
    if (*ct) return cmd_check_ct(o);
    if (*spec) return cmd_specialize(o);
    if (*compare) return cmd_compare(o);
    if (*latex) {
      emit(o, render_latex(parse_series(read_file(o.file))) + "\n");
      return 0;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
