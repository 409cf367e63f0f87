#include "bog/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bog/errors.hpp"
#include "bog/freedim.hpp"
#include "bog/freeprob.hpp"
#include "bog/specfile.hpp"
#include "bog/words.hpp"

namespace bog {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_object() || x.is_array()) return false;
  }
  return true;
}

void render(const Json& v, int indent, std::ostream& os) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_object() || (value.is_array() && !is_flat(value))) {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      } else if (value.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
        os << "]\n";
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (is_flat(x)) {
        os << pad << "- [";
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
        os << "]\n";
      } else if (x.is_object() || x.is_array()) {
        os << pad << "-\n";
        render(x, indent + 2, os);
      } else {
        os << pad << "- " << scalar_text(x) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

struct Options {
  bool json = false;
  std::size_t truncate = 64;
  std::string file, name1, name2, expr;
  std::size_t order = 0, ov = 0, reduction = 0, n = 0;
  bool list = false;
};

Json cmd_classify(const Options& o) {
  SpecFile spec = parse_specfile(read_file(o.file));
  Json doc = dossier(spec.find(o.name1), o.truncate);
  doc["command"] = "classify";
  return doc;
}

Json cmd_present(const Options& o) {
  SpecFile spec = parse_specfile(read_file(o.file));
  Json d = dossier(spec.find(o.name1), o.truncate);
  return Json{{"command", "present"},
              {"name", d["name"]},
              {"presentation", d["presentation"]},
              {"relative_commutant", d["relative_commutant"]},
              {"cocycle", d["cocycle"]},
              {"normaliser", d["normaliser"]}};
}

Json cmd_compare(const Options& o) {
  SpecFile spec = parse_specfile(read_file(o.file));
  const Representation& a = spec.find(o.name1);
  const Representation& b = spec.find(o.name2);
  CompareOptions options;
  options.truncate = o.truncate;
  Verdict v = compare(a, b, options);
  Json doc = v.to_json();
  doc["command"] = "compare";
  doc["names"] = {a.name(), b.name()};
  doc["rechecked"] = recheck(v, a, b, options);
  return doc;
}

Json cmd_basis_change(const Options& o) {
  SpecFile spec = parse_specfile(read_file(o.file));
  Representation a = decompose(spec.find(o.name1)).first;
  Representation b = decompose(spec.find(o.name2)).first;
  WeightedBasis source = standard_basis(a, o.truncate);
  WeightedBasis target = standard_basis(b, o.truncate);
  RebaseResult r = rebase(source, target.weights);
  Json moves = Json::array();
  std::vector<std::string> names = source.names;
  for (const auto& m : r.moves) {
    Json tails = Json::object();
    for (const auto& [i, w] : m.tails) tails[names[i]] = w.to_string(names);
    moves.push_back({{"label", m.label}, {"tails", tails}});
  }
  Json forward = Json::array(), backward = Json::array();
  for (std::size_t i = 0; i < r.automorphism.forward.size(); ++i) {
    forward.push_back(r.basis.names[i] + " = " + r.automorphism.forward[i].to_string(source.names));
  }
  for (std::size_t i = 0; i < r.automorphism.backward.size(); ++i) {
    backward.push_back(source.names[i] + " = " + r.automorphism.backward[i].to_string(r.basis.names));
  }
  return Json{{"command", "basis-change"},
              {"names", {o.name1, o.name2}},
              {"source", {{"generators", source.names}, {"weights", source.weight_literals()}}},
              {"target", {{"generators", r.basis.names}, {"weights", r.basis.weight_literals()}}},
              {"moves", moves},
              {"forward", forward},
              {"backward", backward},
              {"swapped", r.swapped},
              {"verified", verify_rebase(source, target.weights, r)}};
}

Json cmd_freedim(const Options& o) {
  FactorDescriptor d = parse_descriptor(o.expr);
  d.validate();
  return Json{{"command", "freedim"},
              {"descriptor", d.to_string()},
              {"free_dimension", free_dimension(d).to_string()}};
}

Json ov_table(const OVSequence& s) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < s.order(); ++n) {
    for (std::size_t f = 0; f < s.tuples(n); ++f) {
      std::string idx;
      for (auto i : s.tuple(n, f)) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
      rows.push_back({{"n", n}, {"indices", idx}, {"value", rationals(s.values[n][f])}});
    }
  }
  return rows;
}

Json cmd_cumulants(const Options& o) {
  if (o.order == 0) throw Error(ErrorCode::Usage, "--order must be positive");
  Json doc{{"command", "cumulants"}, {"order", o.order}};
  if (o.ov == 0) {
    std::vector<Rational> m = semicircular_moments(o.order);
    std::vector<Rational> c = cumulants_from_moments(m, o.order);
    doc["mode"] = "scalar";
    doc["moments"] = rationals(m);
    doc["cumulants"] = rationals(c);
    doc["round_trip"] = moments_from_cumulants(c, o.order) == m;
    return doc;
  }
  OVDistribution dist = OVDistribution::trace_map(o.ov);
  OVSequence c = dist.cumulants(o.order);
  OVSequence m = ov_moments_from_cumulants(c);
  OVSequence back = ov_cumulants_from_moments(m);
  doc["mode"] = "operator_valued";
  doc["k"] = o.ov;
  doc["moments"] = ov_table(m);
  doc["round_trip"] = back.values == c.values;
  if (o.reduction > 0) {
    ReductionCheck r = verify_cumulant_reduction(o.ov, o.reduction, o.order);
    doc["reduction"] = {{"m", o.reduction},
                        {"holds", r.holds},
                        {"tuples_checked", r.tuples_checked},
                        {"failure", r.failure},
                        {"moment_display_holds", r.moment_display_holds}};
  }
  return doc;
}

Json cmd_nc(const Options& o) {
  Json doc{{"command", "nc"}, {"n", o.n}};
  std::uint64_t count = 0, pairings = 0;
  Json list = Json::array();
  for_each_nc(o.n, [&](const NCPartition& p) {
    ++count;
    pairings += p.is_pairing();
    if (o.list) list.push_back(p.to_string());
  });
  doc["count"] = count;
  doc["catalan"] = to_string(catalan(o.n));
  doc["pairings"] = pairings;
  if (o.list) doc["partitions"] = list;
  return doc;
}

void render_compare(const Json& doc, std::ostream& os) {
  os << doc["kind"].get<std::string>() << " (" << doc["rule"].get<std::string>() << ")\n";
  os << doc["human_summary"].get<std::string>() << "\n";
  os << "rechecked: " << (doc["rechecked"].get<bool>() ? "true" : "false") << "\n";
  os << "certificate:\n";
  render(doc["certificate"], 2, os);
}

void render_cumulants(const Json& doc, std::ostream& os) {
  if (doc["mode"] == "scalar") {
    os << "n  moment  cumulant\n";
    const Json& m = doc["moments"];
    const Json& c = doc["cumulants"];
    for (std::size_t n = 0; n < m.size(); ++n) {
      os << n << "  " << m[n].get<std::string>() << "  "
         << (n < c.size() ? c[n].get<std::string>() : std::string("-")) << "\n";
    }
  } else {
    os << "k = " << doc["k"].dump() << ", moments E(X e_i1 X ... e_in X)\n";
    for (const auto& row : doc["moments"]) {
      std::string v;
      for (const auto& x : row["value"]) v += (v.empty() ? "" : ", ") + x.get<std::string>();
      os << row["n"].dump() << "  (" << row["indices"].get<std::string>() << ")  [" << v << "]\n";
    }
  }
  os << "round_trip: " << (doc["round_trip"].get<bool>() ? "true" : "false") << "\n";
  if (doc.contains("reduction")) {
    os << "reduction:\n";
    render(doc["reduction"], 2, os);
  }
}

void render_nc(const Json& doc, std::ostream& os) {
  os << "|NC(" << doc["n"].dump() << ")| = " << doc["count"].dump() << " (Catalan "
     << doc["catalan"].get<std::string>() << "), pairings " << doc["pairings"].dump() << "\n";
  if (doc.contains("partitions")) {
    for (const auto& p : doc["partitions"]) os << p.get<std::string>() << "\n";
  }
}

void emit(const Json& doc, bool json, std::ostream& out) {
  if (json) {
    out << doc.dump(2) << "\n";
    return;
  }
  const std::string command = doc.value("command", "");
  if (command == "compare") {
    render_compare(doc, out);
  } else if (command == "cumulants") {
    render_cumulants(doc, out);
  } else if (command == "nc") {
    render_nc(doc, out);
  } else if (command == "freedim") {
    out << doc["free_dimension"].get<std::string>() << "\n";
  } else {
    Json body = doc;
    body.erase("command");
    out << render_text(body);
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"invariants of free Bogoljubov crossed products", "fbcp"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit one JSON document");
  app.add_option("--truncate", o.truncate, "copies kept of infinite multiplicities")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "full report on one representation");
  classify->add_option("FILE", o.file)->required();
  classify->add_option("NAME", o.name1)->required();
  auto* compare_cmd = app.add_subcommand("compare", "verdict with certificate for two representations");
  compare_cmd->add_option("FILE", o.file)->required();
  compare_cmd->add_option("NAME1", o.name1)->required();
  compare_cmd->add_option("NAME2", o.name2)->required();
  auto* present = app.add_subcommand("present", "amalgamated free product and normaliser data");
  present->add_option("FILE", o.file)->required();
  present->add_option("NAME", o.name1)->required();
  auto* freedim = app.add_subcommand("freedim", "free dimension of a descriptor such as lfr(4/3)@1/2 + mat(2)@1/2");
  freedim->add_option("EXPR", o.expr)->required();
  auto* cumulants = app.add_subcommand("cumulants", "semicircular moment and cumulant tables");
  cumulants->add_option("--order", o.order)->required();
  cumulants->add_option("--ov", o.ov, "operator-valued over C^k");
  cumulants->add_option("--reduction", o.reduction, "with --ov k, check the reduction to C^m ⊗ C^k");
  auto* basis = app.add_subcommand("basis-change", "Nielsen basis change between two ap parts");
  basis->add_option("FILE", o.file)->required();
  basis->add_option("NAME1", o.name1)->required();
  basis->add_option("NAME2", o.name2)->required();
  auto* nc = app.add_subcommand("nc", "non-crossing partitions");
  nc->add_option("--n", o.n)->required();
  nc->add_flag("--list", o.list);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n" << grammar_excerpt();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help() << "\n" << grammar_excerpt();
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Json doc;
    if (command == "classify") doc = cmd_classify(o);
    else if (command == "compare") doc = cmd_compare(o);
    else if (command == "present") doc = cmd_present(o);
    else if (command == "freedim") doc = cmd_freedim(o);
    else if (command == "cumulants") doc = cmd_cumulants(o);
    else if (command == "basis-change") doc = cmd_basis_change(o);
    else doc = cmd_nc(o);
    emit(doc, o.json, out);
    return 0;
  } catch (const Error& e) {
    std::string where = e.is_input_error() && !o.file.empty() ? o.file + ":" : "";
    err << "error: " << where << e.what() << " [" << to_string(e.code()) << "]\n";
    if (e.code() == ErrorCode::Usage) err << "\n" << grammar_excerpt();
    if (o.json) {
      out << Json{{"command", command},
                  {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}
                 .dump(2)
          << "\n";
    }
    return e.is_input_error() ? 2 : 1;
  }
}

}  // namespace bog
