#include "densesol/cli.hpp"

#include <charconv>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "densesol/classify.hpp"
#include "densesol/density.hpp"
#include "densesol/lattice.hpp"
#include "densesol/solitary.hpp"
#include "densesol/zm.hpp"

namespace densesol::cli {

using nlohmann::json;

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "dot") return OutputFormat::Dot;
  return std::nullopt;
}

namespace {

long long parse_int(std::string_view text, std::string_view spec) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw SpecError("bad integer '" + std::string(text) + "' in group spec '" +
                    std::string(spec) + "'");
  return value;
}

std::vector<long long> parse_args(std::string_view args, std::string_view spec) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = args.find(',', start);
    out.push_back(parse_int(args.substr(start, comma - start), spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render(const json& doc) { return doc.dump() + "\n"; }

CommandResult invalid(OutputFormat format, const std::string& kind,
                      const std::string& reason, json extra = json::object()) {
  CommandResult result;
  result.exit_code = kExitInvalid;
  result.error = reason;
  if (format == OutputFormat::Json) {
    extra["schema"] = kJsonSchema;
    extra["error"] = kind;
    extra["reason"] = reason;
    result.output = render(extra);
  }
  return result;
}

CommandResult dot_not_supported(std::string_view command) {
  return invalid(OutputFormat::Text, "format",
                 "--format dot is only available for the lattice command, not " +
                     std::string(command));
}

std::vector<std::size_t> members_of(const Subgroup& h) {
  std::vector<std::size_t> out;
  h.members().for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

json node_json(const SubgroupLattice& lat, std::size_t i) {
  return json{{"id", i}, {"order", lat.node(i).order()}, {"members", members_of(lat.node(i))}};
}

json classification_json(const ClassificationResult& c) {
  json doc{{"verdict", c.verdict}, {"branch", to_string(c.branch)}};
  if (c.triple) doc["triple"] = *c.triple;
  if (c.detail) {
    doc["detail"] = json{{"m", c.detail->m},
                         {"d", c.detail->d},
                         {"alpha", c.detail->alpha},
                         {"beta", c.detail->beta},
                         {"p", c.detail->p ? json(*c.detail->p) : json(nullptr)}};
  }
  if (!c.reason.empty()) doc["reason"] = c.reason;
  return doc;
}

std::string classification_text(const ClassificationResult& c) {
  std::ostringstream os;
  os << (c.verdict ? "dense" : "not dense") << " [" << to_string(c.branch) << "]";
  if (c.triple)
    os << " as ZM(" << (*c.triple)[0] << "," << (*c.triple)[1] << "," << (*c.triple)[2] << ")";
  if (c.detail) {
    os << ": m=" << c.detail->m << ", d=" << c.detail->d << ", alpha=" << c.detail->alpha
       << ", beta=" << c.detail->beta;
    if (c.detail->p) os << ", p=" << *c.detail->p;
  }
  if (!c.reason.empty()) os << ": " << c.reason;
  return os.str();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string lattice_dot(const FiniteGroup& group, const SubgroupLattice& lat,
                        const BitSet& solitary, const std::vector<bool>& normal) {
  std::ostringstream os;
  os << "digraph " << dot_quote(group.label()) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  // One rank per subgroup order.
  std::map<std::size_t, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < lat.size(); ++i) layers[lat.node(i).order()].push_back(i);
  for (const auto& [order, ids] : layers) {
    os << "  { rank=same;";
    for (auto i : ids) os << " n" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << "  n" << i << " [label=\"#" << i << "\\n|H|=" << lat.node(i).order();
    if (normal[i]) os << "\\nnormal";
    os << "\"";
    if (solitary.contains(i))
      os << ", style=filled, fillcolor=\"lightblue\", peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i)
    lat.covers(i).for_each([&](std::size_t j) { os << "  n" << i << " -> n" << j << ";\n"; });
  os << "}\n";
  return os.str();
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec, std::size_t cap) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw SpecError("group spec '" + std::string(spec) + "' needs the form kind:args");
  const auto kind = spec.substr(0, colon);
  const auto args = parse_args(spec.substr(colon + 1), spec);
  auto expect = [&](std::size_t count) {
    if (args.size() != count)
      throw SpecError("group spec '" + std::string(spec) + "' expects " +
                      std::to_string(count) + " argument(s)");
  };
  auto positive = [&](long long v) {
    if (v < 0) throw SpecError("negative argument in group spec '" + std::string(spec) + "'");
    return static_cast<std::size_t>(v);
  };
  if (kind == "zm") {
    expect(3);
    return zm_group(validate_zm_triple(args[0], args[1], args[2]), cap);
  }
  if (kind == "cyclic") {
    expect(1);
    return make_cyclic(positive(args[0]), cap);
  }
  if (kind == "dihedral") {
    expect(1);
    return make_dihedral(positive(args[0]), cap);
  }
  if (kind == "quaternion") {
    expect(1);
    return make_generalized_quaternion(static_cast<unsigned>(std::min<std::size_t>(positive(args[0]), 64)), cap);
  }
  throw SpecError("unknown group kind '" + std::string(kind) +
                  "' (expected zm, cyclic, dihedral or quaternion)");
}

CommandResult cmd_zm_info(long long m, long long n, long long r, OutputFormat format,
                          std::size_t cap) {
  if (format == OutputFormat::Dot) return dot_not_supported("zm-info");
  const json triple{{"m", m}, {"n", n}, {"r", r}, {"valid", false}};
  std::optional<ZmParams> params;
  try {
    params = validate_zm_triple(m, n, r);
  } catch (const ZmError& e) {
    return invalid(format, to_string(e.kind()), e.what(), triple);
  }
  if (params->order() > cap)
    return invalid(format, "order_cap", OrderCapExceeded(params->order(), cap).what(), triple);

  const auto group = zm_group(*params, cap);
  const auto lat = all_subgroups(group, cap);
  const auto sol = solitary_mask(group, lat);
  const auto z = center(group);
  const auto predicate = classify_zm(*params);

  CommandResult result;
  if (format == OutputFormat::Json) {
    result.output = render(json{{"schema", kJsonSchema},
                                {"valid", true},
                                {"m", m},
                                {"n", n},
                                {"r", r},
                                {"d", params->d()},
                                {"order", group.order()},
                                {"center", z.order()},
                                {"subgroups", lat.size()},
                                {"solitary", sol.count()},
                                {"predicate", classification_json(predicate)}});
  } else {
    std::ostringstream os;
    os << params->label() << "\n"
       << "  valid:        yes\n"
       << "  d = o_m(r):   " << params->d() << "\n"
       << "  order:        " << group.order() << "\n"
       << "  center order: " << z.order() << "\n"
       << "  subgroups:    " << lat.size() << "\n"
       << "  solitary:     " << sol.count() << "\n"
       << "  predicate:    " << classification_text(predicate) << "\n";
    result.output = os.str();
  }
  return result;
}

namespace {

// Shared front half of the lattice and density commands.
struct Analysed {
  FiniteGroup group;
  SubgroupLattice lattice;
  BitSet solitary;
};

std::optional<Analysed> analyse(std::string_view spec, std::size_t cap,
                                OutputFormat format, CommandResult& error) {
  try {
    auto group = parse_group_spec(spec, cap);
    auto lat = all_subgroups(group, cap);
    auto sol = solitary_mask(group, lat);
    return Analysed{std::move(group), std::move(lat), std::move(sol)};
  } catch (const OrderCapExceeded& e) {
    error = invalid(format, "order_cap", e.what(), json{{"spec", spec}});
  } catch (const ZmError& e) {
    error = invalid(format, to_string(e.kind()), e.what(), json{{"spec", spec}});
  } catch (const std::invalid_argument& e) {
    error = invalid(format, "spec", e.what(), json{{"spec", spec}});
  }
  return std::nullopt;
}

}  // namespace

CommandResult cmd_lattice(std::string_view spec, OutputFormat format, std::size_t cap) {
  CommandResult error;
  auto analysed = analyse(spec, cap, format, error);
  if (!analysed) return error;
  const auto& [group, lat, sol] = *analysed;

  std::vector<bool> normal(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) normal[i] = is_normal(group, lat.node(i));

  CommandResult result;
  if (format == OutputFormat::Dot) {
    result.output = lattice_dot(group, lat, sol, normal);
  } else if (format == OutputFormat::Json) {
    json nodes = json::array(), edges = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      nodes.push_back(json{{"order", lat.node(i).order()},
                           {"members", members_of(lat.node(i))},
                           {"solitary", sol.contains(i)},
                           {"normal", static_cast<bool>(normal[i])}});
      lat.covers(i).for_each([&](std::size_t j) { edges.push_back(json{{"from", i}, {"to", j}}); });
    }
    result.output = render(json{{"schema", kJsonSchema},
                                {"group", group.label()},
                                {"order", group.order()},
                                {"nodes", std::move(nodes)},
                                {"covers", std::move(edges)}});
  } else {
    std::ostringstream os;
    os << group.label() << " (order " << group.order() << "): " << lat.size()
       << " subgroups, " << sol.count() << " solitary, " << lat.cover_count()
       << " cover edges\n";
    os << std::setw(5) << "id" << std::setw(7) << "order" << "  solitary  normal  members\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
      os << std::setw(5) << i << std::setw(7) << lat.node(i).order() << "  "
         << std::left << std::setw(10) << (sol.contains(i) ? "yes" : "no")
         << std::setw(8) << (normal[i] ? "yes" : "no") << std::right << "{";
      const auto members = members_of(lat.node(i));
      for (std::size_t k = 0; k < members.size(); ++k) os << (k ? "," : "") << members[k];
      os << "}\n";
    }
    os << "covers:";
    for (std::size_t i = 0; i < lat.size(); ++i)
      lat.covers(i).for_each([&](std::size_t j) { os << " " << i << "->" << j; });
    os << "\n";
    result.output = os.str();
  }
  return result;
}

CommandResult cmd_density(std::string_view spec, OutputFormat format, std::size_t cap) {
  if (format == OutputFormat::Dot) return dot_not_supported("density");
  CommandResult error;
  auto analysed = analyse(spec, cap, format, error);
  if (!analysed) return error;
  const auto& [group, lat, sol] = *analysed;
  const auto report = has_dense_solitary(lat, sol);
  const auto predicate = classify_group(group);

  CommandResult result;
  result.exit_code = report.verdict ? kExitOk : kExitFalse;
  if (format == OutputFormat::Json) {
    json ce = nullptr;
    if (report.counterexample) {
      std::vector<std::size_t> between;
      lat.open_interval(report.counterexample->lower, report.counterexample->upper)
          .for_each([&](std::size_t x) { between.push_back(x); });
      ce = json{{"lower", node_json(lat, report.counterexample->lower)},
                {"upper", node_json(lat, report.counterexample->upper)},
                {"interval", between}};
    }
    result.output = render(json{{"schema", kJsonSchema},
                                {"group", group.label()},
                                {"order", group.order()},
                                {"dense", report.verdict},
                                {"checked_pairs", report.checked_pairs},
                                {"counterexample", ce},
                                {"predicate", classification_json(predicate)}});
  } else {
    std::ostringstream os;
    os << group.label() << " (order " << group.order() << "): dense solitary subgroups: "
       << (report.verdict ? "yes" : "no") << " (" << report.checked_pairs
       << " non-maximal pairs checked)\n";
    if (report.counterexample) {
      const auto& c = *report.counterexample;
      os << "  counterexample: #" << c.lower << " (order " << c.lower_subgroup.order()
         << ") < #" << c.upper << " (order " << c.upper_subgroup.order()
         << "); no solitary subgroup in between:";
      lat.open_interval(c.lower, c.upper).for_each([&](std::size_t x) {
        os << " #" << x << " (order " << lat.node(x).order() << ")";
      });
      os << "\n";
    }
    os << "  predicate: " << classification_text(predicate) << "\n";
    result.output = os.str();
  }
  return result;
}

CommandResult cmd_verify(std::size_t max_order, OutputFormat format, std::size_t cap,
                         unsigned threads) {
  if (format == OutputFormat::Dot) return dot_not_supported("verify");
  if (max_order > cap)
    return invalid(format, "order_cap", OrderCapExceeded(max_order, cap).what(),
                   json{{"max_order", max_order}});
  SweepOptions options;
  options.cap = cap;
  options.threads = threads;
  const auto report = verify_theorem(max_order, options);

  CommandResult result;
  result.exit_code = report.disagreements.empty() ? kExitOk : kExitFalse;
  if (format == OutputFormat::Json) {
    json disagreements = json::array();
    for (const auto& d : report.disagreements)
      disagreements.push_back(
          json{{"group", d.label}, {"predicate", d.predicate}, {"brute_force", d.brute_force}});
    auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
    result.output = render(json{{"schema", kJsonSchema},
                                {"max_order", report.max_order},
                                {"triples", report.triples},
                                {"corpus_groups", report.corpus_groups},
                                {"agreements", report.agreements},
                                {"dense_triples", report.dense_triples},
                                {"disagreements", std::move(disagreements)},
                                {"beta0_witness", opt(report.beta0_witness)},
                                {"beta1_witness", opt(report.beta1_witness)},
                                {"millis", static_cast<long long>(report.seconds * 1000.0)}});
  } else {
    std::ostringstream os;
    os << "max order:      " << report.max_order << "\n"
       << "ZM triples:     " << report.triples << " (" << report.dense_triples << " dense)\n"
       << "corpus groups:  " << report.corpus_groups << "\n"
       << "agreements:     " << report.agreements << "\n"
       << "disagreements:  " << report.disagreements.size() << "\n";
    for (const auto& d : report.disagreements)
      os << "  " << d.label << ": predicate " << (d.predicate ? "dense" : "not dense")
         << ", brute force " << (d.brute_force ? "dense" : "not dense") << "\n";
    if (report.beta0_witness) os << "beta=0 witness: " << *report.beta0_witness << "\n";
    if (report.beta1_witness) os << "beta=1 witness: " << *report.beta1_witness << "\n";
    os << std::fixed << std::setprecision(2) << "elapsed:        " << report.seconds << " s\n";
    result.output = os.str();
  }
  return result;
}

}  // namespace densesol::cli
