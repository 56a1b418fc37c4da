#include "conemod/driver/io.hpp"

#include <fstream>
#include <sstream>

#include "conemod/poly/parse.hpp"

namespace conemod {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

template <class T>
T get(const Json& doc, const char* key) {
  try {
    return field(doc, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

Poly poly_from(const Json& value, const RingPtr& ring) {
  if (!value.is_string()) throw InputError("expected a polynomial string");
  return parse_poly(value.get<std::string>(), ring);
}

Fraction fraction_from(const Json& value, const RingPtr& ring) {
  if (!value.is_string()) throw InputError("expected a fraction string");
  return parse_fraction(value.get<std::string>(), ring);
}

Json derivations_to_json(const ConeInstance& inst) {
  Json out = Json::array();
  for (const auto& row : inst.action.images) {
    Json images = Json::object();
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) images[inst.vars().name(j)] = to_string(row[j]);
    out.push_back({{"images", images}});
  }
  return out;
}

LNDAction derivations_from_json(const Json& list, const RingPtr& ring, std::size_t r, std::uint64_t w) {
  if (!list.is_array() || list.size() != r) throw InputError("expected " + std::to_string(r) + " derivations");
  LNDAction action;
  action.r = r;
  action.w = w;
  for (const auto& d : list) {
    std::vector<Poly> row(ring->size(), Poly(ring));
    const Json& images = field(d, "images");
    if (!images.is_object()) throw InputError("derivation images must be an object");
    for (const auto& [name, value] : images.items()) {
      const auto idx = ring->vars.index_of(name);
      if (!idx) throw InputError("derivation image for unknown variable \"" + name + "\"");
      row[*idx] = poly_from(value, ring);
    }
    action.images.push_back(std::move(row));
  }
  return action;
}

Json relations_to_json(const Ideal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return out;
}

std::vector<Poly> polys_from(const Json& list, const RingPtr& ring) {
  if (!list.is_array()) throw InputError("expected a list of polynomials");
  std::vector<Poly> out;
  for (const auto& v : list) out.push_back(poly_from(v, ring));
  return out;
}

Json optional_index(const std::optional<IndexPair>& index) { return index ? index_to_json(*index) : Json(nullptr); }

}  // namespace

Json instance_to_json(const ConeInstance& inst) {
  Json vars = Json::array();
  for (std::size_t j = 0; j < inst.vars().size(); ++j)
    vars.push_back({{"name", inst.vars().name(j)}, {"degree", inst.vars().weight(j)}});
  return {{"w", inst.w()},
          {"r", inst.r()},
          {"variables", vars},
          {"relations", relations_to_json(inst.algebra.relations())},
          {"derivations", derivations_to_json(inst)}};
}

ConeInstance instance_from_json(const Json& doc, const GroebnerLimits& limits) {
  const auto w = get<std::uint64_t>(doc, "w");
  const auto r = get<std::size_t>(doc, "r");
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  const Json& vars = field(doc, "variables");
  if (!vars.is_array()) throw InputError("\"variables\" must be a list");
  for (const auto& v : vars) {
    names.push_back(get<std::string>(v, "name"));
    weights.push_back(get<std::uint64_t>(v, "degree"));
  }
  RingPtr ring;
  try {
    ring = make_ring(VarTable(names, weights));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  ConeInstance inst;
  std::vector<Poly> relations;
  if (doc.contains("relations")) relations = polys_from(doc.at("relations"), ring);
  inst.algebra = GradedAlgebra(ring, relations, limits);
  inst.action = derivations_from_json(field(doc, "derivations"), ring, r, w);
  return inst;
}

Json index_to_json(const IndexPair& index) {
  return {{"d", index.d}, {"e", index.e ? Json(*index.e) : Json("inf")}};
}

IndexPair index_from_json(const Json& doc) {
  IndexPair index;
  index.d = get<std::uint64_t>(doc, "d");
  const Json& e = field(doc, "e");
  if (e.is_string()) {
    if (e.get<std::string>() != "inf") throw InputError("index e must be a number or \"inf\"");
  } else {
    index.e = get<std::uint64_t>(doc, "e");
  }
  return index;
}

Json verification_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json failures = Json::array();
  for (const auto& f : report.failures()) failures.push_back(f);
  return {{"ok", report.ok()}, {"failures", failures}, {"checks", checks}};
}

Json fitting_report_to_json(const FittingReport& report) {
  const PolyMatrix& m = report.matrix.matrix;
  const VarTable& vars = m.ring_ptr()->vars;
  Json rows = Json::array();
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.cols(); ++i) entries.push_back(to_string(m.at(k, i)));
    rows.push_back({{"variable", vars.name(report.matrix.row_variables[k])}, {"entries", entries}});
  }
  Json fit = Json::object();
  for (const auto& [d, gens] : report.fit) {
    Json list = Json::array();
    for (const auto& g : gens) list.push_back(to_string(g));
    fit[std::to_string(d)] = list;
  }
  return {{"matrix", rows}, {"fit", fit}, {"index", index_to_json(report.index)}};
}

Json centre_to_json(const CentreData& centre, const Chart& chart) {
  Json seed = Json::array();
  for (const auto& g : centre.seed) seed.push_back(to_string(g));
  Json core = Json::array();
  Json embedded = Json::array();
  for (const auto& g : centre.core) {
    core.push_back(to_string(g));
    embedded.push_back(to_string(substitute(g, chart.embedding, chart.root_ring)));
  }
  Json warnings = Json::array();
  for (const auto& w : centre.warnings) warnings.push_back(w);
  return {{"mod_type", to_string(centre.kind)},
          {"empty", centre.empty()},
          {"seed", seed},
          {"core", core},
          {"core_root", embedded},
          {"min_degree", centre.min_degree ? Json(*centre.min_degree) : Json(nullptr)},
          {"warnings", warnings}};
}

Json chart_to_json(const Chart& chart) {
  const ConeInstance& inst = chart.instance;
  Json vars = Json::array();
  for (std::size_t j = 0; j < inst.vars().size(); ++j)
    vars.push_back({{"name", inst.vars().name(j)},
                    {"degree", inst.vars().weight(j)},
                    {"embedding", to_string(chart.embedding[j])}});
  Json parent_images = Json::array();
  for (const auto& p : chart.parent_images) parent_images.push_back(to_string(p));
  Json root_images = Json::array();
  for (const auto& p : chart.root_images) root_images.push_back(to_string(p));
  return {{"label", chart.label},
          {"identity", chart.identity},
          {"denominator", chart.denominator ? Json(to_string(*chart.denominator)) : Json(nullptr)},
          {"w", inst.w()},
          {"r", inst.r()},
          {"variables", vars},
          {"relations", relations_to_json(inst.algebra.relations())},
          {"derivations", derivations_to_json(inst)},
          {"parent_images", parent_images},
          {"root_images", root_images}};
}

namespace {

Chart chart_from_json(const Json& doc, const RingPtr& root_ring, const GroebnerLimits& limits) {
  Chart chart;
  chart.label = get<std::string>(doc, "label");
  chart.identity = get<bool>(doc, "identity");
  chart.root_ring = root_ring;
  const Json& vars = field(doc, "variables");
  if (!vars.is_array()) throw InputError("\"variables\" must be a list");
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  for (const auto& v : vars) {
    names.push_back(get<std::string>(v, "name"));
    weights.push_back(get<std::uint64_t>(v, "degree"));
    chart.embedding.push_back(fraction_from(field(v, "embedding"), root_ring));
  }
  const RingPtr ring = make_ring(VarTable(names, weights));
  chart.instance.algebra = GradedAlgebra(ring, polys_from(field(doc, "relations"), ring), limits);
  chart.instance.action =
      derivations_from_json(field(doc, "derivations"), ring, get<std::size_t>(doc, "r"), get<std::uint64_t>(doc, "w"));
  chart.parent_images = polys_from(field(doc, "parent_images"), ring);
  chart.root_images = polys_from(field(doc, "root_images"), ring);
  const Json& den = field(doc, "denominator");
  if (!den.is_null()) chart.denominator = fraction_from(den, root_ring);
  return chart;
}

QuotientPresentation quotient_from_json(const Json& doc, const Chart& chart, const GroebnerLimits& limits) {
  const RingPtr& ring = chart.instance.ring_ptr();
  QuotientPresentation q;
  const Json& slice = field(doc, "slice");
  for (const auto& row : field(slice, "betas")) {
    std::vector<Rational> coeffs;
    for (const auto& c : row) coeffs.push_back(parse_rational(c.get<std::string>()));
    q.slice.betas.push_back(std::move(coeffs));
  }
  q.slice.slices = polys_from(field(slice, "elements"), ring);
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  for (const auto& g : field(doc, "generators")) {
    InvariantGenerator gen;
    gen.name = get<std::string>(g, "name");
    gen.degree = get<std::uint64_t>(g, "degree");
    gen.value = poly_from(field(g, "value"), ring);
    const Json& e = field(g, "embedding");
    if (!e.is_null()) gen.embedding = fraction_from(e, chart.root_ring);
    names.push_back(gen.name);
    weights.push_back(gen.degree);
    q.generators.push_back(std::move(gen));
  }
  q.ring = make_ring(VarTable(names, weights));
  q.relations = Ideal(q.ring, polys_from(field(doc, "relations"), q.ring), limits);
  std::vector<std::string> rec_names;
  std::vector<std::uint64_t> rec_weights;
  for (std::size_t j = 0; j < q.slice.b(); ++j) {
    rec_names.push_back("s" + std::to_string(j + 1));
    rec_weights.push_back(chart.instance.w());
  }
  rec_names.insert(rec_names.end(), names.begin(), names.end());
  rec_weights.insert(rec_weights.end(), weights.begin(), weights.end());
  q.reconstruction_ring = make_ring(VarTable(rec_names, rec_weights));
  q.reconstruction = polys_from(field(doc, "reconstruction"), q.reconstruction_ring);
  return q;
}

}  // namespace

Json slice_to_json(const SliceData& slice) {
  Json betas = Json::array();
  for (const auto& row : slice.betas) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    betas.push_back(r);
  }
  Json elements = Json::array();
  for (const auto& f : slice.slices) elements.push_back(to_string(f));
  return {{"betas", betas}, {"elements", elements}};
}

Json quotient_to_json(const QuotientPresentation& q) {
  Json gens = Json::array();
  for (const auto& g : q.generators)
    gens.push_back({{"name", g.name},
                    {"degree", g.degree},
                    {"value", to_string(g.value)},
                    {"embedding", g.embedding ? Json(to_string(*g.embedding)) : Json(nullptr)}});
  Json rec = Json::array();
  for (const auto& p : q.reconstruction) rec.push_back(to_string(p));
  return {{"slice", slice_to_json(q.slice)},
          {"generators", gens},
          {"relations", relations_to_json(q.relations)},
          {"reconstruction", rec}};
}

Json tree_to_json(const ChartTree& tree) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    Json centre = Json::array();
    for (const auto& g : n.centre) centre.push_back(to_string(g));
    Json children = Json::array();
    for (std::size_t c : n.children) children.push_back(c);
    Json warnings = Json::array();
    for (const auto& w : n.warnings) warnings.push_back(w);
    Json node = {{"id", n.id},
                 {"label", n.chart.label},
                 {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
                 {"step", n.step},
                 {"mod_type", n.mod_type ? Json(to_string(*n.mod_type)) : Json(nullptr)},
                 {"centre_generators", centre},
                 {"denominator", n.chart.denominator ? Json(to_string(*n.chart.denominator)) : Json(nullptr)},
                 {"index_before", optional_index(n.index_before)},
                 {"index_after", index_to_json(n.index_after)},
                 {"terminal", n.terminal},
                 {"truncated", n.truncated},
                 {"warnings", warnings},
                 {"children", children},
                 {"chart", chart_to_json(n.chart)},
                 {"quotient", n.quotient ? quotient_to_json(*n.quotient) : Json(nullptr)}};
    nodes.push_back(std::move(node));
  }
  return {{"root", instance_to_json(tree.root)}, {"complete", tree.complete}, {"nodes", nodes}};
}

ChartTree tree_from_json(const Json& doc, const GroebnerLimits& limits) {
  ChartTree tree;
  tree.root = instance_from_json(field(doc, "root"), limits);
  tree.complete = get<bool>(doc, "complete");
  const RingPtr& root_ring = tree.root.ring_ptr();
  for (const auto& d : field(doc, "nodes")) {
    ChartNode n;
    n.id = get<std::size_t>(d, "id");
    if (n.id != tree.nodes.size()) throw InputError("node ids must be consecutive from 0");
    if (!field(d, "parent").is_null()) n.parent = get<std::size_t>(d, "parent");
    n.step = get<std::size_t>(d, "step");
    const Json& kind = field(d, "mod_type");
    if (!kind.is_null()) {
      const auto s = kind.get<std::string>();
      if (s != "I" && s != "II") throw InputError("mod_type must be \"I\" or \"II\"");
      n.mod_type = s == "I" ? ModType::I : ModType::II;
    }
    for (const auto& g : field(d, "centre_generators")) n.centre.push_back(fraction_from(g, root_ring));
    if (!field(d, "index_before").is_null()) n.index_before = index_from_json(d.at("index_before"));
    n.index_after = index_from_json(field(d, "index_after"));
    n.terminal = get<bool>(d, "terminal");
    n.truncated = get<bool>(d, "truncated");
    n.warnings = get<std::vector<std::string>>(d, "warnings");
    n.children = get<std::vector<std::size_t>>(d, "children");
    n.chart = chart_from_json(field(d, "chart"), root_ring, limits);
    const Json& q = field(d, "quotient");
    if (!q.is_null()) n.quotient = quotient_from_json(q, n.chart, limits);
    tree.nodes.push_back(std::move(n));
  }
  return tree;
}

std::string tree_to_dot(const ChartTree& tree) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph charts {\n";
  for (const auto& n : tree.nodes) {
    out << "  n" << n.id << " [label=" << quote(n.chart.label + "\\n" + to_string(n.index_after))
        << (n.terminal ? ", shape=box" : "") << "];\n";
  }
  for (const auto& n : tree.nodes)
    if (n.parent)
      out << "  n" << *n.parent << " -> n" << n.id << " [label=" << quote(to_string(*n.mod_type) + (n.chart.identity ? "=" : ""))
          << "];\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace conemod
