#include "wreath_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "wreath/wreath.hpp"

namespace wreath::cli {

namespace {

struct Command {
  std::string name;
  std::vector<std::string> args;
  std::string help;
  std::function<Report(const CommandRequest&)> run;
};

const std::vector<Command>& commands();

// ---- serialization helpers ----

Json elem(const TreeAutomorphism& g) {
  return Json{{"swap_word", g.swap_word()}, {"cycles", g.cycles()}};
}

std::string rat(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json terms(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x.terms()) out.push_back(Json::array({g.cycles(), rat(c)}));
  return out;
}

Json cycles_list(const std::vector<TreeAutomorphism>& v) {
  Json out = Json::array();
  for (const auto& g : v) out.push_back(g.cycles());
  return out;
}

std::string index_set(const std::vector<int>& I) {
  std::string out = "{";
  for (std::size_t i = 0; i < I.size(); ++i) out += (i ? "," : "") + std::to_string(I[i]);
  return out + "}";
}

std::string beta_word(const std::vector<int>& descending_from) {
  std::string out;
  for (auto it = descending_from.rbegin(); it != descending_from.rend(); ++it)
    out += (out.empty() ? "" : " ") + std::string("beta_") + std::to_string(*it);
  return out;
}

std::size_t as_size(const BigInt& x) { return static_cast<std::size_t>(x.get_ui()); }

// ---- guards ----

void need(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void gate(const CommandRequest& req, bool large, const std::string& what) {
  if (large && !req.allow_large)
    throw UsageError(what + " requires --allow-large (expected runtime under a few seconds)");
}

Json params(std::initializer_list<std::pair<const char*, int>> kv) {
  Json out = Json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

Report make(const std::string& name, Json parameters) {
  Report r;
  r.subcommand = name;
  r.parameters = std::move(parameters);
  return r;
}

void fail_with(Report& r, const std::string& witness) {
  if (r.verdict != Verdict::Fail) r.witness = witness;
  r.verdict = Verdict::Fail;
}

// ---- subcommands ----

SubgroupSpec parse_subgroup(const std::string& text) {
  auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  auto number = [&](std::size_t from, std::size_t to) {
    try {
      return std::stoi(text.substr(from, to - from));
    } catch (const std::exception&) {
      throw UsageError("malformed subgroup '" + text + "'");
    }
  };
  if (kind == "full" && colon == std::string::npos) return SubgroupSpec::full();
  if (kind == "trivial" && colon == std::string::npos) return SubgroupSpec::trivial();
  need(colon != std::string::npos, "unknown subgroup '" + text + "'");
  if (kind == "embedded") return SubgroupSpec::embedded(number(colon + 1, text.size()));
  if (kind == "hat") return SubgroupSpec::hat(number(colon + 1, text.size()));
  if (kind == "chain") {
    const auto second = text.find(':', colon + 1);
    need(second != std::string::npos, "chain needs chain:FIRST:LAST");
    return SubgroupSpec::hat_chain(number(colon + 1, second), number(second + 1, text.size()));
  }
  throw UsageError("unknown subgroup '" + text + "'");
}

Report cmd_enumerate(const CommandRequest& req) {
  const int n = req.args[0];
  const auto spec = parse_subgroup(req.subgroup);
  auto r = make("enumerate", params({{"n", n}}));
  r.parameters["subgroup"] = spec.name();
  const auto elements = enumerate(spec, n);
  r.payload["order"] = elements.size();
  Json list = Json::array();
  r.table.header = {"index", "swap_word", "cycles"};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    list.push_back(elem(elements[i]));
    r.table.rows.push_back({std::to_string(i), elements[i].swap_word(), elements[i].cycles()});
  }
  r.payload["elements"] = std::move(list);
  return r;
}

Report cmd_center(const CommandRequest& req) {
  const int n = req.args[0];
  need(n >= 0 && n <= 4, "center needs 0 <= n <= 4");
  gate(req, n == 4, "center 4");
  auto r = make("center", params({{"n", n}}));
  const auto brute = center(n);
  const auto closed = center_closed_form(n);
  r.payload["elements"] = cycles_list(brute);
  r.payload["closed_form"] = cycles_list(closed);
  r.table.header = {"swap_word", "cycles"};
  for (const auto& g : brute) r.table.rows.push_back({g.swap_word(), g.cycles()});
  r.verdict = Verdict::Pass;
  if (brute != closed) fail_with(r, "brute-force center has " + std::to_string(brute.size()) + " elements");
  return r;
}

Report cmd_classes(const CommandRequest& req) {
  const int n = req.args[0];
  need(n >= 0 && n <= 4, "classes needs 0 <= n <= 4");
  gate(req, n == 4, "classes 4");
  auto r = make("classes", params({{"n", n}}));
  const auto d = conjugacy_classes(n);
  const auto predicted = class_count(n);
  r.payload["count"] = d.count();
  r.payload["predicted"] = predicted.get_str();
  Json list = Json::array();
  r.table.header = {"index", "representative", "size"};
  for (std::size_t i = 0; i < d.count(); ++i) {
    const auto& o = d.orbits[i];
    list.push_back(Json{{"representative", elem(o.representative)}, {"size", o.elements.size()}});
    r.table.rows.push_back({std::to_string(i), o.representative.cycles(),
                            std::to_string(o.elements.size())});
  }
  r.payload["classes"] = std::move(list);
  r.verdict = Verdict::Pass;
  if (BigInt(static_cast<unsigned long>(d.count())) != predicted)
    fail_with(r, std::to_string(d.count()) + " classes vs recursion " + predicted.get_str());
  return r;
}

Report cmd_class_count(const CommandRequest& req) {
  const int n = req.args[0];
  need(n >= 0 && n <= 30, "class-count needs 0 <= n <= 30");
  auto r = make("class-count", params({{"n", n}}));
  const auto c = class_count(n);
  r.payload["value"] = c.get_str();
  r.table.header = {"n", "value"};
  r.table.rows.push_back({std::to_string(n), c.get_str()});
  return r;
}

Report cmd_right_cosets(const CommandRequest& req) {
  const int n = req.args[0], l = req.args[1];
  need(n >= 0 && l >= 0 && n + l + 1 <= 4, "right-cosets needs n, l >= 0 and n + l + 1 <= 4");
  auto r = make("right-cosets", params({{"n", n}, {"l", l}}));
  const auto cs = right_coset_reps(n, l);
  const BigInt expected = group_order(n + l + 1) / group_order(n);
  const auto coset_size = as_size(group_order(n));
  r.payload["count"] = cs.representatives.size();
  r.payload["expected_count"] = expected.get_str();
  r.payload["coset_size"] = coset_size;
  r.payload["disjoint"] = cs.disjoint;
  r.payload["covers"] = cs.covers;
  Json reps = Json::array();
  r.table.header = {"index", "swap_word", "cycles", "size"};
  for (std::size_t i = 0; i < cs.representatives.size(); ++i) {
    reps.push_back(elem(cs.representatives[i]));
    r.table.rows.push_back({std::to_string(i), cs.representatives[i].swap_word(),
                            cs.representatives[i].cycles(), std::to_string(cs.sizes[i])});
  }
  r.payload["representatives"] = std::move(reps);
  r.verdict = Verdict::Pass;
  if (!cs.disjoint) fail_with(r, "cosets overlap at " + cs.witness->cycles());
  if (!cs.covers) fail_with(r, "cosets miss " + cs.witness->cycles());
  if (BigInt(static_cast<unsigned long>(cs.representatives.size())) != expected)
    fail_with(r, "representative count " + std::to_string(cs.representatives.size()));
  for (std::size_t i = 0; i < cs.sizes.size(); ++i)
    if (cs.sizes[i] != coset_size) fail_with(r, "coset of " + cs.representatives[i].cycles());
  return r;
}

Report cmd_double_cosets(const CommandRequest& req) {
  const int n = req.args[0];
  need(n >= 0 && n <= 3, "double-cosets needs 0 <= n <= 3");
  auto r = make("double-cosets", params({{"n", n}}));
  const auto cs = double_cosets(n);
  const auto order = as_size(group_order(n));
  const auto big = beta(n + 1, n + 1);
  r.payload["count"] = cs.representatives.size();
  r.payload["sizes"] = cs.sizes;
  std::size_t big_size = 0;
  Json reps = Json::array();
  r.table.header = {"index", "representative", "size"};
  r.verdict = Verdict::Pass;
  for (std::size_t i = 0; i < cs.representatives.size(); ++i) {
    const auto& rep = cs.representatives[i];
    reps.push_back(elem(rep));
    r.table.rows.push_back({std::to_string(i), rep.cycles(), std::to_string(cs.sizes[i])});
    const std::size_t want = rep == big ? order * order : order;
    if (rep == big) big_size = cs.sizes[i];
    if (cs.sizes[i] != want) fail_with(r, "double coset of " + rep.cycles());
    if (double_coset(n, rep).front() != rep)
      fail_with(r, rep.cycles() + " is not the minimum of its double coset");
  }
  r.payload["big_coset_size"] = big_size;
  r.payload["disjoint"] = cs.disjoint;
  r.payload["covers"] = cs.covers;
  r.payload["representatives"] = std::move(reps);
  if (cs.representatives.size() != order + 1)
    fail_with(r, std::to_string(cs.representatives.size()) + " double cosets");
  if (!cs.disjoint || !cs.covers) fail_with(r, "not a partition near " + cs.witness->cycles());
  return r;
}

std::string label_text(const OrbitLabel& l) {
  if (l.kind == OrbitLabel::Kind::Class)
    return "C_n(" + l.seed.cycles() + ") * " + l.hat.cycles();
  return "O_n(" + beta_word(l.indices) + ") * " + l.hat.cycles();
}

Report cmd_orbits(const CommandRequest& req) {
  const int n = req.args[0], k = req.args[1];
  need(n >= 0 && k >= 0 && n + k <= 4, "orbits needs n, k >= 0 and n + k <= 4");
  gate(req, n + k == 4, "orbits with n + k = 4");
  auto r = make("orbits", params({{"n", n}, {"k", k}}));
  const auto d = orbit_decomposition(n, k);
  r.payload["count"] = d.count();
  r.verdict = Verdict::Pass;
  std::vector<std::string> labels(d.count());
  if (k == 0) {
    const auto c = class_count(n);
    r.payload["predicted"] = c.get_str();
    if (BigInt(static_cast<unsigned long>(d.count())) != c)
      fail_with(r, std::to_string(d.count()) + " orbits vs " + c.get_str());
  } else {
    const auto p = predicted_orbit_count(n, k);
    const auto s = structured_labeling(d, n, k);
    const BigInt count(static_cast<unsigned long>(d.count()));
    r.payload["predicted_corrected"] = p.corrected.get_str();
    r.payload["predicted_literal"] = p.literal.get_str();
    r.payload["literal_matches"] = p.literal == count;
    r.payload["labeling_bijective"] = s.bijective;
    for (const auto& l : s.labels) labels[l.orbit] = label_text(l);
    if (p.corrected != count)
      fail_with(r, std::to_string(d.count()) + " orbits vs " + p.corrected.get_str());
    if (!s.bijective) fail_with(r, s.witness.value_or("labeling not bijective"));
  }
  Json list = Json::array();
  r.table.header = {"index", "representative", "size", "label"};
  for (std::size_t i = 0; i < d.count(); ++i) {
    const auto& o = d.orbits[i];
    Json entry{{"representative", elem(o.representative)}, {"size", o.elements.size()}};
    if (k > 0) entry["label"] = labels[i];
    list.push_back(std::move(entry));
    r.table.rows.push_back({std::to_string(i), o.representative.cycles(),
                            std::to_string(o.elements.size()), labels[i]});
  }
  r.payload["orbits"] = std::move(list);
  return r;
}

Report cmd_centralizer_basis(const CommandRequest& req) {
  const int n = req.args[0], k = req.args[1];
  need(n >= 0 && k >= 0 && n + k <= 4, "centralizer-basis needs n, k >= 0 and n + k <= 4");
  gate(req, n + k == 4, "centralizer-basis with n + k = 4");
  auto r = make("centralizer-basis", params({{"n", n}, {"k", k}}));
  const auto d = orbit_decomposition(n, k);
  r.verdict = Verdict::Pass;
  Json vectors = Json::array();
  r.table.header = {"index", "representative", "size"};
  for (std::size_t i = 0; i < d.count(); ++i) {
    const auto v = orbit_sum(d.orbits[i]);
    if (!centralizes(v, SubgroupSpec::embedded(n)))
      fail_with(r, "orbit sum of " + d.orbits[i].representative.cycles() + " does not centralize");
    vectors.push_back(Json{{"representative", d.orbits[i].representative.cycles()},
                           {"size", d.orbits[i].elements.size()},
                           {"terms", terms(v)}});
    r.table.rows.push_back({std::to_string(i), d.orbits[i].representative.cycles(),
                            std::to_string(d.orbits[i].elements.size())});
  }
  r.payload["dimension"] = d.count();
  const bool check_closure = n + k <= 3;
  r.payload["closure_checked"] = check_closure;
  if (check_closure) {
    const auto c = check_basis_closure(n, k);
    r.payload["closed"] = c.closed;
    if (!c.closed) fail_with(r, c.witness.value_or("basis not closed"));
  }
  r.payload["vectors"] = std::move(vectors);
  return r;
}

Report cmd_presentation(const CommandRequest& req) {
  const int n = req.args[0];
  need(n >= 0 && n <= 4, "presentation needs 0 <= n <= 4");
  auto r = make("presentation", params({{"n", n}}));
  const auto p = check_presentation(n);
  Json list = Json::array();
  r.table.header = {"relation", "i", "j", "k", "base", "holds"};
  for (const auto& x : p.instances) {
    list.push_back(Json{{"relation", x.family}, {"i", x.i}, {"j", x.j}, {"k", x.k},
                        {"base", x.base}, {"holds", x.holds}});
    r.table.rows.push_back({std::to_string(x.family), std::to_string(x.i), std::to_string(x.j),
                            std::to_string(x.k), x.base, x.holds ? "true" : "false"});
  }
  Json untestable = Json::array();
  for (const auto& x : p.untestable)
    untestable.push_back(Json{{"relation", x.family}, {"i", x.i}, {"j", x.j}, {"k", x.k}});
  std::size_t root_failures = 0;
  for (const auto& x : p.root_first) root_failures += x.holds ? 0 : 1;
  r.payload["instances"] = std::move(list);
  r.payload["untestable"] = std::move(untestable);
  r.payload["root_first_indexing"] =
      Json{{"all_hold", p.root_first_all_hold()}, {"failures", root_failures}};
  r.verdict = Verdict::Pass;
  if (const auto* f = p.first_failure()) {
    std::ostringstream w;
    w << "relation (" << f->family << ") i=" << f->i << " j=" << f->j << " k=" << f->k
      << ": base " << f->base << " does not have the stated order";
    fail_with(r, w.str());
  }
  return r;
}

Report cmd_mackey(const CommandRequest& req) {
  const int n = req.args[0];
  need(n >= 1 && n <= 3, "mackey needs 1 <= n <= 3");
  auto r = make("mackey", params({{"n", n}}));
  const auto m = mackey_decomposition(n);
  Json list = Json::array();
  r.table.header = {"rep", "intersection_order", "type", "dimension"};
  for (const auto& s : m.summands) {
    list.push_back(Json{{"rep", s.rep.cycles()},
                        {"intersection_order", s.intersection.size()},
                        {"type", summand_type_name(s.type)},
                        {"dimension", s.dimension.get_str()}});
    r.table.rows.push_back({s.rep.cycles(), std::to_string(s.intersection.size()),
                            summand_type_name(s.type), s.dimension.get_str()});
  }
  r.payload["summands"] = std::move(list);
  r.payload["id_summands"] = m.id_summands;
  r.payload["trivial_summands"] = m.trivial_summands;
  r.payload["total_dimension"] = m.total_dimension.get_str();
  r.payload["ambient_order"] = m.ambient_order.get_str();
  r.payload["census_ok"] = m.census_ok;
  r.payload["audit_ok"] = m.audit_ok;
  r.payload["hat_cosets_regular"] = m.hat_cosets_regular;
  r.verdict = Verdict::Pass;
  if (!m.census_ok)
    fail_with(r, std::to_string(m.id_summands) + " Id summands and " +
                     std::to_string(m.trivial_summands) + " trivial-intersection summands");
  if (!m.audit_ok) fail_with(r, "dimension total " + m.total_dimension.get_str());
  if (!m.hat_cosets_regular) fail_with(r, "a hat double coset is larger than b A_n");
  return r;
}

void check_tensor_args(int n, int k, int l) {
  need(n >= 0 && k >= 0 && l >= 0, "n, k, l must be >= 0");
  if (l > n) throw UsageError("hom space empty: l = " + std::to_string(l) + " exceeds n = " +
                              std::to_string(n));
}

Json tensor_json(const TensorBasisElement& t) {
  return Json{{"left", t.left.cycles()}, {"b", t.chain.cycles()}, {"I", t.indices}};
}

Report cmd_tensor_basis(const CommandRequest& req) {
  const int n = req.args[0], k = req.args[1], l = req.args[2];
  check_tensor_args(n, k, l);
  auto r = make("tensor-basis", params({{"n", n}, {"k", k}, {"l", l}}));
  const auto basis = tensor_basis(n, k, l);
  const auto predicted = tensor_basis_size(n, k, l);
  r.payload["size"] = basis.size();
  r.payload["predicted_size"] = predicted.get_str();
  Json list = Json::array();
  r.table.header = {"left", "b", "I"};
  for (const auto& t : basis) {
    list.push_back(tensor_json(t));
    r.table.rows.push_back({t.left.cycles(), t.chain.cycles(), index_set(t.indices)});
  }
  r.payload["elements"] = std::move(list);
  r.verdict = Verdict::Pass;
  if (BigInt(static_cast<unsigned long>(basis.size())) != predicted)
    fail_with(r, std::to_string(basis.size()) + " elements vs " + predicted.get_str());
  return r;
}

Report cmd_end_basis(const CommandRequest& req) {
  const int n = req.args[0], k = req.args[1], l = req.args[2];
  check_tensor_args(n, k, l);
  auto r = make("end-basis", params({{"n", n}, {"k", k}, {"l", l}}));
  const auto e = end_ind_res_basis(n, k, l);
  const auto action = tensor_action_is_group_action(n, k, l, n - l);
  r.payload["dimension"] = e.dimension;
  r.payload["tensor_basis_size"] = e.tensor_basis_size;
  r.payload["acting"] = e.acting.name();
  r.payload["index_set_changes"] = e.index_set_changes;
  r.payload["action_is_group_action"] = action.is_action;
  r.verdict = Verdict::Pass;
  if (!action.is_action) fail_with(r, action.witness.value_or("not a group action"));
  if (l == 0) {
    auto expected = centralizer_algebra_basis(n, k);
    auto got = e.algebra_vectors;
    auto by_min = [](const AlgebraElement& a, const AlgebraElement& b) {
      return a.terms().begin()->first < b.terms().begin()->first;
    };
    std::sort(expected.begin(), expected.end(), by_min);
    std::sort(got.begin(), got.end(), by_min);
    const bool match = expected == got;
    r.payload["matches_centralizer_basis"] = match;
    if (!match) fail_with(r, "orbit sums differ from the centralizer-algebra basis");
  } else if (n <= 2) {
    const auto literal = tensor_action_is_group_action(n, k, l, n);
    r.payload["full_A_n_formula_is_group_action"] = literal.is_action;
  }
  Json vectors = Json::array();
  r.table.header = {"orbit", "left", "b", "I"};
  for (std::size_t i = 0; i < e.orbits.size(); ++i) {
    Json v = Json::array();
    for (const auto& t : e.orbits[i]) {
      auto entry = tensor_json(t);
      entry["coefficient"] = "1/1";
      v.push_back(std::move(entry));
      r.table.rows.push_back({std::to_string(i), t.left.cycles(), t.chain.cycles(),
                              index_set(t.indices)});
    }
    vectors.push_back(std::move(v));
  }
  r.payload["vectors"] = std::move(vectors);
  return r;
}

Report cmd_d_gens(const CommandRequest& req) {
  const int n = req.args[0], m = req.args[1];
  need(n >= 1 && m > n && m <= 4, "d-gens needs 1 <= n < m <= 4");
  auto r = make("d-gens", params({{"n", n}, {"m", m}}));
  const auto gens = d_generators(n, m);
  r.payload["pairing"] = "End_" + std::to_string(n) + "(Ind^" + std::to_string(m - n) + ")";
  r.payload["literal_pairing"] =
      "End_" + std::to_string(n) + "(Ind^" + std::to_string(m - n - 1) + ")";
  r.verdict = Verdict::Pass;
  Json list = Json::array();
  r.table.header = {"family", "label", "size"};
  for (const auto& g : gens) {
    const char* family = g.family == DGenerator::Family::HatSwap ? "hat_swap" : "orbit_sum";
    list.push_back(Json{{"family", family}, {"label", g.label}, {"seed", g.seed.cycles()},
                        {"terms", terms(g.element)}});
    r.table.rows.push_back({family, g.label, std::to_string(g.element.size())});
    if (!centralizes(g.element, SubgroupSpec::embedded(n)))
      fail_with(r, g.label + " does not centralize A_" + std::to_string(n));
  }
  r.payload["generators"] = std::move(list);
  if (m <= 3) {
    const auto s = spanning_check(n, m);
    r.payload["spanning"] = Json{{"centralizer_dimension", s.centralizer_dimension},
                                 {"d_dimension", s.d_dimension},
                                 {"class_sums", s.class_sums},
                                 {"product_rank", s.product_rank},
                                 {"spans", s.spans},
                                 {"dimensions_multiply", s.dimensions_multiply}};
    if (!s.spans)
      fail_with(r, "class sums times D span " + std::to_string(s.product_rank) + " of " +
                       std::to_string(s.centralizer_dimension) + " dimensions");
  }
  return r;
}

Report cmd_power_table(const CommandRequest& req) {
  const int n = req.args[0], max_k = req.args[1];
  need(n >= 0 && n <= 3 && max_k >= 1 && max_k <= 16,
       "power-table needs 0 <= n <= 3 and 1 <= max_k <= 16");
  auto r = make("power-table", params({{"n", n}, {"max_k", max_k}}));
  const auto rows = power_table(n, max_k);
  const auto o = rows.front().value;
  const auto& lead = o.terms().begin()->first;
  bool any_asserted = false;
  Json list = Json::array();
  r.table.header = {"k", "multiple_of_o", "value"};
  for (const auto& row : rows) {
    const Rational c = row.value.coefficient(lead);
    const bool multiple = c != 0 && row.value == c * o;
    Json entry{{"k", row.k}, {"asserted", row.asserted}};
    if (row.asserted) entry["holds"] = row.holds;
    entry["multiple_of_o"] = multiple ? Json(rat(c)) : Json(nullptr);
    entry["terms"] = terms(row.value);
    list.push_back(std::move(entry));
    r.table.rows.push_back({std::to_string(row.k), multiple ? rat(c) : "", row.value.to_string()});
    std::string line = "k=" + std::to_string(row.k) + ": ";
    if (multiple) line += c.get_str() + "*o = ";
    r.text_lines.push_back(line + row.value.to_string());
    any_asserted = any_asserted || row.asserted;
    if (row.asserted && !row.holds)
      fail_with(r, "k=" + std::to_string(row.k) + " power is not 2^(k-1) o");
  }
  r.payload["o"] = terms(o);
  r.payload["rows"] = std::move(list);
  if (r.verdict != Verdict::Fail) r.verdict = any_asserted ? Verdict::Pass : Verdict::Info;
  return r;
}

Report cmd_opposite_check(const CommandRequest& req) {
  const int n = req.args[0], k = req.args[1];
  need(n >= 0 && k >= 0 && n + k <= 3, "opposite-check needs n, k >= 0 and n + k <= 3");
  auto r = make("opposite-check", params({{"n", n}, {"k", k}}));
  const auto o = opposite_check(n, k);
  r.payload["ind_dimension"] = o.ind_dimension;
  r.payload["res_dimension"] = o.res_dimension;
  r.payload["triples"] = o.triples;
  r.payload["transposed"] = o.transposed;
  r.payload["commutative"] = o.commutative;
  r.table.header = {"ind_dimension", "res_dimension", "triples", "transposed", "commutative"};
  r.table.rows.push_back({std::to_string(o.ind_dimension), std::to_string(o.res_dimension),
                          std::to_string(o.triples), o.transposed ? "true" : "false",
                          o.commutative ? "true" : "false"});
  r.verdict = Verdict::Pass;
  if (!o.transposed) fail_with(r, o.witness.value_or("structure constants differ"));
  return r;
}

// ---- verify-all ----

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

Check from_report(const std::string& name, const Report& r) {
  return {name, r.verdict == Verdict::Fail ? Verdict::Fail : Verdict::Pass, r.witness.value_or("")};
}

Check check_bool(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? Verdict::Pass : Verdict::Fail, ok ? "" : detail};
}

Report sub(const CommandRequest& parent, const std::string& name, std::vector<int> args) {
  CommandRequest req = parent;
  req.subcommand = name;
  req.args = std::move(args);
  return dispatch(req);
}

Report cmd_verify_all(const CommandRequest& req) {
  auto r = make("verify-all", Json::object());
  r.parameters["seed"] = req.seed;
  r.parameters["allow_large"] = req.allow_large;
  std::vector<Check> checks;

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
      const auto size = enumerate_group(n).size();
      if (BigInt(static_cast<unsigned long>(size)) != 2 * group_order(n - 1) * group_order(n - 1)) {
        ok = false;
        detail = "|A_" + std::to_string(n) + "| = " + std::to_string(size);
      }
    }
    checks.push_back(check_bool("group-orders n=1..4", ok, detail));
  }
  for (int n = 1; n <= 4; ++n)
    checks.push_back(from_report("presentation " + std::to_string(n), sub(req, "presentation", {n})));
  for (int n = 1; n <= (req.allow_large ? 4 : 3); ++n)
    checks.push_back(from_report("center " + std::to_string(n), sub(req, "center", {n})));
  for (int n = 1; n <= 3; ++n)
    checks.push_back(check_bool("centralizer " + std::to_string(n),
                                group_centralizer(n, 1) == centralizer_closed_form(n),
                                "centralizer of A_" + std::to_string(n) + " differs"));
  for (int n = 1; n <= (req.allow_large ? 4 : 3); ++n)
    checks.push_back(from_report("classes " + std::to_string(n), sub(req, "classes", {n})));
  for (auto [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}})
    checks.push_back(from_report("right-cosets " + std::to_string(n) + " " + std::to_string(l),
                                 sub(req, "right-cosets", {n, l})));
  for (int n = 1; n <= 3; ++n)
    checks.push_back(from_report("double-cosets " + std::to_string(n), sub(req, "double-cosets", {n})));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
    checks.push_back(from_report("orbits " + std::to_string(n) + " " + std::to_string(k),
                                 sub(req, "orbits", {n, k})));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
    checks.push_back(from_report("centralizer-basis " + std::to_string(n) + " " + std::to_string(k),
                                 sub(req, "centralizer-basis", {n, k})));
  for (int n = 1; n <= 3; ++n)
    checks.push_back(from_report("mackey " + std::to_string(n), sub(req, "mackey", {n})));
  checks.push_back(from_report("power-table 1 7", sub(req, "power-table", {1, 7})));
  for (int n = 1; n <= 3; ++n) {
    const auto b = beta(n + 1, n + 1);
    const auto small = orbit(b, SubgroupSpec::embedded(n));
    const auto large = orbit(b, SubgroupSpec::full());
    const bool ok = small.elements == large.elements &&
                    centralizes(orbit_sum(small), SubgroupSpec::full());
    checks.push_back(check_bool("orbit-stability " + std::to_string(n), ok,
                                "orbit of beta_" + std::to_string(n + 1) + " changes or is not central"));
  }
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 2}})
    checks.push_back(from_report("end-basis " + std::to_string(n) + " " + std::to_string(k) + " " +
                                     std::to_string(l),
                                 sub(req, "end-basis", {n, k, l})));
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}})
    checks.push_back(from_report("tensor-basis " + std::to_string(n) + " " + std::to_string(k) +
                                     " " + std::to_string(l),
                                 sub(req, "tensor-basis", {n, k, l})));
  {
    bool rejected = false;
    try {
      tensor_basis(1, 2, 2);
    } catch (const EmptyHomSpace&) {
      rejected = true;
    }
    checks.push_back(check_bool("empty hom space l > n", rejected, "(1,2,2) was accepted"));
  }
  checks.push_back(from_report("opposite-check 1 1", sub(req, "opposite-check", {1, 1})));
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}})
    checks.push_back(from_report("d-gens " + std::to_string(n) + " " + std::to_string(m),
                                 sub(req, "d-gens", {n, m})));
  {
    std::mt19937_64 rng(req.seed);
    std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << 15) - 1);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 200 && ok; ++t) {
      const auto a = TreeAutomorphism::from_word(4, word(rng));
      const auto b = TreeAutomorphism::from_word(4, word(rng));
      const auto c = TreeAutomorphism::from_word(4, word(rng));
      if ((a * b) * c != a * (b * c) ||
          to_permutation(a * b) != compose(to_permutation(a), to_permutation(b))) {
        ok = false;
        detail = a.swap_word() + " " + b.swap_word() + " " + c.swap_word();
      }
    }
    checks.push_back(check_bool("random associativity and homomorphism n=4", ok, detail));
  }

  Json list = Json::array();
  std::size_t failed = 0;
  r.table.header = {"check", "verdict", "detail"};
  for (const auto& c : checks) {
    list.push_back(Json{{"check", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
    r.table.rows.push_back({c.name, verdict_name(c.verdict), c.detail});
    if (c.verdict == Verdict::Fail) {
      if (!failed) r.witness = c.name + ": " + c.detail;
      ++failed;
    }
  }
  r.payload["checks"] = std::move(list);
  r.payload["passed"] = checks.size() - failed;
  r.payload["failed"] = failed;
  r.verdict = failed ? Verdict::Fail : Verdict::Pass;
  return r;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"enumerate", {"n"}, "List a standard subgroup of A_n", cmd_enumerate},
      {"center", {"n"}, "Brute-force center of A_n", cmd_center},
      {"classes", {"n"}, "Conjugacy classes of A_n", cmd_classes},
      {"class-count", {"n"}, "Class count from the recursion", cmd_class_count},
      {"right-cosets", {"n", "l"}, "Right cosets of A_n in A_{n+l+1}", cmd_right_cosets},
      {"double-cosets", {"n"}, "(A_n, A_n) double cosets of A_{n+1}", cmd_double_cosets},
      {"orbits", {"n", "k"}, "Orbits of A_n acting on A_{n+k} by conjugation", cmd_orbits},
      {"centralizer-basis", {"n", "k"}, "Orbit-sum basis of Z(C A_{n+k}, C A_n)", cmd_centralizer_basis},
      {"presentation", {"n"}, "Evaluate the presentation relations in A_n", cmd_presentation},
      {"mackey", {"n"}, "Mackey decomposition for A_n < A_{n+1}", cmd_mackey},
      {"tensor-basis", {"n", "k", "l"}, "Basis of C A_{n+k-l} (x)_{n-l} C A_n", cmd_tensor_basis},
      {"end-basis", {"n", "k", "l"}, "Basis of End_n(Ind^k Res^l)", cmd_end_basis},
      {"d-gens", {"n", "m"}, "Generators of D_{n,m}", cmd_d_gens},
      {"power-table", {"n", "max_k"}, "Powers of o_n(beta_{n+1})", cmd_power_table},
      {"opposite-check", {"n", "k"}, "Compare End_n(Ind^k) with End_n(Res^k)", cmd_opposite_check},
      {"verify-all", {}, "Run the full n <= 3 verification suite", cmd_verify_all},
  };
  return table;
}

// ---- rendering ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

std::string scalar_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Info:
      return "INFO";
  }
  return "INFO";
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : commands()) out.push_back(c.name);
    return out;
  }();
  return names;
}

Report dispatch(const CommandRequest& req) {
  const auto& table = commands();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const Command& c) { return c.name == req.subcommand; });
  if (it == table.end()) throw UsageError("unknown subcommand '" + req.subcommand + "'");
  if (req.args.size() != it->args.size())
    throw UsageError(req.subcommand + " takes " + std::to_string(it->args.size()) + " arguments");

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = it->run(req);
  } catch (const wreath::Error& e) {
    throw UsageError(e.what());
  }
  if (req.timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  return r;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["subcommand"] = report.subcommand;
      j["parameters"] = report.parameters;
      j["verdict"] = verdict_name(report.verdict);
      if (report.witness) j["witness"] = *report.witness;
      j["payload"] = report.payload;
      if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = csv_line(report.table.header);
      for (const auto& row : report.table.rows) out += csv_line(row);
      return out;
    }
    case Format::Text: {
      std::ostringstream out;
      out << report.subcommand;
      for (const auto& [k, v] : report.parameters.items()) out << " " << k << "=" << scalar_text(v);
      out << ": " << verdict_name(report.verdict) << "\n";
      if (report.witness) out << "witness: " << *report.witness << "\n";
      for (const auto& [k, v] : report.payload.items())
        if (!v.is_structured()) out << k << ": " << scalar_text(v) << "\n";
      if (report.timing_ms) out << "timing_ms: " << *report.timing_ms << "\n";
      if (!report.text_lines.empty()) {
        for (const auto& line : report.text_lines) out << line << "\n";
      } else if (!report.table.header.empty()) {
        std::vector<std::size_t> width(report.table.header.size(), 0);
        auto widen = [&](const std::vector<std::string>& row) {
          for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
        };
        widen(report.table.header);
        for (const auto& row : report.table.rows) widen(row);
        auto line = [&](const std::vector<std::string>& row) {
          std::string s;
          for (std::size_t i = 0; i < row.size(); ++i) {
            s += row[i];
            if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
          }
          out << s << "\n";
        };
        line(report.table.header);
        for (const auto& row : report.table.rows) line(row);
      }
      return out.str();
    }
  }
  return {};
}

int exit_code(const Report& report) { return report.verdict == Verdict::Fail ? 1 : 0; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the iterated wreath products A_n = S_2 wr ... wr S_2",
               "wreath"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandRequest req;
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", req.out, "Write output to PATH instead of stdout");
  app.add_flag("--allow-large", req.allow_large, "Unlock n = 4 exhaustive runs");
  app.add_option("--seed", req.seed, "Seed for randomized spot checks");
  app.add_flag("--timing", req.timing, "Include wall-clock timing in the report");

  std::map<std::string, std::vector<int>> values;
  for (const auto& c : commands()) {
    auto* s = app.add_subcommand(c.name, c.help);
    auto& slots = values[c.name];
    slots.assign(c.args.size(), 0);
    for (std::size_t i = 0; i < c.args.size(); ++i) s->add_option(c.args[i], slots[i])->required();
    if (c.name == "enumerate")
      s->add_option("--subgroup", req.subgroup,
                    "full, trivial, embedded:M, hat:M or chain:FIRST:LAST");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  req.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  req.subcommand = app.get_subcommands().front()->get_name();
  req.args = values[req.subcommand];

  Report report;
  try {
    report = dispatch(req);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto text = render(report, req.format);
  if (req.out.empty()) {
    out << text;
  } else {
    std::ofstream file(req.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << req.out << "\n";
      return 2;
    }
    file << text;
  }
  return exit_code(report);
}

}  // namespace wreath::cli
