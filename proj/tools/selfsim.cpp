// selfsim: command-line front end for the selfsim library.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (the error kind is
// printed on stderr as "error[<kind>]: <message>").

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "selfsim/selfsim.hpp"

using namespace selfsim;
using Json = nlohmann::ordered_json;

namespace {

  struct Options {
    std::string machine;
    std::string other;
    std::string word;
    std::string input;
    std::string format = "text";
    std::string gens;
    std::string matrix;
    std::string vector;
    std::string language;
    std::string multiplier;
    std::size_t cap     = 0;  // 0 selects the module default
    std::uint64_t max_exp = DEFAULT_MAX_EXP;
    std::size_t radius  = 0;
    bool        radius_set = false;
    std::size_t level   = 3;
    std::size_t genus   = 2;
    std::size_t terms   = 10;
    std::size_t cyclic  = 2;
    std::size_t k       = 2;
    std::size_t len_max = 8;
  };

  std::ostream& out = std::cout;

  std::string join(std::vector<std::string> const& v, std::string const& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? sep : "") + v[i];
    }
    return s;
  }

  MealyMachine load_machine(std::string const& source) {
    if (source.empty()) {
      throw CLI::ValidationError("--machine", "a machine is required");
    }
    if (std::filesystem::is_regular_file(source)) {
      return parse_machine(read_file(source));
    }
    return builtin(source).machine;
  }

  std::vector<std::string> split(std::string const& text, char sep) {
    std::vector<std::string> parts;
    std::string              cur;
    std::istringstream       is(text);
    while (std::getline(is, cur, sep)) {
      parts.push_back(cur);
    }
    return parts;
  }

  // Generators from --gens (comma separated words), else every state that
  // does not act trivially.
  std::vector<GroupWord> generators(MealyMachine const& m, std::string const& text) {
    std::vector<GroupWord> gens;
    if (!text.empty()) {
      for (auto const& part : split(text, ',')) {
        gens.push_back(parse_word(part));
      }
      return gens;
    }
    auto const trivial = identity_behaviour(m);
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      if (!trivial[q]) {
        gens.push_back(GroupWord::symbol(m.state_name(q)));
      }
    }
    return gens;
  }

  std::string word_text(GroupWord const& w) {
    return w.empty() ? "1" : w.to_string();
  }

  Json machine_json(MealyMachine const& m) {
    Json j;
    j["name"]     = m.name();
    j["alphabet"] = m.alphabet();
    j["states"]   = m.state_names();
    j["identity"] = m.identity_state() ? Json(m.state_name(*m.identity_state())) : Json(nullptr);
    Json rows     = Json::array();
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      for (letter_t a = 0; a < m.alphabet_size(); ++a) {
        Edge const e = m.edge(q, a);
        rows.push_back({{"state", m.state_name(q)},
                        {"input", m.alphabet()[a]},
                        {"output", m.alphabet()[e.output]},
                        {"next", m.state_name(e.next)}});
      }
    }
    j["transitions"] = rows;
    return j;
  }

  void print_machine(MealyMachine const& m, std::string const& format) {
    if (format == "json") {
      out << machine_json(m).dump(2) << '\n';
    } else if (format == "dot") {
      out << to_dot(m);
    } else {
      out << to_text(m);
    }
  }

  void print_json(Json const& j) {
    out << j.dump(2) << '\n';
  }

  std::string bool_text(bool b) {
    return b ? "true" : "false";
  }

  // Vertex orbits of a Schreier graph, in order of least vertex.
  std::vector<std::vector<std::size_t>> components(SchreierGraph const& g) {
    std::size_t const                     n = g.number_of_vertices();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto const& t : g.targets) {
      for (std::size_t v = 0; v < n; ++v) {
        adj[v].push_back(t[v]);
        adj[t[v]].push_back(v);
      }
    }
    std::vector<bool>                     seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) {
        continue;
      }
      std::vector<std::size_t> comp{s}, stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  void print_orbits(std::vector<std::pair<std::size_t, std::string>> const& orbits,
                    std::string const& format) {
    for (auto const& [size, rep] : orbits) {
      if (format == "json") {
        out << Json{{"size", size}, {"representative", rep}}.dump() << '\n';
      } else {
        out << size << '\t' << rep << '\n';
      }
    }
  }

  void print_growth(GrowthTable const& t, std::string const& format, std::size_t cap) {
    if (format == "csv") {
      out << to_csv(t);
      if (t.truncated) {
        std::cerr << "truncated (cap " << cap << "): " << t.truncation_reason << '\n';
      }
    } else if (format == "json") {
      Json j;
      j["spheres"]   = t.spheres;
      j["balls"]     = t.balls;
      j["truncated"] = t.truncated;
      j["cap"]       = cap;
      if (t.truncated) {
        j["truncation_reason"] = t.truncation_reason;
      }
      print_json(j);
    } else {
      out << "radius\tsphere\tball\n";
      for (std::size_t r = 0; r < t.spheres.size(); ++r) {
        out << r << '\t' << t.spheres[r] << '\t' << t.balls[r] << '\n';
      }
      if (t.truncated) {
        out << "truncated (cap " << cap << "): " << t.truncation_reason << '\n';
      }
    }
  }

  IntMatrix parse_matrix(std::string const& text) {
    IntMatrix m;
    for (auto const& row : split(text, ';')) {
      std::istringstream is(row);
      IntVector          r;
      std::int64_t       x = 0;
      while (is >> x) {
        r.push_back(x);
      }
      if (!is.eof()) {
        throw CLI::ValidationError("--matrix", "expected integers");
      }
      m.push_back(r);
    }
    return m;
  }

  IntVector parse_vector(std::string const& text) {
    std::istringstream is(text);
    IntVector          v;
    std::int64_t       x = 0;
    while (is >> x) {
      v.push_back(x);
    }
    if (!is.eof()) {
      throw CLI::ValidationError("--vector", "expected integers");
    }
    return v;
  }

  AutomaticStructure load_structure(Options const& o) {
    if (o.language.empty() != o.multiplier.empty()) {
      throw CLI::ValidationError("--language", "--language and --multiplier go together");
    }
    if (o.language.empty()) {
      return z2_structure();
    }
    return structure_from_text(read_file(o.language), read_file(o.multiplier));
  }

  std::string bigints(std::vector<BigInt> const& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + v[i].str();
    }
    return s + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  void cmd_show(Options const& o) {
    print_machine(load_machine(o.machine), o.format);
  }

  void cmd_classify(Options const& o) {
    auto const c = classify(load_machine(o.machine));
    if (o.format == "json") {
      print_json({{"invertible", c.invertible}, {"reversible", c.reversible},
                  {"bireversible", c.bireversible}});
    } else {
      out << "invertible: " << bool_text(c.invertible) << "\nreversible: " << bool_text(c.reversible)
          << "\nbireversible: " << bool_text(c.bireversible) << '\n';
    }
  }

  void cmd_min(Options const& o) {
    auto const m = load_machine(o.machine);
    auto const c = evaluate(m, parse_word(o.word), o.cap ? o.cap : DEFAULT_STATE_CAP);
    if (o.format == "json") {
      print_json({{"word", word_text(parse_word(o.word))},
                  {"states", c.number_of_states()},
                  {"identity", c.is_identity()},
                  {"machine", machine_json(c.machine())}});
    } else {
      print_machine(c.machine(), o.format);
    }
  }

  void cmd_prod(Options const& o) {
    if (o.other.empty()) {
      throw CLI::ValidationError("--other", "prod needs --other");
    }
    print_machine(product(load_machine(o.machine), load_machine(o.other)), o.format);
  }

  void cmd_inv(Options const& o) {
    print_machine(inverse(load_machine(o.machine)), o.format);
  }

  void cmd_dual(Options const& o) {
    print_machine(dual(load_machine(o.machine)), o.format);
  }

  void cmd_apply(Options const& o) {
    auto const m = load_machine(o.machine);
    Word const u = parse_letters(m.alphabet(), o.input);
    Word const v = selfsim::apply(evaluate(m, parse_word(o.word), o.cap ? o.cap : DEFAULT_STATE_CAP).initial(), u);
    std::string const image = letters_to_string(m.alphabet(), v);
    if (o.format == "json") {
      print_json({{"word", word_text(parse_word(o.word))},
                  {"input", letters_to_string(m.alphabet(), u)},
                  {"output", image}});
    } else {
      out << image << '\n';
    }
  }

  void cmd_wp(Options const& o) {
    auto const m  = load_machine(o.machine);
    bool const id = evaluate(m, parse_word(o.word), o.cap ? o.cap : DEFAULT_STATE_CAP).is_identity();
    if (o.format == "json") {
      print_json({{"word", word_text(parse_word(o.word))}, {"identity", id}});
    } else {
      out << "identity: " << bool_text(id) << '\n';
    }
  }

  void cmd_order(Options const& o) {
    auto const m = load_machine(o.machine);
    auto const r = order(m, parse_word(o.word), o.max_exp, o.cap ? o.cap : DEFAULT_STATE_CAP);
    if (o.format == "json") {
      print_json({{"word", word_text(parse_word(o.word))},
                  {"finite", r.finite},
                  {"order", r.finite ? Json(r.value) : Json(nullptr)},
                  {"max_exp", o.max_exp}});
    } else if (r.finite) {
      out << "order: " << r.value << '\n';
    } else {
      out << "order: unknown beyond " << r.value << " (max-exp " << o.max_exp << ")\n";
    }
  }

  void cmd_wreath(Options const& o) {
    auto const m = load_machine(o.machine);
    auto const d = wreath_decompose(m, parse_word(o.word));
    std::vector<std::string> perm, sections;
    for (letter_t a = 0; a < m.alphabet_size(); ++a) {
      perm.push_back(m.alphabet()[d.root_perm[a]]);
      sections.push_back(word_text(d.sections[a]));
    }
    if (o.format == "json") {
      print_json({{"word", word_text(parse_word(o.word))}, {"root_perm", perm}, {"sections", sections}});
    } else {
      std::vector<std::string> arrows;
      for (letter_t a = 0; a < m.alphabet_size(); ++a) {
        arrows.push_back(m.alphabet()[a] + "->" + perm[a]);
      }
      out << "root_perm: " << join(arrows, " ") << "\nsections: (" << join(sections, ", ") << ")\n";
    }
  }

  void cmd_matrix(Options const& o) {
    auto const mat = matrix_form(load_machine(o.machine), parse_word(o.word));
    if (o.format == "json") {
      print_json(Json(mat));
    } else {
      out << matrix_to_string(mat) << '\n';
    }
  }

  void cmd_nucleus(Options const& o) {
    auto const        m   = load_machine(o.machine);
    std::size_t const cap = o.cap ? o.cap : DEFAULT_NUCLEUS_CAP;
    auto const        r   = nucleus(m, cap);
    std::vector<std::string> names;
    if (r.contracting) {
      for (auto const& n : name_elements(m, r.nucleus.elements)) {
        names.push_back(n ? word_text(*n) : "?");
      }
    }
    if (o.format == "json") {
      Json elems = Json::array();
      for (std::size_t i = 0; i < names.size(); ++i) {
        elems.push_back({{"name", names[i]}, {"states", r.nucleus.elements[i].number_of_states()}});
      }
      print_json({{"contracting", r.contracting}, {"cap", r.cap}, {"size", r.nucleus.size()},
                  {"elements", elems}});
      return;
    }
    if (!r.contracting) {
      out << "contracting: unknown (not contracting up to cap " << r.cap << ")\n";
      return;
    }
    out << "contracting: true\nsize: " << r.nucleus.size() << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << names[i] << "\t(" << r.nucleus.elements[i].number_of_states() << " states)\n";
    }
  }

  void cmd_activity(Options const& o) {
    auto const c = activity_degree(load_machine(o.machine));
    if (o.format == "json") {
      print_json({{"class", c.exponential ? "exponential" : "polynomial"},
                  {"degree", c.exponential ? Json(nullptr) : Json(c.degree)},
                  {"label", c.to_string()}});
    } else {
      out << c.to_string() << '\n';
    }
  }

  void cmd_orbits(Options const& o) {
    auto const m = load_machine(o.machine);
    if (!o.input.empty()) {
      auto const orbit = orbit_on_level(m, parse_word(o.word), parse_letters(m.alphabet(), o.input));
      std::vector<std::pair<std::size_t, std::string>> rows;
      for (auto const& w : orbit) {
        rows.emplace_back(orbit.size(), letters_to_string(m.alphabet(), w));
      }
      if (o.format == "json") {
        std::vector<std::string> ws;
        for (auto const& r : rows) {
          ws.push_back(r.second);
        }
        out << Json{{"size", orbit.size()}, {"representative", ws.front()}, {"orbit", ws}}.dump()
            << '\n';
      } else {
        for (auto const& r : rows) {
          out << r.second << '\n';
        }
      }
      return;
    }
    auto const g = schreier_graph(m, generators(m, o.gens), o.level);
    std::vector<std::pair<std::size_t, std::string>> rows;
    for (auto const& c : components(g)) {
      rows.emplace_back(c.size(), g.vertex_name(c.front()));
    }
    print_orbits(rows, o.format);
  }

  void cmd_dualorbits(Options const& o) {
    auto const m = load_machine(o.machine);
    std::vector<std::pair<std::size_t, std::string>> rows;
    for (auto const& orbit : dual_orbits(m, o.level)) {
      std::vector<std::string> names;
      for (state_t q : orbit.front()) {
        names.push_back(m.state_name(q));
      }
      rows.emplace_back(orbit.size(), join(names, " "));
    }
    print_orbits(rows, o.format);
  }

  void cmd_schreier(Options const& o) {
    auto const m = load_machine(o.machine);
    auto const g = schreier_graph(m, generators(m, o.gens), o.level);
    if (o.format == "dot") {
      out << to_dot(g);
    } else if (o.format == "json") {
      std::vector<std::string> vertices;
      Json                     edges = Json::array();
      for (std::size_t v = 0; v < g.number_of_vertices(); ++v) {
        vertices.push_back(g.vertex_name(v));
      }
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        for (std::size_t v = 0; v < g.number_of_vertices(); ++v) {
          edges.push_back({{"from", vertices[v]}, {"to", vertices[g.targets[i][v]]},
                           {"label", g.generators[i]}});
        }
      }
      print_json({{"level", g.level}, {"generators", g.generators}, {"vertices", vertices},
                  {"edges", edges}, {"connected", g.is_connected()}});
    } else {
      out << "level: " << g.level << "\nvertices: " << g.number_of_vertices()
          << "\nconnected: " << bool_text(g.is_connected()) << '\n';
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        for (std::size_t v = 0; v < g.number_of_vertices(); ++v) {
          out << g.vertex_name(v) << " -" << g.generators[i] << "-> "
              << g.vertex_name(g.targets[i][v]) << '\n';
        }
      }
    }
  }

  void cmd_growth(Options const& o) {
    auto const        m      = load_machine(o.machine);
    std::size_t const radius = o.radius_set ? o.radius : 6;
    std::size_t const cap    = o.cap ? o.cap : DEFAULT_MAX_FORMS;
    print_growth(growth(m, generators(m, o.gens), radius, cap), o.format, cap);
  }

  void cmd_transitive(Options const& o) {
    auto const m = load_machine(o.machine);
    bool const t = is_level_transitive(m, generators(m, o.gens), o.level);
    if (o.format == "json") {
      print_json({{"level", o.level}, {"transitive", t}});
    } else {
      out << "transitive: " << bool_text(t) << '\n';
    }
  }

  void cmd_delta(Options const& o) {
    auto const        m = load_machine(o.machine);
    auto const        g = schreier_graph(m, generators(m, o.gens), o.level);
    std::size_t const d = four_point_delta(Graph::from(g));
    if (o.format == "json") {
      print_json({{"level", o.level}, {"vertices", g.number_of_vertices()}, {"delta", d}});
    } else {
      out << "delta: " << d << '\n';
    }
  }

  void cmd_zoo(Options const& o) {
    if (o.machine.empty()) {
      Json list = Json::array();
      for (auto const& name : builtin_names()) {
        std::string const prov = name == "f_n(k)" ? "family of bireversible machines, k >= 1"
                                                  : builtin(name).provenance;
        list.push_back({{"name", name}, {"provenance", prov}});
        if (o.format != "json") {
          out << name << '\t' << prov << '\n';
        }
      }
      if (o.format == "json") {
        print_json(list);
      }
      return;
    }
    auto const               e = builtin(o.machine);
    std::vector<std::string> relations;
    for (auto const& r : e.relations) {
      relations.push_back(word_text(r));
    }
    if (o.format == "json") {
      Json dict = Json::object();
      for (auto const& [k, v] : e.dictionary) {
        dict[k] = word_text(v);
      }
      print_json({{"name", e.name}, {"provenance", e.provenance}, {"machine", machine_json(e.machine)},
                  {"dictionary", dict}, {"relations", relations}});
    } else if (o.format == "dot") {
      out << to_dot(e.machine);
    } else {
      out << "# " << e.provenance << '\n' << to_text(e.machine);
      for (auto const& [k, v] : e.dictionary) {
        out << "# " << k << " = " << word_text(v) << '\n';
      }
      for (auto const& r : relations) {
        out << "# relation: " << r << '\n';
      }
    }
  }

  void cmd_cayley(Options const& o) {
    print_machine(cayley_machine(cyclic_group_table(o.cyclic)), o.format);
  }

  void cmd_affine(Options const& o) {
    IntMatrix const a = parse_matrix(o.matrix);
    IntVector const b = parse_vector(o.vector);
    auto const      m = affine_machine(b.size(), a, b);
    std::string const start = m.machine.state_name(m.start);
    if (o.format == "json") {
      print_json({{"start", start}, {"machine", machine_json(m.machine)}});
    } else if (o.format == "dot") {
      out << to_dot(m.machine);
    } else {
      out << "# start: " << start << '\n' << to_text(m.machine);
    }
  }

  void cmd_auto_wp(Options const& o) {
    auto const s = load_structure(o);
    auto const r = wp_quadratic(s, parse_generator_word(s.alphabet, o.word));
    std::string const nf = r.normal_form.empty() ? "1" : word_to_string(s.alphabet, r.normal_form);
    if (o.format == "json") {
      print_json({{"identity", r.is_identity}, {"normal_form", nf}});
    } else {
      out << "identity: " << bool_text(r.is_identity) << "\nnormal_form: " << nf << '\n';
    }
  }

  void cmd_auto_unique(Options const& o) {
    auto const s = make_unique(load_structure(o));
    if (o.format == "dot") {
      out << to_dot(s.language, "language");
    } else if (o.format == "json") {
      std::size_t const        len = o.radius_set ? o.radius : 4;
      std::vector<std::string> words;
      for (auto const& w : enumerate(s.language, LANGUAGE_LABEL, len)) {
        words.push_back(w.empty() ? "1" : word_to_string(s.alphabet, w));
      }
      print_json({{"states", s.language.number_of_states()}, {"max_length", len},
                  {"normal_forms", words}});
    } else {
      out << to_text(s.language, "language");
    }
  }

  void cmd_dehn(Options const& o) {
    SurfaceGroup const p(o.genus);
    Word const         w = p.parse(o.word);
    Word const         r = dehn_reduce(p, w);
    std::string const  t = r.empty() ? "1" : p.to_string(r);
    if (o.format == "json") {
      print_json({{"genus", o.genus}, {"reduced", t}, {"identity", r.empty()}});
    } else {
      out << "reduced: " << t << "\nidentity: " << bool_text(r.empty()) << '\n';
    }
  }

  void cmd_series(Options const& o) {
    out << bigints(cannon_series(o.genus, o.terms)) << '\n';
  }

  void cmd_surface_growth(Options const& o) {
    std::size_t const radius = o.radius_set ? o.radius : 3;
    std::size_t const cap    = o.cap ? o.cap : 200'000;
    print_growth(surface_growth_bfs(o.genus, radius, cap), o.format, cap);
  }

  void cmd_ft_check(Options const& o) {
    if (!o.language.empty()) {
      throw CLI::ValidationError("--language", "ft-check measures distance in Z^2 only");
    }
    auto const           s  = z2_structure();
    DistanceOracle const l1 = [](Word const& u, Word const& v) { return z2_distance(u, v); };
    auto const           r  = fellow_travel_check(s, o.k, o.len_max, l1);
    if (o.format == "json") {
      Json j{{"k", o.k}, {"len_max", o.len_max}, {"holds", r.holds}};
      if (!r.holds) {
        j["counterexample"] = {{"u", word_to_string(s.alphabet, r.u)},
                               {"v", word_to_string(s.alphabet, r.v)},
                               {"j", r.j}};
      }
      print_json(j);
    } else {
      out << "holds: " << bool_text(r.holds) << '\n';
      if (!r.holds) {
        out << "counterexample: u = " << word_to_string(s.alphabet, r.u)
            << ", v = " << word_to_string(s.alphabet, r.v) << ", j = " << r.j << '\n';
      }
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with groups generated by Mealy machines and automatic groups"};
  app.require_subcommand(1);
  Options o;

  auto machine = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--machine", o.machine, "builtin name or machine file");
    if (required) {
      opt->required();
    }
  };
  auto word = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--word", o.word, "word, e.g. \"a b^-1 (a d)^4\"");
    if (required) {
      opt->required();
    }
  };
  auto format = [&](CLI::App* c, std::vector<std::string> const& allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto cap = [&](CLI::App* c, std::string const& what) { c->add_option("--cap", o.cap, what); };
  auto gens = [&](CLI::App* c) {
    c->add_option("--gens", o.gens, "comma-separated generator words (default: nontrivial states)");
  };
  auto level = [&](CLI::App* c) { c->add_option("--level", o.level, "tree level")->capture_default_str(); };
  auto radius = [&](CLI::App* c, std::string const& what) {
    c->add_option("--radius", o.radius, what)->each([&](std::string const&) { o.radius_set = true; });
  };
  auto structure = [&](CLI::App* c) {
    c->add_option("--language", o.language, "language acceptor file (default: Z^2)");
    c->add_option("--multiplier", o.multiplier, "multiplier acceptor file");
  };
  auto genus = [&](CLI::App* c) { c->add_option("--genus", o.genus, "surface genus (>= 2)")->capture_default_str(); };

  std::vector<std::string> const TJD{"text", "json", "dot"};
  std::vector<std::string> const TJ{"text", "json"};

  std::map<CLI::App*, void (*)(Options const&)> handlers;
  auto sub = [&](std::string const& name, std::string const& desc, void (*fn)(Options const&)) {
    CLI::App* c = app.add_subcommand(name, desc);
    handlers[c] = fn;
    return c;
  };

  auto* c = sub("show", "print a machine", cmd_show);
  machine(c), format(c, TJD);
  c = sub("classify", "invertible / reversible / bireversible", cmd_classify);
  machine(c), format(c, TJ);
  c = sub("min", "minimal machine of the element given by a word", cmd_min);
  machine(c), word(c), format(c, TJD), cap(c, "canonical state cap (default 100000)");
  c = sub("prod", "product machine; state (q,r) applies r first", cmd_prod);
  machine(c), format(c, TJD);
  c->add_option("--other", o.other, "second machine")->required();
  c = sub("inv", "inverse machine", cmd_inv);
  machine(c), format(c, TJD);
  c = sub("dual", "dual machine", cmd_dual);
  machine(c), format(c, TJD);
  c = sub("apply", "image of an input word", cmd_apply);
  machine(c), word(c), format(c, TJ), cap(c, "canonical state cap (default 100000)");
  c->add_option("--input", o.input, "input letters")->required();
  c = sub("wp", "word problem", cmd_wp);
  machine(c), word(c), format(c, TJ), cap(c, "canonical state cap (default 100000)");
  c = sub("order", "order of an element", cmd_order);
  machine(c), word(c), format(c, TJ), cap(c, "canonical state cap (default 100000)");
  c->add_option("--max-exp", o.max_exp, "largest exponent tried")->capture_default_str();
  c = sub("wreath", "root permutation and sections", cmd_wreath);
  machine(c), word(c), format(c, TJ);
  c = sub("matrix", "matrix form of an element", cmd_matrix);
  machine(c), word(c), format(c, TJ);
  c = sub("nucleus", "nucleus of a contracting machine", cmd_nucleus);
  machine(c), format(c, TJ), cap(c, "canonical element cap (default 10000)");
  c = sub("activity", "activity growth class", cmd_activity);
  machine(c), format(c, TJ);
  c = sub("orbits", "orbits on a level, or the orbit of --input under --word", cmd_orbits);
  machine(c), word(c, false), gens(c), level(c), format(c, TJ);
  c->add_option("--input", o.input, "input letters");
  c = sub("dualorbits", "orbits of the dual group on state words", cmd_dualorbits);
  machine(c), level(c), format(c, TJ);
  c = sub("schreier", "Schreier graph on a level", cmd_schreier);
  machine(c), gens(c), level(c), format(c, TJD);
  c = sub("growth", "sphere and ball sizes", cmd_growth);
  machine(c), gens(c), format(c, {"text", "json", "csv"}), radius(c, "radius (default 6, at most 12)");
  cap(c, "canonical form cap (default 2000000)");
  c = sub("transitive", "level transitivity", cmd_transitive);
  machine(c), gens(c), level(c), format(c, TJ);
  c = sub("delta", "four-point constant of a Schreier graph", cmd_delta);
  machine(c), gens(c), level(c), format(c, TJ);
  c = sub("zoo", "list builtins or describe one", cmd_zoo);
  machine(c, false), format(c, TJD);
  c = sub("cayley", "Cayley machine of a cyclic group", cmd_cayley);
  format(c, TJD);
  c->add_option("--cyclic", o.cyclic, "group order n of Z/n")->capture_default_str();
  c = sub("affine", "machine of v -> A v + b on Z^n", cmd_affine);
  format(c, TJD);
  c->add_option("--matrix", o.matrix, "rows separated by ';', e.g. \"2 1; 1 1\"")->required();
  c->add_option("--vector", o.vector, "translation, e.g. \"1 0\"")->required();
  c = sub("auto-wp", "word problem via an automatic structure", cmd_auto_wp);
  word(c), structure(c), format(c, TJ);
  c = sub("auto-unique", "restrict the language to unique representatives", cmd_auto_unique);
  structure(c), format(c, TJD), radius(c, "longest normal form listed in JSON (default 4)");
  c = sub("dehn", "Dehn reduction in a surface group", cmd_dehn);
  genus(c), word(c), format(c, TJ);
  c = sub("series", "growth series coefficients of a surface group", cmd_series);
  genus(c), format(c, TJ);
  c->add_option("--terms", o.terms, "last coefficient index")->capture_default_str();
  c = sub("surface-growth", "sphere sizes of a surface group by enumeration", cmd_surface_growth);
  genus(c), format(c, {"text", "json", "csv"}), radius(c, "radius (default 3)");
  cap(c, "element cap (default 200000)");
  c = sub("ft-check", "fellow traveller check for Z^2", cmd_ft_check);
  structure(c), format(c, TJ);
  c->add_option("--k", o.k, "distance bound")->capture_default_str();
  c->add_option("--len-max", o.len_max, "longest word checked")->capture_default_str();

  try {
    app.parse(argc, argv);
    for (auto const& [cmd, fn] : handlers) {
      if (cmd->parsed()) {
        fn(o);
      }
    }
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::Error const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (ResourceError const& e) {
    std::cerr << "error[" << to_string(e.kind()) << "]: " << e.what() << " (cap " << e.cap() << ")\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
