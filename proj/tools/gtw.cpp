// Command-line front end for the group theory workbench.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtw/morphisms.hpp"
#include "gtw/presentations.hpp"
#include "gtw/products.hpp"
#include "gtw/snf.hpp"
#include "gtw/stallings.hpp"
#include "gtw/verify.hpp"
#include "gtw/witnesses.hpp"
#include "gtw/words.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

std::vector<gtw::Word> load_subgroup(const std::string& path, gtw::Alphabet a) {
  std::vector<gtw::Word> gens;
  for (const std::string& line : content_lines(read_file(path)))
    gens.push_back(gtw::parse_word(a, line));
  return gens;
}

gtw::FreeEndo load_endo(const std::string& path, gtw::Alphabet a) {
  return gtw::parse_endo(a, read_file(path));
}

/// Endo files may hold several maps separated by blank lines.
std::vector<gtw::FreeEndo> load_endo_family(const std::string& path, gtw::Alphabet a) {
  std::vector<gtw::FreeEndo> family;
  std::string text = read_file(path), block;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\r\n") != std::string::npos)
      family.push_back(gtw::parse_endo(a, block));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      flush();
    else
      block += line + "\n";
  }
  flush();
  if (family.empty()) throw CLI::ValidationError("no maps in " + path);
  return family;
}

void print_graph(const gtw::CoreGraph& g) {
  std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
            << "\nrank: " << g.rank() << "\n";
  if (auto idx = g.index())
    std::cout << "index: " << *idx << "\n";
  else
    std::cout << "index: infinite\n";
  std::cout << "basis:\n";
  for (const gtw::Word& w : g.generators()) std::cout << "  " << w.str() << "\n";
}

void print_probe(const gtw::ProbeReport& rep) {
  std::cout << (rep.passed ? "passed" : "FAILED") << " (candidates: " << rep.candidates_tested
            << ", bounds: " << rep.max_generator_count << " generators, length "
            << rep.max_word_length << ")\n";
  for (const auto& w : rep.witnesses) {
    std::cout << "  witness: rank " << w.subgroup_rank << " vs " << w.compared_rank << " from";
    for (const auto& s : w.subgroup_generators) std::cout << " " << s;
    std::cout << "\n";
  }
}

/// "<factor> <generator> -> (w1 ; w2 ; ...)", indices 1-based; missing
/// generators act as the identity.
gtw::ProductEndo load_product_endo(const std::string& path, const gtw::ProductGroup& g) {
  std::vector<std::vector<gtw::ProductElement>> images;
  for (const gtw::Factor& f : g.factors) {
    std::vector<gtw::ProductElement> row;
    for (int gen = 1; gen <= f.rank(); ++gen) {
      gtw::ProductElement e = gtw::identity_element(g);
      e.components[&f - g.factors.data()] = gtw::Word(f.alphabet(), {gen});
      row.push_back(std::move(e));
    }
    images.push_back(std::move(row));
  }
  for (const std::string& line : content_lines(read_file(path))) {
    std::istringstream in(line);
    int factor = 0, gen = 0;
    std::string arrow;
    if (!(in >> factor >> gen >> arrow) || arrow != "->")
      throw CLI::ValidationError("bad image line: " + line);
    std::string rest;
    std::getline(in, rest);
    if (factor < 1 || factor > static_cast<int>(g.factors.size()) || gen < 1 ||
        gen > g.factors[factor - 1].rank())
      throw CLI::ValidationError("image indices out of range: " + line);
    images[factor - 1][gen - 1] = gtw::parse_product_element(g, rest);
  }
  return gtw::ProductEndo(g, std::move(images));
}

int run_verify(const std::string& profile_name, const std::vector<std::string>& checks,
               const std::string& json_path) {
  gtw::VerifyProfile profile = gtw::profile_from_name(profile_name);
  std::vector<gtw::CheckResult> results = gtw::run_checks(profile, checks);

  bool any_fail = false;
  for (const gtw::CheckResult& r : results) {
    std::cout << r.id << ": " << gtw::to_string(r.status);
    std::cout << " (" << r.runtime_seconds << "s)";
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    any_fail = any_fail || r.failed();
  }

  if (!json_path.empty()) {
    json doc;
    doc["version"] = "0.1.0";
    doc["profile"] = profile.name;
    doc["checks"] = json::array();
    for (const gtw::CheckResult& r : results) {
      json c;
      c["id"] = r.id;
      c["status"] = gtw::to_string(r.status);
      c["detail"] = r.detail;
      c["runtime_seconds"] = r.runtime_seconds;
      c["numbers"] = json::object();
      for (const auto& [k, v] : r.numbers) c["numbers"][k] = v;
      doc["checks"].push_back(std::move(c));
    }
    std::ofstream out(json_path);
    out << doc.dump(2) << "\n";
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group theory workbench"};
  app.require_subcommand(1);

  int rank = 2, length = 8, depth = 3, probe_gens = 2, probe_len = 4, max_cosets = 10000;
  std::string file1, file2, word_text, spec, case_id, profile = "default", json_path;
  std::vector<std::string> checks;

  auto add_rank = [&](CLI::App* cmd) { cmd->add_option("--rank", rank, "alphabet rank"); };

  auto* fold = app.add_subcommand("fold", "fold a subgroup file into its core graph");
  fold->add_option("file", file1)->required();
  add_rank(fold);

  auto* rank_cmd = app.add_subcommand("rank", "rank of the subgroup in a file");
  rank_cmd->add_option("file", file1)->required();
  add_rank(rank_cmd);

  auto* member = app.add_subcommand("member", "test membership of a word in a subgroup");
  member->add_option("word", word_text)->required();
  member->add_option("file", file1)->required();
  add_rank(member);

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of two subgroup files");
  intersect_cmd->add_option("file-h", file1)->required();
  intersect_cmd->add_option("file-k", file2)->required();
  add_rank(intersect_cmd);

  auto* index_cmd = app.add_subcommand("index", "index of the subgroup in a file");
  index_cmd->add_option("file", file1)->required();
  add_rank(index_cmd);

  auto* probe_inert_cmd = app.add_subcommand("probe-inert", "bounded inertia probe");
  probe_inert_cmd->add_option("file", file1)->required();
  add_rank(probe_inert_cmd);
  probe_inert_cmd->add_option("--gens", probe_gens, "max generators per candidate");
  probe_inert_cmd->add_option("--len", probe_len, "max candidate word length");

  auto* probe_comp_cmd = app.add_subcommand("probe-compress", "bounded compression probe");
  probe_comp_cmd->add_option("file", file1)->required();
  add_rank(probe_comp_cmd);
  probe_comp_cmd->add_option("--gens", probe_gens, "max adjoined generators");
  probe_comp_cmd->add_option("--len", probe_len, "max adjoined word length");

  auto* fix_cmd = app.add_subcommand("fix", "fixed-subgroup approximation of maps in a file");
  fix_cmd->add_option("file", file1)->required();
  add_rank(fix_cmd);
  fix_cmd->add_option("--len", length, "length bound");

  auto* eq_cmd = app.add_subcommand("eq", "equalizer of two map files");
  eq_cmd->add_option("file-1", file1)->required();
  eq_cmd->add_option("file-2", file2)->required();
  add_rank(eq_cmd);
  eq_cmd->add_option("--len", length, "length bound");

  auto* image_cmd = app.add_subcommand("image", "image subgroup of a map");
  image_cmd->add_option("file", file1)->required();
  add_rank(image_cmd);

  auto* beta0_cmd = app.add_subcommand("beta0", "minimal-image composition search");
  beta0_cmd->add_option("file", file1)->required();
  add_rank(beta0_cmd);
  beta0_cmd->add_option("--depth", depth, "composition depth");

  auto* bh_cmd = app.add_subcommand("bh-check", "fixed-rank bound check for a map catalogue");
  bh_cmd->add_option("file", file1)->required();
  add_rank(bh_cmd);
  bh_cmd->add_option("--len", length, "length bound");

  auto* tc_cmd = app.add_subcommand("tc", "coset enumeration");
  tc_cmd->add_option("presentation", file1)->required();
  tc_cmd->add_option("subgroup", file2)->required();
  tc_cmd->add_option("--max-cosets", max_cosets, "coset cap");

  auto* rs_cmd = app.add_subcommand("rs", "subgroup presentation by rewriting");
  rs_cmd->add_option("presentation", file1)->required();
  rs_cmd->add_option("subgroup", file2)->required();
  rs_cmd->add_option("--max-cosets", max_cosets, "coset cap");

  auto* abel_cmd = app.add_subcommand("abel", "abelian invariants of a presentation");
  abel_cmd->add_option("presentation", file1)->required();

  auto* dehn_cmd = app.add_subcommand("dehn", "triviality by Dehn reduction");
  dehn_cmd->add_option("presentation", file1)->required();
  dehn_cmd->add_option("word", word_text)->required();

  auto* pieces_cmd = app.add_subcommand("pieces", "piece statistics of a one-relator presentation");
  pieces_cmd->add_option("presentation", file1)->required();

  auto* klein_cmd = app.add_subcommand("klein", "Klein bottle normal form of a word");
  klein_cmd->add_option("word", word_text)->required();

  auto* prod_cmd = app.add_subcommand("prod", "product group operations");
  prod_cmd->require_subcommand(1);
  auto* prod_rank = prod_cmd->add_subcommand("rank", "rank of a product group");
  prod_rank->add_option("spec", spec)->required();
  auto* prod_type = prod_cmd->add_subcommand("type", "euclidean/hyperbolic/mixed classification");
  prod_type->add_option("spec", spec)->required();
  auto* prod_center = prod_cmd->add_subcommand("center", "center description");
  prod_center->add_option("spec", spec)->required();
  auto* prod_fix = prod_cmd->add_subcommand("fix", "certified fixed elements of a product map");
  prod_fix->add_option("spec", spec)->required();
  prod_fix->add_option("images", file1, "image file: '<factor> <gen> -> (w1 ; w2)' lines")
      ->required();
  prod_fix->add_option("--len", length, "total length bound");
  auto* prod_dec = prod_cmd->add_subcommand("decompose", "rectangular decomposition");
  prod_dec->add_option("spec", spec)->required();
  prod_dec->add_option("images", file1)->required();
  auto* prod_wit = prod_cmd->add_subcommand("witness", "named witness constructions");
  prod_wit->add_option("case-id", case_id)->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the verification suite");
  verify_cmd->add_option("--profile", profile, "quick|default|deep");
  verify_cmd->add_option("--json", json_path, "write a JSON report here");
  verify_cmd->add_option("--check", checks, "run only the named checks (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    gtw::Alphabet a(rank);
    if (fold->parsed()) {
      print_graph(gtw::CoreGraph::from_generators(a, load_subgroup(file1, a)));
    } else if (rank_cmd->parsed()) {
      std::cout << gtw::CoreGraph::from_generators(a, load_subgroup(file1, a)).rank() << "\n";
    } else if (member->parsed()) {
      bool in = gtw::CoreGraph::from_generators(a, load_subgroup(file1, a))
                    .contains(gtw::parse_word(a, word_text));
      std::cout << (in ? "member" : "not a member") << "\n";
      return in ? 0 : 1;
    } else if (intersect_cmd->parsed()) {
      auto h = gtw::CoreGraph::from_generators(a, load_subgroup(file1, a));
      auto k = gtw::CoreGraph::from_generators(a, load_subgroup(file2, a));
      print_graph(gtw::intersect(h, k));
    } else if (index_cmd->parsed()) {
      auto idx = gtw::CoreGraph::from_generators(a, load_subgroup(file1, a)).index();
      if (idx)
        std::cout << *idx << "\n";
      else
        std::cout << "infinite\n";
    } else if (probe_inert_cmd->parsed()) {
      auto g = gtw::CoreGraph::from_generators(a, load_subgroup(file1, a));
      auto rep = gtw::probe_inert(g, {probe_gens, probe_len});
      print_probe(rep);
      return rep.passed ? 0 : 1;
    } else if (probe_comp_cmd->parsed()) {
      auto g = gtw::CoreGraph::from_generators(a, load_subgroup(file1, a));
      auto rep = gtw::probe_compressed(g, {probe_gens, probe_len});
      print_probe(rep);
      return rep.passed ? 0 : 1;
    } else if (fix_cmd->parsed()) {
      auto family = load_endo_family(file1, a);
      auto approx = gtw::fix_subgroup_approx(family, length);
      std::cout << "length bound: " << approx.length_bound
                << "\nstabilized: " << (approx.stabilized ? "yes" : "no") << "\n";
      print_graph(approx.graph);
    } else if (eq_cmd->parsed()) {
      auto f = load_endo(file1, a);
      auto g = load_endo(file2, a);
      auto words = gtw::equalizer_words({f, g}, length);
      print_graph(gtw::CoreGraph::from_generators(a, words));
    } else if (image_cmd->parsed()) {
      print_graph(gtw::image_subgroup(load_endo(file1, a)));
    } else if (beta0_cmd->parsed()) {
      auto family = load_endo_family(file1, a);
      auto res = gtw::minimal_image_search(family, depth);
      std::cout << "image rank: " << res.image_rank << "\ncomposition:";
      for (int i : res.composition) std::cout << " " << i;
      std::cout << "\nimages:\n";
      for (int i = 1; i <= rank; ++i)
        std::cout << "  " << gtw::Word(a, {i}).str() << " -> "
                  << res.endo.images()[i - 1].str() << "\n";
    } else if (bh_cmd->parsed()) {
      auto family = load_endo_family(file1, a);
      std::vector<gtw::CatalogueEntry> entries;
      for (std::size_t i = 0; i < family.size(); ++i)
        entries.push_back({"entry-" + std::to_string(i), family[i]});
      auto rep = gtw::bh_catalogue_check(entries, length);
      print_probe(rep);
      return rep.passed ? 0 : 1;
    } else if (tc_cmd->parsed()) {
      auto p = gtw::parse_presentation(read_file(file1));
      auto gens = load_subgroup(file2, p.alphabet);
      auto table = gtw::todd_coxeter(p, gens, max_cosets);
      if (table.complete())
        std::cout << "index: " << table.index() << "\n";
      else
        std::cout << "overflow at " << max_cosets << " cosets\n";
      return table.complete() ? 0 : 1;
    } else if (rs_cmd->parsed()) {
      auto p = gtw::parse_presentation(read_file(file1));
      auto gens = load_subgroup(file2, p.alphabet);
      auto table = gtw::todd_coxeter(p, gens, max_cosets);
      if (!table.complete()) {
        std::cout << "overflow at " << max_cosets << " cosets\n";
        return 1;
      }
      auto sub = gtw::reidemeister_schreier(p, table);
      std::cout << "generators: " << sub.alphabet.rank << "\nrelators:\n";
      for (const auto& rel : sub.relators) std::cout << "  " << rel.str() << "\n";
    } else if (abel_cmd->parsed()) {
      auto inv = gtw::abelianization(gtw::parse_presentation(read_file(file1)));
      std::cout << "free rank: " << inv.free_rank << "\ntorsion:";
      for (const auto& t : inv.torsion) std::cout << " " << t;
      std::cout << "\n";
    } else if (dehn_cmd->parsed()) {
      auto p = gtw::parse_presentation(read_file(file1));
      bool trivial = gtw::dehn_is_trivial(p, gtw::parse_word(p.alphabet, word_text));
      std::cout << (trivial ? "trivial" : "not trivial") << "\n";
      return trivial ? 0 : 1;
    } else if (pieces_cmd->parsed()) {
      auto rep = gtw::piece_check(gtw::parse_presentation(read_file(file1)));
      std::cout << "relator length: " << rep.relator_length
                << "\nmax piece: " << rep.max_piece_length
                << "\nC'(1/6): " << (rep.satisfies_c6 ? "yes" : "no") << "\n";
    } else if (klein_cmd->parsed()) {
      auto nf = gtw::klein_normal_form(gtw::parse_word(gtw::Alphabet(2), word_text));
      std::cout << "a^" << nf.a_exp << " b^" << nf.b_exp << "\n";
    } else if (prod_rank->parsed()) {
      std::cout << gtw::parse_product(spec).rank() << "\n";
    } else if (prod_type->parsed()) {
      switch (gtw::parse_product(spec).classify_type()) {
        case gtw::ProductGroup::Type::Euclidean: std::cout << "euclidean\n"; break;
        case gtw::ProductGroup::Type::Hyperbolic: std::cout << "hyperbolic\n"; break;
        case gtw::ProductGroup::Type::Mixed: std::cout << "mixed\n"; break;
      }
    } else if (prod_center->parsed()) {
      auto d = gtw::center(gtw::parse_product(spec));
      std::cout << d.text << " (free rank " << d.free_rank << ", torsion factors "
                << d.torsion_orders.size() << ")\n";
    } else if (prod_fix->parsed()) {
      auto g = gtw::parse_product(spec);
      auto phi = load_product_endo(file1, g);
      auto buckets = gtw::fix_words_product(phi, length);
      std::cout << "certified: " << buckets.certified.size()
                << "\nuncertain: " << buckets.uncertain.size() << "\n";
      for (const auto& e : buckets.certified) std::cout << "  " << gtw::element_str(e) << "\n";
    } else if (prod_dec->parsed()) {
      auto g = gtw::parse_product(spec);
      auto phi = load_product_endo(file1, g);
      auto res = gtw::rectangular_decompose(phi);
      if (res.decomposition) {
        std::cout << "rectangular; coordinate targets:";
        for (int t : res.decomposition->target) std::cout << " " << t + 1;
        std::cout << "\n";
        std::cout << (gtw::recomposition_matches(phi, *res.decomposition)
                          ? "recomposition matches\n"
                          : "RECOMPOSITION MISMATCH\n");
      } else {
        std::cout << "not rectangular; witness: factor " << res.witness->first + 1
                  << " generator " << res.witness->second << "\n";
      }
    } else if (prod_wit->parsed()) {
      auto in = [&](const std::vector<std::string>& ids) {
        return std::find(ids.begin(), ids.end(), case_id) != ids.end();
      };
      if (in(gtw::non_compressed_case_ids())) {
        auto rep = gtw::non_compressed_witness(case_id);
        std::cout << rep.case_id << " on " << rep.group_name << " (rank " << rep.group_rank
                  << ")\n"
                  << "generators fixed: " << (rep.generators_fixed ? "yes" : "NO") << "\n"
                  << "contained in overgroup: " << (rep.contained_in_k ? "yes" : "NO") << "\n"
                  << "fix rank: " << rep.fix_rank.lower << ".." << rep.fix_rank.upper
                  << (rep.fix_rank.exact() ? " (exact)" : "") << "\n"
                  << "overgroup rank bound: " << rep.k_rank.upper << "\n"
                  << "strict gap: " << (rep.strict ? "yes" : "NO") << "\n";
        return rep.ok() ? 0 : 1;
      }
      if (in(gtw::non_inert_case_ids())) {
        std::vector<int> lengths =
            case_id == "F2-Z-final" ? std::vector<int>{4, 6, 8, 10}
            : case_id == "Fr-NS3"   ? std::vector<int>{4, 6, 8}
                                    : std::vector<int>{2, 4, 6};
        auto rep = gtw::non_inert_witness(case_id, lengths);
        std::cout << rep.case_id << " on " << rep.group_name << "\nintersection rank growth:";
        for (auto [len, rk] : rep.growth.entries) std::cout << " L" << len << ":" << rk;
        std::cout << "\nstrictly increasing: "
                  << (rep.growth.strictly_increasing() ? "yes" : "NO") << "\n";
        if (rep.intersection_trivial_certified)
          std::cout << "trivial intersection with the cyclic factor: certified\n";
        if (case_id == "F2-Z-final")
          std::cout << "compression probe: " << (rep.fix_compressed_probe ? "passed" : "FAILED")
                    << "\n";
        return rep.growth.strictly_increasing() ? 0 : 1;
      }
      gtw::CentralTwistReport rep;
      if (case_id == "C2-F2")
        rep = gtw::central_twist_z2_f2();
      else if (case_id == "Z-F2")
        rep = gtw::central_twist_z_f2({4, 6, 8});
      else if (case_id == "C2-NS3")
        rep = gtw::central_twist_z2_ns3();
      else
        throw CLI::ValidationError("unknown case id: " + case_id);
      std::cout << rep.case_id << " on " << rep.group_name << " (rank " << rep.group_rank << ")\n";
      if (rep.fix_rank_exact) std::cout << "fixed subgroup rank: " << *rep.fix_rank_exact << "\n";
      for (auto [len, rk] : rep.growth.entries) std::cout << "L" << len << ": rank " << rk << "\n";
      std::cout << "exceeds ambient rank: " << (rep.exceeds_group_rank ? "yes" : "NO") << "\n";
      return rep.exceeds_group_rank ? 0 : 1;
    } else if (verify_cmd->parsed()) {
      return run_verify(profile, checks, json_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
