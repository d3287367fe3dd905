#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "apolar/combinatorics.hpp"
#include "apolar/groebner.hpp"
#include "apolar/poly_io.hpp"
#include "apolar/ranks.hpp"
#include "apolar/tables.hpp"

using nlohmann::json;
using namespace apolar;

namespace {

constexpr int kDefaultCap = 6;
constexpr int kExtendedCap = 7;

struct Options {
  int n = 4;
  std::string form = "det";
  std::string layout = "sym";
  std::string pairing = "diff";
  // The generator sets are Groebner bases in the reverse order; conca is
  // available and reports its failures honestly.
  std::string order = "reverse";
  std::string set = "";
  std::string space = "monhaf";
  std::string partition = "";
  std::string output = "json";
  std::string out_path = "";
  int table_id = 1;
  int t = -1;
  int max_degree = -1;
  bool extended = false;
  int threads = 0;  // accepted as a hint; the engine is deterministic
};

void write_out(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw std::runtime_error("cannot open " + opt.out_path);
  f << text << "\n";
}

RingSpec ring_of(const Options& opt) {
  if (opt.layout == "sym") return sym_ring(opt.n);
  if (opt.layout == "generic") return gen_ring(opt.n);
  throw CLI::ValidationError("--layout must be sym or generic");
}

Partition parse_partition(const std::string& s) {
  Partition p;
  size_t at = 0;
  while (at < s.size()) {
    size_t comma = s.find(',', at);
    if (comma == std::string::npos) comma = s.size();
    p.push_back(std::stoi(s.substr(at, comma - at)));
    at = comma + 1;
  }
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1])
      throw CLI::ValidationError("partition parts must be weakly decreasing");
  return p;
}

Polynomial form_poly(const Options& opt) {
  RingSpec ring = ring_of(opt);
  if (opt.form == "det") return det_poly(ring);
  if (opt.form == "perm") return perm_poly(ring);
  if (opt.form == "hafnian") return hafnian_poly(ring);
  if (opt.form.rfind("imm:", 0) == 0)
    return immanant_poly(ring, parse_partition(opt.form.substr(4)));
  throw CLI::ValidationError("--form must be det|perm|hafnian|imm:<partition>");
}

void check_cap(const Options& opt) {
  int cap = opt.extended ? kExtendedCap : kDefaultCap;
  if (opt.n < 1 || opt.n > cap)
    throw CLI::ValidationError(
        "full computations support n <= " + std::to_string(cap) +
        (opt.extended ? "" : " (use --extended for n = 7)") +
        "; requested n = " + std::to_string(opt.n));
}

json hilbert_json(const Options& opt, const Polynomial& F,
                  const HilbertSequence& h) {
  return json{{"n", opt.n},
              {"form", opt.form},
              {"layout", opt.layout},
              {"pairing", opt.pairing},
              {"hilbert", h.values},
              {"length", h.length()}};
}

std::vector<Polynomial> chosen_generators(const Options& opt) {
  std::string name = opt.set;
  if (name.empty()) {
    Pairing pairing = pairing_from_name(opt.pairing);
    if (pairing == Pairing::contraction) {
      name = "AnnCo2";
    } else {
      name = opt.form == "det" ? "V" : "Wplus";
    }
  }
  int n = opt.n;
  auto members = [&](GeneratorKind k) { return build_generator_set(k, n).members; };
  if (name == "V") return members(GeneratorKind::V);
  if (name == "W") return members(GeneratorKind::W);
  if (name == "Hdeg3") return members(GeneratorKind::Hdeg3);
  if (name == "AnnCo2") return members(GeneratorKind::AnnCo2);
  if (name == "Wplus") {
    auto gens = members(GeneratorKind::W);
    if (n >= 6)
      for (auto& g : members(GeneratorKind::Hdeg3)) gens.push_back(std::move(g));
    return gens;
  }
  throw CLI::ValidationError("--set must be V|W|Wplus|Hdeg3|AnnCo2");
}

int run_hilbert(const Options& opt) {
  check_cap(opt);
  Polynomial F = form_poly(opt);
  HilbertSequence h = hilbert_sequence(F, pairing_from_name(opt.pairing));
  write_out(opt, hilbert_json(opt, F, h).dump(2));
  return 0;
}

int run_generators(const Options& opt) {
  check_cap(opt);
  Options o = opt;
  if (o.set.empty()) o.set = "V";
  json members = json::array();
  for (const auto& g : chosen_generators(o)) members.push_back(print_poly(g, 'y'));
  write_out(opt, json{{"kind", o.set}, {"n", opt.n}, {"members", members}}.dump(2));
  return 0;
}

int run_verify(const Options& opt) {
  check_cap(opt);
  Polynomial F = form_poly(opt);
  Pairing pairing = pairing_from_name(opt.pairing);
  auto gens = chosen_generators(opt);

  int profile_cap = opt.n <= 5 ? F.degree() : 3;
  if (opt.max_degree > 0) profile_cap = std::min(profile_cap, opt.max_degree);
  GeneratorProfile profile = minimal_generator_profile(F, pairing, profile_cap);

  int verify_cap = opt.max_degree > 0 ? opt.max_degree
                                      : (opt.n <= 5 ? F.degree() : 3);
  VerifyReport rep = verify_generator_set(F, gens, pairing, verify_cap);

  json prof = json::object();
  for (const auto& [deg, cnt] : profile.counts)
    if (cnt != 0) prof[std::to_string(deg)] = cnt;
  json failures = json::array();
  for (size_t idx : rep.non_annihilating)
    failures.push_back({{"kind", "does-not-annihilate"},
                        {"generator", idx},
                        {"text", print_poly(gens[idx], 'y')}});
  for (const auto& gap : rep.gaps)
    failures.push_back({{"kind", "dimension-gap"},
                        {"degree", gap.degree},
                        {"ideal_dim", gap.ideal_dim},
                        {"ann_dim", gap.ann_dim}});

  HilbertSequence h = hilbert_sequence(F, pairing);
  json out = hilbert_json(opt, F, h);
  out["generator_profile"] = prof;
  out["checked_up_to_degree"] = verify_cap;
  out["verification"] = {{"passed", rep.passed}, {"failures", failures}};
  write_out(opt, out.dump(2));
  return rep.passed ? 0 : 2;
}

int run_groebner(const Options& opt) {
  check_cap(opt);
  Options o = opt;
  if (o.set.empty()) o.set = "V";
  auto gens = chosen_generators(o);
  GroebnerReport rep = is_groebner(gens, order_from_name(opt.order));
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"i", f.i},
                        {"j", f.j},
                        {"normal_form", print_poly(f.normal_form, 'y')}});
  write_out(opt, json{{"set", o.set},
                      {"n", opt.n},
                      {"order", order_name(order_from_name(opt.order))},
                      {"pairs_checked", rep.pairs_checked},
                      {"failures", failures}}
                     .dump(2));
  return rep.passed() ? 0 : 2;
}

int run_ranks(const Options& opt) {
  check_cap(opt);
  if (opt.form != "det" && opt.form != "perm")
    throw CLI::ValidationError("ranks supports --form det|perm");
  FormKind form = opt.form == "det" ? FormKind::det : FormKind::perm;
  RankReport r = rank_report(form, opt.n, pairing_from_name(opt.pairing));
  json out{{"n", r.n},
           {"form", opt.form},
           {"pairing", pairing_name(r.pairing)},
           {"length", r.length},
           {"max_gen_degree", r.max_gen_degree},
           {"rs_bound", rat_exact(r.rs_bound)},
           {"rs_rendered", rat_decimal(r.rs_bound, 2)},
           {"l_diff", r.l_diff}};
  if (r.profile_truncated_at)
    out["profile_truncated_at"] = *r.profile_truncated_at;
  if (r.lt_bound) {
    out["lt_bound"] = *r.lt_bound;
    out["lt_argmax"] = *r.lt_argmax;
    out["lt_claimed_argmax"] = opt.n / 2;
  }
  write_out(opt, out.dump(2));
  return 0;
}

int run_character(const Options& opt) {
  if (opt.n < 1 || opt.n > 10)
    throw CLI::ValidationError("character computations support n <= 10");
  json out;
  auto classes = conjugacy_classes(opt.n);
  json class_list = json::array(), sizes = json::array();
  for (const auto& c : classes) {
    class_list.push_back(partition_name(c.cycle_type));
    sizes.push_back(to_ll(c.size));
  }
  out["n"] = opt.n;
  out["classes"] = class_list;
  out["class_sizes"] = sizes;

  if (opt.space == "monhaf") {
    if (opt.n % 2 != 0)
      throw CLI::ValidationError("--space monhaf needs an even n");
    CharacterVector chi =
        monomial_space_character(monhaf_monomials(opt.n), sym_ring(opt.n), opt.n);
    json vals = json::array();
    for (const auto& v : chi.values) vals.push_back(to_ll(v));
    out["chi"] = vals;
    out["inner_product"] = rat_exact(character_inner(chi, chi));
    json dec = json::object();
    for (const auto& [lambda, mult] : decompose_character(chi))
      dec[partition_name(lambda)] = mult;
    out["decomposition"] = dec;
  } else if (opt.space == "irreducible") {
    Partition lambda = parse_partition(opt.partition);
    if (partition_weight(lambda) != opt.n)
      throw CLI::ValidationError("--partition must sum to n");
    CharacterVector chi = irreducible_character_vector(lambda);
    json vals = json::array();
    for (const auto& v : chi.values) vals.push_back(to_ll(v));
    out["partition"] = partition_name(lambda);
    out["chi"] = vals;
  } else if (opt.space == "table") {
    json rows = json::object();
    for (const auto& lambda : partitions_of(opt.n)) {
      CharacterVector chi = irreducible_character_vector(lambda);
      json vals = json::array();
      for (const auto& v : chi.values) vals.push_back(to_ll(v));
      rows[partition_name(lambda)] = vals;
    }
    out["table"] = rows;
  } else {
    throw CLI::ValidationError("--space must be monhaf|irreducible|table");
  }
  write_out(opt, out.dump(2));
  return 0;
}

int run_combinatorics(const Options& opt) {
  if (opt.n < 1 || opt.n > 12)
    throw CLI::ValidationError("combinatorics supports n <= 12");
  json out{{"n", opt.n}, {"catalan_n_plus_1", catalan(opt.n + 1).get_str()}};
  json counts = json::array();
  for (int t = 1; t <= opt.n; ++t) {
    if (opt.t > 0 && t != opt.t) continue;
    json row{{"t", t},
             {"doset_minors", enumerate_doset_minors(opt.n, t).size()},
             {"minor_space_dim", minor_space_dim(opt.n, t).get_str()}};
    if (opt.n <= 8)
      row["dyck_paths_with_corners"] =
          count_dyck_with_corners(opt.n + 1, t + 1).get_str();
    counts.push_back(row);
  }
  out["by_size"] = counts;
  write_out(opt, out.dump(2));
  return 0;
}

int run_tables(const Options& opt) {
  if (!table_id_supported(opt.table_id))
    throw CLI::ValidationError("supported table ids: 1..7, 9");
  TableDoc doc = emit_table(opt.table_id, opt.extended);
  if (opt.output == "md") {
    std::string text = doc.markdown;
    for (const auto& note : doc.notes) text += "\nnote: " + note;
    for (const auto& m : doc.mismatches)
      text += "\nMISMATCH at " + m.where + ": expected " + m.expected +
              ", computed " + m.actual;
    write_out(opt, text);
  } else {
    json out = json::parse(doc.json_text);
    out["notes"] = doc.notes;
    json mm = json::array();
    for (const auto& m : doc.mismatches)
      mm.push_back({{"where", m.where},
                    {"expected", m.expected},
                    {"actual", m.actual}});
    out["mismatches"] = mm;
    write_out(opt, out.dump(2));
  }
  return doc.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact apolarity toolkit for determinants, permanents, "
               "hafnians and immanants of generic (symmetric) matrices"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_form = true) {
    cmd->add_option("--n", opt.n, "matrix size");
    if (with_form) {
      cmd->add_option("--form", opt.form, "det|perm|hafnian|imm:<partition>");
      cmd->add_option("--layout", opt.layout, "sym|generic");
      cmd->add_option("--pairing", opt.pairing, "diff|contract");
    }
    cmd->add_option("--output", opt.output, "json|md");
    cmd->add_option("--out", opt.out_path, "write the report to a file");
    cmd->add_flag("--extended", opt.extended, "allow n = 7 computations");
    cmd->add_option("--threads", opt.threads, "parallelism hint (engine is deterministic)");
  };

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert sequence of the apolar algebra");
  add_common(hilbert);

  auto* generators = app.add_subcommand("generators", "emit a generator set");
  add_common(generators, false);
  generators->add_option("--set", opt.set, "V|W|Wplus|Hdeg3|AnnCo2");

  auto* verify = app.add_subcommand("verify", "check a generator set against the apolar ideal");
  add_common(verify);
  verify->add_option("--set", opt.set, "V|W|Wplus|Hdeg3|AnnCo2 (default by form)");
  verify->add_option("--max-degree", opt.max_degree, "highest slice degree to compare");

  auto* groebner = app.add_subcommand("groebner-check", "Buchberger S-pair verification");
  add_common(groebner, false);
  groebner->add_option("--set", opt.set, "V|W|Wplus|Hdeg3|AnnCo2");
  groebner->add_option("--order", opt.order, "conca|reverse");

  auto* ranks = app.add_subcommand("ranks", "rank lower bounds");
  add_common(ranks);

  auto* character = app.add_subcommand("character", "symmetric group characters");
  character->add_option("--n", opt.n, "symmetric group degree");
  character->add_option("--space", opt.space, "monhaf|irreducible|table");
  character->add_option("--partition", opt.partition, "e.g. 2,1");
  character->add_option("--output", opt.output, "json|md");
  character->add_option("--out", opt.out_path, "write the report to a file");

  auto* combinatorics = app.add_subcommand("combinatorics", "doset/Dyck counting");
  combinatorics->add_option("--n", opt.n, "matrix size");
  combinatorics->add_option("--t", opt.t, "restrict to one minor size");
  combinatorics->add_option("--output", opt.output, "json|md");
  combinatorics->add_option("--out", opt.out_path, "write the report to a file");

  auto* tables = app.add_subcommand("tables", "reproduce a reference table");
  tables->add_option("--id", opt.table_id, "1..7 or 9")->required();
  tables->add_option("--output", opt.output, "json|md (default md)");
  tables->add_option("--out", opt.out_path, "write the report to a file");
  tables->add_flag("--extended", opt.extended, "include the larger rows");

  CLI11_PARSE(app, argc, argv);
  if (app.got_subcommand(tables) && tables->count("--output") == 0)
    opt.output = "md";

  try {
    if (app.got_subcommand(hilbert)) return run_hilbert(opt);
    if (app.got_subcommand(generators)) return run_generators(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(groebner)) return run_groebner(opt);
    if (app.got_subcommand(ranks)) return run_ranks(opt);
    if (app.got_subcommand(character)) return run_character(opt);
    if (app.got_subcommand(combinatorics)) return run_combinatorics(opt);
    if (app.got_subcommand(tables)) return run_tables(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
