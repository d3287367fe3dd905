#include "apolar/tables.hpp"

#include <json.hpp>

#include <sstream>

#include "apolar/combinatorics.hpp"
#include "apolar/poly_io.hpp"

namespace apolar {

namespace {

using nlohmann::json;

// Published reference rows. A few published entries disagree with values the
// source derives elsewhere; those carry notes instead of silent edits.
const std::map<int, std::vector<long long>> kPublishedDetHilbert = {
    {2, {1, 3, 1}},
    {3, {1, 6, 6, 1}},
    {4, {1, 10, 20, 10, 1}},
    {5, {1, 15, 50, 50, 15, 1}},
    {6, {1, 21, 105, 175, 105, 21, 1}},
    {7, {1, 28, 196, 490, 490, 196, 28, 1}},
    {8, {1, 36, 336, 1176, 1764, 1176, 336, 36, 1}},
};

const std::map<int, std::vector<long long>> kPublishedPermHilbert = {
    {2, {1, 3, 1}},
    {3, {1, 6, 6, 1}},
    {4, {1, 10, 21, 10, 1}},
    {5, {1, 15, 55, 55, 15, 1}},
    {6, {1, 21, 120, 210, 120, 21, 1}},
    {7, {1, 28, 231, 630, 630, 231, 28, 1}},
    {8, {1, 36, 406, 1596, 2485, 1596, 406, 36, 1}},
};

const std::map<int, std::vector<long long>> kPublishedContractionHilbert = {
    {2, {1, 3, 1}},
    {3, {1, 6, 6, 1}},
    {4, {1, 10, 33, 10, 1}},
    {5, {1, 15, 85, 85, 15, 1}},
    {6, {1, 21, 180, 485, 180, 21, 1}},
    {7, {1, 28, 336, 1505, 1505, 336, 28, 1}},
};

const std::map<int, std::string> kPublishedDetRs = {
    {2, "2.5"}, {3, "7"}, {4, "21"}, {5, "66"}, {6, "209.5"}};
const std::map<int, long long> kPublishedDetLt = {
    {2, 4}, {3, 7}, {4, 25}, {5, 56}, {6, 187}};
const std::map<int, long long> kPublishedDetLdiff = {
    {2, 3}, {3, 6}, {4, 20}, {5, 50}, {6, 175}};

const std::map<int, std::string> kPublishedPermRs = {
    {2, "1.6"}, {3, "4.6"}, {4, "14.3"}, {5, "47.3"}, {6, "164.6"}};
const std::map<int, long long> kPublishedPermLdiff = {
    {2, 3}, {3, 6}, {4, 21}, {5, 55}, {6, 210}};

const std::map<int, std::string> kPublishedCoRs = {
    {2, "2.5"}, {3, "7"}, {4, "18.33"}, {5, "67.33"}, {6, "222.25"}, {7, "935"}};
const std::map<int, long long> kPublishedCoLt = {
    {2, 3}, {3, 10}, {4, 38}, {5, 95}, {6, 497}, {7, 1524}};
const std::map<int, long long> kPublishedCoLdiff = {
    {2, 3}, {3, 6}, {4, 33}, {5, 85}, {6, 485}, {7, 1505}};
// Divisors the published contraction RS entries use (length / d); verified
// against the generator profile for n <= 5, published-only beyond.
const std::map<int, int> kPublishedCoDivisor = {{2, 2}, {3, 2}, {4, 3},
                                                {5, 3}, {6, 4}, {7, 4}};

struct CharTable {
  std::vector<Partition> class_order;  // published column order
  std::vector<long long> sizes;
  std::vector<long long> chi;
};

const CharTable kPublishedMonHaf4 = {
    {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}, {4}, {2, 2}},
    {1, 6, 8, 6, 3},
    {3, 1, 0, 1, 3}};

const CharTable kPublishedMonHaf6 = {
    {{1, 1, 1, 1, 1, 1},
     {2, 1, 1, 1, 1},
     {3, 1, 1, 1},
     {2, 2, 1, 1},
     {4, 1, 1},
     {3, 2, 1},
     {5, 1},
     {2, 2, 2},
     {4, 2},
     {3, 3},
     {6}},
    {1, 15, 40, 45, 90, 120, 144, 15, 90, 40, 120},
    {15, 3, 0, 3, 1, 0, 0, 7, 1, 3, 1}};

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

void compare(TableDoc& doc, const std::string& where, const std::string& expected,
             const std::string& actual) {
  if (expected != actual) doc.mismatches.push_back({where, expected, actual});
}

std::string cycle_label(const Partition& p) {
  // (1^4), (1^2 2), ... compact cycle-type label.
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  std::string s = "(";
  for (const auto& [v, m] : mult) {
    s += std::to_string(v);
    if (m > 1) s += "^" + std::to_string(m);
    s += " ";
  }
  if (s.back() == ' ') s.pop_back();
  return s + ")";
}

TableDoc hilbert_table(int id, bool extended) {
  const bool det_side = id == 1;
  const auto& published = det_side ? kPublishedDetHilbert : kPublishedPermHilbert;
  TableDoc doc;
  doc.id = id;
  json rows = json::array();
  std::ostringstream md;
  md << "| n | Hilbert sequence | provenance |\n|---|---|---|\n";

  int computed_max = extended ? 7 : 6;
  int table_max = extended ? 8 : 6;
  for (int n = 2; n <= table_max; ++n) {
    std::vector<long long> values;
    std::string provenance;
    if (n <= computed_max) {
      RingSpec ring = sym_ring(n);
      Polynomial F = det_side ? det_poly(ring) : perm_poly(ring);
      HilbertSequence h = hilbert_sequence(F, Pairing::differentiation);
      values = h.values;
      provenance = "computed";
    } else {
      for (int k = 0; k <= n; ++k)
        values.push_back(to_ll(det_side ? minor_space_dim(n, k)
                                        : subperm_space_dim(n, k)));
      provenance = "closed-form";
    }
    compare(doc, "n=" + std::to_string(n), join(published.at(n)), join(values));
    md << "| " << n << " | " << join(values) << " | " << provenance << " |\n";
    rows.push_back({{"n", n}, {"values", values}, {"provenance", provenance}});
  }
  doc.markdown = md.str();
  doc.json_text = json{{"table", id}, {"rows", rows}}.dump(2);
  return doc;
}

TableDoc det_rank_table() {
  TableDoc doc;
  doc.id = 3;
  json rows = json::array();
  std::ostringstream md;
  md << "| n | RS bound for cr | LT bound for r | l_diff |\n|---|---|---|---|\n";
  for (int n = 2; n <= 6; ++n) {
    HilbertSequence h =
        hilbert_sequence(det_poly(sym_ring(n)), Pairing::differentiation);
    // Generated in degree 2; the profile backs this for n <= 5 in the
    // acceptance suite, beyond desk scale at n = 6.
    Rat rs = Rat(static_cast<long>(h.length())) / 2;
    std::string rs_str = rat_decimal(rs, 1);
    // The published row evaluates the bound at t = ceil(n/2); the true
    // maximum sits at floor(n/2) and is carried in the JSON.
    long long lt_published_eval = lt_bound_det_at(n, (n + 1) / 2);
    LtBound lt = lt_bound_det(n);
    long long ld = h.max_value();

    if (n == 6) {
      // Published 209.5 contradicts the same source's length 429 (= C_7);
      // emit the derived value and keep the published one in a note.
      if (rs_str != "214.5")
        doc.mismatches.push_back({"n=6 RS", "214.5", rs_str});
      doc.notes.push_back(
          "n=6 RS: published entry 209.5 is inconsistent with the published "
          "Hilbert row summing to 429; emitting 429/2 = 214.5");
    } else {
      compare(doc, "n=" + std::to_string(n) + " RS", kPublishedDetRs.at(n),
              rs_str);
    }
    compare(doc, "n=" + std::to_string(n) + " LT",
            std::to_string(kPublishedDetLt.at(n)),
            std::to_string(lt_published_eval));
    compare(doc, "n=" + std::to_string(n) + " l_diff",
            std::to_string(kPublishedDetLdiff.at(n)), std::to_string(ld));

    md << "| " << n << " | " << rs_str << " | " << lt_published_eval << " | "
       << ld << " |\n";
    rows.push_back({{"n", n},
                    {"length", h.length()},
                    {"rs_bound", rat_exact(rs)},
                    {"rs_rendered", rs_str},
                    {"lt_published_eval_t", (n + 1) / 2},
                    {"lt_published_value", lt_published_eval},
                    {"lt_max", lt.value},
                    {"lt_argmax", lt.argmax},
                    {"l_diff", ld}});
  }
  doc.notes.push_back(
      "LT row reproduces the published evaluation at t = ceil(n/2); the "
      "maximum over t (at floor(n/2)) is reported as lt_max in the JSON");
  doc.markdown = md.str();
  doc.json_text = json{{"table", 3}, {"rows", rows}}.dump(2);
  return doc;
}

TableDoc perm_rank_table() {
  TableDoc doc;
  doc.id = 4;
  json rows = json::array();
  std::ostringstream md;
  md << "| n | RS bound for cr | l_diff |\n|---|---|---|\n";
  for (int n = 2; n <= 6; ++n) {
    HilbertSequence h =
        hilbert_sequence(perm_poly(sym_ring(n)), Pairing::differentiation);
    // Published convention divides by 3 uniformly, although the ideal is
    // degree-2 generated for n <= 5; both divisors are carried in the JSON.
    Rat rs = Rat(static_cast<long>(h.length())) / 3;
    std::string rs_str = rat_decimal(rs, 1);
    long long ld = h.max_value();
    compare(doc, "n=" + std::to_string(n) + " RS", kPublishedPermRs.at(n),
            rs_str);
    compare(doc, "n=" + std::to_string(n) + " l_diff",
            std::to_string(kPublishedPermLdiff.at(n)), std::to_string(ld));
    md << "| " << n << " | " << rs_str << " | " << ld << " |\n";
    int profile_d = n >= 6 ? 3 : 2;
    rows.push_back({{"n", n},
                    {"length", h.length()},
                    {"rs_bound", rat_exact(rs)},
                    {"rs_rendered", rs_str},
                    {"published_divisor", 3},
                    {"profile_divisor", profile_d},
                    {"l_diff", ld}});
  }
  doc.notes.push_back(
      "RS row divides by 3 for every n to match the published rendering; the "
      "generator profile gives d = 2 for n <= 5 (profile_divisor in JSON)");
  doc.markdown = md.str();
  doc.json_text = json{{"table", 4}, {"rows", rows}}.dump(2);
  return doc;
}

TableDoc contraction_hilbert_table(bool extended) {
  TableDoc doc;
  doc.id = 5;
  json rows = json::array();
  std::ostringstream md;
  md << "| n | Hilbert sequence (contraction) | provenance |\n|---|---|---|\n";
  int computed_max = extended ? 7 : 6;
  for (int n = 2; n <= 7; ++n) {
    std::vector<long long> values;
    std::string provenance;
    if (n <= computed_max) {
      values =
          hilbert_sequence(det_poly(sym_ring(n)), Pairing::contraction).values;
      provenance = "computed";
    } else {
      values = kPublishedContractionHilbert.at(n);
      provenance = "published";
    }
    compare(doc, "n=" + std::to_string(n),
            join(kPublishedContractionHilbert.at(n)), join(values));
    md << "| " << n << " | " << join(values) << " | " << provenance << " |\n";
    rows.push_back({{"n", n}, {"values", values}, {"provenance", provenance}});
  }
  doc.markdown = md.str();
  doc.json_text = json{{"table", 5}, {"rows", rows}}.dump(2);
  return doc;
}

TableDoc contraction_rank_table() {
  TableDoc doc;
  doc.id = 6;
  json rows = json::array();
  std::ostringstream md;
  md << "| n | RS bound for cr_co | LT bound for r_co | l_diff_co |\n"
        "|---|---|---|---|\n";
  for (int n = 2; n <= 7; ++n) {
    long long length;
    long long ld;
    std::string provenance;
    if (n <= 6) {
      HilbertSequence h =
          hilbert_sequence(det_poly(sym_ring(n)), Pairing::contraction);
      length = h.length();
      ld = h.max_value();
      provenance = "computed";
    } else {
      const auto& row = kPublishedContractionHilbert.at(n);
      length = 0;
      ld = 0;
      for (long long v : row) {
        length += v;
        ld = std::max(ld, v);
      }
      provenance = "published";
    }
    int d = kPublishedCoDivisor.at(n);
    Rat rs = Rat(static_cast<long>(length)) / d;
    std::string rs_str = rat_decimal(rs, 2);
    compare(doc, "n=" + std::to_string(n) + " RS", kPublishedCoRs.at(n), rs_str);
    compare(doc, "n=" + std::to_string(n) + " l_diff",
            std::to_string(kPublishedCoLdiff.at(n)), std::to_string(ld));
    long long lt = kPublishedCoLt.at(n);  // published constants only
    md << "| " << n << " | " << rs_str << " | " << lt << " | " << ld << " |\n";
    rows.push_back({{"n", n},
                    {"length", length},
                    {"length_provenance", provenance},
                    {"rs_bound", rat_exact(rs)},
                    {"rs_rendered", rs_str},
                    {"divisor", d},
                    {"divisor_provenance",
                     n <= 5 ? "profile-verified" : "published-only"},
                    {"lt_bound", lt},
                    {"lt_provenance", "unverified-derivation"},
                    {"l_diff", ld}});
  }
  doc.notes.push_back(
      "LT row entries are published constants (unverified-derivation): the "
      "contraction-mode singular-locus dimension is not specified");
  doc.notes.push_back(
      "RS divisors 2,2,3,3,4,4 follow the published renderings; the profile "
      "confirms them for n <= 5");
  doc.markdown = md.str();
  doc.json_text = json{{"table", 6}, {"rows", rows}}.dump(2);
  return doc;
}

TableDoc monhaf_character_table(int id) {
  const int n = id == 7 ? 4 : 6;
  const CharTable& published = id == 7 ? kPublishedMonHaf4 : kPublishedMonHaf6;
  TableDoc doc;
  doc.id = id;

  RingSpec ring = sym_ring(n);
  CharacterVector chi = monomial_space_character(monhaf_monomials(n), ring, n);
  auto classes = conjugacy_classes(n);

  std::vector<long long> sizes, values;
  for (size_t col = 0; col < published.class_order.size(); ++col) {
    const Partition& type = published.class_order[col];
    for (size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].cycle_type == type) {
        sizes.push_back(to_ll(classes[i].size));
        values.push_back(to_ll(chi.values[i]));
        break;
      }
    }
  }
  compare(doc, "class sizes", join(published.sizes), join(sizes));
  compare(doc, "chi", join(published.chi), join(values));

  std::ostringstream md;
  md << "| class |";
  for (const auto& t : published.class_order) md << " " << cycle_label(t) << " |";
  md << "\n|---|";
  for (size_t i = 0; i < published.class_order.size(); ++i) md << "---|";
  md << "\n| size |";
  for (long long s : sizes) md << " " << s << " |";
  md << "\n| chi |";
  for (long long v : values) md << " " << v << " |";
  md << "\n";

  json row = {{"n", n}, {"sizes", sizes}, {"chi", values},
              {"inner_product", rat_exact(character_inner(chi, chi))}};
  doc.markdown = md.str();
  doc.json_text = json{{"table", id}, {"data", row}}.dump(2);
  return doc;
}

}  // namespace

bool table_id_supported(int id) {
  return (id >= 1 && id <= 7) || id == 9;
}

TableDoc emit_table(int id, bool extended) {
  switch (id) {
    case 1:
    case 2:
      return hilbert_table(id, extended);
    case 3:
      return det_rank_table();
    case 4:
      return perm_rank_table();
    case 5:
      return contraction_hilbert_table(extended);
    case 6:
      return contraction_rank_table();
    case 7:
    case 9:
      return monhaf_character_table(id);
    default:
      throw std::invalid_argument("unsupported table id");
  }
}

}  // namespace apolar
