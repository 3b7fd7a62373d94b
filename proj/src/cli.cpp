#include "braidtop/cli.hpp"

#include "braidtop/arnold.hpp"
#include "braidtop/arrangement.hpp"
#include "braidtop/burau.hpp"
#include "braidtop/char_classes.hpp"
#include "braidtop/heisenberg.hpp"
#include "braidtop/ktheory.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace braidtop::cli {

namespace {

using nlohmann::json;

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::domain_error("value does not fit in a 64-bit integer");
  return v.convert_to<long long>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ArrangementChoice {
  int braid = 0;
  int boolean_n = 0;
  std::string file;

  arrangement::Arrangement select() const {
    if (braid > 0) return arrangement::braid_arrangement(braid);
    if (boolean_n > 0) return arrangement::boolean_arrangement(boolean_n);
    return arrangement::parse_arrangement(read_file(file));
  }

  bool file_based() const { return !file.empty(); }
};

void add_arrangement_flags(CLI::App* cmd, ArrangementChoice& choice) {
  CLI::Option_group* source = cmd->add_option_group("source", "arrangement to analyze");
  source->add_option("--braid", choice.braid, "braid arrangement on n strands");
  source->add_option("--boolean", choice.boolean_n, "coordinate hyperplanes in C^n");
  source->add_option("--file", choice.file, "arrangement file, one hyperplane per line");
  source->require_option(1, 1);
}

std::string join_ints(const std::vector<Int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].str();
  }
  return out + "]";
}

int run_poset(const ArrangementChoice& choice, bool as_json, std::ostream& out) {
  arrangement::IntersectionPoset poset = intersection_poset(choice.select());
  std::vector<std::pair<int, int>> covers = poset.cover_relations();
  if (as_json) {
    json flats = json::array();
    for (std::size_t id = 0; id < poset.flats.size(); ++id)
      flats.push_back(json{{"id", id},
                           {"rank", poset.flats[id].rank},
                           {"defining_set", poset.flats[id].defining_set},
                           {"mobius", to_ll(poset.mobius[id])}});
    json pairs = json::array();
    for (auto [x, y] : covers) pairs.push_back(json::array({x, y}));
    out << json{{"ambient_dim", poset.ambient_dim}, {"flats", flats}, {"cover_relations", pairs}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "ambient dimension: " << poset.ambient_dim << "\n";
  out << "flats: " << poset.flats.size() << "\n";
  for (std::size_t id = 0; id < poset.flats.size(); ++id) {
    const arrangement::Flat& f = poset.flats[id];
    out << "flat " << id << ": rank " << f.rank << ", defining set {";
    for (std::size_t k = 0; k < f.defining_set.size(); ++k)
      out << (k ? ", " : "") << f.defining_set[k];
    out << "}, mobius " << poset.mobius[id].str() << "\n";
  }
  for (auto [x, y] : covers) out << "cover " << x << " < " << y << "\n";
  return 0;
}

int run_betti(const ArrangementChoice& choice, bool as_json, std::ostream& out) {
  std::vector<Int> betti = arrangement::betti_numbers(choice.select());
  if (as_json) {
    json values = json::array();
    for (const Int& b : betti) values.push_back(to_ll(b));
    out << json{{"betti", values}}.dump(2) << "\n";
  } else {
    out << join_ints(betti) << "\n";
  }
  return 0;
}

json group_json(const ktheory::AbelianGroupDescriptor& g) {
  return json{{"free_rank", to_ll(g.free_rank)}, {"two_torsion_rank", to_ll(g.two_torsion_rank)}};
}

int run_ktheory(const ArrangementChoice& choice, bool as_json, std::ostream& out) {
  std::vector<Int> betti = arrangement::betti_numbers(choice.select());
  ktheory::AbelianGroupDescriptor ku = ktheory::ku0(betti);
  ktheory::AbelianGroupDescriptor ko = ktheory::ko0(betti);
  ktheory::AbelianGroupDescriptor ko_rep = ktheory::ko0_rep(betti);
  ktheory::AbelianGroupDescriptor ku_rep = ktheory::ku0_rep();
  // Named arrangements have aspherical complements, so the group-level
  // statement applies; a raw file is handled by the space-level corollary.
  std::string hypothesis =
      choice.file_based() ? "arrangement complement" : "toroidal classifying space";
  if (as_json) {
    out << json{{"KU0", group_json(ku)},
                {"KO0", group_json(ko)},
                {"KO0_rep", group_json(ko_rep)},
                {"KU0_rep", group_json(ku_rep)},
                {"hypothesis", hypothesis}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "KU^0 = " << format_group(ku) << ", KO^0 = " << format_group(ko)
      << ", KO^0_rep = " << format_group(ko_rep) << ", KU^0_rep = " << format_group(ku_rep)
      << "\n";
  out << "hypothesis: " << hypothesis << "\n";
  return 0;
}

int run_sw(const std::string& rep_path, int strands, bool as_json, std::ostream& out) {
  sw::ToralRep rep = sw::parse_rep(read_file(rep_path));
  bool pair_syntax = strands > 0;
  if (pair_syntax && strands * (strands - 1) / 2 != rep.n)
    throw std::invalid_argument("--strands " + std::to_string(strands) + " implies " +
                                std::to_string(strands * (strands - 1) / 2) +
                                " columns, file has " + std::to_string(rep.n));
  auto class_text = [&](const sw::F2Class& c) {
    return pair_syntax ? class_str(to_arnold(strands, c)) : f2_str(c);
  };
  bool trivial = is_stably_trivial(rep);
  if (as_json) {
    json classes = json::array();
    for (int k = 1; k <= rep.q(); ++k)
      classes.push_back(json{{"degree", k}, {"class", class_text(sw_total(rep, k))}});
    out << json{{"columns", rep.n},
                {"rows", rep.q()},
                {"special_orthogonal", rep.special_orthogonal},
                {"classes", classes},
                {"stably_trivial", trivial}}
               .dump(2)
        << "\n";
    return 0;
  }
  for (int k = 1; k <= rep.q(); ++k)
    out << "w" << k << " = " << class_text(sw_total(rep, k)) << "\n";
  out << "stably trivial: " << (trivial ? "yes" : "no") << "\n";
  return 0;
}

int run_realize_sw(int strands, const std::string& zeta1_text, const std::string& zeta2_text,
                   bool as_json, std::ostream& out) {
  arnold::ArnoldClass zeta1 = arnold::parse_class(strands, arnold::Ring::F2, zeta1_text);
  arnold::ArnoldClass zeta2 = arnold::parse_class(strands, arnold::Ring::F2, zeta2_text);
  sw::ToralRep rep = sw::realize_sw(strands, zeta1, zeta2);
  if (as_json) {
    json rows = json::array();
    for (std::uint64_t row : rep.rows) {
      json bits = json::array();
      for (int c = 0; c < rep.n; ++c) bits.push_back(int(row >> c & 1));
      rows.push_back(bits);
    }
    out << json{{"strands", strands}, {"columns", rep.n}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  // The comment keeps the output a valid input for `sw --rep`.
  out << "# rows: " << rep.q() << ", columns: " << rep.n << "\n";
  for (std::uint64_t row : rep.rows) {
    for (int c = 0; c < rep.n; ++c) out << (c ? " " : "") << (row >> c & 1);
    out << "\n";
  }
  return 0;
}

std::string gaussian_matrix_str(const burau::GaussianMatrix& m) {
  std::string text = "[";
  for (int r = 0; r < m.size; ++r) {
    if (r) text += ",";
    text += "[";
    for (int c = 0; c < m.size; ++c) {
      if (c) text += ",";
      text += gaussian_str(m.entries[std::size_t(r)][std::size_t(c)]);
    }
    text += "]";
  }
  return text + "]";
}

int run_burau(int n, const std::string& word_text, const std::string& eval_text,
              bool check_relations, bool at_one, bool as_json, std::ostream& out) {
  burau::BraidWord word = burau::parse_braid_word(n, word_text);
  json result;
  result["n"] = n;
  result["word"] = word_str(word);
  std::ostringstream text;

  if (check_relations) {
    bool ok = burau::check_braid_relations(n);
    if (!ok) throw std::logic_error("braid relations failed symbolically");
    text << "braid relations hold for n = " << n << "\n";
    result["relations_verified"] = ok;
  }
  bool want_matrix = !eval_text.empty() || (!check_relations && !at_one);
  if (!eval_text.empty()) {
    GaussianRational value = parse_gaussian(eval_text);
    burau::GaussianMatrix m = specialize(burau::burau(word), value);
    text << gaussian_matrix_str(m) << "\n";
    json rows = json::array();
    for (const auto& row : m.entries) {
      json cells = json::array();
      for (const GaussianRational& e : row) cells.push_back(gaussian_str(e));
      rows.push_back(cells);
    }
    result["value"] = gaussian_str(value);
    result["matrix"] = rows;
  } else if (want_matrix) {
    burau::LaurentMatrix m = burau::burau(word);
    json rows = json::array();
    for (int r = 0; r < m.size; ++r) {
      json cells = json::array();
      text << "[";
      for (int c = 0; c < m.size; ++c) {
        std::string entry = poly_str(m.entries[std::size_t(r)][std::size_t(c)]);
        text << (c ? ", " : "") << entry;
        cells.push_back(entry);
      }
      text << "]\n";
      rows.push_back(cells);
    }
    result["matrix"] = rows;
  }
  if (at_one) {
    std::string cycles = cycle_str(permutation_at_1(word));
    text << cycles << "\n";
    result["permutation"] = cycles;
  }

  if (as_json)
    out << result.dump(2) << "\n";
  else
    out << text.str();
  return 0;
}

int run_heisenberg(int n, const std::vector<int>& triple, bool as_json, std::ostream& out) {
  if (!triple.empty()) {
    arnold::ExteriorClass pulled = heisenberg::pullback_chi(n, triple[0], triple[1], triple[2]);
    std::string text = class_str(pulled);
    if (as_json)
      out << json{{"n", n}, {"i", triple[0]}, {"t", triple[1]}, {"j", triple[2]},
                  {"pullback", text}}
                 .dump(2)
          << "\n";
    else
      out << text << "\n";
    return 0;
  }
  heisenberg::LiftReport report = heisenberg::verify_all_lifts(n);
  int pairs = n * (n - 1) / 2;
  if (as_json) {
    json triples = json::array();
    for (const heisenberg::TripleStatus& s : report.triples)
      triples.push_back(json{{"i", s.i},
                             {"t", s.t},
                             {"j", s.j},
                             {"obstruction_zero", s.obstruction_zero},
                             {"spin_liftable", s.obstruction_zero_mod2}});
    out << json{{"n", n},
                {"triples", triples},
                {"all_zero", report.all_zero},
                {"degree1_span_dim", report.degree1_span_dim},
                {"degree1_spans", report.degree1_spans}}
               .dump(2)
        << "\n";
    return 0;
  }
  for (const heisenberg::TripleStatus& s : report.triples) {
    out << "triple (" << s.i << ", " << s.t << ", " << s.j << "): obstruction "
        << (s.obstruction_zero ? "0" : "nonzero") << ", "
        << (s.obstruction_zero_mod2 ? "spin(7)-liftable" : "no spin(7) lift") << "\n";
  }
  out << "degree-1 span: " << report.degree1_span_dim << " of " << pairs << "\n";
  return 0;
}

int run_vandermonde(const std::string& points_text, const std::string& perm_text,
                    const std::string& x_text, bool as_json, std::ostream& out) {
  std::vector<GaussianRational> points = parse_gaussian_list(points_text);
  std::vector<GaussianRational> x = parse_gaussian_list(x_text);
  if (points.size() != x.size())
    throw std::invalid_argument("--x must list as many entries as --points");
  burau::Permutation perm = burau::parse_cycles(int(points.size()), perm_text);
  GaussianRational det = burau::vandermonde_det(points);
  std::vector<GaussianRational> y = burau::vandermonde_apply(points, x);
  bool equivariant = burau::vandermonde_trivialization_check(points, perm, x);
  if (as_json) {
    json yv = json::array();
    for (const GaussianRational& v : y) yv.push_back(gaussian_str(v));
    out << json{{"det", gaussian_str(det)},
                {"y", yv},
                {"perm", cycle_str(perm)},
                {"equivariant", equivariant}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "det = " << gaussian_str(det) << "\n";
  out << "y = [";
  for (std::size_t k = 0; k < y.size(); ++k) out << (k ? ", " : "") << gaussian_str(y[k]);
  out << "]\n";
  out << "equivariant: " << (equivariant ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"topological invariants of arrangement complements and braid representations"};
  app.require_subcommand(1);

  ArrangementChoice poset_choice, betti_choice, ktheory_choice;
  bool poset_json = false, betti_json = false, ktheory_json = false;
  CLI::App* poset = app.add_subcommand("poset", "intersection poset with Moebius values");
  add_arrangement_flags(poset, poset_choice);
  poset->add_flag("--json", poset_json, "machine-readable output");
  CLI::App* betti = app.add_subcommand("betti", "Betti numbers of the complement");
  add_arrangement_flags(betti, betti_choice);
  betti->add_flag("--json", betti_json, "machine-readable output");
  CLI::App* ktheory_cmd = app.add_subcommand("ktheory", "reduced K-theory of the complement");
  add_arrangement_flags(ktheory_cmd, ktheory_choice);
  ktheory_cmd->add_flag("--json", ktheory_json, "machine-readable output");

  std::string rep_path;
  int sw_strands = 0;
  bool sw_json = false;
  CLI::App* sw_cmd = app.add_subcommand("sw", "Stiefel-Whitney classes of a toral representation");
  sw_cmd->add_option("--rep", rep_path, "0/1 matrix file, one line bundle per row")->required();
  sw_cmd->add_option("--strands", sw_strands, "print classes in pure braid A[i,j] syntax");
  sw_cmd->add_flag("--json", sw_json, "machine-readable output");

  int realize_strands = 0;
  std::string zeta1_text, zeta2_text;
  bool realize_json = false;
  CLI::App* realize = app.add_subcommand("realize-sw", "representation with prescribed w1, w2");
  realize->add_option("--strands", realize_strands, "pure braid strand count")->required();
  realize->add_option("--zeta1", zeta1_text, "degree-1 class over F2")->required();
  realize->add_option("--zeta2", zeta2_text, "degree-2 class over F2")->required();
  realize->add_flag("--json", realize_json, "machine-readable output");

  int burau_n = 0;
  std::string word_text, eval_text;
  bool check_relations = false, at_one = false, burau_json = false;
  CLI::App* burau_cmd = app.add_subcommand("burau", "Burau matrix of a braid word");
  burau_cmd->add_option("--n", burau_n, "strand count")->required();
  burau_cmd->add_option("--word", word_text, "letters s<k> or s<k>^-1")->required();
  burau_cmd->add_option("--eval", eval_text, "specialize t to an exact value");
  burau_cmd->add_flag("--check-relations", check_relations, "verify the braid relations");
  burau_cmd->add_flag("--at-one", at_one, "permutation at t = 1 in cycle notation");
  burau_cmd->add_flag("--json", burau_json, "machine-readable output");

  int heis_n = 0;
  std::vector<int> triple;
  bool heis_json = false;
  CLI::App* heis = app.add_subcommand("heisenberg", "Heisenberg lift obstructions per triple");
  heis->add_option("--n", heis_n, "strand count")->required();
  heis->add_option("--triple", triple, "indices i t j, prints the raw pullback")->expected(3);
  heis->add_flag("--json", heis_json, "machine-readable output");

  std::string points_text, perm_text, x_text;
  bool vand_json = false;
  CLI::App* vand = app.add_subcommand("vandermonde", "trivialization equivariance check");
  vand->add_option("--points", points_text, "comma-separated exact complex points")->required();
  vand->add_option("--perm", perm_text, "permutation in cycle notation")->required();
  vand->add_option("--x", x_text, "comma-separated exact complex coefficients")->required();
  vand->add_flag("--json", vand_json, "machine-readable output");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(poset)) return run_poset(poset_choice, poset_json, out);
    if (app.got_subcommand(betti)) return run_betti(betti_choice, betti_json, out);
    if (app.got_subcommand(ktheory_cmd)) return run_ktheory(ktheory_choice, ktheory_json, out);
    if (app.got_subcommand(sw_cmd)) return run_sw(rep_path, sw_strands, sw_json, out);
    if (app.got_subcommand(realize))
      return run_realize_sw(realize_strands, zeta1_text, zeta2_text, realize_json, out);
    if (app.got_subcommand(burau_cmd))
      return run_burau(burau_n, word_text, eval_text, check_relations, at_one, burau_json, out);
    if (app.got_subcommand(heis)) return run_heisenberg(heis_n, triple, heis_json, out);
    if (app.got_subcommand(vand)) return run_vandermonde(points_text, perm_text, x_text, vand_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace braidtop::cli
