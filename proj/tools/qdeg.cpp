#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qdeg/axioms.hpp"
#include "qdeg/degraph.hpp"
#include "qdeg/involutions.hpp"
#include "qdeg/product.hpp"
#include "qdeg/qsym.hpp"
#include "qdeg/repro.hpp"

namespace {

using namespace qdeg;

constexpr int kDefaultSizeCap = 12;

struct Output {
  std::string path;  // empty: stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
  }
};

void check_size(int n, bool force) {
  if (n > kDefaultSizeCap && !force)
    throw std::runtime_error("size " + std::to_string(n) +
                             " exceeds the default cap of 12; pass --force to override");
}

std::pair<StrictPartition, StrictPartition> parse_tensor_shapes(const std::string& text) {
  size_t bar = text.find('|');
  if (bar == std::string::npos)
    throw std::runtime_error("tensor shape needs the form \"gamma|delta\", e.g. \"2,1|1\"");
  return {StrictPartition::parse(text.substr(0, bar)), StrictPartition::parse(text.substr(bar + 1))};
}

std::string expansion_text(const std::string& lhs, const QSymF& f, const std::string& basis) {
  if (basis == "F") return lhs + " = " + f.str() + "\n";
  BasisExpansion e = decompose(f, basis == "s" ? Basis::schur : Basis::schur_p);
  return to_csv(e);
}

int run_verify(const DEGraph& g, bool deg_only, const Output& out) {
  AxiomReport report = deg_only ? check_deg(g) : check_queer_deg(g);
  out.write(report.str());
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for shifted tableaux, queer dual equivalence graphs and Schur P-functions"};
  app.require_subcommand(1);

  std::string syt_shape, sst_shape, tensor_shape;
  std::string out_path;
  bool force = false;

  auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--syt", syt_shape, "standard Young tableaux of this shape, e.g. 3,1");
    cmd->add_option("--sst", sst_shape, "signed shifted tableaux of this strict shape");
    cmd->add_option("--tensor", tensor_shape, "concatenated tableaux, e.g. \"2,1|1\"");
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    cmd->add_flag("--force", force, "lift the size cap of 12");
  };

  // tableaux
  auto* cmd_tab = app.add_subcommand("tableaux", "enumerate a tableau family");
  bool tab_json = false;
  add_family_flags(cmd_tab);
  cmd_tab->add_flag("--json", tab_json, "emit one JSON object per line");

  // graph
  auto* cmd_graph = app.add_subcommand("graph", "build an involution graph and export it");
  bool graph_queer = false;
  std::string dot_path, json_path;
  add_family_flags(cmd_graph);
  cmd_graph->add_flag("--queer", graph_queer, "include the queer involution as label 0");
  cmd_graph->add_option("--dot", dot_path, "write DOT to this file");
  cmd_graph->add_option("--json", json_path, "write the structured graph to this file");

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "fundamental / Schur / Schur-P expansions");
  std::string exp_s, exp_p, exp_q, exp_product, basis = "F";
  cmd_expand->add_option("--s", exp_s, "Schur function of this partition");
  cmd_expand->add_option("--P", exp_p, "Schur P-function of this strict partition");
  cmd_expand->add_option("--Q", exp_q, "Schur Q-function of this strict partition");
  cmd_expand->add_option("--product", exp_product, "product P_gamma P_delta, e.g. \"2,1|1\"");
  cmd_expand->add_option("--basis", basis, "F (default), s or P")
      ->check(CLI::IsMember({"F", "s", "P"}));
  cmd_expand->add_option("--out", out_path, "write output to this file instead of stdout");
  cmd_expand->add_flag("--force", force, "lift the size cap of 12");

  // product
  auto* cmd_product = app.add_subcommand("product", "structure constants of P_gamma P_delta");
  std::string left_shape, right_shape, csv_path;
  bool product_check = false;
  cmd_product->add_option("--left", left_shape, "gamma, e.g. 2,1")->required();
  cmd_product->add_option("--right", right_shape, "delta, e.g. 1");
  cmd_product->add_option("--csv", csv_path, "write the CSV table to this file");
  cmd_product->add_flag("--check", product_check,
                        "cross-check the tally against the exact decomposition");
  cmd_product->add_option("--out", out_path, "write output to this file instead of stdout");
  cmd_product->add_flag("--force", force, "lift the size cap of 12");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "audit the dual equivalence conditions");
  std::string verify_file;
  bool deg_only = false;
  add_family_flags(cmd_verify);
  cmd_verify->add_option("--file", verify_file, "audit a structured graph from this JSON file");
  cmd_verify->add_flag("--deg-only", deg_only, "check only the ordinary conditions");

  // search-unique
  auto* cmd_search = app.add_subcommand(
      "search-unique", "search for queer extensions of the standard involutions");
  std::string search_gamma, search_on = "syt";
  cmd_search->add_option("--gamma", search_gamma, "strict partition, size at most 5")->required();
  cmd_search->add_option("--on", search_on, "object family: syt (default) or sst")
      ->check(CLI::IsMember({"syt", "sst"}));
  cmd_search->add_option("--out", out_path, "write output to this file instead of stdout");

  // repro
  auto* cmd_repro = app.add_subcommand("repro", "run the built-in reference suite");
  cmd_repro->add_option("--out", out_path, "write output to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    Output out{out_path};

    if (cmd_tab->parsed()) {
      std::ostringstream text;
      auto emit = [&](const std::string& line, const DescentSet& des, const std::string& json) {
        if (tab_json)
          text << json << "\n";
        else
          text << line << "  des=" << des.str() << "\n";
      };
      if (!syt_shape.empty()) {
        Partition lambda = Partition::parse(syt_shape);
        check_size(lambda.size(), force);
        for (const auto& t : generate_syt(lambda)) emit(format(t), descent_set(t), to_json_string(t));
      } else if (!sst_shape.empty()) {
        StrictPartition gamma = StrictPartition::parse(sst_shape);
        check_size(gamma.size(), force);
        for (const auto& s : generate_sst(gamma)) emit(format(s), descent_set(s), to_json_string(s));
      } else if (!tensor_shape.empty()) {
        auto [gamma, delta] = parse_tensor_shapes(tensor_shape);
        check_size(gamma.size() + delta.size(), force);
        for (const auto& st : generate_tensor(gamma, delta))
          emit(format(st), descent_set(st), to_json_string(st));
      } else {
        throw std::runtime_error("pick a family: --syt, --sst or --tensor");
      }
      out.write(text.str());
      return 0;
    }

    if (cmd_graph->parsed()) {
      DEGraph g;
      if (!syt_shape.empty()) {
        Partition lambda = Partition::parse(syt_shape);
        check_size(lambda.size(), force);
        g = syt_graph(lambda);
      } else if (!sst_shape.empty()) {
        StrictPartition gamma = StrictPartition::parse(sst_shape);
        check_size(gamma.size(), force);
        g = sst_graph(gamma, graph_queer);
      } else if (!tensor_shape.empty()) {
        auto [gamma, delta] = parse_tensor_shapes(tensor_shape);
        check_size(gamma.size() + delta.size(), force);
        g = tensor_graph(gamma, delta, graph_queer);
      } else {
        throw std::runtime_error("pick a family: --syt, --sst or --tensor");
      }
      if (!dot_path.empty()) Output{dot_path}.write(to_dot(g));
      if (!json_path.empty()) Output{json_path}.write(to_json_string(g));
      std::ostringstream text;
      text << "degree " << g.degree() << ", " << g.vertex_count() << " vertices\n";
      std::map<int, int> edge_counts;
      for (const auto& [label, a, b] : g.edge_list()) ++edge_counts[label];
      for (const auto& [label, count] : edge_counts)
        text << "label " << label << ": " << count << " edges\n";
      text << components(g).size() << " component(s)\n";
      out.write(text.str());
      return 0;
    }

    if (cmd_expand->parsed()) {
      std::string text;
      if (!exp_s.empty()) {
        Partition lambda = Partition::parse(exp_s);
        check_size(lambda.size(), force);
        text = expansion_text("s[" + lambda.str() + "]", schur_F(lambda), basis);
      } else if (!exp_p.empty()) {
        StrictPartition gamma = StrictPartition::parse(exp_p);
        check_size(gamma.size(), force);
        text = expansion_text("P[" + gamma.str() + "]", schurP_F(gamma), basis);
      } else if (!exp_q.empty()) {
        StrictPartition gamma = StrictPartition::parse(exp_q);
        check_size(gamma.size(), force);
        text = expansion_text("Q[" + gamma.str() + "]", schurQ_F(gamma), basis);
      } else if (!exp_product.empty()) {
        auto [gamma, delta] = parse_tensor_shapes(exp_product);
        check_size(gamma.size() + delta.size(), force);
        text = expansion_text("P[" + gamma.str() + "].P[" + delta.str() + "]",
                              product_F(gamma, delta), basis);
      } else {
        throw std::runtime_error("pick an expansion: --s, --P, --Q or --product");
      }
      out.write(text);
      return 0;
    }

    if (cmd_product->parsed()) {
      StrictPartition gamma = StrictPartition::parse(left_shape);
      StrictPartition delta = StrictPartition::parse(right_shape);
      check_size(gamma.size() + delta.size(), force);
      StructureTable table = structure_constants(gamma, delta);
      if (product_check) {
        BasisExpansion via = decompose(product_F(gamma, delta), Basis::schur_p);
        if (via.coeff != table.entries)
          throw std::runtime_error("cross-check failed: tally and decomposition disagree");
      }
      std::string csv = to_csv(table);
      if (!csv_path.empty()) Output{csv_path}.write(csv);
      out.write(csv);
      return 0;
    }

    if (cmd_verify->parsed()) {
      if (!verify_file.empty()) {
        std::ifstream in(verify_file);
        if (!in) throw std::runtime_error("cannot open " + verify_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return run_verify(graph_from_json_string(buffer.str()), deg_only, out);
      }
      if (!syt_shape.empty()) {
        Partition lambda = Partition::parse(syt_shape);
        check_size(lambda.size(), force);
        return run_verify(syt_graph(lambda), true, out);
      }
      if (!sst_shape.empty()) {
        StrictPartition gamma = StrictPartition::parse(sst_shape);
        check_size(gamma.size(), force);
        return run_verify(sst_graph(gamma, true), deg_only, out);
      }
      if (!tensor_shape.empty()) {
        auto [gamma, delta] = parse_tensor_shapes(tensor_shape);
        check_size(gamma.size() + delta.size(), force);
        return run_verify(tensor_graph(gamma, delta, true), deg_only, out);
      }
      throw std::runtime_error("pick an input: --syt, --sst, --tensor or --file");
    }

    if (cmd_search->parsed()) {
      StrictPartition gamma = StrictPartition::parse(search_gamma);
      DEGraph base;
      if (search_on == "sst") {
        base = sst_graph(gamma, false);
      } else {
        std::vector<Partition> shapes;
        for (const auto& [parts, coeff] : schur_coeffs_of_P(gamma).coeff)
          for (long long k = 0; k < coeff; ++k) shapes.push_back(Partition(parts));
        base = syt_union_graph(shapes);
      }
      auto candidates = unique_extension_search(base);
      std::ostringstream text;
      text << candidates.size() << " candidate pairing(s)\n";
      for (const auto& pairing : candidates) {
        for (const auto& [a, b] : pairing) text << "  " << a << " <-> " << b << "\n";
        text << "\n";
      }
      out.write(text.str());
      return 0;
    }

    if (cmd_repro->parsed()) {
      auto results = repro::run_all();
      std::ostringstream text;
      bool all = true;
      for (const auto& r : results) {
        text << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.number << ". " << r.name << "\n";
        for (const auto& d : r.details) text << "       - " << d << "\n";
        all = all && r.pass;
      }
      text << (all ? "all checks passed" : "some checks FAILED") << "\n";
      out.write(text.str());
      return all ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
