// Command-line pipeline over the subbar library.
//
// Subcommands: persist, image, check, match, dist, hypothesis, induced,
// plot. Exit codes: 0 success or affirmative verdict, 1 negative verdict,
// 2 input or validation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <subbar/subbar.hpp>

namespace {

template <class Reader>
auto load(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return reader(in);
  } catch (const subbar::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << text;
}

std::string matching_lines(const subbar::matching& m) {
  std::ostringstream os;
  subbar::write_matching_pairs(os, m);
  return os.str();
}

std::string barcode_text(const subbar::barcode& b) {
  std::ostringstream os;
  subbar::write_barcode(os, b);
  return os.str();
}

int effective_dim(int dim_flag, const subbar::simplicial_complex& k) {
  return dim_flag >= 0 ? dim_flag : k.max_dim();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistence barcodes, image persistence, and sub-barcode matchings"};
  app.require_subcommand(1);

  std::string complex_path, u_complex_path, out_path;
  std::string values_path, upper_path, middle_path, lower_path;
  std::string barcode_a_path, barcode_b_path, match_path, metric = "sub";
  std::vector<std::string> barcode_paths;
  int dim_flag = -1;
  bool witness = false, super_side = false;

  CLI::App* persist = app.add_subcommand("persist", "barcode of a sublevel filtration");
  persist->add_option("complex", complex_path, "complex file")->required();
  persist->add_option("values", values_path, "vertex-value file")->required();
  persist->add_option("--dim", dim_flag, "maximum homology dimension (default: complex dimension)");
  persist->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* image = app.add_subcommand("image", "barcode of the image of one filtration in another");
  image->add_option("complex", complex_path, "complex file")->required();
  image->add_option("upper", upper_path, "upper vertex-value file")->required();
  image->add_option("lower", lower_path, "lower vertex-value file")->required();
  image->add_option("--dim", dim_flag, "maximum homology dimension (default: complex dimension)");
  image->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* check = app.add_subcommand("check", "decide whether barcode A is a sub-barcode of B");
  check->add_option("barcode-a", barcode_a_path, "left barcode file")->required();
  check->add_option("barcode-b", barcode_b_path, "right barcode file")->required();
  check->add_flag("--witness", witness, "print the matching");
  check->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* match = app.add_subcommand("match", "maximum sub-barcode matching between two barcodes");
  match->add_option("barcode-a", barcode_a_path, "left barcode file")->required();
  match->add_option("barcode-b", barcode_b_path, "right barcode file")->required();
  match->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* dist = app.add_subcommand("dist", "distance between two barcodes");
  dist->add_option("barcode-a", barcode_a_path, "left barcode file")->required();
  dist->add_option("barcode-b", barcode_b_path, "right barcode file")->required();
  dist->add_option("--metric", metric, "sub or bottleneck (default: sub)")
      ->check(CLI::IsMember({"sub", "bottleneck"}));
  dist->add_flag("--witness", witness, "print the realizing matching");
  dist->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* hypothesis =
      app.add_subcommand("hypothesis", "falsify a reparameterization hypothesis");
  hypothesis->add_option("complex", complex_path, "complex file for the bound functions")->required();
  hypothesis->add_option("u-values", values_path, "hypothesized vertex-value file")->required();
  hypothesis->add_option("g-values", upper_path, "upper-bound vertex-value file")->required();
  hypothesis->add_option("l-values", lower_path, "lower-bound vertex-value file")->required();
  hypothesis->add_option("--u-complex", u_complex_path,
                         "complex file for the hypothesized function (default: same complex)");
  hypothesis->add_option("--dim", dim_flag,
                         "maximum homology dimension (default: complex dimension)");
  hypothesis->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* induced = app.add_subcommand("induced", "induced matching of a factorization");
  induced->add_option("complex", complex_path, "complex file")->required();
  induced->add_option("g-values", upper_path, "upper vertex-value file")->required();
  induced->add_option("f-values", middle_path, "middle vertex-value file")->required();
  induced->add_option("l-values", lower_path, "lower vertex-value file")->required();
  induced->add_flag("--super", super_side, "print the super-barcode matching instead");
  induced->add_option("--dim", dim_flag, "maximum homology dimension (default: complex dimension)");
  induced->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* plot = app.add_subcommand("plot", "render barcodes as an SVG diagram");
  plot->add_option("barcodes", barcode_paths, "barcode files")->required()->expected(-1);
  plot->add_option("--match", match_path, "matching file linking the first two barcodes");
  plot->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (persist->parsed()) {
      auto k = load(complex_path, subbar::read_complex);
      auto values = load(values_path, subbar::read_vertex_values);
      auto b = subbar::persistence(k, values, effective_dim(dim_flag, k));
      emit(out_path, barcode_text(b));
      return 0;
    }

    if (image->parsed()) {
      auto k = load(complex_path, subbar::read_complex);
      auto upper = load(upper_path, subbar::read_vertex_values);
      auto lower = load(lower_path, subbar::read_vertex_values);
      auto b = subbar::image_persistence(k, upper, lower, effective_dim(dim_flag, k));
      emit(out_path, barcode_text(b));
      return 0;
    }

    if (check->parsed()) {
      auto a = load(barcode_a_path, subbar::read_barcode);
      auto b = load(barcode_b_path, subbar::read_barcode);
      auto m = subbar::max_subbarcode_matching(a, b);
      std::ostringstream os;
      if (m.total_on_left()) {
        os << "SUB-BARCODE\n";
        if (witness) os << matching_lines(m);
        emit(out_path, os.str());
        return 0;
      }
      os << "NOT-SUB-BARCODE\n";
      os << "unmatched:";
      for (subbar::bar_id id : m.unmatched_left()) os << ' ' << id;
      os << '\n';
      if (witness) os << matching_lines(m);
      emit(out_path, os.str());
      return 1;
    }

    if (match->parsed()) {
      auto a = load(barcode_a_path, subbar::read_barcode);
      auto b = load(barcode_b_path, subbar::read_barcode);
      emit(out_path, matching_lines(subbar::max_subbarcode_matching(a, b)));
      return 0;
    }

    if (dist->parsed()) {
      auto a = load(barcode_a_path, subbar::read_barcode);
      auto b = load(barcode_b_path, subbar::read_barcode);
      auto result = metric == "sub" ? subbar::subbarcode_distance(a, b)
                                    : subbar::bottleneck_distance(a, b);
      std::ostringstream os;
      os << subbar::format_value(result.value) << '\n';
      if (witness) os << matching_lines(result.witness);
      emit(out_path, os.str());
      return 0;
    }

    if (hypothesis->parsed()) {
      auto k = load(complex_path, subbar::read_complex);
      auto u_values = load(values_path, subbar::read_vertex_values);
      auto g_values = load(upper_path, subbar::read_vertex_values);
      auto l_values = load(lower_path, subbar::read_vertex_values);
      auto uk = u_complex_path.empty() ? k : load(u_complex_path, subbar::read_complex);
      int dim = effective_dim(dim_flag, k);
      auto observed = subbar::image_persistence(k, g_values, l_values, dim);
      auto hypothesized = subbar::persistence(uk, u_values, dim);
      if (subbar::is_subbarcode(observed, hypothesized)) {
        emit(out_path, "CONSISTENT (note: consistency does not prove the hypothesis)\n");
        return 0;
      }
      emit(out_path, "FALSIFIED\n");
      return 1;
    }

    if (induced->parsed()) {
      auto k = load(complex_path, subbar::read_complex);
      auto g_values = load(upper_path, subbar::read_vertex_values);
      auto f_values = load(middle_path, subbar::read_vertex_values);
      auto l_values = load(lower_path, subbar::read_vertex_values);
      auto bundle = subbar::factorization_bundle(k, g_values, f_values, l_values,
                                                 effective_dim(dim_flag, k));
      auto m = super_side ? subbar::induced_super_matching(bundle)
                          : subbar::induced_sub_matching(bundle);
      std::ostringstream os;
      for (const auto& [l, r] : m.pairs()) {
        const subbar::bar& lb = m.left().at(l);
        const subbar::bar& rb = m.right().at(r);
        os << lb.dim << ' ' << l << ' ' << subbar::format_interval(lb.iv) << " -> " << r << ' '
           << subbar::format_interval(rb.iv) << '\n';
      }
      emit(out_path, os.str());
      return 0;
    }

    if (plot->parsed()) {
      std::vector<subbar::barcode> loaded;
      loaded.reserve(barcode_paths.size());
      for (const std::string& p : barcode_paths) loaded.push_back(load(p, subbar::read_barcode));
      std::vector<const subbar::barcode*> ptrs;
      for (const subbar::barcode& b : loaded) ptrs.push_back(&b);
      std::vector<subbar::id_pair> links;
      if (!match_path.empty()) {
        if (loaded.size() != 2)
          throw std::runtime_error("plot: --match requires exactly two barcodes");
        auto pairs = load(match_path, subbar::read_matching_pairs);
        // Validates ids, dimensions, and intersection.
        links = subbar::matching(loaded[0], loaded[1], std::move(pairs)).pairs();
      }
      emit(out_path, subbar::render_svg(ptrs, links));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
