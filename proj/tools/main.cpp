// apolar: command-line front end for the apolar_core library.
#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "apolar/apolarity.hpp"
#include "apolar/automorphism.hpp"
#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/obstruction.hpp"
#include "apolar/structure.hpp"

using namespace apolar;

namespace {

// Largest variable index mentioned in the text, at least 1.
int infer_vars(const std::string& text) {
  static const std::regex var("[xyXY]([0-9]+)");
  int n = 1;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    n = std::max(n, std::stoi((*it)[1]));
  return n;
}

std::vector<Poly> parse_list(const std::string& text, int n) {
  std::vector<Poly> out;
  std::string cur;
  for (char ch : text + ";") {
    if (ch == ';' || ch == ',') {
      if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_poly(cur, n, Side::X));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

TermOrder order_by_name(const std::string& name, int n) {
  if (name == "degrevlex") return TermOrder::degrevlex(n);
  if (name == "lex") return TermOrder::lex(n);
  return TermOrder::product(n);
}

struct Common {
  std::string dual;
  std::optional<int> n;
  int vars() const { return n ? *n : infer_vars(dual); }
  DualGenerator generator() const { return DualGenerator(parse_poly(dual, vars(), Side::Y)); }
};

int cmd_ann(const Common& c, const std::string& order) {
  const DualGenerator f = c.generator();
  const TermOrder ord = order_by_name(order, f.n());
  const Ideal j = annihilator(f);
  std::cout << "# reduced Groebner basis of Ann(F), " << ord.name() << "\n";
  for (const auto& g : j.groebner(ord).polys) std::cout << render(g) << "\n";
  return 0;
}

int cmd_hilbert(const Common& c, const std::string& ideal) {
  HilbertFunction h;
  if (!c.dual.empty()) {
    h = hilbert_from_tdf(c.generator());
  } else {
    const int n = c.n ? *c.n : infer_vars(ideal);
    Ideal i(n, parse_list(ideal, n));
    h = quotient_hilbert(i.groebner(TermOrder::product(n)));
  }
  std::cout << h.str() << ", dim " << h.total() << "\n";
  return 0;
}

int cmd_normalize(const Common& c) {
  const NormalizationCertificate cert = normalize_2stretched(c.generator());
  std::cout << "F_simple = " << render(cert.simple) << "\n";
  std::cout << "m = " << cert.m << "\n";
  for (int i = 0; i < cert.phi.n(); ++i)
    std::cout << "phi(x" << i + 1 << ") = " << render(cert.phi.images()[static_cast<std::size_t>(i)]) << "\n";
  std::cout << "verified: " << (cert.verified() ? "yes" : "no") << "\n";
  return cert.verified() ? 0 : 1;
}

int cmd_tangent(const Common& c) {
  const TangentData td = tangent_data(c.generator());
  std::cout << "H(S/J) = " << td.hilbert_J.str() << "\n";
  std::cout << "H(S/J^2) = " << td.hilbert_J2.str() << "\n";
  std::cout << "N = " << td.N;
  if (td.hilbert_J.total() == 11) std::cout << (td.N > kUnobstructedN ? ", obstructed" : ", unobstructed");
  std::cout << "\n";
  return 0;
}

int cmd_reproduce(const std::string& name, int samples, std::uint64_t seed, const std::string& json,
                  const std::string& t, bool no_specials) {
  ReproduceOptions opts;
  opts.include_specials = !no_specials;
  Cubic cubic;
  if (name == "fermat") {
    cubic = Cubic::FermatT;
    opts.t = Rat(0);
  } else {
    cubic = cubic_from_name(name);
  }
  if (!t.empty()) opts.t = parse_rat(t);
  const auto reports = reproduce_case(cubic, samples, seed, opts);
  std::cout << reports_to_table(reports);
  if (!json.empty()) {
    std::ofstream out(json);
    if (!out) throw DomainError("cannot write " + json);
    out << reports_to_json(reports) << "\n";
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.agree;
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& name, const std::string& b, const std::string& t) {
  const GeneratorList l = list_from_name(name);
  const BVector bv = b.empty() ? BVector{} : parse_bvector(b);
  std::optional<Rat> tv;
  if (!t.empty()) tv = parse_rat(t);
  std::cout << (verify_published_generators(l, bv, tv) ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macaulay inverse systems, 2-stretched normal forms and tangent dimensions"};
  app.require_subcommand(1, 1);

  Common common;
  auto add_dual = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--dual", common.dual, "dual generator in y1..yn");
    if (required) opt->required();
    sub->add_option("--n", common.n, "number of variables (default: largest index used)")->check(CLI::Range(1, kMaxVars));
  };

  std::string order = "product";
  auto* ann = app.add_subcommand("ann", "reduced Groebner basis of Ann(F)");
  add_dual(ann, true);
  ann->add_option("--order", order, "degrevlex, lex or product")
      ->check(CLI::IsMember({"degrevlex", "lex", "product"}));

  std::string ideal;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of S/Ann(F) or S/I");
  add_dual(hilbert, false);
  hilbert->add_option("--ideal", ideal, "generators in x1..xn separated by ';' or ','");
  hilbert->require_option(1, 2);

  auto* normalize = app.add_subcommand("normalize", "normal form of a 2-stretched dual generator");
  add_dual(normalize, true);

  auto* tangent = app.add_subcommand("tangent", "N = dim S/J^2 - dim S/J for J = Ann(F)");
  add_dual(tangent, true);

  std::string case_name, json, t, b;
  int samples = 10;
  std::uint64_t seed = 42;
  bool no_specials = false;
  auto* reproduce = app.add_subcommand("reproduce", "sample a family and compare N with the predicted locus");
  reproduce->add_option("--case", case_name, "cubic name or 'fermat'")->required();
  reproduce->add_option("--samples", samples)->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", seed);
  reproduce->add_option("--json", json, "write the report array here");
  reproduce->add_option("--t", t, "fix the pencil parameter (fermat_t)");
  reproduce->add_flag("--no-specials", no_specials, "skip the fixed t = 0, 6 samples");

  auto* verify = app.add_subcommand("verify-gens", "check a printed generator list against Ann(F)");
  verify->add_option("--case", case_name, "generator list name")->required();
  verify->add_option("--b", b, "six rationals");
  verify->add_option("--t", t, "pencil parameter (fermat_pencil)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ann) return cmd_ann(common, order);
    if (*hilbert) {
      if (!common.dual.empty() && !ideal.empty()) throw CLI::ValidationError("use only one of --dual, --ideal");
      return cmd_hilbert(common, ideal);
    }
    if (*normalize) return cmd_normalize(common);
    if (*tangent) return cmd_tangent(common);
    if (*reproduce) return cmd_reproduce(case_name, samples, seed, json, t, no_specials);
    if (*verify) return cmd_verify(case_name, b, t);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
