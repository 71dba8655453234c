#include "glcaps/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "glcaps/caps.hpp"
#include "glcaps/error.hpp"
#include "glcaps/jantzen.hpp"
#include "glcaps/multiplicities.hpp"
#include "glcaps/render.hpp"
#include "glcaps/text_format.hpp"
#include "glcaps/verify.hpp"
#include "glcaps/walled_brauer.hpp"

namespace glcaps {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "glcaps/1";

struct Args {
  int p = 0;
  int n = 0;
  int s1 = 0;
  int s2 = 0;
  int s = 0;
  int r = 0;
  long long delta = 0;
  int brauer_n = 0;
  std::string lambda;
  std::string mu;
  std::string a;
  std::string b;
  std::string svg;
  std::string suite;
  std::string eval;
  bool json = false;
  bool unicode = false;
  bool verbose = false;
  bool rows = false;
  bool reduced = false;
  bool oracle = false;
  // verify overrides
  int max_size = -1;
  int s_max = -1;
  int max_rs = -1;
  int triples = -1;
  std::uint64_t seed = 1;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw InvalidParams("p must be a prime, got " + std::to_string(p));
}

void require_rank(int n) {
  if (n < 1) throw InvalidParams("n must be >= 1");
}

Glyphs glyphs(const Args& a) { return a.unicode ? Glyphs::Unicode : Glyphs::Ascii; }

json weight_json(const DominantWeight& w) {
  return {{"text", format_weight(w)},
          {"lambda1", std::vector<int>(w.lambda1().parts().begin(), w.lambda1().parts().end())},
          {"lambda2", std::vector<int>(w.lambda2().parts().begin(), w.lambda2().parts().end())}};
}

json combination_json(const CharacterCombination& c) {
  json terms = json::array();
  for (const auto& [w, coeff] : c.terms()) terms.push_back({{"weight", weight_json(w)}, {"coefficient", coeff.str()}});
  return terms;
}

std::string combination_text(const CharacterCombination& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [w, coeff] : c.terms()) {
    const bool negative = coeff < 0;
    const BigInt mag = negative ? BigInt(-coeff) : coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += mag.str() + "*";
    out += "chi(" + format_weight(w) + ")";
  }
  return out;
}

json diagram_json(const DiagramString& d) {
  return {{"shift", d.shift}, {"wall", d.wall}, {"symbols", d.ascii()}};
}

json caps_json(const CapDiagram& d) {
  json caps = json::array();
  for (const auto& c : d.caps)
    caps.push_back({{"left", c.left + 1},
                    {"right", c.right + 1},
                    {"left_label", d.base.label_at(c.left)},
                    {"right_label", d.base.label_at(c.right)},
                    {"side", c.side == Side::Left ? "left" : "right"},
                    {"orientation", orientation_name(orientation(d, c))}});
  return {{"kind", d.kind == CapKind::Cap ? "cap" : "cocap"}, {"base", diagram_json(d.base)}, {"caps", caps}};
}

json common(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Subcommand handlers. Each writes to `out` (a buffer flushed on success).

void cmd_diagram(const Args& a, std::ostream& out) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const ArrowDiagram d = arrow_diagram(lambda, a.s1, a.s2, a.p);
  if (!d.is_single()) {
    json j = common("diagram");
    j["weight"] = weight_json(lambda);
    j["single"] = false;
    j["below"] = d.below();
    j["above"] = d.above();
    if (a.json) return emit(out, j);
    out << "multiset diagram (labels 0.." << a.p - 1 << ")\n";
    for (int x = 0; x < a.p; ++x)
      out << x << ": " << d.below()[x] << " up, " << d.above()[x] << " down\n";
    return;
  }
  const DiagramString str = normalise_shift(d);
  if (a.json) {
    json j = common("diagram");
    j["weight"] = weight_json(lambda);
    j["single"] = true;
    j["diagram"] = diagram_json(str);
    j["below_wall_gap"] = d.below_wall_gap();
    j["above_wall_gap"] = d.above_wall_gap();
    return emit(out, j);
  }
  out << render_compact(str, glyphs(a)) << "\n" << render_header(d, str) << "\n";
  if (a.rows) out << render_rows(str, glyphs(a));
}

void cmd_caps(const Args& a, std::ostream& out, CapKind kind) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const char* name = kind == CapKind::Cap ? "caps" : "cocaps";
  CapDiagram d = kind == CapKind::Cap ? cap_diagram(lambda, a.s1, a.s2, a.p) : co_diagram(lambda, a.s1, a.s2, a.p);
  std::optional<DominantWeight> other;
  if (!a.mu.empty()) {
    other = parse_bipartition(a.mu, a.n);
    d = kind == CapKind::Cap ? cap_overlay(lambda, *other, a.s1, a.s2, a.p)
                             : cocap_overlay(lambda, *other, a.s1, a.s2, a.p);
  }
  if (!a.svg.empty()) {
    std::ofstream file(a.svg);
    if (!file) throw std::runtime_error("cannot write " + a.svg);
    file << render_svg(d);
  }
  if (a.json) {
    json j = common(name);
    j["weight"] = weight_json(lambda);
    if (other) {
      j["overlay"] = weight_json(*other);
      j["oriented"] = is_oriented(d);
    }
    j["diagram"] = caps_json(d);
    return emit(out, j);
  }
  out << render_caps(d, glyphs(a));
  if (other) out << "oriented: " << (is_oriented(d) ? "yes" : "no") << "\n";
}

void cmd_jsf(const Args& a, std::ostream& out) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const JsfResult r = a.reduced ? reduced_jsf(lambda, a.p) : full_jsf(lambda, a.p);
  if (a.json) {
    json j = common("jsf");
    j["weight"] = weight_json(lambda);
    j["reduced"] = a.reduced;
    j["sum"] = combination_json(r.sum);
    json terms = json::array();
    for (const auto& t : r.terms)
      terms.push_back({{"i", t.reflection.i},
                       {"j", t.reflection.j},
                       {"l", t.reflection.level},
                       {"a", t.a},
                       {"valuation", t.valuation},
                       {"sign", t.sign},
                       {"target", weight_json(t.target)}});
    j["terms"] = terms;
    return emit(out, j);
  }
  out << combination_text(r.sum) << "\n";
  if (a.verbose)
    for (const auto& t : r.terms)
      out << "  i=" << t.reflection.i << " j=" << t.reflection.j << " l=" << t.reflection.level << " a=" << t.a
          << " coeff=" << t.valuation * t.sign << " -> chi(" << format_weight(t.target) << ")\n";
}

void cmd_preceq(const Args& a, std::ostream& out) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const DominantWeight mu = parse_bipartition(a.mu, a.n);
  std::optional<std::vector<DominantWeight>> witness;
  bool value = false;
  if (a.oracle) {
    value = preceq_oracle(mu, lambda, a.p);
  } else {
    witness = preceq_witness(mu, lambda, a.s1, a.s2, a.p);
    value = witness.has_value();
  }
  if (a.json) {
    json j = common("preceq");
    j["lambda"] = weight_json(lambda);
    j["mu"] = weight_json(mu);
    j["value"] = value;
    if (witness) {
      j["witness"] = json::array();
      for (const auto& w : *witness) j["witness"].push_back(weight_json(w));
    }
    return emit(out, j);
  }
  out << (value ? "true" : "false") << "\n";
  if (a.verbose && witness)
    for (const auto& w : *witness) out << "  " << format_weight(w) << "\n";
}

void cmd_block(const Args& a, std::ostream& out) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const auto block = block_below(lambda, a.s1, a.s2, a.p);
  if (a.json) {
    json j = common("block");
    j["lambda"] = weight_json(lambda);
    j["weights"] = json::array();
    for (const auto& w : block) j["weights"].push_back(weight_json(w));
    return emit(out, j);
  }
  for (const auto& w : block) out << format_weight(w) << "\n";
}

void cmd_multiplicity(const Args& a, std::ostream& out, bool tilting) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const DominantWeight mu = parse_bipartition(a.mu, a.n);
  const MultiplicityTrace t = tilting ? explain_tilting(lambda, mu, a.s1, a.s2, a.p)
                                      : explain_decomp(lambda, mu, a.s1, a.s2, a.p);
  if (a.json) {
    json j = common(tilting ? "tilting" : "decnum");
    j["lambda"] = weight_json(lambda);
    j["mu"] = weight_json(mu);
    j["value"] = t.value;
    j["preceq"] = !t.witness.empty();
    j["witness"] = json::array();
    for (const auto& w : t.witness) j["witness"].push_back(weight_json(w));
    if (t.overlay) j["overlay"] = caps_json(*t.overlay);
    return emit(out, j);
  }
  out << t.value << "\n";
  if (!a.verbose) return;
  if (t.witness.empty()) {
    out << "mu is not below lambda\n";
    return;
  }
  out << "witness:";
  for (const auto& w : t.witness) out << " " << format_weight(w);
  out << "\n" << render_caps(*t.overlay, glyphs(a));
}

void cmd_decmat(const Args& a, std::ostream& out) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const DecompositionMatrix m = decomposition_matrix(lambda, a.s1, a.s2, a.p);
  if (a.json) {
    json j = common("decmat");
    j["lambda"] = weight_json(lambda);
    j["weights"] = json::array();
    for (const auto& w : m.weights) j["weights"].push_back(weight_json(w));
    j["rows"] = json::array();
    for (std::size_t r = 0; r < m.weights.size(); ++r)
      for (std::size_t c = 0; c < m.weights.size(); ++c)
        j["rows"].push_back(
            {{"lambda", format_weight(m.weights[r])}, {"mu", format_weight(m.weights[c])}, {"value", m.entries[r][c]}});
    j["entries"] = m.entries;
    return emit(out, j);
  }
  std::size_t width = 0;
  for (const auto& w : m.weights) width = std::max(width, format_weight(w).size());
  for (std::size_t r = 0; r < m.weights.size(); ++r) {
    const std::string label = format_weight(m.weights[r]);
    out << label << std::string(width - label.size(), ' ') << " |";
    for (std::size_t c = 0; c < m.weights.size(); ++c) out << " " << m.entries[r][c];
    out << "\n";
  }
}

void cmd_dagger(const Args& a, std::ostream& out) {
  require_prime(a.p);
  require_rank(a.n);
  const DominantWeight lambda = parse_bipartition(a.lambda, a.n);
  const DominantWeight d = dagger(lambda, a.s, a.p);
  if (a.json) {
    json j = common("dagger");
    j["lambda"] = weight_json(lambda);
    j["dagger"] = weight_json(d);
    return emit(out, j);
  }
  out << format_weight(d) << "\n";
}

void cmd_brauer_count(const Args& a, std::ostream& out) {
  if (a.r < 0 || a.s < 0 || a.r + a.s > 9) throw InvalidParams("brauer count needs 0 <= r, s and r + s <= 9");
  const auto diagrams = enumerate_diagrams(a.r, a.s);
  if (a.json) {
    json j = common("brauer count");
    j["r"] = a.r;
    j["s"] = a.s;
    j["count"] = diagrams.size();
    if (a.verbose) {
      j["diagrams"] = json::array();
      for (const auto& d : diagrams) j["diagrams"].push_back(format_walled(d));
    }
    return emit(out, j);
  }
  out << diagrams.size() << "\n";
  if (a.verbose)
    for (const auto& d : diagrams) out << format_walled(d) << "\n";
}

void cmd_brauer_mul(const Args& a, std::ostream& out) {
  const WalledElement product = multiply(parse_walled(a.a), parse_walled(a.b));
  if (a.json) {
    json j = common("brauer mul");
    j["terms"] = json::array();
    for (const auto& [d, c] : product.terms()) {
      json coeffs = json::array();
      for (const auto& x : c.coefficients()) coeffs.push_back(x.str());
      j["terms"].push_back({{"diagram", format_walled(d)}, {"coefficients", coeffs}});
    }
    return emit(out, j);
  }
  for (const auto& [d, c] : product.terms()) out << format_poly(c) << " * [" << format_walled(d) << "]\n";
}

void cmd_brauer_dims(const Args& a, std::ostream& out) {
  if (a.r < 0 || a.s < 0) throw InvalidParams("brauer dims needs r, s >= 0");
  json labels = json::array();
  std::ostringstream text;
  BigInt total = 0;
  for (const auto& [l1, l2] : cell_labels(a.r, a.s)) {
    const BigInt d = specht_dim_walled(l1, l2, a.r, a.s);
    total += d * d;
    const std::string name = format_partition(l1) + "/" + format_partition(l2);
    labels.push_back({{"label", name}, {"t", a.r - l1.size()}, {"dim", d.str()}});
    text << name << " t=" << a.r - l1.size() << " dim=" << d << "\n";
  }
  const BigInt expected = factorial(a.r + a.s);
  if (a.json) {
    json j = common("brauer dims");
    j["r"] = a.r;
    j["s"] = a.s;
    j["labels"] = labels;
    j["sum_of_squares"] = total.str();
    j["algebra_dim"] = expected.str();
    j["dimension_identity"] = dimension_identity_check(a.r, a.s);
    return emit(out, j);
  }
  out << text.str() << "sum of squares " << total << " = (r+s)! " << expected << "\n";
}

void cmd_brauer_decnum(const Args& a, std::ostream& out) {
  require_prime(a.p);
  const auto split = [](const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return std::pair{parse_partition(text), Partition{}};
    return std::pair{parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1))};
  };
  const auto [l1, l2] = split(a.lambda);
  const auto [m1, m2] = split(a.mu);
  if (a.brauer_n > 0 && mod_p(a.brauer_n - a.delta % a.p, a.p) != 0)
    throw NotApplicable("n must be congruent to delta mod p");
  const WalledDecomposition res = a.brauer_n > 0
                                      ? walled_decomp_number_at(m1, m2, l1, l2, a.r, a.s, a.brauer_n, a.p)
                                      : walled_decomp_number(m1, m2, l1, l2, a.r, a.s, a.delta, a.p);
  if (a.json) {
    json j = common("brauer decnum");
    j["value"] = res.value;
    j["n"] = res.n;
    j["s1"] = res.s1;
    j["s2"] = res.s2;
    return emit(out, j);
  }
  out << res.value << "\n";
  if (a.verbose) out << "n=" << res.n << " s1=" << res.s1 << " s2=" << res.s2 << "\n";
}

// Returns the exit code: 0 if every suite passed.
int cmd_verify(const Args& a, std::ostream& out) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else {
    const auto known = suite_names();
    if (std::find(known.begin(), known.end(), a.suite) == known.end())
      throw ParseError("unknown verify suite '" + a.suite + "'");
    names = {a.suite};
  }
  json reports = json::array();
  bool ok = true;
  for (const auto& name : names) {
    VerifyOptions opt = default_options(name);
    if (a.p > 0) {
      require_prime(a.p);
      opt.primes = {a.p};
    }
    if (a.n > 0) opt.ranks = {a.n};
    if (a.max_size >= 0) opt.max_size = a.max_size;
    if (a.s_max >= 0) opt.s_max = a.s_max;
    if (a.max_rs >= 0) opt.max_rs = a.max_rs;
    if (a.triples >= 0) opt.triples = a.triples;
    opt.seed = a.seed;
    const SuiteReport r = run_suite(name, opt);
    ok = ok && r.passed();
    reports.push_back({{"suite", r.name},
                       {"passed", r.passed()},
                       {"checked", r.checked},
                       {"failed", r.failed},
                       {"failures", r.failures},
                       {"seconds", r.seconds}});
    if (!a.json) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checks, " << r.failed
          << " failed (" << r.seconds << " s)\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
  }
  if (a.json) {
    json j = common("verify");
    j["suites"] = reports;
    j["passed"] = ok;
    emit(out, j);
  }
  return ok ? 0 : 3;
}

void add_weight_options(CLI::App* sub, Args& a, bool with_mu, bool mu_required) {
  sub->add_option("--p", a.p, "characteristic (prime)")->required();
  sub->add_option("--n", a.n, "rank of GL_n")->required();
  sub->add_option("--lambda", a.lambda, "weight 'a,b/c,d'")->required();
  if (with_mu) {
    auto* opt = sub->add_option("--mu", a.mu, "second weight 'a,b/c,d'");
    if (mu_required) opt->required();
  }
}

void add_wall_options(CLI::App* sub, Args& a) {
  sub->add_option("--s1", a.s1, "arrows below the line")->required();
  sub->add_option("--s2", a.s2, "arrows above the line")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Arrow diagrams, cap diagrams and decomposition numbers for GL_n and walled Brauer algebras",
               "glcaps"};
  app.require_subcommand(1);
  app.add_flag("--json", a.json, "machine-readable output");
  app.add_flag("--unicode", a.unicode, "draw arrows with Unicode glyphs");
  app.add_flag("-v,--verbose", a.verbose, "explain the result");

  auto* diagram = app.add_subcommand("diagram", "arrow diagram of a weight");
  add_weight_options(diagram, a, false, false);
  add_wall_options(diagram, a);
  diagram->add_flag("--rows", a.rows, "two-row rendering with walls");

  auto* caps = app.add_subcommand("caps", "cap diagram c_lambda, optionally overlaid on mu");
  auto* cocaps = app.add_subcommand("cocaps", "cap codiagram co_lambda, optionally overlaid on mu");
  for (auto* sub : {caps, cocaps}) {
    add_weight_options(sub, a, true, false);
    add_wall_options(sub, a);
    sub->add_option("--svg", a.svg, "also write an SVG drawing to this path");
  }

  auto* jsf = app.add_subcommand("jsf", "Jantzen sum formula");
  add_weight_options(jsf, a, false, false);
  jsf->add_flag("--reduced", a.reduced, "restrict to the reduced root range");

  auto* pre = app.add_subcommand("preceq", "is mu ≼ lambda");
  add_weight_options(pre, a, true, true);
  pre->add_option("--s1", a.s1, "arrows below the line");
  pre->add_option("--s2", a.s2, "arrows above the line");
  pre->add_flag("--oracle", a.oracle, "use the reflection definition");

  auto* block = app.add_subcommand("block", "all mu ≼ lambda, sorted");
  add_weight_options(block, a, false, false);
  add_wall_options(block, a);

  auto* tilting = app.add_subcommand("tilting", "(T(lambda) : Delta(mu))");
  auto* decnum = app.add_subcommand("decnum", "[Delta(lambda) : L(mu)]");
  for (auto* sub : {tilting, decnum}) {
    add_weight_options(sub, a, true, true);
    add_wall_options(sub, a);
  }

  auto* decmat = app.add_subcommand("decmat", "decomposition matrix of the weights below lambda");
  add_weight_options(decmat, a, false, false);
  add_wall_options(decmat, a);

  auto* dag = app.add_subcommand("dagger", "flip all single arrows of the (s,s)-diagram");
  add_weight_options(dag, a, false, false);
  dag->add_option("--s", a.s, "s1 = s2 = s")->required();

  auto* brauer = app.add_subcommand("brauer", "walled Brauer algebra");
  brauer->require_subcommand(1);
  auto* bcount = brauer->add_subcommand("count", "number of basis diagrams");
  auto* bdims = brauer->add_subcommand("dims", "cell module dimensions");
  for (auto* sub : {bcount, bdims}) {
    sub->add_option("--r", a.r, "nodes left of the wall")->required();
    sub->add_option("--s", a.s, "nodes right of the wall")->required();
  }
  auto* bmul = brauer->add_subcommand("mul", "product of two diagrams");
  bmul->add_option("--a", a.a, "'r s | T1-B1,...'")->required();
  bmul->add_option("--b", a.b, "'r s | T1-B1,...'")->required();
  auto* bdec = brauer->add_subcommand("decnum", "[S(mu) : D(lambda)]");
  bdec->add_option("--r", a.r, "nodes left of the wall")->required();
  bdec->add_option("--s", a.s, "nodes right of the wall")->required();
  bdec->add_option("--delta", a.delta, "loop parameter (reduced mod p)");
  bdec->add_option("--n", a.brauer_n, "use this n instead of the smallest admissible one");
  bdec->add_option("--p", a.p, "characteristic (prime)")->required();
  bdec->add_option("--lambda", a.lambda, "label 'a,b/c,d'")->required();
  bdec->add_option("--mu", a.mu, "label 'a,b/c,d'")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", a.suite, "jsf-reduced | arrow-pairs | preceq | structural | characters | brauer | all")
      ->required();
  verify->add_option("--p", a.p, "restrict to one prime");
  verify->add_option("--n", a.n, "restrict to one rank");
  verify->add_option("--max-size", a.max_size, "bound on |lambda1| + |lambda2|");
  verify->add_option("--s-max", a.s_max, "bound on s1, s2");
  verify->add_option("--max-rs", a.max_rs, "bound on r + s");
  verify->add_option("--triples", a.triples, "random associativity triples");
  verify->add_option("--seed", a.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (app.got_subcommand(pre) && !a.oracle && (a.s1 == 0 || a.s2 == 0)) {
    err << "error: preceq needs --s1 and --s2 unless --oracle is given\n";
    return 1;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (app.got_subcommand(diagram)) cmd_diagram(a, buffer);
    else if (app.got_subcommand(caps)) cmd_caps(a, buffer, CapKind::Cap);
    else if (app.got_subcommand(cocaps)) cmd_caps(a, buffer, CapKind::Cocap);
    else if (app.got_subcommand(jsf)) cmd_jsf(a, buffer);
    else if (app.got_subcommand(pre)) cmd_preceq(a, buffer);
    else if (app.got_subcommand(block)) cmd_block(a, buffer);
    else if (app.got_subcommand(tilting)) cmd_multiplicity(a, buffer, true);
    else if (app.got_subcommand(decnum)) cmd_multiplicity(a, buffer, false);
    else if (app.got_subcommand(decmat)) cmd_decmat(a, buffer);
    else if (app.got_subcommand(dag)) cmd_dagger(a, buffer);
    else if (bcount->parsed()) cmd_brauer_count(a, buffer);
    else if (bmul->parsed()) cmd_brauer_mul(a, buffer);
    else if (bdims->parsed()) cmd_brauer_dims(a, buffer);
    else if (bdec->parsed()) cmd_brauer_decnum(a, buffer);
    else if (app.got_subcommand(verify)) code = cmd_verify(a, buffer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << buffer.str();
  return code;
}

}  // namespace glcaps
