#include "gdnp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "gdnp/differential.hpp"
#include "gdnp/embedding.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/presentations.hpp"
#include "gdnp/rewriter.hpp"
#include "gdnp/syntax.hpp"
#include "json_out.hpp"
#include "selftest.hpp"

namespace gdnp::cli {

namespace {

struct Options {
  std::string gens;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string method = "embed";
  std::size_t max_len = 4;
  std::uint32_t max_deg = 2;
  std::string format = "text";
  std::string ambient = "GDNP0";

  std::string expr;
  std::string letters;
  std::size_t circ = 0;
  std::string rel_file;

  bool json() const { return format == "json"; }
  Bounds bounds() const { return Bounds{max_len, max_deg}; }
};

/// Command-line misuse that is not a syntax error in an expression.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> read_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open relation file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

/// Declared generators, or every identifier in the inputs in sorted order.
Alphabet make_alphabet(const Options& opt, const std::vector<std::string>& inputs) {
  if (!opt.gens.empty()) return Alphabet(split_list(opt.gens));
  std::set<std::string> names;
  for (const auto& text : inputs) {
    for (auto& n : identifiers(text)) names.insert(std::move(n));
  }
  return Alphabet(std::vector<std::string>(names.begin(), names.end()));
}

std::vector<CPoly> parse_relations(const std::vector<std::string>& lines, const Alphabet& gens) {
  std::vector<CPoly> out;
  for (const auto& line : lines) out.push_back(parse_element(line, gens));
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_normalize(const Options& opt, std::ostream& out) {
  const Alphabet gens = make_alphabet(opt, {opt.expr});
  TableauCombo result;
  if (looks_like_cpoly(opt.expr)) {
    if (opt.method != "embed") throw UsageError("word syntax input requires --method embed");
    Embedder embedder;
    result = embedder.normalize_image(parse_cpoly(opt.expr, gens));
  } else {
    const TermCombo input = parse_term_combo(opt.expr, gens);
    Embedder embedder;
    Rewriter rewriter;
    for (const auto& [t, c] : input) {
      result.add_scaled(opt.method == "embed" ? embedder.normalize(t) : rewriter.normalize(t), c);
    }
  }
  if (opt.json()) emit(out, to_json(result, gens));
  else out << print_tableaux(result, gens) << '\n';
  return ok;
}

int cmd_phi(const Options& opt, std::ostream& out) {
  const Alphabet gens = make_alphabet(opt, {opt.expr});
  const CPoly p = parse_element(opt.expr, gens);
  if (opt.json()) emit(out, to_json(p, gens));
  else out << print_cpoly(p, gens) << '\n';
  return ok;
}

int cmd_theta(const Options& opt, std::ostream& out) {
  const Alphabet gens = make_alphabet(opt, {opt.expr});
  DPoly p;
  for (const auto& [t, c] : parse_term_combo(opt.expr, gens)) p.add_scaled(theta(t), c);
  if (opt.json()) emit(out, to_json(p, gens));
  else out << print_dpoly(p, gens) << '\n';
  return ok;
}

int cmd_leading(const Options& opt, std::ostream& out) {
  const Alphabet gens = make_alphabet(opt, {opt.expr});
  const auto [w, c] = leading(parse_element(opt.expr, gens));
  if (opt.json()) {
    emit(out, {{"coeff", print_rational(c)}, {"word", to_json(w, gens)}, {"weight", weight(w)}});
  } else {
    out << print_cpoly(word_poly(w, c), gens) << '\n';
  }
  return ok;
}

int cmd_dims(const Options& opt, std::ostream& out) {
  const auto names = split_list(opt.letters);
  const Alphabet gens = make_alphabet(opt, names);
  std::vector<Letter> letters;
  for (const auto& n : names) {
    const Letter a = gens.letter(n);
    if (a.is_unit()) throw UsageError("--letters takes generators only, not e");
    letters.push_back(a);
  }
  const Monomial xl(std::move(letters));
  const std::size_t dim = graded_dim(xl, opt.circ);
  if (opt.json()) {
    json ls = json::array();
    for (Letter a : xl.letters()) ls.push_back(gens.name(a));
    emit(out, {{"letters", ls}, {"circ", opt.circ}, {"dim", dim}});
  } else {
    out << dim << '\n';
  }
  return ok;
}

json bounds_json(const Bounds& b) { return {{"max_len", b.max_len}, {"max_deg", b.max_deg}}; }

int cmd_member(const Options& opt, std::ostream& out) {
  auto lines = read_relations(opt.rel_file);
  std::vector<std::string> inputs = lines;
  inputs.push_back(opt.expr);
  const Alphabet gens = make_alphabet(opt, inputs);
  const CPoly f = parse_element(opt.expr, gens);
  const auto relations = parse_relations(lines, gens);
  const Ambient where = opt.ambient == "C" ? Ambient::C : Ambient::GDNP0;
  const bool found = member(f, relations, opt.bounds(), gens.generators(), where);
  if (opt.json()) {
    emit(out, {{"member", found},
               {"status", found ? "member" : "unknown at bound"},
               {"ambient", opt.ambient},
               {"bounds", bounds_json(opt.bounds())}});
  } else if (found) {
    out << "member\n";
  } else {
    out << "unknown at bound (max-len " << opt.max_len << ", max-deg " << opt.max_deg << ")\n";
  }
  return ok;
}

int cmd_pbw(const Options& opt, std::ostream& out) {
  const auto lines = read_relations(opt.rel_file);
  const Alphabet gens = make_alphabet(opt, lines);
  const PbwReport r = pbw_check(parse_relations(lines, gens), opt.bounds(), gens.generators());
  if (opt.json()) {
    emit(out, {{"gdnp0_rank", r.gdnp0_rank},
               {"c_weight0_rank", r.c_weight0_rank},
               {"c_rank", r.c_rank},
               {"included", r.included},
               {"consistent", r.consistent},
               {"bounds", bounds_json(opt.bounds())}});
  } else {
    out << "weight-0 span rank:            " << r.gdnp0_rank << '\n'
        << "ideal rank in weight 0:        " << r.c_weight0_rank << '\n'
        << "ideal rank:                    " << r.c_rank << '\n'
        << "weight-0 span inside ideal:    " << (r.included ? "yes" : "no") << '\n'
        << "consistent:                    " << (r.consistent ? "yes" : "no") << '\n';
  }
  return r.consistent ? ok : math_error;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  const Alphabet gens = opt.gens.empty() ? Alphabet({"a", "b"}) : Alphabet(split_list(opt.gens));
  const json report = selftest_report(gens, opt.seed, opt.trials);
  if (opt.json()) {
    emit(out, report);
  } else {
    for (const auto& c : report["checks"]) {
      out << (c["failures"] == 0 ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ("
          << c["failures"].get<std::size_t>() << "/" << c["trials"].get<std::size_t>() << " failed)\n";
      if (!c["first_failure"].is_null()) out << "  " << c["first_failure"]["message"].get<std::string>() << '\n';
    }
  }
  return report["passed"].get<bool>() ? ok : math_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact normal forms and embeddings for free GDN-Poisson algebras", "gdnp"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--gens", opt.gens, "Comma-separated generators in ascending order (default: inferred)");
  app.add_option("--seed", opt.seed, "Seed for selftest");
  app.add_option("--trials", opt.trials, "Trials per selftest check")->check(CLI::PositiveNumber);
  app.add_option("--method", opt.method, "Normalizer")->check(CLI::IsMember({"embed", "rewrite"}));
  app.add_option("--max-len", opt.max_len, "Word length bound for member and pbw-check");
  app.add_option("--max-deg", opt.max_deg, "Degree bound for member and pbw-check");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<int(const Options&, std::ostream&)> action;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };
  sub("normalize", "Tableau expansion of a term combination", cmd_normalize)
      ->add_option("EXPR", opt.expr)->required();
  sub("phi", "Image in kC[X]", cmd_phi)->add_option("EXPR", opt.expr)->required();
  sub("theta", "Image in the differential polynomial algebra", cmd_theta)->add_option("EXPR", opt.expr)->required();
  sub("leading", "Leading word of the image in kC[X]", cmd_leading)->add_option("EXPR", opt.expr)->required();
  CLI::App* dims = sub("dims", "Dimension of a multigraded component", cmd_dims);
  dims->add_option("--letters", opt.letters, "Comma-separated X-letters");
  dims->add_option("--circ", opt.circ, "Number of ∘")->required();
  CLI::App* mem = sub("member", "Bounded ideal membership", cmd_member);
  mem->add_option("--rel", opt.rel_file, "Relation file")->required();
  mem->add_option("--in", opt.ambient, "Ambient span")->check(CLI::IsMember({"C", "GDNP0"}));
  mem->add_option("EXPR", opt.expr)->required();
  sub("pbw-check", "Compare the weight-0 ideal with its generators' span", cmd_pbw)
      ->add_option("--rel", opt.rel_file, "Relation file")->required();
  sub("selftest", "Seeded property checks", cmd_selftest);

  std::vector<std::string> argv_store{"gdnp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  // Core messages usually start with the operation name already.
  auto report = [&](const std::string& kind, const std::exception& e) {
    std::string what = e.what();
    if (what.rfind(command + ": ", 0) == 0) what.erase(0, command.size() + 2);
    err << "gdnp " << command << ": " << kind << what << '\n';
  };
  try {
    return action(opt, out);
  } catch (const ParseError& e) {
    report("parse error: ", e);
    return usage_error;
  } catch (const UsageError& e) {
    report("", e);
    return usage_error;
  } catch (const MathError& e) {
    report("", e);
    return math_error;
  } catch (const std::exception& e) {
    report("internal error: ", e);
    return math_error;
  }
}

}  // namespace gdnp::cli
