#include "selftest.hpp"

#include <functional>
#include <optional>
#include <string>

#include "gdnp/embedding.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/generators.hpp"
#include "gdnp/rewriter.hpp"
#include "gdnp/syntax.hpp"

namespace gdnp::cli {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t check, std::uint64_t trial) {
  return splitmix(splitmix(splitmix(seed) ^ check) ^ trial);
}

// A trial returns nullopt on success, otherwise a description of the failure.
using Trial = std::function<std::optional<std::string>(Sampler&)>;

struct Context {
  const Alphabet& gens;
  Embedder embedder;
  Rewriter rewriter{8};

  std::string show(const CPoly& p) const { return print_cpoly(p, gens); }
  std::string show(const Term& t) const { return print_term(t, gens); }
};

CPoly unit_poly() { return word_poly(CWord::letter(Letter::unit())); }

std::optional<std::string> admissible_axioms(Context& ctx, Sampler& s) {
  const CPoly x = s.cpoly(3, 3, 2), y = s.cpoly(3, 3, 2), z = s.cpoly(3, 3, 2);
  auto mul = [](Product k, const CPoly& p, const CPoly& q) { return poly_mul(k, p, q); };
  const auto dot = Product::Dot;
  const auto star = Product::Star;
  const std::string where = " for x = " + ctx.show(x) + ", y = " + ctx.show(y) + ", z = " + ctx.show(z);

  for (auto k : {dot, star}) {
    const std::string name = k == dot ? "·" : "∗";
    if (mul(k, x, y) != mul(k, y, x)) return name + " is not commutative" + where;
    if (mul(k, mul(k, x, y), z) != mul(k, x, mul(k, y, z))) return name + " is not associative" + where;
  }
  if (mul(dot, unit_poly(), x) != x) return "e is not a unit for ·" + where;
  if (mul(star, mul(dot, x, y), z) != mul(dot, x, mul(star, y, z))) return "(x·y)∗z ≠ x·(y∗z)" + where;
  const CPoly dx = poly_derive(x), dy = poly_derive(y), de = poly_derive(unit_poly());
  if (poly_derive(mul(star, x, y)) != poly_add(mul(star, dx, y), mul(star, x, dy))) {
    return "D is not a derivation of ∗" + where;
  }
  const CPoly rhs = poly_add(poly_add(mul(dot, dx, y), mul(dot, x, dy)),
                             poly_scale(Rational(-1), mul(dot, mul(dot, x, y), de)));
  if (poly_derive(mul(dot, x, y)) != rhs) return "D(x·y) ≠ Dx·y + x·Dy − x·y·De" + where;
  return std::nullopt;
}

std::optional<std::string> gdnp_axioms(Context& ctx, Sampler& s) {
  const CPoly x = s.cpoly(2, 3, 2), y = s.cpoly(2, 3, 2), z = s.cpoly(2, 3, 2);
  auto dot = [](const CPoly& p, const CPoly& q) { return poly_mul(Product::Dot, p, q); };
  auto sub = [](const CPoly& p, const CPoly& q) { return poly_add(p, poly_scale(Rational(-1), q)); };
  const std::string where = " for x = " + ctx.show(x) + ", y = " + ctx.show(y) + ", z = " + ctx.show(z);

  if (sub(circ(circ(x, y), z), circ(x, circ(y, z))) != sub(circ(circ(y, x), z), circ(y, circ(x, z)))) {
    return "left symmetry fails" + where;
  }
  if (circ(circ(x, y), z) != circ(circ(x, z), y)) return "right commutativity fails" + where;
  if (circ(dot(x, y), z) != dot(x, circ(y, z))) return "(x·y)∘z ≠ x·(y∘z)" + where;
  if (sub(dot(circ(x, y), z), circ(x, dot(y, z))) != sub(dot(circ(y, x), z), circ(y, dot(x, z)))) {
    return "second compatibility identity fails" + where;
  }
  return std::nullopt;
}

std::optional<std::string> normalizers(Context& ctx, Sampler& s) {
  const Term t = s.term_up_to(7);
  const TableauCombo by_embed = ctx.embedder.normalize(t);
  const TableauCombo by_rewrite = ctx.rewriter.normalize(t);
  if (by_embed != by_rewrite) return "normalizers disagree on " + ctx.show(t);
  if (phi(by_embed) != phi(t)) return "normal form changes the image of " + ctx.show(t);
  for (const auto& [tb, c] : by_embed) {
    if (!is_valid(tb)) return "invalid tableau in the normal form of " + ctx.show(t);
    if (tb.circ_count() != t.counts().circ || tb.x_letters() != Monomial(x_letters(t))) {
      return "normal form of " + ctx.show(t) + " changes the grading";
    }
  }
  return std::nullopt;
}

std::optional<std::string> bijection(Context& ctx, Sampler& s) {
  const Term t = s.term_up_to(7);
  for (const auto& [tb, c] : ctx.embedder.normalize(t)) {
    const CWord w = tableau_leading(tb);
    if (word_to_tableau(w) != tb) return "word_to_tableau does not invert tableau_leading on " + print_word(w, ctx.gens);
    if (ctx.embedder.tableau_image(tb).leading().first != w) {
      return "closed-form leading word is wrong for " + ctx.show(tableau_term(tb));
    }
  }
  return std::nullopt;
}

std::optional<std::string> differential(Context& ctx, Sampler& s) {
  const Term x = s.term_up_to(4), y = s.term_up_to(4);
  if (!theta(Term::circ(x, Term::unit())).is_zero()) return "θ(x∘e) ≠ 0 for x = " + ctx.show(x);
  if (theta(Term::circ(x, y)) != dcirc(theta(x), theta(y))) {
    return "θ is not a ∘-homomorphism on " + ctx.show(x) + ", " + ctx.show(y);
  }
  if (theta(Term::dot(x, y)) != dmul(theta(x), theta(y))) {
    return "θ is not a ·-homomorphism on " + ctx.show(x) + ", " + ctx.show(y);
  }
  return std::nullopt;
}

std::optional<std::string> round_trip(Context& ctx, Sampler& s) {
  const Term t = s.term_up_to(8);
  const std::string text = ctx.show(t);
  if (parse_term(text, ctx.gens) != t) return "term does not survive print/parse: " + text;
  const CPoly p = s.cpoly(3, 4, 3);
  const std::string ptext = ctx.show(p);
  if (parse_cpoly(ptext, ctx.gens) != p) return "polynomial does not survive print/parse: " + ptext;
  return std::nullopt;
}

}  // namespace

json selftest_report(const Alphabet& gens, std::uint64_t seed, std::size_t trials) {
  Context ctx{gens, {}, Rewriter(8)};
  const std::vector<std::pair<std::string, std::optional<std::string> (*)(Context&, Sampler&)>> checks{
      {"admissible_axioms", admissible_axioms}, {"gdnp_axioms", gdnp_axioms},
      {"normalizers_agree", normalizers},       {"tableau_bijection", bijection},
      {"differential", differential},           {"parse_print_round_trip", round_trip},
  };

  json report_checks = json::array();
  bool passed = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::size_t failures = 0;
    json first = nullptr;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Sampler sampler(gens.generators(), trial_seed(seed, i, trial));
      std::optional<std::string> failure;
      try {
        failure = checks[i].second(ctx, sampler);
      } catch (const std::exception& ex) {
        failure = std::string("exception: ") + ex.what();
      }
      if (failure) {
        if (failures++ == 0) first = {{"trial", trial}, {"message", *failure}};
      }
    }
    passed = passed && failures == 0;
    report_checks.push_back(
        {{"name", checks[i].first}, {"trials", trials}, {"failures", failures}, {"first_failure", first}});
  }

  json gen_names = json::array();
  for (const auto& n : gens.names()) gen_names.push_back(n);
  return {{"seed", seed}, {"trials", trials}, {"gens", gen_names}, {"checks", report_checks}, {"passed", passed}};
}

}  // namespace gdnp::cli
