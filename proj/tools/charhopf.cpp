// charhopf: command-line front end.
//
// Exit codes: 0 success, 1 a check found a violated identity (or an
// internal error), 2 usage or parse error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "charhopf/charhopf.hpp"

using namespace charhopf;

namespace {

struct Options {
  std::string lhs, rhs, pi = "2", kind = "M", braid, seed = "s[]";
  int degree = 4, weight = 3, strands = 0;
  bool json = false, direct = false, inverse = false;
};

// "[2,1]" names s_(2,1); anything else is a term expression.
SymFunc parse_operand(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return SymFunc::schur(parse_partition(text));
  return parse_symfunc(text);
}

void require_degree(int d, const char* flag) {
  if (d < 0) throw parse_error(std::string(flag) + " must be non-negative");
}

void emit(const Options& o, const SymFunc& f) {
  if (o.json)
    std::cout << to_json(f).dump() << '\n';
  else
    std::cout << to_string(f) << '\n';
}

void emit(const Options& o, const TensorSF& t) {
  if (o.json)
    std::cout << to_json(t).dump() << '\n';
  else
    std::cout << to_string(t) << '\n';
}

int emit_report(const Options& o, const std::string& what, const CheckReport& rep) {
  if (o.json) {
    Json j{{"check", what}, {"ok", rep.ok}, {"checked", rep.checked}};
    j["counterexample"] = rep.ok ? Json(nullptr) : Json(rep.counterexample);
    std::cout << j.dump() << '\n';
  } else if (rep.ok) {
    std::cout << "OK (" << rep.checked << " identities verified)\n";
  } else {
    std::cout << "FAILED: " << what << " (" << rep.checked << " identities checked)\ncounterexample: "
              << rep.counterexample << '\n';
  }
  return rep.ok ? 0 : 1;
}

std::string matrix_string(const std::vector<std::vector<int>>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

std::string list_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Json stats_json(const BraidWord& b, const LinkStats& st) {
  return Json{{"braid", b.to_string()},          {"strands", b.strands()},
              {"length", b.length()},            {"writhe", b.writhe()},
              {"kappa", st.kappa},               {"cycles", st.cycles},
              {"components", st.components()},   {"component_writhes", st.component_writhes},
              {"linking_matrix", st.linking_matrix}};
}

void print_stats(const BraidWord& b, const LinkStats& st) {
  std::cout << "braid: " << (b.length() ? b.to_string() : "(empty)") << " on " << b.strands() << " strands\n"
            << "length: " << b.length() << "\nwrithe: w=" << b.writhe() << "\nkappa: " << list_string(st.kappa)
            << " = " << cycle_notation(st) << "\ncomponents: " << st.components()
            << "\ncomponent writhes: " << list_string(st.component_writhes) << '\n';
  for (std::size_t i = 0; i < st.components(); ++i)
    for (std::size_t j = i + 1; j < st.components(); ++j)
      std::cout << "linking: w_" << i + 1 << j + 1 << " = " << st.linking_matrix[i][j] << '\n';
}

int knot_invariant(const Options& o) {
  require_degree(o.degree, "--degree");
  const PiContext ctx(parse_partition(o.pi));
  const BraidWord b = BraidWord::parse(o.braid, o.strands);
  const LinkStats st = link_stats(b);
  const int w = b.writhe();

  if (o.direct) {
    const SymFunc seed = parse_operand(o.seed);
    const SymFunc direct = invariant_direct(ctx, b, seed, o.degree);
    const SymFunc closed = twist(ctx, seed, w, o.degree);
    if (o.json) {
      Json j = stats_json(b, st);
      j["pi"] = to_json(ctx.pi());
      j["degree"] = o.degree;
      j["seed"] = to_json(seed);
      j["invariant"] = to_json(direct);
      j["agrees_with_closed_form"] = direct == closed;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "writhe: w=" << w << "\nI(" << to_string(seed) << ") = " << to_string(direct) << '\n'
                << "closed form Q^" << w << "*seed: " << (direct == closed ? "agrees" : "DISAGREES") << " in grades <= "
                << o.degree << '\n';
    }
    return direct == closed ? 0 : 1;
  }

  const TensorSF inv = invariant_closed_form(ctx, b, o.degree);
  if (o.json) {
    Json j = stats_json(b, st);
    j["pi"] = to_json(ctx.pi());
    j["degree"] = o.degree;
    j["invariant"] = st.components() == 1 ? to_json(as_symfunc(inv)) : to_json(inv);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "writhe: w=" << w << '\n';
  if (st.components() == 1) {
    std::cout << "Q^" << w << " = " << to_string(as_symfunc(inv)) << '\n';
  } else {
    std::cout << "components: " << st.components() << ", component writhes " << list_string(st.component_writhes)
              << ", linking matrix " << matrix_string(st.linking_matrix) << '\n'
              << "I = " << to_string(inv) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric-function Hopf algebra, pi-deformations and braid invariants"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
  auto add_lhs = [&](CLI::App* c) { c->add_option("--lhs", o.lhs, "Symmetric function, e.g. \"s[2,1] + 2*s[1]\"")->required(); };
  auto add_rhs = [&](CLI::App* c) { c->add_option("--rhs", o.rhs, "Symmetric function")->required(); };
  auto add_pi = [&](CLI::App* c) { c->add_option("--pi", o.pi, "Partition pi, e.g. 2 or [2,1]")->required(); };
  auto add_degree = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--degree", o.degree, "Truncation degree D");
    if (required) opt->required();
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* desc, std::function<int()> fn) {
    auto* c = parent->add_subcommand(name, desc);
    c->callback([&action, fn] { action = fn; });
    add_json(c);
    return c;
  };

  // sf
  auto* sf = app.add_subcommand("sf", "Operations in the Hopf algebra of symmetric functions");
  sf->require_subcommand(1);
  {
    auto* c = leaf(sf, "mult", "Outer product lhs * rhs", [&] {
      emit(o, parse_operand(o.lhs) * parse_operand(o.rhs));
      return 0;
    });
    add_lhs(c);
    add_rhs(c);
    c = leaf(sf, "skew", "Skew lhs / rhs", [&] {
      emit(o, skew(parse_operand(o.lhs), parse_operand(o.rhs)));
      return 0;
    });
    add_lhs(c);
    add_rhs(c);
    c = leaf(sf, "coprod", "Coproduct of lhs", [&] {
      emit(o, coproduct(parse_operand(o.lhs)));
      return 0;
    });
    add_lhs(c);
    c = leaf(sf, "antipode", "Antipode of lhs", [&] {
      emit(o, antipode(parse_operand(o.lhs)));
      return 0;
    });
    add_lhs(c);
    c = leaf(sf, "scalar", "Schur-Hall scalar product <lhs|rhs>", [&] {
      const Integer v = schur_hall(parse_operand(o.lhs), parse_operand(o.rhs));
      if (o.json)
        std::cout << Json{{"value", v.str()}}.dump() << '\n';
      else
        std::cout << v << '\n';
      return 0;
    });
    add_lhs(c);
    add_rhs(c);
    c = leaf(sf, "plethysm", "Plethysm lhs[rhs]", [&] {
      emit(o, plethysm(parse_operand(o.lhs), parse_operand(o.rhs)));
      return 0;
    });
    add_lhs(c);
    add_rhs(c);
  }

  // series
  auto* ser = app.add_subcommand("series", "Truncated S-function series");
  ser->require_subcommand(1);
  {
    auto* c = leaf(ser, "show", "Print M_pi or L_pi to degree D", [&] {
      require_degree(o.degree, "--degree");
      const auto& t = series(parse_partition(o.pi), parse_series_kind(o.kind), o.degree);
      if (o.json)
        std::cout << Json{{"pi", to_json(t.pi)}, {"kind", to_string(t.kind)}, {"degree", t.degree},
                          {"value", to_json(t.value)}}
                         .dump()
                  << '\n';
      else
        std::cout << to_string(t.kind) << to_string(t.pi) << " = " << to_string(t.value) << '\n';
      return 0;
    });
    add_pi(c);
    c->add_option("--kind", o.kind, "M or L")->required();
    add_degree(c, true);
  }

  // pi
  auto* pig = app.add_subcommand("pi", "The pi-deformed structure");
  pig->require_subcommand(1);
  {
    auto* c = leaf(pig, "product", "pi-Newell-Littlewood product lhs (.) rhs", [&] {
      emit(o, pi_product(PiContext(parse_partition(o.pi)), parse_operand(o.lhs), parse_operand(o.rhs)));
      return 0;
    });
    add_pi(c);
    add_lhs(c);
    add_rhs(c);
    c = leaf(pig, "rker", "Generalised Cauchy kernel r_pi (or its inverse)", [&] {
      require_degree(o.degree, "--degree");
      const PiContext ctx(parse_partition(o.pi));
      emit(o, o.inverse ? ctx.r_kernel_inverse(o.degree) : ctx.r_kernel(o.degree));
      return 0;
    });
    add_pi(c);
    add_degree(c, true);
    c->add_flag("--inverse", o.inverse, "Print r_pi^-1");
    c = leaf(pig, "qpi", "Cauchy scalar Q_pi (or its inverse)", [&] {
      require_degree(o.degree, "--degree");
      const PiContext ctx(parse_partition(o.pi));
      emit(o, o.inverse ? ctx.q_scalar_inverse(o.degree) : ctx.q_scalar(o.degree));
      return 0;
    });
    add_pi(c);
    add_degree(c, true);
    c->add_flag("--inverse", o.inverse, "Print Q_pi^-1");
  }

  // check
  auto* chk = app.add_subcommand("check", "Exhaustive axiom checks");
  chk->require_subcommand(1);
  {
    auto* c = leaf(chk, "yang-baxter", "Braid relation on all basis triples of total weight <= D", [&] {
      require_degree(o.degree, "--degree");
      return emit_report(o, "yang-baxter", check_yang_baxter(PiContext(parse_partition(o.pi)), o.degree));
    });
    add_pi(c);
    add_degree(c, true);
    c = leaf(chk, "cocycle", "2-cocycle identity and associativity of the pi-product", [&] {
      require_degree(o.weight, "--weight");
      return emit_report(o, "cocycle", check_cocycle(PiContext(parse_partition(o.pi)), o.weight));
    });
    add_pi(c);
    c->add_option("--weight", o.weight, "Maximum weight of each basis element")->required();
    c = leaf(chk, "hopf", "Hopf algebra axioms of the Schur basis", [&] {
      require_degree(o.weight, "--weight");
      return emit_report(o, "hopf", check_hopf(o.weight, o.weight));
    });
    c->add_option("--weight", o.weight, "Maximum weight")->required();
  }

  // knot
  auto* knot = app.add_subcommand("knot", "Braid closures");
  knot->require_subcommand(1);
  {
    auto* c = leaf(knot, "invariant", "Invariant of the braid closure", [&] { return knot_invariant(o); });
    add_pi(c);
    c->add_option("--braid", o.braid, "Signed generators, e.g. \"1 -2 1\"")->required();
    c->add_option("--strands", o.strands, "Strand count (default max|i|+1)");
    add_degree(c, true);
    c->add_flag("--direct", o.direct, "Evaluate the sliced tangle directly (knots only)");
    c->add_option("--seed", o.seed, "Input on the open strand for --direct (default s[])");
    c = leaf(knot, "stats", "Permutation, components, writhes and linking numbers", [&] {
      const BraidWord b = BraidWord::parse(o.braid, o.strands);
      const LinkStats st = link_stats(b);
      if (o.json)
        std::cout << stats_json(b, st).dump() << '\n';
      else
        print_stats(b, st);
      return 0;
    });
    c->add_option("--braid", o.braid, "Signed generators")->required();
    c->add_option("--strands", o.strands, "Strand count");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
