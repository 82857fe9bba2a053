#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>

#include "CLI11.hpp"
#include "io.hpp"
#include "lcb/coxeter/tiling.hpp"
#include "lcb/error.hpp"

using namespace lcb;
using namespace lcb::cli;
using coxeter::Permutation;
using linalg::to_string;

namespace {

struct Config {
  std::optional<int> n;
  double tol = linalg::kDefaultTol;
  double step = 0;
  std::string format = "text";
  std::string in, out;
};

// Subcommand arguments; each run uses only the fields of its own subcommand.
struct Args {
  std::string perm, left, right, z, word, sigma, exact_at;
  bool neg = false, exact = false;
  int j = 1;
  double t0 = 0, t1 = 0;
};

Config cfg;
Args args;
std::function<void()> action;

std::string read_input() {
  if (cfg.in.empty() || cfg.in == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(cfg.in);
  if (!f) throw InputError("cannot open " + cfg.in);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json input_json() { return parse_json(read_input()); }

void write(const std::string& s) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << s;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << s;
}

// text is the fallback for any format other than json.
void emit(const json& j, const std::string& text) {
  if (cfg.format == "json")
    write(j.dump(2) + "\n");
  else
    write(text + "\n");
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string text_of(const linalg::FMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + to_string(m(r, c));
    if (r + 1 < m.rows()) out += "\n";
  }
  return out;
}

std::string text_of(const linalg::RMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + to_string(m(r, c));
    if (r + 1 < m.rows()) out += "\n";
  }
  return out;
}

// --perm if given, otherwise a permutation (or anything with "sigma") on input.
Permutation perm_arg(const std::string& flag) {
  return flag.empty() ? perm_from_json(input_json()) : perm_from_text(flag);
}

spin::SpinWord spin_arg(const std::string& flag) {
  return spinword_from_json(flag.empty() ? input_json() : parse_json(flag));
}

int n_for_params() {
  if (!cfg.n) throw InputError("--n is required");
  return *cfg.n;
}

// A Lo^1 matrix given either as {"rows"} or as parameters {word, times}.
linalg::RMatrix lower_arg() {
  json j = input_json();
  if (j.is_object() && j.contains("word")) return totpos::pos_from_params(n_for_params(), params_from_json(j));
  return rmatrix_from_json(j);
}

void on_run(CLI::App* c, std::function<void()> f) {
  c->callback([f] { action = f; });
}

void add_perm(CLI::App& app) {
  auto* perm = app.add_subcommand("perm", "Permutation queries")->require_subcommand(1);
  auto unary = [perm](const char* name, const char* help, std::function<void()> f) {
    auto* c = perm->add_subcommand(name, help);
    c->add_option("--perm", args.perm, "permutation, e.g. 2413 (default: JSON on input)");
    on_run(c, f);
  };
  auto binary = [perm](const char* name, const char* help, std::function<void()> f) {
    auto* c = perm->add_subcommand(name, help);
    c->add_option("--left", args.left)->required();
    c->add_option("--right", args.right)->required();
    on_run(c, f);
  };
  unary("inv", "Number of inversions", [] {
    int v = coxeter::inv(perm_arg(args.perm));
    emit({{"inv", v}}, std::to_string(v));
  });
  unary("mult", "Multiplicity vector", [] {
    auto m = coxeter::mult_vector(perm_arg(args.perm));
    emit({{"mult", m}}, join(m));
  });
  unary("word", "Canonical reduced word", [] {
    auto w = coxeter::canonical_reduced_word(perm_arg(args.perm));
    emit({{"word", to_json(w)}}, join(w));
  });
  unary("covers", "Bruhat covers below", [] {
    json j = json::array();
    std::string text;
    for (const auto& c : coxeter::covers_below(perm_arg(args.perm))) {
      j.push_back(to_json(c));
      text += (text.empty() ? "" : "\n") + coxeter::to_string(c);
    }
    emit(j, text);
  });
  binary("leq", "Bruhat order test", [] {
    bool v = coxeter::bruhat_leq(perm_from_text(args.left), perm_from_text(args.right));
    emit({{"leq", v}}, v ? "true" : "false");
  });
  binary("vee", "Join of two permutations", [] {
    auto v = coxeter::vee(perm_from_text(args.left), perm_from_text(args.right));
    emit(to_json(v), coxeter::to_string(v));
  });
}

void add_spin(CLI::App& app) {
  auto* spin = app.add_subcommand("spin", "Spin group arithmetic")->require_subcommand(1);
  auto unary = [spin](const char* name, const char* help, std::function<void()> f) {
    auto* c = spin->add_subcommand(name, help);
    c->add_option("--perm", args.perm, "permutation (default: JSON on input)");
    on_run(c, f);
  };
  unary("acute", "Lift acute(sigma)", [] {
    auto w = spin::acute(perm_arg(args.perm));
    emit(to_json(w), spin::to_pretty(w));
  });
  unary("grave", "Lift grave(sigma)", [] {
    auto w = spin::grave(perm_arg(args.perm));
    emit(to_json(w), spin::to_pretty(w));
  });
  unary("hat", "hat(sigma) in Quat", [] {
    auto q = spin::hat(perm_arg(args.perm));
    emit(to_json(q), spin::to_string(q));
  });

  auto* mul = spin->add_subcommand("mul", "Product of two spin words given as JSON");
  mul->add_option("--left", args.left);
  mul->add_option("--right", args.right);
  on_run(mul, [] {
    json in;
    if (args.left.empty() || args.right.empty()) {
      in = input_json();
      if (!in.is_object() || !in.contains("left") || !in.contains("right")) throw InputError("expected {left, right}");
    }
    auto a = spinword_from_json(args.left.empty() ? in.at("left") : parse_json(args.left));
    auto b = spinword_from_json(args.right.empty() ? in.at("right") : parse_json(args.right));
    if (a.n() != b.n()) throw RankMismatch("spin words of different rank");
    auto w = spin::spin_mul(a, b);
    emit(to_json(w), spin::to_pretty(w));
  });

  auto* pi = spin->add_subcommand("pi", "Signed permutation matrix of a spin word");
  pi->add_option("--z", args.z, "spin word as JSON (default: input)");
  on_run(pi, [] {
    auto p = spin::pi_so(spin_arg(args.z));
    emit(to_json(p), spin::to_string(p));
  });
}

void add_tiling(CLI::App& app) {
  auto* t = app.add_subcommand("tiling", "Tiling of a reduced word (text, json or svg)");
  t->add_option("--word", args.word, "reduced word as JSON array (default: input)");
  t->add_option("--perm", args.perm, "use the canonical word of this permutation");
  on_run(t, [] {
    coxeter::ReducedWord word;
    int n = 0;
    json j = !args.perm.empty() ? json(args.perm) : args.word.empty() ? input_json() : parse_json(args.word);
    if (j.is_string() || (j.is_object() && j.contains("sigma") && !j.contains("word"))) {
      auto p = perm_from_json(j);
      word = coxeter::canonical_reduced_word(p);
      n = p.n();
    } else {
      word = word_from_json(j);
      n = cfg.n.value_or(0);
      for (int a : word) n = std::max(n, a);
      if (n < 1) throw InputError("--n is required for an empty word");
    }
    auto tiling = coxeter::elnitsky_tiling(n, word);
    if (cfg.format == "svg") return write(coxeter::tiling_svg(tiling));
    json tiles = json::array();
    for (const auto& x : tiling.tiles)
      tiles.push_back(
          {{"column", x.column}, {"bottom", x.bottom}, {"top", x.top}, {"left", x.left}, {"right", x.right}});
    emit({{"sigma", to_json(tiling.sigma)}, {"word", to_json(tiling.word)}, {"tiles", tiles}},
         coxeter::tiling_ascii(tiling));
  });
}

void add_totpos(CLI::App& app) {
  auto* tp = app.add_subcommand("totpos", "Totally positive cells in Lo^1")->require_subcommand(1);

  auto* member = tp->add_subcommand("member", "Test L in Pos_sigma (Neg_sigma with --neg)");
  member->add_option("--sigma", args.sigma)->required();
  member->add_flag("--neg", args.neg);
  on_run(member, [] {
    auto l = lower_arg();
    auto bad = totpos::membership_violation(args.neg ? totpos::neg_mirror(l) : l, perm_from_text(args.sigma));
    json j = {{"member", !bad}};
    if (bad) j["violation"] = *bad;
    emit(j, bad ? "false: " + *bad : "true");
  });

  auto* fac = tp->add_subcommand("factorize", "Recover the times along a reduced word");
  fac->add_option("--word", args.word, "reduced word as JSON array")->required();
  on_run(fac, [] {
    auto word = word_from_json(parse_json(args.word));
    auto times = totpos::pos_factorize(lower_arg(), word);
    json jt = json::array();
    std::string text;
    for (const auto& t : times) {
      jt.push_back(to_string(t));
      text += (text.empty() ? "" : " ") + to_string(t);
    }
    emit({{"word", to_json(word)}, {"times", jt}}, text);
  });

  auto* cell = tp->add_subcommand("cell", "Cell in the closure of Pos_eta or Neg_eta");
  on_run(cell, [] {
    auto c = totpos::cell_of_closure(lower_arg());
    if (!c) return emit(nullptr, "none");
    emit({{"sigma", to_json(c->sigma)}, {"positive", c->positive}},
         std::string(c->positive ? "Pos " : "Neg ") + coxeter::to_string(c->sigma));
  });
}

template <class M>
void emit_decomposition(const M& u1, const spin::SignedPermMatrix& p, const M& u2, const json& residual,
                        const std::string& residual_text) {
  emit({{"P", to_json(p)}, {"U1", to_json(u1)}, {"U2", to_json(u2)}, {"residual", residual}},
       "P " + spin::to_string(p) + "\nresidual " + residual_text + "\nU1\n" + text_of(u1) + "\nU2\n" + text_of(u2));
}

void add_bruhat(CLI::App& app) {
  auto* dec = app.add_subcommand("decompose", "Signed Bruhat decomposition M = U1 P U2");
  dec->add_flag("--exact", args.exact, "rational elimination (entries read exactly)");
  on_run(dec, [] {
    json in = input_json();
    if (args.exact) {
      auto d = bruhat::signed_bruhat_decompose_exact(rmatrix_from_json(in));
      emit_decomposition(d.U1, d.P, d.U2, to_string(d.residual), to_string(d.residual));
    } else {
      auto d = bruhat::signed_bruhat_decompose(fmatrix_from_json(in), cfg.tol);
      emit_decomposition(d.U1, d.P, d.U2, round12(d.residual), to_string(d.residual));
    }
  });

  auto* cell = app.add_subcommand("cell", "Signed Bruhat cell of a matrix");
  on_run(cell, [] {
    auto p = bruhat::cell_of(fmatrix_from_json(input_json()), cfg.tol);
    emit(to_json(p), spin::to_string(p));
  });

  auto* theta = app.add_subcommand("theta", "Angle theta_j of a matrix");
  theta->add_option("--j", args.j)->required();
  on_run(theta, [] {
    double t = bruhat::theta_j(fmatrix_from_json(input_json()), args.j, cfg.tol);
    emit({{"j", args.j}, {"theta", round12(t)}}, to_string(t));
  });

  auto* slice = app.add_subcommand("slice", "Slice coordinates through Pi(z0)");
  slice->add_option("--z", args.z, "spin word z0 as JSON")->required();
  on_run(slice, [] {
    auto c = bruhat::slice_coords(spinword_from_json(parse_json(args.z)), fmatrix_from_json(input_json()), cfg.tol);
    json ju = json::array(), jx = json::array();
    std::string text = "u";
    for (double v : c.u) {
      ju.push_back(round12(v));
      text += " " + to_string(v);
    }
    text += "\nx";
    for (double v : c.x) {
      jx.push_back(round12(v));
      text += " " + to_string(v);
    }
    emit({{"u", ju}, {"x", jx}}, text);
  });
}

void add_curves(CLI::App& app) {
  auto* it = app.add_subcommand("itinerary", "Non-open cells crossed by a curve on [t0, t1]");
  it->add_option("--t0", args.t0)->required();
  it->add_option("--t1", args.t1)->required();
  on_run(it, [] {
    curves::ItineraryOptions opts;
    opts.step = cfg.step;
    auto ev = curves::itinerary(curve_from_json(input_json()), args.t0, args.t1, opts);
    json j = json::array();
    std::string text;
    for (const auto& e : ev) {
      j.push_back(to_json(e));
      text += (text.empty() ? "" : "\n") + to_string(e.t) + " " + coxeter::to_string(e.sigma) + " " +
              spin::to_string(e.signs);
    }
    emit(j, text);
  });

  auto* curve = app.add_subcommand("curve", "Integrate a curve and dump frames and m_j");
  auto* t0 = curve->add_option("--t0", args.t0);
  auto* t1 = curve->add_option("--t1", args.t1);
  curve->add_option("--exact-at", args.exact_at, "exact Lo^1 value at this rational time (piecewise specs)");
  on_run(curve, [t0, t1] {
    auto spec = curve_from_json(input_json());
    if (!args.exact_at.empty()) {
      if (spec.kind != curves::ConvexCurveSpec::Kind::Piecewise) throw DomainError("--exact-at needs a piecewise spec");
      auto id = linalg::RMatrix::identity(static_cast<std::size_t>(spec.n) + 1);
      auto g = curves::integrate_convex_exact(spec, id, spec.grid.front(), linalg::parse_rational(args.exact_at));
      return emit(to_json(g), text_of(g));
    }
    curves::CurveEvaluator ev(spec);
    double a = t0->count() ? args.t0 : ev.t_min();
    double b = t1->count() ? args.t1 : ev.t_max();
    if (!std::isfinite(a) || !std::isfinite(b)) throw InputError("closed-form curves need --t0 and --t1");
    double step = cfg.step > 0 ? cfg.step : (b - a) / 64;
    json j = json::array();
    std::string text;
    for (const auto& [t, q] : curves::integrate_lc_numeric(spec, a, b, step)) {
      json ms = json::array();
      std::string mt;
      for (double m : curves::m_functions(q)) {
        ms.push_back(round12(m));
        mt += " " + to_string(m);
      }
      j.push_back({{"t", round12(t)}, {"frame", to_json(q)}, {"m", ms}});
      text += (text.empty() ? "" : "\n") + to_string(t) + mt;
    }
    emit(j, text);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat cells, spin words and locally convex curves"};
  app.require_subcommand(1);
  app.fallthrough();
  if (const char* env = std::getenv("LCB_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
      std::cerr << "error: LCB_TOL must be a positive number\n";
      return 2;
    }
    cfg.tol = v;
  }
  int n = 0;
  auto* nopt = app.add_option("--n", n, "rank n; matrices are (n+1) x (n+1)")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "relative tolerance (default 1e-9, or $LCB_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--step", cfg.step, "scan or sampling step for curves")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "text (default), json or svg")->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--in", cfg.in, "input file (default stdin)");
  app.add_option("--out", cfg.out, "output file (default stdout)");

  add_perm(app);
  add_spin(app);
  add_tiling(app);
  add_totpos(app);
  add_bruhat(app);
  add_curves(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (nopt->count()) cfg.n = n;
  try {
    action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
