// ghostc: command-line front end for the ghost calculus.

#include "gc/parse.hpp"
#include "gc/repr.hpp"
#include "gc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gc;
using nlohmann::json;

namespace {

struct Options {
  std::string algebra = "gl(1|1)";
  std::string field = "Q";
  std::string borel = "standard";
  std::string ordering = "hc";
  bool json_out = false;
  bool timing = false;
  unsigned seed = 20240601;
  int grid = 5;
  std::string weight;
  std::string element;
  std::string element_file;
  std::string phi;  ///< empty: verb default
  std::string target;
  int components = 0;
  std::string module = "kac";
  std::string level = "quick";
};

/// Thrown for verification failures that should exit with status 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Run {
 public:
  Run(std::string verb, const Options& o) : verb_(std::move(verb)), o_(o) {}

  int exec() {
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
      if (verb_ == "verify-suite") {
        code = verify_suite();
      } else {
        setup();
        dispatch();
      }
    } catch (const CheckFailed& e) {
      report_["error"] = {{"kind", "VerificationFailure"}, {"message", e.what()}};
      code = 1;
    } catch (const ParseError& e) {
      report_["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      code = 2;
    } catch (const Error& e) {
      report_["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      code = 1;
    } catch (const std::exception& e) {
      report_["error"] = {{"kind", "Error"}, {"message", e.what()}};
      code = 1;
    }
    if (!notes_.empty()) report_["notes"] = notes_;
    if (o_.timing)
      report_["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    print();
    return code;
  }

 private:
  void setup() {
    FieldSpec::parse(o_.field);
    g_ = build_algebra(o_.algebra);
    if (o_.ordering != "hc" && o_.ordering != "coset") throw ParseError("unknown ordering", 0, "hc or coset");
    ctx_.emplace(g_, borel_from_option(*g_, o_.borel));
    report_["command"] = verb_;
    report_["algebra"] = g_->name();
    report_["fingerprint"] = g_->fingerprint();
    report_["field"] = FieldSpec::parse(o_.field).name();
  }

  void dispatch() {
    const FieldSpec f = FieldSpec::parse(o_.field);
    switch (f.kind) {
      case FieldSpec::Kind::rational: return field_verb<Rational>(f);
      case FieldSpec::Kind::ratfunc: return field_verb<RatFunc>(f);
      case FieldSpec::Kind::cyclotomic: return field_verb<Cyclotomic>(f);
    }
  }

  bool rational_only() {
    if (FieldSpec::parse(o_.field).kind != FieldSpec::Kind::rational)
      notes_.push_back(verb_ + " is computed over Q; --field only affects element input");
    return true;
  }

  template <class S>
  void field_verb(const FieldSpec& f) {
    const auto& ctx = *ctx_;
    if (verb_ == "algebra-info") {
      report_["structure"] = g_->to_json();
      report_["closed_form"] = closed_form_class(*g_);
      json roots = json::array();
      for (const Root* r : ctx.borel().positive_roots()) {
        json w = json::array();
        for (const auto& x : r->weight) w.push_back(x.str());
        roots.push_back({{"weight", w}, {"parity", r->parity}, {"simple", r->simple}, {"isotropic", r->isotropic}});
      }
      report_["positive_roots"] = roots;
      return;
    }
    if (verb_ == "validate") {
      auto r = validate_algebra(*g_);
      report_["ok"] = r.ok();
      report_["failures"] = r.failures;
      report_["root_pairings_nondegenerate"] = root_pairings_nondegenerate(*g_);
      if (!r.ok()) throw CheckFailed("algebra validation failed: " + r.failures.front());
      return;
    }
    if (verb_ == "vg") {
      rational_only();
      const auto& v = ctx.vg();
      report_["element"] = v.rep.to_json();
      report_["text"] = v.rep.to_string();
      report_["source"] = v.source;
      bool cert = coset_ghost_certificate(ctx, v.rep);
      report_["certified"] = cert;
      if (!cert) throw CheckFailed("v_g certificate failed");
      return;
    }
    if (verb_ == "semisimple") {
      rational_only();
      auto r = semisimplicity_test(ctx);
      report_["semisimple"] = r.semisimple;
      report_["counit"] = r.counit.str();
      report_["reason"] = r.reason;
      return;
    }
    if (verb_ == "ppoly") {
      rational_only();
      auto r = projectivity_polynomial(ctx);
      report_["route"] = r.route;
      report_["p"] = r.p.to_json();
      report_["p1"] = r.p1.to_json();
      report_["bH"] = r.bH.to_json();
      if (r.degree_bound >= 0) report_["degree_bound"] = r.degree_bound;
      report_["factors"] = r.factors;
      return;
    }
    if (verb_ == "tg") {
      rational_only();
      auto t = t_g_polynomial<Rational>(*g_, ctx.borel());
      report_["tg"] = t.to_json();
      report_["factors"] = root_factorization(t, *g_, ctx.borel());
      return;
    }
    if (verb_ == "bh") {
      rational_only();
      report_["bH"] = clifford_poly_bH<Rational>(*g_).to_json();
      return;
    }
    if (verb_ == "hc") {
      auto a = element<S>(f, "1");
      auto h = hc_image(ctx, a);
      report_["element"] = shown(a).to_json();
      report_["hc"] = h.to_json();
      report_["degree_bound"] = check_degree_bound(a, h);
      if (!check_degree_bound(a, h)) throw CheckFailed("HC image exceeds the filtration bound");
      return;
    }
    if (verb_ == "aphi") {
      auto phi = automorphism<S>(f);
      auto z = element<S>(f, "1");
      auto g = a_phi_element(ctx, phi, z);
      emit(g);
      report_["weyl_invariant"] = rho_shifted_weyl_check(*g.hc, *g_, ctx.borel());
      report_["divisible_by_tg"] = g.hc->divide_exact(promote<S>(t_g_polynomial<Rational>(*g_, ctx.borel()))).has_value();
      return;
    }
    if (verb_ == "central-element") {
      if (o_.target.empty()) {
        rational_only();
        auto r = central_subset_sum_element(ctx);
        report_["element"] = shown(r.element).to_json();
        report_["text"] = shown(r.element).to_string();
        report_["sign_rule"] = r.sign_rule;
        report_["hc"] = r.hc.to_json();
        report_["hc_over_tg"] = r.ratio.str();
        report_["certified"] = certify_invariant(GradedAutomorphism<Rational>::identity(g_), r.element);
        return;
      }
      auto phi = automorphism<S>(f, "identity");
      auto target = parse_cartan_polynomial<S>(o_.target, ctx.hc(), ctx.borel(), f);
      emit(solve_in_A_phi(ctx, phi, target));
      return;
    }
    if (verb_ == "limit-center") {
      rational_only();
      auto p = o_.target.empty() ? t_g_polynomial<Rational>(*g_, ctx.borel())
                                 : parse_cartan_polynomial<Rational>(o_.target, ctx.hc(), ctx.borel(), FieldSpec{});
      auto z = limit_to_center(ctx, p);
      report_["target"] = p.to_json();
      report_["element"] = shown(z).to_json();
      report_["text"] = shown(z).to_string();
      report_["certified"] = certify_invariant(GradedAutomorphism<Rational>::identity(g_), z);
      report_["hc"] = hc_image(ctx, z).to_json();
      return;
    }
    if (verb_ == "zfull-decompose") {
      auto phi = automorphism<S>(f);
      GhostElement<S> u{element<S>(f, ""), phi, false, std::nullopt};
      u.certified = certify_invariant(phi, u.element);
      if (!u.certified) throw CheckFailed("element is not in A_phi for " + phi.describe());
      u.hc = hc_image(ctx, u.element);
      const int dim_minus = static_cast<int>(g_->odd_indices().size()) / 2;
      const int M = o_.components > 0 ? o_.components : dim_minus + 1;
      int minimal = 0;
      json attempts = json::array();
      for (int k = 1; k <= M && !minimal; ++k) {
        try {
          vandermonde_decompose(ctx, u, k, f);
          minimal = k;
          attempts.push_back({{"components", k}, {"exact", true}});
        } catch (const DecompositionMismatch& e) {
          attempts.push_back({{"components", k}, {"exact", false}, {"residual", e.residual}});
        } catch (const FieldMismatch& e) {
          attempts.push_back({{"components", k}, {"exact", false}, {"error", e.what()}});
        }
      }
      report_["attempts"] = attempts;
      report_["minimal_components"] = minimal;
      report_["stated_components"] = dim_minus;
      auto d = vandermonde_decompose(ctx, u, M, f);
      json parts = json::array();
      for (const auto& p : d.parts)
        parts.push_back({{"phi", p.phi.describe()}, {"element", shown(p.element).to_json()},
                         {"text", shown(p.element).to_string()}, {"certified", p.certified}, {"hc", p.hc->to_json()}});
      json coeffs = json::array();
      for (const auto& c : d.coefficients) coeffs.push_back(FieldTraits<S>::to_json(c));
      report_["components"] = M;
      report_["coefficients"] = coeffs;
      report_["parts"] = parts;
      report_["exact"] = d.exact;
      if (minimal != 0 && minimal != dim_minus)
        notes_.push_back("minimal component count " + std::to_string(minimal) + " differs from dim g_1/2 = " +
                         std::to_string(dim_minus));
      return;
    }
    if (verb_ == "kac" || verb_ == "ptrace" || verb_ == "tg-action" || verb_ == "check-graded") {
      auto m = module();
      report_["weight"] = weight_json(m.highest_weight);
      report_["module"] = m.kind;
      report_["typical"] = m.typical;
      report_["dim"] = m.dim();
      json gd = json::object();
      for (int d : m.degrees()) gd[std::to_string(d)] = m.graded_dim(d);
      report_["graded_dims"] = gd;
      if (verb_ == "kac") {
        auto bad = bracket_fidelity(m);
        report_["bracket_failures"] = bad;
        if (!bad.empty()) throw CheckFailed("module fails bracket relations");
      } else if (verb_ == "ptrace") {
        report_["ptrace"] = twisted_trace_poly(m).to_string();
      } else if (verb_ == "tg-action") {
        auto r = T_g_action_check(ctx, m);
        report_["classification"] = r.classification;
        report_["p_nonzero"] = r.p_nonzero;
        report_["consistent"] = r.consistent;
        json sc = json::object();
        for (const auto& [d, v] : r.scalars) sc[std::to_string(d)] = v.str();
        report_["scalars"] = sc;
        if (!r.consistent) throw CheckFailed("T_g action disagrees with p_{G,B}(lambda)");
      } else {
        auto a = element<S>(f, "");
        auto r = graded_constant_check(a, m);
        report_["element"] = shown(a).to_json();
        report_["graded_constant"] = r.ok;
        json sc = json::object();
        for (const auto& [d, v] : r.scalars) sc[std::to_string(d)] = FieldTraits<S>::to_json(v);
        report_["scalars"] = sc;
        if (!r.ok) {
          report_["message"] = r.message;
          throw CheckFailed("element does not act by graded constants: " + r.message);
        }
      }
      return;
    }
    throw ParseError("unknown verb " + verb_, 0, "a known verb");
  }

  int verify_suite() {
    VerifyOptions vo;
    vo.level = o_.level;
    vo.seed = o_.seed;
    vo.grid = o_.grid;
    if (vo.level != "quick" && vo.level != "full") throw ParseError("unknown level " + vo.level, 0, "quick or full");
    report_["command"] = verb_;
    report_["level"] = vo.level;
    report_["seed"] = vo.seed;
    report_["grid"] = vo.grid;
    auto res = run_suite(vo, [&](const CriterionResult& r) {
      if (!o_.json_out) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name;
        if (o_.timing) std::cout << " (" << r.seconds << " s)";
        std::cout << "\n     " << r.detail << "\n";
        std::cout.flush();
      }
    });
    auto j = suite_json(res, o_.timing);
    report_.update(j);
    return j["all_pass"].get<bool>() ? 0 : 1;
  }

  template <class S>
  UEAElement<S> element(const FieldSpec& f, const std::string& fallback) {
    std::string text = o_.element;
    if (!o_.element_file.empty()) {
      std::ifstream in(o_.element_file);
      if (!in) throw ParseError("cannot read " + o_.element_file, 0, "a readable file");
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    }
    if (text.empty()) text = fallback;
    if (text.empty()) throw ParseError("this verb needs --element or --element-file", 0, "an element");
    return parse_element<S>(text, ctx_->hc(), f);
  }

  /// identity | delta | scale:<scalar>
  template <class S>
  GradedAutomorphism<S> automorphism(const FieldSpec& f, const std::string& fallback = "delta") {
    const std::string phi = o_.phi.empty() ? fallback : o_.phi;
    if (phi == "identity") return GradedAutomorphism<S>::identity(g_);
    if (phi == "delta") return GradedAutomorphism<S>::delta(g_);
    if (phi.rfind("scale:", 0) == 0) {
      auto s = parse_element<S>(phi.substr(6), ctx_->hc(), f);
      if (s.filtration_degree() > 0) throw ParseError("scale needs a scalar", 6, "a field element");
      return GradedAutomorphism<S>::scale(g_, s.counit());
    }
    throw ParseError("unknown automorphism " + phi, 0, "identity, delta or scale:<scalar>");
  }

  template <class S>
  UEAElement<S> shown(const UEAElement<S>& a) const {
    return o_.ordering == "coset" ? reorder(a, ctx_->coset()) : a;
  }

  template <class S>
  void emit(const GhostElement<S>& g) {
    report_["phi"] = g.phi.describe();
    report_["element"] = shown(g.element).to_json();
    report_["text"] = shown(g.element).to_string();
    report_["certified"] = g.certified;
    if (g.hc) report_["hc"] = g.hc->to_json();
    if (!g.certified) throw CheckFailed("element is not ad_phi-invariant");
  }

  Weight weight() const {
    if (o_.weight.empty()) throw ParseError("this verb needs --weight", 0, "comma separated rationals");
    Weight w;
    std::stringstream ss(o_.weight);
    std::string part;
    while (std::getline(ss, part, ',')) w.push_back(parse_rational(part));
    if (static_cast<int>(w.size()) != g_->rank())
      throw ParseError("weight has " + std::to_string(w.size()) + " coordinates", 0, std::to_string(g_->rank()) + " coordinates");
    return w;
  }

  static json weight_json(const Weight& w) {
    json out = json::array();
    for (const auto& x : w) out.push_back(x.str());
    return out;
  }

  GradedModule module() {
    auto w = weight();
    if (o_.module == "kac") return build_kac_module(g_, ctx_->borel(), w);
    if (o_.module == "irreducible") return build_highest_weight_irreducible(g_, ctx_->borel(), w);
    throw ParseError("unknown module " + o_.module, 0, "kac or irreducible");
  }

  void print() const {
    if (o_.json_out) {
      std::cout << report_.dump(2) << "\n";
      return;
    }
    if (verb_ == "verify-suite" && !report_.contains("error")) {
      std::cout << (report_.value("all_pass", false) ? "all criteria pass" : "some criteria fail") << "\n";
      return;
    }
    for (const auto& [k, v] : report_.items()) {
      if (k == "structure") continue;
      std::cout << k << ": ";
      if (v.is_object() && v.contains("text")) std::cout << v["text"].get<std::string>();
      else if (v.is_string()) std::cout << v.get<std::string>();
      else if (v.is_array() && k == "element") std::cout << v.dump();
      else std::cout << v.dump();
      std::cout << "\n";
    }
  }

  std::string verb_;
  const Options& o_;
  AlgebraPtr g_;
  std::optional<GhostContext> ctx_;
  json report_ = json::object();
  std::vector<std::string> notes_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ghostc: exact ghost-distribution calculus for small Lie superalgebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--algebra", o.algebra, "gl(m|n), sl(m|n), osp(1|2n), osp(2|2), q(1), abelian(p|q)")->capture_default_str();
  app.add_option("--field", o.field, "Q | cyclotomic:M | ratfun-c")->capture_default_str();
  app.add_option("--borel", o.borel, "standard | FILE")->capture_default_str();
  app.add_option("--ordering", o.ordering, "hc | coset (output ordering)")->capture_default_str();
  app.add_flag("--json", o.json_out, "JSON output");
  app.add_flag("--timing", o.timing, "include wall-clock timing");
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--grid", o.grid, "weight grid radius")->capture_default_str();
  app.add_option("--weight", o.weight, "highest weight, comma separated");
  app.add_option("--element", o.element, "element expression");
  app.add_option("--element-file", o.element_file, "file holding an element expression");
  app.add_option("--phi", o.phi, "identity | delta | scale:<scalar> (default delta, identity for central-element)");
  app.add_option("--target", o.target, "Cartan polynomial");
  app.add_option("--components", o.components, "Vandermonde component count (default dim g_-1 + 1)");
  app.add_option("--module", o.module, "kac | irreducible")->capture_default_str();
  app.add_option("--level", o.level, "quick | full")->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"algebra-info", "structure constants, roots and closed-form class"},
      {"validate", "check super Jacobi and super antisymmetry"},
      {"vg", "ghost element v_g in the coset ordering"},
      {"aphi", "ad_phi(v_g)(z) with certificate and HC image"},
      {"ppoly", "projectivity polynomial p_{G,B}"},
      {"hc", "Harish-Chandra image of --element"},
      {"tg", "t_g, the product of odd coroot factors"},
      {"bh", "Clifford polynomial b_H"},
      {"zfull-decompose", "Vandermonde split of an element of A_phi"},
      {"central-element", "subset-sum central element, or solve for --target"},
      {"limit-center", "c -> 1 limit of the scale family with HC --target"},
      {"semisimple", "counit test of v_g"},
      {"kac", "Kac or irreducible module at --weight"},
      {"check-graded", "graded-constant action of an element"},
      {"ptrace", "twisted trace polynomial of a module"},
      {"tg-action", "T_g on a module against p_{G,B}(lambda)"},
      {"verify-suite", "acceptance checks"}};
  for (const auto& [name, help] : verbs) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  Run run(app.get_subcommands().front()->get_name(), o);
  return run.exec();
}
