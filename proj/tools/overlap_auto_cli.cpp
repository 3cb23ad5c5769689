// overlap-auto: command line driver.
//
//   overlap-auto <command> [presentation.txt] [args] [flags]
//
// Exit codes: 0 success or true, 1 a property fails, 2 usage or parse
// error, 3 the answer is unknown within the configured bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "overlap_auto/export.hpp"
#include "overlap_auto/overlap_auto.hpp"

using namespace overlap_auto;
using nlohmann::json;

namespace {

  enum exit_code : int { OK = 0, FAILS = 1, USAGE = 2, UNKNOWN = 3 };

  constexpr char const* example4_text = "name: example4\n"
                                        "generators: a b c\n"
                                        "relation: abcc = cba\n";

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Config {
    std::vector<std::string> args;
    bool                     json         = false;
    bool                     dot          = false;
    bool                     trace        = false;
    bool                     phi          = false;
    bool                     group        = false;
    std::size_t              radius       = 0;  // 0: command default
    std::size_t              slack        = 0;
    std::size_t              kb_bound     = RewriteSettings().completion_bound;
    std::size_t              length_bound = 3;
    std::size_t              n            = 5;
    std::size_t              threads      = 1;

    std::size_t radius_or(std::size_t fallback) const {
      return radius == 0 ? fallback : radius;
    }
  };

  int from_tril(tril t) {
    switch (t) {
      case tril::TRUE:
        return OK;
      case tril::FALSE:
        return FAILS;
      default:
        return UNKNOWN;
    }
  }

  void print_json(json j) {
    json out = {{"schema", 1}};
    out.update(j);
    std::cout << out.dump(2) << '\n';
  }

  // A first positional argument names the presentation file if it exists,
  // contains a '/', or ends in ".txt"; otherwise the default presentation
  // <a, b, c | abcc = cba> is used and all positionals are arguments.
  bool looks_like_path(std::string const& s) {
    if (s.find('/') != std::string::npos
        || (s.size() > 4 && s.compare(s.size() - 4, 4, ".txt") == 0)) {
      return true;
    }
    std::ifstream in(s);
    return in.good() && s.find('[') == std::string::npos;
  }

  Presentation load(Config& cfg) {
    if (!cfg.args.empty() && looks_like_path(cfg.args.front())) {
      auto path = cfg.args.front();
      cfg.args.erase(cfg.args.begin());
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot read presentation file \"" + path + "\"");
      }
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        return parse_presentation(ss.str());
      } catch (ParseError const& e) {
        throw UsageError(path + ": " + e.what());
      }
    }
    return parse_presentation(example4_text);
  }

  void expect_args(Config const& cfg, std::size_t n, char const* usage) {
    if (cfg.args.size() != n) {
      throw UsageError(std::string("expected ") + usage);
    }
  }

  RewriteSettings settings(Config const& cfg) {
    RewriteSettings s;
    s.slack            = cfg.slack;
    s.completion_bound = cfg.kb_bound;
    return s;
  }

  // Phi-words are written as bracketed tokens; anything else is read as an
  // X-word and replaced by its left-greedy decomposition.
  phi_word read_phi(PhiAlphabet const& phi, std::string const& text) {
    if (text.find('[') != std::string::npos) {
      return phi.parse(text);
    }
    return left_greedy(phi, phi.presentation().parse_word(text));
  }

  std::string show(Presentation const& p, word_type const& w) {
    return w.empty() ? std::string("\"\"") : p.to_string(w);
  }

  json distance_json(Distance const& d) {
    return {{"value", d.is_exact() ? json(d.value()) : json(nullptr)},
            {"exact", d.is_exact()},
            {"bound", d.to_string()},
            {"flagged", d.flagged()}};
  }

  ////////////////////////////////////////////////////////////////////////
  // check
  ////////////////////////////////////////////////////////////////////////

  int cmd_check(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 0, "no arguments besides the presentation");
    auto pt     = compute_pieces(p);
    auto k32    = check_k32(pt);
    auto dagger = check_dagger(pt);
    std::vector<bool> cn;
    for (std::size_t n = 1; n <= 7; ++n) {
      cn.push_back(check_cn(pt, n));
    }
    bool const ok = k32.holds() && dagger.holds;

    if (cfg.json) {
      json pieces = json::array(), words = json::array(), witnesses = json::array(),
           rows = json::array(), cnj = json::object();
      for (auto const& w : pt.pieces()) {
        pieces.push_back(p.to_string(w));
      }
      for (auto const& w : pt.defining_words()) {
        words.push_back({{"word", p.to_string(w)},
                         {"lp", pt.piece_length(w).to_string()}});
      }
      for (auto const& w : k32.witnesses) {
        witnesses.push_back({{"condition", std::string(1, w.condition)},
                             {"relation", w.relation + 1},
                             {"word", p.to_string(w.word)},
                             {"lp", w.lp.to_string()},
                             {"detail", w.detail}});
      }
      for (auto const& r : dagger.per_relation) {
        rows.push_back({{"lp_lhs", r.lp_lhs.to_string()},
                        {"lp_rhs", r.lp_rhs.to_string()},
                        {"sum", r.sum().to_string()},
                        {"vacuous", r.vacuous}});
      }
      for (std::size_t n = 1; n <= 7; ++n) {
        cnj[std::to_string(n)] = bool(cn[n - 1]);
      }
      print_json({{"pieces", pieces},
                  {"defining_words", words},
                  {"k32",
                   {{"a", k32.condition_a},
                    {"b", k32.condition_b},
                    {"c", k32.condition_c},
                    {"witnesses", witnesses}}},
                  {"dagger", {{"holds", dagger.holds}, {"per_relation", rows}}},
                  {"cn", cnj},
                  {"holds", ok}});
      return ok ? OK : FAILS;
    }

    auto& out = std::cout;
    if (!p.name.empty()) {
      out << "presentation " << p.name << '\n';
    }
    out << "pieces:";
    for (auto const& w : pt.pieces()) {
      out << ' ' << p.to_string(w);
    }
    out << '\n';
    for (auto const& w : pt.defining_words()) {
      out << "lp(" << p.to_string(w) << ") = " << pt.piece_length(w).to_string()
          << '\n';
    }
    out << "K32 (a) " << (k32.condition_a ? "holds" : "fails") << '\n'
        << "K32 (b) " << (k32.condition_b ? "holds" : "fails") << '\n'
        << "K32 (c) " << (k32.condition_c ? "holds" : "fails") << '\n';
    for (auto const& w : k32.witnesses) {
      out << "  witness (" << w.condition << ") relation " << w.relation + 1
          << ": " << p.to_string(w.word) << ", lp " << w.lp.to_string() << ", "
          << w.detail << '\n';
    }
    for (std::size_t i = 0; i < dagger.per_relation.size(); ++i) {
      auto const& r = dagger.per_relation[i];
      out << "dagger relation " << i + 1 << ": " << r.lp_lhs.to_string()
          << " + " << r.lp_rhs.to_string() << " = " << r.sum().to_string()
          << (r.vacuous ? " (vacuous)" : "") << '\n';
    }
    out << "dagger " << (dagger.holds ? "holds" : "fails") << '\n';
    out << "C(n):";
    for (std::size_t n = 1; n <= 7; ++n) {
      out << ' ' << n << (cn[n - 1] ? "+" : "-");
    }
    out << '\n' << (ok ? "hypotheses hold" : "hypotheses fail") << '\n';
    return ok ? OK : FAILS;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify-example4
  ////////////////////////////////////////////////////////////////////////

  bool is_example4(Presentation const& p) {
    auto q = parse_presentation(example4_text);
    if (p.generators != q.generators || p.relations.size() != 1) {
      return false;
    }
    auto const& r = p.relations[0];
    auto const& s = q.relations[0];
    return (r.lhs == s.lhs && r.rhs == s.rhs) || (r.lhs == s.rhs && r.rhs == s.lhs);
  }

  int cmd_verify_example4(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 0, "no arguments besides the presentation");
    if (!is_example4(p)) {
      throw UsageError("verify-example4 needs the presentation <a,b,c | abcc = cba>");
    }
    if (cfg.n == 0) {
      throw UsageError("--n must be positive");
    }
    Oracle      o(p, settings(cfg));
    std::size_t k      = cfg.radius_or(2);
    auto        w      = [&p](char const* s) { return p.parse_word(s); };
    // The prefix distances stay well below this radius for n <= 8.
    std::size_t search = std::max<std::size_t>(k + 1, 6);
    json        rows   = json::array();
    std::string failure;
    std::optional<std::size_t> failing_n;
    std::optional<Distance>    previous;
    auto fail = [&](std::size_t n, std::string what) {
      if (!failing_n) {
        failing_n = n;
        failure   = std::move(what);
      }
    };
    for (std::size_t n = 1; n <= cfg.n; ++n) {
      auto v   = power(w("abc"), n);
      auto u   = concat(w("c"), power(w("ba"), n));
      auto gv  = o.is_geodesic(v);
      auto gu  = o.is_geodesic(u);
      auto eq  = o.sgp_equal(concat(v, w("c")), u);
      auto ft  = o.fellow_travel_bound(v, u, search);
      if (gv != tril::TRUE) {
        fail(n, "V_n is not geodesic");
      }
      if (gu != tril::TRUE) {
        fail(n, "U_n is not geodesic");
      }
      if (eq != tril::TRUE) {
        fail(n, "V_n c != U_n");
      }
      if (previous && previous->is_exact() && ft.bound.is_exact()
          && ft.bound.value() < previous->value()) {
        fail(n, "the prefix distance decreased");
      }
      previous = ft.bound;
      json profile = json::array();
      for (auto const& d : ft.profile) {
        profile.push_back(d.to_string());
      }
      rows.push_back({{"n", n},
                      {"V", p.to_string(v)},
                      {"U", p.to_string(u)},
                      {"len_V", v.size()},
                      {"len_U", u.size()},
                      {"V_geodesic", to_cstring(gv)},
                      {"U_geodesic", to_cstring(gu)},
                      {"Vc_equals_U", to_cstring(eq)},
                      {"max_prefix_distance", ft.bound.to_string()},
                      {"profile", profile}});
      if (!cfg.json) {
        std::cout << "n=" << n << " |V|=" << v.size() << " |U|=" << u.size()
                  << " V geodesic " << to_cstring(gv) << ", U geodesic "
                  << to_cstring(gu) << ", Vc = U " << to_cstring(eq)
                  << ", max prefix distance " << ft.bound.to_string() << '\n';
      }
    }
    if (previous && previous->at_most(k)) {
      fail(cfg.n, "the prefix distance never exceeds " + std::to_string(k));
    }
    std::optional<Distance> v3u3;
    if (cfg.n >= 3) {
      v3u3 = o.fellow_travel_bound(
                  power(w("abc"), 3), concat(w("c"), power(w("ba"), 3)), k)
                 .bound;
      if (!cfg.json) {
        std::cout << "ft(V3, U3) at radius " << k << ": " << v3u3->to_string()
                  << '\n';
      }
    }
    if (cfg.json) {
      json j = {{"rows", rows},
                {"radius", k},
                {"ok", !failing_n.has_value()}};
      if (v3u3) {
        j["ft_V3_U3"] = v3u3->to_string();
      }
      if (failing_n) {
        j["failing_n"] = *failing_n;
        j["failure"]   = failure;
      }
      print_json(j);
    } else if (failing_n) {
      std::cout << "FAILED at n=" << *failing_n << ": " << failure << '\n';
    } else {
      std::cout << "verified for n=1.." << cfg.n << '\n';
    }
    return failing_n ? FAILS : OK;
  }

  ////////////////////////////////////////////////////////////////////////
  // refute
  ////////////////////////////////////////////////////////////////////////

  int refute_batch(Config const& cfg, Oracle const& o, KappaContext const& ctx) {
    auto const& phi = ctx.phi();
    std::size_t k   = cfg.radius_or(3);
    std::size_t inefficient = 0, failed = 0, unknown = 0;
    std::vector<phi_word> layer{phi_word{}};
    json failures = json::array();
    for (std::size_t len = 1; len <= cfg.length_bound; ++len) {
      std::vector<phi_word> next;
      for (auto const& a : layer) {
        for (auto x : phi.letters()) {
          auto b = a;
          b.push_back(x);
          next.push_back(b);
          if (ctx.is_efficient(b)) {
            continue;
          }
          ++inefficient;
          auto s = refute_step(ctx, b);
          auto v = check_refutes(o, ctx, s.after, b, k).verdict();
          if (v == tril::FALSE) {
            ++failed;
            failures.push_back(
                {{"word", phi.to_string(b)}, {"after", phi.to_string(s.after)}});
          } else if (v == tril::unknown) {
            ++unknown;
          }
        }
      }
      layer = std::move(next);
    }
    if (cfg.json) {
      print_json({{"length_bound", cfg.length_bound},
                  {"k", k},
                  {"inefficient", inefficient},
                  {"failed", failed},
                  {"unknown", unknown},
                  {"failures", failures}});
    } else {
      std::cout << inefficient << " inefficient words of length <= "
                << cfg.length_bound << ", " << failed << " not " << k
                << "-refuted, " << unknown << " unknown\n";
    }
    return failed > 0 ? FAILS : unknown > 0 ? UNKNOWN : OK;
  }

  int cmd_refute(Config& cfg) {
    auto         p = load(cfg);
    Oracle       o(p, settings(cfg));
    PhiAlphabet  phi(p);
    KappaContext ctx(phi);
    if (cfg.args.empty()) {
      return refute_batch(cfg, o, ctx);
    }
    expect_args(cfg, 1, "one Phi-word");
    auto a = read_phi(phi, cfg.args[0]);
    if (a.empty()) {
      throw UsageError("refute needs a non-empty word");
    }
    auto t = refute_to_minimal(ctx, a);

    json        steps    = json::array();
    tril        pi_equal = tril::TRUE;
    bool        prec     = true;
    tril        verified = tril::TRUE;
    std::size_t worst    = 0;
    bool        exceeded = false;
    for (auto const& s : t.steps) {
      auto c = check_refutes(o, ctx, s.after, s.before, s.ft_claimed);
      pi_equal = detail::conj(pi_equal, c.pi_equal);
      prec     = prec && c.precedes;
      verified = detail::conj(verified, c.ft_within);
      if (c.ft.bound.is_exact()) {
        worst = std::max(worst, c.ft.bound.value());
      } else {
        exceeded = true;
        worst    = std::max(worst, c.ft.bound.bound());
      }
      json step = {{"kind", to_cstring(s.kind)},
                   {"before", phi.to_string(s.before)},
                   {"after", phi.to_string(s.after)},
                   {"ell", s.ell},
                   {"ft", c.ft.bound.to_string()},
                   {"ft_claimed", s.ft_claimed}};
      if (s.partner) {
        step["partner"] = phi.to_string(*s.partner);
      }
      steps.push_back(step);
    }
    std::string const bound
        = (exceeded ? ">" : "") + std::to_string(worst);
    tril const verdict = detail::conj(detail::conj(pi_equal, to_tril(prec)), verified);

    if (cfg.json || cfg.trace) {
      print_json({{"initial", phi.to_string(t.initial)},
                  {"steps", steps},
                  {"final", phi.to_string(t.final)},
                  {"checks",
                   {{"pi_equal", to_cstring(pi_equal)},
                    {"prec", prec},
                    {"ft", {{"bound", bound}, {"verified", to_cstring(verified)}}}}}});
    } else {
      for (auto const& s : steps) {
        std::cout << s["kind"].get<std::string>() << ' '
                  << s["before"].get<std::string>() << " -> "
                  << s["after"].get<std::string>();
        if (s["ell"] != 0) {
          std::cout << " at " << s["ell"].get<std::size_t>();
        }
        std::cout << " (ft " << s["ft"].get<std::string>() << ")\n";
      }
      std::cout << "final " << phi.to_string(t.final) << '\n';
    }
    return from_tril(verdict);
  }

  ////////////////////////////////////////////////////////////////////////
  // kappa
  ////////////////////////////////////////////////////////////////////////

  int cmd_kappa(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 1, "one Phi-word");
    PhiAlphabet  phi(p);
    KappaContext ctx(phi);
    auto         a         = read_phi(phi, cfg.args[0]);
    auto         k         = ctx.kappa_vector(a);
    bool const   admissible = is_admissible(phi, a);
    bool const   efficient  = ctx.is_efficient(a);
    std::optional<InefficiencyWitness> witness;
    if (admissible) {
      witness = ctx.inefficiency_witness(a);
    }
    if (cfg.json) {
      json j = {{"word", phi.to_string(a)},
                {"kappa", k.to_string()},
                {"admissible", admissible},
                {"efficient", efficient},
                {"witness", nullptr}};
      if (witness) {
        j["witness"] = {{"w", p.to_string(witness->word)},
                        {"pos", witness->position}};
      }
      print_json(j);
    } else {
      std::cout << k.to_string() << '\n';
    }
    return OK;
  }

  ////////////////////////////////////////////////////////////////////////
  // automaton
  ////////////////////////////////////////////////////////////////////////

  int cmd_automaton(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 1, "one of admissible, efficient, order");
    PhiAlphabet  phi(p);
    KappaContext ctx(phi);
    auto const&  kind = cfg.args[0];
    Dfa          d;
    if (kind == "admissible") {
      d = build_admissible_dfa(phi);
    } else if (kind == "efficient") {
      d = build_efficient_dfa(ctx);
    } else if (kind == "order") {
      d = build_order_pair_dfa(ctx);
    } else {
      throw UsageError("unknown automaton \"" + kind
                       + "\"; expected admissible, efficient or order");
    }
    if (cfg.dot) {
      std::cout << to_dot(d, kind);
    } else if (cfg.json) {
      auto j    = to_json(d);
      j["kind"] = kind;
      print_json(j);
    } else {
      std::size_t accepting = 0;
      for (Dfa::state_type s = 0; s < d.number_of_states(); ++s) {
        accepting += d.accepting(s);
      }
      std::cout << kind << ": " << d.number_of_states() << " states, "
                << accepting << " accepting, " << d.alphabet_size()
                << " symbols, minimal " << minimize(d).number_of_states()
                << " states\n";
    }
    return OK;
  }

  ////////////////////////////////////////////////////////////////////////
  // eq, nf, geodesic, dist, ft
  ////////////////////////////////////////////////////////////////////////

  int cmd_eq(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 2, "two words");
    Oracle o(p, settings(cfg));
    auto   w = p.parse_word(cfg.args[0]);
    auto   u = p.parse_word(cfg.args[1]);
    auto   r = cfg.group ? o.group_equal(w, u) : o.sgp_equal(w, u);
    if (cfg.json) {
      print_json({{"w", cfg.args[0]},
                  {"u", cfg.args[1]},
                  {"in", cfg.group ? "group" : "semigroup"},
                  {"equal", to_cstring(r)}});
    } else {
      std::cout << to_cstring(r) << '\n';
    }
    return from_tril(r);
  }

  int cmd_nf(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 1, "one word");
    Oracle o(p, settings(cfg));
    auto   w  = p.parse_word(cfg.args[0]);
    bool   confluent = o.rewriting().confluent();
    // Without confluence the irreducible form need not be canonical.
    auto   nf = confluent ? o.normal_form(w) : o.rewriting().rewrite(w);
    if (cfg.json) {
      print_json({{"word", cfg.args[0]},
                  {"normal_form", p.to_string(nf)},
                  {"confluent", confluent}});
    } else {
      std::cout << show(p, nf) << '\n';
    }
    return confluent ? OK : UNKNOWN;
  }

  int cmd_geodesic(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 1, "one word");
    Oracle o(p, settings(cfg));
    auto   r = o.is_geodesic(p.parse_word(cfg.args[0]));
    if (cfg.json) {
      print_json({{"word", cfg.args[0]}, {"geodesic", to_cstring(r)}});
    } else {
      std::cout << to_cstring(r) << '\n';
    }
    return from_tril(r);
  }

  int cmd_dist(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 2, "two words");
    Oracle      o(p, settings(cfg));
    std::size_t radius = cfg.radius_or(4);
    Distance    d      = Distance::exact(0);
    if (cfg.phi) {
      PhiAlphabet phi(p);
      d = o.induced_distance(phi.eta(read_phi(phi, cfg.args[0])),
                             phi.eta(read_phi(phi, cfg.args[1])),
                             phi.b_set(),
                             radius);
    } else {
      d = o.induced_distance(
          p.parse_word(cfg.args[0]), p.parse_word(cfg.args[1]), radius);
    }
    if (cfg.json) {
      auto j = distance_json(d);
      j["radius"]         = radius;
      j["generating_set"] = cfg.phi ? "B" : "X";
      print_json(j);
    } else {
      std::cout << d.to_string() << '\n';
    }
    return !d.is_exact() && d.flagged() ? UNKNOWN : OK;
  }

  int cmd_ft(Config& cfg) {
    auto p = load(cfg);
    expect_args(cfg, 2, "two words");
    Oracle       o(p, settings(cfg));
    std::size_t  radius = cfg.radius_or(2);
    FellowTravel ft;
    if (cfg.phi) {
      PhiAlphabet phi(p);
      ft = o.fellow_travel_bound(phi.images(read_phi(phi, cfg.args[0])),
                                 phi.images(read_phi(phi, cfg.args[1])),
                                 phi.b_set(),
                                 radius);
    } else {
      ft = o.fellow_travel_bound(
          p.parse_word(cfg.args[0]), p.parse_word(cfg.args[1]), radius);
    }
    if (cfg.json) {
      json profile = json::array();
      for (auto const& d : ft.profile) {
        profile.push_back(d.to_string());
      }
      auto j = distance_json(ft.bound);
      j["radius"]         = radius;
      j["generating_set"] = cfg.phi ? "B" : "X";
      j["profile"]        = profile;
      print_json(j);
    } else {
      std::cout << ft.bound.to_string() << '\n';
    }
    if (ft.bound.is_exact()) {
      return OK;
    }
    return ft.bound.flagged() ? UNKNOWN : FAILS;
  }

  std::size_t threads_from_env() {
    char const* v = std::getenv("OVERLAP_AUTO_THREADS");
    if (v == nullptr || *v == '\0') {
      return 1;
    }
    char* end = nullptr;
    auto  n   = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0) {
      throw UsageError("OVERLAP_AUTO_THREADS must be a positive integer");
    }
    return n;
  }

}  // namespace

int main(int argc, char** argv) {
  Config   cfg;
  CLI::App app{"Small overlap presentations: hypotheses, oracles, refutation "
               "and automata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "overlap-auto 1.0");

  struct Command {
    char const* name;
    char const* help;
    char const* usage;
    int (*run)(Config&);
  };
  std::vector<Command> commands
      = {{"check", "check the small overlap hypotheses", "", cmd_check},
         {"verify-example4", "reproduce the (abc)^n c = c(ba)^n counterexample",
          "", cmd_verify_example4},
         {"refute", "refute a Phi-word down to an efficient one, or check all "
                    "words up to --length-bound", "[WORD]", cmd_refute},
         {"kappa", "kappa vector of a Phi-word", "WORD",
          cmd_kappa},
         {"automaton", "build the admissible, efficient or order automaton",
          "admissible|efficient|order", cmd_automaton},
         {"eq", "decide equality of two words", "W U", cmd_eq},
         {"nf", "shortlex normal form of a word", "W", cmd_nf},
         {"dist", "distance between two words in the Cayley graph",
          "S T", cmd_dist},
         {"ft", "fellow traveller bound of two paths", "W U",
          cmd_ft},
         {"geodesic", "is a word geodesic", "W", cmd_geodesic}};

  for (auto const& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    // Positionals are collected as extras so that Phi-words such as
    // [ba][bcc] are not split as list syntax.
    sub->allow_extras();
    sub->footer(std::string("Arguments: [presentation.txt] ") + c.usage
                + "\nWithout a presentation file <a,b,c | abcc = cba> is used.");
    sub->add_flag("--json", cfg.json, "machine readable output");
    sub->add_flag("--dot", cfg.dot, "Graphviz output (automaton)");
    sub->add_flag("--trace", cfg.trace, "JSON refutation trace (refute)");
    sub->add_flag("--phi", cfg.phi,
                  "read Phi-words and measure with B (dist, ft)");
    sub->add_flag("--group", cfg.group, "compare in the group (eq)");
    sub->add_option("--radius", cfg.radius, "search radius")
        ->check(CLI::PositiveNumber);
    sub->add_option("--slack", cfg.slack,
                    "extra length for bounded searches (0: longest relator)");
    sub->add_option("--kb-bound", cfg.kb_bound,
                    "maximum number of rules during completion")
        ->check(CLI::PositiveNumber);
    sub->add_option("--length-bound", cfg.length_bound,
                    "maximum Phi-word length for enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--n", cfg.n, "largest n (verify-example4)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return USAGE;
  }

  try {
    if (cfg.json && cfg.dot) {
      throw UsageError("--json and --dot are mutually exclusive");
    }
    cfg.threads = threads_from_env();
    for (auto const& c : commands) {
      if (app.got_subcommand(c.name)) {
        cfg.args = app.get_subcommand(c.name)->remaining();
        for (auto const& a : cfg.args) {
          if (a.size() > 1 && a[0] == '-' && a[1] == '-') {
            throw UsageError("unknown option " + a);
          }
        }
        return c.run(cfg);
      }
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return USAGE;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return USAGE;
  } catch (InvariantViolation const& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return FAILS;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return USAGE;
  }
  return USAGE;
}
