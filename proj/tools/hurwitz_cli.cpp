// hurwitz: command-line front end for the factorization-semigroup library.
//
// Exit codes: 0 success, 1 falsification or failed check, 2 limits exceeded
// on every row, 3 usage error, 4 I/O or internal error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hurwitz/hurwitz.hpp"

namespace {

using namespace hurwitz;

enum Exit { kOk = 0, kFalsified = 1, kAllUnknown = 2, kUsage = 3, kInternal = 4 };

struct Globals {
  std::uint64_t max_states = Limits{}.max_states;
  std::uint64_t max_fiber = Limits{}.max_fiber;
  std::uint64_t memory_mb = Limits{}.memory_budget >> 20;
  unsigned workers = 1;
  std::string cache_dir;
  std::string format = "json";
  std::uint64_t seed = 1;

  RunConfig config() const {
    RunConfig cfg;
    cfg.limits.max_states = max_states;
    cfg.limits.max_fiber = max_fiber;
    cfg.limits.memory_budget = memory_mb << 20;
    cfg.limits.workers = workers;
    cfg.cache_dir = cache_dir;
    cfg.format = format;
    cfg.seed = seed;
    return cfg;
  }
};

int exit_code(const Json& rep) {
  if (rep.value("falsification", false)) return kFalsified;
  const std::string status = rep.value("status", "complete");
  if (status == "fail") return kFalsified;
  if (status == "unknown") return kAllUnknown;
  return kOk;
}

// Runs `build` unless a cached report for `query` exists, then prints it.
template <class Build>
int run_report(const Globals& g, Json query, Build&& build) {
  const RunConfig cfg = g.config();
  query["config"] = config_json(cfg);
  std::optional<ResultCache> cache;
  if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);
  Json rep;
  if (auto hit = cache ? cache->get(query) : std::nullopt) {
    rep = Json::parse(*hit);
  } else {
    rep = build(cfg);
    if (cache) cache->put(query, rep.dump());
  }
  std::cout << emit(rep, cfg.format);
  return exit_code(rep);
}

Json word_json(const Factorization& s) {
  Json j;
  j["word"] = format_word(s);
  j["length"] = s.length();
  j["alpha"] = to_cycle_string(alpha(s));
  j["tau"] = tau(s).to_string();
  return j;
}

int resolve_degree(int d, const std::string& text) {
  if (d > 0) return d;
  const int inferred = infer_degree(text);
  if (inferred < 1) throw ParseError("cannot infer the degree of '" + text + "'; pass --d");
  return inferred;
}

SubgroupConstraint parse_constraint(const std::string& s) {
  if (s == "none") return SubgroupConstraint::none;
  if (s == "full") return SubgroupConstraint::full_group;
  if (s == "transitive") return SubgroupConstraint::transitive;
  throw ParseError("constraint must be none, full or transitive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz orbits, stabilizing constructions and component counts for factorizations in S_d"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-states", g.max_states, "state cap per orbit search")->capture_default_str();
  app.add_option("--max-fiber", g.max_fiber, "cap on enumerated fiber words")->capture_default_str();
  app.add_option("--memory-mb", g.memory_mb, "memory budget per search (MiB)")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads; results do not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "reuse reports stored in this directory");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed recorded in reports")->capture_default_str();

  int d = 0;
  std::string cls, word, word2, type, product = "()", constraint = "full", element, claim;
  int i = 1, j = 2, k = 0, n_from = 2, n_to = 8, b = 0, depth = kDefaultWordDepth;
  bool conj = false, list = false, galois = false, all_coverings = false, no_conj = false;

  auto* ci = app.add_subcommand("class-info", "n_C, k_C, f_C, m_C and the bound N_C of a class");
  ci->add_option("--d", d, "degree")->required();
  ci->add_option("--class", cls, "cycle type, e.g. 2 or 2,1,1")->required();
  ci->add_option("--depth", depth, "search depth for m_C")->capture_default_str();

  auto* orb = app.add_subcommand("orbit", "enumerate the Hurwitz orbit of a word");
  orb->add_option("--d", d, "degree (inferred when omitted)");
  orb->add_option("--word", word, "factors separated by spaces, e.g. \"(1,2) (2,3)\"")->required();
  orb->add_flag("--conj", conj, "also identify simultaneous conjugates");
  orb->add_flag("--list", list, "print every orbit member");

  auto* eq = app.add_subcommand("equiv", "decide Hurwitz equivalence with a move certificate");
  eq->add_option("--d", d, "degree (inferred when omitted)");
  eq->add_option("--word1", word, "first word")->required();
  eq->add_option("--word2", word2, "second word")->required();

  auto* fc = app.add_subcommand("fiber-count", "count words and orbits with fixed type and product");
  fc->add_option("--d", d, "degree")->required();
  fc->add_option("--type", type, "type, e.g. 2,1:4 or 2,1,1:2;3,1:2")->required();
  fc->add_option("--product", product, "product of the factors")->capture_default_str();
  fc->add_option("--constraint", constraint, "none | full | transitive")->capture_default_str();
  fc->add_flag("--conj", conj, "quotient by the centralizer of the product");

  auto* sl = app.add_subcommand("stable-length", "orbit counts over n copies of a class, G_s = S_d");
  sl->add_option("--d", d, "degree")->required();
  sl->add_option("--class", cls, "cycle type")->required();
  sl->add_option("--product", product, "product of the factors")->capture_default_str();
  sl->add_option("--from", n_from, "first length")->capture_default_str();
  sl->add_option("--to", n_to, "last length")->capture_default_str();

  auto* co = app.add_subcommand("construct", "build h, sbar, c, y, z or hC");
  co->add_option("--d", d, "degree")->required();
  co->add_option("--class", cls, "odd cycle type with at least two fixed points")->capture_default_str();
  co->add_option("--element", element, "h | sbar | c | y | z | hC")
      ->required()
      ->check(CLI::IsMember({"h", "sbar", "c", "y", "z", "hC"}));
  co->add_option("--i", i, "first index for sbar/z")->capture_default_str();
  co->add_option("--j", j, "second index for sbar/z")->capture_default_str();
  co->add_option("--k", k, "index for y (default d)");

  auto* ve = app.add_subcommand("verify", "check a claim at small degree");
  ve->add_option("--d", d, "degree")->required();
  ve->add_option("--class", cls, "cycle type (default: transpositions)");
  ve->add_option("--claim", claim, "1 | 2 | 3 | 5 | lengths | relations")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "5", "lengths", "relations"}));

  auto* cc = app.add_subcommand("components", "count irreducible components of Hurwitz spaces");
  cc->add_option("--d", d, "degree")->required();
  cc->add_option("--b", b, "number of branch points");
  cc->add_option("--type", type, "restrict to one type (sets b)");
  cc->add_flag("--galois-full", galois, "HUR^{S_d}: G_s = S_d, Hurwitz orbits without conjugation");
  cc->add_flag("--all-coverings", all_coverings, "include disconnected coverings");
  cc->add_flag("--no-conj", no_conj, "do not identify simultaneous conjugates");

  auto* t1 = app.add_subcommand("theorem1-report", "bound N_C next to scanned orbit counts");
  t1->add_option("--d", d, "degree")->required();
  t1->add_option("--class", cls, "odd cycle type with at least two fixed points")->required();
  t1->add_option("--from", n_from, "first scanned length")->capture_default_str();
  t1->add_option("--to", n_to, "last scanned length")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ci) {
      const ClassLabel c = parse_class(d, cls);
      Json q{{"command", "class-info"}, {"d", d}, {"class", c.to_string()}, {"depth", depth}};
      return run_report(g, q, [&](const RunConfig& cfg) {
        Json rep = new_report("class-info", cfg);
        const ClassMetrics m = compute_class_metrics(d, c, depth);
        rep["metrics"] = metrics_json(m);
        try {
          rep["bound_N_C"] = bound_N_C(m);
        } catch (const PreconditionError& e) {
          rep["bound_N_C"] = nullptr;
          rep["bound_note"] = e.what();
        }
        return rep;
      });
    }

    if (*orb) {
      d = resolve_degree(d, word);
      const Factorization s = parse_word(word, d);
      const RunConfig cfg = g.config();
      Json rep = new_report("orbit", cfg);
      rep["input"] = word_json(s);
      const OrbitReport o = enumerate_orbit(s, cfg.limits, conj);
      rep["conjugation"] = conj;
      rep["size"] = o.size;
      rep["canonical"] = o.canonical ? Json(format_word(*o.canonical)) : Json(nullptr);
      rep["status"] = o.complete ? "complete" : "unknown";
      if (!o.complete) rep["limit"] = o.limit_hit;
      if (list) {
        Json members = Json::array();
        for (const auto& w : orbit_members(s, cfg.limits, conj)) members.push_back(format_word(w));
        rep["members"] = members;
      }
      std::cout << emit(rep, cfg.format);
      return exit_code(rep);
    }

    if (*eq) {
      d = resolve_degree(d, word + " " + word2);
      const Factorization s1 = parse_word(word, d), s2 = parse_word(word2, d);
      const RunConfig cfg = g.config();
      Json rep = new_report("equiv", cfg);
      rep["word1"] = word_json(s1);
      rep["word2"] = word_json(s2);
      const Equivalence e = are_equivalent(s1, s2, cfg.limits);
      rep["verdict"] = to_string(e.verdict);
      rep["certificate"] = moves_json(e.certificate);
      rep["states_explored"] = e.states_explored;
      if (!e.reason.empty()) rep["reason"] = e.reason;
      rep["status"] = e.verdict == Verdict::unknown ? "unknown" : "complete";
      std::cout << emit(rep, cfg.format);
      return exit_code(rep);
    }

    if (*fc) {
      FiberSpec spec;
      spec.d = d;
      spec.type = parse_type(d, type);
      spec.product = parse_perm(product, d);
      spec.constraint = parse_constraint(constraint);
      spec.conjugation_quotient = conj;
      Json q{{"command", "fiber-count"}, {"d", d}, {"type", spec.type.to_string()},
             {"product", to_cycle_string(spec.product)}, {"constraint", to_string(spec.constraint)}, {"conj", conj}};
      return run_report(g, q, [&](const RunConfig& cfg) {
        Json rep = new_report("fiber-count", cfg);
        rep["query"] = q;
        const FiberOrbits fo = count_orbits_in_fiber(spec, cfg.limits);
        rep["fiber_size"] = fo.fiber_size;
        rep["orbits"] = fo.complete ? Json(fo.orbit_count) : Json(nullptr);
        rep["status"] = fo.complete ? "complete" : "unknown";
        if (!fo.complete) rep["limit"] = fo.limit_hit;
        Json rows = Json::array();
        for (std::size_t x = 0; x < fo.representatives.size(); ++x) {
          rows.push_back({{"representative", format_word(fo.representatives[x])}, {"size", fo.orbit_sizes[x]}});
        }
        rep["rows"] = rows;
        return rep;
      });
    }

    if (*sl) {
      const ClassLabel c = parse_class(d, cls);
      const Perm p = parse_perm(product, d);
      Json q{{"command", "stable-length"}, {"d", d}, {"class", c.to_string()}, {"product", to_cycle_string(p)},
             {"from", n_from}, {"to", n_to}};
      return run_report(g, q, [&](const RunConfig& cfg) {
        Json rep = new_report("stable-length", cfg);
        rep["query"] = q;
        Json rows = Json::array();
        bool any = false;
        for (const auto& r : stable_length_scan(d, c, p, n_from, n_to, cfg.limits)) {
          rows.push_back(to_json(r));
          any |= r.complete;
        }
        rep["rows"] = rows;
        rep["status"] = any ? "complete" : "unknown";
        return rep;
      });
    }

    if (*co) {
      const RunConfig cfg = g.config();
      Json rep = new_report("construct", cfg);
      Factorization s(d);
      if (element == "h") {
        s = build_h(d);
      } else {
        const ClassLabel c = cls.empty() ? parse_class(d, "2") : parse_class(d, cls);
        const ConstructionContext ctx = ConstructionContext::make(d, c);
        rep["class"] = c.to_string();
        rep["witness"] = format_word(ctx.witness());
        if (element == "sbar") s = build_sbar(ctx, i, j);
        if (element == "c") s = build_c(ctx);
        if (element == "y") s = build_y(ctx, k ? k : d);
        if (element == "z") s = build_z(ctx, i, j);
        if (element == "hC") s = build_h_C(ctx);
      }
      rep["element"] = element;
      rep["summary"] = word_json(s);
      std::cout << emit(rep, cfg.format);
      return kOk;
    }

    if (*ve) {
      const ClassLabel c = cls.empty() ? parse_class(d, "2") : parse_class(d, cls);
      Json q{{"command", "verify"}, {"d", d}, {"class", c.to_string()}, {"claim", claim}};
      return run_report(g, q, [&](const RunConfig& cfg) {
        Json rep = new_report("verify", cfg);
        rep["query"] = q;
        std::vector<ClaimReport> parts;
        if (claim == "5") {
          parts.push_back(verify_claim5(d, c, cfg.limits));
        } else {
          const ConstructionContext ctx = ConstructionContext::make(d, c);
          rep["witness"] = format_word(ctx.witness());
          if (claim == "1") parts.push_back(verify_claim1(ctx, cfg.limits));
          if (claim == "2") parts.push_back(verify_claim2(ctx, cfg.limits));
          if (claim == "3") parts.push_back(verify_claim3(ctx, cfg.limits));
          if (claim == "lengths") parts.push_back(verify_lengths(ctx));
          if (claim == "relations") {
            parts.push_back(verify_claim3(ctx, cfg.limits));
            parts.push_back(verify_y_commutation(ctx, cfg.limits));
          }
        }
        Json jp = Json::array();
        std::string status = "pass";
        bool all_unknown = true;
        for (const auto& p : parts) {
          jp.push_back(to_json(p));
          const std::string st = p.status();
          if (st == "fail") status = "fail";
          if (st == "unknown" && status == "pass") status = "partial";
          for (const auto& r : p.rows) all_unknown &= r.verdict == Verdict::unknown;
        }
        if (status == "partial" && all_unknown) status = "unknown";
        rep["status"] = status;
        rep["reports"] = jp;
        Json rows = Json::array();
        for (const auto& p : parts)
          for (const auto& r : p.rows) rows.push_back(to_json(r));
        rep["rows"] = rows;
        return rep;
      });
    }

    if (*cc) {
      ComponentQuery q;
      if (!type.empty()) {
        TypeVector t = parse_type(d, type);
        q = galois ? ComponentQuery::hur_galois(d, t) : ComponentQuery::hur(d, t.total(), !all_coverings);
        q.type = t;
      } else {
        if (b <= 0) throw PreconditionError("components needs --b or --type");
        q = ComponentQuery::hur(d, b, !all_coverings);
        if (galois) {
          q.galois_full = true;
          q.transitive_only = false;
          q.conjugation_quotient = false;
        }
      }
      if (no_conj) q.conjugation_quotient = false;
      return run_report(g, Json{{"command", "components"}, {"query", q.to_json()}},
                        [&](const RunConfig& cfg) { return count_components(q, cfg); });
    }

    if (*t1) {
      const ClassLabel c = parse_class(d, cls);
      Json q{{"command", "theorem1-report"}, {"d", d}, {"class", c.to_string()}, {"from", n_from}, {"to", n_to}};
      return run_report(g, q, [&](const RunConfig& cfg) {
        const Theorem1Result r = theorem1_report(d, c, cfg, n_from, n_to);
        Json rep = r.report;
        rep["status"] = r.all_unknown ? "unknown" : "complete";
        return rep;
      });
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kAllUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
