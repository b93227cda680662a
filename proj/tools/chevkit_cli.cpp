// chevkit command-line tool.
//
//   chevkit decompose --kind gsp --l 2 --field p=7 --in g.json --out word.txt
//   chevkit verify    --in g.json --word word.txt
//   chevkit spinor    --kind o-even --l 2 --field p=7 --in g.json --method all
//   chevkit polys     --q 2 --dmax 4 --self-u
//   chevkit zcount    --series fq --terms 10
//   chevkit zbrute    --kind u --n 3 --q 2
//   chevkit bench     --words 100
//
// Exit status: 0 success, 1 usage or input error, 2 non-member or failed
// verification, 3 resource cap exceeded.

#include "chevkit/gauss.hpp"
#include "chevkit/io.hpp"
#include "chevkit/polyclass.hpp"
#include "chevkit/spinor.hpp"
#include "chevkit/zbrute.hpp"
#include "chevkit/zcount.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace chevkit;

namespace {

enum Exit { kOk = 0, kUsage = 1, kFailure = 2, kCap = 3 };

struct RunConfig {
  std::string kind;
  size_t rank = 0;
  std::string field;
  std::string in, out, word;
  uint64_t seed = 1;
  unsigned jobs = 1;
  bool deep = false;
  std::string method = "all";
  std::string emit = "text";
  // polys
  uint32_t q = 0;
  int dmax = 4;
  bool self_u = false, self_dual = false;
  // zcount
  std::string series;
  uint32_t terms = 10;
  uint32_t u_compact = 0, u_lorentz = 0;
  // zbrute
  uint64_t cap = BruteOptions{}.cap;
  // bench
  size_t words = 100;

  bool json() const { return emit == "json"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
int with_field(const FieldSpec& spec, F&& f) {
  if (spec.rational) return f(Rationals::instance());
  return f(spec.finite());
}

// Field from --field, else from the matrix file.
FieldSpec resolve_field(const RunConfig& cfg, const json* matrix) {
  if (!cfg.field.empty()) return parse_field_flag(cfg.field);
  if (matrix) return matrix_field(*matrix);
  throw UsageError("--field is required");
}

GroupKind resolve_kind(const RunConfig& cfg) {
  if (cfg.kind.empty()) throw UsageError("--kind is required");
  if (cfg.rank == 0) throw UsageError("--l (or --n) is required");
  return GroupKind::parse(cfg.kind, cfg.rank);
}

std::string big_str(const BigInt& v) { return v.str(); }

json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<int64_t>::max())) return v.convert_to<int64_t>();
  return v.str();
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const RunConfig& cfg) {
  const GroupKind kind = resolve_kind(cfg);
  if (cfg.in.empty()) throw UsageError("--in is required");
  const json mj = read_json_file(cfg.in);
  return with_field(resolve_field(cfg, &mj), [&](const auto& ctx) {
    const auto g = matrix_from_json(ctx, mj);
    const auto d = decompose(g, kind);
    const std::string record = format_decomposition(d);
    if (!cfg.out.empty()) write_text_file(cfg.out, record);
    if (cfg.json()) {
      json j{{"kind", kind.token()},
             {"l", kind.rank},
             {"field", field_to_json(ctx)},
             {"left", format_word(d.left)},
             {"right", format_word(d.right)},
             {"word_length", d.left.tokens.size() + d.right.tokens.size()},
             {"diagonal", rows_to_json(d.diagonal)},
             {"mu", element_to_json(d.mu)},
             {"lambda", element_to_json(d.lambda)},
             {"alpha", d.alpha ? element_to_json(*d.alpha) : json(nullptr)}};
      std::cout << j.dump(2) << "\n";
    } else if (!cfg.out.empty()) {
      std::cout << "wrote " << cfg.out << ": " << kind.name() << " over " << ctx.name() << ", "
                << d.left.tokens.size() << " left and " << d.right.tokens.size() << " right tokens, mu = "
                << to_string(d.mu) << ", lambda = " << to_string(d.lambda)
                << (d.alpha ? ", alpha = " + to_string(*d.alpha) : std::string()) << "\n";
    } else {
      std::cout << record;
    }
    return int(kOk);
  });
}

// ------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg) {
  if (cfg.in.empty() || cfg.word.empty()) throw UsageError("verify needs --in and --word");
  const json mj = read_json_file(cfg.in);
  const std::string record = read_text_file(cfg.word);
  return with_field(resolve_field(cfg, &mj), [&](const auto& ctx) {
    const auto g = matrix_from_json(ctx, mj);
    const auto d = parse_decomposition(ctx, record);
    const bool ok = verify(d, g);
    if (cfg.json())
      std::cout << json{{"kind", d.kind.token()}, {"l", d.kind.rank}, {"verified", ok}}.dump(2) << "\n";
    else
      std::cout << (ok ? "verified" : "FAILED") << ": " << d.kind.name() << " over " << ctx.name() << "\n";
    return int(ok ? kOk : kFailure);
  });
}

// ------------------------------------------------------------------- spinor

int cmd_spinor(const RunConfig& cfg) {
  const GroupKind kind = resolve_kind(cfg);
  if (!kind.orthogonal()) throw UsageError("spinor needs an orthogonal kind");
  const GroupKind iso{kind.orthogonal_odd() ? Family::Oodd : Family::Oeven, kind.rank};
  std::optional<json> mj;
  if (!cfg.in.empty()) mj = read_json_file(cfg.in);
  return with_field(resolve_field(cfg, mj ? &*mj : nullptr), [&](const auto& ctx) {
    using E = typename std::decay_t<decltype(ctx)>::element_type;
    Matrix<E> g(ctx, iso.dim(), iso.dim());
    if (mj) {
      g = matrix_from_json(ctx, *mj);
    } else {
      SplitMix64 rng(cfg.seed);
      g = random_member(iso, ctx, rng);
    }
    const auto beta = standard_form(iso, ctx);
    if (!g.is_square() || g.rows() != iso.dim() || !is_isometry(g, beta))
      throw NotMember("matrix is not an element of " + iso.name());
    const bool all = cfg.method == "all";
    std::vector<std::pair<std::string, SquareClass>> values;
    size_t reflections = 0;
    if (all || cfg.method == "elim") values.emplace_back("elim", spinor_elimination(g, iso));
    if (all || cfg.method == "wall") values.emplace_back("wall", spinor_wall(g, beta));
    if (all || cfg.method == "reflect") {
      const auto f = reflection_factor(g, beta);
      SquareClass c = trivial_class<E>();
      for (const auto& v : f.vectors) c = c * square_class(quadratic(v, beta));
      reflections = f.vectors.size();
      values.emplace_back("reflect", c);
    }
    bool agree = true;
    for (const auto& v : values) agree = agree && v.second == values.front().second;
    if (cfg.json()) {
      json j{{"kind", iso.token()}, {"l", iso.rank}, {"field", field_to_json(ctx)}};
      if (!mj) j["sample"] = rows_to_json(g);
      for (const auto& [name, c] : values) j[name] = c.to_string();
      if (reflections) j["reflections"] = reflections;
      j["agree"] = agree;
      std::cout << j.dump(2) << "\n";
    } else {
      if (!mj) std::cout << "sample: " << rows_to_json(g).dump() << "\n";
      for (const auto& [name, c] : values) {
        std::cout << std::left << std::setw(8) << name << c.to_string();
        if (name == "reflect") std::cout << "  (" << reflections << " reflections)";
        std::cout << "\n";
      }
      if (values.size() > 1) std::cout << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return int(agree ? kOk : kFailure);
  });
}

// -------------------------------------------------------------------- polys

int cmd_polys(const RunConfig& cfg) {
  if (cfg.q == 0) throw UsageError("--q is required");
  const bool dual = cfg.self_dual;
  if (dual && cfg.self_u) throw UsageError("choose one of --self-u and --self-dual");
  const FiniteField& k = dual ? FiniteField::of_order(cfg.q) : FiniteField::of_order(uint64_t(cfg.q) * cfg.q);
  const auto polys = dual ? enumerate_self_dual_irreducibles(k, cfg.dmax) : enumerate_self_u_irreducibles(k, cfg.dmax);
  std::map<int, size_t> counts;
  for (const auto& f : polys) ++counts[f.degree()];
  if (cfg.json()) {
    json j{{"q", cfg.q}, {"family", dual ? "self-dual" : "self-u"}, {"field", field_to_json(k)}, {"dmax", cfg.dmax}};
    json c = json::object();
    for (const auto& [d, n] : counts) c[std::to_string(d)] = n;
    j["counts"] = c;
    json list = json::array();
    for (const auto& f : polys) {
      json coeffs = json::array();
      for (const auto& a : f.coeffs()) coeffs.push_back(element_to_json(a));
      list.push_back(json{{"degree", f.degree()}, {"coeffs", coeffs}});
    }
    j["polynomials"] = list;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << (dual ? "self-dual" : "self-U-reciprocal") << " monic irreducibles over " << k.name()
            << ", degree <= " << cfg.dmax << "\n";
  int current = 0;
  for (const auto& f : polys) {
    if (f.degree() != current) {
      current = f.degree();
      std::cout << "degree " << current << ": " << counts[current] << "\n";
    }
    std::cout << "  " << f.to_string() << "\n";
  }
  std::cout << "total: " << polys.size() << "\n";
  return kOk;
}

// ------------------------------------------------------------------- zcount

int cmd_zcount(const RunConfig& cfg) {
  const int modes = !cfg.series.empty() + (cfg.u_compact > 0) + (cfg.u_lorentz > 0);
  if (modes != 1) throw UsageError("zcount needs exactly one of --series, --u-compact, --u-lorentz");
  if (!cfg.series.empty()) {
    const SeriesKind kind = parse_series_kind(cfg.series);
    const Series s = series(kind, cfg.terms);
    if (cfg.json()) {
      json c = json::array();
      for (uint32_t n = 1; n <= cfg.terms; ++n) c.push_back(big_json(s.c[n]));
      std::cout << json{{"series", cfg.series}, {"terms", cfg.terms}, {"coefficients", c}}.dump(2) << "\n";
    } else {
      std::cout << "n  " << cfg.series << "\n";
      for (uint32_t n = 1; n <= cfg.terms; ++n) std::cout << n << "  " << big_str(s.c[n]) << "\n";
    }
    return kOk;
  }
  if (cfg.u_compact) {
    const BigInt v = u_compact(cfg.u_compact);
    if (cfg.json())
      std::cout << json{{"u_compact", cfg.u_compact}, {"z_classes", big_json(v)}}.dump(2) << "\n";
    else
      std::cout << "U(" << cfg.u_compact + 1 << "): " << big_str(v) << " z-classes\n";
    return kOk;
  }
  const LorentzCounts c = u_lorentz(cfg.u_lorentz);
  if (cfg.json()) {
    std::cout << json{{"u_lorentz", cfg.u_lorentz},
                      {"hyperbolic", big_json(c.hyperbolic)},
                      {"elliptic", big_json(c.elliptic)},
                      {"parabolic", big_json(c.parabolic)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "U(" << cfg.u_lorentz << ",1)\n"
              << "hyperbolic  " << big_str(c.hyperbolic) << "\n"
              << "elliptic    " << big_str(c.elliptic) << "\n"
              << "parabolic   " << big_str(c.parabolic) << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------- zbrute

int cmd_zbrute(const RunConfig& cfg) {
  const GroupKind kind = resolve_kind(cfg);
  if (cfg.q == 0) throw UsageError("--q is required");
  BruteOptions opt;
  opt.seed = cfg.seed;
  opt.jobs = std::max(1u, cfg.jobs);
  opt.cap = cfg.deep ? std::max<uint64_t>(cfg.cap, 50000000) : cfg.cap;
  const MatrixGroup g = build_group(kind, cfg.q, opt);
  const ZClassReport r = z_classes(g, opt.jobs);
  if (cfg.json()) {
    json clusters = json::array();
    for (const auto& c : r.clusters) {
      json sizes = json::array();
      for (size_t k : c.classes) sizes.push_back(r.classes[k].size);
      clusters.push_back(json{{"centralizer_order", c.centralizer_order},
                              {"class_sizes", sizes},
                              {"element_order", r.classes[c.classes.front()].element_order},
                              {"representative", rows_to_json(g.to_matrix(g.element(c.rep)))}});
    }
    std::cout << json{{"kind", kind.token()},
                      {"n", kind.rank},
                      {"q", cfg.q},
                      {"field", field_to_json(g.field())},
                      {"order", r.group_order},
                      {"classes", r.class_count()},
                      {"z_classes", r.z_count()},
                      {"clusters", clusters}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << kind.name() << " over " << g.field().name() << " (q = " << cfg.q << ")\n"
            << "order      " << r.group_order << "\n"
            << "classes    " << r.class_count() << "\n"
            << "z-classes  " << r.z_count() << "\n\n"
            << std::left << std::setw(4) << "#" << std::setw(10) << "|Z(x)|" << std::setw(9) << "classes"
            << std::setw(7) << "order"
            << "representative\n";
  for (size_t i = 0; i < r.clusters.size(); ++i) {
    const auto& c = r.clusters[i];
    std::cout << std::left << std::setw(4) << i + 1 << std::setw(10) << c.centralizer_order << std::setw(9)
              << c.classes.size() << std::setw(7) << r.classes[c.classes.front()].element_order
              << rows_to_json(g.to_matrix(g.element(c.rep))).dump() << "\n";
  }
  return kOk;
}

// -------------------------------------------------------------------- bench

struct BenchConfig {
  GroupKind kind;
  FieldSpec field;
};

int cmd_bench(const RunConfig& cfg) {
  std::vector<BenchConfig> configs;
  if (!cfg.kind.empty()) {
    configs.push_back({resolve_kind(cfg), resolve_field(cfg, nullptr)});
  } else {
    for (const char* f : {"q=3", "q=5", "q=7", "q=9"})
      for (const GroupKind& k : {GroupKind::gsp(2), GroupKind::gsp(3), GroupKind::go_even(2), GroupKind::go_even(3),
                                 GroupKind::go_odd(2), GroupKind::go_odd(3)})
        configs.push_back({k, parse_field_flag(f)});
  }
  json summary = json::array();
  if (!cfg.json()) std::cout << "kind,l,field,sample,left_length,right_length,word_length,micros\n";
  for (const auto& bc : configs) {
    with_field(bc.field, [&](const auto& ctx) {
      SplitMix64 rng(cfg.seed);
      std::vector<size_t> lengths;
      double total_us = 0;
      for (size_t s = 0; s < cfg.words; ++s) {
        const auto g = random_member(bc.kind, ctx, rng);
        const auto t0 = std::chrono::steady_clock::now();
        const auto d = decompose(g, bc.kind);
        const auto t1 = std::chrono::steady_clock::now();
        if (!verify(d, g)) throw std::logic_error("bench decomposition failed to verify");
        const double us = std::chrono::duration<double, std::micro>(t1 - t0).count();
        total_us += us;
        const size_t len = d.left.tokens.size() + d.right.tokens.size();
        lengths.push_back(len);
        if (!cfg.json())
          std::cout << bc.kind.token() << "," << bc.kind.rank << "," << ctx.name() << "," << s << ","
                    << d.left.tokens.size() << "," << d.right.tokens.size() << "," << len << ","
                    << std::fixed << std::setprecision(1) << us << "\n";
      }
      if (cfg.json() && !lengths.empty()) {
        std::sort(lengths.begin(), lengths.end());
        double mean = 0;
        for (size_t v : lengths) mean += double(v);
        mean /= double(lengths.size());
        summary.push_back(json{{"kind", bc.kind.token()},
                               {"l", bc.kind.rank},
                               {"field", ctx.name()},
                               {"samples", lengths.size()},
                               {"length_min", lengths.front()},
                               {"length_median", lengths[lengths.size() / 2]},
                               {"length_mean", mean},
                               {"length_max", lengths.back()},
                               {"micros_mean", total_us / double(lengths.size())}});
      }
      return 0;
    });
  }
  if (cfg.json()) std::cout << summary.dump(2) << "\n";
  return kOk;
}

// --------------------------------------------------------------------- main

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--emit", cfg.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", cfg.seed, "Seed for random sampling");
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sub->add_flag("--deep", cfg.deep, "Attempt large cases");
}

void add_kind(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--kind", cfg.kind, "gl | sl | gsp | sp | go-even | o-even | go-odd | o-odd | u");
  sub->add_option("--l,--n", cfg.rank, "Rank l (or matrix size n for gl, sl, u)");
}

int run(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"chevkit: elimination, spinor norms and z-class counts for classical groups"};
  app.require_subcommand(1);

  auto* dec = app.add_subcommand("decompose", "Write a group element as a word times a torus element");
  add_common(dec, cfg);
  add_kind(dec, cfg);
  dec->add_option("--field", cfg.field, "p=7 | p=3,m=2 | q=9 | rational");
  dec->add_option("--in", cfg.in, "Matrix JSON file")->required();
  dec->add_option("--out", cfg.out, "Decomposition record file");

  auto* ver = app.add_subcommand("verify", "Check a decomposition record against a matrix");
  add_common(ver, cfg);
  ver->add_option("--field", cfg.field, "Field flag");
  ver->add_option("--in", cfg.in, "Matrix JSON file")->required();
  ver->add_option("--word", cfg.word, "Decomposition record file")->required();

  auto* spi = app.add_subcommand("spinor", "Spinor norm of an orthogonal matrix");
  add_common(spi, cfg);
  add_kind(spi, cfg);
  spi->add_option("--field", cfg.field, "Field flag");
  spi->add_option("--in", cfg.in, "Matrix JSON file (a seeded random element when absent)");
  spi->add_option("--method", cfg.method, "elim | wall | reflect | all")
      ->check(CLI::IsMember({"elim", "wall", "reflect", "all"}));

  auto* pol = app.add_subcommand("polys", "Enumerate self-U-reciprocal or self-dual irreducibles");
  add_common(pol, cfg);
  pol->add_option("--q", cfg.q, "q; self-U-reciprocal polynomials live over GF(q^2)")->required();
  pol->add_option("--dmax", cfg.dmax, "Largest degree")->check(CLI::Range(1, 6));
  pol->add_flag("--self-u", cfg.self_u, "Self-U-reciprocal over GF(q^2) (default)");
  pol->add_flag("--self-dual", cfg.self_dual, "Self-dual over GF(q)");

  auto* zc = app.add_subcommand("zcount", "z-class counts from generating functions");
  add_common(zc, cfg);
  zc->add_option("--series", cfg.series, "closed | real | fq");
  zc->add_option("--terms", cfg.terms, "Number of coefficients")->check(CLI::Range(1u, 64u));
  zc->add_option("--u-compact", cfg.u_compact, "n for the compact group U(n+1)");
  zc->add_option("--u-lorentz", cfg.u_lorentz, "n for U(n,1)");

  auto* zb = app.add_subcommand("zbrute", "Brute-force z-classes of a small finite group");
  add_common(zb, cfg);
  add_kind(zb, cfg);
  zb->add_option("--q", cfg.q, "Field order q (U uses GF(q^2))")->required();
  zb->add_option("--cap", cfg.cap, "Largest group order attempted");

  auto* be = app.add_subcommand("bench", "Decomposition timing and word lengths as CSV");
  add_common(be, cfg);
  add_kind(be, cfg);
  be->add_option("--field", cfg.field, "Field flag");
  be->add_option("--words", cfg.words, "Samples per configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*dec) return cmd_decompose(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*spi) return cmd_spinor(cfg);
    if (*pol) return cmd_polys(cfg);
    if (*zc) return cmd_zcount(cfg);
    if (*zb) return cmd_zbrute(cfg);
    if (*be) return cmd_bench(cfg);
  } catch (const NotMember& e) {
    std::cerr << "not a member: " << e.what() << "\n";
    return kFailure;
  } catch (const ResourceCap& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
