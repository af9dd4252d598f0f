#include "qrefl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <thread>

#include "qrefl/error.hpp"
#include "qrefl/imprim.hpp"

namespace qrefl {

namespace {

using Job = std::function<Report()>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Report failed_report(const std::string& id, const std::string& kind, double eps, const std::exception& e) {
  Report r;
  r.id = id;
  r.kind = kind;
  r.tolerance = eps;
  r.check("completed", false, e.what());
  return r;
}

// Runs jobs on a small pool; results keep the job order.
std::vector<Report> run_batch(const std::vector<Job>& jobs, bool parallel) {
  std::vector<Report> out(jobs.size());
  if (!parallel || jobs.size() < 2) {
    for (std::size_t n = 0; n < jobs.size(); ++n) out[n] = jobs[n]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t n = next++; n < jobs.size(); n = next++) out[n] = jobs[n]();
    }));
  }
  for (auto& f : pool) f.get();
  return out;
}

Quaternion random_in_ball(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  return (std::pow(unit(rng), 0.25) / q.norm()) * q;
}

Quaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  return q / q.norm();
}

void oracle_checks(Report& r, const std::vector<Mat2>& gens, const SolutionSet& s,
                   const VerifyOptions& opts) {
  const double eps = opts.tolerance;
  std::mt19937_64 rng(opts.seed ^ fnv1a(r.id));
  r.check("standard system", is_system(gens, 0.0, eps) == s.includes_standard,
          s.includes_standard ? "(1,0) present" : "(1,0) absent");

  std::size_t inside = 0, inside_bad = 0;
  std::vector<Quaternion> near;
  for (const auto& comp : s.components) {
    for (const auto& q : comp.sample(opts.inside_samples, rng)) {
      ++inside;
      const bool ok = is_system(gens, q, eps) &&
                      (comp.kind() != ComponentKind::point || is_system_by_conjugation(gens, q, eps));
      if (!ok) ++inside_bad;
      near.push_back(q);
    }
  }
  if (!s.components.empty()) {
    r.check("oracle inside", inside_bad == 0,
            std::to_string(inside - inside_bad) + "/" + std::to_string(inside) + " component samples are systems");
  }

  // Half uniform in the unit ball, half small perturbations of component samples.
  std::size_t outside = 0, outside_bad = 0;
  for (std::size_t n = 0; outside < opts.outside_samples && n < 10 * opts.outside_samples; ++n) {
    Quaternion q = (n % 2 == 0 || near.empty()) ? random_in_ball(rng)
                                                : near[n % near.size()] + 1e-3 * random_unit(rng);
    if (q.norm() <= 1e-6 || s.contains(q, 1e3 * eps)) continue;
    ++outside;
    if (is_system(gens, q, eps)) ++outside_bad;
  }
  if (s.determined) {
    r.check("oracle outside", outside_bad == 0,
            std::to_string(outside - outside_bad) + "/" + std::to_string(outside) +
                " samples off the components are not systems");
  } else {
    r.notes.push_back(s.note);
  }
}

Report order_report(const CatalogEntry& e, const VerifyOptions& opts) {
  Stopwatch clock;
  Report r;
  r.id = e.id.str();
  r.kind = "orders";
  r.tolerance = opts.tolerance;
  try {
    const FiniteGroup g = closure(e.generators, opts.cap, opts.tolerance);
    r.order = g.order();
    r.expected_order = e.expected_order;
    r.check("order", g.order() == e.expected_order,
            std::to_string(g.order()) + " vs " + std::to_string(e.expected_order));
    r.reflection_count = reflections(g).size();
    r.expected_reflection_count = e.expected_reflection_count;
    r.check("reflection count", *r.reflection_count == e.expected_reflection_count,
            std::to_string(*r.reflection_count) + " vs " + std::to_string(e.expected_reflection_count));
  } catch (const std::exception& ex) {
    r = failed_report(r.id, r.kind, opts.tolerance, ex);
  }
  r.seconds = clock.seconds();
  return r;
}

std::vector<Job> solve_jobs(const std::vector<CatalogEntry>& entries, const VerifyOptions& opts) {
  std::vector<Job> jobs;
  for (const auto& e : entries) jobs.push_back([e, opts] { return solve_report(e, opts); });
  return jobs;
}

Report conjugacy_report(const std::string& id, const std::vector<Mat2>& g1, const std::vector<Mat2>& g2,
                        const Mat2& u, const std::string& detail, const VerifyOptions& opts) {
  Stopwatch clock;
  Report r;
  r.id = id;
  r.kind = "conjugacy";
  r.tolerance = opts.tolerance;
  try {
    const FiniteGroup a = closure(g1, opts.cap, opts.tolerance);
    const FiniteGroup b = closure(g2, opts.cap, opts.tolerance);
    r.order = a.order();
    r.expected_order = b.order();
    r.check("conjugate_equal", conjugate_equal(a, b, u), detail);
  } catch (const std::exception& ex) {
    r = failed_report(id, r.kind, opts.tolerance, ex);
  }
  r.seconds = clock.seconds();
  return r;
}

Report monomial_form_report(int k, const std::string& row, const VerifyOptions& opts) {
  Stopwatch clock;
  Report r;
  r.id = "ST" + std::to_string(k) + " at q=j ~ " + row;
  r.kind = "conjugacy";
  r.tolerance = opts.tolerance;
  try {
    const auto eps = opts.tolerance;
    const auto m = monomialize(primitive_complex(k).generators, Quaternion::j(), eps, opts.cap);
    const auto sig = identify_system(m.data.L, eps);
    const CatalogEntry target = gklh(row);
    const auto target_data = extract_LH(closure(target.generators, opts.cap, eps));
    const auto target_sig = identify_system(target_data.L, eps);
    const FiniteGroup g = closure(m.generators, opts.cap, eps);
    r.order = g.order();
    r.expected_order = target.expected_order;
    r.L_size = m.data.L.size();
    r.H_size = m.data.H.size();
    r.check("monomial", std::all_of(g.elements().begin(), g.elements().end(),
                                    [&](const Mat2& x) { return is_monomial(x, 16 * eps); }));
    r.check("signature", sig.size == target_sig.size && sig.group_order == target_sig.group_order &&
                             sig.label == target_sig.label,
            "(" + std::to_string(sig.size) + "," + std::to_string(sig.group_order) + ") " + sig.label +
                " vs " + target_sig.label);
    r.check("diagonal part", m.data.H.size() == target_data.H.size(),
            "|H| = " + std::to_string(m.data.H.size()));
    r.check("order", g.order() == target.expected_order);
  } catch (const std::exception& ex) {
    r = failed_report(r.id, r.kind, opts.tolerance, ex);
  }
  r.seconds = clock.seconds();
  return r;
}

Report inclusion_report(const std::string& small_id, const std::vector<Mat2>& small,
                        const std::string& large_id, const std::vector<Mat2>& large,
                        const VerifyOptions& opts) {
  Stopwatch clock;
  Report r;
  r.id = small_id + " < " + large_id;
  r.kind = "inclusion";
  r.tolerance = opts.tolerance;
  try {
    const FiniteGroup h = closure(small, opts.cap, opts.tolerance);
    const FiniteGroup g = closure(large, opts.cap, opts.tolerance);
    r.order = h.order();
    r.expected_order = g.order();
    r.check("is_subgroup", is_subgroup(h, g),
            std::to_string(h.order()) + " divides " + std::to_string(g.order()));
  } catch (const std::exception& ex) {
    r = failed_report(r.id, r.kind, opts.tolerance, ex);
  }
  r.seconds = clock.seconds();
  return r;
}

Report certificate_report(const VerifyOptions& opts) {
  Stopwatch clock;
  Report r;
  r.id = "primitive groups by inclusion";
  r.kind = "inclusion";
  r.tolerance = opts.tolerance;
  try {
    std::vector<int> empty;
    for (int k : {4, 8, 16}) {
      const SolutionSet s = solve(primitive_complex(k).generators, opts.tolerance);
      const bool none = s.determined && !s.includes_standard && s.components.empty();
      r.check("ST" + std::to_string(k) + " has no systems", none, s.render());
      if (none) empty.push_back(k);
    }
    const auto certs = certify_by_inclusion(empty);
    for (const auto& c : certs) {
      std::string chain;
      for (int k : c.chain) chain += (chain.empty() ? "G" : " < G") + std::to_string(k);
      r.check("G" + std::to_string(c.group) + " certified empty", true, chain);
    }
    r.check("certified count", certs.size() == 13, std::to_string(certs.size()) + " groups");
    r.check("G12 < G13",
            is_subgroup(closure(primitive_complex(12).generators, opts.cap, opts.tolerance),
                        closure(primitive_complex(13).generators, opts.cap, opts.tolerance)));
  } catch (const std::exception& ex) {
    r = failed_report(r.id, r.kind, opts.tolerance, ex);
  }
  r.seconds = clock.seconds();
  return r;
}

Report index_set_report(int n, const VerifyOptions& opts) {
  Report r;
  r.id = "Lambda*_" + std::to_string(n);
  r.kind = "index";
  r.tolerance = opts.tolerance;
  const auto sets = index_sets(n);
  const long long m = 2LL * n * n;
  const std::size_t predicted = static_cast<std::size_t>(divisor_count(m) / 2);
  r.check("cardinality", sets.lambda_star.size() == predicted,
          std::to_string(sets.lambda_star.size()) + " vs tau(" + std::to_string(m) + ")/2 = " +
              std::to_string(predicted));
  return r;
}

int lo_of(const VerifyOptions& o, int floor) { return std::max(o.n_lo, floor); }

}  // namespace

Report solve_report(const CatalogEntry& entry, const VerifyOptions& opts) {
  Stopwatch clock;
  Report r;
  r.id = entry.id.str();
  r.kind = "solve";
  r.tolerance = opts.tolerance;
  r.notes = entry.notes;
  const double eps = opts.tolerance;
  try {
    const FiniteGroup g = closure(entry.generators, opts.cap, eps);
    r.order = g.order();
    r.expected_order = entry.expected_order;
    r.check("order", g.order() == entry.expected_order,
            std::to_string(g.order()) + " vs " + std::to_string(entry.expected_order));

    const std::size_t count = reflections(g).size();
    r.reflection_count = count;
    r.expected_reflection_count = entry.expected_reflection_count;
    r.check("reflection count", count == entry.expected_reflection_count,
            std::to_string(count) + " vs " + std::to_string(entry.expected_reflection_count));

    if (entry.expected_L_size) {
      const ReflectionData data = extract_LH(g);
      r.L_size = data.L.size();
      r.H_size = data.H.size();
      r.check("|L|", data.L.size() == *entry.expected_L_size);
      r.check("|H|", data.H.size() == entry.expected_H_size.value_or(data.H.size()));
      r.check("count = |L| + 2(|H|-1)", data.predicted_count() == count,
              std::to_string(data.predicted_count()));
    }

    const SolutionSet s = solve(entry.generators, eps);
    r.solutions = s;
    r.expected_solutions = entry.expected_solutions;
    r.check("systems", approx_equal(s, entry.expected_solutions, std::max(eps, 1e-9)),
            s.render() + " vs " + entry.expected_solutions.render());
    oracle_checks(r, entry.generators, s, opts);
  } catch (const std::exception& ex) {
    r = failed_report(r.id, r.kind, eps, ex);
  }
  r.seconds = clock.seconds();
  return r;
}

const std::vector<std::string>& verify_table_names() {
  static const std::vector<std::string> names = {"real",   "complex",     "quaternionic",
                                                 "orders", "conjugacies", "inclusions"};
  return names;
}

std::vector<InclusionCertificate> certify_by_inclusion(const std::vector<int>& empty_groups) {
  std::map<int, std::vector<int>> up;
  for (auto [small, large] : primitive_inclusion_edges()) up[small].push_back(large);
  std::map<int, std::vector<int>> chain;
  std::queue<int> frontier;
  for (int k : empty_groups) {
    chain[k] = {k};
    frontier.push(k);
  }
  while (!frontier.empty()) {
    const int k = frontier.front();
    frontier.pop();
    for (int l : up[k]) {
      if (chain.count(l)) continue;
      chain[l] = chain[k];
      chain[l].push_back(l);
      frontier.push(l);
    }
  }
  std::vector<InclusionCertificate> out;
  const std::set<int> start(empty_groups.begin(), empty_groups.end());
  for (const auto& [k, c] : chain) {
    if (!start.count(k)) out.push_back({k, c});
  }
  return out;
}

std::vector<Report> verify_table(std::string_view table, const VerifyOptions& opts) {
  CatalogOptions range{opts.n_lo, opts.n_hi, 4};
  std::vector<Job> jobs;
  if (table == "real") {
    jobs = solve_jobs(catalog(Family::Dn, range), opts);
  } else if (table == "complex") {
    jobs = solve_jobs(catalog(Family::Gnp2, range), opts);
    for (auto& j : solve_jobs(catalog(Family::GST, range), opts)) jobs.push_back(std::move(j));
    jobs.push_back([opts] { return certificate_report(opts); });
  } else if (table == "quaternionic") {
    for (int n = lo_of(opts, 2); n <= opts.n_hi; ++n) jobs.push_back([n, opts] { return index_set_report(n, opts); });
    for (auto& j : solve_jobs(catalog(Family::Gnabr, range), opts)) jobs.push_back(std::move(j));
    for (auto& j : solve_jobs(catalog(Family::GKLH, range), opts)) jobs.push_back(std::move(j));
  } else if (table == "orders") {
    std::vector<CatalogEntry> entries;
    for (const auto& row : toi_rows()) entries.push_back(gklh(row));
    for (int n = 2; n <= 8; ++n) entries.push_back(gklh("DDD", n));
    for (int n : {4, 6, 8}) entries.push_back(gklh("DDD2", n));
    for (auto& e : catalog(Family::Gnabr, range)) entries.push_back(std::move(e));
    for (const auto& e : entries) jobs.push_back([e, opts] { return order_report(e, opts); });
  } else if (table == "conjugacies") {
    const double h = 1.0 / constants::sqrt2;
    const Mat2 ui{h, h * Quaternion::i(), h * Quaternion::i(), h};
    const Mat2 uj{h, h * Quaternion::j(), h * Quaternion::j(), h};
    jobs.push_back([=] {
      return conjugacy_report("G(4,4,2) ~C D(4)", complex_imprimitive(4, 4).generators,
                              dihedral(4).generators, ui, "U = (1/sqrt2)[[1,i],[i,1]]", opts);
    });
    for (int n = lo_of(opts, 2); n <= std::min(opts.n_hi, 8); ++n) {
      jobs.push_back([=] {
        return conjugacy_report("G(" + std::to_string(n) + ",1," + std::to_string(n) + ",1) ~H G(" +
                                    std::to_string(2 * n) + "," + std::to_string(n) + ",2)",
                                g_nabr(n, 1, n, 1).generators, complex_imprimitive(2 * n, n).generators, uj,
                                "U = (1/sqrt2)[[1,j],[j,1]]", opts);
      });
    }
    jobs.push_back([=] { return monomial_form_report(12, "GT(L12,1)", opts); });
    jobs.push_back([=] { return monomial_form_report(13, "GO(L18,1)", opts); });
    jobs.push_back([=] { return monomial_form_report(22, "GI(L30,1)", opts); });
    jobs.push_back([=] {
      const Quaternion q = Quaternion(0, 0, 1, -1) / constants::sqrt2;
      return conjugacy_report("GO(L14,1) ~H GT(L12,C2)", gklh("GO(L14,1)").generators,
                              gklh("GT(L12,C2)").generators, basis_change(q),
                              "U = basis_change((j-k)/sqrt2)", opts);
    });
  } else if (table == "inclusions") {
    for (const auto& [small, large] : toi_inclusion_edges()) {
      jobs.push_back([small = small, large = large, opts] {
        return inclusion_report(small, gklh(small).generators, large, gklh(large).generators, opts);
      });
    }
    jobs.push_back([opts] {
      return inclusion_report("ST12", primitive_complex(12).generators, "ST13",
                              primitive_complex(13).generators, opts);
    });
    jobs.push_back([opts] { return certificate_report(opts); });
  } else {
    throw Error(ErrorKind::BadParameter, "unknown table '" + std::string(table) + "'");
  }
  return run_batch(jobs, opts.parallel);
}

}  // namespace qrefl
