#include "skewex/harness.hpp"

#include "skewex/error.hpp"
#include "skewex/generate.hpp"
#include "skewex/laurent.hpp"
#include "skewex/ore.hpp"
#include "skewex/random.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace skewex {

const char* to_string(MapRole r) {
  switch (r) {
    case MapRole::Derivation: return "derivation";
    case MapRole::Endomorphism: return "endomorphism";
    case MapRole::EDerivation: return "ederivation";
  }
  return "?";
}

MapRole parse_role(const std::string& s) {
  if (s == "derivation") return MapRole::Derivation;
  if (s == "endomorphism") return MapRole::Endomorphism;
  if (s == "ederivation") return MapRole::EDerivation;
  throw Error(ErrorKind::ParseError, "unknown map role '" + s + "' (expected derivation, endomorphism or ederivation)");
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

Definitions parse_definitions(const std::string& algebra_path, const std::vector<MapSpec>& maps) {
  Definitions out;
  try {
    out.algebra = algebra_from_json(read_json_file(algebra_path));
  } catch (const Error& e) {
    throw Error(e.kind(), algebra_path + ": " + e.message(), e.witness());
  }
  const Algebra& a = out.algebra;
  for (const MapSpec& spec : maps) {
    try {
      const json j = read_json_file(spec.path);
      if (j.is_object() && j.contains("role") && j["role"].is_string() && parse_role(j["role"].get<std::string>()) != spec.role) {
        throw Error(ErrorKind::ValidationError, "role in file is '" + j["role"].get<std::string>() + "', requested '" +
                                                    to_string(spec.role) + "'");
      }
      bool unital = true;
      if (j.is_object() && j.contains("unital")) {
        if (!j["unital"].is_boolean()) throw Error(ErrorKind::ParseError, "unital: expected a boolean");
        unital = j["unital"].get<bool>();
      }
      LoadedMap m{spec.path, spec.role, map_matrix_from_json(j, a.dim()), std::nullopt, std::nullopt};
      switch (spec.role) {
        case MapRole::Derivation:
          m.derivation = Derivation::certify(a, m.matrix);
          break;
        case MapRole::Endomorphism:
          m.endo = AlgebraEndo::certify(a, m.matrix, unital);
          break;
        case MapRole::EDerivation:
          m.endo = EDerivation::certify(a, m.matrix, unital).phi();
          break;
      }
      out.maps.push_back(std::move(m));
    } catch (const Error& e) {
      throw Error(e.kind(), spec.path + ": " + e.message(), e.witness());
    }
  }
  return out;
}

json Record::to_json(bool with_timing) const {
  json out{{"suite", suite}, {"check", check}, {"status", skewex::to_string(status)}, {"data", data}};
  if (with_timing) out["seconds"] = seconds;
  return out;
}

int Report::exit_code() const {
  if (count(Status::Fail) > 0) return exit_code::failed;
  if (count(Status::Inconclusive) > 0) return exit_code::inconclusive;
  return exit_code::ok;
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const Record& r : records) n += r.status == s ? 1 : 0;
  return n;
}

std::string Report::to_jsonl(bool with_timing) const {
  std::ostringstream out;
  for (const Record& r : records) out << r.to_json(with_timing).dump() << '\n';
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "inner_derivation", "inner_automorphism", "image_idempotents", "kernel_chain", "image_mathieu",
      "finite_order",     "simple_image",       "identities",        "mathieu_oracle"};
  return names;
}

namespace {

template <typename T>
using Named = std::vector<std::pair<std::string, T>>;

// Idempotents of one algebra, computed on first use.
class IdempotentCache {
 public:
  IdempotentCache(const Algebra& a, std::size_t cap) : m_algebra(a), m_cap(cap) {}

  /// nullptr when they cannot be enumerated; `why` then says so.
  const IdempotentSet* get(std::string& why) {
    if (!m_done) {
      m_done = true;
      if (!is_commutative(m_algebra)) {
        m_why = "noncommutative algebra: idempotents are not enumerable";
      } else {
        try {
          m_set = enumerate_idempotents(m_algebra, m_cap);
        } catch (const Error& e) {
          m_why = e.what();
        }
      }
    }
    why = m_why;
    return m_set ? &*m_set : nullptr;
  }

 private:
  const Algebra& m_algebra;
  std::size_t m_cap;
  bool m_done = false;
  std::optional<IdempotentSet> m_set;
  std::string m_why;
};

class Runner {
 public:
  Runner(const Algebra& a, Report& report, std::size_t cap, json context = json::object())
      : m_algebra(a), m_report(report), m_idems(a, cap), m_context(std::move(context)) {}

  const Algebra& algebra() const { return m_algebra; }
  IdempotentCache& idempotents() { return m_idems; }

  // Runs one check; a thrown Error becomes a fail record carrying the
  // algebra and map so that it can be replayed.
  void check(const std::string& suite, const std::string& id, const Mat* map, const std::function<void(Record&)>& body) {
    Record r{suite, id, Status::Pass, m_context};
    const auto start = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const Error& e) {
      r.status = Status::Fail;
      r.data["error"] = skewex::to_string(e.kind());
      r.data["message"] = e.what();
      r.data["witness_indices"] = e.witness();
    }
    if (r.status == Status::Fail) {
      r.data["algebra"] = to_json(m_algebra);
      if (map) r.data["map"] = to_json(*map);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    m_report.records.push_back(std::move(r));
  }

  // No nonzero idempotent in the column span of delta.
  void audit_image(Record& r, const Mat& delta) {
    std::string why;
    const IdempotentSet* idems = m_idems.get(why);
    const Check trace = traceless_image(m_algebra, delta);
    r.data["traceless"] = trace.ok;
    if (idems) {
      const auto found = image_idempotent_audit(m_algebra, delta, *idems);
      if (!found.empty()) {
        r.status = Status::Fail;
        r.data["element"] = to_json(found.front());
        return;
      }
      if (idems->complete) {
        r.data["method"] = "enumeration";
        r.data["idempotents"] = idems->items.size();
        return;
      }
      why = *idems->inconclusive_reason;
    }
    if (trace.ok) {
      r.data["method"] = "trace";
      return;
    }
    r.status = Status::Inconclusive;
    r.data["reason"] = why;
  }

  void audit_kernel_chain(Record& r, const AlgebraEndo& phi) {
    std::string why;
    const IdempotentSet* idems = m_idems.get(why);
    if (!idems) {
      r.status = Status::NotApplicable;
      r.data["reason"] = why;
      return;
    }
    KernelChainReport rep;
    try {
      rep = kernel_chain_check(m_algebra, phi, *idems);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PhibarNotSurjective) throw;
      r.status = Status::NotApplicable;
      r.data["reason"] = e.what();
      return;
    }
    r.data["idempotents"] = rep.rows.size();
    std::size_t in_image = 0;
    for (const KernelChainRow& row : rep.rows) {
      in_image += row.in_image ? 1 : 0;
      if (!row.holds()) {
        r.status = Status::Fail;
        r.data["element"] = to_json(row.e);
        r.data["in_image"] = row.in_image;
        r.data["in_kernel_chain"] = row.in_kernel_chain;
        r.data["ideal_in_image"] = row.ideal_in_image;
        return;
      }
    }
    r.data["in_image"] = in_image;
    if (!idems->complete) {
      r.status = Status::Inconclusive;
      r.data["reason"] = *idems->inconclusive_reason;
    }
  }

 private:
  const Algebra& m_algebra;
  Report& m_report;
  IdempotentCache m_idems;
  json m_context;
};

struct Subjects {
  Named<Derivation> derivations;
  Named<AlgebraEndo> endomorphisms;
  Named<AlgebraEndo> automorphisms;
};

Subjects subjects_for(const Definitions& defs, std::uint64_t seed) {
  const Algebra& a = defs.algebra;
  Subjects s;
  for (const LoadedMap& m : defs.maps) {
    if (m.derivation) s.derivations.emplace_back(m.source, *m.derivation);
    if (m.endo) {
      s.endomorphisms.emplace_back(m.source, *m.endo);
      if (m.endo->invertible() && m.endo->unital()) s.automorphisms.emplace_back(m.source, *m.endo);
    }
  }
  const bool have_derivations = !s.derivations.empty();
  const bool have_endos = !s.endomorphisms.empty();
  if (!have_derivations) {
    const auto basis = derivation_space(a);
    for (std::size_t i = 0; i < basis.size(); ++i) s.derivations.emplace_back("der[" + std::to_string(i) + "]", basis[i]);
  }
  if (!have_endos) {
    s.automorphisms.emplace_back("id", AlgebraEndo::certify(a, identity(a.dim())));
    for (const auto& [name, d] : s.derivations) {
      if (local_finiteness_report(d.matrix()).locally_nilpotent && !is_zero(d.matrix())) {
        s.automorphisms.emplace_back("exp(" + name + ")", exp_derivation(a, d));
      }
    }
    if (!is_commutative(a)) {
      std::mt19937_64 rng = trial_stream(seed, 1);
      for (int k = 0; k < 2; ++k) {
        if (const auto u = random_unit(a, rng)) s.automorphisms.emplace_back("Ad(u" + std::to_string(k) + ")", Ad(a, *u));
      }
    }
    s.endomorphisms = s.automorphisms;
  }
  return s;
}

void suite_inner_derivation(Runner& run, const Subjects& s) {
  const Algebra& a = run.algebra();
  for (const auto& [name, d] : s.derivations) {
    run.check("inner_derivation", name, &d.matrix(), [&](Record& r) {
      const ExtensionResult b = ore_quotient(a, d);
      r.data["dim_B"] = b.algebra.dim();
      r.data["deg_p"] = b.p.degree();
      r.data["free_rank"] = b.free_rank;
      r.data["p"] = to_json(b.p);
    });
  }
}

void suite_inner_automorphism(Runner& run, const Subjects& s) {
  const Algebra& a = run.algebra();
  for (const auto& [name, phi] : s.endomorphisms) {
    run.check("inner_automorphism", name, &phi.matrix(), [&](Record& r) {
      if (!phi.invertible()) {
        r.status = Status::NotApplicable;
        r.data["reason"] = "map is not invertible";
        return;
      }
      const ExtensionResult b = laurent_quotient(a, phi);
      if (!embedding_injective(b)) throw Error(ErrorKind::EmbeddingFails, "iota has a kernel");
      r.data["dim_B"] = b.algebra.dim();
      r.data["deg_p"] = b.p.degree();
      r.data["free_rank"] = b.free_rank;
      r.data["p"] = to_json(b.p);
      r.data["u_invertible"] = b.u_inverse.has_value();
    });
  }
}

void suite_image_idempotents(Runner& run, const Subjects& s) {
  for (const auto& [name, d] : s.derivations) {
    run.check("image_idempotents", name, &d.matrix(), [&](Record& r) { run.audit_image(r, d.matrix()); });
  }
  for (const auto& [name, phi] : s.automorphisms) {
    const Mat delta = identity(phi.matrix().rows()) - phi.matrix();
    run.check("image_idempotents", "I-" + name, &phi.matrix(), [&](Record& r) { run.audit_image(r, delta); });
  }
}

void suite_kernel_chain(Runner& run, const Subjects& s) {
  for (const auto& [name, phi] : s.endomorphisms) {
    run.check("kernel_chain", name, &phi.matrix(), [&](Record& r) { run.audit_kernel_chain(r, phi); });
  }
}

void suite_image_mathieu(Runner& run, const Subjects& s) {
  const Algebra& a = run.algebra();
  auto one = [&](const std::string& name, const Mat& delta, const Mat& map) {
    run.check("image_mathieu", name, &map, [&](Record& r) {
      std::string why;
      const IdempotentSet* idems = run.idempotents().get(why);
      if (!idems) {
        // With no idempotent in V other than 0 the criterion holds vacuously.
        if (traceless_image(a, delta).ok) {
          r.data["verdict"] = "IsMS";
          r.data["method"] = "trace";
          return;
        }
        r.status = Status::Inconclusive;
        r.data["reason"] = why;
        return;
      }
      const MsVerdict v = ms_check(a, image(delta), *idems);
      r.data["verdict"] = to_string(v.status);
      if (v.status == MsVerdict::Status::NotMS) {
        r.status = Status::Fail;
        r.data["element"] = to_json(*v.witness);
      } else if (v.status == MsVerdict::Status::InconclusiveIdempotents) {
        r.status = Status::Inconclusive;
        r.data["reason"] = *idems->inconclusive_reason;
      }
    });
  };
  for (const auto& [name, d] : s.derivations) one(name, d.matrix(), d.matrix());
  for (const auto& [name, phi] : s.endomorphisms) one("I-" + name, Mat(identity(a.dim()) - phi.matrix()), phi.matrix());
}

void suite_finite_order(Runner& run, const Subjects& s) {
  for (const auto& [name, phi] : s.automorphisms) {
    run.check("finite_order", name, &phi.matrix(), [&](Record& r) {
      const auto order = automorphism_order(phi, 64);
      if (!order) {
        r.status = Status::NotApplicable;
        r.data["reason"] = "no finite order up to 64";
        return;
      }
      r.data["order"] = *order;
      run.audit_image(r, Mat(identity(phi.matrix().rows()) - phi.matrix()));
    });
  }
}

void suite_simple_image(Runner& run, const Subjects& s) {
  const Algebra& a = run.algebra();
  for (const auto& [name, d] : s.derivations) {
    run.check("simple_image", name, &d.matrix(), [&](Record& r) {
      const SimpleImage si = simple_image_check(a, d);
      r.data["simplicity"] = to_string(si.simplicity.status);
      r.data["left_full"] = si.left_full;
      r.data["right_full"] = si.right_full;
      if (!si.hypotheses_hold()) {
        r.status = Status::NotApplicable;
        r.data["reason"] = si.derivation_nonzero ? "algebra not known to be simple" : "zero derivation";
        return;
      }
      if (!si.left_full || !si.right_full) r.status = Status::Fail;
    });
  }
}

ScalarLaurent random_scalar_laurent(std::mt19937_64& rng) {
  ScalarLaurent f;
  const int lo = static_cast<int>(draw_between(rng, -2, 0));
  const int hi = static_cast<int>(draw_between(rng, 0, 2));
  for (int i = lo; i <= hi; ++i) f[i] = Rat(draw_between(rng, -3, 3));
  return f;
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  std::vector<Rat> c;
  const int deg = static_cast<int>(draw_between(rng, 0, max_deg));
  for (int i = 0; i <= deg; ++i) c.emplace_back(draw_between(rng, -3, 3));
  return Poly(std::move(c));
}

void suite_identities(Runner& run, const Subjects& s, std::uint64_t seed) {
  const Algebra& a = run.algebra();
  std::mt19937_64 rng = trial_stream(seed, 2);
  for (const auto& [name, d] : s.derivations) {
    run.check("identities", "commutator_power " + name, &d.matrix(), [&](Record& r) {
      for (int n = 1; n <= 4; ++n) {
        const Element x = random_element(a, rng);
        if (!commutator_power(a, n, x, d).agree()) {
          r.status = Status::Fail;
          r.data["element"] = to_json(x);
          r.data["n"] = n;
          return;
        }
      }
    });
    run.check("identities", "constant_term " + name, &d.matrix(), [&](Record& r) {
      for (int t = 0; t < 4; ++t) {
        const Poly q = random_poly(rng, 3);
        const Element b = random_element(a, rng);
        const int m = static_cast<int>(draw_between(rng, 0, 2));
        const int k = static_cast<int>(draw_between(rng, 0, 1));
        const ConstantTermIdentity id = constant_term_identity(a, q, b, d);
        const ConstantTermMembership mem = constant_term_membership(a, q, m, b, k, d);
        std::vector<Element> coeffs;
        for (int i = 0; i <= 2; ++i) coeffs.push_back(random_element(a, rng));
        constant_terms(a, SkewPoly(a.dim(), coeffs), d);
        if (!id.holds() || !mem.agree() || !mem.member) {
          r.status = Status::Fail;
          r.data["element"] = to_json(b);
          r.data["q"] = to_json(q);
          r.data["m"] = m;
          r.data["k"] = k;
          return;
        }
      }
    });
  }
  for (const auto& [name, phi] : s.endomorphisms) {
    run.check("identities", "chain_preimage " + name, &phi.matrix(), [&](Record& r) {
      const KernelChain chain = ker_chain(a, phi);
      const Mat delta = identity(a.dim()) - phi.matrix();
      for (const Element& x : chain.ker_ge1.basis_vectors()) {
        if (delta * chain_preimage(a, phi, x) != x) {
          r.status = Status::Fail;
          r.data["element"] = to_json(x);
          return;
        }
      }
      const InducedMap induced = induced_map(a, phi);
      r.data["kernel_chain_dim"] = chain.ker_ge1.dim();
      r.data["phibar_injective"] = induced.injective;
      if (!induced.injective) r.status = Status::Fail;
    });
  }
  for (const auto& [name, phi] : s.automorphisms) {
    run.check("identities", "evaluation_at_one " + name, &phi.matrix(), [&](Record& r) {
      for (int t = 0; t < 4; ++t) {
        const ScalarLaurent f = random_scalar_laurent(rng);
        const Element b = random_element(a, rng);
        const Element c = random_element(a, rng);
        const int j = static_cast<int>(draw_between(rng, -2, 2));
        const int k = static_cast<int>(draw_between(rng, -2, 2));
        if (!evaluation_at_one_check(a, f, b, c, j, k, phi).holds()) {
          r.status = Status::Fail;
          r.data["b"] = to_json(b);
          r.data["c"] = to_json(c);
          r.data["j"] = j;
          r.data["k"] = k;
          return;
        }
      }
    });
  }
}

void suite_mathieu_oracle(Runner& run) {
  const Algebra& a = run.algebra();
  std::string why;
  const IdempotentSet* idems = run.idempotents().get(why);
  if (!idems) {
    run.check("mathieu_oracle", "idempotents", nullptr, [&](Record& r) {
      r.status = Status::NotApplicable;
      r.data["reason"] = why;
    });
    return;
  }
  run.check("mathieu_oracle", "idempotents", nullptr, [&](Record& r) {
    r.data["idempotents"] = to_json(*idems);
    for (const Element& e : idems->items) {
      const TraceRank tr = trace_rank_idempotent(a, e);
      if (!tr.equal()) {
        r.status = Status::Fail;
        r.data["element"] = to_json(e);
        return;
      }
    }
    if (!idems->complete) r.status = Status::Inconclusive;
  });

  std::vector<std::pair<std::string, Subspace>> spaces{{"zero", Subspace::zero(a.dim())},
                                                       {"unit_line", span(std::vector<Element>{a.unit()}, a.dim())}};
  for (std::size_t i = 0; i < idems->items.size(); ++i) {
    spaces.emplace_back("ideal(e" + std::to_string(i) + ")", two_sided_ideal(a, {idems->items[i]}));
  }
  for (const auto& [name, v] : spaces) {
    run.check("mathieu_oracle", name, nullptr, [&](Record& r) {
      const MsVerdict verdict = ms_check(a, v, *idems);
      r.data["verdict"] = to_string(verdict.status);
      r.data["dim_V"] = v.dim();
      // Two-sided ideals are always Mathieu subspaces.
      if (is_two_sided_ideal(a, v) && verdict.status == MsVerdict::Status::NotMS) {
        r.status = Status::Fail;
        r.data["element"] = to_json(*verdict.witness);
        return;
      }
      // The witness checker must agree with the idempotent verdict on every
      // idempotent of V.
      for (const auto& [e, inside] : verdict.checked) {
        bool all_pass = true;
        for (Index i = 0; i < a.dim() && all_pass; ++i) {
          for (Index j = 0; j < a.dim() && all_pass; ++j) {
            all_pass = ms_witness_check(a, v, e, a.basis_element(i), a.basis_element(j), Side::TwoSided) ==
                       WitnessResult::Pass;
          }
        }
        if (all_pass != inside) {
          r.status = Status::Fail;
          r.data["element"] = to_json(e);
          return;
        }
      }
      if (verdict.status == MsVerdict::Status::InconclusiveIdempotents) r.status = Status::Inconclusive;
    });
  }
}

}  // namespace

Report run_suites(const Definitions& defs, const std::vector<std::string>& requested, std::uint64_t seed, std::size_t cap) {
  const auto& known = suite_names();
  const std::vector<std::string>& suites = requested.empty() ? known : requested;
  for (const std::string& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + s + "'");
  }
  Report report;
  Runner run(defs.algebra, report, cap);
  const Subjects subjects = subjects_for(defs, seed);
  for (const std::string& s : suites) {
    if (s == "inner_derivation") suite_inner_derivation(run, subjects);
    else if (s == "inner_automorphism") suite_inner_automorphism(run, subjects);
    else if (s == "image_idempotents") suite_image_idempotents(run, subjects);
    else if (s == "kernel_chain") suite_kernel_chain(run, subjects);
    else if (s == "image_mathieu") suite_image_mathieu(run, subjects);
    else if (s == "finite_order") suite_finite_order(run, subjects);
    else if (s == "simple_image") suite_simple_image(run, subjects);
    else if (s == "identities") suite_identities(run, subjects, seed);
    else if (s == "mathieu_oracle") suite_mathieu_oracle(run);
  }
  return report;
}

Report run_suite(const SuiteConfig& config) {
  const Definitions defs = parse_definitions(config.algebra_path, config.maps);
  return run_suites(defs, config.suites, config.seed, config.idempotent_cap);
}

Report random_explorer(std::uint64_t seed, int trials, int max_dim, int first, std::size_t cap) {
  Report report;
  for (int t = first; t < first + trials; ++t) {
    std::mt19937_64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
    const RandomAlgebra ra = random_algebra(rng, max_dim);
    const Algebra& a = ra.algebra;
    const json context{{"seed", seed}, {"trial", t}, {"algebra", ra.description}};
    Runner run(a, report, cap, context);
    const std::string tag = "trial " + std::to_string(t) + ": ";

    const auto ders = derivation_space(a);
    Named<AlgebraEndo> autos;
    if (const auto u = random_unit(a, rng)) autos.emplace_back("Ad(u)", Ad(a, *u));
    if (const auto d = random_nilpotent_derivation(a, ders, rng)) autos.emplace_back("exp(D)", exp_derivation(a, *d));
    const auto swaps = block_swaps(ra);
    for (std::size_t i = 0; i < swaps.size(); ++i) autos.emplace_back("swap" + std::to_string(i), swaps[i]);

    for (std::size_t i = 0; i < ders.size(); ++i) {
      const Mat& m = ders[i].matrix();
      run.check("explore", tag + "image_idempotents der[" + std::to_string(i) + "]", &m,
                [&](Record& r) { run.audit_image(r, m); });
    }
    for (const auto& [name, phi] : autos) {
      const Mat delta = identity(a.dim()) - phi.matrix();
      run.check("explore", tag + "image_idempotents I-" + name, &phi.matrix(), [&](Record& r) { run.audit_image(r, delta); });
      run.check("explore", tag + "kernel_chain " + name, &phi.matrix(), [&](Record& r) { run.audit_kernel_chain(r, phi); });
    }

    // One non-injective candidate per trial on a product of local algebras.
    const LocalEndomorphism local = random_local_endomorphism(rng);
    Runner local_run(local.algebra, report, cap, json{{"seed", seed}, {"trial", t}, {"algebra", local.description}});
    local_run.check("explore", tag + "kernel_chain local", &local.phi.matrix(),
                    [&](Record& r) { local_run.audit_kernel_chain(r, local.phi); });
  }
  return report;
}

}  // namespace skewex
